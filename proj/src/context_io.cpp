#include "cocseg/context_io.hpp"

#include <fstream>
#include <sstream>

#include "cocseg/errors.hpp"

namespace cocseg {

namespace {

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

// Pulls the next line or fails naming the section that is missing.
std::string next_line(std::istream& in, const std::string& section) {
  std::string line;
  if (!std::getline(in, line))
    throw FormatError("cxt: missing " + section);
  return strip_cr(line);
}

int parse_count(const std::string& text, const std::string& section) {
  try {
    size_t pos = 0;
    int value = std::stoi(text, &pos);
    if (pos != text.size() || value < 0) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw FormatError("cxt: invalid " + section + ": '" + text + "'");
  }
}

}  // namespace

FormalContext read_cxt(std::istream& in) {
  if (next_line(in, "header line") != "B")
    throw FormatError("cxt: missing 'B' header line");
  if (!next_line(in, "blank line after header").empty())
    throw FormatError("cxt: expected blank line after header");
  const int object_count = parse_count(next_line(in, "object count"), "object count");
  const int attribute_count =
      parse_count(next_line(in, "attribute count"), "attribute count");
  if (!next_line(in, "blank line after counts").empty())
    throw FormatError("cxt: expected blank line after counts");

  std::vector<std::string> objects, attributes;
  for (int g = 0; g < object_count; ++g) {
    std::string name = next_line(in, "object name list");
    if (name.empty()) throw FormatError("cxt: empty object name");
    objects.push_back(name);
  }
  for (int m = 0; m < attribute_count; ++m) {
    std::string name = next_line(in, "attribute name list");
    if (name.empty()) throw FormatError("cxt: empty attribute name");
    attributes.push_back(name);
  }

  std::vector<std::vector<bool>> incidence;
  for (int g = 0; g < object_count; ++g) {
    std::string row = next_line(in, "incidence rows");
    if (static_cast<int>(row.size()) != attribute_count) {
      std::ostringstream msg;
      msg << "cxt: incidence row " << g + 1 << ": expected " << attribute_count
          << " symbols, got " << row.size();
      throw FormatError(msg.str());
    }
    std::vector<bool> bits(attribute_count);
    for (int m = 0; m < attribute_count; ++m) {
      if (row[m] == 'X')
        bits[m] = true;
      else if (row[m] == '.')
        bits[m] = false;
      else {
        std::ostringstream msg;
        msg << "cxt: incidence row " << g + 1 << ": invalid symbol '" << row[m]
            << "'";
        throw FormatError(msg.str());
      }
    }
    incidence.push_back(std::move(bits));
  }
  return FormalContext::create(std::move(objects), std::move(attributes),
                               std::move(incidence));
}

FormalContext read_cxt_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_cxt(in);
}

void write_cxt(const FormalContext& context, std::ostream& out) {
  out << "B\n\n"
      << context.object_count() << '\n'
      << context.attribute_count() << "\n\n";
  for (const auto& name : context.objects) out << name << '\n';
  for (const auto& name : context.attributes) out << name << '\n';
  for (const auto& row : context.incidence) {
    for (bool bit : row) out << (bit ? 'X' : '.');
    out << '\n';
  }
}

void write_cxt_file(const FormalContext& context, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open " + path + " for writing");
  write_cxt(context, out);
}

nlohmann::ordered_json context_to_json(const FormalContext& context) {
  nlohmann::ordered_json j;
  j["objects"] = context.objects;
  j["attributes"] = context.attributes;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : context.incidence) {
    auto bits = nlohmann::ordered_json::array();
    for (bool bit : row) bits.push_back(bit ? 1 : 0);
    rows.push_back(std::move(bits));
  }
  j["incidence"] = std::move(rows);
  return j;
}

FormalContext context_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("objects") || !j.contains("attributes") ||
      !j.contains("incidence"))
    throw FormatError(
        "context json: expected object with objects, attributes, incidence");
  std::vector<std::string> objects, attributes;
  try {
    objects = j.at("objects").get<std::vector<std::string>>();
    attributes = j.at("attributes").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("context json: bad name list: ") + e.what());
  }
  std::vector<std::vector<bool>> incidence;
  for (const auto& row : j.at("incidence")) {
    std::vector<bool> bits;
    for (const auto& cell : row) {
      if (cell.is_boolean())
        bits.push_back(cell.get<bool>());
      else if (cell.is_number_integer())
        bits.push_back(cell.get<int>() != 0);
      else
        throw FormatError("context json: incidence cells must be 0/1 or bool");
    }
    incidence.push_back(std::move(bits));
  }
  return FormalContext::create(std::move(objects), std::move(attributes),
                               std::move(incidence));
}

FormalContext read_context_file(const std::string& path) {
  auto ends_with = [&](const std::string& suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".json")) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(path + ": " + e.what());
    }
    return context_from_json(j);
  }
  return read_cxt_file(path);
}

nlohmann::ordered_json lattice_to_json(const ConceptLattice& lattice) {
  nlohmann::ordered_json j;
  j["objects"] = lattice.context.objects;
  j["attributes"] = lattice.context.attributes;
  auto concepts = nlohmann::ordered_json::array();
  for (const auto& node : lattice.concepts) {
    nlohmann::ordered_json c;
    auto extent = nlohmann::ordered_json::array();
    for (int g : node.extent) extent.push_back(lattice.context.objects[g]);
    auto intent = nlohmann::ordered_json::array();
    for (int m : node.intent) intent.push_back(lattice.context.attributes[m]);
    c["extent"] = std::move(extent);
    c["intent"] = std::move(intent);
    concepts.push_back(std::move(c));
  }
  j["concepts"] = std::move(concepts);
  auto covers = nlohmann::ordered_json::array();
  for (const auto& [child, parent] : lattice.covers)
    covers.push_back({child, parent});
  j["covers"] = std::move(covers);
  j["top"] = lattice.top;
  j["bottom"] = lattice.bottom;
  nlohmann::ordered_json intro_objects, intro_attributes;
  for (int g = 0; g < lattice.context.object_count(); ++g)
    intro_objects[lattice.context.objects[g]] = lattice.introduced_objects[g];
  for (int m = 0; m < lattice.context.attribute_count(); ++m)
    intro_attributes[lattice.context.attributes[m]] =
        lattice.introduced_attributes[m];
  j["introduced_objects"] = std::move(intro_objects);
  j["introduced_attributes"] = std::move(intro_attributes);
  return j;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string lattice_to_dot(const ConceptLattice& lattice) {
  std::ostringstream out;
  out << "digraph concept_lattice {\n  rankdir=TB;\n  node [shape=ellipse];\n";
  for (int i = 0; i < static_cast<int>(lattice.concepts.size()); ++i) {
    std::string label;
    bool first = true;
    for (int m : lattice.attributes_introduced_at(i)) {
      if (!first) label += ", ";
      label += lattice.context.attributes[m];
      first = false;
    }
    std::string objects;
    first = true;
    for (int g : lattice.objects_introduced_at(i)) {
      if (!first) objects += ", ";
      objects += lattice.context.objects[g];
      first = false;
    }
    if (!objects.empty()) {
      if (!label.empty()) label += "\\n";
      label += "(" + objects + ")";
    }
    out << "  n" << i << " [label=\"" << dot_escape(label) << "\"];\n";
  }
  for (const auto& [child, parent] : lattice.covers)
    out << "  n" << parent << " -> n" << child << ";\n";
  out << "}\n";
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open " + path + " for writing");
  out << content;
}

std::string json_to_string(const nlohmann::ordered_json& j) {
  return j.dump(2) + "\n";
}

}  // namespace cocseg
