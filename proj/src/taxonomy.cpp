#include "cocseg/taxonomy.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "cocseg/errors.hpp"

namespace cocseg {

namespace {

constexpr const char* kSyntheticRoot = "⊤";  // ⊤

}  // namespace

bool Taxonomy::has_node(const std::string& term) const {
  return std::binary_search(verb_terms.begin(), verb_terms.end(), term) ||
         std::binary_search(noun_terms.begin(), noun_terms.end(), term);
}

std::vector<std::string> Taxonomy::all_terms() const {
  std::vector<std::string> terms = verb_terms;
  terms.insert(terms.end(), noun_terms.begin(), noun_terms.end());
  return terms;
}

Taxonomy extract_taxonomy(const ConceptLattice& lattice) {
  const int count = static_cast<int>(lattice.concepts.size());
  const bool skip_bottom = lattice.concepts[lattice.bottom].extent.empty();
  auto skipped = [&](int node) { return skip_bottom && node == lattice.bottom; };

  std::vector<std::vector<std::string>> attrs_at(count), objs_at(count);
  for (int m = 0; m < lattice.context.attribute_count(); ++m)
    attrs_at[lattice.introduced_attributes[m]].push_back(
        lattice.context.attributes[m]);
  for (int g = 0; g < lattice.context.object_count(); ++g)
    objs_at[lattice.introduced_objects[g]].push_back(lattice.context.objects[g]);
  for (auto& names : attrs_at) std::sort(names.begin(), names.end());
  for (auto& names : objs_at) std::sort(names.begin(), names.end());

  Taxonomy taxonomy;
  std::set<std::pair<std::string, std::string>> seen;
  auto add_edge = [&](const std::string& parent, const std::string& child,
                      EdgeOrigin origin, int node) {
    if (parent == child) return;  // self-loop candidates are dropped
    if (seen.emplace(parent, child).second)
      taxonomy.edges.push_back({parent, child, origin, node});
  };

  // Root: the attribute introduced at the top, or a synthetic one when the
  // top introduces none (or several, in unclarified contexts).
  std::vector<std::set<std::string>> anchors(count);
  const std::vector<std::string> top_attrs =
      skipped(lattice.top) ? std::vector<std::string>{} : attrs_at[lattice.top];
  if (top_attrs.size() == 1) {
    taxonomy.root = top_attrs.front();
  } else {
    taxonomy.root = kSyntheticRoot;
    taxonomy.synthetic_root = true;
    for (const auto& attr : top_attrs)
      add_edge(taxonomy.root, attr, EdgeOrigin::CoverEdge, lattice.top);
  }
  if (!skipped(lattice.top)) {
    anchors[lattice.top] = top_attrs.empty()
                               ? std::set<std::string>{taxonomy.root}
                               : std::set<std::string>(top_attrs.begin(),
                                                       top_attrs.end());
  }

  // Concept order is descending extent size, so parents come before children
  // and inherited anchors are already final when a node is reached.
  for (int node = 0; node < count; ++node) {
    if (skipped(node) || node == lattice.top) continue;
    if (!attrs_at[node].empty()) {
      anchors[node] = {attrs_at[node].begin(), attrs_at[node].end()};
    } else {
      for (int parent : lattice.parents_of(node))
        if (!skipped(parent))
          anchors[node].insert(anchors[parent].begin(), anchors[parent].end());
    }
  }

  std::set<std::string> verbs, nouns;
  if (taxonomy.synthetic_root) verbs.insert(taxonomy.root);
  for (int node = 0; node < count; ++node) {
    if (skipped(node)) continue;
    for (const auto& attr : attrs_at[node]) verbs.insert(attr);
    for (const auto& obj : objs_at[node]) nouns.insert(obj);
    for (const auto& anchor : anchors[node]) {
      for (const auto& obj : objs_at[node])
        add_edge(anchor, obj, EdgeOrigin::ObjectIntroduction, node);
      for (int child : lattice.children_of(node)) {
        if (skipped(child)) continue;
        for (const auto& attr : attrs_at[child])
          add_edge(anchor, attr, EdgeOrigin::CoverEdge, node);
      }
    }
  }

  // A lemma can occur as both verb and noun term; the verb side wins so the
  // node stays internal.
  for (const auto& verb : verbs) nouns.erase(verb);
  taxonomy.verb_terms.assign(verbs.begin(), verbs.end());
  taxonomy.noun_terms.assign(nouns.begin(), nouns.end());
  std::sort(taxonomy.edges.begin(), taxonomy.edges.end(),
            [](const TaxonomyEdge& a, const TaxonomyEdge& b) {
              return std::tie(a.parent, a.child) < std::tie(b.parent, b.child);
            });
  return taxonomy;
}

std::vector<std::string> direct_descendants(const Taxonomy& taxonomy,
                                            const std::string& term) {
  if (!taxonomy.has_node(term)) throw InputError("unknown taxonomy term: " + term);
  std::vector<std::string> children;
  for (const auto& edge : taxonomy.edges)
    if (edge.parent == term) children.push_back(edge.child);
  std::sort(children.begin(), children.end());
  children.erase(std::unique(children.begin(), children.end()), children.end());
  return children;
}

namespace {

void collect_paths(const std::map<std::string, std::vector<std::string>>& children,
                   std::vector<std::string>& path,
                   std::set<std::string>& on_path,
                   std::vector<std::vector<std::string>>& out) {
  auto it = children.find(path.back());
  if (it == children.end() || it->second.empty()) {
    out.push_back(path);
    return;
  }
  for (const auto& child : it->second) {
    if (on_path.count(child)) continue;  // guard: quasi-trees are acyclic
    path.push_back(child);
    on_path.insert(child);
    collect_paths(children, path, on_path, out);
    on_path.erase(child);
    path.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::string>> root_to_leaf_paths(const Taxonomy& taxonomy) {
  std::map<std::string, std::vector<std::string>> children;
  for (const auto& edge : taxonomy.edges)
    children[edge.parent].push_back(edge.child);
  for (auto& [parent, kids] : children) {
    std::sort(kids.begin(), kids.end());
    kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
  }
  std::vector<std::vector<std::string>> paths;
  if (taxonomy.root.empty()) return paths;
  std::vector<std::string> path{taxonomy.root};
  std::set<std::string> on_path{taxonomy.root};
  collect_paths(children, path, on_path, paths);
  return paths;
}

Taxonomy rename_terms(const Taxonomy& taxonomy,
                      const std::map<std::string, std::string>& renames) {
  auto renamed = [&](const std::string& name) {
    auto it = renames.find(name);
    return it == renames.end() ? name : it->second;
  };
  Taxonomy out = taxonomy;
  for (auto& term : out.verb_terms) term = renamed(term);
  for (auto& term : out.noun_terms) term = renamed(term);
  out.root = renamed(out.root);
  for (auto& edge : out.edges) {
    edge.parent = renamed(edge.parent);
    edge.child = renamed(edge.child);
  }
  std::set<std::string> names;
  for (const auto& term : out.verb_terms)
    if (!names.insert(term).second)
      throw InputError("rename collapses distinct terms into '" + term + "'");
  for (const auto& term : out.noun_terms)
    if (!names.insert(term).second)
      throw InputError("rename collapses distinct terms into '" + term + "'");
  std::sort(out.verb_terms.begin(), out.verb_terms.end());
  std::sort(out.noun_terms.begin(), out.noun_terms.end());
  std::sort(out.edges.begin(), out.edges.end(),
            [](const TaxonomyEdge& a, const TaxonomyEdge& b) {
              return std::tie(a.parent, a.child) < std::tie(b.parent, b.child);
            });
  return out;
}

nlohmann::ordered_json taxonomy_to_json(const Taxonomy& taxonomy) {
  nlohmann::ordered_json j;
  j["root"] = taxonomy.root;
  j["synthetic_root"] = taxonomy.synthetic_root;
  j["nodes"]["verbs"] = taxonomy.verb_terms;
  j["nodes"]["nouns"] = taxonomy.noun_terms;
  auto edges = nlohmann::ordered_json::array();
  for (const auto& edge : taxonomy.edges)
    edges.push_back({edge.parent, edge.child});
  j["edges"] = std::move(edges);
  return j;
}

Taxonomy taxonomy_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j.contains("edges") ||
      !j.contains("root"))
    throw FormatError("taxonomy json: expected object with root, nodes, edges");
  Taxonomy taxonomy;
  try {
    taxonomy.root = j.at("root").get<std::string>();
    taxonomy.synthetic_root = j.value("synthetic_root", false);
    taxonomy.verb_terms =
        j.at("nodes").at("verbs").get<std::vector<std::string>>();
    taxonomy.noun_terms =
        j.at("nodes").at("nouns").get<std::vector<std::string>>();
    for (const auto& pair : j.at("edges")) {
      if (!pair.is_array() || pair.size() != 2)
        throw FormatError("taxonomy json: edges must be [parent, child] pairs");
      taxonomy.edges.push_back({pair[0].get<std::string>(),
                                pair[1].get<std::string>(),
                                EdgeOrigin::CoverEdge, -1});
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("taxonomy json: ") + e.what());
  }
  std::sort(taxonomy.verb_terms.begin(), taxonomy.verb_terms.end());
  std::sort(taxonomy.noun_terms.begin(), taxonomy.noun_terms.end());
  std::set<std::string> nouns(taxonomy.noun_terms.begin(),
                              taxonomy.noun_terms.end());
  for (auto& edge : taxonomy.edges) {
    if (!taxonomy.has_node(edge.parent) || !taxonomy.has_node(edge.child))
      throw FormatError("taxonomy json: edge references unknown term");
    if (nouns.count(edge.child)) edge.origin = EdgeOrigin::ObjectIntroduction;
  }
  if (!taxonomy.has_node(taxonomy.root))
    throw FormatError("taxonomy json: root is not a node");
  std::sort(taxonomy.edges.begin(), taxonomy.edges.end(),
            [](const TaxonomyEdge& a, const TaxonomyEdge& b) {
              return std::tie(a.parent, a.child) < std::tie(b.parent, b.child);
            });
  return taxonomy;
}

Taxonomy read_taxonomy_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
  return taxonomy_from_json(j);
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string taxonomy_to_dot(const Taxonomy& taxonomy) {
  std::ostringstream out;
  out << "digraph taxonomy {\n  rankdir=TB;\n";
  for (const auto& term : taxonomy.verb_terms)
    out << "  " << dot_quote(term) << ";\n";
  for (const auto& term : taxonomy.noun_terms)
    out << "  " << dot_quote(term) << " [shape=box];\n";
  for (const auto& edge : taxonomy.edges)
    out << "  " << dot_quote(edge.parent) << " -> " << dot_quote(edge.child)
        << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace cocseg
