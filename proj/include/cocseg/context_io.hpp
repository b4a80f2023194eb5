#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "cocseg/fca.hpp"

namespace cocseg {

/// Burmeister CXT: "B", blank line, |G|, |M|, blank line, object names one
/// per line, attribute names one per line, then |G| rows of '.'/'X'.
FormalContext read_cxt(std::istream& in);
FormalContext read_cxt_file(const std::string& path);
void write_cxt(const FormalContext& context, std::ostream& out);
void write_cxt_file(const FormalContext& context, const std::string& path);

nlohmann::ordered_json context_to_json(const FormalContext& context);
FormalContext context_from_json(const nlohmann::json& j);

/// Reads a context from a .cxt or .json file, dispatching on the extension.
FormalContext read_context_file(const std::string& path);

nlohmann::ordered_json lattice_to_json(const ConceptLattice& lattice);

/// Graphviz rendering of the Hasse diagram; nodes are labelled with the
/// attributes and objects they introduce.
std::string lattice_to_dot(const ConceptLattice& lattice);

void write_text_file(const std::string& path, const std::string& content);
std::string json_to_string(const nlohmann::ordered_json& j);

}  // namespace cocseg
