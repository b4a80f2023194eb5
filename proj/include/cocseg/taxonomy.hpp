#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cocseg/fca.hpp"

namespace cocseg {

/// Why a taxonomy edge exists: the child is an object introduced at a lattice
/// node, or an attribute introduced at a cover-child of that node.
enum class EdgeOrigin { ObjectIntroduction, CoverEdge };

struct TaxonomyEdge {
  std::string parent;
  std::string child;
  EdgeOrigin origin;
  int lattice_node;  // node whose anchor the parent is

  friend bool operator==(const TaxonomyEdge&, const TaxonomyEdge&) = default;
};

/// Quasi-tree over concept terms: verbs (attribute terms) are internal nodes,
/// nouns (object terms) are leaves, and a node may have several parents.
struct Taxonomy {
  std::vector<std::string> verb_terms;  // sorted
  std::vector<std::string> noun_terms;  // sorted
  std::vector<TaxonomyEdge> edges;      // sorted by (parent, child)
  std::string root;
  /// True when no attribute is introduced at the lattice top and a synthetic
  /// root was inserted to keep the taxonomy connected.
  bool synthetic_root = false;

  bool has_node(const std::string& term) const;
  std::vector<std::string> all_terms() const;  // verbs then nouns, each sorted
};

/// Derive the quasi-tree from a concept lattice. Each lattice node is
/// anchored at the attribute it introduces (or, lacking one, at the anchors
/// inherited from its parents); anchors adopt the node's introduced objects
/// and the attributes introduced at its cover-children. A bottom node with an
/// empty extent contributes nothing.
Taxonomy extract_taxonomy(const ConceptLattice& lattice);

/// Children of `term`; InputError for unknown terms.
std::vector<std::string> direct_descendants(const Taxonomy& taxonomy,
                                            const std::string& term);

/// Every simple root-to-leaf path, in depth-first order with children
/// visited lexicographically.
std::vector<std::vector<std::string>> root_to_leaf_paths(const Taxonomy& taxonomy);

/// Rename nodes via an old-name -> new-name map (e.g. "joinable" -> "join").
/// Renames must keep node names pairwise distinct.
Taxonomy rename_terms(const Taxonomy& taxonomy,
                      const std::map<std::string, std::string>& renames);

nlohmann::ordered_json taxonomy_to_json(const Taxonomy& taxonomy);
Taxonomy taxonomy_from_json(const nlohmann::json& j);
Taxonomy read_taxonomy_file(const std::string& path);

/// Graphviz rendering; noun leaves are box-shaped.
std::string taxonomy_to_dot(const Taxonomy& taxonomy);

}  // namespace cocseg
