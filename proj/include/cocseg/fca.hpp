#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cocseg {

/// Sorted, duplicate-free list of 0-based indices into a context's object or
/// attribute list. All set-valued results in this module use this shape.
using IndexSet = std::vector<int>;

/// A formal context: objects, attributes and a boolean incidence matrix of
/// shape |objects| x |attributes|.
struct FormalContext {
  std::vector<std::string> objects;
  std::vector<std::string> attributes;
  std::vector<std::vector<bool>> incidence;

  /// Validating constructor; throws InputError on duplicate names or a
  /// matrix whose dimensions do not match the name lists.
  static FormalContext create(std::vector<std::string> objects,
                              std::vector<std::string> attributes,
                              std::vector<std::vector<bool>> incidence);

  int object_count() const { return static_cast<int>(objects.size()); }
  int attribute_count() const { return static_cast<int>(attributes.size()); }
  bool has(int object, int attribute) const {
    return incidence[object][attribute];
  }

  /// Index of a named object/attribute, or -1.
  int object_index(const std::string& name) const;
  int attribute_index(const std::string& name) const;
};

/// Attributes shared by every object in `object_set`. An empty set derives
/// the full attribute list.
IndexSet derive_attrs(const FormalContext& context, const IndexSet& object_set);

/// Objects sharing every attribute in `attribute_set`. An empty set derives
/// the full object list.
IndexSet derive_objs(const FormalContext& context, const IndexSet& attribute_set);

/// An extent/intent pair. Valid concepts satisfy extent' == intent and
/// intent' == extent in their owning context.
struct FormalConcept {
  IndexSet extent;
  IndexSet intent;

  friend bool operator==(const FormalConcept&, const FormalConcept&) = default;
};

/// True iff both derivation equalities hold for (extent, intent).
bool is_concept(const FormalContext& context, const IndexSet& extent,
                const IndexSet& intent);

/// All formal concepts of the context, each exactly once, ordered by
/// descending extent size with ties broken by lexicographic extent.
std::vector<FormalConcept> enumerate_concepts(const FormalContext& context);

/// Subconcept order: extent(a) included in extent(b).
bool concept_leq(const FormalConcept& a, const FormalConcept& b);

/// The concept lattice: all concepts plus the covering relation of the
/// subconcept order and the introduction node of every object and attribute.
struct ConceptLattice {
  FormalContext context;
  std::vector<FormalConcept> concepts;
  /// Covering pairs (child, parent): child < parent with nothing in between.
  std::vector<std::pair<int, int>> covers;
  int top = -1;
  int bottom = -1;
  /// introduced_objects[g] = concept whose extent is the closure of {g};
  /// introduced_attributes[m] = concept whose intent is the closure of {m}.
  std::vector<int> introduced_objects;
  std::vector<int> introduced_attributes;

  std::vector<int> parents_of(int concept_index) const;
  std::vector<int> children_of(int concept_index) const;
  /// Objects / attributes introduced at the given node, as indices.
  std::vector<int> objects_introduced_at(int concept_index) const;
  std::vector<int> attributes_introduced_at(int concept_index) const;
};

ConceptLattice build_lattice(const FormalContext& context);

/// How clarification folded duplicate rows/columns together.
struct MergeGroup {
  std::string merged_name;
  std::vector<std::string> members;  // sorted original names
};
struct ClarifyReport {
  std::vector<MergeGroup> object_merges;
  std::vector<MergeGroup> attribute_merges;
};

/// True iff no two objects share an intent and no two attributes share an
/// extent.
bool is_clarified(const FormalContext& context);

/// Merge equal object rows and equal attribute columns. Merged names are the
/// sorted originals joined with '+'; the report lists every group that was
/// folded (singletons are omitted).
FormalContext clarify(const FormalContext& context,
                      ClarifyReport* report = nullptr);

/// Result of a reducibility query: when `reducible` is true, `witness` is an
/// inclusion-minimal set whose extents (dually: intents) intersect to the
/// queried column (row). The empty witness means the full set.
struct ReducibilityResult {
  bool reducible = false;
  IndexSet witness;
};

/// Whether attribute m's extent is an intersection of other attributes'
/// extents. Requires a clarified context (PreconditionError otherwise).
ReducibilityResult is_reducible_attribute(const FormalContext& context,
                                          int attribute);
/// Dual of is_reducible_attribute.
ReducibilityResult is_reducible_object(const FormalContext& context,
                                       int object);

/// Delete reducible attributes, then reducible objects, in list order and
/// re-checking after each deletion, until a full pass deletes nothing.
/// Requires a clarified context. The concept count is unchanged.
FormalContext reduce(const FormalContext& context);

}  // namespace cocseg
