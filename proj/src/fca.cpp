#include "cocseg/fca.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "cocseg/errors.hpp"

namespace cocseg {

namespace {

void check_indices(const IndexSet& set, int limit, const char* what) {
  for (int i : set) {
    if (i < 0 || i >= limit) {
      std::ostringstream msg;
      msg << what << " index " << i << " out of range [0, " << limit << ")";
      throw InputError(msg.str());
    }
  }
}

IndexSet normalized(IndexSet set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

bool is_subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

IndexSet full_set(int n) {
  IndexSet all(n);
  std::iota(all.begin(), all.end(), 0);
  return all;
}

// Closure of an object set under the two derivation operators, as a mask.
std::vector<char> object_closure(const FormalContext& ctx,
                                 const std::vector<char>& objs) {
  const int n = ctx.object_count();
  const int m = ctx.attribute_count();
  std::vector<char> shared(m, 1);
  for (int g = 0; g < n; ++g) {
    if (!objs[g]) continue;
    for (int a = 0; a < m; ++a) {
      if (!ctx.incidence[g][a]) shared[a] = 0;
    }
  }
  std::vector<char> closed(n, 1);
  for (int g = 0; g < n; ++g) {
    for (int a = 0; a < m; ++a) {
      if (shared[a] && !ctx.incidence[g][a]) {
        closed[g] = 0;
        break;
      }
    }
  }
  return closed;
}

}  // namespace

FormalContext FormalContext::create(std::vector<std::string> objects,
                                    std::vector<std::string> attributes,
                                    std::vector<std::vector<bool>> incidence) {
  std::set<std::string> seen;
  for (const auto& name : objects) {
    if (!seen.insert(name).second)
      throw InputError("duplicate object name: " + name);
  }
  seen.clear();
  for (const auto& name : attributes) {
    if (!seen.insert(name).second)
      throw InputError("duplicate attribute name: " + name);
  }
  if (incidence.size() != objects.size())
    throw InputError("incidence row count does not match object count");
  for (const auto& row : incidence) {
    if (row.size() != attributes.size())
      throw InputError("incidence column count does not match attribute count");
  }
  FormalContext ctx;
  ctx.objects = std::move(objects);
  ctx.attributes = std::move(attributes);
  ctx.incidence = std::move(incidence);
  return ctx;
}

int FormalContext::object_index(const std::string& name) const {
  auto it = std::find(objects.begin(), objects.end(), name);
  return it == objects.end() ? -1 : static_cast<int>(it - objects.begin());
}

int FormalContext::attribute_index(const std::string& name) const {
  auto it = std::find(attributes.begin(), attributes.end(), name);
  return it == attributes.end() ? -1 : static_cast<int>(it - attributes.begin());
}

IndexSet derive_attrs(const FormalContext& context, const IndexSet& object_set) {
  check_indices(object_set, context.object_count(), "object");
  IndexSet result;
  for (int a = 0; a < context.attribute_count(); ++a) {
    bool shared = true;
    for (int g : object_set) {
      if (!context.incidence[g][a]) {
        shared = false;
        break;
      }
    }
    if (shared) result.push_back(a);
  }
  return result;
}

IndexSet derive_objs(const FormalContext& context, const IndexSet& attribute_set) {
  check_indices(attribute_set, context.attribute_count(), "attribute");
  IndexSet result;
  for (int g = 0; g < context.object_count(); ++g) {
    bool shares = true;
    for (int a : attribute_set) {
      if (!context.incidence[g][a]) {
        shares = false;
        break;
      }
    }
    if (shares) result.push_back(g);
  }
  return result;
}

bool is_concept(const FormalContext& context, const IndexSet& extent,
                const IndexSet& intent) {
  IndexSet ext = normalized(extent);
  IndexSet intt = normalized(intent);
  return derive_attrs(context, ext) == intt && derive_objs(context, intt) == ext;
}

std::vector<FormalConcept> enumerate_concepts(const FormalContext& context) {
  const int n = context.object_count();

  // Ganter's next-closure over object sets: every closed extent is visited
  // exactly once, in lectic order.
  std::vector<std::vector<char>> extents;
  std::vector<char> current = object_closure(context, std::vector<char>(n, 0));
  extents.push_back(current);
  while (true) {
    bool found = false;
    for (int i = n - 1; i >= 0 && !found; --i) {
      if (current[i]) {
        current[i] = 0;
        continue;
      }
      std::vector<char> candidate = current;
      candidate[i] = 1;
      std::vector<char> closed = object_closure(context, candidate);
      bool canonical = true;
      for (int j = 0; j < i; ++j) {
        if (closed[j] && !current[j]) {
          canonical = false;
          break;
        }
      }
      if (canonical) {
        current = closed;
        extents.push_back(current);
        found = true;
      }
    }
    if (!found) break;
  }

  std::vector<FormalConcept> concepts;
  concepts.reserve(extents.size());
  for (const auto& mask : extents) {
    FormalConcept c;
    for (int g = 0; g < n; ++g) {
      if (mask[g]) c.extent.push_back(g);
    }
    c.intent = derive_attrs(context, c.extent);
    concepts.push_back(std::move(c));
  }
  std::sort(concepts.begin(), concepts.end(),
            [](const FormalConcept& a, const FormalConcept& b) {
              if (a.extent.size() != b.extent.size())
                return a.extent.size() > b.extent.size();
              return a.extent < b.extent;
            });
  return concepts;
}

bool concept_leq(const FormalConcept& a, const FormalConcept& b) {
  return is_subset(a.extent, b.extent);
}

std::vector<int> ConceptLattice::parents_of(int concept_index) const {
  std::vector<int> result;
  for (const auto& [child, parent] : covers) {
    if (child == concept_index) result.push_back(parent);
  }
  return result;
}

std::vector<int> ConceptLattice::children_of(int concept_index) const {
  std::vector<int> result;
  for (const auto& [child, parent] : covers) {
    if (parent == concept_index) result.push_back(child);
  }
  return result;
}

std::vector<int> ConceptLattice::objects_introduced_at(int concept_index) const {
  std::vector<int> result;
  for (int g = 0; g < static_cast<int>(introduced_objects.size()); ++g) {
    if (introduced_objects[g] == concept_index) result.push_back(g);
  }
  return result;
}

std::vector<int> ConceptLattice::attributes_introduced_at(
    int concept_index) const {
  std::vector<int> result;
  for (int m = 0; m < static_cast<int>(introduced_attributes.size()); ++m) {
    if (introduced_attributes[m] == concept_index) result.push_back(m);
  }
  return result;
}

ConceptLattice build_lattice(const FormalContext& context) {
  ConceptLattice lattice;
  lattice.context = context;
  lattice.concepts = enumerate_concepts(context);
  const int count = static_cast<int>(lattice.concepts.size());

  std::vector<std::vector<bool>> leq(count, std::vector<bool>(count, false));
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      leq[a][b] = concept_leq(lattice.concepts[a], lattice.concepts[b]);
    }
  }
  for (int child = 0; child < count; ++child) {
    for (int parent = 0; parent < count; ++parent) {
      if (child == parent || !leq[child][parent]) continue;
      bool covering = true;
      for (int mid = 0; mid < count; ++mid) {
        if (mid == child || mid == parent) continue;
        if (leq[child][mid] && leq[mid][parent]) {
          covering = false;
          break;
        }
      }
      if (covering) lattice.covers.emplace_back(child, parent);
    }
  }
  std::sort(lattice.covers.begin(), lattice.covers.end());

  std::map<IndexSet, int> by_extent;
  for (int i = 0; i < count; ++i) by_extent[lattice.concepts[i].extent] = i;

  lattice.top = by_extent.at(
      derive_objs(context, derive_attrs(context, full_set(context.object_count()))));
  lattice.bottom =
      by_extent.at(derive_objs(context, full_set(context.attribute_count())));

  lattice.introduced_objects.resize(context.object_count());
  for (int g = 0; g < context.object_count(); ++g) {
    IndexSet closure = derive_objs(context, derive_attrs(context, {g}));
    lattice.introduced_objects[g] = by_extent.at(closure);
  }
  lattice.introduced_attributes.resize(context.attribute_count());
  for (int m = 0; m < context.attribute_count(); ++m) {
    lattice.introduced_attributes[m] = by_extent.at(derive_objs(context, {m}));
  }
  return lattice;
}

bool is_clarified(const FormalContext& context) {
  std::set<std::vector<bool>> rows(context.incidence.begin(),
                                   context.incidence.end());
  if (rows.size() != context.incidence.size()) return false;
  std::set<std::vector<bool>> cols;
  for (int a = 0; a < context.attribute_count(); ++a) {
    std::vector<bool> col(context.object_count());
    for (int g = 0; g < context.object_count(); ++g)
      col[g] = context.incidence[g][a];
    if (!cols.insert(col).second) return false;
  }
  return true;
}

namespace {

std::string merge_name(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  std::string merged;
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) merged += '+';
    merged += names[i];
  }
  return merged;
}

}  // namespace

FormalContext clarify(const FormalContext& context, ClarifyReport* report) {
  if (report) *report = ClarifyReport{};

  // Group objects by row, keeping first-occurrence order.
  std::map<std::vector<bool>, int> row_group;
  std::vector<std::vector<std::string>> object_groups;
  std::vector<std::vector<bool>> group_rows;
  for (int g = 0; g < context.object_count(); ++g) {
    const auto& row = context.incidence[g];
    auto [it, inserted] =
        row_group.emplace(row, static_cast<int>(object_groups.size()));
    if (inserted) {
      object_groups.push_back({context.objects[g]});
      group_rows.push_back(row);
    } else {
      object_groups[it->second].push_back(context.objects[g]);
    }
  }

  // Group attributes of the merged rows by column.
  std::map<std::vector<bool>, int> col_group;
  std::vector<std::vector<std::string>> attribute_groups;
  std::vector<int> group_cols;
  for (int a = 0; a < context.attribute_count(); ++a) {
    std::vector<bool> col(group_rows.size());
    for (size_t r = 0; r < group_rows.size(); ++r) col[r] = group_rows[r][a];
    auto [it, inserted] =
        col_group.emplace(col, static_cast<int>(attribute_groups.size()));
    if (inserted) {
      attribute_groups.push_back({context.attributes[a]});
      group_cols.push_back(a);
    } else {
      attribute_groups[it->second].push_back(context.attributes[a]);
    }
  }

  std::vector<std::string> objects, attributes;
  for (auto& group : object_groups) {
    std::sort(group.begin(), group.end());
    objects.push_back(merge_name(group));
    if (report && group.size() > 1)
      report->object_merges.push_back({objects.back(), group});
  }
  for (auto& group : attribute_groups) {
    std::sort(group.begin(), group.end());
    attributes.push_back(merge_name(group));
    if (report && group.size() > 1)
      report->attribute_merges.push_back({attributes.back(), group});
  }

  std::vector<std::vector<bool>> incidence;
  for (const auto& row : group_rows) {
    std::vector<bool> merged_row(group_cols.size());
    for (size_t c = 0; c < group_cols.size(); ++c)
      merged_row[c] = row[group_cols[c]];
    incidence.push_back(std::move(merged_row));
  }
  return FormalContext::create(std::move(objects), std::move(attributes),
                               std::move(incidence));
}

namespace {

void require_clarified(const FormalContext& context) {
  if (!is_clarified(context))
    throw PreconditionError("context is not clarified");
}

// Shared core of the two reducibility checks. `extent_of(i)` is the derived
// set of the i-th item of the checked kind; `limit` the item count.
ReducibilityResult reducible_via_intersection(
    int item, int limit, int universe_size,
    const std::function<IndexSet(int)>& extent_of) {
  const IndexSet target = extent_of(item);
  IndexSet candidates;
  for (int other = 0; other < limit; ++other) {
    if (other == item) continue;
    if (is_subset(target, extent_of(other))) candidates.push_back(other);
  }
  auto intersect_over = [&](const IndexSet& items) {
    IndexSet inter = full_set(universe_size);
    for (int s : items) {
      const IndexSet ext = extent_of(s);
      IndexSet next;
      std::set_intersection(inter.begin(), inter.end(), ext.begin(), ext.end(),
                            std::back_inserter(next));
      inter = std::move(next);
    }
    return inter;
  };
  if (intersect_over(candidates) != target) return {false, {}};

  // Prune to an inclusion-minimal witness, list order.
  IndexSet witness = candidates;
  for (int s : candidates) {
    IndexSet without;
    std::copy_if(witness.begin(), witness.end(), std::back_inserter(without),
                 [s](int x) { return x != s; });
    if (intersect_over(without) == target) witness = std::move(without);
  }
  return {true, witness};
}

FormalContext drop_attribute(const FormalContext& ctx, int attribute) {
  std::vector<std::string> attributes;
  for (int a = 0; a < ctx.attribute_count(); ++a)
    if (a != attribute) attributes.push_back(ctx.attributes[a]);
  std::vector<std::vector<bool>> incidence;
  for (const auto& row : ctx.incidence) {
    std::vector<bool> out;
    for (int a = 0; a < ctx.attribute_count(); ++a)
      if (a != attribute) out.push_back(row[a]);
    incidence.push_back(std::move(out));
  }
  return FormalContext::create(ctx.objects, std::move(attributes),
                               std::move(incidence));
}

FormalContext drop_object(const FormalContext& ctx, int object) {
  std::vector<std::string> objects;
  std::vector<std::vector<bool>> incidence;
  for (int g = 0; g < ctx.object_count(); ++g) {
    if (g == object) continue;
    objects.push_back(ctx.objects[g]);
    incidence.push_back(ctx.incidence[g]);
  }
  return FormalContext::create(std::move(objects), ctx.attributes,
                               std::move(incidence));
}

}  // namespace

ReducibilityResult is_reducible_attribute(const FormalContext& context,
                                          int attribute) {
  require_clarified(context);
  check_indices({attribute}, context.attribute_count(), "attribute");
  return reducible_via_intersection(
      attribute, context.attribute_count(), context.object_count(),
      [&](int a) { return derive_objs(context, {a}); });
}

ReducibilityResult is_reducible_object(const FormalContext& context,
                                       int object) {
  require_clarified(context);
  check_indices({object}, context.object_count(), "object");
  return reducible_via_intersection(
      object, context.object_count(), context.attribute_count(),
      [&](int g) { return derive_attrs(context, {g}); });
}

FormalContext reduce(const FormalContext& context) {
  require_clarified(context);
  FormalContext ctx = context;
  bool deleted = true;
  while (deleted) {
    deleted = false;
    for (int a = 0; a < ctx.attribute_count();) {
      if (is_reducible_attribute(ctx, a).reducible) {
        ctx = drop_attribute(ctx, a);
        deleted = true;
        a = 0;  // re-check from the start after each deletion
      } else {
        ++a;
      }
    }
    for (int g = 0; g < ctx.object_count();) {
      if (is_reducible_object(ctx, g).reducible) {
        ctx = drop_object(ctx, g);
        deleted = true;
        g = 0;
      } else {
        ++g;
      }
    }
  }
  return ctx;
}

}  // namespace cocseg
