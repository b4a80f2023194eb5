// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cocseg/context_io.hpp"
#include "cocseg/pipeline.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#ifndef COCSEG_DATA_DIR
#error "COCSEG_DATA_DIR must point at tests/data"
#endif

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  std::string name;
  std::function<void(std::ostringstream&)> run;  // throws on failure
};

struct Failure {
  std::string detail;
};

void require(bool condition, const std::string& detail) {
  if (!condition) throw Failure{detail};
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// --- criterion bodies -----------------------------------------------------

void tourism_concepts(std::ostringstream& note) {
  const auto start = Clock::now();
  const auto ctx = fixtures::tourism_context();
  const auto concepts = cocseg::enumerate_concepts(ctx);
  std::set<fixtures::NamedConcept> found;
  for (const auto& c : concepts) found.insert(fixtures::named(ctx, c));
  require(concepts.size() == 6, "expected 6 concepts, got " +
                                    std::to_string(concepts.size()));
  require(found == fixtures::tourism_concepts(),
          "concept set differs from the expected six extent/intent pairs");
  const double elapsed = seconds_since(start);
  require(elapsed < 1.0, "took " + std::to_string(elapsed) + "s (limit 1s)");
  note << "6 concepts in " << elapsed << "s";
}

void tourism_lattice(std::ostringstream& note) {
  const auto ctx = fixtures::tourism_context();
  const auto lattice = cocseg::build_lattice(ctx);
  auto index_of = [&](const std::set<std::string>& extent) {
    for (size_t i = 0; i < lattice.concepts.size(); ++i)
      if (fixtures::named(ctx, lattice.concepts[i]).first == extent)
        return static_cast<int>(i);
    throw Failure{"missing concept"};
  };
  const int c1 = index_of({"apartment", "car", "motor-bike", "excursion",
                           "trip", "hotel"});
  const int c2 = index_of({"apartment", "car", "motor-bike"});
  const int c3 = index_of({"car", "motor-bike"});
  const int c4 = index_of({"motor-bike"});
  const int c5 = index_of({"excursion", "trip"});
  const int c6 = index_of({});
  const std::set<std::pair<int, int>> expected = {{c2, c1}, {c5, c1}, {c3, c2},
                                                  {c4, c3}, {c6, c4}, {c6, c5}};
  const std::set<std::pair<int, int>> covers(lattice.covers.begin(),
                                             lattice.covers.end());
  require(covers == expected, "cover edges differ from the expected Hasse diagram");

  const std::vector<std::pair<std::string, int>> object_intros = {
      {"hotel", c1},     {"apartment", c2}, {"car", c3},
      {"motor-bike", c4}, {"excursion", c5}, {"trip", c5}};
  for (const auto& [name, node] : object_intros)
    require(lattice.introduced_objects[ctx.object_index(name)] == node,
            "object introduction label wrong for " + name);
  const std::vector<std::pair<std::string, int>> attribute_intros = {
      {"bookable", c1}, {"rentable", c2}, {"driveable", c3},
      {"rideable", c4}, {"joinable", c5}};
  for (const auto& [name, node] : attribute_intros)
    require(lattice.introduced_attributes[ctx.attribute_index(name)] == node,
            "attribute introduction label wrong for " + name);
  note << "6 cover edges, 11 introduction labels";
}

void tourism_taxonomy(std::ostringstream& note) {
  const auto taxonomy =
      cocseg::extract_taxonomy(cocseg::build_lattice(fixtures::tourism_context()));
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& edge : taxonomy.edges) edges.emplace(edge.parent, edge.child);
  require(edges == fixtures::tourism_taxonomy_edges(),
          "taxonomy edges differ from the expected ten");
  const auto paths = cocseg::root_to_leaf_paths(taxonomy);
  const std::vector<std::string> deep = {"bookable", "rentable", "driveable",
                                         "rideable", "motor-bike"};
  require(std::count(paths.begin(), paths.end(), deep) == 1,
          "missing path bookable->rentable->driveable->rideable->motor-bike");
  note << "10 edges, deep path present";
}

void worked_frequency(std::ostringstream& note) {
  const auto corpus = cocseg::parse_corpus_file(std::string(COCSEG_DATA_DIR) +
                                                "/law30.tsv");
  const auto stub = cocseg::read_taxonomy_file(std::string(COCSEG_DATA_DIR) +
                                               "/law_stub_taxonomy.json");
  const auto table = cocseg::compute_frequencies(
      corpus, {"concern", "justice", "system"}, stub);
  const int concern = table.term_index("concern");
  const int total_s = table.total_s[13][concern];
  require(total_s == 2, "Total_S(14, concern) = " + std::to_string(total_s) +
                            ", expected 2");
  note << "Total_S(14, concern) = 2";
}

void segmentation_mapping(std::ostringstream& note) {
  const auto seg1 = cocseg::cluster_to_segmentation(
      {8, 19, 27, 31, 37, 40, 60, 63}, 102);
  const std::vector<cocseg::Segment> expected1 = {
      {1, 7},   {8, 18},  {19, 26}, {27, 30}, {31, 36},
      {37, 39}, {40, 59}, {60, 62}, {63, 102}};
  require(seg1.segments == expected1, "first cluster segmentation differs");
  const auto seg2 = cocseg::cluster_to_segmentation(
      {3, 14, 20, 53, 54, 68, 71, 74, 84}, 102);
  const std::vector<cocseg::Segment> expected2 = {
      {1, 2},   {3, 13},  {14, 19}, {20, 52}, {53, 53},
      {54, 67}, {68, 70}, {71, 73}, {74, 83}, {84, 102}};
  require(seg2.segments == expected2, "second cluster segmentation differs");
  note << "9 and 10 segments, singleton [53,53] included";
}

void oracle_equivalence(std::ostringstream& note) {
  const auto start = Clock::now();
  std::mt19937 rng(2024);
  int checked = 0;
  while (checked < 100) {
    auto raw = oracle::random_context(rng);
    auto ctx = cocseg::FormalContext::create(raw.objects, raw.attributes,
                                             raw.incidence);
    const auto concepts = cocseg::enumerate_concepts(ctx);
    std::set<std::pair<oracle::Set, oracle::Set>> got;
    for (const auto& c : concepts) got.emplace(c.extent, c.intent);
    require(got.size() == concepts.size(), "duplicate concept emitted");
    require(got == oracle::brute_force_concepts(
                       raw.incidence, ctx.object_count(), ctx.attribute_count()),
            "enumeration differs from the powerset oracle");

    const auto clarified = cocseg::clarify(ctx);
    require(cocseg::enumerate_concepts(clarified).size() == concepts.size(),
            "clarify changed the concept count");
    const auto reduced = cocseg::reduce(clarified);
    require(cocseg::enumerate_concepts(reduced).size() == concepts.size(),
            "reduce changed the concept count");
    ++checked;
  }
  const double elapsed = seconds_since(start);
  require(elapsed < 10.0, "took " + std::to_string(elapsed) + "s (limit 10s)");
  note << checked << " contexts in " << elapsed << "s";
}

void galois_properties(std::ostringstream& note) {
  std::mt19937 rng(20250811);
  std::uniform_int_distribution<int> bit(0, 1);
  int checked = 0;
  while (checked < 200) {
    auto raw = oracle::random_context(rng);
    auto ctx = cocseg::FormalContext::create(raw.objects, raw.attributes,
                                             raw.incidence);
    cocseg::IndexSet a, a2, b;
    for (int g = 0; g < ctx.object_count(); ++g) {
      if (bit(rng)) a.push_back(g);
      if (bit(rng)) a2.push_back(g);
    }
    for (int m = 0; m < ctx.attribute_count(); ++m)
      if (bit(rng)) b.push_back(m);
    cocseg::IndexSet wider = a;
    for (int g : a2)
      if (!std::binary_search(a.begin(), a.end(), g)) wider.push_back(g);
    std::sort(wider.begin(), wider.end());

    const auto closure = cocseg::derive_objs(ctx, cocseg::derive_attrs(ctx, a));
    require(std::includes(closure.begin(), closure.end(), a.begin(), a.end()),
            "extensivity failed");
    const auto once = cocseg::derive_attrs(ctx, a);
    require(once == cocseg::derive_attrs(ctx, cocseg::derive_objs(ctx, once)),
            "double-derivation idempotence failed");
    const auto da = cocseg::derive_attrs(ctx, a);
    const auto dw = cocseg::derive_attrs(ctx, wider);
    require(std::includes(da.begin(), da.end(), dw.begin(), dw.end()),
            "antitonicity failed");
    const auto bp = cocseg::derive_objs(ctx, b);
    const bool lhs = std::includes(bp.begin(), bp.end(), a.begin(), a.end());
    const bool rhs = std::includes(da.begin(), da.end(), b.begin(), b.end());
    require(lhs == rhs, "adjunction failed");
    ++checked;
  }
  note << checked << " contexts, 4 properties each";
}

void clustering_properties(std::ostringstream& note) {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> n_dist(1, 50);
  std::uniform_int_distribution<int> m_dist(1, 10);
  std::uniform_int_distribution<int> value(0, 4);
  int checked = 0;
  while (checked < 100) {
    const int n = n_dist(rng), m = m_dist(rng);
    std::vector<cocseg::SentenceVector> vectors;
    int non_zero = 0;
    for (int i = 0; i < n; ++i) {
      cocseg::SentenceVector v;
      v.sentence_index = i + 1;
      for (int d = 0; d < m; ++d)
        v.values.push_back(value(rng) == 0 ? 0.0
                                           : static_cast<double>(value(rng)));
      if (!v.is_zero()) ++non_zero;
      vectors.push_back(std::move(v));
    }
    if (non_zero == 0) continue;
    std::uniform_int_distribution<int> k_dist(1, std::min(non_zero, 5));
    const int k = k_dist(rng);

    cocseg::KMeansTrace trace;
    const auto result = cocseg::kmeans(vectors, k, {}, &trace);
    require(result.iterations <= 100, "exceeded max_iter");
    std::vector<int> members;
    for (const auto& cluster : result.clusters) {
      require(!cluster.empty(), "empty cluster retained");
      members.insert(members.end(), cluster.begin(), cluster.end());
    }
    std::sort(members.begin(), members.end());
    std::vector<int> expected;
    for (const auto& v : vectors)
      if (!v.is_zero()) expected.push_back(v.sentence_index);
    require(members == expected, "clusters do not partition non-zero vectors");
    for (const auto& step : trace.steps)
      require(step.objective_after <= step.objective_before + 1e-9,
              "objective increased during an assignment step");
    const auto again = cocseg::kmeans(vectors, k);
    require(again.clusters == result.clusters &&
                again.centroids == result.centroids &&
                again.iterations == result.iterations,
            "repeated run differed");
    ++checked;
  }
  note << checked << " vector sets";
}

void full_experiment_statement(std::ostringstream& note) {
  note << "full 320-sentence law experiment (21-term feature list, 4-cluster "
          "outcome, cluster term lists, taxonomy paths) is not reproducible: "
          "only the 30-sentence extract is available; covered by criteria "
          "4-5 and the property suites 6-8";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"tourism-concepts", tourism_concepts},
      {"tourism-lattice", tourism_lattice},
      {"tourism-taxonomy", tourism_taxonomy},
      {"worked-frequency-value", worked_frequency},
      {"segmentation-mapping", segmentation_mapping},
      {"oracle-equivalence", oracle_equivalence},
      {"galois-properties", galois_properties},
      {"clustering-properties", clustering_properties},
      {"full-experiment-not-reproducible", full_experiment_statement},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::ostringstream detail;
    try {
      criteria[i].run(detail);
      std::printf("PASS %zu %s", i + 1, criteria[i].name.c_str());
      if (!detail.str().empty()) std::printf(" (%s)", detail.str().c_str());
      std::printf("\n");
    } catch (const Failure& f) {
      ++failures;
      std::printf("FAIL %zu %s: %s\n", i + 1, criteria[i].name.c_str(),
                  f.detail.c_str());
    } catch (const std::exception& e) {
      ++failures;
      std::printf("FAIL %zu %s: unexpected error: %s\n", i + 1,
                  criteria[i].name.c_str(), e.what());
    }
  }
  if (failures > 0) {
    std::printf("%d of %zu acceptance criteria failed\n", failures,
                criteria.size());
    return 1;
  }
  std::printf("all %zu acceptance criteria passed\n", criteria.size());
  return 0;
}
