#include "cocseg/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "cocseg/errors.hpp"

namespace cocseg {

int TermFrequencyTable::term_index(const std::string& term) const {
  auto it = std::find(terms.begin(), terms.end(), term);
  return it == terms.end() ? -1 : static_cast<int>(it - terms.begin());
}

TermFrequencyTable compute_frequencies(const AnnotatedCorpus& corpus,
                                       const std::vector<std::string>& terms,
                                       const Taxonomy& taxonomy) {
  if (terms.empty()) throw InputError("term list must be non-empty");
  const int n = corpus.sentence_count();
  const int t_count = static_cast<int>(terms.size());

  std::vector<std::map<std::string, int>> lemma_counts(n);
  for (int i = 0; i < n; ++i)
    for (const auto& token : corpus.sentences[i]) ++lemma_counts[i][token.lemma];
  auto count_of = [&](int sentence, const std::string& lemma) {
    auto it = lemma_counts[sentence].find(lemma);
    return it == lemma_counts[sentence].end() ? 0 : it->second;
  };

  std::vector<std::vector<std::string>> children(t_count);
  for (int t = 0; t < t_count; ++t)
    if (taxonomy.has_node(terms[t]))
      children[t] = direct_descendants(taxonomy, terms[t]);

  TermFrequencyTable table;
  table.terms = terms;
  table.f.assign(n, std::vector<int>(t_count, 0));
  table.total_s.assign(n, std::vector<int>(t_count, 0));
  table.total.assign(t_count, 0);
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < t_count; ++t) {
      table.f[i][t] = count_of(i, terms[t]);
      int rolled = table.f[i][t];
      for (const auto& child : children[t]) rolled += count_of(i, child);
      table.total_s[i][t] = rolled;
      table.total[t] += rolled;
    }
  }
  return table;
}

std::vector<std::string> select_terms(const TermFrequencyTable& table,
                                      Rational fraction) {
  if (fraction.num <= 0 || fraction.num > fraction.den)
    throw InputError("term fraction must be in (0, 1]");
  std::vector<int> order(table.term_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (table.total[a] != table.total[b]) return table.total[a] > table.total[b];
    return table.terms[a] < table.terms[b];
  });
  const auto m = fraction.ceil_times(table.term_count());
  std::vector<std::string> selected;
  for (std::int64_t i = 0; i < m; ++i) selected.push_back(table.terms[order[i]]);
  return selected;
}

bool SentenceVector::is_zero() const {
  return std::all_of(values.begin(), values.end(),
                     [](double v) { return v == 0.0; });
}

std::vector<SentenceVector> build_vectors(
    const TermFrequencyTable& table, const std::vector<std::string>& selected) {
  if (selected.empty()) throw InputError("selected term list must be non-empty");
  std::vector<int> columns;
  for (const auto& term : selected) {
    int index = table.term_index(term);
    if (index < 0) throw InputError("selected term '" + term + "' not in table");
    columns.push_back(index);
  }
  std::vector<SentenceVector> vectors;
  for (int i = 0; i < table.sentence_count(); ++i) {
    SentenceVector v;
    v.sentence_index = i + 1;
    for (int column : columns)
      v.values.push_back(static_cast<double>(table.total_s[i][column]));
    vectors.push_back(std::move(v));
  }
  return vectors;
}

double cosine_similarity(const std::vector<double>& u,
                         const std::vector<double>& v) {
  if (u.size() != v.size())
    throw InputError("cosine: dimension mismatch (" + std::to_string(u.size()) +
                     " vs " + std::to_string(v.size()) + ")");
  double dot = 0, nu = 0, nv = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  if (nu == 0.0 || nv == 0.0) return 0.0;
  return dot / (std::sqrt(nu) * std::sqrt(nv));
}

namespace {

using Vec = std::vector<double>;

std::vector<int> assign_clusters(const std::vector<const SentenceVector*>& points,
                                 const std::vector<Vec>& centroids) {
  std::vector<int> assignment(points.size(), 0);
  for (size_t p = 0; p < points.size(); ++p) {
    double best = -1.0;
    int best_cluster = 0;
    for (size_t c = 0; c < centroids.size(); ++c) {
      double sim = cosine_similarity(points[p]->values, centroids[c]);
      if (sim > best) {  // strict: ties stay with the lowest cluster id
        best = sim;
        best_cluster = static_cast<int>(c);
      }
    }
    assignment[p] = best_cluster;
  }
  return assignment;
}

double objective(const std::vector<const SentenceVector*>& points,
                 const std::vector<int>& assignment,
                 const std::vector<Vec>& centroids) {
  double sum = 0;
  for (size_t p = 0; p < points.size(); ++p)
    sum += 1.0 - cosine_similarity(points[p]->values, centroids[assignment[p]]);
  return sum;
}

std::vector<Vec> member_means(const std::vector<const SentenceVector*>& points,
                              const std::vector<int>& assignment,
                              int cluster_count) {
  const size_t dim = points.empty() ? 0 : points.front()->values.size();
  std::vector<Vec> means(cluster_count, Vec(dim, 0.0));
  std::vector<int> sizes(cluster_count, 0);
  for (size_t p = 0; p < points.size(); ++p) {
    ++sizes[assignment[p]];
    for (size_t d = 0; d < dim; ++d)
      means[assignment[p]][d] += points[p]->values[d];
  }
  for (int c = 0; c < cluster_count; ++c)
    if (sizes[c] > 0)
      for (size_t d = 0; d < dim; ++d) means[c][d] /= sizes[c];
  return means;
}

// Removes clusters with no members, renumbering the assignment in place.
void prune_empty(std::vector<int>& assignment, std::vector<Vec>& centroids) {
  std::vector<int> sizes(centroids.size(), 0);
  for (int a : assignment) ++sizes[a];
  std::vector<int> remap(centroids.size(), -1);
  std::vector<Vec> kept;
  for (size_t c = 0; c < centroids.size(); ++c) {
    if (sizes[c] > 0) {
      remap[c] = static_cast<int>(kept.size());
      kept.push_back(std::move(centroids[c]));
    }
  }
  for (int& a : assignment) a = remap[a];
  centroids = std::move(kept);
}

std::vector<int> farthest_first_seeds(
    const std::vector<const SentenceVector*>& points, int k) {
  std::vector<int> seeds;
  double best_norm = -1.0;
  int first = 0;
  for (size_t p = 0; p < points.size(); ++p) {
    double norm = 0;
    for (double v : points[p]->values) norm += v * v;
    if (norm > best_norm) {
      best_norm = norm;
      first = static_cast<int>(p);
    }
  }
  seeds.push_back(first);
  std::vector<char> chosen(points.size(), 0);
  chosen[first] = 1;
  while (static_cast<int>(seeds.size()) < k) {
    double best_gap = -1.0;
    int pick = -1;
    for (size_t p = 0; p < points.size(); ++p) {
      if (chosen[p]) continue;
      double nearest = 2.0;
      for (int s : seeds)
        nearest = std::min(nearest, 1.0 - cosine_similarity(points[p]->values,
                                                            points[s]->values));
      if (nearest > best_gap) {
        best_gap = nearest;
        pick = static_cast<int>(p);
      }
    }
    seeds.push_back(pick);
    chosen[pick] = 1;
  }
  return seeds;
}

}  // namespace

ClusteringResult kmeans(const std::vector<SentenceVector>& vectors, int k,
                        const KMeansOptions& options, KMeansTrace* trace) {
  if (k < 1) throw InputError("k must be >= 1");
  if (options.max_iter < 1) throw InputError("max_iter must be >= 1");

  ClusteringResult result;
  std::vector<const SentenceVector*> points;
  for (const auto& v : vectors) {
    if (v.is_zero())
      result.excluded.push_back(v.sentence_index);
    else
      points.push_back(&v);
  }
  if (static_cast<int>(points.size()) < k) {
    std::ostringstream msg;
    msg << "k=" << k << " exceeds the " << points.size()
        << " non-zero sentence vectors; reduce k";
    throw InputError(msg.str());
  }

  std::vector<int> seeds;
  if (options.seed) {
    std::vector<int> indices(points.size());
    std::iota(indices.begin(), indices.end(), 0);
    std::mt19937 rng(*options.seed);
    std::shuffle(indices.begin(), indices.end(), rng);
    seeds.assign(indices.begin(), indices.begin() + k);
  } else {
    seeds = farthest_first_seeds(points, k);
  }
  std::vector<Vec> centroids;
  for (int s : seeds) centroids.push_back(points[s]->values);

  std::vector<int> assignment;
  int iterations = 0;
  while (iterations < options.max_iter) {
    std::vector<int> next = assign_clusters(points, centroids);
    ++iterations;
    bool converged = !assignment.empty() && next == assignment;
    if (trace && !assignment.empty())
      trace->steps.push_back({objective(points, assignment, centroids),
                              objective(points, next, centroids)});
    prune_empty(next, centroids);
    assignment = std::move(next);
    centroids = member_means(points, assignment,
                             static_cast<int>(centroids.size()));
    if (converged) break;
  }

  result.iterations = iterations;
  result.centroids = centroids;
  result.clusters.assign(centroids.size(), {});
  for (size_t p = 0; p < points.size(); ++p)
    result.clusters[assignment[p]].push_back(points[p]->sentence_index);
  for (auto& members : result.clusters)
    std::sort(members.begin(), members.end());
  return result;
}

Segmentation cluster_to_segmentation(const std::vector<int>& cluster, int n) {
  if (cluster.empty()) throw InputError("cluster must be non-empty");
  std::vector<int> members = cluster;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.front() < 1 || members.back() > n)
    throw InputError("cluster member out of range [1, " + std::to_string(n) +
                     "]");
  Segmentation segmentation;
  if (members.front() > 1)
    segmentation.segments.push_back({1, members.front() - 1});
  for (size_t j = 0; j + 1 < members.size(); ++j)
    segmentation.segments.push_back({members[j], members[j + 1] - 1});
  segmentation.segments.push_back({members.back(), n});
  return segmentation;
}

std::vector<std::string> explain_cluster(const std::vector<int>& cluster,
                                         const TermFrequencyTable& table,
                                         const std::vector<std::string>& selected,
                                         Rational min_share) {
  if (cluster.empty()) throw InputError("cluster must be non-empty");
  for (int i : cluster) {
    if (i < 1 || i > table.sentence_count())
      throw InputError("cluster member " + std::to_string(i) +
                       " out of range [1, " +
                       std::to_string(table.sentence_count()) + "]");
  }
  std::vector<std::string> explanation;
  for (const auto& term : selected) {
    const int t = table.term_index(term);
    if (t < 0) throw InputError("selected term '" + term + "' not in table");
    std::int64_t in_cluster = 0;
    for (int i : cluster) in_cluster += table.total_s[i - 1][t];
    if (in_cluster <= 0) continue;
    // exact share comparison: in_cluster / total >= num / den
    if (in_cluster * min_share.den >= min_share.num * table.total[t])
      explanation.push_back(term);
  }
  std::sort(explanation.begin(), explanation.end());
  return explanation;
}

SegmentationReport run_segmentation(const AnnotatedCorpus& corpus,
                                    const Taxonomy& taxonomy,
                                    const std::vector<std::string>& terms,
                                    const PipelineConfig& config) {
  config.validate();
  SegmentationReport report;
  report.k = config.k;
  TermFrequencyTable table = compute_frequencies(corpus, terms, taxonomy);
  report.selected_terms = select_terms(table, config.term_fraction);
  std::vector<SentenceVector> vectors = build_vectors(table, report.selected_terms);
  KMeansOptions options;
  options.max_iter = config.max_iter;
  options.seed = config.seed;
  ClusteringResult clustering = kmeans(vectors, config.k, options);
  report.excluded = clustering.excluded;
  report.clusters = clustering.clusters;
  report.iterations = clustering.iterations;
  for (size_t c = 0; c < clustering.clusters.size(); ++c) {
    Segmentation segmentation = cluster_to_segmentation(
        clustering.clusters[c], corpus.sentence_count());
    segmentation.source_cluster = static_cast<int>(c) + 1;
    segmentation.explanation = explain_cluster(
        clustering.clusters[c], table, report.selected_terms, config.min_share);
    report.segmentations.push_back(std::move(segmentation));
  }
  return report;
}

nlohmann::ordered_json report_to_json(const SegmentationReport& report) {
  nlohmann::ordered_json j;
  j["k"] = report.k;
  j["m"] = report.selected_terms.size();
  j["selected_terms"] = report.selected_terms;
  j["excluded"] = report.excluded;
  auto clusters = nlohmann::ordered_json::array();
  for (size_t c = 0; c < report.clusters.size(); ++c) {
    nlohmann::ordered_json entry;
    entry["id"] = c + 1;
    entry["members"] = report.clusters[c];
    entry["terms"] = report.segmentations[c].explanation;
    auto segments = nlohmann::ordered_json::array();
    for (const auto& segment : report.segmentations[c].segments)
      segments.push_back({segment.start, segment.end});
    entry["segments"] = std::move(segments);
    clusters.push_back(std::move(entry));
  }
  j["clusters"] = std::move(clusters);
  return j;
}

}  // namespace cocseg
