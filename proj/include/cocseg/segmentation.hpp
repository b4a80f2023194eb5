#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cocseg/config.hpp"
#include "cocseg/taxonomy.hpp"
#include "cocseg/textio.hpp"

namespace cocseg {

/// Per-sentence concept-term counts. total_s(i,t) adds the counts of t's
/// direct taxonomy descendants to f(i,t); total(t) sums total_s over all
/// sentences.
struct TermFrequencyTable {
  std::vector<std::string> terms;
  std::vector<std::vector<int>> f;        // [sentence][term]
  std::vector<std::vector<int>> total_s;  // [sentence][term]
  std::vector<std::int64_t> total;        // [term]

  int sentence_count() const { return static_cast<int>(f.size()); }
  int term_count() const { return static_cast<int>(terms.size()); }
  int term_index(const std::string& term) const;  // -1 when absent
};

/// Count lemma occurrences of every term per sentence and roll up direct
/// descendants through the taxonomy. Terms must be non-empty.
TermFrequencyTable compute_frequencies(const AnnotatedCorpus& corpus,
                                       const std::vector<std::string>& terms,
                                       const Taxonomy& taxonomy);

/// The ceil(fraction * term_count) best-supported terms, ranked by
/// descending total with lexicographic tie-break.
std::vector<std::string> select_terms(const TermFrequencyTable& table,
                                      Rational fraction = {1, 2});

struct SentenceVector {
  int sentence_index = 0;  // 1-based
  std::vector<double> values;

  bool is_zero() const;
};

/// One vector per sentence: (total_s(i, t1), ..., total_s(i, tm)) in the
/// order of the selected terms.
std::vector<SentenceVector> build_vectors(
    const TermFrequencyTable& table, const std::vector<std::string>& selected);

/// dot(u,v) / (|u||v|), or 0 when either norm vanishes. Non-negative inputs
/// keep the result in [0, 1]. InputError on dimension mismatch.
double cosine_similarity(const std::vector<double>& u,
                         const std::vector<double>& v);

struct ClusteringResult {
  std::vector<std::vector<int>> clusters;  // sentence indices, sorted
  std::vector<std::vector<double>> centroids;
  int iterations = 0;
  std::vector<int> excluded;  // zero-vector sentences, sorted
};

/// Objective bookkeeping for one assignment pass: the within-cluster
/// dissimilarity sum against fixed centroids, before and after reassignment.
struct KMeansTrace {
  struct Step {
    double objective_before;
    double objective_after;
  };
  std::vector<Step> steps;
};

struct KMeansOptions {
  int max_iter = 100;
  /// When set, centroids are seeded by drawing k distinct non-zero vectors
  /// with the given RNG seed instead of the deterministic farthest-first
  /// traversal.
  std::optional<std::uint32_t> seed;
};

/// Spherical k-means over the non-zero vectors: farthest-first seeding by
/// default, argmax-cosine assignment (ties to the lowest cluster id), mean
/// centroid update, stop on unchanged assignments. Mid-run empty clusters
/// are dropped. InputError when fewer than k non-zero vectors exist.
ClusteringResult kmeans(const std::vector<SentenceVector>& vectors, int k,
                        const KMeansOptions& options = {},
                        KMeansTrace* trace = nullptr);

struct Segment {
  int start = 0;  // 1-based, inclusive
  int end = 0;

  friend bool operator==(const Segment&, const Segment&) = default;
};

struct Segmentation {
  std::vector<Segment> segments;
  int source_cluster = 0;  // 1-based cluster id
  std::vector<std::string> explanation;
};

/// Linear segmentation induced by a cluster: every member after the first
/// opens a new segment, segments cover 1..n without gaps or overlaps.
Segmentation cluster_to_segmentation(const std::vector<int>& cluster, int n);

/// Selected terms concentrated in the cluster: positive in-cluster total and
/// in-cluster share of total(t) at least min_share; lexicographic order.
std::vector<std::string> explain_cluster(const std::vector<int>& cluster,
                                         const TermFrequencyTable& table,
                                         const std::vector<std::string>& selected,
                                         Rational min_share = {1, 2});

struct SegmentationReport {
  int k = 0;  // requested cluster count
  std::vector<std::string> selected_terms;
  std::vector<int> excluded;
  std::vector<std::vector<int>> clusters;  // members per cluster, 1-based ids
  std::vector<Segmentation> segmentations;
  int iterations = 0;
};

/// The whole concept-oriented segmentation pass over an annotated corpus:
/// frequencies, term selection, sentence vectors, k-means, one segmentation
/// with explanation per cluster.
SegmentationReport run_segmentation(const AnnotatedCorpus& corpus,
                                    const Taxonomy& taxonomy,
                                    const std::vector<std::string>& terms,
                                    const PipelineConfig& config);

nlohmann::ordered_json report_to_json(const SegmentationReport& report);

}  // namespace cocseg
