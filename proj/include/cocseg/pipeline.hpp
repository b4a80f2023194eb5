#pragma once

#include <string>
#include <vector>

#include "cocseg/config.hpp"
#include "cocseg/errors.hpp"
#include "cocseg/segmentation.hpp"

namespace cocseg {

/// Error annotated with the pipeline stage that failed.
class StageError : public Error {
 public:
  StageError(const std::string& stage, const std::string& message)
      : Error(stage + ": " + message), stage_(stage) {}

  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

struct PipelineResult {
  std::vector<VerbNounPair> pairs;
  FormalContext context;
  Taxonomy taxonomy;
  SegmentationReport report;
  std::vector<std::string> written;  // artifact paths, in write order
};

/// Concept terms a taxonomy contributes to frequency counting: every node
/// except a synthetic root.
std::vector<std::string> segmentation_terms(const Taxonomy& taxonomy);

/// Corpus -> pairs -> context -> lattice -> taxonomy -> segmentation, writing
/// every intermediate artifact into config.out_dir. The first failing stage
/// aborts with a StageError naming it; an empty context (no frequent pairs)
/// stops the run after the context artifacts are written.
PipelineResult run_pipeline(const std::string& corpus_path,
                            const PipelineConfig& config);

}  // namespace cocseg
