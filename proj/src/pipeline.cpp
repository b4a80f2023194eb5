#include "cocseg/pipeline.hpp"

#include <filesystem>

#include "cocseg/context_io.hpp"

namespace cocseg {

namespace {

template <typename Fn>
auto stage(const std::string& name, Fn&& fn) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(name, e.what());
  }
}

}  // namespace

std::vector<std::string> segmentation_terms(const Taxonomy& taxonomy) {
  std::vector<std::string> terms;
  for (const auto& term : taxonomy.all_terms())
    if (!(taxonomy.synthetic_root && term == taxonomy.root))
      terms.push_back(term);
  return terms;
}

PipelineResult run_pipeline(const std::string& corpus_path,
                            const PipelineConfig& config) {
  config.validate();
  PipelineResult result;
  std::filesystem::create_directories(config.out_dir);
  auto out_path = [&](const std::string& name) {
    return (std::filesystem::path(config.out_dir) / name).string();
  };
  auto emit = [&](const std::string& name, const std::string& content) {
    const std::string path = out_path(name);
    write_text_file(path, content);
    result.written.push_back(path);
  };

  AnnotatedCorpus corpus = stage(
      "parse-corpus", [&] { return parse_corpus_file(corpus_path); });

  result.pairs = stage("extract-pairs",
                       [&] { return extract_pairs(corpus, config.window); });
  stage("extract-pairs", [&] {
    write_pairs_file(result.pairs, out_path("pairs.tsv"));
    result.written.push_back(out_path("pairs.tsv"));
    return 0;
  });

  result.context = stage("build-context", [&] {
    FrequentTerms frequent = filter_frequent(result.pairs, config.min_pair_freq);
    return build_context(frequent.kept, frequent.nouns, frequent.verbs);
  });
  stage("build-context", [&] {
    write_cxt_file(result.context, out_path("context.cxt"));
    result.written.push_back(out_path("context.cxt"));
    emit("context.json", json_to_string(context_to_json(result.context)));
    return 0;
  });
  if (result.context.object_count() == 0 || result.context.attribute_count() == 0)
    throw StageError("build-context",
                     "empty context: no verb-noun pair terms reached "
                     "min_pair_freq=" +
                         std::to_string(config.min_pair_freq));

  ConceptLattice lattice =
      stage("lattice", [&] { return build_lattice(result.context); });
  stage("lattice", [&] {
    emit("lattice.json", json_to_string(lattice_to_json(lattice)));
    emit("lattice.dot", lattice_to_dot(lattice));
    return 0;
  });

  result.taxonomy = stage("taxonomy", [&] { return extract_taxonomy(lattice); });
  stage("taxonomy", [&] {
    emit("taxonomy.json", json_to_string(taxonomy_to_json(result.taxonomy)));
    emit("taxonomy.dot", taxonomy_to_dot(result.taxonomy));
    return 0;
  });

  result.report = stage("segment", [&] {
    return run_segmentation(corpus, result.taxonomy,
                            segmentation_terms(result.taxonomy), config);
  });
  stage("segment", [&] {
    emit("segmentation.json", json_to_string(report_to_json(result.report)));
    return 0;
  });
  return result;
}

}  // namespace cocseg
