#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cocseg/context_io.hpp"
#include "cocseg/pipeline.hpp"

namespace {

using cocseg::PipelineConfig;

struct Flags {
  std::optional<std::string> config_path;
  std::optional<int> min_pair_freq;
  std::optional<int> window;
  std::optional<std::string> term_fraction;
  std::optional<int> k;
  std::optional<int> max_iter;
  std::optional<std::string> min_share;
  std::optional<std::uint32_t> seed;
  std::optional<std::string> out_dir;
  std::optional<std::string> format;
  std::optional<std::string> rename_map;
};

// Config file first, named flags on top.
PipelineConfig effective_config(const Flags& flags) {
  PipelineConfig config;
  if (flags.config_path) config = PipelineConfig::load(*flags.config_path);
  if (flags.min_pair_freq) config.min_pair_freq = *flags.min_pair_freq;
  if (flags.window) config.window = *flags.window;
  if (flags.term_fraction)
    config.term_fraction = cocseg::Rational::parse(*flags.term_fraction);
  if (flags.k) config.k = *flags.k;
  if (flags.max_iter) config.max_iter = *flags.max_iter;
  if (flags.min_share)
    config.min_share = cocseg::Rational::parse(*flags.min_share);
  if (flags.seed) config.seed = *flags.seed;
  if (flags.out_dir) config.out_dir = *flags.out_dir;
  config.validate();
  return config;
}

std::string out_path(const PipelineConfig& config, const std::string& name) {
  std::filesystem::create_directories(config.out_dir);
  return (std::filesystem::path(config.out_dir) / name).string();
}

bool wants(const Flags& flags, const std::string& format) {
  return !flags.format || *flags.format == format;
}

void check_format(const Flags& flags, std::initializer_list<std::string> valid,
                  const std::string& command) {
  if (!flags.format) return;
  for (const auto& v : valid)
    if (*flags.format == v) return;
  throw cocseg::InputError("--format " + *flags.format + " not supported by " +
                           command);
}

std::map<std::string, std::string> read_rename_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cocseg::FormatError("cannot open " + path);
  std::map<std::string, std::string> renames;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw cocseg::FormatError(path + " line " + std::to_string(line_number) +
                                ": expected old<TAB>new");
    renames[line.substr(0, tab)] = line.substr(tab + 1);
  }
  return renames;
}

int run_extract_pairs(const std::string& corpus_path, const Flags& flags) {
  PipelineConfig config = effective_config(flags);
  check_format(flags, {"tsv"}, "extract-pairs");
  auto corpus = cocseg::parse_corpus_file(corpus_path);
  auto pairs = cocseg::extract_pairs(corpus, config.window);
  cocseg::write_pairs_file(pairs, out_path(config, "pairs.tsv"));
  std::cout << "pairs: " << pairs.size() << "\n";
  return 0;
}

int run_build_context(const std::string& corpus_path, const Flags& flags) {
  PipelineConfig config = effective_config(flags);
  check_format(flags, {"cxt", "json"}, "build-context");
  auto corpus = cocseg::parse_corpus_file(corpus_path);
  auto pairs = cocseg::extract_pairs(corpus, config.window);
  auto frequent = cocseg::filter_frequent(pairs, config.min_pair_freq);
  auto context =
      cocseg::build_context(frequent.kept, frequent.nouns, frequent.verbs);
  if (wants(flags, "cxt"))
    cocseg::write_cxt_file(context, out_path(config, "context.cxt"));
  if (wants(flags, "json"))
    cocseg::write_text_file(
        out_path(config, "context.json"),
        cocseg::json_to_string(cocseg::context_to_json(context)));
  std::cout << "objects: " << context.object_count()
            << " attributes: " << context.attribute_count() << "\n";
  return 0;
}

int run_lattice(const std::string& context_path, const Flags& flags) {
  PipelineConfig config = effective_config(flags);
  check_format(flags, {"json", "dot"}, "lattice");
  auto context = cocseg::read_context_file(context_path);
  auto lattice = cocseg::build_lattice(context);
  if (wants(flags, "json"))
    cocseg::write_text_file(
        out_path(config, "lattice.json"),
        cocseg::json_to_string(cocseg::lattice_to_json(lattice)));
  if (wants(flags, "dot"))
    cocseg::write_text_file(out_path(config, "lattice.dot"),
                            cocseg::lattice_to_dot(lattice));
  std::cout << "concepts: " << lattice.concepts.size() << "\n";
  return 0;
}

int run_taxonomy(const std::string& context_path, const Flags& flags) {
  PipelineConfig config = effective_config(flags);
  check_format(flags, {"json", "dot"}, "taxonomy");
  auto context = cocseg::read_context_file(context_path);
  auto taxonomy = cocseg::extract_taxonomy(cocseg::build_lattice(context));
  if (flags.rename_map)
    taxonomy = cocseg::rename_terms(taxonomy, read_rename_map(*flags.rename_map));
  if (wants(flags, "json"))
    cocseg::write_text_file(
        out_path(config, "taxonomy.json"),
        cocseg::json_to_string(cocseg::taxonomy_to_json(taxonomy)));
  if (wants(flags, "dot"))
    cocseg::write_text_file(out_path(config, "taxonomy.dot"),
                            cocseg::taxonomy_to_dot(taxonomy));
  std::cout << "nodes: "
            << taxonomy.verb_terms.size() + taxonomy.noun_terms.size()
            << " edges: " << taxonomy.edges.size() << "\n";
  return 0;
}

int run_segment(const std::string& corpus_path, const std::string& taxonomy_path,
                const Flags& flags) {
  PipelineConfig config = effective_config(flags);
  check_format(flags, {"json"}, "segment");
  auto corpus = cocseg::parse_corpus_file(corpus_path);
  auto taxonomy = cocseg::read_taxonomy_file(taxonomy_path);
  auto report = cocseg::run_segmentation(
      corpus, taxonomy, cocseg::segmentation_terms(taxonomy), config);
  cocseg::write_text_file(
      out_path(config, "segmentation.json"),
      cocseg::json_to_string(cocseg::report_to_json(report)));
  std::cout << "clusters: " << report.clusters.size() << "\n";
  return 0;
}

int run_pipeline_cmd(const std::string& corpus_path, const Flags& flags) {
  PipelineConfig config = effective_config(flags);
  auto result = cocseg::run_pipeline(corpus_path, config);
  for (const auto& path : result.written) std::cout << path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Learn a concept taxonomy from a POS/lemma-annotated corpus and "
      "produce concept-oriented text segmentations"};
  app.require_subcommand(1);

  Flags flags;
  app.add_option("--config", flags.config_path,
                 "key=value config file; explicit flags override it");
  app.add_option("--min-pair-freq", flags.min_pair_freq,
                 "keep verbs/nouns with at least this many pair occurrences");
  app.add_option("--window", flags.window,
                 "token window scanned after a verb for its object");
  app.add_option("--term-fraction", flags.term_fraction,
                 "fraction of concept terms used as features, e.g. 1/2");
  app.add_option("--k", flags.k, "number of sentence clusters");
  app.add_option("--max-iter", flags.max_iter, "k-means iteration cap");
  app.add_option("--min-share", flags.min_share,
                 "in-cluster share a term needs to explain a cluster");
  app.add_option("--seed", flags.seed,
                 "randomize k-means seeding with this seed");
  app.add_option("--out-dir", flags.out_dir, "output directory");
  app.add_option("--format", flags.format, "restrict output format")
      ->check(CLI::IsMember({"json", "cxt", "dot", "tsv"}));

  std::string corpus_path, context_path, taxonomy_path;

  auto* extract = app.add_subcommand(
      "extract-pairs", "extract (verb, object-noun) lemma pairs");
  extract->add_option("corpus", corpus_path, "annotated corpus (TSV)")
      ->required();

  auto* build = app.add_subcommand(
      "build-context", "build the formal context from frequent pairs");
  build->add_option("corpus", corpus_path, "annotated corpus (TSV)")->required();

  auto* lattice = app.add_subcommand("lattice", "build the concept lattice");
  lattice->add_option("context", context_path, "context file (.cxt or .json)")
      ->required();

  auto* taxonomy =
      app.add_subcommand("taxonomy", "derive the quasi-tree taxonomy");
  taxonomy->add_option("context", context_path, "context file (.cxt or .json)")
      ->required();
  taxonomy->add_option("--rename-map", flags.rename_map,
                       "TSV of old<TAB>new node renames");

  auto* segment = app.add_subcommand(
      "segment", "cluster sentences and emit linear segmentations");
  segment->add_option("corpus", corpus_path, "annotated corpus (TSV)")
      ->required();
  segment->add_option("taxonomy", taxonomy_path, "taxonomy JSON")->required();

  auto* pipeline = app.add_subcommand(
      "pipeline", "run every stage and write all artifacts");
  pipeline->add_option("corpus", corpus_path, "annotated corpus (TSV)")
      ->required();

  // shared flags may follow the subcommand; let them reach the parent app
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (extract->parsed()) return run_extract_pairs(corpus_path, flags);
    if (build->parsed()) return run_build_context(corpus_path, flags);
    if (lattice->parsed()) return run_lattice(context_path, flags);
    if (taxonomy->parsed()) return run_taxonomy(context_path, flags);
    if (segment->parsed())
      return run_segment(corpus_path, taxonomy_path, flags);
    if (pipeline->parsed()) return run_pipeline_cmd(corpus_path, flags);
  } catch (const cocseg::StageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const cocseg::Error& e) {
    std::cerr << "error: " << command << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << command << ": " << e.what() << "\n";
    return 1;
  }
  return 1;
}
