#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cocseg/context_io.hpp"
#include "cocseg/pipeline.hpp"

namespace py = pybind11;

namespace {

std::string pos_name(cocseg::Pos pos) { return cocseg::pos_to_string(pos); }

py::list corpus_sentence(const cocseg::AnnotatedCorpus& corpus, int index) {
  py::list tokens;
  for (const auto& token : corpus.sentence(index))
    tokens.append(py::make_tuple(token.surface, token.lemma,
                                 pos_name(token.pos)));
  return tokens;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Concept-lattice taxonomy learning and concept-oriented text "
      "segmentation";

  py::register_exception<cocseg::Error>(m, "CocsegError", PyExc_ValueError);

  // --- formal contexts and lattices ---------------------------------------
  py::class_<cocseg::FormalContext>(m, "FormalContext")
      .def(py::init([](std::vector<std::string> objects,
                       std::vector<std::string> attributes,
                       std::vector<std::vector<bool>> incidence) {
             return cocseg::FormalContext::create(
                 std::move(objects), std::move(attributes), std::move(incidence));
           }),
           py::arg("objects"), py::arg("attributes"), py::arg("incidence"))
      .def_readonly("objects", &cocseg::FormalContext::objects)
      .def_readonly("attributes", &cocseg::FormalContext::attributes)
      .def_readonly("incidence", &cocseg::FormalContext::incidence)
      .def("object_index", &cocseg::FormalContext::object_index)
      .def("attribute_index", &cocseg::FormalContext::attribute_index)
      .def("__repr__", [](const cocseg::FormalContext& ctx) {
        return "<FormalContext " + std::to_string(ctx.object_count()) + "x" +
               std::to_string(ctx.attribute_count()) + ">";
      });

  py::class_<cocseg::FormalConcept>(m, "FormalConcept")
      .def_readonly("extent", &cocseg::FormalConcept::extent)
      .def_readonly("intent", &cocseg::FormalConcept::intent)
      .def("__eq__", [](const cocseg::FormalConcept& a,
                        const cocseg::FormalConcept& b) { return a == b; });

  py::class_<cocseg::ConceptLattice>(m, "ConceptLattice")
      .def_readonly("context", &cocseg::ConceptLattice::context)
      .def_readonly("concepts", &cocseg::ConceptLattice::concepts)
      .def_readonly("covers", &cocseg::ConceptLattice::covers)
      .def_readonly("top", &cocseg::ConceptLattice::top)
      .def_readonly("bottom", &cocseg::ConceptLattice::bottom)
      .def_readonly("introduced_objects",
                    &cocseg::ConceptLattice::introduced_objects)
      .def_readonly("introduced_attributes",
                    &cocseg::ConceptLattice::introduced_attributes);

  m.def("derive_attrs", &cocseg::derive_attrs, py::arg("context"),
        py::arg("object_set"));
  m.def("derive_objs", &cocseg::derive_objs, py::arg("context"),
        py::arg("attribute_set"));
  m.def("is_concept", &cocseg::is_concept, py::arg("context"),
        py::arg("extent"), py::arg("intent"));
  m.def("enumerate_concepts", &cocseg::enumerate_concepts, py::arg("context"));
  m.def("concept_leq", &cocseg::concept_leq);
  m.def("build_lattice", &cocseg::build_lattice, py::arg("context"));
  m.def("is_clarified", &cocseg::is_clarified);
  m.def("clarify", [](const cocseg::FormalContext& ctx) {
    cocseg::ClarifyReport report;
    auto clarified = cocseg::clarify(ctx, &report);
    py::dict merges;
    py::list object_merges, attribute_merges;
    for (const auto& group : report.object_merges)
      object_merges.append(py::make_tuple(group.merged_name, group.members));
    for (const auto& group : report.attribute_merges)
      attribute_merges.append(py::make_tuple(group.merged_name, group.members));
    merges["objects"] = object_merges;
    merges["attributes"] = attribute_merges;
    return py::make_tuple(clarified, merges);
  });
  m.def("is_reducible_attribute", [](const cocseg::FormalContext& ctx, int m_) {
    auto result = cocseg::is_reducible_attribute(ctx, m_);
    return py::make_tuple(result.reducible, result.witness);
  });
  m.def("is_reducible_object", [](const cocseg::FormalContext& ctx, int g) {
    auto result = cocseg::is_reducible_object(ctx, g);
    return py::make_tuple(result.reducible, result.witness);
  });
  m.def("reduce", &cocseg::reduce, py::arg("context"));

  m.def("read_cxt", &cocseg::read_cxt_file, py::arg("path"));
  m.def("write_cxt", &cocseg::write_cxt_file, py::arg("context"),
        py::arg("path"));
  m.def("read_context", &cocseg::read_context_file, py::arg("path"));
  m.def("context_json", [](const cocseg::FormalContext& ctx) {
    return cocseg::json_to_string(cocseg::context_to_json(ctx));
  });
  m.def("lattice_json", [](const cocseg::ConceptLattice& lattice) {
    return cocseg::json_to_string(cocseg::lattice_to_json(lattice));
  });
  m.def("lattice_dot", &cocseg::lattice_to_dot);

  // --- taxonomy ------------------------------------------------------------
  py::class_<cocseg::Taxonomy>(m, "Taxonomy")
      .def_readonly("verbs", &cocseg::Taxonomy::verb_terms)
      .def_readonly("nouns", &cocseg::Taxonomy::noun_terms)
      .def_readonly("root", &cocseg::Taxonomy::root)
      .def_readonly("synthetic_root", &cocseg::Taxonomy::synthetic_root)
      .def_property_readonly("edges",
                             [](const cocseg::Taxonomy& t) {
                               py::list edges;
                               for (const auto& edge : t.edges)
                                 edges.append(
                                     py::make_tuple(edge.parent, edge.child));
                               return edges;
                             })
      .def("has_node", &cocseg::Taxonomy::has_node);

  m.def("extract_taxonomy", &cocseg::extract_taxonomy, py::arg("lattice"));
  m.def("direct_descendants", &cocseg::direct_descendants, py::arg("taxonomy"),
        py::arg("term"));
  m.def("root_to_leaf_paths", &cocseg::root_to_leaf_paths, py::arg("taxonomy"));
  m.def("rename_terms", &cocseg::rename_terms, py::arg("taxonomy"),
        py::arg("renames"));
  m.def("taxonomy_json", [](const cocseg::Taxonomy& taxonomy) {
    return cocseg::json_to_string(cocseg::taxonomy_to_json(taxonomy));
  });
  m.def("taxonomy_dot", &cocseg::taxonomy_to_dot);
  m.def("read_taxonomy", &cocseg::read_taxonomy_file, py::arg("path"));

  // --- annotated corpus ----------------------------------------------------
  py::class_<cocseg::AnnotatedCorpus>(m, "AnnotatedCorpus")
      .def_property_readonly("sentence_count",
                             &cocseg::AnnotatedCorpus::sentence_count)
      .def("sentence", &corpus_sentence, py::arg("index_1based"));

  m.def("parse_corpus", &cocseg::parse_corpus_file, py::arg("path"));
  m.def("parse_corpus_text", &cocseg::parse_corpus_text, py::arg("text"));
  m.def(
      "extract_pairs",
      [](const cocseg::AnnotatedCorpus& corpus, int window) {
        py::list out;
        for (const auto& pair : cocseg::extract_pairs(corpus, window))
          out.append(py::make_tuple(pair.verb_lemma, pair.noun_lemma,
                                    pair.sentence_index));
        return out;
      },
      py::arg("corpus"), py::arg("window") = 5);
  m.def(
      "filter_frequent",
      [](const std::vector<std::tuple<std::string, std::string, int>>& raw,
         int min_freq) {
        std::vector<cocseg::VerbNounPair> pairs;
        for (const auto& [verb, noun, sentence] : raw)
          pairs.push_back({verb, noun, sentence});
        auto frequent = cocseg::filter_frequent(pairs, min_freq);
        py::list kept;
        for (const auto& pair : frequent.kept)
          kept.append(py::make_tuple(pair.verb_lemma, pair.noun_lemma,
                                     pair.sentence_index));
        return py::make_tuple(frequent.verbs, frequent.nouns, kept);
      },
      py::arg("pairs"), py::arg("min_freq") = 2);
  m.def(
      "build_context",
      [](const std::vector<std::tuple<std::string, std::string, int>>& raw,
         const std::vector<std::string>& nouns,
         const std::vector<std::string>& verbs) {
        std::vector<cocseg::VerbNounPair> pairs;
        for (const auto& [verb, noun, sentence] : raw)
          pairs.push_back({verb, noun, sentence});
        return cocseg::build_context(pairs, nouns, verbs);
      },
      py::arg("kept_pairs"), py::arg("nouns"), py::arg("verbs"));

  // --- segmentation ----------------------------------------------------
  py::class_<cocseg::PipelineConfig>(m, "PipelineConfig")
      .def(py::init<>())
      .def_readwrite("min_pair_freq", &cocseg::PipelineConfig::min_pair_freq)
      .def_readwrite("window", &cocseg::PipelineConfig::window)
      .def_readwrite("k", &cocseg::PipelineConfig::k)
      .def_readwrite("max_iter", &cocseg::PipelineConfig::max_iter)
      .def_readwrite("seed", &cocseg::PipelineConfig::seed)
      .def_readwrite("out_dir", &cocseg::PipelineConfig::out_dir)
      .def_property(
          "term_fraction",
          [](const cocseg::PipelineConfig& c) { return c.term_fraction.str(); },
          [](cocseg::PipelineConfig& c, const std::string& value) {
            c.term_fraction = cocseg::Rational::parse(value);
          })
      .def_property(
          "min_share",
          [](const cocseg::PipelineConfig& c) { return c.min_share.str(); },
          [](cocseg::PipelineConfig& c, const std::string& value) {
            c.min_share = cocseg::Rational::parse(value);
          });

  m.def("cosine_similarity", &cocseg::cosine_similarity, py::arg("u"),
        py::arg("v"));
  m.def(
      "kmeans",
      [](const std::vector<std::vector<double>>& rows, int k, int max_iter,
         std::optional<std::uint32_t> seed) {
        std::vector<cocseg::SentenceVector> vectors;
        for (size_t i = 0; i < rows.size(); ++i)
          vectors.push_back({static_cast<int>(i) + 1, rows[i]});
        cocseg::KMeansOptions options;
        options.max_iter = max_iter;
        options.seed = seed;
        auto result = cocseg::kmeans(vectors, k, options);
        py::dict out;
        out["clusters"] = result.clusters;
        out["centroids"] = result.centroids;
        out["iterations"] = result.iterations;
        out["excluded"] = result.excluded;
        return out;
      },
      py::arg("vectors"), py::arg("k"), py::arg("max_iter") = 100,
      py::arg("seed") = std::nullopt);
  m.def(
      "cluster_to_segmentation",
      [](const std::vector<int>& cluster, int n) {
        py::list out;
        for (const auto& segment :
             cocseg::cluster_to_segmentation(cluster, n).segments)
          out.append(py::make_tuple(segment.start, segment.end));
        return out;
      },
      py::arg("cluster"), py::arg("n"));
  m.def("segmentation_terms", &cocseg::segmentation_terms, py::arg("taxonomy"));
  m.def(
      "segment_report_json",
      [](const cocseg::AnnotatedCorpus& corpus, const cocseg::Taxonomy& taxonomy,
         const cocseg::PipelineConfig& config) {
        auto report = cocseg::run_segmentation(
            corpus, taxonomy, cocseg::segmentation_terms(taxonomy), config);
        return cocseg::json_to_string(cocseg::report_to_json(report));
      },
      py::arg("corpus"), py::arg("taxonomy"), py::arg("config"));
  m.def(
      "run_pipeline",
      [](const std::string& corpus_path, const cocseg::PipelineConfig& config) {
        return cocseg::run_pipeline(corpus_path, config).written;
      },
      py::arg("corpus_path"), py::arg("config"));
}
