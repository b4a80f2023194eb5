"""Concept-lattice taxonomy learning and concept-oriented text segmentation.

The heavy lifting lives in the compiled `_core` extension; this package
re-exports its public surface.
"""

from cocseg._core import (  # noqa: F401
    AnnotatedCorpus,
    CocsegError,
    ConceptLattice,
    FormalConcept,
    FormalContext,
    PipelineConfig,
    Taxonomy,
    build_context,
    build_lattice,
    clarify,
    cluster_to_segmentation,
    concept_leq,
    context_json,
    cosine_similarity,
    derive_attrs,
    derive_objs,
    direct_descendants,
    enumerate_concepts,
    extract_pairs,
    extract_taxonomy,
    filter_frequent,
    is_clarified,
    is_concept,
    is_reducible_attribute,
    is_reducible_object,
    kmeans,
    lattice_dot,
    lattice_json,
    parse_corpus,
    parse_corpus_text,
    read_context,
    read_cxt,
    read_taxonomy,
    reduce,
    rename_terms,
    root_to_leaf_paths,
    run_pipeline,
    segment_report_json,
    segmentation_terms,
    taxonomy_dot,
    taxonomy_json,
    write_cxt,
)

__version__ = "0.1.0"
