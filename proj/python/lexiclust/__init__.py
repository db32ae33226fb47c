"""WordNet-based phrase similarity and taxonomy clustering."""

from ._core import (
    Cluster,
    ClusteringResult,
    Lexicon,
    LexiclustError,
    NormalizationReport,
    NormalizedPhrase,
    PhraseSimBreakdown,
    ReportFormat,
    SimilarityMatrix,
    SimilarityParams,
    SweepReport,
    SweepRow,
    Synset,
    WordNetDb,
    WordSimBreakdown,
    assign,
    build_matrix,
    cluster,
    cluster_report_text,
    cluster_similarity,
    dataset_digest,
    hypernym_similarity,
    initial_medoids,
    level_overlap,
    load_matrix,
    normalization_report_text,
    normalize_corpus,
    normalize_phrase,
    phrase_similarity,
    phrase_similarity_breakdown,
    quality_indices,
    read_factors_file,
    save_matrix,
    sense_hypernym_similarity,
    suggest_k,
    sweep,
    sweep_report_text,
    synonym_similarity,
    to_noun,
    tokenize,
    update_medoids,
    word_similarity,
)

__all__ = [name for name in dir() if not name.startswith("_")]
