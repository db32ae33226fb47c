#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "lexiclust/cluster.hpp"
#include "lexiclust/errors.hpp"
#include "lexiclust/matrix.hpp"
#include "lexiclust/normalize.hpp"
#include "lexiclust/reports.hpp"
#include "lexiclust/similarity.hpp"
#include "lexiclust/wordnet.hpp"

namespace py = pybind11;
using namespace lexiclust;

PYBIND11_MODULE(_core, m) {
  m.doc() = "WordNet-based phrase similarity and taxonomy clustering";

  py::register_exception<Error>(m, "LexiclustError", PyExc_RuntimeError);

  py::class_<Synset>(m, "Synset")
      .def_readonly("id", &Synset::id)
      .def_readonly("lemmas", &Synset::lemmas)
      .def_readonly("hypernyms", &Synset::hypernyms);

  py::class_<WordNetDb>(m, "WordNetDb")
      .def_static(
          "load",
          [](const std::filesystem::path& dir, bool include_instance_hypernyms) {
            return WordNetDb::load(dir, LoadOptions{include_instance_hypernyms});
          },
          py::arg("dir"), py::arg("include_instance_hypernyms") = true)
      .def("has_lemma", &WordNetDb::has_lemma)
      .def("noun_senses", &WordNetDb::noun_senses, py::arg("lemma"), py::arg("cap"))
      .def("synonyms", &WordNetDb::synonyms)
      .def("hypernym_levels", &WordNetDb::hypernym_levels, py::arg("sense"),
           py::arg("depth"))
      .def("synset", &WordNetDb::synset)
      .def("has_synset", &WordNetDb::has_synset)
      .def("version", &WordNetDb::version)
      .def("lemma_count", &WordNetDb::lemma_count)
      .def("synset_count", &WordNetDb::synset_count);

  py::class_<Lexicon>(m, "Lexicon")
      .def(py::init<>())
      .def_static("load", &Lexicon::load)
      .def("add", &Lexicon::add)
      .def("find",
           [](const Lexicon& self, const std::string& surface) -> std::optional<std::string> {
             const std::string* hit = self.find(surface);
             if (hit == nullptr) return std::nullopt;
             return *hit;
           })
      .def("__len__", &Lexicon::size);

  py::class_<NormalizedPhrase>(m, "NormalizedPhrase")
      .def(py::init([](std::string raw, std::vector<std::string> tokens,
                       std::vector<std::string> dropped) {
             return NormalizedPhrase{std::move(raw), std::move(tokens), std::move(dropped)};
           }),
           py::arg("raw"), py::arg("tokens"), py::arg("dropped") = std::vector<std::string>{})
      .def_readonly("raw", &NormalizedPhrase::raw)
      .def_readonly("tokens", &NormalizedPhrase::tokens)
      .def_readonly("dropped", &NormalizedPhrase::dropped)
      .def("__eq__", [](const NormalizedPhrase& a, const NormalizedPhrase& b) { return a == b; });

  py::class_<NormalizationReport>(m, "NormalizationReport")
      .def_readonly("phrase_count", &NormalizationReport::phrase_count)
      .def_readonly("total_word_count", &NormalizationReport::total_word_count)
      .def_readonly("noun_word_count", &NormalizationReport::noun_word_count)
      .def_readonly("noun_fraction", &NormalizationReport::noun_fraction)
      .def_readonly("failures", &NormalizationReport::failures);

  m.def("tokenize", &tokenize);
  m.def(
      "to_noun",
      [](const WordNetDb& db, const std::string& token, const Lexicon* lexicon) {
        return to_noun(db, token, lexicon);
      },
      py::arg("db"), py::arg("token"), py::arg("lexicon") = nullptr);
  m.def(
      "normalize_phrase",
      [](const WordNetDb& db, const std::string& raw, const Lexicon* lexicon) {
        return normalize_phrase(db, raw, lexicon);
      },
      py::arg("db"), py::arg("raw"), py::arg("lexicon") = nullptr);
  m.def(
      "normalize_corpus",
      [](const WordNetDb& db, const std::vector<std::string>& raw, const Lexicon* lexicon) {
        return normalize_corpus(db, raw, lexicon);
      },
      py::arg("db"), py::arg("raw_phrases"), py::arg("lexicon") = nullptr);
  m.def("read_factors_file", &read_factors_file);

  py::class_<SimilarityParams>(m, "SimilarityParams")
      .def(py::init<>())
      .def_readwrite("sense_weights", &SimilarityParams::sense_weights)
      .def_readwrite("level_weights", &SimilarityParams::level_weights)
      .def_readwrite("sense_cap", &SimilarityParams::sense_cap)
      .def_readwrite("depth_cap", &SimilarityParams::depth_cap)
      .def_readwrite("mix", &SimilarityParams::mix)
      .def("validate", &SimilarityParams::validate)
      .def("encode", &SimilarityParams::encode)
      .def_static("decode", &SimilarityParams::decode)
      .def("__eq__",
           [](const SimilarityParams& a, const SimilarityParams& b) { return a == b; });

  py::class_<WordSimBreakdown>(m, "WordSimBreakdown")
      .def_readonly("s_syn", &WordSimBreakdown::s_syn)
      .def_readonly("s_hyp", &WordSimBreakdown::s_hyp)
      .def_readonly("s_total", &WordSimBreakdown::s_total);

  py::class_<PhraseSimBreakdown>(m, "PhraseSimBreakdown")
      .def_readonly("syn_part", &PhraseSimBreakdown::syn_part)
      .def_readonly("hyp_part", &PhraseSimBreakdown::hyp_part)
      .def_readonly("total", &PhraseSimBreakdown::total);

  m.def("synonym_similarity", &synonym_similarity);
  m.def("level_overlap", &level_overlap);
  m.def("sense_hypernym_similarity", &sense_hypernym_similarity);
  m.def("hypernym_similarity", &hypernym_similarity);
  m.def("word_similarity", &word_similarity);
  m.def("phrase_similarity", &phrase_similarity);
  m.def("phrase_similarity_breakdown", &phrase_similarity_breakdown);

  py::class_<SimilarityMatrix>(m, "SimilarityMatrix")
      .def("__len__", &SimilarityMatrix::size)
      .def("at", &SimilarityMatrix::at, py::arg("i"), py::arg("j"))
      .def("phrases", &SimilarityMatrix::phrases)
      .def("manifest", &SimilarityMatrix::manifest)
      .def("__eq__",
           [](const SimilarityMatrix& a, const SimilarityMatrix& b) { return a == b; });

  m.def("dataset_digest", [](const std::vector<NormalizedPhrase>& phrases) {
    return dataset_digest(phrases);
  });
  m.def("build_matrix", &build_matrix, py::arg("db"), py::arg("phrases"), py::arg("params"),
        py::arg("jobs") = 1);
  m.def("save_matrix", &save_matrix);
  m.def("load_matrix", &load_matrix);

  py::class_<Cluster>(m, "Cluster")
      .def_readonly("medoid", &Cluster::medoid)
      .def_readonly("members", &Cluster::members)
      .def_readonly("quality", &Cluster::quality);

  py::class_<ClusteringResult>(m, "ClusteringResult")
      .def_readonly("k", &ClusteringResult::k)
      .def_readonly("clusters", &ClusteringResult::clusters)
      .def_readonly("iterations_run", &ClusteringResult::iterations_run)
      .def_readonly("converged", &ClusteringResult::converged);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("k", &SweepRow::k)
      .def_readonly("s_max", &SweepRow::s_max)
      .def_readonly("s_min", &SweepRow::s_min)
      .def_readonly("s_avg", &SweepRow::s_avg)
      .def_readonly("converged", &SweepRow::converged);

  py::class_<SweepReport>(m, "SweepReport").def_readonly("rows", &SweepReport::rows);

  m.def("initial_medoids", &initial_medoids);
  m.def("assign", &assign);
  m.def("update_medoids", &update_medoids);
  m.def("cluster_similarity", &cluster_similarity);
  m.def("cluster", &cluster, py::arg("matrix"), py::arg("k"),
        py::arg("max_iter") = kDefaultMaxIter, py::arg("threshold") = kDefaultThreshold);
  m.def("quality_indices", &quality_indices);
  m.def("sweep", &sweep, py::arg("matrix"), py::arg("k_min"), py::arg("k_max"),
        py::arg("max_iter") = kDefaultMaxIter, py::arg("threshold") = kDefaultThreshold);
  m.def("suggest_k", &suggest_k, py::arg("report"), py::arg("epsilon") = 0.02);

  py::enum_<ReportFormat>(m, "ReportFormat")
      .value("markdown", ReportFormat::kMarkdown)
      .value("csv", ReportFormat::kCsv);

  m.def("normalization_report_text", &normalization_report_text);
  m.def("cluster_report_text", &cluster_report_text);
  m.def("sweep_report_text", &sweep_report_text, py::arg("report"), py::arg("format"),
        py::arg("epsilon") = 0.02);
}
