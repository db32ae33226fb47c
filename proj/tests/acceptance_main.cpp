// Acceptance gate: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Criteria 3 and 5-7 need the full WordNet
// noun database (LEXICLUST_WORDNET, else the path resolved at configure
// time); criterion 7 drives the command-line binary (LEXICLUST_CLI, else
// the build-tree binary).
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "lexiclust/cluster.hpp"
#include "lexiclust/matrix.hpp"
#include "lexiclust/normalize.hpp"
#include "lexiclust/reports.hpp"
#include "lexiclust/similarity.hpp"
#include "lexiclust/wordnet.hpp"
#include "oracle.hpp"

using namespace lexiclust;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail) {
  std::cout << "criterion " << index << " " << (ok ? "PASS" : "FAIL") << ": " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.4f", value);
  return buffer;
}

const WordNetDb& mini_db() {
  static const WordNetDb db =
      WordNetDb::load(std::string(LEXICLUST_FIXTURE_DIR) + "/mini_wordnet");
  return db;
}

const std::vector<NormalizedPhrase>& mini_phrases() {
  static const std::vector<NormalizedPhrase> phrases = [] {
    const auto raw =
        read_factors_file(std::string(LEXICLUST_FIXTURE_DIR) + "/phrases6.txt");
    return normalize_corpus(mini_db(), raw).first;
  }();
  return phrases;
}

const char* wordnet_dir() {
  const char* env = std::getenv("LEXICLUST_WORDNET");
  return env != nullptr && *env != '\0' ? env : LEXICLUST_WORDNET_FALLBACK;
}

const WordNetDb* real_db() {
  static const std::optional<WordNetDb> db = []() -> std::optional<WordNetDb> {
    const char* dir = wordnet_dir();
    if (*dir == '\0') return std::nullopt;
    return WordNetDb::load(dir);
  }();
  return db.has_value() ? &*db : nullptr;
}

// The shipped 237-factor corpus, normalized with the shipped lexicon.
std::vector<NormalizedPhrase> corpus_phrases(const WordNetDb& db) {
  const std::string data_dir = LEXICLUST_DATA_DIR;
  const auto raws = read_factors_file(data_dir + "/factors_237.txt");
  const Lexicon lexicon = Lexicon::load(data_dir + "/lexicon_237.tsv");
  return normalize_corpus(db, raws, &lexicon).first;
}

void criterion_1_oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  const SimilarityParams params;
  const WordNetDb& db = mini_db();
  std::size_t mismatches = 0;
  const std::vector<std::string> lemmas = db.all_lemmas();
  for (const std::string& a : lemmas) {
    for (const std::string& b : lemmas) {
      const WordSimBreakdown w = word_similarity(db, a, b, params);
      if (w.s_syn != oracle::syn_score(db, a, b, params) ||
          w.s_hyp != oracle::hyp_score(db, a, b, params) ||
          w.s_total != oracle::word_score(db, a, b, params)) {
        ++mismatches;
      }
    }
  }
  for (const NormalizedPhrase& a : mini_phrases()) {
    for (const NormalizedPhrase& b : mini_phrases()) {
      if (phrase_similarity(db, a, b, params) != oracle::phrase_score(db, a, b, params)) {
        ++mismatches;
      }
    }
  }
  const double elapsed = seconds_since(start);
  report(1, "engine matches brute-force oracle bitwise on the fixture",
         mismatches == 0 && elapsed < 1.0,
         std::to_string(lemmas.size() * lemmas.size()) + " word pairs, " +
             std::to_string(mini_phrases().size() * mini_phrases().size()) +
             " phrase pairs, " + std::to_string(mismatches) + " mismatches, " +
             fmt(elapsed) + " s");
}

void criterion_2_forced_algebra() {
  const SimilarityParams params;
  const WordNetDb& db = mini_db();
  // gamma/delta: single-sense words sharing a lemma spelling.
  const double syn = synonym_similarity(db, "gamma", "delta", params);
  // alpha/beta: common direct hypernym, overlap at level pair (1,1).
  const double hyp = hypernym_similarity(db, "alpha", "beta", params);
  // beta: single-sense self similarity.
  const double self_total = word_similarity(db, "beta", "beta", params).s_total;
  // omni: three senses, all spelled "omni", so the synonym mass is total.
  const double many = synonym_similarity(db, "omni", "omni", params);
  const bool ok = syn == 0.36 && hyp == 0.18 && self_total == 0.27 && many == 1.0;
  report(2, "forced algebra: 0.36 / 0.18 / 0.27 / 1.0 exactly", ok,
         "got " + fmt(syn) + " / " + fmt(hyp) + " / " + fmt(self_total) + " / " +
             fmt(many));
}

void criterion_3_property_suite() {
  const WordNetDb* db = real_db();
  if (db == nullptr) {
    report(3, "similarity and clustering properties", false, "LEXICLUST_WORDNET not set");
    return;
  }
  const SimilarityParams params;
  std::string detail;
  bool ok = true;

  // Bounds and exact symmetry over randomized real phrases.
  const std::vector<std::string> lemmas = db->all_lemmas();
  std::mt19937 rng(474747);
  std::uniform_int_distribution<std::size_t> pick_lemma(0, lemmas.size() - 1);
  std::uniform_int_distribution<int> pick_len(1, 3);
  const auto random_phrase = [&] {
    NormalizedPhrase p;
    const int len = pick_len(rng);
    for (int i = 0; i < len; ++i) p.tokens.push_back(lemmas[pick_lemma(rng)]);
    return p;
  };
  std::size_t bad_pairs = 0;
  for (int i = 0; i < 10000; ++i) {
    const NormalizedPhrase a = random_phrase();
    const NormalizedPhrase b = random_phrase();
    const double ab = phrase_similarity(*db, a, b, params);
    const double ba = phrase_similarity(*db, b, a, params);
    if (!(ab >= 0.0 && ab <= 0.75) || ab != ba) ++bad_pairs;
  }
  if (bad_pairs != 0) {
    ok = false;
    detail += std::to_string(bad_pairs) + " bad random pairs; ";
  }

  // Sweep rows keep min <= avg <= max; clusterings partition the corpus.
  const std::vector<NormalizedPhrase> corpus = corpus_phrases(*db);
  const SimilarityMatrix matrix1 = build_matrix(*db, corpus, params, 1);
  const SweepReport swept = sweep(matrix1, 5, 8);
  for (const SweepRow& row : swept.rows) {
    if (!(row.s_min <= row.s_avg && row.s_avg <= row.s_max)) {
      ok = false;
      detail += "order violated at k=" + std::to_string(row.k) + "; ";
    }
  }
  for (const std::size_t k : {std::size_t{7}, std::size_t{11}}) {
    const ClusteringResult result = cluster(matrix1, k);
    std::set<std::size_t> seen;
    bool partition = result.clusters.size() == k;
    for (const Cluster& c : result.clusters) {
      if (std::find(c.members.begin(), c.members.end(), c.medoid) == c.members.end()) {
        partition = false;
      }
      for (const std::size_t member : c.members) {
        if (!seen.insert(member).second) partition = false;
      }
    }
    if (!partition || seen.size() != matrix1.size()) {
      ok = false;
      detail += "not a medoid partition at k=" + std::to_string(k) + "; ";
    }
  }

  // Worker count must not leak into any byte of the artifacts.
  const SimilarityMatrix matrix8 = build_matrix(*db, corpus, params, 8);
  const auto tmp = std::filesystem::temp_directory_path();
  const auto file1 = tmp / "lexiclust-accept-j1.tsv";
  const auto file8 = tmp / "lexiclust-accept-j8.tsv";
  save_matrix(matrix1, file1);
  save_matrix(matrix8, file8);
  const auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
  };
  const bool same_files = slurp(file1) == slurp(file8);
  std::filesystem::remove(file1);
  std::filesystem::remove(file8);
  const bool same_reports =
      cluster_report_text(matrix1, cluster(matrix1, 11), ReportFormat::kMarkdown) ==
          cluster_report_text(matrix8, cluster(matrix8, 11), ReportFormat::kMarkdown) &&
      sweep_report_text(sweep(matrix1, 5, 8), ReportFormat::kCsv) ==
          sweep_report_text(sweep(matrix8, 5, 8), ReportFormat::kCsv);
  if (!same_files || !same_reports) {
    ok = false;
    detail += "worker count changed the artifacts; ";
  }

  report(3, "bounds, symmetry, sweep order, partition, determinism", ok,
         detail.empty() ? "10000 random pairs clean" : detail);
}

void criterion_4_hand_trace() {
  const SimilarityMatrix matrix = build_matrix(mini_db(), mini_phrases(), {}, 1);
  const ClusteringResult result = cluster(matrix, 2);
  ClusteringResult expected;
  expected.k = 2;
  expected.clusters = {Cluster{1, {1, 5}, 0.12375}, Cluster{3, {0, 2, 3, 4}, 0.1265625}};
  expected.iterations_run = 1;
  expected.converged = true;
  report(4, "k=2 fixture run equals the hand-written trace", result == expected,
         "medoids " + std::to_string(result.clusters.at(0).medoid) + "," +
             std::to_string(result.clusters.at(1).medoid) + ", " +
             std::to_string(result.iterations_run) + " iteration(s)");
}

void criterion_5_normalization_statistic() {
  const WordNetDb* db = real_db();
  if (db == nullptr) {
    report(5, "noun fraction of the 237-factor corpus", false,
           "LEXICLUST_WORDNET not set");
    return;
  }
  const auto start = std::chrono::steady_clock::now();
  const std::string data_dir = LEXICLUST_DATA_DIR;
  const auto raws = read_factors_file(data_dir + "/factors_237.txt");
  const Lexicon lexicon = Lexicon::load(data_dir + "/lexicon_237.tsv");
  const auto [phrases, stats] = normalize_corpus(*db, raws, &lexicon);
  const double elapsed = seconds_since(start);
  const bool ok = stats.noun_fraction >= 0.69 && stats.noun_fraction <= 0.89 &&
                  elapsed < 5.0;
  report(5, "noun fraction of the 237-factor corpus in [0.69, 0.89]", ok,
         "fraction " + fmt(stats.noun_fraction) + ", " +
             std::to_string(stats.failures.size()) + " failures, " + fmt(elapsed) +
             " s");
}

void criterion_6_sweep_shape() {
  const WordNetDb* db = real_db();
  if (db == nullptr) {
    report(6, "sweep shape over k=5..20", false, "LEXICLUST_WORDNET not set");
    return;
  }
  const auto start = std::chrono::steady_clock::now();
  const SimilarityMatrix matrix = build_matrix(*db, corpus_phrases(*db), {}, 1);
  const SweepReport swept = sweep(matrix, 5, 20);
  const double elapsed = seconds_since(start);

  const auto avg_at = [&](std::size_t k) -> double {
    for (const SweepRow& row : swept.rows) {
      if (row.k == k) return row.s_avg;
    }
    return -1.0;
  };
  const double rise = avg_at(10) - avg_at(5);
  double plateau_min = avg_at(12);
  double plateau_max = avg_at(12);
  bool in_bounds = true;
  for (const SweepRow& row : swept.rows) {
    if (!(row.s_avg > 0.0 && row.s_avg < 0.75)) in_bounds = false;
    if (row.k >= 12) {
      plateau_min = std::min(plateau_min, row.s_avg);
      plateau_max = std::max(plateau_max, row.s_avg);
    }
  }
  const double spread = plateau_max - plateau_min;
  const bool ok = elapsed < 600.0 && avg_at(10) > avg_at(5) && spread < rise && in_bounds;
  report(6, "sweep rise then plateau with every average in (0, 0.75)", ok,
         "rise " + fmt(rise) + ", plateau spread " + fmt(spread) + ", " + fmt(elapsed) +
             " s");
  // Reported, not asserted: deviation from the 0.4404 reference average
  // recorded for k=11 on this corpus under a different factor ordering.
  std::cout << "  note: S_kavg(11) = " << fmt(avg_at(11)) << ", deviation from 0.4404 = "
            << fmt(avg_at(11) - 0.4404) << "\n";
}

void criterion_7_end_to_end_cli() {
  const char* env_cli = std::getenv("LEXICLUST_CLI");
  const char* cli = env_cli != nullptr && *env_cli != '\0' ? env_cli : LEXICLUST_CLI_FALLBACK;
  const char* wordnet = wordnet_dir();
  if (*cli == '\0' || !std::filesystem::exists(cli) || *wordnet == '\0') {
    report(7, "cluster --k 11 over the full pipeline", false,
           "LEXICLUST_CLI or LEXICLUST_WORDNET not set");
    return;
  }
  const std::string data_dir = LEXICLUST_DATA_DIR;
  const std::string command = std::string("\"") + cli + "\" cluster --k 11" +
                              " --wordnet-dir \"" + wordnet + "\"" + " --factors \"" +
                              data_dir + "/factors_237.txt\"" + " --lexicon \"" +
                              data_dir + "/lexicon_237.tsv\" 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    report(7, "cluster --k 11 over the full pipeline", false, "cannot start the binary");
    return;
  }
  std::string output;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) output.append(buffer, got);
  const int status = pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

  // Parse the markdown table: data rows are "| i | category | size | ... |".
  std::istringstream lines(output);
  std::string line;
  std::size_t rows = 0;
  std::size_t size_sum = 0;
  bool named = true;
  while (std::getline(lines, line)) {
    if (line.rfind("| ", 0) != 0 || line.rfind("| cluster", 0) == 0 ||
        line.rfind("| ---", 0) == 0 || line.rfind("| total", 0) == 0) {
      continue;
    }
    std::vector<std::string> cells;
    std::size_t pos = 2;
    while (pos < line.size()) {
      const std::size_t end = line.find(" | ", pos);
      if (end == std::string::npos) {
        cells.push_back(line.substr(pos, line.rfind(" |") - pos));
        break;
      }
      cells.push_back(line.substr(pos, end - pos));
      pos = end + 3;
    }
    if (cells.size() < 5) continue;
    ++rows;
    size_sum += std::strtoul(cells[2].c_str(), nullptr, 10);
    // The category is the medoid phrase, so it must be among the members.
    if (("; " + cells[4] + "; ").find("; " + cells[1] + "; ") == std::string::npos) {
      named = false;
    }
  }
  const bool ok = code == 0 && rows == 11 && size_sum == 237 && named;
  report(7, "cluster --k 11 emits 11 medoid-named categories covering all 237", ok,
         "exit " + std::to_string(code) + ", " + std::to_string(rows) + " rows, sizes sum " +
             std::to_string(size_sum) + (named ? "" : ", category not in members"));
}

}  // namespace

int main() {
  try {
    criterion_1_oracle_equivalence();
    criterion_2_forced_algebra();
    criterion_3_property_suite();
    criterion_4_hand_trace();
    criterion_5_normalization_statistic();
    criterion_6_sweep_shape();
    criterion_7_end_to_end_cli();
  } catch (const std::exception& e) {
    std::cout << "unexpected exception: " << e.what() << "\n";
    return 1;
  }
  std::cout << (g_failures == 0 ? "all criteria passed" : "criteria failed") << "\n";
  return g_failures == 0 ? 0 : 1;
}
