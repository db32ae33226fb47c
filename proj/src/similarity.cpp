#include "lexiclust/similarity.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "lexiclust/errors.hpp"
#include "num_format.hpp"

namespace lexiclust {
namespace {

// Scores are symmetric by definition; fixing the operand order before any
// floating-point work makes them symmetric in the bitwise sense too.
void canonicalize(std::string_view& a, std::string_view& b) {
  if (b < a) std::swap(a, b);
}

bool share_lemma(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  for (const std::string& lemma : a) {
    if (std::find(b.begin(), b.end(), lemma) != b.end()) return true;
  }
  return false;
}

bool intersects(const std::vector<SynsetId>& a, const std::vector<SynsetId>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      return true;
    }
  }
  return false;
}

using Levels = std::vector<std::vector<SynsetId>>;

double best_level_pair(const Levels& levels_a, const Levels& levels_b,
                       const SimilarityParams& params) {
  double best = 0.0;
  for (std::size_t l = 1; l <= params.depth_cap; ++l) {
    for (std::size_t f = 1; f <= params.depth_cap; ++f) {
      if (!intersects(levels_a[l - 1], levels_b[f - 1])) continue;
      const std::size_t dep = l > f ? l - f : f - l;
      best = std::max(best, params.level_weights[dep]);
    }
  }
  return best;
}

std::vector<double> parse_weight_list(std::string_view text) {
  std::vector<double> weights;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    weights.push_back(detail::parse_double(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return weights;
}

}  // namespace

void SimilarityParams::validate() const {
  if (sense_cap == 0) throw ValidationError("sense cap must be at least 1");
  if (depth_cap == 0) throw ValidationError("depth cap must be at least 1");
  if (sense_weights.size() != sense_cap) {
    throw ValidationError("need exactly " + std::to_string(sense_cap) + " sense weights");
  }
  if (level_weights.size() != depth_cap) {
    throw ValidationError("need exactly " + std::to_string(depth_cap) + " level weights");
  }
  for (std::size_t i = 0; i < sense_weights.size(); ++i) {
    if (!(sense_weights[i] > 0.0)) throw ValidationError("sense weights must be positive");
    if (i > 0 && sense_weights[i] > sense_weights[i - 1]) {
      throw ValidationError("sense weights must be non-increasing");
    }
  }
  for (std::size_t i = 0; i < level_weights.size(); ++i) {
    if (!(level_weights[i] > 0.0)) throw ValidationError("level weights must be positive");
    if (i > 0 && level_weights[i] >= level_weights[i - 1]) {
      throw ValidationError("level weights must be strictly decreasing");
    }
  }
  if (!(mix >= 0.0 && mix <= 1.0)) throw ValidationError("mix must be in [0, 1]");
}

std::string SimilarityParams::encode() const {
  std::string out = "r=";
  for (std::size_t i = 0; i < sense_weights.size(); ++i) {
    if (i > 0) out += ',';
    out += detail::format_double(sense_weights[i]);
  }
  out += ";u=";
  for (std::size_t i = 0; i < level_weights.size(); ++i) {
    if (i > 0) out += ',';
    out += detail::format_double(level_weights[i]);
  }
  out += ";mix=";
  out += detail::format_double(mix);
  return out;
}

SimilarityParams SimilarityParams::decode(std::string_view text) {
  const std::size_t semi1 = text.find(';');
  const std::size_t semi2 = semi1 == std::string_view::npos
                                ? std::string_view::npos
                                : text.find(';', semi1 + 1);
  if (semi2 == std::string_view::npos) throw FormatError("bad parameter encoding");
  const std::string_view r_part = text.substr(0, semi1);
  const std::string_view u_part = text.substr(semi1 + 1, semi2 - semi1 - 1);
  const std::string_view mix_part = text.substr(semi2 + 1);
  if (!r_part.starts_with("r=") || !u_part.starts_with("u=") ||
      !mix_part.starts_with("mix=")) {
    throw FormatError("bad parameter encoding");
  }
  SimilarityParams params;
  params.sense_weights = parse_weight_list(r_part.substr(2));
  params.level_weights = parse_weight_list(u_part.substr(2));
  params.mix = detail::parse_double(mix_part.substr(4));
  params.sense_cap = params.sense_weights.size();
  params.depth_cap = params.level_weights.size();
  params.validate();
  return params;
}

double synonym_similarity(const WordNetDb& db, std::string_view word_a,
                          std::string_view word_b, const SimilarityParams& params) {
  canonicalize(word_a, word_b);
  const std::vector<SynsetId> senses_a = db.noun_senses(word_a, params.sense_cap);
  const std::vector<SynsetId> senses_b = db.noun_senses(word_b, params.sense_cap);
  double sum = 0.0;
  for (std::size_t i = 0; i < senses_a.size(); ++i) {
    for (std::size_t j = 0; j < senses_b.size(); ++j) {
      if (share_lemma(db.synonyms(senses_a[i]), db.synonyms(senses_b[j]))) {
        sum += params.sense_weights[i] * params.sense_weights[j];
      }
    }
  }
  return sum;
}

int level_overlap(const WordNetDb& db, SynsetId sense_a, SynsetId sense_b,
                  std::size_t l, std::size_t f, const SimilarityParams& params) {
  if (l < 1 || l > params.depth_cap || f < 1 || f > params.depth_cap) {
    throw ValidationError("level out of range");
  }
  const Levels levels_a = db.hypernym_levels(sense_a, params.depth_cap);
  const Levels levels_b = db.hypernym_levels(sense_b, params.depth_cap);
  return intersects(levels_a[l - 1], levels_b[f - 1]) ? 1 : 0;
}

double sense_hypernym_similarity(const WordNetDb& db, SynsetId sense_a, SynsetId sense_b,
                                 const SimilarityParams& params) {
  const Levels levels_a = db.hypernym_levels(sense_a, params.depth_cap);
  const Levels levels_b = db.hypernym_levels(sense_b, params.depth_cap);
  return best_level_pair(levels_a, levels_b, params);
}

double hypernym_similarity(const WordNetDb& db, std::string_view word_a,
                           std::string_view word_b, const SimilarityParams& params) {
  canonicalize(word_a, word_b);
  const std::vector<SynsetId> senses_a = db.noun_senses(word_a, params.sense_cap);
  const std::vector<SynsetId> senses_b = db.noun_senses(word_b, params.sense_cap);
  std::vector<Levels> levels_a;
  levels_a.reserve(senses_a.size());
  for (const SynsetId s : senses_a) levels_a.push_back(db.hypernym_levels(s, params.depth_cap));
  std::vector<Levels> levels_b;
  levels_b.reserve(senses_b.size());
  for (const SynsetId s : senses_b) levels_b.push_back(db.hypernym_levels(s, params.depth_cap));
  double sum = 0.0;
  for (std::size_t i = 0; i < senses_a.size(); ++i) {
    for (std::size_t j = 0; j < senses_b.size(); ++j) {
      sum += params.sense_weights[i] * params.sense_weights[j] *
             best_level_pair(levels_a[i], levels_b[j], params);
    }
  }
  return sum;
}

WordSimBreakdown word_similarity(const WordNetDb& db, std::string_view word_a,
                                 std::string_view word_b, const SimilarityParams& params) {
  WordSimBreakdown out;
  out.s_syn = synonym_similarity(db, word_a, word_b, params);
  out.s_hyp = hypernym_similarity(db, word_a, word_b, params);
  out.s_total = params.mix * out.s_syn + (1.0 - params.mix) * out.s_hyp;
  return out;
}

namespace {

PhraseSimBreakdown phrase_breakdown_impl(const WordNetDb& db, const NormalizedPhrase& a,
                                         const NormalizedPhrase& b,
                                         const SimilarityParams& params) {
  if (a.tokens.empty() || b.tokens.empty()) {
    throw EmptyPhraseError("phrase similarity needs nonempty phrases");
  }
  const NormalizedPhrase* first = &a;
  const NormalizedPhrase* second = &b;
  if (second->tokens < first->tokens) std::swap(first, second);
  double syn_sum = 0.0;
  double hyp_sum = 0.0;
  double total_sum = 0.0;
  for (const std::string& wa : first->tokens) {
    for (const std::string& wb : second->tokens) {
      const WordSimBreakdown w = word_similarity(db, wa, wb, params);
      syn_sum += w.s_syn;
      hyp_sum += w.s_hyp;
      total_sum += w.s_total;
    }
  }
  const double pairs = static_cast<double>(first->tokens.size() * second->tokens.size());
  PhraseSimBreakdown out;
  out.syn_part = syn_sum / pairs;
  out.hyp_part = hyp_sum / pairs;
  out.total = total_sum / pairs;
  return out;
}

}  // namespace

double phrase_similarity(const WordNetDb& db, const NormalizedPhrase& a,
                         const NormalizedPhrase& b, const SimilarityParams& params) {
  return phrase_breakdown_impl(db, a, b, params).total;
}

PhraseSimBreakdown phrase_similarity_breakdown(const WordNetDb& db,
                                               const NormalizedPhrase& a,
                                               const NormalizedPhrase& b,
                                               const SimilarityParams& params) {
  return phrase_breakdown_impl(db, a, b, params);
}

}  // namespace lexiclust
