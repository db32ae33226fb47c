#include "oracle.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace oracle {
namespace {

using lexiclust::NormalizedPhrase;
using lexiclust::SimilarityParams;
using lexiclust::SynsetId;
using lexiclust::WordNetDb;

std::vector<SynsetId> capped_senses(const WordNetDb& db, const std::string& word,
                                    std::size_t cap) {
  const lexiclust::LemmaEntry* entry = db.find_lemma(word);
  if (entry == nullptr) return {};
  std::vector<SynsetId> senses;
  for (std::size_t i = 0; i < entry->senses.size() && i < cap; ++i) {
    senses.push_back(entry->senses[i]);
  }
  return senses;
}

bool any_common_lemma(const WordNetDb& db, SynsetId a, SynsetId b) {
  for (const std::string& la : db.synset(a).lemmas) {
    for (const std::string& lb : db.synset(b).lemmas) {
      if (la == lb) return true;
    }
  }
  return false;
}

// Ancestor sets per level, rebuilt from the raw hypernym edges.
std::vector<std::vector<SynsetId>> ancestor_levels(const WordNetDb& db, SynsetId sense,
                                                   std::size_t depth) {
  std::vector<std::vector<SynsetId>> levels(depth);
  std::vector<SynsetId> frontier{sense};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<SynsetId> next;
    for (const SynsetId id : frontier) {
      for (const SynsetId parent : db.synset(id).hypernyms) {
        if (std::find(next.begin(), next.end(), parent) == next.end()) {
          next.push_back(parent);
        }
      }
    }
    std::sort(next.begin(), next.end());
    levels[d] = next;
    frontier = std::move(next);
  }
  return levels;
}

bool any_common_id(const std::vector<SynsetId>& a, const std::vector<SynsetId>& b) {
  for (const SynsetId x : a) {
    for (const SynsetId y : b) {
      if (x == y) return true;
    }
  }
  return false;
}

double best_pair_weight(const WordNetDb& db, SynsetId sa, SynsetId sb,
                        const SimilarityParams& params) {
  const auto levels_a = ancestor_levels(db, sa, params.depth_cap);
  const auto levels_b = ancestor_levels(db, sb, params.depth_cap);
  double best = 0.0;
  for (std::size_t l = 1; l <= params.depth_cap; ++l) {
    for (std::size_t f = 1; f <= params.depth_cap; ++f) {
      if (!any_common_id(levels_a[l - 1], levels_b[f - 1])) continue;
      const std::size_t distance = l > f ? l - f : f - l;
      const double weight = params.level_weights[distance];
      if (weight > best) best = weight;
    }
  }
  return best;
}

}  // namespace

double syn_score(const WordNetDb& db, std::string a, std::string b,
                 const SimilarityParams& params) {
  if (b < a) std::swap(a, b);
  const std::vector<SynsetId> senses_a = capped_senses(db, a, params.sense_cap);
  const std::vector<SynsetId> senses_b = capped_senses(db, b, params.sense_cap);
  double sum = 0.0;
  for (std::size_t i = 0; i < senses_a.size(); ++i) {
    for (std::size_t j = 0; j < senses_b.size(); ++j) {
      if (any_common_lemma(db, senses_a[i], senses_b[j])) {
        sum += params.sense_weights[i] * params.sense_weights[j];
      }
    }
  }
  return sum;
}

double hyp_score(const WordNetDb& db, std::string a, std::string b,
                 const SimilarityParams& params) {
  if (b < a) std::swap(a, b);
  const std::vector<SynsetId> senses_a = capped_senses(db, a, params.sense_cap);
  const std::vector<SynsetId> senses_b = capped_senses(db, b, params.sense_cap);
  double sum = 0.0;
  for (std::size_t i = 0; i < senses_a.size(); ++i) {
    for (std::size_t j = 0; j < senses_b.size(); ++j) {
      sum += params.sense_weights[i] * params.sense_weights[j] *
             best_pair_weight(db, senses_a[i], senses_b[j], params);
    }
  }
  return sum;
}

double word_score(const WordNetDb& db, std::string a, std::string b,
                  const SimilarityParams& params) {
  return params.mix * syn_score(db, a, b, params) +
         (1.0 - params.mix) * hyp_score(db, a, b, params);
}

double phrase_score(const WordNetDb& db, const NormalizedPhrase& a,
                    const NormalizedPhrase& b, const SimilarityParams& params) {
  const NormalizedPhrase* first = &a;
  const NormalizedPhrase* second = &b;
  if (second->tokens < first->tokens) std::swap(first, second);
  double sum = 0.0;
  for (const std::string& wa : first->tokens) {
    for (const std::string& wb : second->tokens) {
      sum += word_score(db, wa, wb, params);
    }
  }
  return sum / static_cast<double>(first->tokens.size() * second->tokens.size());
}

}  // namespace oracle
