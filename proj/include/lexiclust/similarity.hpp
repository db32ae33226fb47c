#ifndef LEXICLUST_SIMILARITY_HPP
#define LEXICLUST_SIMILARITY_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lexiclust/normalize.hpp"
#include "lexiclust/wordnet.hpp"

namespace lexiclust {

/// Weights and caps for the word-similarity measure.
///
/// `sense_weights[i]` weighs the (i+1)-th most frequent sense of a word;
/// `level_weights[d]` weighs a hypernym-level distance of d. The combined
/// word score is  mix * synonym_part + (1 - mix) * hypernym_part.
struct SimilarityParams {
  std::vector<double> sense_weights{0.6, 0.3, 0.1};
  std::vector<double> level_weights{0.5, 0.25, 0.125, 0.0625, 0.03125};
  std::size_t sense_cap = 3;
  std::size_t depth_cap = 5;
  double mix = 0.5;

  /// Throws ValidationError unless: sense_weights strictly positive,
  /// non-increasing, of length sense_cap; level_weights strictly positive,
  /// strictly decreasing, of length depth_cap; 0 <= mix <= 1.
  void validate() const;

  /// Compact single-line encoding used in matrix manifests,
  /// e.g. "r=0.6,0.3,0.1;u=0.5,0.25,0.125,0.0625,0.03125;mix=0.5".
  std::string encode() const;
  static SimilarityParams decode(std::string_view text);

  bool operator==(const SimilarityParams&) const = default;
};

/// The two parts of a word-pair score and their combination.
struct WordSimBreakdown {
  double s_syn = 0.0;
  double s_hyp = 0.0;
  double s_total = 0.0;
};

/// Per-phrase-pair aggregates of the word-pair breakdowns, each already
/// divided by m*n. `total` is the phrase similarity itself (bitwise equal to
/// phrase_similarity); it equals mix * syn_part + (1 - mix) * hyp_part up to
/// rounding only.
struct PhraseSimBreakdown {
  double syn_part = 0.0;
  double hyp_part = 0.0;
  double total = 0.0;
};

/// Synonym-based similarity: sums r_i * r_j over sense pairs whose synsets
/// share a lemma string. Unknown words score 0.
double synonym_similarity(const WordNetDb& db, std::string_view word_a,
                          std::string_view word_b, const SimilarityParams& params);

/// 1 iff the level-l ancestors of `sense_a` intersect the level-f ancestors
/// of `sense_b` (synset-identity intersection). Levels are 1-based.
int level_overlap(const WordNetDb& db, SynsetId sense_a, SynsetId sense_b,
                  std::size_t l, std::size_t f, const SimilarityParams& params);

/// Best level-pair score for one sense pair:
/// max over 1 <= l,f <= depth_cap of level_weights[|l-f|] * overlap(l, f).
double sense_hypernym_similarity(const WordNetDb& db, SynsetId sense_a,
                                 SynsetId sense_b, const SimilarityParams& params);

/// Hypernym-based similarity: sense_hypernym_similarity summed over sense
/// pairs with weights r_i * r_j. Unknown words score 0.
double hypernym_similarity(const WordNetDb& db, std::string_view word_a,
                           std::string_view word_b, const SimilarityParams& params);

/// Combined word similarity. Exactly symmetric in its word arguments.
WordSimBreakdown word_similarity(const WordNetDb& db, std::string_view word_a,
                                 std::string_view word_b,
                                 const SimilarityParams& params);

/// Mean word similarity over all m*n word pairs of the two phrases.
/// Exactly symmetric; throws EmptyPhraseError on an empty phrase.
double phrase_similarity(const WordNetDb& db, const NormalizedPhrase& a,
                         const NormalizedPhrase& b, const SimilarityParams& params);

/// Same computation with the synonym/hypernym parts reported separately.
PhraseSimBreakdown phrase_similarity_breakdown(const WordNetDb& db,
                                               const NormalizedPhrase& a,
                                               const NormalizedPhrase& b,
                                               const SimilarityParams& params);

}  // namespace lexiclust

#endif  // LEXICLUST_SIMILARITY_HPP
