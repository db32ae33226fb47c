#ifndef LEXICLUST_NORMALIZE_HPP
#define LEXICLUST_NORMALIZE_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lexiclust/wordnet.hpp"

namespace lexiclust {

/// A raw factor string reduced to its noun content.
struct NormalizedPhrase {
  std::string raw;
  std::vector<std::string> tokens;   // singular noun lemmas, surface order
  std::vector<std::string> dropped;  // tokens with no noun form, surface order

  bool operator==(const NormalizedPhrase&) const = default;
};

/// Aggregate statistics over one normalization pass.
struct NormalizationReport {
  std::size_t phrase_count = 0;      // phrases that normalized successfully
  std::size_t total_word_count = 0;  // tokens over all input phrases
  std::size_t noun_word_count = 0;   // tokens that resolved to a noun
  double noun_fraction = 0.0;        // noun_word_count / total_word_count
  std::vector<std::pair<std::size_t, std::string>> failures;  // (input index, raw)
};

/// User-curated surface -> noun_lemma overrides, consulted before any
/// dictionary lookup. Loaded from a two-column TSV ("#" comments allowed).
class Lexicon {
 public:
  Lexicon() = default;
  static Lexicon load(const std::filesystem::path& path);

  void add(std::string surface, std::string lemma);
  const std::string* find(std::string_view surface) const;
  std::size_t size() const { return map_.size(); }

 private:
  std::unordered_map<std::string, std::string> map_;
};

/// Splits on whitespace and hyphens, lowercases, strips surrounding
/// punctuation (internal apostrophes kept), elides empty tokens.
/// Throws EmptyPhraseError when nothing survives.
std::vector<std::string> tokenize(std::string_view raw);

/// Resolves one lowercase token to a singular noun lemma, trying in order:
/// lexicon override, the token itself, the noun.exc exception list, then the
/// morphy suffix-detachment rules. No result means "drop this token".
std::optional<std::string> to_noun(const WordNetDb& db, std::string_view token,
                                   const Lexicon* lexicon = nullptr);

/// Normalizes a whole factor string. Throws EmptyPhraseError when no token
/// has a noun form.
NormalizedPhrase normalize_phrase(const WordNetDb& db, std::string_view raw,
                                  const Lexicon* lexicon = nullptr);

/// Normalizes a corpus in order. Phrases that fail are listed in the
/// report's `failures`, not silently dropped and not included in the result.
std::pair<std::vector<NormalizedPhrase>, NormalizationReport> normalize_corpus(
    const WordNetDb& db, std::span<const std::string> raw_phrases,
    const Lexicon* lexicon = nullptr);

/// Reads a factor file: UTF-8, one phrase per line, "#" comments and blank
/// lines ignored. "/" inside a line separates distinct factors.
std::vector<std::string> read_factors_file(const std::filesystem::path& path);

}  // namespace lexiclust

#endif  // LEXICLUST_NORMALIZE_HPP
