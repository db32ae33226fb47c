#ifndef LEXICLUST_MATRIX_HPP
#define LEXICLUST_MATRIX_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "lexiclust/normalize.hpp"
#include "lexiclust/similarity.hpp"

namespace lexiclust {

/// Symmetric N x N phrase-similarity table keyed by dataset order, plus a
/// manifest recording provenance (WordNet version, params, dataset digest).
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;
  SimilarityMatrix(std::vector<NormalizedPhrase> phrases, std::vector<double> values,
                   std::vector<std::pair<std::string, std::string>> manifest);

  std::size_t size() const { return phrases_.size(); }
  double at(std::size_t i, std::size_t j) const { return values_[i * size() + j]; }

  const std::vector<NormalizedPhrase>& phrases() const { return phrases_; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<std::pair<std::string, std::string>>& manifest() const {
    return manifest_;
  }
  const std::string* manifest_value(std::string_view key) const;

  bool operator==(const SimilarityMatrix&) const = default;

 private:
  std::vector<NormalizedPhrase> phrases_;
  std::vector<double> values_;  // row-major N*N
  std::vector<std::pair<std::string, std::string>> manifest_;
};

/// SHA-256 of the raw phrase texts joined by '\n', lowercase hex.
std::string dataset_digest(std::span<const NormalizedPhrase> phrases);

/// Computes every unordered pair once and mirrors it; the diagonal is the
/// computed self-similarity, not forced to 1. `jobs` fans the row blocks out
/// over that many threads; the result is identical for any worker count.
/// Throws ValidationError on an empty dataset.
SimilarityMatrix build_matrix(const WordNetDb& db,
                              std::vector<NormalizedPhrase> phrases,
                              const SimilarityParams& params, unsigned jobs = 1);

/// Text format, one file: magic line, key=value manifest, blank line, a
/// header row of raw phrase texts, then one row per phrase with
/// shortest-round-trip decimal scores. save/load round-trips exactly.
void save_matrix(const SimilarityMatrix& matrix, const std::filesystem::path& path);

/// Throws FileError if unreadable, FormatError on a bad magic line, a
/// truncated body, or a manifest that disagrees with the phrase list.
SimilarityMatrix load_matrix(const std::filesystem::path& path);

}  // namespace lexiclust

#endif  // LEXICLUST_MATRIX_HPP
