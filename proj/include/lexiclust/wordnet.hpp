#ifndef LEXICLUST_WORDNET_HPP
#define LEXICLUST_WORDNET_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lexiclust/errors.hpp"

namespace lexiclust {

/// Identifier of a synset: its byte offset in data.noun.
using SynsetId = std::uint32_t;

/// One synonym set. Lemmas are lowercase with underscores for internal
/// spaces, in file order. Hypernyms are the direct parents only, sorted.
struct Synset {
  SynsetId id = 0;
  std::vector<std::string> lemmas;
  std::vector<SynsetId> hypernyms;
};

/// Index entry for one noun lemma. Senses are ordered most-frequent first,
/// exactly as listed in index.noun.
struct LemmaEntry {
  std::string lemma;
  std::vector<SynsetId> senses;
};

struct LoadOptions {
  /// Treat "@i" (instance hypernym) pointers as hypernym edges in addition
  /// to plain "@". Instance hypernymy is the only hypernymy WordNet records
  /// for many proper-noun-like synsets.
  bool include_instance_hypernyms = true;
};

/// Immutable in-memory store of the WordNet noun database: lemma index,
/// synsets, direct hypernym edges, and the irregular-plural exception list.
/// All queries are read-only and safe to call from multiple threads.
class WordNetDb {
 public:
  /// Parses index.noun, data.noun and noun.exc from `dir`.
  /// Throws FileError for a missing file, ParseError for a malformed line
  /// (with file and line number), UnknownSynsetError for a dangling offset.
  static WordNetDb load(const std::filesystem::path& dir, const LoadOptions& opts = {});

  bool has_lemma(std::string_view lemma) const;
  const LemmaEntry* find_lemma(std::string_view lemma) const;

  /// Up to `cap` senses of `lemma`, most frequent first. Empty if absent.
  std::vector<SynsetId> noun_senses(std::string_view lemma, std::size_t cap) const;

  /// The synset's full lemma set (includes every word having this sense).
  /// Throws UnknownSynsetError if `sense` does not resolve.
  const std::vector<std::string>& synonyms(SynsetId sense) const;

  /// Level-wise hypernym ancestor sets: result[0] holds the direct
  /// hypernyms, result[l] the union of direct hypernyms of level l-1.
  /// Always returns `depth` sets; sets past the end of all chains are empty.
  /// Each set is sorted and duplicate-free.
  std::vector<std::vector<SynsetId>> hypernym_levels(SynsetId sense, std::size_t depth) const;

  /// Resolves a synset or throws UnknownSynsetError.
  const Synset& synset(SynsetId id) const;
  bool has_synset(SynsetId id) const;

  /// Base noun for an irregular inflected form (noun.exc), or nullptr.
  const std::string* exception_base(std::string_view form) const;

  /// Version string recovered from the file headers ("3.0", "3.1", ...),
  /// or "unknown".
  const std::string& version() const { return version_; }

  std::size_t lemma_count() const { return entries_.size(); }
  std::size_t synset_count() const { return synsets_.size(); }

  /// Every lemma in the index, sorted. Intended for sampling in tests.
  std::vector<std::string> all_lemmas() const;

 private:
  WordNetDb() = default;

  std::unordered_map<std::string, LemmaEntry> entries_;
  std::unordered_map<SynsetId, Synset> synsets_;
  std::unordered_map<std::string, std::string> exceptions_;
  std::string version_ = "unknown";
};

}  // namespace lexiclust

#endif  // LEXICLUST_WORDNET_HPP
