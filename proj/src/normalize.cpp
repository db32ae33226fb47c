#include "lexiclust/normalize.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>

#include "lexiclust/errors.hpp"

namespace lexiclust {
namespace {

bool is_word_char(unsigned char c) { return std::isalnum(c) != 0 || c >= 0x80; }

std::string_view trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])) != 0) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])) != 0) --e;
  return s.substr(b, e - b);
}

// Suffix detachment pairs, applied in order; first hit in the index wins.
constexpr std::array<std::pair<std::string_view, std::string_view>, 8> kDetachRules{{
    {"ses", "s"},
    {"xes", "x"},
    {"zes", "z"},
    {"ches", "ch"},
    {"shes", "sh"},
    {"ies", "y"},
    {"men", "man"},
    {"s", ""},
}};

}  // namespace

Lexicon Lexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open lexicon " + path.string());
  Lexicon lexicon;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string_view stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const std::size_t tab = stripped.find('\t');
    if (tab == std::string_view::npos) {
      throw ParseError(path.filename().string() + ":" + std::to_string(line_no) +
                       ": expected two tab-separated columns");
    }
    const std::string_view surface = trim(stripped.substr(0, tab));
    const std::string_view lemma = trim(stripped.substr(tab + 1));
    if (surface.empty() || lemma.empty()) {
      throw ParseError(path.filename().string() + ":" + std::to_string(line_no) +
                       ": empty column");
    }
    lexicon.add(std::string(surface), std::string(lemma));
  }
  return lexicon;
}

void Lexicon::add(std::string surface, std::string lemma) {
  for (char& c : surface) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (char& c : lemma) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  map_[std::move(surface)] = std::move(lemma);
}

const std::string* Lexicon::find(std::string_view surface) const {
  const auto it = map_.find(std::string(surface));
  return it == map_.end() ? nullptr : &it->second;
}

std::vector<std::string> tokenize(std::string_view raw) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < raw.size()) {
    const char c = raw[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0 || c == '-') {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < raw.size() && raw[end] != '-' &&
           std::isspace(static_cast<unsigned char>(raw[end])) == 0) {
      ++end;
    }
    std::string_view piece = raw.substr(i, end - i);
    i = end;
    while (!piece.empty() && !is_word_char(static_cast<unsigned char>(piece.front()))) {
      piece.remove_prefix(1);
    }
    while (!piece.empty() && !is_word_char(static_cast<unsigned char>(piece.back()))) {
      piece.remove_suffix(1);
    }
    if (piece.empty()) continue;
    std::string token(piece);
    for (char& ch : token) {
      ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }
    tokens.push_back(std::move(token));
  }
  if (tokens.empty()) throw EmptyPhraseError("no tokens in \"" + std::string(raw) + "\"");
  return tokens;
}

std::optional<std::string> to_noun(const WordNetDb& db, std::string_view token,
                                   const Lexicon* lexicon) {
  if (lexicon != nullptr) {
    if (const std::string* mapped = lexicon->find(token); mapped != nullptr) {
      if (db.has_lemma(*mapped)) return *mapped;
    }
  }
  if (db.has_lemma(token)) return std::string(token);
  if (const std::string* base = db.exception_base(token); base != nullptr) {
    if (db.has_lemma(*base)) return *base;
  }
  for (const auto& [suffix, replacement] : kDetachRules) {
    if (token.size() < suffix.size() || !token.ends_with(suffix)) continue;
    std::string candidate(token.substr(0, token.size() - suffix.size()));
    candidate += replacement;
    if (!candidate.empty() && db.has_lemma(candidate)) return candidate;
  }
  return std::nullopt;
}

namespace {

NormalizedPhrase normalize_no_throw(const WordNetDb& db, std::string_view raw,
                                    const Lexicon* lexicon) {
  NormalizedPhrase phrase;
  phrase.raw = std::string(raw);
  for (std::string& token : tokenize(raw)) {
    if (std::optional<std::string> noun = to_noun(db, token, lexicon); noun.has_value()) {
      phrase.tokens.push_back(std::move(*noun));
    } else {
      phrase.dropped.push_back(std::move(token));
    }
  }
  return phrase;
}

}  // namespace

NormalizedPhrase normalize_phrase(const WordNetDb& db, std::string_view raw,
                                  const Lexicon* lexicon) {
  NormalizedPhrase phrase = normalize_no_throw(db, raw, lexicon);
  if (phrase.tokens.empty()) {
    throw EmptyPhraseError("no noun content in \"" + phrase.raw + "\"");
  }
  return phrase;
}

std::pair<std::vector<NormalizedPhrase>, NormalizationReport> normalize_corpus(
    const WordNetDb& db, std::span<const std::string> raw_phrases, const Lexicon* lexicon) {
  std::vector<NormalizedPhrase> phrases;
  phrases.reserve(raw_phrases.size());
  NormalizationReport report;
  for (std::size_t i = 0; i < raw_phrases.size(); ++i) {
    NormalizedPhrase phrase;
    try {
      phrase = normalize_no_throw(db, raw_phrases[i], lexicon);
    } catch (const EmptyPhraseError&) {
      report.failures.emplace_back(i, raw_phrases[i]);
      continue;
    }
    report.total_word_count += phrase.tokens.size() + phrase.dropped.size();
    report.noun_word_count += phrase.tokens.size();
    if (phrase.tokens.empty()) {
      report.failures.emplace_back(i, raw_phrases[i]);
      continue;
    }
    ++report.phrase_count;
    phrases.push_back(std::move(phrase));
  }
  if (report.total_word_count > 0) {
    report.noun_fraction = static_cast<double>(report.noun_word_count) /
                           static_cast<double>(report.total_word_count);
  }
  return {std::move(phrases), report};
}

std::vector<std::string> read_factors_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open factors file " + path.string());
  std::vector<std::string> factors;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string_view stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    std::size_t start = 0;
    while (start <= stripped.size()) {
      const std::size_t slash = stripped.find('/', start);
      const std::size_t end = slash == std::string_view::npos ? stripped.size() : slash;
      const std::string_view factor = trim(stripped.substr(start, end - start));
      if (!factor.empty()) factors.emplace_back(factor);
      if (slash == std::string_view::npos) break;
      start = slash + 1;
    }
  }
  return factors;
}

}  // namespace lexiclust
