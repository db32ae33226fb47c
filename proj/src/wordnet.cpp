#include "lexiclust/wordnet.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <utility>

namespace lexiclust {
namespace {

// Walks space-separated fields of a line without allocating.
struct FieldReader {
  std::string_view line;
  std::size_t pos = 0;

  std::string_view next() {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    if (pos >= line.size()) return {};
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ') ++pos;
    return line.substr(start, pos - start);
  }
};

[[noreturn]] void malformed(const std::filesystem::path& file, std::size_t line_no,
                            std::string_view what) {
  throw ParseError(file.filename().string() + ":" + std::to_string(line_no) +
                   ": malformed line (" + std::string(what) + ")");
}

template <typename Int>
Int parse_number(std::string_view field, const std::filesystem::path& file,
                 std::size_t line_no, std::string_view what, int base = 10) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value, base);
  if (ec != std::errc{} || ptr != field.data() + field.size()) malformed(file, line_no, what);
  return value;
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open " + path.string());
  return in;
}

// License-header lines begin with a space; the version lives in one of them.
bool is_header_line(const std::string& line) { return !line.empty() && line.front() == ' '; }

void scan_version(const std::string& line, std::string& version) {
  const std::size_t at = line.find("WordNet ");
  if (at == std::string::npos) return;
  const std::size_t start = at + 8;
  const std::size_t end = line.find(' ', start);
  if (end == std::string::npos) return;
  if (line.compare(end + 1, 9, "Copyright") == 0) version = line.substr(start, end - start);
}

}  // namespace

WordNetDb WordNetDb::load(const std::filesystem::path& dir, const LoadOptions& opts) {
  WordNetDb db;
  const auto index_path = dir / "index.noun";
  const auto data_path = dir / "data.noun";
  const auto exc_path = dir / "noun.exc";

  // data.noun: offset lex_filenum ss_type w_cnt(hex) [word lex_id]...
  //            p_cnt [sym offset pos src/tgt]... | gloss
  {
    std::ifstream in = open_or_throw(data_path);
    db.synsets_.reserve(1 << 17);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      if (is_header_line(line)) {
        scan_version(line, db.version_);
        continue;
      }
      FieldReader fields{line};
      Synset synset;
      synset.id = parse_number<SynsetId>(fields.next(), data_path, line_no, "synset offset");
      fields.next();  // lex_filenum
      fields.next();  // ss_type
      const auto word_count =
          parse_number<unsigned>(fields.next(), data_path, line_no, "word count", 16);
      if (word_count == 0) malformed(data_path, line_no, "empty lemma list");
      synset.lemmas.reserve(word_count);
      for (unsigned w = 0; w < word_count; ++w) {
        const std::string_view word = fields.next();
        if (word.empty()) malformed(data_path, line_no, "lemma list");
        synset.lemmas.push_back(lowercase(word));
        fields.next();  // lex_id
      }
      const auto ptr_count =
          parse_number<unsigned>(fields.next(), data_path, line_no, "pointer count");
      for (unsigned p = 0; p < ptr_count; ++p) {
        const std::string_view symbol = fields.next();
        const std::string_view target = fields.next();
        const std::string_view pos = fields.next();
        if (fields.next().empty()) malformed(data_path, line_no, "pointer record");
        const bool hypernym =
            symbol == "@" || (opts.include_instance_hypernyms && symbol == "@i");
        if (hypernym && pos == "n") {
          const auto id = parse_number<SynsetId>(target, data_path, line_no, "pointer target");
          if (id != synset.id) synset.hypernyms.push_back(id);
        }
      }
      std::sort(synset.hypernyms.begin(), synset.hypernyms.end());
      synset.hypernyms.erase(std::unique(synset.hypernyms.begin(), synset.hypernyms.end()),
                             synset.hypernyms.end());
      const SynsetId id = synset.id;
      db.synsets_.emplace(id, std::move(synset));
    }
  }

  // index.noun: lemma pos synset_cnt p_cnt ptr_symbol... sense_cnt
  //             tagsense_cnt synset_offset...
  {
    std::ifstream in = open_or_throw(index_path);
    db.entries_.reserve(1 << 17);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      if (is_header_line(line)) {
        scan_version(line, db.version_);
        continue;
      }
      FieldReader fields{line};
      LemmaEntry entry;
      entry.lemma = lowercase(fields.next());
      if (entry.lemma.empty()) malformed(index_path, line_no, "lemma");
      fields.next();  // pos
      const auto sense_count =
          parse_number<unsigned>(fields.next(), index_path, line_no, "synset count");
      if (sense_count == 0) malformed(index_path, line_no, "sense list");
      const auto ptr_count =
          parse_number<unsigned>(fields.next(), index_path, line_no, "pointer count");
      for (unsigned p = 0; p < ptr_count; ++p) {
        if (fields.next().empty()) malformed(index_path, line_no, "pointer symbols");
      }
      fields.next();  // sense_cnt (repeat)
      fields.next();  // tagsense_cnt
      entry.senses.reserve(sense_count);
      for (unsigned s = 0; s < sense_count; ++s) {
        entry.senses.push_back(
            parse_number<SynsetId>(fields.next(), index_path, line_no, "synset offset"));
      }
      db.entries_.emplace(entry.lemma, std::move(entry));
    }
  }

  // noun.exc: inflected_form base_form [base_form...]
  {
    std::ifstream in = open_or_throw(exc_path);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty() || is_header_line(line)) continue;
      FieldReader fields{line};
      const std::string form = lowercase(fields.next());
      const std::string base = lowercase(fields.next());
      if (form.empty() || base.empty()) malformed(exc_path, line_no, "exception entry");
      db.exceptions_.emplace(form, base);
    }
  }

  // Every referenced offset must resolve.
  for (const auto& [lemma, entry] : db.entries_) {
    for (const SynsetId id : entry.senses) {
      if (!db.has_synset(id)) {
        throw UnknownSynsetError("dangling synset offset " + std::to_string(id) +
                                 " referenced by lemma '" + lemma + "'");
      }
    }
  }
  for (const auto& [id, synset] : db.synsets_) {
    for (const SynsetId hyper : synset.hypernyms) {
      if (!db.has_synset(hyper)) {
        throw UnknownSynsetError("dangling hypernym offset " + std::to_string(hyper) +
                                 " in synset " + std::to_string(id));
      }
    }
  }
  return db;
}

bool WordNetDb::has_lemma(std::string_view lemma) const {
  return entries_.find(std::string(lemma)) != entries_.end();
}

const LemmaEntry* WordNetDb::find_lemma(std::string_view lemma) const {
  const auto it = entries_.find(std::string(lemma));
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<SynsetId> WordNetDb::noun_senses(std::string_view lemma, std::size_t cap) const {
  const LemmaEntry* entry = find_lemma(lemma);
  if (entry == nullptr) return {};
  const std::size_t n = std::min(cap, entry->senses.size());
  return {entry->senses.begin(), entry->senses.begin() + static_cast<std::ptrdiff_t>(n)};
}

const std::vector<std::string>& WordNetDb::synonyms(SynsetId sense) const {
  return synset(sense).lemmas;
}

std::vector<std::vector<SynsetId>> WordNetDb::hypernym_levels(SynsetId sense,
                                                              std::size_t depth) const {
  std::vector<std::vector<SynsetId>> levels(depth);
  std::vector<SynsetId> frontier = synset(sense).hypernyms;
  for (std::size_t l = 0; l < depth && !frontier.empty(); ++l) {
    levels[l] = frontier;
    std::vector<SynsetId> next;
    for (const SynsetId id : frontier) {
      const auto& hypers = synset(id).hypernyms;
      next.insert(next.end(), hypers.begin(), hypers.end());
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = std::move(next);
  }
  return levels;
}

const Synset& WordNetDb::synset(SynsetId id) const {
  const auto it = synsets_.find(id);
  if (it == synsets_.end()) {
    throw UnknownSynsetError("unresolvable synset offset " + std::to_string(id));
  }
  return it->second;
}

bool WordNetDb::has_synset(SynsetId id) const { return synsets_.find(id) != synsets_.end(); }

const std::string* WordNetDb::exception_base(std::string_view form) const {
  const auto it = exceptions_.find(std::string(form));
  return it == exceptions_.end() ? nullptr : &it->second;
}

std::vector<std::string> WordNetDb::all_lemmas() const {
  std::vector<std::string> lemmas;
  lemmas.reserve(entries_.size());
  for (const auto& [lemma, entry] : entries_) lemmas.push_back(lemma);
  std::sort(lemmas.begin(), lemmas.end());
  return lemmas;
}

}  // namespace lexiclust
