#include "lexiclust/matrix.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <thread>

#include "lexiclust/errors.hpp"
#include "num_format.hpp"

namespace lexiclust {
namespace {

constexpr std::string_view kMagic = "lexiclust-matrix v1";

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

void require_serializable(const std::string& text) {
  if (text.find('\t') != std::string::npos || text.find('\n') != std::string::npos) {
    throw FormatError("phrase text contains a tab or newline: \"" + text + "\"");
  }
}

std::string getline_or_throw(std::istream& in, std::string_view what) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("truncated matrix file: missing " +
                                                 std::string(what));
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

SimilarityMatrix::SimilarityMatrix(std::vector<NormalizedPhrase> phrases,
                                   std::vector<double> values,
                                   std::vector<std::pair<std::string, std::string>> manifest)
    : phrases_(std::move(phrases)),
      values_(std::move(values)),
      manifest_(std::move(manifest)) {}

const std::string* SimilarityMatrix::manifest_value(std::string_view key) const {
  for (const auto& [k, v] : manifest_) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string dataset_digest(std::span<const NormalizedPhrase> phrases) {
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr) throw Error("cannot allocate digest context");
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  for (std::size_t i = 0; i < phrases.size(); ++i) {
    if (i > 0) EVP_DigestUpdate(ctx, "\n", 1);
    EVP_DigestUpdate(ctx, phrases[i].raw.data(), phrases[i].raw.size());
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, digest, &len);
  EVP_MD_CTX_free(ctx);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    hex += kHex[digest[i] >> 4];
    hex += kHex[digest[i] & 0xF];
  }
  return hex;
}

SimilarityMatrix build_matrix(const WordNetDb& db, std::vector<NormalizedPhrase> phrases,
                              const SimilarityParams& params, unsigned jobs) {
  params.validate();
  if (phrases.empty()) throw ValidationError("empty dataset");
  for (const NormalizedPhrase& p : phrases) {
    if (p.tokens.empty()) {
      throw ValidationError("phrase \"" + p.raw + "\" has no tokens");
    }
  }
  const std::size_t n = phrases.size();
  std::vector<double> values(n * n, 0.0);

  // Row i owns the cells (i, j >= i) plus their mirrors; rows are dealt
  // round-robin so the shorter tail rows spread evenly over workers.
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(jobs, 1u), n));
  auto fill_rows = [&](unsigned first_row) {
    for (std::size_t i = first_row; i < n; i += workers) {
      for (std::size_t j = i; j < n; ++j) {
        const double score = phrase_similarity(db, phrases[i], phrases[j], params);
        values[i * n + j] = score;
        values[j * n + i] = score;
      }
    }
  };
  if (workers <= 1) {
    fill_rows(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(fill_rows, t);
    for (std::thread& worker : pool) worker.join();
  }

  std::vector<std::pair<std::string, std::string>> manifest;
  manifest.emplace_back("n", std::to_string(n));
  manifest.emplace_back("wordnet_version", db.version());
  manifest.emplace_back("params", params.encode());
  manifest.emplace_back("dataset_sha256", dataset_digest(phrases));
  std::string tokens;
  std::string dropped;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      tokens += '\t';
      dropped += '\t';
    }
    tokens += join(phrases[i].tokens, ' ');
    dropped += join(phrases[i].dropped, ' ');
  }
  manifest.emplace_back("tokens", std::move(tokens));
  manifest.emplace_back("dropped", std::move(dropped));
  return SimilarityMatrix(std::move(phrases), std::move(values), std::move(manifest));
}

void save_matrix(const SimilarityMatrix& matrix, const std::filesystem::path& path) {
  for (const NormalizedPhrase& p : matrix.phrases()) require_serializable(p.raw);
  std::ofstream out(path);
  if (!out) throw FileError("cannot write " + path.string());
  out << kMagic << '\n';
  for (const auto& [key, value] : matrix.manifest()) out << key << '=' << value << '\n';
  out << '\n';
  const std::size_t n = matrix.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) out << '\t';
    out << matrix.phrases()[i].raw;
  }
  out << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    out << matrix.phrases()[i].raw;
    for (std::size_t j = 0; j < n; ++j) {
      out << '\t' << detail::format_double(matrix.at(i, j));
    }
    out << '\n';
  }
  if (!out) throw FileError("write failed: " + path.string());
}

SimilarityMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open " + path.string());
  if (getline_or_throw(in, "magic line") != kMagic) {
    throw FormatError("not a lexiclust matrix file: " + path.string());
  }
  std::vector<std::pair<std::string, std::string>> manifest;
  while (true) {
    const std::string line = getline_or_throw(in, "manifest");
    if (line.empty()) break;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw FormatError("bad manifest line: " + line);
    manifest.emplace_back(line.substr(0, eq), line.substr(eq + 1));
  }
  const auto manifest_value = [&](std::string_view key) -> const std::string* {
    for (const auto& [k, v] : manifest) {
      if (k == key) return &v;
    }
    return nullptr;
  };
  const std::string* n_text = manifest_value("n");
  if (n_text == nullptr) throw FormatError("manifest missing n");
  std::size_t n = 0;
  {
    const auto [ptr, ec] = std::from_chars(n_text->data(), n_text->data() + n_text->size(), n);
    if (ec != std::errc{} || ptr != n_text->data() + n_text->size() || n == 0) {
      throw FormatError("bad manifest n: " + *n_text);
    }
  }

  const std::string header = getline_or_throw(in, "header row");
  const std::vector<std::string_view> names = split(header, '\t');
  if (names.size() != n) {
    throw FormatError("header row has " + std::to_string(names.size()) +
                      " phrases, manifest says " + std::to_string(n));
  }
  std::vector<NormalizedPhrase> phrases(n);
  for (std::size_t i = 0; i < n; ++i) phrases[i].raw = std::string(names[i]);

  if (const std::string* tokens = manifest_value("tokens"); tokens != nullptr) {
    const std::vector<std::string_view> groups = split(*tokens, '\t');
    if (groups.size() != n) throw FormatError("manifest tokens disagree with n");
    for (std::size_t i = 0; i < n; ++i) {
      if (groups[i].empty()) continue;
      for (const std::string_view t : split(groups[i], ' ')) {
        phrases[i].tokens.emplace_back(t);
      }
    }
  }
  if (const std::string* dropped = manifest_value("dropped"); dropped != nullptr) {
    const std::vector<std::string_view> groups = split(*dropped, '\t');
    if (groups.size() != n) throw FormatError("manifest dropped disagree with n");
    for (std::size_t i = 0; i < n; ++i) {
      if (groups[i].empty()) continue;
      for (const std::string_view t : split(groups[i], ' ')) {
        phrases[i].dropped.emplace_back(t);
      }
    }
  }

  std::vector<double> values(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row = getline_or_throw(in, "row " + std::to_string(i));
    const std::vector<std::string_view> cells = split(row, '\t');
    if (cells.size() != n + 1) {
      throw FormatError("row " + std::to_string(i) + " has " +
                        std::to_string(cells.size()) + " fields, expected " +
                        std::to_string(n + 1));
    }
    if (cells[0] != phrases[i].raw) {
      throw FormatError("row label \"" + std::string(cells[0]) +
                        "\" disagrees with header \"" + phrases[i].raw + "\"");
    }
    for (std::size_t j = 0; j < n; ++j) {
      values[i * n + j] = detail::parse_double(cells[j + 1]);
    }
  }

  if (const std::string* digest = manifest_value("dataset_sha256"); digest != nullptr) {
    if (*digest != dataset_digest(phrases)) {
      throw FormatError("dataset digest disagrees with phrase list");
    }
  }
  return SimilarityMatrix(std::move(phrases), std::move(values), std::move(manifest));
}

}  // namespace lexiclust
