#ifndef LEXICLUST_ERRORS_HPP
#define LEXICLUST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lexiclust {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Missing or unreadable file.
class FileError : public Error {
 public:
  using Error::Error;
};

/// Malformed input line; message carries file name and line number.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A synset offset that does not resolve in the store.
class UnknownSynsetError : public Error {
 public:
  using Error::Error;
};

/// A phrase with no noun content (all-punctuation or empty after normalization).
class EmptyPhraseError : public Error {
 public:
  using Error::Error;
};

/// Invalid parameters or an out-of-range request (bad k, bad weights).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Matrix file with the wrong magic line, corrupt body, or digest mismatch.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace lexiclust

#endif  // LEXICLUST_ERRORS_HPP
