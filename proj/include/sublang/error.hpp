#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace sublang {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid combination of inputs or options (e.g. fewer than two disciplines).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A record could not be admitted into a corpus.
class IngestError : public Error {
 public:
  explicit IngestError(const std::string& what) : Error(what) {}
  IngestError(std::string doc_id, const std::string& what)
      : Error("document '" + doc_id + "': " + what), doc_id_(std::move(doc_id)) {}

  const std::string& doc_id() const noexcept { return doc_id_; }

 private:
  std::string doc_id_;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A measure whose defining ratio or logarithm does not exist for the input.
class UndefinedMeasure : public Error {
 public:
  using Error::Error;
};

/// A document's counts disagree with the frequency model it is scored against.
class ConsistencyError : public Error {
 public:
  ConsistencyError(std::string doc_id, const std::string& what)
      : Error("document '" + doc_id + "': " + what), doc_id_(std::move(doc_id)) {}

  const std::string& doc_id() const noexcept { return doc_id_; }

 private:
  std::string doc_id_;
};

/// Malformed input file; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::string path, std::size_t line, const std::string& what)
      : Error(path + ":" + std::to_string(line) + ": " + what),
        path_(std::move(path)),
        line_(line) {}

  const std::string& path() const noexcept { return path_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string path_;
  std::size_t line_;
};

}  // namespace sublang
