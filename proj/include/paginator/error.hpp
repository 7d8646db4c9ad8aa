#pragma once

#include <stdexcept>
#include <string>

namespace paginator {

// Base of every error the library throws. The CLI maps UsageError to exit
// status 1 and every other Error to exit status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class EmptyCorpusError : public Error {
 public:
  using Error::Error;
};

class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class OutOfVocabularyError : public Error {
 public:
  explicit OutOfVocabularyError(const std::string& word)
      : Error("word not in subject vocabulary: " + word), word_(word) {}

  const std::string& word() const noexcept { return word_; }

 private:
  std::string word_;
};

class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class UndefinedStatisticError : public Error {
 public:
  using Error::Error;
};

}  // namespace paginator
