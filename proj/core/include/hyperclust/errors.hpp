#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperclust {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violated: bad parameters, vertex not in graph, wrong graph kind.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Input is larger than a configured brute-force bound.
class RefusalError : public Error {
 public:
  RefusalError(const std::string& what, std::uint64_t estimate = 0)
      : Error(what), estimate_(estimate) {}
  std::uint64_t estimate() const noexcept { return estimate_; }

 private:
  std::uint64_t estimate_;
};

class CompositionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Raised when a value fails validation at construction time; carries every violation.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations)
      : Error(join(violations)), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) {
      if (!out.empty()) out += "; ";
      out += s;
    }
    return out;
  }
  std::vector<std::string> violations_;
};

// Embedding enumeration hit its node budget. count() is the number of
// embeddings reported before the search stopped.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::uint64_t count)
      : Error("enumeration budget exceeded after " + std::to_string(count) + " embeddings"),
        count_(count) {}
  std::uint64_t count() const noexcept { return count_; }

 private:
  std::uint64_t count_;
};

struct ValidationResult {
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
  explicit operator bool() const noexcept { return ok(); }
  void fail(std::string message) { violations.push_back(std::move(message)); }
};

}  // namespace hyperclust
