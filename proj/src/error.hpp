#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hgc {

/// One violated axiom together with a concrete witness (arrow/point names).
struct Violation {
  std::string axiom;
  std::vector<std::string> witness;
};

/// Outcome of a validation pass. `ok()` holds exactly when no axiom failed.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  void add(std::string axiom, std::vector<std::string> witness = {}) {
    violations.push_back({std::move(axiom), std::move(witness)});
  }

  /// Short human-readable digest, used in exception messages.
  std::string summary(std::size_t max_items = 4) const;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArgumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Construction of a validated object failed; carries the full report.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& what, ValidationReport report)
      : std::runtime_error(what + ": " + report.summary()), report_(std::move(report)) {}

  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

}  // namespace hgc
