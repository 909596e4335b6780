#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace ncp {

/// One basis tuple on which an identity failed, with both sides rendered exactly.
struct Violation {
  std::string law;
  std::vector<std::size_t> at;
  std::string lhs;
  std::string rhs;
};

/// Accumulates violations of one or more identities. With a finite limit the
/// checkers stop evaluating once `full()` turns true, which is how the plain
/// boolean predicates short-circuit.
class LawReport {
 public:
  explicit LawReport(std::size_t limit = std::numeric_limits<std::size_t>::max()) : limit_(limit) {}

  bool ok() const noexcept { return violations_.empty(); }
  bool full() const noexcept { return violations_.size() >= limit_; }
  const std::vector<Violation>& violations() const noexcept { return violations_; }

  void add(std::string law, std::vector<std::size_t> at, std::string lhs, std::string rhs) {
    if (full()) return;
    violations_.push_back({std::move(law), std::move(at), std::move(lhs), std::move(rhs)});
  }

  /// Records a structural failure that is not tied to a basis tuple.
  void add_note(std::string law, std::string detail) {
    if (full()) return;
    violations_.push_back({std::move(law), {}, std::move(detail), ""});
  }

  void merge(const LawReport& other) {
    for (const auto& v : other.violations_) {
      if (full()) return;
      violations_.push_back(v);
    }
  }

 private:
  std::size_t limit_;
  std::vector<Violation> violations_;
};

/// Report that stops at the first violation.
inline LawReport first_failure() { return LawReport(1); }

}  // namespace ncp
