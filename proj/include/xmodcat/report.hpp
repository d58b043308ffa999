#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace xmodcat {

using Witness = std::vector<int>;

/// Verdict for one axiom family: total number of failing tuples and the
/// lexicographically least failing tuples (at most kMaxWitnesses).
struct AxiomCheck {
  static constexpr std::size_t kMaxWitnesses = 8;

  std::string name;
  std::uint64_t failures = 0;
  std::vector<Witness> witnesses;
  /// Informational checks do not count towards all_pass().
  bool informational = false;

  bool pass() const { return failures == 0; }
  void record(const Witness& w);
  /// Folds another partial result for the same axiom into this one.
  void merge(const AxiomCheck& other);

  friend bool operator==(const AxiomCheck&, const AxiomCheck&) = default;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool all_pass() const;
  const AxiomCheck& at(const std::string& name) const;
  AxiomCheck& add(const std::string& name, bool informational = false);
  std::vector<std::string> failing() const;
  /// One line per check: "name: pass" or "name: FAIL (n) first (a,b,...)".
  std::string summary() const;

  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

std::string format_witness(const Witness& w);

}  // namespace xmodcat
