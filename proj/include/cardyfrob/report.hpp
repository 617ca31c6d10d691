#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cardyfrob {

struct AxiomResult {
  std::string axiom;
  bool passed = false;
  std::string witness;  // first counterexample, empty on success
};

/// Axiom outcomes are data: a failing check is recorded with a witness rather than thrown.
class Report {
public:
  void add(std::string axiom, bool passed, std::string witness = {}) {
    results_.push_back({std::move(axiom), passed, passed ? std::string{} : std::move(witness)});
  }

  void append(const Report& other, const std::string& prefix = {}) {
    for (const auto& r : other.results_) results_.push_back({prefix + r.axiom, r.passed, r.witness});
  }

  bool all_passed() const {
    for (const auto& r : results_)
      if (!r.passed) return false;
    return true;
  }

  const AxiomResult* find(const std::string& axiom) const {
    for (const auto& r : results_)
      if (r.axiom == axiom) return &r;
    return nullptr;
  }

  bool passed(const std::string& axiom) const {
    const auto* r = find(axiom);
    return r != nullptr && r->passed;
  }

  const std::vector<AxiomResult>& results() const { return results_; }

private:
  std::vector<AxiomResult> results_;
};

} // namespace cardyfrob
