#pragma once

// The acceptance suite: ten executable criteria, each reporting pass/fail
// with a one-line detail.

#include <cstdint>
#include <string>
#include <vector>

namespace fim {

struct CriterionResult {
  int id;
  std::string title;
  bool pass;
  std::string detail;
  double seconds;
};

inline constexpr int kCriteria = 10;

CriterionResult run_criterion(int id);
/// Runs the listed criteria (all when empty), in order.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& only = {});

/// Classical validity against provability of the negative translation over
/// every formula with `atoms` atoms and at most `max_connectives`
/// connectives, counted by congruence classes rather than one by one.
struct GlivenkoReport {
  std::uint64_t formulas = 0;     // formulas covered by the class count
  std::uint64_t expected = 0;     // independent count of all such formulas
  std::uint64_t valid = 0;        // classically valid ones
  std::uint64_t mismatches = 0;
  std::size_t classes = 0;        // translation classes met
  std::size_t ipc_calls = 0;
  std::vector<std::uint64_t> valid_by_size;
  std::vector<std::uint64_t> mismatches_by_size;
};
GlivenkoReport glivenko_by_classes(int atoms, int max_connectives);
/// The same check one formula at a time.
GlivenkoReport glivenko_direct(int atoms, int max_connectives);

}  // namespace fim
