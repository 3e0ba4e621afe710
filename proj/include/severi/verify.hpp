#ifndef SEVERI_VERIFY_HPP
#define SEVERI_VERIFY_HPP

#include "severi/big.hpp"
#include "severi/graph.hpp"

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace severi {

enum class VerifyLevel { kQuick, kFull };

// Replaceable pieces of the engine, for fault-injection runs.
struct VerifyHooks {
  std::function<Integer(const LongEdgeGraph&, const Distribution&, int)> n_star;

  static VerifyHooks defaults();
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct Criterion {
  int id;
  std::string name;
  std::function<CriterionResult(VerifyLevel, const VerifyHooks&, int jobs)> run;
};

// The fourteen exit criteria, in order.
const std::vector<Criterion>& acceptance_criteria();

CriterionResult run_criterion(const Criterion& criterion, VerifyLevel level, const VerifyHooks& hooks, int jobs);

// Runs every criterion, printing one line per criterion as it finishes.
std::vector<CriterionResult> run_acceptance(VerifyLevel level, const VerifyHooks& hooks, int jobs, std::ostream* log,
                                            bool show_timing);

std::string format_result_line(const CriterionResult& result, bool show_timing);

}  // namespace severi

#endif  // SEVERI_VERIFY_HPP
