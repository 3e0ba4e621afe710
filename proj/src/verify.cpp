#include "severi/verify.hpp"

#include "severi/counting.hpp"
#include "severi/enumerator.hpp"
#include "severi/floor_diagram.hpp"
#include "severi/node_polynomial.hpp"
#include "severi/polynomial.hpp"
#include "severi/qcalc.hpp"

#include <bit>
#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>

namespace severi {

VerifyHooks VerifyHooks::defaults() {
  VerifyHooks hooks;
  hooks.n_star = [](const LongEdgeGraph& graph, const Distribution& distribution, int d) {
    return severi::n_star(graph, distribution, d);
  };
  return hooks;
}

namespace {

// Counts checks and remembers the first failure.
class Tally {
 public:
  template <typename Describe>
  void expect(bool ok, Describe describe) {
    ++checks_;
    if (!ok && failure_.empty()) failure_ = describe();
  }

  CriterionResult result(int id, const std::string& name) const {
    CriterionResult r;
    r.id = id;
    r.name = name;
    r.passed = failure_.empty();
    r.detail = r.passed ? std::to_string(checks_) + " checks" : failure_;
    return r;
  }

 private:
  long checks_ = 0;
  std::string failure_;
};

const LongEdgeGraph& example_graph() {
  static const LongEdgeGraph graph{{3, 5, 1}, {4, 5, 2}, {4, 6, 1}};
  return graph;
}

// Stub plus two parallel cyclops edges at offset 0.
const LongEdgeGraph& stub_cyclops_pair() {
  static const LongEdgeGraph graph{{0, 1, 2}, {0, 2, 1}, {0, 2, 1}};
  return graph;
}

bool all_zero(const std::vector<Rational>& values) {
  for (const Rational& v : values) {
    if (v != 0) return false;
  }
  return true;
}

std::string join(const std::vector<Rational>& values) {
  std::string out;
  for (const Rational& v : values) out += (out.empty() ? "" : ", ") + to_string(v);
  return "[" + out + "]";
}

CriterionResult steiner(VerifyLevel, const VerifyHooks&, int jobs) {
  Tally tally;
  for (int d = 1; d <= 15; ++d) {
    const Integer value = severi_degree(d, 1, jobs);
    const Integer expected = 3 * (d - 1) * (d - 1);
    tally.expect(value == expected, [&] {
      return "N^{" + std::to_string(d) + ",1} = " + to_string(value) + ", expected " + to_string(expected);
    });
  }
  return tally.result(1, "");
}

CriterionResult example_count(VerifyLevel, const VerifyHooks&, int) {
  Tally tally;
  const Integer value = n_graph(example_graph(), 5);
  tally.expect(value == 148, [&] { return "N^{5,G} = " + to_string(value) + ", expected 148"; });
  return tally.result(2, "");
}

CriterionResult classical_node_polynomials(VerifyLevel, const VerifyHooks&, int jobs) {
  Tally tally;
  const RationalPolynomial cayley = RationalPolynomial::constant(Rational(3, 2)) *
                                    RationalPolynomial::linear_factor(1) * RationalPolynomial::linear_factor(2) *
                                    RationalPolynomial({-11, -3, 3});
  const RationalPolynomial roberts(
      {525, Rational(-829, 2), -229, Rational(423, 2), Rational(9, 2), -27, Rational(9, 2)});
  PolynomialFitOptions options;
  options.jobs = jobs;
  const RationalPolynomial n2 = node_polynomial(2, options);
  tally.expect(n2 == cayley, [&] { return "N_2(d) = " + n2.to_string() + ", expected " + cayley.to_string(); });
  const RationalPolynomial n3 = node_polynomial(3, options);
  tally.expect(n3 == roberts, [&] { return "N_3(d) = " + n3.to_string() + ", expected " + roberts.to_string(); });
  return tally.result(3, "");
}

CriterionResult floor_route(VerifyLevel, const VerifyHooks&, int jobs) {
  Tally tally;
  const Integer templates = severi_degree(4, 3, jobs);
  const Integer floors = fmcount(4, 3);
  tally.expect(templates == 675, [&] { return "severi_degree(4,3) = " + to_string(templates); });
  tally.expect(floors == 675, [&] { return "fmcount(4,3) = " + to_string(floors); });
  return tally.result(4, "");
}

CriterionResult stub_cyclops_values(VerifyLevel, const VerifyHooks&, int) {
  Tally tally;
  auto check = [&](int k, const Rational& expected) {
    const Rational value = q_graph(offset(stub_cyclops_pair(), k), k + 2);
    tally.expect(value == expected, [&] {
      return "Q at k = " + std::to_string(k) + " is " + to_string(value) + ", expected " + to_string(expected);
    });
  };
  for (int k = 4; k <= 8; ++k) check(k, 40 * k - 16);
  check(3, 104);
  check(2, 76);
  check(1, 0);
  check(0, 0);
  return tally.result(5, "");
}

CriterionResult dual_route(VerifyLevel level, const VerifyHooks&, int jobs) {
  Tally tally;
  const int max_d = level == VerifyLevel::kFull ? 10 : 7;
  for (int delta = 1; delta <= 3; ++delta) {
    for (int d = 1; d <= max_d; ++d) {
      const Rational by_templates = q_delta_templates(d, delta, jobs);
      const Rational by_log = q_delta_log(d, delta, jobs);
      tally.expect(by_templates == by_log, [&] {
        return "Q^{" + std::to_string(d) + "," + std::to_string(delta) + "}: templates " + to_string(by_templates) +
               " vs log " + to_string(by_log);
      });
    }
  }
  return tally.result(6, "");
}

CriterionResult linearity(VerifyLevel, const VerifyHooks&, int) {
  Tally tally;
  for (int delta = 1; delta <= 3; ++delta) {
    for (const LongEdgeGraph& shape : template_catalog(delta).templates) {
      const int k_min = min_allowable_offset(shape);
      const int k_max = k_min + 5;
      const int d = k_max + shape.right_end() + 1;
      for (const Distribution& distribution : enumerate_distributions(shape)) {
        std::vector<Rational> values;
        for (int k = k_min; k <= k_max; ++k) {
          values.emplace_back(q_star(offset(shape, k), offset(distribution, k), d));
        }
        const std::vector<Rational> second = forward_differences(values, 2);
        tally.expect(all_zero(second), [&] {
          return "q_star of " + to_string(shape) + " over k = " + std::to_string(k_min) + ".." +
                 std::to_string(k_max) + " is " + join(values);
        });
      }
      std::vector<Rational> totals;
      for (int k = k_min; k <= k_max; ++k) totals.push_back(q_graph(offset(shape, k), d));
      tally.expect(all_zero(forward_differences(totals, 2)),
                   [&] { return "q_graph of " + to_string(shape) + " is " + join(totals); });
    }
  }
  return tally.result(7, "");
}

CriterionResult quadraticity(VerifyLevel level, const VerifyHooks&, int jobs) {
  Tally tally;
  const int span = level == VerifyLevel::kFull ? 10 : 6;
  for (int delta = 1; delta <= 3; ++delta) {
    std::vector<Rational> values;
    for (int d = delta + 2; d <= delta + span; ++d) values.push_back(q_delta_templates(d, delta, jobs));
    tally.expect(all_zero(forward_differences(values, 3)), [&] {
      return "Q^{d," + std::to_string(delta) + "} for d = " + std::to_string(delta + 2) + ".. is " + join(values);
    });
  }
  return tally.result(8, "");
}

CriterionResult vanishing(VerifyLevel level, const VerifyHooks&, int) {
  Tally tally;
  const int max_d = level == VerifyLevel::kFull ? 10 : 6;
  for (int left = 1; left <= 2; ++left) {
    for (int right = 1; left + right <= 3; ++right) {
      for (const LongEdgeGraph& a : template_catalog(left).templates) {
        for (const LongEdgeGraph& b : template_catalog(right).templates) {
          for (int ka = 0; ka <= 5; ++ka) {
            for (int kb = 0; kb <= 5; ++kb) {
              const LongEdgeGraph graph = disjoint_union(offset(a, ka), offset(b, kb));
              if (is_offset_template(graph)) continue;
              for (int d = 1; d <= max_d; ++d) {
                const Rational value = q_graph(graph, d);
                tally.expect(value == 0, [&] {
                  return "Q^{" + std::to_string(d) + ",G} = " + to_string(value) + " for " + to_string(graph);
                });
                for (const Distribution& distribution : enumerate_distributions(graph)) {
                  const Integer star = q_star(graph, distribution, d);
                  tally.expect(star == 0, [&] { return "q_star nonzero for " + to_string(graph); });
                }
              }
            }
          }
        }
      }
    }
  }
  return tally.result(9, "");
}

CriterionResult auxiliary_graphs(VerifyLevel, const VerifyHooks&, int) {
  Tally tally;
  for (int n = 2; n <= 6; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    const unsigned subsets = 1u << pairs.size();
    for (unsigned mask = 0; mask < subsets; ++mask) {
      if (std::popcount(mask) > n - 2) continue;
      std::vector<std::pair<int, int>> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (mask >> i & 1u) edges.push_back(pairs[i]);
      }
      const Integer value = sigma(SimpleGraphH(n, edges));
      tally.expect(value == 0, [&] {
        return "sigma = " + to_string(value) + " on " + std::to_string(n) + " vertices, edge mask " +
               std::to_string(mask);
      });
    }
  }
  std::mt19937 rng(20130917);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 7)(rng);
    std::bernoulli_distribution coin(0.4);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) edges.emplace_back(u, v);
      }
    }
    const SimpleGraphH graph(n, edges);
    const Integer by_partitions = sigma(graph);
    const Integer by_chromatic = chromatic_derivative_at_zero(graph);
    tally.expect(by_partitions == by_chromatic, [&] {
      return "trial " + std::to_string(trial) + ": sigma " + to_string(by_partitions) + " vs C'(0) " +
             to_string(by_chromatic);
    });
  }
  return tally.result(10, "");
}

CriterionResult pairing(VerifyLevel, const VerifyHooks&, int) {
  Tally tally;
  for (int a = 1; a <= 8; ++a) {
    for (int b = 1; b <= 8; ++b) {
      const Integer value = pair_identity(a, b);
      tally.expect(value == 0, [&] {
        return "pair_identity(" + std::to_string(a) + "," + std::to_string(b) + ") = " + to_string(value);
      });
    }
  }
  return tally.result(11, "");
}

CriterionResult formula_oracle(VerifyLevel, const VerifyHooks& hooks, int) {
  Tally tally;
  OracleOptions options;
  options.max_midpoints = 16;
  for (int delta = 1; delta <= 2; ++delta) {
    for (const LongEdgeGraph& shape : template_catalog(delta).templates) {
      for (int k = min_allowable_offset(shape); k <= 4; ++k) {
        const LongEdgeGraph graph = offset(shape, k);
        int first_d = k + 2;
        while (!is_allowable(graph, first_d)) ++first_d;
        for (int d = first_d; d <= first_d + 1; ++d) {
          Integer formula = 0;
          for (const Distribution& distribution : enumerate_distributions(graph)) {
            formula += hooks.n_star(graph, distribution, d);
          }
          const Integer brute = orderings_oracle(graph, d, options);
          tally.expect(formula == brute, [&] {
            return "d = " + std::to_string(d) + ", G = " + to_string(graph) + ": formula " + to_string(formula) +
                   " vs oracle " + to_string(brute);
          });
        }
      }
    }
  }
  return tally.result(12, "");
}

CriterionResult exp_log_roundtrip(VerifyLevel level, const VerifyHooks&, int jobs) {
  Tally tally;
  const int max_d = level == VerifyLevel::kFull ? 12 : 8;
  const int max_delta = level == VerifyLevel::kFull ? 4 : 3;
  for (int d = 1; d <= max_d; ++d) {
    std::vector<Rational> q_values(1, Rational(0));
    for (int delta = 1; delta <= max_delta; ++delta) q_values.push_back(q_delta_templates(d, delta, jobs));
    for (int delta = 0; delta <= max_delta; ++delta) {
      const Integer recovered = exp_recover_n(d, delta, q_values);
      const Integer direct = severi_degree(d, delta, jobs);
      tally.expect(recovered == direct, [&] {
        return "N^{" + std::to_string(d) + "," + std::to_string(delta) + "}: exp route " + to_string(recovered) +
               " vs direct " + to_string(direct);
      });
    }
  }
  return tally.result(13, "");
}

CriterionResult d_independence(VerifyLevel, const VerifyHooks&, int) {
  Tally tally;
  for (int delta = 1; delta <= 3; ++delta) {
    for (const LongEdgeGraph& shape : template_catalog(delta).templates) {
      for (int k = 0; k <= 5; ++k) {
        const LongEdgeGraph graph = offset(shape, k);
        bool seen = false;
        Integer reference;
        for (int d = 1; d <= 10; ++d) {
          if (!is_allowable(graph, d)) continue;
          const Integer value = n_graph(graph, d);
          if (!seen) {
            reference = value;
            seen = true;
          }
          tally.expect(value == reference, [&] {
            return to_string(graph) + ": N at d = " + std::to_string(d) + " is " + to_string(value) + ", earlier " +
                   to_string(reference);
          });
        }
      }
    }
  }
  return tally.result(14, "");
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> criteria = {
      {1, "severi_degree(d,1) = 3(d-1)^2 for d = 1..15", steiner},
      {2, "n_graph(G_ex, 5) = 148", example_count},
      {3, "node polynomials N_2 (Cayley) and N_3 (Roberts)", classical_node_polynomials},
      {4, "severi_degree(4,3) = fmcount(4,3) = 675", floor_route},
      {5, "Q of stub + two cyclops edges: 40k-16 (k=4..8), 104, 76, 0, 0", stub_cyclops_values},
      {6, "Q^{d,delta} templates route = log route, delta <= 3, d <= 10", dual_route},
      {7, "q_star linear in the offset for templates of cogenus <= 3", linearity},
      {8, "Q^{d,delta} quadratic in d for delta <= 3", quadraticity},
      {9, "Q vanishes on two-template unions that are not offset templates", vanishing},
      {10, "sigma(H) = 0 for sparse H; sigma(H) = C_H'(0) on random H", auxiliary_graphs},
      {11, "pairing identity vanishes for 1 <= a, b <= 8", pairing},
      {12, "falling-factorial formula = brute-force ordering oracle", formula_oracle},
      {13, "exp of template-route Q reproduces N^{d,delta}, delta <= 4, d <= 12", exp_log_roundtrip},
      {14, "n_graph independent of d over allowable d <= 10", d_independence},
  };
  return criteria;
}

CriterionResult run_criterion(const Criterion& criterion, VerifyLevel level, const VerifyHooks& hooks, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult result;
  try {
    result = criterion.run(level, hooks, jobs);
  } catch (const std::exception& error) {
    result.passed = false;
    result.detail = std::string("exception: ") + error.what();
  }
  result.id = criterion.id;
  result.name = criterion.name;
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<CriterionResult> run_acceptance(VerifyLevel level, const VerifyHooks& hooks, int jobs, std::ostream* log,
                                            bool show_timing) {
  std::vector<CriterionResult> results;
  for (const Criterion& criterion : acceptance_criteria()) {
    results.push_back(run_criterion(criterion, level, hooks, jobs));
    if (log) *log << format_result_line(results.back(), show_timing) << std::endl;
  }
  return results;
}

std::string format_result_line(const CriterionResult& result, bool show_timing) {
  std::ostringstream out;
  out << (result.passed ? "PASS" : "FAIL") << "  [" << std::setw(2) << std::setfill('0') << result.id << "] "
      << result.name << "  (" << result.detail;
  if (show_timing) out << ", " << static_cast<long long>(result.seconds * 1000) << " ms";
  out << ')';
  return out.str();
}

}  // namespace severi
