// severi: command-line front end for the long-edge graph engine.

#include "severi/counting.hpp"
#include "severi/enumerator.hpp"
#include "severi/floor_diagram.hpp"
#include "severi/graph_io.hpp"
#include "severi/node_polynomial.hpp"
#include "severi/qcalc.hpp"
#include "severi/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

namespace {

using Json = nlohmann::ordered_json;
using namespace severi;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Largest cogenus the template catalog is computed for.
constexpr int kMaxTemplateCogenus = 6;

struct Settings {
  bool json = false;
  bool timing = false;
  int jobs = 1;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Stopwatch {
 public:
  long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void check_cogenus(int delta) {
  if (delta < 0) throw UsageError("--delta must be nonnegative");
  if (delta > kMaxTemplateCogenus) {
    throw UsageError("--delta " + std::to_string(delta) + " exceeds the template guard of " +
                     std::to_string(kMaxTemplateCogenus));
  }
}

void check_degree(int d) {
  if (d < 1) throw UsageError("--d must be at least 1");
}

// One ResultRecord. Without --timing, "ms" is always 0 so output is reproducible.
void emit(const Settings& settings, const std::string& command, Json params, const Json& value,
          const std::string& method, const Stopwatch& clock, const std::string& text) {
  const long long ms = settings.timing ? clock.elapsed_ms() : 0;
  if (settings.json) {
    Json record;
    record["command"] = command;
    record["params"] = std::move(params);
    record["value"] = value;
    record["method"] = method;
    record["ms"] = ms;
    std::cout << record.dump() << '\n';
    return;
  }
  std::cout << text << '\n';
  if (settings.timing) std::cout << "# " << ms << " ms\n";
}

int run_templates(const Settings& settings, int delta) {
  check_cogenus(delta);
  const Stopwatch clock;
  const TemplateCatalog& catalog = template_catalog(delta);
  if (settings.json) {
    Json list = Json::array();
    for (const LongEdgeGraph& shape : catalog.templates) {
      Json entry;
      entry["delta"] = delta;
      entry["mu"] = to_string(multiplicity(shape));
      entry["alpha"] = to_string(automorphism_count(shape));
      entry["k_min"] = min_allowable_offset(shape);
      Json edges = Json::array();
      for (const Edge& edge : shape.edges()) edges.push_back({edge.start, edge.end, edge.weight});
      entry["edges"] = std::move(edges);
      list.push_back(std::move(entry));
    }
    std::cout << list.dump() << '\n';
    return kExitOk;
  }
  std::cout << "# " << catalog.templates.size() << " templates of cogenus " << delta << '\n';
  for (const LongEdgeGraph& shape : catalog.templates) {
    std::cout << "\n# delta=" << delta << " mu=" << multiplicity(shape) << " alpha=" << automorphism_count(shape)
              << " k_min=" << min_allowable_offset(shape) << '\n'
              << format_graph(shape);
  }
  if (settings.timing) std::cout << "# " << clock.elapsed_ms() << " ms\n";
  return kExitOk;
}

int run_severi(const Settings& settings, int d, int delta, const std::string& method) {
  check_degree(d);
  check_cogenus(delta);
  const Stopwatch clock;
  const Integer value = method == "floor" ? fmcount(d, delta) : severi_degree(d, delta, settings.jobs);
  emit(settings, "severi", {{"d", d}, {"delta", delta}}, to_string(value), method, clock, to_string(value));
  return kExitOk;
}

int run_node_poly(const Settings& settings, int delta, const std::string& kind) {
  check_cogenus(delta);
  const Stopwatch clock;
  PolynomialFitOptions options;
  options.jobs = settings.jobs;
  const RationalPolynomial poly = kind == "q" ? q_polynomial(delta, options) : node_polynomial(delta, options);
  const std::string command = kind == "q" ? "q-poly" : "node-poly";
  std::string text = poly.to_string();
  const std::string factored = poly.factored_string();
  if (factored != text) text += "\n= " + factored;
  emit(settings, command, {{"delta", delta}}, poly.coefficient_strings(), "templates", clock, text);
  return kExitOk;
}

int run_q(const Settings& settings, int d, int delta, const std::string& route) {
  check_degree(d);
  check_cogenus(delta);
  if (delta < 1) throw UsageError("q needs --delta >= 1");
  const Stopwatch clock;
  const Rational value =
      route == "log" ? q_delta_log(d, delta, settings.jobs) : q_delta_templates(d, delta, settings.jobs);
  emit(settings, "q", {{"d", d}, {"delta", delta}}, to_string(value), route, clock, to_string(value));
  return kExitOk;
}

Json graph_params(const std::string& file, int d, std::optional<int> k) {
  Json params;
  params["file"] = file;
  params["d"] = d;
  if (k) params["k"] = *k;
  return params;
}

LongEdgeGraph load_graph(const std::string& file, std::optional<int> k) {
  LongEdgeGraph graph = read_graph_file(file);
  if (k) {
    if (*k < 0) throw UsageError("--k must be nonnegative");
    graph = offset(graph, *k);
  }
  return graph;
}

int run_q_graph(const Settings& settings, const std::string& file, int d, std::optional<int> k) {
  check_degree(d);
  const LongEdgeGraph graph = load_graph(file, k);
  const Stopwatch clock;
  const Rational value = q_graph(graph, d);
  emit(settings, "q-graph", graph_params(file, d, k), to_string(value), "templates", clock, to_string(value));
  return kExitOk;
}

int run_n_graph(const Settings& settings, const std::string& file, int d, std::optional<int> k,
                const std::string& method) {
  check_degree(d);
  const LongEdgeGraph graph = load_graph(file, k);
  const Stopwatch clock;
  Integer value;
  if (method == "oracle") {
    const Integer labeled = orderings_oracle(graph, d);
    value = multiplicity(graph) * labeled / automorphism_count(graph);
  } else {
    value = n_graph(graph, d);
  }
  emit(settings, "n-graph", graph_params(file, d, k), to_string(value), method, clock, to_string(value));
  return kExitOk;
}

int run_verify(const Settings& settings, const std::string& level_name, const std::string& fault) {
  const VerifyLevel level = level_name == "full" ? VerifyLevel::kFull : VerifyLevel::kQuick;
  VerifyHooks hooks = VerifyHooks::defaults();
  if (fault == "n-star-off-by-one") {
    hooks.n_star = [](const LongEdgeGraph& graph, const Distribution& distribution, int d) {
      return Integer(n_star(graph, distribution, d) + 1);
    };
  } else if (!fault.empty()) {
    throw UsageError("unknown fault \"" + fault + "\"");
  }
  const Stopwatch clock;
  std::ostream* log = settings.json ? nullptr : &std::cout;
  const std::vector<CriterionResult> results = run_acceptance(level, hooks, settings.jobs, log, settings.timing);

  const CriterionResult* first_failure = nullptr;
  for (const CriterionResult& result : results) {
    if (!result.passed) {
      first_failure = &result;
      break;
    }
  }
  if (settings.json) {
    Json criteria = Json::array();
    for (const CriterionResult& result : results) {
      Json entry;
      entry["id"] = result.id;
      entry["name"] = result.name;
      entry["passed"] = result.passed;
      entry["detail"] = result.detail;
      if (settings.timing) entry["ms"] = static_cast<long long>(result.seconds * 1000);
      criteria.push_back(std::move(entry));
    }
    Json record;
    record["command"] = "verify";
    record["params"] = {{"level", level_name}};
    record["value"] = first_failure ? "fail" : "pass";
    record["method"] = "templates";
    record["ms"] = settings.timing ? clock.elapsed_ms() : 0;
    record["criteria"] = std::move(criteria);
    std::cout << record.dump() << '\n';
  } else {
    std::cout << (first_failure ? "FAILED" : "ALL PASSED") << '\n';
  }
  if (first_failure) {
    std::cerr << "severi: criterion " << first_failure->id << " failed: " << first_failure->name << '\n';
    return kExitFailed;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Severi degrees and node polynomials from long-edge graphs", "severi"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings settings;
  app.add_flag("--json", settings.json, "Machine-readable output");
  app.add_flag("--timing", settings.timing, "Report elapsed time");
  app.add_option("--jobs", settings.jobs, "Worker threads for parallel sums")->check(CLI::Range(1, 256));

  int d = 0;
  int delta = 0;
  std::string method = "templates";
  std::string route = "templates";
  std::string level = "quick";
  std::string graph_file;
  std::optional<int> k;
  std::string fault;
  std::string poly_kind = "node";

  CLI::App* templates = app.add_subcommand("templates", "List the templates of a given cogenus");
  templates->add_option("--delta", delta, "Cogenus")->required();

  CLI::App* severi = app.add_subcommand("severi", "Severi degree N^{d,delta}");
  severi->add_option("--d", d, "Curve degree")->required();
  severi->add_option("--delta", delta, "Number of nodes")->required();
  severi->add_option("--method", method, "Counting route")->check(CLI::IsMember({"templates", "floor"}));

  CLI::App* node_poly = app.add_subcommand("node-poly", "Node polynomial N_delta(d) by interpolation");
  node_poly->add_option("--delta", delta, "Number of nodes")->required();
  node_poly->add_option("--kind", poly_kind, "node: N_delta(d); q: the quadratic Q^{d,delta}")
      ->check(CLI::IsMember({"node", "q"}));

  CLI::App* q = app.add_subcommand("q", "Logarithmic coefficient Q^{d,delta}");
  q->add_option("--d", d, "Curve degree")->required();
  q->add_option("--delta", delta, "Cogenus")->required();
  q->add_option("--route", route, "Summation route")->check(CLI::IsMember({"templates", "log"}));

  CLI::App* q_graph_cmd = app.add_subcommand("q-graph", "Q^{d,G} for a graph file");
  q_graph_cmd->add_option("--graph", graph_file, "Edge list file")->required();
  q_graph_cmd->add_option("--d", d, "Curve degree")->required();
  q_graph_cmd->add_option("--k", k, "Shift the graph right by k");

  CLI::App* n_graph_cmd = app.add_subcommand("n-graph", "N^{d,G} for a graph file");
  n_graph_cmd->add_option("--graph", graph_file, "Edge list file")->required();
  n_graph_cmd->add_option("--d", d, "Curve degree")->required();
  n_graph_cmd->add_option("--k", k, "Shift the graph right by k");
  n_graph_cmd->add_option("--method", method, "templates: closed formula; oracle: brute force")
      ->check(CLI::IsMember({"templates", "oracle"}));

  CLI::App* verify = app.add_subcommand("verify", "Run the acceptance criteria");
  verify->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--inject-fault", fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*templates) return run_templates(settings, delta);
    if (*severi) return run_severi(settings, d, delta, method);
    if (*node_poly) return run_node_poly(settings, delta, poly_kind);
    if (*q) return run_q(settings, d, delta, route);
    if (*q_graph_cmd) return run_q_graph(settings, graph_file, d, k);
    if (*n_graph_cmd) return run_n_graph(settings, graph_file, d, k, method);
    if (*verify) return run_verify(settings, level, fault);
  } catch (const ParseError& error) {
    std::cerr << "severi: " << graph_file << ": " << error.what() << '\n';
    return kExitUsage;
  } catch (const FitValidationError& error) {
    std::cerr << "severi: fit check failed at d = " << error.d() << ": " << error.what() << '\n';
    return kExitFailed;
  } catch (const std::exception& error) {
    std::cerr << "severi: " << error.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
