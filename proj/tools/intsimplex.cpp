// Command-line front end. Exit codes: 0 success, 1 a verification reported
// failures (lemma), 2 invalid flags or input, 3 census budget exceeded.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <locale>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "intsimplex/bijection.hpp"
#include "intsimplex/census.hpp"
#include "intsimplex/embedding.hpp"
#include "intsimplex/geometry.hpp"
#include "intsimplex/io.hpp"
#include "intsimplex/kernels.hpp"

namespace {

using namespace intsimplex;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// "3", "3,5,7", "3..5" or "3-5" (inclusive), or any comma mix of those.
std::vector<long long> parse_int_list(const std::string& text, const char* flag) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) throw UsageError(std::string(flag) + ": bad value '" + text + "'");
    return v;
  };
  while (std::getline(ss, item, ',')) {
    std::size_t sep = item.find("..");
    std::size_t skip = 2;
    if (sep == std::string::npos) {
      sep = item.find('-', 1);
      skip = 1;
    }
    if (sep == std::string::npos) {
      out.push_back(to_int(item));
      continue;
    }
    const long long lo = to_int(item.substr(0, sep));
    const long long hi = to_int(item.substr(sep + skip));
    if (hi < lo) throw UsageError(std::string(flag) + ": empty range '" + item + "'");
    for (long long v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw UsageError(std::string(flag) + ": no values");
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text, const char* flag) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(Rational::parse(item));
    } catch (const std::exception& e) {
      throw UsageError(std::string(flag) + ": " + e.what());
    }
  }
  if (out.empty()) throw UsageError(std::string(flag) + ": no values");
  return out;
}

std::size_t default_jobs() {
  if (const char* env = std::getenv("INTSIMPLEX_JOBS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string matrix_rows(const IntMatrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += "  ";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? " " : "") + std::to_string(m(i, j));
    s += "\n";
  }
  return s;
}

std::string indices(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

// ---------------------------------------------------------------- census

struct CensusOptions {
  std::string dims = "3";
  std::string diameters = "1";
  std::string mode = "exact";
  std::string emit;
  std::size_t jobs = default_jobs();
  std::uint64_t budget_nodes = 1'000'000'000;
  double budget_seconds = 600.0;
  std::string format = "text";
  std::string prune = "strict";
  std::uint64_t seed = 0;
  bool shuffle = false;
};

int run_census(const CensusOptions& o) {
  CensusTask base;
  base.mode = o.mode == "upto" ? DiameterMode::up_to : DiameterMode::exact;
  base.emit_representatives = !o.emit.empty();
  base.parallelism = o.jobs;
  base.node_budget = o.budget_nodes;
  base.seconds_budget = o.budget_seconds;
  base.prune = o.prune == "weak" ? PruneRule::weak : PruneRule::strict;
  if (o.shuffle) base.task_order_seed = o.seed;

  std::vector<std::size_t> dims;
  for (long long d : parse_int_list(o.dims, "--dim")) {
    if (d < 1) throw UsageError("--dim: dimensions start at 1");
    dims.push_back(static_cast<std::size_t>(d));
  }
  std::vector<std::int64_t> diams;
  for (long long d : parse_int_list(o.diameters, "--diameter")) {
    if (d < 1 || d > 63) throw UsageError("--diameter: must be in 1..63");
    diams.push_back(d);
  }

  const auto cells = census_table(dims, diams, base);
  bool exceeded = false;
  std::vector<IntMatrix> reps;
  for (const auto& c : cells) {
    if (!c.result) exceeded = true;
    if (c.result) reps.insert(reps.end(), c.result->representatives.begin(), c.result->representatives.end());
  }

  if (o.format == "csv") {
    std::cout << format_csv(cells);
  } else if (cells.size() == 1) {
    const auto& c = cells.front();
    std::cout << "dimension " << c.dimension << ", diameter " << c.diameter << " ("
              << (base.mode == DiameterMode::exact ? "exact" : "up to") << "): ";
    if (c.result) {
      const auto& r = *c.result;
      std::cout << "count " << r.count << "\n"
                << "nodes " << r.stats.nodes << "; pruned: triangle " << r.stats.pruned_triangle
                << ", realizability " << r.stats.pruned_realizability << ", canonicity "
                << r.stats.pruned_canonicity << "\n"
                << std::fixed << std::setprecision(3) << "seconds " << r.seconds << "\n";
    } else {
      std::cout << "— (" << c.failure << ")\n";
    }
  } else {
    std::cout << format_text(cells);
  }
  if (!o.emit.empty()) io::write_file(o.emit, io::write_representatives(reps));
  if (exceeded) {
    std::cerr << "census: budget exceeded\n";
    return kExitBudget;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- partitions

int run_partitions(long long n, const std::string& format) {
  if (n < 0) throw UsageError("--n must be non-negative");
  const auto parts = enumerate_partitions(static_cast<std::size_t>(n));
  if (format == "count") {
    std::cout << parts.size() << "\n";
    return kExitOk;
  }
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.size(); ++i) std::cout << (i ? "," : "") << p.parts()[i];
    std::cout << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- check

int run_check(const std::string& path, long long dim_flag, double tol, const std::string& format) {
  const SquaredDistanceMatrix a = io::read_matrix_file(io::read_file(path));
  const std::size_t n = a.size();
  const std::size_t dim = dim_flag < 0 ? (n == 0 ? 0 : n - 1) : static_cast<std::size_t>(dim_flag);
  if (!(tol > 0)) throw UsageError("--tolerance must be positive");
  const MengerVerdict verdict = menger_realizable(a, dim);
  const RealizabilityReport report = minimal_embedding_dimension(a);
  const bool oracle = gram_oracle(a, dim, tol);

  if (format == "json") {
    io::json j;
    j["n"] = n;
    j["dim"] = dim;
    j["realizable"] = verdict.realizable;
    j["witness"] = verdict.witness;
    j["min_dim"] = report.realizable_in_dim ? io::json(*report.realizable_in_dim) : io::json(nullptr);
    j["nondegenerate"] = report.nondegenerate;
    j["gram_oracle"] = oracle;
    std::cout << j.dump() << "\n";
    return kExitOk;
  }
  std::cout << "points: " << n << "\n"
            << "dimension: " << dim << "\n"
            << "realizable: " << (verdict.realizable ? "yes" : "no") << "\n";
  if (!verdict.witness.empty()) std::cout << "witness: " << indices(verdict.witness) << "\n";
  std::cout << "minimal dimension: "
            << (report.realizable_in_dim ? std::to_string(*report.realizable_in_dim) : std::string("none")) << "\n"
            << "nondegenerate: " << (report.nondegenerate ? "yes" : "no") << "\n"
            << "gram oracle: " << (oracle ? "realizable" : "not realizable")
            << (oracle == verdict.realizable ? " (agrees)" : " (disagrees)") << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- embed

int run_embed(const std::string& partition_text, const std::string& lambda_text, bool reduce,
              const std::string& out, bool allow_small) {
  Partition p;
  Rational lambda_sq;
  try {
    p = Partition::parse(partition_text);
    lambda_sq = Rational::parse(lambda_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const LambdaRange range = allow_small ? LambdaRange::above_one : LambdaRange::at_least_two;
  Embedding e = build_coordinates(p, lambda_sq, range);
  const SquaredDistanceMatrix target = partition_to_matrix(p, lambda_sq, range);
  if (reduce) e = reduce_dimension(e);

  bool exact = true;
  double worst = 0.0;
  for (std::size_t i = 0; i < p.n(); ++i) {
    for (std::size_t j = 0; j < p.n(); ++j) {
      if (i == j) continue;
      exact = exact && e.exact_squared_distance(i, j) == target(i, j);
      worst = std::max(worst, std::abs(e.float_distance(i, j) - std::sqrt(target(i, j).to_double())));
    }
  }
  const std::string file = io::write_embedding_file(e);
  if (out.empty()) {
    std::cout << file;
  } else {
    io::write_file(out, file);
    std::cout << "points: " << p.n() << "\n"
              << "ambient dimension: " << e.ambient_dim << "\n"
              << "gram distances: " << (exact ? "exact" : "MISMATCH") << "\n"
              << "max coordinate distance error: " << worst << "\n";
  }
  return exact ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------- lemma

int run_lemma(long long max_n, const std::string& lambdas, const std::string& format, bool allow_small) {
  if (max_n < 1) throw UsageError("--max-n must be >= 1");
  const auto grid = parse_rational_list(lambdas, "--lambda-sq");
  const LambdaRange range = allow_small ? LambdaRange::above_one : LambdaRange::at_least_two;
  const bool csv = format == "csv";
  if (csv) std::cout << "n,partition,lambda_sq,det_A,det_Abar,expr1,expr2,holds\n";
  std::size_t rows = 0;
  std::size_t failures = 0;
  for (long long n = 1; n <= max_n; ++n) {
    for (const Rational& l : grid) {
      for (const Partition& p : enumerate_partitions(static_cast<std::size_t>(n))) {
        const LemmaReport r = lemma_check(p, l, range);
        ++rows;
        if (!r.holds()) ++failures;
        if (csv) {
          std::cout << n << ",\"" << p.to_string() << "\"," << l << ',' << r.det_a << ',' << r.det_abar << ','
                    << r.expr1 << ',' << r.expr2 << ',' << (r.holds() ? "true" : "false") << "\n";
        } else {
          std::cout << std::left << std::setw(4) << n << std::setw(26) << p.to_string() << " lambda^2=" << l
                    << "  det(A)=" << r.det_a << "  det(Abar)=" << r.det_abar << "  expr1=" << r.expr1
                    << "  expr2=" << r.expr2 << "  " << (r.holds() ? "holds" : "FAILS") << "\n";
        }
      }
    }
  }
  if (!csv) std::cout << rows << " rows, " << failures << " failures\n";
  return failures == 0 ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------- sigma

int run_sigma(long long d, bool scan, long long dim, const std::string& grid_text) {
  std::cout << std::setprecision(17);
  if (!scan) {
    if (d < 2) throw UsageError("--d must be >= 2");
    const SigmaValue s = sigma(d);
    std::cout << "sigma(" << d << "," << d + 2 << ") = " << static_cast<double>(s.value) << "\n"
              << "sigma^2 = " << s.outer_rational << " + " << s.outer_sqrt_coeff << " * sqrt(" << s.inner << ")\n"
              << "limit = " << static_cast<double>(sigma_limit()) << "\n";
    return kExitOk;
  }
  if (dim < 1 || dim > 6) throw UsageError("--dim must be in 1..6 for a scan");
  const auto grid = parse_rational_list(grid_text, "--grid");
  const auto rows = threshold_scan(static_cast<std::size_t>(dim), grid);
  if (dim >= 3) {
    const long double s = sigma(dim - 1).value;
    std::cout << "threshold lambda >= sigma(" << dim - 1 << "," << dim + 1 << ") = " << static_cast<double>(s)
              << " (lambda^2 >= " << static_cast<double>(s * s) << ")\n";
  } else {
    std::cout << "threshold sigma(" << dim - 1 << "," << dim + 1 << ") is undefined for this dimension\n";
  }
  std::cout << "lambda^2  classes  nondegenerate  p(n)  bijection  above_threshold  extra  missing\n";
  for (const auto& r : rows) {
    const std::string above = r.above_threshold ? (*r.above_threshold ? "yes" : "no") : "n/a";
    std::cout << std::left << std::setw(10) << r.lambda_sq.to_string() << std::setw(9) << r.classes_scanned
              << std::setw(15) << r.realizable << std::setw(6) << r.partitions << std::setw(11)
              << (r.bijection_holds ? "holds" : "fails") << std::setw(17) << above << std::setw(7)
              << r.extra.size() << r.missing.size() << "\n";
  }
  for (const auto& r : rows) {
    for (const auto& m : r.extra) {
      std::cout << "lambda^2=" << r.lambda_sq << " extra class (1 = distance 1, 2 = distance lambda):\n"
                << matrix_rows(m);
    }
    for (const auto& m : r.missing) {
      std::cout << "lambda^2=" << r.lambda_sq << " missing cluster class:\n" << matrix_rows(m);
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::locale::global(std::locale::classic());
  std::cout.imbue(std::locale::classic());

  CLI::App app{"Integral simplices: census, partition bijection, Cayley-Menger checks"};
  app.require_subcommand(1);
  std::string kernel;
  app.add_option("--kernel", kernel, "Force a SIMD kernel backend (scalar, avx2, neon)");

  CensusOptions census;
  auto* c = app.add_subcommand("census", "Count nonisomorphic integral simplices");
  c->add_option("--dim", census.dims, "Dimension(s): 3, 3,4 or 3..5");
  c->add_option("--diameter", census.diameters, "Diameter(s): 2, 1,2 or 1..4");
  c->add_option("--mode", census.mode, "exact: max distance equals the diameter; upto: at most")
      ->check(CLI::IsMember({"exact", "upto"}));
  c->add_option("--emit", census.emit, "Write canonical representatives (JSON lines) to this file");
  c->add_option("--jobs", census.jobs, "Worker threads (default: $INTSIMPLEX_JOBS or all cores)")
      ->check(CLI::PositiveNumber);
  c->add_option("--budget-nodes", census.budget_nodes, "Search node budget per cell")->check(CLI::PositiveNumber);
  c->add_option("--budget-seconds", census.budget_seconds, "Wall-clock budget per cell")->check(CLI::PositiveNumber);
  c->add_option("--format", census.format)->check(CLI::IsMember({"csv", "text"}));
  c->add_option("--prune", census.prune, "Prefix screening rule")->check(CLI::IsMember({"strict", "weak"}));
  c->add_option("--seed", census.seed, "Seed for --shuffle");
  c->add_flag("--shuffle", census.shuffle, "Process subtree tasks in a seeded random order");

  long long n = 0;
  std::string part_format = "list";
  auto* p = app.add_subcommand("partitions", "List or count the partitions of n");
  p->add_option("--n", n)->required();
  p->add_option("--format", part_format)->check(CLI::IsMember({"list", "count"}));

  std::string matrix_path;
  long long check_dim = -1;
  double tol = 1e-8;
  std::string check_format = "text";
  auto* k = app.add_subcommand("check", "Realizability report for a squared-distance matrix file");
  k->add_option("--matrix", matrix_path)->required();
  k->add_option("--dim", check_dim, "Target dimension (default n-1)");
  k->add_option("--tolerance", tol, "Eigenvalue tolerance of the floating Gram oracle");
  k->add_option("--format", check_format)->check(CLI::IsMember({"text", "json"}));

  std::string partition_text;
  std::string lambda_text = "4";
  bool reduce = false;
  bool allow_small = false;
  std::string out;
  auto* e = app.add_subcommand("embed", "Coordinates for the simplex of a partition");
  e->add_option("--partition", partition_text, "Parts, e.g. 3,2,1")->required();
  e->add_option("--lambda-sq", lambda_text, "Squared long distance, integer or p/q");
  e->add_flag("--reduce", reduce, "Express the points in exactly d dimensions");
  e->add_option("--out", out, "Write the embedding file here instead of stdout");
  e->add_flag("--allow-small-lambda", allow_small, "Accept 1 < lambda^2 < 4");

  long long max_n = 8;
  std::string lemma_lambdas = "4";
  std::string lemma_format = "text";
  bool lemma_small = false;
  auto* l = app.add_subcommand("lemma", "Check both determinant inequalities for every partition");
  l->add_option("--max-n", max_n);
  l->add_option("--lambda-sq", lemma_lambdas, "Comma-separated squared distances");
  l->add_option("--format", lemma_format)->check(CLI::IsMember({"text", "csv"}));
  l->add_flag("--allow-small-lambda", lemma_small, "Accept 1 < lambda^2 < 4");

  long long sigma_d = 2;
  bool scan = false;
  long long scan_dim = 3;
  std::string grid = "4";
  auto* s = app.add_subcommand("sigma", "Threshold sigma(d, d+2), or a bijection scan over lambda^2");
  s->add_option("--d", sigma_d);
  s->add_flag("--scan", scan);
  s->add_option("--dim", scan_dim);
  s->add_option("--grid", grid, "Comma-separated lambda^2 values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return kExitInvalid;
  }

  try {
    if (!kernel.empty()) {
      bool found = false;
      for (auto b : kernels::available_backends()) {
        if (kernels::backend_name(b) == kernel) {
          kernels::set_active_backend(b);
          found = true;
        }
      }
      if (!found) throw UsageError("--kernel: '" + kernel + "' is not available");
    }
    if (*c) return run_census(census);
    if (*p) return run_partitions(n, part_format);
    if (*k) return run_check(matrix_path, check_dim, tol, check_format);
    if (*e) return run_embed(partition_text, lambda_text, reduce, out, allow_small);
    if (*l) return run_lemma(max_n, lemma_lambdas, lemma_format, lemma_small);
    if (*s) return run_sigma(sigma_d, scan, scan_dim, grid);
  } catch (const BudgetExceeded& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitInvalid;
  } catch (const io::FormatError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitFailed;
  }
  return kExitInvalid;
}
