#include "intsimplex/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "intsimplex/canonical.hpp"
#include "intsimplex/geometry.hpp"
#include "intsimplex/kernels.hpp"

namespace intsimplex {

CensusStats& CensusStats::operator+=(const CensusStats& o) {
  nodes += o.nodes;
  pruned_triangle += o.pruned_triangle;
  pruned_canonicity += o.pruned_canonicity;
  pruned_realizability += o.pruned_realizability;
  return *this;
}

BudgetExceeded::BudgetExceeded(std::string what, CensusStats partial_, double seconds_)
    : std::runtime_error(std::move(what)), partial(partial_), seconds(seconds_) {}

SquaredDistanceMatrix to_squared(const IntMatrix& distances) {
  return SquaredDistanceMatrix::from_distances(distances);
}

namespace {

using Clock = std::chrono::steady_clock;
using kernels::DistanceRow;

// Shared by all workers of one enumeration.
struct Control {
  std::uint64_t node_budget = 0;
  Clock::time_point deadline;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::string reason;
  std::mutex reason_mutex;

  void halt(std::string why) {
    std::lock_guard lock(reason_mutex);
    if (!stop.exchange(true)) reason = std::move(why);
  }
};

struct Prefix {
  std::vector<DistanceRow> rows;
};

struct Halted {};

// Depth-first search state for one worker. rows[k][j] = dist(k, j), j < k.
class Searcher {
 public:
  Searcher(const CensusTask& task, Control& control)
      : task_(task), n_(task.dimension + 1), control_(control), rows_(n_) {}

  // Searches from the root; canonical prefixes of `stop_points` points are
  // collected in `out` instead of being expanded. Complete leaves found on
  // the way (stop_points == n) are counted here.
  void run_to_depth(std::size_t stop_points, std::vector<Prefix>& out) {
    split_at_ = stop_points;
    split_out_ = &out;
    fill(1, 0);
    split_out_ = nullptr;
  }

  void run_from(const Prefix& p, std::size_t points) {
    rows_ = p.rows;
    split_at_ = 0;
    fill(points, 0);
  }

  void flush() {
    if (pending_ > 0) {
      control_.nodes.fetch_add(pending_, std::memory_order_relaxed);
      pending_ = 0;
    }
  }

  CensusStats stats;
  std::uint64_t count = 0;
  std::vector<IntMatrix> reps;

 private:
  void tick() {
    ++stats.nodes;
    if (++pending_ < 1024) return;
    const std::uint64_t total = control_.nodes.fetch_add(pending_, std::memory_order_relaxed) + pending_;
    pending_ = 0;
    if (control_.stop.load(std::memory_order_relaxed)) throw Halted{};
    if (total > control_.node_budget) {
      control_.halt("node budget of " + std::to_string(control_.node_budget) + " exceeded");
      throw Halted{};
    }
    if (Clock::now() > control_.deadline) {
      control_.halt("time budget exceeded");
      throw Halted{};
    }
  }

  void fill(std::size_t k, std::size_t j) {
    const auto max_d = static_cast<std::int8_t>(task_.diameter);
    for (std::int8_t c = 1; c <= max_d; ++c) {
      tick();
      if (j > 0 && !kernels::triangle_ok(rows_[k], rows_[j], c, j)) {
        ++stats.pruned_triangle;
        continue;
      }
      rows_[k][j] = c;
      if (j + 1 < k) {
        fill(k, j + 1);
      } else {
        complete_row(k);
      }
    }
    rows_[k][j] = 0;
  }

  IntMatrix prefix_matrix(std::size_t points, bool squared) const {
    IntMatrix m = IntMatrix::square(points, 0);
    for (std::size_t i = 1; i < points; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        const std::int64_t v = rows_[i][j];
        m(i, j) = m(j, i) = squared ? v * v : v;
      }
    }
    return m;
  }

  // Sign of (-1)^k det(border) for the first k points.
  int oriented_sign(std::size_t points) const {
    const int s = sgn(det(border(prefix_matrix(points, true))));
    return points % 2 == 0 ? s : -s;
  }

  bool realizable_prefix(std::size_t points) const {
    if (points <= 2) return true;
    if (task_.prune == PruneRule::strict) return oriented_sign(points) > 0;
    return menger_realizable(to_squared(prefix_matrix(points, false)), points - 1).realizable;
  }

  void complete_row(std::size_t k) {
    const std::size_t points = k + 1;
    if (!realizable_prefix(points)) {
      ++stats.pruned_realizability;
      return;
    }
    if (!is_canonical(prefix_matrix(points, false))) {
      ++stats.pruned_canonicity;
      return;
    }
    if (points == n_) {
      leaf();
    } else if (points == split_at_) {
      split_out_->push_back(Prefix{rows_});
    } else {
      fill(k + 1, 0);
    }
  }

  void leaf() {
    if (task_.prune == PruneRule::weak && n_ > 2 && oriented_sign(n_) <= 0) {
      ++stats.pruned_realizability;
      return;
    }
    if (task_.mode == DiameterMode::exact) {
      bool hits = false;
      for (std::size_t i = 1; i < n_ && !hits; ++i) {
        for (std::size_t j = 0; j < i; ++j) hits = hits || rows_[i][j] == task_.diameter;
      }
      if (!hits) return;
    }
    ++count;
    if (task_.emit_representatives) reps.push_back(prefix_matrix(n_, false));
  }

  const CensusTask& task_;
  std::size_t n_;
  Control& control_;
  std::vector<DistanceRow> rows_;
  std::uint64_t pending_ = 0;
  std::size_t split_at_ = 0;
  std::vector<Prefix>* split_out_ = nullptr;
};

void validate(const CensusTask& t) {
  if (t.dimension < 1) throw std::invalid_argument("census: dimension must be >= 1");
  if (t.dimension + 1 > kernels::kLanes) throw std::invalid_argument("census: dimension too large");
  if (t.diameter < 1 || t.diameter > 63) throw std::invalid_argument("census: diameter must be in 1..63");
  if (t.parallelism < 1) throw std::invalid_argument("census: parallelism must be >= 1");
  if (t.node_budget < 1) throw std::invalid_argument("census: node budget must be positive");
  if (!(t.seconds_budget > 0)) throw std::invalid_argument("census: time budget must be positive");
}

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

CensusResult enumerate(const CensusTask& task) {
  validate(task);
  const auto start = Clock::now();
  const std::size_t n = task.dimension + 1;
  Control control;
  control.node_budget = task.node_budget;
  control.deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(task.seconds_budget));

  CensusResult result;
  result.task = task;

  // Phase 1: serial search down to the split depth.
  const std::size_t split = std::clamp<std::size_t>(task.split_points, 2, n);
  std::vector<Prefix> prefixes;
  Searcher head(task, control);
  try {
    head.run_to_depth(split, prefixes);
  } catch (const Halted&) {
    head.flush();
    throw BudgetExceeded(control.reason, head.stats, elapsed(start));
  }
  head.flush();
  result.stats += head.stats;
  result.count += head.count;
  result.representatives = std::move(head.reps);
  // Phase 2: independent subtrees. Results are kept per task and merged in
  // task order so the outcome does not depend on scheduling.
  struct TaskResult {
    CensusStats stats;
    std::uint64_t count = 0;
    std::vector<IntMatrix> reps;
  };
  std::vector<TaskResult> task_results(prefixes.size());
  std::vector<std::size_t> order(prefixes.size());
  std::iota(order.begin(), order.end(), 0);
  if (task.task_order_seed) {
    std::mt19937_64 rng(*task.task_order_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    while (!control.stop.load()) {
      const std::size_t slot = next.fetch_add(1);
      if (slot >= order.size()) return;
      const std::size_t t = order[slot];
      Searcher s(task, control);
      try {
        s.run_from(prefixes[t], split);
      } catch (const Halted&) {
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        control.halt("worker failed");
      }
      s.flush();
      task_results[t] = TaskResult{s.stats, s.count, std::move(s.reps)};
    }
  };
  {
    const std::size_t workers = std::min(task.parallelism, std::max<std::size_t>(order.size(), 1));
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  for (auto& r : task_results) {
    result.stats += r.stats;
    result.count += r.count;
    for (auto& m : r.reps) result.representatives.push_back(std::move(m));
  }
  result.seconds = elapsed(start);
  if (control.stop.load()) throw BudgetExceeded(control.reason, result.stats, result.seconds);

  std::sort(result.representatives.begin(), result.representatives.end(),
            [](const IntMatrix& a, const IntMatrix& b) { return distance_word(a) < distance_word(b); });
  return result;
}

std::vector<CensusCell> census_table(const std::vector<std::size_t>& dimensions,
                                     const std::vector<std::int64_t>& diameters, const CensusTask& base) {
  std::vector<CensusCell> cells;
  for (std::int64_t diam : diameters) {
    for (std::size_t dim : dimensions) {
      CensusTask t = base;
      t.dimension = dim;
      t.diameter = diam;
      CensusCell cell{dim, diam, std::nullopt, {}, 0};
      try {
        cell.result = enumerate(t);
      } catch (const BudgetExceeded& e) {
        cell.failure = std::string(e.what()) + " after " + std::to_string(e.partial.nodes) + " nodes";
        cell.partial_nodes = e.partial.nodes;
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

std::string format_csv(const std::vector<CensusCell>& cells) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << "dimension,diameter,count,nodes,seconds\n";
  for (const auto& c : cells) {
    os << c.dimension << ',' << c.diameter << ',';
    if (c.result) {
      os << c.result->count << ',' << c.result->stats.nodes << ',' << std::fixed << std::setprecision(3)
         << c.result->seconds << '\n';
    } else {
      os << "—," << c.partial_nodes << ",\n";
    }
  }
  return os.str();
}

std::string format_text(const std::vector<CensusCell>& cells) {
  std::vector<std::size_t> dims;
  std::vector<std::int64_t> diams;
  std::map<std::pair<std::int64_t, std::size_t>, std::string> text;
  std::vector<std::string> notes;
  for (const auto& c : cells) {
    if (std::find(dims.begin(), dims.end(), c.dimension) == dims.end()) dims.push_back(c.dimension);
    if (std::find(diams.begin(), diams.end(), c.diameter) == diams.end()) diams.push_back(c.diameter);
    if (c.result) {
      text[{c.diameter, c.dimension}] = std::to_string(c.result->count);
    } else {
      text[{c.diameter, c.dimension}] = "—";
      notes.push_back("d=" + std::to_string(c.dimension) + ", diameter " + std::to_string(c.diameter) + ": " +
                      c.failure);
    }
  }
  constexpr int kWidth = 10;
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setw(kWidth) << "diameter";
  for (std::size_t d : dims) os << std::setw(kWidth) << ("d=" + std::to_string(d));
  os << '\n';
  for (std::int64_t diam : diams) {
    os << std::setw(kWidth) << diam;
    for (std::size_t d : dims) {
      const auto it = text.find({diam, d});
      const std::string cell = it == text.end() ? "" : it->second;
      // "—" is three bytes but one column wide.
      const int pad = kWidth - static_cast<int>(cell == "—" ? 1 : cell.size());
      os << std::string(static_cast<std::size_t>(std::max(pad, 0)), ' ') << cell;
    }
    os << '\n';
  }
  for (const auto& note : notes) os << "# " << note << '\n';
  return os.str();
}

}  // namespace intsimplex
