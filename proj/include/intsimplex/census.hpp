#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "intsimplex/matrix.hpp"

namespace intsimplex {

enum class DiameterMode { exact, up_to };

/// How a completed k-point prefix is screened before the search goes deeper.
/// strict: the prefix must be a nondegenerate (k-1)-simplex (one bordered
///   determinant sign per row); sound because subsets of an affinely
///   independent set are affinely independent.
/// weak: the prefix only has to be realizable in k-1 dimensions (full Menger
///   recursion); degenerate simplices are rejected at the leaves. Much slower;
///   kept as a cross-check of the strict rule.
enum class PruneRule { strict, weak };

struct CensusTask {
  std::size_t dimension = 3;
  std::int64_t diameter = 1;
  DiameterMode mode = DiameterMode::exact;
  bool emit_representatives = false;
  std::size_t parallelism = 1;
  std::uint64_t node_budget = 1'000'000'000;
  double seconds_budget = 600.0;
  PruneRule prune = PruneRule::strict;
  /// Prefix size (in points) at which the tree is cut into worker tasks.
  std::size_t split_points = 4;
  /// When set, worker tasks are processed in a shuffled order.
  std::optional<std::uint64_t> task_order_seed;
};

struct CensusStats {
  std::uint64_t nodes = 0;
  std::uint64_t pruned_triangle = 0;
  std::uint64_t pruned_canonicity = 0;
  std::uint64_t pruned_realizability = 0;

  CensusStats& operator+=(const CensusStats& o);
  friend bool operator==(const CensusStats&, const CensusStats&) = default;
};

struct CensusResult {
  CensusTask task;
  std::uint64_t count = 0;
  /// Canonical integer distance matrices, sorted by word; filled only when
  /// task.emit_representatives.
  std::vector<IntMatrix> representatives;
  CensusStats stats;
  double seconds = 0.0;
};

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(std::string what, CensusStats partial, double seconds);
  CensusStats partial;
  double seconds;
};

/// Counts relabeling classes of (d+1)-point integer distance matrices with
/// entries in 1..D (max entry exactly D in exact mode) that form
/// nondegenerate Euclidean d-simplices.
///
/// Entries are filled row by row over the strict lower triangle. Each new
/// entry is checked against the weak triangle inequality on every completed
/// triple; each completed row is screened by the prune rule and then by
/// canonicity (orderly generation: every prefix of a canonical word is
/// canonical). Throws BudgetExceeded when the node or time budget runs out;
/// a count is never returned from a truncated search.
CensusResult enumerate(const CensusTask& task);

/// Squared-distance form of a census representative.
SquaredDistanceMatrix to_squared(const IntMatrix& distances);

struct CensusCell {
  std::size_t dimension = 0;
  std::int64_t diameter = 0;
  std::optional<CensusResult> result;
  /// Set when the cell ran out of budget.
  std::string failure;
  std::uint64_t partial_nodes = 0;
};

/// Runs every (dimension, diameter) cell with the remaining settings taken
/// from `base`. Cells are ordered by diameter, then dimension.
std::vector<CensusCell> census_table(const std::vector<std::size_t>& dimensions,
                                     const std::vector<std::int64_t>& diameters, const CensusTask& base);

/// CSV with header `dimension,diameter,count,nodes,seconds`; cells that ran
/// out of budget carry "—" as the count and the partial node total.
std::string format_csv(const std::vector<CensusCell>& cells);

/// Aligned grid: one row per diameter, one column per dimension.
std::string format_text(const std::vector<CensusCell>& cells);

}  // namespace intsimplex
