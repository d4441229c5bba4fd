#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dt4/partitions.hpp"

namespace dt4 {

/// Outcome of a verification sweep. The serialized report is deterministic
/// at fixed configuration: items are checked in canonical enumeration order
/// and failures are flattened by item index, independent of the parallel
/// width. Wall time is never part of the artifact (it goes to the log).
struct SweepReport {
  std::string command;
  nlohmann::json config;
  std::int64_t checked = 0;
  std::vector<nlohmann::json> failures;
  std::string ordering = "canonical-enumeration/v1";

  bool ok() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

struct ItemResult {
  std::int64_t checked = 0;
  std::vector<nlohmann::json> failures;
};

using ItemCheck = std::function<ItemResult(std::size_t)>;

/// Serial reference driver: check(i) for i = 0..count-1 in order. Exceptions
/// become failure records.
std::vector<ItemResult> run_items_serial(std::size_t count, const ItemCheck& check);

/// OpenMP driver; results land in the same per-index slots, so the flattened
/// report is identical to the serial reference.
std::vector<ItemResult> run_items_parallel(std::size_t count, const ItemCheck& check,
                                           int width);

std::vector<ItemResult> run_items(std::size_t count, const ItemCheck& check,
                                  int width);

/// Normal-degree test set: all permutations of (0,-1,-1), (0,0,-2),
/// (1,-1,-2) and (2,-2,-2).
std::vector<NormalDegrees> default_m_set();

/// Leg tuples (l1..l4) with 1 <= sum of sizes <= budget, canonical order.
std::vector<std::array<PlanePartition, 4>> leg_configurations(int budget);

// Sweeps. `parallel` <= 1 selects the serial reference driver.

/// Square roots, movability and sign canonicality of point vertex terms for
/// all point-like partitions of size 1..max_size, all axis pairs, in both
/// euler and khat flavors.
SweepReport verify_vertex_signs(int max_size, int parallel = 1);

/// Same suite for edge terms over |lambda| = 1..max_size and the m set.
SweepReport verify_edge_signs(int max_size, const std::vector<NormalDegrees>& m_set,
                              int parallel = 1);

/// Curve-vertex suite: square-root identities for v and v', movability,
/// sign canonicality of v' at cut-offs N and N+1, and N-stability of the
/// signed Euler class.
SweepReport verify_curve_signs(int legs_budget, int extra_budget, int parallel = 1);

/// chi bookkeeping: renormalized volumes stable at two cut-offs on sampled
/// curve partitions, and the partition-data chi formula against direct
/// counting on LocalCurve fixed points with d <= 2, n <= 3.
SweepReport verify_chi(int samples, int parallel = 1);

/// Global sign patching on K_{P^3} zero-section fixed points, n <= n_max,
/// d <= d_max.
SweepReport verify_sign_patching(int n_max, int d_max, int parallel = 1);

}  // namespace dt4
