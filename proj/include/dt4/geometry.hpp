#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dt4/char_class.hpp"
#include "dt4/factored_class.hpp"
#include "dt4/partitions.hpp"
#include "dt4/rational_function.hpp"
#include "dt4/theta.hpp"
#include "dt4/vertex.hpp"

namespace dt4 {

/// A torus chart: the global weight of each of the four local coordinate
/// axes. The weights of every chart sum to the same anticanonical
/// character, which the Calabi-Yau subtorus kills.
struct ChartVertex {
  std::array<Weight, 4> axis_weight;
};

/// An invariant line between two charts. Normal degrees and the profile
/// frame are referred to the va side; matching[k] names the vb-local axis
/// identified with va's k-th transverse axis (increasing order).
struct ToricEdge {
  int va = 0, axis_a = 1;
  int vb = 0, axis_b = 1;
  NormalDegrees m;
  std::array<int, 3> matching{};
  int cls = 0;  // curve class index
};

struct ToricGeometry {
  std::string kind;
  std::vector<ChartVertex> vertices;
  std::vector<ToricEdge> edges;

  int num_classes() const;
};

ToricGeometry build_c4();
ToricGeometry build_local_curve(const NormalDegrees& m);
ToricGeometry build_kp3();

/// Builds a custom geometry from an edge list by propagating chart weights
/// from vertex 0 (standard basis) and checking closure. Throws
/// InvalidGeometry on degree-sum or matching inconsistencies.
ToricGeometry build_custom(int vertex_count, std::vector<ToricEdge> edges);

/// Validates the Calabi-Yau closure conditions of an assembled geometry.
void validate_geometry(const ToricGeometry& g);

/// Transport of a chart-local class into global weights.
Weight transport(const Weight& w, const ChartVertex& chart);
CharClass transport(const CharClass& v, const ChartVertex& chart);

/// A T-fixed point: a curve partition per vertex (local axes) and a plane
/// partition per edge (va transverse frame), with chi bookkept from the
/// partition-data formula.
struct FixedPoint {
  std::vector<CurvePartition> vertex_partitions;
  std::vector<PlanePartition> edge_profiles;
  std::int64_t chi = 0;
  std::vector<int> edge_sizes;
};

/// Leg of the vb-side vertex partition induced by an edge profile: the
/// profile boxes transported through the axis matching.
PlanePartition transport_profile(const PlanePartition& profile, const ToricEdge& e);

/// All fixed points with the given holomorphic Euler characteristic n and
/// per-class curve degrees beta.
std::vector<FixedPoint> enumerate_fixed_points(const ToricGeometry& g,
                                               std::int64_t n,
                                               const std::vector<int>& beta);

/// Leg-agreement certificates for an enumerated fixed point.
bool fixed_point_consistent(const ToricGeometry& g, const FixedPoint& fp);

/// Direct evaluation of chi from renormalized volumes at the given cut-off
/// plus the edge f_m values; equals fp.chi for admissible cut-offs.
std::int64_t chi_direct(const ToricGeometry& g, const FixedPoint& fp, int cutoff);

/// The virtual tangent character: sum of transported vertex and edge terms.
CharClass assemble_tvir(const ToricGeometry& g, const FixedPoint& fp);

enum class ValueMode { Cohomological, KTheoretic, Elliptic };

struct Insertion {
  enum class Kind { Unit, MassTautological };
  Kind kind = Kind::Unit;
  Weight mu = Weight::mass(1);  // tautological twist; mass exponent 1

  static Insertion unit() { return {}; }
  static Insertion mass_tautological(const Weight& twist = Weight::mass(1)) {
    return {Kind::MassTautological, twist};
  }
};

/// Per-vertex / per-edge square-root axis choices. Vertex axes in 1..4,
/// edge axes in 2..4 (transverse slots). Empty vectors mean the defaults.
struct AxisChoices {
  std::vector<int> vertex;
  std::vector<int> edge;
  int vertex_default = 4;
  int edge_default = 4;

  int for_vertex(std::size_t i) const {
    return i < vertex.size() ? vertex[i] : vertex_default;
  }
  int for_edge(std::size_t i) const {
    return i < edge.size() ? edge[i] : edge_default;
  }
};

struct FixedPointTerm {
  std::int64_t sign_exponent = 0;
  RationalFunction value;  // expanded signed contribution (non-elliptic)
};

struct DTResult {
  std::int64_t n = 0;
  std::vector<int> beta;
  std::string insertion;
  ValueMode mode = ValueMode::Cohomological;
  RationalFunction value;                 // cohomological / K-theoretic
  std::optional<ThetaClass> theta_value;  // elliptic
  std::size_t term_count = 0;
  std::vector<FixedPointTerm> per_point;
};

/// The localization sum over fixed points: per vertex the sign-bearing
/// square root v' with sigma from the curve sign rule, per edge e^j with
/// the edge sign rule, evaluated in the requested Euler-class mode and
/// summed as an exact rational function (theta series in elliptic mode).
/// Fixed points are reduced in enumeration order regardless of the
/// parallel width, so results are bit-identical across widths.
DTResult dt_invariant(const ToricGeometry& g, std::int64_t n,
                      const std::vector<int>& beta, const Insertion& ins,
                      ValueMode mode, const AxisChoices& axes = {},
                      int theta_order = 2, int parallel = 1,
                      bool log_terms = false);

std::vector<DTResult> dt_series(const ToricGeometry& g, const Insertion& ins,
                                ValueMode mode, std::int64_t n_max,
                                const std::vector<int>& beta,
                                const AxisChoices& axes = {},
                                int theta_order = 2, int parallel = 1);

/// True when the fixed point is scheme-theoretically supported on the zero
/// section: every box has vanishing fiber coordinate (local axis 4).
bool on_zero_section(const ToricGeometry& g, const FixedPoint& fp);

struct SignPatchingCase {
  FixedPoint fp;
  int lhs_parity = 0;  // product of sigma_4 parities
  int rhs_parity = 0;  // n + c1(Y).beta
  bool ok = false;
};

/// Checks the global sign-patching identity on zero-section fixed points of
/// K_{P^3}: prod (-1)^{sigma_4} over vertices and edges = (-1)^{n + 4d}.
std::vector<SignPatchingCase> sign_patching_check(const ToricGeometry& g,
                                                  std::int64_t n, int d);

}  // namespace dt4
