#pragma once

#include <array>

#include "dt4/char_class.hpp"
#include "dt4/partitions.hpp"
#include "dt4/rat_char.hpp"

namespace dt4 {

/// Working data for the vertex terms of a curve-like solid partition at a
/// fixed cut-off N: the truncated partition, the truncated leg cylinders,
/// and their characters. N must be at least 2 + the largest coordinate so
/// the large-N redistribution identities hold and are stable.
struct VertexContext {
  CurvePartition pi;
  int cutoff;

  SolidPartition pi_nor;                       // pi within [0,N]^4
  std::array<SolidPartition, 4> pi_leg;        // truncated leg cylinders
  CharClass z_nor;                             // char of pi_nor
  std::array<CharClass, 4> z_leg;              // Z_{lambda_a}
  std::array<CharClass, 4> z_pi_leg;           // Z_{pi_a} = Z_{lambda_a} sum t_a^n

  explicit VertexContext(CurvePartition p, int n = -1);

  /// Z_pi as a rational character:
  /// Z_{pi^nor} + sum_a Z_{lambda_a} t_a^{N+1} / (1 - t_a).
  RatChar z_pi() const;
};

/// prod_{a in axes} (1 - t_a^{-1}).
CharClass p_bar(const std::array<int, 3>& axes);
CharClass p_bar_full();

/// Full vertex term V_pi = Z + Zbar - Pbar_{1234} Z Zbar + sum_i F_i/(1-t_i),
/// assembled over a common denominator and divided out exactly.
CharClass vertex_full(const VertexContext& ctx);

/// Square root of the point vertex: v^i = Z - Pbar_{jkl} Z Zbar.
CharClass sqrt_vertex_point(const SolidPartition& pi, int axis);

/// Square root of the curve vertex with leg corrections (the direct
/// closed-form expression, independent of the cut-off).
CharClass sqrt_vertex_curve(const VertexContext& ctx, int axis);

/// Same class through the cut-off redistribution
/// v^i_{pi^nor} - sum_a v^i_{pi_a} + A + B + C - Cbar; kept as an internal
/// consistency check against sqrt_vertex_curve.
CharClass sqrt_vertex_curve_decomposed(const VertexContext& ctx, int axis);

CharClass correction_A(const VertexContext& ctx, int axis);
CharClass correction_B(const VertexContext& ctx, int axis);
CharClass correction_C(const VertexContext& ctx, int axis);

/// The sign-rule-bearing square root v'^i = v^i - C^i + bar(C^i).
CharClass sqrt_vertex_curve_prime(const VertexContext& ctx, int axis);

/// Edge-side data: a plane partition profile along the x1-axis line with
/// normal degrees m (m2 + m3 + m4 = -2 enforced).
struct EdgeContext {
  PlanePartition lambda;
  NormalDegrees m;

  EdgeContext(PlanePartition l, NormalDegrees degrees);
};

/// Leg polynomial f^j = -Z_lambda + Pbar_{kl} Z_lambda Zbar_lambda in the
/// edge frame (lambda on the x1-leg; j in 2..4; {j,k,l} = {2,3,4}).
CharClass f_leg(const PlanePartition& lambda, int j);

/// f^i_{lambda_j} for the curve vertex: the leg along axis j with the pair
/// {k,l} = {1..4} minus {i,j}.
CharClass f_vertex_leg(const CharClass& z_lambda_j, int leg_axis, int sqrt_axis);

/// The pole-free split A(k): the t1-polynomial with
/// (t1^{-1} t^nu - t^nu t1^{-k}) / (1 - t1^{-1}) = t^nu A(k).
CharClass a_series(int k);

/// B(V) = sum over weight spaces t^nu A(m.nu); V must carry zero
/// t1-exponents (as a t1-free representation) and zero mass.
CharClass b_op(const CharClass& v, const NormalDegrees& m);

/// Full edge term E_lambda, computed monomial-by-monomial through the
/// pole-free split (never by series division).
CharClass edge_full(const EdgeContext& ctx);

/// Edge square root e^j = t1^{-1} f^j/(1-t1^{-1}) - tilde(f^j)/(1-t1^{-1}),
/// evaluated through B. Satisfies e^j + bar(e^j) = E_lambda.
CharClass sqrt_edge(const EdgeContext& ctx, int j);

}  // namespace dt4
