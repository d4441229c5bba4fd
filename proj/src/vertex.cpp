#include "dt4/vertex.hpp"

#include <stdexcept>

#include "dt4/errors.hpp"

namespace dt4 {

namespace {

Weight axis_weight(int a) { return Weight::axis(a); }

CharClass one_minus(const Weight& w) {
  return CharClass::one() - CharClass::monomial(w);
}

// Z_{lambda_a} t_a^{N+1} / (1 - t_a) as a rational character.
RatChar leg_tail(const CharClass& z_leg, int a, int cutoff) {
  RatChar r(z_leg.shifted(axis_weight(a).scaled(cutoff + 1)));
  r.div_factor(axis_weight(a));
  return r;
}

// bar(Z_{lambda_a}) t_a^{-(N+1)} / (1 - t_a^{-1}).
RatChar leg_tail_bar(const CharClass& z_leg, int a, int cutoff) {
  RatChar r(z_leg.bar().shifted(axis_weight(a).scaled(-(cutoff + 1))));
  r.div_factor(-axis_weight(a));
  return r;
}

}  // namespace

CharClass p_bar(const std::array<int, 3>& axes) {
  CharClass p = CharClass::one();
  for (int a : axes) p *= one_minus(-axis_weight(a));
  return p;
}

CharClass p_bar_full() {
  CharClass p = CharClass::one();
  for (int a = 1; a <= 4; ++a) p *= one_minus(-axis_weight(a));
  return p;
}

VertexContext::VertexContext(CurvePartition p, int n) : pi(std::move(p)) {
  cutoff = n < 0 ? default_cutoff(pi) : n;
  if (cutoff < default_cutoff(pi))
    throw std::invalid_argument("VertexContext: cut-off below admissible bound");
  pi_nor = pi.normalized_cutoff(cutoff);
  z_nor = char_of(pi_nor);
  for (int a = 1; a <= 4; ++a) {
    const auto ia = static_cast<std::size_t>(a - 1);
    pi_leg[ia] = pi.leg_cylinder_cutoff(a, cutoff);
    z_leg[ia] = char_of(pi.legs[ia], a);
    CharClass geom;
    for (int k = 0; k <= cutoff; ++k)
      geom.add_term(axis_weight(a).scaled(k), 1);
    z_pi_leg[ia] = z_leg[ia] * geom;
  }
}

RatChar VertexContext::z_pi() const {
  RatChar r(z_nor);
  for (int a = 1; a <= 4; ++a) {
    const auto ia = static_cast<std::size_t>(a - 1);
    if (!z_leg[ia].is_zero()) r += leg_tail(z_leg[ia], a, cutoff);
  }
  return r;
}

CharClass vertex_full(const VertexContext& ctx) {
  const RatChar z = ctx.z_pi();
  const RatChar zb = z.bar();
  RatChar acc = z + zb - RatChar(p_bar_full()) * z * zb;
  for (int i = 1; i <= 4; ++i) {
    const auto& zl = ctx.z_leg[static_cast<std::size_t>(i - 1)];
    if (zl.is_zero()) continue;
    const auto t = transverse_axes(i);
    // F on the three transverse variables in increasing order
    Weight inv_prod;
    for (int a : t) inv_prod = inv_prod - axis_weight(a);
    CharClass f = zl.negated() + zl.bar().shifted(inv_prod) + p_bar(t) * zl * zl.bar();
    RatChar term{std::move(f)};
    term.div_factor(axis_weight(i));
    acc += term;
  }
  return acc.divide_exact();
}

CharClass sqrt_vertex_point(const SolidPartition& pi, int axis) {
  const CharClass z = char_of(pi);
  return z - p_bar(transverse_axes(axis)) * z * z.bar();
}

CharClass f_vertex_leg(const CharClass& z_lambda_j, int leg_axis, int sqrt_axis) {
  std::array<int, 3> pair_axes{0, 0, 0};
  int k = 0;
  for (int a = 1; a <= 4; ++a)
    if (a != leg_axis && a != sqrt_axis) pair_axes[static_cast<std::size_t>(k++)] = a;
  CharClass p = CharClass::one();
  for (int idx = 0; idx < 2; ++idx)
    p *= one_minus(-axis_weight(pair_axes[static_cast<std::size_t>(idx)]));
  return z_lambda_j.negated() + p * z_lambda_j * z_lambda_j.bar();
}

CharClass sqrt_vertex_curve(const VertexContext& ctx, int axis) {
  const RatChar z = ctx.z_pi();
  const RatChar zb = z.bar();
  const CharClass pjkl = p_bar(transverse_axes(axis));
  RatChar acc = z - RatChar(pjkl) * z * zb;
  for (int j = 1; j <= 4; ++j) {
    if (j == axis) continue;
    const auto& zl = ctx.z_leg[static_cast<std::size_t>(j - 1)];
    if (zl.is_zero()) continue;
    RatChar term{f_vertex_leg(zl, j, axis)};
    term.div_factor(axis_weight(j));
    acc += term;
  }
  const auto& zi = ctx.z_leg[static_cast<std::size_t>(axis - 1)];
  if (!zi.is_zero()) {
    RatChar inner{zi.negated()};
    inner += RatChar(pjkl) * (zb * RatChar(zi) - z * RatChar(zi.bar()));
    RatChar quad{pjkl * zi * zi.bar()};
    quad.div_factor(axis_weight(axis));
    inner += quad;
    inner.div_factor(axis_weight(axis));
    acc += inner;
  }
  return acc.divide_exact();
}

CharClass correction_A(const VertexContext& ctx, int axis) {
  const CharClass pjkl = p_bar(transverse_axes(axis));
  const CharClass pfull = p_bar_full();
  RatChar acc;
  for (int a = 1; a <= 4; ++a) {
    if (a == axis) continue;
    const auto& za = ctx.z_leg[static_cast<std::size_t>(a - 1)];
    if (za.is_zero()) continue;
    for (int b = 1; b <= 4; ++b) {
      if (b == axis || b == a) continue;
      const auto& zbl = ctx.z_leg[static_cast<std::size_t>(b - 1)];
      if (zbl.is_zero()) continue;
      acc -= RatChar(pjkl) * leg_tail(za, a, ctx.cutoff) *
             leg_tail_bar(zbl, b, ctx.cutoff);
    }
    const auto& zi = ctx.z_leg[static_cast<std::size_t>(axis - 1)];
    if (!zi.is_zero())
      acc -= RatChar(pfull) * leg_tail(za, a, ctx.cutoff) *
             leg_tail_bar(zi, axis, ctx.cutoff);
  }
  return acc.divide_exact();
}

CharClass correction_B(const VertexContext& ctx, int axis) {
  const CharClass pjkl = p_bar(transverse_axes(axis));
  const CharClass pfull = p_bar_full();
  RatChar acc;
  for (int a = 1; a <= 4; ++a) {
    if (a == axis) continue;
    const auto ia = static_cast<std::size_t>(a - 1);
    const auto& za = ctx.z_leg[ia];
    if (za.is_zero()) continue;
    const CharClass rest = ctx.z_nor - ctx.z_pi_leg[ia];
    acc -= RatChar(pjkl) * (leg_tail(za, a, ctx.cutoff) * RatChar(rest.bar()) +
                            leg_tail_bar(za, a, ctx.cutoff) * RatChar(rest));
  }
  const auto iax = static_cast<std::size_t>(axis - 1);
  const auto& zi = ctx.z_leg[iax];
  if (!zi.is_zero()) {
    const CharClass rest = ctx.z_nor - ctx.z_pi_leg[iax];
    acc -= RatChar(pfull) * leg_tail_bar(zi, axis, ctx.cutoff) * RatChar(rest);
  }
  return acc.divide_exact();
}

CharClass correction_C(const VertexContext& ctx, int axis) {
  const auto iax = static_cast<std::size_t>(axis - 1);
  const CharClass& zpi_i = ctx.z_pi_leg[iax];
  if (zpi_i.is_zero()) return {};
  RatChar acc{zpi_i * (ctx.z_nor.bar() - zpi_i.bar())};
  for (int a = 1; a <= 4; ++a) {
    if (a == axis) continue;
    const auto& za = ctx.z_leg[static_cast<std::size_t>(a - 1)];
    if (za.is_zero()) continue;
    acc += leg_tail_bar(za, a, ctx.cutoff) * RatChar(zpi_i);
  }
  acc = RatChar(p_bar(transverse_axes(axis))) * acc;
  return acc.divide_exact();
}

CharClass sqrt_vertex_curve_decomposed(const VertexContext& ctx, int axis) {
  CharClass v = sqrt_vertex_point(ctx.pi_nor, axis);
  for (int a = 1; a <= 4; ++a)
    v -= sqrt_vertex_point(ctx.pi_leg[static_cast<std::size_t>(a - 1)], axis);
  v += correction_A(ctx, axis);
  v += correction_B(ctx, axis);
  const CharClass c = correction_C(ctx, axis);
  return v + c - c.bar();
}

CharClass sqrt_vertex_curve_prime(const VertexContext& ctx, int axis) {
  const CharClass c = correction_C(ctx, axis);
  return sqrt_vertex_curve(ctx, axis) - c + c.bar();
}

EdgeContext::EdgeContext(PlanePartition l, NormalDegrees degrees)
    : lambda(std::move(l)), m(degrees) {
  if (m.sum() != -2)
    throw InvalidGeometry("EdgeContext: normal degrees must sum to -2");
}

CharClass f_leg(const PlanePartition& lambda, int j) {
  if (j < 2 || j > 4) throw std::invalid_argument("f_leg: j must be in 2..4");
  const CharClass z = char_of(lambda, 1);  // x1-leg: variables t2,t3,t4
  CharClass p = CharClass::one();
  for (int a = 2; a <= 4; ++a)
    if (a != j) p *= one_minus(-axis_weight(a));
  return z.negated() + p * z * z.bar();
}

CharClass a_series(int k) {
  CharClass out;
  if (k <= 0) {
    for (int i = 0; i <= -k; ++i) out.add_term(axis_weight(1).scaled(i), -1);
  } else if (k >= 2) {
    for (int i = 0; i <= k - 2; ++i)
      out.add_term(axis_weight(1).scaled(-1 - i), 1);
  }
  return out;  // k == 1 contributes nothing
}

CharClass b_op(const CharClass& v, const NormalDegrees& m) {
  CharClass out;
  for (const auto& [w, mult] : v.terms()) {
    if (w.exponents()[4] != 0)
      throw std::invalid_argument("b_op: weight carries a mass exponent");
    const auto nu = w.transverse_exponents();
    const int k = m.m2 * nu[0] + m.m3 * nu[1] + m.m4 * nu[2];
    CharClass term = a_series(k).shifted(w);
    for (const auto& [u, c] : term.terms()) out.add_term(u, c * mult);
  }
  return out;
}

CharClass edge_full(const EdgeContext& ctx) {
  const CharClass z = char_of(ctx.lambda, 1);
  if (z.is_zero()) return {};
  const Weight inv234 = -(axis_weight(2) + axis_weight(3) + axis_weight(4));
  const CharClass f_full = z.negated() + z.bar().shifted(inv234) +
                           p_bar(transverse_axes(1)) * z * z.bar();
  return b_op(f_full, ctx.m);
}

CharClass sqrt_edge(const EdgeContext& ctx, int j) {
  return b_op(f_leg(ctx.lambda, j), ctx.m);
}

}  // namespace dt4
