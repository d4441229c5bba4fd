#include "dt4/geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dt4/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dt4 {

namespace {

Weight chart_sum(const ChartVertex& v) {
  Weight s;
  for (const auto& w : v.axis_weight) s = s + w;
  return s;
}

int slot_of(const std::array<int, 3>& axes, int axis) {
  for (int k = 0; k < 3; ++k)
    if (axes[static_cast<std::size_t>(k)] == axis) return k;
  return -1;
}

}  // namespace

int ToricGeometry::num_classes() const {
  int n = 0;
  for (const auto& e : edges) n = std::max(n, e.cls + 1);
  return n;
}

ToricGeometry build_c4() {
  ToricGeometry g;
  g.kind = "C4";
  ChartVertex v;
  for (int a = 1; a <= 4; ++a)
    v.axis_weight[static_cast<std::size_t>(a - 1)] = Weight::axis(a);
  g.vertices.push_back(v);
  validate_geometry(g);
  return g;
}

ToricGeometry build_local_curve(const NormalDegrees& m) {
  ToricGeometry g;
  g.kind = "LocalCurve";
  ChartVertex v0;
  for (int a = 1; a <= 4; ++a)
    v0.axis_weight[static_cast<std::size_t>(a - 1)] = Weight::axis(a);
  ChartVertex v1;
  v1.axis_weight[0] = -Weight::axis(1);
  for (int c = 2; c <= 4; ++c)
    v1.axis_weight[static_cast<std::size_t>(c - 1)] =
        Weight::axis(c) - Weight::axis(1).scaled(m[c]);
  g.vertices = {v0, v1};
  g.edges.push_back(ToricEdge{0, 1, 1, 1, m, {2, 3, 4}, 0});
  validate_geometry(g);
  return g;
}

ToricGeometry build_kp3() {
  // Charts at the four fixed points of P^3; local axes 1..3 point to the
  // other vertices in increasing order, axis 4 is the O(-4) fiber.
  // With chi_0 = 0, chi_i = eps_i the direction a -> b has weight
  // chi_b - chi_a and the fiber at a has weight eps_4 + 4 chi_a.
  ToricGeometry g;
  g.kind = "KP3";
  std::array<Weight, 4> chi;
  chi[0] = Weight{};
  for (int i = 1; i <= 3; ++i) chi[static_cast<std::size_t>(i)] = Weight::axis(i);

  std::array<std::array<int, 3>, 4> neighbors{};
  for (int a = 0; a < 4; ++a) {
    int k = 0;
    for (int b = 0; b < 4; ++b)
      if (b != a) neighbors[static_cast<std::size_t>(a)][static_cast<std::size_t>(k++)] = b;
  }
  auto axis_to = [&](int a, int b) {
    for (int k = 0; k < 3; ++k)
      if (neighbors[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)] == b)
        return k + 1;
    throw std::logic_error("kp3: no such neighbor");
  };

  for (int a = 0; a < 4; ++a) {
    ChartVertex v;
    for (int k = 0; k < 3; ++k) {
      const int b = neighbors[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)];
      v.axis_weight[static_cast<std::size_t>(k)] =
          chi[static_cast<std::size_t>(b)] - chi[static_cast<std::size_t>(a)];
    }
    v.axis_weight[3] = Weight::axis(4) + chi[static_cast<std::size_t>(a)].scaled(4);
    g.vertices.push_back(v);
  }

  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      ToricEdge e;
      e.va = a;
      e.axis_a = axis_to(a, b);
      e.vb = b;
      e.axis_b = axis_to(b, a);
      e.cls = 0;
      const auto trans = transverse_axes(e.axis_a);
      int degrees[3];
      for (int k = 0; k < 3; ++k) {
        const int axis = trans[static_cast<std::size_t>(k)];
        if (axis == 4) {  // fiber direction
          degrees[k] = -4;
          e.matching[static_cast<std::size_t>(k)] = 4;
        } else {
          degrees[k] = 1;
          const int c = neighbors[static_cast<std::size_t>(a)][static_cast<std::size_t>(axis - 1)];
          e.matching[static_cast<std::size_t>(k)] = axis_to(b, c);
        }
      }
      e.m = NormalDegrees{degrees[0], degrees[1], degrees[2]};
      g.edges.push_back(e);
    }
  validate_geometry(g);
  return g;
}

ToricGeometry build_custom(int vertex_count, std::vector<ToricEdge> edges) {
  if (vertex_count < 1) throw InvalidGeometry("custom: need at least one vertex");
  ToricGeometry g;
  g.kind = "custom";
  g.edges = std::move(edges);
  g.vertices.resize(static_cast<std::size_t>(vertex_count));

  std::vector<bool> known(static_cast<std::size_t>(vertex_count), false);
  for (int a = 1; a <= 4; ++a)
    g.vertices[0].axis_weight[static_cast<std::size_t>(a - 1)] = Weight::axis(a);
  known[0] = true;

  // propagate chart weights across edges until closure
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& e : g.edges) {
      const auto ka = static_cast<std::size_t>(e.va);
      const auto kb = static_cast<std::size_t>(e.vb);
      if (known[ka] == known[kb]) continue;
      const bool forward = known[ka];
      const ChartVertex& src = forward ? g.vertices[ka] : g.vertices[kb];
      ChartVertex dst;
      const int src_axis = forward ? e.axis_a : e.axis_b;
      const int dst_axis = forward ? e.axis_b : e.axis_a;
      const Weight along = src.axis_weight[static_cast<std::size_t>(src_axis - 1)];
      dst.axis_weight[static_cast<std::size_t>(dst_axis - 1)] = -along;
      const auto trans_a = transverse_axes(e.axis_a);
      for (int k = 0; k < 3; ++k) {
        const int ax_a = trans_a[static_cast<std::size_t>(k)];
        const int ax_b = e.matching[static_cast<std::size_t>(k)];
        const int mk = e.m[k + 2];
        if (forward) {
          dst.axis_weight[static_cast<std::size_t>(ax_b - 1)] =
              src.axis_weight[static_cast<std::size_t>(ax_a - 1)] - along.scaled(mk);
        } else {
          // src is the vb side; along = W_b(axis_b) = -W_a(axis_a)
          dst.axis_weight[static_cast<std::size_t>(ax_a - 1)] =
              src.axis_weight[static_cast<std::size_t>(ax_b - 1)] - along.scaled(mk);
        }
      }
      g.vertices[forward ? kb : ka] = dst;
      known[forward ? kb : ka] = true;
      progress = true;
    }
  }
  for (bool k : known)
    if (!k) throw InvalidGeometry("custom: vertex unreachable from vertex 0");
  validate_geometry(g);
  return g;
}

void validate_geometry(const ToricGeometry& g) {
  for (const auto& v : g.vertices)
    if (!chart_sum(v).is_zero())
      throw InvalidGeometry("chart weights do not sum to the CY character");
  std::map<std::pair<int, int>, int> used;  // (vertex, axis) -> edge count
  for (const auto& e : g.edges) {
    if (e.m.sum() != -2)
      throw InvalidGeometry("edge degrees do not sum to -2");
    if (e.va < 0 || e.vb < 0 ||
        e.va >= static_cast<int>(g.vertices.size()) ||
        e.vb >= static_cast<int>(g.vertices.size()) || e.va == e.vb)
      throw InvalidGeometry("edge endpoints out of range");
    if (e.axis_a < 1 || e.axis_a > 4 || e.axis_b < 1 || e.axis_b > 4)
      throw InvalidGeometry("edge axes out of range");
    if (++used[{e.va, e.axis_a}] > 1 || ++used[{e.vb, e.axis_b}] > 1)
      throw InvalidGeometry("two edges share a chart axis");
    const auto& wa = g.vertices[static_cast<std::size_t>(e.va)];
    const auto& wb = g.vertices[static_cast<std::size_t>(e.vb)];
    const Weight along = wa.axis_weight[static_cast<std::size_t>(e.axis_a - 1)];
    if (!(wb.axis_weight[static_cast<std::size_t>(e.axis_b - 1)] == -along))
      throw InvalidGeometry("edge direction weights inconsistent");
    const auto trans_a = transverse_axes(e.axis_a);
    const auto trans_b = transverse_axes(e.axis_b);
    for (int k = 0; k < 3; ++k) {
      const int ax_a = trans_a[static_cast<std::size_t>(k)];
      const int ax_b = e.matching[static_cast<std::size_t>(k)];
      if (slot_of(trans_b, ax_b) < 0)
        throw InvalidGeometry("matching names a non-transverse axis");
      const Weight expected =
          wa.axis_weight[static_cast<std::size_t>(ax_a - 1)] - along.scaled(e.m[k + 2]);
      if (!(wb.axis_weight[static_cast<std::size_t>(ax_b - 1)] == expected))
        throw InvalidGeometry("transverse axis matching inconsistent");
    }
  }
}

Weight transport(const Weight& w, const ChartVertex& chart) {
  const auto& e = w.exponents();
  Weight out = Weight::mass(e[4]);
  for (int a = 0; a < 3; ++a)
    out = out + chart.axis_weight[static_cast<std::size_t>(a)].scaled(e[static_cast<std::size_t>(a)]);
  return out;  // canonical weights have a zero t4 exponent
}

CharClass transport(const CharClass& v, const ChartVertex& chart) {
  CharClass out;
  for (const auto& [w, m] : v.terms()) out.add_term(transport(w, chart), m);
  return out;
}

PlanePartition transport_profile(const PlanePartition& profile, const ToricEdge& e) {
  const auto trans_b = transverse_axes(e.axis_b);
  PlanePartition out;
  out.boxes.reserve(profile.boxes.size());
  for (const auto& b : profile.boxes) {
    Box3 c{};
    for (int k = 0; k < 3; ++k) {
      const int slot = slot_of(trans_b, e.matching[static_cast<std::size_t>(k)]);
      c[static_cast<std::size_t>(slot)] = b[static_cast<std::size_t>(k)];
    }
    out.boxes.push_back(c);
  }
  std::sort(out.boxes.begin(), out.boxes.end());
  return out;
}

namespace {

// per-edge size vectors with the prescribed per-class totals
void edge_size_assignments(const ToricGeometry& g, const std::vector<int>& beta,
                           std::size_t idx, std::vector<int>& sizes,
                           std::vector<int>& remaining,
                           std::vector<std::vector<int>>& out) {
  if (idx == g.edges.size()) {
    for (int r : remaining)
      if (r != 0) return;
    out.push_back(sizes);
    return;
  }
  const int cls = g.edges[idx].cls;
  // the last edge of its class must absorb the remainder
  bool last_of_class = true;
  for (std::size_t j = idx + 1; j < g.edges.size(); ++j)
    if (g.edges[j].cls == cls) last_of_class = false;
  const int avail = remaining[static_cast<std::size_t>(cls)];
  const int lo = last_of_class ? avail : 0;
  for (int s = lo; s <= avail; ++s) {
    sizes[idx] = s;
    remaining[static_cast<std::size_t>(cls)] -= s;
    edge_size_assignments(g, beta, idx + 1, sizes, remaining, out);
    remaining[static_cast<std::size_t>(cls)] += s;
  }
  sizes[idx] = 0;
}

std::vector<PlanePartition> plane_partitions_of(int n) {
  if (n == 0) return {PlanePartition{}};
  return enumerate_plane(n);
}

}  // namespace

std::vector<FixedPoint> enumerate_fixed_points(const ToricGeometry& g,
                                               std::int64_t n,
                                               const std::vector<int>& beta) {
  if (static_cast<int>(beta.size()) != g.num_classes())
    throw std::invalid_argument("enumerate_fixed_points: beta rank mismatch");
  for (int b : beta)
    if (b < 0) throw std::invalid_argument("enumerate_fixed_points: negative degree");

  std::vector<std::vector<int>> assignments;
  if (g.edges.empty()) {
    assignments.push_back({});
  } else {
    std::vector<int> sizes(g.edges.size(), 0);
    std::vector<int> remaining = beta;
    edge_size_assignments(g, beta, 0, sizes, remaining, assignments);
  }

  std::vector<FixedPoint> out;
  for (const auto& sizes : assignments) {
    // profile choices per edge
    std::vector<std::vector<PlanePartition>> choices;
    choices.reserve(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e)
      choices.push_back(plane_partitions_of(sizes[e]));

    std::vector<std::size_t> pick(g.edges.size(), 0);
    while (true) {
      std::vector<PlanePartition> profiles(g.edges.size());
      for (std::size_t e = 0; e < g.edges.size(); ++e)
        profiles[e] = choices[e][pick[e]];

      std::vector<std::array<PlanePartition, 4>> legs(g.vertices.size());
      for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto& ed = g.edges[e];
        legs[static_cast<std::size_t>(ed.va)][static_cast<std::size_t>(ed.axis_a - 1)] =
            profiles[e];
        legs[static_cast<std::size_t>(ed.vb)][static_cast<std::size_t>(ed.axis_b - 1)] =
            transport_profile(profiles[e], ed);
      }

      std::int64_t chi_min = 0;
      for (std::size_t e = 0; e < g.edges.size(); ++e)
        chi_min += f_m(profiles[e], g.edges[e].m);
      std::vector<std::int64_t> base_volume(g.vertices.size());
      for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        CurvePartition minimal;
        minimal.legs = legs[v];
        base_volume[v] = renormalized_volume(minimal);
        chi_min += base_volume[v];
      }

      const std::int64_t extra_total = n - chi_min;
      if (extra_total >= 0) {
        // bucket per-vertex partitions by extra-box count
        std::vector<std::vector<std::vector<CurvePartition>>> buckets(g.vertices.size());
        for (std::size_t v = 0; v < g.vertices.size(); ++v) {
          buckets[v].resize(static_cast<std::size_t>(extra_total) + 1);
          visit_curve_partitions(legs[v], static_cast<int>(extra_total),
                                 [&](const CurvePartition& c) {
                                   buckets[v][c.extra.size()].push_back(c);
                                 });
        }
        // distribute the extra boxes over the vertices and pick a partition
        // of the chosen size at each
        std::vector<const CurvePartition*> chosen(g.vertices.size(), nullptr);
        std::function<void(std::size_t, std::int64_t)> place =
            [&](std::size_t v, std::int64_t left) {
              if (v == g.vertices.size()) {
                if (left != 0) return;
                FixedPoint fp;
                fp.edge_profiles = profiles;
                fp.edge_sizes.assign(sizes.begin(), sizes.end());
                fp.vertex_partitions.reserve(g.vertices.size());
                for (const auto* cp : chosen) fp.vertex_partitions.push_back(*cp);
                fp.chi = n;
                out.push_back(std::move(fp));
                return;
              }
              for (std::int64_t k = 0; k <= left; ++k)
                for (const auto& cp : buckets[v][static_cast<std::size_t>(k)]) {
                  chosen[v] = &cp;
                  place(v + 1, left - k);
                }
            };
        place(0, extra_total);
      }

      // odometer over edge profile choices
      std::size_t e = 0;
      for (; e < g.edges.size(); ++e) {
        if (++pick[e] < choices[e].size()) break;
        pick[e] = 0;
      }
      if (g.edges.empty() || e == g.edges.size()) break;
    }
  }
  return out;
}

bool fixed_point_consistent(const ToricGeometry& g, const FixedPoint& fp) {
  for (const auto& cp : fp.vertex_partitions)
    if (!cp.is_valid()) return false;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& ed = g.edges[e];
    const auto& la = fp.vertex_partitions[static_cast<std::size_t>(ed.va)]
                         .legs[static_cast<std::size_t>(ed.axis_a - 1)];
    if (!(la == fp.edge_profiles[e])) return false;
    const auto& lb = fp.vertex_partitions[static_cast<std::size_t>(ed.vb)]
                         .legs[static_cast<std::size_t>(ed.axis_b - 1)];
    if (!(lb == transport_profile(fp.edge_profiles[e], ed))) return false;
  }
  return true;
}

std::int64_t chi_direct(const ToricGeometry& g, const FixedPoint& fp, int cutoff) {
  std::int64_t chi = 0;
  for (const auto& cp : fp.vertex_partitions)
    chi += renormalized_volume_at(cp, cutoff);
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    chi += f_m(fp.edge_profiles[e], g.edges[e].m);
  return chi;
}

namespace {

std::array<int, 4> edge_frame_permutation(const ToricEdge& e) {
  const auto trans = transverse_axes(e.axis_a);
  return {e.axis_a, trans[0], trans[1], trans[2]};
}

}  // namespace

CharClass assemble_tvir(const ToricGeometry& g, const FixedPoint& fp) {
  CharClass total;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    VertexContext ctx(fp.vertex_partitions[v]);
    total += transport(vertex_full(ctx), g.vertices[v]);
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& ed = g.edges[e];
    EdgeContext ectx(fp.edge_profiles[e], ed.m);
    const CharClass term = relabel_axes(edge_full(ectx), edge_frame_permutation(ed));
    total += transport(term, g.vertices[static_cast<std::size_t>(ed.va)]);
  }
  return total;
}

namespace {

struct FpEvaluation {
  std::int64_t sign_exponent = 0;
  std::optional<RationalFunction> value;
  std::optional<ThetaClass> theta;
};

FpEvaluation evaluate_fixed_point(const ToricGeometry& g, const FixedPoint& fp,
                                  const Insertion& ins, ValueMode mode,
                                  const AxisChoices& axes, int theta_order) {
  FpEvaluation ev;
  std::vector<CharClass> roots;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const int i = axes.for_vertex(v);
    const auto& cp = fp.vertex_partitions[v];
    ev.sign_exponent += sigma_curve(cp, i);
    VertexContext ctx(cp);
    roots.push_back(
        transport(sqrt_vertex_curve_prime(ctx, i), g.vertices[v]).negated());
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& ed = g.edges[e];
    const int j = axes.for_edge(e);
    ev.sign_exponent += sigma_edge(fp.edge_profiles[e], ed.m, j);
    EdgeContext ectx(fp.edge_profiles[e], ed.m);
    const CharClass local =
        relabel_axes(sqrt_edge(ectx, j), edge_frame_permutation(ed));
    roots.push_back(
        transport(local, g.vertices[static_cast<std::size_t>(ed.va)]).negated());
  }
  if (ins.kind == Insertion::Kind::MassTautological) {
    // fiberwise H^0(O_Z) twisted by t^mu; only defined on the affine chart
    const auto& cp = fp.vertex_partitions[0];
    const CharClass z = transport(char_of(SolidPartition{cp.extra}), g.vertices[0]);
    roots.push_back(z.shifted(ins.mu));
  }

  const bool negate = (ev.sign_exponent % 2) != 0;
  if (mode == ValueMode::Elliptic) {
    ThetaClass acc = ThetaClass::unit(theta_order);
    for (const auto& r : roots) acc = acc * theta_class(r, theta_order);
    ev.theta = negate ? acc.negated() : acc;
  } else {
    FactoredClass acc(mode == ValueMode::Cohomological ? EulerMode::Cohomological
                                                       : EulerMode::KTheoretic);
    for (const auto& r : roots)
      acc *= (mode == ValueMode::Cohomological ? euler_class(r) : khat_class(r));
    if (negate) acc = acc.negated();
    ev.value = acc.expand();
  }
  return ev;
}

std::string insertion_name(const Insertion& ins) {
  return ins.kind == Insertion::Kind::Unit ? "unit" : "mass-tautological";
}

}  // namespace

DTResult dt_invariant(const ToricGeometry& g, std::int64_t n,
                      const std::vector<int>& beta, const Insertion& ins,
                      ValueMode mode, const AxisChoices& axes, int theta_order,
                      int parallel, bool log_terms) {
  if (ins.kind == Insertion::Kind::MassTautological && g.kind != "C4")
    throw std::invalid_argument("mass-tautological insertion requires C4");

  const auto fps = enumerate_fixed_points(g, n, beta);
  std::vector<FpEvaluation> evals(fps.size());

  if (parallel > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(parallel)
#endif
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(fps.size()); ++k)
      evals[static_cast<std::size_t>(k)] = evaluate_fixed_point(
          g, fps[static_cast<std::size_t>(k)], ins, mode, axes, theta_order);
  } else {
    for (std::size_t k = 0; k < fps.size(); ++k)
      evals[k] = evaluate_fixed_point(g, fps[k], ins, mode, axes, theta_order);
  }

  DTResult result;
  result.n = n;
  result.beta = beta;
  result.insertion = insertion_name(ins);
  result.mode = mode;
  result.term_count = fps.size();
  if (mode == ValueMode::Elliptic) {
    std::optional<ThetaClass> total;
    for (const auto& ev : evals)
      total = total ? (*total + *ev.theta) : *ev.theta;
    result.theta_value = total ? *total : ThetaClass(theta_order, 0);
  } else {
    RationalFunction total;
    for (const auto& ev : evals) total += *ev.value;  // enumeration order
    result.value = total;
    if (log_terms)
      for (const auto& ev : evals)
        result.per_point.push_back(FixedPointTerm{ev.sign_exponent, *ev.value});
  }
  return result;
}

namespace {

std::int64_t minimal_chi(const ToricGeometry& g, const std::vector<int>& beta) {
  // scan ever-larger n until fixed points exist; chi can start negative
  // when f_m does, so probe a widening window
  for (std::int64_t bound = 4; bound <= 64; bound *= 2) {
    for (std::int64_t n = -bound; n <= bound; ++n)
      if (!enumerate_fixed_points(g, n, beta).empty()) return n;
  }
  throw std::logic_error("minimal_chi: no fixed points in probe window");
}

}  // namespace

std::vector<DTResult> dt_series(const ToricGeometry& g, const Insertion& ins,
                                ValueMode mode, std::int64_t n_max,
                                const std::vector<int>& beta,
                                const AxisChoices& axes, int theta_order,
                                int parallel) {
  bool trivial_class = true;
  for (int b : beta) trivial_class = trivial_class && b == 0;
  const std::int64_t n_min = trivial_class ? 1 : minimal_chi(g, beta);
  std::vector<DTResult> out;
  for (std::int64_t n = n_min; n <= n_max; ++n)
    out.push_back(dt_invariant(g, n, beta, ins, mode, axes, theta_order, parallel));
  return out;
}

bool on_zero_section(const ToricGeometry& g, const FixedPoint& fp) {
  for (const auto& cp : fp.vertex_partitions) {
    if (!cp.legs[3].empty()) return false;  // leg along the fiber axis
    for (const auto& b : cp.extra)
      if (b[3] != 0) return false;
    for (int a = 1; a <= 3; ++a) {
      const int slot = slot_of(transverse_axes(a), 4);
      for (const auto& p : cp.legs[static_cast<std::size_t>(a - 1)].boxes)
        if (p[static_cast<std::size_t>(slot)] != 0) return false;
    }
  }
  (void)g;
  return true;
}

std::vector<SignPatchingCase> sign_patching_check(const ToricGeometry& g,
                                                  std::int64_t n, int d) {
  if (g.kind != "KP3")
    throw std::invalid_argument("sign_patching_check requires KP3");
  std::vector<SignPatchingCase> out;
  for (const auto& fp : enumerate_fixed_points(g, n, {d})) {
    if (!on_zero_section(g, fp)) continue;
    SignPatchingCase c;
    c.fp = fp;
    std::int64_t lhs = 0;
    for (const auto& cp : fp.vertex_partitions) lhs += sigma_curve(cp, 4);
    for (std::size_t e = 0; e < g.edges.size(); ++e)
      lhs += sigma_edge(fp.edge_profiles[e], g.edges[e].m, 4);
    c.lhs_parity = static_cast<int>(((lhs % 2) + 2) % 2);
    c.rhs_parity = static_cast<int>(((n + 4 * d) % 2 + 2) % 2);
    c.ok = c.lhs_parity == c.rhs_parity;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace dt4
