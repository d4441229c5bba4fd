#include "dt4/partitions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace dt4 {

namespace {

template <int D>
bool sorted_contains(const std::vector<std::array<int, D>>& v,
                     const std::array<int, D>& b) {
  return std::binary_search(v.begin(), v.end(), b);
}

template <int D>
bool downward_closed(const std::vector<std::array<int, D>>& v) {
  for (const auto& b : v)
    for (int i = 0; i < D; ++i) {
      if (b[static_cast<std::size_t>(i)] == 0) continue;
      auto p = b;
      p[static_cast<std::size_t>(i)] -= 1;
      if (!sorted_contains<D>(v, p)) return false;
    }
  return std::is_sorted(v.begin(), v.end());
}

/// Depth-first generation of downward-closed configurations over an
/// optional infinite base. A box is added only when all its predecessors
/// are present and it is the lexicographically greatest removable box of
/// the enlarged set, which makes every configuration reachable exactly
/// once (its canonical parent is itself minus that box).
template <int D>
class Grower {
 public:
  using Box = std::array<int, D>;

  Grower(std::function<bool(const Box&)> in_base, std::vector<Box> base_seeds,
         int max_extra, std::function<void(const std::vector<Box>&)> visit)
      : in_base_(std::move(in_base)), base_seeds_(std::move(base_seeds)),
        max_extra_(max_extra), visit_(std::move(visit)) {}

  void run() { dfs(); }

 private:
  bool member(const Box& b) const {
    return (in_base_ && in_base_(b)) || sorted_contains<D>(current_, b);
  }

  bool addable(const Box& b) const {
    if (member(b)) return false;
    for (int i = 0; i < D; ++i) {
      if (b[static_cast<std::size_t>(i)] == 0) continue;
      auto p = b;
      p[static_cast<std::size_t>(i)] -= 1;
      if (!member(p)) return false;
    }
    return true;
  }

  bool canonical_child(const Box& b) const {
    // every current box above b must keep a successor inside the new set
    for (auto it = std::upper_bound(current_.begin(), current_.end(), b);
         it != current_.end(); ++it) {
      bool has_successor = false;
      for (int i = 0; i < D && !has_successor; ++i) {
        auto s = *it;
        s[static_cast<std::size_t>(i)] += 1;
        has_successor = s == b || sorted_contains<D>(current_, s);
      }
      if (!has_successor) return false;
    }
    return true;
  }

  std::vector<Box> candidates() const {
    std::set<Box> out;
    auto push_successors = [&](const Box& c) {
      for (int i = 0; i < D; ++i) {
        auto s = c;
        s[static_cast<std::size_t>(i)] += 1;
        if (addable(s)) out.insert(s);
      }
    };
    for (const auto& c : current_) push_successors(c);
    for (const auto& c : base_seeds_) push_successors(c);
    Box origin{};
    if (addable(origin)) out.insert(origin);
    return {out.begin(), out.end()};
  }

  void dfs() {
    visit_(current_);
    if (static_cast<int>(current_.size()) >= max_extra_) return;
    for (const auto& b : candidates()) {
      if (!canonical_child(b)) continue;
      current_.insert(std::lower_bound(current_.begin(), current_.end(), b), b);
      dfs();
      current_.erase(std::lower_bound(current_.begin(), current_.end(), b));
    }
  }

  std::function<bool(const Box&)> in_base_;
  std::vector<Box> base_seeds_;
  int max_extra_;
  std::function<void(const std::vector<Box>&)> visit_;
  std::vector<Box> current_;
};

int diag_count(const std::vector<Box4>& boxes, int axis) {
  const auto t = transverse_axes(axis);
  int count = 0;
  for (const auto& b : boxes) {
    const int x = b[static_cast<std::size_t>(t[0] - 1)];
    if (x == b[static_cast<std::size_t>(t[1] - 1)] &&
        x == b[static_cast<std::size_t>(t[2] - 1)] &&
        x < b[static_cast<std::size_t>(axis - 1)])
      ++count;
  }
  return count;
}

}  // namespace

std::array<int, 3> transverse_axes(int axis) {
  std::array<int, 3> t{};
  int k = 0;
  for (int a = 1; a <= 4; ++a)
    if (a != axis) t[static_cast<std::size_t>(k++)] = a;
  return t;
}

bool PlanePartition::contains(const Box3& b) const {
  return sorted_contains<3>(boxes, b);
}
bool PlanePartition::is_downward_closed() const { return downward_closed<3>(boxes); }

bool SolidPartition::contains(const Box4& b) const {
  return sorted_contains<4>(boxes, b);
}
bool SolidPartition::is_downward_closed() const { return downward_closed<4>(boxes); }

bool CurvePartition::in_cylinder(const Box4& b, int axis) const {
  const auto t = transverse_axes(axis);
  const Box3 profile{b[static_cast<std::size_t>(t[0] - 1)],
                     b[static_cast<std::size_t>(t[1] - 1)],
                     b[static_cast<std::size_t>(t[2] - 1)]};
  return legs[static_cast<std::size_t>(axis - 1)].contains(profile);
}

bool CurvePartition::in_cylinders(const Box4& b) const {
  for (int a = 1; a <= 4; ++a)
    if (in_cylinder(b, a)) return true;
  return false;
}

bool CurvePartition::contains(const Box4& b) const {
  return in_cylinders(b) || sorted_contains<4>(extra, b);
}

int CurvePartition::max_coordinate() const {
  int m = -1;
  for (const auto& b : extra)
    for (int x : b) m = std::max(m, x);
  for (const auto& leg : legs)
    for (const auto& b : leg.boxes)
      for (int x : b) m = std::max(m, x);
  return m;
}

std::vector<Box4> CurvePartition::boxes_in_cube(int cutoff) const {
  std::vector<Box4> out;
  Box4 b{};
  for (b[0] = 0; b[0] <= cutoff; ++b[0])
    for (b[1] = 0; b[1] <= cutoff; ++b[1])
      for (b[2] = 0; b[2] <= cutoff; ++b[2])
        for (b[3] = 0; b[3] <= cutoff; ++b[3])
          if (contains(b)) out.push_back(b);
  return out;
}

SolidPartition CurvePartition::leg_cylinder_cutoff(int axis, int cutoff) const {
  SolidPartition out;
  const auto t = transverse_axes(axis);
  for (const auto& p : legs[static_cast<std::size_t>(axis - 1)].boxes)
    for (int n = 0; n <= cutoff; ++n) {
      Box4 b{};
      b[static_cast<std::size_t>(axis - 1)] = n;
      for (int k = 0; k < 3; ++k)
        b[static_cast<std::size_t>(t[static_cast<std::size_t>(k)] - 1)] =
            p[static_cast<std::size_t>(k)];
      out.boxes.push_back(b);
    }
  std::sort(out.boxes.begin(), out.boxes.end());
  return out;
}

SolidPartition CurvePartition::normalized_cutoff(int cutoff) const {
  return SolidPartition{boxes_in_cube(cutoff)};
}

bool CurvePartition::is_valid() const {
  for (const auto& leg : legs)
    if (!leg.is_downward_closed()) return false;
  if (!std::is_sorted(extra.begin(), extra.end())) return false;
  for (const auto& b : extra) {
    if (in_cylinders(b)) return false;  // extra must be disjoint from legs
    for (int i = 0; i < 4; ++i) {
      if (b[static_cast<std::size_t>(i)] == 0) continue;
      auto p = b;
      p[static_cast<std::size_t>(i)] -= 1;
      if (!contains(p)) return false;
    }
  }
  return true;
}

void visit_plane_partitions(int max_size,
                            const std::function<void(const PlanePartition&)>& visit) {
  Grower<3>(nullptr, {}, max_size,
            [&](const std::vector<Box3>& boxes) { visit(PlanePartition{boxes}); })
      .run();
}

void visit_solid_partitions(int max_size,
                            const std::function<void(const SolidPartition&)>& visit) {
  Grower<4>(nullptr, {}, max_size,
            [&](const std::vector<Box4>& boxes) { visit(SolidPartition{boxes}); })
      .run();
}

void visit_curve_partitions(const std::array<PlanePartition, 4>& legs, int max_extra,
                            const std::function<void(const CurvePartition&)>& visit) {
  CurvePartition base;
  base.legs = legs;
  const int bound = base.max_coordinate() + max_extra + 2;
  std::vector<Box4> seeds;
  for (int a = 1; a <= 4; ++a) {
    auto cyl = base.leg_cylinder_cutoff(a, bound);
    seeds.insert(seeds.end(), cyl.boxes.begin(), cyl.boxes.end());
  }
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

  Grower<4>([&base](const Box4& b) { return base.in_cylinders(b); },
            std::move(seeds), max_extra,
            [&](const std::vector<Box4>& extra) {
              CurvePartition c;
              c.legs = legs;
              c.extra = extra;
              visit(c);
            })
      .run();
}

std::vector<PlanePartition> enumerate_plane(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_plane: n must be >= 1");
  std::vector<PlanePartition> out;
  visit_plane_partitions(n, [&](const PlanePartition& p) {
    if (static_cast<int>(p.size()) == n) out.push_back(p);
  });
  return out;
}

std::vector<SolidPartition> enumerate_solid(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_solid: n must be >= 1");
  std::vector<SolidPartition> out;
  visit_solid_partitions(n, [&](const SolidPartition& p) {
    if (static_cast<int>(p.size()) == n) out.push_back(p);
  });
  return out;
}

std::vector<CurvePartition> enumerate_curve(const std::array<PlanePartition, 4>& legs,
                                            int kmax) {
  std::vector<CurvePartition> out;
  visit_curve_partitions(legs, kmax,
                         [&](const CurvePartition& c) { out.push_back(c); });
  return out;
}

std::int64_t renormalized_volume_at(const CurvePartition& pi, int cutoff) {
  std::int64_t legs_total = 0;
  for (const auto& leg : pi.legs) legs_total += static_cast<std::int64_t>(leg.size());
  return static_cast<std::int64_t>(pi.boxes_in_cube(cutoff).size()) -
         static_cast<std::int64_t>(cutoff + 1) * legs_total;
}

int default_cutoff(const CurvePartition& pi) { return pi.max_coordinate() + 2; }

std::int64_t renormalized_volume(const CurvePartition& pi) {
  const int n = default_cutoff(pi);
  const std::int64_t v = renormalized_volume_at(pi, n);
  if (v != renormalized_volume_at(pi, n + 1))
    throw std::logic_error("renormalized_volume: cut-off instability");
  return v;
}

std::int64_t f_m(const PlanePartition& lambda, const NormalDegrees& m) {
  std::int64_t total = 0;
  for (const auto& b : lambda.boxes)
    total += 1 - static_cast<std::int64_t>(m.m2) * b[0] -
             static_cast<std::int64_t>(m.m3) * b[1] -
             static_cast<std::int64_t>(m.m4) * b[2];
  return total;
}

std::int64_t sigma_point(const SolidPartition& pi, int axis) {
  return static_cast<std::int64_t>(pi.size()) + diag_count(pi.boxes, axis);
}

std::int64_t sigma_curve_at(const CurvePartition& pi, int axis, int cutoff) {
  std::int64_t s = renormalized_volume_at(pi, cutoff) +
                   diag_count(pi.boxes_in_cube(cutoff), axis);
  for (int a = 1; a <= 4; ++a)
    s -= diag_count(pi.leg_cylinder_cutoff(a, cutoff).boxes, axis);
  return s;
}

std::int64_t sigma_curve(const CurvePartition& pi, int axis) {
  const int n = default_cutoff(pi);
  const std::int64_t s = sigma_curve_at(pi, axis, n);
  if (s != sigma_curve_at(pi, axis, n + 1))
    throw std::logic_error("sigma_curve: cut-off instability");
  return s;
}

std::int64_t sigma_edge(const PlanePartition& lambda, const NormalDegrees& m,
                        int axis) {
  // coordinates of lambda boxes are labeled (a2,a3,a4)
  int j = 0, k = 0;
  switch (axis) {
    case 2: j = 1, k = 2; break;
    case 3: j = 0, k = 2; break;
    case 4: j = 0, k = 1; break;
    default: throw std::invalid_argument("sigma_edge: axis must be 2..4");
  }
  const int i = axis - 2;
  std::int64_t diag = 0;
  for (const auto& b : lambda.boxes)
    if (b[static_cast<std::size_t>(j)] == b[static_cast<std::size_t>(k)] &&
        b[static_cast<std::size_t>(j)] < b[static_cast<std::size_t>(i)])
      ++diag;
  return f_m(lambda, m) + static_cast<std::int64_t>(lambda.size()) * m[axis] + diag;
}

CharClass char_of(const SolidPartition& pi) {
  CharClass c;
  for (const auto& b : pi.boxes)
    c.add_term(Weight::of(b[0], b[1], b[2], b[3], 0), 1);
  return c;
}

CharClass char_of(const PlanePartition& lambda, int axis) {
  const auto t = transverse_axes(axis);
  CharClass c;
  for (const auto& b : lambda.boxes) {
    std::array<std::int32_t, 5> raw{0, 0, 0, 0, 0};
    for (int k = 0; k < 3; ++k)
      raw[static_cast<std::size_t>(t[static_cast<std::size_t>(k)] - 1)] =
          b[static_cast<std::size_t>(k)];
    c.add_term(Weight::of(raw), 1);
  }
  return c;
}

SolidPartition permute_axes(const SolidPartition& pi, const std::array<int, 4>& perm) {
  SolidPartition out;
  out.boxes.reserve(pi.boxes.size());
  for (const auto& b : pi.boxes) {
    Box4 c{};
    for (int i = 0; i < 4; ++i)
      c[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] - 1)] =
          b[static_cast<std::size_t>(i)];
    out.boxes.push_back(c);
  }
  std::sort(out.boxes.begin(), out.boxes.end());
  return out;
}

}  // namespace dt4
