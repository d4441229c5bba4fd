#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "dt4/char_class.hpp"

namespace dt4 {

using Box3 = std::array<int, 3>;
using Box4 = std::array<int, 4>;

/// Finite downward-closed box set in Z^3_{>=0}; boxes kept sorted.
struct PlanePartition {
  std::vector<Box3> boxes;

  std::size_t size() const { return boxes.size(); }
  bool empty() const { return boxes.empty(); }
  bool contains(const Box3& b) const;
  bool is_downward_closed() const;
  bool operator==(const PlanePartition&) const = default;
  auto operator<=>(const PlanePartition&) const = default;
};

/// Finite downward-closed box set in Z^4_{>=0}.
struct SolidPartition {
  std::vector<Box4> boxes;

  std::size_t size() const { return boxes.size(); }
  bool empty() const { return boxes.empty(); }
  bool contains(const Box4& b) const;
  bool is_downward_closed() const;
  bool operator==(const SolidPartition&) const = default;
  auto operator<=>(const SolidPartition&) const = default;
};

/// Splitting degrees of the normal bundle of an invariant line; the
/// Calabi-Yau condition forces m2 + m3 + m4 = -2.
struct NormalDegrees {
  int m2 = 0, m3 = 0, m4 = 0;

  int sum() const { return m2 + m3 + m4; }
  int operator[](int i) const { return i == 2 ? m2 : (i == 3 ? m3 : m4); }
  bool operator==(const NormalDegrees&) const = default;
};

/// A possibly infinite solid partition with finite asymptotics: four leg
/// plane partitions (leg a extends along axis a, profile coordinates are
/// the remaining axes in increasing order) plus finitely many extra boxes
/// disjoint from the leg cylinders. Downward closure forces every such
/// partition to contain the cylinder union, so the representation is
/// lossless.
struct CurvePartition {
  std::array<PlanePartition, 4> legs;
  std::vector<Box4> extra;

  static CurvePartition point_like(SolidPartition pi) {
    CurvePartition c;
    c.extra = std::move(pi.boxes);
    return c;
  }

  bool point_like_q() const {
    return legs[0].empty() && legs[1].empty() && legs[2].empty() &&
           legs[3].empty();
  }
  bool in_cylinder(const Box4& b, int axis) const;  // axis in 1..4
  bool in_cylinders(const Box4& b) const;
  bool contains(const Box4& b) const;
  /// Largest coordinate appearing in extra boxes or leg boxes (-1 if none).
  int max_coordinate() const;
  /// Boxes of the full set inside [0,N]^4.
  std::vector<Box4> boxes_in_cube(int cutoff) const;
  /// The finite truncation of the cylinder along `axis` to [0,N] extent,
  /// as a point-like solid partition.
  SolidPartition leg_cylinder_cutoff(int axis, int cutoff) const;
  /// The truncation of the whole partition to [0,N]^4.
  SolidPartition normalized_cutoff(int cutoff) const;
  bool is_valid() const;

  bool operator==(const CurvePartition&) const = default;
  auto operator<=>(const CurvePartition&) const = default;
};

// ---------------------------------------------------------------------------
// Enumeration. Partitions are generated exactly once each by canonical box
// additions (a box may be added only when its coordinate predecessors are
// present and it is the lexicographically greatest removable box of the
// result), so no deduplication pass is needed. The visitor forms stream
// results without materializing the full list.

void visit_plane_partitions(int max_size,
                            const std::function<void(const PlanePartition&)>& visit);
void visit_solid_partitions(int max_size,
                            const std::function<void(const SolidPartition&)>& visit);
void visit_curve_partitions(const std::array<PlanePartition, 4>& legs, int max_extra,
                            const std::function<void(const CurvePartition&)>& visit);

/// All plane partitions of size exactly n (n >= 1).
std::vector<PlanePartition> enumerate_plane(int n);
/// All solid partitions of size exactly n (n >= 1).
std::vector<SolidPartition> enumerate_solid(int n);
/// All curve partitions with the given legs and 0 <= |extra| <= kmax.
std::vector<CurvePartition> enumerate_curve(const std::array<PlanePartition, 4>& legs,
                                            int kmax);

// ---------------------------------------------------------------------------
// Statistics.

/// Renormalized volume |pi| = #(pi in [0,N]^4) - (N+1) sum |legs|, computed
/// at the default cut-off and asserted equal at the next one.
std::int64_t renormalized_volume(const CurvePartition& pi);
std::int64_t renormalized_volume_at(const CurvePartition& pi, int cutoff);

/// f_m(lambda) = sum over (i,j,k) in lambda of (1 - m2 i - m3 j - m4 k).
std::int64_t f_m(const PlanePartition& lambda, const NormalDegrees& m);

/// Point sign statistic sigma_i(pi) = |pi| + #{a_j = a_k = a_l < a_i}.
std::int64_t sigma_point(const SolidPartition& pi, int axis);

/// Curve sign statistic: renormalized volume plus the diagonal count of pi
/// minus those of the four leg cylinders, all inside [0,N]^4; the value is
/// verified stable under N -> N+1.
std::int64_t sigma_curve(const CurvePartition& pi, int axis);
std::int64_t sigma_curve_at(const CurvePartition& pi, int axis, int cutoff);

/// Edge sign statistic sigma_i(lambda) = f_m + |lambda| m_i + #{a_j=a_k<a_i},
/// axis in 2..4.
std::int64_t sigma_edge(const PlanePartition& lambda, const NormalDegrees& m,
                        int axis);

/// Character of a finite solid partition: sum of t^box.
CharClass char_of(const SolidPartition& pi);
/// Character of a plane partition assigned to the leg along `axis`: the
/// remaining axes in increasing order carry the three box coordinates.
CharClass char_of(const PlanePartition& lambda, int axis);

/// Default cut-off 2 + max coordinate, the smallest admissible one.
int default_cutoff(const CurvePartition& pi);

/// Axis relabeling g . pi (perm maps axis a to perm[a-1]).
SolidPartition permute_axes(const SolidPartition& pi, const std::array<int, 4>& perm);

/// The three axes other than `axis`, increasing (1-based).
std::array<int, 3> transverse_axes(int axis);

}  // namespace dt4
