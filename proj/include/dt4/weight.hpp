#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>

namespace dt4 {

/// A character of the extended torus lattice Z^4 x Z: exponents of
/// (t1,t2,t3,t4) plus a fifth "mass" direction for auxiliary insertion
/// parameters. Values are kept in canonical form: the t4 exponent is
/// eliminated through the Calabi-Yau relation t1 t2 t3 t4 = 1 by
/// subtracting a4 * (1,1,1,1,0), so canonical weights always have e[3] == 0.
/// The mass direction is unconstrained by the relation.
class Weight {
 public:
  using Exponents = std::array<std::int32_t, 5>;

  constexpr Weight() = default;

  static Weight of(std::int32_t a1, std::int32_t a2, std::int32_t a3,
                   std::int32_t a4, std::int32_t a5 = 0) {
    Weight w;
    w.e_ = {a1 - a4, a2 - a4, a3 - a4, 0, a5};
    return w;
  }

  static Weight of(const Exponents& raw) {
    return of(raw[0], raw[1], raw[2], raw[3], raw[4]);
  }

  /// t_i for i in 1..4.
  static Weight axis(int i) {
    Exponents raw{0, 0, 0, 0, 0};
    raw[static_cast<std::size_t>(i - 1)] = 1;
    return of(raw);
  }

  /// The auxiliary mass character (fifth coordinate).
  static Weight mass(std::int32_t k = 1) { return of(0, 0, 0, 0, k); }

  const Exponents& exponents() const { return e_; }
  std::int32_t operator[](std::size_t i) const { return e_[i]; }

  bool is_zero() const {
    return e_[0] == 0 && e_[1] == 0 && e_[2] == 0 && e_[4] == 0;
  }

  Weight operator+(const Weight& o) const {
    Weight w;
    for (std::size_t i = 0; i < 5; ++i) w.e_[i] = e_[i] + o.e_[i];
    return w;  // sums of canonical forms stay canonical (e[3] == 0)
  }

  Weight operator-() const {
    Weight w;
    for (std::size_t i = 0; i < 5; ++i) w.e_[i] = -e_[i];
    return w;
  }

  Weight operator-(const Weight& o) const { return *this + (-o); }

  Weight scaled(std::int32_t k) const {
    Weight w;
    for (std::size_t i = 0; i < 5; ++i) w.e_[i] = k * e_[i];
    return w;
  }

  auto operator<=>(const Weight&) const = default;

  /// Sign of the first nonzero exponent; 0 for the trivial weight.
  int lex_sign() const {
    for (std::size_t i = 0; i < 5; ++i) {
      if (e_[i] > 0) return 1;
      if (e_[i] < 0) return -1;
    }
    return 0;
  }

  /// The unique representative with zero t1 exponent, reported as the
  /// exponents (n2,n3,n4) of a t1-free monomial. Requires zero mass.
  std::array<std::int32_t, 3> transverse_exponents() const {
    // canonical (x,y,z,0) == raw (0, y-x, z-x, -x) mod t1t2t3t4 = 1
    return {e_[1] - e_[0], e_[2] - e_[0], -e_[0]};
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < 5; ++i)
      s += std::to_string(e_[i]) + (i + 1 < 5 ? "," : ")");
    return s;
  }

 private:
  Exponents e_{0, 0, 0, 0, 0};
};

inline Weight canonicalize(std::int32_t a1, std::int32_t a2, std::int32_t a3,
                           std::int32_t a4, std::int32_t a5 = 0) {
  return Weight::of(a1, a2, a3, a4, a5);
}

}  // namespace dt4
