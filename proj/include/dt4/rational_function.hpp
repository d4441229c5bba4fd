#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dt4 {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Sparse Laurent polynomial with rational coefficients in four variables.
/// The variables are interpreted by the caller: (l1,l2,l3,mass) for
/// cohomological values, half-power characters (t1^{1/2},t2^{1/2},t3^{1/2},
/// y^{1/2}) for K-theoretic ones.
class Poly {
 public:
  using Expo = std::array<std::int32_t, 4>;
  using Terms = std::map<Expo, Rational>;

  Poly() = default;

  static Poly constant(const Rational& c) {
    Poly p;
    p.add_term({0, 0, 0, 0}, c);
    return p;
  }
  static Poly monomial(const Expo& e, const Rational& c = 1) {
    Poly p;
    p.add_term(e, c);
    return p;
  }
  static Poly variable(int i) {
    Expo e{0, 0, 0, 0};
    e[static_cast<std::size_t>(i)] = 1;
    return monomial(e);
  }

  void add_term(const Expo& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else if ((it->second += c) == 0) {
      terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly p;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Expo e;
        for (std::size_t i = 0; i < 4; ++i) e[i] = ea[i] + eb[i];
        p.add_term(e, ca * cb);
      }
    return p;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Rational& c) const {
    Poly p;
    if (c == 0) return p;
    for (const auto& [e, k] : terms_) p.terms_.emplace(e, k * c);
    return p;
  }
  Poly negated() const { return scaled(-1); }

  Poly pow(int n) const;

  /// Substitution of each variable by a polynomial image. All exponents of
  /// *this must be nonnegative.
  Poly substituted(const std::array<Poly, 4>& images) const;

  bool operator==(const Poly&) const = default;

  std::string str(const std::array<std::string, 4>& names) const;

 private:
  Terms terms_;
};

/// Quotient of two Laurent polynomials; the denominator is never zero.
/// Equality is decided by cross-multiplication, never by normal forms.
/// Light normalization (shared monomial shift, unit denominator scaling)
/// keeps the representation small and its serialization deterministic.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Poly::constant(1)) {}
  explicit RationalFunction(Poly num) : num_(std::move(num)), den_(Poly::constant(1)) {}
  RationalFunction(Poly num, Poly den);

  static RationalFunction constant(const Rational& c) {
    return RationalFunction(Poly::constant(c));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction negated() const;
  RationalFunction inverse() const;

  /// Field equality: num * o.den == o.num * den.
  bool equals(const RationalFunction& o) const;

 private:
  void normalize();

  Poly num_, den_;
};

}  // namespace dt4
