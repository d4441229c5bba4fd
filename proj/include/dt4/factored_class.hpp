#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "dt4/char_class.hpp"
#include "dt4/rational_function.hpp"

namespace dt4 {

enum class EulerMode { Cohomological, KTheoretic };

/// The value of a localized Euler-class contribution, kept in factored form:
/// an explicit unit sign, a positive rational scalar, and a multiset of
/// factor keys with integer exponents. Cohomological keys are primitive
/// linear forms (content 1, first nonzero coefficient positive) in
/// (l1,l2,l3,mass) with l4 = -l1-l2-l3 eliminated; K-theoretic keys are
/// sign-normalized bracket weights [t^w].
class FactoredClass {
 public:
  using Key = std::array<std::int32_t, 4>;
  using Factors = std::map<Key, std::int64_t>;

  explicit FactoredClass(EulerMode mode) : mode_(mode) {}

  EulerMode mode() const { return mode_; }
  int sign() const { return sign_; }
  const Rational& scalar() const { return scalar_; }
  const Factors& factors() const { return factors_; }

  bool is_unit() const { return factors_.empty(); }

  /// Multiplies in a single normalized factor key^exponent, folding
  /// orientation flips and extracted content into sign and scalar.
  void push_factor(Key key, std::int64_t exponent);

  FactoredClass& operator*=(const FactoredClass& o);
  friend FactoredClass operator*(FactoredClass a, const FactoredClass& b) {
    return a *= b;
  }
  FactoredClass inverse() const;
  FactoredClass negated() const {
    FactoredClass f = *this;
    f.sign_ = -f.sign_;
    return f;
  }

  bool operator==(const FactoredClass&) const = default;

  /// Expands the factored value into a rational function: cohomological
  /// factors as linear forms in (l1,l2,l3,mass), brackets as
  /// X^w - X^{-w} in half-power variables.
  RationalFunction expand() const;

  std::string str() const;

 private:
  EulerMode mode_;
  int sign_ = 1;
  Rational scalar_ = 1;
  Factors factors_;
};

/// Cohomological T-equivariant Euler class of a movable virtual character:
/// the product over weights of w1*l1 + w2*l2 + w3*l3 + w5*mass raised to the
/// multiplicity. Throws FixedPartPresent when fixed_part(v) != 0.
FactoredClass euler_class(const CharClass& v);

/// K-theoretic class [v] = prod [t^w]^{mult}, with [t^{-w}] = -[t^w] folded
/// into the sign. Throws FixedPartPresent when fixed_part(v) != 0.
FactoredClass khat_class(const CharClass& v);

}  // namespace dt4
