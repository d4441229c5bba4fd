#pragma once

#include <vector>

#include "dt4/char_class.hpp"
#include "dt4/rational_function.hpp"

namespace dt4 {

/// A truncated elliptic class: a p-series
///   p^{lead} * (coeff[0] + coeff[1] p + ... + coeff[P] p^P)
/// whose coefficients are exact rational functions in the half-power
/// character variables. The leading exponent is a rational with denominator
/// dividing 24 (multiples of 1/12 arise here).
class ThetaClass {
 public:
  ThetaClass(int order, Rational lead)
      : order_(order), lead_(std::move(lead)),
        coeff_(static_cast<std::size_t>(order) + 1) {}

  int order() const { return order_; }
  const Rational& lead() const { return lead_; }
  const std::vector<RationalFunction>& coeff() const { return coeff_; }
  RationalFunction& at(int k) { return coeff_[static_cast<std::size_t>(k)]; }
  const RationalFunction& at(int k) const {
    return coeff_[static_cast<std::size_t>(k)];
  }

  static ThetaClass unit(int order) {
    ThetaClass t(order, 0);
    t.at(0) = RationalFunction::constant(1);
    return t;
  }

  ThetaClass truncated(int new_order) const;
  ThetaClass negated() const;
  ThetaClass operator*(const ThetaClass& o) const;
  /// Sum; both operands must share the leading exponent modulo an integer
  /// offset representable within the truncation windows.
  ThetaClass operator+(const ThetaClass& o) const;

  bool equals(const ThetaClass& o) const;

 private:
  int order_;
  Rational lead_;
  std::vector<RationalFunction> coeff_;
};

/// Elliptic class theta[V], truncated at p-order P. Derived from the
/// defining products: for a single weight,
///   theta[t^w] = -p^{1/12} [t^w] prod_{n>=1} (1 - t^w p^n)(1 - t^{-w} p^n),
/// extended multiplicatively over the weight decomposition (series are
/// inverted for negative multiplicities). Antisymmetric under w -> -w.
/// Throws FixedPartPresent when fixed_part(v) != 0.
ThetaClass theta_class(const CharClass& v, int order);

}  // namespace dt4
