#pragma once

#include <map>
#include <string>

#include "dt4/char_class.hpp"
#include "dt4/errors.hpp"
#include "dt4/weight.hpp"

namespace dt4 {

/// A virtual character together with a multiset of denominator factors
/// (1 - t^w), w never T-fixed. Factors are kept sign-normalized (first
/// nonzero exponent of w positive) by extracting the unit
/// (1 - t^w) = -t^w (1 - t^{-w}) into the numerator.
class RatChar {
 public:
  using Denominator = std::map<Weight, int>;  // weight -> power, all > 0

  RatChar() = default;
  /*implicit*/ RatChar(CharClass num) : num_(std::move(num)) {}

  const CharClass& numerator() const { return num_; }
  const Denominator& denominator() const { return den_; }

  /// Divides by (1 - t^w). w must not be T-fixed.
  RatChar& div_factor(const Weight& w, int power = 1);

  RatChar& operator*=(const CharClass& c) {
    num_ *= c;
    return *this;
  }
  RatChar& operator*=(const RatChar& o);
  RatChar& operator+=(const RatChar& o);
  RatChar& operator-=(const RatChar& o);
  friend RatChar operator*(RatChar a, const RatChar& b) { return a *= b; }
  friend RatChar operator+(RatChar a, const RatChar& b) { return a += b; }
  friend RatChar operator-(RatChar a, const RatChar& b) { return a -= b; }

  RatChar bar() const;
  RatChar negated() const { return with_numerator(num_.negated()); }
  RatChar shifted(const Weight& w) const { return with_numerator(num_.shifted(w)); }

  /// The unique Laurent polynomial Q with Q * prod(1 - t^w) = numerator,
  /// if it exists. Factors are divided out in lexicographic weight order.
  /// Throws NotDivisible otherwise.
  CharClass divide_exact() const;

 private:
  RatChar with_numerator(CharClass num) const {
    RatChar r(std::move(num));
    r.den_ = den_;
    return r;
  }

  CharClass num_;
  Denominator den_;
};

/// Long division of a Laurent polynomial by a single factor (1 - t^w) with
/// w lexicographically positive. Throws NotDivisible.
CharClass divide_by_factor(const CharClass& f, const Weight& w);

}  // namespace dt4
