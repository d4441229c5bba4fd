#include "dt4/rational_function.hpp"

#include <limits>
#include <stdexcept>

namespace dt4 {

Poly Poly::pow(int n) const {
  if (n < 0) throw std::invalid_argument("Poly::pow: negative exponent");
  Poly r = Poly::constant(1);
  Poly base = *this;
  while (n > 0) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

Poly Poly::substituted(const std::array<Poly, 4>& images) const {
  Poly out;
  for (const auto& [e, c] : terms_) {
    Poly term = Poly::constant(c);
    for (std::size_t i = 0; i < 4; ++i) {
      if (e[i] < 0)
        throw std::invalid_argument("Poly::substituted: negative exponent");
      if (e[i] > 0) term *= images[i].pow(e[i]);
    }
    out += term;
  }
  return out;
}

std::string Poly::str(const std::array<std::string, 4>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.str();
    for (std::size_t i = 0; i < 4; ++i)
      if (e[i] != 0) s += "*" + names[i] + "^" + std::to_string(e[i]);
  }
  return s;
}

RationalFunction::RationalFunction(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw std::invalid_argument("RationalFunction: zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  // shift out the common monomial so all exponents are >= 0 with a zero
  // minimum per variable across numerator and denominator jointly
  Poly::Expo shift{std::numeric_limits<std::int32_t>::max(),
                   std::numeric_limits<std::int32_t>::max(),
                   std::numeric_limits<std::int32_t>::max(),
                   std::numeric_limits<std::int32_t>::max()};
  auto scan = [&shift](const Poly& p) {
    for (const auto& [e, c] : p.terms())
      for (std::size_t i = 0; i < 4; ++i)
        if (e[i] < shift[i]) shift[i] = e[i];
  };
  scan(num_);
  scan(den_);
  bool trivial = true;
  for (std::size_t i = 0; i < 4; ++i) trivial = trivial && shift[i] == 0;
  if (!trivial) {
    auto apply = [&shift](const Poly& p) {
      Poly q;
      for (const auto& [e, c] : p.terms()) {
        Poly::Expo f;
        for (std::size_t i = 0; i < 4; ++i) f[i] = e[i] - shift[i];
        q.add_term(f, c);
      }
      return q;
    };
    num_ = apply(num_);
    den_ = apply(den_);
  }
  // scale so the denominator's lex-least coefficient is +1
  const Rational lead = den_.terms().begin()->second;
  if (lead != 1) {
    const Rational inv = Rational(1) / lead;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + o.negated();
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::negated() const {
  RationalFunction r;
  r.num_ = num_.negated();
  r.den_ = den_;
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero())
    throw std::invalid_argument("RationalFunction::inverse of zero");
  return RationalFunction(den_, num_);
}

bool RationalFunction::equals(const RationalFunction& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

}  // namespace dt4
