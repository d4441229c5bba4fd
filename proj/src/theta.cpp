#include "dt4/theta.hpp"

#include <stdexcept>

#include "dt4/errors.hpp"

namespace dt4 {

namespace {

using Series = std::vector<RationalFunction>;  // coefficients of p^0..p^P

Series series_mul(const Series& a, const Series& b) {
  Series c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size() && j < b.size(); ++j)
      c[i + j] += a[i] * b[j];
  return c;
}

Series series_inv(const Series& a) {
  Series b(a.size());
  b[0] = a[0].inverse();
  for (std::size_t k = 1; k < a.size(); ++k) {
    RationalFunction acc;
    for (std::size_t j = 1; j <= k; ++j) acc += a[j] * b[k - j];
    b[k] = acc.negated() * b[0];
  }
  return b;
}

// -[t^w] prod_{n=1}^{P} (1 - t^w p^n)(1 - t^{-w} p^n), truncated.
// In half-power variables t^w = X^{2w} and [t^w] = X^w - X^{-w}.
Series weight_series(const Weight& w, int order) {
  const auto& e = w.exponents();
  const Poly::Expo half{e[0], e[1], e[2], e[4]};
  const Poly::Expo mhalf{-e[0], -e[1], -e[2], -e[4]};
  const Poly::Expo full{2 * e[0], 2 * e[1], 2 * e[2], 2 * e[4]};
  const Poly::Expo mfull{-2 * e[0], -2 * e[1], -2 * e[2], -2 * e[4]};

  Series s(static_cast<std::size_t>(order) + 1);
  s[0] = RationalFunction(Poly::monomial(mhalf) - Poly::monomial(half));
  const RationalFunction tp(Poly::monomial(full));
  const RationalFunction tm(Poly::monomial(mfull));
  for (int n = 1; n <= order; ++n) {
    for (const auto& tw : {tp, tm}) {
      // multiply by (1 - t^{+-w} p^n)
      Series next = s;
      for (std::size_t k = static_cast<std::size_t>(n); k < s.size(); ++k)
        next[k] = next[k] - s[k - static_cast<std::size_t>(n)] * tw;
      s = std::move(next);
    }
  }
  return s;
}

}  // namespace

ThetaClass ThetaClass::truncated(int new_order) const {
  if (new_order > order_)
    throw std::invalid_argument("ThetaClass::truncated beyond stored order");
  ThetaClass t(new_order, lead_);
  for (int k = 0; k <= new_order; ++k) t.at(k) = at(k);
  return t;
}

ThetaClass ThetaClass::negated() const {
  ThetaClass t(order_, lead_);
  for (int k = 0; k <= order_; ++k) t.at(k) = at(k).negated();
  return t;
}

ThetaClass ThetaClass::operator*(const ThetaClass& o) const {
  const int order = order_ < o.order_ ? order_ : o.order_;
  ThetaClass t(order, lead_ + o.lead_);
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order && j <= o.order_; ++j)
      t.at(i + j) += at(i) * o.at(j);
  return t;
}

ThetaClass ThetaClass::operator+(const ThetaClass& o) const {
  const Rational diff = o.lead_ - lead_;
  const BigInt num = boost::multiprecision::numerator(diff);
  const BigInt den = boost::multiprecision::denominator(diff);
  if (den != 1)
    throw std::invalid_argument("ThetaClass::operator+: fractional p-offset");
  const long long off = num.convert_to<long long>();
  // align on the smaller leading exponent
  const ThetaClass& lo = off >= 0 ? *this : o;
  const ThetaClass& hi = off >= 0 ? o : *this;
  const long long shift = off >= 0 ? off : -off;
  const int order = lo.order_ < hi.order_ ? lo.order_ : hi.order_;
  ThetaClass t(order, lo.lead_);
  for (int k = 0; k <= order; ++k) {
    t.at(k) = lo.at(k);
    if (k >= shift) t.at(k) += hi.at(static_cast<int>(k - shift));
  }
  return t;
}

bool ThetaClass::equals(const ThetaClass& o) const {
  if (order_ != o.order_ || lead_ != o.lead_) return false;
  for (int k = 0; k <= order_; ++k)
    if (!at(k).equals(o.at(k))) return false;
  return true;
}

ThetaClass theta_class(const CharClass& v, int order) {
  if (v.fixed_part() != 0)
    throw FixedPartPresent("theta_class of non-movable character");
  Series acc(static_cast<std::size_t>(order) + 1);
  acc[0] = RationalFunction::constant(1);
  Rational lead = 0;
  for (const auto& [w, mult] : v.terms()) {
    lead += Rational(mult, 12);
    Series base = weight_series(w, order);
    if (mult < 0) base = series_inv(base);
    const std::int64_t reps = mult < 0 ? -mult : mult;
    for (std::int64_t r = 0; r < reps; ++r) acc = series_mul(acc, base);
  }
  ThetaClass t(order, lead);
  for (int k = 0; k <= order; ++k) t.at(k) = acc[static_cast<std::size_t>(k)];
  return t;
}

}  // namespace dt4
