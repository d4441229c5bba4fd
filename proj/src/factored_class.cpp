#include "dt4/factored_class.hpp"

#include <numeric>

#include "dt4/errors.hpp"

namespace dt4 {

namespace {

// exponent of a rational base: base^e with e possibly negative
Rational rational_pow(const Rational& base, std::int64_t e) {
  Rational r = 1;
  Rational b = e >= 0 ? base : Rational(1) / base;
  std::int64_t n = e >= 0 ? e : -e;
  for (; n > 0; n >>= 1) {
    if (n & 1) r *= b;
    b *= b;
  }
  return r;
}

}  // namespace

void FactoredClass::push_factor(Key key, std::int64_t exponent) {
  if (exponent == 0) return;
  if (mode_ == EulerMode::Cohomological) {
    std::int64_t content = 0;
    for (auto c : key) content = std::gcd(content, static_cast<std::int64_t>(c < 0 ? -c : c));
    if (content == 0) throw FixedPartPresent("euler factor of trivial weight");
    int flip = 1;
    for (auto c : key) {
      if (c != 0) {
        flip = c > 0 ? 1 : -1;
        break;
      }
    }
    if (content != 1 || flip < 0) {
      for (auto& c : key) c = static_cast<std::int32_t>(flip * c / content);
      if (flip < 0 && (exponent & 1)) sign_ = -sign_;
      if (content != 1) scalar_ *= rational_pow(Rational(content), exponent);
    }
  } else {
    int flip = 1;
    for (auto c : key) {
      if (c != 0) {
        flip = c > 0 ? 1 : -1;
        break;
      }
    }
    if (flip == 0 || (key[0] == 0 && key[1] == 0 && key[2] == 0 && key[3] == 0))
      throw FixedPartPresent("bracket [1] = 0");
    if (flip < 0) {
      for (auto& c : key) c = -c;
      if (exponent & 1) sign_ = -sign_;  // [t^{-w}] = -[t^w]
    }
  }
  auto it = factors_.find(key);
  if (it == factors_.end()) {
    factors_.emplace(key, exponent);
  } else if ((it->second += exponent) == 0) {
    factors_.erase(it);
  }
}

FactoredClass& FactoredClass::operator*=(const FactoredClass& o) {
  sign_ *= o.sign_;
  scalar_ *= o.scalar_;
  for (const auto& [k, e] : o.factors_) {
    auto it = factors_.find(k);
    if (it == factors_.end()) {
      factors_.emplace(k, e);
    } else if ((it->second += e) == 0) {
      factors_.erase(it);
    }
  }
  return *this;
}

FactoredClass FactoredClass::inverse() const {
  FactoredClass f(mode_);
  f.sign_ = sign_;
  f.scalar_ = Rational(1) / scalar_;
  for (const auto& [k, e] : factors_) f.factors_.emplace(k, -e);
  return f;
}

RationalFunction FactoredClass::expand() const {
  Poly num = Poly::constant(scalar_ * sign_);
  Poly den = Poly::constant(1);
  for (const auto& [key, e] : factors_) {
    Poly base;
    if (mode_ == EulerMode::Cohomological) {
      for (std::size_t i = 0; i < 4; ++i)
        if (key[i] != 0)
          base += Poly::variable(static_cast<int>(i)).scaled(key[i]);
    } else {
      // [t^w] = t^{w/2} - t^{-w/2} = X^w - X^{-w} in half-power variables
      Poly::Expo pos{key[0], key[1], key[2], key[3]};
      Poly::Expo neg{-key[0], -key[1], -key[2], -key[3]};
      base = Poly::monomial(pos) - Poly::monomial(neg);
    }
    Poly p = base.pow(static_cast<int>(e < 0 ? -e : e));
    (e > 0 ? num : den) *= p;
  }
  return RationalFunction(std::move(num), std::move(den));
}

std::string FactoredClass::str() const {
  std::string s = sign_ > 0 ? "+" : "-";
  s += scalar_.str();
  for (const auto& [k, e] : factors_) {
    s += (mode_ == EulerMode::Cohomological ? " * form(" : " * [");
    for (std::size_t i = 0; i < 4; ++i)
      s += std::to_string(k[i]) + (i + 1 < 4 ? "," : "");
    s += mode_ == EulerMode::Cohomological ? ")" : "]";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

namespace {

FactoredClass class_of(const CharClass& v, EulerMode mode) {
  if (v.fixed_part() != 0)
    throw FixedPartPresent(mode == EulerMode::Cohomological
                               ? "euler_class of non-movable character"
                               : "khat_class of non-movable character");
  FactoredClass f(mode);
  for (const auto& [w, mult] : v.terms()) {
    const auto& e = w.exponents();
    f.push_factor({e[0], e[1], e[2], e[4]}, mult);
  }
  return f;
}

}  // namespace

FactoredClass euler_class(const CharClass& v) {
  return class_of(v, EulerMode::Cohomological);
}

FactoredClass khat_class(const CharClass& v) {
  return class_of(v, EulerMode::KTheoretic);
}

}  // namespace dt4
