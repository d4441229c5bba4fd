#include "dt4/rat_char.hpp"

namespace dt4 {

RatChar& RatChar::div_factor(const Weight& w, int power) {
  if (w.is_zero())
    throw NotDivisible("denominator factor (1 - t^w) with T-fixed weight");
  Weight v = w;
  for (int k = 0; k < power; ++k) {
    if (v.lex_sign() < 0) {
      // 1/(1 - t^w) = -t^{-w} / (1 - t^{-w})
      num_ = num_.shifted(-v).negated();
      v = -v;
    }
    den_[v] += 1;
    v = w;
  }
  return *this;
}

RatChar& RatChar::operator*=(const RatChar& o) {
  num_ *= o.num_;
  for (const auto& [w, p] : o.den_) den_[w] += p;
  return *this;
}

RatChar& RatChar::operator+=(const RatChar& o) {
  // common denominator: max power per factor
  CharClass lhs = num_, rhs = o.num_;
  Denominator common = den_;
  for (const auto& [w, p] : o.den_) {
    auto it = common.find(w);
    if (it == common.end() || it->second < p) common[w] = p;
  }
  for (const auto& [w, p] : common) {
    auto it = den_.find(w);
    int missing = p - (it == den_.end() ? 0 : it->second);
    for (int k = 0; k < missing; ++k)
      lhs *= CharClass::one() - CharClass::monomial(w);
    auto jt = o.den_.find(w);
    missing = p - (jt == o.den_.end() ? 0 : jt->second);
    for (int k = 0; k < missing; ++k)
      rhs *= CharClass::one() - CharClass::monomial(w);
  }
  num_ = lhs + rhs;
  den_ = std::move(common);
  return *this;
}

RatChar& RatChar::operator-=(const RatChar& o) { return *this += o.negated(); }

RatChar RatChar::bar() const {
  // bar(1 - t^w) = (1 - t^{-w}) = -t^{-w}(1 - t^w), so each denominator
  // factor contributes a unit -t^w to the dual numerator.
  RatChar r(num_.bar());
  for (const auto& [w, p] : den_) {
    for (int k = 0; k < p; ++k) r.num_ = r.num_.shifted(w).negated();
    r.den_[w] = p;
  }
  return r;
}

CharClass divide_by_factor(const CharClass& f, const Weight& w) {
  // Solve Q (1 - t^w) = f for w lexicographically positive. The lex-min
  // term of the remainder is forced to be a term of Q; translation by w
  // preserves lex order, so quotient exponents are bounded above by
  // lex_max(f) - w. Exceeding the bound certifies non-divisibility.
  if (f.is_zero()) return f;
  const Weight bound = f.lex_max() - w;
  CharClass rem = f, quotient;
  while (!rem.is_zero()) {
    const Weight a = rem.lex_min();
    const std::int64_t c = rem.terms().begin()->second;
    if (bound < a)
      throw NotDivisible("no Laurent quotient by (1 - t^" + w.str() + ")");
    quotient.add_term(a, c);
    rem.add_term(a, -c);
    rem.add_term(a + w, c);
  }
  return quotient;
}

CharClass RatChar::divide_exact() const {
  CharClass q = num_;
  for (const auto& [w, p] : den_)  // map iteration is already lex-sorted
    for (int k = 0; k < p; ++k) q = divide_by_factor(q, w);
  return q;
}

}  // namespace dt4
