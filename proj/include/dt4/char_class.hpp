#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "dt4/weight.hpp"

namespace dt4 {

/// A virtual torus character: a finite integer-multiplicity combination of
/// canonical weights. Closed under addition, negation and multiplication
/// (convolution of weights); zero multiplicities are never stored.
class CharClass {
 public:
  using Terms = std::map<Weight, std::int64_t>;

  CharClass() = default;

  static CharClass zero() { return {}; }
  static CharClass one() { return monomial(Weight{}, 1); }
  static CharClass monomial(const Weight& w, std::int64_t mult = 1) {
    CharClass c;
    c.add_term(w, mult);
    return c;
  }

  void add_term(const Weight& w, std::int64_t mult) {
    if (mult == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, mult);
    } else if ((it->second += mult) == 0) {
      terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Sum of multiplicities (virtual dimension).
  std::int64_t rank() const {
    std::int64_t r = 0;
    for (const auto& [w, m] : terms_) r += m;
    return r;
  }

  /// Multiplicity of the trivial weight; the class is T-movable iff 0.
  std::int64_t fixed_part() const {
    auto it = terms_.find(Weight{});
    return it == terms_.end() ? 0 : it->second;
  }

  std::int64_t movable_rank() const { return rank() - fixed_part(); }

  /// Dual representation: every weight negated.
  CharClass bar() const {
    CharClass c;
    for (const auto& [w, m] : terms_) c.terms_.emplace(-w, m);
    return c;
  }

  CharClass negated() const {
    CharClass c;
    for (const auto& [w, m] : terms_) c.terms_.emplace(w, -m);
    return c;
  }

  CharClass& operator+=(const CharClass& o) {
    for (const auto& [w, m] : o.terms_) add_term(w, m);
    return *this;
  }
  CharClass& operator-=(const CharClass& o) {
    for (const auto& [w, m] : o.terms_) add_term(w, -m);
    return *this;
  }
  friend CharClass operator+(CharClass a, const CharClass& b) { return a += b; }
  friend CharClass operator-(CharClass a, const CharClass& b) { return a -= b; }

  friend CharClass operator*(const CharClass& a, const CharClass& b) {
    CharClass c;
    const CharClass& small = a.terms_.size() <= b.terms_.size() ? a : b;
    const CharClass& large = a.terms_.size() <= b.terms_.size() ? b : a;
    for (const auto& [ws, ms] : small.terms_)
      for (const auto& [wl, ml] : large.terms_) c.add_term(ws + wl, ms * ml);
    return c;
  }
  CharClass& operator*=(const CharClass& o) { return *this = *this * o; }

  /// Translation by a single weight: V -> t^w V.
  CharClass shifted(const Weight& w) const {
    CharClass c;
    for (const auto& [v, m] : terms_) c.terms_.emplace(v + w, m);
    return c;
  }

  bool operator==(const CharClass&) const = default;

  /// Lowest / highest weight in lexicographic order. Requires nonzero class.
  const Weight& lex_min() const { return terms_.begin()->first; }
  const Weight& lex_max() const { return terms_.rbegin()->first; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, m] : terms_) {
      if (!s.empty()) s += " ";
      s += (m >= 0 ? "+" : "") + std::to_string(m) + "*t^" + w.str();
    }
    return s;
  }

 private:
  Terms terms_;
};

/// The chart-transition substitution across an edge with normal degrees
/// (m2,m3,m4): t1 -> t1^{-1}, t_c -> t_c t1^{-m_c}. Well defined on
/// canonical classes exactly when m2+m3+m4 = -2.
inline Weight tilde(const Weight& w, int m2, int m3, int m4) {
  const auto& e = w.exponents();
  // canonical weights have e[3] == 0, so only three products contribute
  return Weight::of(-e[0] - m2 * e[1] - m3 * e[2], e[1], e[2], 0, e[4]);
}

inline CharClass tilde(const CharClass& v, int m2, int m3, int m4) {
  CharClass c;
  for (const auto& [w, m] : v.terms()) c.add_term(tilde(w, m2, m3, m4), m);
  return c;
}

/// Relabels torus axes by a permutation of {1,2,3,4}: axis a of the input
/// becomes axis perm[a-1] of the output.
inline Weight relabel_axes(const Weight& w, const std::array<int, 4>& perm) {
  std::array<std::int32_t, 5> raw{0, 0, 0, 0, w.exponents()[4]};
  for (int a = 0; a < 4; ++a)
    raw[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)] - 1)] =
        w.exponents()[static_cast<std::size_t>(a)];
  return Weight::of(raw);
}

inline CharClass relabel_axes(const CharClass& v,
                              const std::array<int, 4>& perm) {
  CharClass c;
  for (const auto& [w, m] : v.terms()) c.add_term(relabel_axes(w, perm), m);
  return c;
}

}  // namespace dt4
