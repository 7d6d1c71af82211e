#pragma once

// Exact multivariate arithmetic for equivariant localization values.
//
// PolyH is Z[alpha_1..alpha_r] (cohomology, variables the simple roots);
// LaurentK is the group algebra Z[root lattice] (K-theory, monomials e^gamma
// with gamma in simple-root coordinates).  Both store sparse exponent->coeff
// maps in lex order, which doubles as the monomial order for exact division.
//
// FracH / FracK are fractions whose denominators stay in factored form: a
// multiset of positive roots, read as linear forms alpha (H) or binomials
// 1 - e^alpha (K).  Every division the localization formulas perform is by
// products of such factors, and both factor kinds are irreducible, so greedy
// exact division keeps fractions fully reduced and makes "is a polynomial"
// decidable.

#include <limits>
#include <map>
#include <optional>

#include "root_system.hpp"

namespace richadm {

struct PolyH {
  int nvars = 0;
  std::map<Vec, long long> t;

  explicit PolyH(int nv = 0) : nvars(nv) {}
  static PolyH constant(int nv, long long c) {
    PolyH p(nv);
    if (c != 0) p.t[Vec(nv, 0)] = c;
    return p;
  }
  static PolyH linear(const Vec& coeffs) {
    PolyH p(static_cast<int>(coeffs.size()));
    for (int i = 0; i < p.nvars; ++i) {
      if (coeffs[i] == 0) continue;
      Vec e(p.nvars, 0);
      e[i] = 1;
      p.t[e] = coeffs[i];
    }
    return p;
  }

  bool zero() const { return t.empty(); }
  bool operator==(const PolyH& o) const { return t == o.t; }

  PolyH& operator+=(const PolyH& o) {
    for (auto& [e, c] : o.t) {
      auto it = t.find(e);
      if (it == t.end())
        t.emplace(e, c);
      else if ((it->second += c) == 0)
        t.erase(it);
    }
    return *this;
  }
  PolyH operator-() const {
    PolyH p = *this;
    for (auto& [e, c] : p.t) c = -c;
    return p;
  }
  PolyH& operator-=(const PolyH& o) { return *this += -o; }
  friend PolyH operator+(PolyH a, const PolyH& b) { return a += b; }
  friend PolyH operator-(PolyH a, const PolyH& b) { return a -= b; }
  friend PolyH operator*(const PolyH& a, const PolyH& b) {
    PolyH p(a.nvars);
    for (auto& [ea, ca] : a.t)
      for (auto& [eb, cb] : b.t) {
        Vec e = ea;
        for (int i = 0; i < p.nvars; ++i) e[i] += eb[i];
        auto it = p.t.find(e);
        if (it == p.t.end())
          p.t.emplace(std::move(e), ca * cb);
        else if ((it->second += ca * cb) == 0)
          p.t.erase(it);
      }
    return p;
  }

  int degree() const {
    int d = -1;
    for (auto& [e, c] : t) {
      int s = 0;
      for (int v : e) s += v;
      d = std::max(d, s);
    }
    return d;
  }
  bool homogeneous(int deg) const {
    for (auto& [e, c] : t) {
      int s = 0;
      for (int v : e) s += v;
      if (s != deg) return false;
    }
    return true;
  }
};

// Exact division p / q; nullopt when q does not divide p.
inline std::optional<PolyH> divide_exact(PolyH p, const PolyH& q) {
  if (q.zero()) throw std::invalid_argument("division by zero polynomial");
  PolyH out(p.nvars);
  const auto& [lq, cq] = *q.t.rbegin();
  while (!p.zero()) {
    const auto& [lp, cp] = *p.t.rbegin();
    Vec e(p.nvars);
    for (int i = 0; i < p.nvars; ++i) {
      e[i] = lp[i] - lq[i];
      if (e[i] < 0) return std::nullopt;
    }
    if (cp % cq != 0) return std::nullopt;
    PolyH mono(p.nvars);
    mono.t[e] = cp / cq;
    out += mono;
    p -= mono * q;
  }
  return out;
}

struct LaurentK {
  int nvars = 0;
  std::map<Vec, long long> t;

  explicit LaurentK(int nv = 0) : nvars(nv) {}
  static LaurentK constant(int nv, long long c) {
    LaurentK p(nv);
    if (c != 0) p.t[Vec(nv, 0)] = c;
    return p;
  }
  static LaurentK monomial(const Vec& gamma, long long c = 1) {
    LaurentK p(static_cast<int>(gamma.size()));
    if (c != 0) p.t[gamma] = c;
    return p;
  }
  // 1 - e^gamma
  static LaurentK one_minus_exp(const Vec& gamma) {
    LaurentK p = constant(static_cast<int>(gamma.size()), 1);
    p += monomial(gamma, -1);
    return p;
  }

  bool zero() const { return t.empty(); }
  bool operator==(const LaurentK& o) const { return t == o.t; }

  LaurentK& operator+=(const LaurentK& o) {
    for (auto& [e, c] : o.t) {
      auto it = t.find(e);
      if (it == t.end())
        t.emplace(e, c);
      else if ((it->second += c) == 0)
        t.erase(it);
    }
    return *this;
  }
  LaurentK operator-() const {
    LaurentK p = *this;
    for (auto& [e, c] : p.t) c = -c;
    return p;
  }
  LaurentK& operator-=(const LaurentK& o) { return *this += -o; }
  friend LaurentK operator+(LaurentK a, const LaurentK& b) { return a += b; }
  friend LaurentK operator-(LaurentK a, const LaurentK& b) { return a -= b; }
  friend LaurentK operator*(const LaurentK& a, const LaurentK& b) {
    LaurentK p(a.nvars);
    for (auto& [ea, ca] : a.t)
      for (auto& [eb, cb] : b.t) {
        Vec e = ea;
        for (int i = 0; i < p.nvars; ++i) e[i] += eb[i];
        auto it = p.t.find(e);
        if (it == p.t.end())
          p.t.emplace(std::move(e), ca * cb);
        else if ((it->second += ca * cb) == 0)
          p.t.erase(it);
      }
    return p;
  }
};

inline std::optional<LaurentK> divide_exact(const LaurentK& p, const LaurentK& q) {
  if (q.zero()) throw std::invalid_argument("division by zero polynomial");
  if (p.zero()) return LaurentK(p.nvars);
  // shift both to nonnegative exponents; the quotient of Laurent polynomials
  // divisible in the Laurent ring is again a polynomial after the shift
  // difference is applied.
  int nv = p.nvars;
  Vec sp(nv, 0), sq(nv, 0);
  auto min_exps = [&](const LaurentK& f, Vec& s) {
    s.assign(nv, std::numeric_limits<int>::max());
    for (auto& [e, c] : f.t)
      for (int i = 0; i < nv; ++i) s[i] = std::min(s[i], e[i]);
  };
  min_exps(p, sp);
  min_exps(q, sq);
  PolyH pp(nv), qq(nv);
  for (auto& [e, c] : p.t) {
    Vec e2 = e;
    for (int i = 0; i < nv; ++i) e2[i] -= sp[i];
    pp.t[e2] = c;
  }
  for (auto& [e, c] : q.t) {
    Vec e2 = e;
    for (int i = 0; i < nv; ++i) e2[i] -= sq[i];
    qq.t[e2] = c;
  }
  auto quot = divide_exact(pp, qq);
  if (!quot) return std::nullopt;
  LaurentK out(nv);
  for (auto& [e, c] : quot->t) {
    Vec e2 = e;
    for (int i = 0; i < nv; ++i) e2[i] += sp[i] - sq[i];
    out.t[e2] = c;
  }
  return out;
}

// ---- fractions with factored denominators ----

namespace detail {

template <class Poly, class FactorFn>
void reduce_factored(Poly& num, std::map<int, int>& den, FactorFn factor_poly) {
  for (auto it = den.begin(); it != den.end();) {
    Poly f = factor_poly(it->first);
    while (it->second > 0) {
      auto q = divide_exact(num, f);
      if (!q) break;
      num = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? den.erase(it) : std::next(it);
  }
  if (num.zero()) den.clear();
}

}  // namespace detail

// num / prod_{k} alpha_k^{den[k]} over positive-root linear forms alpha_k.
struct FracH {
  const RootSystem* rs = nullptr;
  PolyH num;
  std::map<int, int> den;  // positive root index -> multiplicity

  FracH() = default;
  FracH(const RootSystem& r, PolyH n) : rs(&r), num(std::move(n)) {}

  static PolyH root_form(const RootSystem& rs, int k) { return PolyH::linear(rs.roots[k]); }

  // multiply by 1/alpha for the (possibly negative) root with index k
  void mul_inv_root(int k) {
    if (!rs->is_positive(k)) {
      num = -num;
      k = rs->negate(k);
    }
    ++den[k];
  }

  void reduce() {
    detail::reduce_factored(num, den, [&](int k) { return root_form(*rs, k); });
  }

  PolyH den_poly() const {
    PolyH d = PolyH::constant(rs->rank, 1);
    for (auto& [k, m] : den)
      for (int i = 0; i < m; ++i) d = d * root_form(*rs, k);
    return d;
  }

  friend FracH operator*(const FracH& a, const FracH& b) {
    FracH r(*a.rs, a.num * b.num);
    r.den = a.den;
    for (auto& [k, m] : b.den) r.den[k] += m;
    r.reduce();
    return r;
  }
  friend FracH operator+(const FracH& a, const FracH& b) {
    FracH r(*a.rs, PolyH(a.num.nvars));
    std::map<int, int> common = a.den;
    for (auto& [k, m] : b.den) common[k] = std::max(common[k], m);
    PolyH na = a.num, nb = b.num;
    for (auto& [k, m] : common) {
      int ma = m - (a.den.count(k) ? a.den.at(k) : 0);
      int mb = m - (b.den.count(k) ? b.den.at(k) : 0);
      for (int i = 0; i < ma; ++i) na = na * root_form(*a.rs, k);
      for (int i = 0; i < mb; ++i) nb = nb * root_form(*a.rs, k);
    }
    r.num = na + nb;
    r.den = std::move(common);
    r.reduce();
    return r;
  }

  bool is_polynomial() const { return den.empty(); }
  const PolyH& as_polynomial() const {
    if (!is_polynomial()) throw std::runtime_error("division did not clear: not a polynomial");
    return num;
  }
  bool operator==(const FracH& o) const {
    return (num * o.den_poly()) == (o.num * den_poly());
  }
};

// num / prod_k (1 - e^{alpha_k})^{den[k]} over positive roots.
struct FracK {
  const RootSystem* rs = nullptr;
  LaurentK num;
  std::map<int, int> den;

  FracK() = default;
  FracK(const RootSystem& r, LaurentK n) : rs(&r), num(std::move(n)) {}

  static LaurentK binom(const RootSystem& rs, int k) {
    return LaurentK::one_minus_exp(rs.roots[k]);
  }

  // multiply by 1/(1 - e^alpha) for the (possibly negative) root with index
  // k, using 1 - e^{-beta} = -e^{-beta}(1 - e^beta).
  void mul_inv_binom(int k) {
    if (!rs->is_positive(k)) {
      k = rs->negate(k);
      num = num * LaurentK::monomial(rs->roots[k], -1);
    }
    ++den[k];
  }

  void reduce() {
    detail::reduce_factored(num, den, [&](int k) { return binom(*rs, k); });
  }

  LaurentK den_poly() const {
    LaurentK d = LaurentK::constant(rs->rank, 1);
    for (auto& [k, m] : den)
      for (int i = 0; i < m; ++i) d = d * binom(*rs, k);
    return d;
  }

  friend FracK operator*(const FracK& a, const FracK& b) {
    FracK r(*a.rs, a.num * b.num);
    r.den = a.den;
    for (auto& [k, m] : b.den) r.den[k] += m;
    r.reduce();
    return r;
  }
  friend FracK operator+(const FracK& a, const FracK& b) {
    FracK r(*a.rs, LaurentK(a.num.nvars));
    std::map<int, int> common = a.den;
    for (auto& [k, m] : b.den) common[k] = std::max(common[k], m);
    LaurentK na = a.num, nb = b.num;
    for (auto& [k, m] : common) {
      int ma = m - (a.den.count(k) ? a.den.at(k) : 0);
      int mb = m - (b.den.count(k) ? b.den.at(k) : 0);
      for (int i = 0; i < ma; ++i) na = na * binom(*a.rs, k);
      for (int i = 0; i < mb; ++i) nb = nb * binom(*a.rs, k);
    }
    r.num = na + nb;
    r.den = std::move(common);
    r.reduce();
    return r;
  }

  bool is_polynomial() const { return den.empty(); }
  const LaurentK& as_polynomial() const {
    if (!is_polynomial()) throw std::runtime_error("division did not clear: not a polynomial");
    return num;
  }
  bool operator==(const FracK& o) const {
    return (num * o.den_poly()) == (o.num * den_poly());
  }
};

}  // namespace richadm
