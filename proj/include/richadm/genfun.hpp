#pragma once

// Length and rank generating functions: brute-force F_lambda(q) and A_J(q)
// from the enumerations, their duality, and the closed formulas for the
// classical families (type A Grassmannians, odd/even quadrics, type C
// Lagrangian count).

#include <boost/multiprecision/cpp_int.hpp>

#include "qpoly.hpp"
#include "richardson.hpp"

namespace richadm {

inline QPoly F_brute(const AffineWeyl& aw, const Vec& lam) {
  auto adm = admissible_set(aw, lam);
  std::vector<long long> c;
  for (const auto& z : adm.elements) {
    int l = static_cast<int>(aw.length(z));
    if (l >= static_cast<int>(c.size())) c.resize(l + 1, 0);
    ++c[l];
  }
  return QPoly(std::move(c));
}

inline QPoly A_brute(const WeylGroup& W, const Vec& lam) {
  std::vector<long long> c;
  for (const auto& p : build_QJ(W, lam)) {
    int g = W.length(p.x) - W.length(p.y);
    if (g >= static_cast<int>(c.size())) c.resize(g + 1, 0);
    ++c[g];
  }
  return QPoly(std::move(c));
}

// F_lambda(q) = q^{<lambda, 2 rho>} A_J(1/q).
inline bool check_duality(const QPoly& F, const QPoly& A, long long two_rho) {
  if (A.degree() > two_rho) return false;
  return F == A.reversed(static_cast<int>(two_rho));
}

inline long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// F_{k,n}(q) for the Grassmannian Gr(k, n); requires 1 <= k < n.
inline QPoly typeA_F(int k, int n) {
  if (k < 1 || k >= n) throw std::invalid_argument("typeA_F requires 1 <= k < n");
  QPoly out;
  for (int i = 0; i < k; ++i) {
    QPoly first = QPoly::monomial(i * (n - k + 1)) * QPoly::qint(k - i).pow(i) *
                  QPoly::qint(k - i + 1).pow(n - i);
    QPoly second = QPoly::monomial(n + n * i - k * i) *
                   (i == 0 ? QPoly::constant(1) : QPoly::qint(k - i - 1).pow(i)) *
                   QPoly::qint(k - i).pow(n - i);
    QPoly term = binom(n, i) * (first - second);
    if (i % 2 == 0)
      out += term;
    else
      out -= term;
  }
  return out;
}

namespace detail {
// shared denominator (1 - q^2 x)(1 - (q+q^2) x)(1 - [2]^2 x + q^3 [2] x^2)
inline std::vector<QPoly> quadric_denominator() {
  std::vector<QPoly> d1{QPoly::constant(1), -QPoly::monomial(2)};
  std::vector<QPoly> d2{QPoly::constant(1), -(QPoly::monomial(1) + QPoly::monomial(2))};
  std::vector<QPoly> d3{QPoly::constant(1), -(QPoly::qint(2) * QPoly::qint(2)),
                        QPoly::monomial(3) * QPoly::qint(2)};
  return poly_mul_x(poly_mul_x(d1, d2), d3);
}
}  // namespace detail

// sum_n F_{B_n}(q) x^n for the odd quadrics (lambda = omega_1 in type B).
inline SeriesX typeB_F_series() {
  std::vector<QPoly> num{
      QPoly::constant(1),
      QPoly{0, -1, -3},            // -q - 3q^2
      QPoly{0, -1, 0, 5, 4},       // -q + 5q^3 + 4q^4
      QPoly::monomial(4) * QPoly{-2, -5, -3},
      QPoly::monomial(6) * QPoly::qint(2) * QPoly::qint(2)};
  return SeriesX(std::move(num), detail::quadric_denominator());
}

// sum_n F_{D_n}(q) x^n for the even quadrics (lambda = omega_1 in type D).
inline SeriesX typeD_F_series() {
  std::vector<QPoly> num{
      QPoly::constant(1),
      -QPoly{0, 1, 3},                       // -(q + 3q^2)
      -QPoly{0, 0, 1, -1, -4},               // -(q^2 - q^3 - 4q^4)
      -QPoly{0, 2, 3, -2, -8, -2, 3},        // -(2q + 3q^2 - 2q^3 - 8q^4 - 2q^5 + 3q^6)
      QPoly{0, 0, 0, 2, 3, -3, -9, -4, 1},   // 2q^3 + 3q^4 - 3q^5 - 9q^6 - 4q^7 + q^8
      -QPoly{0, 0, 0, 0, 0, 0, 1, 0, -3, -2}};  // -(q^6 - 3q^8 - 2q^9)
  return SeriesX(std::move(num), detail::quadric_denominator());
}

// F_{C_n}(1) = sum_{i=0}^{n} 2^{n-i} n!/i!.
inline long long typeC_count(int n) {
  if (n < 0) throw std::invalid_argument("typeC_count requires n >= 0");
  if (n > 16) throw std::invalid_argument("typeC_count overflows 64 bits beyond n = 16");
  long long total = 0;
  for (int i = 0; i <= n; ++i) {
    long long term = 1;
    for (int j = 0; j < n - i; ++j) term *= 2;       // 2^{n-i}
    for (int j = i + 1; j <= n; ++j) term *= j;      // n!/i!
    total += term;
  }
  return total;
}

// Checks the sum formula, the recurrence F_{C_{n+1}}(1) = 2(n+1)F_{C_n}(1)+1,
// and the characterization as the greatest integer below 2^n n! sqrt(e).
inline bool typeC_check(int n) {
  using boost::multiprecision::cpp_int;
  using Rat = boost::multiprecision::cpp_rational;

  long long rec = 1;
  for (int i = 1; i <= n; ++i) rec = 2 * i * rec + 1;
  if (rec != typeC_count(n)) return false;

  // rational bounds on sqrt(e) = sum_k (1/2)^k / k!, tail below twice the
  // next term
  Rat lo = 0;
  cpp_int pow2 = 1, fact = 1;
  int K = 40;
  for (int k = 0; k <= K; ++k) {
    lo += Rat(1, pow2 * fact);
    pow2 *= 2;
    fact *= (k + 1);
  }
  Rat hi = lo + Rat(2, pow2 * fact);

  cpp_int scale = 1;
  for (int j = 1; j <= n; ++j) scale *= j;
  for (int j = 0; j < n; ++j) scale *= 2;  // 2^n n!
  Rat lower = Rat(scale) * lo, upper = Rat(scale) * hi;
  // F < 2^n n! sqrt(e) < F + 1
  return Rat(rec) < lower && upper < Rat(rec + 1);
}

}  // namespace richadm
