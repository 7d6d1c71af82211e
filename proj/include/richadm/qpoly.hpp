#pragma once

// Single-variable integer polynomials in q and rational power series in x
// with QPoly coefficients, both over exact integer arithmetic.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace richadm {

struct QPoly {
  std::vector<long long> c;  // c[k] = coefficient of q^k

  QPoly() = default;
  QPoly(std::initializer_list<long long> v) : c(v) { trim(); }
  explicit QPoly(std::vector<long long> v) : c(std::move(v)) { trim(); }
  static QPoly constant(long long v) { return v == 0 ? QPoly{} : QPoly{{v}}; }
  static QPoly monomial(int deg, long long v = 1) {
    QPoly p;
    p.c.assign(deg + 1, 0);
    p.c[deg] = v;
    p.trim();
    return p;
  }
  // [m] = 1 + q + ... + q^{m-1}
  static QPoly qint(int m) {
    if (m < 0) throw std::invalid_argument("q-integer of a negative number");
    QPoly p;
    p.c.assign(m, 1);
    return p;
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  long long coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : 0;
  }
  long long at_one() const {
    long long s = 0;
    for (long long v : c) s += v;
    return s;
  }

  bool operator==(const QPoly& o) const { return c == o.c; }

  QPoly& operator+=(const QPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
    for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    trim();
    return *this;
  }
  QPoly& operator-=(const QPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
    for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
    trim();
    return *this;
  }
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.zero() || b.zero()) return {};
    QPoly p;
    p.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) p.c[i + j] += a.c[i] * b.c[j];
    p.trim();
    return p;
  }
  QPoly operator-() const {
    QPoly p = *this;
    for (auto& v : p.c) v = -v;
    return p;
  }
  friend QPoly operator*(long long s, const QPoly& a) { return QPoly::constant(s) * a; }

  QPoly pow(int e) const {
    QPoly r = constant(1);
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
  }

  // q^d * p(1/q), the coefficient reversal used by the duality F/A.
  QPoly reversed(int d) const {
    QPoly p;
    p.c.assign(d + 1, 0);
    for (int k = 0; k <= degree(); ++k) {
      if (k > d && coeff(k) != 0)
        throw std::invalid_argument("reversal degree smaller than polynomial degree");
      if (k <= d) p.c[d - k] = coeff(k);
    }
    p.trim();
    return p;
  }

  std::string str() const {
    if (c.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s;
  }
};

// num(x) / den(x) with QPoly coefficients; den must have constant term 1 so
// that coefficient extraction is exact long division.
struct SeriesX {
  std::vector<QPoly> num, den;
  mutable std::vector<QPoly> cache;

  SeriesX(std::vector<QPoly> n, std::vector<QPoly> d) : num(std::move(n)), den(std::move(d)) {
    if (den.empty() || !(den[0] == QPoly::constant(1)))
      throw std::invalid_argument("series denominator must have constant term 1");
  }

  const QPoly& coeff(int n) const {
    while (static_cast<int>(cache.size()) <= n) {
      int k = static_cast<int>(cache.size());
      QPoly v = k < static_cast<int>(num.size()) ? num[k] : QPoly{};
      for (int j = 1; j <= k && j < static_cast<int>(den.size()); ++j)
        v -= den[j] * cache[k - j];
      cache.push_back(std::move(v));
    }
    return cache[n];
  }
};

inline std::vector<QPoly> poly_mul_x(const std::vector<QPoly>& a, const std::vector<QPoly>& b) {
  std::vector<QPoly> p(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
  return p;
}

}  // namespace richadm
