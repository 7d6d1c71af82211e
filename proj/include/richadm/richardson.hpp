#pragma once

// The projected-Richardson poset Q_J, the admissible set, the map
// theta(x, y) = y t^{-lambda} x^{-1} between them, and the companion posets
// Q'_J and Omega_J with their mutually inverse bijections f, g, h.

#include <sstream>

#include "affine_weyl.hpp"
#include "poset.hpp"
#include "report.hpp"

namespace richadm {

inline std::vector<int> J_of(const RootSystem& rs, const Vec& lam) {
  if (!rs.dominant(lam)) throw std::invalid_argument("coweight is not dominant");
  std::vector<int> J;
  for (int i = 0; i < rs.rank; ++i)
    if (lam[i] == 0) J.push_back(i);
  return J;
}

inline std::string instance_label(const RootSystem& rs, const Vec& lam) {
  std::ostringstream os;
  os << rs.type << rs.rank << " lambda=[";
  for (size_t i = 0; i < lam.size(); ++i) os << (i ? "," : "") << lam[i];
  os << "]";
  return os.str();
}

struct QJPair {
  WIdx x = 0, y = 0;
  bool operator==(const QJPair&) const = default;
  bool operator<(const QJPair& o) const { return std::pair(x, y) < std::pair(o.x, o.y); }
};

inline std::vector<QJPair> build_QJ(const WeylGroup& W, const Vec& lam) {
  std::vector<int> J = J_of(W.rs(), lam);
  std::vector<QJPair> out;
  for (WIdx x : W.min_coset_reps(J))
    for (WIdx y : W.all_elements())
      if (W.leq(y, x)) out.push_back({x, y});
  std::sort(out.begin(), out.end());
  return out;
}

// (x', y') preceq (x, y): exists u in W_J with x'u <= x and y'u >= y.
inline bool preceq(const WeylGroup& W, const std::vector<int>& J, const QJPair& lo,
                   const QJPair& hi) {
  for (WIdx u : W.subgroup(J))
    if (W.leq(W.mult(lo.x, u), hi.x) && W.leq(hi.y, W.mult(lo.y, u))) return true;
  return false;
}

inline Vec negated(Vec v) {
  for (auto& c : v) c = -c;
  return v;
}

inline AffineElt theta_map(const AffineWeyl& aw, const QJPair& p, const Vec& lam) {
  AffineElt t = aw.translation(negated(lam));
  return aw.mult(aw.mult(aw.finite(p.y), t), aw.finite(aw.W().inverse(p.x)));
}

struct AdmissibleSet {
  Vec mu;  // the dominant coweight -w_S(lambda)
  std::vector<AffineElt> elements;
};

// Adm(-w_S lambda) = { z : z <= t^{-w lambda} for some w }, computed as the
// union of lower cones over the translations t^{-w lambda}, w in W^J.
inline AdmissibleSet admissible_set(const AffineWeyl& aw, const Vec& lam) {
  const WeylGroup& W = aw.W();
  std::vector<int> J = J_of(W.rs(), lam);
  std::set<AffineElt> acc;
  for (WIdx w : W.min_coset_reps(J)) {
    AffineElt t = aw.translation(negated(W.act_coweight(w, lam)));
    for (const auto& z : aw.lower_cone(t)) acc.insert(z);
  }
  AdmissibleSet out;
  out.mu = negated(W.act_coweight(W.longest(), lam));
  out.elements.assign(acc.begin(), acc.end());
  return out;
}

inline PosetGraph qj_poset(const WeylGroup& W, const Vec& lam) {
  std::vector<int> J = J_of(W.rs(), lam);
  auto qj = build_QJ(W, lam);
  PosetGraph p;
  p.n = static_cast<int>(qj.size());
  p.rel.assign(static_cast<size_t>(p.n) * p.n, 0);
  p.grade.resize(p.n);
  for (int i = 0; i < p.n; ++i) p.grade[i] = W.length(qj[i].x) - W.length(qj[i].y);
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      p.rel[static_cast<size_t>(i) * p.n + j] = preceq(W, J, qj[i], qj[j]);
  p.validate();
  return p;
}

namespace detail {
inline std::string word_str(const WeylGroup& W, WIdx u) {
  std::string s = "[";
  auto w = W.word(u);
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i] + 1);
  return s + "]";
}
}  // namespace detail

// Proposition: for x, x' in W^J and y, y' in W the following agree:
//   (1) y' t^{-lam} x'^{-1} <= y t^{-lam} x^{-1}
//   (2) exists u in W_J with y'u <= y and x u^{-1} <= x'
//   (3) exists v in W_J with y' <= yv and x v <= x'
inline CheckReport verify_prop_equiv(const AffineWeyl& aw, const Vec& lam) {
  const WeylGroup& W = aw.W();
  std::vector<int> J = J_of(W.rs(), lam);
  CheckReport rep{"prop_equiv", instance_label(W.rs(), lam)};
  auto WJ = W.subgroup(J);
  auto reps = W.min_coset_reps(J);
  for (WIdx x : reps)
    for (WIdx xp : reps)
      for (WIdx y : W.all_elements())
        for (WIdx yp : W.all_elements()) {
          bool c1 = aw.leq(theta_map(aw, {xp, yp}, lam), theta_map(aw, {x, y}, lam));
          bool c2 = false, c3 = false;
          for (WIdx u : WJ) {
            if (!c2 && W.leq(W.mult(yp, u), y) && W.leq(W.mult(x, W.inverse(u)), xp)) c2 = true;
            if (!c3 && W.leq(yp, W.mult(y, u)) && W.leq(W.mult(x, u), xp)) c3 = true;
          }
          ++rep.n_checked;
          if (c1 != c2 || c2 != c3) {
            nlohmann::json f;
            f["x"] = detail::word_str(W, x);
            f["x_prime"] = detail::word_str(W, xp);
            f["y"] = detail::word_str(W, y);
            f["y_prime"] = detail::word_str(W, yp);
            f["cond"] = {c1, c2, c3};
            rep.failures.push_back(std::move(f));
          }
        }
  return rep;
}

// Theorem: theta is an order-reversing graded bijection from W^J x W onto the
// double coset W t^{-lam} W, restricting to a bijection of Q_J onto the
// admissible part; for cominuscule lam the image of Q_J is all of Adm.
inline CheckReport verify_theorem_combin(const AffineWeyl& aw, const Vec& lam) {
  const WeylGroup& W = aw.W();
  std::vector<int> J = J_of(W.rs(), lam);
  CheckReport rep{"theorem_combin", instance_label(W.rs(), lam)};
  auto fail = [&](const std::string& what, nlohmann::json extra = {}) {
    nlohmann::json f;
    f["check"] = what;
    if (!extra.is_null()) f["detail"] = std::move(extra);
    rep.failures.push_back(std::move(f));
  };

  auto reps = W.min_coset_reps(J);
  std::vector<QJPair> domain;
  for (WIdx x : reps)
    for (WIdx y : W.all_elements()) domain.push_back({x, y});

  // (i) bijectivity onto the double coset
  std::map<AffineElt, QJPair> image;
  for (const auto& p : domain) {
    AffineElt z = theta_map(aw, p, lam);
    if (!image.emplace(z, p).second) fail("theta not injective");
    ++rep.n_checked;
  }
  std::set<AffineElt> coset;
  AffineElt t = aw.translation(negated(lam));
  for (WIdx a : W.all_elements())
    for (WIdx b : W.all_elements())
      coset.insert(aw.mult(aw.finite(a), aw.mult(t, aw.finite(b))));
  std::set<AffineElt> image_set;
  for (auto& [z, p] : image) image_set.insert(z);
  if (image_set != coset) fail("theta image differs from the double coset");
  ++rep.n_checked;

  // extremes of the double coset
  AffineElt max_elt = aw.mult(aw.finite(W.longest()), t);
  AffineElt min_elt =
      aw.mult(t, aw.finite(W.mult(W.longest_in(J), W.longest())));
  for (const auto& z : coset) {
    if (!aw.leq(z, max_elt)) fail("w_S t^{-lam} is not maximal in the double coset");
    if (!aw.leq(min_elt, z)) fail("t^{-lam} w_J w_S is not minimal in the double coset");
    ++rep.n_checked;
  }

  // (ii) order reversal, (iii) grading
  long long lt = aw.length(t);
  for (const auto& p : domain) {
    AffineElt zp = theta_map(aw, p, lam);
    if (aw.length(zp) != lt + W.length(p.y) - W.length(p.x))
      fail("grading formula", {{"x", detail::word_str(W, p.x)}, {"y", detail::word_str(W, p.y)}});
    for (const auto& q : domain) {
      bool po = preceq(W, J, q, p);
      bool br = aw.leq(theta_map(aw, p, lam), theta_map(aw, q, lam));
      ++rep.n_checked;
      if (po != br)
        fail("order reversal",
             {{"p", detail::word_str(W, p.x) + detail::word_str(W, p.y)},
              {"q", detail::word_str(W, q.x) + detail::word_str(W, q.y)}});
    }
  }

  // (iv) restriction to Q_J hits exactly the admissible part of the coset
  auto adm = admissible_set(aw, lam);
  std::set<AffineElt> adm_set(adm.elements.begin(), adm.elements.end());
  std::set<AffineElt> qj_image;
  for (const auto& p : build_QJ(W, lam)) qj_image.insert(theta_map(aw, p, lam));
  std::set<AffineElt> coset_cap_adm;
  for (const auto& z : coset)
    if (adm_set.count(z)) coset_cap_adm.insert(z);
  if (qj_image != coset_cap_adm) fail("theta(Q_J) != coset intersect Adm");
  ++rep.n_checked;

  // (v) for cominuscule lam the image is the whole admissible set
  if (W.rs().cominuscule(lam)) {
    if (qj_image != adm_set) fail("cominuscule: theta(Q_J) != Adm");
    ++rep.n_checked;
  }
  return rep;
}

// ---- companion posets Q'_J and Omega_J ----

struct QPrimeTriple {
  WIdx a = 0, b = 0, c = 0;
  bool operator==(const QPrimeTriple&) const = default;
  bool operator<(const QPrimeTriple& o) const {
    return std::tuple(a, b, c) < std::tuple(o.a, o.b, o.c);
  }
};
struct OmegaJPair {
  WIdx a = 0, b = 0;
  bool operator==(const OmegaJPair&) const = default;
  bool operator<(const OmegaJPair& o) const { return std::pair(a, b) < std::pair(o.a, o.b); }
};

inline bool in_wjmax(const WeylGroup& W, const std::vector<int>& J, WIdx a) {
  return W.max_in_coset_right(a, J) == a;
}

inline std::vector<QPrimeTriple> build_QPrime(const WeylGroup& W, const std::vector<int>& J) {
  std::vector<QPrimeTriple> out;
  for (WIdx a : W.max_coset_reps(J))
    for (WIdx b : W.subgroup(J))
      for (WIdx c : W.min_coset_reps(J))
        if (W.leq(a, W.mult(c, b))) out.push_back({a, b, c});
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<OmegaJPair> build_OmegaJ(const WeylGroup& W, const std::vector<int>& J) {
  std::vector<OmegaJPair> out;
  for (WIdx a : W.max_coset_reps(J))
    for (WIdx b : W.all_elements())
      if (W.leq(a, b)) out.push_back({a, b});
  std::sort(out.begin(), out.end());
  return out;
}

// order on Q'_J: (a',b',c') <= (a,b,c) iff b' = u1 u2 with additive lengths
// and a b^{-1} <= a' u2^{-1} <= c' u1 <= c.
inline bool qprime_leq(const WeylGroup& W, const std::vector<int>& J, const QPrimeTriple& lo,
                       const QPrimeTriple& hi) {
  WIdx ab = W.mult(hi.a, W.inverse(hi.b));
  for (WIdx u1 : W.subgroup(J)) {
    WIdx u2 = W.mult(W.inverse(u1), lo.b);
    if (W.length(u1) + W.length(u2) != W.length(lo.b)) continue;
    WIdx m1 = W.mult(lo.a, W.inverse(u2));
    WIdx m2 = W.mult(lo.c, u1);
    if (W.leq(ab, m1) && W.leq(m1, m2) && W.leq(m2, hi.c)) return true;
  }
  return false;
}

// order on Omega_J: (a',b') <= (a,b) iff exists z in W_J with a <= a'z, b'z <= b.
inline bool omegaj_leq(const WeylGroup& W, const std::vector<int>& J, const OmegaJPair& lo,
                       const OmegaJPair& hi) {
  for (WIdx z : W.subgroup(J))
    if (W.leq(hi.a, W.mult(lo.a, z)) && W.leq(W.mult(lo.b, z), hi.b)) return true;
  return false;
}

inline OmegaJPair qprime_to_omegaj(const WeylGroup& W, const std::vector<int>& J,
                             const QPrimeTriple& t) {
  if (!in_wjmax(W, J, t.a) || !W.min_rep_right(t.c, J) ||
      !W.leq(t.a, W.mult(t.c, t.b)))
    throw std::invalid_argument("qprime_to_omegaj: argument not in Q'_J");
  return {t.a, W.mult(t.c, t.b)};
}

inline QJPair omegaj_to_qj(const WeylGroup& W, const std::vector<int>& J, const OmegaJPair& p) {
  if (!in_wjmax(W, J, p.a) || !W.leq(p.a, p.b))
    throw std::invalid_argument("omegaj_to_qj: argument not in Omega_J");
  WIdx m = W.min_in_coset_right(p.b, J);
  return {m, W.mult(W.mult(p.a, W.inverse(p.b)), m)};
}

inline QPrimeTriple qj_to_qprime(const WeylGroup& W, const std::vector<int>& J, const QJPair& p) {
  if (!W.min_rep_right(p.x, J) || !W.leq(p.y, p.x))
    throw std::invalid_argument("qj_to_qprime: argument not in Q_J");
  WIdx m = W.max_in_coset_right(p.y, J);
  return {m, W.mult(W.inverse(p.y), m), p.x};
}

inline CheckReport verify_poset_bijections(const WeylGroup& W, const std::vector<int>& J) {
  CheckReport rep{"poset_bijections", "J size " + std::to_string(J.size())};
  auto fail = [&](const std::string& what) {
    rep.failures.push_back(nlohmann::json{{"check", what}});
  };

  auto qp = build_QPrime(W, J);
  auto om = build_OmegaJ(W, J);
  Vec lam(W.rank(), 1);
  for (int j : J) lam[j] = 0;
  auto qj = build_QJ(W, lam);

  if (qp.size() != om.size() || om.size() != qj.size()) fail("poset sizes differ");

  for (const auto& t : qp) {
    if (qj_to_qprime(W, J, omegaj_to_qj(W, J, qprime_to_omegaj(W, J, t))) != t)
      fail("h(g(f(.))) != id on Q'_J");
    ++rep.n_checked;
  }
  for (const auto& p : qj) {
    if (omegaj_to_qj(W, J, qprime_to_omegaj(W, J, qj_to_qprime(W, J, p))) != p)
      fail("g(f(h(.))) != id on Q_J");
    ++rep.n_checked;
  }
  for (const auto& p : om) {
    if (qprime_to_omegaj(W, J, qj_to_qprime(W, J, omegaj_to_qj(W, J, p))) != p)
      fail("f(h(g(.))) != id on Omega_J");
    ++rep.n_checked;
  }

  for (const auto& t1 : qp)
    for (const auto& t2 : qp) {
      ++rep.n_checked;
      if (qprime_leq(W, J, t1, t2) &&
          !omegaj_leq(W, J, qprime_to_omegaj(W, J, t1), qprime_to_omegaj(W, J, t2)))
        fail("f is not order-preserving");
    }
  for (const auto& p1 : om)
    for (const auto& p2 : om) {
      ++rep.n_checked;
      if (omegaj_leq(W, J, p1, p2) &&
          !preceq(W, J, omegaj_to_qj(W, J, p1), omegaj_to_qj(W, J, p2)))
        fail("g is not order-preserving");
    }
  for (const auto& p1 : qj)
    for (const auto& p2 : qj) {
      ++rep.n_checked;
      if (preceq(W, J, p1, p2) &&
          !qprime_leq(W, J, qj_to_qprime(W, J, p1), qj_to_qprime(W, J, p2)))
        fail("h is not order-preserving");
    }
  return rep;
}

}  // namespace richadm
