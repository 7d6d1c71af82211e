#pragma once

// Extended affine Weyl group ~W = P >< W.
//
// Elements are pairs t^chi * w with chi a coweight (fundamental-coweight
// coordinates) and w a finite Weyl element.  Lengths follow the
// Iwahori-Matsumoto formula; words are over the affine node set {0,1,..,r}
// where node 0 is the affine node (s_0 = t^{-theta^vee} s_theta) and node i
// (i>=1) is the finite simple reflection s_i.
//
// Affine roots (alpha, n) represent alpha + n*delta; the group acts by
//   (t^chi w)(alpha, n) = (w alpha, n + <chi, w alpha>),
// which makes s_0 the reflection in delta - theta.
//
// Caches (Bruhat order, omega data) are owned by the AffineWeyl context;
// independent contexts may be used concurrently, a single context must not
// be mutated from two threads at once.

#include <optional>
#include <random>
#include <set>
#include <unordered_map>

#include "weyl_group.hpp"

namespace richadm {

struct AffineElt {
  Vec chi;
  WIdx w = 0;
  bool operator==(const AffineElt& o) const { return w == o.w && chi == o.chi; }
  bool operator<(const AffineElt& o) const {
    return std::pair(chi, w) < std::pair(o.chi, o.w);
  }
};

struct AeHash {
  size_t operator()(const AffineElt& a) const {
    size_t h = 1469598103934665603ull;
    auto mix = [&h](size_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    for (int c : a.chi) mix(static_cast<size_t>(c) + 0x9e3779b9);
    mix(a.w);
    return h;
  }
};

struct AffineRoot {
  int root = 0;  // index into RootSystem::roots
  int level = 0;
  bool operator==(const AffineRoot& o) const = default;
};

struct OmegaElt {
  AffineElt elt;
  std::vector<int> node_perm;  // image of each affine node, size rank+1
  int label = 0;               // node_perm[0]; distinguishes elements in types A-D
};

struct ReducedWord {
  AffineElt tau;          // length-zero part
  std::vector<int> word;  // affine node indices, product left to right
};

class AffineWeyl {
 public:
  explicit AffineWeyl(const WeylGroup& W) : W_(W) {
    theta_ = W_.rs().highest;
    s_theta_ = W_.reflection(theta_);
    theta_covec_ = W_.rs().theta_covec();
  }

  const WeylGroup& W() const { return W_; }
  const RootSystem& rs() const { return W_.rs(); }
  int rank() const { return W_.rank(); }

  AffineElt identity() const { return {Vec(rank(), 0), 0}; }
  AffineElt translation(const Vec& chi) const { return {chi, 0}; }
  AffineElt finite(WIdx w) const { return {Vec(rank(), 0), w}; }

  AffineElt simple(int anode) const {
    if (anode == 0) {
      Vec chi(theta_covec_);
      for (auto& c : chi) c = -c;
      return {chi, s_theta_};
    }
    return finite(W_.simple(anode - 1));
  }

  AffineRoot simple_affine_root(int anode) const {
    if (anode == 0) return {rs().negate(theta_), 1};
    return {anode - 1, 0};
  }

  AffineElt mult(const AffineElt& a, const AffineElt& b) const {
    Vec chi = a.chi;
    Vec t = W_.act_coweight(a.w, b.chi);
    for (int i = 0; i < rank(); ++i) chi[i] += t[i];
    return {std::move(chi), W_.mult(a.w, b.w)};
  }
  AffineElt inverse(const AffineElt& a) const {
    WIdx wi = W_.inverse(a.w);
    Vec chi = W_.act_coweight(wi, a.chi);
    for (auto& c : chi) c = -c;
    return {std::move(chi), wi};
  }

  long long length(const AffineElt& a) const {
    long long l = 0;
    WIdx wi = W_.inverse(a.w);
    for (int k = 0; k < rs().n_pos; ++k) {
      long long p = rs().pairing(a.chi, k);
      if (rs().is_positive(W_.act_root(wi, k)))
        l += std::abs(p);
      else
        l += std::abs(p + 1);
    }
    return l;
  }

  AffineRoot act(const AffineElt& a, const AffineRoot& b) const {
    int k = W_.act_root(a.w, b.root);
    return {k, b.level + rs().pairing(a.chi, k)};
  }
  static bool negative(const RootSystem& rs, const AffineRoot& b) {
    return b.level < 0 || (b.level == 0 && !rs.is_positive(b.root));
  }
  bool negative(const AffineRoot& b) const { return negative(rs(), b); }

  // l(x s_i) < l(x)  iff  x(alpha_i) < 0.
  bool right_descent(const AffineElt& a, int anode) const {
    return negative(act(a, simple_affine_root(anode)));
  }
  bool left_descent(const AffineElt& a, int anode) const {
    return negative(act(inverse(a), simple_affine_root(anode)));
  }

  // Deterministic factorization x = tau * s_{i_1} ... s_{i_p}: the smallest
  // right descent is peeled first.
  ReducedWord reduced_word(const AffineElt& a) const {
    ReducedWord rw;
    AffineElt x = a;
    long long l = length(x);
    while (l > 0) {
      int i = 0;
      while (!right_descent(x, i)) ++i;
      rw.word.push_back(i);
      x = mult(x, simple(i));
      --l;
    }
    rw.tau = x;
    std::reverse(rw.word.begin(), rw.word.end());
    return rw;
  }

  AffineElt from_word(const AffineElt& tau, const std::vector<int>& word) const {
    AffineElt x = tau;
    for (int i : word) x = mult(x, simple(i));
    return x;
  }

  AffineElt omega_part(const AffineElt& a) const { return reduced_word(a).tau; }

  // ---- Omega, the group of length-zero elements ----

  const std::vector<OmegaElt>& omega_group() const {
    if (omega_.empty()) build_omega();
    return omega_;
  }

  const OmegaElt& omega_of(const AffineElt& a) const {
    AffineElt tau = omega_part(a);
    for (const auto& o : omega_group())
      if (o.elt == tau) return o;
    throw std::logic_error("omega element not in Omega list");
  }

  AffineRoot omega_act(const OmegaElt& tau, const AffineRoot& b) const {
    return act(tau.elt, b);
  }

  // ---- Bruhat order ----

  bool leq(const AffineElt& a, const AffineElt& b) const {
    long long la = length(a), lb = length(b);
    return leq_impl(a, la, b, lb);
  }

  std::vector<AffineElt> lower_cone(const AffineElt& x) const {
    ReducedWord rw = reduced_word(x);
    std::set<AffineElt> cur{rw.tau};
    for (int i : rw.word) {
      std::set<AffineElt> next = cur;
      for (const auto& z : cur) next.insert(mult(z, simple(i)));
      cur = std::move(next);
    }
    return {cur.begin(), cur.end()};
  }

  std::vector<std::vector<int>> all_reduced_words(const AffineElt& x) const {
    if (length(x) == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (int i = 0; i <= rank(); ++i) {
      if (!right_descent(x, i)) continue;
      for (auto w : all_reduced_words(mult(x, simple(i)))) {
        w.push_back(i);
        out.push_back(std::move(w));
      }
    }
    return out;
  }

  // ---- Demazure products ----

  // x * y: unique maximal element of {uv : u <= x, v <= y}.
  AffineElt star(const AffineElt& x, const AffineElt& y) const {
    ReducedWord rw = reduced_word(y);
    AffineElt z = mult(x, rw.tau);
    long long lz = length(z);
    for (int i : rw.word) {
      AffineElt zs = mult(z, simple(i));
      if (length(zs) > lz) {
        z = std::move(zs);
        ++lz;
      }
    }
    return z;
  }

  // x |> y: unique minimal element of {uy : u <= x}.
  AffineElt trir(const AffineElt& x, const AffineElt& y) const {
    ReducedWord rw = reduced_word(x);
    AffineElt z = y;
    long long lz = length(z);
    for (auto it = rw.word.rbegin(); it != rw.word.rend(); ++it) {
      AffineElt sz = mult(simple(*it), z);
      if (length(sz) < lz) {
        z = std::move(sz);
        --lz;
      }
    }
    return mult(rw.tau, z);
  }

  // x <| y: unique minimal element of {xv : v <= y}.
  AffineElt tril(const AffineElt& x, const AffineElt& y) const {
    ReducedWord rw = reduced_word(y);
    AffineElt z = mult(x, rw.tau);
    long long lz = length(z);
    for (int i : rw.word) {
      AffineElt zs = mult(z, simple(i));
      if (length(zs) < lz) {
        z = std::move(zs);
        --lz;
      }
    }
    return z;
  }

  // Coset extrema via the Demazure characterizations, J a finite-node set
  // (0-based into the finite diagram).
  AffineElt min_in_coset(const AffineElt& x, const std::vector<int>& J, bool left) const {
    AffineElt wj = finite(W_.longest_in(J));
    return left ? trir(wj, x) : tril(x, wj);
  }
  AffineElt max_in_coset(const AffineElt& x, const std::vector<int>& J, bool left) const {
    AffineElt wj = finite(W_.longest_in(J));
    return left ? star(wj, x) : star(x, wj);
  }

  // Uniform-ascent random element of the requested length (a random walk
  // that only takes length-increasing steps, with a random length-zero
  // prefix when with_omega is set).
  template <class Rng>
  AffineElt random_element(Rng& rng, int length, bool with_omega = true) const {
    AffineElt x = identity();
    if (with_omega) {
      const auto& om = omega_group();
      std::uniform_int_distribution<int> d(0, static_cast<int>(om.size()) - 1);
      x = om[d(rng)].elt;
    }
    for (int l = 0; l < length; ++l) {
      std::vector<int> ups;
      for (int i = 0; i <= rank(); ++i)
        if (!right_descent(x, i)) ups.push_back(i);
      std::uniform_int_distribution<int> d(0, static_cast<int>(ups.size()) - 1);
      x = mult(x, simple(ups[d(rng)]));
    }
    return x;
  }

  // Positive affine roots beta with x^{-1} beta < 0; their number is l(x).
  std::vector<AffineRoot> inversions(const AffineElt& x) const {
    std::vector<AffineRoot> out;
    AffineElt xi = inverse(x);
    for (int k = 0; k < rs().n_roots(); ++k) {
      int img = W_.act_root(xi.w, k);
      int c = rs().pairing(xi.chi, img);
      int n_min = rs().is_positive(k) ? 0 : 1;
      // x^{-1}(k, n) = (img, n + c) is negative iff n + c < 0, or n + c = 0
      // with img negative.
      int n_max = -c - (rs().is_positive(img) ? 1 : 0);
      for (int n = n_min; n <= n_max; ++n) out.push_back({k, n});
    }
    return out;
  }

 private:
  bool leq_impl(const AffineElt& a, long long la, const AffineElt& b, long long lb) const {
    if (la > lb) return false;
    if (lb == 0) return a == b;
    auto key = std::pair(a, b);
    auto it = leq_memo_.find(key);
    if (it != leq_memo_.end()) return it->second;
    int i = 0;
    while (!right_descent(b, i)) ++i;
    AffineElt bs = mult(b, simple(i));
    AffineElt as = mult(a, simple(i));
    bool ok;
    if (length(as) < la)
      ok = leq_impl(as, la - 1, bs, lb - 1);
    else
      ok = leq_impl(a, la, bs, lb - 1);
    leq_memo_.emplace(key, ok);
    return ok;
  }

  void build_omega() const {
    auto peel = [&](AffineElt x) {
      long long l = length(x);
      while (l > 0) {
        int i = 0;
        while (!right_descent(x, i)) ++i;
        x = mult(x, simple(i));
        --l;
      }
      return x;
    };
    std::set<AffineElt> members{identity()};
    std::vector<AffineElt> fresh{identity()};
    for (int i = 0; i < rank(); ++i) {
      AffineElt t = peel(translation(rs().fundamental_coweight(i)));
      if (members.insert(t).second) fresh.push_back(t);
    }
    // close under multiplication
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<AffineElt> cur(members.begin(), members.end());
      for (const auto& a : cur)
        for (const auto& b : cur)
          if (members.insert(mult(a, b)).second) grew = true;
    }
    for (const auto& m : members) {
      OmegaElt o;
      o.elt = m;
      o.node_perm.assign(rank() + 1, -1);
      for (int a = 0; a <= rank(); ++a) {
        AffineRoot img = act(m, simple_affine_root(a));
        int target = -1;
        for (int b = 0; b <= rank(); ++b)
          if (img == simple_affine_root(b)) target = b;
        if (target < 0) throw std::logic_error("length-zero element is not a diagram automorphism");
        o.node_perm[a] = target;
      }
      o.label = o.node_perm[0];
      omega_.push_back(std::move(o));
    }
    std::sort(omega_.begin(), omega_.end(),
              [](const OmegaElt& a, const OmegaElt& b) { return a.label < b.label; });
    long long det = cartan_det();
    if (static_cast<long long>(omega_.size()) != det)
      throw std::logic_error("Omega order does not match |P/Q|");
  }

  long long cartan_det() const {
    // Bareiss elimination on a copy.
    int n = rank();
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = rs().cartan[i][j];
    long long prev = 1, sign = 1;
    for (int k = 0; k < n - 1; ++k) {
      if (m[k][k] == 0) {
        int p = -1;
        for (int i = k + 1; i < n; ++i)
          if (m[i][k] != 0) { p = i; break; }
        if (p < 0) return 0;
        std::swap(m[k], m[p]);
        sign = -sign;
      }
      for (int i = k + 1; i < n; ++i)
        for (int j = k + 1; j < n; ++j)
          m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
  }

  const WeylGroup& W_;
  int theta_;
  WIdx s_theta_;
  Vec theta_covec_;
  mutable std::vector<OmegaElt> omega_;

  struct PairHash {
    size_t operator()(const std::pair<AffineElt, AffineElt>& p) const {
      AeHash h;
      return h(p.first) * 1000003 ^ h(p.second);
    }
  };
  mutable std::unordered_map<std::pair<AffineElt, AffineElt>, bool, PairHash> leq_memo_;
};

}  // namespace richadm
