#pragma once

// Finite Weyl group arithmetic over an enumerated element table.
//
// Elements are identified by dense indices (identity = 0).  The canonical
// form of an element is its action on the simple roots, recorded as a
// permutation-with-signs of the root list; this gives O(rank) products and
// cheap hashing.  All tables (products, inverses, lengths, Bruhat order,
// coweight actions) are built once, eagerly.

#include <cstdint>
#include <map>
#include <queue>

#include "root_system.hpp"

namespace richadm {

using WIdx = uint16_t;

class WeylGroup {
 public:
  explicit WeylGroup(RootSystem rs) : rs_(std::move(rs)) { build(); }

  const RootSystem& rs() const { return rs_; }
  int order() const { return static_cast<int>(root_perm_.size()); }
  int rank() const { return rs_.rank; }

  WIdx identity() const { return 0; }
  WIdx simple(int i) const { return simple_[i]; }
  WIdx longest() const { return longest_; }

  WIdx mult(WIdx u, WIdx v) const { return mult_[u * order() + v]; }
  WIdx inverse(WIdx u) const { return inv_[u]; }
  int length(WIdx u) const { return len_[u]; }

  // Action on roots (by index) and coweights (coordinate vectors).
  int act_root(WIdx u, int root_idx) const { return root_perm_[u][root_idx]; }
  Vec act_root_coords(WIdx u, const Vec& coords) const {
    Vec out(rank(), 0);
    for (int j = 0; j < rank(); ++j) {
      if (coords[j] == 0) continue;
      const Vec& img = rs_.roots[root_perm_[u][j]];  // u(alpha_j)
      for (int i = 0; i < rank(); ++i) out[i] += coords[j] * img[i];
    }
    return out;
  }
  Vec act_coweight(WIdx u, const Vec& chi) const {
    const Mat& m = cw_mat_[u];
    Vec out(rank(), 0);
    for (int j = 0; j < rank(); ++j)
      for (int k = 0; k < rank(); ++k) out[j] += m[j][k] * chi[k];
    return out;
  }

  bool right_descent(WIdx u, int i) const {
    return rs_.is_positive(root_perm_[u][i]) == false;
  }
  bool left_descent(WIdx u, int i) const { return right_descent(inv_[u], i); }

  // Bruhat order.
  bool leq(WIdx a, WIdx b) const { return leq_[a * order() + b]; }

  // The reflection r_alpha for a root alpha.
  WIdx reflection(int root_idx) const { return refl_[root_idx % rs_.n_pos]; }

  // Deterministic reduced word: smallest-index right descent peeled first.
  std::vector<int> word(WIdx u) const {
    std::vector<int> w;
    WIdx x = u;
    while (x != 0) {
      for (int i = 0;; ++i) {
        if (right_descent(x, i)) {
          w.push_back(i);
          x = mult(x, simple_[i]);
          break;
        }
      }
    }
    std::reverse(w.begin(), w.end());
    return w;
  }

  WIdx from_word(const std::vector<int>& w) const {
    WIdx x = 0;
    for (int i : w) x = mult(x, simple_[i]);
    return x;
  }

  std::vector<WIdx> all_elements() const {
    std::vector<WIdx> v(order());
    for (int i = 0; i < order(); ++i) v[i] = static_cast<WIdx>(i);
    return v;
  }

  // ---- parabolic machinery (J a set of node indices, 0-based) ----

  std::vector<WIdx> subgroup(const std::vector<int>& J) const {
    std::vector<WIdx> out;
    std::vector<char> seen(order(), 0);
    std::queue<WIdx> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
      WIdx u = q.front();
      q.pop();
      out.push_back(u);
      for (int j : J) {
        WIdx v = mult(u, simple_[j]);
        if (!seen[v]) {
          seen[v] = 1;
          q.push(v);
        }
      }
    }
    return out;
  }

  WIdx longest_in(const std::vector<int>& J) const {
    WIdx best = 0;
    for (WIdx u : subgroup(J))
      if (len_[u] > len_[best]) best = u;
    return best;
  }

  bool min_rep_right(WIdx u, const std::vector<int>& J) const {
    for (int j : J)
      if (right_descent(u, j)) return false;
    return true;
  }
  bool min_rep_left(WIdx u, const std::vector<int>& J) const {
    return min_rep_right(inv_[u], J);
  }

  // Minimal-length representatives of W/W_J, sorted by (length, index).
  std::vector<WIdx> min_coset_reps(const std::vector<int>& J) const {
    std::vector<WIdx> out;
    for (int u = 0; u < order(); ++u)
      if (min_rep_right(static_cast<WIdx>(u), J)) out.push_back(static_cast<WIdx>(u));
    std::sort(out.begin(), out.end(), [&](WIdx a, WIdx b) {
      return std::pair(len_[a], a) < std::pair(len_[b], b);
    });
    return out;
  }
  std::vector<WIdx> min_coset_reps_left(const std::vector<int>& J) const {
    std::vector<WIdx> out;
    for (int u = 0; u < order(); ++u)
      if (min_rep_left(static_cast<WIdx>(u), J)) out.push_back(static_cast<WIdx>(u));
    std::sort(out.begin(), out.end(), [&](WIdx a, WIdx b) {
      return std::pair(len_[a], a) < std::pair(len_[b], b);
    });
    return out;
  }
  std::vector<WIdx> max_coset_reps(const std::vector<int>& J) const {
    WIdx wj = longest_in(J);
    std::vector<WIdx> out;
    for (WIdx u : min_coset_reps(J)) out.push_back(mult(u, wj));
    return out;
  }

  WIdx min_in_coset_right(WIdx x, const std::vector<int>& J) const {  // min(xW_J)
    WIdx u = x;
    bool moved = true;
    while (moved) {
      moved = false;
      for (int j : J)
        if (right_descent(u, j)) {
          u = mult(u, simple_[j]);
          moved = true;
        }
    }
    return u;
  }
  WIdx max_in_coset_right(WIdx x, const std::vector<int>& J) const {  // max(xW_J)
    WIdx u = x;
    bool moved = true;
    while (moved) {
      moved = false;
      for (int j : J)
        if (!right_descent(u, j)) {
          u = mult(u, simple_[j]);
          moved = true;
        }
    }
    return u;
  }
  WIdx min_in_coset_left(WIdx x, const std::vector<int>& J) const {  // min(W_J x)
    return inverse(min_in_coset_right(inverse(x), J));
  }
  WIdx max_in_coset_left(WIdx x, const std::vector<int>& J) const {  // max(W_J x)
    return inverse(max_in_coset_right(inverse(x), J));
  }

  // Conjugation by the longest element, w -> w_S w w_S.
  WIdx st(WIdx u) const { return mult(mult(longest_, u), longest_); }
  int st_node(int i) const {
    // alpha_{i^st} = -w_S(alpha_i)
    int img = root_perm_[longest_][i];
    int neg = rs_.negate(img);
    const Vec& c = rs_.roots[neg];
    for (int j = 0; j < rank(); ++j) {
      Vec e(rank(), 0);
      e[j] = 1;
      if (c == e) return j;
    }
    throw std::logic_error("st_node: image is not a simple root");
  }
  std::vector<int> st_subset(const std::vector<int>& J) const {
    std::vector<int> out;
    for (int j : J) out.push_back(st_node(j));
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<WIdx> lower_cone(WIdx x) const {
    std::vector<WIdx> out;
    for (int z = 0; z < order(); ++z)
      if (leq(static_cast<WIdx>(z), x)) out.push_back(static_cast<WIdx>(z));
    return out;
  }

 private:
  void build() {
    const int nr = rs_.n_roots();
    const int r = rs_.rank;

    // Simple reflection permutations of the root list.
    std::vector<std::vector<uint16_t>> sref(r, std::vector<uint16_t>(nr));
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < nr; ++k) {
        int idx = rs_.root_index(rs_.simple_reflect(i, rs_.roots[k]));
        sref[i][k] = static_cast<uint16_t>(idx);
      }

    // Coweight action of s_i: chi -> chi - chi_i * (row i of cartan).
    std::vector<Mat> scw(r, Mat(r, Vec(r, 0)));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k)
          scw[i][j][k] = (j == k ? 1 : 0) - (k == i ? rs_.cartan[i][j] : 0);

    auto key_of = [&](const std::vector<uint16_t>& perm) {
      std::vector<uint16_t> k(perm.begin(), perm.begin() + r);
      return k;
    };

    std::map<std::vector<uint16_t>, WIdx> lookup;
    std::vector<uint16_t> id(nr);
    for (int k = 0; k < nr; ++k) id[k] = static_cast<uint16_t>(k);
    root_perm_.push_back(id);
    cw_mat_.push_back(Mat(r, Vec(r, 0)));
    for (int j = 0; j < r; ++j) cw_mat_[0][j][j] = 1;
    len_.push_back(0);
    lookup[key_of(id)] = 0;

    // BFS over right multiplications.
    for (size_t head = 0; head < root_perm_.size(); ++head) {
      for (int i = 0; i < r; ++i) {
        // (u s_i)(root k) = u(s_i(root k))
        std::vector<uint16_t> p(nr);
        for (int k = 0; k < nr; ++k) p[k] = root_perm_[head][sref[i][k]];
        auto key = key_of(p);
        if (lookup.count(key)) continue;
        lookup[key] = static_cast<WIdx>(root_perm_.size());
        root_perm_.push_back(std::move(p));
        // C_{u s_i} = C_u * C_{s_i}
        Mat m(r, Vec(r, 0));
        for (int a = 0; a < r; ++a)
          for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c) m[a][b] += cw_mat_[head][a][c] * scw[i][c][b];
        cw_mat_.push_back(std::move(m));
        len_.push_back(len_[head] + 1);
      }
    }

    const int n = order();
    simple_.resize(r);
    for (int i = 0; i < r; ++i) {
      std::vector<uint16_t> p(sref[i].begin(), sref[i].begin() + r);
      simple_[i] = lookup.at(p);
    }

    mult_.assign(static_cast<size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        std::vector<uint16_t> k(r);
        for (int j = 0; j < r; ++j) k[j] = root_perm_[u][root_perm_[v][j]];
        mult_[static_cast<size_t>(u) * n + v] = lookup.at(k);
      }

    inv_.resize(n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (mult_[static_cast<size_t>(u) * n + v] == 0) {
          inv_[u] = static_cast<WIdx>(v);
          break;
        }

    longest_ = 0;
    for (int u = 0; u < n; ++u)
      if (len_[u] > len_[longest_]) longest_ = static_cast<WIdx>(u);

    refl_.resize(rs_.n_pos);
    for (int k = 0; k < rs_.n_pos; ++k) {
      std::vector<uint16_t> p(r);
      for (int j = 0; j < r; ++j)
        p[j] = static_cast<uint16_t>(rs_.reflect_root(k, j));
      refl_[k] = lookup.at(p);
    }

    // Bruhat order by the descent recursion, filled in length order.
    leq_.assign(static_cast<size_t>(n) * n, false);
    std::vector<WIdx> by_len = all_elements();
    std::sort(by_len.begin(), by_len.end(),
              [&](WIdx a, WIdx b) { return len_[a] < len_[b]; });
    for (WIdx b : by_len) {
      if (b == 0) {
        leq_[0] = true;
        continue;
      }
      int i = 0;
      while (!right_descent(b, i)) ++i;
      WIdx bs = mult(b, simple_[i]);
      for (int a = 0; a < n; ++a) {
        bool ok;
        WIdx as = mult(static_cast<WIdx>(a), simple_[i]);
        if (len_[as] < len_[a])
          ok = leq_[static_cast<size_t>(as) * n + bs];
        else
          ok = leq_[static_cast<size_t>(a) * n + bs];
        leq_[static_cast<size_t>(a) * n + b] = ok;
      }
    }
  }

  RootSystem rs_;
  std::vector<std::vector<uint16_t>> root_perm_;
  std::vector<Mat> cw_mat_;
  std::vector<int> len_;
  std::vector<WIdx> simple_, inv_, refl_;
  std::vector<WIdx> mult_;
  std::vector<char> leq_;
  WIdx longest_ = 0;

  // leq_ uses char-as-bool to keep the n^2 table compact.
};

}  // namespace richadm
