#pragma once

// Exact root-system data for the classical types A, B, C, D.
//
// Conventions (Bourbaki numbering throughout):
//   - roots are stored as integer coordinate vectors in the simple-root basis;
//   - coweights are stored in the fundamental-coweight basis, so that
//     <omega_i, alpha_j> = delta_ij and <chi, alpha> is a plain dot product;
//   - cartan[i][j] = <alpha_i^vee, alpha_j>, hence
//     s_i(alpha_j) = alpha_j - cartan[i][j] * alpha_i.

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace richadm {

using Vec = std::vector<int>;
using Mat = std::vector<Vec>;

inline int dot(const Vec& a, const Vec& b) {
  int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct RootSystem {
  char type = 'A';
  int rank = 0;
  Mat cartan;                // cartan[i][j] = <alpha_i^vee, alpha_j>
  std::vector<Vec> roots;    // positive roots first, then their negatives
  int n_pos = 0;
  std::vector<Vec> coroot;   // coroot[k][j] = <roots[k]^vee, alpha_j>
  int highest = -1;          // index of the highest root theta
  std::map<Vec, int> index_of;

  int n_roots() const { return static_cast<int>(roots.size()); }
  bool is_positive(int k) const { return k < n_pos; }
  int negate(int k) const { return k < n_pos ? k + n_pos : k - n_pos; }

  // <chi, alpha> for a coweight chi in fundamental-coweight coordinates.
  int pairing(const Vec& chi, int root_idx) const {
    return dot(chi, roots[root_idx]);
  }
  int pairing(const Vec& chi, const Vec& root_coords) const {
    return dot(chi, root_coords);
  }

  // <alpha^vee, beta> for roots alpha, beta.
  int coroot_pairing(int alpha_idx, const Vec& beta_coords) const {
    return dot(coroot[alpha_idx], beta_coords);
  }

  // s_i(beta) in coordinates.
  Vec simple_reflect(int i, const Vec& beta) const {
    Vec out = beta;
    int c = dot(cartan[i], beta);
    out[i] -= c;
    return out;
  }

  int root_index(const Vec& coords) const {
    auto it = index_of.find(coords);
    return it == index_of.end() ? -1 : it->second;
  }

  // Reflection r_alpha as a map on root indices.
  int reflect_root(int alpha_idx, int beta_idx) const {
    Vec b = roots[beta_idx];
    int c = coroot_pairing(alpha_idx, b);
    const Vec& a = roots[alpha_idx];
    for (int j = 0; j < rank; ++j) b[j] -= c * a[j];
    int k = root_index(b);
    if (k < 0) throw std::logic_error("reflection left the root set");
    return k;
  }

  // theta^vee in fundamental-coweight coordinates.
  Vec theta_covec() const { return coroot[highest]; }

  // Sum over all positive roots of <chi, alpha>.
  long long two_rho_pairing(const Vec& chi) const {
    long long s = 0;
    for (int k = 0; k < n_pos; ++k) s += pairing(chi, k);
    return s;
  }

  bool dominant(const Vec& chi) const {
    return std::all_of(chi.begin(), chi.end(), [](int c) { return c >= 0; });
  }

  // Pairs to 0 or 1 with every positive root.
  bool cominuscule(const Vec& chi) const {
    if (!dominant(chi)) return false;
    for (int k = 0; k < n_pos; ++k) {
      int p = pairing(chi, k);
      if (p < 0 || p > 1) return false;
    }
    return true;
  }

  Vec fundamental_coweight(int i) const {
    Vec v(rank, 0);
    v[i] = 1;
    return v;
  }

  // alpha_j^vee in fundamental-coweight coordinates is row j of the Cartan
  // matrix; a coweight lies in the coroot lattice iff it is an integer
  // combination of these rows.
  Vec simple_coroot_covec(int j) const { return cartan[j]; }
};

namespace detail {

inline Mat classical_cartan(char type, int rank) {
  auto bad = [&] {
    throw std::invalid_argument("unsupported type/rank: " + std::string(1, type) +
                                std::to_string(rank));
  };
  switch (type) {
    case 'A': if (rank < 1) bad(); break;
    case 'B': case 'C': if (rank < 2) bad(); break;
    case 'D': if (rank < 3) bad(); break;
    default: bad();
  }
  Mat a(rank, Vec(rank, 0));
  for (int i = 0; i < rank; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
  int chain = (type == 'D') ? rank - 1 : rank;
  for (int i = 0; i + 1 < chain; ++i) link(i, i + 1);
  if (type == 'B' && rank >= 2) {
    // alpha_rank short: <alpha_n^vee, alpha_{n-1}> = -2.
    a[rank - 1][rank - 2] = -2;
  } else if (type == 'C' && rank >= 2) {
    // alpha_rank long.
    a[rank - 2][rank - 1] = -2;
  } else if (type == 'D') {
    link(rank - 3, rank - 1);
  }
  return a;
}

}  // namespace detail

inline RootSystem build_root_system(char type, int rank) {
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.cartan = detail::classical_cartan(type, rank);

  // Reflection closure from the simple roots, carrying coroot rows along:
  // if beta' = s_i(beta) then <beta'^vee, alpha_j> = <beta^vee, s_i(alpha_j)>.
  std::map<Vec, Vec> seen;  // root coords -> coroot row
  std::vector<Vec> queue;
  for (int i = 0; i < rank; ++i) {
    Vec e(rank, 0);
    e[i] = 1;
    seen.emplace(e, rs.cartan[i]);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Vec b = queue.back();
    queue.pop_back();
    Vec row = seen.at(b);
    for (int i = 0; i < rank; ++i) {
      Vec b2 = rs.simple_reflect(i, b);
      if (seen.count(b2)) continue;
      Vec row2(rank);
      for (int j = 0; j < rank; ++j) {
        // row2[j] = <b^vee, s_i(alpha_j)> = row[j] - cartan[i][j]*row[i]
        row2[j] = row[j] - rs.cartan[i][j] * row[i];
      }
      seen.emplace(b2, row2);
      queue.push_back(b2);
    }
  }

  std::vector<Vec> pos, neg;
  for (auto& [coords, row] : seen) {
    bool all_nonneg = std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
    bool all_nonpos = std::all_of(coords.begin(), coords.end(), [](int c) { return c <= 0; });
    if (!all_nonneg && !all_nonpos)
      throw std::logic_error("root with mixed-sign coordinates");
    (all_nonneg ? pos : neg).push_back(coords);
  }
  if (pos.size() != neg.size()) throw std::logic_error("root set not closed under negation");

  // Order: the simple roots first (so roots[i] = alpha_i), then by height/lex.
  auto height_of = [](const Vec& a) { return std::accumulate(a.begin(), a.end(), 0); };
  auto key = [&](const Vec& a) {
    int h = height_of(a);
    int simple_pos = rank;
    if (h == 1)
      for (int i = 0; i < rank; ++i)
        if (a[i] == 1) simple_pos = i;
    return std::tuple(h > 1, simple_pos, h, a);
  };
  std::sort(pos.begin(), pos.end(),
            [&](const Vec& a, const Vec& b) { return key(a) < key(b); });

  rs.n_pos = static_cast<int>(pos.size());
  rs.roots = pos;
  for (auto& p : pos) {
    Vec m = p;
    for (auto& c : m) c = -c;
    rs.roots.push_back(m);
  }
  for (int k = 0; k < rs.n_roots(); ++k) {
    rs.index_of[rs.roots[k]] = k;
    rs.coroot.push_back(seen.at(rs.roots[k]));
  }

  // Highest root: the unique positive root theta with theta + alpha_i never a
  // root.
  int found = -1;
  for (int k = 0; k < rs.n_pos; ++k) {
    bool maximal = true;
    for (int i = 0; i < rank && maximal; ++i) {
      Vec up = rs.roots[k];
      up[i] += 1;
      if (rs.index_of.count(up)) maximal = false;
    }
    if (maximal) {
      if (found >= 0) throw std::logic_error("root poset has two maxima (reducible system?)");
      found = k;
    }
  }
  rs.highest = found;
  return rs;
}

}  // namespace richadm
