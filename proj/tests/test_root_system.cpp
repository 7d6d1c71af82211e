#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "richadm/affine_weyl.hpp"
#include "richadm/root_system.hpp"
#include "richadm/weyl_group.hpp"

using namespace richadm;

namespace {

// Independent reflection-closure oracle working directly from a Cartan
// matrix; returns the full set of root coordinate vectors.
std::set<Vec> closure_oracle(const Mat& cartan) {
  int r = static_cast<int>(cartan.size());
  std::set<Vec> roots;
  std::vector<Vec> stack;
  for (int i = 0; i < r; ++i) {
    Vec e(r, 0);
    e[i] = 1;
    roots.insert(e);
    stack.push_back(e);
  }
  while (!stack.empty()) {
    Vec b = stack.back();
    stack.pop_back();
    for (int i = 0; i < r; ++i) {
      int c = 0;
      for (int j = 0; j < r; ++j) c += cartan[i][j] * b[j];
      Vec b2 = b;
      b2[i] -= c;
      if (roots.insert(b2).second) stack.push_back(b2);
    }
  }
  return roots;
}

}  // namespace

TEST_CASE("root counts match the reflection-closure oracle") {
  struct Case {
    char t;
    int r;
    size_t n_roots, n_pos;
  };
  for (Case c : {Case{'A', 2, 6, 3}, Case{'B', 2, 8, 4}, Case{'D', 3, 12, 6},
                 Case{'A', 3, 12, 6}, Case{'C', 2, 8, 4}, Case{'B', 3, 18, 9}}) {
    RootSystem rs = build_root_system(c.t, c.r);
    CHECK(rs.roots.size() == c.n_roots);
    CHECK(static_cast<size_t>(rs.n_pos) == c.n_pos);
    auto oracle = closure_oracle(rs.cartan);
    CHECK(oracle.size() == c.n_roots);
    for (const auto& v : rs.roots) CHECK(oracle.count(v) == 1);
  }
}

TEST_CASE("unsupported type or rank is rejected") {
  CHECK_THROWS_AS(build_root_system('E', 6), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system('A', 0), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system('B', 1), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system('D', 2), std::invalid_argument);
}

TEST_CASE("roots are closed under negation and sign-separated") {
  for (auto [t, r] : {std::pair('A', 3), std::pair('B', 3), std::pair('C', 2), std::pair('D', 3)}) {
    RootSystem rs = build_root_system(t, r);
    for (int k = 0; k < rs.n_roots(); ++k) {
      Vec m = rs.roots[k];
      for (auto& c : m) c = -c;
      CHECK(rs.root_index(m) == rs.negate(k));
      bool pos = std::all_of(rs.roots[k].begin(), rs.roots[k].end(), [](int c) { return c >= 0; });
      CHECK(pos == rs.is_positive(k));
    }
  }
}

TEST_CASE("simple reflections keep the root set stable") {
  for (auto [t, r] : {std::pair('A', 2), std::pair('B', 3), std::pair('C', 2), std::pair('D', 3)}) {
    RootSystem rs = build_root_system(t, r);
    for (int i = 0; i < rs.rank; ++i)
      for (int k = 0; k < rs.n_roots(); ++k)
        CHECK(rs.root_index(rs.simple_reflect(i, rs.roots[k])) >= 0);
  }
}

TEST_CASE("Cartan matrices follow the declared Bourbaki shapes") {
  RootSystem b2 = build_root_system('B', 2);
  CHECK(b2.cartan == Mat{{2, -1}, {-2, 2}});
  RootSystem c2 = build_root_system('C', 2);
  CHECK(c2.cartan == Mat{{2, -2}, {-1, 2}});
  RootSystem d3 = build_root_system('D', 3);
  CHECK(d3.cartan == Mat{{2, -1, -1}, {-1, 2, 0}, {-1, 0, 2}});
  for (auto [t, r] : {std::pair('A', 3), std::pair('B', 3)}) {
    RootSystem rs = build_root_system(t, r);
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j) {
        if (i == j)
          CHECK(rs.cartan[i][j] == 2);
        else
          CHECK(rs.cartan[i][j] <= 0);
      }
  }
}

TEST_CASE("pairing of fundamental coweights and simple roots is dual") {
  for (auto [t, r] : {std::pair('A', 2), std::pair('B', 2), std::pair('C', 2), std::pair('D', 3)}) {
    RootSystem rs = build_root_system(t, r);
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j)
        CHECK(rs.pairing(rs.fundamental_coweight(i), j) == (i == j ? 1 : 0));
    // <theta^vee, theta> = 2
    CHECK(rs.pairing(rs.theta_covec(), rs.highest) == 2);
  }
}

TEST_CASE("pairing is bilinear on sampled lattice points") {
  RootSystem rs = build_root_system('B', 3);
  Vec chi1{1, 2, 0}, chi2{0, 1, 3};
  Vec sum(3);
  for (int i = 0; i < 3; ++i) sum[i] = chi1[i] + chi2[i];
  for (int k = 0; k < rs.n_roots(); ++k)
    CHECK(rs.pairing(sum, k) == rs.pairing(chi1, k) + rs.pairing(chi2, k));
}

TEST_CASE("highest root of A2 and two_rho values") {
  RootSystem rs = build_root_system('A', 2);
  CHECK(rs.roots[rs.highest] == Vec{1, 1});
  CHECK(rs.two_rho_pairing(Vec{0, 0}) == 0);
  CHECK(rs.two_rho_pairing(rs.fundamental_coweight(0)) == 2);
  // theta + alpha_i is never a root
  for (int i = 0; i < rs.rank; ++i) {
    Vec up = rs.roots[rs.highest];
    up[i] += 1;
    CHECK(rs.root_index(up) == -1);
  }
}

TEST_CASE("two_rho_pairing matches the affine length of the translation") {
  RootSystem rs = build_root_system('A', 2);
  WeylGroup W(rs);
  AffineWeyl aw(W);
  Vec lam = rs.fundamental_coweight(0);
  Vec neg = lam;
  for (auto& c : neg) c = -c;
  CHECK(aw.length(aw.translation(neg)) == rs.two_rho_pairing(lam));
}

TEST_CASE("D3 root poset is isomorphic to the A3 root poset") {
  RootSystem d3 = build_root_system('D', 3);
  RootSystem a3 = build_root_system('A', 3);
  // relabeling: D3 node 1 is the branch node = A3 node 2
  auto remap = [](const Vec& v) { return Vec{v[1], v[0], v[2]}; };
  std::set<Vec> a3pos, d3pos_mapped;
  for (int k = 0; k < a3.n_pos; ++k) a3pos.insert(a3.roots[k]);
  for (int k = 0; k < d3.n_pos; ++k) d3pos_mapped.insert(remap(d3.roots[k]));
  CHECK(a3pos == d3pos_mapped);
  // componentwise order (the root poset order) is preserved by relabeling,
  // so equality of the mapped sets is an order isomorphism.
}

TEST_CASE("number of positive roots equals the length of the longest element") {
  for (auto [t, r] : {std::pair('A', 3), std::pair('B', 2), std::pair('C', 2), std::pair('D', 3)}) {
    RootSystem rs = build_root_system(t, r);
    WeylGroup W(rs);
    CHECK(W.length(W.longest()) == rs.n_pos);
  }
}

TEST_CASE("omega group orders and the trivial action of the identity") {
  {
    WeylGroup W(build_root_system('A', 2));
    AffineWeyl aw(W);
    CHECK(aw.omega_group().size() == 3);
  }
  {
    WeylGroup W(build_root_system('B', 2));
    AffineWeyl aw(W);
    CHECK(aw.omega_group().size() == 2);
    const auto& id = aw.omega_of(aw.identity());
    for (int a = 0; a <= aw.rank(); ++a) {
      CHECK(id.node_perm[a] == a);
      AffineRoot b{a == 0 ? aw.rs().negate(aw.rs().highest) : a - 1, a == 0 ? 1 : 0};
      CHECK(aw.omega_act(id, b) == b);
    }
  }
  {
    WeylGroup W(build_root_system('D', 3));
    AffineWeyl aw(W);
    CHECK(aw.omega_group().size() == 4);
  }
}
