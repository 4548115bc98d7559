#include "thetaconn/root_system.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace thetaconn;

TEST_CASE("root counts for the classical and exceptional families") {
  CHECK(RootSystem::build('A', 1).size() == 2);
  CHECK(RootSystem::build('A', 2).size() == 6);  // 2n(2n+1) with n = 1
  CHECK(RootSystem::build('A', 4).size() == 20);
  CHECK(RootSystem::build('B', 2).size() == 8);
  CHECK(RootSystem::build('B', 4).size() == 32);
  CHECK(RootSystem::build('C', 3).size() == 18);
  CHECK(RootSystem::build('D', 4).size() == 24);
  CHECK(RootSystem::build('G', 2).size() == 12);
  CHECK(RootSystem::build('F', 4).size() == 48);
  CHECK(RootSystem::build('E', 6).size() == 72);
  CHECK(RootSystem::build('E', 8).size() == 240);
}

TEST_CASE("invalid types are rejected") {
  CHECK_THROWS_AS(RootSystem::build('G', 3), InputError);
  CHECK_THROWS_AS(RootSystem::build('F', 2), InputError);
  CHECK_THROWS_AS(RootSystem::build('B', 1), InputError);
  CHECK_THROWS_AS(RootSystem::build('D', 3), InputError);
  CHECK_THROWS_AS(RootSystem::build('E', 5), InputError);
  CHECK_THROWS_AS(RootSystem::build('A', 9), InputError);
  CHECK_THROWS_AS(RootSystem::build('X', 2), InputError);
}

TEST_CASE("G2 highest root and lengths") {
  RootSystem g2 = RootSystem::build('G', 2);
  CHECK(g2.highest_root == RootVec{2, 3});
  CHECK(g2.marks == std::vector<int>{2, 3});
  // alpha_2 is the short root
  RootVec a1{1, 0}, a2{0, 1};
  CHECK(g2.norm2(a1) == 3 * g2.norm2(a2));
}

TEST_CASE("structural invariants of the root list") {
  for (auto [s, r] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}, {'F', 4}}) {
    RootSystem rs = RootSystem::build(s, r);
    CHECK(rs.size() % 2 == 0);
    // closed under negation, with the mirrored index layout
    for (size_t i = 0; i < rs.size(); ++i) {
      RootVec neg = rs.roots[i];
      for (int& x : neg) x = -x;
      CHECK(rs.root_index(neg) == rs.negative_of(static_cast<int>(i)));
    }
    // simple roots are the standard basis vectors
    for (int i = 0; i < rs.rank; ++i) {
      RootVec e(static_cast<size_t>(rs.rank), 0);
      e[static_cast<size_t>(i)] = 1;
      CHECK(rs.is_root(e));
    }
    // every simple reflection permutes the root set
    for (int i = 0; i < rs.rank; ++i)
      for (const RootVec& root : rs.roots) CHECK(rs.is_root(rs.reflect(root, i)));
    // highest root dominates every root
    for (const RootVec& root : rs.roots)
      for (int i = 0; i < rs.rank; ++i)
        CHECK(rs.highest_root[static_cast<size_t>(i)] >= root[static_cast<size_t>(i)]);
  }
}

TEST_CASE("coroot coordinates are integral and correct on simples") {
  RootSystem b3 = RootSystem::build('B', 3);
  for (int i = 0; i < 3; ++i) {
    RootVec e(3, 0);
    e[static_cast<size_t>(i)] = 1;
    auto co = b3.coroot_coords(e);
    std::vector<int> expect(3, 0);
    expect[static_cast<size_t>(i)] = 1;
    CHECK(co == expect);
  }
  // long-root coroot of G2 highest root: theta^vee = alpha: (2,3) norm2=6?
  RootSystem g2 = RootSystem::build('G', 2);
  auto co = g2.coroot_coords(g2.highest_root);
  // theta = 2a1 + 3a2 (long); theta^vee = 2*(d1/d_theta)a1^vee + 3*(d2/d)a2^vee = 2*1 + 3*(1/3)...
  CHECK(co == std::vector<int>{2, 1});
}
