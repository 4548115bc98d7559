// Stability on the subregular G2 grading against the binary-cubic oracle:
// identifying g(1) with the degree-3 forms in two variables (weight basis
// scaled so the raising operator acts with the root-string constants), a
// vector (f, z) is stable exactly when z != 0 and f has three distinct
// projective roots, i.e. nonzero discriminant.

#include "thetaconn/grading.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace thetaconn;

namespace {

struct G2Setup {
  std::shared_ptr<const GradedDecomposition> g;
  std::vector<int> weight_basis;  // ambient indices of E_{alpha_1 + k alpha_2}, k = 0..3
  int lowest_index;               // ambient index of E_{-2a1 - 3a2}
  std::vector<int> eps;           // sign ladder from the alpha_2 raising action
};

G2Setup setup() {
  G2Setup s;
  auto alg = std::make_shared<const ChevalleyAlgebra>(ChevalleyAlgebra::build('G', 2));
  auto kc = KacCoordinates::build(DiagramAutomorphism::identity(alg), {1, 1, 0});
  s.g = std::make_shared<const GradedDecomposition>(GradedDecomposition::build(kc));
  for (int k = 0; k <= 3; ++k) {
    int ri = alg->rs.root_index({1, k});
    REQUIRE(ri >= 0);
    s.weight_basis.push_back(alg->e_index(ri));
  }
  s.lowest_index = alg->e_index(alg->rs.root_index({-2, -3}));
  s.eps.assign(4, 1);
  int a2 = alg->rs.root_index({0, 1});
  for (int k = 0; k < 3; ++k) {
    long n = alg->n_constant(a2, alg->rs.root_index({1, k}));
    REQUIRE(std::abs(n) == k + 1);
    s.eps[static_cast<size_t>(k + 1)] = s.eps[static_cast<size_t>(k)] * (n > 0 ? 1 : -1);
  }
  return s;
}

Rat cubic_discriminant(const std::array<Rat, 4>& a) {
  // f = a3 x^3 + a2 x^2 y + a1 x y^2 + a0 y^3
  const Rat &a0 = a[0], &a1 = a[1], &a2 = a[2], &a3 = a[3];
  return Rat(18) * a3 * a2 * a1 * a0 - Rat(4) * a2 * a2 * a2 * a0 + a2 * a2 * a1 * a1 -
         Rat(4) * a3 * a1 * a1 * a1 - Rat(27) * a3 * a3 * a0 * a0;
}

CycVec make_vector(const G2Setup& s, const std::array<long, 4>& c, long z) {
  CycVec x(s.g->dim(), Cyc(0));
  for (int k = 0; k <= 3; ++k) x[static_cast<size_t>(s.weight_basis[static_cast<size_t>(k)])] = Cyc(Rat(c[static_cast<size_t>(k)]), s.g->conductor);
  x[static_cast<size_t>(s.lowest_index)] = Cyc(Rat(z), s.g->conductor);
  return x;
}

bool oracle(const G2Setup& s, const std::array<long, 4>& c, long z) {
  if (z == 0) return false;
  std::array<Rat, 4> a;
  long binom[4] = {1, 3, 3, 1};
  for (int k = 0; k <= 3; ++k) a[static_cast<size_t>(k)] = Rat(c[static_cast<size_t>(k)] * s.eps[static_cast<size_t>(k)] * binom[k]);
  return cubic_discriminant(a) != 0;
}

}  // namespace

TEST_CASE("stability agrees with the distinct-roots criterion on random draws") {
  G2Setup s = setup();
  std::mt19937_64 rng(1234);
  int stable_seen = 0, unstable_seen = 0;
  for (int t = 0; t < 60; ++t) {
    std::array<long, 4> c;
    for (auto& v : c) v = static_cast<long>(rng() % 7) - 3;
    long z = static_cast<long>(rng() % 5) - 2;
    CycVec x = make_vector(s, c, z);
    if (vec_is_zero(x)) continue;
    bool expected = oracle(s, c, z);
    CHECK(s.g->is_stable(x) == expected);
    (expected ? stable_seen : unstable_seen)++;
  }
  CHECK(stable_seen > 5);
  CHECK(unstable_seen > 5);
}

TEST_CASE("crafted degenerate cubics are unstable") {
  G2Setup s = setup();
  // triple root y^3
  CHECK(!s.g->is_stable(make_vector(s, {1, 0, 0, 0}, 1)));
  // double root: f = x y^2 (up to scale)
  CHECK(!s.g->is_stable(make_vector(s, {0, 1, 0, 0}, 1)));
  // distinct roots but z = 0
  std::array<long, 4> good{1, 0, 0, 1};  // x^3 + y^3
  REQUIRE(oracle(s, good, 1));
  CHECK(!s.g->is_stable(make_vector(s, good, 0)));
  CHECK(s.g->is_stable(make_vector(s, good, 1)));
  CHECK(s.g->is_stable(make_vector(s, good, -4)));
  // x y (x + y): distinct roots with zero leading coefficient
  std::array<long, 4> split{0, 1, 1, 0};
  bool expect = oracle(s, split, 2);
  CHECK(s.g->is_stable(make_vector(s, split, 2)) == expect);
}
