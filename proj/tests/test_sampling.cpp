#include "thetaconn/grading.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace thetaconn;

namespace {

std::shared_ptr<const GradedDecomposition> make_grading(char s, int r, const std::vector<int>& perm,
                                                        const std::vector<long>& kac) {
  auto alg = std::make_shared<const ChevalleyAlgebra>(ChevalleyAlgebra::build(s, r));
  auto sigma = perm.empty() ? DiagramAutomorphism::identity(alg) : DiagramAutomorphism::pinned(alg, perm);
  return std::make_shared<const GradedDecomposition>(GradedDecomposition::build(KacCoordinates::build(sigma, kac)));
}

CycVec rho_check(const ChevalleyAlgebra& alg) {
  // alpha_i(rho) = 1 for every simple root: solve in the coroot basis.
  int l = alg.rs.rank;
  Mat<Rat> a(static_cast<size_t>(l), static_cast<size_t>(l + 1));
  for (int i = 0; i < l; ++i) {
    RootVec e(static_cast<size_t>(l), 0);
    e[static_cast<size_t>(i)] = 1;
    for (int j = 0; j < l; ++j) a(static_cast<size_t>(i), static_cast<size_t>(j)) = Rat(alg.rs.pairing_with_simple_coroot(e, j));
    a(static_cast<size_t>(i), static_cast<size_t>(l)) = Rat(1);
  }
  a.rref();
  CycVec v(alg.dim(), Cyc(0));
  for (int j = 0; j < l; ++j) v[static_cast<size_t>(j)] = Cyc(a(static_cast<size_t>(j), static_cast<size_t>(l)));
  return v;
}

}  // namespace

TEST_CASE("regular semisimple detection") {
  auto g = make_grading('G', 2, {}, {1, 1, 1});
  const auto& alg = *g->alg;
  // a regular Cartan element: every root takes a nonzero value on rho_check
  CHECK(g->is_regular_semisimple(rho_check(alg)));
  // the regular nilpotent sum of simple root vectors is not semisimple
  CycVec n(g->dim(), Cyc(0));
  for (int i = 0; i < alg.rs.rank; ++i) {
    RootVec e(static_cast<size_t>(alg.rs.rank), 0);
    e[static_cast<size_t>(i)] = 1;
    n[static_cast<size_t>(alg.e_index(alg.rs.root_index(e)))] = Cyc(1);
  }
  CHECK(!g->is_regular_semisimple(n));
  CHECK(!g->is_semisimple(n));
  CHECK(g->is_semisimple(rho_check(alg)));
}

TEST_CASE("Frenkel-Gross stable locus is exactly the all-nonzero locus") {
  auto g = make_grading('A', 2, {}, {1, 1, 1});
  // basis of g_1 sorted by weight: E_0 (lowest root vector) then simples
  REQUIRE(g->g1_basis.size() == 3);
  auto from_coords = [&](std::vector<long> cs) {
    CycVec x(g->dim(), Cyc(0));
    for (size_t i = 0; i < cs.size(); ++i)
      if (cs[i] != 0) x = vec_add(x, vec_scale(g->g1_basis[i], Cyc(static_cast<int>(cs[i]), g->conductor)));
    return x;
  };
  CHECK(g->is_regular_semisimple(from_coords({1, 1, 1})));  // all-ones FG vector
  CHECK(g->is_stable(from_coords({1, 1, 1})));
  CHECK(g->is_stable(from_coords({3, -2, 5})));
  CHECK(!g->is_stable(from_coords({0, 1, 1})));
  CHECK(!g->is_stable(from_coords({1, 0, 1})));
  CHECK(!g->is_stable(from_coords({1, 1, 0})));
}

TEST_CASE("stability requires membership in g_1") {
  auto g = make_grading('A', 2, {}, {1, 1, 1});
  CycVec h(g->dim(), Cyc(0));
  h[0] = Cyc(1);  // Cartan element, lives in g_0
  CHECK_THROWS_AS(g->is_stable(h), InputError);
}

TEST_CASE("sampler determinism and predicate guarantees") {
  auto g = make_grading('G', 2, {}, {1, 1, 0});
  std::vector<long> c1, c2;
  CycVec a = g->sample_vector(Predicate::Stable, 5, &c1);
  CycVec b = g->sample_vector(Predicate::Stable, 5, &c2);
  CHECK(a == b);
  CHECK(c1 == c2);
  CHECK(g->is_stable(a));
  CHECK(g->is_regular_semisimple(a));  // stable implies rss
  CycVec c = g->sample_vector(Predicate::RegularSemisimple, 6);
  CHECK(g->is_regular_semisimple(c));
  CycVec d = g->sample_vector(Predicate::Any, 7);
  CHECK(!vec_is_zero(d));
}

TEST_CASE("FG stable samples have every coefficient nonzero") {
  auto g = make_grading('A', 2, {}, {1, 1, 1});
  std::vector<long> coords;
  g->sample_vector(Predicate::Stable, 1, &coords);
  for (long c : coords) CHECK(c != 0);
}

TEST_CASE("stable sampling on the trivial grading fails explicitly") {
  auto g = make_grading('A', 1, {}, {1, 0});
  REQUIRE(g->m == 1);
  CHECK_THROWS_AS(g->sample_vector(Predicate::Stable, 1), SamplingError);
}
