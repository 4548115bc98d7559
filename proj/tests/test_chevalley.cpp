#include "thetaconn/chevalley.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace thetaconn;

TEST_CASE("sl2 relations") {
  auto a1 = ChevalleyAlgebra::build('A', 1);
  // basis: H, E (positive), F (negative)
  int h = 0, e = a1.e_index(0), f = a1.e_index(a1.rs.negative_of(0));
  Vec<Rat> He = a1.bracket(a1.basis_vec<Rat>(h), a1.basis_vec<Rat>(e));
  Vec<Rat> Hf = a1.bracket(a1.basis_vec<Rat>(h), a1.basis_vec<Rat>(f));
  Vec<Rat> Ef = a1.bracket(a1.basis_vec<Rat>(e), a1.basis_vec<Rat>(f));
  CHECK(He == vec_scale(a1.basis_vec<Rat>(e), Rat(2)));
  CHECK(Hf == vec_scale(a1.basis_vec<Rat>(f), Rat(-2)));
  CHECK(Ef == a1.basis_vec<Rat>(h));
}

TEST_CASE("Jacobi identity holds exhaustively on small types and G2") {
  for (auto [s, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'B', 2}, {'C', 3}, {'G', 2}}) {
    auto alg = ChevalleyAlgebra::build(s, r);
    int n = static_cast<int>(alg.dim());
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        for (int k = 0; k < n && ok; ++k) ok = alg.jacobi_holds(i, j, k);
    INFO(std::string(1, s) << r);
    CHECK(ok);
  }
}

TEST_CASE("structure constants have the root-string magnitude") {
  for (auto [s, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}}) {
    auto alg = ChevalleyAlgebra::build(s, r);
    const RootSystem& rs = alg.rs;
    for (size_t a = 0; a < rs.size(); ++a)
      for (size_t b = 0; b < rs.size(); ++b) {
        RootVec sum = rs.roots[a];
        for (size_t i = 0; i < sum.size(); ++i) sum[i] += rs.roots[b][i];
        if (!rs.is_root(sum)) continue;
        long n = alg.n_constant(static_cast<int>(a), static_cast<int>(b));
        long p = rs.string_down(rs.roots[a], rs.roots[b]);  // independent recomputation
        CHECK(std::abs(n) == p + 1);
      }
  }
}

TEST_CASE("G2 reaches structure constants up to 3") {
  auto g2 = ChevalleyAlgebra::build('G', 2);
  long maxabs = 0;
  for (size_t a = 0; a < g2.rs.size(); ++a)
    for (size_t b = 0; b < g2.rs.size(); ++b)
      maxabs = std::max(maxabs, std::abs(g2.n_constant(static_cast<int>(a), static_cast<int>(b))));
  CHECK(maxabs == 3);
}

TEST_CASE("Killing form values and structure") {
  auto a1 = ChevalleyAlgebra::build('A', 1);
  CHECK(a1.killing()(0, 0) == Rat(8));  // trace of (ad H)^2 over the adjoint

  auto g2 = ChevalleyAlgebra::build('G', 2);
  // kappa(E_alpha, E_beta) = 0 unless alpha + beta = 0
  for (size_t a = 0; a < g2.rs.size(); ++a)
    for (size_t b = 0; b < g2.rs.size(); ++b) {
      if (static_cast<int>(b) == g2.rs.negative_of(static_cast<int>(a))) continue;
      CHECK(g2.killing()(g2.e_index(static_cast<int>(a)), g2.e_index(static_cast<int>(b))) == Rat(0));
    }
  CHECK(!(g2.killing().det() == Rat(0)));
}

TEST_CASE("Killing form equals the dense adjoint trace form") {
  for (auto [s, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}}) {
    auto alg = ChevalleyAlgebra::build(s, r);
    for (size_t i = 0; i < alg.dim(); ++i)
      for (size_t j = 0; j < alg.dim(); ++j) {
        Mat<Rat> p = alg.adjoint(alg.basis_vec<Rat>(static_cast<int>(i))) *
                     alg.adjoint(alg.basis_vec<Rat>(static_cast<int>(j)));
        Rat tr(0);
        for (size_t d = 0; d < alg.dim(); ++d) tr += p(d, d);
        CHECK(tr == alg.killing()(i, j));
      }
  }
}

TEST_CASE("Killing form is invariant") {
  auto g2 = ChevalleyAlgebra::build('G', 2);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    Vec<Rat> x(g2.dim()), y(g2.dim()), z(g2.dim());
    for (size_t i = 0; i < g2.dim(); ++i) {
      x[i] = Rat(static_cast<long>(rng() % 9) - 4);
      y[i] = Rat(static_cast<long>(rng() % 9) - 4);
      z[i] = Rat(static_cast<long>(rng() % 9) - 4);
    }
    CHECK(g2.killing_pair(g2.bracket(x, y), z) == g2.killing_pair(x, g2.bracket(y, z)));
  }
}

TEST_CASE("adjoint matrices") {
  auto a1 = ChevalleyAlgebra::build('A', 1);
  Mat<Rat> adH = a1.adjoint(a1.basis_vec<Rat>(0));
  // eigen-action: ad(H) E = 2E, ad(H) H = 0, ad(H) F = -2F
  CHECK(adH.apply(a1.basis_vec<Rat>(1)) == vec_scale(a1.basis_vec<Rat>(1), Rat(2)));
  CHECK(vec_is_zero(adH.apply(a1.basis_vec<Rat>(0))));
  CHECK(adH.apply(a1.basis_vec<Rat>(2)) == vec_scale(a1.basis_vec<Rat>(2), Rat(-2)));

  Vec<Rat> zero(a1.dim(), Rat(0));
  CHECK(a1.adjoint(zero).is_zero());
  CHECK_THROWS_AS(a1.adjoint(Vec<Rat>(2, Rat(0))), InputError);

  // ad is a Lie algebra homomorphism: [ad X, ad Y] = ad [X, Y]
  auto g2 = ChevalleyAlgebra::build('G', 2);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    Vec<Rat> x(g2.dim()), y(g2.dim());
    for (size_t i = 0; i < g2.dim(); ++i) {
      x[i] = Rat(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
      y[i] = Rat(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
    }
    Mat<Rat> ax = g2.adjoint(x), ay = g2.adjoint(y);
    CHECK(ax * ay - ay * ax == g2.adjoint(g2.bracket(x, y)));
  }
}
