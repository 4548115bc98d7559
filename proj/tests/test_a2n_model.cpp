// The outer involution of A_{2n} in the matrix model: pushing the abstract
// algebra into sl_{2n+1} by its defining representation, the pinned flip
// acts as X -> -X* for the symmetric inner product with the alternating
// antidiagonal Gram matrix. This pins down the 2A_{2n} grading of the
// examples: g_0 = so(V), g_1 the symmetric part, all in weight zero.

#include "thetaconn/grading.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace thetaconn;

namespace {

struct SlModel {
  std::shared_ptr<const ChevalleyAlgebra> alg;
  int n;                      // matrix size
  std::vector<Mat<Rat>> phi;  // image of each basis vector
};

Mat<Rat> unit(int n, int a, int b) {
  Mat<Rat> m(static_cast<size_t>(n), static_cast<size_t>(n));
  m(static_cast<size_t>(a), static_cast<size_t>(b)) = 1;
  return m;
}

Mat<Rat> comm(const Mat<Rat>& a, const Mat<Rat>& b) { return a * b - b * a; }

/// Defining representation of the abstract type-A algebra, built on the
/// Chevalley generators and extended through the extraspecial ladders.
SlModel defining_representation(int rank) {
  SlModel m;
  m.alg = std::make_shared<const ChevalleyAlgebra>(ChevalleyAlgebra::build('A', rank));
  m.n = rank + 1;
  const ChevalleyAlgebra& alg = *m.alg;
  const RootSystem& rs = alg.rs;
  m.phi.assign(alg.dim(), Mat<Rat>(static_cast<size_t>(m.n), static_cast<size_t>(m.n)));
  for (int i = 0; i < rank; ++i) {
    m.phi[static_cast<size_t>(i)] = unit(m.n, i, i) - unit(m.n, i + 1, i + 1);
    RootVec e(static_cast<size_t>(rank), 0);
    e[static_cast<size_t>(i)] = 1;
    int pos = rs.root_index(e);
    m.phi[static_cast<size_t>(alg.e_index(pos))] = unit(m.n, i, i + 1);
    m.phi[static_cast<size_t>(alg.e_index(rs.negative_of(pos)))] = unit(m.n, i + 1, i);
  }
  // positive roots by height through their extraspecial pair
  for (size_t k = 0; k < rs.num_positive; ++k) {
    const RootVec& gamma = rs.roots[k];
    if (root_height(gamma) == 1) continue;
    for (size_t a = 0; a < rs.num_positive; ++a) {
      RootVec beta = gamma;
      for (size_t i = 0; i < beta.size(); ++i) beta[i] -= rs.roots[a][i];
      int b = rs.root_index(beta);
      if (b < 0 || !rs.is_positive(b) || b <= static_cast<int>(a)) continue;
      long n_const = alg.n_constant(static_cast<int>(a), b);
      Mat<Rat> img = comm(m.phi[static_cast<size_t>(alg.e_index(static_cast<int>(a)))],
                          m.phi[static_cast<size_t>(alg.e_index(b))]);
      Mat<Rat> scaled = Rat(Int(1), Int(n_const)) * img;
      m.phi[static_cast<size_t>(alg.e_index(static_cast<int>(k)))] = scaled;
      // negative root vector: transpose the single entry, reciprocal sign
      Rat c(0);
      int ra = -1, rb = -1;
      for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
          if (!(scaled(static_cast<size_t>(i), static_cast<size_t>(j)) == Rat(0))) {
            c = scaled(static_cast<size_t>(i), static_cast<size_t>(j));
            ra = i;
            rb = j;
          }
      REQUIRE(ra >= 0);
      m.phi[static_cast<size_t>(alg.e_index(rs.negative_of(static_cast<int>(k))))] = (Rat(1) / c) * unit(m.n, rb, ra);
      break;
    }
  }
  return m;
}

Mat<Rat> apply_phi(const SlModel& m, const CycVec& v) {
  Mat<Rat> out(static_cast<size_t>(m.n), static_cast<size_t>(m.n));
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == Cyc(0)) continue;
    out = out + v[i].rational_part() * m.phi[i];
  }
  return out;
}

}  // namespace

TEST_CASE("defining representation is a Lie algebra homomorphism") {
  for (int rank : {2, 4}) {
    SlModel m = defining_representation(rank);
    const ChevalleyAlgebra& alg = *m.alg;
    for (size_t i = 0; i < alg.dim(); ++i)
      for (size_t j = 0; j < alg.dim(); ++j) {
        Vec<Rat> br = alg.bracket(alg.basis_vec<Rat>(static_cast<int>(i)), alg.basis_vec<Rat>(static_cast<int>(j)));
        Mat<Rat> rhs(static_cast<size_t>(m.n), static_cast<size_t>(m.n));
        for (size_t c = 0; c < alg.dim(); ++c)
          if (br[c] != 0) rhs = rhs + br[c] * m.phi[c];
        CHECK(comm(m.phi[i], m.phi[j]) == rhs);
      }
  }
}

TEST_CASE("the 2A_{2n} involution is minus the adjoint for the alternating form") {
  for (int n : {1, 2}) {
    int rank = 2 * n;
    SlModel m = defining_representation(rank);
    std::vector<int> perm(static_cast<size_t>(rank));
    for (int i = 0; i < rank; ++i) perm[static_cast<size_t>(i)] = rank - 1 - i;
    auto sigma = DiagramAutomorphism::pinned(m.alg, perm);
    std::vector<long> kac(static_cast<size_t>(n) + 1, 0);
    kac[0] = 1;
    auto g = GradedDecomposition::build(KacCoordinates::build(sigma, kac));

    // theta = exp(0) . sigma here
    CHECK(g.theta == sigma.matrix<Cyc>());

    int size = m.n;
    Mat<Rat> J(static_cast<size_t>(size), static_cast<size_t>(size));
    for (int i = 0; i < size; ++i)
      J(static_cast<size_t>(i), static_cast<size_t>(size - 1 - i)) = (i % 2 == 0) ? Rat(1) : Rat(-1);
    CHECK(J == J.transpose());  // genuinely an inner product (odd size)
    Mat<Rat> Jinv = J.inverse();

    for (size_t b = 0; b < m.alg->dim(); ++b) {
      CycVec eb(m.alg->dim(), Cyc(0));
      eb[b] = Cyc(1);
      Mat<Rat> lhs = apply_phi(m, g.theta.apply(eb));
      Mat<Rat> rhs = -(J * m.phi[b].transpose() * Jinv);
      CHECK(lhs == rhs);
    }

    // involution with the expected fixed subalgebra dimensions
    CHECK(g.m == 2);
    CHECK(g.g_i[0].dim() == static_cast<size_t>(n * (2 * n + 1)));            // so(V)
    CHECK(g.g1().dim() == static_cast<size_t>((2 * n + 1) * (2 * n + 1) - 1) - g.g_i[0].dim());
  }
}
