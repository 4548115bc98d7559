#pragma once

// Restricted root data of (R, sigma): the simple restricted roots beta_i on
// t^sigma, the root eta with its coefficients b_i, the twisted Coxeter number
// h_sigma = e * sum_{i>=0} b_i (b_0 = 1), and the affine function
// beta_0 = 1/e - eta.

#include "thetaconn/automorphism.hpp"

namespace thetaconn {

class TwistedAffineData {
 public:
  std::shared_ptr<const ChevalleyAlgebra> alg;
  int order = 1;                          // e
  std::vector<std::vector<int>> orbits;   // sigma-orbits on Dynkin nodes, by least element
  int l_sigma = 0;
  Mat<Rat> beta_on_u;                     // beta_i evaluated on the orbit-sum basis of t^sigma
  std::vector<std::vector<int>> restricted_roots;  // distinct restrictions, coords in Delta^sigma
  std::vector<int> eta;                   // coords of eta in Delta^sigma
  std::vector<int> b;                     // b_1..b_{l_sigma}
  long twisted_coxeter = 0;               // h_sigma
  bool type_2a2n = false;

  static TwistedAffineData build(const DiagramAutomorphism& sigma);

  /// Coordinates of a root's restriction to t^sigma in the Delta^sigma basis.
  std::vector<int> restrict_root(const RootVec& root) const {
    std::vector<int> c(static_cast<size_t>(l_sigma), 0);
    for (int o = 0; o < l_sigma; ++o)
      for (int j : orbits[static_cast<size_t>(o)]) c[static_cast<size_t>(o)] += root[static_cast<size_t>(j)];
    return c;
  }
};

inline TwistedAffineData TwistedAffineData::build(const DiagramAutomorphism& sigma) {
  TwistedAffineData t;
  t.alg = sigma.alg;
  t.order = sigma.order;
  const ChevalleyAlgebra& alg = *t.alg;
  const RootSystem& rs = alg.rs;
  int l = rs.rank;

  std::vector<bool> seen(static_cast<size_t>(l), false);
  for (int i = 0; i < l; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    std::vector<int> orb;
    int j = i;
    do {
      orb.push_back(j);
      seen[static_cast<size_t>(j)] = true;
      j = sigma.node_perm[static_cast<size_t>(j)];
    } while (j != i);
    t.orbits.push_back(std::move(orb));
  }
  t.l_sigma = static_cast<int>(t.orbits.size());

  // beta_i(u_O) where u_O = sum of coroots in the orbit O.
  t.beta_on_u = Mat<Rat>(static_cast<size_t>(t.l_sigma), static_cast<size_t>(t.l_sigma));
  for (int i = 0; i < t.l_sigma; ++i) {
    RootVec alpha(static_cast<size_t>(l), 0);
    alpha[static_cast<size_t>(t.orbits[static_cast<size_t>(i)][0])] = 1;
    for (int o = 0; o < t.l_sigma; ++o) {
      long v = 0;
      for (int j : t.orbits[static_cast<size_t>(o)]) v += rs.pairing_with_simple_coroot(alpha, j);
      t.beta_on_u(static_cast<size_t>(i), static_cast<size_t>(o)) = Rat(v);
    }
  }

  std::set<std::vector<int>> restricted;
  for (const RootVec& r : rs.roots) restricted.insert(t.restrict_root(r));
  t.restricted_roots.assign(restricted.begin(), restricted.end());

  t.type_2a2n = (rs.series == 'A' && rs.rank % 2 == 0 && t.order == 2);

  // eta: highest root for sigma = id; otherwise the highest short restricted
  // root, doubled in type 2A_{2n}.
  std::vector<int> eta;
  if (t.order == 1) {
    eta = rs.marks;
  } else {
    // Gram matrix of the restricted simple roots under the form dual to the
    // Killing form on t^sigma; only length ratios matter.
    Mat<Rat> gram_u(static_cast<size_t>(t.l_sigma), static_cast<size_t>(t.l_sigma));
    for (int a = 0; a < t.l_sigma; ++a)
      for (int c = 0; c < t.l_sigma; ++c) {
        Rat v(0);
        for (int i : t.orbits[static_cast<size_t>(a)])
          for (int j : t.orbits[static_cast<size_t>(c)]) v += alg.killing()(static_cast<size_t>(i), static_cast<size_t>(j));
        gram_u(static_cast<size_t>(a), static_cast<size_t>(c)) = v;
      }
    Mat<Rat> gram_beta = t.beta_on_u * gram_u.inverse() * t.beta_on_u.transpose();
    auto norm2 = [&](const std::vector<int>& c) {
      Rat v(0);
      for (int a = 0; a < t.l_sigma; ++a)
        for (int d = 0; d < t.l_sigma; ++d)
          v += Rat(c[static_cast<size_t>(a)]) * Rat(c[static_cast<size_t>(d)]) * gram_beta(static_cast<size_t>(a), static_cast<size_t>(d));
      return v;
    };
    std::optional<Rat> min_norm;
    for (const auto& r : t.restricted_roots) {
      Rat n = norm2(r);
      if (n == 0) continue;
      if (!min_norm || n < *min_norm) min_norm = n;
    }
    std::vector<int> best;
    int best_height = 0;
    for (const auto& r : t.restricted_roots) {
      if (norm2(r) != *min_norm) continue;
      int h = 0;
      for (int x : r) h += x;
      if (h > best_height) {
        best_height = h;
        best = r;
      }
    }
    eta = best;
    if (t.type_2a2n)
      for (int& x : eta) x *= 2;
  }
  t.eta = eta;
  t.b = eta;
  long sum = 1;  // b_0 = 1
  for (int x : t.b) {
    if (x <= 0) throw InternalError("eta has a non-positive coefficient");
    sum += x;
  }
  t.twisted_coxeter = t.order * sum;
  return t;
}

}  // namespace thetaconn
