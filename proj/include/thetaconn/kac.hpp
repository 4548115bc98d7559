#pragma once

// Normalized Kac coordinates (s_0,...,s_{l_sigma}) of a torsion automorphism
// theta = exp(x) . sigma: the order m = e * sum b_i s_i, the alcove point x
// with beta_i(x) = s_i / m, and the cocharacter lambda_check = m*x.
//
// Coordinates are taken as given and verified, never renormalized; the
// beta_0 equation is checked, not solved.

#include "thetaconn/twisted_affine.hpp"

namespace thetaconn {

class KacCoordinates {
 public:
  std::shared_ptr<const ChevalleyAlgebra> alg;
  DiagramAutomorphism sigma;
  TwistedAffineData aff;
  std::vector<long> s;            // s_0 .. s_{l_sigma}
  long m = 0;                     // order of theta
  std::vector<Rat> x;             // coordinates in the simple-coroot basis
  std::vector<Rat> lambda_check;  // m * x

  static KacCoordinates build(DiagramAutomorphism sigma_in, const std::vector<long>& s_in) {
    KacCoordinates kc;
    kc.alg = sigma_in.alg;
    kc.aff = TwistedAffineData::build(sigma_in);
    kc.sigma = std::move(sigma_in);
    kc.s = s_in;
    const TwistedAffineData& aff = kc.aff;
    if (static_cast<int>(kc.s.size()) != aff.l_sigma + 1)
      throw InputError("expected " + std::to_string(aff.l_sigma + 1) + " Kac coordinates, got " +
                       std::to_string(kc.s.size()));
    bool all_zero = true;
    for (long v : kc.s) {
      if (v < 0) throw InputError("Kac coordinates must be nonnegative");
      if (v != 0) all_zero = false;
    }
    if (all_zero) throw InputError("Kac coordinates must not be all zero");

    long sum = kc.s[0];
    for (int i = 1; i <= aff.l_sigma; ++i) sum += aff.b[static_cast<size_t>(i - 1)] * kc.s[static_cast<size_t>(i)];
    kc.m = aff.order * sum;

    // Solve beta_i(x) = s_i/m on t^sigma in the orbit-sum basis.
    int ls = aff.l_sigma;
    Mat<Rat> a(static_cast<size_t>(ls), static_cast<size_t>(ls + 1));
    for (int i = 0; i < ls; ++i) {
      for (int o = 0; o < ls; ++o) a(static_cast<size_t>(i), static_cast<size_t>(o)) = aff.beta_on_u(static_cast<size_t>(i), static_cast<size_t>(o));
      a(static_cast<size_t>(i), static_cast<size_t>(ls)) = Rat(kc.s[static_cast<size_t>(i + 1)], kc.m);
    }
    auto piv = a.rref();
    if (piv.size() != static_cast<size_t>(ls)) throw InternalError("restricted simple roots are degenerate");
    std::vector<Rat> y(static_cast<size_t>(ls));
    for (int i = 0; i < ls; ++i) y[static_cast<size_t>(i)] = a(static_cast<size_t>(i), static_cast<size_t>(ls));

    int l = kc.alg->rs.rank;
    kc.x.assign(static_cast<size_t>(l), Rat(0));
    for (int o = 0; o < ls; ++o)
      for (int j : aff.orbits[static_cast<size_t>(o)]) kc.x[static_cast<size_t>(j)] = y[static_cast<size_t>(o)];
    kc.lambda_check.resize(static_cast<size_t>(l));
    for (int j = 0; j < l; ++j) kc.lambda_check[static_cast<size_t>(j)] = Rat(kc.m) * kc.x[static_cast<size_t>(j)];

    // beta_0(x) = 1/e - eta(x) must equal s_0/m.
    Rat eta_x(0);
    for (int i = 0; i < ls; ++i) eta_x += Rat(aff.b[static_cast<size_t>(i)]) * kc.beta_value(i + 1);
    Rat beta0 = Rat(1, aff.order) - eta_x;
    if (beta0 != Rat(kc.s[0], kc.m)) throw InternalError("beta_0 consistency equation failed");

    // lambda_check must pair integrally with every simple root.
    for (int i = 0; i < l; ++i)
      if (!is_integer(kc.root_pairing_rat(unit_root(l, i))))
        throw InputError("Kac coordinates are not representable: m*x is not a cocharacter");
    return kc;
  }

  /// alpha(lambda_check) as an exact integer.
  long root_pairing(const RootVec& alpha) const {
    Rat v = root_pairing_rat(alpha);
    if (!is_integer(v)) throw InternalError("non-integral root pairing with lambda_check");
    return static_cast<long>(numerator(v));
  }

  Rat root_pairing_rat(const RootVec& alpha) const {
    Rat v(0);
    for (int j = 0; j < alg->rs.rank; ++j)
      v += lambda_check[static_cast<size_t>(j)] * Rat(alg->rs.pairing_with_simple_coroot(alpha, j));
    return v;
  }

  /// beta_i(x) for i in 1..l_sigma, from the solved alcove point.
  Rat beta_value(int i) const {
    Rat v(0);
    const auto& orb0 = aff.orbits[static_cast<size_t>(i - 1)];
    RootVec alpha(static_cast<size_t>(alg->rs.rank), 0);
    alpha[static_cast<size_t>(orb0[0])] = 1;
    for (int j = 0; j < alg->rs.rank; ++j)
      v += x[static_cast<size_t>(j)] * Rat(alg->rs.pairing_with_simple_coroot(alpha, j));
    return v;
  }

 private:
  static RootVec unit_root(int l, int i) {
    RootVec r(static_cast<size_t>(l), 0);
    r[static_cast<size_t>(i)] = 1;
    return r;
  }
};

}  // namespace thetaconn
