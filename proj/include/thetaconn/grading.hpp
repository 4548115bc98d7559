#pragma once

// The torsion automorphism theta = exp(x) . sigma, the Z/m-grading
// g = (+) g_i, its refinement g_i(k) by lambda_check-weights, and the
// regularity / stability tests for vectors in g_1.
//
// Scalars live in Q(zeta_m) for the whole session (e divides m, so this is
// the lcm field); for m <= 2 the field degree is 1 and everything is
// effectively rational.

#include "thetaconn/kac.hpp"

#include <random>

namespace thetaconn {

using CycVec = Vec<Cyc>;

/// Minimal polynomial of a square matrix via Krylov iteration; used for the
/// exact semisimplicity test (squarefree minimal polynomial).
inline std::vector<Cyc> minimal_polynomial(const Mat<Cyc>& m) {
  size_t n = m.rows();
  using Poly = std::vector<Cyc>;
  auto poly_deg = [](const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
      if (!(p[static_cast<size_t>(i)] == Cyc(0))) return i;
    return -1;
  };
  auto poly_rem = [&](Poly a, const Poly& b) {
    int db = poly_deg(b);
    for (int da = poly_deg(a); da >= db && da >= 0; da = poly_deg(a)) {
      Cyc f = a[static_cast<size_t>(da)] / b[static_cast<size_t>(db)];
      for (int i = 0; i <= db; ++i) a[static_cast<size_t>(da - db + i)] -= f * b[static_cast<size_t>(i)];
    }
    return a;
  };
  auto poly_lcm = [&](const Poly& a, const Poly& b) {
    // lcm = a*b/gcd, all monic-normalized at the end
    Poly g = a, h = b;
    while (poly_deg(h) >= 0) {
      Poly r = poly_rem(g, h);
      g = h;
      h = r;
    }
    // g = gcd (up to scalar); divide a*b by g
    Poly prod(static_cast<size_t>(poly_deg(a) + poly_deg(b) + 1), Cyc(0));
    for (int i = 0; i <= poly_deg(a); ++i)
      for (int j = 0; j <= poly_deg(b); ++j) prod[static_cast<size_t>(i + j)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
    // long division, exact
    Poly q(static_cast<size_t>(poly_deg(prod) - poly_deg(g) + 1), Cyc(0));
    int dg = poly_deg(g);
    for (int d = poly_deg(prod); d >= dg; d = poly_deg(prod)) {
      Cyc f = prod[static_cast<size_t>(d)] / g[static_cast<size_t>(dg)];
      q[static_cast<size_t>(d - dg)] = f;
      for (int i = 0; i <= dg; ++i) prod[static_cast<size_t>(d - dg + i)] -= f * g[static_cast<size_t>(i)];
    }
    // monic normalize
    int dq = poly_deg(q);
    Cyc lead = q[static_cast<size_t>(dq)];
    for (Cyc& c : q) c /= lead;
    q.resize(static_cast<size_t>(dq + 1));
    return q;
  };

  Poly mu{Cyc(1)};
  for (size_t start = 0; start < n; ++start) {
    if (poly_deg(mu) == static_cast<int>(n)) break;
    // Krylov chain from e_start, with incremental echelon reduction.
    std::vector<CycVec> chain;  // independent raw vectors
    std::vector<CycVec> ech;    // echelonized copies
    std::vector<size_t> pivots;
    CycVec cur(n, Cyc(0));
    cur[start] = Cyc(1);
    for (;;) {
      CycVec rem = cur;
      for (size_t r = 0; r < ech.size(); ++r) {
        Cyc c = rem[pivots[r]];
        if (c == Cyc(0)) continue;
        for (size_t j = 0; j < n; ++j) rem[j] -= c * ech[r][j];
      }
      size_t p = n;
      for (size_t j = 0; j < n; ++j)
        if (!(rem[j] == Cyc(0))) {
          p = j;
          break;
        }
      if (p == n) break;  // cur depends on the chain so far
      Cyc inv = Cyc(1) / rem[p];
      for (size_t j = 0; j < n; ++j) rem[j] *= inv;
      ech.push_back(std::move(rem));
      pivots.push_back(p);
      chain.push_back(cur);
      cur = m.apply(cur);
    }
    // cur = M^d e_start depends on the chain: solve for the coefficients.
    size_t d = chain.size();
    if (d == 0) continue;
    Mat<Cyc> a(n, d + 1);
    for (size_t j = 0; j < d; ++j)
      for (size_t i = 0; i < n; ++i) a(i, j) = chain[j][i];
    for (size_t i = 0; i < n; ++i) a(i, d) = cur[i];
    auto piv = a.rref();
    Poly local(d + 1, Cyc(0));
    local[d] = Cyc(1);
    for (size_t r = 0; r < piv.size(); ++r)
      if (piv[r] < d) local[piv[r]] = -a(r, d);
    mu = poly_lcm(mu, local);
  }
  return mu;
}

inline bool squarefree(const std::vector<Cyc>& p) {
  auto deg = [](const std::vector<Cyc>& q) {
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i)
      if (!(q[static_cast<size_t>(i)] == Cyc(0))) return i;
    return -1;
  };
  std::vector<Cyc> dp(p.size() > 1 ? p.size() - 1 : 1, Cyc(0));
  for (size_t i = 1; i < p.size(); ++i) dp[i - 1] = Cyc(static_cast<int>(i)) * p[i];
  std::vector<Cyc> g = p, h = dp;
  while (deg(h) >= 0) {
    // remainder g mod h
    std::vector<Cyc> r = g;
    int dh = deg(h);
    for (int d = deg(r); d >= dh && d >= 0; d = deg(r)) {
      Cyc f = r[static_cast<size_t>(d)] / h[static_cast<size_t>(dh)];
      for (int i = 0; i <= dh; ++i) r[static_cast<size_t>(d - dh + i)] -= f * h[static_cast<size_t>(i)];
    }
    g = h;
    h = r;
  }
  return deg(g) == 0;
}

enum class Predicate { Any, RegularSemisimple, Stable };

inline std::string predicate_name(Predicate p) {
  switch (p) {
    case Predicate::Any: return "any";
    case Predicate::RegularSemisimple: return "regular-semisimple";
    case Predicate::Stable: return "stable";
  }
  return "?";
}

inline Predicate predicate_from_name(const std::string& s) {
  if (s == "any") return Predicate::Any;
  if (s == "regular-semisimple" || s == "rss") return Predicate::RegularSemisimple;
  if (s == "stable") return Predicate::Stable;
  throw InputError("unknown sampling predicate: " + s);
}

class GradedDecomposition {
 public:
  std::shared_ptr<const ChevalleyAlgebra> alg;
  KacCoordinates kc;
  long m = 1;
  int e = 1;
  long s0 = 0;
  int conductor = 1;  // = m (e divides m)

  Mat<Cyc> theta;

  std::map<long, Subspace<Cyc>> g_k;                        // g(k), nonzero pieces
  std::map<std::pair<long, long>, Subspace<Cyc>> g_i_k;     // g_i(k), nonzero pieces
  std::vector<Subspace<Cyc>> g_i;                           // i = 0..m-1
  std::map<long, Subspace<Cyc>> g_k_sigma;                  // g(k)^sigma
  std::vector<Subspace<Cyc>> sigma_slice;                   // ker(sigma - zeta_e^r)
  Subspace<Cyc> g_sigma;                                    // = sigma_slice[0]

  std::vector<CycVec> g1_basis;  // ordered basis of g_1: k ascending, then rows
  std::vector<long> g1_basis_k;

  static GradedDecomposition build(KacCoordinates kc_in);

  size_t dim() const { return alg->dim(); }
  long g1_index() const { return ((1 % m) + m) % m; }
  const Subspace<Cyc>& g1() const { return g_i[static_cast<size_t>(g1_index())]; }

  Cyc zeta_m(long power) const { return Cyc::zeta(static_cast<int>(conductor), power * (conductor / m)); }
  Cyc zeta_e(long power) const { return Cyc::zeta(static_cast<int>(conductor), power * (conductor / e)); }

  /// sigma-eigenvalue slice for loop-coefficient degree n: sigma(v) = zeta_e^n v.
  const Subspace<Cyc>& slice(long n) const {
    return sigma_slice[static_cast<size_t>(((n % e) + e) % e)];
  }

  bool in_g1(const CycVec& v) const { return g1().contains(v); }

  /// Weight components X = sum_k X_k with X_k in g_1(k). Rejects X not in g_1.
  std::map<long, CycVec> decompose_g1(const CycVec& x) const {
    if (!in_g1(x)) throw InputError("vector is not in g_1");
    std::map<long, CycVec> out;
    for (const auto& [ik, piece] : g_i_k) {
      if (ik.first != g1_index()) continue;
      long k = ik.second;
      // g(k) is spanned by coordinate axes; project by masking.
      CycVec xk(dim(), Cyc(0));
      const Subspace<Cyc>& gk = g_k.at(k);
      for (size_t r = 0; r < gk.dim(); ++r) {
        // pivot axes of g(k) are exactly its support coordinates
        for (size_t c = 0; c < dim(); ++c)
          if (!(gk.basis()(r, c) == Cyc(0))) xk[c] = x[c];
      }
      if (!vec_is_zero(xk)) out[k] = std::move(xk);
    }
    // Verify the decomposition reassembles and lands in the right pieces.
    CycVec sum(dim(), Cyc(0));
    for (auto& [k, xk] : out) {
      if (!g_i_k.at({g1_index(), k}).contains(xk)) throw InternalError("g_1 component fell outside g_1(k)");
      sum = vec_add(sum, xk);
    }
    if (!(sum == x)) throw InternalError("g_1 weight decomposition did not reassemble");
    return out;
  }

  bool is_regular_semisimple(const CycVec& x) const {
    Mat<Cyc> ad = alg->adjoint(x);
    if (ad.kernel().rows() != static_cast<size_t>(alg->rs.rank)) return false;
    return (ad * ad).kernel().rows() == static_cast<size_t>(alg->rs.rank);
  }

  bool is_semisimple(const CycVec& x) const {
    if (vec_is_zero(x)) return true;
    return squarefree(minimal_polynomial(alg->adjoint(x)));
  }

  /// Stable vectors: regular semisimple with trivial centralizer in g_0.
  bool is_stable(const CycVec& x) const {
    if (!in_g1(x)) throw InputError("stability test requires a vector in g_1");
    if (!is_regular_semisimple(x)) return false;
    Mat<Cyc> k = alg->adjoint(x).kernel();
    std::vector<CycVec> rows;
    for (size_t r = 0; r < k.rows(); ++r) rows.push_back(k.row(r));
    Subspace<Cyc> ker = Subspace<Cyc>::from_rows(dim(), rows);
    return ker.intersect(g_i[0]).dim() == 0;
  }

  bool satisfies(Predicate p, const CycVec& x) const {
    switch (p) {
      case Predicate::Any: return !vec_is_zero(x);
      case Predicate::RegularSemisimple: return is_regular_semisimple(x);
      case Predicate::Stable: return is_stable(x);
    }
    return false;
  }

  /// Deterministic rejection sampler: integer coordinates in [-9, 9] on the
  /// canonical g_1 basis, budget 1000 draws.
  CycVec sample_vector(Predicate p, std::uint64_t seed, std::vector<long>* coords_out = nullptr) const {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
      std::vector<long> coords(g1_basis.size());
      CycVec x(dim(), Cyc(0));
      for (size_t b = 0; b < g1_basis.size(); ++b) {
        coords[b] = static_cast<long>(rng() % 19) - 9;
        if (coords[b] == 0) continue;
        x = vec_add(x, vec_scale(g1_basis[b], Cyc(static_cast<int>(coords[b]), conductor)));
      }
      if (satisfies(p, x)) {
        if (coords_out) *coords_out = coords;
        return x;
      }
    }
    throw SamplingError("sampling budget exhausted for predicate '" + predicate_name(p) +
                        "'; the predicate may be unsatisfiable on this grading");
  }
};

inline GradedDecomposition GradedDecomposition::build(KacCoordinates kc_in) {
  GradedDecomposition g;
  g.alg = kc_in.alg;
  g.kc = std::move(kc_in);
  g.m = g.kc.m;
  g.e = g.kc.aff.order;
  g.s0 = g.kc.s[0];
  g.conductor = static_cast<int>(g.m);
  const ChevalleyAlgebra& alg = *g.alg;
  size_t dim = alg.dim();
  int l = alg.rs.rank;

  // theta = exp(x) . sigma: scales the alpha root space by zeta_m^{<lambda,alpha>}.
  g.theta = Mat<Cyc>(dim, dim);
  const DiagramAutomorphism& sig = g.kc.sigma;
  for (int i = 0; i < l; ++i) g.theta(static_cast<size_t>(sig.image_index(i)), static_cast<size_t>(i)) = Cyc(1, g.conductor);
  for (size_t k = 0; k < alg.rs.size(); ++k) {
    int b = alg.e_index(static_cast<int>(k));
    long w = g.kc.root_pairing(alg.rs.roots[k]);
    g.theta(static_cast<size_t>(sig.image_index(b)), static_cast<size_t>(b)) =
        Cyc(sig.image_sign(b), g.conductor) * g.zeta_m(w);
  }

  // g(k): root spaces by lambda_check-weight, plus t at k = 0.
  std::map<long, std::vector<CycVec>> k_rows;
  for (int i = 0; i < l; ++i) k_rows[0].push_back(alg.basis_vec<Cyc>(i));
  for (size_t k = 0; k < alg.rs.size(); ++k)
    k_rows[g.kc.root_pairing(alg.rs.roots[k])].push_back(alg.basis_vec<Cyc>(alg.e_index(static_cast<int>(k))));
  for (auto& [k, rows] : k_rows) g.g_k.emplace(k, Subspace<Cyc>::from_rows(dim, rows));

  // sigma restricted to g(k) and its eigenspaces.
  g.g_i.assign(static_cast<size_t>(g.m), Subspace<Cyc>(dim));
  std::vector<std::vector<CycVec>> g_i_rows(static_cast<size_t>(g.m));
  std::vector<std::vector<CycVec>> slice_rows(static_cast<size_t>(g.e));
  long bound = g.m - static_cast<long>(g.e) * g.s0;
  for (const auto& [k, gk] : g.g_k) {
    size_t d = gk.dim();
    // matrix of sigma on the basis of g(k)
    Mat<Cyc> s_mat(d, d);
    for (size_t c = 0; c < d; ++c) {
      CycVec img = sig.apply(gk.basis_vector(c));
      auto coords = gk.coords_of(img);
      if (!coords) throw InternalError("sigma does not preserve g(k)");
      for (size_t r = 0; r < d; ++r) s_mat(r, c) = (*coords)[r];
    }
    for (int r = 0; r < g.e; ++r) {
      Mat<Cyc> shifted = s_mat;
      Cyc ev = g.zeta_e(r);
      for (size_t i = 0; i < d; ++i) shifted(i, i) -= ev;
      Mat<Cyc> ker = shifted.kernel();
      if (ker.rows() == 0) continue;
      std::vector<CycVec> rows;
      for (size_t kr = 0; kr < ker.rows(); ++kr) rows.push_back(gk.from_coords(ker.row(kr)));
      Subspace<Cyc> piece = Subspace<Cyc>::from_rows(dim, rows);
      for (size_t br = 0; br < piece.dim(); ++br) slice_rows[static_cast<size_t>(r)].push_back(piece.basis_vector(br));
      if (r == 0) g.g_k_sigma.emplace(k, piece);
      // theta-eigenvalue on this eigenspace is zeta_m^k * zeta_e^r
      long i_theta = ((k + r * (g.m / g.e)) % g.m + g.m) % g.m;
      if ((((i_theta - k) % (g.m / g.e)) + (g.m / g.e)) % (g.m / g.e) != 0)
        throw InternalError("bidegree congruence violated");
      if (k < -bound || k > bound) throw InternalError("bidegree bound violated");
      g.g_i_k.emplace(std::make_pair(i_theta, k), piece);
      for (size_t br = 0; br < piece.dim(); ++br) g_i_rows[static_cast<size_t>(i_theta)].push_back(piece.basis_vector(br));
    }
    if (g.g_k_sigma.find(k) == g.g_k_sigma.end()) g.g_k_sigma.emplace(k, Subspace<Cyc>(dim));
  }
  size_t total = 0;
  for (long i = 0; i < g.m; ++i) {
    g.g_i[static_cast<size_t>(i)] = Subspace<Cyc>::from_rows(dim, g_i_rows[static_cast<size_t>(i)]);
    total += g.g_i[static_cast<size_t>(i)].dim();
  }
  if (total != dim) throw InternalError("graded pieces do not sum to dim g");
  g.sigma_slice.resize(static_cast<size_t>(g.e), Subspace<Cyc>(dim));
  for (int r = 0; r < g.e; ++r) g.sigma_slice[static_cast<size_t>(r)] = Subspace<Cyc>::from_rows(dim, slice_rows[static_cast<size_t>(r)]);
  g.g_sigma = g.sigma_slice[0];

  // Lemma: when s_0 != 0 the degree-zero part is exactly g(0)^sigma.
  if (g.s0 != 0 && !(g.g_i[0] == g.g_k_sigma.at(0)))
    throw InternalError("s_0 != 0 but g_0 != g(0)^sigma");

  // Canonical ordered basis of g_1.
  for (const auto& [ik, piece] : g.g_i_k) {
    if (ik.first != g.g1_index()) continue;
    for (size_t r = 0; r < piece.dim(); ++r) {
      g.g1_basis.push_back(piece.basis_vector(r));
      g.g1_basis_k.push_back(ik.second);
    }
  }
  return g;
}

}  // namespace thetaconn
