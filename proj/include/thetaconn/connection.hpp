#pragma once

// Theta-connections nabla^X = d + p_1 dt/t and their invariants: residue and
// its orbit evidence, slope e/m and irregularity at infinity, horizontal
// sections at both punctures through truncated exact solvers, the h^1
// formula #R/m - dim g^{sigma,X_1}, and the rigidity verdict.
//
// The solvers work degree by degree on the recursion
//   n v_n + sum_{j>=0} [P_j, v_{n-j}] = 0,
// keeping the solution space as an exact parametric family. Windows are
// finite; any kernel element whose support touches the lowest window degrees
// is classified inconclusive, because the downward recursion is not closed
// at the cut.

#include "thetaconn/loop.hpp"

namespace thetaconn {

class ThetaConnection {
 public:
  std::shared_ptr<const GradedDecomposition> gr;
  CycVec x;
  std::map<long, CycVec> weight_parts;  // k -> X_k in g_1(k)
  std::map<long, CycVec> terms;         // j -> P_j; one-form is (sum_j P_j t^j) dt/t
  long max_exponent = 0;

  static ThetaConnection build(std::shared_ptr<const GradedDecomposition> grading, const CycVec& x) {
    if (vec_is_zero(x)) throw InputError("theta-connection requires a nonzero vector");
    ThetaConnection c;
    c.gr = std::move(grading);
    c.x = x;
    c.weight_parts = c.gr->decompose_g1(x);  // rejects X outside g_1
    const GradedDecomposition& g = *c.gr;
    for (const auto& [k, xk] : c.weight_parts) {
      long num = static_cast<long>(g.e) * (1 - k);
      if (num % g.m != 0) throw InternalError("connection exponent is not an integer");
      long j = num / g.m;
      if (j < 0) throw InternalError("connection exponent is negative");
      c.terms.emplace(j, xk);
      c.max_exponent = std::max(c.max_exponent, j);
      // sigma-equivariance of the one-form: sigma(P_j) = zeta_e^j P_j.
      if (!(g.kc.sigma.apply(xk) == vec_scale(xk, g.zeta_e(j))))
        throw InternalError("one-form is not sigma-equivariant");
    }
    return c;
  }

  /// Residue at 0: the coefficient of dt/t, i.e. the k = 1 weight part.
  CycVec residue() const {
    auto it = weight_parts.find(1);
    if (it != weight_parts.end()) return it->second;
    return CycVec(gr->dim(), Cyc(0));
  }

  size_t adjoint_dimension() const { return gr->dim(); }

  /// A_j = ad(X_k) for j = e(1-k)/m; zero when no term sits at exponent j.
  Mat<Cyc> coefficient_matrix(long j) const {
    auto it = terms.find(j);
    if (it == terms.end()) return Mat<Cyc>(gr->dim(), gr->dim());
    return gr->alg->adjoint(it->second);
  }
};

/// Kernel-chain nilpotency certificate: ker(ad Y)^s must climb to all of g.
inline bool is_ad_nilpotent(const ChevalleyAlgebra& alg, const CycVec& y) {
  Mat<Cyc> ad = alg.adjoint(y);
  Mat<Cyc> pw = ad;
  size_t prev = 0;
  for (size_t step = 0; step <= alg.dim(); ++step) {
    size_t k = pw.kernel().rows();
    if (k == alg.dim()) return true;
    if (k == prev) return false;  // chain stabilized below the full space
    prev = k;
    pw = pw * ad;
  }
  return false;
}

struct OrbitPrediction {
  std::vector<long> weighted_labels;      // 2 s_1, ..., 2 s_{l_sigma}
  size_t expected_centralizer_dim = 0;    // dim g(0)^sigma
  bool distinguished = false;             // dim g(0)^sigma == dim g(1)^sigma
  bool stable_verified = false;           // a stable vector was actually found
};

struct OrbitChecks {
  size_t dim_centralizer_sigma_x1 = 0;  // dim g^{sigma, X_1}
  size_t dim_g0_sigma = 0;              // dim g(0)^sigma
  size_t dim_bracket_g0_x1 = 0;         // dim [g_0, X_1]
  size_t dim_g1_sigma = 0;              // dim g(1)^sigma
  bool centralizer_match = false;       // first two agree
  bool orbit_dim_match = false;         // last two agree
};

inline Subspace<Cyc> centralizer_in_g_sigma(const GradedDecomposition& g, const CycVec& y) {
  Mat<Cyc> ker = g.alg->adjoint(y).kernel();
  std::vector<CycVec> rows;
  for (size_t r = 0; r < ker.rows(); ++r) rows.push_back(ker.row(r));
  return Subspace<Cyc>::from_rows(g.dim(), rows).intersect(g.g_sigma);
}

/// The k = 1 weight component of X in g_1; the residue of nabla^X.
inline CycVec residue_part(const GradedDecomposition& g, const CycVec& x) {
  auto parts = g.decompose_g1(x);
  auto it = parts.find(1);
  if (it != parts.end()) return it->second;
  return CycVec(g.dim(), Cyc(0));
}

inline OrbitPrediction predicted_residue_orbit(const GradedDecomposition& g, std::uint64_t probe_seed = 1) {
  OrbitPrediction p;
  for (size_t i = 1; i < g.kc.s.size(); ++i) p.weighted_labels.push_back(2 * g.kc.s[i]);
  auto g0s = g.g_k_sigma.find(0);
  auto g1s = g.g_k_sigma.find(1);
  p.expected_centralizer_dim = g0s == g.g_k_sigma.end() ? 0 : g0s->second.dim();
  size_t d1 = g1s == g.g_k_sigma.end() ? 0 : g1s->second.dim();
  p.distinguished = (p.expected_centralizer_dim == d1);
  try {
    g.sample_vector(Predicate::Stable, probe_seed);
    p.stable_verified = true;
  } catch (const SamplingError&) {
    p.stable_verified = false;
  }
  return p;
}

inline OrbitChecks verify_residue_orbit_of(const GradedDecomposition& g, const CycVec& x1) {
  OrbitChecks oc;
  oc.dim_centralizer_sigma_x1 = centralizer_in_g_sigma(g, x1).dim();
  auto g0s = g.g_k_sigma.find(0);
  auto g1s = g.g_k_sigma.find(1);
  oc.dim_g0_sigma = g0s == g.g_k_sigma.end() ? 0 : g0s->second.dim();
  oc.dim_g1_sigma = g1s == g.g_k_sigma.end() ? 0 : g1s->second.dim();
  // image of g_0 under v -> [v, X_1]
  std::vector<CycVec> rows;
  for (size_t r = 0; r < g.g_i[0].dim(); ++r) rows.push_back(g.alg->bracket(g.g_i[0].basis_vector(r), x1));
  oc.dim_bracket_g0_x1 = Subspace<Cyc>::from_rows(g.dim(), rows).dim();
  oc.centralizer_match = (oc.dim_centralizer_sigma_x1 == oc.dim_g0_sigma);
  oc.orbit_dim_match = (oc.dim_bracket_g0_x1 == oc.dim_g1_sigma);
  return oc;
}

inline OrbitChecks verify_residue_orbit(const GradedDecomposition& g, const CycVec& x) {
  return verify_residue_orbit_of(g, residue_part(g, x));
}

/// Gauge normal form at infinity after t = a^{-m/e} and the lambda_check
/// gauge: d - (m/e) X da/a^2 + lambda_check da/a.
struct GaugeNormalForm {
  CycVec leading;            // coefficient at da/a^2
  CycVec residual;           // coefficient at da/a (lies in t)
};

inline GaugeNormalForm gauge_at_infinity(const GradedDecomposition& g, const ThetaConnection& conn) {
  GaugeNormalForm nf;
  nf.leading = vec_scale(conn.x, Cyc(Rat(-g.m, g.e), g.conductor));
  nf.residual.assign(g.dim(), Cyc(0));
  for (int i = 0; i < g.alg->rs.rank; ++i)
    nf.residual[static_cast<size_t>(i)] = Cyc(g.kc.lambda_check[static_cast<size_t>(i)], g.conductor);
  return nf;
}

inline std::optional<Rat> slope_at_infinity(const GradedDecomposition& g, const CycVec& x) {
  if (vec_is_zero(x)) throw InputError("slope requires a nonzero vector");
  if (!g.is_semisimple(x)) return std::nullopt;  // inapplicable marker
  return Rat(Int(g.e), Int(g.m));
}

inline std::optional<Rat> irregularity_adjoint(const GradedDecomposition& g, const CycVec& x) {
  if (!g.is_semisimple(x)) return std::nullopt;
  size_t centralizer = g.alg->adjoint(x).kernel().rows();
  return Rat(Int(g.dim() - centralizer), Int(g.m));
}

inline std::optional<long> euler_characteristic(const GradedDecomposition& g, const CycVec& x) {
  auto irr = irregularity_adjoint(g, x);
  if (!irr) return std::nullopt;
  if (!is_integer(*irr)) throw InternalError("irregularity of the descended connection is not an integer");
  return -rat_to_long(*irr);
}

inline long h1_dimension(const GradedDecomposition& g, const CycVec& x) {
  if (!g.is_regular_semisimple(x))
    throw InputError("h^1 formula requires a regular semisimple vector (theorem hypothesis)");
  Rat r_over_m(Int(g.alg->rs.size()), Int(g.m));
  if (!is_integer(r_over_m)) throw InternalError("#R/m is not an integer on a regular grading");
  long centralizer = static_cast<long>(centralizer_in_g_sigma(g, residue_part(g, x)).dim());
  return rat_to_long(r_over_m) - centralizer;
}

// ---------------------------------------------------------------------------
// Truncated solvers
// ---------------------------------------------------------------------------

struct KernelWindow {
  long lo = 0, hi = 0;
  std::vector<LoopElement> basis;             // full truncated kernel
  std::vector<LoopElement> conclusive_basis;  // vanishing on the bottom band
  size_t dim = 0;
  size_t conclusive_dim = 0;
  size_t inconclusive_dim = 0;
  bool conclusive_support_nonnegative = true;
};

namespace detail {

/// Exact parametric solver for the homogeneous banded system above.
class BandedSolver {
 public:
  BandedSolver(const GradedDecomposition& g, const std::map<long, CycVec>& terms)
      : g_(g), terms_(terms) {
    max_j_ = 0;
    for (const auto& [j, pj] : terms_) max_j_ = std::max(max_j_, j);
    // ad(P_j) between sigma-slices.
    for (const auto& [j, pj] : terms_) {
      for (int r = 0; r < g.e; ++r) {
        const Subspace<Cyc>& from = g.sigma_slice[static_cast<size_t>(r)];
        const Subspace<Cyc>& to = g.sigma_slice[static_cast<size_t>((r + j) % g.e)];
        Mat<Cyc> m(to.dim(), from.dim());
        for (size_t c = 0; c < from.dim(); ++c) {
          CycVec img = g.alg->bracket(pj, from.basis_vector(c));
          auto coords = to.coords_of(img);
          if (!coords) throw InternalError("connection term does not shift sigma-slices correctly");
          for (size_t rr = 0; rr < to.dim(); ++rr) m(rr, c) = (*coords)[rr];
        }
        ad_[{j, r}] = std::move(m);
      }
    }
  }

  /// Unknowns on [lo, hi]. closed_bottom: coefficients below lo are genuinely
  /// zero (power-series setting) and all outputs from lo are imposed.
  /// closed_top: coefficients above hi are asserted zero and the trailing
  /// outputs (hi, hi+max_j] are imposed as constraints.
  KernelWindow solve(long lo, long hi, bool closed_bottom, bool closed_top) const {
    size_t params = 0;
    std::map<long, Mat<Cyc>> m;  // v_n (slice coords) = M_n * p
    long first_output = closed_bottom ? lo : lo + max_j_;
    if (!closed_bottom) {
      for (long n = lo; n < std::min(lo + max_j_, hi + 1); ++n) params += slice_dim(n);
      size_t off = 0;
      for (long n = lo; n < std::min(lo + max_j_, hi + 1); ++n) {
        Mat<Cyc> mn(slice_dim(n), params);
        for (size_t i = 0; i < slice_dim(n); ++i) mn(i, off + i) = Cyc(1);
        m.emplace(n, std::move(mn));
        off += slice_dim(n);
      }
    }
    long last_output = closed_top ? hi + max_j_ : hi;

    for (long n = first_output; n <= last_output; ++n) {
      for (;;) {
        // Residual R with A v_n + R p = 0, R = sum_{j>=1} ad(P_j) M_{n-j}.
        Mat<Cyc> r(slice_dim(n), params);
        for (const auto& [j, pj] : terms_) {
          if (j == 0) continue;
          long src = n - j;
          auto it = m.find(src);
          if (it == m.end()) continue;
          const Mat<Cyc>& adm = ad_.at({j, slice_residue(src)});
          r = r + adm * it->second;
        }
        bool unknown_in_window = (n >= lo && n <= hi);
        if (!unknown_in_window) {
          // v_n is identically zero here: R p = 0 is a pure constraint.
          if (r.is_zero()) break;
          Mat<Cyc> k = r.kernel();
          apply_param_change(m, k, params);
          if (params == 0) break;
          continue;  // recompute R under the reduced parameters
        }
        // A = n I + ad(P_0) on the slice of n.
        size_t d = slice_dim(n);
        Mat<Cyc> a(d, d);
        auto it0 = terms_.find(0);
        if (it0 != terms_.end()) a = ad_.at({0, slice_residue(n)});
        for (size_t i = 0; i < d; ++i) a(i, i) += Cyc(static_cast<int>(n));
        // Augmented elimination of [A | R].
        Mat<Cyc> aug(d, d + params);
        for (size_t i = 0; i < d; ++i) {
          for (size_t jj = 0; jj < d; ++jj) aug(i, jj) = a(i, jj);
          for (size_t jj = 0; jj < params; ++jj) aug(i, d + jj) = r(i, jj);
        }
        auto piv = aug.rref();
        std::vector<Vec<Cyc>> constraint_rows;
        for (size_t pr = 0; pr < piv.size(); ++pr)
          if (piv[pr] >= d) {
            Vec<Cyc> row(params, Cyc(0));
            for (size_t jj = 0; jj < params; ++jj) row[jj] = aug(pr, d + jj);
            constraint_rows.push_back(std::move(row));
          }
        if (!constraint_rows.empty()) {
          Mat<Cyc> c = Mat<Cyc>::from_rows(constraint_rows);
          apply_param_change(m, c.kernel(), params);
          continue;  // recompute R under the reduced parameter space
        }
        // No constraints: read off v_n = -(R-part) p with free v-columns as
        // new parameters.
        std::vector<bool> is_pivot(d, false);
        std::vector<size_t> pivot_row(d, 0);
        size_t npiv = 0;
        for (size_t pr = 0; pr < piv.size(); ++pr) {
          is_pivot[piv[pr]] = true;
          pivot_row[piv[pr]] = pr;
          ++npiv;
        }
        std::vector<size_t> free_cols;
        for (size_t cidx = 0; cidx < d; ++cidx)
          if (!is_pivot[cidx]) free_cols.push_back(cidx);
        size_t new_params = params + free_cols.size();
        // widen earlier matrices
        if (!free_cols.empty())
          for (auto& [deg, mat] : m) mat = widened(mat, new_params);
        Mat<Cyc> mn(d, new_params);
        for (size_t cidx = 0; cidx < d; ++cidx) {
          if (is_pivot[cidx]) {
            size_t pr = pivot_row[cidx];
            for (size_t jj = 0; jj < params; ++jj) mn(cidx, jj) = -aug(pr, d + jj);
            for (size_t f = 0; f < free_cols.size(); ++f) mn(cidx, params + f) = -aug(pr, free_cols[f]);
          }
        }
        for (size_t f = 0; f < free_cols.size(); ++f) mn(free_cols[f], params + f) = Cyc(1);
        params = new_params;
        m[n] = std::move(mn);
        break;
      }
      if (params == 0 && n >= hi) break;
    }

    KernelWindow out;
    out.lo = lo;
    out.hi = hi;
    out.dim = params;
    for (size_t p = 0; p < params; ++p) out.basis.push_back(reconstruct(m, p));
    // Conclusive part: the subspace vanishing on the bottom band.
    if (closed_bottom) {
      out.conclusive_basis = out.basis;
      out.conclusive_dim = params;
      out.inconclusive_dim = 0;
    } else {
      std::vector<Vec<Cyc>> band_rows;
      for (long n = lo; n < std::min(lo + max_j_, hi + 1); ++n) {
        auto it = m.find(n);
        if (it == m.end()) continue;
        for (size_t i = 0; i < it->second.rows(); ++i) {
          Vec<Cyc> row(params, Cyc(0));
          for (size_t jj = 0; jj < params; ++jj) row[jj] = it->second(i, jj);
          band_rows.push_back(std::move(row));
        }
      }
      Mat<Cyc> band = band_rows.empty() ? Mat<Cyc>(0, params) : Mat<Cyc>::from_rows(band_rows);
      Mat<Cyc> k = band.kernel();
      out.conclusive_dim = k.rows();
      out.inconclusive_dim = params - k.rows();
      for (size_t kr = 0; kr < k.rows(); ++kr) {
        LoopElement el;
        for (const auto& [deg, mat] : m) {
          Vec<Cyc> coords(mat.rows(), Cyc(0));
          for (size_t i = 0; i < mat.rows(); ++i)
            for (size_t jj = 0; jj < params; ++jj) coords[i] += mat(i, jj) * k(kr, jj);
          CycVec v = g_.slice(deg).from_coords(coords);
          if (!vec_is_zero(v)) el.terms.emplace(deg, v);
        }
        out.conclusive_basis.push_back(el.cleaned());
      }
    }
    for (const LoopElement& el : out.conclusive_basis)
      for (const auto& [deg, v] : el.terms)
        if (deg < 0 && !vec_is_zero(v)) out.conclusive_support_nonnegative = false;
    return out;
  }

 private:
  const GradedDecomposition& g_;
  std::map<long, CycVec> terms_;
  long max_j_ = 0;
  std::map<std::pair<long, int>, Mat<Cyc>> ad_;

  int slice_residue(long n) const { return static_cast<int>(((n % g_.e) + g_.e) % g_.e); }
  size_t slice_dim(long n) const { return g_.slice(n).dim(); }

  static Mat<Cyc> widened(const Mat<Cyc>& m, size_t new_cols) {
    Mat<Cyc> out(m.rows(), new_cols);
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
  }

  /// Shrink the parameter space to the kernel rows of a constraint matrix.
  static void apply_param_change(std::map<long, Mat<Cyc>>& m, const Mat<Cyc>& kernel_rows, size_t& params) {
    size_t new_p = kernel_rows.rows();
    Mat<Cyc> t(params, new_p);
    for (size_t i = 0; i < new_p; ++i)
      for (size_t j = 0; j < params; ++j) t(j, i) = kernel_rows(i, j);
    for (auto& [deg, mat] : m) mat = mat * t;
    params = new_p;
  }

  LoopElement reconstruct(const std::map<long, Mat<Cyc>>& m, size_t p) const {
    LoopElement el;
    for (const auto& [deg, mat] : m) {
      Vec<Cyc> coords(mat.rows(), Cyc(0));
      for (size_t i = 0; i < mat.rows(); ++i) coords[i] = mat(i, p);
      CycVec v = g_.slice(deg).from_coords(coords);
      if (!vec_is_zero(v)) el.terms.emplace(deg, v);
    }
    return el.cleaned();
  }
};

}  // namespace detail

struct HorizontalSections {
  long truncation = 0;
  size_t dim = 0;
  std::vector<LoopElement> basis;  // truncated power-series solutions
};

/// H^0 at 0: sigma-equivariant power-series kernel, truncated at degree N.
inline HorizontalSections horizontal_sections_at_zero(const ThetaConnection& conn, long truncation) {
  if (truncation < 1) throw InputError("truncation must be at least 1");
  detail::BandedSolver solver(*conn.gr, conn.terms);
  KernelWindow w = solver.solve(0, truncation, /*closed_bottom=*/true, /*closed_top=*/false);
  HorizontalSections h;
  h.truncation = truncation;
  h.dim = w.dim;
  h.basis = w.basis;
  return h;
}

/// Two-sided truncated Laurent kernel on [-N, N], conservative at the cut.
inline KernelWindow laurent_kernel(const ThetaConnection& conn, long window) {
  if (window < 2 * conn.gr->m) throw InputError("laurent window must be at least 2m");
  detail::BandedSolver solver(*conn.gr, conn.terms);
  return solver.solve(-window, window, /*closed_bottom=*/false, /*closed_top=*/false);
}

/// Kernel on the negative-only window [-N, -1]; expresses H^0 at infinity.
inline KernelWindow negative_window_kernel(const ThetaConnection& conn, long window) {
  detail::BandedSolver solver(*conn.gr, conn.terms);
  return solver.solve(-window, -1, /*closed_bottom=*/false, /*closed_top=*/true);
}

// ---------------------------------------------------------------------------
// Full local/global report
// ---------------------------------------------------------------------------

struct RigidityVerdict {
  bool rss = false;
  bool stable = false;
  bool s0_is_1 = false;
  std::optional<long> h1;
  std::optional<bool> rigid;  // h1 == 0, when defined
};

inline RigidityVerdict is_cohomologically_rigid(const GradedDecomposition& g, const CycVec& x) {
  RigidityVerdict v;
  v.rss = g.is_regular_semisimple(x);
  v.stable = (g.in_g1(x) && v.rss) ? g.is_stable(x) : false;
  v.s0_is_1 = (g.s0 == 1);
  if (v.rss) {
    v.h1 = h1_dimension(g, x);
    v.rigid = (*v.h1 == 0);
  }
  if (v.stable && v.s0_is_1) {
    if (!v.rigid.has_value() || !*v.rigid)
      throw InternalError("stable grading with s_0 = 1 must be rigid; library invariant violated");
  }
  return v;
}

struct LocalReport {
  CycVec residue;
  bool residue_nilpotent = false;
  OrbitPrediction predicted_orbit;
  OrbitChecks orbit_checks;
  std::optional<Rat> slope;         // nullopt: inapplicable (X not semisimple)
  std::optional<Rat> irregularity;  // same gate
  size_t h0_zero = 0;
  size_t h0_infinity = 0;           // conclusive dim on the negative window
  std::optional<long> h1;           // defined for regular semisimple X
  std::optional<long> euler;        // defined for semisimple X
  RigidityVerdict verdict;
  long truncation = 0;
  bool h0_stable_under_doubling = false;
};

inline LocalReport local_report(const GradedDecomposition& g, const ThetaConnection& conn, long truncation = 0) {
  if (truncation <= 0) truncation = 4 * g.m;
  LocalReport r;
  r.truncation = truncation;
  r.residue = conn.residue();
  r.residue_nilpotent = is_ad_nilpotent(*g.alg, r.residue);
  if (!r.residue_nilpotent) throw InternalError("residue of a theta-connection must be nilpotent");
  bool residue_ok = g.g_k_sigma.count(1) ? g.g_k_sigma.at(1).contains(r.residue) : vec_is_zero(r.residue);
  if (!residue_ok) throw InternalError("residue must lie in g(1)^sigma");
  r.predicted_orbit = predicted_residue_orbit(g);
  r.orbit_checks = verify_residue_orbit_of(g, r.residue);
  r.slope = slope_at_infinity(g, conn.x);
  r.irregularity = irregularity_adjoint(g, conn.x);
  HorizontalSections h0 = horizontal_sections_at_zero(conn, truncation);
  HorizontalSections h0b = horizontal_sections_at_zero(conn, 2 * truncation);
  r.h0_zero = h0.dim;
  r.h0_stable_under_doubling = (h0.dim == h0b.dim);
  if (!r.h0_stable_under_doubling)
    throw InternalError("truncated H^0 at 0 changed between N and 2N");
  r.h0_infinity = negative_window_kernel(conn, truncation).conclusive_dim;
  r.euler = euler_characteristic(g, conn.x);
  r.verdict = is_cohomologically_rigid(g, conn.x);
  r.h1 = r.verdict.h1;
  // Euler consistency: h1 = Irr - h0_zero whenever the truncated H^0 equals
  // the exact centralizer dimension (it must, by unique continuation).
  if (r.h1 && r.irregularity) {
    size_t exact = centralizer_in_g_sigma(g, r.residue).dim();
    if (r.h0_zero != exact) throw InternalError("truncated H^0 at 0 disagrees with the exact kernel");
    if (*r.h1 != rat_to_long(*r.irregularity) - static_cast<long>(r.h0_zero))
      throw InternalError("Euler characteristic bookkeeping failed");
  }
  return r;
}

}  // namespace thetaconn
