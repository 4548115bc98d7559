#pragma once

// Chevalley basis {H_1..H_l} u {E_alpha} with integer structure constants.
//
// Signs are fixed by the extraspecial-pair convention: positive roots are
// ordered by height then lexicographically; for each non-simple positive
// gamma the decomposition gamma = alpha + beta with minimal alpha is the
// extraspecial pair and gets N_{alpha,beta} = p+1 > 0. Every other constant
// is forced from those by the Jacobi identity and the standard relations
//   N_{beta,alpha} = -N_{alpha,beta},   N_{-alpha,-beta} = -N_{alpha,beta},
//   N_{x,y}/(z,z) = N_{y,z}/(x,x)       for x + y + z = 0.

#include "thetaconn/root_system.hpp"

#include <cstdint>

namespace thetaconn {

class ChevalleyAlgebra {
 public:
  RootSystem rs;

  struct Ent {
    int idx;
    long c;
  };
  using SparseVec = std::vector<Ent>;

  static ChevalleyAlgebra build(char series, int rank) { return build(RootSystem::build(series, rank)); }
  static ChevalleyAlgebra build(RootSystem root_system);

  size_t dim() const { return static_cast<size_t>(rs.rank) + rs.size(); }
  size_t rank() const { return static_cast<size_t>(rs.rank); }
  int h_index(int i) const { return i; }
  int e_index(int root_idx) const { return rs.rank + root_idx; }
  bool is_root_vector(int basis_idx) const { return basis_idx >= rs.rank; }
  int root_of(int basis_idx) const { return basis_idx - rs.rank; }

  const SparseVec& table(int i, int j) const { return table_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }

  /// N_{alpha,beta} for root indices with alpha + beta a root; 0 otherwise.
  long n_constant(int ri, int rj) const {
    RootVec sum = rs.roots[static_cast<size_t>(ri)];
    const RootVec& b = rs.roots[static_cast<size_t>(rj)];
    for (size_t i = 0; i < sum.size(); ++i) sum[i] += b[i];
    if (!rs.is_root(sum)) return 0;
    int target = rs.root_index(sum);
    for (const Ent& e : table(e_index(ri), e_index(rj)))
      if (e.idx == e_index(target)) return e.c;
    return 0;
  }

  template <class T>
  Vec<T> basis_vec(int idx) const {
    Vec<T> v(dim(), T(0));
    v[static_cast<size_t>(idx)] = T(1);
    return v;
  }

  template <class T>
  Vec<T> bracket(const Vec<T>& x, const Vec<T>& y) const {
    Vec<T> out(dim(), T(0));
    for (size_t i = 0; i < dim(); ++i) {
      if (x[i] == T(0)) continue;
      for (size_t j = 0; j < dim(); ++j) {
        if (y[j] == T(0)) continue;
        const SparseVec& t = table_[i][j];
        if (t.empty()) continue;
        T f = x[i] * y[j];
        for (const Ent& e : t) out[static_cast<size_t>(e.idx)] += f * T(static_cast<int>(e.c));
      }
    }
    return out;
  }

  /// Matrix of ad(x) in the Chevalley basis.
  template <class T>
  Mat<T> adjoint(const Vec<T>& x) const {
    if (x.size() != dim()) throw InputError("adjoint: vector has wrong dimension");
    Mat<T> m(dim(), dim());
    for (size_t i = 0; i < dim(); ++i) {
      if (x[i] == T(0)) continue;
      for (size_t j = 0; j < dim(); ++j)
        for (const Ent& e : table_[i][j]) m(static_cast<size_t>(e.idx), j) += x[i] * T(static_cast<int>(e.c));
    }
    return m;
  }

  /// Exact integer Jacobi check on a basis triple.
  bool jacobi_holds(int i, int j, int k) const {
    std::vector<std::int64_t> acc(dim(), 0);
    auto add_double_bracket = [&](int a, int b, int c) {
      for (const Ent& inner : table_[static_cast<size_t>(b)][static_cast<size_t>(c)])
        for (const Ent& outer : table_[static_cast<size_t>(a)][static_cast<size_t>(inner.idx)])
          acc[static_cast<size_t>(outer.idx)] += static_cast<std::int64_t>(inner.c) * outer.c;
    };
    add_double_bracket(i, j, k);
    add_double_bracket(j, k, i);
    add_double_bracket(k, i, j);
    for (std::int64_t v : acc)
      if (v != 0) return false;
    return true;
  }

  const Mat<Rat>& killing() const { return killing_; }

  Rat killing_pair(const Vec<Rat>& x, const Vec<Rat>& y) const {
    Rat out(0);
    for (size_t i = 0; i < dim(); ++i) {
      if (x[i] == 0) continue;
      for (size_t j = 0; j < dim(); ++j) {
        if (y[j] == 0) continue;
        out += x[i] * y[j] * killing_(i, j);
      }
    }
    return out;
  }

 private:
  std::vector<std::vector<SparseVec>> table_;
  Mat<Rat> killing_;

  /// tr(ad b_i ad b_j) straight from the sparse table.
  Rat trace_ad_ad(int i, int j) const {
    Int tr = 0;
    for (size_t c = 0; c < dim(); ++c)
      for (const Ent& e1 : table_[static_cast<size_t>(j)][c])
        for (const Ent& e2 : table_[static_cast<size_t>(i)][static_cast<size_t>(e1.idx)])
          if (e2.idx == static_cast<int>(c)) tr += Int(e1.c) * Int(e2.c);
    return Rat(tr);
  }
};

namespace detail {

/// Structure constants N_{alpha,beta} for pairs of positive roots, computed
/// by induction on the height of alpha + beta.
class PositiveConstants {
 public:
  explicit PositiveConstants(const RootSystem& rs) : rs_(rs), np_(rs.num_positive) {
    n_.assign(np_ * np_, 0);
    for (size_t g = 0; g < np_; ++g) compute_for_sum(static_cast<int>(g));
  }

  /// Signed lookup for positive root indices (antisymmetric).
  long get(int i, int j) const {
    if (i < j) return n_[static_cast<size_t>(i) * np_ + static_cast<size_t>(j)];
    if (j < i) return -n_[static_cast<size_t>(j) * np_ + static_cast<size_t>(i)];
    return 0;
  }

 private:
  const RootSystem& rs_;
  size_t np_;
  std::vector<long> n_;

  int pos_index(const RootVec& r) const {
    int idx = rs_.root_index(r);
    return (idx >= 0 && rs_.is_positive(idx)) ? idx : -1;
  }

  void compute_for_sum(int gamma_idx) {
    const RootVec& gamma = rs_.roots[static_cast<size_t>(gamma_idx)];
    if (root_height(gamma) < 2) return;
    // Decompositions gamma = alpha + beta into positive roots, alpha < beta.
    std::vector<std::pair<int, int>> pairs;
    for (size_t a = 0; a < np_; ++a) {
      RootVec beta = gamma;
      const RootVec& alpha = rs_.roots[a];
      for (size_t i = 0; i < beta.size(); ++i) beta[i] -= alpha[i];
      int b = pos_index(beta);
      if (b < 0 || b <= static_cast<int>(a)) continue;
      pairs.emplace_back(static_cast<int>(a), b);
    }
    if (pairs.empty()) throw InternalError("non-simple positive root with no decomposition");
    // pairs is sorted by alpha already; the first is the extraspecial pair.
    auto [a1, b1] = pairs[0];
    long p = rs_.string_down(rs_.roots[static_cast<size_t>(a1)], rs_.roots[static_cast<size_t>(b1)]);
    set(a1, b1, p + 1);
    for (size_t k = 1; k < pairs.size(); ++k) {
      auto [a, b] = pairs[k];
      set(a, b, derive(gamma, a, b, a1, b1));
    }
  }

  long derive(const RootVec& gamma, int a, int b, int a1, int b1) const {
    const RootVec& alpha = rs_.roots[static_cast<size_t>(a)];
    const RootVec& beta = rs_.roots[static_cast<size_t>(b)];
    const RootVec& alpha1 = rs_.roots[static_cast<size_t>(a1)];
    const RootVec& beta1 = rs_.roots[static_cast<size_t>(b1)];
    Rat t(0);
    // delta = beta1 - alpha
    RootVec delta = beta1;
    for (size_t i = 0; i < delta.size(); ++i) delta[i] -= alpha[i];
    int d_idx = pos_index(delta);
    if (d_idx >= 0)
      t -= Rat(rs_.norm2(delta), rs_.norm2(beta1)) * Rat(get(a, d_idx)) * Rat(get(d_idx, a1));
    // mu = alpha - alpha1
    RootVec mu = alpha;
    for (size_t i = 0; i < mu.size(); ++i) mu[i] -= alpha1[i];
    int m_idx = pos_index(mu);
    if (m_idx >= 0)
      t -= Rat(rs_.norm2(mu) * rs_.norm2(beta), rs_.norm2(alpha) * rs_.norm2(beta1)) * Rat(get(a1, m_idx)) *
           Rat(get(b, m_idx));
    Rat n = Rat(rs_.norm2(gamma), rs_.norm2(beta)) * t / Rat(get(a1, b1));
    if (!is_integer(n)) throw InternalError("structure constant recursion produced a non-integer");
    return static_cast<long>(numerator(n));
  }

  void set(int i, int j, long v) { n_[static_cast<size_t>(i) * np_ + static_cast<size_t>(j)] = v; }
};

}  // namespace detail

long n_any_mixed(const RootSystem& rs, const detail::PositiveConstants& npos, int xi, int yi);

inline ChevalleyAlgebra ChevalleyAlgebra::build(RootSystem root_system) {
  ChevalleyAlgebra alg;
  alg.rs = std::move(root_system);
  const RootSystem& rs = alg.rs;
  size_t dim = alg.dim();
  size_t np = rs.num_positive;

  detail::PositiveConstants npos(rs);

  // Signed constant for arbitrary root indices, reduced to positive pairs.
  auto n_any = [&](int ri, int rj) -> long {
    bool pi = rs.is_positive(ri), pj = rs.is_positive(rj);
    if (pi && pj) return npos.get(ri, rj);
    if (!pi && !pj) return -npos.get(rs.negative_of(ri), rs.negative_of(rj));
    if (pi && !pj) {
      // N_{y,x} with x negative: antisymmetry onto the mixed case below.
      return -n_any_mixed(rs, npos, rj, ri);
    }
    return n_any_mixed(rs, npos, ri, rj);
  };

  alg.table_.assign(dim, std::vector<SparseVec>(dim));
  auto& tbl = alg.table_;
  int l = rs.rank;

  for (size_t k = 0; k < rs.size(); ++k) {
    const RootVec& alpha = rs.roots[k];
    int ek = alg.e_index(static_cast<int>(k));
    // [H_i, E_alpha] = alpha(H_i) E_alpha
    for (int i = 0; i < l; ++i) {
      long c = rs.pairing_with_simple_coroot(alpha, i);
      if (c != 0) {
        tbl[static_cast<size_t>(i)][static_cast<size_t>(ek)].push_back({ek, c});
        tbl[static_cast<size_t>(ek)][static_cast<size_t>(i)].push_back({ek, -c});
      }
    }
    for (size_t k2 = 0; k2 < rs.size(); ++k2) {
      int ek2 = alg.e_index(static_cast<int>(k2));
      const RootVec& beta = rs.roots[k2];
      if (static_cast<int>(k2) == rs.negative_of(static_cast<int>(k))) {
        // [E_alpha, E_{-alpha}] = H_alpha (the coroot)
        auto co = rs.coroot_coords(alpha);
        for (int i = 0; i < l; ++i)
          if (co[static_cast<size_t>(i)] != 0)
            tbl[static_cast<size_t>(ek)][static_cast<size_t>(ek2)].push_back({i, co[static_cast<size_t>(i)]});
        continue;
      }
      RootVec sum = alpha;
      for (size_t i = 0; i < sum.size(); ++i) sum[i] += beta[i];
      int s_idx = rs.root_index(sum);
      if (s_idx < 0) continue;
      long c = n_any(static_cast<int>(k), static_cast<int>(k2));
      if (c != 0)
        tbl[static_cast<size_t>(ek)][static_cast<size_t>(ek2)].push_back({alg.e_index(s_idx), c});
    }
  }

  // Killing form: weight-space orthogonality leaves the H block and the
  // E_alpha / E_{-alpha} pairs; those traces come straight off the table.
  alg.killing_ = Mat<Rat>(dim, dim);
  for (int i = 0; i < l; ++i)
    for (int j = i; j < l; ++j) {
      Rat v = alg.trace_ad_ad(i, j);
      alg.killing_(static_cast<size_t>(i), static_cast<size_t>(j)) = v;
      alg.killing_(static_cast<size_t>(j), static_cast<size_t>(i)) = v;
    }
  for (size_t k = 0; k < np; ++k) {
    int ei = alg.e_index(static_cast<int>(k));
    int ej = alg.e_index(rs.negative_of(static_cast<int>(k)));
    Rat v = alg.trace_ad_ad(ei, ej);
    alg.killing_(static_cast<size_t>(ei), static_cast<size_t>(ej)) = v;
    alg.killing_(static_cast<size_t>(ej), static_cast<size_t>(ei)) = v;
  }
  return alg;
}

/// N_{x,y} for x negative, y positive, via the three-term relation.
inline long n_any_mixed(const RootSystem& rs, const detail::PositiveConstants& npos, int xi, int yi) {
  int ap = rs.negative_of(xi);  // x = -alpha'
  const RootVec& alpha_p = rs.roots[static_cast<size_t>(ap)];
  const RootVec& y = rs.roots[static_cast<size_t>(yi)];
  RootVec z = y;
  for (size_t i = 0; i < z.size(); ++i) z[i] -= alpha_p[i];
  int zi = rs.root_index(z);
  if (zi < 0) return 0;
  if (rs.is_positive(zi)) {
    // triple (x, y, -z): N_{x,y} = (z,z)/(y,y) * N_{-z,x} = -(z,z)/(y,y)*N_{z,alpha'}
    Rat v = Rat(rs.norm2(z), rs.norm2(y)) * Rat(-npos.get(zi, ap));
    if (!is_integer(v)) throw InternalError("mixed structure constant not integral");
    return static_cast<long>(numerator(v));
  }
  int zp = rs.negative_of(zi);  // z' = alpha' - y > 0
  const RootVec& zprime = rs.roots[static_cast<size_t>(zp)];
  Rat v = Rat(rs.norm2(zprime), rs.norm2(alpha_p)) * Rat(npos.get(yi, zp));
  if (!is_integer(v)) throw InternalError("mixed structure constant not integral");
  return static_cast<long>(numerator(v));
}

}  // namespace thetaconn
