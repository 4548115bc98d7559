#pragma once

// Pinned diagram automorphisms. A Dynkin-diagram symmetry determines a unique
// automorphism of g fixing the pinning; on non-simple root vectors the sign
// is forced by pushing the symmetry through the extraspecial-pair ladder.

#include "thetaconn/chevalley.hpp"

#include <memory>

namespace thetaconn {

class DiagramAutomorphism {
 public:
  std::shared_ptr<const ChevalleyAlgebra> alg;
  std::vector<int> node_perm;  // 0-based images of the Dynkin nodes
  int order = 1;               // e

  static DiagramAutomorphism pinned(std::shared_ptr<const ChevalleyAlgebra> algebra,
                                    const std::vector<int>& node_perm);

  static DiagramAutomorphism identity(std::shared_ptr<const ChevalleyAlgebra> algebra) {
    std::vector<int> id(algebra->rank());
    for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    return pinned(std::move(algebra), id);
  }

  bool is_identity() const { return order == 1; }

  /// Image basis index and sign of basis vector b under sigma.
  int image_index(int b) const { return image_idx_[static_cast<size_t>(b)]; }
  int image_sign(int b) const { return image_sign_[static_cast<size_t>(b)]; }

  /// Image of a root (by index) under the induced lattice map.
  int root_image(int root_idx) const { return root_image_[static_cast<size_t>(root_idx)]; }

  template <class T>
  Vec<T> apply(const Vec<T>& v) const {
    Vec<T> out(v.size(), T(0));
    for (size_t b = 0; b < v.size(); ++b) {
      if (v[b] == T(0)) continue;
      out[static_cast<size_t>(image_idx_[b])] += T(image_sign_[b]) * v[b];
    }
    return out;
  }

  template <class T>
  Mat<T> matrix() const {
    Mat<T> m(alg->dim(), alg->dim());
    for (size_t b = 0; b < alg->dim(); ++b)
      m(static_cast<size_t>(image_idx_[b]), b) = T(image_sign_[b]);
    return m;
  }

 private:
  std::vector<int> image_idx_;
  std::vector<int> image_sign_;
  std::vector<int> root_image_;
};

inline DiagramAutomorphism DiagramAutomorphism::pinned(std::shared_ptr<const ChevalleyAlgebra> algebra,
                                                       const std::vector<int>& node_perm) {
  const ChevalleyAlgebra& alg = *algebra;
  const RootSystem& rs = alg.rs;
  int l = rs.rank;
  if (static_cast<int>(node_perm.size()) != l) throw InputError("node permutation has wrong length");
  std::vector<bool> hit(static_cast<size_t>(l), false);
  for (int v : node_perm) {
    if (v < 0 || v >= l || hit[static_cast<size_t>(v)]) throw InputError("node permutation is not a bijection");
    hit[static_cast<size_t>(v)] = true;
  }
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (rs.cartan[static_cast<size_t>(node_perm[static_cast<size_t>(i)])]
                   [static_cast<size_t>(node_perm[static_cast<size_t>(j)])] !=
          rs.cartan[static_cast<size_t>(i)][static_cast<size_t>(j)])
        throw InputError("node permutation is not a diagram symmetry");

  DiagramAutomorphism s;
  s.alg = std::move(algebra);
  s.node_perm = node_perm;
  // order of the permutation
  {
    std::vector<int> cur(node_perm);
    int e = 1;
    auto is_id = [&](const std::vector<int>& p) {
      for (int i = 0; i < l; ++i)
        if (p[static_cast<size_t>(i)] != i) return false;
      return true;
    };
    while (!is_id(cur)) {
      std::vector<int> nxt(static_cast<size_t>(l));
      for (int i = 0; i < l; ++i) nxt[static_cast<size_t>(i)] = node_perm[static_cast<size_t>(cur[static_cast<size_t>(i)])];
      cur = std::move(nxt);
      ++e;
      if (e > 3) throw InternalError("diagram symmetry of order > 3");
    }
    s.order = e;
  }

  // Induced map on roots.
  s.root_image_.resize(rs.size());
  for (size_t k = 0; k < rs.size(); ++k) {
    RootVec img(static_cast<size_t>(l), 0);
    for (int i = 0; i < l; ++i) img[static_cast<size_t>(node_perm[static_cast<size_t>(i)])] = rs.roots[k][static_cast<size_t>(i)];
    int idx = rs.root_index(img);
    if (idx < 0) throw InternalError("diagram symmetry does not permute the roots");
    s.root_image_[k] = idx;
  }

  // Signs on root vectors: +1 on simple generators, propagated upward along
  // extraspecial decompositions, and c_{-gamma} = c_gamma.
  std::vector<int> sign(rs.size(), 0);
  for (size_t k = 0; k < rs.num_positive; ++k) {
    const RootVec& gamma = rs.roots[k];
    if (root_height(gamma) == 1) {
      sign[k] = 1;
    } else {
      int a1 = -1, b1 = -1;
      for (size_t a = 0; a < rs.num_positive && a1 < 0; ++a) {
        RootVec beta = gamma;
        for (size_t i = 0; i < beta.size(); ++i) beta[i] -= rs.roots[a][static_cast<size_t>(i)];
        int b = rs.root_index(beta);
        if (b >= 0 && rs.is_positive(b) && b > static_cast<int>(a)) {
          a1 = static_cast<int>(a);
          b1 = b;
        }
      }
      long n_orig = alg.n_constant(a1, b1);
      long n_img = alg.n_constant(s.root_image_[static_cast<size_t>(a1)], s.root_image_[static_cast<size_t>(b1)]);
      long c = sign[static_cast<size_t>(a1)] * sign[static_cast<size_t>(b1)] * n_img;
      if (c % n_orig != 0 || std::abs(c / n_orig) != 1)
        throw InternalError("sign propagation failed for pinned automorphism");
      sign[k] = static_cast<int>(c / n_orig);
    }
    sign[rs.negative_of(static_cast<int>(k))] = sign[k];
  }

  s.image_idx_.resize(alg.dim());
  s.image_sign_.resize(alg.dim());
  for (int i = 0; i < l; ++i) {
    s.image_idx_[static_cast<size_t>(i)] = node_perm[static_cast<size_t>(i)];
    s.image_sign_[static_cast<size_t>(i)] = 1;
  }
  for (size_t k = 0; k < rs.size(); ++k) {
    s.image_idx_[static_cast<size_t>(alg.e_index(static_cast<int>(k)))] = alg.e_index(s.root_image_[k]);
    s.image_sign_[static_cast<size_t>(alg.e_index(static_cast<int>(k)))] = sign[k];
  }
  return s;
}

}  // namespace thetaconn
