#pragma once

// The twisted loop algebra through finite exponent windows: Kac-Moy-Prasad
// components transported from u^i g_i by exponent bookkeeping, the invariant
// form <t^i x, t^j y> = delta_{i,-j} kappa(x,y), the image p_1 of a vector
// X in g_1, and the Heisenberg decomposition a (+) c attached to ad(p_1).

#include "thetaconn/grading.hpp"

namespace thetaconn {

/// Finitely supported element of g[t, t^-1], exponent -> coefficient vector.
/// Twisted elements satisfy sigma(v_n) = zeta_e^n v_n per exponent.
struct LoopElement {
  std::map<long, CycVec> terms;

  bool is_zero() const {
    for (const auto& [n, v] : terms)
      if (!vec_is_zero(v)) return false;
    return true;
  }
  LoopElement cleaned() const {
    LoopElement out;
    for (const auto& [n, v] : terms)
      if (!vec_is_zero(v)) out.terms.emplace(n, v);
    return out;
  }
  friend LoopElement operator+(const LoopElement& a, const LoopElement& b) {
    LoopElement out = a;
    for (const auto& [n, v] : b.terms) {
      auto it = out.terms.find(n);
      if (it == out.terms.end())
        out.terms.emplace(n, v);
      else
        it->second = vec_add(it->second, v);
    }
    return out.cleaned();
  }
  friend LoopElement operator-(const LoopElement& a, const LoopElement& b) {
    LoopElement nb;
    for (const auto& [n, v] : b.terms) nb.terms.emplace(n, vec_scale(v, Cyc(-1)));
    return a + nb;
  }
  LoopElement scaled(const Cyc& c) const {
    LoopElement out;
    for (const auto& [n, v] : terms) out.terms.emplace(n, vec_scale(v, c));
    return out.cleaned();
  }
  /// t d/dt: multiplies each term by its exponent.
  LoopElement t_ddt() const {
    LoopElement out;
    for (const auto& [n, v] : terms)
      if (n != 0) out.terms.emplace(n, vec_scale(v, Cyc(static_cast<int>(n))));
    return out.cleaned();
  }
  friend bool operator==(const LoopElement& a, const LoopElement& b) { return (a - b).is_zero(); }
};

/// One Kac-Moy-Prasad degree: the basis of (+)_k t^{e(i-k)/m} g_i(k).
struct KmpComponent {
  long degree = 0;
  struct Piece {
    long k;
    long exponent;  // e(i-k)/m
    Subspace<Cyc> space;
    size_t offset;  // first coordinate of this piece in component coordinates
  };
  std::vector<Piece> pieces;
  size_t dim = 0;
  bool has_zero_exponent = false;  // the k = i term (see KmpGrading notes)

  std::vector<std::pair<long, CycVec>> basis_entries() const {
    std::vector<std::pair<long, CycVec>> out;
    for (const auto& p : pieces)
      for (size_t r = 0; r < p.space.dim(); ++r) out.emplace_back(p.exponent, p.space.basis_vector(r));
    return out;
  }

  LoopElement element_from_coords(const Vec<Cyc>& coords) const {
    LoopElement el;
    for (const auto& p : pieces) {
      Vec<Cyc> local(coords.begin() + static_cast<long>(p.offset),
                     coords.begin() + static_cast<long>(p.offset + p.space.dim()));
      CycVec v = p.space.from_coords(local);
      if (!vec_is_zero(v)) {
        auto it = el.terms.find(p.exponent);
        if (it == el.terms.end())
          el.terms.emplace(p.exponent, v);
        else
          it->second = vec_add(it->second, v);
      }
    }
    return el;
  }

  std::optional<Vec<Cyc>> coords_of(const LoopElement& el) const {
    Vec<Cyc> coords(dim, Cyc(0));
    LoopElement rem = el.cleaned();
    for (const auto& p : pieces) {
      auto it = rem.terms.find(p.exponent);
      if (it == rem.terms.end()) continue;
      auto local = p.space.coords_of(it->second);
      if (!local) return std::nullopt;
      for (size_t r = 0; r < p.space.dim(); ++r) coords[p.offset + r] = (*local)[r];
      rem.terms.erase(it);
    }
    if (!rem.is_zero()) return std::nullopt;
    return coords;
  }
};

struct HeisenbergDecomposition {
  long window = 0;
  std::map<long, KmpComponent> components;   // degrees [-W-1, W+1]
  std::map<long, Subspace<Cyc>> a;           // kernel of ad p_1, component coords
  std::map<long, Subspace<Cyc>> c;           // image of ad p_1, component coords

  std::vector<LoopElement> a_basis(long i) const {
    std::vector<LoopElement> out;
    const auto& sp = a.at(i);
    for (size_t r = 0; r < sp.dim(); ++r) out.push_back(components.at(i).element_from_coords(sp.basis_vector(r)));
    return out;
  }
  std::vector<LoopElement> c_basis(long i) const {
    std::vector<LoopElement> out;
    const auto& sp = c.at(i);
    for (size_t r = 0; r < sp.dim(); ++r) out.push_back(components.at(i).element_from_coords(sp.basis_vector(r)));
    return out;
  }
};

class KmpGrading {
 public:
  explicit KmpGrading(std::shared_ptr<const GradedDecomposition> grading) : gr_(std::move(grading)) {}

  const GradedDecomposition& grading() const { return *gr_; }

  /// Per-exponent sigma-equivariance: sigma(v_n) = zeta_e^n v_n.
  bool is_twisted(const LoopElement& el) const {
    for (const auto& [n, v] : el.terms) {
      if (vec_is_zero(v)) continue;
      CycVec img = gr_->kc.sigma.apply(v);
      if (!(img == vec_scale(v, gr_->zeta_e(n)))) return false;
    }
    return true;
  }

  KmpComponent component(long i) const {
    const GradedDecomposition& g = *gr_;
    KmpComponent comp;
    comp.degree = i;
    long im = ((i % g.m) + g.m) % g.m;
    for (const auto& [ik, piece] : g.g_i_k) {
      if (ik.first != im) continue;
      long k = ik.second;
      long num = static_cast<long>(g.e) * (i - k);
      if (num % g.m != 0) throw InternalError("KMP exponent is not an integer");
      KmpComponent::Piece p{k, num / g.m, piece, comp.dim};
      if (p.exponent == 0) comp.has_zero_exponent = true;
      comp.dim += piece.dim();
      comp.pieces.push_back(std::move(p));
    }
    if (comp.dim != g.g_i[static_cast<size_t>(im)].dim())
      throw InternalError("KMP component dimension mismatch with g_i");
    return comp;
  }

  /// p_1 = Phi(uX) = sum_k X_k t^{e(1-k)/m} for X in g_1.
  LoopElement phi_image(const CycVec& x) const {
    const GradedDecomposition& g = *gr_;
    auto parts = g.decompose_g1(x);  // rejects X outside g_1
    LoopElement p1;
    for (const auto& [k, xk] : parts) {
      long num = static_cast<long>(g.e) * (1 - k);
      if (num % g.m != 0) throw InternalError("phi image exponent is not an integer");
      long j = num / g.m;
      if (j < 0) throw InternalError("phi image produced a negative exponent");
      p1.terms.emplace(j, xk);
    }
    if (!is_twisted(p1)) throw InternalError("phi image is not sigma-equivariant");
    return p1;
  }

  /// Killing form lifted to Q(zeta_m).
  Cyc killing_cyc(const CycVec& x, const CycVec& y) const {
    const Mat<Rat>& k = gr_->alg->killing();
    Cyc out(0);
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i] == Cyc(0)) continue;
      for (size_t j = 0; j < y.size(); ++j) {
        if (y[j] == Cyc(0) || k(i, j) == 0) continue;
        out += x[i] * y[j] * Cyc(k(i, j), gr_->conductor);
      }
    }
    return out;
  }

  /// <v, w> = sum_n kappa(v_n, w_{-n}).
  Cyc invariant_form(const LoopElement& v, const LoopElement& w) const {
    Cyc out(0);
    for (const auto& [n, vn] : v.terms) {
      auto it = w.terms.find(-n);
      if (it == w.terms.end()) continue;
      out += killing_cyc(vn, it->second);
    }
    return out;
  }

  /// Cocycle of the central extension: <t d/dt z, z'>.
  Cyc cocycle_pairing(const LoopElement& z, const LoopElement& zp) const {
    return invariant_form(z.t_ddt(), zp);
  }

  LoopElement bracket(const LoopElement& v, const LoopElement& w) const {
    LoopElement out;
    for (const auto& [a, va] : v.terms)
      for (const auto& [b, wb] : w.terms) {
        CycVec br = gr_->alg->bracket(va, wb);
        if (vec_is_zero(br)) continue;
        auto it = out.terms.find(a + b);
        if (it == out.terms.end())
          out.terms.emplace(a + b, br);
        else
          it->second = vec_add(it->second, br);
      }
    return out.cleaned();
  }

  /// D = (m/e) t d/dt + ad(lambda_check); KMP degree-n elements are exactly
  /// the eigenvectors with eigenvalue n.
  LoopElement degree_operator(const LoopElement& v) const {
    const GradedDecomposition& g = *gr_;
    CycVec lambda(g.dim(), Cyc(0));
    for (int i = 0; i < g.alg->rs.rank; ++i) lambda[static_cast<size_t>(i)] = Cyc(g.kc.lambda_check[static_cast<size_t>(i)], g.conductor);
    LoopElement out = v.t_ddt().scaled(Cyc(static_cast<int>(g.m / g.e)));
    LoopElement ad_l;
    for (const auto& [n, vn] : v.terms) {
      CycVec br = g.alg->bracket(lambda, vn);
      if (!vec_is_zero(br)) ad_l.terms.emplace(n, br);
    }
    return out + ad_l;
  }

  /// ad(p_1) as a matrix from component i to component i+1.
  Mat<Cyc> ad_p1_matrix(const LoopElement& p1, const KmpComponent& from, const KmpComponent& to) const {
    Mat<Cyc> m(to.dim, from.dim);
    auto entries = from.basis_entries();
    for (size_t c = 0; c < entries.size(); ++c) {
      LoopElement el;
      el.terms.emplace(entries[c].first, entries[c].second);
      LoopElement img = bracket(p1, el);
      auto coords = to.coords_of(img);
      if (!coords) throw InternalError("ad(p_1) image fell outside the next KMP component");
      for (size_t r = 0; r < to.dim; ++r) m(r, c) = (*coords)[r];
    }
    return m;
  }

  /// Orthogonal decomposition a (+) c per degree, for regular semisimple X.
  HeisenbergDecomposition heisenberg(const CycVec& x, long window) const {
    const GradedDecomposition& g = *gr_;
    if (!g.is_regular_semisimple(x)) throw InputError("Heisenberg decomposition requires regular semisimple X");
    LoopElement p1 = phi_image(x);
    HeisenbergDecomposition h;
    h.window = window;
    for (long i = -window - 1; i <= window + 1; ++i) h.components.emplace(i, component(i));
    for (long i = -window; i <= window; ++i) {
      const KmpComponent& from = h.components.at(i);
      const KmpComponent& to = h.components.at(i + 1);
      const KmpComponent& prev = h.components.at(i - 1);
      Mat<Cyc> fwd = ad_p1_matrix(p1, from, to);
      Mat<Cyc> back = ad_p1_matrix(p1, prev, from);
      Mat<Cyc> ker = fwd.kernel();
      std::vector<Vec<Cyc>> krows;
      for (size_t r = 0; r < ker.rows(); ++r) krows.push_back(ker.row(r));
      h.a.emplace(i, Subspace<Cyc>::from_rows(from.dim, krows));
      std::vector<Vec<Cyc>> irows;
      for (size_t cidx = 0; cidx < prev.dim; ++cidx) {
        Vec<Cyc> col(from.dim, Cyc(0));
        for (size_t r = 0; r < from.dim; ++r) col[r] = back(r, cidx);
        irows.push_back(std::move(col));
      }
      h.c.emplace(i, Subspace<Cyc>::from_rows(from.dim, irows));
    }
    // a_i (+) c_i must span component i; orthogonality is asserted, not used.
    for (long i = -window; i <= window; ++i) {
      const auto& ai = h.a.at(i);
      const auto& ci = h.c.at(i);
      if (ai.dim() + ci.dim() != h.components.at(i).dim || ai.intersect(ci).dim() != 0)
        throw InternalError("a and c do not decompose the KMP component");
    }
    for (long i = -window; i <= window; ++i) {
      long j = -i;
      if (j < -window || j > window) continue;
      for (const LoopElement& za : h.a_basis(i))
        for (const LoopElement& zc : h.c_basis(j))
          if (!(invariant_form(za, zc) == Cyc(0)))
            throw InternalError("a and c are not orthogonal under the invariant form");
    }
    return h;
  }

 private:
  std::shared_ptr<const GradedDecomposition> gr_;
};

}  // namespace thetaconn
