#pragma once

// Root systems of the simple types A..G, rank <= 8, generated by reflection
// closure from the Cartan matrix. Roots are integer coordinate vectors in
// the simple-root basis; positives come first, sorted by height then
// lexicographically, and the negative of positives[k] sits at k + #positives.

#include "thetaconn/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace thetaconn {

using RootVec = std::vector<int>;

inline int root_height(const RootVec& r) {
  int h = 0;
  for (int x : r) h += x;
  return h;
}

class RootSystem {
 public:
  char series;
  int rank;
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = alpha_j(alpha_i^vee)
  std::vector<int> symmetrizer;          // d_i with d_i*cartan[i][j] symmetric
  std::vector<RootVec> roots;            // positives then negatives
  size_t num_positive;
  RootVec highest_root;
  std::vector<int> marks;

  static RootSystem build(char series, int rank);

  size_t size() const { return roots.size(); }

  int root_index(const RootVec& r) const {
    auto it = index_.find(r);
    if (it == index_.end()) return -1;
    return it->second;
  }
  bool is_root(const RootVec& r) const { return index_.count(r) > 0; }
  int negative_of(int idx) const {
    return idx < static_cast<int>(num_positive) ? idx + static_cast<int>(num_positive)
                                                : idx - static_cast<int>(num_positive);
  }
  bool is_positive(int idx) const { return idx < static_cast<int>(num_positive); }

  /// alpha(alpha_i^vee) for alpha given by coordinates.
  int pairing_with_simple_coroot(const RootVec& r, int i) const {
    int v = 0;
    for (int j = 0; j < rank; ++j) v += r[static_cast<size_t>(j)] * cartan[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return v;
  }

  RootVec reflect(const RootVec& r, int i) const {
    RootVec out = r;
    out[static_cast<size_t>(i)] -= pairing_with_simple_coroot(r, i);
    return out;
  }

  /// Symmetrized bilinear form (alpha, beta) = sum m_i m'_j d_i a_ij.
  long bilinear(const RootVec& a, const RootVec& b) const {
    long v = 0;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        v += static_cast<long>(a[static_cast<size_t>(i)]) * b[static_cast<size_t>(j)] *
             symmetrizer[static_cast<size_t>(i)] * cartan[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return v;
  }
  long norm2(const RootVec& a) const { return bilinear(a, a); }

  /// Down-string length: largest p with beta - p*alpha a root.
  int string_down(const RootVec& alpha, const RootVec& beta) const {
    int p = 0;
    RootVec cur = beta;
    for (;;) {
      for (int i = 0; i < rank; ++i) cur[static_cast<size_t>(i)] -= alpha[static_cast<size_t>(i)];
      if (!is_root(cur)) break;
      ++p;
    }
    return p;
  }

  /// Coroot alpha^vee as integer coordinates in the simple-coroot basis.
  std::vector<int> coroot_coords(const RootVec& alpha) const {
    long da = norm2(alpha) / 2;
    std::vector<int> c(static_cast<size_t>(rank));
    for (int i = 0; i < rank; ++i) {
      long num = static_cast<long>(alpha[static_cast<size_t>(i)]) * symmetrizer[static_cast<size_t>(i)];
      if (num % da != 0) throw InternalError("coroot coordinates not integral");
      c[static_cast<size_t>(i)] = static_cast<int>(num / da);
    }
    return c;
  }

 private:
  std::map<RootVec, int> index_;

  void finalize();
};

inline std::vector<std::vector<int>> cartan_matrix(char series, int rank) {
  auto chain = [&](int n) {
    std::vector<std::vector<int>> a(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) a[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
    for (int i = 0; i + 1 < n; ++i) {
      a[static_cast<size_t>(i)][static_cast<size_t>(i + 1)] = -1;
      a[static_cast<size_t>(i + 1)][static_cast<size_t>(i)] = -1;
    }
    return a;
  };
  auto invalid = [&]() {
    return InputError(std::string("invalid simple type: ") + series + std::to_string(rank));
  };
  if (rank < 1 || rank > 8) throw invalid();
  switch (series) {
    case 'A':
      return chain(rank);
    case 'B': {
      if (rank < 2) throw invalid();
      auto a = chain(rank);
      a[static_cast<size_t>(rank - 1)][static_cast<size_t>(rank - 2)] = -2;
      return a;
    }
    case 'C': {
      if (rank < 2) throw invalid();
      auto a = chain(rank);
      a[static_cast<size_t>(rank - 2)][static_cast<size_t>(rank - 1)] = -2;
      return a;
    }
    case 'D': {
      if (rank < 4) throw invalid();
      auto a = chain(rank);
      // detach node rank-1 from the chain end, attach both rank-1 and rank to rank-2
      a[static_cast<size_t>(rank - 2)][static_cast<size_t>(rank - 1)] = 0;
      a[static_cast<size_t>(rank - 1)][static_cast<size_t>(rank - 2)] = 0;
      a[static_cast<size_t>(rank - 3)][static_cast<size_t>(rank - 1)] = -1;
      a[static_cast<size_t>(rank - 1)][static_cast<size_t>(rank - 3)] = -1;
      return a;
    }
    case 'E': {
      if (rank < 6) throw invalid();
      // Bourbaki: chain 1-3-4-5-...-rank, node 2 attached to 4.
      std::vector<std::vector<int>> a(static_cast<size_t>(rank), std::vector<int>(static_cast<size_t>(rank), 0));
      for (int i = 0; i < rank; ++i) a[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
      auto link = [&](int i, int j) {
        a[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = -1;
        a[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)] = -1;
      };
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < rank; ++i) link(i, i + 1);
      return a;
    }
    case 'F': {
      if (rank != 4) throw invalid();
      auto a = chain(4);
      a[2][1] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      return a;
    }
    case 'G': {
      if (rank != 2) throw invalid();
      return {{2, -1}, {-3, 2}};  // alpha_1 long, alpha_2 short
    }
    default:
      throw invalid();
  }
}

inline RootSystem RootSystem::build(char series, int rank) {
  RootSystem rs;
  rs.series = series;
  rs.rank = rank;
  rs.cartan = cartan_matrix(series, rank);

  // Symmetrizer d_i: propagate length ratios along edges, then clear denominators.
  std::vector<Rat> d(static_cast<size_t>(rank), Rat(0));
  d[0] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) {
        if (i == j || rs.cartan[static_cast<size_t>(i)][static_cast<size_t>(j)] == 0) continue;
        if (d[static_cast<size_t>(i)] != 0 && d[static_cast<size_t>(j)] == 0) {
          d[static_cast<size_t>(j)] = d[static_cast<size_t>(i)] * Rat(rs.cartan[static_cast<size_t>(i)][static_cast<size_t>(j)]) /
                                      Rat(rs.cartan[static_cast<size_t>(j)][static_cast<size_t>(i)]);
          changed = true;
        }
      }
  }
  Int lcm_den = 1;
  for (const Rat& x : d) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  rs.symmetrizer.resize(static_cast<size_t>(rank));
  Int gcd_all = 0;
  std::vector<Int> di(static_cast<size_t>(rank));
  for (int i = 0; i < rank; ++i) {
    di[static_cast<size_t>(i)] = numerator(d[static_cast<size_t>(i)]) * (lcm_den / denominator(d[static_cast<size_t>(i)]));
    gcd_all = boost::multiprecision::gcd(gcd_all, di[static_cast<size_t>(i)]);
  }
  for (int i = 0; i < rank; ++i) rs.symmetrizer[static_cast<size_t>(i)] = static_cast<int>(di[static_cast<size_t>(i)] / gcd_all);

  // Reflection closure from the simple roots.
  std::set<RootVec> seen;
  std::vector<RootVec> queue;
  for (int i = 0; i < rank; ++i) {
    RootVec a(static_cast<size_t>(rank), 0);
    a[static_cast<size_t>(i)] = 1;
    seen.insert(a);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    RootVec r = queue.back();
    queue.pop_back();
    for (int i = 0; i < rank; ++i) {
      RootVec s = rs.reflect(r, i);
      if (seen.insert(s).second) queue.push_back(s);
    }
  }
  std::vector<RootVec> pos, neg;
  for (const RootVec& r : seen) (root_height(r) > 0 ? pos : neg).push_back(r);
  auto by_height_lex = [](const RootVec& a, const RootVec& b) {
    int ha = root_height(a), hb = root_height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  };
  std::sort(pos.begin(), pos.end(), by_height_lex);
  rs.roots = pos;
  for (const RootVec& r : pos) {
    RootVec m = r;
    for (int& x : m) x = -x;
    rs.roots.push_back(m);
  }
  rs.num_positive = pos.size();
  rs.highest_root = pos.back();
  rs.marks = rs.highest_root;
  rs.finalize();
  return rs;
}

inline void RootSystem::finalize() {
  index_.clear();
  for (size_t i = 0; i < roots.size(); ++i) index_[roots[i]] = static_cast<int>(i);
}

}  // namespace thetaconn
