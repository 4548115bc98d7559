#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N) = Q[z]/Phi_N(z).
//
// Conductors stay tiny here (N = lcm(e, m) for the session, with e <= 3 and
// m bounded by the twisted Coxeter number of the types we construct), so a
// dense coefficient vector modulo Phi_N is the right representation. For
// N <= 2 the field degree is 1 and every operation collapses to a single
// rational operation.

#include "thetaconn/rational.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

namespace thetaconn {

namespace detail {

// Integer polynomial division, exact; used only to build Phi_N.
inline std::vector<Int> zpoly_divexact(std::vector<Int> num, const std::vector<Int>& den) {
  std::vector<Int> quot(num.size() - den.size() + 1, Int(0));
  for (int d = static_cast<int>(num.size()) - 1; d + 1 >= static_cast<int>(den.size()); --d) {
    Int lead = num[static_cast<size_t>(d)];
    if (lead == 0) continue;
    if (den.back() != 1 && lead % den.back() != 0)
      throw InternalError("cyclotomic polynomial division not exact");
    Int q = lead / den.back();
    int shift = d - static_cast<int>(den.size()) + 1;
    quot[static_cast<size_t>(shift)] = q;
    for (size_t i = 0; i < den.size(); ++i)
      num[static_cast<size_t>(shift) + i] -= q * den[i];
  }
  for (const Int& c : num)
    if (c != 0) throw InternalError("cyclotomic polynomial division left a remainder");
  return quot;
}

inline std::vector<Int> cyclotomic_poly(int n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<Int> p(static_cast<size_t>(n) + 1, Int(0));
  p[0] = -1;
  p[static_cast<size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = zpoly_divexact(std::move(p), cyclotomic_poly(d));
  return p;
}

}  // namespace detail

/// Shared data for one conductor: Phi_N and reduction rows for z^k, k >= deg.
class CycField {
 public:
  int conductor;
  int degree;
  std::vector<Rat> phi;                        // monic, length degree+1
  std::vector<std::vector<Rat>> power_of_z;    // z^k mod Phi_N for k = 0 .. 2*degree-2

  static const CycField& get(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, std::unique_ptr<CycField>(new CycField(n))).first;
    return *it->second;
  }

 private:
  explicit CycField(int n) : conductor(n) {
    if (n < 1) throw InputError("conductor must be positive");
    auto zphi = detail::cyclotomic_poly(n);
    degree = static_cast<int>(zphi.size()) - 1;
    phi.assign(zphi.begin(), zphi.end());
    // Reduction table: z^k as a vector in the power basis.
    power_of_z.resize(static_cast<size_t>(2 * degree - 1));
    for (int k = 0; k < 2 * degree - 1; ++k) {
      std::vector<Rat> v(static_cast<size_t>(degree), Rat(0));
      if (k < degree) {
        v[static_cast<size_t>(k)] = 1;
      } else {
        // z^k = z * z^(k-1), then reduce the overflow coefficient.
        v = power_of_z[static_cast<size_t>(k - 1)];
        Rat top = v.back();
        for (int i = degree - 1; i > 0; --i) v[static_cast<size_t>(i)] = v[static_cast<size_t>(i - 1)];
        v[0] = 0;
        if (top != 0)
          for (int i = 0; i < degree; ++i) v[static_cast<size_t>(i)] -= top * phi[static_cast<size_t>(i)];
      }
      power_of_z[static_cast<size_t>(k)] = std::move(v);
    }
  }
};

/// One element of Q(zeta_N), as a coefficient vector in the power basis of z.
class Cyc {
 public:
  Cyc() : n_(1), c_(1, Rat(0)) {}
  Cyc(const Rat& r, int conductor = 1)
      : n_(conductor), c_(static_cast<size_t>(CycField::get(conductor).degree), Rat(0)) {
    c_[0] = r;
  }
  Cyc(int v) : Cyc(Rat(v)) {}

  static Cyc zeta(int n, long power = 1) {
    const CycField& f = CycField::get(n);
    long k = ((power % n) + n) % n;
    Cyc out(Rat(0), n);
    if (k < f.degree) {
      out.c_[static_cast<size_t>(k)] = 1;
      return out;
    }
    // z itself: the unit power-basis vector, or the rational root when
    // Phi_n is linear (n <= 2).
    Cyc z(Rat(0), n);
    if (f.degree == 1)
      z.c_[0] = -f.phi[0];
    else
      z.c_[1] = 1;
    out = Cyc(Rat(1), n);
    for (long i = 0; i < k; ++i) out = out * z;
    return out;
  }

  int conductor() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const Rat& x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  Rat rational_part() const {
    if (!is_rational()) throw InternalError("cyclotomic value is not rational: " + to_string());
    return c_[0];
  }

  /// Reinterprets the element in Q(zeta_m) for n | m.
  Cyc lifted(int m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw InternalError("cannot lift conductor");
    long step = m / n_;  // zeta_n = zeta_m^step
    Cyc out(Rat(0), m);
    for (size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      Cyc term = zeta(m, step * static_cast<long>(k));
      for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += c_[k] * term.c_[i];
    }
    return out;
  }

  friend Cyc operator+(const Cyc& a, const Cyc& b) {
    auto [x, y] = aligned(a, b);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
  }
  friend Cyc operator-(const Cyc& a, const Cyc& b) {
    auto [x, y] = aligned(a, b);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
  }
  Cyc operator-() const {
    Cyc out = *this;
    for (Rat& x : out.c_) x = -x;
    return out;
  }
  friend Cyc operator*(const Cyc& a, const Cyc& b) {
    auto [x, y] = aligned(a, b);
    const CycField& f = CycField::get(x.n_);
    int d = f.degree;
    if (d == 1) {
      x.c_[0] *= y.c_[0];
      return x;
    }
    std::vector<Rat> conv(static_cast<size_t>(2 * d - 1), Rat(0));
    for (int i = 0; i < d; ++i) {
      if (x.c_[static_cast<size_t>(i)] == 0) continue;
      for (int j = 0; j < d; ++j)
        conv[static_cast<size_t>(i + j)] += x.c_[static_cast<size_t>(i)] * y.c_[static_cast<size_t>(j)];
    }
    Cyc out(Rat(0), x.n_);
    for (int k = 0; k < 2 * d - 1; ++k) {
      if (conv[static_cast<size_t>(k)] == 0) continue;
      const auto& row = f.power_of_z[static_cast<size_t>(k)];
      for (int i = 0; i < d; ++i) out.c_[static_cast<size_t>(i)] += conv[static_cast<size_t>(k)] * row[static_cast<size_t>(i)];
    }
    return out;
  }
  friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }

  Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
  Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
  Cyc& operator/=(const Cyc& o) { return *this = *this / o; }

  friend bool operator==(const Cyc& a, const Cyc& b) {
    auto [x, y] = aligned(a, b);
    return x.c_ == y.c_;
  }
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  /// Field inverse via the extended Euclidean algorithm against Phi_N.
  Cyc inverse() const {
    if (is_zero()) throw InternalError("division by zero in Q(zeta)");
    const CycField& f = CycField::get(n_);
    if (f.degree == 1) {
      Cyc out(Rat(0), n_);
      out.c_[0] = Rat(1) / c_[0];
      return out;
    }
    using Poly = std::vector<Rat>;
    auto deg = [](const Poly& p) {
      for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<size_t>(i)] != 0) return i;
      return -1;
    };
    Poly r0 = f.phi, r1(c_.begin(), c_.end());
    Poly s0(1, Rat(0)), s1(1, Rat(1));  // coefficients of *this in r = s*this mod phi
    while (deg(r1) > 0) {
      int d1 = deg(r1);
      // One long-division pass of r0 by r1.
      Poly q(static_cast<size_t>(std::max(deg(r0) - d1 + 1, 1)), Rat(0));
      Poly rem = r0;
      for (int d = deg(rem); d >= d1; d = deg(rem)) {
        Rat coef = rem[static_cast<size_t>(d)] / r1[static_cast<size_t>(d1)];
        q[static_cast<size_t>(d - d1)] = coef;
        for (int i = 0; i <= d1; ++i) rem[static_cast<size_t>(d - d1 + i)] -= coef * r1[static_cast<size_t>(i)];
      }
      // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
      Poly s_new(std::max(s0.size(), q.size() + s1.size()), Rat(0));
      for (size_t i = 0; i < s0.size(); ++i) s_new[i] = s0[i];
      for (size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        for (size_t j = 0; j < s1.size(); ++j) s_new[i + j] -= q[i] * s1[j];
      }
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s_new);
    }
    int d1 = deg(r1);
    if (d1 != 0) throw InternalError("gcd with Phi_N is not a unit");
    Rat lead = r1[0];
    Cyc out(Rat(0), n_);
    for (size_t i = 0; i < s1.size() && i < out.c_.size() + 100; ++i) {
      if (s1[i] == 0) continue;
      if (i < out.c_.size()) {
        out.c_[i] += s1[i] / lead;
      } else {
        const auto& row = f.power_of_z.at(i);
        for (size_t j = 0; j < out.c_.size(); ++j) out.c_[j] += (s1[i] / lead) * row[j];
      }
    }
    return out;
  }

  std::string to_string() const {
    if (is_rational()) return rat_to_string(c_[0]);
    std::string s;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!first) s += " + ";
      s += rat_to_string(c_[i]);
      if (i == 1) s += "*z" + std::to_string(n_);
      if (i > 1) s += "*z" + std::to_string(n_) + "^" + std::to_string(i);
      first = false;
    }
    return s.empty() ? "0" : s;
  }

 private:
  static std::pair<Cyc, Cyc> aligned(const Cyc& a, const Cyc& b) {
    if (a.n_ == b.n_) return {a, b};
    int m = std::lcm(a.n_, b.n_);
    return {a.lifted(m), b.lifted(m)};
  }

  int n_;
  std::vector<Rat> c_;
};

inline Cyc cyc_pow(Cyc base, long e) {
  Cyc out(Rat(1), base.conductor());
  for (long i = 0; i < e; ++i) out = out * base;
  return out;
}

}  // namespace thetaconn
