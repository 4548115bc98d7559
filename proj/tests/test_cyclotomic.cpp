#include "thetaconn/cyclotomic.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace thetaconn;

TEST_CASE("cyclotomic polynomial degrees") {
  CHECK(CycField::get(1).degree == 1);
  CHECK(CycField::get(2).degree == 1);
  CHECK(CycField::get(3).degree == 2);
  CHECK(CycField::get(4).degree == 2);
  CHECK(CycField::get(6).degree == 2);
  CHECK(CycField::get(12).degree == 4);
  // Phi_12 = x^4 - x^2 + 1
  const auto& f = CycField::get(12);
  CHECK(f.phi == std::vector<Rat>{1, 0, -1, 0, 1});
}

TEST_CASE("zeta is a primitive root of unity") {
  for (int n : {1, 2, 3, 4, 6, 12}) {
    Cyc z = Cyc::zeta(n);
    CHECK(cyc_pow(z, n) == Cyc(1, n));
    for (int d = 1; d < n; ++d)
      if (n % d == 0) CHECK(!(cyc_pow(z, d) == Cyc(1, n)));
  }
}

TEST_CASE("field arithmetic is exact") {
  std::mt19937_64 rng(2024);
  for (int n : {2, 3, 6, 12}) {
    int deg = CycField::get(n).degree;
    int trials = 0;
    while (trials < 100) {
      Cyc a(Rat(0), n), b(Rat(0), n);
      for (int d = 0; d < deg; ++d) {
        a += Cyc(Rat(static_cast<long>(rng() % 19) - 9), n) * Cyc::zeta(n, d);
        b += Cyc(Rat(static_cast<long>(rng() % 19) - 9), n) * Cyc::zeta(n, d);
      }
      if (b.is_zero()) continue;
      ++trials;
      CHECK((a * b) / b == a);
      CHECK(b * b.inverse() == Cyc(1, n));
    }
  }
}

TEST_CASE("rational embedding is the constant coefficient") {
  Cyc half(Rat(1, 2), 6);
  CHECK(half.is_rational());
  CHECK(half.rational_part() == Rat(1, 2));
  CHECK(half + half == Cyc(1, 6));
}

TEST_CASE("conductor lifting is compatible with arithmetic") {
  Cyc z3 = Cyc::zeta(3);
  Cyc z6 = Cyc::zeta(6);
  // zeta_3 = zeta_6^2
  CHECK(z3.lifted(6) == cyc_pow(z6, 2));
  CHECK(z3 * z6 == cyc_pow(z6, 3));        // mixed conductors align to 6
  CHECK(cyc_pow(z6, 3) == Cyc(-1, 6));     // zeta_6^3 = -1
}

TEST_CASE("zeta_2 collapses to -1") {
  CHECK(Cyc::zeta(2) == Cyc(-1));
  CHECK(Cyc::zeta(2, 5) == Cyc(-1));
  CHECK(Cyc::zeta(1, 3) == Cyc(1));
}
