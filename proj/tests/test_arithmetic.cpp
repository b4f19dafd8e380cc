#include <doctest.h>

#include <cmath>
#include <vector>

#include "qps/errors.hpp"
#include "qps/fixed_frac.hpp"
#include "qps/frequency.hpp"

using namespace qps;

namespace {
constexpr double kGolden = 0.61803398874989484820;  // (sqrt(5)-1)/2
}

TEST_CASE("fixed point holds normal doubles exactly") {
  FixedFrac f = FixedFrac::from_double(0.375);
  CHECK(f.to_double() == 0.375);
  CHECK(f.times_int_mod1(BigInt(3)).to_double() == 0.125);
  CHECK(f.times_int_mod1(BigInt(-1)).to_double() == 0.625);
  CHECK(f.dist_to_double() == 0.375);
  FixedFrac g = FixedFrac::from_double(0.75);
  CHECK(g.dist_to_double() == 0.25);
  CHECK(FixedFrac::from_ratio(BigInt(1), BigInt(3), 192).to_double() ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("golden and sqrt2 frequencies carry their quotients") {
  Frequency g = Frequency::golden();
  REQUIRE(g.levels() == 40);
  for (const BigInt& a : g.quotients()) CHECK(a == 1);
  CHECK(g.value() == doctest::Approx(kGolden).epsilon(1e-15));

  Frequency s = Frequency::sqrt2();
  for (const BigInt& a : s.quotients()) CHECK(a == 2);
  CHECK(s.value() == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-15));
}

TEST_CASE("continued-fraction expansion recovers quotients and flags rationals") {
  std::vector<BigInt> as = expand_continued_fraction(FixedFrac::from_double(kGolden), 12);
  REQUIRE(as.size() == 12);
  for (const BigInt& a : as) CHECK(a == 1);

  CHECK_THROWS_AS(Frequency::from_double(0.15625), RationalDetected);
  CHECK_THROWS_AS(Frequency::from_double(0.5), RationalDetected);
}

TEST_CASE("convergents satisfy the integer recurrences") {
  Frequency g = Frequency::golden();
  std::vector<Convergent> cv = convergents(g, 5);
  REQUIRE(cv.size() == 5);
  long want_q[] = {1, 2, 3, 5, 8};
  long want_p[] = {1, 1, 2, 3, 5};
  for (int i = 0; i < 5; ++i) {
    CHECK(cv[i].q == want_q[i]);
    CHECK(cv[i].p == want_p[i]);
    CHECK(cv[i].index == i + 1);
  }

  Frequency s = Frequency::from_quotients({BigInt(2), BigInt(2), BigInt(2), BigInt(2)});
  std::vector<Convergent> sv = convergents(s, 4);
  long want_sq[] = {2, 5, 12, 29};
  for (int i = 0; i < 4; ++i) CHECK(sv[i].q == want_sq[i]);

  // Cross identity p_{n+1} q_n - p_n q_{n+1} = +-1.
  for (int i = 1; i < 4; ++i) {
    BigInt cross = sv[i].p * sv[i - 1].q - sv[i - 1].p * sv[i].q;
    CHECK((cross == 1 || cross == -1));
  }
}

TEST_CASE("torus norm matches the golden-mean distances") {
  Frequency g = Frequency::golden();
  CHECK(torus_norm(1, g) == doctest::Approx(1.0 - kGolden).epsilon(1e-12));
  CHECK(torus_norm(2, g) == doctest::Approx(2.0 * kGolden - 1.0).epsilon(1e-12));

  // Denominator distances land in (1/(2 q_{n+1}), 1/q_{n+1}).
  std::vector<Convergent> cv = convergents(g, 12);
  for (int n = 0; n + 1 < 12; ++n) {
    double d = torus_norm(cv[n].q, g);
    double qn1 = static_cast<double>(cv[n + 1].q);
    CHECK(d > 1.0 / (2.0 * qn1));
    CHECK(d < 1.0 / qn1);
  }
}

TEST_CASE("torus norm guards fixed-point precision") {
  Frequency g = Frequency::golden();
  CHECK_THROWS_AS(torus_norm(BigInt(1) << 170, g), PrecisionExhausted);
}

TEST_CASE("beta sequence matches log(q_{n+1}) / q_n") {
  Frequency g = Frequency::from_quotients(
      {BigInt(1), BigInt(1), BigInt(1), BigInt(1), BigInt(1), BigInt(1), BigInt(9)});
  std::vector<Convergent> cv = convergents(g, g.levels());
  BetaSequence bs = beta_sequence(g);
  REQUIRE(static_cast<int>(bs.entries.size()) == g.levels() - 1);
  for (const auto& e : bs.entries) {
    double want = log_big(cv[static_cast<size_t>(e.n)].q) /
                  static_cast<double>(cv[static_cast<size_t>(e.n - 1)].q);
    CHECK(e.beta == doctest::Approx(want).epsilon(1e-12));
  }
  CHECK(bs.limsup_estimate > 0.0);
}

TEST_CASE("liouville constructor hits the beta target and the budget guard") {
  Frequency li = make_liouville(1.0, 3);
  // Seed 2 forces quotients [2, 4, 901]: q = 2, 9, 8111.
  std::vector<Convergent> cv = convergents(li, 3);
  CHECK(cv[1].q == 9);
  CHECK(cv[2].q == 8111);
  BetaSequence bs = beta_sequence(li);
  CHECK(bs.entries.back().beta == doctest::Approx(1.0).epsilon(2e-2));

  CHECK_THROWS_AS(make_liouville(3.0, 12), BudgetExceeded);
}

TEST_CASE("lattice identity |q_{n-1} w| = a_{n+1} |q_n w| + |q_{n+1} w|") {
  for (const Frequency& om : {Frequency::golden(), Frequency::sqrt2(),
                              Frequency::from_quotients({BigInt(3), BigInt(1), BigInt(4),
                                                         BigInt(1), BigInt(5), BigInt(9),
                                                         BigInt(2), BigInt(6)})}) {
    int levels = om.levels() > 12 ? 12 : om.levels();
    std::vector<Convergent> cv = convergents(om, levels);
    for (int n = 2; n + 1 <= levels; ++n) {
      FixedFrac d_prev = torus_dist_exact(cv[static_cast<size_t>(n - 2)].q, om);
      FixedFrac d_n = torus_dist_exact(cv[static_cast<size_t>(n - 1)].q, om);
      FixedFrac d_next = torus_dist_exact(cv[static_cast<size_t>(n)].q, om);
      BigInt diff = om.quotients()[static_cast<size_t>(n)] * d_n.numerator() +
                    d_next.numerator() - d_prev.numerator();
      CHECK(std::abs(ratio_to_double(diff, d_n.bits())) <= 1e-25);
    }
  }
}

TEST_CASE("convergent denominators are best approximations") {
  Frequency g = Frequency::golden();
  std::vector<Convergent> cv = convergents(g, 10);
  for (int n = 1; n < 10; ++n) {
    if (cv[static_cast<size_t>(n)].q > 200) break;
    BigInt best = torus_dist_exact(cv[static_cast<size_t>(n - 1)].q, g).numerator();
    for (BigInt j = 1; j < cv[static_cast<size_t>(n)].q; ++j)
      CHECK(torus_dist_exact(j, g).numerator() >= best);
  }
}

TEST_CASE("fejer multiplier: normalization, closed form at Q=2, pointwise bound") {
  Frequency g = Frequency::golden();
  CHECK(fejer(7, BigInt(0), g) == 1.0);

  // F_2(k) = (1 + cos(2 pi k omega)) / 2.
  for (long k = 1; k <= 20; ++k) {
    double want = 0.5 * (1.0 + std::cos(2.0 * M_PI * torus_norm(k, g)));
    CHECK(fejer(2, BigInt(k), g) == doctest::Approx(want).epsilon(1e-12));
  }

  for (long q : {55L, 89L}) {
    for (long k = 1; k <= 500; ++k) {
      double f = fejer(q, BigInt(k), g);
      double t = torus_norm(k, g);
      double cap = std::min(1.0, 2.0 / (1.0 + static_cast<double>(q) * static_cast<double>(q) * t * t));
      CHECK(f >= -1e-12);
      CHECK(f <= cap + 1e-12);
    }
  }
}

TEST_CASE("fejer kernel kills every non-resonant mode at large Q") {
  Frequency g = Frequency::golden();
  // Q = 296 as used at scale m = 987, delta = 0.3: all modes below q_n = 55
  // (including k = 1) are crushed, resonant ones survive only near 1/Q.
  for (long k = 1; k < 55; ++k) CHECK(fejer(296, BigInt(k), g) < 0.05);
}

TEST_CASE("from_quotients pins the value between its convergents") {
  Frequency f = Frequency::from_quotients({BigInt(1), BigInt(2), BigInt(3), BigInt(4)});
  // Convergents: 1/1, 2/3, 7/10, 30/43; the golden-tail completion lies
  // strictly between the last two.
  CHECK(f.value() > 30.0 / 43.0 - 1e-15);
  CHECK(f.value() < 7.0 / 10.0 + 1e-15);
  std::vector<Convergent> cv = convergents(f, 4);
  CHECK(cv[3].p == 30);
  CHECK(cv[3].q == 43);
}
