#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/rational.hpp"

using namespace qts;

namespace {

/// Deterministic random QTRatio generator for property tests.
struct Rng {
  std::mt19937 g{20260814};
  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(g);
  }
  QTPoly poly(int max_deg = 3, int max_terms = 4) {
    QTPoly p;
    int n = uniform(1, max_terms);
    for (int i = 0; i < n; ++i) {
      p += QTPoly::monomial(Rat(uniform(-5, 5)), uniform(0, max_deg),
                            uniform(0, max_deg));
    }
    return p;
  }
  QTPoly nonzero_poly() {
    for (;;) {
      QTPoly p = poly();
      if (!p.is_zero()) return p;
    }
  }
  QTRatio ratio() { return QTRatio(poly(), nonzero_poly()); }
  QTRatio nonzero_ratio() {
    for (;;) {
      QTRatio r = ratio();
      if (!r.is_zero()) return r;
    }
  }
};

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  QTPoly q = QTPoly::q(), t = QTPoly::t();
  QTPoly m = (QTPoly::one() - t) * (QTPoly::one() - q);
  CHECK(m == QTPoly::parse("1 - q - t + q*t"));
  CHECK(m.text() == "1 - t - q + q*t");
  CHECK((m - m).is_zero());
  CHECK(m.coeff(1, 1) == 1);
  CHECK(m.coeff(1, 0) == -1);
  CHECK(m.deg_q() == 1);
  CHECK(m.deg_t() == 1);
}

TEST_CASE("qt-analogue of 3 evaluates to 3 at q=t=1") {
  // [3]_{qt} = 1 + qt + q^2 t^2.
  QTRatio one_minus_qt3 =
      QTRatio(QTPoly::one() - QTPoly::qt().pow(3), QTPoly::one() - QTPoly::qt());
  CHECK(one_minus_qt3.is_polynomial());
  CHECK(one_minus_qt3 == QTRatio(QTPoly::parse("1 + q*t + q^2*t^2")));
  CHECK(one_minus_qt3.eval(1, 1) == 3);
}

TEST_CASE("specialization and poles") {
  QTRatio r(QTPoly::one() - QTPoly::q(), QTPoly::one() - QTPoly::t());
  CHECK(r.eval(1, 2) == 0);
  CHECK_THROWS_AS(r.eval(2, 1), std::domain_error);
  // (1-q)/(1-q) reduces, so q=1 is not a pole.
  QTRatio s(QTPoly::one() - QTPoly::q(), QTPoly::one() - QTPoly::q());
  CHECK(s.is_one());
  CHECK(s.eval(1, 1) == 1);
}

TEST_CASE("omega kernel factors at qt=1") {
  // Numerator factors of the Omega[-uM] closed form, (1-u)(1-qtu), have
  // unit u-coefficient ratios when qt=1: both factors become (1-u).
  QTRatio qt = QTRatio::qt();
  QTRatio coeff_u = -qt;  // u-coefficient of (1-qtu)
  CHECK(coeff_u.eval(1, 1) == -1);
  CHECK(coeff_u.eval_q(Rat(1)).eval(1, 1) == -1);
}

TEST_CASE("Mtilde equals M/(qt)") {
  QTRatio mt = QTRatio::Mtilde();
  CHECK(mt == QTRatio::M() / QTRatio::qt());
  CHECK(mt.den() == QTPoly::qt());
}

TEST_CASE("canonical denominator sign") {
  // 1/(t-1) must normalize so den's lex-leading coefficient is positive:
  // lex order is (deg_q, deg_t), so the leading term of t-1 is t (coeff +1).
  QTRatio r(QTPoly::one(), QTPoly::t() - QTPoly::one());
  CHECK(r.den() == QTPoly::parse("t") - QTPoly::one());
  QTRatio neg(QTPoly::one(), QTPoly::one() - QTPoly::t());
  CHECK(neg.den() == QTPoly::parse("t") - QTPoly::one());
  CHECK(neg.num() == -QTPoly::one());
  // Denominator is integer-primitive: 1/(2-2t) pushes the 1/2 into num.
  QTRatio half(QTPoly::one(), QTPoly::parse("2") - QTPoly::parse("2*t"));
  CHECK(half.den() == QTPoly::parse("t") - QTPoly::one());
  CHECK(half.num() == QTPoly(Rat(-1, 2)));
}

TEST_CASE("field axioms on random samples") {
  Rng rng;
  for (int trial = 0; trial < 40; ++trial) {
    QTRatio a = rng.ratio(), b = rng.ratio(), c = rng.ratio();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    QTRatio nz = rng.nonzero_ratio();
    CHECK(nz * nz.inverse() == QTRatio(1));
    CHECK(a - a == QTRatio(0));
  }
}

TEST_CASE("canonical form soundness") {
  Rng rng;
  for (int trial = 0; trial < 40; ++trial) {
    QTRatio a = rng.ratio(), b = rng.ratio(), c = rng.ratio();
    // Products reduced pairwise agree with the triple product.
    CHECK((a * b) * c == a * (b * c));
    // A ratio rebuilt from scaled num/den is unchanged.
    if (!a.is_zero()) {
      QTPoly s = rng.nonzero_poly();
      CHECK(QTRatio(a.num() * s, a.den() * s) == a);
    }
  }
}

TEST_CASE("adams composes multiplicatively") {
  Rng rng;
  for (int trial = 0; trial < 25; ++trial) {
    QTRatio r = rng.ratio();
    CHECK(r.adams(2).adams(3) == r.adams(6));
    CHECK(r.adams(1) == r);
  }
  CHECK(QTRatio::M().adams(2) ==
        QTRatio(QTPoly::parse("1 - q^2 - t^2 + q^2*t^2")));
}

TEST_CASE("gcd and exact division") {
  Rng rng;
  for (int trial = 0; trial < 30; ++trial) {
    QTPoly a = rng.nonzero_poly(), b = rng.nonzero_poly(),
           g = rng.nonzero_poly();
    QTPoly ag = a * g, bg = b * g;
    QTPoly d = QTPoly::gcd(ag, bg);
    // g divides the gcd; the gcd divides both products.
    CHECK_NOTHROW(d.divexact(QTPoly::gcd(d, g)));
    CHECK(ag.divexact(d) * d == ag);
    CHECK(bg.divexact(d) * d == bg);
    QTPoly gg = QTPoly::gcd(d, g);
    CHECK(QTPoly::gcd(g, gg) == gg);  // g's normalization divides d
    CHECK(d.divexact(gg) * gg == d);
  }
}

TEST_CASE("wire format round-trips") {
  Rng rng;
  for (int trial = 0; trial < 30; ++trial) {
    QTRatio r = rng.ratio();
    CHECK(QTRatio::parse(r.text()) == r);
  }
  CHECK(QTRatio::parse("0").is_zero());
  CHECK(QTRatio::parse("(1 - q)/(t - 1)").text() == "(1 - q)/(-1 + t)");
  CHECK(QTRatio::parse("1/2*q*t + 3").text() == "3 + 1/2*q*t");
}

TEST_CASE("pow handles negative exponents") {
  QTRatio qt = QTRatio::qt();
  CHECK(qt.pow(-2) * qt.pow(2) == QTRatio(1));
  CHECK(qt.pow(0) == QTRatio(1));
  QTRatio m = QTRatio::M();
  CHECK(m.pow(-1) == m.inverse());
}
