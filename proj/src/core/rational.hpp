#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qts {

using Rat = mpq_class;
using Int = mpz_class;

/// Monomial exponents (q-degree, t-degree); ordered lexicographically,
/// q-degree first. This order defines term order in the wire format and
/// the canonical-sign rule for denominators.
struct QTExp {
  int dq = 0;
  int dt = 0;
  friend auto operator<=>(const QTExp&, const QTExp&) = default;
};

/// Bivariate polynomial in q,t with exact rational coefficients.
/// Terms are kept sorted by exponent; zero coefficients are never stored,
/// so the empty term list is the zero polynomial.
class QTPoly {
 public:
  using Term = std::pair<QTExp, Rat>;

  QTPoly() = default;
  explicit QTPoly(const Rat& c) {
    if (c != 0) terms_.emplace_back(QTExp{0, 0}, c);
  }
  explicit QTPoly(long c) : QTPoly(Rat(c)) {}

  static QTPoly monomial(const Rat& c, int dq, int dt);
  /// The variables themselves.
  static QTPoly q() { return monomial(1, 1, 0); }
  static QTPoly t() { return monomial(1, 0, 1); }
  static QTPoly qt() { return monomial(1, 1, 1); }
  static QTPoly one() { return QTPoly(Rat(1)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  /// Constant term (coefficient of q^0 t^0).
  Rat constant_coeff() const;
  Rat coeff(int dq, int dt) const;

  int deg_q() const;
  int deg_t() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Leading term in (deg_q, deg_t) lexicographic order.
  const Term& lex_leading() const;

  QTPoly operator-() const;
  QTPoly operator+(const QTPoly& o) const;
  QTPoly operator-(const QTPoly& o) const;
  QTPoly operator*(const QTPoly& o) const;
  QTPoly& operator+=(const QTPoly& o) { return *this = *this + o; }
  QTPoly& operator-=(const QTPoly& o) { return *this = *this - o; }
  QTPoly& operator*=(const QTPoly& o) { return *this = *this * o; }
  QTPoly scaled(const Rat& c) const;
  QTPoly pow(unsigned e) const;

  friend bool operator==(const QTPoly& a, const QTPoly& b) {
    return a.terms_ == b.terms_;
  }

  /// q -> q^j, t -> t^j on exponents (the coefficient ring is fixed).
  QTPoly adams(unsigned j) const;

  /// Full evaluation at exact rational points.
  Rat eval(const Rat& q0, const Rat& t0) const;
  /// Partial evaluation of one variable; the result is a polynomial in the
  /// other variable only.
  QTPoly eval_q(const Rat& q0) const;
  QTPoly eval_t(const Rat& t0) const;

  /// Rational content: the positive rational c such that (*this)/c has
  /// coprime integer coefficients. Zero polynomial has content 0.
  Rat rational_content() const;

  /// Exact division; throws std::domain_error when the division is inexact.
  QTPoly divexact(const QTPoly& d) const;

  /// GCD over Q[q][t] via content/primitive split in t and a primitive
  /// pseudo-remainder sequence; result is integer-primitive with positive
  /// lexicographically-leading coefficient. gcd(0,0) = 0.
  static QTPoly gcd(const QTPoly& a, const QTPoly& b);

  /// Canonical text: terms ascending in (deg_q, deg_t) lex order, exact
  /// integer or a/b coefficients, e.g. "1 - q*t + 2*q^2".
  std::string text() const;
  static QTPoly parse(const std::string& s);

  std::size_t hash() const;

  /// Construction from raw sorted unique terms (internal fast path).
  static QTPoly from_sorted_terms(std::vector<Term> terms);

 private:
  std::vector<Term> terms_;  // sorted ascending by QTExp, no zero coeffs
};

/// Reduced fraction of two QTPoly.
/// Invariants: den is never zero; gcd(num,den) is constant; den's
/// lexicographically-leading coefficient is positive; zero is 0/1;
/// den is normalized integer-primitive.
class QTRatio {
 public:
  QTRatio() : num_(), den_(QTPoly::one()) {}
  QTRatio(long c) : num_(Rat(c)), den_(QTPoly::one()) {}
  explicit QTRatio(const Rat& c) : num_(c), den_(QTPoly::one()) {}
  explicit QTRatio(QTPoly p) : num_(std::move(p)), den_(QTPoly::one()) {}
  QTRatio(QTPoly num, QTPoly den);

  static QTRatio q() { return QTRatio(QTPoly::q()); }
  static QTRatio t() { return QTRatio(QTPoly::t()); }
  static QTRatio qt() { return QTRatio(QTPoly::qt()); }
  /// M = (1-t)(1-q).
  static QTRatio M();
  /// Mtilde = (1-1/t)(1-1/q) = M/(qt).
  static QTRatio Mtilde();

  const QTPoly& num() const { return num_; }
  const QTPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  QTRatio operator-() const;
  QTRatio operator+(const QTRatio& o) const;
  QTRatio operator-(const QTRatio& o) const;
  QTRatio operator*(const QTRatio& o) const;
  QTRatio operator/(const QTRatio& o) const;
  QTRatio& operator+=(const QTRatio& o) { return *this = *this + o; }
  QTRatio& operator-=(const QTRatio& o) { return *this = *this - o; }
  QTRatio& operator*=(const QTRatio& o) { return *this = *this * o; }
  QTRatio& operator/=(const QTRatio& o) { return *this = *this / o; }
  QTRatio inverse() const;
  /// Integer power; negative exponents invert (nonzero input required).
  QTRatio pow(int e) const;

  friend bool operator==(const QTRatio& a, const QTRatio& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// q -> q^j, t -> t^j.
  QTRatio adams(unsigned j) const;

  /// Exact evaluation; throws std::domain_error if the reduced denominator
  /// vanishes at the point (a genuine pole).
  Rat eval(const Rat& q0, const Rat& t0) const;
  /// Partial specialization q = q0 (resp. t = t0) keeping the other
  /// variable; same pole rule.
  QTRatio eval_q(const Rat& q0) const;
  QTRatio eval_t(const Rat& t0) const;

  /// Wire format: "num" when den = 1, otherwise "(num)/(den)".
  std::string text() const;
  static QTRatio parse(const std::string& s);

  std::size_t hash() const;

 private:
  void reduce_();
  void canonical_scale_();
  QTPoly num_;
  QTPoly den_;
};

inline QTRatio operator*(const Rat& c, const QTRatio& r) {
  return QTRatio(c) * r;
}

}  // namespace qts

template <>
struct std::hash<qts::QTRatio> {
  std::size_t operator()(const qts::QTRatio& r) const { return r.hash(); }
};
