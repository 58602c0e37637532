#include "rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qts {

namespace {

Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

/// gcd of rationals: (gcd of numerators)/(lcm of denominators); positive.
Rat rat_gcd(const Rat& a, const Rat& b) {
  if (a == 0) return rat_abs(b);
  if (b == 0) return rat_abs(a);
  Int gn, ld;
  mpz_gcd(gn.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
  mpz_lcm(ld.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  return Rat(gn, ld);
}

Rat rat_pow(const Rat& x, unsigned e) {
  Rat r(1), base(x);
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

std::size_t rat_hash(const Rat& x) {
  std::size_t h = mpz_fdiv_ui(x.get_num().get_mpz_t(), 4294967291u);
  h = h * 1099511628211ull + mpz_fdiv_ui(x.get_den().get_mpz_t(), 4294967291u);
  if (x < 0) h = ~h;
  return h;
}

/// Dense univariate polynomial over Q, used for the q-direction of the
/// gcd computation. Index = q-degree.
using UPoly = std::vector<Rat>;

void uni_trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int uni_deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly uni_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  uni_trim(r);
  return r;
}

UPoly uni_scaled(UPoly a, const Rat& c) {
  if (c == 0) return {};
  for (auto& x : a) x *= c;
  return a;
}

/// Remainder of a by b (monic Euclid step chain), over Q.
UPoly uni_rem(UPoly a, const UPoly& b) {
  while (uni_deg(a) >= uni_deg(b) && !a.empty()) {
    Rat f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    uni_trim(a);
  }
  return a;
}

Rat uni_content(const UPoly& p) {
  Rat c(0);
  for (const auto& x : p) c = rat_gcd(c, x);
  return c;
}

/// Integer-primitive, positive-leading normalization.
UPoly uni_normalize(UPoly p) {
  uni_trim(p);
  if (p.empty()) return p;
  Rat c = uni_content(p);
  if (p.back() < 0) c = -c;
  for (auto& x : p) x /= c;
  return p;
}

UPoly uni_gcd(UPoly a, UPoly b) {
  uni_trim(a);
  uni_trim(b);
  while (!b.empty()) {
    UPoly r = uni_rem(a, b);
    // Keep coefficients tame between steps.
    r = uni_normalize(std::move(r));
    a = std::move(b);
    b = std::move(r);
  }
  return uni_normalize(std::move(a));
}

/// Exact division over Q[q]; throws on inexact division.
UPoly uni_divexact(UPoly a, const UPoly& b) {
  if (b.empty()) throw std::domain_error("uni_divexact: division by zero");
  if (a.empty()) return {};
  if (a.size() < b.size())
    throw std::domain_error("uni_divexact: inexact division");
  UPoly qout(a.size() - b.size() + 1, Rat(0));
  while (uni_deg(a) >= uni_deg(b) && !a.empty()) {
    Rat f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    qout[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    uni_trim(a);
  }
  if (!a.empty()) throw std::domain_error("uni_divexact: inexact division");
  return qout;
}

/// View of a QTPoly as a polynomial in t with UPoly (Q[q]) coefficients.
/// Index = t-degree; absent entries are zero.
using TRec = std::map<int, UPoly>;

TRec to_trec(const QTPoly& p) {
  TRec r;
  for (const auto& [e, c] : p.terms()) {
    UPoly& u = r[e.dt];
    if (static_cast<int>(u.size()) <= e.dq) u.resize(e.dq + 1, Rat(0));
    u[e.dq] = c;
  }
  return r;
}

QTPoly from_trec(const TRec& r) {
  std::vector<QTPoly::Term> terms;
  for (const auto& [dt, u] : r)
    for (std::size_t dq = 0; dq < u.size(); ++dq)
      if (u[dq] != 0) terms.push_back({QTExp{static_cast<int>(dq), dt}, u[dq]});
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return QTPoly::from_sorted_terms(std::move(terms));
}

void trec_trim(TRec& r) {
  for (auto it = r.begin(); it != r.end();) {
    uni_trim(it->second);
    if (it->second.empty())
      it = r.erase(it);
    else
      ++it;
  }
}

int trec_deg(const TRec& r) { return r.empty() ? -1 : r.rbegin()->first; }

const UPoly& trec_lc(const TRec& r) { return r.rbegin()->second; }

TRec trec_add(const TRec& a, const TRec& b) {
  TRec r = a;
  for (const auto& [dt, u] : b) {
    UPoly& dst = r[dt];
    if (dst.size() < u.size()) dst.resize(u.size(), Rat(0));
    for (std::size_t i = 0; i < u.size(); ++i) dst[i] += u[i];
  }
  trec_trim(r);
  return r;
}

TRec trec_mul_uni(const TRec& a, const UPoly& u, int tshift) {
  TRec r;
  if (u.empty()) return r;
  for (const auto& [dt, c] : a) r[dt + tshift] = uni_mul(c, u);
  trec_trim(r);
  return r;
}

/// Content in t: gcd over Q[q] of all t-coefficients.
UPoly trec_content(const TRec& r) {
  UPoly c;
  for (const auto& [dt, u] : r) {
    c = uni_gcd(c, u);
    if (uni_deg(c) == 0) break;
  }
  return c;
}

TRec trec_div_uni(const TRec& a, const UPoly& u) {
  TRec r;
  for (const auto& [dt, c] : a) r[dt] = uni_divexact(c, u);
  return r;
}

/// Pseudo-remainder of a by b in the t-direction: lc(b)^(da-db+1) * a mod b.
TRec trec_prem(TRec a, const TRec& b) {
  int db = trec_deg(b);
  const UPoly& lb = trec_lc(b);
  int e = trec_deg(a) - db + 1;
  while (!a.empty() && trec_deg(a) >= db) {
    const UPoly la = trec_lc(a);
    int shift = trec_deg(a) - db;
    TRec s = trec_mul_uni(b, uni_scaled(la, Rat(-1)), shift);
    TRec al;
    for (const auto& [dt, u] : a) al[dt] = uni_mul(u, lb);
    a = trec_add(al, s);
    --e;
  }
  for (; e > 0; --e) {
    for (auto& [dt, u] : a) u = uni_mul(u, lb);
  }
  return a;
}

}  // namespace

QTPoly QTPoly::monomial(const Rat& c, int dq, int dt) {
  QTPoly p;
  if (c != 0) p.terms_.emplace_back(QTExp{dq, dt}, c);
  return p;
}

QTPoly QTPoly::from_sorted_terms(std::vector<Term> terms) {
  QTPoly p;
  p.terms_ = std::move(terms);
  return p;
}

bool QTPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == QTExp{0, 0} &&
         terms_[0].second == 1;
}

bool QTPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_[0].first == QTExp{0, 0});
}

Rat QTPoly::constant_coeff() const { return coeff(0, 0); }

Rat QTPoly::coeff(int dq, int dt) const {
  QTExp e{dq, dt};
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), e,
      [](const Term& a, const QTExp& b) { return a.first < b; });
  if (it != terms_.end() && it->first == e) return it->second;
  return Rat(0);
}

int QTPoly::deg_q() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.dq);
  return terms_.empty() ? -1 : d;
}

int QTPoly::deg_t() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.dt);
  return terms_.empty() ? -1 : d;
}

const QTPoly::Term& QTPoly::lex_leading() const {
  if (terms_.empty()) throw std::domain_error("lex_leading of zero polynomial");
  return terms_.back();
}

QTPoly QTPoly::operator-() const {
  QTPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

QTPoly QTPoly::operator+(const QTPoly& o) const {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    if (a->first < b->first) {
      out.push_back(*a++);
    } else if (b->first < a->first) {
      out.push_back(*b++);
    } else {
      Rat c = a->second + b->second;
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, terms_.end());
  out.insert(out.end(), b, o.terms_.end());
  return from_sorted_terms(std::move(out));
}

QTPoly QTPoly::operator-(const QTPoly& o) const { return *this + (-o); }

QTPoly QTPoly::operator*(const QTPoly& o) const {
  if (terms_.empty() || o.terms_.empty()) return {};
  std::map<QTExp, Rat> acc;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_)
      acc[QTExp{ea.dq + eb.dq, ea.dt + eb.dt}] += ca * cb;
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) out.emplace_back(e, std::move(c));
  return from_sorted_terms(std::move(out));
}

QTPoly QTPoly::scaled(const Rat& c) const {
  if (c == 0) return {};
  QTPoly r = *this;
  for (auto& [e, x] : r.terms_) x *= c;
  return r;
}

QTPoly QTPoly::pow(unsigned e) const {
  QTPoly r = one(), base = *this;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

QTPoly QTPoly::adams(unsigned j) const {
  QTPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_)
    r.terms_.emplace_back(QTExp{e.dq * static_cast<int>(j),
                                e.dt * static_cast<int>(j)},
                          c);
  // Exponent map is strictly monotone in lex order, so sortedness is kept.
  return r;
}

Rat QTPoly::eval(const Rat& q0, const Rat& t0) const {
  Rat r(0);
  for (const auto& [e, c] : terms_)
    r += c * rat_pow(q0, e.dq) * rat_pow(t0, e.dt);
  return r;
}

QTPoly QTPoly::eval_q(const Rat& q0) const {
  std::map<QTExp, Rat> acc;
  for (const auto& [e, c] : terms_) acc[QTExp{0, e.dt}] += c * rat_pow(q0, e.dq);
  std::vector<Term> out;
  for (auto& [e, c] : acc)
    if (c != 0) out.emplace_back(e, std::move(c));
  return from_sorted_terms(std::move(out));
}

QTPoly QTPoly::eval_t(const Rat& t0) const {
  std::map<QTExp, Rat> acc;
  for (const auto& [e, c] : terms_) acc[QTExp{e.dq, 0}] += c * rat_pow(t0, e.dt);
  std::vector<Term> out;
  for (auto& [e, c] : acc)
    if (c != 0) out.emplace_back(e, std::move(c));
  return from_sorted_terms(std::move(out));
}

Rat QTPoly::rational_content() const {
  Rat c(0);
  for (const auto& [e, x] : terms_) c = rat_gcd(c, x);
  return c;
}

QTPoly QTPoly::divexact(const QTPoly& d) const {
  if (d.is_zero()) throw std::domain_error("divexact: division by zero");
  if (is_zero()) return {};
  if (d.is_constant()) return scaled(1 / d.constant_coeff());
  TRec a = to_trec(*this);
  TRec b = to_trec(d);
  TRec quot;
  int db = trec_deg(b);
  const UPoly& lb = trec_lc(b);
  while (!a.empty() && trec_deg(a) >= db) {
    UPoly f = uni_divexact(trec_lc(a), lb);
    int shift = trec_deg(a) - db;
    quot[shift] = f;
    TRec s = trec_mul_uni(b, uni_scaled(f, Rat(-1)), shift);
    a = trec_add(a, s);
  }
  if (!a.empty()) throw std::domain_error("divexact: inexact division");
  return from_trec(quot);
}

QTPoly QTPoly::gcd(const QTPoly& a, const QTPoly& b) {
  auto normalize = [](const QTPoly& p) {
    if (p.is_zero()) return p;
    Rat c = p.rational_content();
    if (p.lex_leading().second < 0) c = -c;
    return p.scaled(1 / c);
  };
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  if (a.is_constant() || b.is_constant()) return QTPoly::one();

  TRec ta = to_trec(a), tb = to_trec(b);
  UPoly ca = trec_content(ta), cb = trec_content(tb);
  TRec pa = trec_div_uni(ta, ca), pb = trec_div_uni(tb, cb);
  if (trec_deg(pa) < trec_deg(pb)) std::swap(pa, pb);
  while (!pb.empty()) {
    TRec r = trec_prem(pa, pb);
    trec_trim(r);
    if (!r.empty()) {
      UPoly cr = trec_content(r);
      r = trec_div_uni(r, cr);
    }
    pa = std::move(pb);
    pb = std::move(r);
  }
  UPoly cg = uni_gcd(ca, cb);
  QTPoly g = from_trec(trec_mul_uni(pa, cg, 0));
  return normalize(g);
}

std::string QTPoly::text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = rat_abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_var = e.dq > 0 || e.dt > 0;
    bool coeff_shown = !has_var || a != 1;
    if (coeff_shown) os << a.get_str();
    if (e.dq > 0) {
      if (coeff_shown) os << "*";
      os << "q";
      if (e.dq > 1) os << "^" << e.dq;
    }
    if (e.dt > 0) {
      if (coeff_shown || e.dq > 0) os << "*";
      os << "t";
      if (e.dt > 1) os << "^" << e.dt;
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t i = 0;
  explicit Parser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("parse error at position " +
                                std::to_string(i) + ": " + msg);
  }

  Int parse_uint() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected integer");
    return Int(s.substr(start, i - start));
  }

  int parse_exponent() {
    if (eat('^')) return static_cast<int>(parse_uint().get_si());
    return 1;
  }

  // factor := number ['/' number] | 'q'['^'uint] | 't'['^'uint]
  QTPoly parse_factor() {
    char c = peek();
    if (c == 'q') {
      ++i;
      return QTPoly::monomial(1, parse_exponent(), 0);
    }
    if (c == 't') {
      ++i;
      return QTPoly::monomial(1, 0, parse_exponent());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int n = parse_uint();
      if (eat('/')) {
        Int d = parse_uint();
        if (d == 0) fail("zero denominator in coefficient");
        Rat r(n, d);
        r.canonicalize();
        return QTPoly(r);
      }
      return QTPoly(Rat(n));
    }
    fail("expected coefficient, q or t");
  }

  QTPoly parse_term() {
    QTPoly p = parse_factor();
    while (eat('*')) p *= parse_factor();
    return p;
  }

  QTPoly parse_poly() {
    QTPoly acc;
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    while (true) {
      QTPoly t = parse_term();
      acc += neg ? -t : t;
      skip_ws();
      if (eat('+'))
        neg = false;
      else if (eat('-'))
        neg = true;
      else
        break;
    }
    return acc;
  }
};

}  // namespace

QTPoly QTPoly::parse(const std::string& s) {
  Parser p(s);
  QTPoly r = p.parse_poly();
  p.skip_ws();
  if (p.i != s.size()) p.fail("trailing input");
  return r;
}

std::size_t QTPoly::hash() const {
  std::size_t h = 14695981039346656037ull;
  for (const auto& [e, c] : terms_) {
    h = (h ^ static_cast<std::size_t>(e.dq * 131 + e.dt)) * 1099511628211ull;
    h = (h ^ rat_hash(c)) * 1099511628211ull;
  }
  return h;
}

QTRatio::QTRatio(QTPoly num, QTPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("QTRatio: zero denominator");
  reduce_();
}

QTRatio QTRatio::M() {
  return QTRatio(QTPoly::parse("1 - q - t + q*t"));
}

QTRatio QTRatio::Mtilde() {
  return QTRatio(QTPoly::parse("1 - q - t + q*t"), QTPoly::qt());
}

void QTRatio::reduce_() {
  if (num_.is_zero()) {
    den_ = QTPoly::one();
    return;
  }
  if (!den_.is_one() && !den_.is_constant()) {
    QTPoly g = QTPoly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    }
  }
  canonical_scale_();
}

// Canonical scale: denominator integer-primitive with positive
// lexicographically-leading coefficient.
void QTRatio::canonical_scale_() {
  Rat c = den_.rational_content();
  if (den_.lex_leading().second < 0) c = -c;
  if (c != 1) {
    Rat inv = 1 / c;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

QTRatio QTRatio::operator-() const {
  QTRatio r = *this;
  r.num_ = -r.num_;
  return r;
}

QTRatio QTRatio::operator+(const QTRatio& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  QTRatio r;
  if (den_ == o.den_) {
    r.num_ = num_ + o.num_;
    r.den_ = den_;
    if (r.num_.is_zero()) {
      r.den_ = QTPoly::one();
      return r;
    }
    if (!r.den_.is_one()) r.reduce_();
    return r;
  }
  // Cross-reduced addition: only the shared denominator part can survive
  // into the gcd of the result, so reduce against it alone.
  QTPoly g = QTPoly::gcd(den_, o.den_);
  if (g.is_constant()) {
    r.num_ = num_ * o.den_ + o.num_ * den_;
    r.den_ = den_ * o.den_;
    if (r.num_.is_zero()) {
      r.den_ = QTPoly::one();
      return r;
    }
    r.canonical_scale_();
    return r;
  }
  QTPoly bd = den_.divexact(g);
  QTPoly od = o.den_.divexact(g);
  QTPoly top = num_ * od + o.num_ * bd;
  if (top.is_zero()) return QTRatio();
  QTPoly g2 = QTPoly::gcd(top, g);
  if (g2.is_constant()) {
    r.num_ = std::move(top);
    r.den_ = bd * o.den_;
  } else {
    r.num_ = top.divexact(g2);
    r.den_ = bd * o.den_.divexact(g2);
  }
  r.canonical_scale_();
  return r;
}

QTRatio QTRatio::operator-(const QTRatio& o) const { return *this + (-o); }

QTRatio QTRatio::operator*(const QTRatio& o) const {
  if (is_zero() || o.is_zero()) return QTRatio();
  QTRatio r;
  if (den_.is_one() && o.den_.is_one()) {
    r.num_ = num_ * o.num_;
    r.den_ = QTPoly::one();
    return r;
  }
  // Cross-reduce, then multiply; the factors stay pairwise coprime.
  QTPoly an = num_, bd = o.den_, bn = o.num_, ad = den_;
  if (!bd.is_one() && !an.is_zero()) {
    QTPoly g = QTPoly::gcd(an, bd);
    if (!g.is_one()) {
      an = an.divexact(g);
      bd = bd.divexact(g);
    }
  }
  if (!ad.is_one() && !bn.is_zero()) {
    QTPoly g = QTPoly::gcd(bn, ad);
    if (!g.is_one()) {
      bn = bn.divexact(g);
      ad = ad.divexact(g);
    }
  }
  r.num_ = an * bn;
  r.den_ = ad * bd;
  if (r.den_.is_one()) return r;
  // Only the canonical scale can still be off.
  r.canonical_scale_();
  return r;
}

QTRatio QTRatio::operator/(const QTRatio& o) const {
  return *this * o.inverse();
}

QTRatio QTRatio::inverse() const {
  if (is_zero()) throw std::domain_error("QTRatio: inverse of zero");
  QTRatio r;
  r.num_ = den_;
  r.den_ = num_;
  r.canonical_scale_();
  return r;
}

QTRatio QTRatio::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QTRatio r(1), base(*this);
  unsigned u = static_cast<unsigned>(e);
  while (u) {
    if (u & 1) r *= base;
    base *= base;
    u >>= 1;
  }
  return r;
}

QTRatio QTRatio::adams(unsigned j) const {
  // Coprimality is not guaranteed to survive exponent scaling; re-reduce.
  return QTRatio(num_.adams(j), den_.adams(j));
}

Rat QTRatio::eval(const Rat& q0, const Rat& t0) const {
  Rat d = den_.eval(q0, t0);
  if (d == 0)
    throw std::domain_error("QTRatio: pole at evaluation point");
  return num_.eval(q0, t0) / d;
}

QTRatio QTRatio::eval_q(const Rat& q0) const {
  QTPoly d = den_.eval_q(q0);
  if (d.is_zero())
    throw std::domain_error("QTRatio: pole at q specialization");
  return QTRatio(num_.eval_q(q0), std::move(d));
}

QTRatio QTRatio::eval_t(const Rat& t0) const {
  QTPoly d = den_.eval_t(t0);
  if (d.is_zero())
    throw std::domain_error("QTRatio: pole at t specialization");
  return QTRatio(num_.eval_t(t0), std::move(d));
}

std::string QTRatio::text() const {
  if (den_.is_one()) return num_.text();
  return "(" + num_.text() + ")/(" + den_.text() + ")";
}

QTRatio QTRatio::parse(const std::string& s) {
  // Either a bare polynomial or "(num)/(den)".
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip();
  if (i < s.size() && s[i] == '(') {
    // Find the matching close paren of the leading group.
    int depth = 0;
    std::size_t start = i;
    std::size_t close = std::string::npos;
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] == '(') ++depth;
      if (s[j] == ')' && --depth == 0) {
        close = j;
        break;
      }
    }
    if (close != std::string::npos) {
      std::size_t j = close + 1;
      while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j])))
        ++j;
      if (j < s.size() && s[j] == '/') {
        ++j;
        while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j])))
          ++j;
        if (j < s.size() && s[j] == '(' && s.back() == ')') {
          QTPoly num = QTPoly::parse(s.substr(start + 1, close - start - 1));
          QTPoly den = QTPoly::parse(s.substr(j + 1, s.size() - j - 2));
          return QTRatio(std::move(num), std::move(den));
        }
      }
    }
  }
  return QTRatio(QTPoly::parse(s));
}

std::size_t QTRatio::hash() const {
  return num_.hash() * 1099511628211ull ^ den_.hash();
}

}  // namespace qts
