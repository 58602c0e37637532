#include "symfunc.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <deque>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace qts {

namespace {

std::atomic<int> g_degree_cap{8};

using RMat = std::vector<std::vector<Rat>>;  // row-major, square
using RSym = std::map<Partition, Rat>;       // rational p-coordinates

// Newton recursions; both families have rational p-coordinates.
//   k h_k = sum_{i=1..k} p_i h_{k-i}
//   k e_k = sum_{i=1..k} (-1)^(i-1) p_i e_{k-i}
const RSym& newton_elem(int k, bool elementary) {
  static std::mutex mu;
  // Deques keep references stable while later entries are appended.
  static std::deque<RSym> ecache{{{{}, Rat(1)}}};
  static std::deque<RSym> hcache{{{{}, Rat(1)}}};
  std::lock_guard<std::mutex> lock(mu);
  auto& cache = elementary ? ecache : hcache;
  while (static_cast<int>(cache.size()) <= k) {
    int m = static_cast<int>(cache.size());
    RSym acc;
    for (int i = 1; i <= m; ++i) {
      Rat sign = (elementary && i % 2 == 0) ? Rat(-1) : Rat(1);
      for (auto& [lam, c] : cache[m - i]) {
        Partition key = lam;
        key.insert(std::upper_bound(key.begin(), key.end(), i,
                                    std::greater<int>()),
                   i);
        Rat add = sign * c / Rat(m);
        auto [it, fresh] = acc.emplace(std::move(key), add);
        if (!fresh) {
          it->second += add;
          if (it->second == 0) acc.erase(it);
        }
      }
    }
    cache.push_back(std::move(acc));
  }
  return cache[k];
}

RSym rsym_product(const RSym& a, const RSym& b) {
  RSym out;
  for (auto& [la, ca] : a)
    for (auto& [lb, cb] : b) {
      Rat v = ca * cb;
      auto [it, fresh] = out.emplace(merge_parts(la, lb), v);
      if (!fresh) {
        it->second += v;
        if (it->second == 0) out.erase(it);
      }
    }
  return out;
}

RMat invert(const RMat& m) {
  size_t n = m.size();
  RMat a = m;
  RMat inv(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("basis change matrix is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat d = a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// Immutable per-degree change-of-basis data, built once on first use.
struct DegreeTables {
  int n = 0;
  std::vector<Partition> parts;
  std::map<Partition, int> idx;
  std::vector<Rat> z;
  std::vector<std::vector<Int>> chi;  // chi[lambda][mu]
  RMat e2p, h2p;                      // [i][j] = p-coord i of basis elem j
  RMat p2e, p2h;                      // inverses of the above
  RMat m2p;                           // p-coords of m_nu in column nu
  // F-coordinate multiplicities of s_lambda: schurF[lambda][descent mask].
  std::vector<std::vector<int>> schurF;
};

std::shared_ptr<const DegreeTables> degree_tables(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const DegreeTables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  auto T = std::make_shared<DegreeTables>();
  T->n = n;
  T->parts = partitions_of(n);
  size_t dim = T->parts.size();
  for (size_t i = 0; i < dim; ++i) {
    T->idx.emplace(T->parts[i], static_cast<int>(i));
    T->z.push_back(z_factor(T->parts[i]));
  }
  T->chi.assign(dim, std::vector<Int>(dim));
  for (size_t l = 0; l < dim; ++l)
    for (size_t m = 0; m < dim; ++m)
      T->chi[l][m] = mn_character(T->parts[l], T->parts[m]);

  auto fill_products = [&](bool elementary) {
    RMat out(dim, std::vector<Rat>(dim, Rat(0)));
    for (size_t j = 0; j < dim; ++j) {
      RSym prod{{{}, Rat(1)}};
      for (int part : T->parts[j])
        prod = rsym_product(prod, newton_elem(part, elementary));
      for (auto& [lam, c] : prod) out[T->idx.at(lam)][j] = c;
    }
    return out;
  };
  T->e2p = fill_products(true);
  T->h2p = fill_products(false);
  T->p2e = invert(T->e2p);
  T->p2h = invert(T->h2p);

  // m-coord nu of p_lambda is z_lambda times the p-coord lambda of h_nu.
  RMat p2m(dim, std::vector<Rat>(dim, Rat(0)));
  for (size_t nu = 0; nu < dim; ++nu)
    for (size_t lam = 0; lam < dim; ++lam)
      p2m[nu][lam] = T->z[lam] * T->h2p[lam][nu];
  T->m2p = invert(p2m);

  size_t nmask = n > 0 ? (1u << (n - 1)) : 1u;
  T->schurF.assign(dim, std::vector<int>(nmask, 0));
  for (size_t l = 0; l < dim; ++l)
    for (auto& tab : standard_tableaux(T->parts[l]))
      ++T->schurF[l][syt_descent_mask(tab)];

  return cache.emplace(n, std::move(T)).first->second;
}

QTRatio rat_to_qt(const Rat& r) { return QTRatio(r); }

}  // namespace

int degree_cap() { return g_degree_cap.load(); }

void set_degree_cap(int cap) {
  if (cap < 0) throw std::domain_error("degree cap must be non-negative");
  g_degree_cap.store(cap);
}

Basis basis_from_name(const std::string& name) {
  if (name == "p") return Basis::p;
  if (name == "e") return Basis::e;
  if (name == "h") return Basis::h;
  if (name == "m") return Basis::m;
  if (name == "s") return Basis::s;
  throw std::domain_error("unknown basis name: " + name);
}

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::p: return "p";
    case Basis::e: return "e";
    case Basis::h: return "h";
    case Basis::m: return "m";
    case Basis::s: return "s";
  }
  throw std::logic_error("bad basis");
}

SymF SymF::one() {
  SymF f;
  f.c_.emplace(Partition{}, QTRatio(1));
  return f;
}

SymF SymF::p(int k) {
  if (k <= 0) throw std::domain_error("p_k needs k >= 1");
  SymF f;
  f.c_.emplace(Partition{k}, QTRatio(1));
  return f;
}

SymF SymF::e(int k) { return basis_elem(Basis::e, k == 0 ? Partition{} : Partition{k}); }

SymF SymF::h(int k) { return basis_elem(Basis::h, k == 0 ? Partition{} : Partition{k}); }

SymF SymF::basis_elem(Basis b, const Partition& lam) {
  if (!is_partition(lam)) throw std::domain_error("invalid partition index");
  switch (b) {
    case Basis::p: {
      SymF f;
      f.c_.emplace(lam, QTRatio(1));
      return f;
    }
    case Basis::e:
    case Basis::h: {
      RSym prod{{{}, Rat(1)}};
      for (int part : lam)
        prod = rsym_product(prod, newton_elem(part, b == Basis::e));
      SymF f;
      for (auto& [mu, c] : prod) f.c_.emplace(mu, rat_to_qt(c));
      return f;
    }
    case Basis::m: {
      auto T = degree_tables(part_size(lam));
      int nu = T->idx.at(lam);
      SymF f;
      for (size_t i = 0; i < T->parts.size(); ++i)
        if (T->m2p[i][nu] != 0)
          f.c_.emplace(T->parts[i], rat_to_qt(T->m2p[i][nu]));
      return f;
    }
    case Basis::s: {
      auto T = degree_tables(part_size(lam));
      int l = T->idx.at(lam);
      SymF f;
      for (size_t m = 0; m < T->parts.size(); ++m)
        if (T->chi[l][m] != 0)
          f.c_.emplace(T->parts[m], QTRatio(Rat(T->chi[l][m]) / T->z[m]));
      return f;
    }
  }
  throw std::logic_error("bad basis");
}

int SymF::max_degree() const {
  int d = -1;
  for (auto& [lam, c] : c_) d = std::max(d, part_size(lam));
  return d;
}

bool SymF::is_homogeneous() const {
  int d = -2;
  for (auto& [lam, c] : c_) {
    int s = part_size(lam);
    if (d == -2) d = s;
    if (s != d) return false;
  }
  return true;
}

SymF SymF::component(int d) const {
  SymF out;
  for (auto& [lam, c] : c_)
    if (part_size(lam) == d) out.c_.emplace(lam, c);
  return out;
}

QTRatio SymF::p_coord(const Partition& lam) const {
  auto it = c_.find(lam);
  return it == c_.end() ? QTRatio() : it->second;
}

void SymF::set_p_coord(const Partition& lam, const QTRatio& v) {
  if (v.is_zero())
    c_.erase(lam);
  else
    c_[lam] = v;
}

void SymF::add_p_term(const Partition& lam, const QTRatio& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = c_.emplace(lam, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) c_.erase(it);
  }
}

SymF SymF::operator+(const SymF& o) const {
  SymF out = *this;
  out += o;
  return out;
}

SymF SymF::operator-(const SymF& o) const {
  SymF out = *this;
  out -= o;
  return out;
}

SymF SymF::operator-() const {
  SymF out;
  for (auto& [lam, c] : c_) out.c_.emplace(lam, -c);
  return out;
}

SymF& SymF::operator+=(const SymF& o) {
  for (auto& [lam, c] : o.c_) add_p_term(lam, c);
  return *this;
}

SymF& SymF::operator-=(const SymF& o) {
  for (auto& [lam, c] : o.c_) add_p_term(lam, -c);
  return *this;
}

SymF SymF::operator*(const SymF& o) const {
  SymF out;
  for (auto& [la, ca] : c_)
    for (auto& [lb, cb] : o.c_) out.add_p_term(merge_parts(la, lb), ca * cb);
  return out;
}

SymF SymF::scaled(const QTRatio& v) const {
  SymF out;
  if (v.is_zero()) return out;
  for (auto& [lam, c] : c_) out.c_.emplace(lam, c * v);
  return out;
}

SymF SymF::omega() const {
  SymF out;
  for (auto& [lam, c] : c_) {
    int sign = (part_size(lam) - static_cast<int>(lam.size())) % 2;
    out.c_.emplace(lam, sign ? -c : c);
  }
  return out;
}

SymF SymF::scale_alphabet(const QTRatio& factor) const {
  SymF out;
  for (auto& [lam, c] : c_) {
    QTRatio v = c;
    for (int part : lam) v *= factor.adams(static_cast<unsigned>(part));
    if (!v.is_zero()) out.c_.emplace(lam, v);
  }
  return out;
}

QTRatio SymF::eval_alphabet(const QTRatio& E) const {
  QTRatio out;
  for (auto& [lam, c] : c_) {
    QTRatio v = c;
    for (int part : lam) v *= E.adams(static_cast<unsigned>(part));
    out += v;
  }
  return out;
}

SymF SymF::p1_perp() const {
  SymF out;
  for (auto& [lam, c] : c_) {
    if (lam.empty() || lam.back() != 1) continue;
    int mult = 0;
    for (auto it = lam.rbegin(); it != lam.rend() && *it == 1; ++it) ++mult;
    Partition rest(lam.begin(), lam.end() - 1);
    out.add_p_term(rest, QTRatio(Rat(mult)) * c);
  }
  return out;
}

SymF SymF::eval_q(const Rat& q0) const {
  SymF out;
  for (auto& [lam, c] : c_) out.add_p_term(lam, c.eval_q(q0));
  return out;
}

SymF SymF::eval_t(const Rat& t0) const {
  SymF out;
  for (auto& [lam, c] : c_) out.add_p_term(lam, c.eval_t(t0));
  return out;
}

std::map<Partition, QTRatio> SymF::coords(Basis b) const {
  if (b == Basis::p) return c_;
  std::map<Partition, QTRatio> out;
  std::map<int, std::vector<std::pair<Partition, QTRatio>>> by_degree;
  for (auto& [lam, c] : c_) by_degree[part_size(lam)].push_back({lam, c});
  for (auto& [deg, terms] : by_degree) {
    auto T = degree_tables(deg);
    size_t dim = T->parts.size();
    std::vector<QTRatio> v(dim);
    for (auto& [lam, c] : terms) v[T->idx.at(lam)] = c;
    std::vector<QTRatio> a(dim);
    switch (b) {
      case Basis::s:
        for (size_t l = 0; l < dim; ++l)
          for (size_t m = 0; m < dim; ++m)
            if (T->chi[l][m] != 0 && !v[m].is_zero())
              a[l] += QTRatio(Rat(T->chi[l][m])) * v[m];
        break;
      case Basis::m:
        for (size_t nu = 0; nu < dim; ++nu)
          for (size_t lam = 0; lam < dim; ++lam)
            if (T->h2p[lam][nu] != 0 && !v[lam].is_zero())
              a[nu] += QTRatio(T->z[lam] * T->h2p[lam][nu]) * v[lam];
        break;
      case Basis::e:
      case Basis::h: {
        const RMat& inv = b == Basis::e ? T->p2e : T->p2h;
        for (size_t i = 0; i < dim; ++i)
          for (size_t j = 0; j < dim; ++j)
            if (inv[i][j] != 0 && !v[j].is_zero())
              a[i] += QTRatio(inv[i][j]) * v[j];
        break;
      }
      case Basis::p:
        break;
    }
    for (size_t i = 0; i < dim; ++i)
      if (!a[i].is_zero()) out.emplace(T->parts[i], a[i]);
  }
  return out;
}

SymF SymF::from_coords(Basis b, const std::map<Partition, QTRatio>& coords) {
  SymF out;
  for (auto& [lam, c] : coords) out += basis_elem(b, lam).scaled(c);
  return out;
}

std::string SymF::text(Basis b) const {
  auto coords = this->coords(b);
  if (coords.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [lam, c] : coords) {
    if (!first) os << " + ";
    first = false;
    bool unit = c.is_one();
    if (!unit) os << "(" << c.text() << ")*";
    os << basis_name(b) << "[";
    for (size_t i = 0; i < lam.size(); ++i)
      os << (i ? "," : "") << lam[i];
    os << "]";
  }
  return os.str();
}

QTRatio hall_inner(const SymF& f, const SymF& g) {
  QTRatio out;
  const auto& a = f.p_coords();
  const auto& b = g.p_coords();
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& big = a.size() <= b.size() ? b : a;
  for (auto& [lam, c] : small) {
    auto it = big.find(lam);
    if (it == big.end()) continue;
    out += c * it->second * QTRatio(z_factor(lam));
  }
  return out;
}

QTRatio star_inner(const SymF& f, const SymF& g) {
  QTRatio out;
  QTRatio M = QTRatio::M();
  for (auto& [lam, c] : f.p_coords()) {
    auto it = g.p_coords().find(lam);
    if (it == g.p_coords().end()) continue;
    QTRatio term = c * it->second * QTRatio(z_factor(lam));
    for (int part : lam) term *= M.adams(static_cast<unsigned>(part));
    int sign = (part_size(lam) - static_cast<int>(lam.size())) % 2;
    out += sign ? -term : term;
  }
  return out;
}

ZSeries ZSeries::from_symf(const SymF& f) {
  ZSeries z;
  if (!f.is_zero()) z.c_.emplace(0, f);
  return z;
}

SymF ZSeries::at(int k) const {
  auto it = c_.find(k);
  return it == c_.end() ? SymF() : it->second;
}

void ZSeries::add_term(int k, const SymF& f) {
  if (f.is_zero()) return;
  auto [it, fresh] = c_.emplace(k, f);
  if (!fresh) {
    it->second += f;
    if (it->second.is_zero()) c_.erase(it);
  }
}

ZSeries ZSeries::operator+(const ZSeries& o) const {
  ZSeries out = *this;
  for (auto& [k, f] : o.c_) out.add_term(k, f);
  return out;
}

ZSeries ZSeries::operator*(const ZSeries& o) const {
  ZSeries out;
  for (auto& [ka, fa] : c_)
    for (auto& [kb, fb] : o.c_) out.add_term(ka + kb, fa * fb);
  return out;
}

ZSeries ZSeries::scaled(const QTRatio& v) const {
  ZSeries out;
  if (v.is_zero()) return out;
  for (auto& [k, f] : c_) out.c_.emplace(k, f.scaled(v));
  return out;
}

ZSeries plethystic_substitute(const SymF& f, const PlethRule& rule) {
  // p_k -> scale(k) p_k + shift(k) z^(-k); cache the two-term series per
  // distinct part value.
  std::map<int, ZSeries> part_series;
  auto series_for = [&](int k) -> const ZSeries& {
    auto it = part_series.find(k);
    if (it != part_series.end()) return it->second;
    ZSeries s;
    s.add_term(0, SymF::p(k).scaled(rule.scale(k)));
    s.add_term(-k, SymF::one().scaled(rule.shift(k)));
    return part_series.emplace(k, std::move(s)).first->second;
  };
  ZSeries out;
  for (auto& [lam, c] : f.p_coords()) {
    ZSeries term = ZSeries::from_symf(SymF::one().scaled(c));
    for (int part : lam) term = term * series_for(part);
    out = out + term;
  }
  return out;
}

ZSeries omega_series(KernelMode mode, int top_degree) {
  ZSeries out;
  for (int d = 0; d <= top_degree; ++d) {
    switch (mode) {
      case KernelMode::H:
        out.add_term(d, SymF::h(d));
        break;
      case KernelMode::E:
        out.add_term(d, d % 2 ? -SymF::e(d) : SymF::e(d));
        break;
      case KernelMode::Eplus:
        out.add_term(d, SymF::e(d));
        break;
    }
  }
  return out;
}

SymF creation_op(CreationKind kind, int index, const SymF& f) {
  if (f.is_zero()) return SymF();
  if ((kind == CreationKind::C || kind == CreationKind::B) && index < 1)
    throw std::domain_error("creation index must be >= 1");
  int top = f.max_degree();
  if (top + index > degree_cap())
    throw std::domain_error(
        "creation_op output degree exceeds the configured degree cap");

  PlethRule rule;
  KernelMode mode;
  QTRatio prefactor(1);
  switch (kind) {
    case CreationKind::D:
      rule.scale = [](int) { return QTRatio(1); };
      rule.shift = [](int k) { return QTRatio::M().adams(k); };
      mode = KernelMode::E;
      break;
    case CreationKind::Dstar:
      rule.scale = [](int) { return QTRatio(1); };
      rule.shift = [](int k) { return -QTRatio::Mtilde().adams(k); };
      mode = KernelMode::H;
      break;
    case CreationKind::C:
      rule.scale = [](int) { return QTRatio(1); };
      rule.shift = [](int k) {
        QTRatio qk = QTRatio::q().pow(k);
        return (QTRatio(1) - qk) / qk;
      };
      mode = KernelMode::H;
      prefactor = (-QTRatio::q()).pow(1 - index);
      break;
    case CreationKind::B:
      rule.scale = [](int) { return QTRatio(1); };
      rule.shift = [](int k) {
        QTRatio v = QTRatio(1) - QTRatio::q().pow(k);
        return k % 2 ? -v : v;
      };
      mode = KernelMode::Eplus;
      break;
  }

  ZSeries plethified = plethystic_substitute(f, rule);
  ZSeries kernel = omega_series(mode, index + top);
  SymF out;
  for (auto& [exp, coeff] : plethified.terms()) {
    int kexp = index - exp;  // kernel exponent pairing z^exp with z^kexp
    if (kexp < 0) continue;
    SymF kf = kernel.at(kexp);
    if (!kf.is_zero()) out += coeff * kf;
  }
  return prefactor.is_one() ? out : out.scaled(prefactor);
}

namespace {

// e_j in power-sum coordinates, cached: the kernel side of the D action.
const SymF& elementary_p(int j) {
  static std::shared_mutex mu;
  static std::vector<SymF> cache;
  {
    std::shared_lock<std::shared_mutex> lock(mu);
    if (j < static_cast<int>(cache.size())) return cache[j];
  }
  std::unique_lock<std::shared_mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= j)
    cache.push_back(SymF::e(static_cast<int>(cache.size())));
  return cache[j];
}

}  // namespace

// Expanding the alphabet shift over the parts,
//   p_lambda[x + M/z] = prod_i (p_{lambda_i} + (1-q^{lambda_i})(1-t^{lambda_i}) z^{-lambda_i}),
// and pairing against Omega[-zx] = sum_j (-z)^j e_j leaves
//   D_k p_lambda = sum_{mu} mult(lambda,mu) prod_i (1-q^{mu_i})(1-t^{mu_i})
//                  (-1)^{k+|mu|} e_{k+|mu|} p_{lambda minus mu},
// the sum over sub-multisets mu of lambda with k + |mu| >= 0.
SymF d_on_p(int k, const Partition& lam) {
  std::vector<std::pair<int, int>> groups;  // (part, multiplicity)
  for (int part : lam) {
    if (!groups.empty() && groups.back().first == part)
      ++groups.back().second;
    else
      groups.emplace_back(part, 1);
  }
  SymF out;
  // Choice vector c[i] <= mult[i] of how many copies of each part move into
  // the z-shift; odometer enumeration over the product of ranges.
  std::vector<int> choice(groups.size(), 0);
  while (true) {
    int musum = 0;
    Rat mult(1);
    QTRatio shift(1);
    Partition rest;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      auto [part, avail] = groups[i];
      int c = choice[i];
      musum += c * part;
      for (int j = 0; j < c; ++j) mult = mult * Rat(avail - j) / Rat(j + 1);
      if (c > 0) shift *= QTRatio::M().adams(part).pow(c);
      rest.insert(rest.end(), avail - c, part);
    }
    int j = k + musum;
    if (j >= 0) {
      QTRatio coef = shift * QTRatio(j % 2 ? -mult : mult);
      const SymF& ej = elementary_p(j);
      for (auto& [nu, ec] : ej.p_coords()) {
        Partition merged = rest;
        merged.insert(merged.end(), nu.begin(), nu.end());
        std::sort(merged.begin(), merged.end(), std::greater<int>());
        out.add_p_term(merged, coef * ec);
      }
    }
    std::size_t pos = 0;
    while (pos < groups.size() && choice[pos] == groups[pos].second)
      choice[pos++] = 0;
    if (pos == groups.size()) break;
    ++choice[pos];
  }
  return out;
}

SymF d_operator(int k, const SymF& f) {
  int cap = degree_cap();
  if (f.max_degree() + k > cap)
    throw std::domain_error(
        "creation_op output degree exceeds the configured degree cap");
  SymF out;
  for (auto& [lam, c] : f.p_coords()) out += d_on_p(k, lam).scaled(c);
  return out;
}

QSymCoords::QSymCoords(int degree) : n_(degree) {
  if (degree < 1) throw std::domain_error("QSymCoords needs degree >= 1");
  c_.assign(1u << (degree - 1), QTRatio());
}

QSymCoords QSymCoords::from_symf(const SymF& f) {
  if (f.is_zero() || !f.is_homogeneous())
    throw std::domain_error("QSymCoords needs a nonzero homogeneous input");
  int n = f.max_degree();
  QSymCoords out(n);
  auto mcoords = f.coords(Basis::m);
  // Monomial coordinate of M_alpha is the m-coordinate at sort(alpha);
  // fundamental coordinates follow by inclusion-exclusion over subsets.
  unsigned total = 1u << (n - 1);
  std::vector<QTRatio> mono(total);
  for (unsigned mask = 0; mask < total; ++mask) {
    Composition a = comp_from_subset(mask, n);
    Partition lam(a);
    std::sort(lam.begin(), lam.end(), std::greater<int>());
    auto it = mcoords.find(lam);
    if (it != mcoords.end()) mono[mask] = it->second;
  }
  for (unsigned s = 0; s < total; ++s) {
    QTRatio g;
    unsigned sub = s;
    // iterate t over all subsets of s
    while (true) {
      int diff = std::popcount(s ^ sub);
      g += diff % 2 ? -mono[sub] : mono[sub];
      if (sub == 0) break;
      sub = (sub - 1) & s;
    }
    out.c_[s] = g;
  }
  return out;
}

const QTRatio& QSymCoords::at(unsigned mask) const {
  if (mask >= c_.size()) throw std::out_of_range("QSymCoords mask");
  return c_[mask];
}

void QSymCoords::add(unsigned mask, const QTRatio& v) {
  if (mask >= c_.size()) throw std::out_of_range("QSymCoords mask");
  c_[mask] += v;
}

bool QSymCoords::operator==(const QSymCoords& o) const {
  return n_ == o.n_ && c_ == o.c_;
}

SymF QSymCoords::to_symf() const {
  auto T = degree_tables(n_);
  size_t dim = T->parts.size();
  unsigned total = 1u << (n_ - 1);
  // Solve schurF^T x = c over the Schur coefficients x by elimination.
  std::vector<std::vector<QTRatio>> rows(total,
                                         std::vector<QTRatio>(dim + 1));
  for (unsigned s = 0; s < total; ++s) {
    for (size_t l = 0; l < dim; ++l)
      rows[s][l] = QTRatio(Rat(T->schurF[l][s]));
    rows[s][dim] = c_[s];
  }
  size_t rank = 0;
  std::vector<int> pivot_col(total, -1);
  for (size_t col = 0; col < dim && rank < total; ++col) {
    size_t piv = rank;
    while (piv < total && rows[piv][col].is_zero()) ++piv;
    if (piv == total) continue;
    std::swap(rows[piv], rows[rank]);
    QTRatio d = rows[rank][col];
    for (size_t j = col; j <= dim; ++j) rows[rank][j] /= d;
    for (size_t r = 0; r < total; ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      QTRatio fct = rows[r][col];
      for (size_t j = col; j <= dim; ++j)
        rows[r][j] -= fct * rows[rank][j];
    }
    pivot_col[rank] = static_cast<int>(col);
    ++rank;
  }
  for (size_t r = rank; r < total; ++r)
    if (!rows[r][dim].is_zero())
      throw std::domain_error(
          "quasisymmetric coordinates do not describe a symmetric function");
  SymF out;
  for (size_t r = 0; r < rank; ++r)
    if (!rows[r][dim].is_zero())
      out += SymF::basis_elem(Basis::s, T->parts[pivot_col[r]])
                 .scaled(rows[r][dim]);
  return out;
}

QTRatio schur_hook_eval(const Partition& lam, const QTRatio& u) {
  if (lam.empty()) return QTRatio(1);
  bool hook = lam.size() <= 1 || lam[1] <= 1;
  if (!hook) return QTRatio();
  int b = static_cast<int>(lam.size()) - 1;
  return (-u).pow(b) * (QTRatio(1) - u);
}

}  // namespace qts
