#include "constant_term.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "opwords.hpp"
#include "parking.hpp"

namespace qts {

namespace {

std::vector<int> unit_vec(int n, int i) {
  std::vector<int> w(n, 0);
  w[i] = 1;
  return w;
}

std::vector<int> ratio_vec(int n, int i, int j) {
  std::vector<int> w(n, 0);
  w[i] = 1;
  w[j] = -1;
  return w;
}

bool all_zero(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

/// Exponents on the lattice substitution r_j = z_j/z_{j+1}, s = z_n: the
/// prefix sums of the z-exponents.
std::vector<int> lattice_exps(const std::vector<int>& g) {
  std::vector<int> rs(g.size());
  int run = 0;
  for (size_t l = 0; l < g.size(); ++l) {
    run += g[l];
    rs[l] = run;
  }
  return rs;
}

bool fits(const std::vector<int>& k, const std::vector<int>& cap) {
  for (size_t i = 0; i < k.size(); ++i)
    if (k[i] > cap[i]) return false;
  return true;
}

using SeriesMap = std::map<std::vector<int>, QTRatio>;

void series_add(SeriesMap& m, std::vector<int> key, const QTRatio& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = m.try_emplace(std::move(key), v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) m.erase(it);
  }
}

/// One truncated expansion of the integrand: every term beyond the target
/// box is dropped (exponents only grow), every geometric factor is cut at
/// `order` powers.
QTRatio series_eval(const FactoredRat& fr, const std::vector<int>& tgt,
                    int order) {
  SeriesMap acc;
  acc.emplace(std::vector<int>(fr.nvars(), 0), fr.scalar());
  for (const CtFactor& f : fr.num()) {
    std::vector<int> w = lattice_exps(f.w);
    SeriesMap out;
    for (const auto& [k, v] : acc) {
      series_add(out, k, v);
      std::vector<int> k2 = k;
      for (size_t i = 0; i < k2.size(); ++i) k2[i] += w[i];
      if (fits(k2, tgt)) series_add(out, std::move(k2), -(f.c * v));
    }
    acc.swap(out);
  }
  for (const CtFactor& f : fr.den()) {
    std::vector<int> w = lattice_exps(f.w);
    SeriesMap out;
    for (const auto& [k, v] : acc) {
      series_add(out, k, v);
      std::vector<int> kk = k;
      QTRatio cc = v;
      for (int p = 1; p <= order; ++p) {
        for (size_t i = 0; i < kk.size(); ++i) kk[i] += w[i];
        if (!fits(kk, tgt)) break;
        cc *= f.c;
        series_add(out, kk, cc);
      }
    }
    acc.swap(out);
  }
  auto it = acc.find(tgt);
  return it == acc.end() ? QTRatio(0) : it->second;
}

void validate_nepath(const NEPath& p) {
  if (p.m < 1 || p.n < 1)
    throw std::invalid_argument("path rectangle sides must be positive");
  if (static_cast<int>(p.e.size()) != p.n)
    throw std::invalid_argument("path needs one east-step count per height");
  int sum = 0;
  for (int x : p.e) {
    if (x < 0) throw std::invalid_argument("negative east-step count");
    sum += x;
  }
  if (sum != p.m)
    throw std::invalid_argument("east-step counts must sum to the width");
}

/// Coefficient of u^k in (1 - u)(1 - qt u) / ((1 - t u)(1 - q u)).
QTRatio omega_ratio_coeff(int k) {
  auto hk = [](int j) {
    QTPoly s;
    for (int a = 0; a <= j; ++a) s += QTPoly::monomial(1, a, j - a);
    return s;
  };
  QTPoly out = hk(k);
  if (k >= 1) out -= hk(k - 1) * (QTPoly::one() + QTPoly::qt());
  if (k >= 2) out += hk(k - 2) * QTPoly::qt();
  return QTRatio(out);
}

void check_coprime(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("indices must be positive");
  if (std::gcd(m, n) != 1) throw std::invalid_argument("indices must be coprime");
}

int doubling_seed(int m, int n) { return std::max(1, (m - 1) * (n - 1) + n * n); }

}  // namespace

FactoredRat::FactoredRat(int nvars)
    : nvars_(nvars), scalar_(1), zmon_(std::max(nvars, 0), 0) {
  if (nvars < 1)
    throw std::invalid_argument("a factored integrand needs a variable");
}

void FactoredRat::mul_num(const QTRatio& c, std::vector<int> w) {
  if (static_cast<int>(w.size()) != nvars_)
    throw std::invalid_argument("factor exponent arity mismatch");
  num_.push_back({c, std::move(w)});
}

void FactoredRat::mul_den(const QTRatio& c, std::vector<int> w) {
  if (static_cast<int>(w.size()) != nvars_)
    throw std::invalid_argument("factor exponent arity mismatch");
  den_.push_back({c, std::move(w)});
}

void FactoredRat::cancel() {
  for (auto it = num_.begin(); it != num_.end();) {
    auto jt = std::find(den_.begin(), den_.end(), *it);
    if (jt != den_.end()) {
      den_.erase(jt);
      it = num_.erase(it);
    } else {
      ++it;
    }
  }
}

void FactoredRat::substitute(int var, const QTRatio& value) {
  if (var < 0 || var >= nvars_)
    throw std::invalid_argument("substitution variable out of range");
  if (value.is_zero())
    throw std::invalid_argument("substituted value must be nonzero");
  if (is_zero()) return;
  scalar_ *= value.pow(zmon_[var]);
  zmon_[var] = 0;
  // Denominators first: a vanished one is an error no numerator can excuse.
  std::vector<CtFactor> keep;
  for (CtFactor& f : den_) {
    if (f.w[var] != 0) {
      f.c *= value.pow(f.w[var]);
      f.w[var] = 0;
    }
    if (!all_zero(f.w)) {
      keep.push_back(std::move(f));
      continue;
    }
    QTRatio cval = QTRatio(1) - f.c;
    if (cval.is_zero())
      throw std::logic_error(
          "substitution hit an uncancelled vanishing denominator factor");
    scalar_ /= cval;
  }
  den_.swap(keep);
  keep.clear();
  for (CtFactor& f : num_) {
    if (f.w[var] != 0) {
      f.c *= value.pow(f.w[var]);
      f.w[var] = 0;
    }
    if (!all_zero(f.w)) {
      keep.push_back(std::move(f));
      continue;
    }
    QTRatio cval = QTRatio(1) - f.c;
    if (cval.is_zero()) {
      scalar_ = QTRatio(0);
      std::fill(zmon_.begin(), zmon_.end(), 0);
      num_.clear();
      den_.clear();
      return;
    }
    scalar_ *= cval;
  }
  num_.swap(keep);
}

QTRatio FactoredRat::value() const {
  if (is_zero()) return scalar_;
  if (!num_.empty() || !den_.empty() || !all_zero(zmon_))
    throw std::logic_error("value of an expression still holding a variable");
  return scalar_;
}

CtResult series_ct(const FactoredRat& fr, int order) {
  if (order < 1) throw std::invalid_argument("truncation order must be positive");
  for (const auto* side : {&fr.num(), &fr.den()})
    for (const CtFactor& f : *side) {
      std::vector<int> rs = lattice_exps(f.w);
      if (all_zero(rs) ||
          std::any_of(rs.begin(), rs.end(), [](int x) { return x < 0; }))
        throw std::logic_error(
            "factor does not expand as a power series on the path lattice");
    }
  if (fr.is_zero()) return {QTRatio(0), order};
  std::vector<int> tgt = lattice_exps(fr.zmon());
  for (int& x : tgt) x = -x;
  // No expansion term can reach a negative box corner.
  if (std::any_of(tgt.begin(), tgt.end(), [](int x) { return x < 0; }))
    return {QTRatio(0), order};
  // Once the order covers the whole target box the capped evaluation is
  // exact, so agreement below that order proves nothing.
  const int need = *std::max_element(tgt.begin(), tgt.end());
  int prev_order = order;
  QTRatio prev = series_eval(fr, tgt, order);
  for (int round = 0; round < 24; ++round) {
    order *= 2;
    QTRatio cur = series_eval(fr, tgt, order);
    if (cur == prev && prev_order >= need) return {cur, order};
    prev = cur;
    prev_order = order;
  }
  throw std::runtime_error("constant term did not stabilize by truncation order " +
                           std::to_string(order));
}

std::vector<int> floor_steps(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("indices must be positive");
  std::vector<int> a(n);
  for (int i = 1; i <= n; ++i)
    a[i - 1] = (i * m) / n - ((i - 1) * m) / n;
  return a;
}

FactoredRat catalan_integrand(const std::vector<int>& b) {
  const int n = static_cast<int>(b.size());
  FactoredRat fr(n);
  const QTRatio q = QTRatio::q(), t = QTRatio::t(), qt = QTRatio::qt();
  for (int i = 0; i < n; ++i) {
    fr.zmon()[i] -= b[i];
    fr.mul_den(QTRatio(1), unit_vec(n, i));
  }
  for (int i = 0; i + 1 < n; ++i) fr.mul_den(qt, ratio_vec(n, i, i + 1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> u = ratio_vec(n, i, j);
      fr.mul_num(QTRatio(1), u);
      fr.mul_num(qt, u);
      fr.mul_den(t, u);
      fr.mul_den(q, std::move(u));
    }
  return fr;
}

CtResult catalan_series(int m, int n) {
  check_coprime(m, n);
  return series_ct(catalan_integrand(floor_steps(m, n)), doubling_seed(m, n));
}

CtResult generalized_b_ct(const std::vector<int>& b) {
  if (b.empty()) throw std::invalid_argument("empty exponent sequence");
  if (b[0] < 0)
    throw std::invalid_argument("leading exponent must be nonnegative");
  for (size_t i = 1; i < b.size(); ++i)
    if (b[i] < -1)
      throw std::invalid_argument("exponents past the first must be >= -1");
  std::vector<int> a(b.rbegin(), b.rend());
  int weight = 0;
  for (int x : b) weight += std::max(x, 0);
  return series_ct(catalan_integrand(a),
                   doubling_seed(weight, static_cast<int>(b.size())));
}

QTRatio tableau_b_sum(const std::vector<int>& b) {
  const int n = static_cast<int>(b.size());
  if (n < 1) throw std::invalid_argument("empty exponent sequence");
  const QTRatio q = QTRatio::q(), t = QTRatio::t(), qt = QTRatio::qt();
  QTRatio total(0);
  for (const Partition& lam : partitions_of(n)) {
    for (const std::vector<int>& rows : standard_tableaux(lam)) {
      std::vector<int> cols(n, 0);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < k; ++l)
          if (rows[l] == rows[k]) ++cols[k];
      std::vector<QTRatio> w(n);
      for (int k = 0; k < n; ++k)
        w[k] = QTRatio(QTPoly::monomial(1, cols[k], rows[k]));
      FactoredRat fr(n);
      for (int i = 0; i < n; ++i) {
        fr.zmon()[i] -= b[i];
        fr.mul_den(QTRatio(1), unit_vec(n, i));
        fr.mul_num(w[i], unit_vec(n, i));
      }
      // Reflected orientation: the chain ratio and the cross factors run
      // from later variables to earlier ones.
      for (int i = 1; i < n; ++i) fr.mul_den(qt, ratio_vec(n, i, i - 1));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          std::vector<int> u = ratio_vec(n, j, i);
          fr.mul_num(QTRatio(1), u);
          fr.mul_num(qt, u);
          fr.mul_den(t, u);
          fr.mul_den(q, std::move(u));
        }
      for (int d = 0; d < n && !fr.is_zero(); ++d) {
        fr.cancel();
        fr.substitute(d, w[d].inverse());
      }
      total += fr.value();
    }
  }
  return total;
}

QTRatio catalan_tableaux(int m, int n) {
  check_coprime(m, n);
  std::vector<int> a = floor_steps(m, n);
  return tableau_b_sum(std::vector<int>(a.rbegin(), a.rend()));
}

QTRatio catalan_pairing(int m, int n) {
  check_coprime(m, n);
  SymF image = apply(Q_operator(m, n), SymF::one());
  if (n % 2 != 0) image = -image;
  // The Hall pairing against e_n extracts the s_{1^n} coefficient; the
  // deformed pairing would instead evaluate the image at the alphabet M.
  return hall_inner(image, SymF::e(n));
}

std::vector<int> NEPath::prefix_u() const {
  std::vector<int> u(n, 0);
  for (int i = 1; i < n; ++i) u[i] = u[i - 1] + e[i - 1];
  return u;
}

NEPath staircase_path(int m, int n) { return NEPath{m, n, floor_steps(m, n)}; }

std::vector<NEPath> paths_above(const NEPath& gamma) {
  validate_nepath(gamma);
  std::vector<int> cap = gamma.prefix_u();
  std::vector<NEPath> out;
  std::vector<int> u(gamma.n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == gamma.n) {
      std::vector<int> e(gamma.n, 0);
      for (int j = 0; j + 1 < gamma.n; ++j) e[j] = u[j + 1] - u[j];
      e[gamma.n - 1] = gamma.m - u[gamma.n - 1];
      out.push_back(NEPath{gamma.m, gamma.n, std::move(e)});
      return;
    }
    for (int v = u[i - 1]; v <= cap[i]; ++v) {
      u[i] = v;
      rec(i + 1);
    }
  };
  if (gamma.n == 1)
    out.push_back(gamma);
  else
    rec(1);
  return out;
}

int area_between(const NEPath& delta, const NEPath& gamma) {
  validate_nepath(delta);
  validate_nepath(gamma);
  if (delta.m != gamma.m || delta.n != gamma.n)
    throw std::invalid_argument("paths live in different rectangles");
  std::vector<int> ud = delta.prefix_u(), ug = gamma.prefix_u();
  int area = 0;
  for (int i = 0; i < gamma.n; ++i) {
    if (ud[i] > ug[i])
      throw std::invalid_argument("path is not weakly above the base path");
    area += ug[i] - ud[i];
  }
  return area;
}

int nepath_dinv(const NEPath& path) {
  validate_nepath(path);
  std::vector<int> u = path.prefix_u();
  for (int i = 0; i < path.n; ++i)
    if (static_cast<long long>(path.n) * u[i] >
        static_cast<long long>(path.m) * i)
      throw std::invalid_argument("sweep statistic needs a path weakly above the diagonal");
  int g = std::gcd(path.m, path.n);
  return path_dinv(PathU{path.m / g, path.n / g, g, std::move(u)});
}

CtResult path_count_ct(const NEPath& gamma) {
  validate_nepath(gamma);
  const int n = gamma.n;
  FactoredRat fr(n);
  for (int i = 0; i < n; ++i) {
    fr.zmon()[i] -= gamma.e[i];
    fr.mul_den(QTRatio(1), unit_vec(n, i));
  }
  for (int i = 0; i + 1 < n; ++i)
    fr.mul_den(QTRatio::t(), ratio_vec(n, i, i + 1));
  return series_ct(fr, doubling_seed(gamma.m, n));
}

PathQtReport path_qt_check(int m, int n, const NEPath& gamma) {
  validate_nepath(gamma);
  if (gamma.m != m || gamma.n != n)
    throw std::invalid_argument("path does not match the given rectangle");
  CtResult lhs = series_ct(catalan_integrand(gamma.e), doubling_seed(m, n));
  QTPoly rhs;
  for (const NEPath& delta : paths_above(gamma))
    rhs += QTPoly::monomial(1, nepath_dinv(delta), area_between(delta, gamma));
  PathQtReport rep;
  rep.lhs = lhs.value;
  rep.rhs = QTRatio(rhs);
  rep.equal = rep.lhs == rep.rhs;
  rep.stabilized_at = lhs.stabilized_at;
  return rep;
}

SymF d_chain_ct(const Composition& alpha, const SymF& f) {
  const int m = static_cast<int>(alpha.size());
  if (m == 0) return f;
  long long raise = 0;
  for (int a : alpha)
    if (a > 0) raise += a;
  if (f.max_degree() + raise > degree_cap())
    throw std::domain_error(
        "operator chain: output degree exceeds the configured degree cap");

  using Key = std::vector<int>;
  auto add = [](std::map<Key, SymF>& acc, Key key, const SymF& g) {
    if (g.is_zero()) return;
    auto [it, fresh] = acc.try_emplace(std::move(key), g);
    if (!fresh) {
      it->second += g;
      if (it->second.is_zero()) acc.erase(it);
    }
  };

  // f[x + sum_i M/z_i] / z^alpha as a Laurent polynomial with symmetric
  // function coefficients: each part of each p_lambda either stays put or
  // lands on one of the variables.
  std::map<Key, SymF> cur;
  const QTRatio Mv = QTRatio::M();
  for (const auto& [lam, coeff] : f.p_coords()) {
    std::map<Key, SymF> part;
    part.emplace(Key(m, 0), SymF::one().scaled(coeff));
    for (int k : lam) {
      std::map<Key, SymF> next;
      const SymF pk = SymF::p(k);
      const QTRatio mk = Mv.adams(k);
      for (const auto& [key, g] : part) {
        add(next, key, g * pk);
        for (int i = 0; i < m; ++i) {
          Key k2 = key;
          k2[i] -= k;
          add(next, std::move(k2), g.scaled(mk));
        }
      }
      part.swap(next);
    }
    for (auto& [key, g] : part) add(cur, key, g);
  }
  {
    std::map<Key, SymF> shifted;
    for (auto& [key, g] : cur) {
      Key k2 = key;
      for (int i = 0; i < m; ++i) k2[i] -= alpha[i];
      add(shifted, std::move(k2), g);
    }
    cur.swap(shifted);
  }

  // Eliminate z_1, z_2, ... in order. Every power of z_v still missing must
  // come from the e-series kernel or from a cross ratio toward a later
  // variable, so the extraction at each step is finite.
  for (int v = 0; v < m; ++v) {
    std::map<Key, SymF> next;
    for (const auto& [key, g] : cur) {
      int w = -key[v];
      if (w < 0) continue;
      std::vector<int> transfer(m - 1 - v, 0);
      std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == static_cast<int>(transfer.size())) {
          int d = left;
          SymF term = g;
          if (d > 0) {
            term = term * SymF::e(d);
            if (d % 2 != 0) term = -term;
          }
          QTRatio c(1);
          for (int k : transfer)
            if (k > 0) c *= omega_ratio_coeff(k);
          Key k2 = key;
          k2[v] = 0;
          for (size_t j = 0; j < transfer.size(); ++j)
            k2[v + 1 + static_cast<int>(j)] -= transfer[j];
          add(next, std::move(k2), term.scaled(c));
          return;
        }
        for (int k = 0; k <= left; ++k) {
          transfer[pos] = k;
          rec(pos + 1, left - k);
        }
      };
      rec(0, w);
    }
    cur.swap(next);
  }

  if (cur.empty()) return SymF::zero();
  return cur.begin()->second;
}

}  // namespace qts
