#include "opwords.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qts {

namespace {

std::atomic<int> g_mn_cap{14};

}  // namespace

int mn_cap() { return g_mn_cap.load(); }

void set_mn_cap(int cap) {
  if (cap < 2) throw std::domain_error("operator cap must be at least 2");
  g_mn_cap.store(cap);
}

OpExpr OpExpr::identity() {
  OpExpr x;
  x.c_.emplace(Word{}, QTRatio(1));
  return x;
}

OpExpr OpExpr::letter(int k) {
  OpExpr x;
  x.c_.emplace(Word{k}, QTRatio(1));
  return x;
}

void OpExpr::add_term(const Word& w, const QTRatio& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = c_.emplace(w, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) c_.erase(it);
  }
}

OpExpr OpExpr::operator+(const OpExpr& o) const {
  OpExpr out = *this;
  for (auto& [w, v] : o.c_) out.add_term(w, v);
  return out;
}

OpExpr OpExpr::operator-(const OpExpr& o) const {
  OpExpr out = *this;
  for (auto& [w, v] : o.c_) out.add_term(w, -v);
  return out;
}

OpExpr OpExpr::operator*(const OpExpr& o) const {
  OpExpr out;
  for (auto& [wa, va] : c_) {
    for (auto& [wb, vb] : o.c_) {
      Word joined = wa;
      joined.insert(joined.end(), wb.begin(), wb.end());
      out.add_term(joined, va * vb);
    }
  }
  return out;
}

OpExpr OpExpr::scaled(const QTRatio& v) const {
  OpExpr out;
  if (v.is_zero()) return out;
  for (auto& [w, c] : c_) out.c_.emplace(w, c * v);
  return out;
}

OpExpr commutator(const OpExpr& x, const OpExpr& y) { return x * y - y * x; }

OpExpr S_act(const OpExpr& x) {
  OpExpr out;
  for (auto& [w, v] : x.terms()) {
    Word shifted = w;
    for (int& k : shifted) ++k;
    out.add_term(shifted, v);
  }
  return out;
}

namespace {

// (-1)^k M^{-k} delta_{D_1}^k D_0 with delta_Y X = XY - YX, expanded:
// sum_r (-1)^r C(k,r) D_1^r D_0 D_1^{k-r}, all over ((-1)M)^k.
OpExpr n_letter(int k) {
  if (k < 0)
    throw std::domain_error("N substitution needs non-negative letters");
  if (k == 0) return OpExpr::letter(0);
  OpExpr out;
  Rat binom(1);
  for (int r = 0; r <= k; ++r) {
    Word w;
    w.insert(w.end(), r, 1);
    w.push_back(0);
    w.insert(w.end(), k - r, 1);
    Rat c = (r % 2) ? -binom : binom;
    out.add_term(w, QTRatio(c));
    binom = binom * Rat(k - r) / Rat(r + 1);
  }
  QTRatio mk = QTRatio::M().pow(k).inverse();
  if (k % 2) mk = -mk;
  return out.scaled(mk);
}

}  // namespace

OpExpr N_act(const OpExpr& x) {
  OpExpr out;
  for (auto& [w, v] : x.terms()) {
    OpExpr word_expr = OpExpr::identity().scaled(v);
    for (int k : w) word_expr = word_expr * n_letter(k);
    out = out + word_expr;
  }
  return out;
}

SplitResult split(int m, int n) {
  if (m < 1 || n < 1) throw std::domain_error("split needs positive m, n");
  if (std::gcd(m, n) != 1)
    throw std::domain_error("split needs a coprime pair");
  if (m == 1) return {{1, n - 1}, {0, 1}};
  if (n == 1) return {{1, 0}, {m - 1, 1}};
  for (int a = 1; a <= m - 1; ++a) {
    // mb + 1 = na determines b when divisible.
    int num = n * a - 1;
    if (num % m != 0) continue;
    int b = num / m;
    if (b >= 1 && b <= n - 1) return {{a, b}, {m - a, n - b}};
  }
  throw std::logic_error("split: no admissible pair found");
}

namespace {

OpExpr q_impl(int u, int v);

OpExpr q_equal_case(int u) {
  // M^{1-u} [delta_{D_1}^{u-2} D_2, D_0].
  OpExpr x = OpExpr::letter(2);
  OpExpr d1 = OpExpr::letter(1);
  for (int i = 0; i < u - 2; ++i) x = x * d1 - d1 * x;
  OpExpr out = commutator(x, OpExpr::letter(0));
  return out.scaled(QTRatio::M().pow(u - 1).inverse());
}

OpExpr q_impl(int u, int v) {
  if (u == 1) return OpExpr::letter(v);
  if (u < v) return S_act(q_impl(u, v - u));
  if (u > v) return N_act(q_impl(u - v, v));
  return q_equal_case(u);
}

}  // namespace

OpExpr Q_operator(int m, int n) {
  if (m < 1 || n < 1)
    throw std::domain_error("Q operator needs positive indices");
  if (m + n > mn_cap()) {
    std::ostringstream os;
    os << "Q(" << m << "," << n
       << ") exceeds the configured operator cap m+n <= " << mn_cap();
    throw std::domain_error(os.str());
  }
  static std::mutex mu;
  static std::map<std::pair<int, int>, OpExpr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(m, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  OpExpr out = q_impl(m, n);
  return cache.emplace(std::move(key), std::move(out)).first->second;
}

namespace {

// Global memo for the single-letter action on power-sum basis elements.
std::shared_mutex g_apply_mutex;
std::map<std::pair<int, Partition>, SymF> g_apply_cache;

SymF apply_letter(int k, const SymF& f) {
  SymF out;
  int cap = degree_cap();
  for (auto& [lam, c] : f.p_coords()) {
    int deg = 0;
    for (int part : lam) deg += part;
    if (deg + k > cap)
      throw std::domain_error(
          "creation_op output degree exceeds the configured degree cap");
    auto key = std::make_pair(k, lam);
    {
      std::shared_lock<std::shared_mutex> lock(g_apply_mutex);
      auto it = g_apply_cache.find(key);
      if (it != g_apply_cache.end()) {
        out += it->second.scaled(c);
        continue;
      }
    }
    SymF img = d_on_p(k, lam);
    {
      std::unique_lock<std::shared_mutex> lock(g_apply_mutex);
      g_apply_cache.emplace(std::move(key), img);
    }
    out += img.scaled(c);
  }
  return out;
}

std::string word_text(const Word& w) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << "]";
  return os.str();
}

}  // namespace

SymF apply(const OpExpr& x, const SymF& f) {
  SymF out;
  int cap = degree_cap();
  for (auto& [w, v] : x.terms()) {
    // Precheck the degree bound so the cap contract does not depend on
    // which letter images happen to be memoized already.
    int bound = f.max_degree();
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (bound + *it > cap)
        throw std::domain_error(
            "applying word " + word_text(w) +
            ": output degree exceeds the configured degree cap");
      bound += *it;
    }
    SymF cur = f;
    try {
      for (auto it = w.rbegin(); it != w.rend(); ++it)
        cur = apply_letter(*it, cur);
    } catch (const std::domain_error& e) {
      throw std::domain_error("applying word " + word_text(w) + ": " +
                              e.what());
    }
    out += cur.scaled(v);
  }
  return out;
}

namespace {

// Graded operator block: images of the power-sum basis elements of one
// source degree.
using OpBlock = std::map<Partition, SymF>;

// f homogeneous of the block's source degree; result is Sum f_lam B[lam].
SymF apply_block(const OpBlock& B, const SymF& f) {
  SymF out;
  for (auto& [lam, c] : f.p_coords()) {
    auto it = B.find(lam);
    if (it != B.end()) out += it->second.scaled(c);
  }
  return out;
}

// Exact division of every coefficient by M = (1-q)(1-t); coefficients met
// with a nontrivial denominator fall back to ratio arithmetic.
SymF div_m_exact(const SymF& f) {
  static const QTPoly mpoly = QTPoly::parse("1 - q - t + q*t");
  static const QTRatio minv = QTRatio::M().inverse();
  SymF out;
  for (auto& [lam, c] : f.p_coords()) {
    if (c.den().is_one()) {
      out.add_p_term(lam, QTRatio(c.num().divexact(mpoly)));
    } else {
      out.add_p_term(lam, c * minv);
    }
  }
  return out;
}

// Iterated bracket block c_j = (delta_{D_1}^j D_0) / M^j on sources of
// degree d, with delta_Y X = XY - YX. Each bracket level divides by M
// exactly, so entries stay at the reduced operator's size. Memoized (j, d).
std::shared_mutex g_cblock_mutex;
std::map<std::pair<int, int>, OpBlock> g_cblock_cache;

const OpBlock& c_block(int j, int d) {
  auto key = std::make_pair(j, d);
  {
    std::shared_lock<std::shared_mutex> lock(g_cblock_mutex);
    auto it = g_cblock_cache.find(key);
    if (it != g_cblock_cache.end()) return it->second;
  }
  auto dbg0 = std::chrono::steady_clock::now();
  OpBlock blk;
  if (j == 0) {
    for (const auto& lam : partitions_of(d)) blk.emplace(lam, d_on_p(0, lam));
  } else {
    const OpBlock& inner_up = c_block(j - 1, d + 1);
    const OpBlock& inner = c_block(j - 1, d);
    for (const auto& lam : partitions_of(d)) {
      SymF xy = apply_block(inner_up, d_on_p(1, lam));
      SymF yx = apply_letter(1, inner.at(lam));
      blk.emplace(lam, div_m_exact(xy - yx));
    }
  }
  {
    long dbg_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - dbg0)
                      .count();
    size_t tt = 0;
    for (auto& [lam, im] : blk)
      for (auto& [nu, c] : im.p_coords()) tt += c.num().terms().size();
    fprintf(stderr, "cblock j=%d d=%d ms=%ld totterms=%zu\n", j, d, dbg_ms,
            tt);
  }
  std::unique_lock<std::shared_mutex> lock(g_cblock_mutex);
  return g_cblock_cache.emplace(std::move(key), std::move(blk)).first->second;
}

// One letter of the N substitution as a block on degree-d sources:
//   N(D_k) = (-1)^k M^{-k} delta_{D_1}^k D_0 = (-1)^k c_k.
SymF n_letter_fold(int k, const SymF& f) {
  if (f.is_zero()) return f;
  int d = f.max_degree();
  SymF out = apply_block(c_block(k, d), f);
  return k % 2 ? -out : out;
}

// Q(m,n) applied to a power-sum basis element, memoized. For m > n the
// outermost N substitution of the recursion Q(m,n) = N(Q(m-n,n)) is folded
// letter block by letter block through the shared bracket blocks, avoiding
// the exponential word expansion.
std::shared_mutex g_qimg_mutex;
std::map<std::tuple<int, int, Partition>, SymF> g_qimg_cache;

const SymF& q_image(int m, int n, const Partition& lam) {
  auto key = std::make_tuple(m, n, lam);
  {
    std::shared_lock<std::shared_mutex> lock(g_qimg_mutex);
    auto it = g_qimg_cache.find(key);
    if (it != g_qimg_cache.end()) return it->second;
  }
  SymF img;
  if (m <= n) {
    img = apply(Q_operator(m, n), SymF::basis_elem(Basis::p, lam));
  } else {
    OpExpr x = Q_operator(m - n, n);
    for (auto& [w, v] : x.terms()) {
      SymF cur = SymF::basis_elem(Basis::p, lam);
      for (auto it = w.rbegin(); it != w.rend(); ++it)
        cur = n_letter_fold(*it, cur);
      img += cur.scaled(v);
    }
  }
  std::unique_lock<std::shared_mutex> lock(g_qimg_mutex);
  return g_qimg_cache.emplace(std::move(key), std::move(img)).first->second;
}

}  // namespace

SymF apply_q(int m, int n, const SymF& f) {
  if (m < 1 || n < 1)
    throw std::domain_error("Q operator needs positive indices");
  // Only the reduced pair (m-n, n) counts against the word cap; the degree
  // cap applies to the true output degree.
  if (m > n) (void)Q_operator(m - n, n);
  int cap = degree_cap();
  SymF out;
  for (auto& [lam, c] : f.p_coords()) {
    int deg = 0;
    for (int part : lam) deg += part;
    if (deg + n > cap)
      throw std::domain_error(
          "applying Q: output degree exceeds the configured degree cap");
    out += q_image(m, n, lam).scaled(c);
  }
  return out;
}

SymF hstar_basis(const Partition& lam) {
  QTRatio qt = QTRatio::qt();
  QTRatio scale = (QTRatio(1) - qt) / qt;
  QTRatio pre = (qt / (qt - QTRatio(1))).pow(static_cast<int>(lam.size()));
  SymF out = SymF::one();
  for (int part : lam) out = out * SymF::h(part).scale_alphabet(scale);
  return out.scaled(pre);
}

std::map<Partition, QTRatio> algF_expand(const SymF& f) {
  if (f.is_zero() || !f.is_homogeneous() || f.max_degree() < 1)
    throw std::domain_error(
        "algF_expand needs a nonzero homogeneous input of positive degree");
  int k = f.max_degree();
  const auto& parts = partitions_of(k);
  size_t dim = parts.size();
  std::map<Partition, int> idx;
  for (size_t i = 0; i < dim; ++i) idx.emplace(parts[i], static_cast<int>(i));

  std::vector<std::vector<QTRatio>> aug(dim,
                                        std::vector<QTRatio>(dim + 1));
  for (size_t j = 0; j < dim; ++j) {
    SymF col = hstar_basis(parts[j]);
    for (auto& [lam, c] : col.p_coords()) aug[idx.at(lam)][j] = c;
  }
  for (auto& [lam, c] : f.p_coords()) aug[idx.at(lam)][dim] = c;

  for (size_t col = 0; col < dim; ++col) {
    size_t piv = col;
    while (piv < dim && aug[piv][col].is_zero()) ++piv;
    if (piv == dim)
      throw std::logic_error("hstar basis came out singular");
    std::swap(aug[piv], aug[col]);
    QTRatio d = aug[col][col];
    for (size_t j = col; j <= dim; ++j) aug[col][j] /= d;
    for (size_t r = 0; r < dim; ++r) {
      if (r == col || aug[r][col].is_zero()) continue;
      QTRatio fct = aug[r][col];
      for (size_t j = col; j <= dim; ++j) aug[r][j] -= fct * aug[col][j];
    }
  }
  std::map<Partition, QTRatio> out;
  for (size_t i = 0; i < dim; ++i)
    if (!aug[i][dim].is_zero()) out.emplace(parts[i], aug[i][dim]);
  return out;
}

OpExpr build_F(const SymF& f, int m, int n) {
  if (std::gcd(m, n) != 1)
    throw std::domain_error("build_F needs a coprime direction (m,n)");
  OpExpr out;
  for (auto& [lam, c] : algF_expand(f)) {
    OpExpr prod = OpExpr::identity();
    for (int part : lam) prod = prod * Q_operator(m * part, n * part);
    out = out + prod.scaled(c);
  }
  return out;
}

SymF c_alpha_vector(const Composition& alpha) {
  SymF acc = SymF::one();
  for (auto it = alpha.rbegin(); it != alpha.rend(); ++it)
    acc = creation_op(CreationKind::C, *it, acc);
  return acc;
}

SymF b_beta_vector(const Composition& beta) {
  SymF acc = SymF::one();
  for (auto it = beta.rbegin(); it != beta.rend(); ++it)
    acc = creation_op(CreationKind::B, *it, acc);
  return acc;
}

SymF e_kr_vector(int k, int r) {
  if (r < 1 || r > k) throw std::domain_error("e_kr_vector needs 1 <= r <= k");
  SymF acc;
  for (auto& alpha : compositions_of_length(k, r)) acc += c_alpha_vector(alpha);
  return acc;
}

OpExpr comp_C_op(const Composition& alpha, int m, int n) {
  return build_F(c_alpha_vector(alpha), m, n);
}

OpExpr comp_B_op(const Composition& beta, int m, int n) {
  return build_F(b_beta_vector(beta), m, n);
}

OpExpr comp_E_op(int k, int r, int m, int n) {
  return build_F(e_kr_vector(k, r), m, n);
}

OpExpr e_mn_op(int k, int m, int n) { return build_F(SymF::e(k), m, n); }

OpExpr phi_op(int k) {
  if (k < 1) throw std::domain_error("phi_op needs k >= 1");
  OpExpr acc = Q_operator(2, 1);
  OpExpr d1 = OpExpr::letter(1);
  QTRatio minv = QTRatio::M().inverse();
  for (int i = 1; i < k; ++i) acc = commutator(d1, acc).scaled(minv);
  return acc;
}

OpExpr psi_op(int k) {
  if (k < 2)
    throw std::domain_error("psi_op needs k >= 2 (Psi_1 is not a word)");
  OpExpr acc = OpExpr::letter(2);
  OpExpr d1 = OpExpr::letter(1);
  QTRatio minv = QTRatio::M().inverse();
  for (int i = 2; i < k; ++i) acc = commutator(acc, d1).scaled(minv);
  return acc;
}

}  // namespace qts
