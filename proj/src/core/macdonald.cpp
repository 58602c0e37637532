#include "macdonald.hpp"

#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "json_io.hpp"

namespace qts {

MuStats mu_stats(const Partition& mu) {
  if (!is_partition(mu)) throw std::domain_error("mu_stats: not a partition");
  MuStats st;
  st.mu = mu;
  QTRatio q = QTRatio::q(), t = QTRatio::t();
  int n_mu = 0, n_conj = 0;
  Partition conj = conjugate(mu);
  for (size_t i = 0; i < mu.size(); ++i) n_mu += static_cast<int>(i) * mu[i];
  for (size_t j = 0; j < conj.size(); ++j)
    n_conj += static_cast<int>(j) * conj[j];
  st.T = t.pow(n_mu) * q.pow(n_conj);
  st.B = QTRatio(0);
  st.Pi = QTRatio(1);
  st.w = QTRatio(1);
  for (Cell c : cells_of(mu)) {
    QTRatio cell = q.pow(c.col) * t.pow(c.row);  // coarm, coleg
    st.B += cell;
    if (c.row != 0 || c.col != 0) st.Pi *= QTRatio(1) - cell;
    int a = arm(mu, c), l = leg(mu, c);
    st.w *= (q.pow(a) - t.pow(l + 1)) * (t.pow(l) - q.pow(a + 1));
  }
  return st;
}

namespace {

using QMat = std::vector<std::vector<QTRatio>>;

// Per-degree eigendata. U holds the monomial coordinates of the deformed
// polynomials Htilde_mu[x(t-1)]; dominance triangularity makes it lower
// triangular in the canonical partition order, with nonzero diagonal.
struct MacTables {
  int n = 0;
  std::vector<Partition> parts;
  std::map<Partition, int> idx;
  std::vector<MuStats> stats;
  std::vector<SymF> H;
  QMat U;
};

std::mutex g_mac_mutex;
std::map<int, std::shared_ptr<const MacTables>> g_mac_cache;

QTRatio t_minus_1() { return QTRatio::t() - QTRatio(1); }

// Monomial-coordinate vector in the canonical order of degree n.
std::vector<QTRatio> m_vector(const SymF& f, const MacTables& T) {
  std::vector<QTRatio> v(T.parts.size());
  for (auto& [lam, c] : f.coords(Basis::m)) v[T.idx.at(lam)] = c;
  return v;
}

void finish_tables(std::shared_ptr<MacTables>& T) {
  size_t dim = T->parts.size();
  for (size_t i = 0; i < dim; ++i) {
    T->idx.emplace(T->parts[i], static_cast<int>(i));
    T->stats.push_back(mu_stats(T->parts[i]));
  }
  (void)dim;
}

std::shared_ptr<MacTables> build_mac_tables(int n) {
  auto T = std::make_shared<MacTables>();
  T->n = n;
  T->parts = partitions_of(n);
  finish_tables(T);
  size_t dim = T->parts.size();

  // D_0 conjugated by the deformation f -> f[x(t-1)], as a matrix on the
  // monomial basis. The canonical order is a linear extension of dominance
  // (larger in dominance comes first), so the matrix must come out lower
  // triangular with the D_0 eigenvalues on the diagonal.
  QTRatio def = t_minus_1();
  QTRatio def_inv = QTRatio(1) / def;
  QMat op(dim, std::vector<QTRatio>(dim));
  for (size_t col = 0; col < dim; ++col) {
    SymF pre = SymF::basis_elem(Basis::m, T->parts[col]).scale_alphabet(def_inv);
    SymF img = d_operator(0, pre).scale_alphabet(def);
    std::vector<QTRatio> v = m_vector(img, *T);
    for (size_t row = 0; row < dim; ++row) {
      if (row < col && !v[row].is_zero())
        throw std::logic_error("deformed D_0 is not dominance triangular");
      op[row][col] = v[row];
    }
    if (!(op[col][col] == T->stats[col].d0_eigenvalue()))
      throw std::logic_error("diagonal entry is not the expected eigenvalue");
  }

  T->U.assign(dim, std::vector<QTRatio>(dim));
  SymF hn = SymF::h(n);
  for (size_t m = 0; m < dim; ++m) {
    // Triangular eigenvector solve: x_m = 1, rows below follow directly.
    std::vector<QTRatio> x(dim);
    x[m] = QTRatio(1);
    QTRatio eig = T->stats[m].d0_eigenvalue();
    for (size_t i = m + 1; i < dim; ++i) {
      QTRatio acc;
      for (size_t j = m; j < i; ++j)
        if (!op[i][j].is_zero() && !x[j].is_zero()) acc += op[i][j] * x[j];
      if (acc.is_zero()) continue;
      x[i] = acc / (eig - op[i][i]);
    }
    SymF deformed;
    for (size_t i = 0; i < dim; ++i)
      if (!x[i].is_zero())
        deformed += SymF::basis_elem(Basis::m, T->parts[i]).scaled(x[i]);
    SymF H = deformed.scale_alphabet(def_inv);
    QTRatio lead = hall_inner(H, hn);  // Schur coefficient at the row shape
    if (lead.is_zero())
      throw std::logic_error("eigenvector has no one-row component");
    QTRatio scale = lead.inverse();
    T->H.push_back(H.scaled(scale));
    for (size_t i = 0; i < dim; ++i) T->U[i][m] = x[i] * scale;
  }
  return T;
}

std::shared_ptr<const MacTables> mac_tables(int n) {
  std::lock_guard<std::mutex> lock(g_mac_mutex);
  auto it = g_mac_cache.find(n);
  if (it != g_mac_cache.end()) return it->second;
  auto T = build_mac_tables(n);
  return g_mac_cache.emplace(n, std::move(T)).first->second;
}

// Htilde coordinates of a homogeneous component, by forward substitution
// against the triangular deformed columns.
std::vector<QTRatio> h_coords(const SymF& comp, const MacTables& T) {
  size_t dim = T.parts.size();
  std::vector<QTRatio> w = m_vector(comp.scale_alphabet(t_minus_1()), T);
  std::vector<QTRatio> x(dim);
  for (size_t i = 0; i < dim; ++i) {
    QTRatio acc = w[i];
    for (size_t j = 0; j < i; ++j)
      if (!T.U[i][j].is_zero() && !x[j].is_zero()) acc -= T.U[i][j] * x[j];
    if (!acc.is_zero()) x[i] = acc / T.U[i][i];
  }
  return x;
}

// Apply a per-mu multiplier to the Htilde expansion of f.
SymF eigen_apply(const SymF& f,
                 const std::function<QTRatio(const MuStats&)>& weight) {
  SymF out;
  std::map<int, SymF> by_degree;
  for (auto& [lam, c] : f.p_coords())
    by_degree[part_size(lam)].add_p_term(lam, c);
  for (auto& [deg, comp] : by_degree) {
    if (deg == 0) {
      out += comp;  // constants are fixed by every eigenoperator here
      continue;
    }
    auto T = mac_tables(deg);
    std::vector<QTRatio> x = h_coords(comp, *T);
    for (size_t mi = 0; mi < T->parts.size(); ++mi) {
      if (x[mi].is_zero()) continue;
      QTRatio wgt = weight(T->stats[mi]);
      if (wgt.is_zero()) continue;
      out += T->H[mi].scaled(x[mi] * wgt);
    }
  }
  return out;
}

}  // namespace

SymF macdonald_H(const Partition& mu) {
  if (mu.empty()) return SymF::one();
  auto T = mac_tables(part_size(mu));
  return T->H[T->idx.at(mu)];
}

std::map<Partition, QTRatio> macdonald_coords(const SymF& f) {
  std::map<Partition, QTRatio> out;
  std::map<int, SymF> by_degree;
  for (auto& [lam, c] : f.p_coords())
    by_degree[part_size(lam)].add_p_term(lam, c);
  for (auto& [deg, comp] : by_degree) {
    if (deg == 0) {
      out[{}] = comp.p_coord({});
      continue;
    }
    auto T = mac_tables(deg);
    std::vector<QTRatio> x = h_coords(comp, *T);
    for (size_t mi = 0; mi < T->parts.size(); ++mi)
      if (!x[mi].is_zero()) out[T->parts[mi]] = x[mi];
  }
  return out;
}

SymF nabla(const SymF& f) {
  return eigen_apply(f, [](const MuStats& st) { return st.T; });
}

SymF nabla_inverse(const SymF& f) {
  return eigen_apply(f, [](const MuStats& st) { return st.T.inverse(); });
}

SymF delta_op(const SymF& g, const SymF& f, bool primed) {
  return eigen_apply(f, [&](const MuStats& st) {
    return g.eval_alphabet(primed ? st.B - QTRatio(1) : st.B);
  });
}

void save_macdonald_cache(const std::string& path, int degree) {
  auto T = mac_tables(degree);
  nlohmann::json entries = nlohmann::json::array();
  for (size_t i = 0; i < T->parts.size(); ++i) {
    nlohmann::json e;
    e["mu"] = T->parts[i];
    e["Htilde"] = symf_to_json(T->H[i], Basis::s);
    entries.push_back(std::move(e));
  }
  nlohmann::json j;
  j["version"] = 1;
  j["degree"] = degree;
  j["checksum"] = checksum_hex(entries.dump());
  j["entries"] = std::move(entries);
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write cache file: " + path);
  os << j.dump(1) << "\n";
}

bool load_macdonald_cache(const std::string& path) {
  std::ifstream is(path);
  if (!is) return false;
  nlohmann::json j;
  try {
    is >> j;
    if (j.at("version").get<int>() != 1) return false;
    int degree = j.at("degree").get<int>();
    auto& entries = j.at("entries");
    if (j.at("checksum").get<std::string>() != checksum_hex(entries.dump()))
      return false;
    auto T = std::make_shared<MacTables>();
    T->n = degree;
    T->parts = partitions_of(degree);
    finish_tables(T);
    size_t dim = T->parts.size();
    if (entries.size() != dim) return false;
    T->H.assign(dim, SymF());
    for (auto& e : entries) {
      Partition mu = e.at("mu").get<Partition>();
      auto it = T->idx.find(mu);
      if (it == T->idx.end()) return false;
      T->H[it->second] = symf_from_json(e.at("Htilde"));
    }
    T->U.assign(dim, std::vector<QTRatio>(dim));
    for (size_t m = 0; m < dim; ++m) {
      if (T->H[m].is_zero()) return false;
      std::vector<QTRatio> x =
          m_vector(T->H[m].scale_alphabet(t_minus_1()), *T);
      for (size_t i = 0; i < dim; ++i) {
        if (i < m && !x[i].is_zero()) return false;
        T->U[i][m] = x[i];
      }
      if (T->U[m][m].is_zero()) return false;
    }
    std::lock_guard<std::mutex> lock(g_mac_mutex);
    g_mac_cache[degree] = std::move(T);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace qts
