#pragma once

#include <string>
#include <vector>

#include "partition.hpp"
#include "rational.hpp"
#include "symfunc.hpp"

namespace qts {

/// Linear factor (1 - c * z^w) in Laurent monomials of z_1..z_n; w[k] holds
/// the exponent of z_{k+1}.
struct CtFactor {
  QTRatio c;
  std::vector<int> w;
  bool operator==(const CtFactor& o) const { return c == o.c && w == o.w; }
};

/// scalar * z^zmon * prod(num) / prod(den) with every factor of the form
/// (1 - c z^w). Working form for constant-term integrands: factors are only
/// ever removed by literal cancellation or by substitution, never expanded.
class FactoredRat {
 public:
  explicit FactoredRat(int nvars);

  int nvars() const { return nvars_; }
  const QTRatio& scalar() const { return scalar_; }
  void scale(const QTRatio& c) { scalar_ *= c; }
  std::vector<int>& zmon() { return zmon_; }
  const std::vector<int>& zmon() const { return zmon_; }
  const std::vector<CtFactor>& num() const { return num_; }
  const std::vector<CtFactor>& den() const { return den_; }

  void mul_num(const QTRatio& c, std::vector<int> w);
  void mul_den(const QTRatio& c, std::vector<int> w);

  /// Remove literally identical numerator/denominator factor pairs
  /// (multiset cancellation).
  void cancel();

  /// z_{var+1} := value (a nonzero constant). A denominator factor that
  /// becomes a vanished constant throws; a vanished numerator factor
  /// collapses the whole expression to zero. Non-vanished constants fold
  /// into the scalar.
  void substitute(int var, const QTRatio& value);

  bool is_zero() const { return scalar_.is_zero(); }
  /// The value once nothing depends on a variable any more; throws if a
  /// factor or the monomial prefactor still mentions one.
  QTRatio value() const;

 private:
  int nvars_;
  QTRatio scalar_;
  std::vector<int> zmon_;
  std::vector<CtFactor> num_, den_;
};

struct CtResult {
  QTRatio value;
  /// Truncation order whose result first agreed with the preceding run of
  /// the doubling protocol.
  int stabilized_at = 0;
};

/// Constant term of fr in z_1..z_n. Every denominator factor is expanded as
/// a geometric series on the lattice substitution r_j = z_j/z_{j+1},
/// s = z_n, under which each factor monomial must be nonconstant with
/// nonnegative exponents (checked, throws logic_error otherwise). Each
/// factor is truncated at `order` terms and the order doubled until two
/// consecutive runs agree, the earlier of which must already cover the
/// target box so that agreement certifies the exact value.
CtResult series_ct(const FactoredRat& fr, int order);

/// Floor-difference sequence floor(i m / n) - floor((i-1) m / n), i = 1..n.
std::vector<int> floor_steps(int m, int n);

/// Rational q,t-Catalan integrand on n = b.size() variables:
///   prod_i 1/((1 - z_i) z_i^{b_i}) * prod_{i<n} 1/(1 - qt z_i/z_{i+1})
///   * prod_{i<j} (1 - z_i/z_j)(1 - qt z_i/z_j)
///               / ((1 - t z_i/z_j)(1 - q z_i/z_j)).
FactoredRat catalan_integrand(const std::vector<int>& b);

/// C_{m,n}(q,t) as the constant term of the Catalan integrand at the
/// staircase exponents floor_steps(m, n); requires coprime m, n >= 1.
CtResult catalan_series(int m, int n);

/// The same constant term for an arbitrary exponent sequence, given in the
/// reflected order used by the tableau expansion: requires b_1 >= 0 and
/// b_i >= -1 for i >= 2. catalan_series(m, n) is the special case
/// b = reverse(floor_steps(m, n)).
CtResult generalized_b_ct(const std::vector<int>& b);

/// The same quantity evaluated exactly as a finite sum over the standard
/// Young tableaux with n cells: each tableau contributes the integrand in
/// reflected orientation times the guards prod_k (1 - z_k w_T(k)), with
/// z_1, ..., z_n substituted in turn by 1/w_T(k) after cancellation, where
/// w_T(k) = q^(col) t^(row) at the cell of k.
QTRatio tableau_b_sum(const std::vector<int>& b);
QTRatio catalan_tableaux(int m, int n);

/// C_{m,n}(q,t) through the operator calculus: the Hall pairing of
/// Q_{m,n} applied to (-1)^n against e_n, i.e. the s_{1^n} coefficient of
/// the image.
QTRatio catalan_pairing(int m, int n);

/// NE-path in the m x n rectangle: e[j] east steps at height j+1, none at
/// height 0, summing to m.
struct NEPath {
  int m = 0;
  int n = 0;
  std::vector<int> e;

  /// Column of the north step out of each height 0..n-1 (prefix sums of e).
  std::vector<int> prefix_u() const;
  bool operator==(const NEPath& o) const = default;
};

/// The path closest to the diagonal (0,0) -> (m,n) from above.
NEPath staircase_path(int m, int n);
/// Every NE-path of the same rectangle weakly above gamma, ascending in the
/// lex order of their prefix columns.
std::vector<NEPath> paths_above(const NEPath& gamma);
/// Number of lattice cells between delta and gamma; requires delta weakly
/// above gamma.
int area_between(const NEPath& delta, const NEPath& gamma);
/// Sweep statistic of a path weakly above the diagonal, matching the
/// parking model at (km, kn) = (m, n).
int nepath_dinv(const NEPath& path);

/// t-enumerator of the paths weakly above gamma by the constant term
///   z^{-gamma} prod_i 1/(1 - z_i) prod_{i<n} 1/(1 - t z_i/z_{i+1}) |_{z^0},
/// which equals sum_{delta >= gamma} t^area(delta/gamma) exactly.
CtResult path_count_ct(const NEPath& gamma);

/// Both sides of the q,t-refinement of the path count: the Catalan
/// integrand at the exponents of gamma against the weighted path sum
/// sum_{delta >= gamma} q^dinv(delta) t^area(delta/gamma).
struct PathQtReport {
  QTRatio lhs;
  QTRatio rhs;
  bool equal = false;
  int stabilized_at = 0;
};
PathQtReport path_qt_check(int m, int n, const NEPath& gamma);

/// D_{a_m} ... D_{a_1} f through the multivariate constant term
///   f[x + sum_i M/z_i] Omega[-zX] / z^alpha
///     * prod_{i<j} Omega[-M z_i/z_j] |_{z^0},
/// eliminating z_1, ..., z_m in order; every elimination step is a finite
/// coefficient extraction.
SymF d_chain_ct(const Composition& alpha, const SymF& f);

}  // namespace qts
