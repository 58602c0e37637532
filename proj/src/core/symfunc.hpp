#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "partition.hpp"
#include "rational.hpp"

namespace qts {

/// Maximum homogeneous degree the engine will produce (series kernels and
/// creation operators refuse to go past it). Set once from configuration.
int degree_cap();
void set_degree_cap(int cap);

enum class Basis { p, e, h, m, s };
Basis basis_from_name(const std::string& name);
std::string basis_name(Basis b);

/// Symmetric function with coefficients in Q(q,t), stored in the power-sum
/// basis. Invariant: no zero coefficients, keys are valid partitions.
class SymF {
 public:
  SymF() = default;

  static SymF zero() { return SymF(); }
  static SymF one();
  /// Single basis element indexed by a partition (for p/e/h this is the
  /// product over parts).
  static SymF basis_elem(Basis b, const Partition& lam);
  static SymF p(int k);
  static SymF e(int k);
  static SymF h(int k);

  bool is_zero() const { return c_.empty(); }
  bool operator==(const SymF& o) const { return c_ == o.c_; }
  bool operator!=(const SymF& o) const { return !(c_ == o.c_); }

  /// Largest |lambda| with a nonzero coefficient; -1 for zero.
  int max_degree() const;
  bool is_homogeneous() const;
  /// Homogeneous component of degree d.
  SymF component(int d) const;

  const std::map<Partition, QTRatio>& p_coords() const { return c_; }
  QTRatio p_coord(const Partition& lam) const;
  void set_p_coord(const Partition& lam, const QTRatio& v);
  void add_p_term(const Partition& lam, const QTRatio& v);

  SymF operator+(const SymF& o) const;
  SymF operator-(const SymF& o) const;
  SymF operator-() const;
  SymF operator*(const SymF& o) const;
  SymF scaled(const QTRatio& v) const;
  SymF& operator+=(const SymF& o);
  SymF& operator-=(const SymF& o);

  /// omega involution: p_k -> (-1)^(k-1) p_k.
  SymF omega() const;
  /// f[c x]: p_k -> adams(c, k) * p_k.
  SymF scale_alphabet(const QTRatio& c) const;
  /// f[E] for a constant alphabet E in Q(q,t): p_k -> adams(E, k).
  QTRatio eval_alphabet(const QTRatio& E) const;
  /// Skew by p_1 (the e_1-perp operator): d/dp_1.
  SymF p1_perp() const;
  /// Substitute q -> q0 in every coefficient.
  SymF eval_q(const Rat& q0) const;
  SymF eval_t(const Rat& t0) const;

  /// Coordinates in another basis (exact change of basis per degree).
  std::map<Partition, QTRatio> coords(Basis b) const;
  static SymF from_coords(Basis b, const std::map<Partition, QTRatio>& coords);

  std::string text(Basis b = Basis::s) const;

 private:
  std::map<Partition, QTRatio> c_;
};

QTRatio hall_inner(const SymF& f, const SymF& g);
QTRatio star_inner(const SymF& f, const SymF& g);

/// Finite Laurent series in an auxiliary variable z with SymF coefficients.
class ZSeries {
 public:
  ZSeries() = default;
  static ZSeries from_symf(const SymF& f);  // concentrated at z^0

  bool is_zero() const { return c_.empty(); }
  const std::map<int, SymF>& terms() const { return c_; }
  SymF at(int k) const;
  void add_term(int k, const SymF& f);

  ZSeries operator+(const ZSeries& o) const;
  ZSeries operator*(const ZSeries& o) const;
  ZSeries scaled(const QTRatio& v) const;

 private:
  std::map<int, SymF> c_;  // exponent -> nonzero coefficient
};

/// Plethystic substitution p_k -> scale(k) * p_k + shift(k) * z^(-k),
/// applied multiplicatively over the parts of each p_lambda.
struct PlethRule {
  std::function<QTRatio(int)> scale;
  std::function<QTRatio(int)> shift;
};
ZSeries plethystic_substitute(const SymF& f, const PlethRule& rule);

/// Kernel series in z, truncated at top_degree:
///   H     = sum_{m>=0} z^m h_m
///   E     = sum_{i>=0} (-z)^i e_i
///   Eplus = sum_{b>=0} z^b e_b
enum class KernelMode { H, E, Eplus };
ZSeries omega_series(KernelMode mode, int top_degree);

/// The four one-parameter creation operators. Negative index is allowed for
/// D and Dstar (coefficient extraction below z^0).
enum class CreationKind { D, Dstar, C, B };
SymF creation_op(CreationKind kind, int index, const SymF& f);

/// Closed form for the D operator on a power-sum basis element; agrees with
/// creation_op(CreationKind::D, k, p_lambda) but costs a subset expansion of
/// lambda instead of a kernel-series product.
SymF d_on_p(int k, const Partition& lam);

/// d_on_p folded linearly over the power-sum expansion of f.
SymF d_operator(int k, const SymF& f);

/// Fundamental quasisymmetric coordinates of a degree-n symmetric function:
/// entry at bitmask S of {1..n-1} is the coefficient of F_{comp(S)}.
class QSymCoords {
 public:
  QSymCoords() = default;
  explicit QSymCoords(int degree);
  static QSymCoords from_symf(const SymF& f);

  int degree() const { return n_; }
  const QTRatio& at(unsigned mask) const;
  void add(unsigned mask, const QTRatio& v);
  bool operator==(const QSymCoords& o) const;

  /// Interpret the coordinates as a symmetric function, solving against the
  /// Schur F-expansions of this degree. Throws if not in the Schur span.
  SymF to_symf() const;

 private:
  int n_ = 0;
  std::vector<QTRatio> c_;
};

/// s_lambda evaluated at the alphabet 1 - u: zero unless lambda is a hook
/// (a, 1^b), in which case (-u)^b (1 - u).
QTRatio schur_hook_eval(const Partition& lam, const QTRatio& u);

}  // namespace qts
