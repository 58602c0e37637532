#pragma once

#include <map>
#include <vector>

#include "symfunc.hpp"

namespace qts {

/// Word-length guard for the operator recursion: Q(m,n) refuses pairs with
/// m+n above this (the N substitution grows exponentially). Set once from
/// configuration.
int mn_cap();
void set_mn_cap(int cap);

/// Word in the generators D_k; the letter value is the index k.
using Word = std::vector<int>;

/// Formal Q(q,t)-linear combination of words in {D_k}. The empty word is
/// the identity operator. Invariant: no zero coefficients.
class OpExpr {
 public:
  OpExpr() = default;
  static OpExpr zero() { return OpExpr(); }
  static OpExpr identity();
  static OpExpr letter(int k);

  bool is_zero() const { return c_.empty(); }
  bool operator==(const OpExpr& o) const { return c_ == o.c_; }
  const std::map<Word, QTRatio>& terms() const { return c_; }
  void add_term(const Word& w, const QTRatio& v);
  std::size_t word_count() const { return c_.size(); }

  OpExpr operator+(const OpExpr& o) const;
  OpExpr operator-(const OpExpr& o) const;
  /// Operator composition: words concatenate, left factor outermost.
  OpExpr operator*(const OpExpr& o) const;
  OpExpr scaled(const QTRatio& v) const;

 private:
  std::map<Word, QTRatio> c_;
};

OpExpr commutator(const OpExpr& x, const OpExpr& y);  // xy - yx

/// The SL2 letter maps: S shifts every letter up by one; N replaces each
/// letter k >= 0 by (-1)^k M^{-k} delta_{D_1}^k D_0 expanded into words.
OpExpr S_act(const OpExpr& x);
OpExpr N_act(const OpExpr& x);

/// Unique decomposition (a,b)+(c,d) of a coprime pair with mb+1 = na,
/// including the one-row and one-column edge cases.
struct SplitResult {
  std::pair<int, int> ab;
  std::pair<int, int> cd;
};
SplitResult split(int m, int n);

/// Q operator for any pair of positive integers, by the letter recursion:
/// Q(1,v) = D_v; u < v shifts with S; u > v substitutes with N; u = v is
/// M^{1-u} [delta_{D_1}^{u-2} D_2, D_0]. Results are cached.
OpExpr Q_operator(int m, int n);

/// Apply an operator expression to a symmetric function. Each word folds
/// right to left through the D creation operator; the single-letter action
/// on power-sum basis elements is memoized globally.
SymF apply(const OpExpr& x, const SymF& f);

/// Apply Q(m,n) to f. For m > n the outermost N substitution of the word
/// recursion is evaluated block by block through the commutator binomial,
/// avoiding the exponential word expansion; the cap is checked against the
/// reduced pair (m-n, n). For m <= n this is apply(Q_operator(m, n), f).
SymF apply_q(int m, int n, const SymF& f);

/// Coordinates of a degree-k symmetric function in the rescaled complete
/// basis h_lambda[x;q,t] = (qt/(qt-1))^len prod_i h_{lambda_i}[(1-qt)x/qt].
std::map<Partition, QTRatio> algF_expand(const SymF& f);
/// The rescaled basis element itself.
SymF hstar_basis(const Partition& lam);

/// Two-step construction: expand f over hstar and substitute each factor
/// with Q in the (m,n) direction: sum_lambda c_lambda prod_i Q(m l_i, n l_i).
OpExpr build_F(const SymF& f, int m, int n);

/// Hall-Littlewood style vectors feeding the compositional operators.
SymF c_alpha_vector(const Composition& alpha);  // C_alpha . 1
SymF b_beta_vector(const Composition& beta);    // B_beta . 1
SymF e_kr_vector(int k, int r);                 // sum of C_alpha . 1, len r

/// Compositional operators: build_F of the matching vector.
OpExpr comp_C_op(const Composition& alpha, int m, int n);
OpExpr comp_B_op(const Composition& beta, int m, int n);
OpExpr comp_E_op(int k, int r, int m, int n);
OpExpr e_mn_op(int k, int m, int n);  // f = e_k

/// The modified creation chains: Phi_1 = Q(2,1), Phi_{k+1} = (1/M)[D_1,Phi_k];
/// Psi_2 = D_2, Psi_{k+1} = (1/M)[Psi_k, D_1]. (Psi_1 is multiplication by
/// -e_1 and has no word form.)
OpExpr phi_op(int k);
OpExpr psi_op(int k);

}  // namespace qts
