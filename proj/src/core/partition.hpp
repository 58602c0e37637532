#pragma once

#include <vector>

#include "rational.hpp"

namespace qts {

/// Weakly decreasing positive parts; {} is the empty partition.
using Partition = std::vector<int>;
/// Positive parts in a fixed order.
using Composition = std::vector<int>;

bool is_partition(const Partition& p);
int part_size(const std::vector<int>& p);  // sum of parts
Partition conjugate(const Partition& p);
/// Dominance order: a <= b (same size required by caller).
bool dominates_leq(const Partition& a, const Partition& b);
/// All partitions of n, in the fixed canonical order used by all
/// per-degree tables: descending lexicographic, (n) first, (1^n) last.
const std::vector<Partition>& partitions_of(int n);
/// z_lambda = prod_i i^{m_i} m_i!.
Rat z_factor(const Partition& p);
/// Union of parts (multiset merge), kept weakly decreasing.
Partition merge_parts(const Partition& a, const Partition& b);

/// Cell (row, col), 0-based, row 0 is the longest row (English convention).
struct Cell {
  int row = 0;
  int col = 0;
};
std::vector<Cell> cells_of(const Partition& p);
int arm(const Partition& p, Cell c);
int leg(const Partition& p, Cell c);

/// Murnaghan-Nakayama character chi^lambda(mu), |lambda| = |mu|.
Int mn_character(const Partition& lambda, const Partition& mu);

/// All compositions of n (2^(n-1) of them), in subset order of the
/// partial-sum encoding.
std::vector<Composition> compositions_of(int n);
std::vector<Composition> compositions_of_length(int n, int len);
/// Subset of {1..n-1} of partial sums <-> composition of n.
Composition comp_from_subset(unsigned mask, int n);
unsigned subset_from_comp(const Composition& a);

/// Refinements of beta in reversed block order: every alpha that
/// concatenates alpha^(L), ..., alpha^(1) with alpha^(i) a composition of
/// beta_i, together with the statistic sum_i (i-1)*length(alpha^(i)).
std::vector<std::pair<Composition, int>> reversed_refinements(
    const Composition& beta);

/// Standard Young tableaux of shape p, each as the vector of row indices:
/// entry k-1 holds the row of value k. Generated by successive
/// outer-corner additions.
std::vector<std::vector<int>> standard_tableaux(const Partition& p);
/// Descent set of an SYT given as row-index vector: {i : row(i+1) > row(i)}.
unsigned syt_descent_mask(const std::vector<int>& rows);

}  // namespace qts
