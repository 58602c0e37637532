#include "partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qts {

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

int part_size(const std::vector<int>& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

Partition conjugate(const Partition& p) {
  Partition out;
  if (p.empty()) return out;
  out.resize(p[0]);
  for (int j = 0; j < p[0]; ++j) {
    int cnt = 0;
    for (int part : p)
      if (part > j) ++cnt;
    out[j] = cnt;
  }
  return out;
}

bool dominates_leq(const Partition& a, const Partition& b) {
  int sa = 0, sb = 0;
  size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa > sb) return false;
  }
  return sa == sb;
}

namespace {

void gen_partitions(int n, int maxpart, Partition& cur,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, maxpart); k >= 1; --k) {
    cur.push_back(k);
    gen_partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  if (n < 0) throw std::domain_error("partitions_of: negative size");
  static std::mutex mu;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(n, n, cur, out);
  return cache.emplace(n, std::move(out)).first->second;
}

Rat z_factor(const Partition& p) {
  Int z = 1;
  size_t i = 0;
  while (i < p.size()) {
    size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    for (size_t r = 1; r <= j - i; ++r) z *= Int(p[i]) * Int(r);
    i = j;
  }
  return Rat(z);
}

Partition merge_parts(const Partition& a, const Partition& b) {
  Partition out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
             std::greater<int>());
  return out;
}

std::vector<Cell> cells_of(const Partition& p) {
  std::vector<Cell> out;
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    for (int j = 0; j < p[i]; ++j) out.push_back({i, j});
  return out;
}

int arm(const Partition& p, Cell c) { return p[c.row] - c.col - 1; }

int leg(const Partition& p, Cell c) {
  int cnt = 0;
  for (size_t i = c.row + 1; i < p.size(); ++i)
    if (p[i] > c.col) ++cnt;
  return cnt;
}

namespace {

// Beta-number recursion: removing a border strip of length r from lambda
// means lowering one first-column hook length by r while keeping the set
// distinct; the sign counts the hook lengths jumped over.
Int mn_rec(const Partition& lambda, const Partition& mu, size_t mi,
           std::map<std::pair<Partition, size_t>, Int>& memo) {
  if (mi == mu.size()) return 1;  // lambda is empty here
  auto key = std::make_pair(lambda, mi);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int r = mu[mi];
  int ell = static_cast<int>(lambda.size());
  std::vector<int> beta(ell);
  for (int i = 0; i < ell; ++i) beta[i] = lambda[i] + (ell - 1 - i);
  Int total = 0;
  for (int i = 0; i < ell; ++i) {
    int nb = beta[i] - r;
    if (nb < 0) continue;
    bool clash = false;
    int jumped = 0;
    for (int j = 0; j < ell; ++j) {
      if (j == i) continue;
      if (beta[j] == nb) clash = true;
      if (beta[j] > nb && beta[j] < beta[i]) ++jumped;
    }
    if (clash) continue;
    std::vector<int> nbeta = beta;
    nbeta[i] = nb;
    std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
    Partition next;
    for (int j = 0; j < ell; ++j) {
      int part = nbeta[j] - (ell - 1 - j);
      if (part > 0) next.push_back(part);
    }
    Int sub = mn_rec(next, mu, mi + 1, memo);
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Int mn_character(const Partition& lambda, const Partition& mu) {
  if (part_size(lambda) != part_size(mu))
    throw std::domain_error("mn_character: size mismatch");
  std::map<std::pair<Partition, size_t>, Int> memo;
  return mn_rec(lambda, mu, 0, memo);
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  unsigned total = 1u << (n - 1);
  out.reserve(total);
  for (unsigned mask = 0; mask < total; ++mask)
    out.push_back(comp_from_subset(mask, n));
  return out;
}

std::vector<Composition> compositions_of_length(int n, int len) {
  std::vector<Composition> out;
  for (auto& a : compositions_of(n))
    if (static_cast<int>(a.size()) == len) out.push_back(a);
  return out;
}

Composition comp_from_subset(unsigned mask, int n) {
  Composition a;
  int prev = 0;
  for (int i = 1; i < n; ++i) {
    if (mask & (1u << (i - 1))) {
      a.push_back(i - prev);
      prev = i;
    }
  }
  a.push_back(n - prev);
  return a;
}

unsigned subset_from_comp(const Composition& a) {
  unsigned mask = 0;
  int acc = 0;
  for (size_t i = 0; i + 1 < a.size(); ++i) {
    acc += a[i];
    mask |= 1u << (acc - 1);
  }
  return mask;
}

std::vector<std::pair<Composition, int>> reversed_refinements(
    const Composition& beta) {
  std::vector<std::pair<Composition, int>> out;
  out.push_back({{}, 0});
  int L = static_cast<int>(beta.size());
  // Blocks are laid out from the last part of beta to the first; block for
  // beta_i contributes (i-1) per part, with i counted 1-based from the front.
  for (int i = L; i >= 1; --i) {
    std::vector<std::pair<Composition, int>> next;
    for (auto& block : compositions_of(beta[i - 1])) {
      int add = (i - 1) * static_cast<int>(block.size());
      for (auto& [prefix, c] : out) {
        Composition joined = prefix;
        joined.insert(joined.end(), block.begin(), block.end());
        next.push_back({std::move(joined), c + add});
      }
    }
    out = std::move(next);
  }
  return out;
}

namespace {

void gen_syt(const Partition& shape, std::vector<int>& rowfill, int placed,
             int total, std::vector<int>& rows,
             std::vector<std::vector<int>>& out) {
  if (placed == total) {
    out.push_back(rows);
    return;
  }
  for (size_t r = 0; r < shape.size(); ++r) {
    bool corner_ok = rowfill[r] < shape[r] &&
                     (r == 0 || rowfill[r] < rowfill[r - 1]);
    if (!corner_ok) continue;
    ++rowfill[r];
    rows.push_back(static_cast<int>(r));
    gen_syt(shape, rowfill, placed + 1, total, rows, out);
    rows.pop_back();
    --rowfill[r];
  }
}

}  // namespace

std::vector<std::vector<int>> standard_tableaux(const Partition& p) {
  std::vector<std::vector<int>> out;
  std::vector<int> rowfill(p.size(), 0);
  std::vector<int> rows;
  gen_syt(p, rowfill, 0, part_size(p), rows, out);
  return out;
}

unsigned syt_descent_mask(const std::vector<int>& rows) {
  unsigned mask = 0;
  for (size_t i = 0; i + 1 < rows.size(); ++i)
    if (rows[i + 1] > rows[i]) mask |= 1u << i;
  return mask;
}

}  // namespace qts
