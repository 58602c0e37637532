#pragma once

#include <string>
#include <vector>

#include "symfunc.hpp"

namespace qts {

/// North-step path in the km x kn rectangle staying weakly left of the main
/// diagonal; u[i] is the column of the (i+1)-th north step, bottom row up.
struct PathU {
  int m = 1;
  int n = 1;
  int k = 1;
  std::vector<int> u;

  int km() const { return k * m; }
  int kn() const { return k * n; }
  bool operator==(const PathU& o) const = default;
};

/// A path together with cars: v labels the north steps bottom up with a
/// permutation of 1..kn, increasing along each column of north steps.
struct ParkingFn {
  PathU path;
  std::vector<int> v;
};

struct ParkStats {
  int area = 0;
  int dinv_path = 0;
  int tdinv = 0;
  int maxtdinv = 0;
  int dinv = 0;   // dinv_path + tdinv - maxtdinv
  int ret = 0;    // first diagonal-return block, 1-based
  std::vector<long long> ranks;  // step ranks scaled by km+1, exact integers
  std::vector<int> word;         // cars read by decreasing rank
  unsigned ides = 0;             // descent mask of the inverse word
  Composition pides;             // composition of the ides mask
  Composition comp_hits;         // diagonal-hit composition of k
};

/// Enumeration guard on kn.
int paths_cap();
void set_paths_cap(int cap);

/// All u-vectors of the (km,kn) rectangle, lexicographically ascending.
/// Requires gcd(m,n) = 1 and kn within the cap.
std::vector<PathU> enum_paths(int m, int n, int k);
/// All labelings of one path, lexicographically ascending on v.
std::vector<ParkingFn> enum_parks(const PathU& path);

int path_area(const PathU& path);
int path_dinv(const PathU& path);
std::vector<long long> path_ranks(const PathU& path);
int path_maxtdinv(const PathU& path);
/// Diagonal-hit composition of k, from the blocks i with u[ni] = im.
Composition path_hits(const PathU& path);
/// First block index (1-based) at which the path meets the diagonal.
int path_ret(const PathU& path);
/// The partition above the path: the u-values sorted decreasingly.
Partition path_lambda(const PathU& path);
/// Vertical run lengths of the path (multiplicities of equal consecutive
/// u-values) as a partition; controls the q=1 factorization of a path sum.
Partition path_run_lengths(const PathU& path);

ParkStats stats(const ParkingFn& pi);

/// Path-level predicate slicing parking-function sums.
class ParkFilter {
 public:
  static ParkFilter all();
  static ParkFilter hits_exactly(Composition alpha);
  static ParkFilter hits_count(int r);
  static ParkFilter ret_at_least(int a);

  bool admits(const PathU& path) const;

 private:
  enum class Kind { all, hits_exactly, hits_count, ret_at_least };
  Kind kind_ = Kind::all;
  Composition alpha_;
  int value_ = 0;
};

/// Sum of t^area q^dinv F_ides over the labelings of one path.
QSymCoords park_path_sum(const PathU& path);
/// The same sum over every admitted path of the (km,kn) rectangle.
QSymCoords hikita_sum(int m, int n, int k,
                      const ParkFilter& filter = ParkFilter::all());

/// True iff each consecutive block of 1..|mu| of sizes mu_1, mu_2, ...
/// appears in increasing order inside word.
bool shuffle_member(const std::vector<int>& word, const Composition& mu);

/// Weighted count of admitted labelings whose word lies in the mu-block
/// shuffle; the combinatorial value of the h_mu pairing.
QTRatio pairing_rhs(int m, int n, int k, const ParkFilter& filter,
                    const Partition& mu);
/// The h_mu pairing of fundamental coordinates: the sum of the coordinates
/// over the subsets of the partial-sum set of mu.
QTRatio qsym_pair_h(const QSymCoords& coords, const Composition& mu);

/// Per-parking-function records, one row per labeling:
/// u;v;area;dinv_path;tdinv;maxtdinv;dinv;word;ides;comp_hits;ret
std::string parks_csv(int m, int n, int k);

}  // namespace qts
