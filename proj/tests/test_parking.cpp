#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "core/macdonald.hpp"
#include "core/parking.hpp"

using namespace qts;

namespace {

int total_labelings(int m, int n, int k) {
  int total = 0;
  for (auto& path : enum_paths(m, n, k))
    total += static_cast<int>(enum_parks(path).size());
  return total;
}

// Step-level dinv with both inequalities strict, the coprime-only form.
int dinv_strict(const PathU& path) {
  Partition lam = path_lambda(path);
  long long m = path.m, n = path.n;
  int out = 0;
  for (Cell c : cells_of(lam)) {
    long long a = arm(lam, c), l = leg(lam, c);
    if (a * n < m * (l + 1) && (l == 0 || m * l < n * (a + 1))) ++out;
  }
  return out;
}

QSymCoords eval_q1(const QSymCoords& coords) {
  QSymCoords out(coords.degree());
  for (unsigned mask = 0; mask < (1u << (coords.degree() - 1)); ++mask) {
    QTRatio c = coords.at(mask);
    if (!c.is_zero()) out.add(mask, c.eval_q(Rat(1)));
  }
  return out;
}

bool qt_positive_polynomial(const QTRatio& r) {
  if (!r.is_polynomial()) return false;
  for (auto& [e, c] : r.num().terms())
    if (c < 0 || c.get_den() != 1) return false;
  return true;
}

const char* kHilbert36 =
    "5 + 16*q + 25*q^2 + 24*q^3 + 14*q^4 + 5*q^5 + q^6"
    " + 16*t + 40*q*t + 38*q^2*t + 19*q^3*t + 6*q^4*t + q^5*t"
    " + 25*t^2 + 38*q*t^2 + 20*q^2*t^2 + 6*q^3*t^2 + q^4*t^2"
    " + 24*t^3 + 19*q*t^3 + 6*q^2*t^3 + q^3*t^3"
    " + 14*t^4 + 6*q*t^4 + q^2*t^4 + 5*t^5 + q*t^5 + t^6";

const char* kPathPoly36 =
    "q^6 + q^5*t + q^4*t^2 + q^3*t^3 + q^2*t^4 + q*t^5 + t^6"
    " + q^4*t + q^3*t^2 + q^2*t^3 + q*t^4 + q^2*t^2";

}  // namespace

TEST_CASE("path enumeration counts") {
  CHECK(enum_paths(1, 1, 1).size() == 1);
  CHECK(enum_paths(1, 2, 3).size() == 12);
  CHECK(enum_paths(3, 2, 1).size() == 2);
  // Coprime path count is the rational Catalan number binom(m+n,m)/(m+n).
  CHECK(enum_paths(2, 3, 1).size() == 2);
  CHECK(enum_paths(3, 4, 1).size() == 5);
  CHECK(enum_paths(3, 5, 1).size() == 7);
  CHECK(enum_paths(5, 2, 1).size() == 3);
  CHECK_THROWS_AS(enum_paths(2, 4, 1), std::domain_error);
  CHECK_THROWS_AS(enum_paths(1, 5, 3), std::domain_error);

  auto paths = enum_paths(1, 2, 3);
  CHECK(std::is_sorted(paths.begin(), paths.end(),
                       [](const PathU& a, const PathU& b) { return a.u < b.u; }));
}

TEST_CASE("labeling counts") {
  CHECK(total_labelings(3, 2, 1) == 3);
  CHECK(total_labelings(2, 3, 1) == 4);
  CHECK(total_labelings(3, 4, 1) == 27);
  CHECK(total_labelings(4, 3, 1) == 16);
  CHECK(total_labelings(1, 2, 3) == 378);
  // Single-column path forces the identity labeling.
  PathU flat{1, 1, 2, {0, 0}};
  auto parks = enum_parks(flat);
  REQUIRE(parks.size() == 1);
  CHECK(parks[0].v == std::vector<int>{1, 2});
}

TEST_CASE("path statistics basics") {
  PathU zero{1, 2, 3, {0, 0, 0, 0, 0, 0}};
  CHECK(path_area(zero) == 6);
  CHECK(path_dinv(zero) == 0);
  CHECK(path_run_lengths(zero) == Partition{6});
  CHECK(path_ret(zero) == 3);
  CHECK(path_hits(zero) == Composition{3});

  PathU diag{1, 2, 3, {0, 0, 1, 1, 2, 2}};
  CHECK(path_area(diag) == 0);
  CHECK(path_run_lengths(diag) == Partition{2, 2, 2});
  CHECK(path_ret(diag) == 1);
  CHECK(path_hits(diag) == Composition{1, 1, 1});

  PathU square{1, 1, 3, {0, 1, 2}};
  CHECK(path_ret(square) == 1);
  CHECK(path_hits(square) == Composition{1, 1, 1});
  PathU tall{1, 1, 3, {0, 0, 2}};
  CHECK(path_ret(tall) == 2);
  CHECK(path_hits(tall) == Composition{2, 1});
  PathU high{1, 1, 3, {0, 0, 1}};
  CHECK(path_ret(high) == 3);
  CHECK(path_hits(high) == Composition{3});
}

TEST_CASE("stats invariants across a full rectangle") {
  for (auto& path : enum_paths(1, 2, 3)) {
    for (auto& pi : enum_parks(path)) {
      ParkStats st = stats(pi);
      CHECK(st.dinv == st.dinv_path + st.tdinv - st.maxtdinv);
      CHECK(st.dinv >= 0);
      CHECK(st.tdinv <= st.maxtdinv);
      std::set<long long> distinct(st.ranks.begin(), st.ranks.end());
      CHECK(distinct.size() == st.ranks.size());
      std::vector<int> sorted_word = st.word;
      std::sort(sorted_word.begin(), sorted_word.end());
      for (int i = 0; i < 6; ++i) CHECK(sorted_word[i] == i + 1);
      CHECK(subset_from_comp(st.pides) == st.ides);
      CHECK(part_size(st.comp_hits) == 3);
    }
  }
}

TEST_CASE("classical two-car table") {
  QSymCoords total = hikita_sum(1, 1, 2);
  QSymCoords expect(2);
  expect.add(0u, QTRatio(1));
  expect.add(1u, QTRatio::q() + QTRatio::t());
  CHECK(total == expect);
  CHECK(total == QSymCoords::from_symf(nabla(SymF::e(2))));
  CHECK(qsym_pair_h(total, {2}) == QTRatio(1));
  CHECK(qsym_pair_h(total, {1, 1}) ==
        QTRatio(1) + QTRatio::q() + QTRatio::t());
  CHECK(pairing_rhs(1, 1, 2, ParkFilter::all(), {2}) == QTRatio(1));
  CHECK(pairing_rhs(1, 1, 2, ParkFilter::all(), {1, 1}) ==
        QTRatio(1) + QTRatio::q() + QTRatio::t());
}

TEST_CASE("maxtdinv shortcut equals the brute maximum") {
  auto check_rect = [](int m, int n, int k) {
    for (auto& path : enum_paths(m, n, k)) {
      int brute = 0;
      for (auto& pi : enum_parks(path)) brute = std::max(brute, stats(pi).tdinv);
      CHECK(path_maxtdinv(path) == brute);
    }
  };
  check_rect(1, 1, 4);
  check_rect(1, 2, 3);
  check_rect(2, 3, 2);
  check_rect(3, 2, 2);
  check_rect(5, 3, 1);
}

TEST_CASE("hikita sums match nabla on coprime slopes") {
  QSymCoords one_car = hikita_sum(2, 1, 1);
  CHECK(one_car == QSymCoords::from_symf(SymF::e(1)));
  CHECK(hikita_sum(3, 2, 1) == QSymCoords::from_symf(nabla(SymF::e(2))));
  CHECK(hikita_sum(4, 3, 1) == QSymCoords::from_symf(nabla(SymF::e(3))));
}

TEST_CASE("three-by-six goldens") {
  // Dyck-path q,t enumerator by (dinv, area).
  QTRatio path_poly;
  for (auto& path : enum_paths(1, 2, 3))
    path_poly += QTRatio::q().pow(path_dinv(path)) *
                 QTRatio::t().pow(path_area(path));
  CHECK(path_poly == QTRatio::parse(kPathPoly36));

  // Full bivariate Hilbert series over all 378 labelings.
  QSymCoords total = hikita_sum(1, 2, 3);
  QTRatio hilbert = qsym_pair_h(total, {1, 1, 1, 1, 1, 1});
  CHECK(hilbert == QTRatio::parse(kHilbert36));
  CHECK(hilbert.eval_q(Rat(1)) ==
        QTRatio::parse("90 + 120*t + 90*t^2 + 50*t^3 + 21*t^4 + 6*t^5 + t^6"));

  // The sign-character pairing is the path enumerator.
  // The sign-character slice sits on the full descent set; h_(6) reads the
  // empty one.
  CHECK(total.at((1u << 5) - 1) == QTRatio::parse(kPathPoly36));
  CHECK(qsym_pair_h(total, {6}) == total.at(0u));
}

TEST_CASE("q=1 specialization factors over vertical runs") {
  auto check_rect = [](int m, int n, int k) {
    for (auto& path : enum_paths(m, n, k)) {
      QSymCoords got = eval_q1(park_path_sum(path));
      SymF elam = SymF::one();
      for (int part : path_run_lengths(path)) elam = elam * SymF::e(part);
      QSymCoords expect =
          QSymCoords::from_symf(elam.scaled(QTRatio::t().pow(path_area(path))));
      CHECK(got == expect);
    }
  };
  check_rect(1, 1, 3);
  check_rect(1, 2, 3);
  check_rect(2, 3, 2);
  check_rect(5, 2, 1);
}

TEST_CASE("per-path sums are schur positive") {
  for (auto& path : enum_paths(1, 2, 3)) {
    SymF f = park_path_sum(path).to_symf();
    for (auto& [lam, c] : f.coords(Basis::s))
      CHECK(qt_positive_polynomial(c));
  }
}

TEST_CASE("weak and strict dinv agree on coprime paths") {
  for (auto [m, n] : {std::pair{2, 3}, {3, 5}, {5, 7}, {7, 5}}) {
    for (auto& path : enum_paths(m, n, 1))
      CHECK(path_dinv(path) == dinv_strict(path));
  }
}

TEST_CASE("shuffle membership") {
  CHECK(shuffle_member({3, 1, 2, 4}, {2, 2}));
  CHECK_FALSE(shuffle_member({2, 1, 3, 4}, {2, 2}));
  CHECK(shuffle_member({1, 2, 3, 4}, {2, 2}));
  CHECK(shuffle_member({1, 2, 3, 4}, {1, 1, 2}));
  CHECK(shuffle_member({4, 3, 2, 1}, {1, 1, 1, 1}));
  CHECK_FALSE(shuffle_member({4, 3, 2, 1}, {4}));
  CHECK_THROWS_AS(shuffle_member({1, 2}, {3}), std::domain_error);
}

TEST_CASE("extreme shapes of the shuffle pairing") {
  QSymCoords total = hikita_sum(3, 2, 1);
  QTRatio free_sum;
  for (auto& path : enum_paths(3, 2, 1))
    for (auto& pi : enum_parks(path)) {
      ParkStats st = stats(pi);
      free_sum += QTRatio::q().pow(st.dinv) * QTRatio::t().pow(st.area);
    }
  // All-singleton blocks admit every word; one full block admits only the
  // identity word, which is the empty-descent coordinate.
  CHECK(pairing_rhs(3, 2, 1, ParkFilter::all(), {1, 1}) == free_sum);
  CHECK(qsym_pair_h(total, {1, 1}) == free_sum);
  CHECK(pairing_rhs(3, 2, 1, ParkFilter::all(), {2}) == total.at(0u));
}

TEST_CASE("gessel coherence between coordinates and pairings") {
  for (auto [m, n, k] : {std::tuple{1, 2, 2}, {3, 2, 1}, {2, 3, 1}}) {
    QSymCoords total = hikita_sum(m, n, k);
    for (auto& mu : partitions_of(k * n))
      CHECK(pairing_rhs(m, n, k, ParkFilter::all(), mu) ==
            qsym_pair_h(total, mu));
  }
}

TEST_CASE("filters slice by diagonal behavior") {
  // Over all compositions, the filtered sums partition the full sum.
  QSymCoords total = hikita_sum(1, 1, 3);
  QSymCoords by_comp(3);
  for (auto& alpha : compositions_of(3)) {
    QSymCoords part = hikita_sum(1, 1, 3, ParkFilter::hits_exactly(alpha));
    for (unsigned mask = 0; mask < 4; ++mask)
      if (!part.at(mask).is_zero()) by_comp.add(mask, part.at(mask));
  }
  CHECK(by_comp == total);

  // hits_count r sums the length-r compositions.
  QSymCoords two_hits = hikita_sum(1, 1, 3, ParkFilter::hits_count(2));
  QSymCoords two_comp(3);
  for (auto& alpha : compositions_of_length(3, 2)) {
    QSymCoords part = hikita_sum(1, 1, 3, ParkFilter::hits_exactly(alpha));
    for (unsigned mask = 0; mask < 4; ++mask)
      if (!part.at(mask).is_zero()) two_comp.add(mask, part.at(mask));
  }
  CHECK(two_hits == two_comp);

  // ret >= a nests downward.
  for (int a = 3; a >= 1; --a) {
    QSymCoords ge = hikita_sum(1, 1, 3, ParkFilter::ret_at_least(a));
    if (a == 1) CHECK(ge == total);
  }
  QSymCoords ret3 = hikita_sum(1, 1, 3, ParkFilter::ret_at_least(3));
  QSymCoords comp3 = hikita_sum(1, 1, 3, ParkFilter::hits_exactly({3}));
  CHECK(ret3 == comp3);
}

TEST_CASE("csv export shape and determinism") {
  std::string csv = parks_csv(1, 2, 3);
  std::istringstream is(csv);
  std::string line;
  REQUIRE(std::getline(is, line));
  CHECK(line == "u;v;area;dinv_path;tdinv;maxtdinv;dinv;word;ides;comp_hits;ret");
  int rows = 0;
  std::string first_row;
  while (std::getline(is, line)) {
    if (rows == 0) first_row = line;
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ';') == 10);
  }
  CHECK(rows == 378);
  // Lexicographically least path and labeling come first.
  CHECK(first_row.substr(0, 25) == "0,0,0,0,0,0;1,2,3,4,5,6;6");
  CHECK(parks_csv(1, 2, 3) == csv);
}
