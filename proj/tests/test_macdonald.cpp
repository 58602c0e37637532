#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "core/macdonald.hpp"

using namespace qts;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(parts); }

SymF S(std::initializer_list<int> parts) {
  return SymF::basis_elem(Basis::s, Partition(parts));
}

QTRatio Q1() { return QTRatio(1); }

}  // namespace

TEST_CASE("cell statistics of small shapes") {
  auto st = mu_stats(P({2, 1}));
  QTRatio q = QTRatio::q(), t = QTRatio::t();
  CHECK(st.T == q * t);
  CHECK(st.B == Q1() + q + t);
  CHECK(st.Pi == (Q1() - q) * (Q1() - t));
  // w for (2,1): cells (0,0) a=1 l=1, (0,1) a=0 l=0, (1,0) a=0 l=0.
  QTRatio expect = (q - t.pow(2)) * (t - q.pow(2)) * (Q1() - t) * (t.pow(0) - q) *
                   (Q1() - t) * (Q1() - q);
  CHECK(st.w == expect);
  // One-column and one-row shapes transpose into each other.
  auto row = mu_stats(P({3}));
  auto col = mu_stats(P({1, 1, 1}));
  CHECK(row.T == q.pow(3));
  CHECK(col.T == t.pow(3));
  CHECK(row.B == Q1() + q + q.pow(2));
  CHECK(col.B == Q1() + t + t.pow(2));
}

TEST_CASE("modified macdonald polynomials at n = 1, 2, 3") {
  QTRatio q = QTRatio::q(), t = QTRatio::t();
  CHECK(macdonald_H(P({1})) == S({1}));
  CHECK(macdonald_H(P({2})) == S({2}) + S({1, 1}).scaled(q));
  CHECK(macdonald_H(P({1, 1})) == S({2}) + S({1, 1}).scaled(t));
  CHECK(macdonald_H(P({3})) ==
        S({3}) + S({2, 1}).scaled(q + q.pow(2)) + S({1, 1, 1}).scaled(q.pow(3)));
  CHECK(macdonald_H(P({2, 1})) ==
        S({3}) + S({2, 1}).scaled(q + t) + S({1, 1, 1}).scaled(q * t));
  CHECK(macdonald_H(P({1, 1, 1})) ==
        S({3}) + S({2, 1}).scaled(t + t.pow(2)) + S({1, 1, 1}).scaled(t.pow(3)));
}

TEST_CASE("star orthogonality of the macdonald basis") {
  for (int n = 1; n <= 4; ++n) {
    for (auto& lam : partitions_of(n)) {
      for (auto& mu : partitions_of(n)) {
        QTRatio got = star_inner(macdonald_H(lam), macdonald_H(mu));
        if (lam == mu)
          CHECK(got == mu_stats(mu).w);
        else
          CHECK(got.is_zero());
      }
    }
  }
}

TEST_CASE("triangularity under the t-deformation") {
  // Htilde_mu[x(t-1)] expands in monomials supported on lambda <= mu
  // (dominance order).
  QTRatio tm1 = QTRatio::t() - QTRatio(1);
  for (int n = 2; n <= 4; ++n) {
    for (auto& mu : partitions_of(n)) {
      SymF deformed = macdonald_H(mu).scale_alphabet(tm1);
      for (auto& [lam, c] : deformed.coords(Basis::m)) {
        CHECK(dominates_leq(lam, mu));
      }
    }
  }
}

TEST_CASE("nabla fixes the macdonald basis with eigenvalue T") {
  for (int n = 1; n <= 4; ++n) {
    for (auto& mu : partitions_of(n)) {
      SymF H = macdonald_H(mu);
      CHECK(nabla(H) == H.scaled(mu_stats(mu).T));
      CHECK(nabla_inverse(nabla(H)) == H);
    }
  }
  CHECK(nabla(SymF::one()) == SymF::one());
}

TEST_CASE("nabla on e_2 gives the degree-2 diagonal character") {
  SymF got = nabla(SymF::e(2));
  CHECK(got == S({2}) + S({1, 1}).scaled(QTRatio::q() + QTRatio::t()));
}

TEST_CASE("delta operators act diagonally by plethystic evaluation") {
  for (int n = 2; n <= 4; ++n) {
    for (auto& mu : partitions_of(n)) {
      SymF H = macdonald_H(mu);
      auto st = mu_stats(mu);
      CHECK(delta_op(SymF::e(1), H) == H.scaled(st.B));
      // On degree n, Delta_{e_n} agrees with nabla.
      CHECK(delta_op(SymF::e(n), H) == nabla(H));
      // Primed variant evaluates at B - 1.
      CHECK(delta_op(SymF::e(1), H, true) == H.scaled(st.B - QTRatio(1)));
    }
  }
}

TEST_CASE("e_n reassembles from the macdonald expansion") {
  // e_n = sum_mu M B_mu Pi_mu / w_mu Htilde_mu.
  QTRatio M = QTRatio::M();
  for (int n = 1; n <= 5; ++n) {
    SymF acc;
    for (auto& mu : partitions_of(n)) {
      auto st = mu_stats(mu);
      acc += macdonald_H(mu).scaled(M * st.B * st.Pi / st.w);
    }
    CHECK(acc == SymF::e(n));
  }
}

TEST_CASE("h_n reassembles with reciprocal-alphabet weights") {
  // h_n = (-qt)^(n-1) sum_mu M B_mu(1/q,1/t) Pi_mu / w_mu Htilde_mu.
  QTRatio M = QTRatio::M();
  QTRatio q = QTRatio::q(), t = QTRatio::t();
  for (int n = 1; n <= 5; ++n) {
    SymF acc;
    for (auto& mu : partitions_of(n)) {
      auto st = mu_stats(mu);
      QTRatio brec(0);
      for (Cell c : cells_of(mu))
        brec += q.pow(-c.col) * t.pow(-c.row);
      acc += macdonald_H(mu).scaled(M * brec * st.Pi / st.w);
    }
    CHECK(acc == SymF::h(n).scaled((-(q * t)).pow(n - 1).inverse()));
  }
}

TEST_CASE("macdonald coordinates invert the expansion") {
  SymF f = nabla(SymF::e(3)) + SymF::p(1) * SymF::p(1);
  auto coords = macdonald_coords(f);
  SymF back;
  for (auto& [mu, c] : coords) back += macdonald_H(mu).scaled(c);
  CHECK(back == f);
}

TEST_CASE("cache round trip preserves the tables") {
  SymF h_before = macdonald_H(P({2, 2}));
  SymF nabla_before = nabla(SymF::e(4));
  std::string path = "mac_cache_test.json";
  save_macdonald_cache(path, 4);
  CHECK(load_macdonald_cache(path));
  CHECK(macdonald_H(P({2, 2})) == h_before);
  CHECK(nabla(SymF::e(4)) == nabla_before);
  // Tampering with an entry breaks the checksum.
  {
    std::ifstream is(path);
    std::stringstream buf;
    buf << is.rdbuf();
    std::string text = buf.str();
    auto pos = text.find("\"Htilde\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 8, "\"Htil_e\"");
    std::ofstream os(path);
    os << text;
  }
  CHECK_FALSE(load_macdonald_cache(path));
  // The in-memory tables are untouched by the failed load.
  CHECK(macdonald_H(P({2, 2})) == h_before);
  std::remove(path.c_str());
}
