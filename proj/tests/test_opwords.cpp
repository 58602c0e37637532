#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/json_io.hpp"
#include "core/macdonald.hpp"
#include "core/opwords.hpp"

using namespace qts;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(parts); }

QTRatio Minv(int k) { return QTRatio::M().pow(k).inverse(); }

SymF minus_one_pow(int e) {
  return SymF::one().scaled(QTRatio(e % 2 ? -1 : 1));
}

// Small pool of homogeneous test functions of the given degree.
std::vector<SymF> degree_pool(int d) {
  std::vector<SymF> out;
  for (auto& lam : partitions_of(d)) {
    out.push_back(SymF::basis_elem(Basis::p, lam));
    out.push_back(SymF::basis_elem(Basis::s, lam));
  }
  return out;
}

}  // namespace

TEST_CASE("split decompositions") {
  auto s35 = split(3, 5);
  CHECK(s35.ab == std::make_pair(2, 3));
  CHECK(s35.cd == std::make_pair(1, 2));
  auto s23 = split(2, 3);
  CHECK(s23.ab == std::make_pair(1, 1));
  CHECK(s23.cd == std::make_pair(1, 2));
  auto s14 = split(1, 4);
  CHECK(s14.ab == std::make_pair(1, 3));
  CHECK(s14.cd == std::make_pair(0, 1));
  auto s51 = split(5, 1);
  CHECK(s51.ab == std::make_pair(1, 0));
  CHECK(s51.cd == std::make_pair(4, 1));
  CHECK_THROWS_AS(split(4, 6), std::domain_error);
  // The split is the unimodular matrix column pair: ad - bc = 1.
  for (auto [m, n] : {std::pair{3, 5}, {5, 3}, {7, 5}, {4, 7}, {8, 3}}) {
    auto sp = split(m, n);
    CHECK(sp.ab.first * sp.cd.second - sp.ab.second * sp.cd.first == 1);
    CHECK(sp.ab.first + sp.cd.first == m);
    CHECK(sp.ab.second + sp.cd.second == n);
  }
}

TEST_CASE("letter maps S and N") {
  OpExpr d12 = OpExpr::letter(1) * OpExpr::letter(2);
  OpExpr shifted = S_act(d12);
  REQUIRE(shifted.word_count() == 1);
  CHECK(shifted.terms().begin()->first == Word{2, 3});

  CHECK(N_act(OpExpr::letter(0)) == OpExpr::letter(0));

  OpExpr n1 = N_act(OpExpr::letter(1));
  OpExpr expect;
  expect.add_term({1, 0}, Minv(1));
  expect.add_term({0, 1}, -Minv(1));
  CHECK(n1 == expect);
}

TEST_CASE("Q operator words") {
  CHECK(Q_operator(1, 5) == OpExpr::letter(5));

  OpExpr q21;
  q21.add_term({1, 0}, Minv(1));
  q21.add_term({0, 1}, -Minv(1));
  CHECK(Q_operator(2, 1) == q21);

  OpExpr q35;
  q35.add_term({2, 2, 1}, Minv(2));
  q35.add_term({2, 1, 2}, QTRatio(-2) * Minv(2));
  q35.add_term({1, 2, 2}, Minv(2));
  CHECK(Q_operator(3, 5) == q35);
}

TEST_CASE("Q agrees with the commutator recursion on coprime pairs") {
  for (auto [m, n] :
       {std::pair{2, 3}, {3, 2}, {2, 5}, {3, 4}, {3, 5}, {4, 3}, {5, 2}}) {
    auto sp = split(m, n);
    OpExpr lhs = Q_operator(m, n);
    OpExpr rhs = commutator(Q_operator(sp.cd.first, sp.cd.second),
                            Q_operator(sp.ab.first, sp.ab.second))
                     .scaled(Minv(1));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("basic applications of Q") {
  CHECK(apply(Q_operator(1, 1), SymF::one()) == -SymF::e(1));
  // Q_{n+1,n} (-1)^n = nabla e_n.
  for (int n = 1; n <= 3; ++n) {
    SymF got = apply(Q_operator(n + 1, n), minus_one_pow(n));
    CHECK(got == nabla(SymF::e(n)));
  }
  // Q_{2,2} 1 = Delta_{e_1} e_2.
  CHECK(apply(Q_operator(2, 2), SymF::one()) ==
        delta_op(SymF::e(1), SymF::e(2)));
}

TEST_CASE("letter action matches the generic creation operator") {
  // The memoized fold uses a closed form for D_k on p_lambda; it must agree
  // with the kernel-series evaluation on every small input.
  for (int k = -2; k <= 3; ++k) {
    for (int d = 0; d <= 5; ++d) {
      if (d + k > degree_cap()) continue;
      for (const auto& lam : partitions_of(d)) {
        SymF plam = SymF::basis_elem(Basis::p, lam);
        CHECK(apply(OpExpr::letter(k), plam) ==
              creation_op(CreationKind::D, k, plam));
      }
    }
  }
}

TEST_CASE("blockwise Q application matches the word expansion") {
  for (auto [m, n] : {std::pair{2, 1}, {3, 2}, {5, 2}, {5, 3}, {4, 3},
                      {2, 3}, {1, 4}, {4, 2}}) {
    for (int d = 0; d <= 2; ++d)
      for (auto& f : degree_pool(d))
        CHECK(apply_q(m, n, f) == apply(Q_operator(m, n), f));
  }
}

TEST_CASE("collinear Q operators commute in action") {
  for (auto [m, n] : {std::pair{1, 2}, {2, 1}, {1, 1}}) {
    OpExpr a = Q_operator(m, n);
    OpExpr b = Q_operator(2 * m, 2 * n);
    OpExpr bracket = commutator(a, b);
    for (int d = 0; d <= 2; ++d)
      for (auto& f : degree_pool(d))
        CHECK(apply(bracket, f).is_zero());
  }
}

TEST_CASE("nabla conjugation shifts the first index") {
  // Q(m+n,n) f = nabla Q(m,n) nabla^{-1} f.
  for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 1}, {3, 2}}) {
    for (int d = 0; d <= 2; ++d) {
      for (auto& f : degree_pool(d)) {
        SymF lhs = apply(Q_operator(m + n, n), f);
        SymF rhs = nabla(apply(Q_operator(m, n), nabla_inverse(f)));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("phi and psi chains match their Q positions") {
  for (int k = 1; k <= 3; ++k) CHECK(phi_op(k) == Q_operator(k + 1, k));
  for (int k = 2; k <= 4; ++k) CHECK(psi_op(k) == Q_operator(k - 1, k));
}

TEST_CASE("hstar expansion coordinates") {
  // e_1 sits at coordinate -1.
  auto c1 = algF_expand(SymF::e(1));
  REQUIRE(c1.size() == 1);
  CHECK(c1.at(P({1})) == QTRatio(-1));

  // Basis elements expand with indicator coordinates.
  for (auto& lam : partitions_of(3)) {
    auto c = algF_expand(hstar_basis(lam));
    REQUIRE(c.size() == 1);
    CHECK(c.at(lam) == QTRatio(1));
  }

  // Closed form for e_3: c_lambda = -m_lambda[qt/(qt-1)] ((qt-1)/qt)^len.
  QTRatio qt = QTRatio::qt();
  QTRatio ratio = qt / (qt - QTRatio(1));
  auto c3 = algF_expand(SymF::e(3));
  for (auto& lam : partitions_of(3)) {
    QTRatio expect = -SymF::basis_elem(Basis::m, lam).eval_alphabet(ratio) *
                     ratio.inverse().pow(static_cast<int>(lam.size()));
    CHECK(c3.at(lam) == expect);
  }

  // Reassembly recovers the input.
  SymF f = SymF::basis_elem(Basis::s, P({2, 2})) +
           SymF::basis_elem(Basis::p, P({3, 1})).scaled(QTRatio::t());
  SymF back;
  for (auto& [lam, c] : algF_expand(f)) back += hstar_basis(lam).scaled(c);
  CHECK(back == f);
}

TEST_CASE("build_F base cases and nabla link") {
  CHECK(e_mn_op(1, 2, 3) == Q_operator(2, 3).scaled(QTRatio(-1)));
  CHECK(e_mn_op(1, 3, 4) == Q_operator(3, 4).scaled(QTRatio(-1)));
  // e_{k,k} . (-1)^{k(n+1)} = nabla e_k at direction (1,1).
  for (int k = 2; k <= 3; ++k) {
    SymF got = apply(e_mn_op(k, 1, 1), minus_one_pow(2 * k));
    CHECK(got == nabla(SymF::e(k)));
  }
  CHECK_THROWS_AS(build_F(SymF::e(2), 2, 4), std::domain_error);
}

TEST_CASE("hall-littlewood vectors") {
  QTRatio mq = -QTRatio::q();
  for (int a = 1; a <= 4; ++a)
    CHECK(c_alpha_vector({a}) == SymF::h(a).scaled(mq.pow(1 - a)));
  for (int b = 1; b <= 4; ++b) CHECK(b_beta_vector({b}) == SymF::e(b));
  for (int k = 1; k <= 4; ++k) {
    SymF acc;
    for (auto& alpha : compositions_of(k)) acc += c_alpha_vector(alpha);
    CHECK(acc == SymF::e(k));
    SymF acc_e;
    for (int r = 1; r <= k; ++r) acc_e += e_kr_vector(k, r);
    CHECK(acc_e == SymF::e(k));
  }
}

TEST_CASE("B and C creation operators braid with a power of q") {
  // B_b C_gamma 1 = q^{len(gamma)} C_gamma B_b 1.
  for (int b = 1; b <= 2; ++b) {
    for (auto& gamma :
         {Composition{1}, Composition{2}, Composition{1, 1}}) {
      SymF lhs = creation_op(CreationKind::B, b, c_alpha_vector(gamma));
      SymF rhs = b_beta_vector({b});
      for (auto it = gamma.rbegin(); it != gamma.rend(); ++it)
        rhs = creation_op(CreationKind::C, *it, rhs);
      CHECK(lhs == rhs.scaled(QTRatio::q().pow(
                       static_cast<int>(gamma.size()))));
    }
  }
}

TEST_CASE("B vectors decompose over reversed refinements") {
  // B_beta 1 = sum over reversed refinements alpha of q^{c(alpha,beta)}
  // C_alpha 1.
  for (auto& beta : {Composition{2}, Composition{1, 2}, Composition{2, 1},
                     Composition{3}, Composition{1, 1, 1}, Composition{2, 2}}) {
    SymF lhs = b_beta_vector(beta);
    SymF rhs;
    for (auto& [alpha, cexp] : reversed_refinements(beta))
      rhs += c_alpha_vector(alpha).scaled(QTRatio::q().pow(cexp));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("operator cap and degree errors") {
  CHECK_THROWS_AS(Q_operator(10, 9), std::domain_error);
  int old = degree_cap();
  set_degree_cap(4);
  try {
    apply(Q_operator(2, 5), SymF::one());
    CHECK(false);
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("word") != std::string::npos);
  }
  set_degree_cap(old);
}

TEST_CASE("opexpr json round trip") {
  OpExpr x = Q_operator(3, 5);
  nlohmann::json j = opexpr_to_json(x);
  CHECK(j.at("words").size() == 3);
  CHECK(opexpr_from_json(j) == x);
}
