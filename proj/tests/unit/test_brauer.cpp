#include <doctest.h>

#include "ospcent/brauer.hpp"
#include "ospcent/linalg.hpp"

using namespace ospcent;

namespace {
Rational q(long n, long d = 1) { return Rational(n, d); }
const Rational eta_m1(-1);
}  // namespace

TEST_CASE("fifteen diagrams, six permutations, nine with arcs") {
  const auto& basis = enumerate_basis();
  CHECK(basis.size() == 15);
  std::size_t perms = 0, arcs = 0;
  for (const auto& d : basis) {
    if (d.is_permutation()) ++perms;
    if (d.has_top_arc()) ++arcs;
  }
  CHECK(perms == 6);
  CHECK(arcs == 9);
  // all distinct and sorted
  for (std::size_t i = 0; i + 1 < basis.size(); ++i) CHECK(basis[i] < basis[i + 1]);
}

TEST_CASE("compose examples") {
  auto e1 = BrauerDiagram::e1(), e2 = BrauerDiagram::e2();
  auto s1 = BrauerDiagram::s1(), s2 = BrauerDiagram::s2();
  Rational eta(7, 3);

  SUBCASE("e1 e1 = eta e1 (one closed loop)") {
    BrauerElement r = compose(e1, e1, eta);
    CHECK(r == BrauerElement::from_diagram(e1, eta));
  }
  SUBCASE("s1 s1 = 1 (identity diagram)") {
    CHECK(compose(s1, s1, eta) == BrauerElement::one());
  }
  SUBCASE("e1 e2 then e1 gives e1 with no loop") {
    auto [d12, loops12] = compose_diagrams(e1, e2);
    CHECK(loops12 == 0);
    auto [d, loops] = compose_diagrams(d12, e1);
    CHECK(loops == 0);
    CHECK(d == e1);
  }
  SUBCASE("s2 is an involution, e2 absorbs s2") {
    CHECK(compose(s2, s2, eta) == BrauerElement::one());
    CHECK(compose(e2, s2, eta) == BrauerElement::from_diagram(e2));
  }
}

TEST_CASE("presentation holds at eta = -1 and generic eta") {
  for (const Rational& eta : {eta_m1, Rational(5, 7), Rational(-3)}) {
    auto checks = verify_presentation(eta);
    CHECK(checks.size() == 22);  // 13 defining instances + 9 derived
    for (const auto& c : checks) {
      INFO(c.name << " " << c.details);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("diagram composition is associative (sampled; full sweep in acceptance)") {
  const auto& basis = enumerate_basis();
  Rational eta(2, 5);
  for (std::size_t i = 0; i < basis.size(); i += 3)
    for (std::size_t j = 1; j < basis.size(); j += 4)
      for (std::size_t k = 2; k < basis.size(); k += 5) {
        BrauerElement bi = BrauerElement::from_diagram(basis[i]);
        BrauerElement bj = BrauerElement::from_diagram(basis[j]);
        BrauerElement bk = BrauerElement::from_diagram(basis[k]);
        CHECK(multiply(multiply(bi, bj, eta), bk, eta) ==
              multiply(bi, multiply(bj, bk, eta), eta));
      }
}

TEST_CASE("identity diagram is a two-sided unit") {
  BrauerElement one = BrauerElement::one();
  for (const auto& d : enumerate_basis()) {
    BrauerElement x = BrauerElement::from_diagram(d);
    CHECK(multiply(one, x, eta_m1) == x);
    CHECK(multiply(x, one, eta_m1) == x);
  }
}

TEST_CASE("regular representation") {
  for (const Rational& eta : {eta_m1, Rational(5, 7)}) {
    auto checks = verify_regular_representation(eta);
    for (const auto& c : checks) {
      INFO(c.name << " " << c.details);
      CHECK(c.pass);
    }
  }
  SUBCASE("image of e1 at eta=-1 maps the e1 basis vector to its negative") {
    BrauerAlgebra alg(eta_m1);
    MatrixQ m = alg.regular_matrix(BrauerDiagram::e1());
    std::size_t i = alg.index_of(BrauerDiagram::e1());
    for (std::size_t r = 0; r < 15; ++r) CHECK(m(r, i) == (r == i ? q(-1) : q(0)));
  }
}

TEST_CASE("multiplication table carries diagram index and loop count") {
  BrauerAlgebra alg(eta_m1);
  std::size_t ie1 = alg.index_of(BrauerDiagram::e1());
  auto entry = alg.multiplication_table()[ie1][ie1];
  CHECK(entry.result == ie1);
  CHECK(entry.loops == 1);
  std::size_t is1 = alg.index_of(BrauerDiagram::s1());
  auto e2 = alg.multiplication_table()[is1][is1];
  CHECK(e2.result == alg.index_of(BrauerDiagram::identity()));
  CHECK(e2.loops == 0);
}

TEST_CASE("psi images") {
  PsiImages psi = psi_images();

  SUBCASE("min_poly(X) = x^3 - 4x") {
    CHECK(min_poly(psi.X) == PolyQ({q(0), q(-4), q(0), q(1)}));
  }
  SUBCASE("spectrum(w) inside {-4,2,8,14}") {
    auto roots = integer_root_set(min_poly(psi.w));
    for (const auto& r : roots)
      CHECK((r == q(-4) || r == q(2) || r == q(8) || r == q(14)));
  }
  SUBCASE("spectrum(X-w) inside {-16,-10,-8,-6,0,2,6}") {
    PolyQ stated = PolyQ::from_roots({q(-16), q(-10), q(-8), q(-6), q(0), q(2), q(6)});
    CHECK(divides(min_poly(psi.X - psi.w), stated));
  }
}

TEST_CASE("theorem 1 report is all green") {
  Theorem1Report rep = verify_theorem1();
  CHECK(rep.closure_dimension == 15);
  for (const auto& c : rep.checks) {
    INFO(c.name << " " << c.details);
    CHECK(c.pass);
  }
}

TEST_CASE("the twelve proof relations hold") {
  auto checks = verify_proof_relations();
  CHECK(checks.size() == 12);
  for (const auto& c : checks) {
    INFO(c.name);
    CHECK(c.pass);
  }
}

TEST_CASE("remark quotient dimensions are (4,1,9,1)") {
  RemarkReport rep = verify_remark_quotients();
  CHECK(rep.quotient_dims == std::vector<std::size_t>{4, 1, 9, 1});
  for (const auto& c : rep.checks) {
    INFO(c.name << " " << c.details);
    CHECK(c.pass);
  }
}
