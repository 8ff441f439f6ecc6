#include <doctest.h>

#include "ospcent/linalg.hpp"
#include "ospcent/osp_rep.hpp"

using namespace ospcent;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

MatrixQ from_rows(std::vector<std::vector<Rational>> rows) {
  MatrixQ m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

// printed fundamental matrices, E± = ±4(F±)^2, R = diag(1,1,-1)
Rep paper_fundamental() {
  Rep r;
  r.dim = 3;
  r.H = from_rows({{q(1, 2), 0, 0}, {0, q(-1, 2), 0}, {0, 0, 0}});
  r.Fp = from_rows({{0, 0, q(1, 2)}, {0, 0, 0}, {0, q(1, 2), 0}});
  r.Fm = from_rows({{0, 0, 0}, {0, 0, q(-1, 2)}, {q(1, 2), 0, 0}});
  r.Ep = r.Fp * r.Fp * q(4);
  r.Em = r.Fm * r.Fm * q(-4);
  r.R = MatrixQ::diagonal({q(1), q(1), q(-1)});
  return r;
}

std::vector<Rational> sorted_diag(const MatrixQ& m) {
  std::vector<Rational> d;
  for (std::size_t i = 0; i < m.rows(); ++i) d.push_back(m(i, i));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("IrrepLabel basics") {
  IrrepLabel l{1, Parity::plus};
  CHECK(l.dim() == 3);
  CHECK(l.j() == q(1, 2));
  CHECK(l.to_string() == "[1/2]+");
  CHECK(IrrepLabel{4, Parity::minus}.to_string() == "[2]-");
  CHECK(IrrepLabel{3, Parity::plus}.dim() == 7);
}

TEST_CASE("printed fundamental matrices satisfy every relation") {
  Rep rep = paper_fundamental();
  for (const auto& c : osp_relation_checks(rep)) {
    INFO(c.name);
    CHECK(c.pass);
  }
}

TEST_CASE("build_irrep j=1/2 plus") {
  Rep rep = build_irrep({1, Parity::plus});
  CHECK(rep.dim == 3);
  CHECK(sorted_diag(rep.H) == std::vector<Rational>{q(-1, 2), q(0), q(1, 2)});
  CHECK(rep.H(0, 0) == q(1, 2));  // weights descend from j
  CHECK(rep.R(0, 0) == q(1));
  CHECK(rep.R(1, 1) == q(-1));
  CHECK(rep.R(2, 2) == q(1));
  for (const auto& c : osp_relation_checks(rep)) {
    INFO(c.name);
    CHECK(c.pass);
  }
}

TEST_CASE("build_irrep is conjugate to the printed matrices") {
  // Solve T A_built = A_paper T on all six generators; a one-dimensional
  // solution space with an invertible representative is the isomorphism.
  Rep built = build_irrep({1, Parity::plus});
  Rep paper = paper_fundamental();
  const MatrixQ I3 = MatrixQ::identity(3);
  const MatrixQ* bs[] = {&built.H, &built.Ep, &built.Em, &built.Fp, &built.Fm, &built.R};
  const MatrixQ* ps[] = {&paper.H, &paper.Ep, &paper.Em, &paper.Fp, &paper.Fm, &paper.R};
  MatrixQ stack(6 * 9, 9);
  for (int g = 0; g < 6; ++g) {
    // row-major flatten: flat(T*A) = (I ⊗ A^T) flat(T), flat(B*T) = (B ⊗ I) flat(T)
    MatrixQ block = kron(I3, bs[g]->transpose()) - kron(*ps[g], I3);
    for (std::size_t i = 0; i < 9; ++i)
      for (std::size_t j = 0; j < 9; ++j) stack(g * 9 + i, j) = block(i, j);
  }
  auto basis = nullspace_basis(stack);
  REQUIRE(basis.size() == 1);  // Schur: intertwiner space is a line
  MatrixQ T(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) T(i, j) = basis[0](i * 3 + j, 0);
  CHECK(rank(T) == 3);
  CHECK(T * built.H == paper.H * T);
  CHECK(T * built.Fp == paper.Fp * T);
}

TEST_CASE("build_irrep trivial rep") {
  Rep rep = build_irrep({0, Parity::plus});
  CHECK(rep.dim == 1);
  CHECK(rep.H.is_zero());
  CHECK(rep.Ep.is_zero());
  CHECK(rep.Fm.is_zero());
  CHECK(rep.R == MatrixQ::identity(1));
  CHECK(casimir_q(rep) == MatrixQ::scalar(1, q(1, 8)));
}

TEST_CASE("build_irrep j=1 minus has Casimir -5/8") {
  Rep rep = build_irrep({2, Parity::minus});
  CHECK(rep.dim == 5);
  CHECK(casimir_q(rep) == MatrixQ::scalar(5, q(-5, 8)));
}

TEST_CASE("full relation suite for 2j <= 6, both parities") {
  for (int two_j = 0; two_j <= 6; ++two_j)
    for (Parity p : {Parity::plus, Parity::minus}) {
      Rep rep = build_irrep({two_j, p});
      CHECK(rep.dim == static_cast<std::size_t>(2 * two_j + 1));
      for (const auto& c : osp_relation_checks(rep)) {
        INFO(rep.label->to_string() << " " << c.name);
        CHECK(c.pass);
      }
      CHECK(casimir_q(rep) == MatrixQ::scalar(rep.dim, casimir_scalar({two_j, p})));
    }
}

TEST_CASE("scasimir") {
  SUBCASE("fundamental: anticommutes with F+, squares to a scalar") {
    Rep rep = build_irrep({1, Parity::plus});
    MatrixQ S = scasimir(rep);
    CHECK(anticommutator(S, rep.Fp).is_zero());
    CHECK(S * S == MatrixQ::scalar(3, q(9, 64)));
  }
  SUBCASE("trivial rep: S = 1/8") {
    CHECK(scasimir(build_irrep({0, Parity::plus})) == MatrixQ::scalar(1, q(1, 8)));
  }
  SUBCASE("[1]+ : S commutes with E± exactly") {
    Rep rep = build_irrep({2, Parity::plus});
    MatrixQ S = scasimir(rep);
    CHECK(commutator(S, rep.Ep).is_zero());
    CHECK(commutator(S, rep.Em).is_zero());
  }
}

TEST_CASE("casimir_q values") {
  CHECK(casimir_q(build_irrep({1, Parity::plus})) == MatrixQ::scalar(3, q(3, 8)));
  CHECK(casimir_q(build_irrep({3, Parity::plus})) == MatrixQ::scalar(7, q(7, 8)));
  CHECK(casimir_scalar({3, Parity::plus}) == q(7, 8));
}

TEST_CASE("casimir_q rejects a mislabeled rep") {
  // direct sum [0]+ ⊕ [1/2]+ wearing an irreducible label is invalid
  Rep a = build_irrep({0, Parity::plus});
  Rep b = build_irrep({1, Parity::plus});
  Rep sum;
  sum.dim = 4;
  auto embed = [&](const MatrixQ& x, const MatrixQ& y) {
    MatrixQ m(4, 4);
    m(0, 0) = x(0, 0);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i + 1, j + 1) = y(i, j);
    return m;
  };
  sum.H = embed(a.H, b.H);
  sum.Ep = embed(a.Ep, b.Ep);
  sum.Em = embed(a.Em, b.Em);
  sum.Fp = embed(a.Fp, b.Fp);
  sum.Fm = embed(a.Fm, b.Fm);
  sum.R = embed(a.R, b.R);
  verify_osp_relations(sum);  // a fine rep...
  sum.label = IrrepLabel{1, Parity::plus};  // ...but not irreducible [1/2]+
  CHECK_THROWS_AS(casimir_q(sum), RelationError);
}
