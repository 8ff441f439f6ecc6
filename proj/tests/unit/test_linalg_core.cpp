#include <doctest.h>

#include <random>

#include "ospcent/linalg.hpp"
#include "ospcent/matrix.hpp"
#include "ospcent/poly.hpp"
#include "ospcent/rational.hpp"

using namespace ospcent;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

MatrixQ from_rows(std::vector<std::vector<Rational>> rows) {
  MatrixQ m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

// The explicit 3x3 fundamental matrices as printed, used as an independent
// oracle against the basis-free constructions.
MatrixQ paper_H() {
  return from_rows({{q(1, 2), 0, 0}, {0, q(-1, 2), 0}, {0, 0, 0}});
}
MatrixQ paper_Fp() {
  return from_rows({{0, 0, q(1, 2)}, {0, 0, 0}, {0, q(1, 2), 0}});
}
MatrixQ paper_Fm() {
  return from_rows({{0, 0, 0}, {0, 0, q(-1, 2)}, {q(1, 2), 0, 0}});
}

MatrixQ random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  MatrixQ m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("Rational canonical form") {
  CHECK(Rational(2, 6) == Rational(1, 3));
  CHECK(Rational(-2, -6) == Rational(1, 3));
  CHECK(Rational(2, -6).to_string() == "-1/3");
  CHECK(Rational(0, 7).to_string() == "0");
  CHECK(Rational(2, 6).den() == 3);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK(Rational::from_string("-3/9") == Rational(-1, 3));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("mat_mul examples") {
  MatrixQ I3 = MatrixQ::identity(3);
  CHECK(I3 * I3 == I3);
  CHECK(MatrixQ::diagonal({q(1), q(2)}) * MatrixQ::diagonal({q(3), q(4)}) ==
        MatrixQ::diagonal({q(3), q(8)}));
  // F+F- from the printed fundamental matrices, multiplied by hand:
  // (2F+)(2F-) = diag(1,0,-1), so F+F- = diag(1,0,-1)/4.
  CHECK(paper_Fp() * paper_Fm() == MatrixQ::diagonal({q(1, 4), q(0), q(-1, 4)}));
  CHECK_THROWS_AS(MatrixQ(2, 3) * MatrixQ(2, 3), ShapeError);
  // the error carries both shapes
  try {
    MatrixQ(2, 3) * MatrixQ(2, 3);
  } catch (const ShapeError& e) {
    CHECK(e.a_cols == 3);
    CHECK(e.b_rows == 2);
  }
}

TEST_CASE("kron examples and mixed product") {
  CHECK(kron(MatrixQ::identity(2), MatrixQ::identity(3)) == MatrixQ::identity(6));
  CHECK(kron(MatrixQ::diagonal({q(1), q(-1)}), MatrixQ::diagonal({q(1), q(-1)})) ==
        MatrixQ::diagonal({q(1), q(-1), q(-1), q(1)}));
  // R = diag(1,1,-1) printed in the fundamental rep
  MatrixQ R = MatrixQ::diagonal({q(1), q(1), q(-1)});
  CHECK(kron(R, R) ==
        MatrixQ::diagonal({q(1), q(1), q(-1), q(1), q(1), q(-1), q(-1), q(-1), q(1)}));

  std::mt19937_64 rng(7);
  for (int t = 0; t < 10; ++t) {
    MatrixQ a = random_matrix(rng, 2, 3), c = random_matrix(rng, 3, 2);
    MatrixQ b = random_matrix(rng, 3, 2), d = random_matrix(rng, 2, 3);
    CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
  }
}

TEST_CASE("commutator and anticommutator") {
  std::mt19937_64 rng(3);
  MatrixQ a = random_matrix(rng, 4, 4);
  CHECK(anticommutator(MatrixQ::identity(4), a) == a * q(2));
  CHECK(commutator(a, a).is_zero());
  CHECK(anticommutator(paper_Fp(), paper_Fm()) == paper_H() * q(1, 2));
  CHECK_THROWS_AS(commutator(MatrixQ(2, 3), MatrixQ(2, 3)), ShapeError);
}

TEST_CASE("rank") {
  CHECK(rank(MatrixQ(4, 5)) == 0);
  CHECK(rank(MatrixQ::identity(6)) == 6);
  MatrixQ m = from_rows({{q(1), q(2)}, {q(2), q(4)}, {q(0), q(1)}});
  CHECK(rank(m) == 2);
}

TEST_CASE("nullspace_basis") {
  CHECK(nullspace_basis(MatrixQ::identity(5)).empty());
  CHECK(nullspace_basis(MatrixQ(2, 2)).size() == 2);
  // printed F+ has a one-dimensional kernel, the highest-weight line
  auto basis = nullspace_basis(paper_Fp());
  REQUIRE(basis.size() == 1);
  CHECK(basis[0](0, 0) == q(1));
  CHECK(basis[0](1, 0) == q(0));
  CHECK(basis[0](2, 0) == q(0));
  // kernel vectors are actual kernel vectors
  CHECK((paper_Fp() * basis[0]).is_zero());
}

TEST_CASE("det") {
  CHECK(det(MatrixQ::identity(3)) == q(1));
  CHECK(det(from_rows({{q(1, 2), q(1)}, {q(1), q(1)}})) == q(-1, 2));
  CHECK(det(from_rows({{q(1), q(2)}, {q(2), q(4)}})) == q(0));
}

TEST_CASE("min_poly small and examples") {
  CHECK(min_poly(MatrixQ::identity(4)) == PolyQ::from_roots({q(1)}));
  MatrixQ d = MatrixQ::diagonal({q(0), q(2), q(-2)});
  PolyQ expected({q(0), q(-4), q(0), q(1)});  // x^3 - 4x
  CHECK(min_poly(d) == expected);
  // degree <= dim, and annihilation, on random matrices
  std::mt19937_64 rng(11);
  for (int t = 0; t < 5; ++t) {
    MatrixQ a = random_matrix(rng, 5, 5);
    PolyQ p = min_poly(a);
    CHECK(p.degree() <= 5);
    CHECK(p.annihilates(a));
    CHECK(p.eval_matrix(a).is_zero());
  }
}

TEST_CASE("min_poly Krylov path agrees with flattened-power path") {
  // block-diagonal 70x70 with few distinct eigenvalues forces the
  // Krylov branch (dim > 64) with a low-degree answer
  std::vector<Rational> diag(70);
  for (std::size_t i = 0; i < 70; ++i) diag[i] = q(static_cast<long>(i % 3));
  MatrixQ a = MatrixQ::diagonal(diag);
  PolyQ p = min_poly(a, /*seed=*/0);
  CHECK(p == PolyQ::from_roots({q(0), q(1), q(2)}));
  // seed independence
  CHECK(min_poly(a, 1) == p);
  CHECK(min_poly(a, 42) == p);
}

TEST_CASE("integer_roots") {
  PolyQ p({q(0), q(-4), q(0), q(1)});  // x^3-4x
  auto roots = integer_roots(p);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == std::pair<mpz_class, int>{-2, 1});
  CHECK(roots[1] == std::pair<mpz_class, int>{0, 1});
  CHECK(roots[2] == std::pair<mpz_class, int>{2, 1});

  PolyQ p2 = PolyQ::from_roots({q(-4), q(2), q(8), q(14)});
  auto r2 = integer_root_set(p2);
  CHECK(r2 == std::vector<Rational>{q(-4), q(2), q(8), q(14)});

  PolyQ p3({q(1), q(0), q(1)});  // x^2+1
  CHECK(integer_roots(p3).empty());

  // multiplicities and denominators
  PolyQ p4 = PolyQ::from_roots({q(3), q(3), q(-1)}) * q(1, 6);
  auto r4 = integer_roots(p4);
  REQUIRE(r4.size() == 2);
  CHECK(r4[0] == std::pair<mpz_class, int>{-1, 1});
  CHECK(r4[1] == std::pair<mpz_class, int>{3, 2});

  CHECK_THROWS_AS(integer_roots(PolyQ()), std::invalid_argument);
}

TEST_CASE("poly arithmetic") {
  PolyQ a = PolyQ::from_roots({q(1), q(2)});
  PolyQ b = PolyQ::from_roots({q(2), q(3)});
  CHECK(poly_gcd(a, b) == PolyQ::from_roots({q(2)}));
  CHECK(poly_lcm(a, b) == PolyQ::from_roots({q(1), q(2), q(3)}));
  CHECK(divides(PolyQ::from_roots({q(2)}), a));
  CHECK_FALSE(divides(PolyQ::from_roots({q(5)}), a));
  auto [quot, rem] = a.divrem(PolyQ::from_roots({q(1)}));
  CHECK(quot == PolyQ::from_roots({q(2)}));
  CHECK(rem.is_zero());
}

TEST_CASE("EchelonSpan reduction invariants") {
  EchelonSpan span(4);
  CHECK(span.insert({q(1), q(2), q(0), q(0)}));
  CHECK(span.insert({q(0), q(1), q(1), q(0)}));
  CHECK_FALSE(span.insert({q(1), q(3), q(1), q(0)}));  // dependent
  auto red = span.reduce({q(2), q(5), q(1), q(0)});
  CHECK(red.in_span);
  // coordinates reproduce the vector over the stored rows
  std::vector<Rational> rebuilt(4);
  for (std::size_t r = 0; r < span.size(); ++r)
    for (std::size_t j = 0; j < 4; ++j) rebuilt[j] += red.coords[r] * span.rows()[r][j];
  CHECK(rebuilt == std::vector<Rational>{q(2), q(5), q(1), q(0)});
  CHECK(span.insert({q(0), q(0), q(0), q(3)}));
  CHECK(span.size() == 3);
}

TEST_CASE("fraction-free elimination keeps rationals canonical") {
  std::mt19937_64 rng(19);
  MatrixQ a = random_matrix(rng, 6, 8);
  rank(a);
  MatrixQ r = rref(a);
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), r(i, j).num().get_mpz_t(), r(i, j).den().get_mpz_t());
      CHECK(g == 1);
      CHECK(r(i, j).den() > 0);
    }
}
