#include <doctest.h>

#include <algorithm>

#include "ospcent/linalg.hpp"
#include "ospcent/tensor.hpp"

using namespace ospcent;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

const IrrepLabel half_plus{1, Parity::plus};

// spectrum via min_poly of the 8-scaled operator (all spectra here lie in Z/8)
std::vector<Rational> spectrum8(const MatrixQ& m) { return scaled_spectrum(m, 8); }

}  // namespace

TEST_CASE("coproduct examples") {
  Rep triv = build_irrep({0, Parity::plus});
  Rep fund = build_irrep(half_plus);

  SUBCASE("[0]+ ⊗ [1/2]+ is isomorphic to [1/2]+ (Q spectrum {3/8})") {
    Rep pair = coproduct_pair(triv, fund);
    MatrixQ Q = (commutator(pair.Fp, pair.Fm) + MatrixQ::scalar(3, q(1, 8))) * pair.R;
    CHECK(Q == MatrixQ::scalar(3, q(3, 8)));
  }

  SUBCASE("Δ(R) = kron(R,R), squares to identity") {
    Rep pair = coproduct_pair(fund, fund);
    CHECK(pair.R == kron(fund.R, fund.R));
    CHECK(pair.R * pair.R == MatrixQ::identity(9));
  }

  SUBCASE("Q of Δ on [1/2]+⊗[1/2]+ has spectrum {5/8, -3/8, 1/8}") {
    Rep pair = coproduct_pair(fund, fund);
    MatrixQ Q = (commutator(pair.Fp, pair.Fm) + MatrixQ::scalar(9, q(1, 8))) * pair.R;
    auto spec = spectrum8(Q);
    CHECK(spec == std::vector<Rational>{q(-3, 8), q(1, 8), q(5, 8)});
  }
}

TEST_CASE("build_context dims and coassociativity") {
  CHECK(build_context(half_plus, half_plus, half_plus).dim() == 27);
  CHECK(build_context({2, Parity::plus}, {2, Parity::plus}, {2, Parity::plus},
                      ArithMode::Modular)
            .dim() == 125);
  // mixed labels are allowed by the builder
  CHECK(build_context({0, Parity::plus}, half_plus, {1, Parity::minus}).dim() == 15);
}

TEST_CASE("casimir set on the fundamental triple") {
  TensorContext ctx = build_context(half_plus, half_plus, half_plus);
  CasimirSet cs = build_casimirs(ctx);

  CHECK(cs.Q1 == MatrixQ::scalar(27, q(3, 8)));
  CHECK(cs.Q2 == MatrixQ::scalar(27, q(3, 8)));
  CHECK(cs.Q3 == MatrixQ::scalar(27, q(3, 8)));
  CHECK(spectrum8(cs.Q4) == std::vector<Rational>{q(-5, 8), q(-1, 8), q(3, 8), q(7, 8)});
  CHECK(spectrum8(cs.Q13) == std::vector<Rational>{q(-3, 8), q(1, 8), q(5, 8)});
  CHECK(spectrum8(cs.Q12) == std::vector<Rational>{q(-3, 8), q(1, 8), q(5, 8)});
  CHECK(spectrum8(cs.Q23) == std::vector<Rational>{q(-3, 8), q(1, 8), q(5, 8)});
}

TEST_CASE("phi images on the fundamental triple") {
  TensorContext ctx = build_context(half_plus, half_plus, half_plus);
  CasimirSet cs = build_casimirs(ctx);
  BIImage bi = phi_images(cs, ctx);

  SUBCASE("X spectrum {-2, 2, 0}") {
    CHECK(scaled_spectrum(bi.X, 1) == std::vector<Rational>{q(-2), q(0), q(2)});
    CHECK(scaled_spectrum(bi.Y, 1) == std::vector<Rational>{q(-2), q(0), q(2)});
    CHECK(scaled_spectrum(bi.Z, 1) == std::vector<Rational>{q(-2), q(0), q(2)});
  }
  SUBCASE("equal labels force wX = wY = wZ") {
    CHECK(bi.wX == bi.wY);
    CHECK(bi.wY == bi.wZ);
  }
  SUBCASE("w = 7/2 + 12 Q4 as a matrix identity") {
    CHECK(bi.wX == MatrixQ::scalar(27, q(7, 2)) + cs.Q4 * q(12));
  }
  SUBCASE("w spectrum {-4, 2, 8, 14}") {
    CHECK(scaled_spectrum(bi.wX, 1) == std::vector<Rational>{q(-4), q(2), q(8), q(14)});
  }
  SUBCASE("X - w spectrum {-16,-10,-8,-6,0,2,6}") {
    CHECK(scaled_spectrum(bi.X - bi.wX, 1) ==
          std::vector<Rational>{q(-16), q(-10), q(-8), q(-6), q(0), q(2), q(6)});
  }
}

TEST_CASE("centralizing commutators") {
  SUBCASE("fundamental triple: all 36 vanish") {
    TensorContext ctx = build_context(half_plus, half_plus, half_plus);
    BIImage bi = phi_images(build_casimirs(ctx), ctx);
    auto checks = verify_centralizing(bi, ctx);
    CHECK(checks.size() == 36);
    for (const auto& c : checks) {
      INFO(c.name);
      CHECK(c.pass);
    }
  }
  SUBCASE("trivial triple: everything is scalar") {
    TensorContext ctx = build_context({0, Parity::plus}, {0, Parity::plus}, {0, Parity::plus});
    BIImage bi = phi_images(build_casimirs(ctx), ctx);
    for (const auto& c : verify_centralizing(bi, ctx)) CHECK(c.pass);
  }
}

TEST_CASE("monomial independence") {
  TensorContext ctx = build_context(half_plus, half_plus, half_plus);
  CasimirSet cs = build_casimirs(ctx);

  SUBCASE("the 15 listed monomials are independent") {
    auto res = verify_monomial_independence(cs);
    CHECK(res.count == 15);
    CHECK(res.rank == 15);
  }
  SUBCASE("replacing Q23 by Q12 collapses the list to powers of Q12") {
    auto mons = monomial_images(cs.Q12, cs.Q12);
    MatrixQ stack(mons.size(), 27 * 27);
    for (std::size_t i = 0; i < mons.size(); ++i) {
      auto flat = mons[i].flatten();
      for (std::size_t j = 0; j < flat.size(); ++j) stack(i, j) = flat[j];
    }
    CHECK(rank(stack) == 3);  // Q12 has three eigenvalues
  }
  SUBCASE("a single monomial has rank 1") {
    MatrixQ stack(1, 27 * 27);
    auto flat = MatrixQ::identity(27).flatten();
    for (std::size_t j = 0; j < flat.size(); ++j) stack(0, j) = flat[j];
    CHECK(rank(stack) == 1);
  }
}

TEST_CASE("modular verification path works on the fundamental triple") {
  TensorContext ctx = build_context(half_plus, half_plus, half_plus, ArithMode::Modular);
  CasimirSet cs = build_casimirs(ctx);
  BIImage bi = phi_images(cs, ctx);
  auto checks = verify_centralizing(bi, ctx);
  for (const auto& c : checks) CHECK(c.pass);
}
