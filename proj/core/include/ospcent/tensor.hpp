#pragma once

#include <array>
#include <vector>

#include "ospcent/matrix.hpp"
#include "ospcent/modular.hpp"
#include "ospcent/osp_rep.hpp"

namespace ospcent {

// Coproduct on a pair of representations: H, E± primitive, F± twisted by
// the grading involution of the second factor, R multiplicative. The
// returned Rep carries no label; its relation suite is re-verified in the
// requested arithmetic (exact, or over both fixed primes).
Rep coproduct_pair(const Rep& a, const Rep& b, ArithMode verify = ArithMode::Exact);

// Threefold tensor product with the iterated coproduct images cached.
struct TensorContext {
  std::array<IrrepLabel, 3> labels;
  std::array<Rep, 3> reps;
  Rep pair12, pair23;
  Rep triple;  // images of H, E±, F±, R under (Δ⊗1)Δ
  ArithMode verify_mode = ArithMode::Exact;
  std::size_t dim() const { return triple.dim; }
};

// Builds the context and verifies coassociativity on the six generators:
// (Δ⊗1)Δ(g) = (1⊗Δ)Δ(g) as exact matrix equalities.
TensorContext build_context(IrrepLabel l1, IrrepLabel l2, IrrepLabel l3,
                            ArithMode verify = ArithMode::Exact);

// The seven intermediate Casimir operators on the triple product.
struct CasimirSet {
  MatrixQ Q1, Q2, Q3, Q12, Q23, Q13, Q4;
};

// Asserts (in the context's arithmetic) that every member commutes with
// all six triple images and that Q1, Q2, Q3 are the scalars eps(4j+1)/8.
CasimirSet build_casimirs(const TensorContext& ctx);

// Images of the Bannai-Ito generators and central elements.
struct BIImage {
  MatrixQ X, Y, Z, wX, wY, wZ;
};

// X = -4 Q12 + 1/2, Y = -4 Q23 + 1/2, Z = -4 Q13 + 1/2,
// wX = 32(Q1 Q2 + Q3 Q4) - 1 and cyclic. Asserts the three Bannai-Ito
// relations; a failure here would falsify the homomorphism property for
// this instance and throws.
BIImage phi_images(const CasimirSet& cs, const TensorContext& ctx);

// Commutator of each of X, Y, Z, wX, wY, wZ with each triple image of
// H, E±, F±, R; reported, not thrown.
std::vector<CheckItem> verify_centralizing(const BIImage& bi, const TensorContext& ctx);

// The fifteen words in two generators of §-order: 1, A, B, A², B², AB, BA,
// A²B, ABA, BA², B²A, BAB, A²B², B²A², AB²A.
std::vector<MatrixQ> monomial_images(const MatrixQ& A, const MatrixQ& B);

struct MonomialIndependence {
  std::size_t rank = 0;
  std::size_t count = 0;  // number of monomials stacked
};

// Rank of the stacked flattened monomials in Q12, Q23.
MonomialIndependence verify_monomial_independence(const CasimirSet& cs);

}  // namespace ospcent
