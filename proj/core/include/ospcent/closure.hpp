#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ospcent/linalg.hpp"
#include "ospcent/matrix.hpp"
#include "ospcent/modular.hpp"

namespace ospcent {

// Triangularized spanning set of a matrix subspace, flattened row-major.
// Reducing a candidate costs O(size * ambient); re-running a closure on its
// own output is a fixed point.
struct SpanBasis {
  std::size_t ambient_dim = 0;  // d*d for d x d matrices
  EchelonSpan span{0};

  std::size_t size() const { return span.size(); }
  const std::vector<std::vector<Rational>>& elements() const { return span.rows(); }
};

struct ClosureReport {
  std::size_t dimension = 0;
  std::size_t generations = 0;   // saturation rounds until no rank growth
  bool certified = false;        // exact Q, or dual-prime agreement
  ArithMode mode = ArithMode::Exact;
};

// Raised when saturation exceeds the ambient dimension, which is
// impossible mathematically and indicates a reduction bug (or, via
// max_dimension, a caller-imposed resource cap).
struct ClosureCapError : std::runtime_error {
  explicit ClosureCapError(const std::string& what) : std::runtime_error(what) {}
};

struct ClosureOptions {
  std::uint64_t seed = 0;          // unused by the deterministic saturation
  std::size_t max_dimension = 0;   // 0 = ambient_dim cap
  bool saturate_left = false;      // multiply by generators on the left (tests)
  std::array<std::uint64_t, 2> primes{kPrimeA, kPrimeB};
};

struct ClosureResult {
  SpanBasis basis;                 // populated in exact mode
  std::vector<MatrixQ> words;      // accepted word matrices, exact mode
  ClosureReport report;
};

// Basis of the unital algebra generated by the given square matrices:
// span of all words including the empty word. Saturation multiplies every
// accepted element by every generator on the right, reduces against the
// echelon basis and repeats until the span is stable, in deterministic
// (generation, generator) order. In modular mode the saturation runs over
// both primes; if the dimensions disagree the computation falls back to
// exact arithmetic.
ClosureResult unital_closure(const std::vector<MatrixQ>& generators, ArithMode mode,
                             ClosureOptions opts = {});

// Single-prime saturation keeping the accepted word matrices; building
// block of the modular mode, also used by callers that need to test the
// closed algebra elementwise mod p.
struct ModularClosure {
  std::size_t dimension = 0;
  std::size_t generations = 0;
  std::vector<MatrixP> words;
};
ModularClosure unital_closure_mod(const std::vector<MatrixQ>& generators, std::uint64_t p,
                                  ClosureOptions opts = {});

// Exact reduction against the basis; when m lies in the span, returns the
// coordinates over basis.elements() reproducing m exactly.
std::optional<std::vector<Rational>> membership(const MatrixQ& m, const SpanBasis& basis);

// Lagrange projector prod_{mu != lambda} (a - mu)/(lambda - mu). The
// spectrum entries must be distinct, contain lambda, and annihilate a
// (checked); the minimal polynomial of every operator in scope here is
// squarefree.
MatrixQ spectral_projector(const MatrixQ& a, const Rational& lambda,
                           const std::vector<Rational>& spectrum);

}  // namespace ospcent
