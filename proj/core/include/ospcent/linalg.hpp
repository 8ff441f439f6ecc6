#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ospcent/matrix.hpp"
#include "ospcent/poly.hpp"

namespace ospcent {

// Exact rank via fraction-free (Bareiss) elimination on denominator-cleared
// rows. Pivot choice is the first nonzero entry in row-major order, so the
// result of every elimination here is bit-reproducible.
std::size_t rank(const MatrixQ& a);

Rational det(const MatrixQ& a);

// Reduced row echelon form; optionally reports pivot columns.
MatrixQ rref(const MatrixQ& a, std::vector<std::size_t>* pivot_cols = nullptr);

// Echelonized basis of the right kernel, as column vectors, in ascending
// free-column order. Deterministic.
std::vector<MatrixQ> nullspace_basis(const MatrixQ& a);

// Incremental row-echelon span over Rational. Stored rows are monic at
// their leading position and have pairwise distinct pivots; reducing a
// candidate costs O(size * ambient). Optionally tracks each stored row as a
// combination of the original inserted vectors (needed by min_poly).
class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t ambient, bool track_expressions = false)
      : ambient_(ambient), track_(track_expressions) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t size() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }

  struct Reduction {
    bool in_span = false;
    std::vector<Rational> coords;     // over stored rows
    std::vector<Rational> expr;       // over original inserts (if tracked)
    std::vector<Rational> residual;   // empty when in_span
  };

  Reduction reduce(std::vector<Rational> v) const;

  // Returns true when the span grew. Counts every call in inserted().
  bool insert(const std::vector<Rational>& v);

  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<std::vector<Rational>>& expressions() const { return exprs_; }

 private:
  std::size_t ambient_;
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> pivot_row_;  // pivot position -> row index, lazily sized
  std::vector<std::vector<Rational>> exprs_;
};

// Least-degree monic p with p(a) = 0, exact. For dim <= 64 the dependence
// is found among flattened powers I, a, a^2, ...; above that a seeded
// Krylov candidate is refined by lcm over further vectors. Either way the
// result is verified by evaluation before returning, so it does not depend
// on the seed.
PolyQ min_poly(const MatrixQ& a, std::uint64_t seed = 0);

// Roots of min_poly(a) when the spectrum of denom_scale*a is integral:
// computes min_poly(denom_scale * a), takes integer roots, and returns them
// divided by denom_scale. Throws if some root is not attained that way.
std::vector<Rational> scaled_spectrum(const MatrixQ& a, long denom_scale,
                                      std::uint64_t seed = 0);

}  // namespace ospcent
