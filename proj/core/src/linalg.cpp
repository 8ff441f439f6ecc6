#include "ospcent/linalg.hpp"

#include <algorithm>
#include <random>

namespace ospcent {

namespace {

// Denominator-cleared integer copy, row by row.
std::vector<std::vector<mpz_class>> integer_rows(const MatrixQ& a) {
  std::vector<std::vector<mpz_class>> m(a.rows(), std::vector<mpz_class>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    mpz_class l(1);
    for (std::size_t j = 0; j < a.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).den().get_mpz_t());
    for (std::size_t j = 0; j < a.cols(); ++j)
      m[i][j] = a(i, j).num() * (l / a(i, j).den());
  }
  return m;
}

// One-step Bareiss elimination; returns (rank, det_of_leading_block * sign).
std::pair<std::size_t, mpz_class> bareiss(std::vector<std::vector<mpz_class>>& m) {
  if (m.empty()) return {0, mpz_class(1)};
  std::size_t rows = m.size(), cols = m[0].size();
  mpz_class prev(1);
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m[i][col] != 0) { piv = i; break; }
    if (piv == rows) continue;
    if (piv != r) { std::swap(m[piv], m[r]); sign = -sign; }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class t = m[r][col] * m[i][j] - m[i][col] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[r][col];
    ++r;
  }
  return {r, sign < 0 ? mpz_class(-prev) : prev};
}

}  // namespace

std::size_t rank(const MatrixQ& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  auto m = integer_rows(a);
  return bareiss(m).first;
}

Rational det(const MatrixQ& a) {
  if (!a.is_square()) throw ShapeError("det", a.rows(), a.cols(), a.rows(), a.cols());
  if (a.rows() == 0) return Rational(1);
  // Track the row scalings applied by the denominator clearing.
  Rational scale(1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    mpz_class l(1);
    for (std::size_t j = 0; j < a.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).den().get_mpz_t());
    scale *= Rational(l);
  }
  auto m = integer_rows(a);
  auto [r, d] = bareiss(m);
  if (r < a.rows()) return Rational(0);
  return Rational(d) / scale;
}

MatrixQ rref(const MatrixQ& a, std::vector<std::size_t>* pivot_cols) {
  MatrixQ m = a;
  std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!m(i, col).is_zero()) { piv = i; break; }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    Rational inv = m(r, col).inverse();
    for (std::size_t j = col; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, col).is_zero()) continue;
      Rational f = m(i, col);
      for (std::size_t j = col; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  if (pivot_cols) *pivot_cols = pivots;
  return m;
}

std::vector<MatrixQ> nullspace_basis(const MatrixQ& a) {
  std::vector<std::size_t> pivots;
  MatrixQ r = rref(a, &pivots);
  std::size_t cols = a.cols();
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;
  std::vector<MatrixQ> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    MatrixQ v(cols, 1);
    v(f, 0) = Rational(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v(pivots[k], 0) = -r(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// EchelonSpan
// ---------------------------------------------------------------------------

EchelonSpan::Reduction EchelonSpan::reduce(std::vector<Rational> v) const {
  if (v.size() != ambient_) throw ShapeError("EchelonSpan::reduce", 1, v.size(), 1, ambient_);
  Reduction res;
  res.coords.assign(rows_.size(), Rational(0));
  if (track_) res.expr.assign(inserted_, Rational(0));
  std::size_t pos = 0;
  while (pos < ambient_) {
    if (v[pos].is_zero()) { ++pos; continue; }
    long row = pos < pivot_row_.size() ? pivot_row_[pos] : -1;
    if (row < 0) break;  // new pivot position
    Rational f = v[pos];  // stored rows are monic at their pivot
    const auto& r = rows_[static_cast<std::size_t>(row)];
    for (std::size_t j = pos; j < ambient_; ++j)
      if (!r[j].is_zero()) v[j] -= f * r[j];
    res.coords[static_cast<std::size_t>(row)] = f;
    if (track_) {
      const auto& e = exprs_[static_cast<std::size_t>(row)];
      for (std::size_t j = 0; j < e.size(); ++j)
        if (!e[j].is_zero()) res.expr[j] += f * e[j];
    }
    ++pos;
  }
  res.in_span = (pos == ambient_);
  if (!res.in_span) res.residual = std::move(v);
  return res;
}

bool EchelonSpan::insert(const std::vector<Rational>& v) {
  Reduction red = reduce(v);
  std::size_t my_index = inserted_;
  ++inserted_;
  if (red.in_span) {
    return false;
  }
  std::size_t pivot = 0;
  while (red.residual[pivot].is_zero()) ++pivot;
  Rational inv = red.residual[pivot].inverse();
  for (std::size_t j = pivot; j < ambient_; ++j) red.residual[j] *= inv;
  if (track_) {
    // residual = (v - sum coords*rows) / lead; express over original inserts
    std::vector<Rational> e(inserted_, Rational(0));
    for (std::size_t j = 0; j < red.expr.size(); ++j) e[j] = -inv * red.expr[j];
    e[my_index] = inv;
    exprs_.push_back(std::move(e));
  }
  if (pivot_row_.size() <= pivot) pivot_row_.resize(pivot + 1, -1);
  pivot_row_[pivot] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(red.residual));
  pivots_.push_back(pivot);
  return true;
}

// ---------------------------------------------------------------------------
// minimal polynomial
// ---------------------------------------------------------------------------

namespace {

PolyQ poly_from_dependence(const std::vector<Rational>& expr, std::size_t k) {
  // A^k = sum_{i<k} expr[i] A^i  ->  x^k - sum expr[i] x^i
  std::vector<Rational> c(k + 1);
  for (std::size_t i = 0; i < k && i < expr.size(); ++i) c[i] = -expr[i];
  c[k] = Rational(1);
  return PolyQ(std::move(c));
}

// local minimal polynomial of the vector v under a
PolyQ krylov_local_minpoly(const MatrixQ& a, std::vector<Rational> v) {
  std::size_t n = a.rows();
  EchelonSpan span(n, /*track_expressions=*/true);
  std::size_t k = 0;
  while (true) {
    if (!span.insert(v)) {
      auto red = span.reduce(v);
      return poly_from_dependence(red.expr, k);
    }
    v = mat_vec(a, v);
    ++k;
  }
}

std::vector<Rational> seeded_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL);
  std::uniform_int_distribution<int> dist(-9, 9);
  std::vector<Rational> v(n);
  bool nonzero = false;
  for (auto& x : v) {
    int t = dist(rng);
    x = Rational(t);
    nonzero = nonzero || t != 0;
  }
  if (!nonzero) v[0] = Rational(1);
  return v;
}

}  // namespace

PolyQ min_poly(const MatrixQ& a, std::uint64_t seed) {
  if (!a.is_square()) throw ShapeError("min_poly", a.rows(), a.cols(), a.rows(), a.cols());
  std::size_t n = a.rows();
  if (n == 0) return PolyQ({Rational(1)});  // unit algebra: p = 1? use x convention below
  if (n <= 64) {
    // dependence among flattened powers I, a, a^2, ...
    EchelonSpan span(n * n, /*track_expressions=*/true);
    MatrixQ p = MatrixQ::identity(n);
    std::size_t k = 0;
    while (true) {
      if (!span.insert(p.flatten())) {
        auto red = span.reduce(p.flatten());
        PolyQ mp = poly_from_dependence(red.expr, k);
        if (!mp.annihilates(a)) throw std::logic_error("min_poly: verification failed");
        return mp;
      }
      p = p * a;
      ++k;
    }
  }
  // Krylov candidate from seeded vectors, refined by lcm; exact verification
  // is mandatory, which also makes the result seed-independent.
  PolyQ cand = krylov_local_minpoly(a, seeded_vector(n, seed));
  for (std::uint64_t attempt = 1; attempt <= n + 2; ++attempt) {
    if (cand.annihilates(a)) return cand.monic();
    PolyQ next = krylov_local_minpoly(a, seeded_vector(n, seed + attempt));
    cand = poly_lcm(cand, next);
  }
  throw std::logic_error("min_poly: Krylov refinement failed to converge");
}

std::vector<Rational> scaled_spectrum(const MatrixQ& a, long denom_scale, std::uint64_t seed) {
  MatrixQ s = a * Rational(denom_scale);
  PolyQ mp = min_poly(s, seed);
  auto roots = integer_roots(mp);
  long total = 0;
  for (const auto& [r, m] : roots) total += m;
  if (total != mp.degree())
    throw std::domain_error("scaled_spectrum: spectrum is not integral at scale " +
                            std::to_string(denom_scale));
  std::vector<Rational> out;
  for (const auto& [r, m] : roots) out.push_back(Rational(r) / Rational(denom_scale));
  return out;
}

}  // namespace ospcent
