#include "ospcent/matrix.hpp"

#include <sstream>

#include "ospcent/parallel.hpp"

namespace ospcent {

namespace {
std::string shape_msg(const std::string& op, std::size_t ar, std::size_t ac, std::size_t br,
                      std::size_t bc) {
  std::ostringstream os;
  os << op << ": shape mismatch " << ar << "x" << ac << " vs " << br << "x" << bc;
  return os.str();
}
}  // namespace

ShapeError::ShapeError(const std::string& op, std::size_t ar, std::size_t ac, std::size_t br,
                       std::size_t bc)
    : std::invalid_argument(shape_msg(op, ar, ac, br, bc)),
      a_rows(ar), a_cols(ac), b_rows(br), b_cols(bc) {}

MatrixQ MatrixQ::identity(std::size_t n) {
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

MatrixQ MatrixQ::diagonal(const std::vector<Rational>& d) {
  MatrixQ m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

MatrixQ MatrixQ::scalar(std::size_t n, const Rational& c) {
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

bool MatrixQ::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool MatrixQ::is_diagonal() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

Rational MatrixQ::trace() const {
  if (!is_square()) throw ShapeError("trace", rows_, cols_, rows_, cols_);
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

MatrixQ MatrixQ::transpose() const {
  MatrixQ t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational MatrixQ::infinity_norm() const {
  Rational best;
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j).abs();
    if (s > best) best = s;
  }
  return best;
}

MatrixQ& MatrixQ::operator+=(const MatrixQ& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ShapeError("add", rows_, cols_, o.rows_, o.cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

MatrixQ& MatrixQ::operator-=(const MatrixQ& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ShapeError("sub", rows_, cols_, o.rows_, o.cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

MatrixQ& MatrixQ::operator*=(const Rational& c) {
  for (auto& x : a_) x *= c;
  return *this;
}

MatrixQ MatrixQ::mat_mul(const MatrixQ& a, const MatrixQ& b) {
  if (a.cols_ != b.rows_) throw ShapeError("mat_mul", a.rows_, a.cols_, b.rows_, b.cols_);
  MatrixQ c(a.rows_, b.cols_);
  // Row-partitioned; skipping zero a(i,k) pays off on the banded operators.
  parallel_for(a.rows_, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Rational& bkj = b(k, j);
          if (bkj.is_zero()) continue;
          c(i, j) += aik * bkj;
        }
      }
    }
  });
  return c;
}

std::string MatrixQ::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "[") << (*this)(i, j);
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

MatrixQ kron(const MatrixQ& a, const MatrixQ& b) {
  MatrixQ k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t s = 0; s < b.cols(); ++s) {
          const Rational& brs = b(r, s);
          if (brs.is_zero()) continue;
          k(i * b.rows() + r, j * b.cols() + s) = aij * brs;
        }
    }
  return k;
}

MatrixQ commutator(const MatrixQ& a, const MatrixQ& b) {
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("commutator", a.rows(), a.cols(), b.rows(), b.cols());
  return a * b - b * a;
}

MatrixQ anticommutator(const MatrixQ& a, const MatrixQ& b) {
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("anticommutator", a.rows(), a.cols(), b.rows(), b.cols());
  return a * b + b * a;
}

MatrixQ mat_pow(const MatrixQ& a, unsigned long e) {
  if (!a.is_square()) throw ShapeError("mat_pow", a.rows(), a.cols(), a.rows(), a.cols());
  MatrixQ r = MatrixQ::identity(a.rows());
  MatrixQ base = a;
  while (e > 0) {
    if (e & 1UL) r = r * base;
    e >>= 1UL;
    if (e > 0) base = base * base;
  }
  return r;
}

std::vector<Rational> mat_vec(const MatrixQ& a, const std::vector<Rational>& v) {
  if (v.size() != a.cols()) throw ShapeError("mat_vec", a.rows(), a.cols(), v.size(), 1);
  std::vector<Rational> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational s;
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (!aik.is_zero()) s += aik * v[k];
    }
    out[i] = s;
  }
  return out;
}

}  // namespace ospcent
