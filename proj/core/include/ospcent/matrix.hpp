#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ospcent/rational.hpp"

namespace ospcent {

struct ShapeError : std::invalid_argument {
  ShapeError(const std::string& op, std::size_t ar, std::size_t ac, std::size_t br,
             std::size_t bc);
  std::size_t a_rows, a_cols, b_rows, b_cols;
};

// Dense row-major matrix over Rational. All arithmetic is exact.
class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static MatrixQ identity(std::size_t n);
  static MatrixQ diagonal(const std::vector<Rational>& d);
  static MatrixQ scalar(std::size_t n, const Rational& c);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  const std::vector<Rational>& entries() const { return a_; }
  std::vector<Rational> flatten() const { return a_; }  // row-major copy

  bool is_zero() const;
  bool is_diagonal() const;
  Rational trace() const;
  MatrixQ transpose() const;

  // Max absolute row sum; bounds every real eigenvalue in magnitude.
  Rational infinity_norm() const;

  MatrixQ& operator+=(const MatrixQ& o);
  MatrixQ& operator-=(const MatrixQ& o);
  MatrixQ& operator*=(const Rational& c);

  friend MatrixQ operator+(MatrixQ a, const MatrixQ& b) { return a += b; }
  friend MatrixQ operator-(MatrixQ a, const MatrixQ& b) { return a -= b; }
  friend MatrixQ operator*(MatrixQ a, const Rational& c) { return a *= c; }
  friend MatrixQ operator*(const Rational& c, MatrixQ a) { return a *= c; }
  friend MatrixQ operator-(const MatrixQ& a) { return a * Rational(-1); }

  friend MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) { return mat_mul(a, b); }
  friend bool operator==(const MatrixQ& a, const MatrixQ& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  // Exact product; parallelizes over rows, bit-identical to serial.
  static MatrixQ mat_mul(const MatrixQ& a, const MatrixQ& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// Kronecker product with index convention (i⊗j) -> i*b.dim + j, so that
// kron(a,b)*kron(c,d) = kron(a*c, b*d) whenever the shapes compose.
MatrixQ kron(const MatrixQ& a, const MatrixQ& b);

MatrixQ commutator(const MatrixQ& a, const MatrixQ& b);      // ab - ba
MatrixQ anticommutator(const MatrixQ& a, const MatrixQ& b);  // ab + ba

MatrixQ mat_pow(const MatrixQ& a, unsigned long e);

// a*v for a flat column vector v (size = a.cols()).
std::vector<Rational> mat_vec(const MatrixQ& a, const std::vector<Rational>& v);

}  // namespace ospcent
