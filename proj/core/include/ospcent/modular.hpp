#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ospcent/matrix.hpp"

namespace ospcent {

// Arithmetic backend selector used by the verification pipeline. Exact
// means every equality is decided over Q. Modular means equalities and
// ranks are certified by agreement over two independent 62-bit primes.
enum class ArithMode { Exact, Modular };

inline const char* to_string(ArithMode m) {
  return m == ArithMode::Exact ? "exact" : "modular";
}

// The two fixed 62-bit primes of certified modular runs.
inline constexpr std::uint64_t kPrimeA = 4611686018427387847ULL;  // 2^62 - 57
inline constexpr std::uint64_t kPrimeB = 4611686018427387817ULL;

struct BadPrimeError : std::runtime_error {
  BadPrimeError(std::uint64_t p, std::size_t row, std::size_t col, const std::string& entry);
  std::uint64_t prime;
  std::size_t row, col;
};

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);
std::uint64_t mod_of_mpz(const mpz_class& z, std::uint64_t p);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Dense matrix over the prime field Z/p, entries in [0, p).
class MatrixP {
 public:
  MatrixP() = default;
  MatrixP(std::size_t rows, std::size_t cols, std::uint64_t p)
      : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {}

  static MatrixP identity(std::size_t n, std::uint64_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t prime() const { return p_; }

  std::uint64_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  std::uint64_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const std::vector<std::uint64_t>& entries() const { return a_; }
  std::vector<std::uint64_t> flatten() const { return a_; }

  bool is_zero() const;

  friend MatrixP operator*(const MatrixP& a, const MatrixP& b);
  friend MatrixP operator+(const MatrixP& a, const MatrixP& b);
  friend MatrixP operator-(const MatrixP& a, const MatrixP& b);
  friend bool operator==(const MatrixP& a, const MatrixP& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.p_ == b.p_ && a.a_ == b.a_;
  }

  MatrixP scaled(std::uint64_t c) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::uint64_t p_ = 0;
  std::vector<std::uint64_t> a_;
};

// Entrywise reduction num * den^-1 mod p. Throws BadPrimeError when p
// divides some entry's denominator. Used only to accelerate rank/closure
// style conclusions, never for final certified equalities unless the
// caller opted into probabilistic certificates.
MatrixP modular_view(const MatrixQ& a, std::uint64_t p);

std::size_t rank_mod(MatrixP a);

std::vector<std::uint64_t> mat_vec_mod(const MatrixP& a, const std::vector<std::uint64_t>& v);

// Monic minimal polynomial of a over Z/p (coefficients lowest first),
// Krylov candidate refined by lcm and verified column-wise mod p.
std::vector<std::uint64_t> min_poly_mod(const MatrixP& a, std::uint64_t seed = 0);

// Evaluates a monic integer-coefficient polynomial image mod p at x.
std::uint64_t poly_eval_mod(const std::vector<std::uint64_t>& coeffs, std::uint64_t x,
                            std::uint64_t p);

// Exact remainder of dividend by monic divisor over Z/p; empty == zero.
std::vector<std::uint64_t> poly_rem_mod(std::vector<std::uint64_t> dividend,
                                        const std::vector<std::uint64_t>& divisor,
                                        std::uint64_t p);

}  // namespace ospcent
