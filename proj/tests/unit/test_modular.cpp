#include <doctest.h>

#include <random>

#include "ospcent/linalg.hpp"
#include "ospcent/modular.hpp"

using namespace ospcent;

namespace {
MatrixQ random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  MatrixQ m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(num(rng), den(rng));
  return m;
}
}  // namespace

TEST_CASE("fixed primes are prime and 62-bit") {
  CHECK(is_prime_u64(kPrimeA));
  CHECK(is_prime_u64(kPrimeB));
  CHECK(kPrimeA >> 61 == 1);  // in [2^61, 2^62)
  CHECK(kPrimeB >> 61 == 1);
  CHECK_FALSE(is_prime_u64(kPrimeA - 1));
}

TEST_CASE("modular_view and bad primes") {
  MatrixQ m(1, 2);
  m(0, 0) = Rational(1, 3);
  m(0, 1) = Rational(-5, 7);
  MatrixP v = modular_view(m, 11);
  CHECK(v(0, 0) == mod_mul(1, mod_inv(3, 11), 11));
  // -5/7 mod 11: -5 = 6, inv(7) = 8 -> 48 mod 11 = 4
  CHECK(v(0, 1) == 4);
  CHECK_THROWS_AS(modular_view(m, 7), BadPrimeError);
  try {
    modular_view(m, 7);
  } catch (const BadPrimeError& e) {
    CHECK(e.row == 0);
    CHECK(e.col == 1);  // names the offending entry
  }
}

TEST_CASE("rank over Q >= rank mod p, equality for good primes") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 12; ++t) {
    MatrixQ a = random_matrix(rng, 5, 7);
    std::size_t rq = rank(a);
    for (std::uint64_t p : {kPrimeA, kPrimeB}) {
      std::size_t rp = rank_mod(modular_view(a, p));
      CHECK(rq >= rp);
      CHECK(rq == rp);  // 62-bit primes cannot hit these tiny numerators
    }
  }
}

TEST_CASE("rank drop mod small prime is detected by the exact rank") {
  MatrixQ a(2, 2);
  a(0, 0) = Rational(5);
  a(1, 1) = Rational(1);
  CHECK(rank(a) == 2);
  CHECK(rank_mod(modular_view(a, 5)) == 1);  // 5 | det, small prime is "bad"
  CHECK(rank_mod(modular_view(a, kPrimeA)) == 2);
}

TEST_CASE("min_poly_mod matches exact minimal polynomial") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 6; ++t) {
    MatrixQ a = random_matrix(rng, 5, 5);
    PolyQ mp = min_poly(a);
    for (std::uint64_t p : {kPrimeA, kPrimeB}) {
      auto mpp = min_poly_mod(modular_view(a, p));
      REQUIRE(static_cast<long>(mpp.size()) == mp.degree() + 1);
      for (std::size_t k = 0; k < mpp.size(); ++k) {
        std::uint64_t num = mod_of_mpz(mp.coeff(k).num(), p);
        std::uint64_t den = mod_of_mpz(mp.coeff(k).den(), p);
        CHECK(mpp[k] == mod_mul(num, mod_inv(den, p), p));
      }
    }
  }
}

TEST_CASE("poly helpers mod p") {
  const std::uint64_t p = kPrimeB;
  // (x-2)(x-3) divided by (x-2) leaves no remainder
  std::vector<std::uint64_t> prod = {6, p - 5, 1};
  std::vector<std::uint64_t> lin = {p - 2, 1};
  CHECK(poly_rem_mod(prod, lin, p).empty());
  CHECK(poly_eval_mod(prod, 2, p) == 0);
  CHECK(poly_eval_mod(prod, 3, p) == 0);
  CHECK(poly_eval_mod(prod, 4, p) == 2);
}

TEST_CASE("MatrixP product matches exact product") {
  std::mt19937_64 rng(31);
  MatrixQ a = random_matrix(rng, 6, 6), b = random_matrix(rng, 6, 6);
  MatrixQ c = a * b;
  for (std::uint64_t p : {kPrimeA, kPrimeB})
    CHECK(modular_view(a, p) * modular_view(b, p) == modular_view(c, p));
}
