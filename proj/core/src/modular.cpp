#include "ospcent/modular.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

#include "ospcent/parallel.hpp"

namespace ospcent {

BadPrimeError::BadPrimeError(std::uint64_t p, std::size_t r, std::size_t c,
                             const std::string& entry)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "modular_view: prime " << p << " divides the denominator of entry (" << r << ","
           << c << ") = " << entry;
        return os.str();
      }()),
      prime(p), row(r), col(c) {}

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;  // p < 2^62, no overflow
  return s >= p ? s - p : s;
}

std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1ULL) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1ULL;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("mod_inv: zero");
  return mod_pow(a, p - 2, p);  // p prime
}

std::uint64_t mod_of_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class m;
  mpz_class pp;
  mpz_import(pp.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_mod(m.get_mpz_t(), z.get_mpz_t(), pp.get_mpz_t());
  // m in [0, p), fits in 64 bits
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, m.get_mpz_t());
  return out;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                          31ULL, 37ULL}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1ULL) == 0) { d >>= 1ULL; ++s; }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                          31ULL, 37ULL}) {
    std::uint64_t x = mod_pow(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mod_mul(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

MatrixP MatrixP::identity(std::size_t n, std::uint64_t p) {
  MatrixP m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % p;
  return m;
}

bool MatrixP::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](std::uint64_t x) { return x == 0; });
}

MatrixP operator*(const MatrixP& a, const MatrixP& b) {
  if (a.cols_ != b.rows_) throw ShapeError("MatrixP::mul", a.rows_, a.cols_, b.rows_, b.cols_);
  if (a.p_ != b.p_) throw std::invalid_argument("MatrixP::mul: prime mismatch");
  const std::uint64_t p = a.p_;
  MatrixP c(a.rows_, b.cols_, p);
  parallel_for(a.rows_, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = 0; j < b.cols_; ++j) {
        unsigned __int128 acc = 0;
        std::size_t k = 0;
        for (; k < a.cols_; ++k) {
          acc += static_cast<unsigned __int128>(a(i, k)) * b(k, j);
          if ((k & 7U) == 7U) acc %= p;
        }
        c(i, j) = static_cast<std::uint64_t>(acc % p);
      }
    }
  });
  return c;
}

MatrixP operator+(const MatrixP& a, const MatrixP& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.p_ != b.p_)
    throw ShapeError("MatrixP::add", a.rows_, a.cols_, b.rows_, b.cols_);
  MatrixP c(a.rows_, a.cols_, a.p_);
  for (std::size_t k = 0; k < a.a_.size(); ++k) c.a_[k] = mod_add(a.a_[k], b.a_[k], a.p_);
  return c;
}

MatrixP operator-(const MatrixP& a, const MatrixP& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.p_ != b.p_)
    throw ShapeError("MatrixP::sub", a.rows_, a.cols_, b.rows_, b.cols_);
  MatrixP c(a.rows_, a.cols_, a.p_);
  for (std::size_t k = 0; k < a.a_.size(); ++k) c.a_[k] = mod_sub(a.a_[k], b.a_[k], a.p_);
  return c;
}

MatrixP MatrixP::scaled(std::uint64_t c) const {
  MatrixP out(rows_, cols_, p_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = mod_mul(a_[k], c % p_, p_);
  return out;
}

MatrixP modular_view(const MatrixQ& a, std::uint64_t p) {
  MatrixP m(a.rows(), a.cols(), p);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& q = a(i, j);
      std::uint64_t den = mod_of_mpz(q.den(), p);
      if (den == 0) throw BadPrimeError(p, i, j, q.to_string());
      std::uint64_t num = mod_of_mpz(q.num(), p);
      m(i, j) = mod_mul(num, mod_inv(den, p), p);
    }
  return m;
}

std::size_t rank_mod(MatrixP a) {
  const std::uint64_t p = a.prime();
  std::size_t rows = a.rows(), cols = a.cols(), r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a(i, col) != 0) { piv = i; break; }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = col; j < cols; ++j) std::swap(a(piv, j), a(r, j));
    std::uint64_t inv = mod_inv(a(r, col), p);
    for (std::size_t j = col; j < cols; ++j) a(r, j) = mod_mul(a(r, j), inv, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      std::uint64_t f = a(i, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < cols; ++j)
        a(i, j) = mod_sub(a(i, j), mod_mul(f, a(r, j), p), p);
    }
    ++r;
  }
  return r;
}

std::vector<std::uint64_t> mat_vec_mod(const MatrixP& a, const std::vector<std::uint64_t>& v) {
  if (v.size() != a.cols()) throw ShapeError("mat_vec_mod", a.rows(), a.cols(), v.size(), 1);
  const std::uint64_t p = a.prime();
  std::vector<std::uint64_t> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    unsigned __int128 acc = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) {
      acc += static_cast<unsigned __int128>(a(i, k)) * v[k];
      if ((k & 7U) == 7U) acc %= p;
    }
    out[i] = static_cast<std::uint64_t>(acc % p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// minimal polynomial over Z/p
// ---------------------------------------------------------------------------

namespace {

struct PolyP {
  std::vector<std::uint64_t> c;  // lowest first, no trailing zeros
  void norm() { while (!c.empty() && c.back() == 0) c.pop_back(); }
  bool zero() const { return c.empty(); }
  std::size_t deg() const { return c.size() - 1; }
};

PolyP poly_mul_mod(const PolyP& a, const PolyP& b, std::uint64_t p) {
  if (a.zero() || b.zero()) return {};
  PolyP out;
  out.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      out.c[i + j] = mod_add(out.c[i + j], mod_mul(a.c[i], b.c[j], p), p);
  }
  out.norm();
  return out;
}

std::pair<PolyP, PolyP> poly_divrem_mod(PolyP a, const PolyP& b, std::uint64_t p) {
  PolyP q;
  if (a.c.size() < b.c.size()) return {q, a};
  q.c.assign(a.c.size() - b.c.size() + 1, 0);
  std::uint64_t inv = mod_inv(b.c.back(), p);
  for (std::size_t k = a.c.size() - b.c.size() + 1; k-- > 0;) {
    std::uint64_t f = mod_mul(a.c[k + b.c.size() - 1], inv, p);
    q.c[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      a.c[k + j] = mod_sub(a.c[k + j], mod_mul(f, b.c[j], p), p);
  }
  a.norm();
  q.norm();
  return {q, a};
}

PolyP poly_gcd_mod(PolyP a, PolyP b, std::uint64_t p) {
  while (!b.zero()) {
    PolyP r = poly_divrem_mod(a, b, p).second;
    a = b;
    b = r;
  }
  if (!a.zero()) {
    std::uint64_t inv = mod_inv(a.c.back(), p);
    for (auto& x : a.c) x = mod_mul(x, inv, p);
  }
  return a;
}

PolyP poly_lcm_mod(const PolyP& a, const PolyP& b, std::uint64_t p) {
  if (a.zero() || b.zero()) return {};
  PolyP g = poly_gcd_mod(a, b, p);
  return poly_divrem_mod(poly_mul_mod(a, b, p), g, p).first;
}

// echelon span over Z/p with expression tracking, for Krylov sequences
struct SpanP {
  std::size_t ambient;
  std::uint64_t p;
  std::size_t inserted = 0;
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<long> pivot_row;
  std::vector<std::vector<std::uint64_t>> exprs;

  // returns expr over originals if dependent, else inserts and returns empty
  std::optional<std::vector<std::uint64_t>> insert(std::vector<std::uint64_t> v) {
    std::vector<std::uint64_t> expr(inserted, 0);
    std::size_t my_index = inserted++;
    std::size_t pos = 0;
    while (pos < ambient) {
      if (v[pos] == 0) { ++pos; continue; }
      long row = pos < pivot_row.size() ? pivot_row[pos] : -1;
      if (row < 0) break;
      std::uint64_t f = v[pos];
      const auto& r = rows[static_cast<std::size_t>(row)];
      for (std::size_t j = pos; j < ambient; ++j)
        if (r[j]) v[j] = mod_sub(v[j], mod_mul(f, r[j], p), p);
      const auto& e = exprs[static_cast<std::size_t>(row)];
      for (std::size_t j = 0; j < e.size(); ++j)
        if (e[j]) expr[j] = mod_add(expr[j], mod_mul(f, e[j], p), p);
      ++pos;
    }
    if (pos == ambient) return expr;  // dependent
    std::uint64_t inv = mod_inv(v[pos], p);
    for (std::size_t j = pos; j < ambient; ++j) v[j] = mod_mul(v[j], inv, p);
    std::vector<std::uint64_t> e(inserted, 0);
    for (std::size_t j = 0; j < expr.size(); ++j)
      e[j] = expr[j] ? mod_sub(0, mod_mul(inv, expr[j], p), p) : 0;
    e[my_index] = inv;
    if (pivot_row.size() <= pos) pivot_row.resize(pos + 1, -1);
    pivot_row[pos] = static_cast<long>(rows.size());
    rows.push_back(std::move(v));
    exprs.push_back(std::move(e));
    return std::nullopt;
  }
};

PolyP krylov_local_mod(const MatrixP& a, std::vector<std::uint64_t> v) {
  SpanP span{a.rows(), a.prime()};
  std::size_t k = 0;
  while (true) {
    auto dep = span.insert(v);
    if (dep) {
      PolyP out;
      out.c.assign(k + 1, 0);
      for (std::size_t i = 0; i < k; ++i)
        out.c[i] = (*dep)[i] ? a.prime() - (*dep)[i] : 0;
      out.c[k] = 1;
      return out;
    }
    v = mat_vec_mod(a, v);
    ++k;
  }
}

bool annihilates_mod(const PolyP& poly, const MatrixP& a) {
  std::size_t n = a.rows();
  const std::uint64_t p = a.prime();
  std::vector<char> ok(n, 1);
  parallel_for(n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t col = lo; col < hi; ++col) {
      std::vector<std::uint64_t> u(n, 0), acc(n, 0);
      u[col] = 1;
      acc[col] = poly.c[0];
      for (std::size_t k = 1; k < poly.c.size(); ++k) {
        u = mat_vec_mod(a, u);
        if (poly.c[k])
          for (std::size_t i = 0; i < n; ++i)
            acc[i] = mod_add(acc[i], mod_mul(poly.c[k], u[i], p), p);
      }
      for (std::size_t i = 0; i < n; ++i)
        if (acc[i]) { ok[col] = 0; break; }
    }
  });
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

std::vector<std::uint64_t> seeded_vector_mod(std::size_t n, std::uint64_t p,
                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL);
  std::uniform_int_distribution<int> dist(-9, 9);
  std::vector<std::uint64_t> v(n);
  bool nonzero = false;
  for (auto& x : v) {
    int t = dist(rng);
    x = t >= 0 ? static_cast<std::uint64_t>(t) : p - static_cast<std::uint64_t>(-t);
    nonzero = nonzero || t != 0;
  }
  if (!nonzero) v[0] = 1;
  return v;
}

}  // namespace

std::vector<std::uint64_t> min_poly_mod(const MatrixP& a, std::uint64_t seed) {
  if (a.rows() != a.cols()) throw ShapeError("min_poly_mod", a.rows(), a.cols(), a.rows(), a.cols());
  PolyP cand = krylov_local_mod(a, seeded_vector_mod(a.rows(), a.prime(), seed));
  for (std::uint64_t attempt = 1; attempt <= a.rows() + 2; ++attempt) {
    if (annihilates_mod(cand, a)) return cand.c;
    PolyP next = krylov_local_mod(a, seeded_vector_mod(a.rows(), a.prime(), seed + attempt));
    cand = poly_lcm_mod(cand, next, a.prime());
  }
  throw std::logic_error("min_poly_mod: refinement failed to converge");
}

std::uint64_t poly_eval_mod(const std::vector<std::uint64_t>& coeffs, std::uint64_t x,
                            std::uint64_t p) {
  std::uint64_t acc = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = mod_add(mod_mul(acc, x, p), coeffs[k] % p, p);
  return acc;
}

std::vector<std::uint64_t> poly_rem_mod(std::vector<std::uint64_t> dividend,
                                        const std::vector<std::uint64_t>& divisor,
                                        std::uint64_t p) {
  PolyP a{std::move(dividend)};
  a.norm();
  PolyP b{divisor};
  b.norm();
  if (b.zero()) throw std::domain_error("poly_rem_mod: zero divisor");
  return poly_divrem_mod(std::move(a), b, p).second.c;
}

}  // namespace ospcent
