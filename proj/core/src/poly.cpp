#include "ospcent/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ospcent/parallel.hpp"

namespace ospcent {

void PolyQ::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyQ PolyQ::constant(const Rational& c) { return PolyQ(std::vector<Rational>{c}); }

PolyQ PolyQ::x() { return PolyQ({Rational(0), Rational(1)}); }

PolyQ PolyQ::from_roots(const std::vector<Rational>& roots) {
  PolyQ p = constant(Rational(1));
  for (const auto& r : roots) p = p * PolyQ({-r, Rational(1)});
  return p;
}

PolyQ PolyQ::monic() const {
  if (is_zero()) throw std::domain_error("PolyQ::monic: zero polynomial");
  return leading().inverse() * *this;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  normalize();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  normalize();
  return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return PolyQ();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return PolyQ(std::move(c));
}

PolyQ operator*(const Rational& c, const PolyQ& a) {
  std::vector<Rational> out(a.c_);
  for (auto& x : out) x *= c;
  return PolyQ(std::move(out));
}

std::pair<PolyQ, PolyQ> PolyQ::divrem(const PolyQ& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("PolyQ::divrem: division by zero polynomial");
  std::vector<Rational> rem = c_;
  long dd = divisor.degree();
  if (degree() < dd) return {PolyQ(), *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd) + 1);
  Rational inv_lead = divisor.leading().inverse();
  for (long k = degree() - dd; k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + dd)] * inv_lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (long j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k + j)] -= q * divisor.c_[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(std::max(0L, dd)));
  return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

Rational PolyQ::eval(const Rational& x) const {
  Rational acc;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

MatrixQ PolyQ::eval_matrix(const MatrixQ& a) const {
  if (!a.is_square()) throw ShapeError("eval_matrix", a.rows(), a.cols(), a.rows(), a.cols());
  std::size_t n = a.rows();
  if (is_zero()) return MatrixQ(n, n);
  MatrixQ acc = MatrixQ::scalar(n, c_.back());
  for (std::size_t k = c_.size() - 1; k-- > 0;) {
    acc = acc * a;
    acc += MatrixQ::scalar(n, c_[k]);
  }
  return acc;
}

bool PolyQ::annihilates(const MatrixQ& a) const {
  if (!a.is_square()) throw ShapeError("annihilates", a.rows(), a.cols(), a.rows(), a.cols());
  if (is_zero()) return a.rows() == 0 || true;
  std::size_t n = a.rows();
  std::vector<char> ok(n, 1);
  parallel_for(n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t col = lo; col < hi; ++col) {
      // acc = sum_k c_k A^k e_col, powers applied iteratively
      std::vector<Rational> u(n), acc(n);
      u[col] = Rational(1);
      acc[col] = c_[0];
      for (std::size_t k = 1; k < c_.size(); ++k) {
        u = mat_vec(a, u);
        if (!c_[k].is_zero())
          for (std::size_t i = 0; i < n; ++i) acc[i] += c_[k] * u[i];
      }
      for (std::size_t i = 0; i < n; ++i)
        if (!acc[i].is_zero()) { ok[col] = 0; break; }
    }
  });
  for (char c : ok)
    if (!c) return false;
  return true;
}

std::string PolyQ::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    Rational c = c_[k];
    if (!first) {
      os << (c.sign() < 0 ? " - " : " + ");
      c = c.abs();
    } else if (c.sign() < 0 && !(k == 0)) {
      // keep leading minus attached
    }
    if (k == 0) {
      os << (first ? c : c).to_string();
    } else {
      if (!(c.abs().is_one())) os << c.to_string() << "*";
      else if (c.sign() < 0 && first) os << "-";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

bool divides(const PolyQ& divisor, const PolyQ& dividend) {
  if (divisor.is_zero()) return dividend.is_zero();
  return dividend.divrem(divisor).second.is_zero();
}

PolyQ poly_gcd(const PolyQ& a, const PolyQ& b) {
  PolyQ x = a, y = b;
  while (!y.is_zero()) {
    PolyQ r = x.divrem(y).second;
    x = y;
    y = r;
  }
  return x.is_zero() ? x : x.monic();
}

PolyQ poly_lcm(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return PolyQ();
  PolyQ g = poly_gcd(a, b);
  return (a * b).divrem(g).first.monic();
}

// ---------------------------------------------------------------------------
// integer roots
// ---------------------------------------------------------------------------

namespace {

bool miller_rabin(const mpz_class& n) {
  if (n < 2) return false;
  for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  mpz_class d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;
  for (long a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    mpz_class x;
    mpz_class base(a);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned long r = 1; r < s; ++r) {
      x = (x * x) % n;
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

// Brent's cycle variant of Pollard rho; deterministic parameter sweep.
mpz_class pollard_brent(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return mpz_class(2);
  for (unsigned long c = 1;; ++c) {
    mpz_class x(2), y(2), d(1);
    mpz_class q(1);
    unsigned long lam = 1;
    while (d == 1) {
      x = y;
      for (unsigned long i = 0; i < lam; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < lam && d == 1) {
        unsigned long stop = std::min<unsigned long>(128, lam - k);
        mpz_class ys = y;
        for (unsigned long i = 0; i < stop; ++i) {
          y = (y * y + c) % n;
          mpz_class diff = x > y ? x - y : y - x;
          if (diff != 0) q = (q * diff) % n;
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        if (d == n) {
          // backtrack one step at a time
          d = 1;
          y = ys;
          while (d == 1) {
            y = (y * y + c) % n;
            mpz_class diff = x > y ? x - y : y - x;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            if (y == x) { d = n; break; }
          }
          break;
        }
        k += stop;
      }
      lam *= 2;
    }
    if (d != n && d != 1) return d;
  }
}

void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
  if (n < 0) n = -n;
  if (n <= 1) return;
  for (unsigned long p = 2; p < 100000UL && mpz_cmp_ui(n.get_mpz_t(), 1) > 0; p += (p == 2 ? 1 : 2)) {
    if (mpz_class(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out[mpz_class(p)] += 1;
      n /= p;
    }
  }
  if (n == 1) return;
  if (miller_rabin(n)) {
    out[n] += 1;
    return;
  }
  mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

// ceil of the Fujiwara bound 2 * max_i |a_{n-i}/a_n|^(1/i); every real root
// of p has magnitude below it.
mpz_class fujiwara_bound(const std::vector<mpz_class>& c) {
  std::size_t n = c.size() - 1;
  mpz_class best(1);
  mpz_class an = abs(c[n]);
  for (std::size_t i = 1; i <= n; ++i) {
    mpz_class num = abs(c[n - i]);
    if (num == 0) continue;
    // smallest integer b with b^i >= num/an  <=>  b = ceil((num/an)^(1/i))
    mpz_class ratio = num / an + 1;
    mpz_class root;
    mpz_root(root.get_mpz_t(), ratio.get_mpz_t(), static_cast<unsigned long>(i));
    root += 1;
    if (root > best) best = root;
  }
  return 2 * best;
}

void divisors_up_to(const std::map<mpz_class, int>& factors, const mpz_class& cap,
                    std::vector<mpz_class>& out) {
  out.clear();
  out.push_back(1);
  for (const auto& [p, e] : factors) {
    std::size_t sz = out.size();
    mpz_class pk(1);
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      if (pk > cap) break;
      for (std::size_t i = 0; i < sz; ++i) {
        mpz_class d = out[i] * pk;
        if (d <= cap) out.push_back(d);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

mpz_class eval_int(const std::vector<mpz_class>& c, const mpz_class& x) {
  mpz_class acc(0);
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

// exact synthetic division of c by (x - r); caller guarantees divisibility
std::vector<mpz_class> deflate(const std::vector<mpz_class>& c, const mpz_class& r) {
  std::vector<mpz_class> q(c.size() - 1);
  mpz_class carry = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    q[k] = carry;
    carry = c[k] + carry * r;
  }
  return q;
}

}  // namespace

std::vector<std::pair<mpz_class, int>> integer_roots(const PolyQ& p) {
  if (p.is_zero()) throw std::invalid_argument("integer_roots: zero polynomial");

  // clear denominators
  mpz_class lcm_den(1);
  for (const auto& c : p.coeffs())
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
  std::vector<mpz_class> c;
  c.reserve(p.coeffs().size());
  for (const auto& coef : p.coeffs()) c.push_back(coef.num() * (lcm_den / coef.den()));

  std::vector<std::pair<mpz_class, int>> roots;

  // factor out x^m
  int mult0 = 0;
  while (!c.empty() && c.front() == 0) {
    c.erase(c.begin());
    ++mult0;
  }
  if (mult0 > 0) roots.emplace_back(0, mult0);
  if (c.size() <= 1) {
    return roots;
  }

  mpz_class bound = fujiwara_bound(c);
  std::vector<mpz_class> candidates;
  if (bound <= 2000000) {
    // small root bound: scan divisors of the trailing coefficient directly
    mpz_class a0 = abs(c.front());
    for (mpz_class r(1); r <= bound; ++r)
      if (mpz_divisible_p(a0.get_mpz_t(), r.get_mpz_t())) candidates.push_back(r);
  } else {
    std::map<mpz_class, int> factors;
    factor_into(c.front(), factors);
    divisors_up_to(factors, bound, candidates);
  }

  for (const auto& d : candidates) {
    for (int s : {1, -1}) {
      mpz_class r = s > 0 ? d : mpz_class(-d);
      int mult = 0;
      while (c.size() > 1 && eval_int(c, r) == 0) {
        c = deflate(c, r);
        ++mult;
      }
      if (mult > 0) roots.emplace_back(r, mult);
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return roots;
}

std::vector<Rational> integer_root_set(const PolyQ& p) {
  std::vector<Rational> out;
  for (const auto& [r, m] : integer_roots(p)) out.push_back(Rational(r));
  return out;
}

}  // namespace ospcent
