#include "ospcent/closure.hpp"

#include <sstream>

namespace ospcent {

namespace {

std::size_t effective_cap(std::size_t ambient, const ClosureOptions& opts) {
  return opts.max_dimension == 0 ? ambient : std::min(ambient, opts.max_dimension);
}

void check_generators(const std::vector<MatrixQ>& gens) {
  for (const auto& g : gens) {
    if (!g.is_square() || g.rows() != gens.front().rows())
      throw ShapeError("unital_closure", gens.front().rows(), gens.front().cols(), g.rows(),
                       g.cols());
  }
}

ClosureResult closure_exact(const std::vector<MatrixQ>& gens, const ClosureOptions& opts) {
  std::size_t d = gens.empty() ? 1 : gens.front().rows();
  std::size_t ambient = d * d;
  std::size_t cap = effective_cap(ambient, opts);

  ClosureResult res;
  res.basis.ambient_dim = ambient;
  res.basis.span = EchelonSpan(ambient);

  std::vector<std::size_t> word_gen;  // word length per accepted word
  res.basis.span.insert(MatrixQ::identity(d).flatten());
  res.words.push_back(MatrixQ::identity(d));
  word_gen.push_back(0);
  std::size_t generations = 0;

  for (std::size_t idx = 0; idx < res.words.size(); ++idx) {
    for (const auto& g : gens) {
      MatrixQ cand = opts.saturate_left ? g * res.words[idx] : res.words[idx] * g;
      if (res.basis.span.insert(cand.flatten())) {
        if (res.basis.span.size() > cap) {
          std::ostringstream os;
          os << "unital_closure: dimension exceeded cap " << cap << " (ambient " << ambient
             << ")";
          throw ClosureCapError(os.str());
        }
        res.words.push_back(std::move(cand));
        word_gen.push_back(word_gen[idx] + 1);
        generations = std::max(generations, word_gen.back());
      }
    }
  }

  res.report.dimension = res.basis.span.size();
  res.report.generations = generations;
  res.report.certified = true;
  res.report.mode = ArithMode::Exact;
  return res;
}

struct SpanP {
  std::size_t ambient;
  std::uint64_t p;
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<long> pivot_row;

  bool insert(std::vector<std::uint64_t> v) {
    std::size_t pos = 0;
    while (pos < ambient) {
      if (v[pos] == 0) { ++pos; continue; }
      long row = pos < pivot_row.size() ? pivot_row[pos] : -1;
      if (row < 0) break;
      std::uint64_t f = v[pos];
      const auto& r = rows[static_cast<std::size_t>(row)];
      for (std::size_t j = pos; j < ambient; ++j)
        if (r[j]) v[j] = mod_sub(v[j], mod_mul(f, r[j], p), p);
      ++pos;
    }
    if (pos == ambient) return false;
    std::uint64_t inv = mod_inv(v[pos], p);
    for (std::size_t j = pos; j < ambient; ++j) v[j] = mod_mul(v[j], inv, p);
    if (pivot_row.size() <= pos) pivot_row.resize(pos + 1, -1);
    pivot_row[pos] = static_cast<long>(rows.size());
    rows.push_back(std::move(v));
    return true;
  }
};

}  // namespace

ModularClosure unital_closure_mod(const std::vector<MatrixQ>& gens, std::uint64_t p,
                                  ClosureOptions opts) {
  if (!gens.empty()) check_generators(gens);
  std::size_t d = gens.empty() ? 1 : gens.front().rows();
  std::size_t ambient = d * d;
  std::size_t cap = effective_cap(ambient, opts);

  std::vector<MatrixP> gp;
  gp.reserve(gens.size());
  for (const auto& g : gens) gp.push_back(modular_view(g, p));

  SpanP span{ambient, p};
  ModularClosure res;
  std::vector<std::size_t> word_gen;
  span.insert(MatrixP::identity(d, p).flatten());
  res.words.push_back(MatrixP::identity(d, p));
  word_gen.push_back(0);

  for (std::size_t idx = 0; idx < res.words.size(); ++idx) {
    for (const auto& g : gp) {
      MatrixP cand = opts.saturate_left ? g * res.words[idx] : res.words[idx] * g;
      if (span.insert(cand.flatten())) {
        if (span.rows.size() > cap) {
          std::ostringstream os;
          os << "unital_closure (mod " << p << "): dimension exceeded cap " << cap;
          throw ClosureCapError(os.str());
        }
        res.words.push_back(std::move(cand));
        word_gen.push_back(word_gen[idx] + 1);
        res.generations = std::max(res.generations, word_gen.back());
      }
    }
  }
  res.dimension = span.rows.size();
  return res;
}

ClosureResult unital_closure(const std::vector<MatrixQ>& generators, ArithMode mode,
                             ClosureOptions opts) {
  if (!generators.empty()) check_generators(generators);
  if (mode == ArithMode::Exact) return closure_exact(generators, opts);

  ModularClosure a = unital_closure_mod(generators, opts.primes[0], opts);
  ModularClosure b = unital_closure_mod(generators, opts.primes[1], opts);
  if (a.dimension != b.dimension || a.generations != b.generations) {
    // Dual primes disagree: one of them hit a rank accident. Resolve over Q.
    return closure_exact(generators, opts);
  }
  ClosureResult res;
  res.basis.ambient_dim =
      generators.empty() ? 1 : generators.front().rows() * generators.front().rows();
  res.report.dimension = a.dimension;
  res.report.generations = a.generations;
  res.report.certified = true;  // two independent primes agree
  res.report.mode = ArithMode::Modular;
  return res;
}

std::optional<std::vector<Rational>> membership(const MatrixQ& m, const SpanBasis& basis) {
  if (m.rows() * m.cols() != basis.ambient_dim)
    throw ShapeError("membership", m.rows(), m.cols(), basis.ambient_dim, 1);
  auto red = basis.span.reduce(m.flatten());
  if (!red.in_span) return std::nullopt;
  return red.coords;
}

MatrixQ spectral_projector(const MatrixQ& a, const Rational& lambda,
                           const std::vector<Rational>& spectrum) {
  if (!a.is_square()) throw ShapeError("spectral_projector", a.rows(), a.cols(), a.rows(), a.cols());
  bool found = false;
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    for (std::size_t j = i + 1; j < spectrum.size(); ++j)
      if (spectrum[i] == spectrum[j])
        throw std::domain_error("spectral_projector: repeated eigenvalue " +
                                spectrum[i].to_string());
    found = found || spectrum[i] == lambda;
  }
  if (!found)
    throw std::domain_error("spectral_projector: eigenvalue " + lambda.to_string() +
                            " not in spectrum");
  if (!PolyQ::from_roots(spectrum).annihilates(a))
    throw std::domain_error("spectral_projector: spectrum does not annihilate the matrix");

  MatrixQ proj = MatrixQ::identity(a.rows());
  for (const auto& mu : spectrum) {
    if (mu == lambda) continue;
    proj = proj * ((a - MatrixQ::scalar(a.rows(), mu)) * (lambda - mu).inverse());
  }
  return proj;
}

}  // namespace ospcent
