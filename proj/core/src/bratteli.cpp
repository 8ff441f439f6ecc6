#include "ospcent/bratteli.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "ospcent/linalg.hpp"

namespace ospcent {

// ---------------------------------------------------------------------------
// decomposition by highest-weight counting
// ---------------------------------------------------------------------------

namespace {

// kernel dimension of F+ restricted to the span of the given columns
std::size_t kernel_dim_on_columns(const MatrixQ& Fp, const std::vector<std::size_t>& cols) {
  MatrixQ sub(Fp.rows(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < Fp.rows(); ++i) sub(i, j) = Fp(i, cols[j]);
  return cols.size() - rank(sub);
}

std::map<IrrepLabel, int, LabelOrder> decompose_diagonal(const Rep& rep) {
  std::map<IrrepLabel, int, LabelOrder> out;
  std::map<std::pair<long, int>, std::vector<std::size_t>> eigencols;
  for (std::size_t i = 0; i < rep.dim; ++i) {
    Rational h = rep.H(i, i);
    Rational two_h = h * Rational(2);
    if (!two_h.is_integer()) throw std::logic_error("decompose: weight not in (1/2)Z");
    Rational r = rep.R(i, i);
    int eps = r == Rational(1) ? +1 : r == Rational(-1) ? -1 : 0;
    if (eps == 0) throw std::logic_error("decompose: R eigenvalue not ±1");
    eigencols[{two_h.num().get_si(), eps}].push_back(i);
  }
  for (const auto& [key, cols] : eigencols) {
    auto [two_k, eps] = key;
    if (two_k < 0) continue;
    std::size_t mult = kernel_dim_on_columns(rep.Fp, cols);
    if (mult > 0)
      out[IrrepLabel{static_cast<int>(two_k), parity_of_sign(eps)}] = static_cast<int>(mult);
  }
  return out;
}

std::map<IrrepLabel, int, LabelOrder> decompose_general(const Rep& rep) {
  // candidates: nonnegative roots of min_poly(2H)
  std::map<IrrepLabel, int, LabelOrder> out;
  auto weights = integer_root_set(min_poly(rep.H * Rational(2)));
  for (const auto& two_k : weights) {
    if (two_k.sign() < 0) continue;
    for (int eps : {+1, -1}) {
      MatrixQ stack(3 * rep.dim, rep.dim);
      MatrixQ hk = rep.H - MatrixQ::scalar(rep.dim, two_k * Rational(1, 2));
      MatrixQ re = rep.R - MatrixQ::scalar(rep.dim, Rational(eps));
      for (std::size_t i = 0; i < rep.dim; ++i)
        for (std::size_t j = 0; j < rep.dim; ++j) {
          stack(i, j) = rep.Fp(i, j);
          stack(rep.dim + i, j) = hk(i, j);
          stack(2 * rep.dim + i, j) = re(i, j);
        }
      std::size_t mult = rep.dim - rank(stack);
      if (mult > 0)
        out[IrrepLabel{static_cast<int>(two_k.num().get_si()), parity_of_sign(eps)}] =
            static_cast<int>(mult);
    }
  }
  return out;
}

}  // namespace

std::map<IrrepLabel, int, LabelOrder> decompose(const Rep& rep) {
  auto out = (rep.H.is_diagonal() && rep.R.is_diagonal()) ? decompose_diagonal(rep)
                                                          : decompose_general(rep);
  std::size_t total = 0;
  for (const auto& [label, mult] : out) total += static_cast<std::size_t>(mult) * label.dim();
  if (total != rep.dim)
    throw std::logic_error("decompose: dimension bookkeeping failed: " + std::to_string(total) +
                           " != " + std::to_string(rep.dim));
  return out;
}

// ---------------------------------------------------------------------------
// diagram
// ---------------------------------------------------------------------------

BratteliDiagram build_bratteli(IrrepLabel base) {
  BratteliDiagram d;
  d.base = base;
  d.levels[0] = {{base, 1}};
  Rep base_rep = build_irrep(base);

  for (int level = 0; level < 2; ++level) {
    std::map<IrrepLabel, long, LabelOrder> next;
    std::vector<std::map<IrrepLabel, int, LabelOrder>> per_node;
    for (const auto& node : d.levels[static_cast<std::size_t>(level)]) {
      auto dec = decompose(coproduct_pair(build_irrep(node.label), base_rep));
      per_node.push_back(dec);
      for (const auto& [label, mult] : dec) next[label] += node.mult * mult;
    }
    std::size_t lvl = static_cast<std::size_t>(level) + 1;
    for (const auto& [label, mult] : next) d.levels[lvl].push_back({label, mult});

    auto index_of = [&](const IrrepLabel& l) {
      for (std::size_t i = 0; i < d.levels[lvl].size(); ++i)
        if (d.levels[lvl][i].label == l) return i;
      throw std::logic_error("build_bratteli: missing node");
    };
    for (std::size_t from = 0; from < per_node.size(); ++from)
      for (const auto& [label, mult] : per_node[from])
        d.edges.push_back({level, from, index_of(label), mult});
  }

  // bookkeeping: weighted dimensions and incoming-edge counts
  for (int level = 0; level < 3; ++level) {
    std::size_t total = 0;
    for (const auto& n : d.levels[static_cast<std::size_t>(level)])
      total += static_cast<std::size_t>(n.mult) * n.label.dim();
    std::size_t expect = 1;
    for (int i = 0; i <= level; ++i) expect *= base.dim();
    if (total != expect) throw std::logic_error("build_bratteli: level dimension mismatch");
  }
  for (int level = 0; level < 2; ++level) {
    std::size_t lvl = static_cast<std::size_t>(level);
    for (std::size_t to = 0; to < d.levels[lvl + 1].size(); ++to) {
      long incoming = 0;
      for (const auto& e : d.edges)
        if (e.level == level && e.to == to) incoming += e.mult * d.levels[lvl][e.from].mult;
      if (incoming != d.levels[lvl + 1][to].mult)
        throw std::logic_error("build_bratteli: node multiplicity != incoming edges");
    }
  }
  return d;
}

Rational x_eigenvalue(IrrepLabel mid) {
  return Rational(1, 2) -
         Rational(sign_of(mid.parity)) * Rational(2 * mid.two_j + 1, 2);
}

Rational omega_eigenvalue(IrrepLabel bot, IrrepLabel base) {
  Rational q(2 * base.two_j + 1);  // 4j+1
  return q * q * Rational(1, 2) - Rational(1) +
         Rational(sign_of(bot.parity)) * q * Rational(2 * bot.two_j + 1, 2);
}

EdgeSpectrum edge_spectrum(const BratteliDiagram& d) {
  EdgeSpectrum es;
  for (const auto& e : d.edges) {
    if (e.level != 1) continue;
    const auto& from = d.levels[1][e.from];
    const auto& to = d.levels[2][e.to];
    Rational v = x_eigenvalue(from.label) - omega_eigenvalue(to.label, d.base);
    long copies = e.mult * from.mult;
    for (long c = 0; c < copies; ++c) es.values.push_back(v);
  }
  std::sort(es.values.begin(), es.values.end());
  es.distinct = es.values;
  es.distinct.erase(std::unique(es.distinct.begin(), es.distinct.end()), es.distinct.end());

  long tj = d.base.two_j;  // Hex 12j^2+6j+1 = 3*two_j*(two_j+1)+1
  std::size_t hex = static_cast<std::size_t>(3 * tj * (tj + 1) + 1);
  if (es.values.size() != hex)
    throw std::logic_error("edge_spectrum: edge count " + std::to_string(es.values.size()) +
                           " != Hex number " + std::to_string(hex));
  return es;
}

std::vector<Rational> closed_form_edges(IrrepLabel base) {
  if (base.two_j < 1) throw std::invalid_argument("closed_form_edges: two_j >= 1 required");
  const long tj = base.two_j;          // 2j
  const long q = 2 * tj + 1;           // 4j+1
  std::vector<Rational> out;

  // Families in (k, l); l advances by integer steps from its lower bound,
  // encoded as two_l stepping by 2. Values carry the (4j+1)-scaled slopes,
  // which reduce to the displayed +-6l -2k-5 / +-6l+2k-3 forms at j = 1/2.
  auto push = [&](long v) { out.push_back(Rational(v)); };

  for (long k = 0; k <= tj; ++k) {
    // descending family: -(4j+1)(2l+2j+1) - 2k + 1
    for (long tl = std::labs(tj - 2 * k); tl <= tj + 2 * k; tl += 2)
      push(-q * (tl + tj + 1) - 2 * k + 1);
    // ascending family: (4j+1)(2l-2j-1) - 2k + 1
    for (long tl = std::labs(tj - 2 * k) + 2; tl <= tj + 2 * k; tl += 2)
      push(q * (tl - tj - 1) - 2 * k + 1);
  }
  for (long k = 0; k + 1 <= tj; ++k) {
    long lo = 2 * k < tj ? tj - 2 * k : 2 * k - tj + 2;  // j-k vs k-j+1
    // descending family: -(4j+1)(2l+2j+1) + 2k + 3
    for (long tl = lo; tl <= tj + 2 * k; tl += 2) push(-q * (tl + tj + 1) + 2 * k + 3);
    // ascending family: (4j+1)(2l-2j-1) + 2k + 3
    for (long tl = lo; tl <= tj + 2 * k + 2; tl += 2) push(q * (tl - tj - 1) + 2 * k + 3);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ConjectureSets conjecture_sets(IrrepLabel base, const EdgeSpectrum& spectrum) {
  ConjectureSets sets;
  const long tj = base.two_j;
  for (long k = -tj; k <= tj; ++k) sets.x_roots.push_back(Rational(2 * k));
  // k = -3j .. 3j in integer steps: two_k from -3*two_j stepping by 2
  const long q = 2 * tj + 1;
  for (long two_k = -3 * tj; two_k <= 3 * tj; two_k += 2)
    sets.omega_roots.push_back(Rational(q * (tj + 1 - two_k) - 1));
  std::sort(sets.x_roots.begin(), sets.x_roots.end());
  std::sort(sets.omega_roots.begin(), sets.omega_roots.end());
  sets.m_set = spectrum.distinct;
  return sets;
}

// ---------------------------------------------------------------------------
// conjecture verification
// ---------------------------------------------------------------------------

namespace {

struct RootCheck {
  bool divides_product = false;
  bool roots_equal = false;
  std::string attained;
};

std::string join_rationals(const std::vector<Rational>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

// exact route: min_poly over Q, integer roots, divisibility over Q
RootCheck root_check_exact(const MatrixQ& op, const std::vector<Rational>& expected) {
  RootCheck rc;
  PolyQ mp = min_poly(op);
  rc.divides_product = divides(mp, PolyQ::from_roots(expected));
  auto roots = integer_root_set(mp);
  rc.roots_equal = roots == expected && static_cast<long>(roots.size()) == mp.degree();
  rc.attained = join_rationals(roots);
  return rc;
}

// modular route: minimal polynomial mod both primes; the attained roots are
// the expected candidates that vanish mod p, and the degree must match so
// no root outside the candidate set can hide.
RootCheck root_check_modular(const MatrixQ& op, const std::vector<Rational>& expected,
                             bool* primes_agree) {
  RootCheck rc;
  std::vector<std::vector<Rational>> attained_per_prime;
  bool div_ok = true, eq_ok = true;
  for (std::uint64_t p : {kPrimeA, kPrimeB}) {
    MatrixP ap = modular_view(op, p);
    auto mp = min_poly_mod(ap);
    std::vector<Rational> attained;
    std::vector<std::uint64_t> lifted;
    for (const auto& r : expected) {
      std::uint64_t rm = mod_of_mpz(r.num(), p);  // expected roots are integers
      if (poly_eval_mod(mp, rm, p) == 0) {
        attained.push_back(r);
        lifted.push_back(rm);
      }
    }
    // divisibility of the stated product by the minimal polynomial mod p
    std::vector<std::uint64_t> prod = {1};
    for (const auto& r : expected) {
      std::uint64_t rm = mod_of_mpz(r.num(), p);
      std::vector<std::uint64_t> lin = {rm == 0 ? 0 : p - rm, 1};
      std::vector<std::uint64_t> next(prod.size() + 1, 0);
      for (std::size_t i = 0; i < prod.size(); ++i)
        for (std::size_t j = 0; j < 2; ++j)
          next[i + j] = mod_add(next[i + j], mod_mul(prod[i], lin[j], p), p);
      prod = next;
    }
    div_ok = div_ok && poly_rem_mod(prod, mp, p).empty();
    eq_ok = eq_ok && attained.size() == expected.size() && mp.size() == expected.size() + 1;
    attained_per_prime.push_back(attained);
  }
  if (attained_per_prime[0] != attained_per_prime[1]) *primes_agree = false;
  rc.divides_product = div_ok;
  rc.roots_equal = eq_ok;
  rc.attained = join_rationals(attained_per_prime[0]);
  return rc;
}

}  // namespace

ConjectureReport verify_conjecture(IrrepLabel base, ConjectureLevel level, ArithMode mode) {
  if (base.parity != Parity::plus)
    throw std::invalid_argument("verify_conjecture: stated for [j]^+ only");
  if (base.two_j < 1) throw std::invalid_argument("verify_conjecture: two_j >= 1 required");

  ConjectureReport rep;
  rep.mode = mode;
  auto add = [&](const std::string& n, bool ok, const std::string& d = "") {
    rep.checks.push_back({n, ok, d});
  };

  // diagram side, always exact
  BratteliDiagram diagram = build_bratteli(base);
  rep.spectrum = edge_spectrum(diagram);
  rep.sets = conjecture_sets(base, rep.spectrum);
  rep.hex_count = rep.spectrum.values.size();
  long tj = base.two_j;
  add("hex count = 12j^2+6j+1", rep.hex_count == static_cast<std::size_t>(3 * tj * (tj + 1) + 1),
      std::to_string(rep.hex_count));

  auto closed = closed_form_edges(base);
  add("edge multiset = closed-form enumeration", rep.spectrum.values == closed,
      "edges " + join_rationals(rep.spectrum.values) + " closed " + join_rationals(closed));

  std::size_t d_j = 0;
  for (const auto& n : diagram.levels[2])
    d_j += static_cast<std::size_t>(n.mult) * static_cast<std::size_t>(n.mult);
  rep.centralizer_dim = d_j;
  // (2j+1)^4 - (2j)^4 with 2j = two_j
  auto pow4 = [](long x) { return x * x * x * x; };
  std::size_t rhombic = static_cast<std::size_t>(pow4(tj + 1) - pow4(tj));
  add("sum of squared multiplicities = (2j+1)^4-(2j)^4", d_j == rhombic,
      std::to_string(d_j) + " vs " + std::to_string(rhombic));

  // operator side
  TensorContext ctx = build_context(base, base, base, mode);
  CasimirSet cs = build_casimirs(ctx);
  BIImage bi = phi_images(cs, ctx);
  add("coproduct, Casimir and Bannai-Ito identities verified (" +
          std::string(to_string(mode)) + ")",
      true);

  bool omegas_equal = bi.wX == bi.wY && bi.wY == bi.wZ;
  add("wX = wY = wZ for equal labels", omegas_equal);
  const MatrixQ& W = bi.wX;

  bool primes_agree = true;
  auto run_root_check = [&](const std::string& tag, const MatrixQ& op,
                            const std::vector<Rational>& expected) {
    RootCheck rc = mode == ArithMode::Exact ? root_check_exact(op, expected)
                                            : root_check_modular(op, expected, &primes_agree);
    add(tag + " min_poly divides stated product", rc.divides_product, "attained " + rc.attained);
    add(tag + " attained roots equal stated set", rc.roots_equal,
        "attained " + rc.attained + " stated " + join_rationals(expected));
  };

  run_root_check("conj1[X]", bi.X, rep.sets.x_roots);
  run_root_check("conj1[Y]", bi.Y, rep.sets.x_roots);
  run_root_check("conj1[Z]", bi.Z, rep.sets.x_roots);
  run_root_check("conj2[w]", W, rep.sets.omega_roots);
  run_root_check("conj3[X-w]", bi.X - W, rep.sets.m_set);
  run_root_check("conj3[Y-w]", bi.Y - W, rep.sets.m_set);
  run_root_check("conj3[Z-w]", bi.Z - W, rep.sets.m_set);

  if (level == ConjectureLevel::FullClosure) {
    std::vector<MatrixQ> gens = {bi.X, bi.Y, bi.Z, W};
    if (mode == ArithMode::Exact) {
      auto closure = unital_closure(gens, ArithMode::Exact);
      rep.closure_dim = closure.report.dimension;
      add("closure{X,Y,Z,w} dim = (2j+1)^4-(2j)^4", rep.closure_dim == rhombic,
          std::to_string(rep.closure_dim));
      bool commutes_all = true;
      const MatrixQ* gens6[] = {&ctx.triple.H, &ctx.triple.Ep, &ctx.triple.Em,
                                &ctx.triple.Fp, &ctx.triple.Fm, &ctx.triple.R};
      for (const auto& w : closure.words)
        for (const MatrixQ* g : gens6)
          if (!(w * *g == *g * w)) { commutes_all = false; break; }
      add("every closure basis element commutes with the six triple images", commutes_all);
    } else {
      std::size_t dims[2];
      bool commutes_all = true;
      int pi = 0;
      for (std::uint64_t p : {kPrimeA, kPrimeB}) {
        auto mc = unital_closure_mod(gens, p);
        dims[pi++] = mc.dimension;
        MatrixP g6[6] = {modular_view(ctx.triple.H, p),  modular_view(ctx.triple.Ep, p),
                         modular_view(ctx.triple.Em, p), modular_view(ctx.triple.Fp, p),
                         modular_view(ctx.triple.Fm, p), modular_view(ctx.triple.R, p)};
        for (const auto& w : mc.words)
          for (const auto& g : g6)
            if (!(w * g == g * w)) { commutes_all = false; break; }
      }
      if (dims[0] != dims[1]) primes_agree = false;
      rep.closure_dim = dims[0];
      add("closure{X,Y,Z,w} dim = (2j+1)^4-(2j)^4 (dual-prime)",
          dims[0] == rhombic && dims[1] == rhombic,
          std::to_string(dims[0]) + "/" + std::to_string(dims[1]));
      add("every closure basis element commutes with the six triple images (dual-prime)",
          commutes_all);
    }
  }

  if (mode == ArithMode::Modular) {
    rep.certified = primes_agree;
    add("dual primes agree on every modular conclusion", primes_agree);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// exports
// ---------------------------------------------------------------------------

std::string export_dot(const BratteliDiagram& d) {
  std::ostringstream os;
  os << "digraph bratteli {\n  rankdir=TB;\n  node [shape=plaintext];\n";
  for (std::size_t lvl = 0; lvl < 3; ++lvl) {
    os << "  { rank=same;";
    for (std::size_t i = 0; i < d.levels[lvl].size(); ++i)
      os << " n" << lvl << "_" << i << " [label=\"" << d.levels[lvl][i].label.to_string()
         << "\"];";
    os << " }\n";
  }
  for (const auto& e : d.edges)
    for (long m = 0; m < e.mult; ++m)
      os << "  n" << e.level << "_" << e.from << " -> n" << e.level + 1 << "_" << e.to << ";\n";
  os << "}\n";
  return os.str();
}

std::string export_json(const BratteliDiagram& d) {
  nlohmann::json j;
  j["j"] = d.base.j().to_string();
  j["parity"] = d.base.parity == Parity::plus ? "+" : "-";
  j["levels"] = nlohmann::json::array();
  for (std::size_t lvl = 0; lvl < 3; ++lvl) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& n : d.levels[lvl])
      row.push_back({{"two_j", n.label.two_j},
                     {"parity", n.label.parity == Parity::plus ? "+" : "-"},
                     {"mult", n.mult}});
    j["levels"].push_back(row);
  }
  j["edges"] = nlohmann::json::array();
  for (const auto& e : d.edges)
    j["edges"].push_back({{"level", e.level}, {"from", e.from}, {"to", e.to}, {"mult", e.mult}});
  return j.dump(2) + "\n";
}

}  // namespace ospcent
