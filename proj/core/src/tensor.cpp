#include "ospcent/tensor.hpp"

#include "ospcent/detail/identity_checks.hpp"
#include "ospcent/linalg.hpp"

namespace ospcent {

namespace {

void verify_rep_relations(const Rep& rep, ArithMode mode) {
  if (mode == ArithMode::Exact) {
    verify_osp_relations(rep);
    return;
  }
  for (std::uint64_t p : {kPrimeA, kPrimeB}) {
    detail::PBackend b{p};
    auto g = detail::reduce_generators(b, rep.H, rep.Ep, rep.Em, rep.Fp, rep.Fm, rep.R);
    for (const auto& c : detail::osp_identity_suite(b, g, rep.dim))
      if (!c.ok) throw RelationError(c.name + " (mod " + std::to_string(p) + ")");
  }
}

// Q = ([F+,F-] + 1/8) R without label assertions; used on tensor factors.
MatrixQ casimir_of(const Rep& rep) {
  MatrixQ S = commutator(rep.Fp, rep.Fm) + MatrixQ::scalar(rep.dim, Rational(1, 8));
  return S * rep.R;
}

template <class B>
void assert_casimirs_commute(const B& b, const CasimirSet& cs, const TensorContext& ctx,
                             const std::string& tag) {
  auto g = detail::reduce_generators(b, ctx.triple.H, ctx.triple.Ep, ctx.triple.Em,
                                     ctx.triple.Fp, ctx.triple.Fm, ctx.triple.R);
  const std::array<const MatrixQ*, 7> qs = {&cs.Q1, &cs.Q2, &cs.Q3, &cs.Q12,
                                            &cs.Q23, &cs.Q13, &cs.Q4};
  const std::array<const char*, 7> qnames = {"Q1", "Q2", "Q3", "Q12", "Q23", "Q13", "Q4"};
  const std::array<const typename B::Mat*, 6> gens = {&g.H, &g.Ep, &g.Em, &g.Fp, &g.Fm, &g.R};
  const std::array<const char*, 6> gnames = {"H", "E+", "E-", "F+", "F-", "R"};
  for (std::size_t qi = 0; qi < qs.size(); ++qi) {
    auto qb = b.reduce(*qs[qi]);
    for (std::size_t gi = 0; gi < gens.size(); ++gi)
      if (!detail::commutes(b, qb, *gens[gi]))
        throw RelationError(std::string("[") + qnames[qi] + "," + gnames[gi] + "]=0" + tag);
  }
}

template <class B>
void assert_bi_relations(const B& b, const BIImage& bi, const std::string& tag) {
  auto X = b.reduce(bi.X), Y = b.reduce(bi.Y), Z = b.reduce(bi.Z);
  auto wX = b.reduce(bi.wX), wY = b.reduce(bi.wY), wZ = b.reduce(bi.wZ);
  if (!detail::bannai_ito_identity(b, X, Y, Z, wZ))
    throw RelationError("{X,Y}=X+Y+Z+wZ" + tag);
  if (!detail::bannai_ito_identity(b, X, Z, Y, wY))
    throw RelationError("{X,Z}=X+Y+Z+wY" + tag);
  if (!detail::bannai_ito_identity(b, Y, Z, X, wX))
    throw RelationError("{Y,Z}=X+Y+Z+wX" + tag);
}

}  // namespace

Rep coproduct_pair(const Rep& a, const Rep& b, ArithMode verify) {
  Rep out;
  out.dim = a.dim * b.dim;
  const MatrixQ Ia = MatrixQ::identity(a.dim);
  const MatrixQ Ib = MatrixQ::identity(b.dim);
  out.H = kron(a.H, Ib) + kron(Ia, b.H);
  out.Ep = kron(a.Ep, Ib) + kron(Ia, b.Ep);
  out.Em = kron(a.Em, Ib) + kron(Ia, b.Em);
  out.Fp = kron(a.Fp, b.R) + kron(Ia, b.Fp);
  out.Fm = kron(a.Fm, b.R) + kron(Ia, b.Fm);
  out.R = kron(a.R, b.R);
  verify_rep_relations(out, verify);
  return out;
}

TensorContext build_context(IrrepLabel l1, IrrepLabel l2, IrrepLabel l3, ArithMode verify) {
  TensorContext ctx;
  ctx.labels = {l1, l2, l3};
  ctx.verify_mode = verify;
  ctx.reps = {build_irrep(l1), build_irrep(l2), build_irrep(l3)};
  ctx.pair12 = coproduct_pair(ctx.reps[0], ctx.reps[1], verify);
  ctx.pair23 = coproduct_pair(ctx.reps[1], ctx.reps[2], verify);
  ctx.triple = coproduct_pair(ctx.pair12, ctx.reps[2], verify);

  // coassociativity on generators, always exact (construction only)
  Rep alt;
  alt.dim = ctx.triple.dim;
  {
    const Rep& r1 = ctx.reps[0];
    const MatrixQ I1 = MatrixQ::identity(r1.dim);
    const MatrixQ I23 = MatrixQ::identity(ctx.pair23.dim);
    alt.H = kron(r1.H, I23) + kron(I1, ctx.pair23.H);
    alt.Ep = kron(r1.Ep, I23) + kron(I1, ctx.pair23.Ep);
    alt.Em = kron(r1.Em, I23) + kron(I1, ctx.pair23.Em);
    alt.Fp = kron(r1.Fp, ctx.pair23.R) + kron(I1, ctx.pair23.Fp);
    alt.Fm = kron(r1.Fm, ctx.pair23.R) + kron(I1, ctx.pair23.Fm);
    alt.R = kron(r1.R, ctx.pair23.R);
  }
  const char* names[] = {"H", "E+", "E-", "F+", "F-", "R"};
  const MatrixQ* lhs[] = {&ctx.triple.H, &ctx.triple.Ep, &ctx.triple.Em,
                          &ctx.triple.Fp, &ctx.triple.Fm, &ctx.triple.R};
  const MatrixQ* rhs[] = {&alt.H, &alt.Ep, &alt.Em, &alt.Fp, &alt.Fm, &alt.R};
  for (int i = 0; i < 6; ++i)
    if (!(*lhs[i] == *rhs[i]))
      throw RelationError(std::string("coassociativity on ") + names[i]);
  return ctx;
}

CasimirSet build_casimirs(const TensorContext& ctx) {
  const Rep& r1 = ctx.reps[0];
  const Rep& r2 = ctx.reps[1];
  const Rep& r3 = ctx.reps[2];
  const MatrixQ I1 = MatrixQ::identity(r1.dim);
  const MatrixQ I2 = MatrixQ::identity(r2.dim);
  const MatrixQ I3 = MatrixQ::identity(r3.dim);

  CasimirSet cs;
  cs.Q1 = kron(kron(casimir_q(r1), I2), I3);
  cs.Q2 = kron(kron(I1, casimir_q(r2)), I3);
  cs.Q3 = kron(kron(I1, I2), casimir_q(r3));
  cs.Q12 = kron(casimir_of(ctx.pair12), I3);
  cs.Q23 = kron(I1, casimir_of(ctx.pair23));
  cs.Q4 = casimir_of(ctx.triple);

  // Q13 verbatim: ([F+⊗R⊗R + 1⊗1⊗F+, F-⊗R⊗R + 1⊗1⊗F-] + 1/8)(R⊗1⊗R)
  MatrixQ Ap = kron(kron(r1.Fp, r2.R), r3.R) + kron(kron(I1, I2), r3.Fp);
  MatrixQ Am = kron(kron(r1.Fm, r2.R), r3.R) + kron(kron(I1, I2), r3.Fm);
  MatrixQ R13 = kron(kron(r1.R, I2), r3.R);
  cs.Q13 = (commutator(Ap, Am) + MatrixQ::scalar(ctx.dim(), Rational(1, 8))) * R13;

  // scalars eps_i (4 j_i + 1)/8 on the factors
  for (int i = 0; i < 3; ++i) {
    const MatrixQ* q = i == 0 ? &cs.Q1 : i == 1 ? &cs.Q2 : &cs.Q3;
    if (!(*q == MatrixQ::scalar(ctx.dim(), casimir_scalar(ctx.labels[static_cast<std::size_t>(i)]))))
      throw RelationError("Q" + std::to_string(i + 1) + " scalar");
  }

  if (ctx.verify_mode == ArithMode::Exact) {
    assert_casimirs_commute(detail::QBackend{}, cs, ctx, "");
  } else {
    for (std::uint64_t p : {kPrimeA, kPrimeB})
      assert_casimirs_commute(detail::PBackend{p}, cs, ctx, " (mod " + std::to_string(p) + ")");
  }
  return cs;
}

BIImage phi_images(const CasimirSet& cs, const TensorContext& ctx) {
  std::size_t n = cs.Q12.rows();
  const Rational m4(-4);
  const MatrixQ half = MatrixQ::scalar(n, Rational(1, 2));
  const MatrixQ one = MatrixQ::identity(n);

  BIImage bi;
  bi.X = cs.Q12 * m4 + half;
  bi.Y = cs.Q23 * m4 + half;
  bi.Z = cs.Q13 * m4 + half;
  bi.wX = (cs.Q1 * cs.Q2 + cs.Q3 * cs.Q4) * Rational(32) - one;
  bi.wY = (cs.Q2 * cs.Q3 + cs.Q1 * cs.Q4) * Rational(32) - one;
  bi.wZ = (cs.Q1 * cs.Q3 + cs.Q2 * cs.Q4) * Rational(32) - one;

  if (ctx.verify_mode == ArithMode::Exact) {
    assert_bi_relations(detail::QBackend{}, bi, "");
  } else {
    for (std::uint64_t p : {kPrimeA, kPrimeB})
      assert_bi_relations(detail::PBackend{p}, bi, " (mod " + std::to_string(p) + ")");
  }
  return bi;
}

namespace {

template <class B>
std::vector<CheckItem> centralizing_checks(const B& b, const BIImage& bi,
                                               const TensorContext& ctx) {
  auto g = detail::reduce_generators(b, ctx.triple.H, ctx.triple.Ep, ctx.triple.Em,
                                     ctx.triple.Fp, ctx.triple.Fm, ctx.triple.R);
  const std::array<const MatrixQ*, 6> ops = {&bi.X, &bi.Y, &bi.Z, &bi.wX, &bi.wY, &bi.wZ};
  const std::array<const char*, 6> onames = {"X", "Y", "Z", "wX", "wY", "wZ"};
  const std::array<const typename B::Mat*, 6> gens = {&g.H, &g.Ep, &g.Em, &g.Fp, &g.Fm, &g.R};
  const std::array<const char*, 6> gnames = {"H", "E+", "E-", "F+", "F-", "R"};
  std::vector<CheckItem> out;
  for (std::size_t oi = 0; oi < ops.size(); ++oi) {
    auto ob = b.reduce(*ops[oi]);
    for (std::size_t gi = 0; gi < gens.size(); ++gi)
      out.push_back({std::string("[") + onames[oi] + "," + gnames[gi] + "]=0",
                     detail::commutes(b, ob, *gens[gi]), ""});
  }
  return out;
}

}  // namespace

std::vector<CheckItem> verify_centralizing(const BIImage& bi, const TensorContext& ctx) {
  if (ctx.verify_mode == ArithMode::Exact)
    return centralizing_checks(detail::QBackend{}, bi, ctx);
  auto a = centralizing_checks(detail::PBackend{kPrimeA}, bi, ctx);
  auto b2 = centralizing_checks(detail::PBackend{kPrimeB}, bi, ctx);
  for (std::size_t i = 0; i < a.size(); ++i) a[i].pass = a[i].pass && b2[i].pass;
  return a;
}

std::vector<MatrixQ> monomial_images(const MatrixQ& A, const MatrixQ& B) {
  MatrixQ A2 = A * A, B2 = B * B;
  MatrixQ AB = A * B, BA = B * A;
  return {
      MatrixQ::identity(A.rows()),
      A,
      B,
      A2,
      B2,
      AB,
      BA,
      A2 * B,
      AB * A,
      B * A2,
      B2 * A,
      BA * B,
      A2 * B2,
      B2 * A2,
      (A * B2) * A,
  };
}

MonomialIndependence verify_monomial_independence(const CasimirSet& cs) {
  auto mons = monomial_images(cs.Q12, cs.Q23);
  std::size_t amb = cs.Q12.rows() * cs.Q12.cols();
  MatrixQ stack(mons.size(), amb);
  for (std::size_t i = 0; i < mons.size(); ++i) {
    auto flat = mons[i].flatten();
    for (std::size_t j = 0; j < amb; ++j) stack(i, j) = flat[j];
  }
  return {rank(stack), mons.size()};
}

}  // namespace ospcent
