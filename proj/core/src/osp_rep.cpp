#include "ospcent/osp_rep.hpp"

#include <sstream>

#include "ospcent/detail/identity_checks.hpp"

namespace ospcent {

std::string IrrepLabel::to_string() const {
  std::ostringstream os;
  os << "[";
  if (two_j % 2 == 0) os << two_j / 2;
  else os << two_j << "/2";
  os << "]" << (parity == Parity::plus ? "+" : "-");
  return os.str();
}

std::vector<CheckItem> osp_relation_checks(const Rep& rep) {
  detail::QBackend b;
  detail::SixGenerators<detail::QBackend> g{rep.H, rep.Ep, rep.Em, rep.Fp, rep.Fm, rep.R};
  std::vector<CheckItem> out;
  for (auto& c : detail::osp_identity_suite(b, g, rep.dim)) out.push_back({c.name, c.ok, ""});
  return out;
}

void verify_osp_relations(const Rep& rep) {
  for (const auto& c : osp_relation_checks(rep))
    if (!c.pass) throw RelationError(c.name);
}

Rep build_irrep(IrrepLabel label) {
  if (label.two_j < 0) throw std::invalid_argument("build_irrep: two_j must be >= 0");
  std::size_t n = label.dim();
  Rational j = label.j();
  int eps = sign_of(label.parity);

  Rep rep;
  rep.dim = n;
  rep.label = label;

  std::vector<Rational> hdiag(n), rdiag(n);
  for (std::size_t k = 0; k < n; ++k) {
    hdiag[k] = j - Rational(static_cast<long>(k), 2);
    rdiag[k] = Rational((k % 2 == 0) ? eps : -eps);
  }
  rep.H = MatrixQ::diagonal(hdiag);
  rep.R = MatrixQ::diagonal(rdiag);

  // lowering by 1, raising coefficients from the recursion
  rep.Fm = MatrixQ(n, n);
  for (std::size_t k = 0; k + 1 < n; ++k) rep.Fm(k + 1, k) = Rational(1);

  std::vector<Rational> c(n + 1);
  c[0] = Rational(0);
  for (std::size_t k = 0; k < n; ++k)
    c[k + 1] = (j - Rational(static_cast<long>(k), 2)) * Rational(1, 2) - c[k];
  rep.Fp = MatrixQ(n, n);
  for (std::size_t k = 1; k < n; ++k) rep.Fp(k - 1, k) = c[k];

  rep.Ep = rep.Fp * rep.Fp * Rational(4);
  rep.Em = rep.Fm * rep.Fm * Rational(-4);

  verify_osp_relations(rep);
  return rep;
}

Rational casimir_scalar(IrrepLabel label) {
  return Rational(sign_of(label.parity)) * Rational(2 * label.two_j + 1, 8);
}

MatrixQ scasimir(const Rep& rep) {
  MatrixQ S = commutator(rep.Fp, rep.Fm) + MatrixQ::scalar(rep.dim, Rational(1, 8));
  const MatrixQ zero(rep.dim, rep.dim);
  if (!(anticommutator(S, rep.Fp) == zero) || !(anticommutator(S, rep.Fm) == zero))
    throw RelationError("{S,F±}=0");
  if (!(commutator(S, rep.H) == zero) || !(commutator(S, rep.Ep) == zero) ||
      !(commutator(S, rep.Em) == zero))
    throw RelationError("[S,even]=0");
  return S;
}

MatrixQ casimir_q(const Rep& rep) {
  MatrixQ Q = scasimir(rep) * rep.R;
  if (rep.label) {
    if (!(Q == MatrixQ::scalar(rep.dim, casimir_scalar(*rep.label))))
      throw RelationError("Q scalar on " + rep.label->to_string());
  }
  return Q;
}

}  // namespace ospcent
