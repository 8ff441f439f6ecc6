#pragma once

// Templated identity suites shared by the exact (Q) and modular (Z/p)
// verification paths. A backend supplies the matrix type and field ops.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ospcent/matrix.hpp"
#include "ospcent/modular.hpp"

namespace ospcent::detail {

struct QBackend {
  using Mat = MatrixQ;
  Mat reduce(const MatrixQ& a) const { return a; }
  Mat mul(const Mat& a, const Mat& b) const { return a * b; }
  Mat add(const Mat& a, const Mat& b) const { return a + b; }
  Mat sub(const Mat& a, const Mat& b) const { return a - b; }
  Mat scaled(const Mat& a, long num, long den) const { return a * Rational(num, den); }
  Mat ident(std::size_t n) const { return MatrixQ::identity(n); }
  bool eq(const Mat& a, const Mat& b) const { return a == b; }
};

struct PBackend {
  std::uint64_t p;
  using Mat = MatrixP;
  Mat reduce(const MatrixQ& a) const { return modular_view(a, p); }
  Mat mul(const Mat& a, const Mat& b) const { return a * b; }
  Mat add(const Mat& a, const Mat& b) const { return a + b; }
  Mat sub(const Mat& a, const Mat& b) const { return a - b; }
  Mat scaled(const Mat& a, long num, long den) const {
    std::uint64_t n = num >= 0 ? static_cast<std::uint64_t>(num) % p
                               : p - static_cast<std::uint64_t>(-num) % p;
    std::uint64_t d = static_cast<std::uint64_t>(den > 0 ? den : -den) % p;
    std::uint64_t c = mod_mul(n, mod_inv(d, p), p);
    if (den < 0) c = c == 0 ? 0 : p - c;
    return a.scaled(c);
  }
  Mat ident(std::size_t n) const { return MatrixP::identity(n, p); }
  bool eq(const Mat& a, const Mat& b) const { return a == b; }
};

template <class B>
struct SixGenerators {
  typename B::Mat H, Ep, Em, Fp, Fm, R;
};

template <class B>
SixGenerators<B> reduce_generators(const B& b, const MatrixQ& H, const MatrixQ& Ep,
                                   const MatrixQ& Em, const MatrixQ& Fp, const MatrixQ& Fm,
                                   const MatrixQ& R) {
  return {b.reduce(H), b.reduce(Ep), b.reduce(Em), b.reduce(Fp), b.reduce(Fm), b.reduce(R)};
}

template <class B>
typename B::Mat comm(const B& b, const typename B::Mat& x, const typename B::Mat& y) {
  return b.sub(b.mul(x, y), b.mul(y, x));
}

template <class B>
typename B::Mat acomm(const B& b, const typename B::Mat& x, const typename B::Mat& y) {
  return b.add(b.mul(x, y), b.mul(y, x));
}

struct NamedCheck {
  std::string name;
  bool ok;
};

// The eleven defining relation families of the superalgebra plus the
// grading involution, one entry per identity.
template <class B>
std::vector<NamedCheck> osp_identity_suite(const B& b, const SixGenerators<B>& g,
                                           std::size_t dim) {
  std::vector<NamedCheck> out;
  auto chk = [&](const std::string& name, const typename B::Mat& lhs,
                 const typename B::Mat& rhs) { out.push_back({name, b.eq(lhs, rhs)}); };
  const auto I = b.ident(dim);
  chk("[H,E+]=E+", comm(b, g.H, g.Ep), g.Ep);
  chk("[H,E-]=-E-", comm(b, g.H, g.Em), b.scaled(g.Em, -1, 1));
  chk("[E+,E-]=2H", comm(b, g.Ep, g.Em), b.scaled(g.H, 2, 1));
  chk("[H,F+]=F+/2", comm(b, g.H, g.Fp), b.scaled(g.Fp, 1, 2));
  chk("[H,F-]=-F-/2", comm(b, g.H, g.Fm), b.scaled(g.Fm, -1, 2));
  chk("{F+,F-}=H/2", acomm(b, g.Fp, g.Fm), b.scaled(g.H, 1, 2));
  chk("[E+,F-]=-F+", comm(b, g.Ep, g.Fm), b.scaled(g.Fp, -1, 1));
  chk("[E-,F+]=-F-", comm(b, g.Em, g.Fp), b.scaled(g.Fm, -1, 1));
  chk("{F+,F+}=E+/2", acomm(b, g.Fp, g.Fp), b.scaled(g.Ep, 1, 2));
  chk("{F-,F-}=-E-/2", acomm(b, g.Fm, g.Fm), b.scaled(g.Em, -1, 2));
  chk("R^2=1", b.mul(g.R, g.R), I);
  chk("[R,H]=0", b.mul(g.R, g.H), b.mul(g.H, g.R));
  chk("[R,E+]=0", b.mul(g.R, g.Ep), b.mul(g.Ep, g.R));
  chk("[R,E-]=0", b.mul(g.R, g.Em), b.mul(g.Em, g.R));
  chk("{R,F+}=0", acomm(b, g.R, g.Fp), b.scaled(I, 0, 1));
  chk("{R,F-}=0", acomm(b, g.R, g.Fm), b.scaled(I, 0, 1));
  return out;
}

// {A,B} = A + B + C + W
template <class B>
bool bannai_ito_identity(const B& b, const typename B::Mat& A, const typename B::Mat& C2,
                         const typename B::Mat& C3, const typename B::Mat& W) {
  auto rhs = b.add(b.add(A, C2), b.add(C3, W));
  return b.eq(acomm(b, A, C2), rhs);
}

template <class B>
bool commutes(const B& b, const typename B::Mat& x, const typename B::Mat& y) {
  return b.eq(b.mul(x, y), b.mul(y, x));
}

}  // namespace ospcent::detail
