#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ospcent/check.hpp"
#include "ospcent/closure.hpp"
#include "ospcent/osp_rep.hpp"
#include "ospcent/tensor.hpp"

namespace ospcent {

// Multiplicity of [k]^eps = dimension of the joint kernel
// {v : F+ v = 0, H v = k v, R v = eps v}, exactly. The total-dimension
// bookkeeping sum mult*(4k+1) = dim is verified before returning.
std::map<IrrepLabel, int, LabelOrder> decompose(const Rep& rep);

struct BratteliNode {
  IrrepLabel label;
  long mult = 0;
};

struct BratteliEdge {
  int level = 0;      // edges between levels `level` and `level+1`
  std::size_t from = 0, to = 0;
  long mult = 0;
};

// Three-level multiplicity graph of the tower V, V⊗V, V⊗V⊗V.
struct BratteliDiagram {
  IrrepLabel base;
  std::array<std::vector<BratteliNode>, 3> levels;  // descending j, + before -
  std::vector<BratteliEdge> edges;
};

BratteliDiagram build_bratteli(IrrepLabel base);

// Eigenvalue of X on the level-1 isotypic component [j']^eps: 1/2 - eps(4j'+1)/2.
Rational x_eigenvalue(IrrepLabel mid);

// Eigenvalue of omega on the level-2 component [m]^delta of the tower over
// [j]^+: (4j+1)^2/2 - 1 + delta(4j+1)(4m+1)/2.
Rational omega_eigenvalue(IrrepLabel bot, IrrepLabel base);

// X - omega values along the level-1 -> level-2 edges.
struct EdgeSpectrum {
  std::vector<Rational> values;    // sorted multiset, one value per edge path
  std::vector<Rational> distinct;  // the set M, sorted
};

// Throws when the multiset size misses the Hex number 12j^2+6j+1, which
// would falsify the diagram or the eigenvalue maps.
EdgeSpectrum edge_spectrum(const BratteliDiagram& diagram);

// The four closed-form edge families, enumerated from the displayed
// inequality ranges; integer and half-integer base labels take different
// branches. Sorted multiset of values. Requires two_j >= 1.
std::vector<Rational> closed_form_edges(IrrepLabel base);

struct ConjectureSets {
  std::vector<Rational> x_roots;      // {2k : -2j <= k <= 2j}
  std::vector<Rational> omega_roots;  // {(4j+1)(2j+1-2k)-1 : k = -3j..3j}
  std::vector<Rational> m_set;        // distinct edge values
};
ConjectureSets conjecture_sets(IrrepLabel base, const EdgeSpectrum& spectrum);

enum class ConjectureLevel { SpectraOnly, FullClosure };

struct ConjectureReport {
  std::vector<CheckItem> checks;
  std::size_t hex_count = 0;
  std::size_t centralizer_dim = 0;     // sum of squared level-2 multiplicities
  std::size_t closure_dim = 0;         // 0 unless level = FullClosure
  bool certified = true;               // false only if dual primes disagreed
  ArithMode mode = ArithMode::Exact;
  ConjectureSets sets;
  EdgeSpectrum spectrum;
};

// Instance-wise verification of the quotient description: polynomial
// divisibility and attained-root equality for X, Y, Z, omega and the
// differences, closed-form edge agreement, the centralizer dimension
// count, and optionally the full closure with its commutant check.
ConjectureReport verify_conjecture(IrrepLabel base, ConjectureLevel level, ArithMode mode);

std::string export_dot(const BratteliDiagram& diagram);
std::string export_json(const BratteliDiagram& diagram);

}  // namespace ospcent
