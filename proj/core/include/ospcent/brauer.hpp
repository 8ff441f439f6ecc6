#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ospcent/check.hpp"
#include "ospcent/closure.hpp"
#include "ospcent/matrix.hpp"
#include "ospcent/osp_rep.hpp"

namespace ospcent {

// Perfect matching on the six endpoints of a three-strand diagram.
// Endpoints 0,1,2 are the top row, 3,4,5 the bottom row; partner[i] is the
// unique endpoint paired with i. Exactly 15 distinct diagrams exist.
struct BrauerDiagram {
  std::array<std::uint8_t, 6> partner{};

  static BrauerDiagram identity();
  static BrauerDiagram s1();  // crossing of strands 1,2
  static BrauerDiagram s2();  // crossing of strands 2,3
  static BrauerDiagram e1();  // cup-cap on strands 1,2
  static BrauerDiagram e2();  // cup-cap on strands 2,3

  std::string to_string() const;  // e.g. "(t1 b2)(t2 b1)(t3 b3)"
  bool is_permutation() const;    // no horizontal pair
  bool has_top_arc() const;

  friend auto operator<=>(const BrauerDiagram& a, const BrauerDiagram& b) {
    return a.partner <=> b.partner;
  }
  friend bool operator==(const BrauerDiagram&, const BrauerDiagram&) = default;
};

// Stacks d1 above d2, identifies d1's bottom row with d2's top row and
// traces the strands. loops counts closed loops confined to the middle row
// (at most one for three strands — asserted). This is the product d1*d2,
// with words acting left to right as written in the defining relations.
struct DiagramProduct {
  BrauerDiagram diagram;
  int loops = 0;
};
DiagramProduct compose_diagrams(const BrauerDiagram& d1, const BrauerDiagram& d2);

// All 15 perfect matchings, sorted; the basis order used everywhere.
const std::vector<BrauerDiagram>& enumerate_basis();

// Rational linear combination of diagrams; zero coefficients are dropped.
struct BrauerElement {
  std::map<BrauerDiagram, Rational> terms;

  static BrauerElement from_diagram(const BrauerDiagram& d, const Rational& c = Rational(1));
  static BrauerElement one();

  BrauerElement& operator+=(const BrauerElement& o);
  BrauerElement& operator-=(const BrauerElement& o);
  BrauerElement& operator*=(const Rational& c);
  friend BrauerElement operator+(BrauerElement a, const BrauerElement& b) { return a += b; }
  friend BrauerElement operator-(BrauerElement a, const BrauerElement& b) { return a -= b; }
  friend BrauerElement operator*(BrauerElement a, const Rational& c) { return a *= c; }
  friend bool operator==(const BrauerElement&, const BrauerElement&) = default;

  bool is_zero() const { return terms.empty(); }
  void prune();
};

// eta^(closed loops) * (stacked diagram).
BrauerElement compose(const BrauerDiagram& d1, const BrauerDiagram& d2, const Rational& eta);
BrauerElement multiply(const BrauerElement& a, const BrauerElement& b, const Rational& eta);

// B3(eta) with its regular representation in the diagram basis.
class BrauerAlgebra {
 public:
  explicit BrauerAlgebra(const Rational& eta);

  const Rational& eta() const { return eta_; }
  const std::vector<BrauerDiagram>& basis() const { return basis_; }
  std::size_t index_of(const BrauerDiagram& d) const;

  // Left-multiplication matrix in the diagram basis (column j holds the
  // coordinates of x * basis[j]).
  MatrixQ regular_matrix(const BrauerElement& x) const;
  MatrixQ regular_matrix(const BrauerDiagram& d) const;

  // (result diagram index, loop count) for each ordered basis pair.
  struct TableEntry {
    std::size_t result = 0;
    int loops = 0;
  };
  const std::vector<std::vector<TableEntry>>& multiplication_table() const { return table_; }

 private:
  Rational eta_;
  std::vector<BrauerDiagram> basis_;
  std::map<BrauerDiagram, std::size_t> index_;
  std::vector<std::vector<TableEntry>> table_;
};

// The 8 defining and 9 derived relations at the given eta, as exact
// diagram identities (families expanded per generator index). If a mixed
// relation fails while its mirror-ordered version holds, the composition
// convention is wrong end to end and this throws instead of reporting.
std::vector<CheckItem> verify_presentation(const Rational& eta);

// Regular-representation homomorphism and faithfulness checks.
std::vector<CheckItem> verify_regular_representation(const Rational& eta);

// Psi images in the 15x15 regular representation of B3(-1):
// X = 2(s1+e1), Y = 2(s2+e2), Z = 2 s2 (s1+e1) s2 (= 2 s1 (s2+e2) s1,
// asserted), w = {X,Y} - X - Y - Z.
struct PsiImages {
  MatrixQ X, Y, Z, w;
};
PsiImages psi_images();

struct Theorem1Report {
  std::vector<CheckItem> checks;
  std::size_t closure_dimension = 0;
};
Theorem1Report verify_theorem1();

// The twelve ordering identities used in the proof, as 15x15 equalities.
std::vector<CheckItem> verify_proof_relations();

struct RemarkReport {
  std::vector<CheckItem> checks;
  std::vector<std::size_t> quotient_dims;  // at w = -4, 2, 8, 14
};
RemarkReport verify_remark_quotients();

}  // namespace ospcent
