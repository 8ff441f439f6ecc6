#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ospcent/check.hpp"
#include "ospcent/matrix.hpp"

namespace ospcent {

// Parity of the highest weight: + bosonic, - fermionic.
enum class Parity : int { plus = +1, minus = -1 };

inline int sign_of(Parity p) { return static_cast<int>(p); }
inline Parity opposite(Parity p) { return p == Parity::plus ? Parity::minus : Parity::plus; }
inline Parity parity_of_sign(int s) { return s >= 0 ? Parity::plus : Parity::minus; }

// Label of the irreducible [j]^eps; two_j keeps half-integer j exact.
struct IrrepLabel {
  int two_j = 0;
  Parity parity = Parity::plus;

  std::size_t dim() const { return static_cast<std::size_t>(2 * two_j + 1); }  // 4j+1
  Rational j() const { return Rational(two_j, 2); }
  std::string to_string() const;  // e.g. "[3/2]+"

  friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
};

// Display (and container) order: descending j, then + before -.
struct LabelOrder {
  bool operator()(const IrrepLabel& a, const IrrepLabel& b) const {
    if (a.two_j != b.two_j) return a.two_j > b.two_j;
    return sign_of(a.parity) > sign_of(b.parity);
  }
};

// A representation given by its six generator matrices. A value of this
// type always satisfies the defining relations exactly: every constructor
// path runs the relation suite.
struct Rep {
  std::size_t dim = 0;
  MatrixQ H, Ep, Em, Fp, Fm, R;
  std::optional<IrrepLabel> label;
};

struct RelationError : std::runtime_error {
  explicit RelationError(const std::string& relation)
      : std::runtime_error("relation failed: " + relation), relation_name(relation) {}
  std::string relation_name;
};

// The full defining-relation suite, one entry per identity:
// [H,E±]=±E±, [E+,E-]=2H, [H,F±]=±F±/2, {F+,F-}=H/2, [E±,F∓]=-F±,
// {F±,F±}=±E±/2, R²=1, [R,H]=0, [R,E±]=0, {R,F±}=0.
std::vector<CheckItem> osp_relation_checks(const Rep& rep);

// Throws RelationError naming the first violated relation.
void verify_osp_relations(const Rep& rep);

// Weight-basis construction: H v_k = (j - k/2) v_k, R v_k = eps(-1)^k v_k,
// F- v_k = v_{k+1}, F+ v_k = c_k v_{k-1} with c_0 = 0 and
// c_{k+1} = (j - k/2)/2 - c_k; E± = ±4(F±)². All relations are verified
// before the value is returned.
Rep build_irrep(IrrepLabel label);

// Scalar by which the Casimir acts on [j]^eps: eps*(4j+1)/8.
Rational casimir_scalar(IrrepLabel label);

// sCasimir S = [F+,F-] + 1/8. Asserts {S,F±}=0, [S,H]=[S,E±]=0.
MatrixQ scasimir(const Rep& rep);

// Casimir Q = S*R. When the rep carries an irreducible label, asserts that
// Q is the scalar eps*(4j+1)/8 and throws otherwise.
MatrixQ casimir_q(const Rep& rep);

}  // namespace ospcent
