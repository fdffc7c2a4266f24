#pragma once

#include <map>
#include <string>
#include <vector>

#include "dihedral/group.hpp"
#include "dihedral/numeric.hpp"

namespace dihedral {

/// An irreducible representation of D_{2n} over C: one of the linear
/// characters, or the two-dimensional pi_2 twisted by R -> R^j.
struct IrreducibleLabel {
  enum class Kind { Triv, Det, Sgn, DetSgn, Pi2 };
  Kind kind;
  int j = 0;

  static IrreducibleLabel linear(LinearKind k);
  static IrreducibleLabel pi2(int j) { return {Kind::Pi2, j}; }

  int dimension() const { return kind == Kind::Pi2 ? 2 : 1; }
  bool is_linear() const { return kind != Kind::Pi2; }
  LinearKind linear_kind() const;  // throws for pi2
  std::string str() const;  // "triv", "det", "sgn", "det*sgn", "pi2(j)"
  static IrreducibleLabel parse(const std::string& text);

  friend bool operator==(const IrreducibleLabel&, const IrreducibleLabel&) = default;
  friend auto operator<=>(const IrreducibleLabel&, const IrreducibleLabel&) = default;
};

// Every irreducible of D_{2n}: linear characters, then pi2(j) for
// 1 <= j <= (n-1)/2 (odd n) or 1 <= j <= m-1 (n = 2m).
std::vector<IrreducibleLabel> irreducibles(int n);
bool is_irreducible_of(int n, const IrreducibleLabel& label);

// The character of pi_2 o phi_j at g: 2cos(2 j k pi / n) on R^k, 0 on
// reflections. Defined for any j, including j = m when n = 2m.
double pi2_character(int j, const Element& g);

// Character value of an irreducible at g (the label must be valid for g.n()).
double character_value(const IrreducibleLabel& label, const Element& g);

// Number of fixed vertices, computed from the closed form per class.
int rho_character(const Element& g);

struct CharacterRow {
  std::string label;  // IrreducibleLabel::str(), or "rho"
  std::vector<Complex> values;  // one per class
};

struct CharacterTable {
  int n;
  std::vector<Element> class_reps;
  std::vector<std::string> class_names;
  std::vector<int> class_sizes;
  std::vector<CharacterRow> rows;  // irreducibles, then the rho row

  const CharacterRow& row(const std::string& label) const;
  std::size_t irreducible_count() const { return rows.size() - 1; }
};

/// Classes ordered e, [R^m], R^{+-k} ascending, C, [CR].
CharacterTable character_table(int n);

// (1/2n) sum over classes of size * a * conj(b).
Complex inner_product(const CharacterTable& table, const std::string& row_a,
                      const std::string& row_b);

// Multiplicity of every irreducible in the permutation representation.
std::map<IrreducibleLabel, int> decompose_rho(int n);

double root_of_unity_sum(int n, long long j);

}  // namespace dihedral
