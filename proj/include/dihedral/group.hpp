#pragma once

#include <compare>
#include <string>
#include <vector>

namespace dihedral {

/// An element C^c R^k of the dihedral group D_{2n}, written with the
/// reflection letter first. The rotation index is kept reduced mod n.
class Element {
 public:
  Element(int n, bool reflected, long long rot);

  static Element identity(int n) { return Element(n, false, 0); }
  static Element rotation(int n, long long k = 1) { return Element(n, false, k); }
  static Element reflection(int n, long long k = 0) { return Element(n, true, k); }

  int n() const { return n_; }
  bool reflected() const { return reflected_; }
  int rot() const { return rot_; }
  bool is_identity() const { return !reflected_ && rot_ == 0; }

  // Position in the fixed basis order e, R, ..., R^{n-1}, C, CR, ..., CR^{n-1}.
  int index() const { return (reflected_ ? n_ : 0) + rot_; }
  static Element from_index(int n, int index);

  // "e", "R", "R^3", "C", "CR", "CR^2".
  std::string word() const;
  // Inverse of word(); also accepts "CR2" / "R2" without the caret.
  static Element parse(int n, const std::string& word);

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element& a, const Element& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.index() <=> b.index();
  }

 private:
  int n_;
  bool reflected_;
  int rot_;
};

Element mul(const Element& a, const Element& b);
Element inv(const Element& a);
Element power(const Element& a, long long e);
int element_order(const Element& a);
Element conjugate(const Element& g, const Element& x);  // g x g^{-1}
Element commutator(const Element& x, const Element& y);  // x y x^{-1} y^{-1}

// All 2n elements in basis order.
std::vector<Element> elements(int n);

enum class LinearKind { Triv, Det, Sgn, DetSgn };

std::string to_string(LinearKind kind);

struct LinearCharacter {
  int n;
  LinearKind kind;

  int value(const Element& g) const;
  std::string name() const { return to_string(kind); }
};

// Value of a linear character. Defined for every kind at every n; for odd n
// sgn coincides with triv or det.
int linear_character_value(LinearKind kind, const Element& g);

struct ConjugacyClassData {
  int n;
  std::vector<std::vector<Element>> classes;
  std::vector<int> class_sizes;
  // [G,G] = <R^d>.
  int commutator_generator_power;
  std::vector<LinearCharacter> linear_characters;
};

/// Conjugacy classes of D_{2n} ordered as e, rotation classes by increasing
/// k, then the reflection class(es) with the class of C first.
ConjugacyClassData class_data(int n);

}  // namespace dihedral
