#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitkit/exact.hpp"

namespace orbitkit {

/// Permutation of {0, ..., n-1} as its image list.
using Permutation = std::vector<int>;

/// Parses cycle notation on points 1..degree, e.g. "(1 2 3)(4 5)" or "()".
Permutation parse_cycles(std::string_view text, int degree);
std::string format_cycles(const Permutation& perm);

/// Finite permutation group with a full multiplication table. Elements are
/// sorted lexicographically, so the identity has index 0. Products compose
/// right to left: (g h)(i) = g(h(i)).
class FiniteGroupTable {
 public:
  static FiniteGroupTable generated_by(int degree, const std::vector<Permutation>& generators,
                                       std::string name = {});

  static FiniteGroupTable cyclic(int order);
  static FiniteGroupTable symmetric(int degree);
  static FiniteGroupTable alternating(int degree);
  /// Symmetries of the n-gon, order 2n, acting on n points.
  static FiniteGroupTable dihedral(int n);
  /// "C<n>", "S<n>", "A<n>" or "D<n>".
  static FiniteGroupTable by_name(std::string_view name);

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::string& name() const { return name_; }
  const Permutation& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  int identity() const { return 0; }
  int multiply(int g, int h) const { return table_[static_cast<std::size_t>(g * order() + h)]; }
  int inverse(int g) const { return inverses_[static_cast<std::size_t>(g)]; }
  /// Index of a permutation, or nullopt when it is not in the group.
  std::optional<int> index_of(const Permutation& perm) const;

  int conjugate(int g, int by) const { return multiply(multiply(by, g), inverse(by)); }

  /// Exhaustive check of closure, identity, inverses and associativity.
  bool satisfies_group_axioms() const;

 private:
  int degree_ = 0;
  std::string name_;
  std::vector<Permutation> elements_;
  std::vector<int> table_;
  std::vector<int> inverses_;
};

/// Sorted element indices of a subgroup.
using Subgroup = std::vector<int>;

Subgroup generated_subgroup(const FiniteGroupTable& group, const std::vector<int>& generators);
bool is_subgroup(const FiniteGroupTable& group, const Subgroup& subset);
/// Every subgroup, found by closing under joins with single elements.
/// Sorted by (order, elements).
std::vector<Subgroup> all_subgroups(const FiniteGroupTable& group);

/// Conjugacy classes, each sorted, ordered by their minimal element index.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroupTable& group);

/// Z_H(g) for g in the group; H defaults to the whole group.
std::vector<int> centralizer(const FiniteGroupTable& group, int g, const Subgroup* within = nullptr);

/// Exact rational function on group elements.
using TestFunction = std::vector<Rational>;

TestFunction delta_function(const FiniteGroupTable& group, int g);

/// Sum of phi over the conjugacy class of gamma.
Rational orbital_pairing(const FiniteGroupTable& group, int gamma, const TestFunction& phi);

/// Number of cosets w Gamma with w^-1 g w in Gamma: the permutation
/// character of Ind_Gamma^G 1 at g.
int induced_trace(const FiniteGroupTable& group, const Subgroup& sub, int g);

/// sum_g phi(g) induced_trace(g), without 1/|G| normalization.
Rational spectral_side(const FiniteGroupTable& group, const Subgroup& sub, const TestFunction& phi);

/// Sum over Gamma-conjugacy classes of Gamma of c(gamma) <O_gamma, phi>, with
/// c(gamma) = |Z_G(gamma)| / |Z_Gamma(gamma)|.
Rational geometric_side(const FiniteGroupTable& group, const Subgroup& sub, const TestFunction& phi);

struct TraceFormulaResult {
  bool holds = true;
  /// Delta function support of the first failure.
  std::optional<int> witness;
  std::vector<Rational> spectral;
  std::vector<Rational> geometric;
};

/// Compares both sides on every delta function, a basis of all test functions.
TraceFormulaResult verify_trace_formula(const FiniteGroupTable& group, const Subgroup& sub);

}  // namespace orbitkit
