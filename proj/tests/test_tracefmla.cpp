#include <doctest.h>

#include <random>
#include <stdexcept>

#include "orbitkit/tracefmla.hpp"

using namespace orbitkit;

namespace {

std::vector<FiniteGroupTable> catalog() {
  std::vector<FiniteGroupTable> groups;
  for (int n = 1; n <= 12; ++n) groups.push_back(FiniteGroupTable::cyclic(n));
  groups.push_back(FiniteGroupTable::symmetric(3));
  groups.push_back(FiniteGroupTable::symmetric(4));
  groups.push_back(FiniteGroupTable::alternating(4));
  groups.push_back(FiniteGroupTable::dihedral(4));
  return groups;
}

// (1 / |Gamma|) #{x in G : x^-1 g x in Gamma}.
Rational induced_character_oracle(const FiniteGroupTable& g, const Subgroup& sub, int elem) {
  std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
  for (int x : sub) in[static_cast<std::size_t>(x)] = true;
  int hits = 0;
  for (int x = 0; x < g.order(); ++x) hits += in[static_cast<std::size_t>(g.conjugate(elem, g.inverse(x)))];
  return Rational(hits, static_cast<long>(sub.size()));
}

// sum over gamma in Gamma of |Z_G(gamma)| <O_gamma, phi> / |Gamma|.
Rational geometric_oracle(const FiniteGroupTable& g, const Subgroup& sub, const TestFunction& phi) {
  Rational sum = 0;
  for (int gamma : sub) {
    sum += static_cast<long>(centralizer(g, gamma).size()) * orbital_pairing(g, gamma, phi);
  }
  return sum / static_cast<long>(sub.size());
}

int divisor_count(int n) {
  int c = 0;
  for (int d = 1; d <= n; ++d) c += n % d == 0;
  return c;
}

}  // namespace

TEST_CASE("cycle notation") {
  const Permutation p = parse_cycles("(1 2)(2 3)", 3);
  CHECK(format_cycles(p) == "(1 2 3)");
  CHECK(parse_cycles("()", 4) == Permutation{0, 1, 2, 3});
  CHECK(parse_cycles("(1,3)", 3) == Permutation{2, 1, 0});
  CHECK(format_cycles(parse_cycles("(4 2)(1 3)", 4)) == "(1 3)(2 4)");
  CHECK(format_cycles(Permutation{0, 1}) == "()");
  CHECK_THROWS_AS(parse_cycles("(1 5)", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(1 1)", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("1 2", 4), std::invalid_argument);
}

TEST_CASE("catalog groups") {
  CHECK(FiniteGroupTable::symmetric(3).order() == 6);
  CHECK(FiniteGroupTable::symmetric(4).order() == 24);
  CHECK(FiniteGroupTable::alternating(4).order() == 12);
  CHECK(FiniteGroupTable::dihedral(4).order() == 8);
  CHECK(FiniteGroupTable::cyclic(12).order() == 12);
  CHECK(FiniteGroupTable::by_name("D4").order() == 8);
  CHECK(FiniteGroupTable::by_name("s4").order() == 24);
  CHECK_THROWS_AS(FiniteGroupTable::by_name("Q8"), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroupTable::by_name("S"), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroupTable::by_name("S9"), std::invalid_argument);

  for (const auto& g : catalog()) {
    CHECK(g.satisfies_group_axioms());
    CHECK(g.element(g.identity()) == parse_cycles("()", g.degree()));
  }

  CHECK(conjugacy_classes(FiniteGroupTable::symmetric(3)).size() == 3);
  CHECK(conjugacy_classes(FiniteGroupTable::symmetric(4)).size() == 5);
  CHECK(conjugacy_classes(FiniteGroupTable::alternating(4)).size() == 4);
  CHECK(conjugacy_classes(FiniteGroupTable::dihedral(4)).size() == 5);
  CHECK(conjugacy_classes(FiniteGroupTable::cyclic(7)).size() == 7);

  CHECK(all_subgroups(FiniteGroupTable::symmetric(3)).size() == 6);
  CHECK(all_subgroups(FiniteGroupTable::symmetric(4)).size() == 30);
  CHECK(all_subgroups(FiniteGroupTable::alternating(4)).size() == 10);
  CHECK(all_subgroups(FiniteGroupTable::dihedral(4)).size() == 10);
  for (int n = 1; n <= 12; ++n) CHECK(all_subgroups(FiniteGroupTable::cyclic(n)).size() == divisor_count(n));
}

TEST_CASE("conjugacy classes partition the group and are ordered by minimal element") {
  for (const auto& g : catalog()) {
    const auto classes = conjugacy_classes(g);
    int total = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      total += static_cast<int>(classes[i].size());
      CHECK(g.order() % static_cast<int>(classes[i].size()) == 0);
      if (i > 0) CHECK(classes[i - 1].front() < classes[i].front());
      for (int x : classes[i]) CHECK(centralizer(g, x).size() * classes[i].size() == static_cast<std::size_t>(g.order()));
    }
    CHECK(total == g.order());
    CHECK(classes.front() == std::vector<int>{0});
  }
}

TEST_CASE("subgroups") {
  const auto s4 = FiniteGroupTable::symmetric(4);
  for (const auto& h : all_subgroups(s4)) {
    CHECK(is_subgroup(s4, h));
    CHECK(s4.order() % static_cast<int>(h.size()) == 0);
  }
  const int t = *s4.index_of(parse_cycles("(1 2)", 4));
  const int c = *s4.index_of(parse_cycles("(1 2 3)", 4));
  CHECK(generated_subgroup(s4, {t, c}).size() == 6);
  CHECK_FALSE(is_subgroup(s4, {0, t, c}));
  CHECK_FALSE(is_subgroup(s4, {}));
  CHECK_THROWS_AS(induced_trace(s4, {0, t, c}, 0), std::invalid_argument);
  CHECK_THROWS_AS(verify_trace_formula(s4, {t}), std::invalid_argument);
}

TEST_CASE("trivial subgroup gives the regular representation") {
  for (const auto& g : catalog()) {
    for (int x = 0; x < g.order(); ++x) CHECK(induced_trace(g, {0}, x) == (x == 0 ? g.order() : 0));
    const auto result = verify_trace_formula(g, {0});
    CHECK(result.holds);
    for (int x = 0; x < g.order(); ++x) CHECK(result.spectral[static_cast<std::size_t>(x)] == (x == 0 ? g.order() : 0));
  }
}

TEST_CASE("named examples") {
  const auto s3 = FiniteGroupTable::symmetric(3);
  const auto swap = generated_subgroup(s3, {*s3.index_of(parse_cycles("(1 2)", 3))});
  CHECK(verify_trace_formula(s3, swap).holds);
  const auto s4 = FiniteGroupTable::symmetric(4);
  const auto stabilizer = generated_subgroup(
      s4, {*s4.index_of(parse_cycles("(1 2)", 4)), *s4.index_of(parse_cycles("(1 2 3)", 4))});
  REQUIRE(stabilizer.size() == 6);
  CHECK(verify_trace_formula(s4, stabilizer).holds);
  // Point stabilizer: the permutation character counts fixed points.
  for (int x = 0; x < s4.order(); ++x) {
    int fixed = 0;
    for (int i = 0; i < 4; ++i) fixed += s4.element(x)[static_cast<std::size_t>(i)] == i;
    CHECK(induced_trace(s4, stabilizer, x) == fixed);
  }
}

TEST_CASE("both sides match independent oracles on the whole catalog") {
  for (const auto& g : catalog()) {
    for (const auto& sub : all_subgroups(g)) {
      int total = 0;
      for (int x = 0; x < g.order(); ++x) {
        const int trace = induced_trace(g, sub, x);
        total += trace;
        CHECK(Rational(trace) == induced_character_oracle(g, sub, x));
        for (int u = 0; u < g.order(); ++u) CHECK(induced_trace(g, sub, g.conjugate(x, u)) == trace);
      }
      CHECK(total == g.order());  // one orbit on G / Gamma
      const auto result = verify_trace_formula(g, sub);
      CHECK(result.holds);
      CHECK_FALSE(result.witness.has_value());
      for (int x = 0; x < g.order(); ++x) {
        CHECK(result.geometric[static_cast<std::size_t>(x)] == geometric_oracle(g, sub, delta_function(g, x)));
      }
    }
  }
}

TEST_CASE("random rational test functions") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 9);
  for (const auto& g : {FiniteGroupTable::symmetric(4), FiniteGroupTable::dihedral(4)}) {
    for (const auto& sub : all_subgroups(g)) {
      TestFunction phi(static_cast<std::size_t>(g.order()));
      for (auto& v : phi) v = Rational(num(rng), den(rng));
      CHECK(spectral_side(g, sub, phi) == geometric_side(g, sub, phi));
    }
  }
  const auto s3 = FiniteGroupTable::symmetric(3);
  CHECK_THROWS_AS(orbital_pairing(s3, 0, TestFunction(2)), std::invalid_argument);
}

TEST_CASE("groups from generators") {
  const auto g = FiniteGroupTable::generated_by(4, {parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 3)", 4)});
  CHECK(g.order() == 8);
  CHECK(g.satisfies_group_axioms());
  CHECK_THROWS_AS(FiniteGroupTable::generated_by(3, {Permutation{0, 0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroupTable::generated_by(3, {Permutation{0, 1}}), std::invalid_argument);
}
