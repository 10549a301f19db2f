#include "orbitkit/tracefmla.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace orbitkit {

namespace {

Permutation identity_permutation(int degree) {
  Permutation p(static_cast<std::size_t>(degree));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& g, const Permutation& h) {
  Permutation out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = g[static_cast<std::size_t>(h[i])];
  return out;
}

void require_subgroup(const FiniteGroupTable& group, const Subgroup& sub) {
  if (!is_subgroup(group, sub)) throw std::invalid_argument("subset is not a subgroup");
}

}  // namespace

Permutation parse_cycles(std::string_view text, int degree) {
  Permutation perm = identity_permutation(degree);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("cycle notation: expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw std::invalid_argument("cycle notation: bad token in \"" + std::string(text) + "\"");
      const int point = std::stoi(std::string(text.substr(start, i - start)));
      if (point < 1 || point > degree) throw std::invalid_argument("cycle notation: point out of range");
      if (std::find(cycle.begin(), cycle.end(), point - 1) != cycle.end()) {
        throw std::invalid_argument("cycle notation: repeated point");
      }
      cycle.push_back(point - 1);
    }
    // Cycles compose right to left like every other product here.
    Permutation c = identity_permutation(degree);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      c[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    }
    perm = compose(perm, c);
    skip_space();
  }
  return perm;
}

std::string format_cycles(const Permutation& perm) {
  std::ostringstream os;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      os << (first ? "" : " ") << j + 1;
      first = false;
      j = static_cast<std::size_t>(perm[j]);
    }
    os << ')';
  }
  const std::string out = os.str();
  return out.empty() ? "()" : out;
}

FiniteGroupTable FiniteGroupTable::generated_by(int degree, const std::vector<Permutation>& generators,
                                                std::string name) {
  if (degree < 1) throw std::invalid_argument("group degree must be positive");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree) throw std::invalid_argument("generator has wrong degree");
    std::vector<int> sorted = g;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity_permutation(degree)) throw std::invalid_argument("generator is not a permutation");
  }
  // Orbit of the identity under right multiplication by generators.
  std::set<Permutation> seen{identity_permutation(degree)};
  std::vector<Permutation> frontier{identity_permutation(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : generators) {
        Permutation y = compose(x, g);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }

  FiniteGroupTable group;
  group.degree_ = degree;
  group.name_ = std::move(name);
  group.elements_.assign(seen.begin(), seen.end());
  const int n = group.order();
  group.table_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  group.inverses_.resize(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      const auto k = group.index_of(compose(group.element(g), group.element(h)));
      group.table_[static_cast<std::size_t>(g * n + h)] = *k;
      if (*k == 0) group.inverses_[static_cast<std::size_t>(g)] = h;
    }
  }
  return group;
}

FiniteGroupTable FiniteGroupTable::cyclic(int order) {
  if (order < 1) throw std::invalid_argument("cyclic group order must be positive");
  Permutation shift(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) shift[static_cast<std::size_t>(i)] = (i + 1) % order;
  return generated_by(order, {shift}, "C" + std::to_string(order));
}

FiniteGroupTable FiniteGroupTable::symmetric(int degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    gens.push_back(parse_cycles("(1 2)", degree));
    Permutation cycle(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % degree;
    gens.push_back(cycle);
  }
  return generated_by(degree, gens, "S" + std::to_string(degree));
}

FiniteGroupTable FiniteGroupTable::alternating(int degree) {
  std::vector<Permutation> gens;
  // 3-cycles (1 2 k) generate A_n.
  for (int k = 3; k <= degree; ++k) gens.push_back(parse_cycles("(1 2 " + std::to_string(k) + ")", degree));
  return generated_by(degree, gens, "A" + std::to_string(degree));
}

FiniteGroupTable FiniteGroupTable::dihedral(int n) {
  if (n < 3) throw std::invalid_argument("dihedral group needs n >= 3");
  Permutation rotation(static_cast<std::size_t>(n)), reflection(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rotation[static_cast<std::size_t>(i)] = (i + 1) % n;
    reflection[static_cast<std::size_t>(i)] = (n - i) % n;
  }
  return generated_by(n, {rotation, reflection}, "D" + std::to_string(n));
}

FiniteGroupTable FiniteGroupTable::by_name(std::string_view name) {
  if (name.size() < 2) throw std::invalid_argument("unknown group name \"" + std::string(name) + "\"");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(std::string(name.substr(1)), &used);
    if (used != name.size() - 1) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("unknown group name \"" + std::string(name) + "\"");
  }
  if (n < 1 || n > 12) throw std::invalid_argument("group parameter out of range in \"" + std::string(name) + "\"");
  switch (std::toupper(static_cast<unsigned char>(name[0]))) {
    case 'C': return cyclic(n);
    case 'S': if (n <= 5) return symmetric(n); break;
    case 'A': if (n <= 5) return alternating(n); break;
    case 'D': return dihedral(n);
  }
  throw std::invalid_argument("unknown group name \"" + std::string(name) + "\"");
}

std::optional<int> FiniteGroupTable::index_of(const Permutation& perm) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), perm);
  if (it == elements_.end() || *it != perm) return std::nullopt;
  return static_cast<int>(it - elements_.begin());
}

bool FiniteGroupTable::satisfies_group_axioms() const {
  const int n = order();
  if (elements_.empty() || element(0) != identity_permutation(degree_)) return false;
  for (int g = 0; g < n; ++g) {
    if (multiply(g, 0) != g || multiply(0, g) != g) return false;
    if (multiply(g, inverse(g)) != 0 || multiply(inverse(g), g) != 0) return false;
    for (int h = 0; h < n; ++h) {
      const int gh = multiply(g, h);
      if (gh < 0 || gh >= n) return false;
      if (element(gh) != compose(element(g), element(h))) return false;
      for (int k = 0; k < n; ++k) {
        if (multiply(gh, k) != multiply(g, multiply(h, k))) return false;
      }
    }
  }
  return true;
}

Subgroup generated_subgroup(const FiniteGroupTable& group, const std::vector<int>& generators) {
  std::vector<bool> in(static_cast<std::size_t>(group.order()), false);
  in[0] = true;
  std::vector<int> members{0};
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int g : generators) {
      const int x = group.multiply(members[i], g);
      if (!in[static_cast<std::size_t>(x)]) {
        in[static_cast<std::size_t>(x)] = true;
        members.push_back(x);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_subgroup(const FiniteGroupTable& group, const Subgroup& subset) {
  if (subset.empty()) return false;
  std::vector<bool> in(static_cast<std::size_t>(group.order()), false);
  for (int x : subset) {
    if (x < 0 || x >= group.order()) return false;
    in[static_cast<std::size_t>(x)] = true;
  }
  for (int x : subset) {
    for (int y : subset) {
      if (!in[static_cast<std::size_t>(group.multiply(x, group.inverse(y)))]) return false;
    }
  }
  return true;
}

std::vector<Subgroup> all_subgroups(const FiniteGroupTable& group) {
  std::set<Subgroup> found{Subgroup{0}};
  std::vector<Subgroup> frontier{Subgroup{0}};
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const Subgroup& h : frontier) {
      std::vector<bool> in(static_cast<std::size_t>(group.order()), false);
      for (int x : h) in[static_cast<std::size_t>(x)] = true;
      for (int g = 0; g < group.order(); ++g) {
        if (in[static_cast<std::size_t>(g)]) continue;
        std::vector<int> gens = h;
        gens.push_back(g);
        Subgroup joined = generated_subgroup(group, gens);
        if (found.insert(joined).second) next.push_back(std::move(joined));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) { return x.size() < y.size(); });
  return out;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroupTable& group) {
  std::vector<bool> assigned(static_cast<std::size_t>(group.order()), false);
  std::vector<std::vector<int>> classes;
  for (int g = 0; g < group.order(); ++g) {
    if (assigned[static_cast<std::size_t>(g)]) continue;
    std::set<int> orbit;
    for (int u = 0; u < group.order(); ++u) orbit.insert(group.conjugate(g, u));
    for (int x : orbit) assigned[static_cast<std::size_t>(x)] = true;
    classes.emplace_back(orbit.begin(), orbit.end());
  }
  return classes;
}

std::vector<int> centralizer(const FiniteGroupTable& group, int g, const Subgroup* within) {
  std::vector<int> out;
  auto consider = [&](int u) {
    if (group.multiply(u, g) == group.multiply(g, u)) out.push_back(u);
  };
  if (within) {
    for (int u : *within) consider(u);
  } else {
    for (int u = 0; u < group.order(); ++u) consider(u);
  }
  return out;
}

TestFunction delta_function(const FiniteGroupTable& group, int g) {
  TestFunction phi(static_cast<std::size_t>(group.order()));
  phi[static_cast<std::size_t>(g)] = 1;
  return phi;
}

Rational orbital_pairing(const FiniteGroupTable& group, int gamma, const TestFunction& phi) {
  if (static_cast<int>(phi.size()) != group.order()) throw std::invalid_argument("test function has wrong size");
  std::set<int> orbit;
  for (int u = 0; u < group.order(); ++u) orbit.insert(group.conjugate(gamma, u));
  Rational sum = 0;
  for (int x : orbit) sum += phi[static_cast<std::size_t>(x)];
  return sum;
}

int induced_trace(const FiniteGroupTable& group, const Subgroup& sub, int g) {
  require_subgroup(group, sub);
  std::vector<bool> in_sub(static_cast<std::size_t>(group.order()), false);
  for (int x : sub) in_sub[static_cast<std::size_t>(x)] = true;
  // One representative w per left coset w Gamma.
  std::vector<bool> covered(static_cast<std::size_t>(group.order()), false);
  int fixed = 0;
  for (int w = 0; w < group.order(); ++w) {
    if (covered[static_cast<std::size_t>(w)]) continue;
    for (int x : sub) covered[static_cast<std::size_t>(group.multiply(w, x))] = true;
    const int conj = group.multiply(group.multiply(group.inverse(w), g), w);
    if (in_sub[static_cast<std::size_t>(conj)]) ++fixed;
  }
  return fixed;
}

Rational spectral_side(const FiniteGroupTable& group, const Subgroup& sub, const TestFunction& phi) {
  require_subgroup(group, sub);
  Rational sum = 0;
  for (int g = 0; g < group.order(); ++g) {
    const Rational& value = phi[static_cast<std::size_t>(g)];
    if (value != 0) sum += value * induced_trace(group, sub, g);
  }
  return sum;
}

Rational geometric_side(const FiniteGroupTable& group, const Subgroup& sub, const TestFunction& phi) {
  require_subgroup(group, sub);
  std::vector<bool> seen(static_cast<std::size_t>(group.order()), false);
  Rational sum = 0;
  for (int gamma : sub) {
    if (seen[static_cast<std::size_t>(gamma)]) continue;
    for (int u : sub) seen[static_cast<std::size_t>(group.conjugate(gamma, u))] = true;
    const auto big = static_cast<long>(centralizer(group, gamma).size());
    const auto small = static_cast<long>(centralizer(group, gamma, &sub).size());
    sum += Rational(big, small) * orbital_pairing(group, gamma, phi);
  }
  return sum;
}

TraceFormulaResult verify_trace_formula(const FiniteGroupTable& group, const Subgroup& sub) {
  require_subgroup(group, sub);
  TraceFormulaResult result;
  for (int g = 0; g < group.order(); ++g) {
    const TestFunction phi = delta_function(group, g);
    result.spectral.push_back(spectral_side(group, sub, phi));
    result.geometric.push_back(geometric_side(group, sub, phi));
    if (result.holds && result.spectral.back() != result.geometric.back()) {
      result.holds = false;
      result.witness = g;
    }
  }
  return result;
}

}  // namespace orbitkit
