#pragma once

// Hyperideals and their lattice. A hyperideal is a carrier subset that
// contains zero, is closed under hyperaddition and negation, and absorbs
// multiplication by arbitrary elements. The lattice of all hyperideals is
// enumerated by closing the principal ideals under pairwise sums; the
// brute-force subset filter lives in selftest.hpp as the cross-check.

#include <optional>
#include <string>
#include <vector>

#include "hyperspec/hyperring.hpp"
#include "hyperspec/subfamily.hpp"

namespace hyperspec {

struct Hyperideal {
  Subset members;
  bool operator==(const Hyperideal&) const = default;
};

struct IdealCheck {
  enum class Clause { contains_zero, add_closed, neg_closed, absorbs };
  bool ok = false;
  Clause clause = Clause::contains_zero;  // first violated clause when !ok
  std::vector<Elem> witness;
  std::string detail;
};

const char* clause_name(IdealCheck::Clause c);

IdealCheck is_hyperideal(const Hyperring& r, Subset s);

// Least hyperideal containing s (closure fixpoint; s may be empty).
Hyperideal generated_ideal(const Hyperring& r, Subset s);

// Least hyperideal containing every member of a nonempty family: the
// closure of their union under set addition. Throws PreconditionError if a
// member is not a hyperideal, InternalError if the result fails the ideal
// check (which would falsify the closure reasoning).
Hyperideal ideal_sum(const Hyperring& r, const std::vector<Hyperideal>& family);

struct IdealLattice {
  // All hyperideals, ordered by cardinality then lexicographic membership,
  // so bottom={zero} is index 0 and top=R is the last index.
  std::vector<Hyperideal> ideals;
  std::vector<std::vector<bool>> leq;   // inclusion, leq[i][j] = ideals[i] <= ideals[j]
  std::vector<std::vector<int>> join;   // join[i][j] = index of ideals[i] + ideals[j]
  int top = 0;
  int bottom = 0;
  std::vector<int> proper;  // every index except top

  int size() const { return static_cast<int>(ideals.size()); }
  int index_of(Subset members) const;  // -1 if absent
  bool is_maximal(int i) const;
  std::vector<int> maximal_elements() const;
  int join_all(const std::vector<int>& indices) const;  // empty family -> bottom
};

IdealLattice all_hyperideals(const Hyperring& r);

// Canonically least maximal hyperideal containing proper ideal `i`.
// Throws NotProperError when i = R, PreconditionError when i is not an
// ideal of r.
Hyperideal maximal_above(const Hyperring& r, const IdealLattice& lat, const Hyperideal& i);
Hyperideal maximal_above(const Hyperring& r, const Hyperideal& i);

struct LatticeReport {
  bool is_complete_lattice = false;
  std::optional<std::pair<int, int>> completeness_witness;  // pair with no least upper bound
  std::vector<int> compact_elements;
  std::optional<int> compactness_witness;  // element with a cover lacking a finite subcover
  bool is_algebraic = false;
  std::optional<int> algebraicity_witness;  // element that is no join of compact ones
  bool exhaustive = true;
};

// Finite lattices must come out complete, all-compact and algebraic; a
// negative entry here signals an engine bug, not a property of the input.
LatticeReport lattice_report(const Hyperring& r, const IdealLattice& lat,
                             const SubfamilyPolicy& pol = {});

}  // namespace hyperspec
