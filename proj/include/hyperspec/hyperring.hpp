#pragma once

// Finite commutative unital Krasner hyperrings with exhaustive axiom
// checking. Addition is multivalued (each cell of the table is a nonempty
// subset of the carrier), multiplication is single-valued. The checked
// axioms, over all elements a,b,c:
//
//   A1  a+b = b+a
//   A2  a+(b+c) = (a+b)+c             (via the set extension of +)
//   A3  a+0 = {a}                     (exact singleton)
//   A4  a has a unique -a with 0 in a+(-a)
//   A5  a in b+c  implies  c in -b+a  and  b in a+(-c)
//   M-assoc, M-comm                   (multiplicative semigroup, commutative)
//   Zero-absorb  a*0 = 0
//   Distrib      a*(b+c) = a*b + a*c  (as set equality, direction reported)
//   Unital       a*1 = a
//
// Internally the carrier is 0..n-1 with the additive identity pinned at
// index 0; `labels` remembers what each index was called in the source
// (file indices, or friendly names for built-ins) for witness rendering.

#include <optional>
#include <string>
#include <vector>

#include "hyperspec/error.hpp"
#include "hyperspec/subset.hpp"

namespace hyperspec {

struct HyperringSpec {
  std::string name;
  int n = 0;
  Elem zero = 0;
  Elem one = 0;
  std::vector<Subset> add;  // n*n, row-major
  std::vector<Elem> mul;    // n*n, row-major
  std::vector<std::string> labels;

  Subset add_cell(Elem a, Elem b) const { return add[a * n + b]; }
  Elem mul_cell(Elem a, Elem b) const { return mul[a * n + b]; }
  const std::string& label(Elem a) const { return labels[a]; }

  bool same_tables(const HyperringSpec& o) const {
    return n == o.n && zero == o.zero && one == o.one && add == o.add &&
           mul == o.mul;
  }
};

enum class Axiom {
  AddComm,     // A1
  AddAssoc,    // A2
  ZeroScalar,  // A3
  NegUnique,   // A4
  Reversible,  // A5
  MulAssoc,
  MulComm,
  ZeroAbsorb,
  Distrib,
  Unital,
};

const char* axiom_id(Axiom a);  // "A1".."A5", "M-assoc", ...

struct AxiomCheck {
  Axiom axiom;
  bool pass = false;
  // Lexicographically least violating tuple; present exactly when !pass.
  std::optional<std::vector<Elem>> witness;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomCheck> entries;  // fixed order, one per axiom

  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
  const AxiomCheck& entry(Axiom a) const;
};

// A spec whose axiom checks all passed, with the negation table filled in.
struct Hyperring {
  HyperringSpec spec;
  std::vector<Elem> neg;

  int n() const { return spec.n; }
  Elem zero() const { return spec.zero; }
  Elem one() const { return spec.one; }
  Subset add(Elem a, Elem b) const { return spec.add_cell(a, b); }
  Elem mul(Elem a, Elem b) const { return spec.mul_cell(a, b); }
  Elem negate(Elem a) const { return neg[a]; }
  const std::string& label(Elem a) const { return spec.label(a); }
  Subset carrier() const { return Subset::full(spec.n); }
};

// Shape-level validation: tables total, add cells nonempty, indices in
// range. Throws FormatError; axiom checking assumes this has passed.
void check_format(const HyperringSpec& spec);

// Union of a+b over a in A, b in B. Throws PreconditionError on empty
// operands, FormatError on out-of-range members.
Subset set_add(const HyperringSpec& spec, Subset a, Subset b);
inline Subset set_add(const Hyperring& r, Subset a, Subset b) {
  return set_add(r.spec, a, b);
}

// Iterated set addition s1+s2+...+sk; the empty fold is {zero}.
Subset fold_add(const HyperringSpec& spec, const std::vector<Subset>& terms);
inline Subset fold_add(const Hyperring& r, const std::vector<Subset>& terms) {
  return fold_add(r.spec, terms);
}

struct NegSearch {
  enum class Status { found, none, ambiguous } status;
  Elem value = 0;   // valid when found
  Elem second = 0;  // second candidate when ambiguous
};

// Scan row a for the x with zero in a+x.
NegSearch neg_of(const HyperringSpec& spec, Elem a);

// Exhaustive check of every axiom; failures are data, not errors.
AxiomReport check_axioms(const HyperringSpec& spec);

// Carried by validate() when the axiom report is not all-pass.
struct ValidationError : Error {
  AxiomReport report;
  explicit ValidationError(AxiomReport r);
};

// Promote a spec to a Hyperring; throws FormatError or ValidationError.
Hyperring validate(const HyperringSpec& spec);

}  // namespace hyperspec
