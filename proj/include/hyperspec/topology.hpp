#pragma once

// Finite topological spaces presented by their closed-set family, generated
// from a closed subbasis. Checkers for T0, irreducibility, sobriety,
// quasi-compactness and spectrality, all definitional. For a finite space
// spectral is equivalent to T0; spectral_verdict computes both routes and
// records whether they agree.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperspec/bits.hpp"
#include "hyperspec/error.hpp"
#include "hyperspec/subfamily.hpp"

namespace hyperspec {

struct Provenance {
  std::string kind;            // "subbasis", "subspace", ...
  std::vector<Bits> subbasis;  // generating closed subbasis, if any
  std::vector<int> parent_point;  // for subspaces: point -> parent point
};

struct FiniteSpace {
  int n_points = 0;
  std::vector<std::string> point_labels;
  std::vector<Bits> closed_sets;  // canonical order; contains empty and full
  Provenance provenance;

  Bits full_set() const { return Bits::full(n_points); }
  bool is_closed(const Bits& s) const;
  bool is_open(const Bits& s) const { return is_closed(s.complement()); }
  std::vector<Bits> open_sets() const;  // complements, canonical order
};

// Least family containing the subbasis plus empty and full sets, closed
// under pairwise union and intersection. Labels default to point indices.
FiniteSpace space_from_closed_subbasis(int n, const std::vector<Bits>& subbasis,
                                       std::vector<std::string> labels = {});

// Intersection of all closed supersets of a.
Bits closure_of(const FiniteSpace& s, const Bits& a);

struct T0Check {
  bool ok = false;
  std::optional<std::pair<int, int>> witness;  // distinct points, equal closures
};
T0Check is_T0(const FiniteSpace& s);

// k must be nonempty and closed; true iff no two properly smaller closed
// sets union to k.
bool is_irreducible(const FiniteSpace& s, const Bits& k);

struct SoberCheck {
  bool ok = false;
  std::optional<Bits> witness;     // irreducible closed set without a unique generic point
  int witness_generic_count = 0;
};
SoberCheck is_sober(const FiniteSpace& s);

struct CoverPolicy {
  int pair_cap = 64;       // enumerate all pairs only below this many opens
  int random_covers = 32;  // sampled subfamilies per query
  std::uint64_t seed = 1;
};

// Definitional check that open u is quasi-compact: for the covers drawn
// from the (finite) open family, exhibit an irredundant finite subcover and
// re-verify it. Dually restates the test via closed families with empty
// intersection and insists both routes agree. Finiteness makes every cover
// its own finite subcover, so a false here means the engine is broken.
bool is_quasi_compact_subset(const FiniteSpace& s, const Bits& u,
                             const CoverPolicy& pol = {});

struct SpectralVerdict {
  T0Check t0;
  bool quasi_compact = false;
  SoberCheck sober;
  struct QcBasis {
    bool ok = false;
    // A pair of quasi-compact opens with non-quasi-compact intersection, or
    // an open that is no union of quasi-compact opens.
    std::optional<std::pair<Bits, Bits>> bad_intersection;
    std::optional<Bits> inexpressible_open;
  } qc_open_basis;
  bool spectral = false;           // t0 && quasi_compact && sober && qc_open_basis
  bool agrees_with_t0 = false;     // finite-space cross-check: spectral == t0
};

SpectralVerdict spectral_verdict(const FiniteSpace& s, const CoverPolicy& pol = {});

// Subspace topology on an open subset; closed sets are the traces.
FiniteSpace open_subspace(const FiniteSpace& s, const Bits& u);

}  // namespace hyperspec
