#pragma once

// The lower-topology hyperspaces over an ideal lattice: points are the
// hyperideals (all of them, or only the proper ones), and the up-sets
// v_set(J) = { I : J subseteq I } form a closed subbasis. verify_theorem
// machine-checks, with witnesses, that the proper-hyperideal hyperspace is
// spectral: the full space is spectral, subbasic families with empty
// intersection shrink to finite ones certified by a decomposition of 1 into
// picks from the ideals, closures of points are exactly the up-sets, and
// the proper space sits openly inside the full one.

#include <optional>
#include <utility>
#include <vector>

#include "hyperspec/ideals.hpp"
#include "hyperspec/topology.hpp"

namespace hyperspec {

enum class Variant { full, proper };

struct LowerTopologySpace {
  Variant variant = Variant::full;
  FiniteSpace base;
  std::vector<Hyperideal> points_are;     // one hyperideal per point
  std::vector<int> point_lattice_index;   // point -> index in the lattice
  std::vector<Bits> subbasis_by_ideal;    // lattice index -> its subbasic closed set
  std::vector<int> point_of_lattice;      // lattice index -> point, -1 if absent

  int n_points() const { return base.n_points; }
};

// { points I : J subseteq I }. J must be a hyperideal of r (it need not be
// a point: on the proper variant J = R gives the empty set).
Bits v_set(const Hyperring& r, const LowerTopologySpace& space, const Hyperideal& j);

LowerTopologySpace build_lower_topology(const Hyperring& r, const IdealLattice& lat,
                                        Variant variant);

struct IdentityCheck {
  bool ok = false;
  std::optional<std::vector<int>> witness_family;  // lattice indices of first failure
  long families_checked = 0;
  bool exhaustive = true;
};

// intersect_λ v_set(I_λ) = v_set(sum_λ I_λ) over subfamilies of the whole
// ideal family; the empty subfamily compares all points against
// v_set(bottom).
IdentityCheck verify_intersection_identity(const Hyperring& r, const IdealLattice& lat,
                                           const LowerTopologySpace& space,
                                           const SubfamilyPolicy& pol = {});

// A finite subfamily of `family` (positions into it) together with one
// element picked from each ideal whose iterated hypersum contains 1.
struct SumDecomposition {
  std::vector<int> family_positions;
  std::vector<Elem> picks;
};

// For a family of ideals whose subbasic sets meet in nothing on the proper
// space, extract the canonically least certified finite subfamily. Throws
// PreconditionError when the intersection is nonempty and InternalError
// when no decomposition exists (impossible for a validated hyperring).
SumDecomposition quasicompact_witness(const Hyperring& r, const IdealLattice& lat,
                                      const LowerTopologySpace& proper_space,
                                      const std::vector<Hyperideal>& family);

struct ClosureIdentityCheck {
  bool ok = false;
  std::optional<int> witness_point;  // first point with closure != v_set
};

// closure_of({I}) = v_set(I) at every point.
ClosureIdentityCheck verify_closure_identity(const Hyperring& r,
                                             const LowerTopologySpace& space);

struct TheoremReport {
  SpectralVerdict step1_full_space_spectral;

  struct Step2 {
    bool ok = false;
    bool proper_quasi_compact = false;
    long families_checked = 0;
    long empty_intersection_families = 0;
    bool exhaustive = true;
    // Distinct irredundant cores reached by the empty-intersection
    // subfamilies, each with its certified decomposition of 1.
    std::vector<std::pair<std::vector<int>, SumDecomposition>> decompositions;
  } step2_quasi_compact;

  struct Step3 {
    bool ok = false;
    SoberCheck sober;
    T0Check t0;
    // irreducible closed set -> (point, lattice index) of its generic point
    std::vector<std::pair<Bits, std::pair<int, int>>> generic_points;
  } step3_sober;

  struct Step4 {
    bool ok = false;
    bool complement_closed = false;
    bool complement_is_v_top = false;
    bool top_closure_is_singleton = false;
  } step4_open;

  IdentityCheck identity_intersection;  // on both variants
  ClosureIdentityCheck identity_closure;
  SpectralVerdict proper_space_spectral;
  bool proper_space_empty = false;
  bool overall = false;
  std::string failure_note;  // set when a component threw
};

struct TheoremOptions {
  SubfamilyPolicy subfamilies;
  CoverPolicy covers;
};

TheoremReport verify_theorem(const Hyperring& r, const TheoremOptions& opt = {});

}  // namespace hyperspec
