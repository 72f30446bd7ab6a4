#pragma once

// The acceptance battery: one result per criterion, shared between the
// `selftest` subcommand and the standalone acceptance runner. Everything
// here is exact; a criterion either holds on every instance checked or
// reports the first counterexample in its detail line.

#include <cstdint>
#include <string>
#include <vector>

#include "hyperspec/ideals.hpp"
#include "hyperspec/topology.hpp"

namespace hyperspec {

// Brute-force cross-check: filter all 2^(n-1) zero-containing subsets
// through is_hyperideal. Canonical order. Only for small carriers.
std::vector<Hyperideal> ideals_by_subset_filter(const Hyperring& r);

// Random closed-subbasis space over at most max_points points.
FiniteSpace random_space(Rng& rng, int max_points);

struct CriterionResult {
  int number = 0;
  std::string title;
  bool pass = false;
  std::string detail;
};

struct AcceptanceOptions {
  std::uint64_t seed = 1;
  int random_spaces = 500;    // cross-oracle batch, spaces with <= 6 points
  int subspace_spaces = 120;  // subspace-property batch, <= 5 points
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});

}  // namespace hyperspec
