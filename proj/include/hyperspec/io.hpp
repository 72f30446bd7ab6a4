#pragma once

// The document format and report rendering. One canonical structured text
// format (JSON keys: name, size, zero, one, add, mul) with first-error
// diagnostics; machine reports are versioned JSON documents, human reports
// are fixed-layout text. Witnesses always render as element labels.

#include <string>

#include "json.hpp"

#include "hyperspec/hyperring.hpp"
#include "hyperspec/ideals.hpp"
#include "hyperspec/spectral.hpp"
#include "hyperspec/topology.hpp"

namespace hyperspec {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr int kDefaultMaxSize = 24;

// Throws FormatError with codes MALFORMED, MISSING_KEY, BAD_SHAPE,
// BAD_VALUE, OUT_OF_RANGE, EMPTY_HYPERSUM, OVER_CAP. The additive identity
// is moved to internal index 0; labels keep the document's own indices so
// witnesses can be checked against the input tables by hand.
HyperringSpec parse_hyperring(const std::string& text, int max_size = kDefaultMaxSize);

// Canonical document; parse(emit(s)) reproduces s for zero-pinned specs.
std::string emit_hyperring(const HyperringSpec& spec);

std::string subset_label(const HyperringSpec& spec, Subset s);

Json axiom_report_json(const HyperringSpec& spec, const AxiomReport& rep);
std::string axiom_report_human(const HyperringSpec& spec, const AxiomReport& rep);

Json lattice_json(const Hyperring& r, const IdealLattice& lat, const LatticeReport& rep);
std::string lattice_human(const Hyperring& r, const IdealLattice& lat,
                          const LatticeReport& rep);

Json spectral_json(const std::string& instance, const std::string& variant,
                   const FiniteSpace& s, const SpectralVerdict& v);
std::string spectral_human(const std::string& instance, const std::string& variant,
                           const FiniteSpace& s, const SpectralVerdict& v);

Json theorem_json(const Hyperring& r, const TheoremReport& rep);
std::string theorem_human(const Hyperring& r, const TheoremReport& rep);

}  // namespace hyperspec
