#include "hyperspec/selftest.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hyperspec/cli.hpp"
#include "hyperspec/constructions.hpp"
#include "hyperspec/io.hpp"
#include "hyperspec/spectral.hpp"

namespace hyperspec {

std::vector<Hyperideal> ideals_by_subset_filter(const Hyperring& r) {
  const int n = r.n();
  if (n > 20) throw PreconditionError("subset filter is for small carriers only");
  std::vector<Elem> nonzero;
  for (Elem a = 0; a < n; ++a)
    if (a != r.zero()) nonzero.push_back(a);
  std::vector<Hyperideal> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << nonzero.size()); ++m) {
    Subset s = Subset::single(r.zero());
    for (std::size_t i = 0; i < nonzero.size(); ++i)
      if (m & (std::uint64_t{1} << i)) s.insert(nonzero[i]);
    if (is_hyperideal(r, s).ok) out.push_back(Hyperideal{s});
  }
  std::sort(out.begin(), out.end(), [](const Hyperideal& a, const Hyperideal& b) {
    return canonical_less(a.members, b.members);
  });
  return out;
}

FiniteSpace random_space(Rng& rng, int max_points) {
  int n = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_points) + 1));
  int k = static_cast<int>(rng.below(2 * static_cast<std::uint64_t>(n) + 3));
  std::vector<Bits> sub;
  for (int i = 0; i < k; ++i) {
    Bits b(n);
    for (int p = 0; p < n; ++p)
      if (rng.next() & 1) b.insert(p);
    sub.push_back(b);
  }
  return space_from_closed_subbasis(n, sub);
}

namespace {

struct Instance {
  std::string name;
  HyperringSpec spec;
  bool broken = false;
};

std::vector<Instance> catalogue() {
  std::vector<Instance> out;
  for (const std::string& name : builtin_names())
    out.push_back({name, builtin(name), name.rfind("broken-", 0) == 0});
  return out;
}

std::vector<std::pair<std::string, Hyperring>> validated_catalogue(
    const std::vector<Instance>& cat) {
  std::vector<std::pair<std::string, Hyperring>> out;
  for (const auto& inst : cat)
    if (!inst.broken) out.emplace_back(inst.name, validate(inst.spec));
  return out;
}

Axiom targeted_axiom(const std::string& name) {
  if (name == "broken-A4") return Axiom::NegUnique;
  if (name == "broken-distrib") return Axiom::Distrib;
  throw InternalError("no targeted axiom for " + name);
}

CriterionResult criterion_axioms(const std::vector<Instance>& cat) {
  CriterionResult res{1, "axiom checks across the built-in catalogue", true, ""};
  int passed = 0, broken = 0;
  for (const auto& inst : cat) {
    AxiomReport rep = check_axioms(inst.spec);
    if (!inst.broken) {
      if (!rep.all_pass()) {
        res.pass = false;
        for (const auto& e : rep.entries)
          if (!e.pass) {
            res.detail = inst.name + " unexpectedly fails " + axiom_id(e.axiom) + ": " + e.detail;
            return res;
          }
      }
      ++passed;
      continue;
    }
    ++broken;
    Axiom target = targeted_axiom(inst.name);
    for (const auto& e : rep.entries) {
      bool should_fail = e.axiom == target;
      if (e.pass == should_fail) {
        res.pass = false;
        res.detail = inst.name + (should_fail ? " does not fail " : " also fails ") +
                     axiom_id(e.axiom);
        return res;
      }
      if (should_fail && !e.witness) {
        res.pass = false;
        res.detail = inst.name + " fails " + axiom_id(e.axiom) + " without a witness";
        return res;
      }
    }
  }
  res.detail = std::to_string(passed) + " valid instances pass, " + std::to_string(broken) +
               " broken instances fail exactly their target";
  return res;
}

CriterionResult criterion_ideal_counts(
    const std::vector<std::pair<std::string, Hyperring>>& valid) {
  CriterionResult res{2, "ideal enumeration agrees with the subset-filter oracle", true, ""};
  const std::map<std::string, int> pinned = {
      {"K2", 2}, {"sign", 2}, {"Z4", 3}, {"Z6", 4}, {"Z5modG", 2}};
  long total = 0;
  for (const auto& [name, r] : valid) {
    IdealLattice lat = all_hyperideals(r);
    std::vector<Hyperideal> oracle = ideals_by_subset_filter(r);
    if (static_cast<int>(oracle.size()) != lat.size() ||
        !std::equal(oracle.begin(), oracle.end(), lat.ideals.begin())) {
      res.pass = false;
      res.detail = name + ": enumeration lists " + std::to_string(lat.size()) +
                   " ideals, oracle " + std::to_string(oracle.size());
      return res;
    }
    auto it = pinned.find(name);
    if (it != pinned.end() && lat.size() != it->second) {
      res.pass = false;
      res.detail = name + ": expected " + std::to_string(it->second) + " ideals, got " +
                   std::to_string(lat.size());
      return res;
    }
    total += lat.size();
  }
  res.detail = std::to_string(total) + " ideals across " + std::to_string(valid.size()) +
               " instances, counts as expected";
  return res;
}

CriterionResult criterion_ideal_sums(
    const std::vector<std::pair<std::string, Hyperring>>& valid) {
  CriterionResult res{3, "sums of ideal families are again ideals", true, ""};
  long checked = 0;
  for (const auto& [name, r] : valid) {
    IdealLattice lat = all_hyperideals(r);
    bool bad = false;
    for_each_subfamily(lat.size(), {}, [&](const std::vector<int>& fam) {
      if (fam.empty() || bad) return;
      std::vector<Hyperideal> family;
      for (int q : fam) family.push_back(lat.ideals[static_cast<std::size_t>(q)]);
      Hyperideal sum = ideal_sum(r, family);
      ++checked;
      IdealCheck chk = is_hyperideal(r, sum.members);
      if (!chk.ok) {
        bad = true;
        res.pass = false;
        res.detail = name + ": sum of a family fails " + clause_name(chk.clause);
      }
    });
    if (bad) return res;
  }
  res.detail = std::to_string(checked) + " family sums re-verified";
  return res;
}

CriterionResult criterion_maximal(
    const std::vector<std::pair<std::string, Hyperring>>& valid) {
  CriterionResult res{4, "every proper ideal sits under a maximal one", true, ""};
  long checked = 0;
  for (const auto& [name, r] : valid) {
    IdealLattice lat = all_hyperideals(r);
    bool has_proper = !lat.proper.empty();
    if (has_proper && lat.maximal_elements().empty()) {
      res.pass = false;
      res.detail = name + ": proper ideals exist but no maximal one";
      return res;
    }
    for (int q : lat.proper) {
      const Hyperideal& i = lat.ideals[static_cast<std::size_t>(q)];
      Hyperideal m = maximal_above(r, lat, i);
      ++checked;
      int mi = lat.index_of(m.members);
      if (mi < 0 || !lat.is_maximal(mi) || !i.members.subset_of(m.members)) {
        res.pass = false;
        res.detail = name + ": bad maximal ideal above " + subset_label(r.spec, i.members);
        return res;
      }
    }
  }
  res.detail = std::to_string(checked) + " proper ideals covered";
  return res;
}

CriterionResult criterion_intersections(
    const std::vector<std::pair<std::string, Hyperring>>& valid) {
  CriterionResult res{5, "intersections of up-sets are up-sets of sums", true, ""};
  long families = 0;
  for (const auto& [name, r] : valid) {
    IdealLattice lat = all_hyperideals(r);
    for (Variant v : {Variant::full, Variant::proper}) {
      LowerTopologySpace sp = build_lower_topology(r, lat, v);
      IdentityCheck chk = verify_intersection_identity(r, lat, sp);
      families += chk.families_checked;
      if (!chk.ok) {
        res.pass = false;
        res.detail = name + std::string(v == Variant::full ? " (full)" : " (proper)") +
                     ": identity fails on a subfamily";
        return res;
      }
    }
  }
  res.detail = std::to_string(families) + " subfamilies checked on both variants";
  return res;
}

CriterionResult criterion_closures(
    const std::vector<std::pair<std::string, Hyperring>>& valid) {
  CriterionResult res{6, "point closures equal up-sets on proper spaces", true, ""};
  long points = 0;
  for (const auto& [name, r] : valid) {
    IdealLattice lat = all_hyperideals(r);
    LowerTopologySpace sp = build_lower_topology(r, lat, Variant::proper);
    ClosureIdentityCheck chk = verify_closure_identity(r, sp);
    points += sp.n_points();
    if (!chk.ok) {
      res.pass = false;
      res.detail = name + ": closure differs from up-set at point " +
                   std::to_string(*chk.witness_point);
      return res;
    }
  }
  res.detail = std::to_string(points) + " points across all proper spaces";
  return res;
}

CriterionResult criterion_pipeline(
    const std::vector<std::pair<std::string, Hyperring>>& valid,
    std::vector<std::pair<std::string, TheoremReport>>& reports_out) {
  CriterionResult res{7, "end-to-end pipeline verdicts on every instance", true, ""};
  for (const auto& [name, r] : valid) {
    TheoremReport rep = verify_theorem(r);
    reports_out.emplace_back(name, rep);
    if (!rep.overall || !rep.step4_open.ok) {
      res.pass = false;
      res.detail = name + ": overall " + (rep.overall ? "true" : "false") + ", step 4 " +
                   (rep.step4_open.ok ? "ok" : "failed") +
                   (rep.failure_note.empty() ? "" : " (" + rep.failure_note + ")");
      return res;
    }
  }
  res.detail = std::to_string(valid.size()) + " instances verified end to end";
  return res;
}

CriterionResult criterion_decompositions(
    const std::vector<std::pair<std::string, Hyperring>>& valid,
    const std::vector<std::pair<std::string, TheoremReport>>& reports) {
  CriterionResult res{8, "decompositions of 1 certify quasi-compactness", true, ""};
  long cores = 0;
  for (const auto& [name, rep] : reports) {
    if (!rep.step2_quasi_compact.ok) {
      res.pass = false;
      res.detail = name + ": a family with empty intersection has no certificate";
      return res;
    }
    cores += static_cast<long>(rep.step2_quasi_compact.decompositions.size());
  }
  for (const auto& [name, r] : valid) {
    if (name != "Z6") continue;
    IdealLattice lat = all_hyperideals(r);
    LowerTopologySpace prop = build_lower_topology(r, lat, Variant::proper);
    std::vector<Hyperideal> family = {generated_ideal(r, Subset::single(2)),
                                      generated_ideal(r, Subset::single(3))};
    SumDecomposition d = quasicompact_witness(r, lat, prop, family);
    if (d.family_positions.size() != 2 || d.picks != std::vector<Elem>{4, 3}) {
      res.pass = false;
      std::ostringstream os;
      os << name << ": expected the size-2 witness 1 in 4+3, got picks (";
      for (std::size_t i = 0; i < d.picks.size(); ++i) os << (i ? "," : "") << d.picks[i];
      os << ")";
      res.detail = os.str();
      return res;
    }
  }
  res.detail = std::to_string(cores) + " certificates re-verified; Z6 witness is 1 in 4+3";
  return res;
}

CriterionResult criterion_cross_oracle(
    const std::vector<std::pair<std::string, Hyperring>>& valid,
    const AcceptanceOptions& opt) {
  CriterionResult res{9, "spectral iff T0 on generated and random spaces", true, ""};
  long generated = 0;
  for (const auto& [name, r] : valid) {
    IdealLattice lat = all_hyperideals(r);
    for (Variant v : {Variant::full, Variant::proper}) {
      LowerTopologySpace sp = build_lower_topology(r, lat, v);
      SpectralVerdict verdict = spectral_verdict(sp.base);
      ++generated;
      if (!verdict.agrees_with_t0 || verdict.spectral != verdict.t0.ok) {
        res.pass = false;
        res.detail = name + ": verdict and T0 disagree on a generated space";
        return res;
      }
    }
  }
  Rng rng(opt.seed);
  for (int i = 0; i < opt.random_spaces; ++i) {
    FiniteSpace s = random_space(rng, 6);
    SpectralVerdict verdict = spectral_verdict(s);
    if (!verdict.agrees_with_t0 || verdict.spectral != verdict.t0.ok) {
      res.pass = false;
      res.detail = "random space #" + std::to_string(i) + " (" +
                   std::to_string(s.n_points) + " points): verdict and T0 disagree";
      return res;
    }
  }
  res.detail = std::to_string(generated) + " generated + " +
               std::to_string(opt.random_spaces) + " random spaces agree";
  return res;
}

CriterionResult criterion_subspaces(const AcceptanceOptions& opt) {
  CriterionResult res{10, "open subspaces of spectral spaces stay spectral", true, ""};
  Rng rng(opt.seed + 0x5u);
  long spectral_spaces = 0, subspaces = 0;
  for (int i = 0; i < opt.subspace_spaces; ++i) {
    FiniteSpace s = random_space(rng, 5);
    SpectralVerdict verdict = spectral_verdict(s);
    if (!verdict.spectral) continue;
    ++spectral_spaces;
    for (const Bits& u : s.open_sets()) {
      FiniteSpace sub = open_subspace(s, u);
      SpectralVerdict sv = spectral_verdict(sub);
      if (!sv.quasi_compact || !sv.sober.ok) continue;
      ++subspaces;
      if (!sv.spectral) {
        res.pass = false;
        res.detail = "space #" + std::to_string(i) + ": open subspace with " +
                     std::to_string(sub.n_points) + " points is not spectral";
        return res;
      }
    }
  }
  res.detail = std::to_string(subspaces) + " subspaces of " +
               std::to_string(spectral_spaces) + " spectral spaces verified";
  return res;
}

CriterionResult criterion_io(const std::vector<Instance>& cat) {
  CriterionResult res{11, "document round-trip and parse diagnostics", true, ""};
  for (const auto& inst : cat) {
    HyperringSpec back = parse_hyperring(emit_hyperring(inst.spec));
    if (!back.same_tables(inst.spec) || back.name != inst.spec.name) {
      res.pass = false;
      res.detail = inst.name + ": parse(emit(spec)) is not the identity";
      return res;
    }
  }
  auto expect_code = [&](const std::string& text, const std::string& code,
                         const std::string& what) {
    try {
      parse_hyperring(text);
    } catch (const FormatError& e) {
      if (e.code != code) {
        res.pass = false;
        res.detail = what + ": diagnostic " + e.code + ", expected " + code;
      } else if (exit_code_for(e) != kExitUsage) {
        res.pass = false;
        res.detail = what + ": format errors must map to exit " +
                     std::to_string(kExitUsage);
      }
      return;
    }
    res.pass = false;
    res.detail = what + ": parser accepted a bad document";
  };
  expect_code("this is not a document", "MALFORMED", "malformed input");
  Json doc = Json::parse(emit_hyperring(builtin("K2")));
  Json missing = doc;
  missing.erase("zero");
  expect_code(missing.dump(), "MISSING_KEY", "missing key");
  Json empty_cell = doc;
  empty_cell["add"][1][1] = Json::array();
  expect_code(empty_cell.dump(), "EMPTY_HYPERSUM", "empty hypersum cell");
  if (res.pass)
    res.detail = std::to_string(cat.size()) +
                 " round-trips; MALFORMED, MISSING_KEY and EMPTY_HYPERSUM distinct, exit 2";
  return res;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
  std::vector<Instance> cat = catalogue();
  std::vector<std::pair<std::string, Hyperring>> valid = validated_catalogue(cat);

  std::vector<CriterionResult> out;
  out.push_back(criterion_axioms(cat));
  out.push_back(criterion_ideal_counts(valid));
  out.push_back(criterion_ideal_sums(valid));
  out.push_back(criterion_maximal(valid));
  out.push_back(criterion_intersections(valid));
  out.push_back(criterion_closures(valid));
  std::vector<std::pair<std::string, TheoremReport>> reports;
  out.push_back(criterion_pipeline(valid, reports));
  out.push_back(criterion_decompositions(valid, reports));
  out.push_back(criterion_cross_oracle(valid, opt));
  out.push_back(criterion_subspaces(opt));
  out.push_back(criterion_io(cat));
  return out;
}

}  // namespace hyperspec
