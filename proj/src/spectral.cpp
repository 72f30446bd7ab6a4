#include "hyperspec/spectral.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace hyperspec {

namespace {

std::string ideal_label(const Hyperring& r, const Hyperideal& i) {
  std::string out = "{";
  bool first = true;
  for (Elem e : i.members.elements()) {
    if (!first) out += ",";
    out += r.label(e);
    first = false;
  }
  return out + "}";
}

}  // namespace

Bits v_set(const Hyperring& r, const LowerTopologySpace& space, const Hyperideal& j) {
  IdealCheck chk = is_hyperideal(r, j.members);
  if (!chk.ok)
    throw PreconditionError("v_set needs a hyperideal, violated clause " +
                            std::string(clause_name(chk.clause)) + ": " + chk.detail);
  Bits out(space.n_points());
  for (int p = 0; p < space.n_points(); ++p)
    if (j.members.subset_of(space.points_are[p].members)) out.insert(p);
  return out;
}

LowerTopologySpace build_lower_topology(const Hyperring& r, const IdealLattice& lat,
                                        Variant variant) {
  LowerTopologySpace sp;
  sp.variant = variant;
  std::vector<int> pts;
  if (variant == Variant::full) {
    for (int i = 0; i < lat.size(); ++i) pts.push_back(i);
  } else {
    pts = lat.proper;
  }
  sp.point_lattice_index = pts;
  sp.point_of_lattice.assign(lat.size(), -1);
  std::vector<std::string> labels;
  for (std::size_t p = 0; p < pts.size(); ++p) {
    sp.point_of_lattice[pts[p]] = static_cast<int>(p);
    sp.points_are.push_back(lat.ideals[pts[p]]);
    labels.push_back(ideal_label(r, lat.ideals[pts[p]]));
  }
  const int np = static_cast<int>(pts.size());
  sp.subbasis_by_ideal.reserve(static_cast<std::size_t>(lat.size()));
  for (int q = 0; q < lat.size(); ++q) {
    Bits b(np);
    for (int p = 0; p < np; ++p)
      if (lat.leq[q][pts[p]]) b.insert(p);
    sp.subbasis_by_ideal.push_back(b);
  }
  sp.base = space_from_closed_subbasis(np, sp.subbasis_by_ideal, std::move(labels));
  return sp;
}

IdentityCheck verify_intersection_identity(const Hyperring& r, const IdealLattice& lat,
                                           const LowerTopologySpace& space,
                                           const SubfamilyPolicy& pol) {
  (void)r;
  IdentityCheck res;
  res.ok = true;
  const Bits all = space.base.full_set();
  res.exhaustive = for_each_subfamily(lat.size(), pol, [&](const std::vector<int>& fam) {
    ++res.families_checked;
    Bits inter = all;
    for (int q : fam) inter &= space.subbasis_by_ideal[q];
    const Bits& rhs = space.subbasis_by_ideal[lat.join_all(fam)];
    if (!(inter == rhs) && res.ok) {
      res.ok = false;
      res.witness_family = fam;
    }
  });
  return res;
}

namespace {

// Fold of the full ideal sets over the positions of `mask`; everything an
// elementwise pick could reach lies in here, and conversely.
Subset masked_fold(const Hyperring& r, const std::vector<Hyperideal>& family,
                   std::uint64_t mask, std::map<std::uint64_t, Subset>& memo) {
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  Subset out;
  int low = __builtin_ctzll(mask);
  std::uint64_t rest = mask & (mask - 1);
  if (rest == 0) {
    out = family[low].members;
  } else {
    // keep left-to-right pick order: fold(prefix) + last ideal
    int high = 63 - __builtin_clzll(mask);
    std::uint64_t prefix = mask & ~(std::uint64_t{1} << high);
    out = set_add(r, masked_fold(r, family, prefix, memo), family[high].members);
  }
  memo.emplace(mask, out);
  return out;
}

}  // namespace

SumDecomposition quasicompact_witness(const Hyperring& r, const IdealLattice& lat,
                                      const LowerTopologySpace& proper_space,
                                      const std::vector<Hyperideal>& family) {
  (void)lat;
  if (proper_space.variant != Variant::proper)
    throw PreconditionError("decompositions are extracted on the proper space");
  if (family.empty()) throw PreconditionError("empty ideal family");
  std::vector<Bits> vsets;
  Bits inter = proper_space.base.full_set();
  for (const auto& i : family) {
    vsets.push_back(v_set(r, proper_space, i));
    inter &= vsets.back();
  }
  if (!inter.empty())
    throw PreconditionError("subbasic sets of the family still meet; no decomposition exists");

  std::vector<int> positions(family.size());
  for (std::size_t i = 0; i < positions.size(); ++i) positions[i] = static_cast<int>(i);
  // For oversized families, shrink first; the subfamily search stays
  // canonical within the reduced family.
  if (family.size() > 20) {
    for (std::size_t i = 0; i < positions.size();) {
      if (positions.size() == 1) break;
      std::vector<int> trial = positions;
      trial.erase(trial.begin() + static_cast<long>(i));
      Bits b = proper_space.base.full_set();
      for (int p : trial) b &= vsets[static_cast<std::size_t>(p)];
      if (b.empty()) positions = std::move(trial);
      else ++i;
    }
  }

  const int f = static_cast<int>(positions.size());
  const Elem one = r.one();
  std::map<std::uint64_t, Subset> memo;
  std::vector<Hyperideal> reduced;
  for (int p : positions) reduced.push_back(family[static_cast<std::size_t>(p)]);

  std::uint64_t chosen = 0;
  for (int size = 1; size <= f && chosen == 0; ++size) {
    // masks of the given popcount in increasing numeric order
    std::uint64_t mask = (std::uint64_t{1} << size) - 1;
    while (mask < (std::uint64_t{1} << f)) {
      if (masked_fold(r, reduced, mask, memo).contains(one)) {
        chosen = mask;
        break;
      }
      std::uint64_t c = mask & -mask, rr = mask + c;
      mask = (((rr ^ mask) >> 2) / c) | rr;
    }
  }
  if (chosen == 0)
    throw InternalError("no subfamily sums to the whole hyperring despite empty intersection");

  SumDecomposition d;
  std::vector<const Subset*> sets;
  for (std::uint64_t m = chosen; m; m &= m - 1) {
    int pos = positions[static_cast<std::size_t>(__builtin_ctzll(m))];
    d.family_positions.push_back(pos);
    sets.push_back(&family[static_cast<std::size_t>(pos)].members);
  }
  const int k = static_cast<int>(sets.size());
  // suffix folds of the untouched ideal sets, for feasibility pruning
  std::vector<Subset> suffix(static_cast<std::size_t>(k) + 1);
  for (int i = k - 1; i >= 0; --i)
    suffix[i] = (i == k - 1) ? *sets[i] : set_add(r, *sets[i], suffix[i + 1]);
  Subset partial;
  for (int i = 0; i < k; ++i) {
    bool found = false;
    for (Elem cand : sets[i]->elements()) {
      Subset next = (i == 0) ? Subset::single(cand)
                             : set_add(r, partial, Subset::single(cand));
      Subset reach = (i == k - 1) ? next : set_add(r, next, suffix[i + 1]);
      if (reach.contains(one)) {
        d.picks.push_back(cand);
        partial = next;
        found = true;
        break;
      }
    }
    if (!found) throw InternalError("pick extraction lost feasibility");
  }

  // Independent re-verification of the certificate.
  std::vector<Subset> singles;
  for (Elem p : d.picks) singles.push_back(Subset::single(p));
  if (!fold_add(r, singles).contains(one))
    throw InternalError("extracted picks do not sum to 1");
  Bits check = proper_space.base.full_set();
  for (int pos : d.family_positions) check &= vsets[static_cast<std::size_t>(pos)];
  if (!check.empty())
    throw InternalError("chosen subfamily does not have empty intersection");
  return d;
}

ClosureIdentityCheck verify_closure_identity(const Hyperring& r,
                                             const LowerTopologySpace& space) {
  ClosureIdentityCheck res;
  res.ok = true;
  for (int p = 0; p < space.n_points(); ++p) {
    Bits pt(space.n_points());
    pt.insert(p);
    if (!(closure_of(space.base, pt) == v_set(r, space, space.points_are[p]))) {
      res.ok = false;
      res.witness_point = p;
      return res;
    }
  }
  return res;
}

TheoremReport verify_theorem(const Hyperring& r, const TheoremOptions& opt) {
  TheoremReport rep;
  try {
    IdealLattice lat = all_hyperideals(r);
    LowerTopologySpace full = build_lower_topology(r, lat, Variant::full);
    LowerTopologySpace prop = build_lower_topology(r, lat, Variant::proper);
    rep.proper_space_empty = prop.n_points() == 0;

    rep.step1_full_space_spectral = spectral_verdict(full.base, opt.covers);
    rep.proper_space_spectral = spectral_verdict(prop.base, opt.covers);

    IdentityCheck on_full = verify_intersection_identity(r, lat, full, opt.subfamilies);
    IdentityCheck on_prop = verify_intersection_identity(r, lat, prop, opt.subfamilies);
    rep.identity_intersection.ok = on_full.ok && on_prop.ok;
    rep.identity_intersection.families_checked =
        on_full.families_checked + on_prop.families_checked;
    rep.identity_intersection.exhaustive = on_full.exhaustive && on_prop.exhaustive;
    rep.identity_intersection.witness_family =
        on_prop.witness_family ? on_prop.witness_family : on_full.witness_family;

    rep.identity_closure = verify_closure_identity(r, prop);

    // Step 2: every subbasic family with empty intersection on the proper
    // space shrinks to a certified finite subfamily.
    auto& s2 = rep.step2_quasi_compact;
    s2.proper_quasi_compact = rep.proper_space_spectral.quasi_compact;
    s2.ok = s2.proper_quasi_compact;
    std::set<std::vector<int>> cores_seen;
    const Bits all_prop = prop.base.full_set();
    s2.exhaustive = for_each_subfamily(lat.size(), opt.subfamilies, [&](const std::vector<int>& fam) {
      ++s2.families_checked;
      Bits inter = all_prop;
      for (int q : fam) inter &= prop.subbasis_by_ideal[q];
      if (!inter.empty()) return;
      ++s2.empty_intersection_families;
      if (all_prop.empty()) {
        // Degenerate one-point ring: the empty sum reaches 1 iff 1 = 0.
        if (!cores_seen.insert(std::vector<int>{}).second) return;
        if (fold_add(r, {}).contains(r.one()))
          s2.decompositions.emplace_back(std::vector<int>{}, SumDecomposition{});
        else
          s2.ok = false;
        return;
      }
      // irredundant core, deterministically
      std::vector<int> core = fam;
      for (std::size_t i = 0; i < core.size();) {
        std::vector<int> trial = core;
        trial.erase(trial.begin() + static_cast<long>(i));
        Bits b = all_prop;
        for (int q : trial) b &= prop.subbasis_by_ideal[q];
        if (b.empty()) core = std::move(trial);
        else ++i;
      }
      if (!cores_seen.insert(core).second) return;
      try {
        std::vector<Hyperideal> ideals;
        for (int q : core) ideals.push_back(lat.ideals[q]);
        SumDecomposition d = quasicompact_witness(r, lat, prop, ideals);
        std::vector<int> as_lattice;
        for (int pos : d.family_positions) as_lattice.push_back(core[static_cast<std::size_t>(pos)]);
        d.family_positions = as_lattice;  // report in lattice indices
        s2.decompositions.emplace_back(core, std::move(d));
      } catch (const Error& e) {
        s2.ok = false;
        if (rep.failure_note.empty()) rep.failure_note = e.what();
      }
    });

    // Step 3: sobriety with the generic-point table, uniqueness via T0.
    auto& s3 = rep.step3_sober;
    s3.sober = rep.proper_space_spectral.sober;
    s3.t0 = rep.proper_space_spectral.t0;
    std::vector<Bits> point_closures;
    for (int p = 0; p < prop.n_points(); ++p) {
      Bits pt(prop.n_points());
      pt.insert(p);
      point_closures.push_back(closure_of(prop.base, pt));
    }
    for (const auto& k : prop.base.closed_sets) {
      if (k.empty() || !is_irreducible(prop.base, k)) continue;
      for (int p = 0; p < prop.n_points(); ++p)
        if (point_closures[static_cast<std::size_t>(p)] == k)
          s3.generic_points.emplace_back(
              k, std::pair<int, int>{p, prop.point_lattice_index[static_cast<std::size_t>(p)]});
    }
    s3.ok = s3.sober.ok && s3.t0.ok && rep.identity_closure.ok;

    // Step 4: the proper space misses exactly the closed singleton {R}.
    auto& s4 = rep.step4_open;
    Bits top_pt(full.n_points());
    top_pt.insert(full.point_of_lattice[static_cast<std::size_t>(lat.top)]);
    Bits proper_pts(full.n_points());
    for (int q : lat.proper)
      proper_pts.insert(full.point_of_lattice[static_cast<std::size_t>(q)]);
    Bits complement = proper_pts.complement();
    s4.complement_closed = full.base.is_closed(complement);
    s4.complement_is_v_top =
        complement == full.subbasis_by_ideal[static_cast<std::size_t>(lat.top)] &&
        complement == top_pt;
    s4.top_closure_is_singleton = closure_of(full.base, top_pt) == top_pt;
    s4.ok = s4.complement_closed && s4.complement_is_v_top && s4.top_closure_is_singleton;

    rep.overall = rep.step1_full_space_spectral.spectral &&
                  rep.step1_full_space_spectral.agrees_with_t0 && s2.ok && s3.ok && s4.ok &&
                  rep.identity_intersection.ok && rep.identity_closure.ok &&
                  rep.proper_space_spectral.spectral &&
                  rep.proper_space_spectral.agrees_with_t0;
  } catch (const Error& e) {
    rep.overall = false;
    rep.failure_note = e.what();
  }
  return rep;
}

}  // namespace hyperspec
