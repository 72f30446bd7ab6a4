#include "hyperspec/topology.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hyperspec {

bool FiniteSpace::is_closed(const Bits& s) const {
  for (const auto& k : closed_sets)
    if (k == s) return true;
  return false;
}

std::vector<Bits> FiniteSpace::open_sets() const {
  std::vector<Bits> opens;
  opens.reserve(closed_sets.size());
  for (const auto& k : closed_sets) opens.push_back(k.complement());
  std::sort(opens.begin(), opens.end(),
            [](const Bits& a, const Bits& b) { return canonical_less(a, b); });
  return opens;
}

FiniteSpace space_from_closed_subbasis(int n, const std::vector<Bits>& subbasis,
                                       std::vector<std::string> labels) {
  FiniteSpace sp;
  sp.n_points = n;
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  if (static_cast<int>(labels.size()) != n)
    throw FormatError("BAD_SHAPE", "labels", "label list does not match the point count");
  sp.point_labels = std::move(labels);
  sp.provenance.kind = "subbasis";
  sp.provenance.subbasis = subbasis;

  std::vector<Bits> fam;
  std::set<Bits> seen;
  auto push = [&](const Bits& b) {
    if (seen.insert(b).second) fam.push_back(b);
  };
  push(Bits(n));
  push(Bits::full(n));
  for (const auto& b : subbasis) {
    if (b.size() != n)
      throw FormatError("OUT_OF_RANGE", "subbasis", "member does not fit the point count");
    push(b);
  }
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      push(fam[i] | fam[j]);
      push(fam[i] & fam[j]);
    }
  std::sort(fam.begin(), fam.end(),
            [](const Bits& a, const Bits& b) { return canonical_less(a, b); });
  sp.closed_sets = std::move(fam);
  return sp;
}

Bits closure_of(const FiniteSpace& s, const Bits& a) {
  Bits acc = s.full_set();
  for (const auto& k : s.closed_sets)
    if (a.subset_of(k)) acc &= k;
  return acc;
}

T0Check is_T0(const FiniteSpace& s) {
  std::vector<Bits> cl;
  cl.reserve(static_cast<std::size_t>(s.n_points));
  for (int x = 0; x < s.n_points; ++x) {
    Bits pt(s.n_points);
    pt.insert(x);
    cl.push_back(closure_of(s, pt));
  }
  for (int i = 0; i < s.n_points; ++i)
    for (int j = i + 1; j < s.n_points; ++j)
      if (cl[i] == cl[j]) return {false, std::pair<int, int>{i, j}};
  return {true, std::nullopt};
}

bool is_irreducible(const FiniteSpace& s, const Bits& k) {
  if (k.empty()) throw PreconditionError("irreducibility is asked of nonempty closed sets");
  if (!s.is_closed(k)) throw PreconditionError("irreducibility is asked of closed sets");
  std::vector<const Bits*> below;
  for (const auto& c : s.closed_sets)
    if (c.subset_of(k) && !(c == k)) below.push_back(&c);
  for (std::size_t i = 0; i < below.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if ((*below[i] | *below[j]) == k) return false;
  return true;
}

SoberCheck is_sober(const FiniteSpace& s) {
  std::vector<Bits> cl;
  for (int x = 0; x < s.n_points; ++x) {
    Bits pt(s.n_points);
    pt.insert(x);
    cl.push_back(closure_of(s, pt));
  }
  for (const auto& k : s.closed_sets) {
    if (k.empty() || !is_irreducible(s, k)) continue;
    int generic = 0;
    for (int x = 0; x < s.n_points; ++x)
      if (cl[x] == k) ++generic;
    if (generic != 1) return {false, k, generic};
  }
  return {true, std::nullopt, 0};
}

namespace {

// Greedily drops redundant members, then re-verifies the subcover.
bool shrink_and_verify_cover(const Bits& u, std::vector<const Bits*> cover) {
  for (std::size_t i = 0; i < cover.size();) {
    Bits rest(u.size());
    for (std::size_t j = 0; j < cover.size(); ++j)
      if (j != i) rest |= *cover[j];
    if (u.subset_of(rest)) cover.erase(cover.begin() + static_cast<long>(i));
    else ++i;
  }
  Bits uni(u.size());
  for (const Bits* c : cover) uni |= *c;
  return u.subset_of(uni);
}

bool qc_by_open_covers(const Bits& u, const std::vector<Bits>& opens,
                       const CoverPolicy& pol) {
  const int m = static_cast<int>(opens.size());
  // The whole open family covers u.
  {
    std::vector<const Bits*> all;
    for (const auto& o : opens) all.push_back(&o);
    if (!shrink_and_verify_cover(u, all)) return false;
  }
  for (const auto& o : opens)
    if (u.subset_of(o) && !shrink_and_verify_cover(u, {&o})) return false;
  if (m <= pol.pair_cap) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < i; ++j)
        if (u.subset_of(opens[i] | opens[j]) &&
            !shrink_and_verify_cover(u, {&opens[i], &opens[j]}))
          return false;
  }
  Rng rng(pol.seed);
  for (int t = 0; t < pol.random_covers; ++t) {
    std::vector<const Bits*> fam;
    int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(m, 8))));
    for (int k = 0; k < size; ++k) fam.push_back(&opens[rng.below(static_cast<std::uint64_t>(m))]);
    Bits uni(u.size());
    for (const Bits* c : fam) uni |= *c;
    if (u.subset_of(uni) && !shrink_and_verify_cover(u, fam)) return false;
  }
  return true;
}

// Dual route: closed families whose traces on u intersect to nothing must
// admit a finite subfamily that already does.
bool qc_by_closed_traces(const FiniteSpace& s, const Bits& u, const CoverPolicy& pol) {
  const auto& closed = s.closed_sets;
  const int m = static_cast<int>(closed.size());
  auto trace_empty = [&](const std::vector<const Bits*>& fam) {
    Bits acc = u;
    for (const Bits* k : fam) acc &= *k;
    return acc.empty();
  };
  auto shrink_ok = [&](std::vector<const Bits*> fam) {
    for (std::size_t i = 0; i < fam.size();) {
      std::vector<const Bits*> trial = fam;
      trial.erase(trial.begin() + static_cast<long>(i));
      if (trace_empty(trial)) fam = std::move(trial);
      else ++i;
    }
    return trace_empty(fam);
  };
  for (const auto& k : closed) {
    std::vector<const Bits*> single{&k};
    if (trace_empty(single) && !shrink_ok(single)) return false;
  }
  if (m <= pol.pair_cap) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < i; ++j) {
        std::vector<const Bits*> fam{&closed[i], &closed[j]};
        if (trace_empty(fam) && !shrink_ok(fam)) return false;
      }
  }
  Rng rng(pol.seed + 1);
  for (int t = 0; t < pol.random_covers; ++t) {
    std::vector<const Bits*> fam;
    int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(m, 8))));
    for (int k = 0; k < size; ++k)
      fam.push_back(&closed[rng.below(static_cast<std::uint64_t>(m))]);
    if (trace_empty(fam) && !shrink_ok(fam)) return false;
  }
  return true;
}

}  // namespace

bool is_quasi_compact_subset(const FiniteSpace& s, const Bits& u, const CoverPolicy& pol) {
  if (!s.is_open(u)) throw PreconditionError("quasi-compactness is asked of open subsets");
  std::vector<Bits> opens = s.open_sets();
  bool via_covers = qc_by_open_covers(u, opens, pol);
  bool via_traces = qc_by_closed_traces(s, u, pol);
  if (via_covers != via_traces)
    throw InternalError("open-cover and finite-intersection routes disagree");
  return via_covers;
}

SpectralVerdict spectral_verdict(const FiniteSpace& s, const CoverPolicy& pol) {
  SpectralVerdict v;
  v.t0 = is_T0(s);
  v.sober = is_sober(s);
  v.quasi_compact = is_quasi_compact_subset(s, s.full_set(), pol);

  std::vector<Bits> opens = s.open_sets();
  std::map<Bits, int> open_index;
  for (std::size_t i = 0; i < opens.size(); ++i) open_index[opens[i]] = static_cast<int>(i);
  std::vector<bool> qc(opens.size());
  for (std::size_t i = 0; i < opens.size(); ++i)
    qc[i] = is_quasi_compact_subset(s, opens[i], pol);

  v.qc_open_basis.ok = true;
  for (std::size_t i = 0; i < opens.size() && v.qc_open_basis.ok; ++i) {
    if (!qc[i]) continue;
    for (std::size_t j = 0; j <= i; ++j) {
      if (!qc[j]) continue;
      int k = open_index.at(opens[i] & opens[j]);
      if (!qc[static_cast<std::size_t>(k)]) {
        v.qc_open_basis.ok = false;
        v.qc_open_basis.bad_intersection = {opens[i], opens[j]};
        break;
      }
    }
  }
  for (const auto& u : opens) {
    Bits uni(s.n_points);
    for (std::size_t i = 0; i < opens.size(); ++i)
      if (qc[i] && opens[i].subset_of(u)) uni |= opens[i];
    if (!(uni == u)) {
      v.qc_open_basis.ok = false;
      v.qc_open_basis.inexpressible_open = u;
      break;
    }
  }

  v.spectral = v.t0.ok && v.quasi_compact && v.sober.ok && v.qc_open_basis.ok;
  v.agrees_with_t0 = (v.spectral == v.t0.ok);
  return v;
}

FiniteSpace open_subspace(const FiniteSpace& s, const Bits& u) {
  if (!s.is_open(u)) throw PreconditionError("subspaces are taken on open subsets");
  std::vector<int> pts = u.elements();
  const int k = static_cast<int>(pts.size());
  FiniteSpace sub;
  sub.n_points = k;
  for (int p : pts) sub.point_labels.push_back(s.point_labels[p]);
  sub.provenance.kind = "subspace";
  sub.provenance.parent_point = pts;

  auto restrict_to = [&](const Bits& parent) {
    Bits b(k);
    for (int i = 0; i < k; ++i)
      if (parent.contains(pts[i])) b.insert(i);
    return b;
  };
  std::set<Bits> seen;
  for (const auto& c : s.closed_sets) seen.insert(restrict_to(c));
  sub.closed_sets.assign(seen.begin(), seen.end());
  std::sort(sub.closed_sets.begin(), sub.closed_sets.end(),
            [](const Bits& a, const Bits& b) { return canonical_less(a, b); });
  for (const auto& b : s.provenance.subbasis) sub.provenance.subbasis.push_back(restrict_to(b));
  return sub;
}

}  // namespace hyperspec
