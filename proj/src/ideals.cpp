#include "hyperspec/ideals.hpp"

#include <algorithm>
#include <set>

namespace hyperspec {

const char* clause_name(IdealCheck::Clause c) {
  switch (c) {
    case IdealCheck::Clause::contains_zero: return "contains-zero";
    case IdealCheck::Clause::add_closed: return "add-closed";
    case IdealCheck::Clause::neg_closed: return "neg-closed";
    case IdealCheck::Clause::absorbs: return "absorbs";
  }
  return "?";
}

IdealCheck is_hyperideal(const Hyperring& r, Subset s) {
  if (!s.subset_of(r.carrier()))
    throw PreconditionError("subset has members outside the carrier");
  const auto& spec = r.spec;
  if (!s.contains(r.zero()))
    return {false, IdealCheck::Clause::contains_zero, {}, "zero is not a member"};
  for (Elem a : s.elements())
    for (Elem b : s.elements()) {
      Subset cell = r.add(a, b);
      if (!cell.subset_of(s)) {
        Elem c = (cell - s).min();
        return {false, IdealCheck::Clause::add_closed, {a, b, c},
                spec.label(a) + "+" + spec.label(b) + " contains " + spec.label(c) +
                    " which is not a member"};
      }
    }
  for (Elem a : s.elements())
    if (!s.contains(r.negate(a)))
      return {false, IdealCheck::Clause::neg_closed, {a},
              "-" + spec.label(a) + " = " + spec.label(r.negate(a)) + " is not a member"};
  for (Elem x = 0; x < r.n(); ++x)
    for (Elem a : s.elements())
      if (!s.contains(r.mul(x, a)))
        return {false, IdealCheck::Clause::absorbs, {x, a},
                spec.label(x) + "*" + spec.label(a) + " = " + spec.label(r.mul(x, a)) +
                    " is not a member"};
  return {true, IdealCheck::Clause::contains_zero, {}, ""};
}

Hyperideal generated_ideal(const Hyperring& r, Subset s) {
  if (!s.subset_of(r.carrier()))
    throw PreconditionError("subset has members outside the carrier");
  Subset t = s;
  t.insert(r.zero());
  while (true) {
    Subset grown = t;
    for (Elem a : t.elements()) {
      for (Elem b : t.elements()) grown |= r.add(a, b);
      grown.insert(r.negate(a));
      for (Elem x = 0; x < r.n(); ++x) grown.insert(r.mul(x, a));
    }
    if (grown == t) break;
    t = grown;
  }
  return {t};
}

namespace {

// Closure of a zero-containing subset under set addition. For a union of
// hyperideals this already yields the sum ideal: negation closure and
// absorption pass through hypersums.
Subset add_closure(const Hyperring& r, Subset u) {
  Subset t = u;
  while (true) {
    Subset grown = set_add(r, t, t);
    grown |= t;
    if (grown == t) break;
    t = grown;
  }
  return t;
}

}  // namespace

Hyperideal ideal_sum(const Hyperring& r, const std::vector<Hyperideal>& family) {
  if (family.empty()) throw PreconditionError("ideal_sum needs a nonempty family");
  Subset u;
  for (const auto& i : family) {
    IdealCheck chk = is_hyperideal(r, i.members);
    if (!chk.ok)
      throw PreconditionError("ideal_sum operand violates clause " +
                              std::string(clause_name(chk.clause)) + ": " + chk.detail);
    u |= i.members;
  }
  Subset t = add_closure(r, u);
  IdealCheck chk = is_hyperideal(r, t);
  if (!chk.ok)
    throw InternalError("sum of hyperideals failed the ideal check (" + chk.detail + ")");
  return {t};
}

int IdealLattice::index_of(Subset members) const {
  for (int i = 0; i < size(); ++i)
    if (ideals[i].members == members) return i;
  return -1;
}

bool IdealLattice::is_maximal(int i) const {
  if (i == top) return false;
  for (int k = 0; k < size(); ++k)
    if (leq[i][k] && k != i && k != top) return false;
  return true;
}

std::vector<int> IdealLattice::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (is_maximal(i)) out.push_back(i);
  return out;
}

int IdealLattice::join_all(const std::vector<int>& indices) const {
  int acc = bottom;
  for (int i : indices) acc = join[acc][i];
  return acc;
}

IdealLattice all_hyperideals(const Hyperring& r) {
  std::vector<Subset> fam;
  std::set<std::uint64_t> seen;
  auto push = [&](Subset s) {
    if (seen.insert(s.raw()).second) fam.push_back(s);
  };
  push(generated_ideal(r, Subset{}).members);
  for (Elem a = 0; a < r.n(); ++a) push(generated_ideal(r, Subset::single(a)).members);
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      push(add_closure(r, fam[i] | fam[j]));

  std::sort(fam.begin(), fam.end(),
            [](Subset a, Subset b) { return canonical_less(a, b); });

  IdealLattice lat;
  for (Subset s : fam) lat.ideals.push_back({s});
  const int p = lat.size();
  lat.leq.assign(p, std::vector<bool>(p, false));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      lat.leq[i][j] = lat.ideals[i].members.subset_of(lat.ideals[j].members);
  lat.join.assign(p, std::vector<int>(p, -1));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j <= i; ++j) {
      int k = lat.index_of(add_closure(r, lat.ideals[i].members | lat.ideals[j].members));
      if (k < 0) throw InternalError("ideal family is not closed under sums");
      lat.join[i][j] = lat.join[j][i] = k;
    }
  lat.bottom = lat.index_of(Subset::single(r.zero()));
  lat.top = lat.index_of(r.carrier());
  if (lat.bottom != 0 || lat.top != p - 1)
    throw InternalError("canonical order does not place bottom first and top last");
  for (int i = 0; i < p; ++i)
    if (i != lat.top) lat.proper.push_back(i);
  return lat;
}

Hyperideal maximal_above(const Hyperring& r, const IdealLattice& lat, const Hyperideal& i) {
  IdealCheck chk = is_hyperideal(r, i.members);
  if (!chk.ok)
    throw PreconditionError("maximal_above needs a hyperideal, violated clause " +
                            std::string(clause_name(chk.clause)));
  int idx = lat.index_of(i.members);
  if (idx < 0) throw PreconditionError("ideal is missing from the supplied lattice");
  if (idx == lat.top) throw NotProperError("the full hyperring has no maximal ideal above it");
  for (int m : lat.maximal_elements())
    if (lat.leq[idx][m]) return lat.ideals[m];
  throw InternalError("no maximal hyperideal above a proper ideal");
}

Hyperideal maximal_above(const Hyperring& r, const Hyperideal& i) {
  return maximal_above(r, all_hyperideals(r), i);
}

LatticeReport lattice_report(const Hyperring& r, const IdealLattice& lat,
                             const SubfamilyPolicy& pol) {
  (void)r;
  LatticeReport rep;
  const int p = lat.size();

  // Least upper bounds of every pair must exist within the family.
  rep.is_complete_lattice = true;
  for (int i = 0; i < p && rep.is_complete_lattice; ++i)
    for (int j = 0; j < p; ++j) {
      std::vector<int> ubs;
      for (int k = 0; k < p; ++k)
        if (lat.leq[i][k] && lat.leq[j][k]) ubs.push_back(k);
      bool found = false;
      for (int u : ubs) {
        bool least = true;
        for (int v : ubs)
          if (!lat.leq[u][v]) { least = false; break; }
        if (least) { found = true; break; }
      }
      if (!found) {
        rep.is_complete_lattice = false;
        rep.completeness_witness = {i, j};
        break;
      }
    }

  // Compactness by the cover definition: every subfamily whose join
  // dominates x must shrink to a finite subfamily that still does. The
  // greedy reduction below also produces an irredundant subcover, which is
  // re-verified; in a finite lattice nothing can fail.
  std::vector<bool> compact(p, true);
  rep.exhaustive = for_each_subfamily(p, pol, [&](const std::vector<int>& fam) {
    int j = lat.join_all(fam);
    for (int x = 0; x < p; ++x) {
      if (!lat.leq[x][j]) continue;
      std::vector<int> sub = fam;
      for (std::size_t k = 0; k < sub.size();) {
        std::vector<int> trial = sub;
        trial.erase(trial.begin() + static_cast<long>(k));
        if (lat.leq[x][lat.join_all(trial)]) sub = std::move(trial);
        else ++k;
      }
      if (!lat.leq[x][lat.join_all(sub)]) {
        compact[x] = false;
        if (!rep.compactness_witness) rep.compactness_witness = x;
      }
    }
  });
  for (int x = 0; x < p; ++x)
    if (compact[x]) rep.compact_elements.push_back(x);

  rep.is_algebraic = rep.is_complete_lattice;
  for (int x = 0; x < p && rep.is_algebraic; ++x) {
    std::vector<int> below;
    for (int c : rep.compact_elements)
      if (lat.leq[c][x]) below.push_back(c);
    if (lat.join_all(below) != x) {
      rep.is_algebraic = false;
      rep.algebraicity_witness = x;
    }
  }
  return rep;
}

}  // namespace hyperspec
