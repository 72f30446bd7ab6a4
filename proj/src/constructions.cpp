#include "hyperspec/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hyperspec/error.hpp"

namespace hyperspec {

RingSpec ring_mod(int m) {
  if (m < 1 || m > kMaxCarrier) throw PreconditionError("modulus out of range");
  RingSpec r;
  r.name = "Z" + std::to_string(m);
  r.n = m;
  r.zero = 0;
  r.one = m == 1 ? 0 : 1;
  r.add.resize(static_cast<std::size_t>(m) * m);
  r.mul.resize(static_cast<std::size_t>(m) * m);
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b) {
      r.add[static_cast<std::size_t>(a) * m + b] = (a + b) % m;
      r.mul[static_cast<std::size_t>(a) * m + b] = (a * b) % m;
    }
  return r;
}

RingCheck check_ring(const RingSpec& r) {
  auto fail = [](std::string d, std::vector<Elem> w) {
    return RingCheck{false, std::move(d), std::move(w)};
  };
  if (r.n < 1 || r.n > kMaxCarrier) return fail("bad carrier size", {});
  if (r.zero < 0 || r.zero >= r.n || r.one < 0 || r.one >= r.n)
    return fail("distinguished elements out of range", {});
  if (r.add.size() != static_cast<std::size_t>(r.n) * r.n ||
      r.mul.size() != static_cast<std::size_t>(r.n) * r.n)
    return fail("table shape mismatch", {});
  for (Elem v : r.add)
    if (v < 0 || v >= r.n) return fail("add entry out of range", {v});
  for (Elem v : r.mul)
    if (v < 0 || v >= r.n) return fail("mul entry out of range", {v});
  for (Elem a = 0; a < r.n; ++a)
    for (Elem b = 0; b < r.n; ++b) {
      if (r.add_cell(a, b) != r.add_cell(b, a)) return fail("add not commutative", {a, b});
      if (r.mul_cell(a, b) != r.mul_cell(b, a)) return fail("mul not commutative", {a, b});
    }
  for (Elem a = 0; a < r.n; ++a) {
    if (r.add_cell(a, r.zero) != a) return fail("zero not neutral", {a});
    if (r.mul_cell(a, r.one) != a) return fail("one not neutral", {a});
    bool has_neg = false;
    for (Elem b = 0; b < r.n; ++b) has_neg |= r.add_cell(a, b) == r.zero;
    if (!has_neg) return fail("no additive inverse", {a});
  }
  for (Elem a = 0; a < r.n; ++a)
    for (Elem b = 0; b < r.n; ++b)
      for (Elem c = 0; c < r.n; ++c) {
        if (r.add_cell(r.add_cell(a, b), c) != r.add_cell(a, r.add_cell(b, c)))
          return fail("add not associative", {a, b, c});
        if (r.mul_cell(r.mul_cell(a, b), c) != r.mul_cell(a, r.mul_cell(b, c)))
          return fail("mul not associative", {a, b, c});
        if (r.mul_cell(a, r.add_cell(b, c)) !=
            r.add_cell(r.mul_cell(a, b), r.mul_cell(a, c)))
          return fail("not distributive", {a, b, c});
      }
  return {};
}

HyperringSpec ring_to_hyperring(const RingSpec& r) {
  RingCheck chk = check_ring(r);
  if (!chk.ok) throw PreconditionError("not a commutative unital ring: " + chk.detail);
  HyperringSpec h;
  h.name = r.name;
  h.n = r.n;
  h.zero = r.zero;
  h.one = r.one;
  h.add.resize(static_cast<std::size_t>(r.n) * r.n);
  h.mul = r.mul;
  for (Elem a = 0; a < r.n; ++a)
    for (Elem b = 0; b < r.n; ++b)
      h.add[static_cast<std::size_t>(a) * r.n + b] = Subset::single(r.add_cell(a, b));
  for (Elem a = 0; a < r.n; ++a) h.labels.push_back(std::to_string(a));
  return h;
}

SubgroupCheck check_unit_subgroup(const RingSpec& r, const std::vector<Elem>& g) {
  RingCheck rc = check_ring(r);
  if (!rc.ok) return {false, "base is not a ring: " + rc.detail};
  if (g.empty()) return {false, "empty subgroup"};
  std::set<Elem> gs(g.begin(), g.end());
  if (gs.size() != g.size()) return {false, "repeated subgroup element"};
  for (Elem x : gs)
    if (x < 0 || x >= r.n) return {false, "subgroup element out of range"};
  if (!gs.count(r.one)) return {false, "subgroup misses 1"};
  for (Elem x : gs) {
    bool invertible = false;
    for (Elem y = 0; y < r.n; ++y) invertible |= r.mul_cell(x, y) == r.one;
    if (!invertible) return {false, "element " + std::to_string(x) + " is not a unit"};
    for (Elem y : gs)
      if (!gs.count(r.mul_cell(x, y)))
        return {false, "not closed under products: " + std::to_string(x) + "*" +
                           std::to_string(y)};
  }
  // closure + finiteness + 1 forces inverses, no separate scan needed
  return {};
}

HyperringSpec quotient_hyperring(const RingSpec& r, const std::vector<Elem>& g,
                                 const std::string& name) {
  SubgroupCheck chk = check_unit_subgroup(r, g);
  if (!chk.ok) throw PreconditionError("bad unit subgroup: " + chk.detail);

  std::vector<int> orbit_of(static_cast<std::size_t>(r.n), -1);
  std::vector<Subset> orbits;
  auto add_orbit = [&](Elem probe) {
    Subset orb;
    for (Elem x : g) orb.insert(r.mul_cell(probe, x));
    int id = static_cast<int>(orbits.size());
    for (Elem m : orb.elements()) orbit_of[static_cast<std::size_t>(m)] = id;
    orbits.push_back(orb);
  };
  // zero's orbit ({0}, since 0 absorbs) is pinned first; the rest scan in
  // element order, so each orbit is discovered at its least member
  add_orbit(r.zero);
  for (Elem a = 0; a < r.n; ++a)
    if (orbit_of[static_cast<std::size_t>(a)] == -1) add_orbit(a);

  const int q = static_cast<int>(orbits.size());
  HyperringSpec h;
  h.name = name.empty() ? r.name + "/G" : name;
  h.n = q;
  h.zero = 0;
  h.one = orbit_of[static_cast<std::size_t>(r.one)];
  h.add.resize(static_cast<std::size_t>(q) * q);
  h.mul.resize(static_cast<std::size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      Subset sum;
      for (Elem x : orbits[static_cast<std::size_t>(a)].elements())
        for (Elem y : orbits[static_cast<std::size_t>(b)].elements())
          sum.insert(orbit_of[static_cast<std::size_t>(r.add_cell(x, y))]);
      h.add[static_cast<std::size_t>(a) * q + b] = sum;
      Elem xa = orbits[static_cast<std::size_t>(a)].min();
      Elem yb = orbits[static_cast<std::size_t>(b)].min();
      h.mul[static_cast<std::size_t>(a) * q + b] =
          orbit_of[static_cast<std::size_t>(r.mul_cell(xa, yb))];
    }
  for (int a = 0; a < q; ++a) {
    std::string lab = "{";
    bool first = true;
    for (Elem m : orbits[static_cast<std::size_t>(a)].elements()) {
      if (!first) lab += ",";
      lab += std::to_string(m);
      first = false;
    }
    h.labels.push_back(lab + "}");
  }
  return h;
}

namespace {

HyperringSpec make_k2() {
  HyperringSpec h;
  h.name = "K2";
  h.n = 2;
  h.zero = 0;
  h.one = 1;
  h.add = {Subset::single(0), Subset::single(1), Subset::single(1), Subset::of({0, 1})};
  h.mul = {0, 0, 0, 1};
  h.labels = {"0", "1"};
  return h;
}

HyperringSpec make_sign() {
  // indices 0, 1, 2 stand for 0, 1, -1
  HyperringSpec h;
  h.name = "sign";
  h.n = 3;
  h.zero = 0;
  h.one = 1;
  auto s = [](std::initializer_list<Elem> xs) { return Subset::of(xs); };
  h.add = {s({0}), s({1}), s({2}),
           s({1}), s({1}), s({0, 1, 2}),
           s({2}), s({0, 1, 2}), s({2})};
  h.mul = {0, 0, 0, 0, 1, 2, 0, 2, 1};
  h.labels = {"0", "1", "-1"};
  return h;
}

HyperringSpec make_broken_a4() {
  HyperringSpec h = make_k2();
  h.name = "broken-A4";
  h.add[3] = Subset::single(1);  // 1+1 = {1}: nothing negates 1
  return h;
}

HyperringSpec make_broken_distrib() {
  HyperringSpec h = ring_to_hyperring(ring_mod(3));
  h.name = "broken-distrib";
  // 2*2 = 2 keeps the monoid laws but breaks 2*(1+1) = 2*1 + 2*1
  h.mul[8] = 2;
  return h;
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"K2",          "sign",   "Z4",  "Z6",  "Z8",
          "Z12",         "Z5modG", "Z7modG", "Z9modG", "degenerate1",
          "broken-A4",   "broken-distrib"};
}

bool is_builtin(const std::string& name) {
  auto names = builtin_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

HyperringSpec builtin(const std::string& name) {
  if (name == "K2") return make_k2();
  if (name == "sign") return make_sign();
  if (name == "Z4") return ring_to_hyperring(ring_mod(4));
  if (name == "Z6") return ring_to_hyperring(ring_mod(6));
  if (name == "Z8") return ring_to_hyperring(ring_mod(8));
  if (name == "Z12") return ring_to_hyperring(ring_mod(12));
  if (name == "Z5modG") return quotient_hyperring(ring_mod(5), {1, 4}, "Z5modG");
  if (name == "Z7modG") return quotient_hyperring(ring_mod(7), {1, 2, 4}, "Z7modG");
  if (name == "Z9modG")
    return quotient_hyperring(ring_mod(9), {1, 2, 4, 5, 7, 8}, "Z9modG");
  if (name == "degenerate1") {
    HyperringSpec h = ring_to_hyperring(ring_mod(1));
    h.name = "degenerate1";
    return h;
  }
  if (name == "broken-A4") return make_broken_a4();
  if (name == "broken-distrib") return make_broken_distrib();
  throw FormatError("BAD_VALUE", "builtin", "unknown builtin '" + name + "'");
}

}  // namespace hyperspec
