#include "doctest.h"

#include "hyperspec/selftest.hpp"
#include "hyperspec/topology.hpp"

using namespace hyperspec;

namespace {

FiniteSpace sierpinski() {
  return space_from_closed_subbasis(2, {Bits::of(2, {1})});
}

FiniteSpace indiscrete(int n) { return space_from_closed_subbasis(n, {}); }

FiniteSpace discrete(int n) {
  std::vector<Bits> sub;
  for (int i = 0; i < n; ++i) sub.push_back(Bits::of(n, {i}));
  return space_from_closed_subbasis(n, sub);
}

}  // namespace

TEST_CASE("subbasis generation dedups and stays canonical") {
  FiniteSpace s = space_from_closed_subbasis(
      3, {Bits::of(3, {0}), Bits::of(3, {0}), Bits::of(3, {1, 2})});
  REQUIRE(s.closed_sets.size() == 4);
  CHECK(s.closed_sets[0] == Bits(3));
  CHECK(s.closed_sets[1] == Bits::of(3, {0}));
  CHECK(s.closed_sets[2] == Bits::of(3, {1, 2}));
  CHECK(s.closed_sets[3] == Bits::full(3));
  CHECK(s.point_labels == std::vector<std::string>{"0", "1", "2"});
  CHECK(s.provenance.kind == "subbasis");

  CHECK(s.is_closed(Bits::of(3, {0})));
  CHECK_FALSE(s.is_closed(Bits::of(3, {1})));
  CHECK(s.is_open(Bits::of(3, {1, 2})));

  std::vector<Bits> opens = s.open_sets();
  REQUIRE(opens.size() == 4);
  CHECK(opens[0] == Bits(3));
  CHECK(opens[3] == Bits::full(3));
}

TEST_CASE("generated family is closed under union and intersection") {
  FiniteSpace s = space_from_closed_subbasis(
      4, {Bits::of(4, {0, 1}), Bits::of(4, {1, 2}), Bits::of(4, {2, 3})});
  for (const auto& a : s.closed_sets)
    for (const auto& b : s.closed_sets) {
      CHECK(s.is_closed(a | b));
      CHECK(s.is_closed(a & b));
    }
  CHECK(s.is_closed(Bits(4)));
  CHECK(s.is_closed(Bits::full(4)));
}

TEST_CASE("subbasis constructor rejects mismatched shapes") {
  CHECK_THROWS_AS(space_from_closed_subbasis(2, {Bits::of(3, {0})}), FormatError);
  CHECK_THROWS_AS(space_from_closed_subbasis(2, {}, {"only-one"}), FormatError);
}

TEST_CASE("closures") {
  FiniteSpace s = sierpinski();
  CHECK(closure_of(s, Bits::of(2, {1})) == Bits::of(2, {1}));
  CHECK(closure_of(s, Bits::of(2, {0})) == Bits::full(2));
  CHECK(closure_of(s, Bits(2)) == Bits(2));

  FiniteSpace ind = indiscrete(3);
  CHECK(closure_of(ind, Bits::of(3, {1})) == Bits::full(3));
}

TEST_CASE("T0 separation") {
  CHECK(is_T0(sierpinski()).ok);
  CHECK(is_T0(discrete(3)).ok);
  CHECK(is_T0(indiscrete(1)).ok);
  CHECK(is_T0(space_from_closed_subbasis(0, {})).ok);

  T0Check t = is_T0(indiscrete(2));
  CHECK_FALSE(t.ok);
  REQUIRE(t.witness.has_value());
  CHECK(*t.witness == std::pair<int, int>{0, 1});
}

TEST_CASE("irreducibility of closed sets") {
  FiniteSpace s = sierpinski();
  CHECK(is_irreducible(s, Bits::full(2)));
  CHECK(is_irreducible(s, Bits::of(2, {1})));

  FiniteSpace d = discrete(2);
  CHECK_FALSE(is_irreducible(d, Bits::full(2)));
  CHECK(is_irreducible(d, Bits::of(2, {0})));

  CHECK_THROWS_AS(is_irreducible(s, Bits(2)), PreconditionError);
  CHECK_THROWS_AS(is_irreducible(s, Bits::of(2, {0})), PreconditionError);
}

TEST_CASE("sobriety and generic points") {
  CHECK(is_sober(sierpinski()).ok);
  CHECK(is_sober(discrete(4)).ok);

  SoberCheck sc = is_sober(indiscrete(2));
  CHECK_FALSE(sc.ok);
  REQUIRE(sc.witness.has_value());
  CHECK(*sc.witness == Bits::full(2));
  CHECK(sc.witness_generic_count == 2);
}

TEST_CASE("every open of a finite space is quasi-compact") {
  FiniteSpace s = space_from_closed_subbasis(
      5, {Bits::of(5, {0, 1}), Bits::of(5, {2}), Bits::of(5, {3, 4})});
  for (const auto& u : s.open_sets()) CHECK(is_quasi_compact_subset(s, u));
  REQUIRE_FALSE(s.is_open(Bits::of(5, {0})));
  CHECK_THROWS_AS(is_quasi_compact_subset(s, Bits::of(5, {0})), PreconditionError);
}

TEST_CASE("spectrality equals T0 on finite spaces") {
  SpectralVerdict sp = spectral_verdict(sierpinski());
  CHECK(sp.spectral);
  CHECK(sp.t0.ok);
  CHECK(sp.quasi_compact);
  CHECK(sp.sober.ok);
  CHECK(sp.qc_open_basis.ok);
  CHECK(sp.agrees_with_t0);

  SpectralVerdict ind = spectral_verdict(indiscrete(2));
  CHECK_FALSE(ind.spectral);
  CHECK_FALSE(ind.t0.ok);
  CHECK(ind.agrees_with_t0);

  CHECK(spectral_verdict(space_from_closed_subbasis(0, {})).spectral);
  CHECK(spectral_verdict(indiscrete(1)).spectral);
}

TEST_CASE("seeded random spaces keep the two spectrality routes in sync") {
  Rng rng(42);
  for (int i = 0; i < 60; ++i) {
    FiniteSpace s = random_space(rng, 6);
    SpectralVerdict v = spectral_verdict(s);
    CHECK(v.agrees_with_t0);
    CHECK(v.spectral == v.t0.ok);
    CHECK(v.quasi_compact);
    CHECK(v.qc_open_basis.ok);
  }
}

TEST_CASE("open subspaces carry traces, labels and provenance") {
  FiniteSpace s = space_from_closed_subbasis(
      3, {Bits::of(3, {0}), Bits::of(3, {0, 1})}, {"a", "b", "c"});
  Bits u = Bits::of(3, {1, 2});
  REQUIRE(s.is_open(u));
  FiniteSpace sub = open_subspace(s, u);
  CHECK(sub.n_points == 2);
  CHECK(sub.point_labels == std::vector<std::string>{"b", "c"});
  CHECK(sub.provenance.kind == "subspace");
  CHECK(sub.provenance.parent_point == std::vector<int>{1, 2});
  // traces of {0},{0,1},empty,full: {},{0},{0,1(relabeled)}
  REQUIRE(sub.closed_sets.size() == 3);
  CHECK(sub.closed_sets[0] == Bits(2));
  CHECK(sub.closed_sets[1] == Bits::of(2, {0}));
  CHECK(sub.closed_sets[2] == Bits::full(2));

  CHECK_THROWS_AS(open_subspace(s, Bits::of(3, {0, 1})), PreconditionError);
}

TEST_CASE("open subspaces of spectral spaces are spectral") {
  Rng rng(7);
  int spaces = 0, subs = 0;
  while (spaces < 40) {
    FiniteSpace s = random_space(rng, 5);
    SpectralVerdict v = spectral_verdict(s);
    if (!v.spectral) continue;
    ++spaces;
    for (const auto& u : s.open_sets()) {
      FiniteSpace sub = open_subspace(s, u);
      CHECK(spectral_verdict(sub).spectral);
      ++subs;
    }
  }
  CHECK(subs >= spaces);
}
