#include "doctest.h"

#include <algorithm>

#include "hyperspec/constructions.hpp"

using namespace hyperspec;

TEST_CASE("modular rings") {
  RingSpec z4 = ring_mod(4);
  CHECK(z4.name == "Z4");
  CHECK(z4.n == 4);
  CHECK(z4.zero == 0);
  CHECK(z4.one == 1);
  CHECK(z4.add_cell(3, 2) == 1);
  CHECK(z4.mul_cell(3, 3) == 1);
  CHECK(z4.mul_cell(2, 2) == 0);
  CHECK(check_ring(z4).ok);

  RingSpec z1 = ring_mod(1);
  CHECK(z1.n == 1);
  CHECK(z1.one == 0);
  CHECK(check_ring(z1).ok);

  CHECK_THROWS_AS(ring_mod(0), PreconditionError);
  CHECK_THROWS_AS(ring_mod(200), PreconditionError);
}

TEST_CASE("ring checking notices broken tables") {
  RingSpec bad = ring_mod(4);
  bad.mul[1 * 4 + 1] = 2;
  RingCheck chk = check_ring(bad);
  CHECK_FALSE(chk.ok);
  CHECK_FALSE(chk.detail.empty());

  RingSpec skew = ring_mod(3);
  skew.add[0 * 3 + 1] = 2;
  CHECK_FALSE(check_ring(skew).ok);

  RingSpec ragged = ring_mod(3);
  ragged.mul.pop_back();
  CHECK_FALSE(check_ring(ragged).ok);
}

TEST_CASE("trivial hyperaddition embeds a ring") {
  HyperringSpec h = ring_to_hyperring(ring_mod(6));
  CHECK(h.n == 6);
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b)
      CHECK(h.add_cell(a, b) == Subset::single((a + b) % 6));
  CHECK(h.label(4) == "4");
  CHECK(check_axioms(h).all_pass());

  RingSpec bad = ring_mod(4);
  bad.mul[1 * 4 + 1] = 2;
  CHECK_THROWS_AS(ring_to_hyperring(bad), PreconditionError);
}

TEST_CASE("unit subgroup screening") {
  RingSpec z5 = ring_mod(5);
  CHECK(check_unit_subgroup(z5, {1, 4}).ok);
  CHECK(check_unit_subgroup(z5, {1}).ok);
  CHECK(check_unit_subgroup(z5, {1, 2, 3, 4}).ok);
  CHECK_FALSE(check_unit_subgroup(z5, {4, 1, 4}).ok);  // duplicates rejected
  CHECK_FALSE(check_unit_subgroup(z5, {1, 3}).ok);     // 3*3=4 escapes
  CHECK_FALSE(check_unit_subgroup(z5, {2, 4}).ok);   // 1 missing
  CHECK_FALSE(check_unit_subgroup(z5, {}).ok);
  CHECK_FALSE(check_unit_subgroup(z5, {1, 7}).ok);   // out of range
  CHECK_FALSE(check_unit_subgroup(ring_mod(6), {1, 2}).ok);  // 2 is no unit
}

TEST_CASE("unit-orbit quotient of Z5") {
  HyperringSpec q = quotient_hyperring(ring_mod(5), {1, 4});
  CHECK(q.name == "Z5/G");
  CHECK(q.n == 3);
  CHECK(q.zero == 0);
  CHECK(q.one == 1);
  CHECK(q.labels == std::vector<std::string>{"{0}", "{1,4}", "{2,3}"});

  CHECK(q.add_cell(0, 1) == Subset::single(1));
  CHECK(q.add_cell(1, 1) == Subset::of({0, 2}));  // 1+4=0, 1+1=2
  CHECK(q.add_cell(1, 2) == Subset::of({1, 2}));  // 1+2=3, 1+3=4
  CHECK(q.add_cell(2, 2) == Subset::of({0, 1}));  // 2+3=0, 2+2=4

  CHECK(q.mul_cell(1, 1) == 1);
  CHECK(q.mul_cell(1, 2) == 2);
  CHECK(q.mul_cell(2, 2) == 1);  // 2*3=6=1 lands in the unit orbit

  CHECK(check_axioms(q).all_pass());
  CHECK(quotient_hyperring(ring_mod(5), {1, 4}, "my-name").name == "my-name");
}

TEST_CASE("quotients stay hyperrings for other subgroups") {
  CHECK(check_axioms(quotient_hyperring(ring_mod(6), {1, 5})).all_pass());
  CHECK(check_axioms(quotient_hyperring(ring_mod(7), {1, 6})).all_pass());
  CHECK(check_axioms(quotient_hyperring(ring_mod(8), {1, 3, 5, 7})).all_pass());
  // the trivial subgroup reproduces the ring itself
  HyperringSpec same = quotient_hyperring(ring_mod(4), {1});
  CHECK(same.n == 4);
  CHECK(same.same_tables(ring_to_hyperring(ring_mod(4))));

  CHECK_THROWS_AS(quotient_hyperring(ring_mod(5), {1, 3}), PreconditionError);
}

TEST_CASE("the sign hyperfield multiplies signs and spreads sums") {
  HyperringSpec s = builtin("sign");
  CHECK(s.n == 3);
  CHECK(s.labels == std::vector<std::string>{"0", "1", "-1"});
  CHECK(s.add_cell(1, 1) == Subset::single(1));
  CHECK(s.add_cell(2, 2) == Subset::single(2));
  CHECK(s.add_cell(1, 2) == Subset::full(3));  // 1 + (-1) is anything
  CHECK(s.mul_cell(2, 2) == 1);
  CHECK(check_axioms(s).all_pass());
}

TEST_CASE("the catalogue") {
  std::vector<std::string> names = builtin_names();
  CHECK(names.size() == 12);
  for (const auto& n : {"K2", "sign", "Z4", "Z6", "Z8", "Z12", "Z5modG", "Z7modG",
                        "Z9modG", "degenerate1", "broken-A4", "broken-distrib"}) {
    INFO(n);
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
    CHECK(is_builtin(n));
    CHECK(builtin(n).name == n);
  }
  CHECK_FALSE(is_builtin("Z99"));
  try {
    builtin("Z99");
    FAIL("unknown builtin accepted");
  } catch (const FormatError& e) {
    CHECK(e.code == "BAD_VALUE");
    CHECK(e.where == "builtin");
  }
}

TEST_CASE("Z7modG has the expected multivalued cell") {
  HyperringSpec q = builtin("Z7modG");
  CHECK(q.n == 3);
  CHECK(q.labels == std::vector<std::string>{"{0}", "{1,2,4}", "{3,5,6}"});
  CHECK(q.add_cell(1, 1) == Subset::of({1, 2}));
  CHECK(q.add_cell(1, 2) == Subset::full(3));  // 1+6=0, 1+5=6, 1+3=4
}
