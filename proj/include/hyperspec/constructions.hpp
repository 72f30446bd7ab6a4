#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperspec/hyperring.hpp"

namespace hyperspec {

// Ordinary commutative unital ring given by tables. Used as raw material for
// the trivial-hyperaddition embedding and for unit-orbit quotients.
struct RingSpec {
  std::string name;
  int n = 0;
  Elem zero = 0;
  Elem one = 1;
  std::vector<Elem> add;  // n*n row-major
  std::vector<Elem> mul;

  Elem add_cell(Elem a, Elem b) const { return add[static_cast<std::size_t>(a) * n + b]; }
  Elem mul_cell(Elem a, Elem b) const { return mul[static_cast<std::size_t>(a) * n + b]; }
};

RingSpec ring_mod(int m);

struct RingCheck {
  bool ok = true;
  std::string detail;
  std::optional<std::vector<Elem>> witness;
};

RingCheck check_ring(const RingSpec& r);

// Singleton hypersums; every commutative unital ring embeds this way.
HyperringSpec ring_to_hyperring(const RingSpec& r);

struct SubgroupCheck {
  bool ok = true;
  std::string detail;
};

// g must be a subgroup of the unit group of r.
SubgroupCheck check_unit_subgroup(const RingSpec& r, const std::vector<Elem>& g);

// Krasner quotient R/G: points are multiplicative orbits aG, the hypersum
// aG + bG collects the orbits meeting the setwise sum, products multiply
// representatives. check_unit_subgroup failures raise PreconditionError.
HyperringSpec quotient_hyperring(const RingSpec& r, const std::vector<Elem>& g,
                                 const std::string& name = "");

std::vector<std::string> builtin_names();
bool is_builtin(const std::string& name);
HyperringSpec builtin(const std::string& name);

}  // namespace hyperspec
