#include "hyperspec/hyperring.hpp"

#include <string>

namespace hyperspec {

namespace {

std::string cell_name(const char* table, Elem a, Elem b) {
  return std::string(table) + "[" + std::to_string(a) + "][" + std::to_string(b) + "]";
}

std::string set_str(const HyperringSpec& spec, Subset s) {
  std::string out = "{";
  bool first = true;
  for (Elem e : s.elements()) {
    if (!first) out += ",";
    out += spec.label(e);
    first = false;
  }
  return out + "}";
}

}  // namespace

const char* axiom_id(Axiom a) {
  switch (a) {
    case Axiom::AddComm: return "A1";
    case Axiom::AddAssoc: return "A2";
    case Axiom::ZeroScalar: return "A3";
    case Axiom::NegUnique: return "A4";
    case Axiom::Reversible: return "A5";
    case Axiom::MulAssoc: return "M-assoc";
    case Axiom::MulComm: return "M-comm";
    case Axiom::ZeroAbsorb: return "Zero-absorb";
    case Axiom::Distrib: return "Distrib";
    case Axiom::Unital: return "Unital";
  }
  return "?";
}

const AxiomCheck& AxiomReport::entry(Axiom a) const {
  for (const auto& e : entries)
    if (e.axiom == a) return e;
  throw InternalError("axiom report has no entry for " + std::string(axiom_id(a)));
}

void check_format(const HyperringSpec& spec) {
  if (spec.n < 1)
    throw FormatError("BAD_VALUE", "size", "carrier size must be at least 1");
  if (spec.n > kMaxCarrier)
    throw FormatError("OVER_CAP", "size",
                      "carrier size " + std::to_string(spec.n) + " exceeds the hard limit " +
                          std::to_string(kMaxCarrier));
  const int n = spec.n;
  if (spec.zero < 0 || spec.zero >= n)
    throw FormatError("OUT_OF_RANGE", "zero", "additive identity index not in [0," + std::to_string(n) + ")");
  if (spec.one < 0 || spec.one >= n)
    throw FormatError("OUT_OF_RANGE", "one", "multiplicative identity index not in [0," + std::to_string(n) + ")");
  if (static_cast<int>(spec.add.size()) != n * n)
    throw FormatError("BAD_SHAPE", "add", "expected a " + std::to_string(n) + "x" + std::to_string(n) + " table");
  if (static_cast<int>(spec.mul.size()) != n * n)
    throw FormatError("BAD_SHAPE", "mul", "expected a " + std::to_string(n) + "x" + std::to_string(n) + " table");
  if (!spec.labels.empty() && static_cast<int>(spec.labels.size()) != n)
    throw FormatError("BAD_SHAPE", "labels", "label list does not match the carrier size");
  const Subset carrier = Subset::full(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Subset cell = spec.add_cell(a, b);
      if (cell.empty())
        throw FormatError("EMPTY_HYPERSUM", cell_name("add", a, b), "hypersum cells must be nonempty");
      if (!cell.subset_of(carrier))
        throw FormatError("OUT_OF_RANGE", cell_name("add", a, b), "member outside the carrier");
      Elem p = spec.mul_cell(a, b);
      if (p < 0 || p >= n)
        throw FormatError("OUT_OF_RANGE", cell_name("mul", a, b), "product outside the carrier");
    }
}

Subset set_add(const HyperringSpec& spec, Subset a, Subset b) {
  const Subset carrier = Subset::full(spec.n);
  if (!a.subset_of(carrier) || !b.subset_of(carrier))
    throw FormatError("OUT_OF_RANGE", "set_add", "operand member outside the carrier");
  if (a.empty() || b.empty())
    throw PreconditionError("set_add requires nonempty operands");
  Subset out;
  for (Elem x : a.elements())
    for (Elem y : b.elements()) out |= spec.add_cell(x, y);
  return out;
}

Subset fold_add(const HyperringSpec& spec, const std::vector<Subset>& terms) {
  Subset acc = Subset::single(spec.zero);
  bool first = true;
  for (Subset t : terms) {
    acc = first ? t : set_add(spec, acc, t);
    first = false;
  }
  return acc;
}

NegSearch neg_of(const HyperringSpec& spec, Elem a) {
  NegSearch r{NegSearch::Status::none, 0, 0};
  for (Elem x = 0; x < spec.n; ++x) {
    if (!spec.add_cell(a, x).contains(spec.zero)) continue;
    if (r.status == NegSearch::Status::none) {
      r.status = NegSearch::Status::found;
      r.value = x;
    } else {
      r.status = NegSearch::Status::ambiguous;
      r.second = x;
      break;
    }
  }
  return r;
}

namespace {

AxiomCheck check_add_comm(const HyperringSpec& s) {
  for (Elem a = 0; a < s.n; ++a)
    for (Elem b = 0; b < s.n; ++b)
      if (!(s.add_cell(a, b) == s.add_cell(b, a)))
        return {Axiom::AddComm, false, std::vector<Elem>{a, b},
                s.label(a) + "+" + s.label(b) + " = " + set_str(s, s.add_cell(a, b)) +
                    " but " + s.label(b) + "+" + s.label(a) + " = " + set_str(s, s.add_cell(b, a))};
  return {Axiom::AddComm, true, std::nullopt, ""};
}

AxiomCheck check_add_assoc(const HyperringSpec& s) {
  for (Elem a = 0; a < s.n; ++a)
    for (Elem b = 0; b < s.n; ++b)
      for (Elem c = 0; c < s.n; ++c) {
        Subset lhs = set_add(s, Subset::single(a), s.add_cell(b, c));
        Subset rhs = set_add(s, s.add_cell(a, b), Subset::single(c));
        if (!(lhs == rhs))
          return {Axiom::AddAssoc, false, std::vector<Elem>{a, b, c},
                  s.label(a) + "+(" + s.label(b) + "+" + s.label(c) + ") = " + set_str(s, lhs) +
                      " but (" + s.label(a) + "+" + s.label(b) + ")+" + s.label(c) + " = " +
                      set_str(s, rhs)};
      }
  return {Axiom::AddAssoc, true, std::nullopt, ""};
}

AxiomCheck check_zero_scalar(const HyperringSpec& s) {
  for (Elem a = 0; a < s.n; ++a) {
    Subset cell = s.add_cell(a, s.zero);
    if (!(cell == Subset::single(a)))
      return {Axiom::ZeroScalar, false, std::vector<Elem>{a},
              s.label(a) + "+0 = " + set_str(s, cell) + ", expected {" + s.label(a) + "}"};
  }
  return {Axiom::ZeroScalar, true, std::nullopt, ""};
}

AxiomCheck check_neg_unique(const HyperringSpec& s) {
  for (Elem a = 0; a < s.n; ++a) {
    NegSearch r = neg_of(s, a);
    if (r.status == NegSearch::Status::none)
      return {Axiom::NegUnique, false, std::vector<Elem>{a},
              "no x with 0 in " + s.label(a) + "+x"};
    if (r.status == NegSearch::Status::ambiguous)
      return {Axiom::NegUnique, false, std::vector<Elem>{a, r.value, r.second},
              "both " + s.label(r.value) + " and " + s.label(r.second) + " negate " + s.label(a)};
  }
  return {Axiom::NegUnique, true, std::nullopt, ""};
}

// Reversibility: a in b+c forces c in -b+a and b in a-c. Each clause needs
// a well-defined negation, so tuples missing one are skipped per clause;
// A4 reports that situation separately.
AxiomCheck check_reversible(const HyperringSpec& s) {
  std::vector<std::optional<Elem>> neg(s.n);
  for (Elem b = 0; b < s.n; ++b) {
    NegSearch r = neg_of(s, b);
    if (r.status == NegSearch::Status::found) neg[b] = r.value;
  }
  for (Elem a = 0; a < s.n; ++a)
    for (Elem b = 0; b < s.n; ++b)
      for (Elem c = 0; c < s.n; ++c) {
        if (!s.add_cell(b, c).contains(a)) continue;
        if (neg[b] && !s.add_cell(*neg[b], a).contains(c))
          return {Axiom::Reversible, false, std::vector<Elem>{a, b, c},
                  s.label(a) + " in " + s.label(b) + "+" + s.label(c) + " but " + s.label(c) +
                      " not in -" + s.label(b) + "+" + s.label(a)};
        if (neg[c] && !s.add_cell(a, *neg[c]).contains(b))
          return {Axiom::Reversible, false, std::vector<Elem>{a, b, c},
                  s.label(a) + " in " + s.label(b) + "+" + s.label(c) + " but " + s.label(b) +
                      " not in " + s.label(a) + "-" + s.label(c)};
      }
  return {Axiom::Reversible, true, std::nullopt, ""};
}

AxiomCheck check_mul_assoc(const HyperringSpec& s) {
  for (Elem a = 0; a < s.n; ++a)
    for (Elem b = 0; b < s.n; ++b)
      for (Elem c = 0; c < s.n; ++c) {
        Elem lhs = s.mul_cell(a, s.mul_cell(b, c));
        Elem rhs = s.mul_cell(s.mul_cell(a, b), c);
        if (lhs != rhs)
          return {Axiom::MulAssoc, false, std::vector<Elem>{a, b, c},
                  s.label(a) + "*(" + s.label(b) + "*" + s.label(c) + ") = " + s.label(lhs) +
                      " but (" + s.label(a) + "*" + s.label(b) + ")*" + s.label(c) + " = " +
                      s.label(rhs)};
      }
  return {Axiom::MulAssoc, true, std::nullopt, ""};
}

AxiomCheck check_mul_comm(const HyperringSpec& s) {
  for (Elem a = 0; a < s.n; ++a)
    for (Elem b = 0; b < s.n; ++b)
      if (s.mul_cell(a, b) != s.mul_cell(b, a))
        return {Axiom::MulComm, false, std::vector<Elem>{a, b},
                s.label(a) + "*" + s.label(b) + " != " + s.label(b) + "*" + s.label(a)};
  return {Axiom::MulComm, true, std::nullopt, ""};
}

AxiomCheck check_zero_absorb(const HyperringSpec& s) {
  for (Elem a = 0; a < s.n; ++a)
    if (s.mul_cell(a, s.zero) != s.zero)
      return {Axiom::ZeroAbsorb, false, std::vector<Elem>{a},
              s.label(a) + "*0 = " + s.label(s.mul_cell(a, s.zero))};
  return {Axiom::ZeroAbsorb, true, std::nullopt, ""};
}

AxiomCheck check_distrib(const HyperringSpec& s) {
  for (Elem a = 0; a < s.n; ++a)
    for (Elem b = 0; b < s.n; ++b)
      for (Elem c = 0; c < s.n; ++c) {
        Subset lhs;  // elementwise image of b+c under multiplication by a
        for (Elem x : s.add_cell(b, c).elements()) lhs.insert(s.mul_cell(a, x));
        Subset rhs = s.add_cell(s.mul_cell(a, b), s.mul_cell(a, c));
        if (!(lhs == rhs)) {
          const char* dir = lhs.subset_of(rhs)   ? " (left strictly below right)"
                            : rhs.subset_of(lhs) ? " (right strictly below left)"
                                                 : " (incomparable)";
          return {Axiom::Distrib, false, std::vector<Elem>{a, b, c},
                  s.label(a) + "*(" + s.label(b) + "+" + s.label(c) + ") = " + set_str(s, lhs) +
                      " but " + s.label(a) + "*" + s.label(b) + " + " + s.label(a) + "*" +
                      s.label(c) + " = " + set_str(s, rhs) + dir};
        }
      }
  return {Axiom::Distrib, true, std::nullopt, ""};
}

AxiomCheck check_unital(const HyperringSpec& s) {
  for (Elem a = 0; a < s.n; ++a)
    if (s.mul_cell(a, s.one) != a)
      return {Axiom::Unital, false, std::vector<Elem>{a},
              s.label(a) + "*1 = " + s.label(s.mul_cell(a, s.one))};
  return {Axiom::Unital, true, std::nullopt, ""};
}

HyperringSpec with_default_labels(HyperringSpec spec) {
  if (spec.labels.empty()) {
    spec.labels.reserve(spec.n);
    for (int i = 0; i < spec.n; ++i) spec.labels.push_back(std::to_string(i));
  }
  return spec;
}

}  // namespace

AxiomReport check_axioms(const HyperringSpec& raw) {
  check_format(raw);
  HyperringSpec s = with_default_labels(raw);
  AxiomReport rep;
  rep.entries.push_back(check_add_comm(s));
  rep.entries.push_back(check_add_assoc(s));
  rep.entries.push_back(check_zero_scalar(s));
  rep.entries.push_back(check_neg_unique(s));
  rep.entries.push_back(check_reversible(s));
  rep.entries.push_back(check_mul_assoc(s));
  rep.entries.push_back(check_mul_comm(s));
  rep.entries.push_back(check_zero_absorb(s));
  rep.entries.push_back(check_distrib(s));
  rep.entries.push_back(check_unital(s));
  return rep;
}

ValidationError::ValidationError(AxiomReport r)
    : Error("axiom check failed"), report(std::move(r)) {}

Hyperring validate(const HyperringSpec& raw) {
  HyperringSpec spec = with_default_labels(raw);
  AxiomReport rep = check_axioms(spec);
  if (!rep.all_pass()) throw ValidationError(std::move(rep));
  Hyperring r;
  r.spec = std::move(spec);
  r.neg.resize(r.spec.n);
  for (Elem a = 0; a < r.spec.n; ++a) {
    NegSearch ns = neg_of(r.spec, a);
    if (ns.status != NegSearch::Status::found)
      throw InternalError("negation scan disagreed with the A4 check");
    r.neg[a] = ns.value;
  }
  if (r.neg[r.spec.zero] != r.spec.zero)
    throw InternalError("negation does not fix zero");
  for (Elem a = 0; a < r.spec.n; ++a)
    if (r.neg[r.neg[a]] != a) throw InternalError("negation is not an involution");
  return r;
}

}  // namespace hyperspec
