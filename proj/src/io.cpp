#include "hyperspec/io.hpp"

#include <algorithm>
#include <sstream>

namespace hyperspec {

namespace {

std::string cell_at(const char* table, int i, int j) {
  return std::string(table) + "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

long long require_int(const Json& doc, const char* key) {
  if (!doc.at(key).is_number_integer())
    throw FormatError("BAD_VALUE", key, "must be an integer");
  return doc.at(key).get<long long>();
}

}  // namespace

HyperringSpec parse_hyperring(const std::string& text, int max_size) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError("MALFORMED", "", e.what());
  }
  if (!doc.is_object()) throw FormatError("MALFORMED", "", "top level must be an object");
  for (const char* key : {"name", "size", "zero", "one", "add", "mul"})
    if (!doc.contains(key)) throw FormatError("MISSING_KEY", key, "required key missing");
  if (!doc.at("name").is_string())
    throw FormatError("BAD_VALUE", "name", "must be a string");

  long long size = require_int(doc, "size");
  if (size < 1) throw FormatError("BAD_VALUE", "size", "must be at least 1");
  int cap = std::min(max_size, kMaxCarrier);
  if (size > cap)
    throw FormatError("OVER_CAP", "size",
                      "carrier size " + std::to_string(size) + " exceeds cap " +
                          std::to_string(cap));
  const int n = static_cast<int>(size);

  long long zero = require_int(doc, "zero");
  if (zero < 0 || zero >= n)
    throw FormatError("OUT_OF_RANGE", "zero", "must lie in [0," + std::to_string(n) + ")");
  long long one = require_int(doc, "one");
  if (one < 0 || one >= n)
    throw FormatError("OUT_OF_RANGE", "one", "must lie in [0," + std::to_string(n) + ")");

  auto require_rows = [&](const char* key) -> const Json& {
    const Json& t = doc.at(key);
    if (!t.is_array() || static_cast<int>(t.size()) != n)
      throw FormatError("BAD_SHAPE", key,
                        "expected " + std::to_string(n) + " rows");
    for (int i = 0; i < n; ++i)
      if (!t[i].is_array() || static_cast<int>(t[i].size()) != n)
        throw FormatError("BAD_SHAPE", std::string(key) + "[" + std::to_string(i) + "]",
                          "expected a row of " + std::to_string(n) + " cells");
    return t;
  };

  const Json& add = require_rows("add");
  const Json& mul = require_rows("mul");

  // file index -> internal index, additive identity pinned at 0
  std::vector<Elem> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::swap(p[0], p[static_cast<std::size_t>(zero)]);

  HyperringSpec spec;
  spec.name = doc.at("name").get<std::string>();
  spec.n = n;
  spec.zero = 0;
  spec.one = p[static_cast<std::size_t>(one)];
  spec.add.resize(static_cast<std::size_t>(n) * n);
  spec.mul.resize(static_cast<std::size_t>(n) * n);
  spec.labels.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    spec.labels[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = std::to_string(i);

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Json& cell = add[i][j];
      if (!cell.is_array())
        throw FormatError("BAD_SHAPE", cell_at("add", i, j), "cell must be a list");
      if (cell.empty())
        throw FormatError("EMPTY_HYPERSUM", cell_at("add", i, j), "hypersum cell is empty");
      Subset s;
      for (const Json& v : cell) {
        if (!v.is_number_integer())
          throw FormatError("BAD_VALUE", cell_at("add", i, j), "members must be integers");
        long long e = v.get<long long>();
        if (e < 0 || e >= n)
          throw FormatError("OUT_OF_RANGE", cell_at("add", i, j),
                            "member " + std::to_string(e) + " outside [0," +
                                std::to_string(n) + ")");
        s.insert(p[static_cast<std::size_t>(e)]);
      }
      spec.add[static_cast<std::size_t>(p[static_cast<std::size_t>(i)]) * n +
               p[static_cast<std::size_t>(j)]] = s;

      const Json& mc = mul[i][j];
      if (!mc.is_number_integer())
        throw FormatError("BAD_VALUE", cell_at("mul", i, j), "must be an integer");
      long long e = mc.get<long long>();
      if (e < 0 || e >= n)
        throw FormatError("OUT_OF_RANGE", cell_at("mul", i, j),
                          "value " + std::to_string(e) + " outside [0," +
                              std::to_string(n) + ")");
      spec.mul[static_cast<std::size_t>(p[static_cast<std::size_t>(i)]) * n +
               p[static_cast<std::size_t>(j)]] = p[static_cast<std::size_t>(e)];
    }

  check_format(spec);
  return spec;
}

std::string emit_hyperring(const HyperringSpec& spec) {
  // one table row per line keeps the documents hand-editable
  std::ostringstream os;
  os << "{\n";
  os << "  \"name\": " << Json(spec.name).dump() << ",\n";
  os << "  \"size\": " << spec.n << ",\n";
  os << "  \"zero\": " << spec.zero << ",\n";
  os << "  \"one\": " << spec.one << ",\n";
  os << "  \"add\": [\n";
  for (Elem a = 0; a < spec.n; ++a) {
    os << "    [";
    for (Elem b = 0; b < spec.n; ++b) {
      os << (b ? ", [" : "[");
      const auto elems = spec.add_cell(a, b).elements();
      for (std::size_t i = 0; i < elems.size(); ++i) os << (i ? ", " : "") << elems[i];
      os << "]";
    }
    os << (a + 1 < spec.n ? "],\n" : "]\n");
  }
  os << "  ],\n";
  os << "  \"mul\": [\n";
  for (Elem a = 0; a < spec.n; ++a) {
    os << "    [";
    for (Elem b = 0; b < spec.n; ++b) os << (b ? ", " : "") << spec.mul_cell(a, b);
    os << (a + 1 < spec.n ? "],\n" : "]\n");
  }
  os << "  ]\n}\n";
  return os.str();
}

std::string subset_label(const HyperringSpec& spec, Subset s) {
  std::string out = "{";
  bool first = true;
  for (Elem e : s.elements()) {
    if (!first) out += ",";
    out += spec.label(e);
    first = false;
  }
  return out + "}";
}

namespace {

Json labels_of(const HyperringSpec& spec, const std::vector<Elem>& xs) {
  Json out = Json::array();
  for (Elem x : xs) out.push_back(spec.label(x));
  return out;
}

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string points_label(const FiniteSpace& s, const Bits& b) {
  std::string out = "{";
  bool first = true;
  for (int p : b.elements()) {
    if (!first) out += ", ";
    out += s.point_labels[static_cast<std::size_t>(p)];
    first = false;
  }
  return out + "}";
}

Json bits_json(const Bits& b) {
  Json out = Json::array();
  for (int p : b.elements()) out.push_back(p);
  return out;
}

}  // namespace

Json axiom_report_json(const HyperringSpec& spec, const AxiomReport& rep) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "axiom-report";
  doc["instance"] = spec.name;
  doc["size"] = spec.n;
  doc["pass"] = rep.all_pass();
  Json checks = Json::array();
  for (const auto& e : rep.entries) {
    Json c;
    c["axiom"] = axiom_id(e.axiom);
    c["pass"] = e.pass;
    if (!e.pass) {
      c["witness"] = e.witness ? labels_of(spec, *e.witness) : Json::array();
      c["detail"] = e.detail;
    }
    checks.push_back(c);
  }
  doc["checks"] = checks;
  return doc;
}

std::string axiom_report_human(const HyperringSpec& spec, const AxiomReport& rep) {
  std::ostringstream os;
  os << "axiom report for " << spec.name << " (" << spec.n << " elements): "
     << (rep.all_pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& e : rep.entries) {
    os << "  " << axiom_id(e.axiom);
    for (std::size_t k = std::string(axiom_id(e.axiom)).size(); k < 12; ++k) os << ' ';
    os << (e.pass ? "pass" : "FAIL");
    if (!e.pass) {
      os << "  ";
      if (e.witness) {
        os << "witness (";
        for (std::size_t i = 0; i < e.witness->size(); ++i)
          os << (i ? "," : "") << spec.label((*e.witness)[i]);
        os << ") ";
      }
      os << e.detail;
    }
    os << "\n";
  }
  return os.str();
}

namespace {

std::vector<std::pair<int, int>> hasse_pairs(const IdealLattice& lat) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < lat.size(); ++i)
    for (int j = 0; j < lat.size(); ++j) {
      if (i == j || !lat.leq[i][j]) continue;
      bool covering = true;
      for (int k = 0; k < lat.size() && covering; ++k)
        if (k != i && k != j && lat.leq[i][k] && lat.leq[k][j]) covering = false;
      if (covering) out.emplace_back(i, j);
    }
  return out;
}

}  // namespace

Json lattice_json(const Hyperring& r, const IdealLattice& lat, const LatticeReport& rep) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "ideal-lattice";
  doc["instance"] = r.spec.name;
  doc["count"] = lat.size();
  Json ideals = Json::array();
  for (int i = 0; i < lat.size(); ++i) {
    Json entry;
    entry["index"] = i;
    Json members = Json::array();
    for (Elem e : lat.ideals[static_cast<std::size_t>(i)].members.elements())
      members.push_back(r.label(e));
    entry["members"] = members;
    entry["proper"] = i != lat.top;
    entry["maximal"] = lat.is_maximal(i);
    ideals.push_back(entry);
  }
  doc["ideals"] = ideals;
  Json hasse = Json::array();
  for (auto [i, j] : hasse_pairs(lat)) hasse.push_back(Json::array({i, j}));
  doc["hasse"] = hasse;
  doc["bottom"] = lat.bottom;
  doc["top"] = lat.top;
  Json lr;
  lr["complete"] = rep.is_complete_lattice;
  lr["compact_elements"] = rep.compact_elements;
  lr["algebraic"] = rep.is_algebraic;
  lr["exhaustive"] = rep.exhaustive;
  doc["lattice_report"] = lr;
  return doc;
}

std::string lattice_human(const Hyperring& r, const IdealLattice& lat,
                          const LatticeReport& rep) {
  std::ostringstream os;
  os << "hyperideals of " << r.spec.name << ": " << lat.size() << "\n";
  for (int i = 0; i < lat.size(); ++i) {
    os << "  [" << i << "] " << subset_label(r.spec, lat.ideals[static_cast<std::size_t>(i)].members);
    if (i == lat.bottom) os << "  (zero ideal)";
    if (i == lat.top) os << "  (R)";
    if (lat.is_maximal(i)) os << "  (maximal)";
    os << "\n";
  }
  os << "inclusions (Hasse):";
  auto pairs = hasse_pairs(lat);
  if (pairs.empty()) os << " none";
  for (auto [i, j] : pairs) os << "  " << i << "<" << j;
  os << "\n";
  os << "lattice: complete " << yn(rep.is_complete_lattice) << ", all "
     << rep.compact_elements.size() << " compact, algebraic " << yn(rep.is_algebraic)
     << (rep.exhaustive ? "" : " (sampled)") << "\n";
  return os.str();
}

namespace {

Json spectral_block(const FiniteSpace& s, const SpectralVerdict& v) {
  Json doc;
  doc["points"] = s.point_labels;
  Json closed = Json::array();
  for (const Bits& c : s.closed_sets) closed.push_back(bits_json(c));
  doc["closed_sets"] = closed;
  Json t0;
  t0["ok"] = v.t0.ok;
  if (v.t0.witness)
    t0["witness"] = Json::array({v.t0.witness->first, v.t0.witness->second});
  doc["t0"] = t0;
  doc["quasi_compact"] = v.quasi_compact;
  Json sober;
  sober["ok"] = v.sober.ok;
  if (v.sober.witness) {
    sober["witness"] = bits_json(*v.sober.witness);
    sober["generic_points"] = v.sober.witness_generic_count;
  }
  doc["sober"] = sober;
  Json basis;
  basis["ok"] = v.qc_open_basis.ok;
  if (v.qc_open_basis.bad_intersection)
    basis["bad_intersection"] = Json::array({bits_json(v.qc_open_basis.bad_intersection->first),
                                             bits_json(v.qc_open_basis.bad_intersection->second)});
  if (v.qc_open_basis.inexpressible_open)
    basis["inexpressible_open"] = bits_json(*v.qc_open_basis.inexpressible_open);
  doc["qc_open_basis"] = basis;
  doc["spectral"] = v.spectral;
  doc["agrees_with_t0"] = v.agrees_with_t0;
  return doc;
}

std::string spectral_block_human(const FiniteSpace& s, const SpectralVerdict& v,
                                 const std::string& indent) {
  std::ostringstream os;
  os << indent << s.n_points << " point" << (s.n_points == 1 ? "" : "s");
  if (s.n_points > 0) {
    os << ":";
    for (const auto& l : s.point_labels) os << " " << l;
  }
  os << "\n";
  os << indent << "closed sets " << s.closed_sets.size() << ", T0 " << yn(v.t0.ok);
  if (v.t0.witness)
    os << " (points " << s.point_labels[static_cast<std::size_t>(v.t0.witness->first)] << " and "
       << s.point_labels[static_cast<std::size_t>(v.t0.witness->second)]
       << " share their closure)";
  os << ", quasi-compact " << yn(v.quasi_compact) << ", sober " << yn(v.sober.ok);
  if (v.sober.witness)
    os << " (irreducible " << points_label(s, *v.sober.witness) << " has "
       << v.sober.witness_generic_count << " generic points)";
  os << "\n";
  os << indent << "quasi-compact open basis " << yn(v.qc_open_basis.ok) << "\n";
  os << indent << "spectral " << yn(v.spectral) << " (T0 cross-check "
     << (v.agrees_with_t0 ? "agrees" : "DISAGREES") << ")\n";
  return os.str();
}

}  // namespace

Json spectral_json(const std::string& instance, const std::string& variant,
                   const FiniteSpace& s, const SpectralVerdict& v) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "spectral";
  doc["instance"] = instance;
  doc["variant"] = variant;
  Json block = spectral_block(s, v);
  for (auto& [k, val] : block.items()) doc[k] = val;
  return doc;
}

std::string spectral_human(const std::string& instance, const std::string& variant,
                           const FiniteSpace& s, const SpectralVerdict& v) {
  std::ostringstream os;
  os << variant << " ideal space of " << instance << ": spectral " << yn(v.spectral) << "\n";
  os << spectral_block_human(s, v, "  ");
  return os.str();
}

namespace {

// Rebuild the lattice and spaces for label rendering. verify_theorem does
// the same deterministic construction; if it failed early the guard keeps
// the report renderable with indices only.
struct TheoremContext {
  bool ok = false;
  IdealLattice lat;
  LowerTopologySpace full;
  LowerTopologySpace prop;
};

TheoremContext theorem_context(const Hyperring& r) {
  TheoremContext ctx;
  try {
    ctx.lat = all_hyperideals(r);
    ctx.full = build_lower_topology(r, ctx.lat, Variant::full);
    ctx.prop = build_lower_topology(r, ctx.lat, Variant::proper);
    ctx.ok = true;
  } catch (const Error&) {
    ctx.ok = false;
  }
  return ctx;
}

std::string ideal_by_index(const Hyperring& r, const TheoremContext& ctx, int lattice_index) {
  if (!ctx.ok) return "#" + std::to_string(lattice_index);
  return subset_label(r.spec, ctx.lat.ideals[static_cast<std::size_t>(lattice_index)].members);
}

}  // namespace

Json theorem_json(const Hyperring& r, const TheoremReport& rep) {
  TheoremContext ctx = theorem_context(r);
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "theorem";
  doc["instance"] = r.spec.name;
  doc["overall"] = rep.overall;
  doc["proper_space_empty"] = rep.proper_space_empty;
  if (!rep.failure_note.empty()) doc["failure_note"] = rep.failure_note;

  doc["step1_full_space"] =
      ctx.ok ? spectral_block(ctx.full.base, rep.step1_full_space_spectral) : Json::object();

  Json s2;
  const auto& st2 = rep.step2_quasi_compact;
  s2["ok"] = st2.ok;
  s2["proper_quasi_compact"] = st2.proper_quasi_compact;
  s2["families_checked"] = st2.families_checked;
  s2["empty_intersection_families"] = st2.empty_intersection_families;
  s2["exhaustive"] = st2.exhaustive;
  Json decs = Json::array();
  for (const auto& [core, d] : st2.decompositions) {
    Json entry;
    Json fam = Json::array();
    for (int q : core) fam.push_back(ideal_by_index(r, ctx, q));
    entry["family"] = fam;
    Json sub = Json::array();
    for (int q : d.family_positions) sub.push_back(ideal_by_index(r, ctx, q));
    entry["subfamily"] = sub;
    entry["picks"] = labels_of(r.spec, d.picks);
    decs.push_back(entry);
  }
  s2["decompositions"] = decs;
  doc["step2_quasi_compact"] = s2;

  Json s3;
  const auto& st3 = rep.step3_sober;
  s3["ok"] = st3.ok;
  s3["sober"] = st3.sober.ok;
  s3["t0"] = st3.t0.ok;
  Json generics = Json::array();
  for (const auto& [closed, who] : st3.generic_points) {
    Json entry;
    entry["closed_set"] = bits_json(closed);
    entry["point"] = who.first;
    entry["ideal"] = ideal_by_index(r, ctx, who.second);
    generics.push_back(entry);
  }
  s3["generic_points"] = generics;
  doc["step3_sober"] = s3;

  Json s4;
  const auto& st4 = rep.step4_open;
  s4["ok"] = st4.ok;
  s4["complement_closed"] = st4.complement_closed;
  s4["complement_is_v_top"] = st4.complement_is_v_top;
  s4["top_closure_is_singleton"] = st4.top_closure_is_singleton;
  doc["step4_open"] = s4;

  Json ids;
  ids["intersection_ok"] = rep.identity_intersection.ok;
  ids["intersection_families_checked"] = rep.identity_intersection.families_checked;
  ids["intersection_exhaustive"] = rep.identity_intersection.exhaustive;
  if (rep.identity_intersection.witness_family)
    ids["intersection_witness"] = *rep.identity_intersection.witness_family;
  ids["closure_ok"] = rep.identity_closure.ok;
  if (rep.identity_closure.witness_point)
    ids["closure_witness_point"] = *rep.identity_closure.witness_point;
  doc["identities"] = ids;

  doc["proper_space"] =
      ctx.ok ? spectral_block(ctx.prop.base, rep.proper_space_spectral) : Json::object();
  return doc;
}

std::string theorem_human(const Hyperring& r, const TheoremReport& rep) {
  TheoremContext ctx = theorem_context(r);
  std::ostringstream os;
  os << "theorem pipeline for " << r.spec.name << ": "
     << (rep.overall ? "VERIFIED" : "FALSIFICATION CANDIDATE") << "\n";
  if (!rep.failure_note.empty()) os << "  note: " << rep.failure_note << "\n";
  if (rep.proper_space_empty)
    os << "  proper ideal space is empty (1 = 0 here); verdicts below are vacuous\n";

  os << "step 1: full ideal space spectral " << yn(rep.step1_full_space_spectral.spectral)
     << "\n";
  if (ctx.ok) os << spectral_block_human(ctx.full.base, rep.step1_full_space_spectral, "    ");

  const auto& st2 = rep.step2_quasi_compact;
  os << "step 2: proper space quasi-compact " << yn(st2.ok) << " ("
     << st2.families_checked << " subbasic families" << (st2.exhaustive ? "" : ", sampled")
     << ", " << st2.empty_intersection_families << " with empty intersection)\n";
  for (const auto& [core, d] : st2.decompositions) {
    os << "    1 in";
    for (std::size_t i = 0; i < d.picks.size(); ++i)
      os << (i ? " + " : " ") << r.label(d.picks[i]);
    if (d.picks.empty()) os << " (empty sum)";
    os << "   picks from";
    for (std::size_t i = 0; i < d.family_positions.size(); ++i)
      os << (i ? " + " : " ") << ideal_by_index(r, ctx, d.family_positions[i]);
    os << "\n";
  }

  const auto& st3 = rep.step3_sober;
  os << "step 3: sober " << yn(st3.sober.ok) << ", T0 " << yn(st3.t0.ok)
     << ", point closures match up-sets " << yn(rep.identity_closure.ok) << "\n";
  for (const auto& [closed, who] : st3.generic_points) {
    os << "    ";
    if (ctx.ok) os << points_label(ctx.prop.base, closed);
    else os << "closed set";
    os << "  generic point " << ideal_by_index(r, ctx, who.second) << "\n";
  }

  const auto& st4 = rep.step4_open;
  os << "step 4: proper space open in full space " << yn(st4.ok)
     << " (complement closed " << yn(st4.complement_closed) << ", equals the up-set of R "
     << yn(st4.complement_is_v_top) << ", closure of R is itself "
     << yn(st4.top_closure_is_singleton) << ")\n";

  os << "identity: intersections of up-sets are up-sets of sums "
     << yn(rep.identity_intersection.ok) << " (" << rep.identity_intersection.families_checked
     << " families" << (rep.identity_intersection.exhaustive ? "" : ", sampled") << ")\n";
  os << "proper space spectral " << yn(rep.proper_space_spectral.spectral) << "\n";
  os << "overall: " << (rep.overall ? "VERIFIED" : "NOT VERIFIED") << "\n";
  return os.str();
}

}  // namespace hyperspec
