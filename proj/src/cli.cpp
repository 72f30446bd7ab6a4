#include "hyperspec/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "hyperspec/constructions.hpp"
#include "hyperspec/io.hpp"
#include "hyperspec/selftest.hpp"
#include "hyperspec/spectral.hpp"

namespace hyperspec {

namespace {

struct GlobalOpts {
  int max_size = kDefaultMaxSize;
  std::string format = "human";
  std::uint64_t seed = 1;
  int subfamily_cap = 12;

  bool machine() const { return format == "machine"; }
  SubfamilyPolicy subfamilies() const {
    SubfamilyPolicy p;
    p.exhaustive_cap = subfamily_cap;
    p.seed = seed;
    return p;
  }
  CoverPolicy covers() const {
    CoverPolicy p;
    p.seed = seed;
    return p;
  }
};

struct Source {
  std::string path;     // positional
  std::string builtin;  // --builtin NAME
};

HyperringSpec load_source(const Source& src, const GlobalOpts& g) {
  if (src.path.empty() == src.builtin.empty())
    throw FormatError("BAD_VALUE", "source",
                      "give exactly one of a file path or --builtin NAME");
  HyperringSpec spec;
  if (!src.builtin.empty()) {
    spec = builtin(src.builtin);
  } else {
    std::ifstream in(src.path, std::ios::binary);
    if (!in) throw FormatError("MALFORMED", src.path, "cannot read file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_hyperring(buf.str(), g.max_size);
  }
  if (spec.n > g.max_size)
    throw FormatError("OVER_CAP", "size",
                      "carrier size " + std::to_string(spec.n) + " exceeds cap " +
                          std::to_string(g.max_size));
  return spec;
}

void emit(std::ostream& out, const GlobalOpts& g, const Json& machine,
          const std::string& human) {
  if (g.machine())
    out << machine.dump(2) << "\n";
  else
    out << human;
}

int cmd_check(const Source& src, const GlobalOpts& g, std::ostream& out) {
  HyperringSpec spec = load_source(src, g);
  check_format(spec);
  AxiomReport rep = check_axioms(spec);
  emit(out, g, axiom_report_json(spec, rep), axiom_report_human(spec, rep));
  return rep.all_pass() ? kExitPass : kExitFail;
}

// Shared by the lattice and topology commands: a hyperring or a failing
// axiom report.
int validated(const Source& src, const GlobalOpts& g, std::ostream& out, Hyperring& r) {
  HyperringSpec spec = load_source(src, g);
  check_format(spec);
  AxiomReport rep = check_axioms(spec);
  if (!rep.all_pass()) {
    emit(out, g, axiom_report_json(spec, rep), axiom_report_human(spec, rep));
    return kExitFail;
  }
  r = validate(spec);
  return kExitPass;
}

int cmd_ideals(const Source& src, const GlobalOpts& g, std::ostream& out) {
  Hyperring r;
  if (int rc = validated(src, g, out, r)) return rc;
  IdealLattice lat = all_hyperideals(r);
  LatticeReport rep = lattice_report(r, lat, g.subfamilies());
  emit(out, g, lattice_json(r, lat, rep), lattice_human(r, lat, rep));
  bool healthy = rep.is_complete_lattice && rep.is_algebraic &&
                 static_cast<int>(rep.compact_elements.size()) == lat.size();
  return healthy ? kExitPass : kExitFail;
}

int cmd_spectral(const Source& src, const std::string& which, const GlobalOpts& g,
                 std::ostream& out) {
  Hyperring r;
  if (int rc = validated(src, g, out, r)) return rc;
  IdealLattice lat = all_hyperideals(r);
  bool all_ok = true;
  Json docs = Json::array();
  for (Variant v : {Variant::full, Variant::proper}) {
    std::string name = v == Variant::full ? "full" : "proper";
    if (which != "both" && which != name) continue;
    LowerTopologySpace sp = build_lower_topology(r, lat, v);
    SpectralVerdict verdict = spectral_verdict(sp.base, g.covers());
    all_ok = all_ok && verdict.spectral;
    if (g.machine())
      docs.push_back(spectral_json(r.spec.name, name, sp.base, verdict));
    else
      out << spectral_human(r.spec.name, name, sp.base, verdict);
  }
  if (g.machine()) out << (docs.size() == 1 ? docs[0] : docs).dump(2) << "\n";
  return all_ok ? kExitPass : kExitFail;
}

int cmd_theorem(const Source& src, const GlobalOpts& g, std::ostream& out) {
  Hyperring r;
  if (int rc = validated(src, g, out, r)) return rc;
  TheoremOptions opt;
  opt.subfamilies = g.subfamilies();
  opt.covers = g.covers();
  TheoremReport rep = verify_theorem(r, opt);
  emit(out, g, theorem_json(r, rep), theorem_human(r, rep));
  return rep.overall ? kExitPass : kExitFail;
}

int cmd_quotient(int modulus, const std::vector<Elem>& subgroup, const std::string& name,
                 const std::string& out_path, const GlobalOpts& g, std::ostream& out) {
  RingSpec ring = ring_mod(modulus);
  HyperringSpec spec = quotient_hyperring(ring, subgroup, name);
  if (spec.n > g.max_size)
    throw FormatError("OVER_CAP", "size", "quotient exceeds the carrier cap");
  AxiomReport rep = check_axioms(spec);
  if (!rep.all_pass()) {
    // quotients by unit subgroups are always valid; reaching this is a bug
    emit(out, g, axiom_report_json(spec, rep), axiom_report_human(spec, rep));
    return kExitFail;
  }
  std::string doc = emit_hyperring(spec);
  if (out_path.empty()) {
    out << doc;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw FormatError("MALFORMED", out_path, "cannot write file");
    f << doc;
  }
  return kExitPass;
}

int cmd_selftest(const GlobalOpts& g, std::ostream& out) {
  AcceptanceOptions opt;
  opt.seed = g.seed;
  std::vector<CriterionResult> results = run_acceptance(opt);
  bool all = true;
  for (const auto& c : results) all = all && c.pass;
  if (g.machine()) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["kind"] = "selftest";
    doc["pass"] = all;
    Json arr = Json::array();
    for (const auto& c : results) {
      Json e;
      e["number"] = c.number;
      e["title"] = c.title;
      e["pass"] = c.pass;
      e["detail"] = c.detail;
      arr.push_back(e);
    }
    doc["criteria"] = arr;
    out << doc.dump(2) << "\n";
  } else {
    int passed = 0;
    for (const auto& c : results) {
      out << "[" << std::setw(2) << c.number << "] " << (c.pass ? "PASS" : "FAIL") << "  "
          << c.title << "  (" << c.detail << ")\n";
      passed += c.pass ? 1 : 0;
    }
    out << "selftest: " << passed << "/" << results.size() << " criteria pass\n";
  }
  return all ? kExitPass : kExitFail;
}

}  // namespace

int exit_code_for(const Error& e) {
  if (dynamic_cast<const FormatError*>(&e)) return kExitUsage;
  if (dynamic_cast<const PreconditionError*>(&e)) return kExitUsage;
  return kExitFail;
}

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"verification engine for finite Krasner hyperrings"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--max-size", g.max_size, "carrier size cap")->capture_default_str();
  app.add_option("--format", g.format, "report format")
      ->check(CLI::IsMember({"human", "machine"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed for sampled checks")->capture_default_str();
  app.add_option("--subfamily-cap", g.subfamily_cap,
                 "largest family enumerated exhaustively")
      ->capture_default_str();

  Source src;
  auto add_source = [&](CLI::App* cmd) {
    cmd->add_option("source", src.path, "hyperring document");
    cmd->add_option("--builtin", src.builtin, "catalogue instance name");
  };

  // let the global flags appear after the subcommand as well
  auto sub = [&](CLI::App* parent, const char* name, const char* desc) {
    CLI::App* cmd = parent->add_subcommand(name, desc);
    cmd->fallthrough();
    return cmd;
  };

  CLI::App* check = sub(&app, "check", "run the axiom checks");
  add_source(check);
  CLI::App* ideals = sub(&app, "ideals", "list the hyperideal lattice");
  add_source(ideals);
  CLI::App* spectral = sub(&app, "spectral", "verdict on the ideal spaces");
  add_source(spectral);
  std::string which = "both";
  spectral->add_option("--space", which, "which ideal space")
      ->check(CLI::IsMember({"full", "proper", "both"}))
      ->capture_default_str();
  CLI::App* theorem = sub(&app, "theorem", "verify the whole pipeline");
  add_source(theorem);

  CLI::App* construct = sub(&app, "construct", "build instances");
  construct->require_subcommand(1);
  CLI::App* quotient = sub(construct, "quotient", "quotient of Z_M by a unit subgroup");
  int modulus = 0;
  std::vector<Elem> subgroup;
  std::string qname, out_path;
  quotient->add_option("--modulus", modulus, "ring modulus M")->required();
  quotient->add_option("--subgroup", subgroup, "unit subgroup elements")
      ->required()
      ->delimiter(',');
  quotient->add_option("--name", qname, "name for the emitted instance");
  quotient->add_option("-o,--output", out_path, "write the document here");

  CLI::App* selftest = sub(&app, "selftest", "run the acceptance battery");

  std::vector<const char*> argv;
  argv.push_back("hyperspec");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(src, g, out);
    if (ideals->parsed()) return cmd_ideals(src, g, out);
    if (spectral->parsed()) return cmd_spectral(src, which, g, out);
    if (theorem->parsed()) return cmd_theorem(src, g, out);
    if (construct->parsed() && quotient->parsed())
      return cmd_quotient(modulus, subgroup, qname, out_path, g, out);
    if (selftest->parsed()) return cmd_selftest(g, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace hyperspec
