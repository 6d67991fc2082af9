// alcove: command-line front end. Every command prints one JSON document on
// standard output. Exit status 0 means success, 1 a mathematical mismatch,
// 2 a usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "alcove/suites.hpp"

namespace {

using alcove::Json;

struct Options {
  std::string type;
  std::string isogeny = "sc";
  std::string point = "c0";
  std::string input;
  std::string method = "cosets";
  std::string suite;
  std::vector<std::string> types;
  std::size_t cap = 0;
  std::size_t samples = 1000;
  std::uint64_t seed = 7;
  bool full = false;
};

Json envelope(const std::string& command) {
  Json j;
  j["schema_version"] = alcove::kSchemaVersion;
  j["command"] = command;
  return j;
}

int emit(const Json& j, bool ok) {
  std::cout << j.dump(2) << "\n";
  return ok ? 0 : 1;
}

alcove::CartanType require_type(const Options& o) {
  if (o.type.empty()) throw CLI::RequiredError("--type");
  return alcove::CartanType::parse(o.type);
}

std::vector<std::string> split_types(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& r : raw) {
    std::stringstream ss(r);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) out.push_back(item);
    }
  }
  return out;
}

std::size_t weyl_cap(const Options& o) { return o.cap ? o.cap : alcove::default_weyl_cap(); }
std::size_t scan_cap(const Options& o) { return o.cap ? o.cap : alcove::default_scan_cap(); }

int cmd_datum(const Options& o) {
  using namespace alcove;
  Json out = envelope("datum");
  BasedRootDatum d;
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw Error(ErrorKind::Inconsistent, "cannot read " + o.input);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::Inconsistent, std::string("JSON: ") + e.what());
    }
    d = datum_from_json(j.contains("datum") ? j.at("datum") : j);
    out["input"] = o.input;
  } else {
    const CartanType t = require_type(o);
    const Isogeny iso = parse_isogeny(o.isogeny);
    TwistedDatum td = build_twisted(t, iso);
    d = td.datum;
    out["type"] = t.label();
    out["isogeny"] = std::string(to_string(iso));
    if (!td.twist.empty()) {
      Json tw;
      tw["matrix"] = to_json(td.twist.front().matrix);
      tw["permutation"] = td.twist.front().permutation;
      tw["order"] = td.twist.front().order;
      out["twist"] = tw;
    }
  }
  const ValidationReport v = validate(d);
  out["valid"] = v.ok;
  if (!v.ok) {
    out["violation"] = v.violation;
    return emit(out, false);
  }
  out["datum"] = to_json(d);
  out["identified"] = type_label(identify_type(d));
  out["cartan_matrix"] = to_json(cartan_matrix(d));
  const Cokernel pi = fundamental_group(d);
  out["fundamental_group"] = {{"factors", factors_json(pi.torsion.invariant_factors())}, {"free_rank", pi.free_rank}};
  if (d.is_semisimple() && irreducible_components(d).size() == 1) {
    const HighestCoroot hc = highest_coroot(d);
    out["highest_coroot"] = {{"coroot", to_json(hc.coroot)}, {"marks", to_json(IntVector(hc.marks))}};
    out["coxeter_number"] = coxeter_number(d).get_str();
  }
  return emit(out, true);
}

int cmd_omega(const Options& o) {
  using namespace alcove;
  const CartanType t = require_type(o);
  Setting s(t, parse_isogeny(o.isogeny));
  Json out = envelope("omega");
  out["type"] = t.label();
  out["isogeny"] = std::string(to_string(s.isogeny));
  bool ok = true;
  const OmegaGroup* shown = &s.omega;
  OmegaGroup bary;
  if (o.method == "barycenter" || o.method == "both") {
    bary = omega_by_barycenter(s.alcove, scan_cap(o));
    if (o.method == "both") {
      const bool agree = same_elements(s.omega, bary);
      out["constructions_agree"] = agree;
      ok = agree;
    } else {
      shown = &bary;
    }
  }
  const IotaReport iota = check_iota(s.alcove, *shown);
  out["method"] = o.method;
  Json om = {{"order", shown->size()}, {"factors", factors_json(shown->quotient.invariant_factors())}};
  if (o.full) {
    Json detail = to_json(*shown);
    om["elements"] = detail["elements"];
    om["iota_images"] = detail["iota_images"];
    om["table"] = detail["table"];
  }
  out["omega"] = om;
  out["iota_ok"] = iota.ok;
  if (!iota.ok) out["iota_detail"] = iota.detail;
  return emit(out, ok && iota.ok);
}

int cmd_restrict(const Options& o) {
  using namespace alcove;
  const CartanType t = require_type(o);
  TwistedDatum td = build_twisted(t, parse_isogeny(o.isogeny));
  RestrictionResult r = restrict_datum(td);
  Json out = envelope("restrict");
  out["type"] = t.label();
  out["restriction"] = to_json(r);
  const ValidationReport v = validate(r.folded);
  out["folded_valid"] = v.ok;
  if (!v.ok) out["violation"] = v.violation;
  if (r.folded.is_semisimple() && irreducible_components(r.folded).size() == 1) {
    OmegaGroup om = folded_omega(r);
    out["folded_omega"] = {{"order", om.size()}, {"factors", factors_json(om.quotient.invariant_factors())}};
  }
  return emit(out, v.ok);
}

int cmd_rgroup(const Options& o) {
  using namespace alcove;
  const CartanType t = require_type(o);
  Setting s(t, parse_isogeny(o.isogeny));
  const ParameterPoint p = parse_point(s.alcove, o.point);
  const StabilizerSubgroup stab = stabilizer(s.alcove, s.omega, p.point);
  const CoinvariantsBridge b = coinvariants_bridge(s);
  const OrderReport ord = sphi_order(s, b, p.point);
  Json out = envelope("rgroup");
  out["type"] = t.label();
  out["point"] = {{"label", p.label}, {"coordinates", to_json(p.point)}};
  out["omega"] = {{"order", s.omega.size()}, {"factors", factors_json(s.omega.quotient.invariant_factors())}};
  out["stabilizer"] = to_json(stab);
  out["bridge"] = to_json(b);
  out["order_law"] = {{"omega_phi", ord.omega_phi},
                      {"a_phi_preimage", ord.a_phi_preimage},
                      {"a_phi_action", ord.a_phi_action},
                      {"kernel", ord.kernel},
                      {"holds", ord.ok}};
  return emit(out, ord.ok);
}

int cmd_classify(const Options& o) {
  using namespace alcove;
  const CartanType t = require_type(o);
  Setting s(t, parse_isogeny(o.isogeny));
  Classification c = classify_stabilizers(s, o.seed);
  Json out = envelope("classify");
  out["type"] = t.label();
  out["omega"] = {{"order", s.omega.size()}, {"factors", factors_json(s.omega.quotient.invariant_factors())}};
  out["classification"] = to_json(c);
  return emit(out, c.all_realized);
}

int cmd_table1() {
  using namespace alcove;
  Json out = envelope("table1");
  Json rows = Json::array();
  bool all = true;
  for (const auto& row : table1()) {
    rows.push_back(to_json(row));
    all = all && row.match;
  }
  out["rows"] = rows;
  out["all_match"] = all;
  return emit(out, all);
}

int cmd_verify(const Options& o) {
  using namespace alcove;
  std::vector<std::string> types = split_types(o.types);
  if (!o.type.empty()) types.push_back(o.type);
  const bool all = o.suite == "all";
  auto pick = [&](std::vector<std::string> defaults) { return types.empty() ? defaults : types; };
  // Under `all`, the iota sweep takes the untwisted types and the fold sweep the twisted ones.
  auto pick_twisted = [&](std::vector<std::string> defaults, bool twisted) {
    if (types.empty() || !all) return pick(defaults);
    std::vector<std::string> out;
    for (const auto& t : types)
      if ((CartanType::parse(t).twist != 1) == twisted) out.push_back(t);
    return out;
  };
  std::vector<SuiteReport> reports;
  if (all || o.suite == "iota") reports.push_back(run_iota_suite(pick_twisted(iota_default_types(), false), scan_cap(o)));
  if (all || o.suite == "yu") reports.push_back(run_yu_suite(pick_twisted(yu_default_types(), true), weyl_cap(o)));
  if (all || o.suite == "compat") reports.push_back(run_compat_suite(pick(table1_types()), o.samples, o.seed));
  if (all || o.suite == "order") reports.push_back(run_order_suite(pick(table1_types()), o.samples, o.seed));
  if (all || o.suite == "classify") reports.push_back(run_classify_suite(pick(table1_types()), o.seed));
  Json out = envelope("verify");
  out["suite"] = o.suite;
  out["seed"] = o.seed;
  bool pass = true;
  Json rs = Json::array();
  for (const auto& r : reports) {
    rs.push_back(r.to_json());
    if (!r.pass && pass) out["counterexample"] = *r.counterexample;
    pass = pass && r.pass;
  }
  out["pass"] = pass;
  out["reports"] = rs;
  return emit(out, pass);
}

void add_type_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--type", o.type, "Cartan type such as A3, 2A5, 3D4, E6");
  cmd->add_option("--isogeny", o.isogeny, "sc or adjoint")->check(CLI::IsMember({"sc", "adjoint", "ad"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Root data, alcove stabilizers and R-group classification in exact arithmetic"};
  app.require_subcommand(1);
  Options o;

  auto* datum = app.add_subcommand("datum", "Build or validate a based root datum");
  add_type_options(datum, o);
  datum->add_option("--input", o.input, "JSON file holding a datum to validate instead of --type");

  auto* omega = app.add_subcommand("omega", "Compute the alcove stabilizer of the (folded) datum");
  add_type_options(omega, o);
  omega->add_option("--method", o.method, "cosets, barycenter or both")
      ->check(CLI::IsMember({"cosets", "barycenter", "both"}));
  omega->add_option("--cap", o.cap, "Weyl scan cap (default from ALCOVE_WEYL_CAP or built in)");
  omega->add_flag("--full", o.full, "Include elements, ι-images and the multiplication table");

  auto* restrict_cmd = app.add_subcommand("restrict", "Fold a twisted datum");
  add_type_options(restrict_cmd, o);

  auto* rgroup = app.add_subcommand("rgroup", "Stabilizer of a point of the closed alcove");
  add_type_options(rgroup, o);
  rgroup->add_option("--point", o.point, "c0, face:I with I a comma list of walls, or rationals p/q,...");

  auto* classify = app.add_subcommand("classify", "Which subgroups of the stabilizer group occur");
  add_type_options(classify, o);
  classify->add_option("--seed", o.seed, "Sampling seed");

  app.add_subcommand("table1", "Reproduce the table of nontrivial stabilizer groups");

  auto* verify = app.add_subcommand("verify", "Run an invariant sweep");
  verify->add_option("suite", o.suite, "iota, yu, compat, order, classify or all")
      ->required()
      ->check(CLI::IsMember({"iota", "yu", "compat", "order", "classify", "all"}));
  verify->add_option("--type", o.types, "Restrict the sweep to these types (repeatable or comma separated)");
  verify->add_option("--samples", o.samples, "Random points per type");
  verify->add_option("--seed", o.seed, "Sampling seed");
  verify->add_option("--cap", o.cap, "Weyl enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*datum) return cmd_datum(o);
    if (*omega) return cmd_omega(o);
    if (*restrict_cmd) return cmd_restrict(o);
    if (*rgroup) return cmd_rgroup(o);
    if (*classify) return cmd_classify(o);
    if (*verify) return cmd_verify(o);
    return cmd_table1();
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const alcove::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
