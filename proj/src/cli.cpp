#include "fairdiv/cli.hpp"

#include "fairdiv/errors.hpp"
#include "fairdiv/random_profiles.hpp"
#include "fairdiv/sweeps.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

namespace fairdiv::cli {

using io::json;

namespace {

const std::array<const char*, 7> kColumns = {"instance", "mechanism", "truthful_utility", "manipulated_utility",
                                             "ratio", "expected", "pass"};

struct Globals {
  std::string format = "json";
  std::uint64_t seed = kDefaultSeed;
  std::string out;
};

struct Outcome {
  json result;
  std::optional<json> rows;
  bool pass = true;
};

// Inputs seen by the command, hashed into the report.
class Inputs {
 public:
  explicit Inputs(const std::vector<std::string>& args) {
    for (const auto& a : args) {
      data_ += a;
      data_.push_back('\0');
    }
  }

  json file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError(path, "", "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    data_ += path;
    data_.push_back('\0');
    data_ += text;
    data_.push_back('\0');
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw FormatError(path, "", std::string("invalid JSON: ") + e.what());
    }
  }

  Profile profile(const std::string& path) { return io::profile_from_json(file(path), path); }

  std::string digest() const { return "sha256:" + sha256_hex(data_); }

 private:
  std::string data_;
};

Rational rational_arg(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(std::string(flag) + ": " + e.what());
  }
}

std::vector<int> order_arg(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw InvalidArgument("--order: '" + text + "' is not a comma-separated list of integers");
    }
  }
  return out;
}

int agent_arg(int agent, const Profile& p) {
  if (agent < 1 || agent > p.agents()) {
    throw ParameterOutOfRange("--agent must lie in 1.." + std::to_string(p.agents()));
  }
  return agent - 1;
}

json utilities(const Profile& p, const Allocation& a) {
  json out = json::array();
  for (int i = 0; i < p.agents(); ++i) out.push_back(io::to_json(utility(p, a, i)));
  return out;
}

json row(const std::string& instance, const std::string& mechanism, const Value& truthful, const Value& manipulated,
         const ExtendedRatio& ratio, const std::string& expected, bool pass) {
  return json{{"instance", instance},
              {"mechanism", mechanism},
              {"truthful_utility", truthful.to_string()},
              {"manipulated_utility", manipulated.to_string()},
              {"ratio", ratio.to_string()},
              {"expected", expected},
              {"pass", pass}};
}

// --- subcommands ---------------------------------------------------------

struct RunArgs {
  std::string mechanism, instance, order, trace;
};

Outcome do_run(const RunArgs& a, Inputs& in) {
  const MechanismKind kind = parse_mechanism(a.mechanism);
  const Profile p = in.profile(a.instance);
  std::vector<int> order;
  if (!a.order.empty()) {
    if (kind != MechanismKind::envy_graph_fixed) throw InvalidArgument("--order only applies to eg-fixed");
    order = order_arg(a.order);
  }
  Trace trace;
  const Allocation alloc = run_mechanism(kind, p, order, &trace);
  if (!a.trace.empty()) {
    std::ofstream t(a.trace);
    if (!t) throw InvalidArgument("cannot write trace to " + a.trace);
    t << io::to_json(trace).dump(2) << "\n";
  }
  Outcome o;
  o.result = {{"mechanism", a.mechanism},
              {"allocation", io::to_json(alloc)["bundles"]},
              {"utilities", utilities(p, alloc)}};
  return o;
}

struct AuditArgs {
  std::string instance, allocation, alpha = "1";
};

Outcome do_audit(const AuditArgs& a, Inputs& in) {
  const Profile p = in.profile(a.instance);
  const Allocation alloc = io::allocation_from_json(in.file(a.allocation), p.agents(), p.goods(), a.allocation);
  const FairnessReport r = is_alpha_ef1(p, alloc, rational_arg(a.alpha, "--alpha"));
  Outcome o;
  o.result = io::to_json(r);
  o.pass = r.satisfied;
  return o;
}

struct ManipulateArgs {
  std::string mechanism, instance, family = "all-orders", order;
  int agent = 1;
};

MisreportFamily family_arg(const std::string& spec, int goods, Inputs& in) {
  if (spec == "all-orders") return MisreportFamily::all_orders(goods);
  if (spec.rfind("grid:", 0) == 0) return MisreportFamily::grid(goods, rational_arg(spec.substr(5), "--family grid"));
  if (spec.rfind("file:", 0) == 0) {
    const std::string path = spec.substr(5);
    const json j = in.file(path);
    const json* list = &j;
    std::string field;
    if (j.is_object() && j.contains("reports")) {
      list = &j["reports"];
      field = "/reports";
    }
    if (!list->is_array()) throw FormatError(path, field, "expected an array of valuations");
    std::vector<Valuation> reports;
    for (std::size_t k = 0; k < list->size(); ++k) {
      reports.push_back(io::valuation_from_json((*list)[k], goods, path, field + "/" + std::to_string(k)));
    }
    return MisreportFamily::explicit_list(std::move(reports));
  }
  throw InvalidArgument("--family must be all-orders, grid:STEP or file:PATH, got '" + spec + "'");
}

Outcome do_manipulate(const ManipulateArgs& a, Inputs& in) {
  const MechanismKind kind = parse_mechanism(a.mechanism);
  const Profile p = in.profile(a.instance);
  const int agent = agent_arg(a.agent, p);
  std::vector<int> order;
  if (!a.order.empty()) order = order_arg(a.order);
  const MisreportFamily family = family_arg(a.family, p.goods(), in);
  const Witness w = best_manipulation(make_mechanism(kind, order), p, agent, family);
  Outcome o;
  o.result = {{"mechanism", a.mechanism},
              {"family", a.family},
              {"family_size", family.size()},
              {"witness", io::to_json(w)}};
  return o;
}

struct ClassArgs {
  std::string instance, cls;
  int agent = 1;
};

Outcome do_check_class(const ClassArgs& a, Inputs& in) {
  const Profile p = in.profile(a.instance);
  const int agent = agent_arg(a.agent, p);
  const ClassCheckResult r = check_class(p.valuation(agent), parse_class(a.cls));
  Outcome o;
  o.result = io::to_json(r);
  o.result["agent"] = a.agent;
  o.pass = r.holds;
  return o;
}

// --- reproduce -----------------------------------------------------------

struct ChainArgs {
  std::string delta = "5", eps = "1/100", alpha_fair, threshold;
  bool pad = false;
};

Outcome chain_outcome(const ProfileChain& chain, const std::string& label, const Rational& alpha_fair,
                      const Rational& threshold) {
  Outcome o;
  o.result["chain"] = io::to_json(chain);
  o.result["alpha_fair"] = io::to_json(alpha_fair);
  o.result["ratio_threshold"] = io::to_json(threshold);
  o.rows = json::array();
  try {
    const AuditResult r = audit_chain(make_mechanism(MechanismKind::round_robin), chain, alpha_fair, threshold);
    o.result["agents_swapped"] = r.swapped;
    const ProfileChain used = r.swapped ? swap_agents(chain) : chain;
    if (const auto* f = std::get_if<ChainFairnessFailure>(&r.outcome)) {
      o.result["outcome"] = "fairness-violation";
      o.result["profile"] = used.names[static_cast<std::size_t>(f->profile)];
      o.result["fairness"] = io::to_json(f->report);
    } else {
      const auto& cw = std::get<ChainWitness>(r.outcome);
      const DeviationEdge& e = used.edges[static_cast<std::size_t>(cw.edge)];
      const std::string edge = used.names[static_cast<std::size_t>(e.from)] + "->" +
                               used.names[static_cast<std::size_t>(e.to)];
      o.result["outcome"] = "witness";
      o.result["edge"] = edge;
      o.result["claimed_ratio"] = io::to_json(e.claimed);
      o.result["witness"] = io::to_json(cw.witness);
      o.rows->push_back(row(label + " " + edge + " agent " + std::to_string(e.agent + 1), "rr",
                            cw.witness.truthful_utility, cw.witness.manipulated_utility, cw.witness.ratio,
                            ">=" + format_rational(threshold), true));
    }
  } catch (const NoWitness& e) {
    o.result["outcome"] = "none";
    o.result["message"] = e.what();
    o.pass = false;
  }
  return o;
}

Outcome do_additive_chain(const ChainArgs& a) {
  const Rational alpha = a.alpha_fair.empty() ? ratio(3, 5) : rational_arg(a.alpha_fair, "--alpha-fair");
  const Rational threshold = a.threshold.empty() ? ratio(3, 2) : rational_arg(a.threshold, "--threshold");
  return chain_outcome(lower_bound_chain_additive(rational_arg(a.delta, "--delta"), a.pad), "additive chain", alpha,
                       threshold);
}

Outcome do_cancelable_chain(const ChainArgs& a) {
  const Rational& phi = golden_ratio();
  const Rational alpha = a.alpha_fair.empty() ? Rational(phi - 1) : rational_arg(a.alpha_fair, "--alpha-fair");
  const Rational threshold =
      a.threshold.empty() ? Rational(phi - ratio(1, 1000000000)) : rational_arg(a.threshold, "--threshold");
  return chain_outcome(
      lower_bound_chain_cancelable(rational_arg(a.delta, "--delta"), rational_arg(a.eps, "--eps"), a.pad),
      "cancelable chain", alpha, threshold);
}

Outcome hard_instances(const std::vector<HardInstance>& instances, bool include_profiles) {
  Outcome o;
  o.rows = json::array();
  json list = json::array();
  for (const auto& inst : instances) {
    const Replay r = replay(inst);
    json item;
    item["name"] = inst.name;
    item["mechanism"] = std::string(mechanism_name(inst.mechanism));
    item["agent"] = inst.agent + 1;
    if (include_profiles) item["instance"] = io::to_json(inst.profile);
    item["misreport"] = io::to_json(inst.misreport);
    item["truthful_allocation"] = io::to_json(r.truthful)["bundles"];
    item["manipulated_allocation"] = io::to_json(r.manipulated)["bundles"];
    item["truthful_utility"] = io::to_json(r.truthful_utility);
    item["manipulated_utility"] = io::to_json(r.manipulated_utility);
    item["ratio"] = r.ratio.to_string();
    item["expected_ratio"] = io::to_json(inst.expected);
    item["pass"] = r.matches;
    list.push_back(std::move(item));
    o.rows->push_back(row(inst.name, std::string(mechanism_name(inst.mechanism)), r.truthful_utility,
                          r.manipulated_utility, r.ratio, format_rational(inst.expected), r.matches));
    o.pass = o.pass && r.matches;
  }
  o.result["instances"] = std::move(list);
  return o;
}

Outcome do_submodular(int n, int w, int t) { return hard_instances({submodular_hard_instance(n, w, t)}, true); }

Outcome do_xos(int n, int m) {
  const HardInstance inst = xos_hard_instance(n, m);
  Outcome o = hard_instances({inst}, true);
  const EnvyMeasure envy = max_envy(inst.profile, run_mechanism(inst.mechanism, inst.profile));
  o.result["truthful_max_envy"] = {{"amount", io::to_json(envy.amount)},
                                   {"envier", envy.envier + 1},
                                   {"envied", envy.envied + 1}};
  return o;
}

Outcome do_envy_graph(const std::string& eps) {
  return hard_instances(envy_graph_hard_instances(rational_arg(eps, "--eps")), true);
}

struct MappingArgs {
  std::string instance, order;
};

Outcome do_mapping(const MappingArgs& a, Inputs& in) {
  Profile p = a.instance.empty()
                  ? Profile(4, {Valuation::additive({10, 9, 8, 0}), Valuation::additive({0, 10, 0, 9})})
                  : in.profile(a.instance);
  const Valuation& v = p.valuation(0);
  const Misreport report = [&] {
    if (!a.order.empty()) {
      const std::vector<int> order = order_arg(a.order);
      return Misreport{order_report(order), order, 0};
    }
    return best_manipulation(make_mechanism(MechanismKind::round_robin), p, 0,
                             MisreportFamily::all_orders(p.goods()))
        .misreport;
  }();
  Trace truthful;
  Trace manipulated;
  round_robin(p, &truthful);
  round_robin(p.with_valuation(0, report.valuation), &manipulated);

  Outcome o;
  o.result["instance"] = io::to_json(p);
  o.result["report_order"] = report.order;
  try {
    const auto maps = build_stage_mappings(v, truthful, manipulated);
    json stages = json::array();
    for (const auto& m : maps) stages.push_back(io::to_json(m));
    o.result["stages"] = std::move(stages);
    const FactorTwoResult f = verify_factor_two_bound(v, maps, truthful, manipulated);
    o.result["bound"] = io::to_json(f);
    o.pass = f.r1_dominated && f.r2_dominated && f.split_bounds && f.bound_holds;
  } catch (const TraceMismatch& e) {
    o.result["error"] = std::string("TraceMismatch: ") + e.what();
    o.pass = false;
  } catch (const InvalidMapping& e) {
    o.result["error"] = std::string("InvalidMapping: ") + e.what();
    o.pass = false;
  }
  return o;
}

struct SweepArgs {
  int additive = 1000;
  int multiplicative = 1000;
  int count = 500;
  int max_goods = 7;
};

Outcome do_upper_bound_sweep(const SweepArgs& a, std::uint64_t seed) {
  SampleShape shape;
  shape.max_goods = a.max_goods;
  const UpperBoundSweep s = upper_bound_sweep(seed, a.additive, a.multiplicative, shape);
  auto tally = [](const SweepTally& t) {
    return json{{"profiles", t.profiles},
                {"misreports", t.runs},
                {"max_ratio", t.max_ratio.to_string()},
                {"ratio_above_2", t.ratio_violations},
                {"mapping_failures", t.mapping_failures},
                {"bound_failures", t.bound_failures}};
  };
  Outcome o;
  o.result = {{"additive", tally(s.additive)}, {"multiplicative", tally(s.multiplicative)}, {"failures", s.notes}};
  o.pass = s.passed();
  return o;
}

Outcome do_lift_sweep(const SweepArgs& a, std::uint64_t seed) {
  SampleShape shape;
  shape.max_goods = a.max_goods;
  const LiftSweep s = lift_sweep(seed, a.count, Rational(1), Rational(2), ratio(9, 10), 1.1, shape);
  Outcome o;
  o.result = {{"profiles", s.profiles},
              {"ef1_failures", s.ef1_failures},
              {"ratio_above_limit", s.ratio_violations},
              {"max_ratio", s.max_ratio},
              {"failures", s.notes}};
  o.pass = s.passed();
  return o;
}

// --- report --------------------------------------------------------------

std::string join(const std::vector<std::string>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ' ';
    out += args[i];
  }
  return out;
}

std::string csv_cell(const json& j) {
  std::string s = j.is_string() ? j.get<std::string>() : j.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), md.data(), &len) != 1) {
    throw Error("SHA-256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string emit_csv(const json& report) {
  if (!report.contains("rows")) throw NonTabularReport("report has no tabular rows");
  std::string out;
  for (std::size_t c = 0; c < kColumns.size(); ++c) {
    if (c > 0) out += ',';
    out += kColumns[c];
  }
  out += '\n';
  for (const auto& r : report["rows"]) {
    for (std::size_t c = 0; c < kColumns.size(); ++c) {
      if (c > 0) out += ',';
      out += csv_cell(r.at(kColumns[c]));
    }
    out += '\n';
  }
  return out;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fair division mechanism lab", "fairdiv"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", g.seed, "Seed for randomized commands");
  app.add_option("--out", g.out, "Write the report to PATH instead of stdout");

  Inputs in(args);
  std::function<Outcome()> action;

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run a mechanism on an instance");
  run_cmd->add_option("--mechanism", run.mechanism, "rr|rr-marginal|eg-fixed|eg-favorite")->required();
  run_cmd->add_option("--instance", run.instance, "Instance file")->required();
  run_cmd->add_option("--order", run.order, "Good order for eg-fixed, e.g. 3,1,2");
  run_cmd->add_option("--trace", run.trace, "Write the stage trace to this file");
  run_cmd->callback([&] { action = [&] { return do_run(run, in); }; });

  AuditArgs audit;
  auto* audit_cmd = app.add_subcommand("audit-fairness", "Check alpha-EF1 of an allocation");
  audit_cmd->add_option("--instance", audit.instance, "Instance file")->required();
  audit_cmd->add_option("--allocation", audit.allocation, "Allocation file")->required();
  audit_cmd->add_option("--alpha", audit.alpha, "alpha as p/q (default 1)");
  audit_cmd->callback([&] { action = [&] { return do_audit(audit, in); }; });

  ManipulateArgs manip;
  auto* manip_cmd = app.add_subcommand("manipulate", "Search a misreport family for the best manipulation");
  manip_cmd->add_option("--mechanism", manip.mechanism, "rr|rr-marginal|eg-fixed|eg-favorite")->required();
  manip_cmd->add_option("--instance", manip.instance, "Instance file")->required();
  manip_cmd->add_option("--agent", manip.agent, "Manipulating agent (1-based)")->required();
  manip_cmd->add_option("--family", manip.family, "all-orders|grid:STEP|file:PATH");
  manip_cmd->add_option("--order", manip.order, "Good order for eg-fixed");
  manip_cmd->callback([&] { action = [&] { return do_manipulate(manip, in); }; });

  ClassArgs cls;
  auto* class_cmd = app.add_subcommand("check-class", "Brute-force valuation class membership");
  class_cmd->add_option("--instance", cls.instance, "Instance file")->required();
  class_cmd->add_option("--agent", cls.agent, "Agent (1-based)")->required();
  class_cmd->add_option("--class", cls.cls, "monotone|additive|subadditive|submodular|cancelable")->required();
  class_cmd->callback([&] { action = [&] { return do_check_class(cls, in); }; });

  auto* repro = app.add_subcommand("reproduce", "Replay a constructed instance or property sweep");
  repro->require_subcommand(1);

  ChainArgs chain1;
  auto* c1 = repro->add_subcommand("thm1", "Additive lower-bound chain audited against Round-Robin");
  c1->add_option("--delta", chain1.delta, "delta >= 5 (default 5)");
  c1->add_option("--alpha-fair", chain1.alpha_fair, "EF1 level (default 3/5)");
  c1->add_option("--threshold", chain1.threshold, "Ratio threshold (default 3/2)");
  c1->add_flag("--pad", chain1.pad, "Append three zero-value goods");
  c1->callback([&] { action = [&] { return do_additive_chain(chain1); }; });

  ChainArgs chain4;
  auto* c4 = repro->add_subcommand("thm4", "Cancelable lower-bound chain audited against Round-Robin");
  c4->add_option("--delta", chain4.delta, "delta >= 5 (default 5)");
  c4->add_option("--eps", chain4.eps, "0 < eps < 1/10 (default 1/100)");
  c4->add_option("--alpha-fair", chain4.alpha_fair, "EF1 level (default phi - 1)");
  c4->add_option("--threshold", chain4.threshold, "Ratio threshold (default phi - 1e-9)");
  c4->add_flag("--pad", chain4.pad, "Append three zero-value goods");
  c4->callback([&] { action = [&] { return do_cancelable_chain(chain4); }; });

  int sn = 3, sw = 10, st = 90;
  auto* c5 = repro->add_subcommand("thm5", "Submodular instance against marginal Round-Robin");
  c5->add_option("--n", sn, "Agents");
  c5->add_option("--w", sw, "Goods per agent in the head (>= 2)");
  c5->add_option("--T", st, "Tail goods (>= w n^2)");
  c5->callback([&] { action = [&] { return do_submodular(sn, sw, st); }; });

  int xn = 2, xm = 5;
  auto* cx = repro->add_subcommand("xos", "XOS instance against marginal Round-Robin");
  cx->add_option("--n", xn, "Agents");
  cx->add_option("--m", xm, "Goods");
  cx->callback([&] { action = [&] { return do_xos(xn, xm); }; });

  std::string eps = "1/100";
  auto* ce = repro->add_subcommand("envy-graph", "Envy-graph instances (fixed order and favorite good)");
  ce->add_option("--eps", eps, "0 < eps < 1 (default 1/100)");
  ce->callback([&] { action = [&] { return do_envy_graph(eps); }; });

  MappingArgs mapping;
  auto* cm = repro->add_subcommand("thm3-mapping", "Stage-by-stage goods mapping for a Round-Robin manipulation");
  cm->add_option("--instance", mapping.instance, "Instance file (default: built-in 19/18 example)");
  cm->add_option("--order", mapping.order, "Agent 1's reported order (default: best over all orders)");
  cm->callback([&] { action = [&] { return do_mapping(mapping, in); }; });

  SweepArgs sweep;
  auto* cb = repro->add_subcommand("upper-bound-sweep", "All-orders Round-Robin manipulation on random profiles");
  cb->add_option("--additive", sweep.additive, "Additive profiles (default 1000)");
  cb->add_option("--multiplicative", sweep.multiplicative, "Multiplicative profiles (default 1000)");
  cb->add_option("--max-goods", sweep.max_goods, "Largest m (default 7)")->check(CLI::Range(1, 8));
  cb->callback([&] { action = [&] { return do_upper_bound_sweep(sweep, g.seed); }; });

  auto* cl = repro->add_subcommand("lift-sweep", "Lifted Round-Robin (eps=1, alpha=2) on random additive profiles");
  cl->add_option("--count", sweep.count, "Profiles (default 500)");
  cl->add_option("--max-goods", sweep.max_goods, "Largest m (default 7)")->check(CLI::Range(1, 8));
  cl->callback([&] { action = [&] { return do_lift_sweep(sweep, g.seed); }; });

  std::vector<std::string> argv_store{"fairdiv"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    Outcome o = action();
    json report;
    report["command"] = join(args);
    report["input_digest"] = in.digest();
    report["seed"] = g.seed;
    report["status"] = o.pass ? "PASS" : "FAIL";
    report["result"] = std::move(o.result);
    if (o.rows) report["rows"] = std::move(*o.rows);

    const std::string text = g.format == "csv" ? emit_csv(report) : report.dump(2) + "\n";
    if (g.out.empty()) {
      out << text;
    } else {
      std::ofstream f(g.out);
      if (!f) throw InvalidArgument("cannot write " + g.out);
      f << text;
    }
    return o.pass ? kExitOk : kExitFail;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace fairdiv::cli
