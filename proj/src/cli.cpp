#include "stslab/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "stslab/appendix_c.hpp"
#include "stslab/code_io.hpp"
#include "stslab/energy_barrier.hpp"
#include "stslab/errors.hpp"
#include "stslab/lattice.hpp"
#include "stslab/sts_analysis.hpp"
#include "stslab/thermal.hpp"

#ifndef STSLAB_VERSION
#define STSLAB_VERSION "unknown"
#endif

namespace stslab::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::set<std::string> kCommands = {"build", "analyze", "barrier", "thermal", "regions", "appendixc"};
const std::set<std::string> kFlags = {"family", "D",       "m",        "L",      "dims",    "out",
                                      "seed",   "T",       "eps",      "sweeps", "chains",  "max-weight",
                                      "threads", "in",     "logical",  "budget", "trials",  "burn-in",
                                      "qubits", "trace",   "record-every"};

struct Args {
  std::string command;
  std::map<std::string, std::string> flags;
  std::vector<std::string> positional;

  bool has(const std::string& k) const { return flags.count(k) != 0; }
  std::string get(const std::string& k, const std::string& def = "") const {
    auto it = flags.find(k);
    return it == flags.end() ? def : it->second;
  }
};

Args parse_args(const std::vector<std::string>& argv) {
  Args a;
  std::string input;
  std::map<std::string, std::string> values;
  CLI::App app{"stslab"};
  app.set_help_flag();
  app.add_option("command", a.command)->required();
  app.add_option("input", input);
  for (const auto& f : kFlags) app.add_option("--" + f, values[f]);
  try {
    app.parse(std::vector<std::string>(argv.rbegin(), argv.rend()));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  if (!kCommands.count(a.command)) throw UsageError("unknown command '" + a.command + "'");
  for (const auto& f : kFlags)
    if (app.count("--" + f)) a.flags[f] = values[f];
  if (app.count("input")) a.positional.push_back(input);
  return a;
}

template <class T>
T parse_number(const std::string& flag, const std::string& s) {
  T v{};
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end) throw ValidationError("--" + flag + ": not a number: '" + s + "'");
  return v;
}

std::size_t size_flag(const Args& a, const std::string& k, std::size_t def) {
  return a.has(k) ? parse_number<std::size_t>(k, a.get(k)) : def;
}

double double_flag(const Args& a, const std::string& k, double def) {
  return a.has(k) ? parse_number<double>(k, a.get(k)) : def;
}

std::vector<std::size_t> size_list(const std::string& flag, const std::string& s) {
  std::vector<std::size_t> out;
  std::string tok;
  for (char c : s + ",") {
    if (c == ',' || c == 'x') {
      if (!tok.empty()) out.push_back(parse_number<std::size_t>(flag, tok));
      tok.clear();
    } else {
      tok += c;
    }
  }
  if (out.empty()) throw ValidationError("--" + flag + ": empty list");
  return out;
}

// Lattice spec from --family/--D/--m/--L/--dims.
json spec_from_flags(const Args& a) {
  json spec;
  spec["family"] = a.get("family");
  if (a.has("dims")) {
    spec["dims"] = size_list("dims", a.get("dims"));
  } else {
    if (!a.has("D") || !a.has("L")) throw ValidationError("lattice spec needs --dims or --D and --L");
    spec["D"] = size_flag(a, "D", 0);
    spec["L"] = size_flag(a, "L", 0);
  }
  if (a.has("D")) spec["D"] = size_flag(a, "D", 0);
  if (a.has("m")) spec["m"] = size_flag(a, "m", 0);
  return spec;
}

// The input as given (for the manifest) and its parsed JSON.
std::pair<json, json> resolve_input(const Args& a) {
  std::optional<std::string> src;
  if (a.has("in")) src = a.get("in");
  else if (!a.positional.empty()) src = a.positional.front();
  if (src) {
    if (!src->empty() && src->front() == '{') {
      try {
        json j = json::parse(*src);
        return {j, j};
      } catch (const json::parse_error& e) {
        throw ValidationError(std::string("inline input: ") + e.what());
      }
    }
    return {json(*src), read_json_file(*src)};
  }
  if (!a.has("family")) throw ValidationError("no input: pass a code file, inline JSON, or --family");
  json spec = spec_from_flags(a);
  return {spec, spec};
}

std::size_t thread_count(const Args& a) {
  if (a.has("threads")) return size_flag(a, "threads", 0);
  if (const char* env = std::getenv("STSLAB_THREADS"); env && *env) return parse_number<std::size_t>("threads", env);
  return 0;
}

json manifest(const Args& a, const json& input) {
  json flags = json::object();
  for (const auto& [k, v] : a.flags)
    if (k != "threads") flags[k] = v;
  return {{"command", a.command},
          {"input", input},
          {"output", a.has("out") ? json(a.get("out")) : json(nullptr)},
          {"seed", a.has("seed") ? json(size_flag(a, "seed", 0)) : json(nullptr)},
          {"flags", flags},
          {"version", STSLAB_VERSION}};
}

std::string fmt(double x) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, p);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit(const Args& a, std::ostream& out, const std::string& text) {
  if (a.has("out")) {
    std::ofstream f(a.get("out"), std::ios::binary);
    if (!f) throw ValidationError("cannot write " + a.get("out"));
    f << text;
  } else {
    out << text;
  }
}

void emit_json(const Args& a, std::ostream& out, json body, const json& input) {
  body["manifest"] = manifest(a, input);
  emit(a, out, body.dump(2) + "\n");
}

PauliOperator logical_flag(const Args& a, const StabilizerCode& code, const PauliOperator& fallback) {
  if (!a.has("logical")) return fallback;
  PauliOperator l = PauliOperator::parse(a.get("logical"));
  if (l.n_qubits() != code.n_qubits()) throw ValidationError("--logical has the wrong length");
  return l;
}

int cmd_build(const Args& a, std::ostream& out) {
  auto [input, spec] = resolve_input(a);
  if (!spec.contains("family") || spec.contains("generators"))
    throw ValidationError("build needs a lattice spec (family, dims or D and L, m for toric)");
  const LatticeCode lc = lattice_from_spec(spec);
  emit_json(a, out, lattice_code_to_json(lc), input);
  return kExitOk;
}

int cmd_analyze(const Args& a, std::ostream& out) {
  auto [input, spec] = resolve_input(a);
  const LatticeCode lc = load_any(spec);
  const auto& code = lc.code;
  json r;
  r["n_qubits"] = code.n_qubits();
  r["n_generators"] = code.n_generators();
  r["rank"] = code.rank();
  r["k"] = code.k();
  r["css"] = code.is_css();
  r["layout"] = {{"dims", lc.layout.n()}, {"v", lc.layout.v()}};
  if (code.k() == 0) {
    emit_json(a, out, r, input);
    return kExitOk;
  }
  const std::size_t cap = size_flag(a, "max-weight", 4);
  const DistanceResult d = code_distance_exact(code, cap);
  r["distance"] = {{"value", d.distance ? json(*d.distance) : json(nullptr)},
                   {"max_weight", d.max_weight},
                   {"exceeded", d.exceeded()}};
  if (d.witness) r["distance"]["witness"] = d.witness->to_string();

  const DualityReport dual = classify_dimensions(code, lc.layout);
  json pairs = json::array();
  for (std::size_t i = 0; i < dual.pairs.size(); ++i)
    pairs.push_back({{"l", dual.pairs[i].first.to_string()},
                     {"r", dual.pairs[i].second.to_string()},
                     {"dims", {dual.pair_dimensions[i].first, dual.pair_dimensions[i].second}}});
  r["logical_pairs"] = pairs;
  r["duality"] = {{"g_by_dimension", dual.g_by_dimension}, {"pass", verify_duality(dual)}};
  const TopologicalOrderReport topo = topological_order_check(code, lc.layout);
  r["topological_order"] = {{"pass", topo.pass},
                            {"g_contractible", topo.g_contractible},
                            {"max_g_single_particle", topo.max_g_single_particle}};
  emit_json(a, out, r, input);
  return kExitOk;
}

int cmd_barrier(const Args& a, std::ostream& out) {
  auto [input, spec] = resolve_input(a);
  const LatticeCode lc = load_any(spec);
  const auto& code = lc.code;
  PauliOperator fallback;
  if (!a.has("logical")) {
    const LogicalSet ls = canonical_pairs(code);
    if (ls.pairs.empty()) throw ValidationError("code has no logical operators");
    fallback = ls.pairs.front().first;
  }
  const PauliOperator l = logical_flag(a, code, fallback);
  if (!code.is_logical(l)) throw ValidationError("operator is not a logical operator of the code");
  const std::size_t cap = size_flag(a, "max-weight", kBarrierWeightCap);
  const std::size_t budget = size_flag(a, "budget", 0);
  const BarrierResult res = budget ? barrier_min_over_class(code, l, budget, cap) : barrier_for_representative(code, l, cap);
  json steps = json::array();
  for (const auto& s : res.witness.steps)
    steps.push_back({{"qubit", s.qubit}, {"pauli", std::string(1, s.pauli)}, {"energy_after", s.energy_after}});
  json r = {{"logical", l.to_string()},
            {"barrier", res.barrier},
            {"representative", res.representative.to_string()},
            {"path", steps},
            {"class_level", res.class_level},
            {"representatives_searched", res.representatives_searched},
            {"representatives_skipped", res.representatives_skipped},
            {"weight_cap", cap}};
  emit_json(a, out, r, input);
  return kExitOk;
}

int cmd_thermal(const Args& a, std::ostream& out) {
  auto [input, spec] = resolve_input(a);
  const LatticeCode lc = load_any(spec);
  const auto& code = lc.code;
  ThermalConfig cfg;
  cfg.T = double_flag(a, "T", 1.0);
  cfg.eps = double_flag(a, "eps", 0.01);
  cfg.sweeps = size_flag(a, "sweeps", 1000);
  cfg.burn_in = size_flag(a, "burn-in", cfg.sweeps / 5);
  cfg.seed = size_flag(a, "seed", 0);
  cfg.chains = size_flag(a, "chains", 1);
  cfg.threads = thread_count(a);
  cfg.record_every = size_flag(a, "record-every", 1);
  check_config(cfg);
  if (cfg.burn_in >= cfg.sweeps) throw ValidationError("--burn-in must be below --sweeps");

  PauliOperator fallback;
  if (!a.has("logical")) fallback = default_logical(code, Sector::XErrors);
  const PauliOperator l = logical_flag(a, code, fallback);
  if (!code.is_logical(l)) throw ValidationError("operator is not a logical operator of the code");
  const auto family = translation_family(lc.layout, l);
  const auto chains = sample_gibbs_css(code, sector_for(l), family, cfg);
  const OrderParameterEstimate est = estimate_from(chains, l.to_string());

  json failure_times = json::array();
  json r;
  if (const std::size_t trials = size_flag(a, "trials", 0)) {
    const MemoryTimeResult mt = memory_time(code, l, cfg, trials);
    for (auto t : mt.failure_times) failure_times.push_back(t);
    r["memory"] = {{"decoder", mt.decoder}, {"median", mt.median}, {"censored", mt.censored}};
  }
  std::uint64_t proposed = 0, accepted = 0;
  for (const auto& c : chains) {
    proposed += c.proposed;
    accepted += c.accepted;
  }
  r["T"] = cfg.T;
  r["eps"] = cfg.eps;
  r["L"] = lc.layout.n().front();
  r["mean"] = est.mean;
  r["stderr"] = est.stderr_;
  r["failure_times"] = failure_times;
  r["logical"] = l.to_string();
  r["bias_operators"] = family.size();
  r["sweeps"] = cfg.sweeps;
  r["burn_in"] = cfg.burn_in;
  r["chains"] = cfg.chains;
  r["acceptance_rate"] = proposed ? static_cast<double>(accepted) / static_cast<double>(proposed) : 0.0;

  if (a.has("trace")) {
    std::ostringstream csv;
    std::istringstream man(manifest(a, input).dump(2));
    for (std::string line; std::getline(man, line);) csv << "# manifest: " << line << "\n";
    csv << "sweep,energy,order_parameter,chain\n";
    for (const auto& c : chains)
      for (const auto& rec : c.records)
        csv << rec.sweep << ',' << csv_field(fmt(rec.energy)) << ',' << csv_field(fmt(rec.order_parameter)) << ','
            << c.chain << "\n";
    std::ofstream f(a.get("trace"), std::ios::binary);
    if (!f) throw ValidationError("cannot write " + a.get("trace"));
    f << csv.str();
  }
  emit_json(a, out, r, input);
  return kExitOk;
}

int cmd_regions(const Args& a, std::ostream& out) {
  auto [input, spec] = resolve_input(a);
  const LatticeCode lc = load_any(spec);
  const auto& code = lc.code;
  json r;
  r["k"] = code.k();
  if (a.has("qubits")) {
    const auto qs = size_list("qubits", a.get("qubits"));
    for (auto q : qs)
      if (q >= code.n_qubits()) throw ValidationError("--qubits: index out of range");
    const auto comp = complement_qubits(code.n_qubits(), qs);
    r["qubits"] = qs;
    r["g"] = g_region(code, qs);
    r["g_complement"] = g_region(code, comp);
  } else {
    json rows = json::array();
    for (std::size_t m = 0; m <= lc.layout.D(); ++m) {
      const Region reg = region_R(lc.layout, m);
      rows.push_back({{"m", m},
                      {"particles", reg.size()},
                      {"g", g_region(code, reg)},
                      {"g_complement", g_region(code, reg.complement())}});
    }
    r["R"] = rows;
  }
  emit_json(a, out, r, input);
  return kExitOk;
}

// Exhaustive checks of the column combinatorics up to height 2^max_m.
json appendixc_self_test(std::size_t max_m) {
  json r;
  bool all = true;
  {
    std::size_t cases = 0, failures = 0;
    for (std::size_t m = 1; m <= max_m; ++m) {
      const std::size_t h = std::size_t{1} << m;
      for (std::size_t ga = 0; ga < h; ++ga)
        for (std::size_t gb = 0; ga + gb < h; ++gb) {
          ++cases;
          const auto lhs = characteristic_column(g_inverse(ga + gb, m));
          const auto rhs = column_star(characteristic_column(g_inverse(ga, m)), characteristic_column(g_inverse(gb, m)));
          if (!(lhs == rhs)) ++failures;
        }
    }
    r["star_product"] = {{"cases", cases}, {"failures", failures}};
    all = all && failures == 0;
  }
  {
    std::size_t cases = 0, failures = 0;
    std::vector<std::vector<std::uint8_t>> pascal(256, std::vector<std::uint8_t>(256, 0));
    for (std::size_t n = 0; n < 256; ++n) {
      pascal[n][0] = 1;
      for (std::size_t k = 1; k <= n; ++k) pascal[n][k] = pascal[n - 1][k - 1] ^ (k < n ? pascal[n - 1][k] : 0);
      for (std::size_t k = 0; k <= n; ++k, ++cases)
        if (binomial_parity(n, k) != static_cast<bool>(pascal[n][k])) ++failures;
    }
    r["binomial_parity"] = {{"cases", cases}, {"failures", failures}};
    all = all && failures == 0;
  }
  r["pass"] = all;
  return r;
}

int cmd_appendixc(const Args& a, std::ostream& out) {
  const std::size_t m = size_flag(a, "m", 3);
  if (m == 0 || m > 6) throw ValidationError("--m must be between 1 and 6");
  json r = appendixc_self_test(m);
  r["max_m"] = m;
  emit_json(a, out, r, nullptr);
  return r["pass"].get<bool>() ? kExitOk : kExitInternal;
}

}  // namespace

std::string usage() {
  return "usage: stslab <command> [input] [flags]\n"
         "commands:\n"
         "  build      emit code JSON from --family ising|toric --D --L [--m] or --dims\n"
         "  analyze    k, distance up to --max-weight, logical pairs, duality, topological order\n"
         "  barrier    energy barrier of --logical (default: first canonical logical); --budget for class search\n"
         "  thermal    Metropolis order parameter (--T --eps --sweeps --burn-in --chains --seed),\n"
         "             memory time with --trials, CSV trace with --trace\n"
         "  regions    g of R_m for every m, or of --qubits i,j,...\n"
         "  appendixc  column combinatorics self-tests up to --m\n"
         "input: a code/lattice JSON file, inline JSON, --in, or lattice flags\n"
         "common flags: --out --threads (env STSLAB_THREADS)\n";
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Args a;
  try {
    a = parse_args(argv);
  } catch (const UsageError& e) {
    err << "stslab: " << e.what() << "\n" << usage();
    return kExitUsage;
  }
  try {
    if (a.command == "build") return cmd_build(a, out);
    if (a.command == "analyze") return cmd_analyze(a, out);
    if (a.command == "barrier") return cmd_barrier(a, out);
    if (a.command == "thermal") return cmd_thermal(a, out);
    if (a.command == "regions") return cmd_regions(a, out);
    return cmd_appendixc(a, out);
  } catch (const ValidationError& e) {
    err << "stslab: " << e.what() << "\n";
    return kExitValidation;
  } catch (const DimensionError& e) {
    err << "stslab: " << e.what() << "\n";
    return kExitValidation;
  } catch (const CapacityError& e) {
    err << "stslab: " << e.what() << "\n";
    return kExitValidation;
  } catch (const nlohmann::json::exception& e) {
    err << "stslab: malformed input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    err << "stslab: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "stslab: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace stslab::cli
