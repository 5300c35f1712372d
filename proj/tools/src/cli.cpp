#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "mdenum/bar_state.hpp"
#include "mdenum/counting.hpp"
#include "mdenum/errors.hpp"
#include "mdenum/growth.hpp"
#include "mdenum/oracle.hpp"
#include "mdenum/transfer.hpp"

namespace mdenum::cli {

namespace {

using json = nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct JobConfig {
  std::string subcommand;
  int m = 0;
  int n = 0;
  std::vector<int> orders;
  std::string sites_file;
  std::vector<Site> sites;
  std::string v = "1";
  std::string x = "1";
  std::string y = "1";
  std::string format = "text";
  std::string mode;
  std::string growth_mode = "hosoya";
  Limits limits;
  bool verify = false;
};

struct JobResult {
  std::string value;
  std::optional<bool> verified;
  std::string text;   // overrides `value` in text format when set
  std::string csv;    // overrides the generic csv rendering when set
  json extra;         // additional top-level JSON members
};

std::vector<Site> read_sites(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open site file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("site file '" + path + "' is not valid JSON");
  }
  if (!doc.is_array()) throw UsageError("site file must hold a JSON array of [column,row] pairs");
  std::vector<Site> sites;
  for (const auto& entry : doc) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() || !entry[1].is_number_integer()) {
      throw UsageError("site file entries must be two-element integer arrays [column,row]");
    }
    sites.push_back({entry[0].get<int>(), entry[1].get<int>()});
  }
  return sites;
}

Rational rational_flag(const std::string& name, const std::string& text) {
  try {
    const Rational value = parse_rational(text);
    if (value < 0) throw std::invalid_argument("negative");
    return value;
  } catch (const std::invalid_argument&) {
    throw UsageError("--" + name + " must be a nonnegative rational p/q, got '" + text + "'");
  }
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Rational& q) { return q.get_str(); }

bool oracle_fits(const JobConfig& job) {
  return static_cast<long long>(job.m) * job.n <= job.limits.max_enumeration_cells && job.m * job.n <= 64;
}

void require_grid(const JobConfig& job) {
  if (job.m < 1 || job.n < 1) throw UsageError("--m and --n must both be given and >= 1");
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw CrossCheckError(what + " disagrees with the enumeration oracle");
}

RegionSpec region_of(const JobConfig& job) {
  RegionSpec spec;
  spec.m = job.m;
  spec.n = job.n;
  if (!job.orders.empty()) {
    if (job.orders.size() != 4) throw UsageError("--orders takes four values p,q,r,s");
    spec.p = job.orders[0];
    spec.q = job.orders[1];
    spec.r = job.orders[2];
    spec.s = job.orders[3];
  }
  spec.sites = job.sites;
  return spec;
}

JobResult run_partition(const JobConfig& job) {
  require_grid(job);
  JobResult out;
  if (job.mode == "symbolic") {
    const auto g = partition_function(job.m, job.n, job.limits);
    out.value = g.to_string();
    if (job.verify && oracle_fits(job)) {
      expect(g == oracle::brute_force_partition(job.m, job.n, job.limits), "partition polynomial");
      out.verified = true;
    }
    return out;
  }
  const Rational v = rational_flag("v", job.v);
  const Rational x = rational_flag("x", job.x);
  const Rational y = rational_flag("y", job.y);
  const Rational value = partition_value(job.m, job.n, v, x, y, job.limits);
  out.value = to_string(value);
  if (job.verify && oracle_fits(job)) {
    expect(value == oracle::brute_force_partition(job.m, job.n, job.limits).eval(v, x, y), "partition value");
    out.verified = true;
  }
  return out;
}

JobResult run_matching_poly(const JobConfig& job) {
  require_grid(job);
  JobResult out;
  if (job.mode == "symbolic") {
    const auto poly = matching_polynomial(job.m, job.n, job.limits);
    out.value = poly.to_string();
    if (job.verify && oracle_fits(job)) {
      UniPolynomial expected;
      const auto brute = oracle::brute_force_partition(job.m, job.n, job.limits);
      for (const auto& t : brute.terms()) {
        const auto k = static_cast<std::size_t>(t.nx + t.ny);
        if (expected.coeffs.size() <= k) expected.coeffs.resize(k + 1, 0);
        expected.coeffs[k] += t.coeff;
      }
      expect(poly == expected, "matching polynomial");
      out.verified = true;
    }
    return out;
  }
  // Numeric mode evaluates the matching polynomial at z = --x.
  const Rational z = rational_flag("x", job.x);
  const Rational value = partition_value(job.m, job.n, 1, z, z, job.limits);
  out.value = to_string(value);
  if (job.verify && oracle_fits(job)) {
    expect(value == oracle::brute_force_partition(job.m, job.n, job.limits).eval(1, z, z), "matching polynomial value");
    out.verified = true;
  }
  return out;
}

JobResult run_hosoya(const JobConfig& job) {
  require_grid(job);
  JobResult out;
  const Natural value = hosoya_index(job.m, job.n, job.limits);
  out.value = value.get_str();
  if (job.verify && oracle_fits(job)) {
    expect(value == oracle::brute_force_partition(job.m, job.n, job.limits).coefficient_sum(), "Hosoya index");
    out.verified = true;
  }
  return out;
}

JobResult run_dimer(const JobConfig& job) {
  require_grid(job);
  JobResult out;
  const Rational x = rational_flag("x", job.x);
  const Rational y = rational_flag("y", job.y);
  Rational value;
  if (is_integer(x) && is_integer(y)) {
    value = Rational(pure_dimer_count(job.m, job.n, x.get_num(), y.get_num(), job.limits));
  } else {
    value = partition_value(job.m, job.n, 0, x, y, job.limits);
  }
  out.value = to_string(value);
  if (!job.verify) return out;
  if (x == 1 && y == 1 && (job.m * job.n) % 2 == 0 && job.m <= 32 && job.n <= 32) {
    expect(value == Rational(oracle::kasteleyn_product(job.m, job.n)), "pure dimer count");
    out.verified = true;
  } else if (oracle_fits(job)) {
    expect(value == oracle::brute_force_partition(job.m, job.n, job.limits).eval(0, x, y), "pure dimer count");
    out.verified = true;
  }
  return out;
}

JobResult run_monomer_boundary(const JobConfig& job) {
  require_grid(job);
  JobResult out;
  // The entry comparison inside the count is always on; --verify adds the oracle.
  const auto result = single_boundary_monomer_count(job.m, job.n, true, job.limits);
  out.value = result.count.get_str();
  if (job.verify && oracle_fits(job)) {
    expect(result.count == oracle::brute_force_fixed(job.m, job.n, {{1, 1}}, job.limits), "single monomer count");
    out.verified = true;
  }
  return out;
}

JobResult run_fixed(const JobConfig& job) {
  require_grid(job);
  JobResult out;
  const Natural value = fixed_monomer_count(job.m, job.n, job.sites, job.limits);
  out.value = value.get_str();
  if (job.verify && oracle_fits(job)) {
    expect(value == oracle::brute_force_fixed(job.m, job.n, job.sites, job.limits), "fixed monomer count");
    out.verified = true;
  }
  return out;
}

JobResult run_aztec(const JobConfig& job) {
  require_grid(job);
  const RegionSpec spec = region_of(job);
  JobResult out;
  const Natural value = spec.sites.empty() ? aztec_octagon_count(spec, job.limits)
                                           : aztec_octagon_holes_count(spec, job.limits);
  out.value = value.get_str();
  if (!job.verify) return out;
  const bool diamond = spec.sites.empty() && spec.m == spec.n && spec.m % 2 == 0 && spec.p == spec.m / 2 &&
                       spec.q == spec.p && spec.r == spec.p && spec.s == spec.p;
  const bool augmented = spec.sites.empty() && spec.m == spec.n + 1 && spec.n % 2 == 0 && spec.p == spec.n / 2 &&
                         spec.q == spec.p && spec.r == spec.p && spec.s == spec.p;
  if (oracle_fits(job)) {
    expect(value == oracle::brute_force_octagon(spec, job.limits), "octagon count");
    out.verified = true;
  } else if (diamond) {
    expect(value == oracle::aztec_closed_form(spec.p), "Aztec diamond count");
    out.verified = true;
  } else if (augmented) {
    expect(value == oracle::delannoy_augmented(spec.p), "augmented Aztec diamond count");
    out.verified = true;
  }
  return out;
}

JobResult run_growth(const JobConfig& job) {
  require_grid(job);
  GrowthMode mode;
  if (job.growth_mode == "hosoya") {
    mode = GrowthMode::Hosoya;
  } else if (job.growth_mode == "pure-dimer") {
    mode = GrowthMode::PureDimer;
  } else {
    throw UsageError("--growth-mode must be hosoya or pure-dimer");
  }
  const GrowthTable table = growth_estimate(job.m, job.n, mode, job.limits);
  JobResult out;
  out.value = table.running_sup().to_string(25);
  out.csv = table.to_csv();
  out.text = table.to_csv() + "running_sup " + out.value + "\n";
  out.extra["table"] = json::parse(table.to_json());
  if (job.verify && mode == GrowthMode::Hosoya) {
    const auto violations = fekete_verify(table.values(), 0, FeketeDirection::Super);
    if (!violations.empty()) {
      throw CrossCheckError("supermultiplicativity fails: " + violations.front().describe());
    }
    out.verified = true;
  }
  return out;
}

// Runs every oracle comparison that applies to an m x n grid.
JobResult run_verify(const JobConfig& job) {
  require_grid(job);
  std::vector<std::string> passed;
  if (oracle_fits(job)) {
    expect(partition_function(job.m, job.n, job.limits) == oracle::brute_force_partition(job.m, job.n, job.limits),
           "partition polynomial");
    passed.push_back("partition");
    expect(fixed_monomer_count(job.m, job.n, {}, job.limits) == oracle::brute_force_fixed(job.m, job.n, {}, job.limits),
           "fixed monomer count");
    passed.push_back("fixed");
  }
  if ((job.m * job.n) % 2 == 0 && job.m <= 32 && job.n <= 32) {
    expect(pure_dimer_count(job.m, job.n, 1, 1, job.limits) == oracle::kasteleyn_product(job.m, job.n),
           "pure dimer count");
    passed.push_back("kasteleyn");
  }
  if (job.m % 2 == 1 && job.n % 2 == 1) {
    const auto single = single_boundary_monomer_count(job.m, job.n, true, job.limits);
    passed.push_back("monomer-boundary-entries");
    if (oracle_fits(job)) {
      expect(single.count == oracle::brute_force_fixed(job.m, job.n, {{1, 1}}, job.limits), "single monomer count");
      passed.push_back("monomer-boundary");
    }
  }
  if (job.m <= job.limits.max_dense_bits) {
    const auto w = numeric_weights(1, 1, 1);
    const auto block = dense_matrix(build_bar_operator(job.m, w, job.limits), job.limits);
    expect(block == dense_merged_form(job.m, w, job.limits) && block == dense_tensor_form(job.m, w, true, job.limits),
           "bar matrix construction");
    passed.push_back("construction");
  }
  JobResult out;
  std::ostringstream value;
  for (std::size_t i = 0; i < passed.size(); ++i) value << (i ? "," : "") << passed[i];
  out.value = passed.empty() ? "none" : value.str();
  out.verified = passed.empty() ? std::optional<bool>{} : std::optional<bool>{true};
  return out;
}

json query_of(const JobConfig& job) {
  json q = {{"subcommand", job.subcommand}, {"m", job.m}, {"n", job.n}};
  if (!job.orders.empty()) q["orders"] = job.orders;
  if (!job.sites.empty()) {
    json sites = json::array();
    for (const auto& s : job.sites) sites.push_back({s.column, s.row});
    q["sites"] = sites;
  }
  q["v"] = job.v;
  q["x"] = job.x;
  q["y"] = job.y;
  q["mode"] = job.mode;
  if (job.subcommand == "growth") q["growth_mode"] = job.growth_mode;
  q["max_state_bits"] = job.limits.max_numeric_bits;
  q["max_symbolic_bits"] = job.limits.max_symbolic_bits;
  q["max_cells"] = job.limits.max_enumeration_cells;
  q["verify"] = job.verify;
  return q;
}

std::string render(const JobConfig& job, const JobResult& result, double elapsed_ms) {
  if (job.format == "json") {
    json doc = {{"query", query_of(job)}, {"result", result.value}, {"elapsed_ms", elapsed_ms}};
    doc["verified"] = result.verified ? json(*result.verified) : json(nullptr);
    for (const auto& [key, value] : result.extra.items()) doc[key] = value;
    return doc.dump() + "\n";
  }
  if (job.format == "csv") {
    if (!result.csv.empty()) return result.csv;
    std::string verified = result.verified ? (*result.verified ? "true" : "false") : "";
    return "subcommand,m,n,result,verified\n" + job.subcommand + "," + std::to_string(job.m) + "," +
           std::to_string(job.n) + "," + result.value + "," + verified + "\n";
  }
  return result.text.empty() ? result.value + "\n" : result.text;
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  CLI::App app{"Exact monomer-dimer enumeration on grid graphs", "mdenum"};
  app.require_subcommand(1);
  JobConfig job;

  const std::map<std::string, std::pair<std::string, std::function<JobResult(const JobConfig&)>>> commands{
      {"partition", {"Partition polynomial G(v,x,y) or its value", run_partition}},
      {"matching-poly", {"Matching polynomial in z", run_matching_poly}},
      {"hosoya", {"Hosoya index (number of matchings)", run_hosoya}},
      {"dimer", {"Perfect matching count, optionally x/y weighted", run_dimer}},
      {"monomer-boundary", {"Coverings with one monomer at a corner, odd m and n", run_monomer_boundary}},
      {"fixed", {"Perfect matchings with a fixed monomer set (--sites)", run_fixed}},
      {"aztec", {"Aztec octagon tilings (--orders p,q,r,s, optional holes via --sites)", run_aztec}},
      {"growth", {"Growth table for all sizes up to m x n", run_growth}},
      {"verify", {"Run every applicable oracle cross-check for an m x n grid", run_verify}},
  };

  for (const auto& [name, entry] : commands) {
    CLI::App* sub = app.add_subcommand(name, entry.first);
    sub->add_option("--m", job.m, "Columns (bar length)")->check(CLI::PositiveNumber);
    sub->add_option("--n", job.n, "Rows")->check(CLI::PositiveNumber);
    sub->add_option("--orders", job.orders, "Corner orders p,q,r,s")->delimiter(',')->expected(4);
    sub->add_option("--sites", job.sites_file, "JSON file with [[column,row],...]");
    sub->add_option("--v", job.v, "Monomer activity p/q");
    sub->add_option("--x", job.x, "Horizontal dimer activity p/q");
    sub->add_option("--y", job.y, "Vertical dimer activity p/q");
    sub->add_option("--format", job.format)->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--mode", job.mode)->check(CLI::IsMember({"symbolic", "numeric"}));
    sub->add_option("--growth-mode", job.growth_mode)->check(CLI::IsMember({"hosoya", "pure-dimer"}));
    sub->add_option("--max-state-bits", job.limits.max_numeric_bits, "State-bit limit for numeric runs")
        ->check(CLI::Range(1, kMaxStateLength));
    sub->add_option("--max-symbolic-bits", job.limits.max_symbolic_bits)->check(CLI::Range(1, kMaxStateLength));
    sub->add_option("--max-cells", job.limits.max_enumeration_cells, "Oracle enumeration limit")
        ->check(CLI::Range(1, 64));
    sub->add_flag("--verify", job.verify, "Cross-check against an oracle when within bounds");
  }

  Outcome outcome;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    outcome.out = app.help();
    return outcome;
  } catch (const CLI::CallForAllHelp&) {
    outcome.out = app.help("", CLI::AppFormatMode::All);
    return outcome;
  } catch (const CLI::ParseError& e) {
    outcome.status = kUsage;
    outcome.err = std::string("usage error: ") + e.what() + "\n";
    return outcome;
  }

  job.subcommand = app.get_subcommands().front()->get_name();
  if (job.mode.empty()) job.mode = (job.subcommand == "partition" || job.subcommand == "matching-poly") ? "symbolic" : "numeric";

  const auto started = std::chrono::steady_clock::now();
  try {
    if (!job.sites_file.empty()) job.sites = read_sites(job.sites_file);
    if (!job.orders.empty() && job.subcommand != "aztec") throw UsageError("--orders applies to aztec only");
    if (!job.sites.empty() && job.subcommand != "fixed" && job.subcommand != "aztec") {
      throw UsageError("--sites applies to fixed and aztec only");
    }
    const JobResult result = commands.at(job.subcommand).second(job);
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    outcome.out = render(job, result, static_cast<double>(static_cast<long long>(elapsed * 1000.0)) / 1000.0);
  } catch (const ResourceLimitError& e) {
    outcome.status = kResourceGuard;
    outcome.err = std::string("resource limit: ") + e.what() + "\n";
  } catch (const CrossCheckError& e) {
    outcome.status = kCrossCheck;
    outcome.err = std::string("cross-check failed: ") + e.what() + "\n";
  } catch (const UsageError& e) {
    outcome.status = kUsage;
    outcome.err = std::string("usage error: ") + e.what() + "\n";
  } catch (const std::invalid_argument& e) {
    outcome.status = kUsage;
    outcome.err = std::string("invalid input: ") + e.what() + "\n";
  } catch (const std::out_of_range& e) {
    outcome.status = kUsage;
    outcome.err = std::string("invalid input: ") + e.what() + "\n";
  }
  return outcome;
}

}  // namespace mdenum::cli
