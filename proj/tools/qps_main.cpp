// Command-line front end: experiment configuration, deterministic execution,
// CSV/JSON emission, and the bundled acceptance-suite runner.
//
// Exit codes: 0 success, 1 domain failure (diagnostic thrown by a module or a
// failed acceptance criterion), 2 configuration error, 3 numeric guard trip.

#include <algorithm>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "acceptance/acceptance.hpp"
#include "acceptance/oracles.hpp"
#include "qps/annulus_green.hpp"
#include "qps/cocycle.hpp"
#include "qps/errors.hpp"
#include "qps/finite_operator.hpp"
#include "qps/ids.hpp"
#include "qps/ldt.hpp"
#include "qps/lyapunov.hpp"
#include "qps/potential.hpp"
#include "qps/reduction.hpp"
#include "qps/riesz.hpp"
#include "qps/serialize.hpp"
#include "qps/version.hpp"

namespace {

using json = nlohmann::ordered_json;
using qps::BigInt;
using qps::Frequency;
using qps::Potential;

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return std::string(buf);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s, const std::string& field) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(field + ": not a number: '" + s + "'");
  }
}

long parse_long(const std::string& s, const std::string& field) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(field + ": not an integer: '" + s + "'");
  }
}

// `golden`, `sqrt2`, `cf:1,1,2,3`, `liouville:beta=1.0,levels=4`,
// `file:freq.json`, or a plain decimal value in (0, 1).
Frequency parse_omega(const std::string& spec) {
  if (spec == "golden") return Frequency::golden();
  if (spec == "sqrt2") return Frequency::sqrt2();
  if (spec.rfind("cf:", 0) == 0) {
    std::vector<BigInt> qs;
    for (const std::string& tok : split(spec.substr(3), ',')) {
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("--omega: bad partial quotient '" + tok + "'");
      qs.emplace_back(tok);
    }
    if (qs.empty()) throw std::invalid_argument("--omega: cf: needs at least one quotient");
    return Frequency::from_quotients(qs);
  }
  if (spec.rfind("liouville:", 0) == 0) {
    double beta = -1.0;
    int levels = -1;
    for (const std::string& tok : split(spec.substr(10), ',')) {
      std::vector<std::string> kv = split(tok, '=');
      if (kv.size() != 2) throw std::invalid_argument("--omega: bad liouville field '" + tok + "'");
      if (kv[0] == "beta")
        beta = parse_double(kv[1], "--omega beta");
      else if (kv[0] == "levels")
        levels = static_cast<int>(parse_long(kv[1], "--omega levels"));
      else
        throw std::invalid_argument("--omega: unknown liouville field '" + kv[0] + "'");
    }
    if (beta <= 0.0 || levels < 2)
      throw std::invalid_argument("--omega: liouville needs beta>0 and levels>=2");
    return qps::make_liouville(beta, levels);
  }
  if (spec.rfind("file:", 0) == 0) return qps::frequency_from_json(read_file(spec.substr(5)));
  double x = parse_double(spec, "--omega");
  if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument("--omega: value must lie in (0,1)");
  return Frequency::from_double(x);
}

// `amo:lambda=3.0`, `zero`, or `file:potential.json`.
Potential parse_potential(const std::string& spec) {
  if (spec == "zero") return Potential::zero();
  if (spec.rfind("amo:lambda=", 0) == 0)
    return Potential::amo(parse_double(spec.substr(11), "--potential lambda"));
  if (spec.rfind("file:", 0) == 0) return qps::potential_from_json(read_file(spec.substr(5)));
  throw std::invalid_argument("--potential: unrecognized spec '" + spec +
                              "' (want amo:lambda=X, zero, or file:PATH)");
}

// `re` or `re,im`.
std::complex<double> parse_energy(const std::string& spec) {
  std::vector<std::string> parts = split(spec, ',');
  if (parts.size() == 1) return {parse_double(parts[0], "--energy"), 0.0};
  if (parts.size() == 2)
    return {parse_double(parts[0], "--energy"), parse_double(parts[1], "--energy imag")};
  throw std::invalid_argument("--energy: want re or re,im");
}

// `start:stop:step`, a comma list, or a single value.
std::vector<double> parse_grid(const std::string& spec, const std::string& field) {
  if (spec.find(':') != std::string::npos) {
    std::vector<std::string> parts = split(spec, ':');
    if (parts.size() != 3) throw std::invalid_argument(field + ": want start:stop:step");
    double start = parse_double(parts[0], field);
    double stop = parse_double(parts[1], field);
    double step = parse_double(parts[2], field);
    if (step <= 0.0 || stop < start)
      throw std::invalid_argument(field + ": want step > 0 and stop >= start");
    long n = static_cast<long>((stop - start) / step + 1e-9) + 1;
    std::vector<double> out;
    for (long i = 0; i < n; ++i) out.push_back(start + static_cast<double>(i) * step);
    return out;
  }
  std::vector<double> out;
  for (const std::string& tok : split(spec, ',')) out.push_back(parse_double(tok, field));
  if (out.empty()) throw std::invalid_argument(field + ": empty list");
  return out;
}

// Dyadic form `1e-2/2^k k=0..10` (comma also accepted between the two parts),
// or a plain comma list of values.
std::vector<double> parse_eta(const std::string& spec) {
  std::size_t dyadic = spec.find("/2^k");
  if (dyadic != std::string::npos) {
    double base = parse_double(spec.substr(0, dyadic), "--eta base");
    std::size_t kpos = spec.find("k=", dyadic);
    if (kpos == std::string::npos) throw std::invalid_argument("--eta: missing k=A..B range");
    std::string range = spec.substr(kpos + 2);
    std::size_t dots = range.find("..");
    if (dots == std::string::npos) throw std::invalid_argument("--eta: want k=A..B");
    long a = parse_long(range.substr(0, dots), "--eta k start");
    long b = parse_long(range.substr(dots + 2), "--eta k stop");
    if (base <= 0.0 || a < 0 || b < a || b > 60)
      throw std::invalid_argument("--eta: want base>0 and 0 <= A <= B <= 60");
    std::vector<double> out;
    for (long k = a; k <= b; ++k) out.push_back(base / std::exp2(static_cast<double>(k)));
    return out;
  }
  std::vector<double> out;
  for (const std::string& tok : split(spec, ',')) {
    double v = parse_double(tok, "--eta");
    if (v <= 0.0) throw std::invalid_argument("--eta: values must be positive");
    out.push_back(v);
  }
  return out;
}

void atomic_emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::string tmp = out_path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw qps::Error("cannot open output file: " + tmp);
    f << content;
    f.flush();
    if (!f) throw qps::Error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), out_path.c_str()) != 0)
    throw qps::Error("rename failed: " + out_path);
}

std::string csv_document(const json& config, const std::string& header,
                         const std::vector<std::string>& rows) {
  std::ostringstream out;
  out << "# version: " << qps::kVersion << "\n";
  out << "# config: " << config.dump() << "\n";
  out << header << "\n";
  for (const std::string& r : rows) out << r << "\n";
  return out.str();
}

std::string json_document(const json& config, json payload) {
  json doc;
  doc["version"] = qps::kVersion;
  doc["config"] = config;
  for (auto& [key, value] : payload.items()) doc[key] = value;
  return doc.dump(2) + "\n";
}

json bigint_json(const BigInt& q) {
  if (qps::bit_length(q) <= 62) return json(q.convert_to<long long>());
  return json(q.str());
}

// Settings shared by every compute subcommand.
struct CommonOpts {
  std::string omega = "golden";
  std::string potential = "amo:lambda=3.0";
  std::string out;
  int threads = 0;
};

void add_common(CLI::App* sub, CommonOpts* c) {
  sub->add_option("--omega", c->omega,
                  "frequency: golden | sqrt2 | cf:a1,a2,... | liouville:beta=B,levels=L | "
                  "file:PATH | decimal in (0,1)")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  sub->add_option("--potential", c->potential, "potential: amo:lambda=X | zero | file:PATH")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  sub->add_option("--out", c->out, "output path (stdout if omitted); written via temp+rename")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  sub->add_option("--threads", c->threads, "worker threads (sets QPS_THREADS)")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  // Consumed by the config-file pre-pass; registered so it shows in --help.
  sub->add_option("--config", "key-value config file; explicit flags override it")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
}

void apply_threads(const CommonOpts& c) {
  if (c.threads > 0) setenv("QPS_THREADS", std::to_string(c.threads).c_str(), 1);
}

json common_config(const std::string& subcommand, const CommonOpts& c) {
  json cfg;
  cfg["subcommand"] = subcommand;
  cfg["omega"] = c.omega;
  cfg["potential"] = c.potential;
  cfg["threads"] = c.threads > 0 ? c.threads : qps::worker_count();
  return cfg;
}

// --- config file pre-pass -------------------------------------------------
// Lines `key value` or `key=value` (# comments, blank lines skipped) become
// `--key value` tokens inserted right after the subcommand token, so explicit
// command-line flags parsed later win under the take-last policy.

std::vector<std::string> config_tokens(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("--config: cannot open '" + path + "'");
  std::vector<std::string> tokens;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    std::string s = line;
    std::size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    std::size_t end = s.find_last_not_of(" \t\r");
    s = s.substr(begin, end - begin + 1);
    if (s.empty() || s[0] == '#') continue;
    std::size_t sep = s.find_first_of("= \t");
    if (sep == std::string::npos)
      throw std::invalid_argument("--config: line " + std::to_string(lineno) +
                                  ": expected 'key value' or 'key=value'");
    std::string key = s.substr(0, sep);
    std::size_t vstart = s.find_first_not_of("= \t", sep);
    if (vstart == std::string::npos)
      throw std::invalid_argument("--config: line " + std::to_string(lineno) +
                                  ": missing value for '" + key + "'");
    while (!key.empty() && key.front() == '-') key.erase(key.begin());
    if (key.empty())
      throw std::invalid_argument("--config: line " + std::to_string(lineno) + ": empty key");
    tokens.push_back("--" + key);
    tokens.push_back(s.substr(vstart));
  }
  return tokens;
}

std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string config_path;
  std::vector<std::string> stripped;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw std::invalid_argument("--config: missing file argument");
      config_path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
    } else {
      stripped.push_back(args[i]);
    }
  }
  if (config_path.empty()) return stripped;
  std::vector<std::string> tokens = config_tokens(config_path);
  // Insert after the subcommand token (the first non-flag argument).
  std::vector<std::string> out;
  bool inserted = false;
  for (const std::string& a : stripped) {
    out.push_back(a);
    if (!inserted && !a.empty() && a[0] != '-') {
      out.insert(out.end(), tokens.begin(), tokens.end());
      inserted = true;
    }
  }
  if (!inserted) throw std::invalid_argument("--config: requires a subcommand");
  return out;
}

// --- subcommand runners ----------------------------------------------------

struct LyapunovOpts {
  CommonOpts common;
  std::string energy = "0";
  long m = 1000;
  long n_theta = 2048;
  std::string eps = "0";
};

void run_lyapunov(const LyapunovOpts& o) {
  apply_threads(o.common);
  Frequency om = parse_omega(o.common.omega);
  Potential pot = parse_potential(o.common.potential);
  std::complex<double> energy = parse_energy(o.energy);
  std::vector<double> eps_list = parse_grid(o.eps, "--eps");

  qps::Cocycle c(pot, energy, om);
  json cfg = common_config("lyapunov", o.common);
  cfg["energy"] = o.energy;
  cfg["m"] = o.m;
  cfg["ntheta"] = o.n_theta;
  cfg["eps"] = o.eps;

  std::vector<std::string> rows;
  for (double eps : eps_list) {
    double l = qps::finite_lyapunov(c, o.m, eps, o.n_theta);
    rows.push_back(fmt_double(eps) + "," + fmt_double(l) + "," + std::to_string(o.m) + "," +
                   std::to_string(o.n_theta));
  }
  atomic_emit(o.common.out, csv_document(cfg, "epsilon,L_m,m,n_theta", rows));
}

struct AccelerationOpts {
  CommonOpts common;
  std::string energy = "0";
  long m = 1000;
  long n_theta = 1024;
  double eps_min = 0.01;
  double eps_max = 0.05;
  int points = 5;
};

void run_acceleration(const AccelerationOpts& o) {
  apply_threads(o.common);
  Frequency om = parse_omega(o.common.omega);
  Potential pot = parse_potential(o.common.potential);
  qps::Cocycle c(pot, parse_energy(o.energy), om);
  json cfg = common_config("acceleration", o.common);
  cfg["energy"] = o.energy;
  cfg["m"] = o.m;
  cfg["ntheta"] = o.n_theta;
  cfg["eps_min"] = o.eps_min;
  cfg["eps_max"] = o.eps_max;
  cfg["points"] = o.points;

  qps::AccelerationEstimate est = qps::acceleration(c, o.m, o.eps_min, o.eps_max, o.points, o.n_theta);
  json payload;
  payload["slope"] = est.slope;
  payload["nearest_integer"] = est.nearest_integer;
  payload["residual"] = est.residual;
  payload["window"] = json::array({est.eps_min, est.eps_max});
  payload["quantization_suspect"] = est.quantization_suspect;
  atomic_emit(o.common.out, json_document(cfg, payload));
}

struct IdsOpts {
  CommonOpts common;
  double theta = 0.0;
  long n = 2048;
  std::string energies;
};

void run_ids(const IdsOpts& o) {
  apply_threads(o.common);
  Frequency om = parse_omega(o.common.omega);
  Potential pot = parse_potential(o.common.potential);
  std::vector<double> grid = parse_grid(o.energies, "--energies");
  std::sort(grid.begin(), grid.end());
  json cfg = common_config("ids", o.common);
  cfg["theta"] = o.theta;
  cfg["N"] = o.n;
  cfg["energies"] = o.energies;

  qps::IDSCurve curve = qps::ids_curve(pot, om, o.theta, o.n, grid);
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < curve.energies.size(); ++i)
    rows.push_back(fmt_double(curve.energies[i]) + "," + std::to_string(curve.counts[i]) + "," +
                   fmt_double(curve.value(i)));
  atomic_emit(o.common.out, csv_document(cfg, "E,count,N_value", rows));
}

struct HolderOpts {
  CommonOpts common;
  double theta = 0.0;
  long n = 8192;
  std::string energy = "0";
  std::string eta = "1e-2/2^k k=0..4";
};

void run_holder(const HolderOpts& o) {
  apply_threads(o.common);
  Frequency om = parse_omega(o.common.omega);
  Potential pot = parse_potential(o.common.potential);
  std::complex<double> energy = parse_energy(o.energy);
  if (energy.imag() != 0.0)
    throw std::invalid_argument("--energy: counting estimates need a real energy");
  std::vector<double> etas = parse_eta(o.eta);
  json cfg = common_config("holder", o.common);
  cfg["theta"] = o.theta;
  cfg["N"] = o.n;
  cfg["energy"] = o.energy;
  cfg["eta"] = o.eta;

  qps::HolderFit fit = qps::holder_fit(pot, om, o.theta, o.n, energy.real(), etas);
  json payload;
  payload["E"] = energy.real();
  payload["etas"] = fit.etas;
  payload["increments"] = fit.increments;
  payload["exponent"] = fit.exponent;
  payload["r_squared"] = fit.r_squared;
  atomic_emit(o.common.out, json_document(cfg, payload));
}

struct LdtOpts {
  CommonOpts common;
  std::string energy = "0";
  long m = 400;
  long n_theta = 2048;
  double delta = 0.3;
  std::string t_grid = "0.05:0.5:0.05";
  int kappa = 1;
  double r_decay = 1.35;
  long k_min = 2;
  long k_max = 200;
  double c_default = 10.0;
};

void run_ldt(const LdtOpts& o) {
  apply_threads(o.common);
  Frequency om = parse_omega(o.common.omega);
  Potential pot = parse_potential(o.common.potential);
  std::vector<double> ts = parse_grid(o.t_grid, "--t");
  if (o.delta <= 0.0 || o.delta >= 1.0) throw std::invalid_argument("--delta: want 0 < delta < 1");
  if (o.r_decay <= 1.0) throw std::invalid_argument("--R: want R > 1");
  json cfg = common_config("ldt", o.common);
  cfg["energy"] = o.energy;
  cfg["m"] = o.m;
  cfg["ntheta"] = o.n_theta;
  cfg["delta"] = o.delta;
  cfg["t"] = o.t_grid;
  cfg["kappa"] = o.kappa;
  cfg["R"] = o.r_decay;
  cfg["k_min"] = o.k_min;
  cfg["k_max"] = o.k_max;
  cfg["c_default"] = o.c_default;

  qps::Cocycle c(pot, parse_energy(o.energy), om);
  qps::PhaseField field = qps::sample_field(c, o.m, 0.0, o.n_theta);
  qps::BandDecomposition bd = qps::band_decomposition(field, om, o.delta);
  qps::FourierSpectrum spec = qps::fourier(field);
  qps::DecayReport decay = qps::decay_check(spec, o.kappa, o.r_decay, o.delta, o.k_min, o.k_max,
                                            o.c_default);

  json payload;
  payload["m"] = o.m;
  payload["delta"] = o.delta;
  payload["n"] = o.n_theta;
  payload["q_n"] = bigint_json(bd.scale.q_n);
  payload["q_n1"] = bigint_json(bd.scale.q_n1);
  payload["band_sup_norms"] = bd.sup_norms;
  json dev = json::array();
  for (double t : ts) {
    json entry;
    entry["t"] = t;
    entry["measure"] = qps::deviation_measure(field, t);
    dev.push_back(entry);
  }
  payload["deviation"] = dev;
  json decay_obj;
  decay_obj["C_fit"] = decay.c_fit;
  decay_obj["violations"] = decay.violations;
  payload["decay"] = decay_obj;
  payload["scale_mismatch"] = bd.scale_mismatch;
  payload["completeness_residual"] = bd.completeness_residual;
  atomic_emit(o.common.out, json_document(cfg, payload));
}

struct GreenCheckOpts {
  CommonOpts common;
  long n = 64;
  int count = 20;
  unsigned long long seed = 123;
};

void run_green_check(const GreenCheckOpts& o) {
  apply_threads(o.common);
  Frequency om = parse_omega(o.common.omega);
  Potential pot = parse_potential(o.common.potential);
  if (o.n < 2 || o.n > 4096) throw std::invalid_argument("--N: want 2 <= N <= 4096");
  json cfg = common_config("green-check", o.common);
  cfg["N"] = o.n;
  cfg["count"] = o.count;
  cfg["seed"] = o.seed;

  qps::oracle::DetRng rng(o.seed);
  json checks = json::array();
  double max_dense = 0.0, max_dec = 0.0, max_herglotz = 0.0, max_bound = 0.0;
  for (int i = 0; i < o.count; ++i) {
    double theta = rng.uniform();
    qps::FiniteOperator op = qps::finite_operator(pot, om, theta, o.n);
    std::complex<double> z(rng.uniform(-8.0, 8.0), rng.uniform(0.05, 0.5));
    long k = rng.uniform_int(0, o.n - 1);
    long a = rng.uniform_int(0, k);
    long b = rng.uniform_int(k, o.n - 1);
    std::vector<std::complex<double>> col = qps::oracle::dense_resolvent_column(op.diagonal, z, k);
    std::complex<double> g = qps::green_diagonal(op, z, k);
    double dense_gap = std::abs(g - col[static_cast<std::size_t>(k)]) /
                       (1.0 + std::abs(col[static_cast<std::size_t>(k)]));
    double decoupling = qps::resolvent_decoupling_check(op, z, k, a, b);
    // Herglotz: Im G(k,k) > 0 for Im z > 0; resolvent bound |G| <= 1 / Im z.
    double herglotz_violation = std::max(0.0, -g.imag());
    double bound_violation = std::max(0.0, std::abs(g) - 1.0 / z.imag());
    max_dense = std::max(max_dense, dense_gap);
    max_dec = std::max(max_dec, decoupling);
    max_herglotz = std::max(max_herglotz, herglotz_violation);
    max_bound = std::max(max_bound, bound_violation);
    json entry;
    entry["instance"] = i;
    entry["theta"] = theta;
    entry["z"] = json::array({z.real(), z.imag()});
    entry["k"] = k;
    entry["window"] = json::array({a, b});
    entry["dense_gap"] = dense_gap;
    entry["decoupling_discrepancy"] = decoupling;
    entry["herglotz_violation"] = herglotz_violation;
    entry["bound_violation"] = bound_violation;
    checks.push_back(entry);
  }
  json payload;
  payload["checks"] = checks;
  json summary;
  summary["max_dense_gap"] = max_dense;
  summary["max_decoupling_discrepancy"] = max_dec;
  summary["max_herglotz_violation"] = max_herglotz;
  summary["max_bound_violation"] = max_bound;
  payload["summary"] = summary;
  atomic_emit(o.common.out, json_document(cfg, payload));
}

struct RieszOpts {
  CommonOpts common;
  std::string energy = "0";
  long m = 600;
  long n_theta = 1024;
  double eps1 = 0.02;
  double eps2 = 0.05;
  double fd_step = 0.0;
};

void run_riesz(const RieszOpts& o) {
  apply_threads(o.common);
  Frequency om = parse_omega(o.common.omega);
  Potential pot = parse_potential(o.common.potential);
  qps::Cocycle c(pot, parse_energy(o.energy), om);
  json cfg = common_config("riesz", o.common);
  cfg["energy"] = o.energy;
  cfg["m"] = o.m;
  cfg["ntheta"] = o.n_theta;
  cfg["eps1"] = o.eps1;
  cfg["eps2"] = o.eps2;
  cfg["fd_step"] = o.fd_step;

  qps::RieszMassEstimate est = qps::riesz_mass(c, o.m, o.eps1, o.eps2, o.n_theta, o.fd_step);
  json payload;
  payload["eps1"] = est.eps1;
  payload["eps2"] = est.eps2;
  payload["mass"] = est.mass;
  payload["slopes"] = est.slopes;
  atomic_emit(o.common.out, json_document(cfg, payload));
}

struct AcceptanceOpts {
  std::string suite = "primary";
  std::string out;
};

int run_acceptance(const AcceptanceOpts& o) {
  if (o.suite != "primary")
    throw std::invalid_argument("--suite: only 'primary' is available");
  std::vector<qps::acceptance::CriterionResult> results = qps::acceptance::run_suite(std::cout);
  int failures = qps::acceptance::count_failures(results);
  if (!o.out.empty()) {
    json cfg;
    cfg["subcommand"] = "acceptance";
    cfg["suite"] = o.suite;
    json payload;
    json arr = json::array();
    for (const auto& r : results) {
      json entry;
      entry["index"] = r.index;
      entry["name"] = r.name;
      entry["passed"] = r.passed;
      entry["detail"] = r.detail;
      arr.push_back(entry);
    }
    payload["criteria"] = arr;
    payload["passed"] = static_cast<int>(results.size()) - failures;
    payload["failed"] = failures;
    atomic_emit(o.out, json_document(cfg, payload));
  }
  return failures > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasi-periodic Schrodinger operator toolkit"};
  app.set_version_flag("--version", std::string(qps::kVersion));
  app.require_subcommand(1);

  LyapunovOpts lyo;
  CLI::App* lys = app.add_subcommand("lyapunov", "finite-scale Lyapunov exponent over an eps grid");
  add_common(lys, &lyo.common);
  lys->add_option("--energy", lyo.energy, "energy re or re,im")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  lys->add_option("--m", lyo.m, "transfer-matrix length")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  lys->add_option("--ntheta", lyo.n_theta, "phase quadrature size (power of two)")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  lys->add_option("--eps", lyo.eps, "imaginary offsets: start:stop:step or comma list")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  AccelerationOpts aco;
  CLI::App* acs = app.add_subcommand("acceleration", "slope of eps -> L_m(eps) against 2 pi eps");
  add_common(acs, &aco.common);
  acs->add_option("--energy", aco.energy, "energy re or re,im")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  acs->add_option("--m", aco.m, "transfer-matrix length")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  acs->add_option("--ntheta", aco.n_theta, "phase quadrature size")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  acs->add_option("--eps-min", aco.eps_min, "window lower edge")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  acs->add_option("--eps-max", aco.eps_max, "window upper edge")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  acs->add_option("--points", aco.points, "grid points in the window")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  IdsOpts ido;
  CLI::App* ids = app.add_subcommand("ids", "eigenvalue-counting curve of a finite window");
  add_common(ids, &ido.common);
  ids->add_option("--theta", ido.theta, "phase offset")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  ids->add_option("--N", ido.n, "window size")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  ids->add_option("--energies", ido.energies, "energy grid start:stop:step or comma list")
      ->required()
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  HolderOpts hoo;
  CLI::App* hos = app.add_subcommand("holder", "log-log fit of counting increments vs eta");
  add_common(hos, &hoo.common);
  hos->add_option("--theta", hoo.theta, "phase offset")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  hos->add_option("--N", hoo.n, "window size")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  hos->add_option("--energy", hoo.energy, "center energy (real)")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  hos->add_option("--eta", hoo.eta, "eta list: dyadic '1e-2/2^k k=0..10' or comma list")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  LdtOpts ldo;
  CLI::App* lds = app.add_subcommand("ldt", "deviation measures, band decomposition, Fourier decay");
  add_common(lds, &ldo.common);
  lds->add_option("--energy", ldo.energy, "energy re or re,im")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  lds->add_option("--m", ldo.m, "transfer-matrix length")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  lds->add_option("--ntheta", ldo.n_theta, "phase grid size (power of two)")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  lds->add_option("--delta", ldo.delta, "band-decomposition delta")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  lds->add_option("--t", ldo.t_grid, "deviation thresholds start:stop:step or comma list")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  lds->add_option("--kappa", ldo.kappa, "acceleration kappa in the decay bound")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  lds->add_option("--R", ldo.r_decay, "decay radius R > 1 (validate against the linear window)")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  lds->add_option("--k-min", ldo.k_min, "lowest mode checked")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  lds->add_option("--k-max", ldo.k_max, "highest mode checked")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  lds->add_option("--c-default", ldo.c_default, "constant for the violation scan")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  GreenCheckOpts gco;
  CLI::App* gcs = app.add_subcommand("green-check", "resolvent identities on a random corpus");
  add_common(gcs, &gco.common);
  gcs->add_option("--N", gco.n, "window size")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  gcs->add_option("--count", gco.count, "number of random instances")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  gcs->add_option("--seed", gco.seed, "corpus seed")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  RieszOpts rio;
  CLI::App* ris = app.add_subcommand("riesz", "band mass of the subharmonic Lyapunov function");
  add_common(ris, &rio.common);
  ris->add_option("--energy", rio.energy, "energy re or re,im")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  ris->add_option("--m", rio.m, "transfer-matrix length")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  ris->add_option("--ntheta", rio.n_theta, "phase quadrature size")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  ris->add_option("--eps1", rio.eps1, "band inner radius (0 straddles the axis)")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  ris->add_option("--eps2", rio.eps2, "band outer radius")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  ris->add_option("--fd-step", rio.fd_step, "finite-difference step (0: band width / 8)")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  AcceptanceOpts apo;
  CLI::App* aps = app.add_subcommand("acceptance", "run the bundled acceptance suite");
  aps->add_option("--suite", apo.suite, "suite name (primary)")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  aps->add_option("--out", apo.out, "optional JSON summary path")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  std::vector<std::string> args;
  try {
    args = expand_config(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  try {
    // CLI11 consumes tokens in reverse order.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(lys)) run_lyapunov(lyo);
    else if (app.got_subcommand(acs)) run_acceleration(aco);
    else if (app.got_subcommand(ids)) run_ids(ido);
    else if (app.got_subcommand(hos)) run_holder(hoo);
    else if (app.got_subcommand(lds)) run_ldt(ldo);
    else if (app.got_subcommand(gcs)) run_green_check(gco);
    else if (app.got_subcommand(ris)) run_riesz(rio);
    else if (app.got_subcommand(aps)) return run_acceptance(apo);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const qps::RationalDetected& e) {
    std::cerr << "config error (RationalDetected): " << e.what() << "\n";
    return 2;
  } catch (const qps::PrecisionExhausted& e) {
    std::cerr << "numeric guard (PrecisionExhausted): " << e.what() << "\n";
    return 3;
  } catch (const qps::BudgetExceeded& e) {
    std::cerr << "numeric guard (BudgetExceeded): " << e.what() << "\n";
    return 3;
  } catch (const qps::NumericGuardError& e) {
    std::cerr << "numeric guard: " << e.what() << "\n";
    return 3;
  } catch (const qps::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
