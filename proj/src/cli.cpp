#include "mayerkit/cli.hpp"

#include "mayerkit/canonical.hpp"
#include "mayerkit/cluster.hpp"
#include "mayerkit/errors.hpp"
#include "mayerkit/polymer.hpp"
#include "mayerkit/potentials.hpp"
#include "mayerkit/radii.hpp"
#include "mayerkit/report.hpp"
#include "mayerkit/series.hpp"
#include "mayerkit/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace mayerkit::cli {

namespace {

using nlohmann::json;

struct PotentialOpts {
  std::string kind = "hard_rod";
  double sigma = 1.0;
  std::optional<double> epsilon, lambda_w, B;
  std::optional<int> dimension;
  std::string file;  // JSON potential (required for custom_tabulated)
};

struct Common {
  double beta = 1.0;
  std::string output;
  std::string format = "json";
  bool no_timestamp = false;
  int workers = 0;
  std::optional<std::uint64_t> seed;
  std::uint64_t samples = 1'000'000;
  int chunks = 32;
  int extra_nodes = 0;
};

void add_potential(CLI::App* sc, PotentialOpts& p) {
  sc->add_option("--potential", p.kind, "hard_rod | hard_sphere | square_well | custom_tabulated")
      ->capture_default_str();
  sc->add_option("--sigma", p.sigma, "core diameter")->capture_default_str();
  sc->add_option("--epsilon", p.epsilon, "well depth (square_well)");
  sc->add_option("--lambda-w,--lambda_w", p.lambda_w, "well width ratio (square_well)");
  sc->add_option("--B", p.B, "declared stability constant");
  sc->add_option("--dimension", p.dimension, "space dimension");
  sc->add_option("--potential-file,--potential_file", p.file, "JSON potential declaration");
}

void add_common(CLI::App* sc, Common& c, bool stochastic) {
  sc->add_option("--beta", c.beta, "inverse temperature")->capture_default_str();
  sc->add_option("--output,-o", c.output, "write the result here (relative to $" + std::string(kOutputDirEnv) + ")");
  sc->add_option("--format", c.format, "json | csv | table")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  sc->add_flag("--no-timestamp,--no_timestamp", c.no_timestamp, "omit the timestamp field");
  if (stochastic) {
    sc->add_option("--workers", c.workers, "worker threads (0 = available parallelism)")->capture_default_str();
    sc->add_option("--seed", c.seed, "random seed (required for monte_carlo)");
    sc->add_option("--samples", c.samples, "Monte Carlo samples")->capture_default_str();
    sc->add_option("--chunks", c.chunks, "Monte Carlo chunks")->capture_default_str();
    sc->add_option("--extra-nodes,--extra_nodes", c.extra_nodes, "extra Gauss nodes per level")->capture_default_str();
  }
}

PairPotential build_potential(const PotentialOpts& p) {
  if (!p.file.empty()) {
    std::ifstream in(p.file);
    if (!in) throw InputError("potential-file: cannot open '" + p.file + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw InputError("potential-file: " + std::string(e.what()));
    }
    return PairPotential::from_json(j);
  }
  json j{{"kind", p.kind}, {"sigma", p.sigma}};
  if (p.epsilon) j["epsilon"] = *p.epsilon;
  if (p.lambda_w) j["lambda_w"] = *p.lambda_w;
  if (p.B) j["B"] = *p.B;
  if (p.dimension) j["dimension"] = *p.dimension;
  return PairPotential::from_json(j);
}

cluster::MethodSpec method_spec(const std::string& method, const Common& c) {
  cluster::MethodSpec m;
  m.workers = c.workers;
  m.samples = c.samples;
  m.chunks = c.chunks;
  m.extra_nodes = c.extra_nodes;
  if (method == "quadrature") {
    m.method = cluster::Method::quadrature;
  } else if (method == "monte_carlo") {
    if (!c.seed) throw InputError("seed: required when method = monte_carlo");
    m.method = cluster::Method::monte_carlo;
    m.seed = *c.seed;
  } else if (method == "exact") {
    m.method = cluster::Method::exact;
  } else {
    throw InputError("method: unknown value '" + method + "'");
  }
  return m;
}

struct Emission {
  json doc;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::string table;
};

std::string fmt(double x) { return report::format_double(x); }

void emit(const Emission& e, const Common& c, std::ostream& out) {
  std::string text;
  if (c.format == "json") {
    text = report::dump(e.doc) + "\n";
  } else if (c.format == "csv") {
    if (e.csv_header.empty()) throw InputError("format: csv is not available for this command");
    text = report::csv(e.csv_header, e.csv_rows);
  } else {
    text = e.table.empty() ? report::dump(e.doc) + "\n" : e.table;
  }
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::filesystem::path path(c.output);
  if (path.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) path = std::filesystem::path(dir) / path;
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path);
  if (!f) throw InputError("output: cannot write '" + path.string() + "'");
  f << text;
}

json base_doc(const std::string& cmd, const Common& c) { return report::envelope(cmd, !c.no_timestamp); }

std::string table_lines(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t w = 0;
  for (const auto& r : rows) w = std::max(w, r.first.size());
  std::string out;
  for (const auto& [k, v] : rows) out += k + std::string(w - k.size() + 2, ' ') + v + "\n";
  return out;
}

// ---------------------------------------------------------------------------

struct RadiiArgs {
  Common c;
  PotentialOpts p;
  std::optional<double> u, c_beta;
  int kmax = 8;
};

Emission do_radii(const RadiiArgs& a, bool potential_given) {
  double u, beta = a.c.beta, B = 0.0;
  std::optional<double> C = a.c_beta;
  if (potential_given || !a.p.file.empty()) {
    const auto pot = build_potential(a.p);
    B = pot.stability_B();
    if (!C) C = c_beta(pot, beta).value;
  }
  u = a.u.value_or(radii::u_of(beta, B));
  const auto r = radii::radius_report(u, C, a.kmax, beta, B);
  Emission e;
  e.doc = base_doc("radii", a.c);
  e.doc["report"] = radii::to_json(r);
  e.csv_header = {"k", "ours", "lp", "lp_over_k"};
  for (std::size_t i = 0; i < r.bounds.size(); ++i)
    e.csv_rows.push_back({std::to_string(i + 1), fmt(r.bounds[i].ours), fmt(r.bounds[i].lp), fmt(r.bounds[i].lp / (i + 1.0))});
  std::vector<std::pair<std::string, std::string>> rows = {
      {"u", fmt(r.u)},
      {"C(beta)", fmt(r.c_beta) + (r.c_beta_assumed ? " (assumed)" : "")},
      {"F(u)", fmt(r.F.value)},
      {"a*", fmt(r.F.a_star)},
      {"g(u)", fmt(r.g.value)},
      {"w*", fmt(r.g.w_star)},
      {"K* closed form", fmt(r.K.closed_form)},
      {"K* series", fmt(r.K.series_check)},
      {"rho*", fmt(r.rho_star)},
      {"Mayer radius", fmt(r.mayer_radius)},
      {"1/e^(1+0.426)", fmt(r.base_constant_reference)},
      {"1/e^(1+a*)", fmt(r.base_constant_computed)},
      {"1/0.28952", fmt(r.lp_constant)},
      {"a* differs from 0.426", r.a_star_discrepancy ? "yes" : "no"},
  };
  e.table = table_lines(rows);
  return e;
}

struct MayerArgs {
  Common c;
  PotentialOpts p;
  int n = 4;
  std::string method = "quadrature";
  std::optional<double> L;
};

Emission do_mayer(const MayerArgs& a) {
  const auto pot = build_potential(a.p);
  const auto m = method_spec(a.method, a.c);
  const auto vol = a.L ? cluster::VolumeSpec::cube(*a.L) : cluster::VolumeSpec::infinite();
  const auto t = cluster::mayer_coefficients(pot, a.c.beta, a.n, vol, m);
  const double C = c_beta(pot, a.c.beta).value;
  Emission e;
  e.doc = base_doc("mayer", a.c);
  json recs = report::records(t);
  for (auto& r : recs) {
    const int n = r["n"].get<int>();
    r["penrose_bound"] = n >= 2 ? json(cluster::penrose_bn_bound(n, a.c.beta, pot.stability_B(), C)) : json(nullptr);
  }
  e.doc["potential"] = pot.to_json();
  e.doc["c_beta"] = C;
  e.doc["records"] = recs;
  e.csv_header = {"n", "b_n", "error", "penrose_bound"};
  std::string tab = "n  b_n  error  penrose_bound\n";
  for (const auto& r : recs) {
    std::vector<std::string> row = {std::to_string(r["n"].get<int>()), fmt(r["value"].get<double>()),
                                    fmt(r["error"].get<double>()),
                                    r["penrose_bound"].is_null() ? "" : fmt(r["penrose_bound"].get<double>())};
    tab += row[0] + "  " + row[1] + "  " + row[2] + "  " + row[3] + "\n";
    e.csv_rows.push_back(std::move(row));
  }
  e.table = tab;
  return e;
}

struct VirialArgs {
  Common c;
  PotentialOpts p;
  int k = 3;
  std::string method = "quadrature";
};

Emission do_virial(const VirialArgs& a) {
  const auto pot = build_potential(a.p);
  const auto m = method_spec(a.method, a.c);
  const auto b = cluster::mayer_coefficients(pot, a.c.beta, a.k + 1, cluster::VolumeSpec::infinite(), m);
  const auto transform = series::virial_table_from_mayer(b, a.k);
  const auto inversion = series::invert_mayer_oracle(b, a.k);
  const int direct_cap = m.method == cluster::Method::monte_carlo ? 2 : (m.method == cluster::Method::exact ? a.k : 3);
  Emission e;
  e.doc = base_doc("virial", a.c);
  e.doc["potential"] = pot.to_json();
  e.doc["method"] = m.label();
  if (m.method == cluster::Method::monte_carlo) e.doc["seed"] = m.seed;
  json rows = json::array();
  e.csv_header = {"k", "transform", "transform_error", "direct", "direct_error", "inversion"};
  std::string tab = "k  transform  direct  inversion\n";
  for (int k = 1; k <= a.k; ++k) {
    json r{{"k", k},
           {"transform", transform.at(k)},
           {"transform_error", transform.errors.at(k)},
           {"inversion", inversion.at(k)}};
    std::string dval, derr;
    if (k <= direct_cap) {
      const auto d = cluster::virial_bk_direct(pot, a.c.beta, k, m);
      r["direct"] = d.value;
      r["direct_error"] = d.error;
      dval = fmt(d.value);
      derr = fmt(d.error);
    } else {
      r["direct"] = nullptr;
      r["direct_error"] = nullptr;
    }
    rows.push_back(r);
    e.csv_rows.push_back({std::to_string(k), fmt(transform.at(k)), fmt(transform.errors.at(k)), dval, derr, fmt(inversion.at(k))});
    tab += std::to_string(k) + "  " + fmt(transform.at(k)) + "  " + (dval.empty() ? "-" : dval) + "  " + fmt(inversion.at(k)) + "\n";
  }
  e.doc["records"] = rows;
  e.table = tab;
  return e;
}

struct ProfileOpts {
  int N = 4;
  std::vector<double> zeta;        // zeta_2, zeta_3, ...
  std::optional<double> tonks_V;   // hard-rod profile with this volume
  std::optional<double> rho;       // or this density (V = N / rho)
  double sigma = 1.0;
};

void add_profile(CLI::App* sc, ProfileOpts& p) {
  sc->add_option("--N", p.N, "ground-set size")->required();
  sc->add_option("--zeta", p.zeta, "activities zeta_2,zeta_3,...")->delimiter(',');
  sc->add_option("--tonks-V,--tonks_V", p.tonks_V, "hard-rod profile in volume V");
  sc->add_option("--rho", p.rho, "hard-rod profile at density rho");
  sc->add_option("--sigma", p.sigma, "rod length for hard-rod profiles")->capture_default_str();
}

polymer::ActivityProfile build_profile(const ProfileOpts& p) {
  const int given = (!p.zeta.empty()) + p.tonks_V.has_value() + p.rho.has_value();
  if (given != 1) throw InputError("zeta: give exactly one of --zeta, --tonks-V, --rho");
  if (p.tonks_V) return polymer::ActivityProfile::from_tonks(p.N, *p.tonks_V, p.sigma);
  if (p.rho) {
    if (!(*p.rho > 0)) throw InputError("rho: must be > 0");
    return polymer::ActivityProfile::from_tonks(p.N, p.N / *p.rho, p.sigma);
  }
  if (static_cast<int>(p.zeta.size()) > p.N - 1) throw InputError("zeta: more entries than orders 2..N");
  std::map<int, double> z;
  for (std::size_t i = 0; i < p.zeta.size(); ++i) z[static_cast<int>(i) + 2] = p.zeta[i];
  return polymer::ActivityProfile::from_zeta(p.N, z);
}

json profile_json(const polymer::ActivityProfile& a) {
  json z = json::object();
  for (auto [m, v] : a.zeta) z[std::to_string(m)] = v;
  json j{{"N", a.N}, {"zeta", z}};
  if (a.rho) j["rho"] = *a.rho;
  if (a.V) j["V"] = *a.V;
  return j;
}

struct PolymerArgs {
  Common c;
  ProfileOpts prof;
  std::string xi_method = "recursion";
  int nmax = 3;
  std::optional<double> alpha;
  double B = 0.0;
  std::vector<int> s;
  bool naive = false;
  int k = 2;
  std::vector<double> b;  // b_2, b_3, ... for ckn; hard rods when empty
};

Emission do_polymer(const std::string& action, const PolymerArgs& a) {
  Emission e;
  e.doc = base_doc("polymer " + action, a.c);
  if (action == "xi") {
    const auto prof = build_profile(a.prof);
    polymer::XiMethod m;
    if (a.xi_method == "recursion") m = polymer::XiMethod::recursion;
    else if (a.xi_method == "bruteforce") m = polymer::XiMethod::bruteforce;
    else throw InputError("method: unknown value '" + a.xi_method + "'");
    const double xi = polymer::xi_exact(prof.N, prof, m);
    e.doc["profile"] = profile_json(prof);
    e.doc["method"] = a.xi_method;
    e.doc["xi"] = xi;
    e.table = table_lines({{"N", std::to_string(prof.N)}, {"Xi", fmt(xi)}});
  } else if (action == "ursell") {
    const auto prof = build_profile(a.prof);
    const auto s = polymer::log_xi_ursell(prof.N, prof, a.nmax);
    const double lx = std::log(polymer::xi_exact(prof.N, prof));
    e.doc["profile"] = profile_json(prof);
    e.doc["log_xi"] = lx;
    json terms = json::array();
    e.csv_header = {"order", "term", "partial_sum", "residual"};
    std::string tab = "order  term  partial_sum  residual\n";
    for (std::size_t i = 0; i < s.terms.size(); ++i) {
      const double res = lx - s.partial_sums[i];
      terms.push_back({{"order", i + 1}, {"term", s.terms[i]}, {"partial_sum", s.partial_sums[i]}, {"residual", res}});
      e.csv_rows.push_back({std::to_string(i + 1), fmt(s.terms[i]), fmt(s.partial_sums[i]), fmt(res)});
      tab += e.csv_rows.back()[0] + "  " + e.csv_rows.back()[1] + "  " + e.csv_rows.back()[2] + "  " + e.csv_rows.back()[3] + "\n";
    }
    e.doc["orders"] = terms;
    e.table = tab;
  } else if (action == "fpcheck") {
    const auto prof = build_profile(a.prof);
    const double alpha = a.alpha.value_or(radii::F_of_u(radii::u_of(a.c.beta, a.B)).a_star);
    const auto r = polymer::fp_check(prof, alpha);
    e.doc["profile"] = profile_json(prof);
    e.doc["a"] = alpha;
    e.doc["lhs"] = r.lhs;
    e.doc["rhs"] = r.rhs;
    e.doc["holds"] = r.holds;
    e.table = table_lines({{"a", fmt(alpha)}, {"lhs", fmt(r.lhs)}, {"rhs", fmt(r.rhs)}, {"holds", r.holds ? "yes" : "no"}});
  } else if (action == "pexact") {
    if (a.s.empty()) throw InputError("s: required");
    const Rational p = polymer::p_exact(a.prof.N, a.s, a.naive);
    const Rational lim = polymer::p_limit(a.s);
    e.doc["N"] = a.prof.N;
    e.doc["s"] = a.s;
    e.doc["P"] = report::rational(p);
    e.doc["P_limit"] = report::rational(lim);
    e.table = table_lines({{"P", to_string(p) + " = " + fmt(to_double(p))}, {"limit", to_string(lim) + " = " + fmt(to_double(lim))}});
  } else if (action == "ckn") {
    const int N = a.prof.N;
    e.doc["N"] = N;
    e.doc["k"] = a.k;
    if (a.b.empty()) {
      const int sig_int = static_cast<int>(a.prof.sigma);
      if (a.prof.sigma != sig_int || sig_int < 1) throw InputError("sigma: exact hard-rod coefficients need an integer sigma >= 1");
      std::vector<Rational> b(a.k + 2, Rational(0));
      for (int n = 1; n <= a.k + 1; ++n)
        b[n] = Rational(BigInt(n % 2 ? 1 : -1) * ipow(n, n - 1) * ipow(sig_int, n - 1), factorial(n));
      const Rational c = polymer::ck_finite_N_exact(N, b, a.k);
      std::vector<Rational> bl(b.begin() + 1, b.end());
      const Rational lim = series::virial_from_mayer_exact(bl, a.k);
      e.doc["b"] = "hard_rod";
      e.doc["C_k"] = report::rational(c);
      e.doc["C_k_limit"] = report::rational(lim);
      e.table = table_lines({{"C_k(N)", to_string(c) + " = " + fmt(to_double(c))}, {"limit", fmt(to_double(lim))}});
    } else {
      const auto t = cluster::mayer_table_from_values(a.b);
      const double c = polymer::ck_finite_N(N, t, a.k);
      e.doc["b"] = a.b;
      e.doc["C_k"] = c;
      e.doc["C_k_limit"] = series::virial_from_mayer(t, a.k);
      e.table = table_lines({{"C_k(N)", fmt(c)}});
    }
  }
  return e;
}

struct CanonicalArgs {
  Common c;
  PotentialOpts p;
  int N = 100;
  double L = 2000;
  std::optional<int> kmax;  // default: 8 for rods, else the highest order the b_n route supports
  std::string method;
};

Emission do_canonical(const CanonicalArgs& a, bool& pass) {
  const auto pot = build_potential(a.p);
  canonical::CompareOptions opt;
  if (!a.method.empty()) opt.direct = canonical::parse_zmethod(a.method);
  opt.mc.workers = a.c.workers;
  opt.mc.samples = a.c.samples;
  opt.mc.chunks = a.c.chunks;
  opt.mc.extra_nodes = a.c.extra_nodes;
  const bool needs_seed =
      opt.direct ? *opt.direct == canonical::ZMethod::monte_carlo
                 : pot.kind() != PotentialKind::hard_rod && !(pot.dimension() == 1 && a.N <= canonical::kMaxQuadratureN);
  if (needs_seed) {
    if (!a.c.seed) throw InputError("seed: required when method = monte_carlo");
    opt.mc.method = cluster::Method::monte_carlo;
    opt.mc.seed = *a.c.seed;
  }
  const int kmax = a.kmax.value_or(pot.kind() == PotentialKind::hard_rod ? 8
                                   : pot.dimension() == 1       ? cluster::kMaxQuadratureOrder - 1
                                                                : cluster::kMaxMonteCarloOrder - 1);
  const auto r = canonical::compare_series_direct(pot, a.c.beta, a.L, a.N, kmax, opt);
  pass = r.pass;
  Emission e;
  e.doc = base_doc("canonical", a.c);
  e.doc["potential"] = pot.to_json();
  e.doc["report"] = report::to_json(r);
  e.table = table_lines({{"N", std::to_string(r.N)},
                         {"L", fmt(r.L)},
                         {"rho", fmt(r.rho)},
                         {"rho*", fmt(r.rho_star)},
                         {"Q_direct", fmt(r.Q_direct)},
                         {"Q_series", fmt(r.Q_series)},
                         {"gap", fmt(r.gap)},
                         {"budget", fmt(r.budget)},
                         {"result", r.pass ? "PASS" : "FAIL"}});
  return e;
}

struct VerifyArgs {
  Common c;
  std::string suite = "all";
  int nmax = 6;
  std::uint64_t seed = 1;
  bool quick = false;
  bool list = false;
};

Emission do_verify(const VerifyArgs& a, bool& pass) {
  Emission e;
  e.doc = base_doc("verify", a.c);
  if (a.list) {
    json arr = json::array();
    std::string tab;
    for (const auto& m : verify::manifest(a.suite)) {
      arr.push_back({{"suite", m.suite}, {"name", m.name}, {"statement", m.statement}});
      tab += m.name + "  " + m.statement + "\n";
    }
    e.doc["manifest"] = arr;
    e.table = tab;
    pass = true;
    return e;
  }
  verify::Options o;
  o.suite = a.suite;
  o.nmax = a.nmax;
  o.seed = a.seed;
  o.workers = a.c.workers;
  o.quick = a.quick;
  const auto results = verify::run(o);
  pass = true;
  json arr = json::array();
  std::string tab;
  e.csv_header = {"suite", "name", "result", "detail"};
  for (const auto& r : results) {
    pass = pass && r.pass;
    arr.push_back({{"suite", r.info.suite}, {"name", r.info.name}, {"pass", r.pass}, {"detail", r.detail}});
    e.csv_rows.push_back({r.info.suite, r.info.name, r.pass ? "PASS" : "FAIL", r.detail});
    char t[32];
    std::snprintf(t, sizeof t, "%.2fs", r.seconds);
    tab += std::string(r.pass ? "PASS " : "FAIL ") + r.info.name + (r.detail.empty() ? "" : " (" + r.detail + ")") + " [" + t + "]\n";
  }
  tab += pass ? "all checks passed\n" : "some checks FAILED\n";
  e.doc["results"] = arr;
  e.doc["pass"] = pass;
  e.table = tab;
  return e;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"mayerkit: cluster expansions, virial coefficients and convergence radii", "mayerkit"};
  app.set_config("--config", "", "INI file; sections name subcommands ([mayer], [polymer.xi], ...)");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);

  RadiiArgs ra;
  auto* radii_cmd = app.add_subcommand("radii", "F(u), g(u), K*, rho*, Mayer radius and coefficient bounds");
  add_common(radii_cmd, ra.c, false);
  add_potential(radii_cmd, ra.p);
  radii_cmd->add_option("--u", ra.u, "u = e^{2 beta B}; defaults to the potential's value");
  radii_cmd->add_option("--c-beta,--c_beta", ra.c_beta, "C(beta); defaults to the potential's value");
  radii_cmd->add_option("--kmax", ra.kmax, "coefficient bounds for k = 1..kmax")->capture_default_str();

  MayerArgs ma;
  auto* mayer_cmd = app.add_subcommand("mayer", "Mayer coefficients b_1..b_n");
  add_common(mayer_cmd, ma.c, true);
  add_potential(mayer_cmd, ma.p);
  mayer_cmd->add_option("--n", ma.n, "largest order")->capture_default_str();
  mayer_cmd->add_option("--method", ma.method, "quadrature | monte_carlo | exact")->capture_default_str();
  mayer_cmd->add_option("--L", ma.L, "finite box side (default: infinite volume)");

  VirialArgs va;
  auto* virial_cmd = app.add_subcommand("virial", "beta_k by transform, direct integral and inversion");
  add_common(virial_cmd, va.c, true);
  add_potential(virial_cmd, va.p);
  virial_cmd->add_option("--k", va.k, "largest order")->capture_default_str();
  virial_cmd->add_option("--method", va.method, "quadrature | monte_carlo | exact")->capture_default_str();

  PolymerArgs pa;
  auto* polymer_cmd = app.add_subcommand("polymer", "abstract polymer gas on [N]");
  polymer_cmd->require_subcommand(1);
  std::string polymer_action;
  auto polymer_sub = [&](const std::string& name, const std::string& desc) {
    auto* sc = polymer_cmd->add_subcommand(name, desc);
    add_common(sc, pa.c, false);
    sc->callback([&polymer_action, name] { polymer_action = name; });
    return sc;
  };
  auto* xi_cmd = polymer_sub("xi", "exact partition function Xi_N");
  add_profile(xi_cmd, pa.prof);
  xi_cmd->add_option("--method", pa.xi_method, "recursion | bruteforce")->capture_default_str();
  auto* ursell_cmd = polymer_sub("ursell", "orders of the Ursell expansion of ln Xi");
  add_profile(ursell_cmd, pa.prof);
  ursell_cmd->add_option("--nmax", pa.nmax, "largest order")->capture_default_str();
  auto* fp_cmd = polymer_sub("fpcheck", "cardinality-reduced convergence criterion");
  add_profile(fp_cmd, pa.prof);
  fp_cmd->add_option("--a", pa.alpha, "criterion parameter a (default: a* of F(u))");
  fp_cmd->add_option("--B", pa.B, "stability constant used for the default a")->capture_default_str();
  auto* pexact_cmd = polymer_sub("pexact", "exact P(s_1..s_n) and its N -> infinity limit");
  pexact_cmd->add_option("--N", pa.prof.N, "ground-set size")->required();
  pexact_cmd->add_option("--s", pa.s, "cardinalities s_1,s_2,...")->delimiter(',')->required();
  pexact_cmd->add_flag("--naive", pa.naive, "skip the symmetry reduction");
  auto* ckn_cmd = polymer_sub("ckn", "finite-N coefficient C_k(N)");
  ckn_cmd->add_option("--N", pa.prof.N, "ground-set size")->required();
  ckn_cmd->add_option("--k", pa.k, "order")->capture_default_str();
  ckn_cmd->add_option("--b", pa.b, "b_2,b_3,... (default: exact hard rods)")->delimiter(',');
  ckn_cmd->add_option("--sigma", pa.prof.sigma, "rod length for the default coefficients")->capture_default_str();

  CanonicalArgs ca;
  auto* canonical_cmd = app.add_subcommand("canonical", "direct Q versus the density series");
  add_common(canonical_cmd, ca.c, true);
  add_potential(canonical_cmd, ca.p);
  canonical_cmd->add_option("--N", ca.N, "particles")->capture_default_str();
  canonical_cmd->add_option("--L", ca.L, "box side")->capture_default_str();
  canonical_cmd->add_option("--kmax", ca.kmax, "series order (default 8 for rods)");
  canonical_cmd->add_option("--method", ca.method, "tonks_closed | quadrature | monte_carlo (default: automatic)");

  VerifyArgs vea;
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite");
  add_common(verify_cmd, vea.c, false);
  verify_cmd->add_option("--suite", vea.suite, "all | graphs | penrose | potentials | cluster | series | radii | polymer | canonical | cli")
      ->capture_default_str();
  verify_cmd->add_option("--nmax", vea.nmax, "exhaustive graph order")->capture_default_str();
  verify_cmd->add_option("--seed", vea.seed, "seed for sampled checks")->capture_default_str();
  verify_cmd->add_option("--workers", vea.c.workers, "worker threads")->capture_default_str();
  verify_cmd->add_flag("--quick", vea.quick, "smaller samples");
  verify_cmd->add_flag("--list", vea.list, "print the manifest only");

  for (auto* sc : app.get_subcommands({})) {
    sc->configurable();
    sc->allow_config_extras(CLI::config_extras_mode::error);
    for (auto* sub : sc->get_subcommands({})) {
      sub->configurable();
      sub->allow_config_extras(CLI::config_extras_mode::error);
    }
  }
  // Help text is the only output of -h; route it and errors to our streams.
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      ++i;
      continue;
    }
    if (args[i].empty() || args[i][0] == '-') continue;
    bool known = false;
    for (auto* sc : app.get_subcommands({})) known = known || sc->get_name() == args[i];
    if (!known) {
      err << "mayerkit: unknown subcommand '" << args[i] << "'\n";
      return kExitInvalidInput;
    }
    break;
  }
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "mayerkit: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    bool pass = true;
    if (radii_cmd->parsed()) {
      const bool potential_given = radii_cmd->count("--potential") > 0 || radii_cmd->count("--sigma") > 0 ||
                                   radii_cmd->count("--B") > 0;
      emit(do_radii(ra, potential_given), ra.c, out);
    } else if (mayer_cmd->parsed()) {
      emit(do_mayer(ma), ma.c, out);
    } else if (virial_cmd->parsed()) {
      emit(do_virial(va), va.c, out);
    } else if (polymer_cmd->parsed()) {
      emit(do_polymer(polymer_action, pa), pa.c, out);
    } else if (canonical_cmd->parsed()) {
      emit(do_canonical(ca, pass), ca.c, out);
    } else if (verify_cmd->parsed()) {
      emit(do_verify(vea, pass), vea.c, out);
    }
    return pass ? kExitOk : kExitVerifyFailed;
  } catch (const std::invalid_argument& e) {
    err << "mayerkit: invalid input: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    err << "mayerkit: domain error: " << e.what() << "\n";
  } catch (const std::length_error& e) {
    err << "mayerkit: capacity error: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {
    err << "mayerkit: " << e.what() << "\n";
  }
  return kExitInvalidInput;
}

}  // namespace mayerkit::cli
