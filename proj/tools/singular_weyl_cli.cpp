// singular-weyl: enumeration, construction, verification, structure reports
// and figure data for the K-finite solution spaces.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "singular_weyl/complex_parse.hpp"
#include "singular_weyl/errors.hpp"
#include "singular_weyl/params.hpp"
#include "singular_weyl/structure.hpp"
#include "singular_weyl/verify.hpp"

namespace {

using sw::Complex;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 3;
  int q = 0;
  std::string s = "schrodinger";
  std::string preset;
  std::optional<std::int64_t> lambda;
  std::optional<std::int64_t> lambda_max;
  int m_min = -30;
  int m_max = 30;
  bool m_min_set = false;
  std::string format;
  std::uint64_t seed = 20240601;
  std::string output;
  std::string figure = "levels";
  bool details = false;
  bool no_heisenberg = false;
  unsigned threads = 0;
  std::size_t pde_points = 50;
  sw::Tolerances tol;
};

Complex resolve_s(const Options& o) {
  const Complex s = sw::parse_complex(o.preset.empty() ? o.s : o.preset);
  if (s == Complex(0.0)) throw sw::DomainError("s must be nonzero");
  return s;
}

sw::ParameterSet resolve_params(const Options& o) { return sw::ParameterSet::make(o.n, o.q, resolve_s(o)); }

std::uint64_t resolve_seed(const Options& o) {
  if (const char* env = std::getenv("SINGULAR_WEYL_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      return v;
    } catch (const std::exception&) {
      throw sw::DomainError(std::string("SINGULAR_WEYL_SEED is not an unsigned integer: ") + env);
    }
  }
  return o.seed;
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty() || o.output == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw IoError("cannot open '" + o.output + "' for writing");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
  if (!out) throw IoError("failed writing '" + o.output + "'");
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string pair_text(const sw::LkPair& p) {
  return "(" + std::to_string(p.l) + "," + std::to_string(p.k) + ")";
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw sw::DomainError("format '" + format + "' is not available for this subcommand");
}

int cmd_admissible(const Options& o) {
  const std::string format = o.format.empty() ? "text" : o.format;
  require_format(format, {"text", "json", "csv"});
  if (o.n < 1) throw sw::DomainError("n must be >= 1");
  std::ostringstream out;
  if (o.lambda) {
    const std::int64_t lambda = *o.lambda;
    const bool ok = sw::is_admissible(o.n, lambda);
    const auto pairs = ok ? sw::admissible_pairs(o.n, lambda) : std::vector<sw::LkPair>{};
    if (format == "json") {
      json j;
      j["n"] = o.n;
      j["lambda"] = lambda;
      j["admissible"] = ok;
      auto arr = json::array();
      for (const auto& p : pairs) arr.push_back({p.l, p.k});
      j["pairs"] = arr;
      if (!ok) j["note"] = "not admissible";
      out << j.dump(2);
    } else if (format == "csv") {
      out << "l,k\n";
      for (const auto& p : pairs) out << p.l << "," << p.k << "\n";
      if (!ok) std::cerr << "lambda = " << lambda << " is not admissible for n = " << o.n << "\n";
    } else {
      if (!ok) {
        out << "lambda = " << lambda << " is not admissible for n = " << o.n << "\n";
      } else {
        for (std::size_t i = 0; i < pairs.size(); ++i) out << (i ? " " : "") << pair_text(pairs[i]);
        out << "\n";
      }
    }
  } else {
    if (!o.lambda_max) throw sw::DomainError("admissible needs --lambda or --lambda-max");
    if (*o.lambda_max < 0) throw sw::DomainError("lambda-max must be >= 0");
    const auto values = sw::enumerate_admissible(o.n, *o.lambda_max);
    if (format == "json") {
      json j;
      j["n"] = o.n;
      j["lambda_max"] = *o.lambda_max;
      j["admissible"] = values;
      out << j.dump(2);
    } else if (format == "csv") {
      out << "lambda\n";
      for (auto v : values) out << v << "\n";
    } else {
      for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
      out << "\n";
    }
  }
  emit(o, out.str());
  return kExitOk;
}

int cmd_ktypes(const Options& o) {
  const std::string format = o.format.empty() ? "text" : o.format;
  require_format(format, {"text", "json", "csv"});
  const auto params = resolve_params(o);
  std::vector<sw::KTypeVector> lattice;
  if (o.lambda) {
    sw::Eigenvalue::admissible(o.n, *o.lambda);
    for (const auto& F : sw::ktype_lattice(params, *o.lambda, std::max(std::abs(o.m_min), std::abs(o.m_max)))) {
      if (F.lambda().value() == *o.lambda) lattice.push_back(F);
    }
  } else {
    lattice = sw::ktype_lattice(params, o.lambda_max.value_or(10), std::max(std::abs(o.m_min), std::abs(o.m_max)));
  }
  std::erase_if(lattice, [&](const sw::KTypeVector& F) { return F.index().m < o.m_min || F.index().m > o.m_max; });

  std::ostringstream out;
  if (format == "json") {
    auto arr = json::array();
    for (const auto& F : lattice) {
      json e = sw::to_json(F);
      e["a"] = sw::to_string(F.a_exact());
      e["b"] = sw::to_string(F.b_exact());
      arr.push_back(e);
    }
    out << arr.dump(2);
  } else if (format == "csv") {
    out << "lambda,m,l,k,a,b\n";
    for (const auto& F : lattice) {
      const auto& i = F.index();
      out << F.lambda().value() << "," << i.m << "," << i.l << "," << i.k << "," << sw::to_string(F.a_exact())
          << "," << sw::to_string(F.b_exact()) << "\n";
    }
  } else {
    for (const auto& F : lattice) {
      const auto& i = F.index();
      out << "lambda=" << F.lambda().value() << " m=" << i.m << " l=" << i.l << " k=" << i.k
          << " a=" << sw::to_string(F.a_exact()) << " b=" << sw::to_string(F.b_exact()) << "\n";
    }
  }
  emit(o, out.str());
  return kExitOk;
}

int cmd_verify(const Options& o) {
  const std::string format = o.format.empty() ? "json" : o.format;
  require_format(format, {"json"});
  const auto params = resolve_params(o);
  sw::VerifyConfig cfg;
  cfg.n = params.n();
  cfg.q = params.q();
  cfg.s = params.s();
  cfg.lambda_max = o.lambda_max.value_or(o.lambda.value_or(60));
  if (cfg.lambda_max < 0) throw sw::DomainError("lambda-max must be >= 0");
  cfg.m_max = std::max(std::abs(o.m_min), std::abs(o.m_max));
  cfg.seed = resolve_seed(o);
  cfg.details = o.details;
  cfg.heisenberg = !o.no_heisenberg;
  cfg.threads = o.threads;
  cfg.pde_points = o.pde_points;
  cfg.tol = o.tol;
  const auto report = sw::run_verification(cfg);
  emit(o, sw::to_json(report).dump(2));
  if (!report.ok()) {
    std::cerr << "verification failed:\n";
    for (const auto& c : report.checks) {
      if (c.ok()) continue;
      std::cerr << "  " << c.name << ": " << c.failures << " failure(s), max residual " << c.max_residual << "\n";
      for (const auto& e : c.examples) std::cerr << "    " << e << "\n";
    }
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_structure(const Options& o) {
  const std::string format = o.format.empty() ? "text" : o.format;
  require_format(format, {"text", "json"});
  const auto params = resolve_params(o);
  const auto series = sw::composition_series(params);
  std::vector<sw::SubmoduleDescriptor> parts;
  if (o.lambda) {
    sw::Eigenvalue::admissible(o.n, *o.lambda);
    parts = sw::decompose(params, *o.lambda);
  }
  std::ostringstream out;
  if (format == "json") {
    json j;
    j["n"] = params.n();
    j["q"] = params.q();
    j["composition_series"] = sw::to_json(series);
    if (o.lambda) {
      j["lambda"] = *o.lambda;
      auto arr = json::array();
      for (const auto& d : parts) arr.push_back(sw::to_json(d));
      j["decomposition"] = arr;
    }
    out << j.dump(2);
  } else {
    out << sw::to_text(series);
    if (o.lambda) {
      out << "lambda = " << *o.lambda << ": " << parts.size() << " summand(s)\n";
      for (const auto& d : parts) {
        out << "  H_{" << d.l << "," << d.k << "}: weights m = " << d.residue << " mod 4, boundary " << d.boundary;
        if (d.irreducible) out << ", irreducible";
        if (d.has_lowest) out << ", lowest-weight submodule H+ (m >= " << d.boundary << ")";
        if (d.has_highest) out << ", highest-weight submodule H- (m <= " << -d.boundary << ")";
        out << "\n    chain: ";
        for (std::size_t i = 0; i < d.chain.size(); ++i) out << (i ? " ⊂ " : "") << d.chain[i];
        out << "\n";
      }
    }
  }
  emit(o, out.str());
  return kExitOk;
}

int cmd_plot_data(const Options& o) {
  if (o.figure == "levels") {
    const std::string format = o.format.empty() ? "csv" : o.format;
    require_format(format, {"csv"});
    emit(o, sw::level_curves_csv(o.n, o.lambda_max.value_or(o.lambda.value_or(100))));
    return kExitOk;
  }
  const auto params = resolve_params(o);
  sw::LadderGraphOptions opts;
  opts.m_min = o.m_min_set ? o.m_min : 0;
  opts.m_max = o.m_max;
  std::string format;
  if (o.figure == "lattice") {
    format = o.format.empty() ? "json" : o.format;
    if (o.lambda) {
      sw::Eigenvalue::admissible(o.n, *o.lambda);
      opts.lambda_only = *o.lambda;
      opts.lambda_max = *o.lambda;
    } else {
      opts.lambda_max = o.lambda_max.value_or(30);
    }
    opts.include_lambda_zero = false;
    opts.e_plus_edges = opts.e_minus_edges = false;
  } else if (o.figure == "heisenberg") {
    format = o.format.empty() ? "dot" : o.format;
    opts.lambda_max = o.lambda_max.value_or(o.lambda.value_or(30));
    opts.include_lambda_zero = true;
    opts.eta_edges = false;
    opts.e_minus_edges = false;
  } else {
    throw sw::DomainError("unknown figure '" + o.figure + "' (expected levels, lattice or heisenberg)");
  }
  require_format(format, {"json", "dot"});
  const auto graph = sw::ladder_graph(params, opts);
  emit(o, format == "dot" ? sw::to_dot(graph) : sw::to_json(graph).dump(2));
  return kExitOk;
}

void add_common(CLI::App* app, Options& o, bool with_params) {
  app->add_option("--n", o.n, "dimension n >= 1")->required();
  if (with_params) {
    app->add_option("--q", o.q, "q in Z/4");
    app->add_option("--s", o.s, "complex s, e.g. 0+0.5i, or a preset name");
    app->add_option("--preset", o.preset, "schrodinger (s = i/2) or heat (s = -1/4)")
        ->check(CLI::IsMember({"schrodinger", "heat"}));
  }
  app->add_option("--lambda", o.lambda, "a single eigenvalue");
  app->add_option("--lambda-max", o.lambda_max, "largest eigenvalue");
  app->add_option("--format", o.format, "json, csv, dot or text")->check(CLI::IsMember({"json", "csv", "dot", "text"}));
  app->add_option("--output,-o", o.output, "write to this file instead of stdout");
}

void add_m_range(CLI::App* app, Options& o) {
  app->add_option_function<int>("--m-min", [&o](int v) {
    o.m_min = v;
    o.m_min_set = true;
  }, "smallest weight m");
  app->add_option("--m-max", o.m_max, "largest weight m (|m| bound for verify)");
}

void add_tolerances(CLI::App* app, Options& o) {
  auto& t = o.tol;
  app->add_option("--tol-pde", t.pde_residual, "PDE residual tolerance");
  app->add_option("--tol-omega", t.omega_residual, "Omega'' eigenvalue tolerance");
  app->add_option("--tol-ladder", t.ladder, "kappa/eta closed-form tolerance");
  app->add_option("--tol-periodicity", t.periodicity, "periodicity tolerance");
  app->add_option("--tol-contiguous", t.contiguous, "contiguous relation tolerance");
  app->add_option("--tol-lsq", t.lsq_residual, "least-squares residual tolerance");
  app->add_option("--tol-rational", t.rational_match, "rational match tolerance");
  app->add_option("--tol-group", t.group, "group derivative tolerance");
  app->add_option("--tol-fd-step", t.fd_step, "finite-difference base step");
  app->add_option("--tol-series", t.series_rel_tol, "1F1 series stopping tolerance");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"singular-weyl: K-finite solutions of the Schrodinger/heat equation with inverse-square potential"};
  app.require_subcommand(1);
  Options o;

  auto* admissible = app.add_subcommand("admissible", "list admissible eigenvalues or the pairs (l,k) of one");
  add_common(admissible, o, false);

  auto* ktypes = app.add_subcommand("ktypes", "list K-type indices with Kummer parameters");
  add_common(ktypes, o, true);
  add_m_range(ktypes, o);

  auto* verify = app.add_subcommand("verify", "run the invariant suite over the K-type lattice");
  add_common(verify, o, true);
  add_m_range(verify, o);
  verify->add_option("--seed", o.seed, "PRNG seed (SINGULAR_WEYL_SEED overrides)");
  verify->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  verify->add_option("--pde-points", o.pde_points, "sample points per K-type for the PDE residual");
  verify->add_flag("--details", o.details, "include per-check entries in the report");
  verify->add_flag("--no-heisenberg", o.no_heisenberg, "skip Heisenberg coefficient recovery");
  add_tolerances(verify, o);

  auto* structure = app.add_subcommand("structure", "decomposition and composition series");
  add_common(structure, o, true);

  auto* plot = app.add_subcommand("plot-data", "figure data: level curves, weight lattice, E+ action");
  add_common(plot, o, true);
  add_m_range(plot, o);
  plot->add_option("--figure", o.figure, "levels, lattice or heisenberg")
      ->check(CLI::IsMember({"levels", "lattice", "heisenberg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*admissible) return cmd_admissible(o);
    if (*ktypes) return cmd_ktypes(o);
    if (*verify) return cmd_verify(o);
    if (*structure) return cmd_structure(o);
    if (*plot) return cmd_plot_data(o);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const sw::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitInvalid;
}
