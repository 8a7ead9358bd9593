#include "jdiv/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "jdiv/bounds.hpp"
#include "jdiv/error.hpp"
#include "jdiv/geometry.hpp"
#include "jdiv/io.hpp"
#include "jdiv/jensen.hpp"
#include "jdiv/random.hpp"
#include "jdiv/tolerance.hpp"

namespace jdiv::cli {

namespace {

using io::json;

/// An input file that cannot be read or does not parse.
class InputFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structured input given either inline (--name '[...]'), as a path
/// (--name data.json) or as an explicit path (--name-file data.json).
struct Input {
  std::string name;
  std::string value{};
  std::string file{};

  bool given() const { return !value.empty() || !file.empty(); }
};

struct RawInput {
  std::string text;
  bool from_file;
  std::string origin;
};

void add_input(CLI::App* app, Input& in, const std::string& what) {
  auto* inline_opt =
      app->add_option("--" + in.name, in.value, what + " (inline JSON, or a file path)");
  auto* file_opt = app->add_option("--" + in.name + "-file", in.file, what + " (file path)");
  inline_opt->excludes(file_opt);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputFileError("cannot read input file \"" + path + "\"");
  std::ostringstream ss;
  ss << f.rdbuf();
  if (f.bad()) throw InputFileError("error reading input file \"" + path + "\"");
  return ss.str();
}

bool looks_inline(const std::string& s) {
  const auto pos = s.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && (s[pos] == '[' || s[pos] == '{');
}

RawInput read_input(const Input& in) {
  if (!in.given()) throw ValidationError("missing required input --" + in.name);
  if (!in.file.empty()) return {read_file(in.file), true, in.file};
  if (looks_inline(in.value)) return {in.value, false, "--" + in.name};
  return {read_file(in.value), true, in.value};
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Decodes an input; parse and schema errors inside files become InputFileError.
template <class F>
auto decode_raw(const RawInput& raw, F&& f) {
  try {
    return f(raw);
  } catch (const ParseError& e) {
    if (raw.from_file) throw InputFileError(raw.origin + ": " + e.what());
    throw;
  }
}

template <class F>
auto decode(const Input& in, F&& f) {
  return decode_raw(read_input(in), [&](const RawInput& raw) { return f(io::parse_json(raw.text)); });
}

Distribution load_distribution(const Input& in) { return decode(in, io::distribution_from_json); }
DensityMatrix load_density(const Input& in) { return decode(in, io::density_from_json); }

io::PointSet load_points(const Input& in) {
  return decode_raw(read_input(in), [](const RawInput& raw) -> io::PointSet {
    if (raw.from_file && ends_with(raw.origin, ".csv")) return io::distributions_from_csv(raw.text);
    return io::points_from_json(io::parse_json(raw.text));
  });
}

DistanceMatrix load_matrix(const Input& in) { return decode(in, io::distance_matrix_from_json); }

/// Exactly one of the two inputs must be present; returns true for the first.
bool choose(const Input& a, const Input& b, std::string_view command) {
  if (a.given() == b.given()) {
    throw ValidationError(std::string(command) + " needs exactly one of --" + a.name + " or --" +
                          b.name);
  }
  return a.given();
}

struct Options {
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format;
  double alpha = 1.0;
  std::optional<double> alpha_opt;
  std::optional<double> tol;
  double eps = 1e-2;
  double x = 0.0;
  int n = 3;
  int grid = 50;
  int count = 1;
  int k = 2;
  int dim = 2;
  bool pure = false;
  std::string kind = "classical";
  Input p{"p"}, q{"q"}, rho{"rho"}, sigma{"sigma"}, family{"family"}, points{"points"},
      matrix{"matrix"};
};

/// Command result: JSON, or preformatted text (CSV).
struct Output {
  json value;
  std::optional<std::string> text{};
};

DistanceMatrix matrix_from(const Options& o, std::string_view command) {
  if (choose(o.points, o.matrix, command)) {
    const auto pts = load_points(o.points);
    const Alpha alpha(o.alpha);
    return std::visit([&](const auto& v) { return divergence_matrix(std::span(v), alpha); }, pts);
  }
  return load_matrix(o.matrix);
}

json family_json(const Input& in) { return decode(in, [](const json& j) { return j; }); }

template <class Family>
Family load_family(const Input& in, Family (*convert)(const json&)) {
  return decode(in, convert);
}

Output cmd_entropy(const Options& o) {
  const Alpha alpha(o.alpha);
  const double value = choose(o.p, o.rho, "entropy") ? alpha_entropy(load_distribution(o.p), alpha)
                                                      : alpha_entropy(load_density(o.rho), alpha);
  return {json{{"value", value}, {"alpha", o.alpha}}};
}

Output cmd_jd(const Options& o) {
  const auto r = jd_alpha(load_distribution(o.p), load_distribution(o.q), Alpha(o.alpha));
  return {json{{"value", r.value}}};
}

Output cmd_qjd(const Options& o) {
  const auto r = qjd_alpha(load_density(o.rho), load_density(o.sigma), Alpha(o.alpha));
  return {json{{"value", r.value}}};
}

Output cmd_jd_general(const Options& o) {
  const auto fam = load_family(o.family, io::classical_family_from_json);
  const auto r = o.alpha_opt ? jd_alpha_general(fam, Alpha(*o.alpha_opt)) : jd_general(fam);
  return {io::to_json(r)};
}

Output cmd_qjd_general(const Options& o) {
  const auto fam = load_family(o.family, io::quantum_family_from_json);
  const auto r = o.alpha_opt ? qjd_alpha_general(fam, Alpha(*o.alpha_opt)) : qjd_general(fam);
  return {io::to_json(r)};
}

bool is_quantum_family(const Input& in) { return io::family_kind(family_json(in)) == "quantum"; }

Output cmd_redundancy(const Options& o) {
  if (is_quantum_family(o.family)) {
    const auto fam = load_family(o.family, io::quantum_family_from_json);
    const auto sigma = load_density(o.sigma);
    return {json{{"value", io::number(q_redundancy(fam, sigma))},
                 {"at_barycenter", io::number(q_redundancy(fam, fam.barycenter()))}}};
  }
  const auto fam = load_family(o.family, io::classical_family_from_json);
  const auto q = load_distribution(o.q);
  return {json{{"value", io::number(redundancy(fam, q))},
               {"at_barycenter", io::number(redundancy(fam, fam.barycenter()))}}};
}

Output cmd_identities(const Options& o) {
  if (is_quantum_family(o.family)) {
    const auto fam = load_family(o.family, io::quantum_family_from_json);
    const auto sigma = load_density(o.sigma);
    const double residual = donald_residual(fam, sigma);
    return {json{{"identity", "donald"},
                 {"residual", residual},
                 {"holds", residual <= 1e-9 * tolerance_scale()}}};
  }
  const auto fam = load_family(o.family, io::classical_family_from_json);
  const auto q = load_distribution(o.q);
  const double residual = compensation_residual(fam, q);
  return {json{{"identity", "compensation"},
               {"residual", residual},
               {"holds", residual <= 1e-10 * tolerance_scale()}}};
}

Output cmd_bounds(const Options& o) {
  const Alpha alpha(o.alpha);
  if (choose(o.p, o.rho, "bounds")) {
    return {io::to_json(bound_report(load_distribution(o.p), load_distribution(o.q), alpha))};
  }
  return {io::to_json(q_bound_report(load_density(o.rho), load_density(o.sigma), alpha))};
}

Output cmd_chain(const Options& o) {
  return {io::to_json(chain_check(load_distribution(o.p), load_distribution(o.q), Alpha(o.alpha)))};
}

Output cmd_diagram(const Options& o) {
  const auto d = diagram(Alpha(o.alpha), o.n, o.grid);
  if (o.format != "json") return {json(), io::diagram_csv(d)};
  json lower = json::array(), upper = json::array(), homotopy = json::array();
  for (const auto& p : d.curve_lower) lower.push_back({p.v, p.jd});
  for (const auto& p : d.curve_upper) upper.push_back({p.v, p.jd});
  for (const auto& s : d.homotopy_samples) homotopy.push_back({s.t, s.v, s.jd});
  return {json{{"alpha", o.alpha},
               {"n", o.n},
               {"curve_lower", lower},
               {"curve_upper", upper},
               {"homotopy", homotopy}}};
}

Output cmd_check_negative_type(const Options& o) {
  const auto d = matrix_from(o, "check-negative-type");
  const auto report = negative_type_check(d, o.tol);
  json out = io::to_json(report);
  out.erase("certified");
  out["is_negative_type"] = report.certified;
  out["n"] = d.size();
  return {out};
}

Output cmd_embed(const Options& o) {
  const auto d = matrix_from(o, "embed");
  const auto e = embed(d);
  const double check = reconstruction_error(e.coords, d);
  if (!(check <= 1e-8 * tolerance_scale())) {
    throw ConsistencyError("embedding reconstruction error " + io::format_double(check) +
                           " exceeds 1e-8");
  }
  return {io::to_json(Embedding{e.coords, check})};
}

Output cmd_cayley_menger(const Options& o) {
  const auto d = matrix_from(o, "cayley-menger");
  json out{{"det", cayley_menger_det(d)}, {"n", d.size()}};
  if (d.size() <= kMaxMengerPoints) out["menger_embeddable"] = menger_embeddability(d);
  return {out};
}

Output cmd_counterexample(const Options& o) {
  const Alpha alpha(o.alpha);
  const auto triple = counterexample_triple();
  const auto d = divergence_matrix(std::span(triple), alpha);
  const double energy = counterexample_energy(alpha);
  return {json{{"energy", energy},
               {"violates_triangle", energy > 0.0},
               {"numerator", counterexample_numerator(alpha)},
               {"triangle_gap", triangle_gap(d, 0, 1, 2)}}};
}

Output cmd_quadruple_cm(const Options& o) {
  const Alpha alpha(o.alpha);
  const double det = quadruple_cm_determinant(alpha, o.eps);
  const double sign = cm_leading_sign(alpha);
  return {json{{"det", det},
               {"eps", o.eps},
               {"embeddable", det >= 0.0},
               {"cm_leading_sign", sign},
               {"predicted_embeddable", sign <= 0.0},
               {"leading_coefficient", cm_leading_coefficient(alpha)}}};
}

Output cmd_power_integral(const Options& o) {
  const double value = power_integral(o.x, Alpha(o.alpha));
  const double exact = std::pow(o.x, o.alpha);
  return {json{{"value", value}, {"exact", exact}, {"abs_error", std::abs(value - exact)}}};
}

Output cmd_holevo(const Options& o) {
  return {json{{"value", holevo_bound(load_family(o.family, io::quantum_family_from_json))}}};
}

void require_positive(int value, std::string_view name) {
  if (value < 1) throw ValidationError("--" + std::string(name) + " must be >= 1");
}

Output cmd_gen_distributions(const Options& o) {
  require_positive(o.n, "n");
  require_positive(o.count, "count");
  Sampler sampler(o.seed);
  std::vector<Distribution> dists;
  for (int i = 0; i < o.count; ++i) dists.push_back(sampler.distribution(static_cast<std::size_t>(o.n)));
  if (o.format == "csv") {
    std::string text;
    for (const auto& d : dists) {
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (i > 0) text += ',';
        text += io::format_double(d[i]);
      }
      text += '\n';
    }
    return {json(), text};
  }
  json out = json::array();
  for (const auto& d : dists) out.push_back(io::to_json(d));
  return {out};
}

Output cmd_gen_states(const Options& o) {
  require_positive(o.dim, "dim");
  require_positive(o.count, "count");
  Sampler sampler(o.seed);
  json out = json::array();
  for (int i = 0; i < o.count; ++i) {
    out.push_back(io::to_json(o.pure ? sampler.pure_state(o.dim) : sampler.mixed_state(o.dim)));
  }
  return {out};
}

Output cmd_gen_family(const Options& o) {
  require_positive(o.k, "k");
  Sampler sampler(o.seed);
  const auto weights = sampler.distribution(static_cast<std::size_t>(o.k));
  if (o.kind == "quantum") {
    require_positive(o.dim, "dim");
    std::vector<DensityMatrix> members;
    for (int i = 0; i < o.k; ++i) members.push_back(o.pure ? sampler.pure_state(o.dim) : sampler.mixed_state(o.dim));
    return {io::to_json(QuantumFamily(std::move(members), weights))};
  }
  require_positive(o.n, "n");
  std::vector<Distribution> members;
  for (int i = 0; i < o.k; ++i) members.push_back(sampler.distribution(static_cast<std::size_t>(o.n)));
  return {io::to_json(ClassicalFamily(std::move(members), weights))};
}

using Handler = Output (*)(const Options&);

void write_error(std::ostream& err, std::string_view kind, const std::string& message,
                 json extra = json::object()) {
  extra["error"] = message;
  extra["kind"] = kind;
  err << io::dump(extra) << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Jensen divergences of order alpha: values, bounds and embeddability checks", "jdiv"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", o.seed, "Seed for all random sampling")->capture_default_str();
  app.add_option("--out", o.out_path, "Write the result to this file instead of stdout");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  std::vector<std::pair<CLI::App*, Handler>> handlers;
  auto command = [&](const std::string& name, const std::string& description, Handler h) {
    CLI::App* sub = app.add_subcommand(name, description);
    handlers.emplace_back(sub, h);
    return sub;
  };
  auto alpha_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--alpha", o.alpha, "Order alpha > 0");
    if (required) {
      opt->required();
    } else {
      opt->capture_default_str();
    }
  };

  auto* entropy = command("entropy", "Order-alpha entropy of a distribution or a density matrix", cmd_entropy);
  alpha_opt(entropy, false);
  add_input(entropy, o.p, "Distribution");
  add_input(entropy, o.rho, "Density matrix");

  auto* jd = command("jd", "JD_alpha of two distributions with equal weights", cmd_jd);
  alpha_opt(jd, false);
  add_input(jd, o.p, "First distribution");
  add_input(jd, o.q, "Second distribution");

  auto* qjd = command("qjd", "QJD_alpha of two density matrices with equal weights", cmd_qjd);
  alpha_opt(qjd, false);
  add_input(qjd, o.rho, "First density matrix");
  add_input(qjd, o.sigma, "Second density matrix");

  auto* jd_general_cmd = command("jd-general", "Jensen divergence of a weighted classical family", cmd_jd_general);
  jd_general_cmd->add_option("--alpha", o.alpha_opt, "Order alpha; omit for the cross-checked Shannon case");
  add_input(jd_general_cmd, o.family, "Classical family");

  auto* qjd_general_cmd = command("qjd-general", "Jensen divergence of a weighted quantum family", cmd_qjd_general);
  qjd_general_cmd->add_option("--alpha", o.alpha_opt, "Order alpha; omit for the cross-checked von Neumann case");
  add_input(qjd_general_cmd, o.family, "Quantum family");

  auto* redundancy_cmd = command("redundancy", "Mean relative entropy of a family to a coding distribution or state", cmd_redundancy);
  add_input(redundancy_cmd, o.family, "Weighted family");
  add_input(redundancy_cmd, o.q, "Coding distribution (classical families)");
  add_input(redundancy_cmd, o.sigma, "Coding state (quantum families)");

  auto* identities = command("identities", "Compensation (classical) or Donald (quantum) identity residual", cmd_identities);
  add_input(identities, o.family, "Weighted family");
  add_input(identities, o.q, "Coding distribution (classical families)");
  add_input(identities, o.sigma, "Coding state (quantum families)");

  auto* bounds = command("bounds", "Lower and upper bounds on JD_alpha (or QJD_alpha) with the exact value", cmd_bounds);
  alpha_opt(bounds, false);
  add_input(bounds, o.p, "First distribution");
  add_input(bounds, o.q, "Second distribution");
  add_input(bounds, o.rho, "First density matrix");
  add_input(bounds, o.sigma, "Second density matrix");

  auto* chain = command("chain", "Chain of total-variation bounds for alpha in [1, 2]", cmd_chain);
  alpha_opt(chain, false);
  add_input(chain, o.p, "First distribution");
  add_input(chain, o.q, "Second distribution");

  auto* diagram_cmd = command("diagram", "Joint range of (V, JD_alpha): boundary curves and homotopy samples", cmd_diagram);
  alpha_opt(diagram_cmd, false);
  diagram_cmd->add_option("--n", o.n, "Alphabet size")->capture_default_str();
  diagram_cmd->add_option("--grid", o.grid, "Grid points per axis")->capture_default_str();

  auto* negtype = command("check-negative-type", "Certify that a divergence matrix is of negative type", cmd_check_negative_type);
  alpha_opt(negtype, false);
  add_input(negtype, o.points, "Points (distributions or density matrices; .csv for distributions)");
  add_input(negtype, o.matrix, "Distance matrix");
  negtype->add_option("--tol", o.tol, "Eigenvalue tolerance (default 1e-9 * n * max|D|)");

  auto* embed_cmd = command("embed", "Euclidean coordinates realising square-root divergence distances", cmd_embed);
  alpha_opt(embed_cmd, false);
  add_input(embed_cmd, o.points, "Points (distributions or density matrices; .csv for distributions)");
  add_input(embed_cmd, o.matrix, "Distance matrix");

  auto* cm = command("cayley-menger", "Cayley-Menger determinant and Menger embeddability", cmd_cayley_menger);
  alpha_opt(cm, false);
  add_input(cm, o.points, "Points (distributions or density matrices; .csv for distributions)");
  add_input(cm, o.matrix, "Distance matrix");

  auto* counter = command("counterexample", "Triangle-inequality energy on the three-point family", cmd_counterexample);
  alpha_opt(counter, true);

  auto* quad = command("quadruple-cm", "Cayley-Menger determinant of the four-point family", cmd_quadruple_cm);
  alpha_opt(quad, true);
  quad->add_option("--eps", o.eps, "Spacing, 0 < eps < 1/6")->capture_default_str();

  auto* power = command("power-integral", "x^alpha through its Gamma-function integral representation", cmd_power_integral);
  alpha_opt(power, true);
  power->add_option("--x", o.x, "Argument x >= 0")->required();

  auto* holevo = command("holevo", "Holevo quantity of a quantum ensemble", cmd_holevo);
  add_input(holevo, o.family, "Quantum family");

  CLI::App* gen = app.add_subcommand("gen", "Random test data");
  gen->require_subcommand(1);
  auto* gen_dists = gen->add_subcommand("distributions", "Uniformly random distributions");
  handlers.emplace_back(gen_dists, cmd_gen_distributions);
  gen_dists->add_option("--n", o.n, "Alphabet size")->capture_default_str();
  gen_dists->add_option("--count", o.count, "Number of distributions")->capture_default_str();
  auto* gen_states = gen->add_subcommand("states", "Random density matrices");
  handlers.emplace_back(gen_states, cmd_gen_states);
  gen_states->add_option("--dim", o.dim, "Dimension")->capture_default_str();
  gen_states->add_option("--count", o.count, "Number of states")->capture_default_str();
  gen_states->add_flag("--pure", o.pure, "Pure states instead of Ginibre mixed states");
  auto* gen_family = gen->add_subcommand("family", "Random weighted family");
  handlers.emplace_back(gen_family, cmd_gen_family);
  gen_family->add_option("--kind", o.kind, "Member kind")
      ->check(CLI::IsMember({"classical", "quantum"}))
      ->capture_default_str();
  gen_family->add_option("--k", o.k, "Number of members")->capture_default_str();
  gen_family->add_option("--n", o.n, "Alphabet size (classical)")->capture_default_str();
  gen_family->add_option("--dim", o.dim, "Dimension (quantum)")->capture_default_str();
  gen_family->add_flag("--pure", o.pure, "Pure-state members");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    const bool no_command =
        app.get_subcommands().empty() || (gen->parsed() && gen->get_subcommands().empty());
    write_error(err, no_command ? "usage" : "arguments", e.what());
    return no_command ? kExitUsage : kExitValidation;
  }

  Handler handler = nullptr;
  for (const auto& [sub, h] : handlers) {
    if (sub->parsed()) handler = h;
  }
  if (handler == nullptr) {
    write_error(err, "usage", "no subcommand given");
    return kExitUsage;
  }

  try {
    const bool csv_capable = handler == cmd_diagram || handler == cmd_gen_distributions;
    if (o.format == "csv" && !csv_capable) {
      throw ValidationError("csv output is only available for diagram and gen distributions");
    }
    const Output result = handler(o);
    const std::string text = result.text ? *result.text : io::dump(result.value) + "\n";
    if (o.out_path.empty()) {
      out << text;
    } else {
      std::ofstream f(o.out_path, std::ios::binary);
      if (!(f << text)) throw ValidationError("cannot write output file \"" + o.out_path + "\"");
    }
    return kExitOk;
  } catch (const InputFileError& e) {
    write_error(err, "input_file", e.what());
    return kExitBadInput;
  } catch (const NotNegativeTypeError& e) {
    write_error(err, "not_negative_type", e.what(),
                json{{"witness", e.witness()}, {"min_eigenvalue", e.min_eigenvalue()}});
    return kExitValidation;
  } catch (const ValidationError& e) {
    write_error(err, "validation", e.what());
    return kExitValidation;
  } catch (const DomainError& e) {
    write_error(err, "domain", e.what());
    return kExitValidation;
  } catch (const ParseError& e) {
    write_error(err, "parse", e.what());
    return kExitValidation;
  } catch (const Error& e) {
    write_error(err, "computation", e.what());
    return kExitValidation;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"jdiv"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace jdiv::cli
