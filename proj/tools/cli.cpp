#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "acmwild/cohomology.hpp"
#include "acmwild/errors.hpp"
#include "acmwild/field.hpp"
#include "acmwild/moduli.hpp"
#include "acmwild/presentation.hpp"
#include "acmwild/restriction.hpp"
#include "acmwild/rng.hpp"
#include "acmwild/variety.hpp"
#include "acmwild/version.hpp"
#include "acmwild/wildness.hpp"
#include "report_io.hpp"

namespace acmwild::cli {

namespace {

using io::Json;

std::string_view command_name(Command c) {
  switch (c) {
    case Command::construct:
      return "construct";
    case Command::table:
      return "table";
    case Command::restrict:
      return "restrict";
    case Command::simplicity:
      return "simplicity";
    case Command::certify:
      return "certify";
    case Command::bound:
      return "bound";
  }
  return "unknown";
}

// Fields every report starts with.
Json header(const RunConfig& config) {
  Json j;
  j["command"] = command_name(config.command);
  j["tool_version"] = kToolVersion;
  j["prime"] = config.prime;
  j["seed"] = config.seed;
  j["n"] = config.n;
  j["a"] = config.a;
  return j;
}

std::string header_markdown(const RunConfig& config, std::string_view title) {
  std::ostringstream out;
  out << "# " << title << "\n\n";
  out << "- n = " << config.n << ", a = " << config.a << '\n';
  out << "- prime " << config.prime << ", seed " << config.seed << ", tool version "
      << kToolVersion << '\n';
  return out.str();
}

TwistWindow window_of(const RunConfig& config) {
  const TwistWindow def = default_window(config.n);
  return {config.t_min.value_or(def.min), config.t_max.value_or(def.max)};
}

ACMVarietyDescriptor variety_of(const RunConfig& config, bool with_forms) {
  if (!with_forms) {
    if (config.n - static_cast<int>(config.ci_degrees.size()) < 2) {
      return make_ci_variety(config.n, config.ci_degrees, nullptr, prime_field(config.prime));
    }
    return ACMVarietyDescriptor::complete_intersection(config.n, config.ci_degrees);
  }
  SeededRng rng(config.seed, kVarietyStreamCounter);
  return make_ci_variety(config.n, config.ci_degrees, &rng, prime_field(config.prime));
}

RunResult emit(const RunConfig& config, const Json& j, const std::string& markdown,
               int exit_code, std::string diagnostics = {}) {
  RunResult result;
  result.exit_code = exit_code;
  result.report = config.format == Format::json ? io::serialize(j) : markdown;
  result.diagnostics = std::move(diagnostics);
  return result;
}

RunResult run_construct(const RunConfig& config) {
  const auto built = build_kernel_bundle(config.n, config.a, SeededRng(config.seed),
                                         prime_field(config.prime));
  Json j = header(config);
  j["accepted_seed"] = built.accepted_seed;
  j["attempts"] = built.attempts;
  j["rank"] = built.bundle.rank();
  j["surjectivity"] = io::to_json(built.certificate);
  j["phi"] = io::to_json(built.bundle.phi());

  std::ostringstream md;
  md << header_markdown(config, "Kernel bundle E_{n,a}");
  md << "- accepted seed " << built.accepted_seed << " after " << built.attempts
     << " attempt(s)\n";
  md << "- rank " << built.bundle.rank() << ", presented as O(1)^"
     << built.bundle.source_rank() << " -> O(2)^" << built.bundle.target_rank() << '\n';
  md << "- sheaf surjectivity certified at degree "
     << (built.certificate.surjective_at_degree
             ? std::to_string(*built.certificate.surjective_at_degree)
             : std::string("none"))
     << " (searched to " << built.certificate.searched_up_to << ")\n";
  md << "- H^0(phi(1)) isomorphism: " << (built.certificate.h0_phi1_iso ? "yes" : "no")
     << '\n';
  return emit(config, j, md.str(), kExitSuccess);
}

RunResult run_table(const RunConfig& config) {
  const auto built = build_kernel_bundle(config.n, config.a, SeededRng(config.seed),
                                         prime_field(config.prime));
  const TwistWindow window = window_of(config);
  const CohomologyTable table = cohomology_table_exact(built.bundle, window);
  const CohomologyTable expected = closed_form_table(config.n, config.a, window);
  const bool matches = table.cells == expected.cells;

  Json j = header(config);
  j["accepted_seed"] = built.accepted_seed;
  j["matches_closed_form"] = matches;
  j["table"] = io::to_json(table);

  std::ostringstream md;
  md << header_markdown(config, "h^i(P^n, E_{n,a}(t))");
  md << "- accepted seed " << built.accepted_seed << '\n';
  md << "- matches closed form: " << (matches ? "yes" : "no") << "\n\n";
  md << io::table_markdown(table) << "\n`*` certified vanishing\n";
  return emit(config, j, md.str(), matches ? kExitSuccess : kExitFailed,
              matches ? "" : "exact table disagrees with the closed form");
}

RunResult run_restrict(const RunConfig& config) {
  const auto x = variety_of(config, true);
  const auto built = build_kernel_bundle(config.n, config.a, SeededRng(config.seed),
                                         prime_field(config.prime));
  const TwistWindow window = window_of(config);
  const auto traces = restriction_vanishing_certificate(x, config.n, config.a);
  const CohomologyTable table = restricted_cohomology_table(built.bundle, x, window);
  const auto audit = audit_certificate_exact(built.bundle, traces, window);

  bool vanishing = audit.empty();
  for (int t = window.min; t <= window.max; ++t) {
    if (t != -1 && t != -2 && table.at(1, t) != 0) vanishing = false;
  }
  const AcmVerdict verdict = acm_with_respect_to_s(table, config.s, traces);

  Json j = header(config);
  j["accepted_seed"] = built.accepted_seed;
  j["variety"] = io::to_json(x);
  j["vanishing_outside_exceptional"] = vanishing;
  Json trace_json = Json::array();
  for (const auto& t : traces) trace_json.push_back(io::to_json(t));
  j["vanishing_certificate"] = std::move(trace_json);
  j["table"] = io::to_json(table);
  j["acm"] = io::to_json(verdict);

  std::ostringstream md;
  md << header_markdown(config, "h^i(X, E(t)) on a complete intersection");
  md << "- X of dimension " << x.dimension() << " in P^" << x.n() << '\n';
  md << "- h^1 vanishes outside t in {-1, -2}: " << (vanishing ? "yes" : "no") << '\n';
  md << "- ACM for O_X(" << config.s << "): " << to_string(verdict.status) << "\n\n";
  md << io::table_markdown(table) << "\n`*` certified vanishing\n";
  return emit(config, j, md.str(), vanishing ? kExitSuccess : kExitFailed,
              vanishing ? "" : "h^1 does not vanish outside the exceptional twists");
}

RunResult run_simplicity(const RunConfig& config) {
  const auto built = build_kernel_bundle(config.n, config.a, SeededRng(config.seed),
                                         prime_field(config.prime));
  const StabilizerReport report = stabilizer_dimension(built.bundle.phi().transpose());

  Json j = header(config);
  j["accepted_seed"] = built.accepted_seed;
  j["stabilizer"] = io::to_json(report);

  std::ostringstream md;
  md << header_markdown(config, "Simplicity of E_{n,a}");
  md << "- intertwiner system AC = BA: " << report.equations << " equations, "
     << report.unknowns << " unknowns\n";
  md << "- stabilizer dimension " << report.stab_dimension << ", Kac value "
     << report.kac_value << '\n';
  md << "- simple: " << (report.simple ? "yes" : "no") << '\n';
  return emit(config, j, md.str(), report.simple ? kExitSuccess : kExitFailed,
              report.simple ? "" : "stabilizer dimension exceeds 1");
}

RunResult run_certify(const RunConfig& config) {
  const auto x = variety_of(config, true);
  WildnessOptions options;
  if (config.t_min || config.t_max) options.window = window_of(config);
  const WildnessReport report =
      wildness_certificate(x, config.s, config.a, SeededRng(config.seed),
                           prime_field(config.prime), options);
  return emit(config, io::to_json(report), io::report_markdown(report),
              report.verdict ? kExitSuccess : kExitFailed,
              report.verdict ? "" : "at least one wildness check failed");
}

RunResult run_bound(const RunConfig& config) {
  const auto x = variety_of(config, false);
  Json j = header(config);
  j["s"] = config.s;
  j["rank"] = config.n * config.a;
  j["family_dimension"] = family_dimension(config.n, config.a);
  j["veronese_bound"] = veronese_bound(config.n);
  j["embedding_dimension"] = embedding_dimension(x, config.s);
  j["variety"] = io::to_json(x);

  std::ostringstream md;
  md << header_markdown(config, "Dimension counts");
  md << "- rank of E_{n,a}: " << config.n * config.a << '\n';
  md << "- family dimension a^2(n^2+2n-4)+1: " << family_dimension(config.n, config.a) << '\n';
  md << "- Veronese bound C(n+3,3)-1: " << veronese_bound(config.n) << '\n';
  md << "- h^0(O_X(" << config.s << ")) - 1: " << embedding_dimension(x, config.s) << '\n';
  return emit(config, j, md.str(), kExitSuccess);
}

std::string validate(const RunConfig& c) {
  if (c.n < 1) return "--n must be >= 1";
  if (c.a < 1) return "--a must be >= 1";
  if (c.s < 0) return "--s must be >= 0";
  if (!is_prime(c.prime) || c.prime < PrimeField::kMinSamplingPrime || c.prime >= (1u << 31)) {
    return "--prime must be a prime in [101, 2^31)";
  }
  for (int e : c.ci_degrees) {
    if (e < 1) return "--ci-degrees entries must be >= 1";
  }
  if (c.t_min && c.t_max && *c.t_min > *c.t_max) return "--t-min exceeds --t-max";
  return {};
}

}  // namespace

RunResult run(const RunConfig& config) {
  if (auto problem = validate(config); !problem.empty()) {
    return {kExitInvalidInput, {}, problem};
  }
  try {
    switch (config.command) {
      case Command::construct:
        return run_construct(config);
      case Command::table:
        return run_table(config);
      case Command::restrict:
        return run_restrict(config);
      case Command::simplicity:
        return run_simplicity(config);
      case Command::certify:
        return run_certify(config);
      case Command::bound:
        return run_bound(config);
    }
  } catch (const PreconditionError& e) {
    return {kExitFailed, {}, std::string("refused: ") + e.what()};
  } catch (const GenericityFailure& e) {
    return {kExitFailed, {}, std::string("genericity failure: ") + e.what()};
  } catch (const Error& e) {
    return {kExitFailed, {}, e.what()};
  }
  return {kExitInvalidInput, {}, "unknown command"};
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Exact cohomology and wildness certificates for kernel bundles E_{n,a}"};
  app.set_version_flag("--version", std::string(kToolVersion));

  RunConfig config;
  const std::map<std::string, Command> commands{
      {"construct", Command::construct}, {"table", Command::table},
      {"restrict", Command::restrict},   {"simplicity", Command::simplicity},
      {"certify", Command::certify},     {"bound", Command::bound}};
  const std::map<std::string, Format> formats{{"json", Format::json},
                                              {"markdown", Format::markdown}};

  app.add_option("command", config.command, "construct | table | restrict | simplicity | certify | bound")
      ->required()
      ->transform(CLI::CheckedTransformer(commands, CLI::ignore_case));
  app.add_option("--n", config.n, "ambient dimension of P^n")->capture_default_str();
  app.add_option("--a", config.a, "family parameter a (rank n*a)")->capture_default_str();
  app.add_option("--s", config.s, "polarization O_X(s)")->capture_default_str();
  app.add_option("--prime", config.prime, "field characteristic")->capture_default_str();
  app.add_option("--seed", config.seed, "seed of the SplitMix64 stream")->capture_default_str();
  app.add_option("--t-min", config.t_min, "first twist of the table window (default -n-4)");
  app.add_option("--t-max", config.t_max, "last twist of the table window (default 4)");
  app.add_option("--ci-degrees", config.ci_degrees,
                 "degrees of the complete intersection X (empty: X = P^n)")
      ->delimiter(',');
  app.add_option("--format", config.format, "json | markdown")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--output", config.output_path, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  const RunResult result = run(config);
  if (!result.diagnostics.empty()) std::cerr << result.diagnostics << '\n';
  if (!result.report.empty()) {
    if (config.output_path) {
      std::ofstream out(*config.output_path, std::ios::binary);
      if (!out) {
        std::cerr << "cannot write " << *config.output_path << '\n';
        return kExitInvalidInput;
      }
      out << result.report;
    } else {
      std::cout << result.report;
    }
  }
  return result.exit_code;
}

}  // namespace acmwild::cli
