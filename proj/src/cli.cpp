#include "btq/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "btq/action.hpp"
#include "btq/bs.hpp"
#include "btq/compare.hpp"
#include "btq/error.hpp"
#include "btq/report.hpp"
#include "btq/spectra.hpp"
#include "btq/svg.hpp"
#include "btq/symbol.hpp"

namespace btq::cli {

namespace {

constexpr double kMaxEps = 0.5;

constexpr const char* kCsvColumns =
    "CSV columns:\n"
    "  spectrum  index,re,im\n"
    "  action    re,im,nodes_used,last_delta,contour_radius\n"
    "  solve     j,variant,re,im,iterations,final_residual,status\n"
    "  compare   exact_re,exact_im,approx_re,approx_im,distance\n"
    "  sweep     k,max_error\n"
    "JSON documents are {\"meta\": <run configuration>, \"data\": <payload>}.";

struct RunConfig {
  std::string subcommand;
  std::string family = "T";
  int k = 20;
  double eps = 0.0;
  std::string variant = "principal";
  double window = 0.8;
  double quad_tol = 1e-12;
  std::optional<int> j;
  double lambda_re = 0.0;
  double lambda_im = 0.0;
  double radius_scale = 1.0;
  std::vector<int> ks{20, 40, 80, 160};
  std::string input;
  std::string output_path;
  std::string output_format;
};

[[noreturn]] void reject(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

void validate(const RunConfig& cfg) {
  const auto& sub = cfg.subcommand;
  if (!std::isfinite(cfg.eps)) reject("--eps must be finite");
  if (sub != "spectrum" && sub != "plot" && std::abs(cfg.eps) > kMaxEps) {
    reject("--eps must satisfy |eps| <= 0.5");
  }
  if (!(cfg.quad_tol > 0.0) || !std::isfinite(cfg.quad_tol)) reject("--quad-tol must be positive");
  if (sub == "spectrum") {
    const auto family = parse_operator_family(cfg.family);
    const int min_k = family == OperatorFamily::S ? 3 : 2;
    if (cfg.k < min_k) reject("--k must be >= " + std::to_string(min_k) + " for family " + cfg.family);
  }
  if (sub == "solve" || sub == "compare" || sub == "sweep") parse_variant(cfg.variant);
  if (sub == "solve" || sub == "compare") {
    if (cfg.k < 3) reject("--k must be >= 3");
  }
  if ((sub == "solve" && !cfg.j) || sub == "compare") {
    if (!(cfg.window > 0.0) || cfg.window > kSeedWindow) reject("--window must lie in (0, 0.9]");
  }
  if (sub == "action") {
    if (!std::isfinite(cfg.lambda_re) || !std::isfinite(cfg.lambda_im)) reject("lambda must be finite");
    if (std::abs(cfg.lambda_re) >= 1.0) reject("--lambda-re must satisfy |Re lambda| < 1");
    if (!(cfg.radius_scale > 0.0)) reject("--radius-scale must be positive");
  }
  if (sub == "sweep") {
    if (cfg.ks.size() < 3) reject("--ks needs at least three values");
    for (std::size_t i = 0; i < cfg.ks.size(); ++i) {
      if (cfg.ks[i] < 3 || (i > 0 && cfg.ks[i] <= cfg.ks[i - 1])) {
        reject("--ks must be strictly increasing and >= 3");
      }
    }
  }
  if (sub == "plot") {
    if (cfg.input.empty()) reject("--input is required");
    if (cfg.output_path.empty()) reject("--out is required");
  }
  const auto& fmt = cfg.output_format;
  if (sub == "plot" ? fmt != "svg" : (fmt != "json" && fmt != "csv")) {
    reject("--format '" + fmt + "' is not supported by " + sub);
  }
}

Json meta_of(const RunConfig& cfg) {
  Json meta{{"subcommand", cfg.subcommand}};
  const auto& sub = cfg.subcommand;
  if (sub == "spectrum") meta["family"] = cfg.family;
  if (sub == "spectrum" || sub == "solve" || sub == "compare") meta["k"] = cfg.k;
  if (sub == "sweep") meta["ks"] = cfg.ks;
  if (sub != "plot") meta["eps"] = cfg.eps;
  if (sub == "action") {
    meta["lambda"] = to_json(cplx{cfg.lambda_re, cfg.lambda_im});
    meta["radius_scale"] = cfg.radius_scale;
  }
  if (sub == "solve" || sub == "compare" || sub == "sweep") meta["variant"] = cfg.variant;
  if (sub == "solve") {
    if (cfg.j) meta["j"] = *cfg.j;
    else meta["window"] = cfg.window;
  }
  if (sub == "compare" || sub == "sweep") meta["window"] = cfg.window;
  if (sub != "spectrum" && sub != "plot") meta["quad_tol"] = cfg.quad_tol;
  if (sub == "plot") meta["input"] = cfg.input;
  meta["output_format"] = cfg.output_format;
  return meta;
}

template <typename Result>
void emit(const RunConfig& cfg, const Result& result, std::ostream& os) {
  if (cfg.output_format == "csv") {
    write_csv(os, result);
  } else {
    write_json(os, Json{{"meta", meta_of(cfg)}, {"data", to_json(result)}});
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) reject("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    reject("'" + path + "' is not valid JSON: " + e.what());
  }
}

void dispatch(const RunConfig& cfg, std::ostream& os) {
  ActionOptions opts;
  opts.tol = cfg.quad_tol;
  const auto& sub = cfg.subcommand;

  if (sub == "spectrum") {
    const auto mat = operator_matrix(parse_operator_family(cfg.family), cfg.k, cfg.eps);
    emit(cfg, eigenvalues(mat), os);
  } else if (sub == "action") {
    opts.radius_scale = cfg.radius_scale;
    emit(cfg, action_integral({cfg.lambda_re, cfg.lambda_im}, cfg.eps, opts), os);
  } else if (sub == "solve") {
    const auto variant = parse_variant(cfg.variant);
    if (cfg.j) {
      const std::vector<BSSolution> one{bs_solve(cfg.k, cfg.eps, *cfg.j, variant, opts)};
      if (cfg.output_format == "csv") {
        write_csv(os, one);
      } else {
        write_json(os, Json{{"meta", meta_of(cfg)}, {"data", to_json(one.front())}});
      }
    } else {
      emit(cfg, bs_spectrum(cfg.k, cfg.eps, variant, cfg.window, opts), os);
    }
  } else if (sub == "compare") {
    emit(cfg, compare_spectra(cfg.k, cfg.eps, parse_variant(cfg.variant), cfg.window, opts), os);
  } else if (sub == "sweep") {
    emit(cfg, convergence_study(cfg.ks, cfg.eps, parse_variant(cfg.variant), cfg.window, opts), os);
  } else if (sub == "plot") {
    const auto points = comparison_points_from_json(read_json_file(cfg.input));
    std::ostringstream title;
    title << "k = " << points.k << ", eps = " << format_double(points.eps);
    if (!points.variant.empty()) title << ", " << points.variant;
    ScatterPlot plot(title.str());
    plot.add({"exact eigenvalues", points.exact, Marker::Diamond, "blue"});
    plot.add({"Bohr-Sommerfeld", points.approx, Marker::Cross, "red"});
    plot.write(os);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Spectra of non-self-adjoint Berezin-Toeplitz operators on the sphere and their "
               "complex Bohr-Sommerfeld approximations.",
               "btq"};
  app.footer(kCsvColumns);
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  auto add_common = [&](CLI::App* sub, bool with_eps = true) {
    if (with_eps) sub->add_option("--eps", cfg.eps, "Perturbation parameter epsilon");
    sub->add_option("--quad-tol", cfg.quad_tol, "Action quadrature tolerance")
        ->capture_default_str();
    sub->add_option("--out", cfg.output_path, "Output file (default: standard output)");
    sub->add_option("--format", cfg.output_format, "json | csv (svg for plot)");
  };

  auto* spectrum = app.add_subcommand("spectrum", "Exact eigenvalues of T, S or the ladder operator");
  spectrum->add_option("--family", cfg.family, "T | S | ladder")->capture_default_str();
  spectrum->add_option("--k", cfg.k, "Semiclassical degree")->required();
  add_common(spectrum);

  auto* action = app.add_subcommand("action", "Complex action I(lambda, eps)");
  action->add_option("--lambda-re", cfg.lambda_re, "Re lambda")->required();
  action->add_option("--lambda-im", cfg.lambda_im, "Im lambda")->capture_default_str();
  action->add_option("--radius-scale", cfg.radius_scale, "Contour radius multiplier")
      ->capture_default_str();
  add_common(action);

  auto* solve = app.add_subcommand("solve", "Bohr-Sommerfeld solutions for one j or a window");
  solve->add_option("--k", cfg.k, "Semiclassical degree")->required();
  solve->add_option("--variant", cfg.variant, "principal | halfform")->capture_default_str();
  solve->add_option("--j", cfg.j, "Quantum number (omit for every j in the window)");
  solve->add_option("--window", cfg.window, "Seed window half-width")->capture_default_str();
  add_common(solve);

  auto* compare = app.add_subcommand("compare", "Match exact eigenvalues with Bohr-Sommerfeld solutions");
  compare->add_option("--k", cfg.k, "Semiclassical degree")->required();
  compare->add_option("--variant", cfg.variant, "principal | halfform")->capture_default_str();
  compare->add_option("--window", cfg.window, "Window half-width on Re lambda")->capture_default_str();
  add_common(compare);

  auto* sweep = app.add_subcommand("sweep", "Convergence table and fitted order in k");
  sweep->add_option("--ks", cfg.ks, "Comma-separated degrees")->delimiter(',')->capture_default_str();
  sweep->add_option("--variant", cfg.variant, "principal | halfform")->capture_default_str();
  sweep->add_option("--window", cfg.window, "Window half-width on Re lambda")->capture_default_str();
  add_common(sweep);

  auto* plot = app.add_subcommand("plot", "SVG scatter of a compare report");
  plot->add_option("--input", cfg.input, "JSON written by 'compare'")->required();
  add_common(plot, false);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "btq: error: InvalidArgument: " << e.what() << '\n';
    return kExitConfig;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (cfg.output_format.empty()) {
    cfg.output_format = cfg.subcommand == "spectrum" ? "csv"
                        : cfg.subcommand == "plot"   ? "svg"
                                                     : "json";
  }

  try {
    validate(cfg);
    // Assemble the whole document before touching the output file.
    std::ostringstream buffer;
    dispatch(cfg, buffer);
    if (cfg.output_path.empty() || cfg.output_path == "-") {
      out << buffer.str();
    } else {
      std::ofstream file(cfg.output_path, std::ios::binary);
      if (!file) reject("cannot write '" + cfg.output_path + "'");
      file << buffer.str();
    }
  } catch (const Error& e) {
    err << "btq: error: " << e.what() << '\n';
    return is_config_error(e.kind()) ? kExitConfig : kExitNumerical;
  } catch (const std::exception& e) {
    err << "btq: error: NumericalFailure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace btq::cli
