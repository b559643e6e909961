// leroy-atlas: evaluate Le Roy type functions, check theorem certificates,
// verify geometric properties on the unit disk, sweep parameter ranges.
//
// Exit codes: 0 ok/pass, 1 check or verify negative, 2 usage/config error,
// 3 computational error. Machine output on stdout, diagnostics on stderr.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "leroy/criteria.hpp"
#include "leroy/disk_verify.hpp"
#include "leroy/errors.hpp"
#include "leroy/json_io.hpp"
#include "leroy/series.hpp"

namespace {

using leroy::AgreementRecord;
using leroy::Certificate;
using leroy::GridSpec;
using leroy::LeRoyParams;
using leroy::ParamTriple;
using leroy::SeriesValue;
using leroy::VerificationReport;
using C = std::complex<double>;

std::string fmt12(double v) {
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(what);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse " + what + ": '" + s + "'");
  }
}

ParamTriple parse_triple(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 3) {
    throw std::invalid_argument("triple must be alpha,beta,gamma: '" + s + "'");
  }
  return ParamTriple{parse_double(parts[0], "alpha"),
                     parse_double(parts[1], "beta"),
                     parse_double(parts[2], "gamma")};
}

C parse_z(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) {
    throw std::invalid_argument("z must be re,im: '" + s + "'");
  }
  return C(parse_double(parts[0], "Re z"), parse_double(parts[1], "Im z"));
}

// Flat key=value configuration; repeated keys accumulate (triple=, sweep=).
// Command-line flags override file values, so the file only fills in
// options the user did not pass.
std::multimap<std::string, std::string> parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::multimap<std::string, std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto strip = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    line = strip(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line is not key=value: '" + line + "'");
    }
    entries.emplace(strip(line.substr(0, eq)), strip(line.substr(eq + 1)));
  }
  return entries;
}

struct Options {
  double tol = 1e-12;
  int grid_angles = 720;
  std::vector<double> grid_radii;
  std::string output = "json";
  std::string config_path;

  std::vector<std::string> params_args;  // repeated a,b,g
  std::string z_arg;
  bool normalized = false;
  int derivative = 0;

  std::string theorem;
  int kmax = 50;

  std::string property;
  double radius = 0.999;
  double order = 0.0;
  double x_max = 5.0;
  int points = 100;
  bool dump_grid = false;

  std::vector<std::string> sweep_axes;  // name=start:stop:step
  std::string theorems_arg;
  std::string witness_file = "sweep_witnesses.json";
};

GridSpec build_grid(const Options& opt) {
  GridSpec g = GridSpec::default_grid();
  if (!opt.grid_radii.empty()) g.radii = opt.grid_radii;
  g.angles_per_circle = opt.grid_angles;
  return g;
}

LeRoyParams build_params(const Options& opt) {
  if (opt.params_args.empty()) {
    throw std::invalid_argument(
        "no parameters given: pass --params a,b,g (repeatable) or triple= "
        "lines in a config file");
  }
  std::vector<ParamTriple> triples;
  for (const std::string& s : opt.params_args) triples.push_back(parse_triple(s));
  return LeRoyParams(std::move(triples));
}

// ---------------------------------------------------------------------------
// eval

int cmd_eval(const Options& opt) {
  const LeRoyParams params = build_params(opt);
  const C z = parse_z(opt.z_arg);
  SeriesValue v{};
  if (opt.derivative > 0) {
    v = leroy::eval_derivative(params, z, opt.derivative, opt.tol);
  } else if (opt.normalized) {
    v = leroy::eval_normalized(params, z, opt.tol);
  } else {
    v = leroy::eval(params, z, opt.tol);
  }
  if (opt.output == "csv") {
    std::cout << "re,im,tail_bound,terms_used\n"
              << fmt12(v.value.real()) << "," << fmt12(v.value.imag()) << ","
              << fmt12(v.tail_bound) << "," << v.terms_used << "\n";
  } else {
    std::cout << leroy::to_json(v) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// check

int cmd_check(const Options& opt) {
  if (opt.theorem.empty()) throw std::invalid_argument("--theorem is required");
  const LeRoyParams params = build_params(opt);
  const Certificate cert = leroy::check_theorem(opt.theorem, params, opt.kmax);
  if (opt.output == "csv") {
    std::cout << "theorem_id,clause,lhs,relation,rhs,margin,pass,satisfied\n";
    for (const leroy::Clause& c : cert.clauses) {
      std::cout << cert.theorem_id << "," << c.name << "," << fmt12(c.lhs) << ","
                << leroy::relation_symbol(c.relation) << "," << fmt12(c.rhs)
                << "," << fmt12(c.margin) << "," << (c.pass ? 1 : 0) << ","
                << (cert.satisfied ? 1 : 0) << "\n";
    }
  } else {
    std::cout << leroy::to_json(cert) << "\n";
  }
  return cert.satisfied ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify

VerificationReport run_property(const Options& opt, const LeRoyParams& params,
                                const GridSpec& grid) {
  const std::string& p = opt.property;
  if (p == "bound") return leroy::verify_bound(params, grid);
  if (p == "exp-subordination") return leroy::verify_exp_subordination(params, grid);
  if (p == "starlike") return leroy::verify_starlike(params, opt.radius, opt.order, grid);
  if (p == "convex") return leroy::verify_convex(params, opt.radius, opt.order, grid);
  if (p == "exp-starlike") return leroy::verify_exp_starlike(params, grid);
  if (p == "exp-convex") return leroy::verify_exp_convex(params, grid);
  if (p == "close-to-convex") return leroy::verify_close_to_convex(params, grid);
  if (p == "growth") return leroy::verify_growth_inequality(params, opt.x_max, opt.points);
  throw std::invalid_argument(
      "unknown property '" + p +
      "' (bound, exp-subordination, starlike, convex, exp-starlike, "
      "exp-convex, close-to-convex, growth)");
}

std::string property_key(const std::string& cli_name) {
  if (cli_name == "bound") return "bound_1_minus_1_over_e";
  if (cli_name == "exp-subordination") return "exp_subordination";
  if (cli_name == "exp-starlike") return "exp_starlike";
  if (cli_name == "exp-convex") return "exp_convex";
  if (cli_name == "close-to-convex") return "close_to_convex";
  return cli_name;
}

int cmd_verify(const Options& opt) {
  if (opt.property.empty()) throw std::invalid_argument("--property is required");
  const LeRoyParams params = build_params(opt);
  const GridSpec grid = build_grid(opt);
  const VerificationReport report = run_property(opt, params, grid);

  if (opt.dump_grid) {
    if (opt.property == "growth") {
      throw std::invalid_argument("--dump-grid applies to disk properties only");
    }
    std::cout << "radius,angle,value\n";
    for (const leroy::GridSample& s : leroy::sample_grid(
             params, property_key(opt.property), opt.radius, opt.order, grid)) {
      std::cout << fmt12(s.radius) << "," << fmt12(s.angle) << ","
                << fmt12(s.value) << "\n";
    }
  } else if (opt.output == "csv") {
    std::cout << "property,radius_limit,extremal_value,witness_re,witness_im,pass\n"
              << report.property << "," << fmt12(report.radius_limit) << ","
              << fmt12(report.extremal_value) << ",";
    if (report.witness) {
      std::cout << fmt12(report.witness->real()) << ","
                << fmt12(report.witness->imag());
    } else {
      std::cout << ",";
    }
    std::cout << "," << (report.pass ? 1 : 0) << "\n";
  } else {
    std::cout << leroy::to_json(report) << "\n";
  }
  return report.pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepAxis {
  std::string name;  // alpha | beta | gamma | triple-index
  double start = 0, stop = 0, step = 0;
};

SweepAxis parse_axis(const std::string& text) {
  // name=start:stop:step
  const auto eq = text.find('=');
  if (eq == std::string::npos) {
    throw std::invalid_argument("sweep axis must be name=start:stop:step: '" +
                                text + "'");
  }
  SweepAxis axis;
  axis.name = text.substr(0, eq);
  if (axis.name != "alpha" && axis.name != "beta" && axis.name != "gamma" &&
      axis.name != "triple-index") {
    throw std::invalid_argument("sweep axis name must be alpha, beta, gamma or "
                                "triple-index: '" + axis.name + "'");
  }
  const auto parts = split(text.substr(eq + 1), ':');
  if (parts.size() != 3) {
    throw std::invalid_argument("sweep axis must be name=start:stop:step: '" +
                                text + "'");
  }
  axis.start = parse_double(parts[0], "axis start");
  axis.stop = parse_double(parts[1], "axis stop");
  axis.step = parse_double(parts[2], "axis step");
  if (!(axis.step > 0) || axis.start > axis.stop) {
    throw std::invalid_argument("sweep axis needs step > 0 and start <= stop");
  }
  return axis;
}

std::vector<double> axis_values(const SweepAxis& axis) {
  std::vector<double> vals;
  for (int i = 0;; ++i) {
    const double v = axis.start + i * axis.step;
    if (v > axis.stop + 1e-12) break;
    vals.push_back(v);
  }
  return vals;
}

LeRoyParams apply_axes(const LeRoyParams& base,
                       const std::vector<std::pair<std::string, double>>& set) {
  std::vector<ParamTriple> triples = base.triples();
  int copies = 1;
  for (const auto& [name, value] : set) {
    if (name == "alpha") triples[0].alpha = value;
    else if (name == "beta") triples[0].beta = value;
    else if (name == "gamma") triples[0].gamma = value;
    else copies = std::max(1, static_cast<int>(std::lround(value)));
  }
  std::vector<ParamTriple> out;
  for (int i = 0; i < copies; ++i)
    out.insert(out.end(), triples.begin(), triples.end());
  return LeRoyParams(std::move(out));
}

int cmd_sweep(const Options& opt) {
  if (opt.theorems_arg.empty()) {
    throw std::invalid_argument("sweep needs at least one theorem id (--theorems)");
  }
  std::vector<std::string> ids = split(opt.theorems_arg, ',');
  std::sort(ids.begin(), ids.end());
  const auto& known = leroy::theorem_ids();
  for (const std::string& id : ids) {
    if (std::find(known.begin(), known.end(), id) == known.end()) {
      throw std::invalid_argument("unknown theorem id: " + id);
    }
  }
  if (opt.sweep_axes.empty() || opt.sweep_axes.size() > 2) {
    throw std::invalid_argument("sweep takes one or two --sweep axes");
  }
  std::vector<SweepAxis> axes;
  for (const std::string& s : opt.sweep_axes) axes.push_back(parse_axis(s));

  Options base_opt = opt;
  if (base_opt.params_args.empty()) base_opt.params_args = {"1,1,1"};
  const LeRoyParams base = build_params(base_opt);
  const GridSpec grid = build_grid(opt);

  // Single-triple theorems cannot face multi-triple parameter points.
  const bool multi_possible =
      base.size() > 1 ||
      std::any_of(axes.begin(), axes.end(),
                  [](const SweepAxis& a) { return a.name == "triple-index"; });
  for (const std::string& id : ids) {
    const bool single_only = id == "thm-3-1" || id == "thm-4-1-star" || id == "thm-4-1-cvx";
    if (single_only && multi_possible) {
      throw std::invalid_argument(
          id + " takes a single triple; drop the triple-index axis or the "
               "extra triples");
    }
  }

  const bool csv = opt.output == "csv";
  if (csv) {
    std::cout << "alpha,beta,gamma,triples";
    for (const std::string& id : ids) {
      std::cout << "," << id << "_satisfied," << id << "_verified," << id
                << "_agree," << id << "_extremal";
    }
    std::cout << "\n";
  }

  long checked = 0, satisfied = 0, verified = 0;
  std::vector<AgreementRecord> disagreements;

  const std::vector<double> first = axis_values(axes[0]);
  const std::vector<double> second =
      axes.size() > 1 ? axis_values(axes[1]) : std::vector<double>{0.0};

  for (double v1 : first) {
    for (double v2 : second) {
      std::vector<std::pair<std::string, double>> set{{axes[0].name, v1}};
      if (axes.size() > 1) set.emplace_back(axes[1].name, v2);
      const LeRoyParams point = apply_axes(base, set);

      std::ostringstream csv_row;
      std::ostringstream json_row;
      json_row << "{\"params\":[";
      for (std::size_t i = 0; i < point.triples().size(); ++i) {
        const ParamTriple& t = point.triples()[i];
        if (i) json_row << ",";
        json_row << "[" << leroy::format_double(t.alpha) << ","
                 << leroy::format_double(t.beta) << ","
                 << leroy::format_double(t.gamma) << "]";
      }
      json_row << "],\"theorems\":{";
      csv_row << fmt12(point.front().alpha) << "," << fmt12(point.front().beta)
              << "," << fmt12(point.front().gamma) << "," << point.size();

      bool first_id = true;
      for (const std::string& id : ids) {
        const Certificate cert = leroy::check_theorem(id, point, opt.kmax);
        const AgreementRecord rec = leroy::cross_validate(cert, grid);
        ++checked;
        if (cert.satisfied) ++satisfied;
        if (rec.report.pass) ++verified;
        if (!rec.agree) disagreements.push_back(rec);

        if (!first_id) json_row << ",";
        first_id = false;
        json_row << "\"" << id << "\":{\"certificate_satisfied\":"
                 << (cert.satisfied ? "true" : "false")
                 << ",\"verified_pass\":" << (rec.report.pass ? "true" : "false")
                 << ",\"agree\":" << (rec.agree ? "true" : "false")
                 << ",\"extremal_value\":"
                 << leroy::format_double(rec.report.extremal_value) << "}";
        csv_row << "," << (cert.satisfied ? 1 : 0) << ","
                << (rec.report.pass ? 1 : 0) << "," << (rec.agree ? 1 : 0) << ","
                << fmt12(rec.report.extremal_value);
      }
      json_row << "}}";
      std::cout << (csv ? csv_row.str() : json_row.str()) << "\n";
    }
  }

  std::ofstream wf(opt.witness_file);
  if (!wf) throw std::invalid_argument("cannot write witness file: " + opt.witness_file);
  wf << "[";
  for (std::size_t i = 0; i < disagreements.size(); ++i) {
    if (i) wf << ",\n";
    wf << leroy::to_json(disagreements[i]);
  }
  wf << "]\n";

  std::cerr << "sweep summary: checked=" << checked << " satisfied=" << satisfied
            << " verified=" << verified
            << " disagreements=" << disagreements.size() << " (witnesses in "
            << opt.witness_file << ")\n";
  return 0;
}

// ---------------------------------------------------------------------------
// radius

int cmd_radius(const Options& opt) {
  if (opt.property != "starlike" && opt.property != "convex") {
    throw std::invalid_argument("radius estimates need --property starlike or convex");
  }
  const LeRoyParams params = build_params(opt);
  const GridSpec grid = build_grid(opt);
  const auto passes = [&](double r) {
    const VerificationReport rep =
        opt.property == "starlike"
            ? leroy::verify_starlike(params, r, opt.order, grid)
            : leroy::verify_convex(params, r, opt.order, grid);
    return rep.pass;
  };

  double estimate = 0.0;
  if (passes(1e-3)) {
    if (passes(0.999)) {
      estimate = 0.999;  // cap: property holds across the sampled disk
    } else {
      double lo = 1e-3, hi = 0.999;
      while (hi - lo > 1e-4) {
        const double mid = 0.5 * (lo + hi);
        (passes(mid) ? lo : hi) = mid;
      }
      estimate = lo;
    }
  }

  if (opt.output == "csv") {
    std::cout << "property,order,radius\n"
              << opt.property << "," << fmt12(opt.order) << "," << fmt12(estimate)
              << "\n";
  } else {
    std::cout << "{\"property\":\"" << opt.property
              << "\",\"order\":" << leroy::format_double(opt.order)
              << ",\"radius\":" << leroy::format_double(estimate) << "}\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------

void apply_config(Options& opt, const CLI::App& app, const CLI::App* sub) {
  if (opt.config_path.empty()) return;
  const auto entries = parse_config(opt.config_path);
  const auto file_params = [&](const char* key) {
    std::vector<std::string> vals;
    for (auto [it, end] = entries.equal_range(key); it != end; ++it)
      vals.push_back(it->second);
    return vals;
  };
  const auto unset = [&](const std::string& flag) {
    const CLI::Option* top = app.get_option_no_throw(flag);
    if (top != nullptr && top->count() > 0) return false;
    const CLI::Option* local = sub ? sub->get_option_no_throw(flag) : nullptr;
    return local == nullptr || local->count() == 0;
  };

  if (const auto v = file_params("triple"); !v.empty() && unset("--params"))
    opt.params_args = v;
  if (const auto v = file_params("sweep"); !v.empty() && unset("--sweep"))
    opt.sweep_axes = v;
  const auto scalar = [&](const char* key, const std::string& flag,
                          auto setter) {
    const auto v = file_params(key);
    if (!v.empty() && unset(flag)) setter(v.back());
  };
  scalar("tol", "--tol", [&](const std::string& s) { opt.tol = parse_double(s, "tol"); });
  scalar("grid-angles", "--grid-angles",
         [&](const std::string& s) { opt.grid_angles = static_cast<int>(parse_double(s, "grid-angles")); });
  scalar("grid-radii", "--grid-radii", [&](const std::string& s) {
    opt.grid_radii.clear();
    for (const std::string& r : split(s, ',')) opt.grid_radii.push_back(parse_double(r, "grid radius"));
  });
  scalar("output", "--output", [&](const std::string& s) { opt.output = s; });
  scalar("theorem", "--theorem", [&](const std::string& s) { opt.theorem = s; });
  scalar("theorems", "--theorems", [&](const std::string& s) { opt.theorems_arg = s; });
  scalar("property", "--property", [&](const std::string& s) { opt.property = s; });
  scalar("radius", "--radius", [&](const std::string& s) { opt.radius = parse_double(s, "radius"); });
  scalar("order", "--order", [&](const std::string& s) { opt.order = parse_double(s, "order"); });
  scalar("z", "--z", [&](const std::string& s) { opt.z_arg = s; });
  scalar("kmax", "--kmax", [&](const std::string& s) { opt.kmax = static_cast<int>(parse_double(s, "kmax")); });
  scalar("x-max", "--x-max", [&](const std::string& s) { opt.x_max = parse_double(s, "x-max"); });
  scalar("points", "--points", [&](const std::string& s) { opt.points = static_cast<int>(parse_double(s, "points")); });
  scalar("witness-file", "--witness-file", [&](const std::string& s) { opt.witness_file = s; });
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Le Roy type function atlas: evaluation, certificates, disk verification"};
  app.require_subcommand(1);
  app.add_option("--tol", opt.tol, "series tolerance (default 1e-12)");
  app.add_option("--grid-angles", opt.grid_angles, "angles per circle (default 720)");
  app.add_option("--grid-radii", opt.grid_radii, "comma list of radii in (0, 0.999]")
      ->delimiter(',');
  app.add_option("--output", opt.output, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--config", opt.config_path, "flat key=value config file");

  CLI::App* eval = app.add_subcommand("eval", "evaluate the series at one point");
  eval->add_option("--params", opt.params_args, "alpha,beta,gamma (repeatable)");
  eval->add_option("--z", opt.z_arg, "evaluation point re,im")->required();
  eval->add_flag("--normalized", opt.normalized, "normalized class-A form");
  eval->add_option("--derivative", opt.derivative, "derivative order of the normalized form")
      ->check(CLI::Range(0, 2));

  CLI::App* check = app.add_subcommand("check", "evaluate a theorem certificate");
  check->add_option("--params", opt.params_args, "alpha,beta,gamma (repeatable)");
  check->add_option("--theorem", opt.theorem, "theorem id (see --list)");
  check->add_option("--kmax", opt.kmax, "chain length for ozaki (default 50)");
  check->add_flag_callback("--list", [] {
    for (const std::string& id : leroy::theorem_ids()) std::cout << id << "\n";
    std::exit(0);
  });

  CLI::App* verify = app.add_subcommand("verify", "verify a property on the disk");
  verify->add_option("--params", opt.params_args, "alpha,beta,gamma (repeatable)");
  verify->add_option("--property", opt.property, "property to verify");
  verify->add_option("--radius", opt.radius, "radius limit for starlike/convex");
  verify->add_option("--order", opt.order, "order for starlike/convex");
  verify->add_option("--x-max", opt.x_max, "range for growth");
  verify->add_option("--points", opt.points, "grid points for growth");
  verify->add_flag("--dump-grid", opt.dump_grid, "emit radius,angle,value CSV");

  CLI::App* sweep = app.add_subcommand("sweep", "sweep parameters against theorems");
  sweep->add_option("--params", opt.params_args, "base triple(s)");
  sweep->add_option("--sweep", opt.sweep_axes,
                    "axis name=start:stop:step (alpha, beta, gamma, triple-index; up to 2)");
  sweep->add_option("--theorems", opt.theorems_arg, "comma list of theorem ids");
  sweep->add_option("--kmax", opt.kmax, "chain length for ozaki");
  sweep->add_option("--witness-file", opt.witness_file,
                    "where disagreement records go (default sweep_witnesses.json)");

  CLI::App* radius = app.add_subcommand("radius", "bisect the largest passing radius");
  radius->add_option("--params", opt.params_args, "alpha,beta,gamma (repeatable)");
  radius->add_option("--property", opt.property, "starlike or convex");
  radius->add_option("--order", opt.order, "order (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    apply_config(opt, app, sub);
    if (sub == eval) return cmd_eval(opt);
    if (sub == check) return cmd_check(opt);
    if (sub == verify) return cmd_verify(opt);
    if (sub == sweep) return cmd_sweep(opt);
    if (sub == radius) return cmd_radius(opt);
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const leroy::ArityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
