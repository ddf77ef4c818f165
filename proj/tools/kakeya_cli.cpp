// Copyright 2026 The Kakeya Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kakeya/kakeya.hpp"
#include "svg.hpp"

namespace {

using kakeya::Shape;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;  // fit failure or theorem violation
constexpr int kExitUsage = 2;      // usage or input error

// Per-command output selection: report to stdout, or to --json / --csv
// (at most one), with --svg as an optional figure file.
struct OutputOpts {
  std::string json_path;
  std::string csv_path;
  std::string svg_path;

  void attach(CLI::App* cmd, bool with_csv = true) {
    cmd->add_option("--json", json_path, "write the result to this file");
    if (with_csv)
      cmd->add_option("--csv", csv_path,
                      "write experiment trial rows to this file as CSV");
    cmd->add_option("--svg", svg_path, "write a figure to this file");
  }
};

struct Result {
  json body;
  std::vector<std::pair<std::string, Shape>> figures;
  int exit_code = kExitOk;
};

double parse_angle(const std::string& text) {
  std::string t = text;
  double factor = 1.0;
  if (t.size() > 3 && t.substr(t.size() - 3) == "deg") {
    factor = std::numbers::pi / 180.0;
    t = t.substr(0, t.size() - 3);
  } else if (t.size() > 3 && t.substr(t.size() - 3) == "rad") {
    t = t.substr(0, t.size() - 3);
  }
  std::size_t used = 0;
  double value = std::stod(t, &used);
  if (used != t.size())
    throw kakeya::InvalidParameter("cannot parse angle: " + text);
  return value * factor;
}

std::uint64_t effective_seed(std::optional<std::uint64_t> flag,
                             std::uint64_t fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv("KAKEYA_SEED"))
    return std::strtoull(env, nullptr, 0);
  return fallback;
}

kakeya::HPolytope as_hpolytope(const Shape& s) {
  if (const auto* p = std::get_if<kakeya::ConvexPolygon>(&s))
    return kakeya::to_hpolytope(*p);
  if (const auto* k = std::get_if<kakeya::VPolytope3>(&s))
    return kakeya::to_hpolytope(*k);
  if (const auto* h = std::get_if<kakeya::HPolytope>(&s)) return *h;
  throw kakeya::InvalidParameter(
      "the container shape must be a polygon or polytope");
}

json fit_report_json(const kakeya::FitReport& fr) {
  return json{{"fits", fr.fits},
              {"margin", fr.margin},
              {"translation", fr.translation}};
}

json sweep_report_json(const kakeya::SweepReport& sw, int dim) {
  json j{{"samples", sw.samples},
         {"all_fit", sw.all_fit},
         {"worst_margin", sw.worst_margin},
         {"worst_angle", sw.worst_angle},
         {"worst_index", sw.worst_index},
         {"certified", sw.certified},
         {"lipschitz_bound", sw.lipschitz_bound}};
  if (dim == 3)
    j["note"] = "3D sweeps are sampled evidence only, never a certificate";
  return j;
}

void emit(const Result& res, const OutputOpts& out,
          const kakeya::ExperimentReport* report) {
  if (!out.json_path.empty() && !out.csv_path.empty())
    throw kakeya::InvalidParameter("choose one of --json and --csv");
  if (!out.svg_path.empty()) {
    if (res.figures.empty())
      throw kakeya::InvalidParameter("this command draws no figure");
    kakeya::write_file_atomic(out.svg_path, kakeya::svg::render(res.figures));
  }
  if (!out.csv_path.empty()) {
    if (report == nullptr)
      throw kakeya::InvalidParameter("--csv applies to experiment reports");
    kakeya::write_file_atomic(out.csv_path, kakeya::to_csv(*report));
    return;
  }
  std::string text = res.body.dump(2) + "\n";
  if (!out.json_path.empty())
    kakeya::write_file_atomic(out.json_path, text);
  else
    std::cout << text;
}

json report_json(const kakeya::ExperimentReport& rep) {
  return json::parse(kakeya::to_json(rep));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "kakeya: shapes placeable in every orientation inside a convex body"};
  app.require_subcommand(1);

  std::string shape_path, p_path, q_path, angle_text = "0rad";
  std::string suite, scenario;
  int mu = 4, samples = 360, trials = -1;
  bool certify = false, approximate = false;
  std::optional<std::uint64_t> seed_flag;
  double lambda = -1.0;
  kakeya::Tolerances tol;

  OutputOpts out_inball, out_minwidth, out_sum, out_avg, out_phi, out_fit,
      out_sweep, out_scale, out_steiner, out_verify, out_repro;

  auto* c_inball = app.add_subcommand("inball", "largest inscribed ball");
  c_inball->add_option("--shape", shape_path, "container shape JSON")->required();
  out_inball.attach(c_inball, false);

  auto* c_width = app.add_subcommand("min-width", "smallest width and direction");
  c_width->add_option("--shape", shape_path)->required();
  c_width->add_flag("--approx", approximate,
                    "sampled-sphere search instead of exact enumeration (3D)");
  out_minwidth.attach(c_width, false);

  auto* c_sum = app.add_subcommand(
      "minkowski-sum", "Minkowski sum, or interpolation with --lambda");
  c_sum->add_option("--p", p_path)->required();
  c_sum->add_option("--q", q_path)->required();
  c_sum->add_option("--lambda", lambda, "interpolate (1-l)P + lQ instead");
  out_sum.attach(c_sum, false);

  auto* c_avg = app.add_subcommand("mu-average", "average of the mu rotated copies");
  c_avg->add_option("--shape", shape_path)->required();
  c_avg->add_option("--mu", mu, "even integer >= 4")->required();
  out_avg.attach(c_avg, false);

  auto* c_phi = app.add_subcommand("phi", "edge-length vector of a mu-polygon");
  c_phi->add_option("--shape", shape_path)->required();
  c_phi->add_option("--mu", mu)->required();
  out_phi.attach(c_phi, false);

  auto* c_fit = app.add_subcommand("fit", "translation fit at a fixed angle");
  c_fit->add_option("--p", p_path)->required();
  c_fit->add_option("--q", q_path)->required();
  c_fit->add_option("--angle", angle_text, "rotation, e.g. 45deg or 0.78rad");
  out_fit.attach(c_fit, false);

  auto* c_sweep = app.add_subcommand("sweep", "fit over an orientation sweep");
  c_sweep->add_option("--p", p_path)->required();
  c_sweep->add_option("--q", q_path)->required();
  c_sweep->add_option("--samples", samples);
  c_sweep->add_flag("--certify", certify, "2D Lipschitz certification");
  c_sweep->add_option("--seed", seed_flag, "3D orientation seed");
  out_sweep.attach(c_sweep, false);

  auto* c_scale = app.add_subcommand("max-scale",
                                     "largest scale passing the sweep");
  c_scale->add_option("--p", p_path)->required();
  c_scale->add_option("--q", q_path)->required();
  c_scale->add_option("--samples", samples);
  c_scale->add_option("--seed", seed_flag);
  out_scale.attach(c_scale, false);

  auto* c_steiner = app.add_subcommand("steiner",
                                       "vol(K + rB) polynomial coefficients");
  c_steiner->add_option("--shape", shape_path)->required();
  out_steiner.attach(c_steiner, false);

  auto* c_verify = app.add_subcommand("verify", "randomized verification suites");
  c_verify->add_option("suite", suite,
                       "one of: interpolation-fit, halfway-area2, halfway-vol3, "
                       "halfway-surf3, bm-area2, bm-vol3, bm-surf3, "
                       "perimeter-additivity, phi-algebra, mu-average-fit, "
                       "main-theorem")
      ->required();
  c_verify->add_option("--trials", trials, "trial count (suite default if unset)");
  c_verify->add_option("--samples", samples, "sweep samples where applicable");
  c_verify->add_option("--seed", seed_flag);
  c_verify->add_option("--tol-abs", tol.abs);
  c_verify->add_option("--tol-rel", tol.rel);
  out_verify.attach(c_verify);

  auto* c_repro = app.add_subcommand("reproduce", "end-to-end scenarios");
  c_repro->add_option("scenario", scenario,
                      "one of: square-reuleaux, triangle-width, "
                      "square-rotor-scale, mu-average-demo")
      ->required();
  c_repro->add_option("--tol-abs", tol.abs);
  c_repro->add_option("--tol-rel", tol.rel);
  out_repro.attach(c_repro);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    Result res;
    const kakeya::ExperimentReport* report = nullptr;
    kakeya::ExperimentReport rep;
    const OutputOpts* out = nullptr;

    if (c_inball->parsed()) {
      Shape q = kakeya::load_shape(shape_path);
      kakeya::Ball ball = kakeya::chebyshev_center(q);
      res.body = json{{"center", ball.center}, {"radius", ball.radius}};
      if (kakeya::dimension(q) == 2) {
        res.figures.emplace_back("Q", q);
        res.figures.emplace_back("inball", Shape{ball});
      }
      out = &out_inball;
    } else if (c_width->parsed()) {
      Shape q = kakeya::load_shape(shape_path);
      kakeya::MinWidthResult w = kakeya::min_width(q, approximate);
      res.body = json{{"width", w.width},
                      {"direction", w.direction},
                      {"approximate", approximate}};
      out = &out_minwidth;
    } else if (c_sum->parsed()) {
      Shape p = kakeya::load_shape(p_path);
      Shape q = kakeya::load_shape(q_path);
      Shape sum = c_sum->count("--lambda")
                      ? kakeya::interpolate(p, q, lambda)
                      : std::visit(
                            [&](const auto& a, const auto& b) -> Shape {
                              using A = std::decay_t<decltype(a)>;
                              using B = std::decay_t<decltype(b)>;
                              if constexpr (std::is_same_v<A, B> &&
                                            !std::is_same_v<A, kakeya::HPolytope>)
                                return kakeya::minkowski_sum(a, b);
                              else
                                throw kakeya::InvalidParameter(
                                    "minkowski-sum needs same-carrier "
                                    "polygon/vpolytope3/ball operands");
                            },
                            p, q);
      res.body = json::parse(kakeya::to_json(sum));
      if (kakeya::dimension(sum) == 2) {
        res.figures.emplace_back("P", p);
        res.figures.emplace_back("Q", q);
        res.figures.emplace_back("sum", sum);
      }
      out = &out_sum;
    } else if (c_avg->parsed()) {
      Shape p = kakeya::load_shape(shape_path);
      const auto* poly = std::get_if<kakeya::ConvexPolygon>(&p);
      if (!poly)
        throw kakeya::InvalidParameter("mu-average needs a planar polygon");
      kakeya::ConvexPolygon avg = kakeya::mu_average(*poly, mu);
      res.body = json::parse(kakeya::to_json(Shape{avg}));
      res.figures.emplace_back("P", p);
      res.figures.emplace_back("average", Shape{avg});
      out = &out_avg;
    } else if (c_phi->parsed()) {
      Shape p = kakeya::load_shape(shape_path);
      const auto* poly = std::get_if<kakeya::ConvexPolygon>(&p);
      if (!poly) throw kakeya::InvalidParameter("phi needs a planar polygon");
      res.body = json::parse(kakeya::to_json(kakeya::phi(*poly, mu)));
      out = &out_phi;
    } else if (c_fit->parsed()) {
      Shape p = kakeya::load_shape(p_path);
      kakeya::HPolytope q = as_hpolytope(kakeya::load_shape(q_path));
      kakeya::Rotation rho =
          q.dim() == 2 ? kakeya::Rotation::planar(parse_angle(angle_text))
                       : kakeya::Rotation::identity(3);
      kakeya::FitReport fr = kakeya::fits_translated(p, q, rho);
      res.body = fit_report_json(fr);
      res.exit_code = fr.fits ? kExitOk : kExitAssertion;
      if (q.dim() == 2) {
        res.figures.emplace_back("Q", Shape{q});
        res.figures.emplace_back(
            "P", kakeya::translated(kakeya::rotated(p, rho), fr.translation));
        res.figures.emplace_back("inball",
                                 Shape{kakeya::chebyshev_center(Shape{q})});
      }
      out = &out_fit;
    } else if (c_sweep->parsed()) {
      Shape p = kakeya::load_shape(p_path);
      kakeya::HPolytope q = as_hpolytope(kakeya::load_shape(q_path));
      kakeya::SweepReport sw = kakeya::sweep_fit(
          p, q, samples, certify,
          effective_seed(seed_flag, kakeya::kDefaultQuatSeed));
      res.body = sweep_report_json(sw, q.dim());
      res.exit_code = sw.all_fit ? kExitOk : kExitAssertion;
      if (q.dim() == 2) {
        kakeya::Rotation worst = kakeya::Rotation::planar(sw.worst_angle);
        kakeya::FitReport fr = kakeya::fits_translated(p, q, worst);
        res.figures.emplace_back("Q", Shape{q});
        res.figures.emplace_back(
            "P_worst",
            kakeya::translated(kakeya::rotated(p, worst), fr.translation));
        res.figures.emplace_back("inball",
                                 Shape{kakeya::chebyshev_center(Shape{q})});
      }
      out = &out_sweep;
    } else if (c_scale->parsed()) {
      Shape p = kakeya::load_shape(p_path);
      kakeya::HPolytope q = as_hpolytope(kakeya::load_shape(q_path));
      double alpha = kakeya::max_scale(
          p, q, samples, effective_seed(seed_flag, kakeya::kDefaultQuatSeed));
      res.body = json{{"max_scale", alpha}, {"samples", samples}};
      if (q.dim() == 2 && alpha > 0.0) {
        kakeya::Shape member = kakeya::scaled(p, alpha);
        kakeya::FitReport fr =
            kakeya::fits_translated(member, q, kakeya::Rotation::planar(0.0));
        res.figures.emplace_back("Q", Shape{q});
        res.figures.emplace_back("scaled_P",
                                 kakeya::translated(member, fr.translation));
        res.figures.emplace_back("inball",
                                 Shape{kakeya::chebyshev_center(Shape{q})});
      }
      out = &out_scale;
    } else if (c_steiner->parsed()) {
      Shape k = kakeya::load_shape(shape_path);
      const auto* poly = std::get_if<kakeya::VPolytope3>(&k);
      if (!poly) throw kakeya::InvalidParameter("steiner needs a vpolytope3");
      kakeya::SteinerCoeffs3 c = kakeya::steiner_coefficients(*poly);
      res.body = json{{"v", c.v}, {"s", c.s}, {"m", c.m}, {"b", c.b}};
      out = &out_steiner;
    } else if (c_verify->parsed()) {
      std::uint64_t seed = effective_seed(seed_flag, kakeya::kDefaultSeed);
      auto n = [&](int dflt) { return trials > 0 ? trials : dflt; };
      if (suite == "interpolation-fit")
        rep = kakeya::check_interpolation_fit(n(1000), seed, tol);
      else if (suite == "halfway-area2")
        rep = kakeya::check_halfway_gain(n(500), seed, 0, 2, tol);
      else if (suite == "halfway-vol3")
        rep = kakeya::check_halfway_gain(n(500), seed, 0, 3, tol);
      else if (suite == "halfway-surf3")
        rep = kakeya::check_halfway_gain(n(500), seed, 1, 3, tol);
      else if (suite == "bm-area2")
        rep = kakeya::check_bm_concavity(n(500), seed, 0, 2, tol);
      else if (suite == "bm-vol3")
        rep = kakeya::check_bm_concavity(n(500), seed, 0, 3, tol);
      else if (suite == "bm-surf3")
        rep = kakeya::check_bm_concavity(n(500), seed, 1, 3, tol);
      else if (suite == "perimeter-additivity")
        rep = kakeya::check_perimeter_additivity(n(1000), seed, tol);
      else if (suite == "phi-algebra")
        rep = kakeya::check_phi_algebra(n(1000), seed, tol);
      else if (suite == "mu-average-fit")
        rep = kakeya::check_mu_average_fit(n(100), seed, tol);
      else if (suite == "main-theorem")
        rep = kakeya::check_main_theorem_random(n(1000), seed, samples, tol);
      else
        throw kakeya::InvalidParameter("unknown suite: " + suite);
      res.body = report_json(rep);
      res.exit_code = rep.failures == 0 ? kExitOk : kExitAssertion;
      report = &rep;
      out = &out_verify;
    } else if (c_repro->parsed()) {
      kakeya::ScenarioResult sc = kakeya::reproduce(scenario, tol);
      rep = sc.report;
      res.body = report_json(rep);
      res.figures = std::move(sc.figures);
      res.exit_code = rep.failures == 0 ? kExitOk : kExitAssertion;
      report = &rep;
      out = &out_repro;
    }

    emit(res, *out, report);
    return res.exit_code;
  } catch (const kakeya::ParseError& e) {
    std::cerr << "input error at byte " << e.byte_offset() << ": " << e.what()
              << "\n";
    return kExitUsage;
  } catch (const kakeya::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
