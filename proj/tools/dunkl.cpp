#include "commands.hpp"

#include "dunkl/setup_file.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

using namespace dunkl;
using namespace dunkl::cli;

namespace {

struct Common {
  std::string setup;
  std::uint64_t seed = 0;
  std::string out = ".";
  double tol = 0.0;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* tol_opt = nullptr;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--setup", c.setup, "setup file (key = value)")->required()->check(CLI::ExistingFile);
  c.seed_opt = sub->add_option("--seed", c.seed, "RNG seed (default: the setup file's seed)");
  sub->add_option("--out", c.out, "output directory")->capture_default_str();
  c.tol_opt = sub->add_option("--tol", c.tol, "override the subcommand's main tolerance");
}

RunConfig make_config(const std::string& name, const Common& c, Json params) {
  RunConfig cfg;
  cfg.subcommand = name;
  cfg.setup_path = std::filesystem::path(c.setup).filename().string();
  cfg.setup = load_setup_file(c.setup);
  cfg.seed = c.seed_opt->count() ? c.seed : cfg.setup.seed;
  cfg.out = c.out;
  if (c.tol_opt->count()) cfg.tol = c.tol;
  cfg.params = std::move(params);
  return cfg;
}

int finish(const RunConfig& cfg, const Report& report, std::chrono::steady_clock::time_point start) {
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << write_report(cfg, report, secs);
  if (report.passed()) return 0;
  for (const auto& a : report.assertions)
    if (!a.pass) std::cerr << "assertion failed: " << a.name << " = " << format_number(a.value) << " > "
                           << format_number(a.bound) << '\n';
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dunkl transform and Riesz transform verification tool"};
  app.require_subcommand(1);

  Common common;

  TransformParams tp;
  auto* transform = app.add_subcommand("transform", "Plancherel, inversion and T_j multiplier defects");
  add_common(transform, common);
  transform->add_option("--corpus", tp.corpus, "deterministic | standard")->capture_default_str();
  transform->add_option("--function", tp.function, "corpus member written to transform_samples.csv")
      ->capture_default_str();

  TranslateParams trp;
  auto* translate = app.add_subcommand("translate", "Dunkl translation: route agreement, identities, contraction");
  add_common(translate, common);
  translate->add_option("--points", trp.points, "random x for route agreement")->capture_default_str();
  translate->add_option("--contraction-samples", trp.contraction_samples)->capture_default_str();
  translate->add_option("--profile", trp.profile, "gaussian | polynomial_gaussian | rational_gaussian")
      ->capture_default_str();
  translate->add_option("--width", trp.width, "gaussian profile width")->capture_default_str();
  translate->add_option("--x", trp.x, "translation point for translate_samples.csv")->expected(1, 8);

  RieszParams rp;
  auto* riesz = app.add_subcommand("riesz", "Riesz transform by multiplier, truncated integral and kernel");
  add_common(riesz, common);
  riesz->add_option("--route", rp.route, "multiplier | truncated | kernel | all")
      ->check(CLI::IsMember({"multiplier", "truncated", "kernel", "all"}))
      ->capture_default_str();
  riesz->add_option("--pairs", rp.pairs, "number of (x, f) configurations")->capture_default_str();

  HormanderParams hp;
  auto* hormander = app.add_subcommand("hormander-check", "Hoermander integral estimates and their drift");
  add_common(hormander, common);
  hormander->add_option("--pairs", hp.pairs, "number of (y, y0) pairs")->capture_default_str();

  CzParams cp;
  auto* cz = app.add_subcommand("cz-decompose", "Calderon-Zygmund decomposition and doubling scan");
  add_common(cz, common);
  cz->add_option("--functions", cp.functions)->capture_default_str();
  cz->add_option("--levels", cp.levels, "dyadic levels (0: by dimension)")->capture_default_str();
  cz->add_option("--lambda", cp.lambda, "fixed level (0: spread per function)")->capture_default_str();
  cz->add_option("--doubling-samples", cp.doubling_samples)->capture_default_str();

  LpScanParams lp;
  auto* lpscan = app.add_subcommand("lp-scan", "||R_j f||_p / ||f||_p over a corpus");
  add_common(lpscan, common);
  lpscan->add_option("--j", lp.j, "coordinate index")->capture_default_str();
  lpscan->add_option("--p", lp.p, "exponents")->capture_default_str();
  lpscan->add_option("--corpus", lp.corpus, "deterministic | standard")->capture_default_str();

  InequalityParams ip;
  auto* ineq = app.add_subcommand("inequalities", "Riesz and Sobolev inequalities, potential identity");
  add_common(ineq, common);
  ineq->add_option("--p", ip.p, "exponents")->capture_default_str();
  ineq->add_flag("!--no-identity", ip.identity, "skip the I^1 identity check");

  PolyParams pp;
  auto* poly = app.add_subcommand("poly-check", "Commutativity of Dunkl operators on random polynomials");
  add_common(poly, common);
  poly->add_option("--trials", pp.trials)->capture_default_str();
  poly->add_option("--degree", pp.degree)->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "Every subcommand with default parameters");
  add_common(selftest, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    const auto active = app.get_subcommands();
    std::cerr << (active.empty() ? app.help() : active.front()->help());
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (*transform) {
      auto cfg = make_config("transform", common, {{"corpus", tp.corpus}, {"function", tp.function}});
      return finish(cfg, run_transform(cfg, tp), start);
    }
    if (*translate) {
      auto cfg = make_config("translate", common,
                             {{"points", trp.points}, {"contraction_samples", trp.contraction_samples},
                              {"profile", trp.profile}, {"width", trp.width}, {"x", trp.x}});
      return finish(cfg, run_translate(cfg, trp), start);
    }
    if (*riesz) {
      auto cfg = make_config("riesz", common, {{"route", rp.route}, {"pairs", rp.pairs}});
      return finish(cfg, run_riesz(cfg, rp), start);
    }
    if (*hormander) {
      auto cfg = make_config("hormander-check", common, {{"pairs", hp.pairs}});
      return finish(cfg, run_hormander(cfg, hp), start);
    }
    if (*cz) {
      auto cfg = make_config("cz-decompose", common,
                             {{"functions", cp.functions}, {"levels", cp.levels}, {"lambda", cp.lambda},
                              {"doubling_samples", cp.doubling_samples}});
      return finish(cfg, run_cz(cfg, cp), start);
    }
    if (*lpscan) {
      auto cfg = make_config("lp-scan", common, {{"j", lp.j}, {"p", lp.p}, {"corpus", lp.corpus}});
      return finish(cfg, run_lp_scan(cfg, lp), start);
    }
    if (*ineq) {
      auto cfg = make_config("inequalities", common, {{"p", ip.p}, {"identity", ip.identity}});
      return finish(cfg, run_inequalities(cfg, ip), start);
    }
    if (*poly) {
      auto cfg = make_config("poly-check", common, {{"trials", pp.trials}, {"degree", pp.degree}});
      return finish(cfg, run_poly_check(cfg, pp), start);
    }
    if (*selftest) {
      const auto cfg = make_config("selftest", common, Json::object());
      const int n = cfg.setup.setup().dimension();
      Json summary = Json::object();
      bool ok = true;
      auto run = [&](const std::string& name, const std::function<Report()>& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        const Report rep = fn();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << write_report(cfg, rep, secs);
        Json failed = Json::array();
        for (const auto& a : rep.assertions)
          if (!a.pass) failed.push_back(a.name);
        summary[name] = {{"pass", rep.passed()}, {"failed", failed}};
        ok = ok && rep.passed();
      };
      run("transform", [&] { return run_transform(cfg, TransformParams{}); });
      run("translate", [&] { return run_translate(cfg, TranslateParams{}); });
      if (n <= 2) {
        run("riesz", [&] { return run_riesz(cfg, RieszParams{}); });
        run("hormander-check", [&] { return run_hormander(cfg, HormanderParams{}); });
      }
      run("cz-decompose", [&] { return run_cz(cfg, CzParams{}); });
      run("lp-scan", [&] { return run_lp_scan(cfg, LpScanParams{}); });
      run("inequalities", [&] { return run_inequalities(cfg, InequalityParams{}); });
      run("poly-check", [&] { return run_poly_check(cfg, PolyParams{}); });

      Json doc;
      doc["config"] = cfg.to_json();
      doc["commands"] = summary;
      doc["pass"] = ok;
      std::filesystem::create_directories(cfg.out);
      std::ofstream(std::filesystem::path(cfg.out) / "selftest.json") << doc.dump(2) << '\n';
      if (!ok)
        for (const auto& [name, entry] : summary.items())
          for (const auto& f : entry["failed"]) std::cerr << "assertion failed: " << name << ": " << f.get<std::string>() << '\n';
      std::cout << "selftest " << (ok ? "PASS" : "FAIL") << '\n';
      return ok ? 0 : 1;
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
