#include "commands.hpp"

#include "dunkl/corpus.hpp"
#include "dunkl/czd.hpp"
#include "dunkl/harness.hpp"
#include "dunkl/polycalc.hpp"
#include "dunkl/riesz.hpp"
#include "dunkl/translate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

namespace dunkl::cli {

namespace {

GridPtr grid_of(const RunConfig& config) { return make_grid(config.setup.setup(), config.setup.grid); }

std::vector<TestFunction> corpus_of(const std::string& kind, int dimension, std::uint64_t seed) {
  if (kind == "deterministic") return deterministic_corpus(dimension);
  if (kind == "standard") return standard_corpus(dimension, seed);
  throw DomainError("unknown corpus '" + kind + "' (deterministic | standard)");
}

std::string p_key(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", p);
  return buf;
}

Point random_point(std::mt19937_64& rng, int n, double r) {
  Point x(n);
  for (double& v : x) v = -r + 2.0 * r * unit_uniform(rng());
  return x;
}

double dimension_D(const ReflectionSetup& s) { return 2.0 * compute_constants(s).gamma_k + s.dimension(); }

}  // namespace

Report run_transform(const RunConfig& config, const TransformParams& params) {
  const auto g = grid_of(config);
  const double tol = config.tolerance(1e-6);
  Report r{"transform"};
  r.table = Table({"function", "plancherel", "inversion", "multiplier_identity"});
  double worst_p = 0.0, worst_i = 0.0, worst_m = 0.0;
  for (const auto& tf : corpus_of(params.corpus, g->dimension(), config.seed)) {
    const auto f = GridFunction::sample(g, tf.fn);
    const double p = plancherel_defect(f);
    const double inv = relative_l2(inverse_dunkl_transform(dunkl_transform(f)), f);
    double m = 0.0;
    for (int j = 0; j < g->dimension(); ++j) m = std::max(m, multiplier_identity_defect(f, j));
    r.table.row().cell(tf.name).cell(p).cell(inv).cell(m);
    worst_p = std::max(worst_p, p);
    worst_i = std::max(worst_i, inv);
    worst_m = std::max(worst_m, m);
  }
  const auto all = deterministic_corpus(g->dimension());
  const auto it = std::find_if(all.begin(), all.end(), [&](const TestFunction& t) { return t.name == params.function; });
  if (it == all.end()) throw DomainError("unknown function '" + params.function + "'");
  const auto spectrum = dunkl_transform(GridFunction::sample(g, it->fn));
  std::vector<std::string> header;
  for (int j = 0; j < g->dimension(); ++j) header.push_back("xi" + std::to_string(j));
  header.insert(header.end(), {"re", "im"});
  Table samples(header);
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    samples.row();
    for (double c : g->node(i)) samples.cell(c);
    samples.cell(spectrum[i].real()).cell(spectrum[i].imag());
  }
  r.extra.emplace_back("samples", std::move(samples));
  r.json = {{"sampled_function", params.function}, {"max_plancherel", worst_p}, {"max_inversion", worst_i}, {"max_multiplier_identity", worst_m}};
  r.check("plancherel defect", worst_p, tol);
  r.check("inversion defect", worst_i, tol);
  r.check("F(T_j f) = i xi_j F f defect", worst_m, tol);
  return r;
}

Report run_translate(const RunConfig& config, const TranslateParams& params) {
  const ReflectionSetup s = config.setup.setup();
  const int n = s.dimension();
  const auto g = grid_of(config);
  const double tol = config.tolerance(1e-6);
  std::mt19937_64 rng(config.seed);
  Report r{"translate"};
  r.table = Table({"check", "profile", "x", "value"});

  double agree = 0.0, comm = 0.0, dual = 0.0, contraction = 0.0;
  const auto gauss = GridFunction::sample(g, [](const Point& y) { return cplx(std::exp(-0.5 * dot(y, y))); });
  const auto tilted = GridFunction::sample(g, [](const Point& y) { return cplx(std::exp(-dot(y, y) + 0.5 * y[0])); });
  const auto weighted =
      GridFunction::sample(g, [](const Point& y) { return cplx(std::exp(-0.5 * dot(y, y)) * (1.0 + y[0])); });
  for (int t = 0; t < params.points; ++t) {
    const Point x = random_point(rng, n, 1.5);
    for (const auto& prof : radial_corpus()) {
      const auto f = GridFunction::sample(g, [&](const Point& y) { return prof.on(y); });
      const double d = relative_l2(translate_spectral(f, x), translate_radial_grid(g, x, prof, 48));
      r.table.row().cell("spectral_vs_radial").cell(prof.name).cell(format_point(x)).cell(d);
      agree = std::max(agree, d);
    }
    const double c = check_op_commutation(gauss, x);
    const double du = check_duality(weighted, tilted, x);
    r.table.row().cell("commutation").cell("gaussian").cell(format_point(x)).cell(c);
    r.table.row().cell("duality").cell("gaussian").cell(format_point(x)).cell(du);
    comm = std::max(comm, c);
    dual = std::max(dual, du);
  }

  RadialProfile chosen;
  if (params.profile == "gaussian") chosen = gaussian_profile(params.width);
  else if (params.profile == "polynomial_gaussian") chosen = polynomial_gaussian_profile();
  else if (params.profile == "rational_gaussian") chosen = rational_gaussian_profile();
  else throw DomainError("unknown profile '" + params.profile + "'");
  Point xs = params.x;
  if (xs.empty()) {
    xs.assign(n, 0.0);
    for (int j = 0; j < n; ++j) xs[j] = j % 2 ? -0.4 : 0.8;
  }
  if (static_cast<int>(xs.size()) != n) throw DomainError("--x needs " + std::to_string(n) + " coordinates");
  {
    const auto f = GridFunction::sample(g, [&](const Point& y) { return chosen.on(y); });
    const auto spectral = translate_spectral(f, xs);
    const auto radial = translate_radial_grid(g, xs, chosen, 48);
    std::vector<std::string> header;
    for (int j = 0; j < n; ++j) header.push_back("y" + std::to_string(j));
    header.insert(header.end(), {"spectral_re", "spectral_im", "radial_re", "radial_im", "discrepancy"});
    Table samples(header);
    for (std::size_t i = 0; i < g->size(); ++i) {
      samples.row();
      for (double c : g->node(i)) samples.cell(c);
      samples.cell(spectral[i].real()).cell(spectral[i].imag()).cell(radial[i].real()).cell(radial[i].imag()).cell(
          std::abs(spectral[i] - radial[i]));
    }
    r.extra.emplace_back("samples", std::move(samples));
    r.json["samples"] = {{"profile", chosen.name}, {"x", xs}, {"relative_l2", relative_l2(spectral, radial)}};
  }

  std::vector<std::pair<Point, Point>> pairs;
  for (int t = 0; t < 50; ++t) pairs.emplace_back(random_point(rng, n, 2.0), random_point(rng, n, 2.0));
  const double sym = check_symmetry(s, gaussian_profile(), pairs);
  r.table.row().cell("symmetry").cell("gaussian").cell("").cell(sym);

  const auto cg = make_grid(s, GridSpec{10.0, n == 1 ? 96 : 40});
  const auto corpus = radial_corpus();
  const std::vector<double> ps{1.0, 1.5, 2.0};
  for (int t = 0; t < params.contraction_samples; ++t) {
    const Point x = random_point(rng, n, 2.5);
    const auto& prof = corpus[t % corpus.size()];
    const auto ratios = contraction_ratios(cg, x, prof, ps, 32);
    for (std::size_t k = 0; k < ps.size(); ++k) {
      r.table.row().cell("contraction_p" + p_key(ps[k])).cell(prof.name).cell(format_point(x)).cell(ratios[k]);
      contraction = std::max(contraction, ratios[k]);
    }
  }
  r.json["max_spectral_vs_radial"] = agree;
  r.json["max_commutation"] = comm;
  r.json["max_duality"] = dual;
  r.json["symmetry"] = sym;
  r.json["max_contraction_ratio"] = contraction;
  r.check("spectral vs radial translation", agree, tol);
  r.check("T_j tau_x = tau_x T_j defect", comm, 1e-5);
  r.check("duality defect", dual, 1e-5);
  r.check("tau_x f(y) = tau_y f(x) defect", sym, 1e-5);
  r.check("L^p contraction ratio (p = 1, 1.5, 2)", contraction, 1.0 + 1e-6);
  return r;
}

Report run_riesz(const RunConfig& config, const RieszParams& params) {
  const auto g = grid_of(config);
  const bool all = params.route == "all";
  const bool trunc = all || params.route == "truncated";
  const bool kern = all || params.route == "kernel";
  if (!all && !trunc && !kern && params.route != "multiplier")
    throw DomainError("unknown route '" + params.route + "' (multiplier | truncated | kernel | all)");
  const double tol = config.tolerance(1e-4);
  const KernelField field(g->setup());
  Report r{"riesz"};
  r.table = Table({"index", "j", "width", "x", "multiplier_re", "multiplier_im", "truncated_re", "truncated_im",
                   "kernel_re", "kernel_im", "max_defect"});
  double worst = 0.0;
  const auto configs = separated_route_configs(g, params.pairs, config.seed);
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const auto row = riesz_routes(g, field, configs[i], trunc, kern);
    r.table.row()
        .cell(i)
        .cell(row.config.j)
        .cell(row.config.width)
        .cell(format_point(row.config.x))
        .cell(row.multiplier.real())
        .cell(row.multiplier.imag())
        .cell(row.truncated.real())
        .cell(row.truncated.imag())
        .cell(row.kernel.real())
        .cell(row.kernel.imag())
        .cell(row.max_defect);
    worst = std::max(worst, row.max_defect);
  }
  r.json = {{"route", params.route},
            {"configurations", configs.size()},
            {"max_defect", worst},
            {"sandwich_violations", field.sandwich_violations()}};
  if (trunc || kern) r.check("route agreement (relative)", worst, tol);
  if (kern) r.check("A(x,y,eta) sandwich violations", static_cast<double>(field.sandwich_violations()), 0.0);
  return r;
}

Report run_hormander(const RunConfig& config, const HormanderParams& params) {
  const ReflectionSetup s = config.setup.setup();
  const double tol = config.tolerance(0.05);
  const KernelField field(s, KernelOptions{12, 4});
  Report r{"hormander"};
  r.table = Table({"index", "j", "y", "y0", "estimate", "refined", "drift"});
  double worst = 0.0, largest = 0.0;
  bool finite = true;
  Json values = Json::array(), tails = Json::array(), pair_list = Json::array();
  const auto pairs = hormander_pairs(s, params.pairs, config.seed);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const int j = static_cast<int>(i % s.dimension());
    const auto row = hormander_drift(field, j, pairs[i].first, pairs[i].second);
    r.table.row().cell(i).cell(j).cell(format_point(row.y)).cell(format_point(row.y0)).cell(row.base).cell(
        row.refined).cell(row.drift);
    pair_list.push_back({{"j", j}, {"y", row.y}, {"y0", row.y0}});
    values.push_back(row.refined);
    tails.push_back(std::abs(row.refined - row.base));
    finite = finite && std::isfinite(row.base) && std::isfinite(row.refined);
    worst = std::max(worst, row.drift);
    largest = std::max(largest, row.refined);
  }
  r.json = {{"pairs", pair_list},
            {"values", values},
            {"sup", largest},
            {"tail_bounds", tails},
            {"max_drift", worst},
            {"nodes_checked", field.nodes_checked()},
            {"sandwich_violations", field.sandwich_violations()}};
  r.check("estimates finite", finite ? 0.0 : 1.0, 0.0);
  r.check("drift under doubled radius and resolution", worst, tol);
  r.check("A(x,y,eta) sandwich violations", static_cast<double>(field.sandwich_violations()), 0.0);
  return r;
}

Report run_cz(const RunConfig& config, const CzParams& params) {
  const ReflectionSetup s = config.setup.setup();
  const int n = s.dimension();
  // A parent cell holds at most 2^D times its child's mass, so (i) <= 2^D and
  // (iv) <= 2^(D+1); 64 covers the remaining setups.
  const double budget = config.tolerance(std::max(64.0, std::pow(2.0, dimension_D(s) + 1.0)));
  const int levels = params.levels > 0 ? params.levels : (n == 1 ? 10 : n == 2 ? 6 : 3);
  const auto cells = make_cell_grid(s, config.setup.grid.radius, levels);
  double total_mass = 0.0;
  for (std::size_t i = 0; i < cells->size(); ++i) total_mass += cells->mass(i);

  Report r{"cz"};
  r.table = Table({"function", "lambda", "balls", "reconstruction", "good_bound", "supports_in_balls", "mean_zero",
                   "local_bound", "total_bound"});
  const auto corpus = random_corpus(n, config.seed, params.functions);
  double recon = 0.0, c1 = 0.0, c3 = 0.0, c4 = 0.0, c5 = 0.0;
  bool supports = true;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto f = sample_cells(cells, corpus[i].fn);
    double lambda = params.lambda;
    if (lambda <= 0.0) {
      const double lo = f.l1_norm() / total_mass, hi = f.sup_norm();
      const double t = (static_cast<double>(i) + 0.5) / static_cast<double>(corpus.size());
      lambda = lo * std::pow(hi / lo, t);
    }
    const auto cz = cz_decompose(f, lambda);
    const auto p = verify_decomposition(cz, f);
    r.table.row()
        .cell(corpus[i].name)
        .cell(lambda)
        .cell(p.balls)
        .cell(p.reconstruction)
        .cell(p.good_bound)
        .cell(p.supports_in_balls ? "1" : "0")
        .cell(p.mean_zero)
        .cell(p.local_bound)
        .cell(p.total_bound);
    recon = std::max(recon, p.reconstruction);
    c1 = std::max(c1, p.good_bound);
    c3 = std::max(c3, p.mean_zero);
    c4 = std::max(c4, p.local_bound);
    c5 = std::max(c5, p.total_bound);
    supports = supports && p.supports_in_balls;
  }

  const auto coarse = doubling_scan(s, params.doubling_samples, config.seed, 16);
  const auto fine = doubling_scan(s, params.doubling_samples, config.seed, 32);
  const double drift = std::abs(fine.sup - coarse.sup) / fine.sup;
  const double origin = doubling_ratio(s, Point(n, 0.0), 1.0);
  const double origin_exact = std::pow(2.0, dimension_D(s));

  const auto g = grid_of(config);
  const auto gauss = GridFunction::sample(g, deterministic_corpus(n)[0].fn);
  std::vector<double> lambdas;
  for (int i = 0; i <= 12; ++i) lambdas.push_back(0.01 * std::pow(1000.0, i / 12.0));
  Json weak = Json::array();
  double weak_sup = 0.0;
  for (int j = 0; j < n; ++j)
    for (const auto& w : weak11_probe(gauss, j, lambdas)) {
      weak.push_back({{"j", j}, {"lambda", w.lambda}, {"level_set_mass", w.level_set_mass}, {"ratio", w.ratio}});
      weak_sup = std::max(weak_sup, w.ratio);
    }

  r.json = {{"levels", levels},
            {"budget", budget},
            {"constants",
             {{"reconstruction", recon},
              {"i_good_bound", c1},
              {"ii_supports_in_balls", supports},
              {"iii_mean_zero", c3},
              {"iv_local_bound", c4},
              {"v_total_bound", c5}}},
            {"doubling",
             {{"samples", params.doubling_samples},
              {"sup", fine.sup},
              {"sup_coarse", coarse.sup},
              {"drift", drift},
              {"argmax_x", fine.argmax_x},
              {"argmax_r", fine.argmax_r},
              {"origin_ratio", origin}}},
            {"weak11", {{"sup_ratio", weak_sup}, {"rows", weak}}}};
  r.check("reconstruction f = h + sum b_j", recon, 1e-12);
  r.check("(i) |h| / lambda", c1, budget);
  r.check("(ii) supp b_j in B_j", supports ? 0.0 : 1.0, 0.0);
  r.check("(iii) mean zero (relative)", c3, 1e-12);
  r.check("(iv) ||b_j||_1 / (lambda m_k(B_j))", c4, budget);
  r.check("(v) lambda sum m_k(B_j) / ||f||_1", c5, budget);
  r.check("doubling sup drift under refinement", drift, 0.05);
  r.check("doubling ratio at the origin vs 2^(2 gamma_k + N)", std::abs(origin - origin_exact) / origin_exact, 1e-12);
  if (s.is_classical()) r.notes.push_back("k = 0: doubling ratio equals 2^N");
  return r;
}

Report run_lp_scan(const RunConfig& config, const LpScanParams& params) {
  const auto g = grid_of(config);
  const auto report = lp_ratio_scan(g, params.j, corpus_of(params.corpus, g->dimension(), config.seed), params.p);
  Report r{"lp_scan"};
  r.table = Table({"function", "p", "ratio"});
  for (const auto& row : report.rows) r.table.row().cell(row.function).cell(row.p).cell(row.ratio);
  Json sup = Json::object();
  bool finite = true;
  for (std::size_t k = 0; k < params.p.size(); ++k) {
    sup[p_key(params.p[k])] = report.sup_per_p[k];
    finite = finite && std::isfinite(report.sup_per_p[k]);
    if (params.p[k] == 2.0) r.check("sup ratio at p = 2", report.sup_per_p[k], config.tolerance(1.0 + 1e-6));
  }
  r.check("all sup ratios finite", finite ? 0.0 : 1.0, 0.0);
  r.json = {{"j", params.j}, {"corpus", report.corpus}, {"sup_ratio_per_p", sup}};
  return r;
}

Report run_inequalities(const RunConfig& config, const InequalityParams& params) {
  const ReflectionSetup s = config.setup.setup();
  const int n = s.dimension();
  const auto g = grid_of(config);
  const double tol = config.tolerance(1e-5);
  const auto corpus = deterministic_corpus(n);
  Report r{"inequalities"};
  r.table = Table({"inequality", "function", "p", "q", "r", "s", "ratio", "factorization"});

  Json riesz_sup = Json::object();
  double factor = 0.0;
  for (double p : params.p) {
    double sup = 0.0;
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b)
        for (const auto& row : riesz_inequality_check(g, a, b, corpus, p)) {
          if (row.skipped) {
            r.notes.push_back("skipped " + row.function + ": Delta_k f negligible");
            continue;
          }
          r.table.row().cell("riesz").cell(row.function).cell(p).cell("").cell(a).cell(b).cell(row.ratio).cell(
              row.factorization);
          sup = std::max(sup, row.ratio);
          factor = std::max(factor, row.factorization);
        }
    riesz_sup[p_key(p)] = sup;
  }
  r.check("T_r T_s f = R_r R_s (-Delta_k) f spectral defect", factor, tol);
  Json results = {{"riesz", {{"sup_ratio_per_p", riesz_sup}, {"max_factorization", factor}}}};

  const double D = dimension_D(s);
  if (D > 2.0) {
    Json sob_sup = Json::object();
    const auto dg = make_grid(s, n == 1 ? GridSpec{24.0, 192} : GridSpec{20.0, 128});
    double drift = 0.0;
    for (double p : params.p) {
      if (!(p < D)) continue;
      double sup = 0.0;
      for (const auto& row : sobolev_inequality_check(g, corpus, p)) {
        r.table.row().cell("sobolev").cell(row.function).cell(p).cell(row.q).cell("").cell("").cell(row.ratio).cell(
            "");
        sup = std::max(sup, row.ratio);
      }
      sob_sup[p_key(p)] = sup;
      drift = std::max(drift, sobolev_dilation_drift(dg, corpus[0], p, {0.5, 1.0, 2.0}));
    }
    results["sobolev"] = {{"sup_ratio_per_p", sob_sup}, {"dilation_drift", drift}};
    r.check("Sobolev dilation drift", drift, 0.05);
  } else {
    r.notes.push_back("Sobolev window empty: 2 gamma_k + N <= 2");
  }

  if (params.identity && n <= 2) {
    if (D > 1.0) {
      PotentialOptions opts;
      GridPtr ig = g;
      std::vector<Point> points;
      if (n == 1) {
        opts.outer_radius = 40.0;
        points = {{0.0}, {0.7}, {-1.3}, {2.0}};
      } else {
        opts.outer_radius = 25.0;
        opts.angular_points = 8;
        opts.radial_points = 8;
        ig = make_grid(s, GridSpec{12.0, 96});
        points = {{0.0, 0.0}, {0.9, -0.5}};
      }
      const TestFunction f{"gaussian_shifted", [](const Point& x) {
                             return cplx(std::exp(-0.5 * ((x[0] - 0.3) * (x[0] - 0.3) +
                                                          (x.size() > 1 ? x[1] * x[1] : 0.0))));
                           }};
      const auto id = potential_identity_check(ig, f, points, opts);
      results["identity"] = {{"defect", id.defect}, {"points", id.points}};
      r.check("f = I^1(sum_j R_j T_j f) defect", id.defect, 1e-3);
    } else {
      r.notes.push_back("identity check needs 2 gamma_k + N > 1");
    }
  }
  r.json = results;
  return r;
}

Report run_poly_check(const RunConfig& config, const PolyParams& params) {
  const ReflectionSetup s = config.setup.setup();
  const auto rep = run_commutativity_suite(s, params.trials, params.degree, config.seed);
  Report r{"poly_check"};
  r.json = {{"trials", rep.trials}, {"failures", rep.failures}, {"degree_failures", rep.degree_failures}};
  r.check("T_i T_j = T_j T_i failures", rep.failures, 0.0);
  r.check("degree-lowering failures", rep.degree_failures, 0.0);
  return r;
}

}  // namespace dunkl::cli
