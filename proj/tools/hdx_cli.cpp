// Command-line front end: one subcommand per experiment, JSON reports, plain-text artifacts.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hdx/hdx.hpp"

namespace fs = std::filesystem;
using namespace hdx;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path.empty()) throw UsageError("missing input file argument");
  if (!fs::exists(path)) throw UsageError("input file not found: " + path);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ComplexPtr load(const std::string& path) { return share(parse_complex(read_file(path))); }

void emit(const Json& j, const std::string& out) {
  std::string text = dump_report(j);
  if (out.empty()) {
    std::cout << text;
  } else {
    save_text(out, text);
  }
}

void write_or_print(const std::string& text, const std::string& out) {
  if (out.empty()) std::cout << text;
  else save_text(out, text);
}

/// Cover file paths are resolved relative to the cover file's directory.
CoverMap load_cover(const std::string& path) {
  CoverFile cf = parse_cover_map(read_file(path));
  fs::path dir = fs::path(path).parent_path();
  auto resolve = [&](const std::string& ref) { return fs::path(ref).is_absolute() ? ref : (dir / ref).string(); };
  if (cf.base_ref.empty() || cf.total_ref.empty()) throw UsageError("cover file must name `base` and `total` complexes");
  return validate_cover(load(resolve(cf.total_ref)), load(resolve(cf.base_ref)), cf.rho);
}

std::string face_text(const Face& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? " " : "") + std::to_string(f[i]);
  return s;
}

std::string write_global(const GlobalFunction& G) {
  std::ostringstream os;
  os << "global " << G.values.size() << '\n';
  for (std::size_t v = 0; v < G.values.size(); ++v) os << v << ' ' << G.values[v] << '\n';
  return os.str();
}

std::string write_lists(const LocalLists& LL, const SimplicialComplex& X) {
  std::ostringstream os;
  os << "ell " << LL.ell << '\n';
  for (int li = 0; li < 3; ++li) {
    for (std::size_t j = 0; j < LL.lists[li].size(); ++j) {
      const FaceList& fl = LL.lists[li][j];
      os << "level " << LL.levels[li] << " face " << face_text(X.face(LL.levels[li], static_cast<int>(j))) << " :";
      for (std::size_t m = 0; m < fl.funcs.size(); ++m) {
        os << (m ? " |" : "");
        for (int x : fl.funcs[m]) os << ' ' << x;
      }
      if (!fl.good) os << " # bad";
      os << '\n';
    }
  }
  return os.str();
}

/// Per edge of F X: the two endpoints, then π_{t,a} and π_{t,b} in one-line notation (or `-` when undefined).
std::string write_matching(const LocalLists& LL, const FacesComplex& FX, double gamma) {
  std::ostringstream os;
  const SimplicialComplex& X = *FX.base;
  os << "ell " << LL.ell << '\n';
  for (const Face& e : FX.complex->faces(1)) {
    int t = X.ordinal(FX.block(e[0]).unite(FX.block(e[1])));
    auto pa = list_permutation(LL, 0, e[0], 1, t, X, gamma);
    auto pb = list_permutation(LL, 0, e[1], 1, t, X, gamma);
    os << e[0] << ' ' << e[1] << " : " << (pa ? pa->str() : "-") << " : " << (pb ? pb->str() : "-") << '\n';
  }
  return os.str();
}

AgreementDistribution parse_test(const std::string& kind, int k, const std::string& test_file) {
  std::string name = kind;
  int kk = k;
  if (kind == "file") {
    auto kv = parse_config(read_file(test_file));
    if (!kv.count("test")) throw UsageError("test file needs a `test` key");
    name = kv["test"];
    if (kv.count("k")) kk = std::stoi(kv["k"]);
  }
  if (name == "v") return v_test(kk);
  if (name == "z") return z_test(kk);
  if (name == "down-up" || name == "down_up") return down_up_test(kk);
  throw UsageError("unknown test `" + name + "`");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hdx: complexes, covers, cochains and agreement tests"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  std::uint64_t budget = 10'000'000;
  std::string out;
  auto common = [&](CLI::App* c) {
    c->add_option("--seed", seed, "64-bit seed");
    c->add_option("--budget", budget, "enumeration budget");
    c->add_option("--out", out, "output path (stdout when omitted)");
  };

  // build
  auto* build = app.add_subcommand("build", "generate a host complex");
  std::string btype = "complete";
  int bn = 6, bk = 2, br = 2, bd = 3, bq = 2;
  build->add_option("--type", btype, "complete|circulant|cycle|building")->check(CLI::IsMember({"complete", "circulant", "cycle", "building"}));
  build->add_option("--n", bn, "vertex count");
  build->add_option("--k", bk, "dimension of the complete complex");
  build->add_option("--r", br, "circulant radius");
  build->add_option("--d", bd, "building ambient dimension");
  build->add_option("--q", bq, "building field size");
  common(build);

  // spectra
  auto* spectra = app.add_subcommand("spectra", "spectral report of a walk");
  std::string complex_path, walk = "skeleton", mode = "two";
  int sk = 0, sl = 1;
  bool links = false;
  spectra->add_option("complex,--complex", complex_path, "complex file")->required();
  spectra->add_option("--walk", walk)->check(CLI::IsMember({"skeleton", "containment", "swap"}));
  spectra->add_option("--k", sk);
  spectra->add_option("--l", sl);
  spectra->add_option("--mode", mode)->check(CLI::IsMember({"one", "two"}));
  spectra->add_flag("--links", links, "also report the maximum over all links");
  common(spectra);

  // faces / flags
  auto* faces = app.add_subcommand("faces", "faces complex F^{d1}X");
  int fd1 = 0;
  faces->add_option("complex,--complex", complex_path)->required();
  faces->add_option("--d1", fd1)->required();
  common(faces);
  auto* flags = app.add_subcommand("flags", "flag complex GX");
  flags->add_option("complex,--complex", complex_path)->required();
  common(flags);

  // cover
  auto* cover = app.add_subcommand("cover", "validate a cover or build the cover induced by a cocycle");
  std::string cover_path, cochain_path, emit_cochain, out_total;
  cover->add_option("--cover", cover_path, "cover file to validate");
  cover->add_option("--complex", complex_path, "base complex (with --cochain)");
  cover->add_option("--cochain", cochain_path, "cocycle file (with --complex)");
  cover->add_option("--emit-cochain", emit_cochain, "write the induced cochain of --cover");
  cover->add_option("--out-total", out_total, "write the induced total complex; --out gets the cover file");
  common(cover);

  // cochain
  auto* cochain = app.add_subcommand("cochain", "coboundary weight and nearest cocycle");
  int random_ell = 0;
  bool as_coboundary = false;
  std::string strategy = "local_search", emit_path;
  cochain->add_option("complex,--complex", complex_path)->required();
  cochain->add_option("--cochain", cochain_path);
  cochain->add_option("--random", random_ell, "draw a random cochain with this ℓ");
  cochain->add_flag("--coboundary", as_coboundary, "with --random, draw a random coboundary");
  cochain->add_option("--strategy", strategy)->check(CLI::IsMember({"exhaustive", "gauge_tree", "local_search"}));
  cochain->add_option("--emit", emit_path, "write the (random) input and the nearest cocycle");
  common(cochain);

  // cosyst
  auto* cosyst = app.add_subcommand("cosyst", "cosystolic expansion estimate and simple connectivity");
  int cell = 2, cd1 = -1, sc_ell = 2;
  std::uint64_t csamples = 1000;
  bool well = false;
  cosyst->add_option("complex,--complex", complex_path)->required();
  cosyst->add_option("--ell", cell);
  cosyst->add_option("--samples", csamples);
  cosyst->add_option("--d1", cd1, "run on F^{d1}X (swap cosystolic expansion)");
  cosyst->add_option("--simply-connected-ell", sc_ell, "check simple connectivity up to this ℓ (0 to skip)");
  cosyst->add_flag("--well-connected", well, "with --d1, check well-connectedness");
  common(cosyst);

  // agree
  auto* agree = app.add_subcommand("agree", "agreement of an ensemble under a test");
  std::string ensemble_path, test = "down-up", test_file, amode = "exact";
  int ak = -1;
  std::uint64_t trials = 100000;
  agree->add_option("--complex", complex_path)->required();
  agree->add_option("--ensemble", ensemble_path)->required();
  agree->add_option("--test", test)->check(CLI::IsMember({"v", "z", "down-up", "file"}));
  agree->add_option("--test-file", test_file, "key = value file with `test` and `k` (with --test file)");
  agree->add_option("--k", ak, "test level (defaults to the ensemble's)");
  agree->add_option("--mode", amode)->check(CLI::IsMember({"exact", "mc"}));
  agree->add_option("--trials", trials);
  common(agree);

  // pipeline
  auto* pipeline = app.add_subcommand("pipeline", "list decoding through covers");
  std::string config_path, plant_path;
  bool timings = false;
  pipeline->add_option("--complex", complex_path)->required();
  pipeline->add_option("--ensemble", ensemble_path)->required();
  pipeline->add_option("--config", config_path, "key = value config");
  pipeline->add_option("--plant", plant_path, "cover file of the plant to compare against");
  pipeline->add_flag("--timings", timings, "include wall-clock timings (not byte-stable)");
  common(pipeline);

  // counterexample
  auto* counter = app.add_subcommand("counterexample", "cover and Bogdanov counterexamples");
  counter->require_subcommand(1);
  auto* ccover = counter->add_subcommand("cover", "planted double cover ensemble vs best global function");
  int cn = 22, seeds = 20;
  double zeta = 0.25;
  std::string emit_ensemble;
  ccover->add_option("--n", cn, "host K_n with the all-transposition double cover");
  ccover->add_option("--cover", cover_path, "cover file instead of the built-in family");
  ccover->add_option("--k", ak, "ensemble level (default 1)");
  ccover->add_option("--seeds", seeds);
  ccover->add_option("--trials", trials);
  ccover->add_option("--zeta", zeta);
  ccover->add_option("--emit-ensemble", emit_ensemble);
  common(ccover);
  auto* bog = counter->add_subcommand("bogdanov", "unique constraints on a high-girth expander");
  int gn = 24, gdeg = 3, ggirth = 6, radius = 2;
  std::string graph_path;
  bog->add_option("--n", gn);
  bog->add_option("--degree", gdeg);
  bog->add_option("--min-girth", ggirth);
  bog->add_option("--radius", radius);
  bog->add_option("--graph", graph_path, "edge list file (`u v` per line) instead of a random instance");
  bog->add_option("--trials", trials);
  common(bog);

  // building
  auto* building = app.add_subcommand("building", "SL_d(F_q) spherical building");
  std::string emit_complex;
  bool expansion = false;
  building->add_option("--d", bd)->required();
  building->add_option("--q", bq)->required();
  building->add_option("--emit", emit_complex, "write the complex file");
  building->add_flag("--expansion", expansion, "per-link spectral summary");
  common(building);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*build) {
      SimplicialComplex X = [&] {
        if (btype == "complete") return complete_complex(bn, bk);
        if (btype == "circulant") return circulant_complex(bn, br);
        if (btype == "cycle") return cycle_complex(bn);
        return SimplicialComplex(*spherical_building(bd, bq).complex);
      }();
      write_or_print(write_complex(X), out);
    } else if (*spectra) {
      auto X = load(complex_path);
      Json cfg{{"complex", complex_path}, {"walk", walk}, {"k", sk}, {"l", sl}, {"mode", mode}, {"links", links}};
      Json j = report_header("spectra", seed, cfg);
      WalkGraph g = walk == "skeleton" ? skeleton_walk(*X) : walk == "containment" ? containment_graph(*X, sk, sl) : swap_graph(*X, sk, sl);
      SpectralReport r = second_eigenvalue(g);
      j["report"] = to_json(r);
      j["lambda"] = mode == "one" ? r.lambda2 : r.lambda_abs;
      if (links) j["hdx"] = to_json(hdx_parameter(*X, mode == "one" ? SpectralMode::OneSided : SpectralMode::TwoSided));
      emit(j, out);
    } else if (*faces || *flags) {
      auto X = load(complex_path);
      ComplexPtr C;
      std::string backmap;
      if (*faces) {
        FacesComplex F = faces_complex(X, fd1, budget);
        C = F.complex;
        backmap = write_faces_backmap(F);
      } else {
        FlagComplex G = flag_complex(X, budget);
        C = G.complex;
        backmap = write_flag_backmap(G);
      }
      if (out.empty()) throw UsageError("--out is required for the complex file");
      save_text(out, write_complex(*C));
      save_text(out + ".backmap", backmap);
      Json j = report_header(*faces ? "faces" : "flags", seed, Json{{"complex", complex_path}, {"d1", fd1}, {"out", out}});
      j["dim"] = C->dim();
      j["vertices"] = C->n_vertices();
      j["facets"] = C->facets().size();
      std::cout << dump_report(j);
    } else if (*cover) {
      if (!cover_path.empty()) {
        CoverMap cm = load_cover(cover_path);
        Cochain1 psi = induced_cochain(cm);
        Json j = report_header("cover", seed, Json{{"cover", cover_path}});
        j["valid"] = true;
        j["degree"] = cover_degree(cm);
        j["total_connected"] = cm.total->is_connected();
        j["induced_cochain_is_cocycle"] = is_cocycle(psi);
        if (!emit_cochain.empty()) save_text(emit_cochain, write_cochain(psi));
        emit(j, out);
      } else {
        if (complex_path.empty() || cochain_path.empty()) throw UsageError("cover needs --cover or both --complex and --cochain");
        auto X = load(complex_path);
        Cochain1 psi = parse_cochain(read_file(cochain_path), X);
        CoverMap cm = induced_cover(psi);
        if (out_total.empty()) throw UsageError("--out-total is required when building a cover");
        save_text(out_total, write_complex(*cm.total));
        std::string cover_text = write_cover_map(cm, fs::absolute(complex_path).string(), fs::absolute(out_total).string());
        write_or_print(cover_text, out);
      }
    } else if (*cochain) {
      auto X = load(complex_path);
      Rng rng(seed);
      Cochain1 psi = [&] {
        if (!cochain_path.empty()) return parse_cochain(read_file(cochain_path), X);
        if (random_ell <= 0) throw UsageError("cochain needs --cochain or --random ell");
        return as_coboundary ? coboundary(X, random_gauge(X->n_vertices(), random_ell, rng)) : random_cochain(X, random_ell, rng);
      }();
      CocycleStrategy st = strategy == "exhaustive" ? CocycleStrategy::Exhaustive : strategy == "gauge_tree" ? CocycleStrategy::GaugeTree : CocycleStrategy::LocalSearch;
      NearestCocycle nc = nearest_cocycle(psi, st, budget);
      Json j = report_header("cochain", seed, Json{{"complex", complex_path}, {"cochain", cochain_path}, {"random", random_ell}, {"coboundary", as_coboundary}, {"strategy", strategy}, {"budget", budget}});
      j["ell"] = psi.ell();
      j["wt"] = wt(psi);
      j["wt_delta"] = wt_delta(psi);
      j["is_cocycle"] = is_cocycle(psi);
      j["nearest"] = {{"dist", nc.dist}, {"exact", nc.exact}, {"coboundaries_only", nc.coboundaries_only}, {"strategy", nc.strategy}, {"evaluated", nc.evaluated}};
      if (!emit_path.empty()) {
        save_text(emit_path, write_cochain(psi));
        save_text(emit_path + ".nearest", write_cochain(nc.phi));
      }
      emit(j, out);
    } else if (*cosyst) {
      auto X = load(complex_path);
      Rng rng(seed);
      ComplexPtr target = cd1 >= 0 ? faces_complex(X, cd1).complex : X;
      Json j = report_header("cosyst", seed, Json{{"complex", complex_path}, {"ell", cell}, {"samples", csamples}, {"d1", cd1}, {"simply_connected_ell", sc_ell}, {"budget", budget}});
      CosystolicEstimate est = cosystolic_expansion_estimate(target, cell, budget, csamples, rng);
      j["beta_hat"] = est.beta_hat;
      j["witness_wt_delta"] = est.witness_wt_delta;
      j["witness_dist"] = est.witness_dist;
      j["evaluated"] = est.evaluated;
      j["exhaustive"] = est.exhaustive;
      if (sc_ell >= 2 && target->is_connected()) {
        SimplyConnectedReport sc = is_simply_connected(target, sc_ell, budget);
        j["simply_connected"] = sc.simply_connected;
        j["simply_connected_ell_max"] = sc.ell_max;
      }
      if (well && cd1 >= 0) {
        WellConnectedReport wc = well_connected_check(X, cd1, sc_ell, budget);
        j["well_connected"] = wc.well_connected;
        if (wc.witness) j["well_connected_witness"] = wc.witness->str();
        j["well_connected_reason"] = wc.reason;
      }
      emit(j, out);
    } else if (*agree) {
      auto X = load(complex_path);
      Ensemble F = parse_ensemble(read_file(ensemble_path), X);
      AgreementDistribution D = parse_test(test, ak >= 0 ? ak : F.k, test_file);
      Rng rng(seed);
      Rng mc = rng.stream(0);
      AgreementResult r = amode == "exact" ? agree_exact(F, D, budget) : agree_monte_carlo(F, D, trials, mc);
      Json j = report_header("agree", seed, Json{{"complex", complex_path}, {"ensemble", ensemble_path}, {"test", D.name()}, {"k", D.k}, {"mode", amode}, {"trials", trials}, {"budget", budget}});
      Json body = to_json(r);
      for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
      emit(j, out);
    } else if (*pipeline) {
      auto X = load(complex_path);
      Ensemble F = parse_ensemble(read_file(ensemble_path), X);
      PipelineConfig cfg;
      cfg.d1 = F.k;
      cfg.seed = seed;
      if (!config_path.empty()) apply_pipeline_config(parse_config(read_file(config_path)), cfg);
      std::optional<CoverMap> plant;
      if (!plant_path.empty()) plant = load_cover(plant_path);
      PipelineArtifacts A;
      PipelineReport rep = run_pipeline(F, cfg, down_up_test(F.k), plant ? &*plant : nullptr, &A);
      Json j = report_header("pipeline", cfg.seed, to_json(cfg));
      j["inputs"] = {{"complex", complex_path}, {"ensemble", ensemble_path}, {"plant", plant_path}};
      j["report"] = to_json(rep, timings);
      if (!out.empty()) {
        fs::create_directories(out);
        fs::path dir(out);
        save_text((dir / "lists.txt").string(), write_lists(A.lists, *X));
        save_text((dir / "faces_complex.txt").string(), write_complex(*A.fx.complex));
        save_text((dir / "faces_complex.txt.backmap").string(), write_faces_backmap(A.fx));
        save_text((dir / "matching.txt").string(), write_matching(A.lists, A.fx, cfg.gamma));
        save_text((dir / "cochain.txt").string(), write_cochain(A.cochain.psi));
        save_text((dir / "cochain_corrected.txt").string(), write_cochain(A.corrected.phi));
        if (A.lift) {
          save_text((dir / "cover_total.txt").string(), write_complex(*A.lift->cover.total));
          save_text((dir / "cover.txt").string(), write_cover_map(A.lift->cover, fs::absolute(complex_path).string(), "cover_total.txt"));
        }
        if (A.G) save_text((dir / "G.txt").string(), write_global(*A.G));
        save_text((dir / "report.json").string(), dump_report(j));
      }
      std::cout << dump_report(j);
    } else if (*ccover) {
      Rng rng(seed);
      CoverMap cm = cover_path.empty() ? all_transposition_cover(cn) : load_cover(cover_path);
      int k = ak >= 0 ? ak : 1;
      std::uint64_t gbudget = cover_path.empty() && budget == 10'000'000 ? std::uint64_t{1} << 24 : budget;
      CoverCounterexampleReport r = cover_counterexample(cm, k, down_up_test(k), seeds, trials, zeta, rng, gbudget);
      Json cfg{{"n", cover_path.empty() ? cn : cm.base->n_vertices()}, {"cover", cover_path}, {"k", k}, {"seeds", seeds}, {"trials", trials}, {"zeta", zeta}, {"budget", gbudget}};
      Json j = report_header("counterexample cover", seed, cfg);
      j["agreement"] = r.agreement;
      j["ci"] = Json::array({r.ci_low, r.ci_high});
      j["agreement_exact"] = r.best_exact;
      j["best_seed"] = r.best_seed;
      j["best_global_value"] = r.best_global_value;
      j["gap"] = r.gap;
      j["total_connected"] = r.total_connected;
      j["evaluated"] = r.evaluated;
      if (!emit_ensemble.empty()) save_text(emit_ensemble, write_ensemble(r.ensemble.ensemble));
      emit(j, out);
    } else if (*bog) {
      Rng rng(seed);
      std::vector<std::pair<int, int>> edges;
      int n = gn;
      Json cfg{{"n", gn}, {"degree", gdeg}, {"min_girth", ggirth}, {"radius", radius}, {"trials", trials}, {"graph", graph_path}};
      if (!graph_path.empty()) {
        std::istringstream in(read_file(graph_path));
        int u, v;
        n = 0;
        while (in >> u >> v) edges.emplace_back(u, v), n = std::max({n, u + 1, v + 1});
      } else {
        RegularInstance inst = random_regular_graph(gn, gdeg, ggirth, seed);
        edges = inst.edges;
        cfg["instance_seed"] = inst.seed;
        cfg["instance_tries"] = inst.tries;
      }
      ConstraintGraph G = inequality_constraints(n, edges);
      BogdanovReport b = bogdanov_experiment(G, radius, trials, rng);
      Json j = report_header("counterexample bogdanov", seed, cfg);
      Json body = to_json(b);
      for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
      emit(j, out);
    } else if (*building) {
      BuildingComplex B = spherical_building(bd, bq, budget);
      Json j = report_header("building", seed, Json{{"d", bd}, {"q", bq}, {"expansion", expansion}});
      j["dim"] = B.complex->dim();
      j["vertices"] = B.complex->n_vertices();
      j["facets"] = B.complex->facets().size();
      Json counts = Json::array();
      for (int k = 1; k <= bd - 1; ++k) counts.push_back(Json{{"dim", k}, {"subspaces", enumerate_subspaces(bd, bq, k).size()}, {"gaussian_binomial", gaussian_binomial(bd, k, bq)}});
      j["subspace_counts"] = counts;
      j["clique_complex"] = is_clique_complex(*B.complex);
      j["partite"] = is_partite(*B.complex, bd - 1).has_value();
      if (expansion && B.complex->dim() >= 1) j["expansion"] = to_json(building_expansion_report(bd, bq));
      if (!emit_complex.empty()) save_text(emit_complex, write_complex(*B.complex));
      emit(j, out);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
