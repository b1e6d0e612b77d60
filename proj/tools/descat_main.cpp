// Command line front end: evaluation, singular structure, trochoids, limit
// tables, meshing/export, the verification suite, and figure regeneration.
// Exit codes: 0 success, 1 verification failure, 2 usage/configuration error.

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "descat/catenoid.hpp"
#include "descat/export.hpp"
#include "descat/lorentz.hpp"
#include "descat/mesh.hpp"
#include "descat/projection.hpp"
#include "descat/singular.hpp"
#include "descat/trochoid.hpp"
#include "descat/verify.hpp"
#include "descat/version.hpp"

namespace fs = std::filesystem;
using namespace descat;

namespace {

int log_level() {
  const char* v = std::getenv("CATENOID_LOG");
  if (!v) return 1;
  std::string s(v);
  if (s == "debug") return 2;
  if (s == "quiet") return 0;
  return 1;
}

void log_debug(const std::string& msg) {
  if (log_level() >= 2) std::cerr << "[descat] " << msg << '\n';
}

Family parse_family(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "i" || s == "1") return Family::TypeI;
  if (s == "ii" || s == "2") return Family::TypeII;
  if (s == "ads") return Family::AdS;
  throw std::invalid_argument("unknown family '" + s + "' (expected I, II, or ads)");
}

ProjectionKind parse_projection(const std::string& s, Family family) {
  if (s.empty() || s == "auto")
    return family == Family::AdS ? ProjectionKind::SolidTorus
                                 : ProjectionKind::Hollowball;
  if (s == "hollowball") return ProjectionKind::Hollowball;
  if (s == "solid-torus") return ProjectionKind::SolidTorus;
  if (s == "none") return ProjectionKind::None;
  throw std::invalid_argument("unknown projection '" + s +
                              "' (expected hollowball, solid-torus, none, auto)");
}

std::string point_str(const Point4& p) {
  return "(" + format_double(p.t) + ", " + format_double(p.x) + ", " +
         format_double(p.y) + ", " + format_double(p.z) + ")";
}

double quadric_dev(const Point4& p, Signature sig) {
  return std::abs(minkowski_inner(p, p, sig) - space_form_sign(sig));
}

// ---- eval ----

int run_eval(const std::string& family, int m, double r, double theta,
             bool as_json) {
  SurfaceSpec spec{parse_family(family), m};
  const Point4 p = surface_point(spec, r, theta);
  const double dev = quadric_dev(p, ambient_signature(spec.family));
  if (as_json) {
    nlohmann::ordered_json j;
    j["family"] = family_name(spec.family);
    j["m"] = m;
    j["r"] = r;
    j["theta"] = theta;
    j["point"] = {p.t, p.x, p.y, p.z};
    j["quadric_residual"] = dev;
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "f^" << family_name(spec.family) << "_" << m << "(" << format_double(r)
            << ", " << format_double(theta) << ") = " << point_str(p) << '\n';
  std::cout << "quadric residual = " << format_double(dev) << '\n';
  return 0;
}

// ---- singular ----

int run_singular(const std::string& family, int m, const std::string& out_dir,
                 int samples, int grid, const std::string& projection) {
  SurfaceSpec spec{parse_family(family), m};
  validate(spec);
  if (spec.family == Family::AdS)
    throw std::invalid_argument("singular: families I and II only");
  fs::create_directories(out_dir);
  const ProjectionKind proj = parse_projection(projection, spec.family);
  std::vector<std::string> written;

  if (spec.family == Family::TypeI) {
    for (int c = 0; c < 2 * m; ++c) {
      const Polyline line = singular_image_polyline(spec, c, samples, proj);
      const std::string path =
          out_dir + "/singular_I_m" + std::to_string(m) + "_c" +
          std::to_string(c) + ".csv";
      write_csv(path, line);
      written.push_back(path);
    }
    // Domain region map over both sheets.
    const std::string map_path =
        out_dir + "/region_map_I_m" + std::to_string(m) + ".csv";
    std::ofstream os(map_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + map_path);
    os << "r,theta,region,residual\n";
    for (int sheet = 0; sheet < 2; ++sheet)
      for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) {
          const double mag =
              std::exp(std::log(0.05) +
                       (std::log(2.5) - std::log(0.05)) * i / (grid - 1));
          const double r = sheet == 0 ? mag : -mag;
          const double theta = 2.0 * std::numbers::pi * j / grid;
          os << format_double(r) << ',' << format_double(theta) << ','
             << region_name(classify_region(m, r, theta)) << ','
             << format_double(singular_residual(spec, r, theta)) << '\n';
        }
    os.close();
    written.push_back(map_path);
  } else {
    const std::string path =
        out_dir + "/cone_points_II_m" + std::to_string(m) + ".csv";
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << "k,alpha_k,x0,x1,x2,x3\n";
    for (int k = 0; k < 2 * m; ++k) {
      const Point4 p = cone_point(m, k);
      os << k << ',' << format_double(alpha_k(m, k)) << ','
         << format_double(p.t) << ',' << format_double(p.x) << ','
         << format_double(p.y) << ',' << format_double(p.z) << '\n';
      std::cout << "cone point k=" << k << ": " << point_str(p) << '\n';
    }
    os.close();
    written.push_back(path);
  }
  for (const std::string& w : written) std::cout << "wrote " << w << '\n';
  return 0;
}

// ---- trochoid ----

int run_trochoid(int m, const std::string& out_dir, int samples) {
  if (m < 2) throw std::invalid_argument("trochoid: need m >= 2");
  fs::create_directories(out_dir);
  const TrochoidParams tp = trochoid_params(m);
  const double scale = trochoid_scale(m);
  std::cout << "m = " << m << ": fixed circle r_c = " << format_double(tp.r_c)
            << ", rolling circle r_m = " << format_double(tp.r_m)
            << ", arm d = " << format_double(tp.d) << '\n';
  std::cout << "fitted (x1,x2) = c*gamma_m scale: c = " << format_double(scale)
            << '\n';
  const std::string g_path = out_dir + "/gamma_m" + std::to_string(m) + ".csv";
  const std::string h_path =
      out_dir + "/hypotrochoid_m" + std::to_string(m) + ".csv";
  write_csv(g_path, trochoid_polyline(m, samples));
  write_csv(h_path, hypotrochoid_polyline(m, (m + 1) * samples));
  std::cout << "wrote " << g_path << '\n' << "wrote " << h_path << '\n';
  return 0;
}

// ---- limits ----

int run_limits(const std::string& family, int m, int sequences, long long tail,
               std::uint64_t seed, bool as_json) {
  SurfaceSpec spec{parse_family(family), m};
  validate(spec);
  if (spec.family == Family::AdS)
    throw std::invalid_argument("limits: families I and II only");

  const std::vector<LimitScenario> scen =
      spec.family == Family::TypeI
          ? std::vector<LimitScenario>{LimitScenario::RPlusInfty,
                                       LimitScenario::RMinusInfty,
                                       LimitScenario::APlus,
                                       LimitScenario::AMinus,
                                       LimitScenario::BPlus,
                                       LimitScenario::BMinus}
          : std::vector<LimitScenario>{LimitScenario::RInftyCosPos,
                                       LimitScenario::RInftyCosNeg,
                                       LimitScenario::RZeroCosPos,
                                       LimitScenario::RZeroCosNeg};

  bool all_ok = true;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::cout << "limit table, family " << family_name(spec.family) << ", m = "
            << m << " (" << sequences << " sequences each, tail index "
            << tail << ")\n";
  for (LimitScenario sc : scen) {
    const IdealPoint declared = limit_table(spec, sc);
    int ok = 0;
    double worst = 0.0;
    for (int i = 0; i < sequences; ++i) {
      const auto seq = scenario_sequence(spec, sc, seed + 7919u * i);
      const SequenceLimit lim = limit_of_sequence(spec, seq, tail);
      if (lim.status == SequenceLimit::Status::ConvergedToIdeal &&
          lim.ideal == declared.tag)
        ++ok;
      worst = std::max(worst, lim.mismatch);
    }
    const bool pass = ok == sequences;
    all_ok = all_ok && pass;
    std::cout << "  " << scenario_name(sc) << " -> " << ideal_name(declared.tag)
              << "  [" << ok << "/" << sequences
              << " sequences, worst mismatch " << format_double(worst) << "] "
              << (pass ? "ok" : "FAIL") << '\n';
    nlohmann::ordered_json row;
    row["scenario"] = scenario_name(sc);
    row["declared"] = ideal_name(declared.tag);
    row["converged"] = ok;
    row["sequences"] = sequences;
    row["worst_mismatch"] = worst;
    row["passed"] = pass;
    rows.push_back(row);
  }
  if (as_json) {
    nlohmann::ordered_json j;
    j["family"] = family_name(spec.family);
    j["m"] = m;
    j["tail"] = tail;
    j["passed"] = all_ok;
    j["scenarios"] = rows;
    std::cout << j.dump(2) << '\n';
  }
  return all_ok ? 0 : 1;
}

// ---- mesh ----

int run_mesh(const std::string& family, int m, const std::string& out,
             const std::string& format, const std::string& meta_path,
             double r_min, double r_max, int n_r, int n_theta,
             const std::string& projection, bool lines, bool second_sheet,
             int threads) {
  RunConfig cfg;
  cfg.spec = SurfaceSpec{parse_family(family), m};
  cfg.r_min = r_min;
  cfg.r_max = r_max;
  cfg.n_r = n_r;
  cfg.n_theta = n_theta;
  cfg.projection = parse_projection(projection, cfg.spec.family);
  cfg.include_lines = lines;
  cfg.second_sheet = second_sheet;
  cfg.threads = threads;

  log_debug("sampling grid " + std::to_string(n_r) + "x" +
            std::to_string(n_theta));
  const MeshBundle bundle = sample_and_mesh(cfg);
  if (format == "obj")
    write_obj(out, bundle);
  else if (format == "ply")
    write_ply(out, bundle);
  else if (format == "csv")
    write_csv(out, bundle);
  else
    throw std::invalid_argument("unknown format '" + format +
                                "' (expected obj, ply, csv)");
  std::cout << "wrote " << out << ": " << bundle.vertices.size() << " vertices, "
            << bundle.triangles.size() << " triangles, "
            << bundle.polylines.size() << " polylines (" << bundle.refined_cells
            << " refined cells, " << bundle.degenerate_dropped
            << " degenerate triangles dropped)\n";
  if (!meta_path.empty()) {
    write_meta_json(meta_path, cfg, {out});
    std::cout << "wrote " << meta_path << '\n';
  }
  return 0;
}

// ---- verify ----

int run_verify_cmd(const std::string& family, int m, std::uint64_t seed,
                   bool quick, const std::string& out) {
  SurfaceSpec spec{parse_family(family), m};
  VerifyOptions opt;
  opt.seed = seed;
  opt.quick = quick;
  const VerifyReport rep = run_verify(spec, opt);
  for (const CheckResult& c : rep.checks)
    log_debug(c.name + (c.passed ? " ok" : " FAIL") +
              " (max_error=" + format_double(c.max_error) + ")");
  const std::string json = report_to_json(rep);
  if (out.empty() || out == "-") {
    std::cout << json << '\n';
  } else {
    std::ofstream os(out, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + out);
    os << json << '\n';
    std::cout << "wrote " << out << '\n';
  }
  return rep.all_passed() ? 0 : 1;
}

// ---- figures ----

int run_figures(const std::string& out_dir, int threads) {
  fs::create_directories(out_dir);
  std::vector<std::string> files;

  auto mesh_fig = [&](const char* name, Family fam, int m, bool lines,
                      bool second_sheet) {
    RunConfig cfg;
    cfg.spec = SurfaceSpec{fam, m};
    cfg.n_r = 96;
    cfg.n_theta = 192;
    cfg.projection = fam == Family::AdS ? ProjectionKind::SolidTorus
                                        : ProjectionKind::Hollowball;
    cfg.include_lines = lines;
    cfg.second_sheet = second_sheet;
    cfg.threads = threads;
    const MeshBundle bundle = sample_and_mesh(cfg);
    const std::string path = out_dir + "/" + name + ".obj";
    write_obj(path, bundle);
    files.push_back(path);
    const std::string meta = out_dir + "/" + name + ".meta.json";
    write_meta_json(meta, cfg, {path});
    files.push_back(meta);
    log_debug(std::string("figure ") + name + ": " +
              std::to_string(bundle.triangles.size()) + " triangles");
  };

  // The extension set of the m=2 second-family catenoid (with its light
  // lines and the involution copy) next to the bare image, the m=3 set,
  // the trochoids, and the AdS cousins in the solid torus.
  mesh_fig("fig1_extension_II_m2", Family::TypeII, 2, true, true);
  mesh_fig("fig1_image_II_m2", Family::TypeII, 2, false, false);
  mesh_fig("fig2_extension_II_m3", Family::TypeII, 3, true, true);
  for (int m = 2; m <= 4; ++m) {
    const std::string g = out_dir + "/fig3_trochoid_m" + std::to_string(m) + ".csv";
    const std::string h =
        out_dir + "/fig3_hypotrochoid_m" + std::to_string(m) + ".csv";
    write_csv(g, trochoid_polyline(m, 721));
    write_csv(h, hypotrochoid_polyline(m, 721 * (m + 1)));
    files.push_back(g);
    files.push_back(h);
  }
  mesh_fig("fig4_ads_m2", Family::AdS, 2, false, false);
  mesh_fig("fig4_ads_m3", Family::AdS, 3, false, false);

  // Manifest with checksums over everything emitted above.
  nlohmann::ordered_json manifest;
  manifest["version"] = kVersion;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const std::string& f : files) {
    std::ifstream is(f, std::ios::binary | std::ios::ate);
    char hex[32];
    std::snprintf(hex, sizeof(hex), "%016llx",
                  static_cast<unsigned long long>(fnv1a64_file(f)));
    nlohmann::ordered_json e;
    e["name"] = fs::path(f).filename().string();
    e["bytes"] = static_cast<std::uint64_t>(is.tellg());
    e["fnv1a64"] = hex;
    arr.push_back(e);
  }
  manifest["files"] = arr;
  const std::string man_path = out_dir + "/figures_manifest.json";
  std::ofstream os(man_path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + man_path);
  os << manifest.dump(2) << '\n';
  os.close();

  for (const std::string& f : files) std::cout << "wrote " << f << '\n';
  std::cout << "wrote " << man_path << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exceptional de Sitter catenoids: evaluation, meshing, verification"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string family = "I", projection = "auto", format = "obj";
  std::string out, meta_path, json_out;
  int m = 2, n_r = 64, n_theta = 128, samples = 257, grid = 64, threads = 0;
  int sequences = 20;
  long long tail = 1000000;
  double r = 1.0, theta = 0.0;
  double r_min = kDefaultRMin, r_max = kDefaultRMax;
  std::uint64_t seed = 20240611;
  bool as_json = false, lines = false, second_sheet = false, quick = false;

  CLI::App* c_eval = app.add_subcommand("eval", "evaluate the surface at one point");
  c_eval->add_option("--family", family, "I, II, or ads");
  c_eval->add_option("--m", m, "family parameter (m >= 2)");
  c_eval->add_option("--r", r, "radial coordinate (s for the AdS family)");
  c_eval->add_option("--theta", theta, "angular coordinate");
  c_eval->add_flag("--json", as_json, "emit JSON");

  CLI::App* c_sing = app.add_subcommand("singular", "emit singular curves and region map");
  c_sing->add_option("--family", family, "I or II");
  c_sing->add_option("--m", m, "family parameter");
  c_sing->add_option("--out", out, "output directory")->default_str(".");
  c_sing->add_option("--samples", samples, "points per curve");
  c_sing->add_option("--grid", grid, "region map grid per axis");
  c_sing->add_option("--projection", projection, "hollowball, none, auto");

  CLI::App* c_troch = app.add_subcommand("trochoid", "emit gamma_m and its hypotrochoid");
  c_troch->add_option("--m", m, "curve parameter");
  c_troch->add_option("--out", out, "output directory")->default_str(".");
  c_troch->add_option("--samples", samples, "points on gamma_m");

  CLI::App* c_lim = app.add_subcommand("limits", "print limit table and validate sequences");
  c_lim->add_option("--family", family, "I or II");
  c_lim->add_option("--m", m, "family parameter");
  c_lim->add_option("--sequences", sequences, "random sequences per scenario");
  c_lim->add_option("--tail", tail, "tail index");
  c_lim->add_option("--seed", seed, "RNG seed");
  c_lim->add_flag("--json", as_json, "emit JSON after the table");

  CLI::App* c_mesh = app.add_subcommand("mesh", "sample, triangulate, export");
  c_mesh->add_option("--family", family, "I, II, or ads");
  c_mesh->add_option("--m", m, "family parameter");
  c_mesh->add_option("--out", out, "output file")->required();
  c_mesh->add_option("--format", format, "obj, ply, csv");
  c_mesh->add_option("--meta", meta_path, "also write JSON metadata here");
  c_mesh->add_option("--r-min", r_min, "radial window start");
  c_mesh->add_option("--r-max", r_max, "radial window end");
  c_mesh->add_option("--nr", n_r, "radial grid count");
  c_mesh->add_option("--ntheta", n_theta, "angular grid count");
  c_mesh->add_option("--projection", projection, "hollowball, solid-torus, none, auto");
  c_mesh->add_flag("--lines", lines, "append light-line polylines");
  c_mesh->add_flag("--second-sheet", second_sheet, "mesh the mirrored/involution sheet");
  c_mesh->add_option("--threads", threads, "evaluation threads (0 = cores)");

  CLI::App* c_ver = app.add_subcommand("verify", "run the property suite, print JSON report");
  c_ver->add_option("--family", family, "I, II, or ads");
  c_ver->add_option("--m", m, "family parameter");
  c_ver->add_option("--seed", seed, "RNG seed");
  c_ver->add_flag("--quick", quick, "smaller sample counts");
  c_ver->add_option("--out", json_out, "write report here instead of stdout");

  CLI::App* c_fig = app.add_subcommand("figures", "regenerate all figures");
  c_fig->add_option("--out", out, "output directory")->required();
  c_fig->add_option("--threads", threads, "evaluation threads (0 = cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_eval->parsed()) return run_eval(family, m, r, theta, as_json);
    if (c_sing->parsed())
      return run_singular(family, m, out.empty() ? "." : out, samples, grid,
                          projection);
    if (c_troch->parsed())
      return run_trochoid(m, out.empty() ? "." : out, samples);
    if (c_lim->parsed())
      return run_limits(family, m, sequences, tail, seed, as_json);
    if (c_mesh->parsed())
      return run_mesh(family, m, out, format, meta_path, r_min, r_max, n_r,
                      n_theta, projection, lines, second_sheet, threads);
    if (c_ver->parsed())
      return run_verify_cmd(family, m, seed, quick, json_out);
    if (c_fig->parsed()) return run_figures(out, threads);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
