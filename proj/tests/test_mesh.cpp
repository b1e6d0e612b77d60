#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <unistd.h>

#include "descat/catenoid.hpp"
#include "descat/export.hpp"
#include "descat/lorentz.hpp"
#include "descat/mesh.hpp"
#include "descat/projection.hpp"
#include "descat/singular.hpp"

using namespace descat;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

fs::path temp_dir() {
  const fs::path dir =
      fs::temp_directory_path() / ("descat_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

int count_prefix(const std::string& text, const std::string& prefix) {
  int n = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind(prefix, 0) == 0) ++n;
  return n;
}

}  // namespace

TEST_CASE("tiny grid away from the singular set meshes without refinement") {
  RunConfig cfg;
  cfg.spec = {Family::TypeI, 2};
  cfg.r_min = 2.0;  // r^m >= 4 > |2 cos|: no zero crossing anywhere
  cfg.r_max = 3.0;
  cfg.n_r = 2;
  cfg.n_theta = 3;
  cfg.projection = ProjectionKind::None;

  const MeshBundle mb = sample_and_mesh(cfg);
  CHECK(mb.points.size() == 6);
  CHECK(mb.vertices.empty());  // no projection requested
  CHECK(mb.triangles.size() == 6);
  CHECK(mb.refined_cells == 0);
  CHECK(mb.degenerate_dropped == 0);
  CHECK(mb.base_vertices == 6);
  CHECK(mb.base_triangles == 6);
  CHECK(mb.meta.size() == mb.points.size());
  for (const auto& meta : mb.meta) {
    REQUIRE(meta.region.has_value());
    CHECK(*meta.region == RegionLabel::APlus);
  }
  for (const auto& tri : mb.triangles)
    for (int idx : tri) {
      CHECK(idx >= 0);
      CHECK(idx < static_cast<int>(mb.points.size()));
    }
}

TEST_CASE("counting invariants hold when cells refine across the locus") {
  RunConfig cfg;
  cfg.spec = {Family::TypeII, 2};
  cfg.r_min = 0.5;
  cfg.r_max = 2.0;
  cfg.n_r = 8;
  cfg.n_theta = 16;
  cfg.projection = ProjectionKind::Hollowball;

  const MeshBundle mb = sample_and_mesh(cfg);
  CHECK(mb.refined_cells > 0);  // the four rays cross this grid
  CHECK(static_cast<int>(mb.points.size()) ==
        mb.base_vertices + 5 * mb.refined_cells);
  CHECK(static_cast<int>(mb.triangles.size()) ==
        mb.base_triangles + 6 * mb.refined_cells - mb.degenerate_dropped);
  CHECK(mb.vertices.size() == mb.points.size());

  const double inner = std::sqrt(2.0) - 1.0;
  const double outer = std::sqrt(2.0) + 1.0;
  for (const auto& v : mb.vertices) {
    const double n = std::hypot(v[0], v[1], v[2]);
    CHECK(n > inner);
    CHECK(n < outer);
  }
  // Region labels belong to the first family; type II points carry none,
  // except grid lines landing exactly on a degenerate ray (cos(m theta) = 0
  // to rounding), which report Singular.
  for (const auto& meta : mb.meta) {
    if (meta.region.has_value()) CHECK(*meta.region == RegionLabel::Singular);
  }
}

TEST_CASE("type-I grids straddling the locus carry region labels") {
  RunConfig cfg;
  cfg.spec = {Family::TypeI, 2};
  cfg.r_min = 0.5;
  cfg.r_max = 2.5;
  cfg.n_r = 12;
  cfg.n_theta = 24;
  cfg.projection = ProjectionKind::Hollowball;

  const MeshBundle mb = sample_and_mesh(cfg);
  std::set<RegionLabel> seen;
  for (const auto& meta : mb.meta)
    if (meta.region.has_value()) seen.insert(*meta.region);
  CHECK(seen.count(RegionLabel::APlus) == 1);
  CHECK(seen.count(RegionLabel::BPlus) == 1);
}

TEST_CASE("second sheet doubles the grid") {
  RunConfig cfg;
  cfg.spec = {Family::TypeI, 3};
  cfg.r_min = 2.0;
  cfg.r_max = 3.0;
  cfg.n_r = 4;
  cfg.n_theta = 8;
  cfg.projection = ProjectionKind::None;

  const MeshBundle one = sample_and_mesh(cfg);
  cfg.second_sheet = true;
  const MeshBundle two = sample_and_mesh(cfg);
  CHECK(two.base_vertices == 2 * one.base_vertices);
  CHECK(two.base_triangles == 2 * one.base_triangles);

  bool saw_negative = false;
  for (const auto& meta : two.meta) saw_negative |= meta.r < 0.0;
  CHECK(saw_negative);

  // Even-m type II gets the iota copy, odd-m type II has nothing to add.
  cfg.spec = {Family::TypeII, 2};
  const MeshBundle even_two = sample_and_mesh(cfg);
  cfg.second_sheet = false;
  const MeshBundle even_one = sample_and_mesh(cfg);
  CHECK(even_two.base_vertices == 2 * even_one.base_vertices);
  cfg.spec = {Family::TypeII, 3};
  cfg.second_sheet = true;
  const MeshBundle odd_two = sample_and_mesh(cfg);
  cfg.second_sheet = false;
  const MeshBundle odd_one = sample_and_mesh(cfg);
  CHECK(odd_two.base_vertices == odd_one.base_vertices);
}

TEST_CASE("sampling is deterministic across thread counts") {
  RunConfig cfg;
  cfg.spec = {Family::TypeII, 3};
  cfg.n_r = 24;
  cfg.n_theta = 48;
  cfg.projection = ProjectionKind::Hollowball;
  cfg.include_lines = true;

  cfg.threads = 4;
  const MeshBundle a = sample_and_mesh(cfg);
  const MeshBundle b = sample_and_mesh(cfg);
  cfg.threads = 1;
  const MeshBundle c = sample_and_mesh(cfg);

  REQUIRE(a.points.size() == b.points.size());
  REQUIRE(a.points.size() == c.points.size());
  for (size_t i = 0; i < a.points.size(); ++i) {
    CHECK(max_coord_dist(a.points[i], b.points[i]) == 0.0);
    CHECK(max_coord_dist(a.points[i], c.points[i]) == 0.0);
  }
  CHECK(a.triangles == b.triangles);
  CHECK(a.triangles == c.triangles);
}

TEST_CASE("configuration errors throw") {
  RunConfig cfg;
  cfg.spec = {Family::AdS, 2};
  cfg.projection = ProjectionKind::Hollowball;
  CHECK_THROWS_AS((void)sample_and_mesh(cfg), std::invalid_argument);

  cfg.spec = {Family::TypeI, 2};
  cfg.projection = ProjectionKind::SolidTorus;
  CHECK_THROWS_AS((void)sample_and_mesh(cfg), std::invalid_argument);

  cfg.projection = ProjectionKind::Hollowball;
  cfg.n_r = 1;
  CHECK_THROWS_AS((void)sample_and_mesh(cfg), std::invalid_argument);
  cfg.n_r = 8;
  cfg.r_min = -1.0;
  CHECK_THROWS_AS((void)sample_and_mesh(cfg), std::invalid_argument);
}

TEST_CASE("attached null lines come along when asked") {
  RunConfig cfg;
  cfg.spec = {Family::TypeII, 2};
  cfg.n_r = 8;
  cfg.n_theta = 16;
  cfg.projection = ProjectionKind::Hollowball;
  cfg.include_lines = true;
  cfg.line_samples = 17;

  const MeshBundle mb = sample_and_mesh(cfg);
  CHECK(mb.polylines.size() == 8);  // two null lines per ray, 2m rays
  for (const auto& chain : mb.polylines) {
    CHECK(chain.size() == 17);
    for (int idx : chain) {
      const Point4& p = mb.points[idx];
      CHECK(std::abs(minkowski_inner(p, p, Signature::DeSitter) - 1.0) <=
            1e-10);
    }
  }

  cfg.spec = {Family::TypeI, 2};
  const MeshBundle mi = sample_and_mesh(cfg);
  CHECK(mi.polylines.size() == 4);  // one line per ray
}

TEST_CASE("standalone curve samplers") {
  const Polyline tro = trochoid_polyline(2, 721);
  REQUIRE(tro.points3.size() == 721);
  CHECK(tro.points3.front()[0] == doctest::Approx(1.25));
  CHECK(tro.points3.front()[1] == doctest::Approx(0.0));
  CHECK(tro.points3.front()[2] == 0.0);
  CHECK(!tro.projected);

  const Polyline hyp = hypotrochoid_polyline(2, 721);
  REQUIRE(hyp.points3.size() == 721);
  // Same image: endpoints coincide with the closed trochoid start.
  CHECK(hyp.points3.front()[0] == doctest::Approx(1.25));

  // Each type-II cone point carries two null directions, so the polyline
  // holds both lines back to back.
  const Polyline line = light_line_polyline(SurfaceSpec{Family::TypeII, 2}, 0,
                                            -1.0, 1.0, 33,
                                            ProjectionKind::Hollowball);
  CHECK(line.points3.size() == 66);
  CHECK(line.points4.size() == 66);
  CHECK(line.projected);
  CHECK_THROWS_AS((void)light_line_polyline(SurfaceSpec{Family::AdS, 2}, 0,
                                            -1.0, 1.0, 9,
                                            ProjectionKind::SolidTorus),
                  std::invalid_argument);
}

TEST_CASE("marched singular image stays on the zero set") {
  const SurfaceSpec spec{Family::TypeI, 2};
  for (int component : {0, 1, 2, 3}) {
    const Polyline arc =
        singular_image_polyline(spec, component, 100, ProjectionKind::None);
    REQUIRE(arc.points4.size() >= 50);
    for (const Point4& p : arc.points4)
      CHECK(std::abs(minkowski_inner(p, p, Signature::DeSitter) - 1.0) <=
            1e-10);
  }

  const Polyline pt = singular_image_polyline(SurfaceSpec{Family::TypeII, 2},
                                              1, 100, ProjectionKind::None);
  REQUIRE(pt.points4.size() == 1);
  CHECK(max_coord_dist(pt.points4[0], cone_point(2, 1)) == 0.0);
}

TEST_CASE("hyperbola slice satisfies the quadratic relation") {
  const Polyline h =
      hyperbola_slice_polyline(2, 0.0, 0.1, 10.0, 64, ProjectionKind::None);
  const double rhs = std::pow(3.0 / 4.0, 2);  // ((m^2-1)/2m)^2 cos^2(0)
  for (const Point4& p : h.points4)
    CHECK(p.t * p.t - p.z * p.z == doctest::Approx(rhs).epsilon(1e-10));
}

TEST_CASE("exporters produce well-formed deterministic files") {
  const fs::path dir = temp_dir();

  RunConfig cfg;
  cfg.spec = {Family::TypeI, 2};
  cfg.r_min = 2.0;
  cfg.r_max = 3.0;
  cfg.n_r = 2;
  cfg.n_theta = 3;
  cfg.projection = ProjectionKind::Hollowball;
  const MeshBundle mb = sample_and_mesh(cfg);

  const fs::path obj = dir / "small.obj";
  write_obj(obj.string(), mb);
  const std::string obj_text = slurp(obj);
  CHECK(count_prefix(obj_text, "v ") == 6);
  CHECK(count_prefix(obj_text, "f ") == 6);

  const fs::path csv = dir / "small.csv";
  write_csv(csv.string(), mb);
  const std::string csv_text = slurp(csv);
  CHECK(count_prefix(csv_text, "r,theta,") == 1);
  std::istringstream csv_in(csv_text);
  std::string line;
  int rows = 0;
  while (std::getline(csv_in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 7);  // header + 6 vertices

  const fs::path ply = dir / "small.ply";
  write_ply(ply.string(), mb);
  const std::string ply_text = slurp(ply);
  CHECK(ply_text.find("element vertex 6") != std::string::npos);
  CHECK(ply_text.find("element face 6") != std::string::npos);

  // Byte-identical on re-export.
  const fs::path obj2 = dir / "small2.obj";
  write_obj(obj2.string(), mb);
  CHECK(slurp(obj2) == obj_text);

  // Meta JSON checksums match an independent recomputation.
  const fs::path meta = dir / "small.meta.json";
  write_meta_json(meta.string(), cfg, {obj.string(), csv.string()});
  const std::string meta_text = slurp(meta);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64_file(obj.string())));
  CHECK(meta_text.find(buf) != std::string::npos);

  // OBJ needs 3d vertices: projection None is a contract violation.
  cfg.projection = ProjectionKind::None;
  const MeshBundle raw = sample_and_mesh(cfg);
  CHECK_THROWS_AS(write_obj((dir / "bad.obj").string(), raw),
                  std::invalid_argument);
  fs::remove_all(dir);
}

TEST_CASE("format_double basics") {
  CHECK(format_double(0.125) == "0.125");
  CHECK(format_double(-1.25) == "-1.25");
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(1e6) == "1000000");
  CHECK(format_double(1.0 / 3.0) == "0.333333333");
}
