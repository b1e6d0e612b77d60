#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "descat/catenoid.hpp"
#include "descat/singular.hpp"

namespace descat {

enum class ProjectionKind { Hollowball, SolidTorus, None };

const char* projection_name(ProjectionKind kind);

// Default radial window e^{-4} .. e^{+4}: both families have ends at r -> 0
// and r -> inf, and the hyperbola parameter of type II is natural in log r.
inline constexpr double kDefaultRMin = 0.018315638888734179;  // e^-4
inline constexpr double kDefaultRMax = 54.598150033144236;    // e^+4

struct RunConfig {
  SurfaceSpec spec{};
  double r_min = kDefaultRMin;  // AdS family ignores the radial window and
  double r_max = kDefaultRMax;  // uses the periodic s in [0, 2pi) instead
  int n_r = 64;
  int n_theta = 128;
  ProjectionKind projection = ProjectionKind::Hollowball;
  bool include_lines = false;
  bool second_sheet = false;  // type I: mesh r < 0 too; type II even m: iota copy
  double membership_tol = 1e-8;
  double singular_tol = 1e-12;
  int line_samples = 65;
  double line_t_clip = 2.0;
  int threads = 0;  // 0 = hardware concurrency
};

struct VertexMeta {
  double r = 0.0;      // domain radial coordinate (s for AdS)
  double theta = 0.0;
  std::optional<RegionLabel> region;  // type I classification; empty elsewhere
  double residual = 0.0;              // singular residual at the vertex
};

struct MeshBundle {
  // Projected 3-vectors; empty when projection = None (raw CSV only).
  std::vector<std::array<double, 3>> vertices;
  // Raw ambient points, always populated, same indexing as vertices.
  std::vector<Point4> points;
  std::vector<std::array<int, 3>> triangles;
  std::vector<VertexMeta> meta;
  // Attached curves (light lines) as index chains into vertices/points.
  std::vector<std::vector<int>> polylines;
  RunConfig provenance{};
  // Counting bookkeeping so tests can check the closed-form formulas.
  int base_vertices = 0;
  int base_triangles = 0;
  int refined_cells = 0;
  int degenerate_dropped = 0;
};

// Tensor grid in (log|r|, theta) with theta wraparound (and s wraparound for
// AdS); two triangles per quad, cells crossing the singular zero set refined
// once by midpoint subdivision. Projection/family mismatches (hollowball for
// AdS, solid torus for the S^3_1 families) are configuration errors.
MeshBundle sample_and_mesh(const RunConfig& config);

// ===== Standalone curves =====

struct Polyline {
  std::vector<std::array<double, 3>> points3;  // projected or planar
  std::vector<Point4> points4;                 // ambient points when meaningful
  bool projected = false;
};

Polyline trochoid_polyline(int m, int samples);
// Fitted roulette companion of gamma_m, sampled over its closure period.
Polyline hypotrochoid_polyline(int m, int samples);
Polyline light_line_polyline(const SurfaceSpec& spec, int k, double t0,
                             double t1, int samples, ProjectionKind projection);
// Image of one connected component of the singular set, marched as the zero
// level set of the residual (linear interpolation on grid edges).
// Type I: component in [0, 2m) — first m arcs on the r > 0 sheet, then m on
// r < 0. Type II: the component's image is the cone point (degenerate curve).
Polyline singular_image_polyline(const SurfaceSpec& spec, int component,
                                 int samples, ProjectionKind projection);
Polyline hyperbola_slice_polyline(int m, double theta, double r0, double r1,
                                  int samples, ProjectionKind projection);

}  // namespace descat
