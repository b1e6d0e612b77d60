#include "descat/mesh.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

#include "descat/projection.hpp"
#include "descat/trochoid.hpp"

namespace descat {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kDegenerateArea = 1e-14;

// Index-addressed parallel loop; results land in pre-sized arrays so the
// output is identical no matter how the chunks get scheduled.
void parallel_apply(long n, int threads, const std::function<void(long)>& fn) {
  int hw = threads > 0 ? threads
                       : static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  const long grain = 512;
  if (hw == 1 || n < 2 * grain) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto worker = [&] {
    for (;;) {
      long lo = next.fetch_add(grain);
      if (lo >= n) return;
      long hi = std::min(n, lo + grain);
      try {
        for (long i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!err) err = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(hw));
  for (int t = 0; t < hw; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

std::array<double, 3> project_point(const Point4& p, ProjectionKind kind,
                                    double tol) {
  switch (kind) {
    case ProjectionKind::Hollowball: {
      HollowballPoint h = hollowball_project(p, tol);
      return {h.x, h.y, h.z};
    }
    case ProjectionKind::SolidTorus: {
      TorusPoint t = solid_torus_project(p);
      return {t.u, t.v, t.w};
    }
    case ProjectionKind::None:
      return {0.0, 0.0, 0.0};
  }
  throw std::logic_error("unreachable projection kind");
}

double tri_area(const std::array<double, 3>& a, const std::array<double, 3>& b,
                const std::array<double, 3>& c) {
  const double ux = b[0] - a[0], uy = b[1] - a[1], uz = b[2] - a[2];
  const double vx = c[0] - a[0], vy = c[1] - a[1], vz = c[2] - a[2];
  const double cx = uy * vz - uz * vy;
  const double cy = uz * vx - ux * vz;
  const double cz = ux * vy - uy * vx;
  return 0.5 * std::sqrt(cx * cx + cy * cy + cz * cz);
}

struct GridBlock {
  std::vector<double> u;  // signed radial values, or s for the AdS family
  bool iota_copy = false; // evaluate at +u and apply iota afterwards
};

double residual_of(const SurfaceSpec& spec, double u, double theta) {
  if (spec.family == Family::AdS) return std::cos(spec.m * theta);
  return singular_residual(spec, u, theta);
}

}  // namespace

const char* projection_name(ProjectionKind kind) {
  switch (kind) {
    case ProjectionKind::Hollowball: return "hollowball";
    case ProjectionKind::SolidTorus: return "solid-torus";
    case ProjectionKind::None: return "none";
  }
  return "?";
}

MeshBundle sample_and_mesh(const RunConfig& config) {
  const SurfaceSpec& spec = config.spec;
  validate(spec);
  if (config.n_r < 2 || config.n_theta < 3)
    throw std::invalid_argument("grid must have n_r >= 2 and n_theta >= 3");
  const bool ads = spec.family == Family::AdS;
  if (!ads && !(config.r_min > 0.0 && config.r_max > config.r_min))
    throw std::invalid_argument("radial window must satisfy 0 < r_min < r_max");
  if (config.projection == ProjectionKind::Hollowball && ads)
    throw std::invalid_argument("hollowball projection needs the de Sitter ambient");
  if (config.projection == ProjectionKind::SolidTorus && !ads)
    throw std::invalid_argument("solid torus projection needs the anti-de Sitter ambient");
  if (config.line_samples < 2)
    throw std::invalid_argument("line_samples must be at least 2");

  const int m = spec.m;
  const int nu = config.n_r;
  const int nt = config.n_theta;
  const double dtheta = kTwoPi / nt;
  const bool u_periodic = ads;

  // Radial blocks. The mirrored sheet of the first family is a genuine second
  // branch of the same closed surface; the even-m second family picks up its
  // other half from the t,z sign flip instead.
  std::vector<GridBlock> blocks;
  {
    GridBlock base;
    base.u.resize(static_cast<std::size_t>(nu));
    for (int i = 0; i < nu; ++i) {
      if (ads) {
        base.u[static_cast<std::size_t>(i)] = kTwoPi * i / nu;
      } else {
        const double lr = std::log(config.r_min) +
                          (std::log(config.r_max) - std::log(config.r_min)) *
                              (nu == 1 ? 0.0 : static_cast<double>(i) / (nu - 1));
        base.u[static_cast<std::size_t>(i)] = std::exp(lr);
      }
    }
    blocks.push_back(base);
    if (config.second_sheet && spec.family == Family::TypeI) {
      GridBlock neg = base;
      for (double& v : neg.u) v = -v;
      blocks.push_back(neg);
    } else if (config.second_sheet && spec.family == Family::TypeII &&
               m % 2 == 0) {
      GridBlock copy = base;
      copy.iota_copy = true;
      blocks.push_back(copy);
    }
  }

  MeshBundle out;
  out.provenance = config;

  const long grid_per_block = static_cast<long>(nu) * nt;
  const long grid_total = grid_per_block * static_cast<long>(blocks.size());
  out.points.resize(static_cast<std::size_t>(grid_total));
  out.meta.resize(static_cast<std::size_t>(grid_total));
  const bool want_proj = config.projection != ProjectionKind::None;
  if (want_proj) out.vertices.resize(static_cast<std::size_t>(grid_total));

  auto eval_vertex = [&](const GridBlock& blk, double u, double theta,
                         Point4* p, std::array<double, 3>* v3,
                         VertexMeta* vm) {
    Point4 q = surface_point(spec, u, theta);
    if (blk.iota_copy) q = involution_iota(q);
    *p = q;
    if (v3) *v3 = project_point(q, config.projection, config.membership_tol);
    vm->r = u;
    vm->theta = theta;
    vm->residual = residual_of(spec, u, theta);
    if (spec.family == Family::TypeI) {
      vm->region = classify_region(m, u, theta, config.singular_tol);
    } else if (std::abs(vm->residual) <= config.singular_tol) {
      vm->region = RegionLabel::Singular;
    } else {
      vm->region.reset();
    }
  };

  parallel_apply(grid_total, config.threads, [&](long idx) {
    const long b = idx / grid_per_block;
    const long rem = idx % grid_per_block;
    const int i = static_cast<int>(rem / nt);
    const int j = static_cast<int>(rem % nt);
    const GridBlock& blk = blocks[static_cast<std::size_t>(b)];
    eval_vertex(blk, blk.u[static_cast<std::size_t>(i)], dtheta * j,
                &out.points[static_cast<std::size_t>(idx)],
                want_proj ? &out.vertices[static_cast<std::size_t>(idx)] : nullptr,
                &out.meta[static_cast<std::size_t>(idx)]);
  });

  out.base_vertices = static_cast<int>(grid_total);

  // Triangulation with one round of midpoint refinement on cells whose
  // corner residuals change sign. Midpoint vertices are not shared between
  // neighbouring refined cells; the duplicates land on the same surface
  // point, so the geometry stays watertight up to the chord error.
  const int rows = u_periodic ? nu : nu - 1;
  out.base_triangles = 2 * rows * nt * static_cast<int>(blocks.size());

  auto push_tri = [&](int a, int b, int c) {
    if (want_proj) {
      const double area = tri_area(out.vertices[static_cast<std::size_t>(a)],
                                   out.vertices[static_cast<std::size_t>(b)],
                                   out.vertices[static_cast<std::size_t>(c)]);
      if (area < kDegenerateArea) {
        ++out.degenerate_dropped;
        return;
      }
    }
    out.triangles.push_back({a, b, c});
  };

  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const GridBlock& blk = blocks[b];
    const long base = static_cast<long>(b) * grid_per_block;
    for (int i = 0; i < rows; ++i) {
      const int inext = u_periodic ? (i + 1) % nu : i + 1;
      for (int j = 0; j < nt; ++j) {
        const int jnext = (j + 1) % nt;
        const int c00 = static_cast<int>(base) + i * nt + j;
        const int c10 = static_cast<int>(base) + inext * nt + j;
        const int c11 = static_cast<int>(base) + inext * nt + jnext;
        const int c01 = static_cast<int>(base) + i * nt + jnext;

        const double r00 = out.meta[static_cast<std::size_t>(c00)].residual;
        const double r10 = out.meta[static_cast<std::size_t>(c10)].residual;
        const double r11 = out.meta[static_cast<std::size_t>(c11)].residual;
        const double r01 = out.meta[static_cast<std::size_t>(c01)].residual;
        const bool has_pos = r00 > 0 || r10 > 0 || r11 > 0 || r01 > 0;
        const bool has_neg = r00 < 0 || r10 < 0 || r11 < 0 || r01 < 0;

        if (!(has_pos && has_neg)) {
          push_tri(c00, c10, c11);
          push_tri(c00, c11, c01);
          continue;
        }

        ++out.refined_cells;
        // Parameter-space midpoints; radial midpoint taken in log|r| to
        // match the grid spacing, theta continued past the wrap seam.
        const double u0 = blk.u[static_cast<std::size_t>(i)];
        double u1;
        double umid;
        if (ads) {
          u1 = u0 + kTwoPi / nu;
          umid = u0 + std::numbers::pi / nu;
        } else {
          u1 = blk.u[static_cast<std::size_t>(i + 1)];
          const double s = u0 < 0 ? -1.0 : 1.0;
          umid = s * std::sqrt(std::abs(u0) * std::abs(u1));
        }
        const double t0 = dtheta * j;
        const double t1 = t0 + dtheta;
        const double tmid = t0 + 0.5 * dtheta;

        const double us[5] = {umid, u0, u1, umid, umid};
        const double ts[5] = {t0, tmid, tmid, t1, tmid};
        int ids[5];
        for (int q = 0; q < 5; ++q) {
          Point4 p;
          std::array<double, 3> v3{};
          VertexMeta vm;
          eval_vertex(blk, us[q], ts[q], &p, want_proj ? &v3 : nullptr, &vm);
          ids[q] = static_cast<int>(out.points.size());
          out.points.push_back(p);
          out.meta.push_back(vm);
          if (want_proj) out.vertices.push_back(v3);
        }
        const int mb = ids[0], ml = ids[1], mr = ids[2], mt = ids[3],
                  cc = ids[4];
        push_tri(c00, mb, cc);
        push_tri(c00, cc, ml);
        push_tri(mb, c10, mr);
        push_tri(mb, mr, cc);
        push_tri(cc, mr, c11);
        push_tri(cc, c11, mt);
        push_tri(ml, cc, mt);
        push_tri(ml, mt, c01);
      }
    }
  }

  // Null lines of the closure, attached as index chains. The AdS picture is
  // compact without them, so the flag is a no-op there.
  if (config.include_lines && !ads) {
    auto append_line = [&](const LightLine& line) {
      std::vector<int> chain;
      chain.reserve(static_cast<std::size_t>(config.line_samples));
      for (int q = 0; q < config.line_samples; ++q) {
        const double t = -config.line_t_clip +
                         2.0 * config.line_t_clip * q /
                             (config.line_samples - 1);
        const Point4 p = line.at(t);
        const int id = static_cast<int>(out.points.size());
        out.points.push_back(p);
        VertexMeta vm;
        vm.r = 0.0;
        vm.theta = 0.0;
        vm.residual = 0.0;
        out.meta.push_back(vm);
        if (want_proj)
          out.vertices.push_back(
              project_point(p, config.projection, config.membership_tol));
        chain.push_back(id);
      }
      out.polylines.push_back(std::move(chain));
    };
    for (int k = 0; k < 2 * m; ++k) {
      const std::vector<LightLine> lines = spec.family == Family::TypeI
                                               ? light_lines(spec, k)
                                               : extension_lines(m, k);
      for (const LightLine& line : lines) append_line(line);
    }
  }

  return out;
}

Polyline trochoid_polyline(int m, int samples) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  if (samples < 2) throw std::invalid_argument("samples must be at least 2");
  Polyline out;
  out.projected = false;
  out.points3.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double theta = kTwoPi * i / (samples - 1);
    const Vec2 g = gamma(m, theta);
    out.points3.push_back({g.x, g.y, 0.0});
  }
  return out;
}

Polyline hypotrochoid_polyline(int m, int samples) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  if (samples < 2) throw std::invalid_argument("samples must be at least 2");
  const TrochoidParams tp = trochoid_params(m);
  const double period = kTwoPi * (m + 1);
  Polyline out;
  out.projected = false;
  out.points3.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double s = period * i / (samples - 1);
    const Vec2 p = hypotrochoid(tp, tp.d, s);
    out.points3.push_back({p.x, p.y, 0.0});
  }
  return out;
}

Polyline light_line_polyline(const SurfaceSpec& spec, int k, double t0,
                             double t1, int samples, ProjectionKind projection) {
  validate(spec);
  if (spec.family == Family::AdS)
    throw std::invalid_argument("the AdS family carries no null lines");
  if (samples < 2) throw std::invalid_argument("samples must be at least 2");
  if (projection == ProjectionKind::SolidTorus)
    throw std::invalid_argument("solid torus projection needs the anti-de Sitter ambient");
  const std::vector<LightLine> lines = spec.family == Family::TypeI
                                           ? light_lines(spec, k)
                                           : extension_lines(spec.m, k);
  Polyline out;
  out.projected = projection != ProjectionKind::None;
  for (const LightLine& line : lines) {
    for (int i = 0; i < samples; ++i) {
      const double t = t0 + (t1 - t0) * i / (samples - 1);
      const Point4 p = line.at(t);
      out.points4.push_back(p);
      if (out.projected)
        out.points3.push_back(project_point(p, projection, 1e-8));
    }
  }
  return out;
}

Polyline singular_image_polyline(const SurfaceSpec& spec, int component,
                                 int samples, ProjectionKind projection) {
  validate(spec);
  if (spec.family == Family::AdS)
    throw std::invalid_argument("singular images are defined on the de Sitter families");
  if (component < 0 || component >= 2 * spec.m)
    throw std::invalid_argument("component index out of range");
  if (samples < 2) throw std::invalid_argument("samples must be at least 2");
  if (projection == ProjectionKind::SolidTorus)
    throw std::invalid_argument("solid torus projection needs the anti-de Sitter ambient");

  const int m = spec.m;
  Polyline out;
  out.projected = projection != ProjectionKind::None;

  if (spec.family == Family::TypeII) {
    // Each ray theta = alpha_k collapses to its cone point.
    const Point4 p = cone_point(m, component);
    out.points4.push_back(p);
    if (out.projected) out.points3.push_back(project_point(p, projection, 1e-8));
    return out;
  }

  // First family: march the zero set of r^m + 2 cos(m theta) column by
  // column over a (log|r|, theta) grid, interpolating linearly on the edge
  // that brackets the sign change.
  const double sheet = component < m ? 1.0 : -1.0;
  const int arc = component % m;
  const bool needs_cos_neg = sheet > 0 || m % 2 == 0;
  const double w0 =
      (needs_cos_neg ? std::numbers::pi / 2 : -std::numbers::pi / 2) / m +
      kTwoPi * arc / m;
  const double w1 = w0 + std::numbers::pi / m;

  const double r_lo = 0.02, r_hi = 1.6;
  const int n_r = 400;
  const double trim = 1e-3 * (w1 - w0);
  for (int j = 0; j < samples; ++j) {
    const double theta = w0 + trim + (w1 - w0 - 2 * trim) * j / (samples - 1);
    double prev_lr = std::log(r_lo);
    double prev_res = singular_residual(spec, sheet * r_lo, theta);
    bool found = false;
    for (int i = 1; i <= n_r && !found; ++i) {
      const double lr = std::log(r_lo) +
                        (std::log(r_hi) - std::log(r_lo)) * i / n_r;
      const double res = singular_residual(spec, sheet * std::exp(lr), theta);
      if ((prev_res <= 0 && res >= 0) || (prev_res >= 0 && res <= 0)) {
        const double lam = prev_res / (prev_res - res);
        const double root = sheet * std::exp(prev_lr + lam * (lr - prev_lr));
        const Point4 p = surface_point(spec, root, theta);
        out.points4.push_back(p);
        if (out.projected)
          out.points3.push_back(project_point(p, projection, 1e-8));
        found = true;
      }
      prev_lr = lr;
      prev_res = res;
    }
    // Columns where the root falls below the grid floor are skipped; the
    // curve runs off to the light line there anyway.
  }
  return out;
}

Polyline hyperbola_slice_polyline(int m, double theta, double r0, double r1,
                                  int samples, ProjectionKind projection) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  if (!(r0 > 0.0 && r1 > r0))
    throw std::invalid_argument("need 0 < r0 < r1");
  if (samples < 2) throw std::invalid_argument("samples must be at least 2");
  if (projection == ProjectionKind::SolidTorus)
    throw std::invalid_argument("solid torus projection needs the anti-de Sitter ambient");
  SurfaceSpec spec{Family::TypeII, m};
  Polyline out;
  out.projected = projection != ProjectionKind::None;
  for (int i = 0; i < samples; ++i) {
    const double lr =
        std::log(r0) + (std::log(r1) - std::log(r0)) * i / (samples - 1);
    const Point4 p = surface_point(spec, std::exp(lr), theta);
    out.points4.push_back(p);
    if (out.projected) out.points3.push_back(project_point(p, projection, 1e-8));
  }
  return out;
}

}  // namespace descat
