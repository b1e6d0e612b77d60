#include "descat/export.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include "descat/version.hpp"

#include "json.hpp"

namespace descat {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  return os;
}

void require_projected(const MeshBundle& bundle, const char* what) {
  if (bundle.vertices.empty() || bundle.provenance.projection == ProjectionKind::None)
    throw std::invalid_argument(std::string(what) +
                                " needs a projected mesh, got projection=none");
}

void write_v3(std::ofstream& os, const char* tag,
              const std::array<double, 3>& v) {
  os << tag << ' ' << format_double(v[0]) << ' ' << format_double(v[1]) << ' '
     << format_double(v[2]) << '\n';
}

nlohmann::ordered_json config_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["family"] = family_name(c.spec.family);
  j["m"] = c.spec.m;
  j["r_min"] = c.r_min;
  j["r_max"] = c.r_max;
  j["n_r"] = c.n_r;
  j["n_theta"] = c.n_theta;
  j["projection"] = projection_name(c.projection);
  j["include_lines"] = c.include_lines;
  j["second_sheet"] = c.second_sheet;
  j["membership_tol"] = c.membership_tol;
  j["singular_tol"] = c.singular_tol;
  j["line_samples"] = c.line_samples;
  j["line_t_clip"] = c.line_t_clip;
  // threads deliberately omitted: it is an execution knob, not part of what
  // the artifact contains, and metadata must be byte-stable across runs.
  return j;
}

}  // namespace

std::string format_double(double v) {
  char buf[48];
  auto res = std::to_chars(buf, buf + sizeof(buf), v,
                           std::chars_format::general, 9);
  if (res.ec != std::errc()) throw std::runtime_error("float formatting failed");
  return std::string(buf, res.ptr);
}

void write_obj(const std::string& path, const MeshBundle& bundle) {
  require_projected(bundle, "OBJ export");
  std::ofstream os = open_out(path);
  for (const auto& v : bundle.vertices) write_v3(os, "v", v);
  for (const auto& t : bundle.triangles)
    os << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
  for (const auto& chain : bundle.polylines) {
    if (chain.size() < 2) continue;
    os << 'l';
    for (int id : chain) os << ' ' << id + 1;
    os << '\n';
  }
}

void write_obj(const std::string& path, const Polyline& line) {
  if (line.points3.empty())
    throw std::invalid_argument("OBJ export needs projected or planar points");
  std::ofstream os = open_out(path);
  for (const auto& v : line.points3) write_v3(os, "v", v);
  if (line.points3.size() >= 2) {
    os << 'l';
    for (std::size_t i = 0; i < line.points3.size(); ++i)
      os << ' ' << i + 1;
    os << '\n';
  }
}

void write_ply(const std::string& path, const MeshBundle& bundle) {
  require_projected(bundle, "PLY export");
  std::size_t edges = 0;
  for (const auto& chain : bundle.polylines)
    if (chain.size() >= 2) edges += chain.size() - 1;
  std::ofstream os = open_out(path);
  os << "ply\nformat ascii 1.0\n";
  os << "element vertex " << bundle.vertices.size() << '\n';
  os << "property double x\nproperty double y\nproperty double z\n";
  os << "element face " << bundle.triangles.size() << '\n';
  os << "property list uchar int vertex_indices\n";
  if (edges > 0) {
    os << "element edge " << edges << '\n';
    os << "property int vertex1\nproperty int vertex2\n";
  }
  os << "end_header\n";
  for (const auto& v : bundle.vertices)
    os << format_double(v[0]) << ' ' << format_double(v[1]) << ' '
       << format_double(v[2]) << '\n';
  for (const auto& t : bundle.triangles)
    os << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  for (const auto& chain : bundle.polylines)
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      os << chain[i] << ' ' << chain[i + 1] << '\n';
}

void write_csv(const std::string& path, const MeshBundle& bundle) {
  const bool proj = bundle.provenance.projection != ProjectionKind::None &&
                    !bundle.vertices.empty();
  std::ofstream os = open_out(path);
  os << "r,theta,x0,x1,x2,x3";
  if (proj) os << ",px,py,pz";
  os << ",region,residual\n";
  for (std::size_t i = 0; i < bundle.points.size(); ++i) {
    const VertexMeta& vm = bundle.meta[i];
    const Point4& p = bundle.points[i];
    os << format_double(vm.r) << ',' << format_double(vm.theta) << ','
       << format_double(p.t) << ',' << format_double(p.x) << ','
       << format_double(p.y) << ',' << format_double(p.z);
    if (proj) {
      const auto& v = bundle.vertices[i];
      os << ',' << format_double(v[0]) << ',' << format_double(v[1]) << ','
         << format_double(v[2]);
    }
    os << ',' << (vm.region ? region_name(*vm.region) : "-") << ','
       << format_double(vm.residual) << '\n';
  }
}

void write_csv(const std::string& path, const Polyline& line) {
  std::ofstream os = open_out(path);
  if (!line.points3.empty()) {
    os << "x,y,z\n";
    for (const auto& v : line.points3)
      os << format_double(v[0]) << ',' << format_double(v[1]) << ','
         << format_double(v[2]) << '\n';
  } else {
    os << "x0,x1,x2,x3\n";
    for (const auto& p : line.points4)
      os << format_double(p.t) << ',' << format_double(p.x) << ','
         << format_double(p.y) << ',' << format_double(p.z) << '\n';
  }
}

void write_meta_json(const std::string& path, const RunConfig& config,
                     const std::vector<std::string>& emitted_files) {
  nlohmann::ordered_json j;
  j["config"] = config_json(config);
  j["version"] = kVersion;
  nlohmann::ordered_json files = nlohmann::ordered_json::array();
  for (const std::string& f : emitted_files) {
    std::ifstream is(f, std::ios::binary | std::ios::ate);
    if (!is) throw std::runtime_error("cannot checksum missing file: " + f);
    const auto bytes = static_cast<std::uint64_t>(is.tellg());
    char hex[32];
    std::snprintf(hex, sizeof(hex), "%016llx",
                  static_cast<unsigned long long>(fnv1a64_file(f)));
    nlohmann::ordered_json entry;
    // Record the basename only so moving the output directory keeps the
    // metadata valid.
    const std::size_t slash = f.find_last_of('/');
    entry["name"] = slash == std::string::npos ? f : f.substr(slash + 1);
    entry["bytes"] = bytes;
    entry["fnv1a64"] = hex;
    files.push_back(entry);
  }
  j["files"] = files;
  std::ofstream os = open_out(path);
  os << j.dump(2) << '\n';
}

std::uint64_t fnv1a64_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open for checksum: " + path);
  std::uint64_t h = 1469598103934665603ull;
  char buf[4096];
  while (is.read(buf, sizeof(buf)) || is.gcount() > 0) {
    const std::streamsize n = is.gcount();
    for (std::streamsize i = 0; i < n; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ull;
    }
    if (!is) break;
  }
  return h;
}

}  // namespace descat
