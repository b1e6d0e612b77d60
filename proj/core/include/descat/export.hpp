#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "descat/mesh.hpp"

namespace descat {

// All writers are deterministic: fixed column order, floats at 9 significant
// digits, no timestamps. Meshes with projection = None can only go to CSV.

void write_obj(const std::string& path, const MeshBundle& bundle);
void write_obj(const std::string& path, const Polyline& line);
void write_ply(const std::string& path, const MeshBundle& bundle);
// Header: r,theta,x0,x1,x2,x3[,px,py,pz],region,residual
void write_csv(const std::string& path, const MeshBundle& bundle);
// Header: x,y,z for projected/planar curves, x0,x1,x2,x3 otherwise.
void write_csv(const std::string& path, const Polyline& line);
// {"config": ..., "version": ..., "files": [{"name","bytes","fnv1a64"}]}
void write_meta_json(const std::string& path, const RunConfig& config,
                     const std::vector<std::string>& emitted_files);

std::uint64_t fnv1a64_file(const std::string& path);
std::string format_double(double v);  // shortest round-trip of 9 significant digits

}  // namespace descat
