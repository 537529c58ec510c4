#pragma once

#include <map>
#include <string>

#include "curvata/complex.hpp"

namespace curvata {

// Line-based complex file: `simplex v1 ... vk` declares a maximal simplex,
// `length u v p/q` an edge length, `default_length p/q` the fallback for
// unassigned edges, `#` a comment.
LengthComplex parse_length_complex(const std::string& text);
SimplicialComplex parse_complex(const std::string& text);

// `map d_vertex x_vertex` lines.
std::map<Vertex, Vertex> parse_vertex_map(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace curvata
