#pragma once

#include <map>
#include <string>
#include <vector>

#include "curvata/complex.hpp"

namespace curvata {

struct LengthViolation {
    enum class Kind { EdgeOutOfRange, TriangleSum, TriangleInequality } kind;
    Simplex where; // the offending edge or triangle
    std::string detail;
};

// Every triangle condition and edge range check, reported as data.
std::vector<LengthViolation> validate_length_function(const LengthComplex& x);

Rational vertex_curvature(const LengthComplex& x, const Vertex& v);
Rational face_curvature(const LengthComplex& x, const Simplex& f);

struct CurvatureReport {
    std::map<Vertex, Rational> vertex_curvatures;
    std::map<Simplex, Rational> face_curvatures;
    Rational total;
    Rational euler2;   // 2 * chi(X)
    Rational residual; // total - euler2
};

// Exact audit of the curvature identity on a compact surface (with or
// without boundary). Structural preconditions are enforced: dimension <= 2,
// every edge in at most two triangles, every vertex link a single path or a
// single cycle.
CurvatureReport gauss_bonnet(const LengthComplex& x);

} // namespace curvata
