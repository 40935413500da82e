#pragma once

// Internal hull machinery shared by the geometry kernel translation units.
// Everything here works on full-dimensional point sets given in local
// coordinates (R^d, 1 <= d <= 4).

#include "funcbody/geometry_kernel.hpp"

#include <vector>

namespace funcbody::detail {

struct LocalHull {
  std::vector<int> extreme;    // indices into the input, unsorted
  std::vector<Facet> facets;   // vertex ids index the input
};

double coordinate_scale(const std::vector<Vector>& points);

/// Drops points within `tol` (max norm) of an earlier point.
std::vector<Vector> dedupe(const std::vector<Vector>& points, double tol);

bool lex_less(const Vector& a, const Vector& b, double tol);

/// Hull of a full-dimensional set in R^d. `eps` is the plane-side tolerance.
LocalHull hull_full(const std::vector<Vector>& points, double eps);

/// Fan triangulation from the centroid of the extreme points, recursing
/// through the facets. Each simplex holds d + 1 points of R^d.
std::vector<std::vector<Vector>> fan_simplices(const std::vector<Vector>& points,
                                               const LocalHull& hull, double eps);

/// |det(v_1 - v_0, ..., v_d - v_0)| / d!
double simplex_volume(const std::vector<Vector>& simplex);

/// d volume of a full-dimensional point set of R^d.
double volume_full(const std::vector<Vector>& points, double eps);

/// Orthonormal basis (d x (d-1)) of the complement of a unit normal.
Matrix complement_basis(const Vector& normal);

struct AffineFrame {
  int dim = 0;
  Vector origin;
  Matrix basis;       // n x dim
  Matrix complement;  // n x (n - dim)
};

AffineFrame affine_frame(const std::vector<Vector>& points, double tol);

/// Vector orthogonal to the d-1 rows of `rows` (generalized cross product).
Vector null_vector(const std::vector<Vector>& rows);

/// Flips v such that its first coordinate above 1e-12 in magnitude is positive.
Vector canonical_sign(const Vector& v);

}  // namespace funcbody::detail
