#pragma once

// Polytope geometry in dimensions 1-4: hulls, support functions, Minkowski
// sums, surface area measures and the classical body-valued operators
// (projection body, difference body, moment body, moment vector).
//
// All values are immutable after construction. Floating point throughout;
// coordinates are compared with an absolute tolerance of 1e-10 scaled by the
// magnitude of the input.

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace funcbody {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline constexpr double kCoordTol = 1e-10;
inline constexpr double kAngularTol = 1e-10;
inline constexpr int kMaxDim = 4;

/// Halfspace {x : normal . x <= offset}.
struct Halfspace {
  Vector normal;
  double offset = 0.0;
};

// ---------------------------------------------------------------------------

/// Invertible linear map, optionally flagged as volume preserving.
class UnimodularMap {
 public:
  enum class Kind { GeneralLinear, SpecialLinear };

  /// Throws InvalidArgument on a singular matrix, or when `kind` is
  /// SpecialLinear and |det - 1| > 1e-12.
  explicit UnimodularMap(Matrix matrix, Kind kind = Kind::GeneralLinear);

  static UnimodularMap identity(int n);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  Kind kind() const { return kind_; }
  const Matrix& matrix() const { return matrix_; }
  const Matrix& inverse() const { return inverse_; }
  Matrix inverse_transpose() const { return inverse_.transpose(); }
  double determinant() const { return det_; }

  Vector apply(const Vector& x) const { return matrix_ * x; }

  /// (*this) o inner, i.e. x -> this(inner(x)).
  UnimodularMap after(const UnimodularMap& inner) const;

 private:
  Matrix matrix_;
  Matrix inverse_;
  double det_ = 1.0;
  Kind kind_;
};

// ---------------------------------------------------------------------------

/// Facet of a full-dimensional polytope: outer unit normal, offset and the
/// indices of the vertices lying on it.
struct Facet {
  Vector normal;
  double offset = 0.0;
  std::vector<int> vertices;
};

/// Convex polytope in V-representation.
///
/// The vertex list is canonical: extreme points only, deduplicated and sorted
/// lexicographically, so equal point sets serialize identically. Polytopes of
/// lower affine dimension keep an orthonormal frame of their affine hull and
/// their facets relative to that frame.
class Polytope {
 public:
  int ambient_dim() const { return ambient_dim_; }
  int affine_dim() const { return affine_dim_; }
  bool full_dimensional() const { return affine_dim_ == ambient_dim_; }

  const std::vector<Vector>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  /// Facets in ambient coordinates. Only meaningful when full dimensional;
  /// for lower dimensional polytopes these are the relative facets lifted
  /// into the affine hull.
  std::vector<Facet> facets() const;

  /// H-representation. A lower dimensional polytope additionally carries
  /// pairs of opposite halfspaces cutting out its affine hull.
  std::vector<Halfspace> halfspaces() const;

  /// Orthonormal basis (columns) of the directions orthogonal to the affine
  /// hull. Empty (n x 0) when full dimensional.
  const Matrix& normal_space() const { return complement_; }

  bool contains(const Vector& x, double tol = 1e-9) const;
  Vector vertex_centroid() const;

  // Frame data, used by the measure routines.
  const Vector& frame_origin() const { return origin_; }
  const Matrix& frame_basis() const { return basis_; }
  const std::vector<Vector>& local_vertices() const { return local_vertices_; }
  const std::vector<Facet>& local_facets() const { return local_facets_; }

 private:
  friend Polytope convex_hull(const std::vector<Vector>& points);

  int ambient_dim_ = 0;
  int affine_dim_ = 0;
  std::vector<Vector> vertices_;
  Vector origin_;
  Matrix basis_;       // n x d
  Matrix complement_;  // n x (n - d)
  std::vector<Vector> local_vertices_;
  std::vector<Facet> local_facets_;
};

/// Canonical V-representation of conv(points). Throws InvalidArgument on an
/// empty set ("empty point set") or mixed dimensions.
Polytope convex_hull(const std::vector<Vector>& points);

double support(const Polytope& p, const Vector& z);
Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope linear_image(const Polytope& p, const UnimodularMap& phi);
Polytope linear_image(const Polytope& p, const Matrix& m);
Polytope translate(const Polytope& p, const Vector& x);
Polytope reflect(const Polytope& p);
Polytope scale(const Polytope& p, double factor);
Polytope point_polytope(const Vector& x);

/// Standard polytopes used throughout the tests and the CLI.
Polytope unit_cube(int n);                 // [0,1]^n
Polytope centered_cube(int n);             // [-1,1]^n
Polytope cross_polytope(int n);            // conv{+-e_i}
Polytope standard_simplex(int n);          // conv{0, e_1, ..., e_n}
Polytope stretched_simplex(int n, double s);  // conv{0, s e_1, e_2, ..., e_n}

/// n-dimensional volume; zero for lower dimensional polytopes.
double volume(const Polytope& p);
/// Volume inside the affine hull (k-dimensional Hausdorff measure, k = affine
/// dimension). A point has measure 1.
double affine_volume(const Polytope& p);

/// Fan triangulation from the vertex centroid; each simplex is a list of
/// affine_dim + 1 ambient points. Full dimensional polytopes only.
std::vector<std::vector<Vector>> triangulate(const Polytope& p);

/// Orthogonal projection onto span(basis), in the coordinates of the given
/// orthonormal basis (the result lives in R^k, k = basis.size()).
Polytope subspace_projection(const Polytope& p, const std::vector<Vector>& basis);
/// Orthonormal basis of z^perp.
std::vector<Vector> orthogonal_complement(const Vector& z);

/// Euclidean distance from x to the polytope (minimum norm point).
double distance(const Polytope& p, const Vector& x);
double hausdorff_distance(const Polytope& p, const Polytope& q);

// ---------------------------------------------------------------------------

struct Atom {
  Vector direction;
  double weight = 0.0;
};

/// Finite measure on the unit sphere: a list of weighted unit directions.
/// Construction canonicalizes: atoms closer than 1e-10 in angle are merged
/// and the list is sorted lexicographically by direction.
class DiscreteSphericalMeasure {
 public:
  DiscreteSphericalMeasure() = default;
  /// Throws InvalidArgument for non-unit directions (1e-12) or negative
  /// weights. Zero-weight atoms are dropped.
  explicit DiscreteSphericalMeasure(std::vector<Atom> atoms, int dim = -1);

  int dim() const { return dim_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }

  double total_mass() const;
  /// sum_i w_i n_i, zero for surface area measures of closed bodies.
  Vector first_moment() const;
  /// Weight of the atom at `direction` (0 if absent).
  double weight_at(const Vector& direction) const;

  DiscreteSphericalMeasure scaled(double factor) const;
  /// Image under the antipodal map.
  DiscreteSphericalMeasure reflected() const;
  /// Measure addition (the Blaschke sum of the underlying bodies).
  DiscreteSphericalMeasure plus(const DiscreteSphericalMeasure& other) const;
  /// (mu + mu reflected) / 2 with exactly equal weights on antipodal pairs.
  DiscreteSphericalMeasure symmetrized() const;

 private:
  int dim_ = -1;
  std::vector<Atom> atoms_;
};

/// Surface area measure. Full dimensional P: one atom per facet. When P has
/// affine dimension n-1 with unit normal w, the two atoms (w, V_{n-1}(P)) and
/// (-w, V_{n-1}(P)). Throws GeometryError below dimension n-1.
DiscreteSphericalMeasure surface_area_measure(const Polytope& p);
/// As surface_area_measure, but the zero measure below dimension n-1 (used
/// inside level-set integrals, where such sets are null).
DiscreteSphericalMeasure boundary_measure(const Polytope& p);

/// sum_i w_i |n_i . z|.
double cosine_transform(const DiscreteSphericalMeasure& measure, const Vector& z);

/// Projection body as the zonotope sum_i [-w_i n_i / 2, w_i n_i / 2].
Polytope projection_body(const Polytope& p);
/// h(Pi P, z) = cosine_transform(S(P), z) / 2 without building the zonotope.
double projection_body_support(const Polytope& p, const Vector& z);

Polytope difference_body(const Polytope& p);
Vector moment_vector(const Polytope& p);
/// h(M P, z) = int_P |x . z| dx, exact via the triangulation split by z^perp.
double moment_body_support(const Polytope& p, const Vector& z);

// ---------------------------------------------------------------------------

struct SublinearityCertificate {
  bool sublinear = true;
  double max_violation = 0.0;
  int checked_pairs = 0;
  bool nonnegative = true;
};

/// Body known only through its support function on a set of directions.
class SupportBody {
 public:
  SupportBody() = default;
  SupportBody(std::vector<Vector> directions, std::vector<double> values,
              std::string provenance);

  const std::vector<Vector>& directions() const { return directions_; }
  const std::vector<double>& values() const { return values_; }
  const std::string& provenance() const { return provenance_; }
  std::size_t size() const { return values_.size(); }

  /// Checks h(z_i + z_j) <= h(z_i) + h(z_j) whenever the normalized sum is
  /// itself a sampled direction (and h(z) + h(-z) >= 0 for antipodal pairs).
  SublinearityCertificate certify(double tol = 1e-9) const;

  SupportBody scaled(double factor) const;

 private:
  std::vector<Vector> directions_;
  std::vector<double> values_;
  std::string provenance_;
};

SupportBody support_body(const Polytope& p, const std::vector<Vector>& directions,
                         std::string provenance = "polytope");
SupportBody moment_body(const Polytope& p, const std::vector<Vector>& directions);

/// The default direction set: +-e_i, the normalized +-e_i +-e_j, then
/// `random_count` pseudorandom unit vectors drawn from `seed`.
std::vector<Vector> direction_set(int n, std::uint64_t seed = 0x5EED, int random_count = 64);

/// Vector with 1 in coordinate i.
Vector unit_vector(int n, int i);

/// OFF mesh (vertices + oriented facet loops) of a full-dimensional 3D polytope.
void write_off(const Polytope& p, std::ostream& out);

}  // namespace funcbody
