#include "hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace funcbody::detail {

namespace {

double det3(double a, double b, double c, double d, double e, double f, double g, double h,
            double i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

// Visits every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_combination(int n, int k, F&& f) {
  if (k > n) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

double cross2(const Vector& o, const Vector& a, const Vector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

LocalHull hull_1d(const std::vector<Vector>& pts) {
  int lo = 0, hi = 0;
  for (int i = 1; i < static_cast<int>(pts.size()); ++i) {
    if (pts[i][0] < pts[lo][0]) lo = i;
    if (pts[i][0] > pts[hi][0]) hi = i;
  }
  LocalHull h;
  h.extreme = {lo, hi};
  Vector minus(1), plus(1);
  minus << -1.0;
  plus << 1.0;
  h.facets.push_back({minus, -pts[lo][0], {lo}});
  h.facets.push_back({plus, pts[hi][0], {hi}});
  return h;
}

LocalHull hull_2d(const std::vector<Vector>& pts, double eps) {
  const int n = static_cast<int>(pts.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (pts[a][0] != pts[b][0]) return pts[a][0] < pts[b][0];
    return pts[a][1] < pts[b][1];
  });
  // Andrew's monotone chain, dropping points within eps of the running edge.
  std::vector<int> chain(2 * n);
  int k = 0;
  auto keep_turning = [&](int a, int b, int c) {
    const double len = (pts[c] - pts[a]).norm();
    return cross2(pts[a], pts[b], pts[c]) > eps * std::max(len, 1.0);
  };
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && !keep_turning(chain[k - 2], chain[k - 1], order[i])) --k;
    chain[k++] = order[i];
  }
  for (int i = n - 2, t = k + 1; i >= 0; --i) {
    while (k >= t && !keep_turning(chain[k - 2], chain[k - 1], order[i])) --k;
    chain[k++] = order[i];
  }
  chain.resize(k - 1);

  LocalHull h;
  h.extreme = chain;
  const int m = static_cast<int>(chain.size());
  for (int i = 0; i < m; ++i) {
    const Vector& a = pts[chain[i]];
    const Vector& b = pts[chain[(i + 1) % m]];
    Vector edge = b - a;
    Vector normal(2);
    normal << edge[1], -edge[0];
    normal.normalize();
    h.facets.push_back({normal, normal.dot(a), {chain[i], chain[(i + 1) % m]}});
  }
  return h;
}

// Brute force over d-subsets; each subset spanning a supporting hyperplane
// yields a facet. Subsets whose points all lie on a known facet are skipped.
LocalHull hull_brute(const std::vector<Vector>& pts, double eps) {
  const int n = static_cast<int>(pts.size());
  const int d = static_cast<int>(pts.front().size());
  LocalHull h;
  std::vector<Vector> rows(d - 1);

  for_each_combination(n, d, [&](const std::vector<int>& idx) {
    for (const auto& f : h.facets) {
      bool on = true;
      for (int i : idx) {
        if (std::abs(f.normal.dot(pts[i]) - f.offset) > eps) {
          on = false;
          break;
        }
      }
      if (on) return;
    }
    double row_scale = 1.0;
    for (int k = 1; k < d; ++k) {
      rows[k - 1] = pts[idx[k]] - pts[idx[0]];
      row_scale *= rows[k - 1].norm();
    }
    Vector normal = null_vector(rows);
    const double len = normal.norm();
    if (row_scale == 0.0 || len <= 1e-9 * row_scale) return;
    normal /= len;
    const double off = normal.dot(pts[idx[0]]);
    bool pos = false, neg = false;
    for (int j = 0; j < n && !(pos && neg); ++j) {
      const double dist = normal.dot(pts[j]) - off;
      if (dist > eps) pos = true;
      if (dist < -eps) neg = true;
    }
    if (pos && neg) return;
    if (pos) normal = -normal;

    // Refit the plane through every point lying on it.
    std::vector<int> on_plane;
    for (int j = 0; j < n; ++j) {
      if (std::abs(normal.dot(pts[j] - pts[idx[0]])) <= eps) on_plane.push_back(j);
    }
    Vector centroid = Vector::Zero(d);
    for (int j : on_plane) centroid += pts[j];
    centroid /= static_cast<double>(on_plane.size());
    Matrix centered(on_plane.size(), d);
    for (std::size_t r = 0; r < on_plane.size(); ++r) {
      centered.row(r) = (pts[on_plane[r]] - centroid).transpose();
    }
    Eigen::JacobiSVD<Matrix> svd(centered, Eigen::ComputeFullV);
    Vector refit = svd.matrixV().col(d - 1);
    if (refit.dot(normal) < 0) refit = -refit;
    double offset = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) offset = std::max(offset, refit.dot(pts[j]));
    h.facets.push_back({refit, offset, on_plane});
  });

  // Extreme points are exactly those whose incident facet normals span R^d.
  for (int j = 0; j < n; ++j) {
    std::vector<const Vector*> normals;
    for (const auto& f : h.facets) {
      if (std::find(f.vertices.begin(), f.vertices.end(), j) != f.vertices.end()) {
        normals.push_back(&f.normal);
      }
    }
    if (static_cast<int>(normals.size()) < d) continue;
    Matrix stacked(normals.size(), d);
    for (std::size_t r = 0; r < normals.size(); ++r) stacked.row(r) = normals[r]->transpose();
    Eigen::JacobiSVD<Matrix> svd(stacked);
    if (svd.singularValues()[d - 1] > 1e-7) h.extreme.push_back(j);
  }
  for (auto& f : h.facets) {
    std::vector<int> kept;
    for (int j : f.vertices) {
      if (std::find(h.extreme.begin(), h.extreme.end(), j) != h.extreme.end()) kept.push_back(j);
    }
    f.vertices = std::move(kept);
  }
  return h;
}

}  // namespace

double coordinate_scale(const std::vector<Vector>& points) {
  double s = 1.0;
  for (const auto& p : points) s = std::max(s, p.cwiseAbs().maxCoeff());
  return s;
}

bool lex_less(const Vector& a, const Vector& b, double tol) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return a[i] < b[i];
  }
  return false;
}

std::vector<Vector> dedupe(const std::vector<Vector>& points, double tol) {
  std::vector<int> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return points[a][0] < points[b][0]; });
  std::vector<char> dropped(points.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (dropped[order[i]]) continue;
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const Vector& p = points[order[i]];
      const Vector& q = points[order[j]];
      if (q[0] - p[0] > tol) break;
      if (!dropped[order[j]] && (p - q).cwiseAbs().maxCoeff() <= tol) dropped[order[j]] = 1;
    }
  }
  std::vector<Vector> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!dropped[i]) out.push_back(points[i]);
  }
  return out;
}

Vector null_vector(const std::vector<Vector>& rows) {
  const int d = static_cast<int>(rows.size()) + 1;
  Vector n(d);
  switch (d) {
    case 1:
      n << 1.0;
      break;
    case 2:
      n << -rows[0][1], rows[0][0];
      break;
    case 3:
      n << rows[0][1] * rows[1][2] - rows[0][2] * rows[1][1],
          rows[0][2] * rows[1][0] - rows[0][0] * rows[1][2],
          rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0];
      break;
    case 4: {
      // Cofactors of the 3 x 4 matrix along its columns.
      for (int c = 0; c < 4; ++c) {
        int cols[3];
        for (int k = 0, j = 0; k < 4; ++k) {
          if (k != c) cols[j++] = k;
        }
        const double m = det3(rows[0][cols[0]], rows[0][cols[1]], rows[0][cols[2]],
                              rows[1][cols[0]], rows[1][cols[1]], rows[1][cols[2]],
                              rows[2][cols[0]], rows[2][cols[1]], rows[2][cols[2]]);
        n[c] = (c % 2 == 0) ? m : -m;
      }
      break;
    }
    default: {
      Matrix m(d - 1, d);
      for (int r = 0; r < d - 1; ++r) m.row(r) = rows[r].transpose();
      Eigen::FullPivLU<Matrix> lu(m);
      n = lu.kernel().col(0);
    }
  }
  return n;
}

LocalHull hull_full(const std::vector<Vector>& points, double eps) {
  const int d = static_cast<int>(points.front().size());
  if (d == 1) return hull_1d(points);
  if (d == 2) return hull_2d(points, eps);
  return hull_brute(points, eps);
}

Matrix complement_basis(const Vector& normal) {
  const int d = static_cast<int>(normal.size());
  const Matrix column = normal;
  Eigen::HouseholderQR<Matrix> qr(column);
  Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  return q.rightCols(d - 1);
}

std::vector<std::vector<Vector>> fan_simplices(const std::vector<Vector>& points,
                                               const LocalHull& hull, double eps) {
  const int d = static_cast<int>(points.front().size());
  std::vector<std::vector<Vector>> out;
  if (d == 1) {
    out.push_back({points[hull.extreme[0]], points[hull.extreme[1]]});
    return out;
  }
  Vector apex = Vector::Zero(d);
  for (int i : hull.extreme) apex += points[i];
  apex /= static_cast<double>(hull.extreme.size());

  for (const auto& f : hull.facets) {
    Vector origin = Vector::Zero(d);
    for (int i : f.vertices) origin += points[i];
    origin /= static_cast<double>(f.vertices.size());
    const Matrix basis = complement_basis(f.normal);
    std::vector<Vector> local;
    local.reserve(f.vertices.size());
    for (int i : f.vertices) local.push_back(basis.transpose() * (points[i] - origin));
    const LocalHull sub = hull_full(local, eps);
    for (const auto& s : fan_simplices(local, sub, eps)) {
      std::vector<Vector> simplex;
      simplex.reserve(d + 1);
      for (const auto& y : s) simplex.push_back(origin + basis * y);
      simplex.push_back(apex);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

double simplex_volume(const std::vector<Vector>& simplex) {
  const int d = static_cast<int>(simplex.size()) - 1;
  if (d == 0) return 1.0;
  Matrix m(d, d);
  for (int k = 1; k <= d; ++k) m.col(k - 1) = simplex[k] - simplex[0];
  double fact = 1.0;
  for (int k = 2; k <= d; ++k) fact *= k;
  return std::abs(m.determinant()) / fact;
}

double volume_full(const std::vector<Vector>& points, double eps) {
  const LocalHull hull = hull_full(points, eps);
  double v = 0.0;
  for (const auto& s : fan_simplices(points, hull, eps)) v += simplex_volume(s);
  return v;
}

AffineFrame affine_frame(const std::vector<Vector>& points, double tol) {
  const int n = static_cast<int>(points.front().size());
  Vector c = Vector::Zero(n);
  for (const auto& p : points) c += p;
  c /= static_cast<double>(points.size());
  Matrix centered(points.size(), n);
  for (std::size_t r = 0; r < points.size(); ++r) centered.row(r) = (points[r] - c).transpose();

  AffineFrame frame;
  frame.origin = c;
  if (points.size() == 1) {
    frame.dim = 0;
    frame.basis = Matrix(n, 0);
    frame.complement = Matrix::Identity(n, n);
    return frame;
  }
  Eigen::JacobiSVD<Matrix> svd(centered, Eigen::ComputeFullV);
  const Matrix& v = svd.matrixV();
  int dim = 0;
  while (dim < n && (centered * v.col(dim)).cwiseAbs().maxCoeff() > tol) ++dim;
  frame.dim = dim;
  if (dim == n) {
    frame.origin = Vector::Zero(n);
    frame.basis = Matrix::Identity(n, n);
    frame.complement = Matrix(n, 0);
  } else {
    frame.basis = v.leftCols(dim);
    frame.complement = v.rightCols(n - dim);
  }
  return frame;
}

Vector canonical_sign(const Vector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-12) return v[i] > 0 ? v : Vector(-v);
  }
  return v;
}

}  // namespace funcbody::detail
