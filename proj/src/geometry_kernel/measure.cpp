#include "funcbody/errors.hpp"
#include "funcbody/geometry_kernel.hpp"
#include "hull.hpp"

#include <algorithm>
#include <cmath>

namespace funcbody {

namespace {

bool same_direction(const Vector& a, const Vector& b) { return (a - b).norm() <= kAngularTol; }

}  // namespace

DiscreteSphericalMeasure::DiscreteSphericalMeasure(std::vector<Atom> atoms, int dim) : dim_(dim) {
  for (const auto& a : atoms) {
    if (dim_ < 0) dim_ = static_cast<int>(a.direction.size());
    if (a.direction.size() != dim_) throw InvalidArgument("atom dimension mismatch");
    if (!a.direction.allFinite() || !std::isfinite(a.weight)) {
      throw InvalidArgument("non-finite atom");
    }
    if (std::abs(a.direction.norm() - 1.0) > 1e-12) throw InvalidArgument("atom direction not unit");
    if (a.weight < 0.0) throw InvalidArgument("negative atom weight");
  }
  std::stable_sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
    return detail::lex_less(a.direction, b.direction, kAngularTol);
  });
  for (auto& a : atoms) {
    if (a.weight == 0.0) continue;
    auto it = std::find_if(atoms_.begin(), atoms_.end(),
                           [&](const Atom& r) { return same_direction(r.direction, a.direction); });
    if (it == atoms_.end()) {
      atoms_.push_back(std::move(a));
    } else {
      it->weight += a.weight;
    }
  }
}

double DiscreteSphericalMeasure::total_mass() const {
  double m = 0.0;
  for (const auto& a : atoms_) m += a.weight;
  return m;
}

Vector DiscreteSphericalMeasure::first_moment() const {
  Vector m = Vector::Zero(std::max(dim_, 0));
  for (const auto& a : atoms_) m += a.weight * a.direction;
  return m;
}

double DiscreteSphericalMeasure::weight_at(const Vector& direction) const {
  for (const auto& a : atoms_) {
    if (a.direction.size() == direction.size() && same_direction(a.direction, direction)) {
      return a.weight;
    }
  }
  return 0.0;
}

DiscreteSphericalMeasure DiscreteSphericalMeasure::scaled(double factor) const {
  if (factor < 0.0) throw InvalidArgument("negative measure scale");
  std::vector<Atom> out = atoms_;
  for (auto& a : out) a.weight *= factor;
  return DiscreteSphericalMeasure(std::move(out), dim_);
}

DiscreteSphericalMeasure DiscreteSphericalMeasure::reflected() const {
  std::vector<Atom> out = atoms_;
  for (auto& a : out) a.direction = -a.direction;
  return DiscreteSphericalMeasure(std::move(out), dim_);
}

DiscreteSphericalMeasure DiscreteSphericalMeasure::plus(const DiscreteSphericalMeasure& other) const {
  if (empty()) return other;
  if (other.empty()) return *this;
  if (other.dim_ != dim_) throw InvalidArgument("measure dimension mismatch");
  std::vector<Atom> out = atoms_;
  out.insert(out.end(), other.atoms_.begin(), other.atoms_.end());
  return DiscreteSphericalMeasure(std::move(out), dim_);
}

DiscreteSphericalMeasure DiscreteSphericalMeasure::symmetrized() const {
  std::vector<char> used(atoms_.size(), 0);
  std::vector<Atom> out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (used[i]) continue;
    used[i] = 1;
    double partner = 0.0;
    for (std::size_t j = i + 1; j < atoms_.size(); ++j) {
      if (!used[j] && same_direction(atoms_[j].direction, -atoms_[i].direction)) {
        partner = atoms_[j].weight;
        used[j] = 1;
        break;
      }
    }
    const double w = 0.5 * (atoms_[i].weight + partner);
    out.push_back({atoms_[i].direction, w});
    out.push_back({-atoms_[i].direction, w});
  }
  return DiscreteSphericalMeasure(std::move(out), dim_);
}

DiscreteSphericalMeasure surface_area_measure(const Polytope& p) {
  const int n = p.ambient_dim();
  const int d = p.affine_dim();
  if (d <= n - 2) throw GeometryError("measure not defined below dimension n-1");
  if (d == n - 1) {
    const Vector w = detail::canonical_sign(p.normal_space().col(0));
    const double area = affine_volume(p);
    return DiscreteSphericalMeasure({{w, area}, {-w, area}}, n);
  }
  std::vector<Atom> atoms;
  const auto& local = p.local_vertices();
  const double tol = kCoordTol * detail::coordinate_scale(p.vertices());
  for (const auto& f : p.facets()) {
    double area = 1.0;
    if (n > 1) {
      const Matrix basis = detail::complement_basis(f.normal);
      std::vector<Vector> pts;
      for (int j : f.vertices) pts.push_back(basis.transpose() * local[j]);
      area = detail::volume_full(pts, tol);
    }
    atoms.push_back({f.normal, area});
  }
  return DiscreteSphericalMeasure(std::move(atoms), n);
}

DiscreteSphericalMeasure boundary_measure(const Polytope& p) {
  if (p.affine_dim() <= p.ambient_dim() - 2) return DiscreteSphericalMeasure({}, p.ambient_dim());
  return surface_area_measure(p);
}

double cosine_transform(const DiscreteSphericalMeasure& measure, const Vector& z) {
  double s = 0.0;
  for (const auto& a : measure.atoms()) {
    if (a.direction.size() != z.size()) throw InvalidArgument("dimension mismatch");
    s += a.weight * std::abs(a.direction.dot(z));
  }
  return s;
}

}  // namespace funcbody
