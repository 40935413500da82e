#include "funcbody/errors.hpp"
#include "funcbody/geometry_kernel.hpp"

#include <cmath>
#include <random>

namespace funcbody {

SupportBody::SupportBody(std::vector<Vector> directions, std::vector<double> values,
                         std::string provenance)
    : directions_(std::move(directions)), values_(std::move(values)),
      provenance_(std::move(provenance)) {
  if (directions_.size() != values_.size()) {
    throw InvalidArgument("support body needs one value per direction");
  }
}

SublinearityCertificate SupportBody::certify(double tol) const {
  SublinearityCertificate cert;
  const std::size_t m = directions_.size();
  std::vector<Vector> unit(m);
  std::vector<double> h(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double len = directions_[i].norm();
    unit[i] = len > 0 ? Vector(directions_[i] / len) : directions_[i];
    h[i] = len > 0 ? values_[i] / len : 0.0;
    if (h[i] < -tol) cert.nonnegative = false;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Vector s = unit[i] + unit[j];
      const double len = s.norm();
      double violation = 0.0;
      if (len < 1e-12) {
        violation = -(h[i] + h[j]);
      } else {
        const Vector u = s / len;
        std::size_t k = 0;
        while (k < m && (unit[k] - u).norm() > 1e-9) ++k;
        if (k == m) continue;
        violation = len * h[k] - h[i] - h[j];
      }
      ++cert.checked_pairs;
      cert.max_violation = std::max(cert.max_violation, violation);
    }
  }
  cert.sublinear = cert.max_violation <= tol;
  return cert;
}

SupportBody SupportBody::scaled(double factor) const {
  std::vector<double> v = values_;
  for (auto& x : v) x *= factor;
  return SupportBody(directions_, std::move(v), provenance_);
}

SupportBody support_body(const Polytope& p, const std::vector<Vector>& directions,
                         std::string provenance) {
  std::vector<double> values;
  values.reserve(directions.size());
  for (const auto& z : directions) values.push_back(support(p, z));
  return SupportBody(directions, std::move(values), std::move(provenance));
}

SupportBody moment_body(const Polytope& p, const std::vector<Vector>& directions) {
  std::vector<double> values;
  values.reserve(directions.size());
  for (const auto& z : directions) values.push_back(moment_body_support(p, z));
  return SupportBody(directions, std::move(values), "moment body");
}

std::vector<Vector> direction_set(int n, std::uint64_t seed, int random_count) {
  std::vector<Vector> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(unit_vector(n, i));
    out.push_back(-unit_vector(n, i));
  }
  const double r = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          Vector v = Vector::Zero(n);
          v[i] = si * r;
          v[j] = sj * r;
          out.push_back(v);
        }
      }
    }
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int k = 0; k < random_count; ++k) {
    Vector v(n);
    do {
      for (int i = 0; i < n; ++i) v[i] = gauss(rng);
    } while (v.norm() < 1e-6);
    out.push_back(v.normalized());
  }
  return out;
}

}  // namespace funcbody
