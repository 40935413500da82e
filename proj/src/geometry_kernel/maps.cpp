#include "funcbody/errors.hpp"
#include "funcbody/geometry_kernel.hpp"

#include <cmath>

namespace funcbody {

UnimodularMap::UnimodularMap(Matrix matrix, Kind kind) : matrix_(std::move(matrix)), kind_(kind) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1) {
    throw InvalidArgument("map must be square");
  }
  if (!matrix_.allFinite()) throw InvalidArgument("non-finite map entry");
  det_ = matrix_.determinant();
  Eigen::FullPivLU<Matrix> lu(matrix_);
  if (!lu.isInvertible() || std::abs(det_) < 1e-14) throw InvalidArgument("singular map");
  if (kind_ == Kind::SpecialLinear && std::abs(det_ - 1.0) > 1e-12) {
    throw InvalidArgument("special linear map must have determinant 1");
  }
  inverse_ = lu.inverse();
}

UnimodularMap UnimodularMap::identity(int n) {
  return UnimodularMap(Matrix::Identity(n, n), Kind::SpecialLinear);
}

UnimodularMap UnimodularMap::after(const UnimodularMap& inner) const {
  if (inner.dim() != dim()) throw InvalidArgument("dimension mismatch");
  const Matrix product = matrix_ * inner.matrix_;
  const bool special = kind_ == Kind::SpecialLinear && inner.kind_ == Kind::SpecialLinear &&
                       std::abs(product.determinant() - 1.0) <= 1e-12;
  return UnimodularMap(product, special ? Kind::SpecialLinear : Kind::GeneralLinear);
}

}  // namespace funcbody
