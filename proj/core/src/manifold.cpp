#include "spdmor/manifold.hpp"

#include <cmath>
#include <string>

namespace spdmor {

namespace {

void require_tangent_shapes(const ProductPoint& pt, const ProductTangent& t, const char* what) {
  const Index r = pt.order();
  if (t.xi.rows() != r || t.xi.cols() != r || t.eta.rows() != pt.b_r.rows() ||
      t.eta.cols() != pt.b_r.cols() || t.zeta.rows() != pt.c_r.rows() ||
      t.zeta.cols() != pt.c_r.cols()) {
    throw std::invalid_argument(std::string(what) + ": tangent shape does not match point");
  }
}

}  // namespace

void SpdPoint::build_factors() {
  inv_ = eig_.apply([](double l) { return 1.0 / l; });
  sqrt_ = eig_.apply([](double l) { return std::sqrt(l); });
  inv_sqrt_ = eig_.apply([](double l) { return 1.0 / std::sqrt(l); });
}

SpdPoint::SpdPoint(Matrix s) : s_(require_symmetric(s, "SpdPoint")) {
  eig_ = sym_eig(s_);
  if (!eig_.spd()) {
    throw NotPositiveDefinite("SpdPoint: matrix is not positive definite (lambda_min=" +
                              std::to_string(eig_.eigenvalues(0)) + ")");
  }
  build_factors();
}

SpdPoint::SpdPoint(Matrix s, GeodesicResultTag) : s_(std::move(s)) {
  eig_ = sym_eig(s_);
  if (eig_.eigenvalues(0) <= 0.0) {
    throw NotPositiveDefinite("exponential map produced a non-positive spectrum (lambda_min=" +
                              std::to_string(eig_.eigenvalues(0)) + "); kernel bug");
  }
  build_factors();
}

ProductTangent ProductTangent::zero_like(const ProductPoint& pt) {
  ProductTangent t;
  t.xi = Matrix::Zero(pt.order(), pt.order());
  t.eta = Matrix::Zero(pt.b_r.rows(), pt.b_r.cols());
  t.zeta = Matrix::Zero(pt.c_r.rows(), pt.c_r.cols());
  return t;
}

ProductTangent& ProductTangent::operator+=(const ProductTangent& o) {
  xi += o.xi;
  eta += o.eta;
  zeta += o.zeta;
  return *this;
}

ProductTangent& ProductTangent::operator-=(const ProductTangent& o) {
  xi -= o.xi;
  eta -= o.eta;
  zeta -= o.zeta;
  return *this;
}

ProductTangent& ProductTangent::operator*=(double s) {
  xi *= s;
  eta *= s;
  zeta *= s;
  return *this;
}

ProductTangent operator+(ProductTangent a, const ProductTangent& b) { return a += b; }
ProductTangent operator-(ProductTangent a, const ProductTangent& b) { return a -= b; }
ProductTangent operator*(double s, ProductTangent t) { return t *= s; }
ProductTangent operator-(ProductTangent t) { return t *= -1.0; }

double spd_inner(const SpdPoint& s, const Matrix& xi1, const Matrix& xi2) {
  const Matrix u = s.inverse() * require_symmetric(xi1, "spd_inner xi1");
  const Matrix v = s.inverse() * require_symmetric(xi2, "spd_inner xi2");
  return (u.array() * v.transpose().array()).sum();  // tr(U V)
}

SpdPoint spd_exp(const SpdPoint& s, const Matrix& xi) {
  const Matrix xs = require_symmetric(xi, "spd_exp xi");
  const Matrix arg = sym(s.inv_sqrt() * xs * s.inv_sqrt());
  const Matrix e = sym_exp(arg);
  return SpdPoint(sym(s.sqrt() * e * s.sqrt()), SpdPoint::GeodesicResultTag{});
}

Matrix spd_grad_from_euclidean(const SpdPoint& s, const Matrix& eucl_grad) {
  if (eucl_grad.rows() != s.size() || eucl_grad.cols() != s.size()) {
    throw std::invalid_argument("spd_grad_from_euclidean: shape mismatch");
  }
  return sym(s.matrix() * sym(eucl_grad) * s.matrix());
}

Matrix spd_hess_from_euclidean(const SpdPoint& s, const Matrix& eucl_grad,
                               const Matrix& eucl_grad_dderiv, const Matrix& xi) {
  if (eucl_grad.rows() != s.size() || eucl_grad_dderiv.rows() != s.size() ||
      xi.rows() != s.size()) {
    throw std::invalid_argument("spd_hess_from_euclidean: shape mismatch");
  }
  const Matrix xs = require_symmetric(xi, "spd_hess xi");
  return sym(s.matrix() * sym(eucl_grad_dderiv) * s.matrix()) +
         sym(xs * sym(eucl_grad) * s.matrix());
}

double product_inner(const ProductPoint& pt, const ProductTangent& t1, const ProductTangent& t2) {
  require_tangent_shapes(pt, t1, "product_inner");
  require_tangent_shapes(pt, t2, "product_inner");
  double v = spd_inner(pt.a_r, t1.xi, t2.xi) + frobenius_inner(t1.eta, t2.eta);
  if (pt.has_output_factor()) v += frobenius_inner(t1.zeta, t2.zeta);
  return v;
}

ProductPoint product_exp(const ProductPoint& pt, const ProductTangent& t) {
  require_tangent_shapes(pt, t, "product_exp");
  return ProductPoint(spd_exp(pt.a_r, t.xi), pt.b_r + t.eta, pt.c_r + t.zeta);
}

double product_norm(const ProductPoint& pt, const ProductTangent& t) {
  return std::sqrt(std::max(product_inner(pt, t, t), 0.0));
}

Index manifold_dimension(const ProductPoint& pt) {
  const Index r = pt.order();
  return r * (r + 1) / 2 + pt.b_r.size() + pt.c_r.size();
}

}  // namespace spdmor
