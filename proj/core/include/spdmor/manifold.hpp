#pragma once

#include "spdmor/matlib.hpp"

namespace spdmor {

/// A point on the manifold of symmetric positive definite matrices, with its
/// eigendecomposition, inverse, and square-root factors cached at construction.
///
/// Construction from arbitrary input applies the relative SPD acceptance
/// check of matlib. Points produced by the exponential map are positive
/// definite by construction (congruence of a positive diagonal); for them only
/// strict positivity of the computed spectrum is asserted, since huge geodesic
/// steps legitimately produce eigenvalue ratios beyond the relative tolerance.
class SpdPoint {
 public:
  explicit SpdPoint(Matrix s);

  struct GeodesicResultTag {};
  SpdPoint(Matrix s, GeodesicResultTag);

  Index size() const { return s_.rows(); }
  const Matrix& matrix() const { return s_; }
  const SymEig& eig() const { return eig_; }
  const Matrix& inverse() const { return inv_; }
  const Matrix& sqrt() const { return sqrt_; }
  const Matrix& inv_sqrt() const { return inv_sqrt_; }

 private:
  void build_factors();

  Matrix s_;
  SymEig eig_;
  Matrix inv_, sqrt_, inv_sqrt_;
};

/// Point on M = Sym_+(r) x R^{r x m} x R^{p x r}, or on the reduced manifold
/// without the output factor (c_r empty) used for gradient systems.
struct ProductPoint {
  SpdPoint a_r;
  Matrix b_r;
  Matrix c_r;

  ProductPoint(SpdPoint a, Matrix b, Matrix c = Matrix())
      : a_r(std::move(a)), b_r(std::move(b)), c_r(std::move(c)) {}
  ProductPoint(Matrix a, Matrix b, Matrix c = Matrix())
      : a_r(std::move(a)), b_r(std::move(b)), c_r(std::move(c)) {}

  bool has_output_factor() const { return c_r.size() != 0; }
  Index order() const { return a_r.size(); }
};

/// Tangent vector (xi, eta, zeta) with xi symmetric; zeta is empty for points
/// without an output factor.
struct ProductTangent {
  Matrix xi;
  Matrix eta;
  Matrix zeta;

  ProductTangent() = default;
  ProductTangent(Matrix xi_, Matrix eta_, Matrix zeta_ = Matrix())
      : xi(std::move(xi_)), eta(std::move(eta_)), zeta(std::move(zeta_)) {}

  static ProductTangent zero_like(const ProductPoint& pt);

  ProductTangent& operator+=(const ProductTangent& o);
  ProductTangent& operator-=(const ProductTangent& o);
  ProductTangent& operator*=(double s);
};

ProductTangent operator+(ProductTangent a, const ProductTangent& b);
ProductTangent operator-(ProductTangent a, const ProductTangent& b);
ProductTangent operator*(double s, ProductTangent t);
ProductTangent operator-(ProductTangent t);

/// Affine-invariant metric tr(S^{-1} xi1 S^{-1} xi2).
double spd_inner(const SpdPoint& s, const Matrix& xi1, const Matrix& xi2);

/// Exponential map S^{1/2} exp(S^{-1/2} xi S^{-1/2}) S^{1/2}; defined (and
/// SPD) for every symmetric xi.
SpdPoint spd_exp(const SpdPoint& s, const Matrix& xi);

/// Euclidean-to-Riemannian gradient conversion S sym(eucl_grad) S.
Matrix spd_grad_from_euclidean(const SpdPoint& s, const Matrix& eucl_grad);

/// Riemannian Hessian action from Euclidean data:
///   S sym(D grad[xi]) S + sym(xi sym(eucl_grad) S),
/// where eucl_grad_dderiv is the directional derivative of the Euclidean
/// gradient along xi, supplied by the caller.
Matrix spd_hess_from_euclidean(const SpdPoint& s, const Matrix& eucl_grad,
                               const Matrix& eucl_grad_dderiv, const Matrix& xi);

/// Product metric: SPD term plus Frobenius terms of the Euclidean factors.
double product_inner(const ProductPoint& pt, const ProductTangent& t1, const ProductTangent& t2);

ProductPoint product_exp(const ProductPoint& pt, const ProductTangent& t);

double product_norm(const ProductPoint& pt, const ProductTangent& t);

/// Total dimension of the tangent space at pt: r(r+1)/2 + r m (+ p r).
Index manifold_dimension(const ProductPoint& pt);

}  // namespace spdmor
