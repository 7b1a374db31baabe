#pragma once

#include "spdmor/matlib.hpp"
#include "spdmor/workspace.hpp"

namespace spdmor {

/// Stable LTI system
///   x' = -A x + B u,   y = C x
/// with A symmetric positive definite (so -A is Hurwitz). The eigendecomposition
/// of A and tr(C Sigma_c C^T) are computed once at construction and cached; the
/// object is immutable afterwards.
class LtiSystem {
 public:
  LtiSystem(Matrix a, Matrix b, Matrix c);

  Index order() const { return a_.rows(); }        // n
  Index num_inputs() const { return b_.cols(); }   // m
  Index num_outputs() const { return c_.rows(); }  // p

  const Matrix& a() const { return a_; }
  const Matrix& b() const { return b_; }
  const Matrix& c() const { return c_; }
  const SymEig& a_eig() const { return a_eig_; }

  /// ||G||_{H^2}^2 = tr(C Sigma_c C^T), cached.
  double h2_norm_squared() const { return h2sq_; }

 private:
  Matrix a_, b_, c_;
  SymEig a_eig_;
  double h2sq_;
};

/// Reduced triple (A_r, B_r, C_r) with A_r validated SPD, recorded against the
/// order n of the system it approximates (r <= n).
class ReducedSystem {
 public:
  ReducedSystem(Matrix a_r, Matrix b_r, Matrix c_r, Index parent_order);

  Index order() const { return a_r_.rows(); }  // r
  Index parent_order() const { return parent_order_; }
  const Matrix& a_r() const { return a_r_; }
  const Matrix& b_r() const { return b_r_; }
  const Matrix& c_r() const { return c_r_; }

 private:
  Matrix a_r_, b_r_, c_r_;
  Index parent_order_;
};

/// Linear gradient system: x' = -A x + B u, y = B^T x. Stored as (A, B) only;
/// the C = B^T view is materialized on demand.
class GradientSystem {
 public:
  GradientSystem(Matrix a, Matrix b);

  Index order() const { return a_.rows(); }
  Index num_inputs() const { return b_.cols(); }

  const Matrix& a() const { return a_; }
  const Matrix& b() const { return b_; }
  const SymEig& a_eig() const { return a_eig_; }
  double h2_norm_squared() const { return h2sq_; }

  LtiSystem to_lti() const { return LtiSystem(a_, b_, b_.transpose()); }

 private:
  Matrix a_, b_;
  SymEig a_eig_;
  double h2sq_;
};

/// Solution of A S + S A = B B^T.
Matrix controllability_gramian(const LtiSystem& sys);
/// Solution of A S + S A = C^T C.
Matrix observability_gramian(const LtiSystem& sys);

double h2_norm_squared(const LtiSystem& sys);

/// ||G - G_r||_{H^2}^2 via the trace form
///   tr(C Sigma_c C^T) + tr(C_r P C_r^T) - 2 tr(C_r X^T C^T),
/// clamped to zero when cancellation produces a tiny negative value. `ws` must
/// have been solved for exactly this (full, red) pair.
double h2_error_squared(const LtiSystem& full, const ReducedSystem& red,
                        const GramianWorkspace& ws);

/// Same trace form on a raw output matrix; used by the objective evaluation
/// where the reduced triple lives on the manifold. The caller is responsible
/// for the fingerprint check.
double h2_error_squared_from_workspace(const LtiSystem& full, const Matrix& c_r,
                                       const GramianWorkspace& ws);

/// ||G - G_r||_{H^2}^2 for an arbitrary stable reduced realization; A_r need
/// not be symmetric (eigenvalues of -A_r must lie in the open left half
/// plane). Used for balanced-truncation outputs, which leave the SPD cone.
double h2_error_squared_general(const LtiSystem& full, const Matrix& a_r, const Matrix& b_r,
                                const Matrix& c_r);

}  // namespace spdmor
