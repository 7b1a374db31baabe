#include "spdmor/lti.hpp"

#include <cmath>
#include <cstring>
#include <string>

namespace spdmor {

namespace {

void require_dims(const Matrix& a, const Matrix& b, const Matrix& c) {
  if (b.rows() != a.rows()) {
    throw std::invalid_argument("system dimensions inconsistent: B has " +
                                std::to_string(b.rows()) + " rows, A is " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  if (c.cols() != a.rows()) {
    throw std::invalid_argument("system dimensions inconsistent: C has " +
                                std::to_string(c.cols()) + " columns, A is " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  if (!b.allFinite() || !c.allFinite()) {
    throw std::invalid_argument("system matrices contain non-finite entries");
  }
}

SymEig validated_spd_eig(const Matrix& a, const char* what) {
  SymEig eig = sym_eig(a);
  if (!eig.spd()) {
    throw NotPositiveDefinite(std::string(what) + " is not symmetric positive definite");
  }
  return eig;
}

}  // namespace

LtiSystem::LtiSystem(Matrix a, Matrix b, Matrix c)
    : a_(require_symmetric(a, "A")), b_(std::move(b)), c_(std::move(c)) {
  require_dims(a_, b_, c_);
  a_eig_ = validated_spd_eig(a_, "A");
  const Matrix sc = solve_lyapunov_sym(a_eig_, b_ * b_.transpose());
  h2sq_ = (c_ * sc * c_.transpose()).trace();
}

ReducedSystem::ReducedSystem(Matrix a_r, Matrix b_r, Matrix c_r, Index parent_order)
    : a_r_(require_symmetric(a_r, "A_r")),
      b_r_(std::move(b_r)),
      c_r_(std::move(c_r)),
      parent_order_(parent_order) {
  require_dims(a_r_, b_r_, c_r_);
  if (a_r_.rows() < 1 || a_r_.rows() > parent_order_) {
    throw std::invalid_argument("reduced order must satisfy 1 <= r <= n");
  }
  validated_spd_eig(a_r_, "A_r");
}

GradientSystem::GradientSystem(Matrix a, Matrix b)
    : a_(require_symmetric(a, "A")), b_(std::move(b)) {
  if (b_.rows() != a_.rows()) {
    throw std::invalid_argument("gradient system: B row count must match A");
  }
  if (!b_.allFinite()) {
    throw std::invalid_argument("gradient system: B contains non-finite entries");
  }
  a_eig_ = validated_spd_eig(a_, "A");
  const Matrix sc = solve_lyapunov_sym(a_eig_, b_ * b_.transpose());
  h2sq_ = (b_.transpose() * sc * b_).trace();
}

Matrix controllability_gramian(const LtiSystem& sys) {
  return solve_lyapunov_sym(sys.a_eig(), sys.b() * sys.b().transpose());
}

Matrix observability_gramian(const LtiSystem& sys) {
  return solve_lyapunov_sym(sys.a_eig(), sys.c().transpose() * sys.c());
}

double h2_norm_squared(const LtiSystem& sys) { return sys.h2_norm_squared(); }

double h2_error_squared_from_workspace(const LtiSystem& full, const Matrix& c_r,
                                       const GramianWorkspace& ws) {
  double j = full.h2_norm_squared() + (c_r * ws.p * c_r.transpose()).trace() -
             2.0 * (c_r * ws.x.transpose() * full.c().transpose()).trace();
  if (j < 0.0) j = 0.0;  // cancellation floor near exact matches
  return j;
}

double h2_error_squared(const LtiSystem& full, const ReducedSystem& red,
                        const GramianWorkspace& ws) {
  if (red.parent_order() != full.order()) {
    throw std::invalid_argument("h2_error_squared: reduced system belongs to a different order");
  }
  if (ws.p.rows() != red.order() || ws.x.rows() != full.order() || ws.x.cols() != red.order()) {
    throw std::invalid_argument("h2_error_squared: workspace dimensions do not match");
  }
  if (ws.fingerprint != triple_fingerprint(red.a_r(), red.b_r(), red.c_r())) {
    throw std::invalid_argument("h2_error_squared: workspace is stale for this reduced system");
  }
  return h2_error_squared_from_workspace(full, red.c_r(), ws);
}

double h2_error_squared_general(const LtiSystem& full, const Matrix& a_r, const Matrix& b_r,
                                const Matrix& c_r) {
  const Index r = a_r.rows();
  if (a_r.cols() != r || b_r.rows() != r || c_r.cols() != r ||
      b_r.cols() != full.num_inputs() || c_r.rows() != full.num_outputs()) {
    throw std::invalid_argument("h2_error_squared_general: shape mismatch");
  }
  Eigen::EigenSolver<Matrix> es(a_r);
  if ((es.eigenvalues().real().array() <= 0.0).any()) {
    throw std::invalid_argument("h2_error_squared_general: reduced system is not stable");
  }

  // Cross term: A Xt + Xt A_r^T = B B_r^T, solved row by row in the eigenbasis
  // of A (each row is an r x r linear system).
  const SymEig& ae = full.a_eig();
  const Matrix w = ae.eigenvectors.transpose() * (full.b() * b_r.transpose());
  Matrix xt_hat(full.order(), r);
  for (Index i = 0; i < full.order(); ++i) {
    const Matrix lhs = a_r + ae.eigenvalues(i) * Matrix::Identity(r, r);
    xt_hat.row(i) = lhs.partialPivLu().solve(w.row(i).transpose()).transpose();
  }
  const Matrix xt = ae.eigenvectors * xt_hat;

  // Reduced-side Gramian: A_r S + S A_r^T = B_r B_r^T via the r^2 x r^2
  // Kronecker system (r is small for every caller).
  const Matrix rhs = b_r * b_r.transpose();
  Matrix kron = Matrix::Zero(r * r, r * r);
  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < r; ++j) {
      for (Index k = 0; k < r; ++k) {
        kron(i + r * j, k + r * j) += a_r(i, k);  // (A_r S) block
        kron(i + r * j, i + r * k) += a_r(j, k);  // (S A_r^T) block
      }
    }
  }
  Vector vec_rhs(r * r);
  for (Index j = 0; j < r; ++j) vec_rhs.segment(j * r, r) = rhs.col(j);
  Vector vec_s = kron.partialPivLu().solve(vec_rhs);
  Matrix s_r(r, r);
  for (Index j = 0; j < r; ++j) s_r.col(j) = vec_s.segment(j * r, r);

  double j_val = full.h2_norm_squared() + (c_r * s_r * c_r.transpose()).trace() -
                 2.0 * (full.c() * xt * c_r.transpose()).trace();
  if (j_val < 0.0) j_val = 0.0;
  return j_val;
}

std::uint64_t triple_fingerprint(const Matrix& a, const Matrix& b, const Matrix& c) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  auto mix_matrix = [&mix](const Matrix& m) {
    mix(static_cast<std::uint64_t>(m.rows()));
    mix(static_cast<std::uint64_t>(m.cols()));
    for (Index j = 0; j < m.cols(); ++j) {
      for (Index i = 0; i < m.rows(); ++i) {
        std::uint64_t bits;
        const double v = m(i, j);
        std::memcpy(&bits, &v, sizeof(bits));
        mix(bits);
      }
    }
  };
  mix_matrix(a);
  mix_matrix(b);
  mix_matrix(c);
  return h;
}

}  // namespace spdmor
