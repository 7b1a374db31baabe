#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>

namespace spdmor {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Thrown when a matrix required to be symmetric positive definite fails the
/// spectral check lambda_min > kSpdTol * max(1, lambda_max).
class NotPositiveDefinite : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by the Sylvester solver when some eigenvalue sum lambda_i + mu_j is
/// too close to zero for the entrywise solve to be well posed.
class SpectrumOverlap : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Relative asymmetry accepted (and silently symmetrized) on symmetric inputs.
inline constexpr double kSymmetryTol = 1e-10;
// SPD acceptance: lambda_min > kSpdTol * max(1, lambda_max).
inline constexpr double kSpdTol = 1e-12;
// Sylvester singularity guard: |lambda_i + mu_j| < kOverlapTol * (||F||_2 + ||G||_2).
inline constexpr double kOverlapTol = 1e-12;

inline Matrix sym(const Matrix& z) { return 0.5 * (z + z.transpose()); }

bool has_finite_entries(const Matrix& z);

/// Checks squareness/finiteness and that the asymmetry is within kSymmetryTol
/// relative Frobenius, then returns the symmetrized matrix. `what` names the
/// argument in error messages.
Matrix require_symmetric(const Matrix& z, const char* what);

/// Eigendecomposition of a symmetric matrix: input == eigenvectors *
/// eigenvalues.asDiagonal() * eigenvectors^T, eigenvalues ascending.
struct SymEig {
  Vector eigenvalues;
  Matrix eigenvectors;

  bool spd() const;
  /// Applies V f(lambda) V^T.
  template <typename F>
  Matrix apply(F&& f) const {
    Vector mapped = eigenvalues.unaryExpr(std::forward<F>(f));
    return eigenvectors * mapped.asDiagonal() * eigenvectors.transpose();
  }
};

SymEig sym_eig(const Matrix& s);

Matrix spd_sqrt(const Matrix& s);
Matrix spd_inv_sqrt(const Matrix& s);

/// Matrix exponential of a symmetric matrix; the result is SPD by construction.
Matrix sym_exp(const Matrix& h);

/// Solves F Z + Z G = W for symmetric F (n x n) and G (r x r) by
/// diagonalizing both and dividing entrywise in the eigenbases.
Matrix solve_sylvester(const Matrix& f, const Matrix& g, const Matrix& w);
/// Same solve on pre-factored coefficients; use when F or G is reused.
Matrix solve_sylvester(const SymEig& f, const SymEig& g, const Matrix& w);

/// Solves F Z + Z F = W with symmetric F and W; the output is symmetrized.
Matrix solve_lyapunov_sym(const Matrix& f, const Matrix& w);
Matrix solve_lyapunov_sym(const SymEig& f, const Matrix& w);

/// tr(Z1^T Z2).
double frobenius_inner(const Matrix& z1, const Matrix& z2);

/// Process-wide count of entrywise Sylvester solves performed so far
/// (Lyapunov solves delegate and are counted as one each).
std::uint64_t sylvester_solve_count();

}  // namespace spdmor
