#include "spdmor/matlib.hpp"

#include <atomic>
#include <cmath>
#include <string>

namespace spdmor {

namespace {

std::atomic<std::uint64_t> g_sylvester_solves{0};

void require_square(const Matrix& z, const char* what) {
  if (z.rows() != z.cols()) {
    throw std::invalid_argument(std::string(what) + " must be square, got " +
                                std::to_string(z.rows()) + "x" + std::to_string(z.cols()));
  }
}

}  // namespace

bool has_finite_entries(const Matrix& z) { return z.allFinite(); }

Matrix require_symmetric(const Matrix& z, const char* what) {
  require_square(z, what);
  if (!z.allFinite()) {
    throw std::invalid_argument(std::string(what) + " has non-finite entries");
  }
  const double defect = (z - z.transpose()).norm();
  if (defect > kSymmetryTol * std::max(1e-300, z.norm())) {
    throw std::invalid_argument(std::string(what) + " is not symmetric (relative defect " +
                                std::to_string(defect / std::max(1e-300, z.norm())) + ")");
  }
  return sym(z);
}

bool SymEig::spd() const {
  if (eigenvalues.size() == 0) return false;
  return eigenvalues(0) > kSpdTol * std::max(1.0, eigenvalues(eigenvalues.size() - 1));
}

SymEig sym_eig(const Matrix& s) {
  const Matrix ss = require_symmetric(s, "sym_eig input");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(ss);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("sym_eig: eigendecomposition failed");
  }
  return SymEig{solver.eigenvalues(), solver.eigenvectors()};
}

namespace {

SymEig spd_eig(const Matrix& s, const char* what) {
  SymEig eig = sym_eig(s);
  if (!eig.spd()) {
    throw NotPositiveDefinite(std::string(what) + ": matrix is not positive definite (lambda_min=" +
                              std::to_string(eig.eigenvalues(0)) + ")");
  }
  return eig;
}

}  // namespace

Matrix spd_sqrt(const Matrix& s) {
  return spd_eig(s, "spd_sqrt").apply([](double l) { return std::sqrt(l); });
}

Matrix spd_inv_sqrt(const Matrix& s) {
  return spd_eig(s, "spd_inv_sqrt").apply([](double l) { return 1.0 / std::sqrt(l); });
}

Matrix sym_exp(const Matrix& h) {
  return sym_eig(h).apply([](double l) { return std::exp(l); });
}

Matrix solve_sylvester(const SymEig& f, const SymEig& g, const Matrix& w) {
  const Index n = f.eigenvalues.size();
  const Index r = g.eigenvalues.size();
  if (w.rows() != n || w.cols() != r) {
    throw std::invalid_argument("solve_sylvester: right-hand side has wrong shape");
  }
  const double scale = f.eigenvalues.cwiseAbs().maxCoeff() + g.eigenvalues.cwiseAbs().maxCoeff();
  Matrix wh = f.eigenvectors.transpose() * w * g.eigenvectors;
  for (Index j = 0; j < r; ++j) {
    for (Index i = 0; i < n; ++i) {
      const double denom = f.eigenvalues(i) + g.eigenvalues(j);
      if (std::abs(denom) < kOverlapTol * scale) {
        throw SpectrumOverlap("solve_sylvester: spectra of F and -G overlap (lambda+mu=" +
                              std::to_string(denom) + ")");
      }
      wh(i, j) /= denom;
    }
  }
  g_sylvester_solves.fetch_add(1, std::memory_order_relaxed);
  return f.eigenvectors * wh * g.eigenvectors.transpose();
}

Matrix solve_sylvester(const Matrix& f, const Matrix& g, const Matrix& w) {
  return solve_sylvester(sym_eig(f), sym_eig(g), w);
}

Matrix solve_lyapunov_sym(const SymEig& f, const Matrix& w) {
  return sym(solve_sylvester(f, f, require_symmetric(w, "solve_lyapunov_sym rhs")));
}

Matrix solve_lyapunov_sym(const Matrix& f, const Matrix& w) {
  return solve_lyapunov_sym(sym_eig(f), w);
}

double frobenius_inner(const Matrix& z1, const Matrix& z2) {
  if (z1.rows() != z2.rows() || z1.cols() != z2.cols()) {
    throw std::invalid_argument("frobenius_inner: shape mismatch");
  }
  return (z1.array() * z2.array()).sum();
}

std::uint64_t sylvester_solve_count() {
  return g_sylvester_solves.load(std::memory_order_relaxed);
}

}  // namespace spdmor
