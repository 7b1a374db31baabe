#pragma once

#include "spdmor/manifold.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace spdmor {

class LtiSystem;
class GradientSystem;

/// Objective driven by the trust-region method. local_model() returns the
/// value, gradient, and a Hessian-vector operator anchored at one point, so
/// that the underlying Sylvester workspace is solved once and shared across
/// all Hessian applications of the inner solver.
class TrustRegionObjective {
 public:
  struct LocalModel {
    double value;
    ProductTangent gradient;
    std::function<ProductTangent(const ProductTangent&)> hessian;
  };

  virtual ~TrustRegionObjective() = default;
  virtual double value(const ProductPoint& pt) const = 0;
  virtual LocalModel local_model(const ProductPoint& pt) const = 0;
};

struct TcgConfig {
  double theta = 1.0;   // superlinear exponent in the residual stopping rule
  double kappa = 0.1;   // linear factor in the residual stopping rule
  int max_inner = 0;    // <= 0: use the manifold dimension
};

struct TrustRegionConfig {
  double delta_bar = 0.0;     // <= 0: 10 * (1 + gradient norm at init)
  double delta0 = 0.0;        // <= 0: delta_bar / 8
  double rho_prime = 0.1;     // acceptance threshold, in [0, 1/4)
  int max_outer_iters = 500;
  double grad_tol = 0.0;      // <= 0: 1e-8 * max(1, |J(init)|)
  TcgConfig tcg;
};

enum class StopReason {
  Converged,       // gradient norm below tolerance
  IterationLimit,  // outer iteration cap reached
  Stalled,         // radius collapsed below 1e-14 (stagnant model decrease)
};

struct IterationRecord {
  int iter;
  double j;
  double grad_norm;
  double delta;
  double rho;
  bool accepted;
};

struct TrustRegionState {
  double delta_k = 0.0;
  double last_rho = 0.0;
  double grad_norm = 0.0;
  double j_value = 0.0;
  int iter = 0;
  StopReason reason = StopReason::Converged;
  std::vector<IterationRecord> history;
};

using ProgressCallback = std::function<void(const IterationRecord&)>;

struct TcgResult {
  ProductTangent step;
  bool hit_boundary = false;
  int iterations = 0;
};

/// Steihaug truncated conjugate gradient for the trust-region subproblem
///   min <grad, t> + 1/2 <hess_op(t), t>   s.t.  ||t||_pt <= delta.
/// Stops on the residual rule ||res|| <= ||grad|| min(kappa, ||grad||^theta),
/// on negative curvature or boundary exit (stepping to the boundary), or on
/// the inner iteration cap.
TcgResult solve_tcg(const ProductPoint& pt, const ProductTangent& grad,
                    const std::function<ProductTangent(const ProductTangent&)>& hess_op,
                    double delta, const TcgConfig& cfg);

/// Returns base + tau * dir with tau > 0 chosen so the result has norm delta
/// at pt. Requires ||base|| < delta and dir != 0.
ProductTangent boundary_step_to_radius(const ProductPoint& pt, const ProductTangent& base,
                                       const ProductTangent& dir, double delta);

/// Radius update of the trust-region outer loop: shrink to delta/4 when
/// rho < 1/4, grow to min(2 delta, delta_bar) when rho > 3/4 and the step hit
/// the boundary, keep otherwise.
double next_radius(double delta, double rho, bool hit_boundary, double delta_bar);

std::pair<ProductPoint, TrustRegionState> trust_region_minimize(
    const TrustRegionObjective& objective, const ProductPoint& init,
    const TrustRegionConfig& cfg = {}, const ProgressCallback& progress = nullptr);

std::pair<ProductPoint, TrustRegionState> trust_region_minimize(
    const LtiSystem& full, const ProductPoint& init, const TrustRegionConfig& cfg = {},
    const ProgressCallback& progress = nullptr);

std::pair<ProductPoint, TrustRegionState> trust_region_minimize(
    const GradientSystem& gradsys, const ProductPoint& init, const TrustRegionConfig& cfg = {},
    const ProgressCallback& progress = nullptr);

}  // namespace spdmor
