#pragma once

#include "spdmor/matlib.hpp"

#include <cstdint>

namespace spdmor {

/// Hash of the matrix entries (and shapes) of a reduced-system triple; used to
/// detect stale Gramian workspaces. For points without an output factor pass
/// an empty c.
std::uint64_t triple_fingerprint(const Matrix& a, const Matrix& b, const Matrix& c);

/// Solutions P, Q, X, Y of
///   A_r P + P A_r - B_r B_r^T        = 0
///   A_r Q + Q A_r - C_r^T C_r        = 0
///   A   X + X A_r - B   B_r^T        = 0
///   A   Y + Y A_r + C^T C_r          = 0
/// for a full system (A, B, C) and a reduced triple (A_r, B_r, C_r).
/// For gradient systems only P and X are populated (Q, Y stay empty).
struct GramianWorkspace {
  Matrix p;
  Matrix q;
  Matrix x;
  Matrix y;
  std::uint64_t fingerprint = 0;
};

/// Directional derivatives P', Q', X', Y' of the workspace along a tangent
/// direction, i.e. solutions of the differentiated Sylvester equations.
struct DerivativeWorkspace {
  Matrix pp;
  Matrix qp;
  Matrix xp;
  Matrix yp;
};

}  // namespace spdmor
