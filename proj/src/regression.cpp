#include "bitscatter/regression.hpp"

#include <Eigen/Dense>

#include "bitscatter/errors.hpp"

namespace bitscatter {

QuadraticFit regress_quadratic(std::span<const Point2> points) {
  const auto n = static_cast<Eigen::Index>(points.size());
  if (n < 3) throw UndefinedStatisticError("regress_quadratic: need at least three points");

  // Centre and scale x so the Vandermonde columns are well conditioned.
  double lo = points[0].x, hi = points[0].x;
  for (const auto& p : points) {
    lo = std::min(lo, p.x);
    hi = std::max(hi, p.x);
  }
  const double shift = 0.5 * (lo + hi);
  const double scale = hi > lo ? 0.5 * (hi - lo) : 1.0;

  Eigen::MatrixXd design(n, 3);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double t = (points[static_cast<std::size_t>(i)].x - shift) / scale;
    design(i, 0) = t * t;
    design(i, 1) = t;
    design(i, 2) = 1.0;
    rhs(i) = points[static_cast<std::size_t>(i)].y;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  qr.setThreshold(1e-10);
  if (qr.rank() < 3) throw UndefinedStatisticError("regress_quadratic: rank-deficient design");
  const Eigen::Vector3d u = qr.solve(rhs);

  // Undo the substitution t = (x - shift) / scale.
  const double s2 = scale * scale;
  QuadraticFit fit;
  fit.a = u(0) / s2;
  fit.b = u(1) / scale - 2.0 * u(0) * shift / s2;
  fit.c = u(0) * shift * shift / s2 - u(1) * shift / scale + u(2);
  return fit;
}

}  // namespace bitscatter
