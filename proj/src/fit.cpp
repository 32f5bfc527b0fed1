#include "sumprod/fit.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "sumprod/errors.hpp"

namespace sumprod {

ExponentFit fit_exponent(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3) throw InvalidArgument("fit_exponent: need at least 3 points, got " + std::to_string(points.size()));
  const auto m = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd design(m, 2);
  Eigen::VectorXd y(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto [n, value] = points[static_cast<std::size_t>(i)];
    if (!(n > 0.0)) throw InvalidArgument("fit_exponent: abscissa must be positive");
    if (!(value > 0.0)) throw InvalidArgument("fit_exponent: value must be positive, got " + std::to_string(value));
    design(i, 0) = 1.0;
    design(i, 1) = std::log(n);
    y(i) = std::log(value);
  }
  const Eigen::VectorXd x = design.col(1);
  if ((x.array() == x(0)).all()) throw InvalidArgument("fit_exponent: need at least two distinct abscissae");

  const Eigen::Vector2d beta = design.colPivHouseholderQr().solve(y);
  const Eigen::VectorXd residual = y - design * beta;
  const double ss_res = residual.squaredNorm();
  const double ss_tot = (y.array() - y.mean()).matrix().squaredNorm();

  ExponentFit fit;
  fit.intercept = beta(0);
  fit.slope = beta(1);
  fit.r_squared = ss_tot > 0.0 ? std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0) : 1.0;
  return fit;
}

}  // namespace sumprod
