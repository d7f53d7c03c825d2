#include <algorithm>
#include <cmath>
#include <limits>

#include "forumlens/error.hpp"
#include "forumlens/stats.hpp"

namespace forumlens::stats {

OlsFit fit_ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, std::vector<std::string> terms) {
  const auto n = X.rows(), p = X.cols();
  if (y.size() != n) throw ConfigError("response length differs from design rows");
  if (static_cast<Eigen::Index>(terms.size()) != p) throw ConfigError("one term name per design column required");
  if (n <= p) throw DegenerateDesign("need more observations (" + std::to_string(n) + ") than columns (" +
                                     std::to_string(p) + ")");

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  qr.setThreshold(1e-10);
  const auto rank = qr.rank();
  if (rank < p) {
    std::vector<std::string> dependent;
    for (auto i = rank; i < p; ++i) dependent.push_back(terms[static_cast<std::size_t>(qr.colsPermutation().indices()(i))]);
    throw RankDeficient(std::move(dependent));
  }

  const Eigen::VectorXd beta = qr.solve(y);
  const Eigen::VectorXd resid = y - X * beta;
  const double rss = resid.squaredNorm();
  const double dof = static_cast<double>(n - p);
  const double sigma2 = rss / dof;

  // (X'X)^-1 = P R^-1 R^-T P'
  const Eigen::MatrixXd R = qr.matrixR().topLeftCorner(p, p).triangularView<Eigen::Upper>();
  const Eigen::MatrixXd Rinv =
      R.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(p, p));
  const Eigen::MatrixXd inner = Rinv * Rinv.transpose();
  const auto& perm = qr.colsPermutation().indices();
  Eigen::VectorXd diag(p);
  for (Eigen::Index i = 0; i < p; ++i) diag(perm(i)) = inner(i, i);

  OlsFit f;
  f.terms = std::move(terms);
  f.n_obs = static_cast<std::size_t>(n);
  f.dof = static_cast<std::size_t>(n - p);
  f.sigma2 = sigma2;
  for (Eigen::Index j = 0; j < p; ++j) {
    const double b = beta(j);
    const double se = std::sqrt(sigma2 * diag(j));
    double t, pv;
    if (se > 0) {
      t = b / se;
      pv = 2.0 * student_t_sf(std::fabs(t), dof);
    } else {
      t = b == 0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), b);
      pv = b == 0 ? 1.0 : 0.0;
    }
    f.coefficients.push_back(b);
    f.std_errors.push_back(se);
    f.t_stats.push_back(t);
    f.p_values.push_back(std::min(1.0, pv));
  }
  const double mean = y.mean();
  const double tss = (y.array() - mean).square().sum();
  f.r2 = tss > 0 ? std::clamp(1.0 - rss / tss, 0.0, 1.0) : 0.0;
  f.adj_r2 = 1.0 - (1.0 - f.r2) * static_cast<double>(n - 1) / dof;
  f.adj_r2 = std::min(f.adj_r2, f.r2);
  f.residuals.assign(resid.data(), resid.data() + n);
  return f;
}

}  // namespace forumlens::stats
