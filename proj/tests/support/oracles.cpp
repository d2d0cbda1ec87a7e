#include "support/oracles.hpp"

#include <string>

namespace fuzzcast::testing {

Eigen::VectorXd batch_least_squares(const Eigen::MatrixXd& regressors,
                                    const Eigen::VectorXd& targets) {
  if (regressors.rows() != targets.size()) {
    throw OracleError("batch_least_squares: row count does not match targets");
  }
  if (regressors.rows() < regressors.cols()) {
    throw OracleError("batch_least_squares: underdetermined system");
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(regressors);
  if (qr.rank() < regressors.cols()) {
    throw OracleError("batch_least_squares: rank-deficient regressors (rank " +
                      std::to_string(qr.rank()) + " of " +
                      std::to_string(regressors.cols()) + ")");
  }
  const Eigen::MatrixXd gram = regressors.transpose() * regressors;
  const Eigen::VectorXd moment = regressors.transpose() * targets;
  return gram.ldlt().solve(moment);
}

double running_mean(const std::vector<double>& values) {
  if (values.empty()) {
    throw OracleError("running_mean: empty list");
  }
  double sum = 0.0;
  for (double value : values) {
    sum += value;
  }
  return sum / static_cast<double>(values.size());
}

}  // namespace fuzzcast::testing
