#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tcnet/asymptotics.hpp"

namespace tcnet::asymptotics {

ESequence::ESequence(int d, int horizon, double initial)
    : d_(d), horizon_(horizon), row_(2), log_scale_(0.0) {
  if (d < 2) throw std::invalid_argument("ESequence: d must be >= 2");
  if (horizon < 2) throw std::invalid_argument("ESequence: horizon must be >= 2");
  if (!(initial > 0.0)) throw std::invalid_argument("ESequence: initial value must be positive");
  values_.assign(static_cast<std::size_t>(horizon - 2 + 1), 0.0);
  values_[0] = 1.0;
  log_scale_ = std::log(initial);
}

void ESequence::advance() {
  if (row_ >= horizon_) throw std::out_of_range("ESequence: horizon reached");
  const int n = row_ + 1;
  const int width = horizon_ - n;
  std::vector<double> next(static_cast<std::size_t>(width + 1), 0.0);
  double peak = 0.0;
  // Entries with n - j odd are zero, so only the matching parity is visited.
  for (int j = (n % 2); j <= width; j += 2) {
    const double up = values_[static_cast<std::size_t>(j + 1)];
    const double down = j > 0 ? values_[static_cast<std::size_t>(j - 1)] : 0.0;
    double v = 0.0;
    if (up != 0.0) {
      const double c = mu(d_, n, j);
      if (c < 0.0) throw std::domain_error("ESequence: negative mu at (" + std::to_string(n) + "," + std::to_string(j) + ")");
      v += c * up;
    }
    if (down != 0.0) {
      const double c = nu(d_, n, j);
      if (c < 0.0) throw std::domain_error("ESequence: negative nu at (" + std::to_string(n) + "," + std::to_string(j) + ")");
      v += c * down;
    }
    next[static_cast<std::size_t>(j)] = v;
    peak = std::max(peak, v);
  }
  if (peak > 0.0) {
    for (double& v : next) v /= peak;
    log_scale_ += std::log(peak);
  }
  values_ = std::move(next);
  row_ = n;
}

void ESequence::advance_to(int row) {
  if (row < row_) throw std::invalid_argument("ESequence: cannot move backwards");
  while (row_ < row) advance();
}

double ESequence::log_at(int j) const {
  if (j < 0 || j > max_j()) return -std::numeric_limits<double>::infinity();
  const double v = values_[static_cast<std::size_t>(j)];
  return v > 0.0 ? std::log(v) + log_scale_ : -std::numeric_limits<double>::infinity();
}

}  // namespace tcnet::asymptotics
