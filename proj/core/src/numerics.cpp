#include "rlkd/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rlkd/errors.hpp"

namespace rlkd {

bool all_finite(std::span<const double> values) {
  return std::all_of(values.begin(), values.end(),
                     [](double v) { return std::isfinite(v); });
}

bool is_probability_vector(std::span<const double> values, double tol) {
  if (values.empty()) return false;
  double sum = 0.0;
  for (double v : values) {
    if (!(v >= 0.0 && v <= 1.0)) return false;
    sum += v;
  }
  return std::abs(sum - 1.0) <= tol;
}

Vec softmax(std::span<const double> logits, double temperature) {
  if (logits.empty())
    throw std::invalid_argument("softmax: empty logits");
  if (!all_finite(logits))
    throw std::invalid_argument("softmax: non-finite logit");
  if (!(temperature > 0.0))
    throw std::invalid_argument("softmax: temperature must be positive");

  double max_scaled = logits[0] / temperature;
  for (double z : logits) max_scaled = std::max(max_scaled, z / temperature);

  Vec out(logits.size());
  double sum = 0.0;
  for (std::size_t c = 0; c < logits.size(); ++c) {
    out[c] = std::exp(logits[c] / temperature - max_scaled);
    sum += out[c];
  }
  for (double& v : out) v /= sum;
  return out;
}

double cross_entropy_hard(int label, std::span<const double> predicted) {
  if (label < 1 || static_cast<std::size_t>(label) > predicted.size())
    throw std::invalid_argument("cross_entropy_hard: label " +
                                std::to_string(label) + " out of [1, " +
                                std::to_string(predicted.size()) + "]");
  return -std::log(std::max(predicted[static_cast<std::size_t>(label) - 1],
                            kProbFloor));
}

double cross_entropy_soft(std::span<const double> target,
                          std::span<const double> predicted) {
  if (target.size() != predicted.size())
    throw std::invalid_argument("cross_entropy_soft: length mismatch");
  double loss = 0.0;
  for (std::size_t c = 0; c < target.size(); ++c)
    loss -= target[c] * std::log(std::max(predicted[c], kProbFloor));
  return loss;
}

std::size_t argmax(std::span<const double> values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] > values[best]) best = i;
  return best;
}

double check_gradient(const std::function<double(const Vec&)>& f,
                      const Vec& params, const Vec& analytic_grad,
                      double step) {
  Vec x = params;
  double max_rel = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double saved = x[i];
    x[i] = saved + step;
    double fp = f(x);
    x[i] = saved - step;
    double fm = f(x);
    x[i] = saved;
    if (!std::isfinite(fp) || !std::isfinite(fm))
      throw NumericError("check_gradient: non-finite function value at coordinate " +
                         std::to_string(i));
    double cd = (fp - fm) / (2.0 * step);
    double a = analytic_grad[i];
    double rel = std::abs(a - cd) / std::max(1e-8, std::abs(a) + std::abs(cd));
    max_rel = std::max(max_rel, rel);
  }
  return max_rel;
}

}  // namespace rlkd
