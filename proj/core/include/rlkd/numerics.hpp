#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace rlkd {

/// All numeric kernels work on 64-bit reals.
using Vec = std::vector<double>;

/// Probabilities are clamped to at least this value before any log.
inline constexpr double kProbFloor = 1e-12;

/// Dense row-major matrix. Storage only; arithmetic lives with its users.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  Vec data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  std::span<double> row(std::size_t r) { return {data.data() + r * cols, cols}; }
  std::span<const double> row(std::size_t r) const { return {data.data() + r * cols, cols}; }
};

bool all_finite(std::span<const double> values);

/// True when every entry lies in [0,1] and the entries sum to 1 within tol.
bool is_probability_vector(std::span<const double> values, double tol = 1e-9);

/// Temperature softmax with max-subtraction: out_c = exp(z_c/T) / sum.
/// Throws std::invalid_argument on empty or non-finite input or T <= 0.
Vec softmax(std::span<const double> logits, double temperature = 1.0);

/// -log p[label-1] with the probability floor. `label` is 1-based.
/// Throws std::invalid_argument when label is out of [1, C].
double cross_entropy_hard(int label, std::span<const double> predicted);

/// -sum_c target_c * log(predicted_c), probabilities floored.
/// Throws std::invalid_argument on length mismatch.
double cross_entropy_soft(std::span<const double> target,
                          std::span<const double> predicted);

/// Index of the largest entry, ties broken toward the lowest index.
std::size_t argmax(std::span<const double> values);

/// Central-difference gradient check. Returns
///   max_i |analytic_i - cd_i| / max(1e-8, |analytic_i| + |cd_i|).
/// Throws NumericError when the function evaluates to a non-finite value.
double check_gradient(const std::function<double(const Vec&)>& f,
                      const Vec& params, const Vec& analytic_grad,
                      double step = 1e-5);

}  // namespace rlkd
