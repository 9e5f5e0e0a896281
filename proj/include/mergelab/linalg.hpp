#pragma once

#include <span>
#include <vector>

#include "mergelab/matrix.hpp"

namespace mergelab {

/// Thin SVD of an m x n matrix: u is m x k, vt is k x n, k = min(m, n).
/// sigma is sorted descending and non-negative. The largest-magnitude
/// entry of each u column is non-negative, so factors are deterministic.
struct SvdResult {
    Matrix u;
    std::vector<float> sigma;
    Matrix vt;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

double frobenius_norm(const Matrix& a);

SvdResult thin_svd(const Matrix& a);
double top_singular_value(const Matrix& a);

/// Max-subtracted softmax of scores/tau. Output sums to 1 within 1e-9.
std::vector<double> softmax(std::span<const double> scores, double tau);

/// Average ranks in [1, n], ties get the mean of their rank range.
std::vector<double> fractional_ranks(std::span<const double> values);

/// Spearman rank correlation: Pearson correlation of fractional ranks.
/// Throws StatError for fewer than two points or zero rank variance.
double spearman(std::span<const double> x, std::span<const double> y);

}  // namespace mergelab
