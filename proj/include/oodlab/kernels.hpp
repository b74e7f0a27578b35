#pragma once

#include "oodlab/common.hpp"

namespace oodlab {

// OpenMP-parallel inner kernels. Serial reference implementations of the same
// contracts live in oodlab::ref (used by tests and the benchmark target).

/// A = T * T^T / N. T is the augmentation kernel over N population points.
Matrix augmentation_adjacency(const Matrix& T);

/// sum_{x,x'} W(x,x') * <h_x, h_x'>.
double weighted_inner_sum(const Matrix& W, const Matrix& H);

/// sum_{x,x'} a(x) * b(x') * <h_x, h_x'>^2.
double weighted_sq_inner_sum(const Vector& a, const Vector& b, const Matrix& H);

/// Squared Euclidean distances from each row of queries to each row of train.
Matrix pairwise_sq_dists(const Matrix& queries, const Matrix& train);

namespace ref {
Matrix augmentation_adjacency(const Matrix& T);
double weighted_inner_sum(const Matrix& W, const Matrix& H);
double weighted_sq_inner_sum(const Vector& a, const Vector& b, const Matrix& H);
Matrix pairwise_sq_dists(const Matrix& queries, const Matrix& train);
}  // namespace ref

}  // namespace oodlab
