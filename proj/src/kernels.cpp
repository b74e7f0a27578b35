#include "oodlab/kernels.hpp"

namespace oodlab {

Matrix augmentation_adjacency(const Matrix& T) {
  const Index n = T.rows();
  require(n > 0 && T.cols() == n, "augmentation kernel must be square");
  Matrix A(n, n);
  const double inv_n = 1.0 / static_cast<double>(n);
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      const double v = T.row(i).dot(T.row(j)) * inv_n;
      A(i, j) = v;
      A(j, i) = v;
    }
  }
  return A;
}

// Reductions accumulate per-row partials and combine serially in row order,
// so results are bit-identical across runs and thread counts.
double weighted_inner_sum(const Matrix& W, const Matrix& H) {
  const Index n = H.rows();
  require(W.rows() == n && W.cols() == n, "weight matrix shape mismatch");
  Vector partial(n);
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < n; ++i) {
    double row = 0.0;
    for (Index j = 0; j < n; ++j) {
      row += W(i, j) * H.row(i).dot(H.row(j));
    }
    partial(i) = row;
  }
  double total = 0.0;
  for (Index i = 0; i < n; ++i) total += partial(i);
  return total;
}

double weighted_sq_inner_sum(const Vector& a, const Vector& b, const Matrix& H) {
  const Index n = H.rows();
  require(a.size() == n && b.size() == n, "weight vector shape mismatch");
  Vector partial(n);
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < n; ++i) {
    double row = 0.0;
    for (Index j = 0; j < n; ++j) {
      const double ip = H.row(i).dot(H.row(j));
      row += b(j) * ip * ip;
    }
    partial(i) = a(i) * row;
  }
  double total = 0.0;
  for (Index i = 0; i < n; ++i) total += partial(i);
  return total;
}

Matrix pairwise_sq_dists(const Matrix& queries, const Matrix& train) {
  require(queries.cols() == train.cols(), "dimension mismatch");
  Matrix D(queries.rows(), train.rows());
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < queries.rows(); ++i) {
    for (Index j = 0; j < train.rows(); ++j) {
      D(i, j) = (queries.row(i) - train.row(j)).squaredNorm();
    }
  }
  return D;
}

namespace ref {

Matrix augmentation_adjacency(const Matrix& T) {
  const Index n = T.rows();
  require(n > 0 && T.cols() == n, "augmentation kernel must be square");
  Matrix A(n, n);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      double v = 0.0;
      for (Index s = 0; s < n; ++s) v += T(i, s) * T(j, s);
      v *= inv_n;
      A(i, j) = v;
      A(j, i) = v;
    }
  }
  return A;
}

double weighted_inner_sum(const Matrix& W, const Matrix& H) {
  const Index n = H.rows();
  require(W.rows() == n && W.cols() == n, "weight matrix shape mismatch");
  double total = 0.0;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) total += W(i, j) * H.row(i).dot(H.row(j));
  return total;
}

double weighted_sq_inner_sum(const Vector& a, const Vector& b, const Matrix& H) {
  const Index n = H.rows();
  require(a.size() == n && b.size() == n, "weight vector shape mismatch");
  double total = 0.0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const double ip = H.row(i).dot(H.row(j));
      total += a(i) * b(j) * ip * ip;
    }
  }
  return total;
}

Matrix pairwise_sq_dists(const Matrix& queries, const Matrix& train) {
  require(queries.cols() == train.cols(), "dimension mismatch");
  Matrix D(queries.rows(), train.rows());
  for (Index i = 0; i < queries.rows(); ++i)
    for (Index j = 0; j < train.rows(); ++j)
      D(i, j) = (queries.row(i) - train.row(j)).squaredNorm();
  return D;
}

}  // namespace ref
}  // namespace oodlab
