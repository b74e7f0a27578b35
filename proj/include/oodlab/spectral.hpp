#pragma once

#include "oodlab/adjacency.hpp"
#include "oodlab/common.hpp"

namespace oodlab {

/// Full symmetric eigensystem, eigenvalues sorted descending. Sign
/// convention: in each column the entry of largest magnitude is positive
/// (ties broken by lowest row index), so repeated runs emit identical files.
struct EigenSystem {
  Vector values;   // N, descending
  Matrix vectors;  // N x N, orthonormal columns
};

struct TopKFactor {
  Matrix F;                      // N x k, V_k diag(sqrt(lambda_k))
  bool degenerate_cut = false;   // lambda_k ~ lambda_{k+1}
};

/// ID rows Z plus out-of-sample OOD rows Z_ood in the same k-dim space.
struct Embeddings {
  Matrix Z;      // N x k
  Matrix Z_ood;  // M x k
  int k = 0;
};

EigenSystem eigendecompose(const NormalizedAdjacency& atilde);

TopKFactor top_k_factor(const EigenSystem& eig, int k);

/// Z = D^{-1/2} V_k Sigma_k^{1/2}.
Matrix id_embedding(const EigenSystem& eig, const DegreeMatrix& d, int k);

/// Z_ood = D_ood^{-1/2} A_oi V_k Sigma_k^{-1/2}. Rejects eigenvalues below
/// 1e-12 * lambda_1 instead of regularizing them.
Matrix ood_embedding_closed_form(const Matrix& a_oi, const EigenSystem& eig,
                                 const DegreeMatrix& d_ood, int k);

/// argmin_F ||A_oi - F F_k^T||_F^2 via the normal equations; the independent
/// route for the closed form above.
Matrix ood_embedding_least_squares(const Matrix& a_oi, const Matrix& f_k);

/// tau = lambda_k / lambda_{k+1}.
double spectral_gap_tau(const EigenSystem& eig, int k);

/// Largest ratio lambda_j / lambda_{j+1} over the positive spectrum, with the
/// cut index that achieves it. Reported in diagnostics alongside tau.
struct GapScan {
  double max_ratio = 0.0;
  int at_k = 0;
};
GapScan largest_gap_ratio(const EigenSystem& eig);

/// Max row l2 norm of an embedding matrix.
double max_embedding_norm(const Matrix& z);

}  // namespace oodlab
