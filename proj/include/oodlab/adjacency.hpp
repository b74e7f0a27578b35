#pragma once

#include "oodlab/common.hpp"

#include <vector>

namespace oodlab {

enum class AdjacencyKind { kUnlabeled, kLabeled };

/// Symmetric nonnegative edge-weight matrix over the ID population.
struct AdjacencyMatrix {
  Matrix entries;
  AdjacencyKind kind = AdjacencyKind::kUnlabeled;

  void validate() const;
};

/// Diagonal of row sums; all entries must be positive.
struct DegreeMatrix {
  Vector diag;

  Vector inv_sqrt() const { return diag.array().rsqrt(); }
};

/// D_row^{-1/2} A D_col^{-1/2}; square ID case has eigenvalues in [-1, 1].
struct NormalizedAdjacency {
  Matrix entries;
};

/// Per-class connector vectors: column i of q holds the expected kernel
/// weight from each ID point to labeled points of class i; p is the OOD
/// counterpart.
struct ClassConnectors {
  Matrix q;  // N x c
  Matrix p;  // M x c
};

/// One-parameter family of labeled matrices around a degree-normalized
/// unlabeled base. Valid only when phi_u * rowsum(base_A) == 1.
struct PerturbationFamily {
  Matrix base_A;       // unlabeled adjacency, rescaled
  Matrix base_A_oi;    // unlabeled OOD-ID matrix
  ClassConnectors connectors;
  double phi_u = 1.0;
  double phi_l = 0.0;
};

struct FamilyPoint {
  Matrix A;      // phi_u A_u + phi_l sum_i q_i q_i^T
  Matrix A_oi;   // phi_u A_oi + phi_l sum_i p_i q_i^T
  Vector D_diag; // I + phi_l sum_i diag(q_i)
};

/// A^(u) from the augmentation kernel under the uniform population
/// distribution: entry (x,x') = (1/N) sum_xbar T(x|xbar) T(x'|xbar).
AdjacencyMatrix unlabeled_adjacency(const Matrix& T);

/// q column i = mean over class-i columns of T. When an OOD kernel is given,
/// p is computed the same way from it; callers with a preset p matrix pass it
/// through directly instead.
ClassConnectors class_connectors(const Matrix& T, const std::vector<int>& labels,
                                 int num_classes);
ClassConnectors class_connectors(const Matrix& T, const std::vector<int>& labels,
                                 int num_classes, const Matrix& ood_kernel);

/// A^(l) = phi_u A^(u) + phi_l sum_i q_i q_i^T.
AdjacencyMatrix labeled_adjacency(const AdjacencyMatrix& a_u, const Matrix& q,
                                  double phi_u, double phi_l);

/// Row sums of any nonnegative matrix; a zero row is a hard error.
DegreeMatrix degree_matrix(const Matrix& m);

/// D_row^{-1/2} A D_row^{-1/2} for the square ID case.
NormalizedAdjacency normalize(const Matrix& a, const DegreeMatrix& d_row);
/// D_row^{-1/2} A D_col^{-1/2} for rectangular OOD-ID blocks.
NormalizedAdjacency normalize(const Matrix& a, const DegreeMatrix& d_row,
                              const DegreeMatrix& d_col);

/// Builds a family after rescaling base_A so phi_u * rowsum == 1 (validated
/// rowwise to 1e-6; heterogeneous-degree graphs are rejected with the first
/// offending row).
PerturbationFamily make_family(const Matrix& base_A, const Matrix& base_A_oi,
                               const ClassConnectors& connectors, double phi_u);

FamilyPoint family_eval(const PerturbationFamily& fam, double phi_l);

}  // namespace oodlab
