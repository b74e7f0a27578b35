#include "oodlab/adjacency.hpp"

#include "oodlab/kernels.hpp"

#include <string>

namespace oodlab {

void AdjacencyMatrix::validate() const {
  require(entries.rows() == entries.cols(), "adjacency must be square");
  require((entries - entries.transpose()).cwiseAbs().maxCoeff() < 1e-12,
          "adjacency must be symmetric");
  require(entries.minCoeff() >= 0.0, "adjacency entries must be nonnegative");
  require(entries.rowwise().sum().maxCoeff() > 0.0,
          "adjacency has no positive row sum");
}

AdjacencyMatrix unlabeled_adjacency(const Matrix& T) {
  require((T - T.transpose()).cwiseAbs().maxCoeff() < 1e-12,
          "augmentation kernel must be symmetric");
  require(T.minCoeff() >= 0.0, "augmentation kernel must be nonnegative");
  AdjacencyMatrix a{augmentation_adjacency(T), AdjacencyKind::kUnlabeled};
  const Vector rs = a.entries.rowwise().sum();
  for (Index i = 0; i < rs.size(); ++i) {
    if (rs(i) <= 0.0) throw Error("isolated vertex at row " + std::to_string(i));
  }
  return a;
}

static Matrix connector_columns(const Matrix& kernel, const std::vector<int>& labels,
                                int num_classes) {
  require(static_cast<Index>(labels.size()) == kernel.cols(),
          "labels must cover every population column");
  Matrix q = Matrix::Zero(kernel.rows(), num_classes);
  std::vector<int> counts(num_classes, 0);
  for (int lbl : labels) {
    require(lbl >= 0 && lbl < num_classes, "label out of range");
    ++counts[lbl];
  }
  for (int i = 0; i < num_classes; ++i) {
    require(counts[i] > 0, "empty class " + std::to_string(i));
  }
  for (Index x = 0; x < kernel.cols(); ++x) {
    q.col(labels[static_cast<std::size_t>(x)]) += kernel.col(x);
  }
  for (int i = 0; i < num_classes; ++i) q.col(i) /= counts[i];
  return q;
}

ClassConnectors class_connectors(const Matrix& T, const std::vector<int>& labels,
                                 int num_classes) {
  return ClassConnectors{connector_columns(T, labels, num_classes), Matrix()};
}

ClassConnectors class_connectors(const Matrix& T, const std::vector<int>& labels,
                                 int num_classes, const Matrix& ood_kernel) {
  ClassConnectors c = class_connectors(T, labels, num_classes);
  c.p = connector_columns(ood_kernel, labels, num_classes);
  return c;
}

AdjacencyMatrix labeled_adjacency(const AdjacencyMatrix& a_u, const Matrix& q,
                                  double phi_u, double phi_l) {
  require(phi_u >= 0.0 && phi_l >= 0.0, "weight coefficients must be nonnegative");
  require(q.rows() == a_u.entries.rows(), "connector shape mismatch");
  Matrix e = phi_u * a_u.entries;
  for (Index i = 0; i < q.cols(); ++i) {
    e.noalias() += phi_l * q.col(i) * q.col(i).transpose();
  }
  return AdjacencyMatrix{std::move(e), AdjacencyKind::kLabeled};
}

DegreeMatrix degree_matrix(const Matrix& m) {
  require(m.minCoeff() >= -1e-15, "degree matrix needs nonnegative entries");
  Vector d = m.rowwise().sum();
  for (Index i = 0; i < d.size(); ++i) {
    if (d(i) <= 0.0) throw Error("dangling node at row " + std::to_string(i));
  }
  return DegreeMatrix{std::move(d)};
}

NormalizedAdjacency normalize(const Matrix& a, const DegreeMatrix& d_row) {
  return normalize(a, d_row, d_row);
}

NormalizedAdjacency normalize(const Matrix& a, const DegreeMatrix& d_row,
                              const DegreeMatrix& d_col) {
  require(d_row.diag.size() == a.rows() && d_col.diag.size() == a.cols(),
          "degree dimensions do not match the matrix");
  require(d_row.diag.minCoeff() > 0.0 && d_col.diag.minCoeff() > 0.0,
          "non-positive degree");
  const Vector ri = d_row.inv_sqrt();
  const Vector ci = d_col.inv_sqrt();
  return NormalizedAdjacency{ri.asDiagonal() * a * ci.asDiagonal()};
}

PerturbationFamily make_family(const Matrix& base_A, const Matrix& base_A_oi,
                               const ClassConnectors& connectors, double phi_u) {
  require(phi_u > 0.0, "phi_u must be positive");
  const Vector rs = base_A.rowwise().sum();
  require(rs.minCoeff() > 0.0, "dangling node in family base");
  // One global rescale so phi_u * rowsum averages to 1, then validate rowwise.
  const double scale = 1.0 / (phi_u * rs.mean());
  Matrix a = scale * base_A;
  Matrix a_oi = scale * base_A_oi;
  const Vector rs2 = phi_u * a.rowwise().sum();
  for (Index i = 0; i < rs2.size(); ++i) {
    if (std::abs(rs2(i) - 1.0) > 1e-6) {
      throw Error("family base not degree-normalized at row " + std::to_string(i));
    }
  }
  return PerturbationFamily{std::move(a), std::move(a_oi), connectors, phi_u, 0.0};
}

FamilyPoint family_eval(const PerturbationFamily& fam, double phi_l) {
  require(phi_l >= 0.0, "phi_l must be nonnegative");
  const Matrix& q = fam.connectors.q;
  const Matrix& p = fam.connectors.p;
  require(q.rows() == fam.base_A.rows(), "connector shape mismatch");
  const Vector rs = fam.phi_u * fam.base_A.rowwise().sum();
  for (Index i = 0; i < rs.size(); ++i) {
    if (std::abs(rs(i) - 1.0) > 1e-6) {
      throw Error("family base not degree-normalized at row " + std::to_string(i));
    }
  }
  FamilyPoint pt;
  pt.A = fam.phi_u * fam.base_A;
  pt.A_oi = fam.phi_u * fam.base_A_oi;
  pt.D_diag = Vector::Ones(fam.base_A.rows());
  for (Index i = 0; i < q.cols(); ++i) {
    pt.A.noalias() += phi_l * q.col(i) * q.col(i).transpose();
    if (p.size() > 0) {
      pt.A_oi.noalias() += phi_l * p.col(i) * q.col(i).transpose();
    }
    pt.D_diag += phi_l * q.col(i);
  }
  return pt;
}

}  // namespace oodlab
