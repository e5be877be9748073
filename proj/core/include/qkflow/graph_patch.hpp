#pragma once

#include <Eigen/Dense>
#include <functional>

#include "qkflow/errors.hpp"

namespace qkflow::geom {

/// Second-order jet of a height function u at one point of its domain.
struct GraphJet {
    Eigen::VectorXd du;  // gradient D u, length n
    Eigen::MatrixXd d2u; // Hessian D^2 u, n x n symmetric
    double v = 1.0;      // sqrt(1 + |Du|^2), cached

    static GraphJet from(const Eigen::VectorXd& du, const Eigen::MatrixXd& d2u);
};

/// The matrix [a_ij] whose eigenvalues are the principal curvatures of the
/// graph x_{n+1} = u(x):
///   a = (1/v) P D^2u P,   P = I - Du Du^T / (v (1 + v)).
[[nodiscard]] Eigen::MatrixXd graph_second_fundamental_form(const GraphJet& jet);

/// Eigenvalues of the matrix above, ascending.
[[nodiscard]] Eigen::VectorXd graph_principal_curvatures(const GraphJet& jet);

/// A height function sampled on a uniform rectangular grid in R^n, with
/// derivative jets taken by centered differences (one-sided at the rim).
class GraphPatch {
public:
    GraphPatch(Eigen::VectorXd corner, double dx, Eigen::VectorXi dims);

    /// Fill u from a callable x -> height.
    void fill(const std::function<double(const Eigen::VectorXd&)>& f);

    int dim() const { return static_cast<int>(dims_.size()); }
    double spacing() const { return dx_; }
    const Eigen::VectorXi& dims() const { return dims_; }

    Eigen::VectorXd point(const Eigen::VectorXi& idx) const;
    double& u(const Eigen::VectorXi& idx);
    double u(const Eigen::VectorXi& idx) const;

    /// Finite-difference jet at an interior node (throws ResolutionError on
    /// rim nodes where a centered stencil does not fit).
    [[nodiscard]] GraphJet jet(const Eigen::VectorXi& idx) const;

private:
    int flat(const Eigen::VectorXi& idx) const;
    Eigen::VectorXd corner_;
    double dx_;
    Eigen::VectorXi dims_;
    Eigen::ArrayXd values_;
};

} // namespace qkflow::geom
