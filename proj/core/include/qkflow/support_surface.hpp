#pragma once

#include <Eigen/Dense>
#include <string>

#include "qkflow/errors.hpp"
#include "qkflow/symfun.hpp"

namespace qkflow::geom {

/// Directional grids on S^n. Both are staggered in latitude,
/// theta_i = (i + 1/2) * pi / n_theta, so no node sits on a pole and all
/// stencils stay centered via reflection ghost rows.
enum class GridKind {
    LatLong,      // full (theta, phi) grid on S^2, surfaces in R^3 (n = 2)
    Axisymmetric, // 1-D latitude grid, rotationally symmetric data, any n >= 2
};

/// A closed convex hypersurface stored as its support function h(nu) on a
/// sphere grid, about `origin`. h > 0 everywhere iff origin is interior.
/// Immutable by convention after construction: operations return copies.
struct SupportSurface {
    int n = 2;          // hypersurface dimension (body lives in R^{n+1})
    GridKind kind = GridKind::Axisymmetric;
    int n_theta = 0;
    int n_phi = 1;      // 1 for axisymmetric grids; even for LatLong
    Eigen::ArrayXXd h;  // n_theta x n_phi support values
    Eigen::VectorXd origin; // point of R^{n+1} the support function is taken about

    static SupportSurface latlong(int n_theta, int n_phi);
    static SupportSurface axisymmetric(int n, int n_theta);

    double dtheta() const { return EIGEN_PI / n_theta; }
    double dphi() const { return 2.0 * EIGEN_PI / n_phi; }
    double theta(int i) const { return (i + 0.5) * dtheta(); }
    double phi(int j) const { return j * dphi(); }

    /// Unit direction of node (i, j) in R^{n+1}. Axisymmetric grids report the
    /// representative direction in the (first-axis, polar-axis) profile plane.
    Eigen::VectorXd direction(int i, int j = 0) const;

    bool same_grid(const SupportSurface& other) const;
};

/// Principal radii of curvature r = 1/lambda per node: eigenvalues of the
/// matrix grad^2 h + h g_{S^n} in an orthonormal tangent frame, by centered
/// second-order finite differences with metric correction terms.
/// LatLong: r_a, r_b are the two eigenvalues (unordered).
/// Axisymmetric: r_a is the radial radius, r_b the tangential one with
/// multiplicity n-1.
struct RadiiField {
    Eigen::ArrayXXd r_a;
    Eigen::ArrayXXd r_b;
};

[[nodiscard]] RadiiField compute_radii(const SupportSurface& s);

/// Principal curvatures at a node, all positive. Throws ConvexityLossError
/// naming the node when some radius is <= 0.
[[nodiscard]] symfun::CurvatureVector support_curvatures(const SupportSurface& s,
                                                         const RadiiField& radii,
                                                         int i, int j = 0);
[[nodiscard]] symfun::CurvatureVector support_curvatures(const SupportSurface& s,
                                                         int i, int j = 0);

/// Inner-ball radius, diameter and the support gap min <q, nu> about origin.
struct EnclosureReport {
    double inner_ball_radius; // rho = min h
    double diameter;          // max over antipodal pairs of h(nu) + h(-nu)
    double support_gap;       // min h, equals min <F, nu> about origin
};

[[nodiscard]] EnclosureReport enclosure_report(const SupportSurface& s);

/// True iff b's support function is <= a's at every node (a encloses b).
/// Requires the same grid and origin.
[[nodiscard]] bool encloses(const SupportSurface& a, const SupportSurface& b);

/// h -> factor * h about the same origin; curvatures scale by 1/factor.
[[nodiscard]] SupportSurface dilate(const SupportSurface& s, double factor);

/// Midpoint-rule quadrature weights per node (solid-angle measure on S^n).
[[nodiscard]] Eigen::ArrayXXd quad_weights(const SupportSurface& s);

/// Total discrete solid angle, sum of quad_weights.
[[nodiscard]] double total_solid_angle(const SupportSurface& s);

/// Enclosed volume by the divergence theorem:
///   V = 1/(n+1) * sum w * h * prod(radii).
[[nodiscard]] double enclosed_volume(const SupportSurface& s);
[[nodiscard]] double enclosed_volume(const SupportSurface& s, const RadiiField& radii);

/// Steiner point of the body relative to the current origin.
[[nodiscard]] Eigen::VectorXd steiner_point(const SupportSurface& s);

/// Move the origin to origin + p (h(nu) -= <p, nu>).
[[nodiscard]] SupportSurface recenter(const SupportSurface& s, const Eigen::VectorXd& p);

/// sup_nu |h_a - h_b| (equals the Hausdorff distance of the bodies when both
/// functions are support functions on the same grid).
[[nodiscard]] double support_sup_distance(const SupportSurface& a, const SupportSurface& b);

/// Surface embedding F = h nu + grad h per node. LatLong gives points in R^3;
/// axisymmetric grids give (radial, polar) coordinates in the profile plane.
[[nodiscard]] Eigen::MatrixXd embedding_points(const SupportSurface& s);

// ---- canonical shapes ----

/// Sphere of radius r centered at c (support about the grid origin 0).
[[nodiscard]] SupportSurface make_sphere(const SupportSurface& grid, double r,
                                         const Eigen::VectorXd& c);
[[nodiscard]] SupportSurface make_sphere(const SupportSurface& grid, double r);

/// Axis-aligned ellipsoid; semi_axes has n+1 entries. Axisymmetric grids
/// require all but the last entry equal.
[[nodiscard]] SupportSurface make_ellipsoid(const SupportSurface& grid,
                                            const Eigen::VectorXd& semi_axes);

/// Cap-over-flat-disk body ("lens"): the ball of radius r_cap centered at
/// height cap_center on the polar axis, cut by the hyperplane x_{n+1} = 0.
/// Requires 0 < cap_center < r_cap; the flat side is the disk of radius
/// rho0 = sqrt(r_cap^2 - cap_center^2). Support is taken about the interior
/// point at height origin_height on the axis. Axisymmetric grids only.
[[nodiscard]] SupportSurface make_lens(const SupportSurface& grid, double r_cap,
                                       double cap_center, double origin_height);

/// Flat-side interface radius of the lens above.
[[nodiscard]] double lens_flat_radius(double r_cap, double cap_center);

// ---- serialization (documented JSON schema, bit-exact round-trip) ----

[[nodiscard]] std::string surface_to_json(const SupportSurface& s);
[[nodiscard]] SupportSurface surface_from_json(const std::string& text);

} // namespace qkflow::geom
