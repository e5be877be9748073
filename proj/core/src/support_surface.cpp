#include "qkflow/support_surface.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace qkflow::geom {

namespace {

constexpr double kPi = EIGEN_PI;

// |S^{m}| for the unit m-sphere.
double sphere_area(int m)
{
    return 2.0 * std::pow(kPi, 0.5 * (m + 1)) / std::tgamma(0.5 * (m + 1));
}

// h padded with one reflected ghost row at each pole. Row p of the result
// corresponds to latitude row p-1 of the surface. Ghost values already carry
// the phi -> phi + pi shift (LatLong) so all later stencils index phi plainly.
Eigen::ArrayXXd pad_poles(const SupportSurface& s)
{
    const int nt = s.n_theta, np = s.n_phi;
    Eigen::ArrayXXd p(nt + 2, np);
    p.block(1, 0, nt, np) = s.h;
    if (s.kind == GridKind::Axisymmetric) {
        p.row(0) = s.h.row(0);
        p.row(nt + 1) = s.h.row(nt - 1);
    } else {
        const int half = np / 2;
        for (int j = 0; j < np; ++j) {
            const int js = (j + half) % np;
            p(0, j) = s.h(0, js);
            p(nt + 1, j) = s.h(nt - 1, js);
        }
    }
    return p;
}

struct Derivs {
    Eigen::ArrayXXd ht, htt, hp, hpp, htp;
};

Derivs differentiate(const SupportSurface& s)
{
    const int nt = s.n_theta, np = s.n_phi;
    const double dt = s.dtheta(), dp = s.dphi();
    const Eigen::ArrayXXd pad = pad_poles(s);

    Derivs d;
    d.ht.resize(nt, np);
    d.htt.resize(nt, np);
    for (int i = 0; i < nt; ++i) {
        d.ht.row(i) = (pad.row(i + 2) - pad.row(i)) / (2.0 * dt);
        d.htt.row(i) = (pad.row(i + 2) - 2.0 * pad.row(i + 1) + pad.row(i)) / (dt * dt);
    }
    if (s.kind == GridKind::LatLong) {
        d.hp.resize(nt, np);
        d.hpp.resize(nt, np);
        d.htp.resize(nt, np);
        auto w = [np](int j) { return (j % np + np) % np; };
        for (int i = 0; i < nt; ++i) {
            for (int j = 0; j < np; ++j) {
                const int jm = w(j - 1), jp = w(j + 1);
                d.hp(i, j) = (s.h(i, jp) - s.h(i, jm)) / (2.0 * dp);
                d.hpp(i, j) = (s.h(i, jp) - 2.0 * s.h(i, j) + s.h(i, jm)) / (dp * dp);
                d.htp(i, j) = (pad(i + 2, jp) - pad(i + 2, jm) - pad(i, jp) + pad(i, jm)) /
                              (4.0 * dt * dp);
            }
        }
    }
    return d;
}

} // namespace

SupportSurface SupportSurface::latlong(int n_theta, int n_phi)
{
    if (n_theta < 4 || n_phi < 8 || n_phi % 2 != 0)
        throw ConfigError("latlong grid needs n_theta >= 4 and even n_phi >= 8");
    SupportSurface s;
    s.n = 2;
    s.kind = GridKind::LatLong;
    s.n_theta = n_theta;
    s.n_phi = n_phi;
    s.h = Eigen::ArrayXXd::Zero(n_theta, n_phi);
    s.origin = Eigen::VectorXd::Zero(3);
    return s;
}

SupportSurface SupportSurface::axisymmetric(int n, int n_theta)
{
    if (n < 2) throw ConfigError("axisymmetric grid needs surface dimension n >= 2");
    if (n_theta < 4) throw ConfigError("axisymmetric grid needs n_theta >= 4");
    SupportSurface s;
    s.n = n;
    s.kind = GridKind::Axisymmetric;
    s.n_theta = n_theta;
    s.n_phi = 1;
    s.h = Eigen::ArrayXXd::Zero(n_theta, 1);
    s.origin = Eigen::VectorXd::Zero(n + 1);
    return s;
}

Eigen::VectorXd SupportSurface::direction(int i, int j) const
{
    const double t = theta(i);
    if (kind == GridKind::LatLong) {
        Eigen::VectorXd nu(3);
        nu << std::sin(t) * std::cos(phi(j)), std::sin(t) * std::sin(phi(j)), std::cos(t);
        return nu;
    }
    Eigen::VectorXd nu = Eigen::VectorXd::Zero(n + 1);
    nu(0) = std::sin(t);
    nu(n) = std::cos(t);
    return nu;
}

bool SupportSurface::same_grid(const SupportSurface& o) const
{
    return n == o.n && kind == o.kind && n_theta == o.n_theta && n_phi == o.n_phi &&
           origin.size() == o.origin.size() && origin == o.origin;
}

RadiiField compute_radii(const SupportSurface& s)
{
    const Derivs d = differentiate(s);
    const int nt = s.n_theta, np = s.n_phi;
    RadiiField f;
    f.r_a.resize(nt, np);
    f.r_b.resize(nt, np);
    if (s.kind == GridKind::Axisymmetric) {
        for (int i = 0; i < nt; ++i) {
            const double ct = 1.0 / std::tan(s.theta(i));
            f.r_a(i, 0) = d.htt(i, 0) + s.h(i, 0);
            f.r_b(i, 0) = ct * d.ht(i, 0) + s.h(i, 0);
        }
        return f;
    }
    for (int i = 0; i < nt; ++i) {
        const double st = std::sin(s.theta(i));
        const double ct = std::cos(s.theta(i)) / st;
        for (int j = 0; j < np; ++j) {
            const double w11 = d.htt(i, j) + s.h(i, j);
            const double w12 = (d.htp(i, j) - ct * d.hp(i, j)) / st;
            const double w22 = d.hpp(i, j) / (st * st) + ct * d.ht(i, j) + s.h(i, j);
            const double mean = 0.5 * (w11 + w22);
            const double disc = std::hypot(0.5 * (w11 - w22), w12);
            f.r_a(i, j) = mean - disc;
            f.r_b(i, j) = mean + disc;
        }
    }
    return f;
}

symfun::CurvatureVector support_curvatures(const SupportSurface& s, const RadiiField& radii,
                                           int i, int j)
{
    const double ra = radii.r_a(i, j), rb = radii.r_b(i, j);
    if (ra <= 0.0 || rb <= 0.0) {
        std::ostringstream os;
        os << "convexity loss at node (" << i << ", " << j << "): radii " << ra << ", " << rb;
        throw ConvexityLossError(os.str(), i, j);
    }
    symfun::CurvatureVector lam(s.n);
    if (s.kind == GridKind::LatLong) {
        lam << 1.0 / ra, 1.0 / rb;
    } else {
        lam(0) = 1.0 / ra;
        lam.tail(s.n - 1).setConstant(1.0 / rb);
    }
    return lam;
}

symfun::CurvatureVector support_curvatures(const SupportSurface& s, int i, int j)
{
    return support_curvatures(s, compute_radii(s), i, j);
}

EnclosureReport enclosure_report(const SupportSurface& s)
{
    EnclosureReport r;
    r.inner_ball_radius = s.h.minCoeff();
    if (r.inner_ball_radius <= 0.0)
        throw DomainError("enclosure_report: origin is not interior (min h <= 0)");
    r.support_gap = r.inner_ball_radius;
    r.diameter = 0.0;
    const int half = s.n_phi / 2;
    for (int i = 0; i < s.n_theta; ++i) {
        for (int j = 0; j < s.n_phi; ++j) {
            const int ia = s.n_theta - 1 - i;
            const int ja = s.kind == GridKind::LatLong ? (j + half) % s.n_phi : 0;
            r.diameter = std::max(r.diameter, s.h(i, j) + s.h(ia, ja));
        }
    }
    return r;
}

bool encloses(const SupportSurface& a, const SupportSurface& b)
{
    if (!a.same_grid(b)) throw ConfigError("encloses: surfaces live on different grids");
    return (b.h <= a.h).all();
}

SupportSurface dilate(const SupportSurface& s, double factor)
{
    if (factor <= 0.0) throw DomainError("dilate: factor must be positive");
    SupportSurface out = s;
    out.h *= factor;
    return out;
}

Eigen::ArrayXXd quad_weights(const SupportSurface& s)
{
    Eigen::ArrayXXd w(s.n_theta, s.n_phi);
    if (s.kind == GridKind::LatLong) {
        for (int i = 0; i < s.n_theta; ++i)
            w.row(i).setConstant(std::sin(s.theta(i)) * s.dtheta() * s.dphi());
    } else {
        const double ring = sphere_area(s.n - 1);
        for (int i = 0; i < s.n_theta; ++i)
            w(i, 0) = ring * std::pow(std::sin(s.theta(i)), s.n - 1) * s.dtheta();
    }
    return w;
}

double total_solid_angle(const SupportSurface& s)
{
    return quad_weights(s).sum();
}

double enclosed_volume(const SupportSurface& s, const RadiiField& radii)
{
    const Eigen::ArrayXXd w = quad_weights(s);
    const int mult = (s.kind == GridKind::LatLong) ? 1 : s.n - 1;
    double v = 0.0;
    for (int i = 0; i < s.n_theta; ++i)
        for (int j = 0; j < s.n_phi; ++j)
            v += w(i, j) * s.h(i, j) * radii.r_a(i, j) * std::pow(radii.r_b(i, j), mult);
    return v / (s.n + 1);
}

double enclosed_volume(const SupportSurface& s)
{
    return enclosed_volume(s, compute_radii(s));
}

Eigen::VectorXd steiner_point(const SupportSurface& s)
{
    const Eigen::ArrayXXd w = quad_weights(s);
    Eigen::VectorXd p = Eigen::VectorXd::Zero(s.origin.size());
    for (int i = 0; i < s.n_theta; ++i)
        for (int j = 0; j < s.n_phi; ++j)
            p += w(i, j) * s.h(i, j) * s.direction(i, j);
    return p * (s.n + 1) / w.sum();
}

SupportSurface recenter(const SupportSurface& s, const Eigen::VectorXd& p)
{
    SupportSurface out = s;
    for (int i = 0; i < s.n_theta; ++i)
        for (int j = 0; j < s.n_phi; ++j)
            out.h(i, j) -= p.dot(s.direction(i, j));
    out.origin = s.origin + p;
    return out;
}

double support_sup_distance(const SupportSurface& a, const SupportSurface& b)
{
    if (!a.same_grid(b)) throw ConfigError("support_sup_distance: grid mismatch");
    return (a.h - b.h).abs().maxCoeff();
}

Eigen::MatrixXd embedding_points(const SupportSurface& s)
{
    const Derivs d = differentiate(s);
    const int total = s.n_theta * s.n_phi;
    if (s.kind == GridKind::Axisymmetric) {
        Eigen::MatrixXd pts(total, 2); // (radial, polar) profile coordinates
        for (int i = 0; i < s.n_theta; ++i) {
            const double t = s.theta(i), st = std::sin(t), ct = std::cos(t);
            pts(i, 0) = s.h(i, 0) * st + d.ht(i, 0) * ct;
            pts(i, 1) = s.h(i, 0) * ct - d.ht(i, 0) * st;
        }
        return pts;
    }
    Eigen::MatrixXd pts(total, 3);
    for (int i = 0; i < s.n_theta; ++i) {
        const double t = s.theta(i), st = std::sin(t), ct = std::cos(t);
        for (int j = 0; j < s.n_phi; ++j) {
            const double p = s.phi(j), cp = std::cos(p), sp = std::sin(p);
            const Eigen::Vector3d nu(st * cp, st * sp, ct);
            const Eigen::Vector3d e_t(ct * cp, ct * sp, -st);
            const Eigen::Vector3d e_p(-sp, cp, 0.0);
            pts.row(i * s.n_phi + j) =
                (s.h(i, j) * nu + d.ht(i, j) * e_t + d.hp(i, j) / st * e_p).transpose();
        }
    }
    return pts;
}

SupportSurface make_sphere(const SupportSurface& grid, double r, const Eigen::VectorXd& c)
{
    if (c.size() != grid.n + 1) throw ConfigError("make_sphere: center has wrong dimension");
    if (grid.kind == GridKind::Axisymmetric && c.head(grid.n).cwiseAbs().maxCoeff() > 0.0)
        throw ConfigError("make_sphere: axisymmetric grid needs the center on the polar axis");
    SupportSurface s = grid;
    for (int i = 0; i < s.n_theta; ++i)
        for (int j = 0; j < s.n_phi; ++j)
            s.h(i, j) = r + c.dot(s.direction(i, j));
    return s;
}

SupportSurface make_sphere(const SupportSurface& grid, double r)
{
    return make_sphere(grid, r, Eigen::VectorXd::Zero(grid.n + 1));
}

SupportSurface make_ellipsoid(const SupportSurface& grid, const Eigen::VectorXd& semi_axes)
{
    if (semi_axes.size() != grid.n + 1)
        throw ConfigError("make_ellipsoid: semi_axes has wrong dimension");
    if (semi_axes.minCoeff() <= 0.0) throw ConfigError("make_ellipsoid: axes must be positive");
    if (grid.kind == GridKind::Axisymmetric) {
        const double eq = semi_axes(0);
        for (int a = 1; a < grid.n; ++a)
            if (semi_axes(a) != eq)
                throw ConfigError("make_ellipsoid: axisymmetric grid needs equal equatorial axes");
    }
    SupportSurface s = grid;
    for (int i = 0; i < s.n_theta; ++i)
        for (int j = 0; j < s.n_phi; ++j) {
            const Eigen::VectorXd nu = s.direction(i, j);
            s.h(i, j) = std::sqrt((semi_axes.array().square() * nu.array().square()).sum());
        }
    return s;
}

double lens_flat_radius(double r_cap, double cap_center)
{
    return std::sqrt(r_cap * r_cap - cap_center * cap_center);
}

SupportSurface make_lens(const SupportSurface& grid, double r_cap, double cap_center,
                         double origin_height)
{
    if (grid.kind != GridKind::Axisymmetric)
        throw ConfigError("make_lens: lens bodies are axisymmetric only");
    if (!(0.0 < cap_center && cap_center < r_cap))
        throw ConfigError("make_lens: need 0 < cap_center < r_cap");
    const double rho0 = lens_flat_radius(r_cap, cap_center);
    SupportSurface s = grid;
    for (int i = 0; i < s.n_theta; ++i) {
        const double t = s.theta(i), ct = std::cos(t), st = std::sin(t);
        const double body = (ct >= -cap_center / r_cap) ? cap_center * ct + r_cap : rho0 * st;
        s.h(i, 0) = body - origin_height * ct;
    }
    return s;
}

namespace {
const char* kind_name(GridKind k)
{
    return k == GridKind::LatLong ? "latlong" : "axisymmetric";
}
GridKind kind_from_name(const std::string& name)
{
    if (name == "latlong") return GridKind::LatLong;
    if (name == "axisymmetric") return GridKind::Axisymmetric;
    throw ConfigError("unknown grid kind: " + name);
}
} // namespace

std::string surface_to_json(const SupportSurface& s)
{
    nlohmann::json j;
    j["schema"] = "qkflow.support_surface/1";
    j["n"] = s.n;
    j["grid"] = {{"kind", kind_name(s.kind)},
                 {"n_theta", s.n_theta},
                 {"n_phi", s.n_phi},
                 {"staggered", true}};
    j["origin"] = std::vector<double>(s.origin.data(), s.origin.data() + s.origin.size());
    std::vector<double> flat;
    flat.reserve(static_cast<size_t>(s.n_theta) * s.n_phi);
    for (int i = 0; i < s.n_theta; ++i)
        for (int jj = 0; jj < s.n_phi; ++jj) flat.push_back(s.h(i, jj));
    j["h"] = flat;
    return j.dump(2);
}

SupportSurface surface_from_json(const std::string& text)
{
    const nlohmann::json j = nlohmann::json::parse(text);
    if (j.value("schema", "") != "qkflow.support_surface/1")
        throw ConfigError("surface_from_json: unknown schema");
    const GridKind kind = kind_from_name(j.at("grid").at("kind").get<std::string>());
    const int n = j.at("n").get<int>();
    const int nt = j.at("grid").at("n_theta").get<int>();
    const int np = j.at("grid").at("n_phi").get<int>();
    SupportSurface s = (kind == GridKind::LatLong) ? SupportSurface::latlong(nt, np)
                                                   : SupportSurface::axisymmetric(n, nt);
    const auto origin = j.at("origin").get<std::vector<double>>();
    if (static_cast<int>(origin.size()) != s.n + 1)
        throw ConfigError("surface_from_json: origin dimension mismatch");
    s.origin = Eigen::Map<const Eigen::VectorXd>(origin.data(), origin.size());
    const auto flat = j.at("h").get<std::vector<double>>();
    if (static_cast<int>(flat.size()) != nt * np)
        throw ConfigError("surface_from_json: h length mismatch");
    for (int i = 0; i < nt; ++i)
        for (int jj = 0; jj < np; ++jj) s.h(i, jj) = flat[static_cast<size_t>(i) * np + jj];
    return s;
}

} // namespace qkflow::geom
