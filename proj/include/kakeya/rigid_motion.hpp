#pragma once

#include <kakeya/errors.hpp>
#include <kakeya/geometry.hpp>
#include <kakeya/report.hpp>

namespace kakeya {

// Affine map x -> u*x + v on the complex plane (the space L).
// The norm |u| + |v| equals sup{|f(x)| : |x| <= 1}.
struct AffineMap {
    Point u{1.0, 0.0};
    Point v{0.0, 0.0};

    Point apply(Point x) const { return u * x + v; }

    AffineMap operator-(const AffineMap& o) const { return {u - o.u, v - o.v}; }
    AffineMap operator+(const AffineMap& o) const { return {u + o.u, v + o.v}; }
    AffineMap operator*(double s) const { return {s * u, s * v}; }
};

inline double op_norm(const AffineMap& f) { return std::abs(f.u) + std::abs(f.v); }

// Orientation-preserving isometry x -> u*x + c with |u| = 1.
// The rotation part is renormalized on construction so long compose/iterate
// chains keep the unit-modulus invariant.
class RigidMotion {
public:
    RigidMotion() = default;

    RigidMotion(Point rotation, Point offset) : u_(rotation), c_(offset) {
        const double m = std::abs(u_);
        if (!(m > 0.0) || !finite(u_) || !finite(c_))
            throw InvalidArgumentError("rigid motion coefficients must be finite with u != 0");
        if (std::abs(m - 1.0) > 1e-15) u_ /= m;
    }

    Point u() const { return u_; }
    Point c() const { return c_; }

    Point apply(Point x) const { return u_ * x + c_; }
    Point operator()(Point x) const { return apply(x); }

    AffineMap affine() const { return {u_, c_}; }

    // Rotation angle in (-pi, pi].
    double angle() const { return std::atan2(u_.imag(), u_.real()); }

    bool is_identity(double tol = 1e-12) const {
        return std::abs(u_ - Point(1.0, 0.0)) <= tol && std::abs(c_) <= tol;
    }

private:
    Point u_{1.0, 0.0};
    Point c_{0.0, 0.0};
};

inline RigidMotion identity_motion() { return RigidMotion(); }

inline RigidMotion translation(Point c) { return RigidMotion(Point(1.0, 0.0), c); }

// R_{c,phi}(x) = e^{i phi} (x - c) + c.
inline RigidMotion rotation(Point center, double phi) {
    const Point u = unit_from_angle(phi);
    return RigidMotion(u, center * (Point(1.0, 0.0) - u));
}

// f after g: apply(compose(f,g), x) = f(g(x)).
inline RigidMotion compose(const RigidMotion& f, const RigidMotion& g) {
    return RigidMotion(f.u() * g.u(), f.u() * g.c() + f.c());
}

inline RigidMotion inverse(const RigidMotion& f) {
    const Point ubar = std::conj(f.u());
    return RigidMotion(ubar, -ubar * f.c());
}

inline double motion_distance(const RigidMotion& a, const RigidMotion& b) {
    return op_norm(a.affine() - b.affine());
}

// Geometric sum 1 + u + ... + u^{n-1}; closed form away from u = 1,
// the limit value n near it (avoids cancellation).
Point rotation_geometric_sum(Point u, long n);

// n-th iterate via the closed form alpha^n(x) = u^n x + (1+u+...+u^{n-1}) a.
RigidMotion iterate(const RigidMotion& alpha, long n);

// Checks |alpha^n - j| = |1+u+...+u^{n-1}| * |alpha - j| (e1) and, when
// |u-1| <= 1/n, the lower bound |alpha^n - j| >= (n/2) |alpha - j| (e2).
ConstructionReport check_iterate_norm_identity(const RigidMotion& alpha, long n);

// Checks |f1^{-1} - f2^{-1}| <= (1 + |v2|) |f1 - f2| (e8).
ConstructionReport check_inverse_lipschitz(const RigidMotion& f1, const RigidMotion& f2);

} // namespace kakeya
