#include <kakeya/errors.hpp>
#include <kakeya/rigid_motion.hpp>

namespace kakeya {

namespace {
constexpr double kExactTol = 1e-12;
constexpr double kChainTol = 1e-9;
} // namespace

Point rotation_geometric_sum(Point u, long n) {
    if (std::abs(u - Point(1.0, 0.0)) > 1e-9) {
        // u^n from the polar form keeps the modulus exact under large n.
        const Point un = std::polar(std::pow(std::abs(u), double(n)), std::atan2(u.imag(), u.real()) * double(n));
        return (un - Point(1.0, 0.0)) / (u - Point(1.0, 0.0));
    }
    return Point(double(n), 0.0);
}

RigidMotion iterate(const RigidMotion& alpha, long n) {
    if (n < 1) throw InvalidArgumentError("iterate requires n >= 1");
    const Point un = std::polar(1.0, alpha.angle() * double(n));
    return RigidMotion(un, rotation_geometric_sum(alpha.u(), n) * alpha.c());
}

ConstructionReport check_iterate_norm_identity(const RigidMotion& alpha, long n) {
    if (n < 1) throw InvalidArgumentError("check_iterate_norm_identity requires n >= 1");
    ConstructionReport report;
    report.name = "iterate_norm_identity";

    const RigidMotion an = iterate(alpha, n);
    const double lhs = motion_distance(an, identity_motion());

    // Literal partial sum, independent of the closed form used by iterate().
    Point sum(0.0, 0.0);
    Point power(1.0, 0.0);
    for (long i = 0; i < n; ++i) {
        sum += power;
        power *= alpha.u();
    }
    const double base = motion_distance(alpha, identity_motion());
    const double rhs = std::abs(sum) * base;

    report.measured["lhs"] = lhs;
    report.measured["rhs"] = rhs;
    report.checks.push_back({"norm_identity", std::abs(lhs - rhs), 0.0, kChainTol,
                             std::abs(lhs - rhs) < kChainTol});

    if (std::abs(alpha.u() - Point(1.0, 0.0)) <= 1.0 / double(n)) {
        const double lower = 0.5 * double(n) * base;
        report.checks.push_back({"half_n_lower_bound", lower, lhs, kExactTol, lower <= lhs + kExactTol});
    }
    return report;
}

ConstructionReport check_inverse_lipschitz(const RigidMotion& f1, const RigidMotion& f2) {
    ConstructionReport report;
    report.name = "inverse_lipschitz";
    const double lhs = motion_distance(inverse(f1), inverse(f2));
    const double rhs = (1.0 + std::abs(f2.c())) * motion_distance(f1, f2);
    report.measured["lhs"] = lhs;
    report.measured["rhs"] = rhs;
    report.add_check("inverse_lipschitz", lhs, rhs, kExactTol);
    return report;
}

} // namespace kakeya
