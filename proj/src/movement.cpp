#include <kakeya/errors.hpp>
#include <kakeya/movement.hpp>

#include <algorithm>
#include <variant>

namespace kakeya {

namespace {

constexpr double kTimeTol = 1e-12;
constexpr double kDegenerateTol = 1e-9; // switch between the u = 1 and u != 1 paths

double checked_time(double t) {
    if (!(t >= -kTimeTol && t <= 1.0 + kTimeTol))
        throw TimeOutOfRangeError("movement time must lie in [0, 1]");
    return std::clamp(t, 0.0, 1.0);
}

} // namespace

struct Movement::Impl {
    struct ConstantIdentity {};
    struct ElementaryTranslation {
        Point target;
    };
    struct ElementaryRotation {
        Point center;
        double angle; // |angle| < pi
    };
    struct Inverse {
        Movement inner;
    };
    struct Piecewise {
        std::vector<double> breakpoints;    // 0 = b0 < ... < bn = 1
        std::vector<Movement> segments;     // segment i covers [b_i, b_{i+1}]
        std::vector<RigidMotion> prefixes;  // prefixes[i] = pose before segment i
        // Set when built by spliced(): the construction parameters, kept for
        // serialization.
        std::optional<std::pair<RigidMotion, long>> splice_params;
    };
    struct Restriction {
        Movement inner;
        double t0;
        double t1;
        RigidMotion start_inverse; // inverse of inner.at(t0)
    };
    struct Sampled {
        std::vector<double> times;
        std::vector<RigidMotion> motions;
        std::vector<double> angles; // unwrapped rotation angles along the table
        double modulus = 0.0;
    };

    std::variant<ConstantIdentity, ElementaryTranslation, ElementaryRotation, Inverse, Piecewise,
                 Restriction, Sampled>
        node;
};

Movement::Movement() : impl_(std::make_shared<Impl>()) {}

Movement Movement::constant_identity() { return Movement(); }

Movement Movement::elementary(const RigidMotion& alpha) {
    const Point u = alpha.u();
    if (alpha.is_identity(kDegenerateTol)) return constant_identity();
    if (std::abs(u + Point(1.0, 0.0)) <= kDegenerateTol)
        throw HalfTurnError("alpha is a point reflection (u = -1): alpha^2 = identity");

    auto impl = std::make_shared<Impl>();
    if (std::abs(u - Point(1.0, 0.0)) <= kDegenerateTol) {
        impl->node = Impl::ElementaryTranslation{alpha.c()};
    } else {
        const double phi = alpha.angle();
        const Point center = alpha.c() / (Point(1.0, 0.0) - u);
        impl->node = Impl::ElementaryRotation{center, phi};
    }
    return Movement(std::move(impl));
}

Movement Movement::inverse_of(Movement m) {
    auto impl = std::make_shared<Impl>();
    impl->node = Impl::Inverse{std::move(m)};
    return Movement(std::move(impl));
}

namespace {

Movement::Impl::Piecewise make_piecewise(std::vector<double> breakpoints,
                                         std::vector<Movement> segments) {
    if (segments.empty() || breakpoints.size() != segments.size() + 1)
        throw InvalidArgumentError("piecewise movement needs n segments and n+1 breakpoints");
    if (std::abs(breakpoints.front()) > kTimeTol || std::abs(breakpoints.back() - 1.0) > kTimeTol)
        throw InvalidArgumentError("piecewise breakpoints must run from 0 to 1");
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw InvalidArgumentError("piecewise breakpoints must be strictly increasing");

    Movement::Impl::Piecewise pw;
    pw.breakpoints = std::move(breakpoints);
    pw.segments = std::move(segments);
    pw.prefixes.reserve(pw.segments.size());
    RigidMotion pose = identity_motion();
    for (const Movement& seg : pw.segments) {
        pw.prefixes.push_back(pose);
        pose = compose(pose, seg.end());
    }
    return pw;
}

} // namespace

Movement Movement::piecewise(std::vector<double> breakpoints, std::vector<Movement> segments) {
    auto impl = std::make_shared<Impl>();
    impl->node = make_piecewise(std::move(breakpoints), std::move(segments));
    return Movement(std::move(impl));
}

Movement Movement::spliced(Movement segment, const RigidMotion& beta, long n, double tol) {
    if (n < 1) throw InvalidArgumentError("splice requires n >= 1");
    const double mismatch = motion_distance(segment.end(), beta);
    if (mismatch > tol)
        throw SpliceMismatchError("segment endpoint differs from beta by " + std::to_string(mismatch));
    if (n == 1) return segment;

    std::vector<double> breaks(size_t(n) + 1);
    for (long i = 0; i <= n; ++i) breaks[size_t(i)] = double(i) / double(n);
    breaks.back() = 1.0;
    auto pw = make_piecewise(std::move(breaks), std::vector<Movement>(size_t(n), segment));
    pw.splice_params = std::make_pair(beta, n);
    auto impl = std::make_shared<Impl>();
    impl->node = std::move(pw);
    return Movement(std::move(impl));
}

Movement Movement::sampled(std::vector<std::pair<double, RigidMotion>> samples) {
    if (samples.size() < 2) throw InvalidArgumentError("sampled movement needs at least 2 samples");
    std::sort(samples.begin(), samples.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (std::abs(samples.front().first) > kTimeTol || std::abs(samples.back().first - 1.0) > kTimeTol)
        throw InvalidArgumentError("sampled movement must cover [0, 1]");
    if (!samples.front().second.is_identity(1e-9))
        throw InvalidArgumentError("sampled movement must start at the identity (M_0 = j)");

    Impl::Sampled s;
    s.times.reserve(samples.size());
    s.motions.reserve(samples.size());
    s.angles.reserve(samples.size());
    double prev_angle = 0.0;
    for (size_t i = 0; i < samples.size(); ++i) {
        if (i > 0 && !(samples[i].first > s.times.back() + kTimeTol))
            throw InvalidArgumentError("sampled movement times must be strictly increasing");
        s.times.push_back(samples[i].first);
        s.motions.push_back(samples[i].second);
        // Unwrap along the table: each step takes the shortest arc.
        const double raw = samples[i].second.angle();
        double a = i == 0 ? raw : prev_angle + wrap_angle(raw - wrap_angle(prev_angle));
        s.angles.push_back(a);
        prev_angle = a;
    }
    for (size_t i = 0; i + 1 < s.times.size(); ++i) {
        const double d = motion_distance(s.motions[i + 1], s.motions[i]);
        s.modulus = std::max(s.modulus, d / (s.times[i + 1] - s.times[i]));
    }
    auto impl = std::make_shared<Impl>();
    impl->node = std::move(s);
    return Movement(std::move(impl));
}

Movement Movement::restriction(Movement m, double t0, double t1) {
    if (!(t0 >= 0.0 && t1 <= 1.0 + kTimeTol && t0 < t1))
        throw InvalidArgumentError("restriction window must satisfy 0 <= t0 < t1 <= 1");
    Impl::Restriction r{std::move(m), t0, std::min(t1, 1.0), identity_motion()};
    r.start_inverse = inverse(r.inner.at(t0));
    auto impl = std::make_shared<Impl>();
    impl->node = std::move(r);
    return Movement(std::move(impl));
}

RigidMotion Movement::at(double t) const {
    t = checked_time(t);
    const Impl& im = *impl_;
    if (std::holds_alternative<Impl::ConstantIdentity>(im.node)) return identity_motion();
    if (const auto* e = std::get_if<Impl::ElementaryTranslation>(&im.node))
        return translation(t * e->target);
    if (const auto* e = std::get_if<Impl::ElementaryRotation>(&im.node))
        return rotation(e->center, t * e->angle);
    if (const auto* e = std::get_if<Impl::Inverse>(&im.node)) return inverse(e->inner.at(t));
    if (const auto* e = std::get_if<Impl::Piecewise>(&im.node)) {
        const auto& b = e->breakpoints;
        size_t i = size_t(std::upper_bound(b.begin(), b.end(), t) - b.begin());
        if (i > 0) --i;
        if (i >= e->segments.size()) i = e->segments.size() - 1;
        const double local = (t - b[i]) / (b[i + 1] - b[i]);
        return compose(e->prefixes[i], e->segments[i].at(std::clamp(local, 0.0, 1.0)));
    }
    if (const auto* e = std::get_if<Impl::Restriction>(&im.node)) {
        const double inner_t = e->t0 + t * (e->t1 - e->t0);
        return compose(e->start_inverse, e->inner.at(inner_t));
    }
    const auto& s = std::get<Impl::Sampled>(im.node);
    const auto it = std::upper_bound(s.times.begin(), s.times.end(), t);
    size_t i = size_t(it - s.times.begin());
    if (i > 0) --i;
    if (i + 1 >= s.times.size()) return s.motions.back();
    const double w = (t - s.times[i]) / (s.times[i + 1] - s.times[i]);
    const double angle = s.angles[i] + w * (s.angles[i + 1] - s.angles[i]);
    const Point offset = s.motions[i].c() + w * (s.motions[i + 1].c() - s.motions[i].c());
    return RigidMotion(std::polar(1.0, angle), offset);
}

std::optional<Point> Movement::translation_path() const {
    if (const auto* e = std::get_if<Impl::ElementaryTranslation>(&impl_->node)) return e->target;
    if (std::holds_alternative<Impl::ConstantIdentity>(impl_->node)) return Point(0.0, 0.0);
    if (const auto* e = std::get_if<Impl::Restriction>(&impl_->node)) {
        if (auto c = e->inner.translation_path())
            return (e->t1 - e->t0) * *c;
        return std::nullopt;
    }
    if (const auto* e = std::get_if<Impl::Inverse>(&impl_->node)) {
        if (auto c = e->inner.translation_path()) return -*c;
        return std::nullopt;
    }
    return std::nullopt;
}

std::optional<Movement::RotationPath> Movement::rotation_path() const {
    if (const auto* e = std::get_if<Impl::ElementaryRotation>(&impl_->node))
        return RotationPath{e->center, e->angle};
    if (const auto* e = std::get_if<Impl::Piecewise>(&impl_->node)) {
        // Same-center constant-speed segments compose into one rotation path
        // (how angles of pi or more are represented).
        std::optional<RotationPath> first = e->segments.front().rotation_path();
        if (!first) return std::nullopt;
        double total = 0.0;
        const double rate = first->angle / (e->breakpoints[1] - e->breakpoints[0]);
        for (size_t i = 0; i < e->segments.size(); ++i) {
            const auto rp = e->segments[i].rotation_path();
            const double width = e->breakpoints[i + 1] - e->breakpoints[i];
            if (!rp || std::abs(rp->center - first->center) > 1e-12 ||
                std::abs(rp->angle / width - rate) > 1e-12)
                return std::nullopt;
            total += rp->angle;
        }
        return RotationPath{first->center, total};
    }
    if (const auto* e = std::get_if<Impl::Restriction>(&impl_->node)) {
        if (auto rp = e->inner.rotation_path()) {
            // Window of a constant-speed rotation is again one, conjugated to
            // start at the identity: same center, scaled angle.
            return RotationPath{rp->center, (e->t1 - e->t0) * rp->angle};
        }
        return std::nullopt;
    }
    if (const auto* e = std::get_if<Impl::Inverse>(&impl_->node)) {
        if (auto rp = e->inner.rotation_path()) return RotationPath{rp->center, -rp->angle};
        return std::nullopt;
    }
    return std::nullopt;
}

bool Movement::is_constant_identity() const {
    return std::holds_alternative<Impl::ConstantIdentity>(impl_->node);
}

double Movement::sampled_modulus() const {
    if (const auto* s = std::get_if<Impl::Sampled>(&impl_->node)) return s->modulus;
    return 0.0;
}

std::optional<Movement::SpliceDescription> Movement::splice_description() const {
    if (const auto* pw = std::get_if<Impl::Piecewise>(&impl_->node))
        if (pw->splice_params)
            return SpliceDescription{pw->splice_params->first, pw->splice_params->second};
    return std::nullopt;
}

std::optional<Movement> Movement::splice_segment() const {
    if (const auto* pw = std::get_if<Impl::Piecewise>(&impl_->node))
        if (pw->splice_params) return pw->segments.front();
    return std::nullopt;
}

std::optional<std::vector<std::pair<double, RigidMotion>>> Movement::sample_table() const {
    if (const auto* s = std::get_if<Impl::Sampled>(&impl_->node)) {
        std::vector<std::pair<double, RigidMotion>> out;
        out.reserve(s->times.size());
        for (size_t i = 0; i < s->times.size(); ++i) out.push_back({s->times[i], s->motions[i]});
        return out;
    }
    return std::nullopt;
}

Movement elementary_movement(const RigidMotion& alpha) { return Movement::elementary(alpha); }

RigidMotion evaluate(const Movement& m, double t) { return m.at(t); }

Movement inverse_movement(const Movement& m) { return Movement::inverse_of(m); }

Movement splice(const Movement& segment, const RigidMotion& beta, long n) {
    return Movement::spliced(segment, beta, n);
}

double sup_distance(const Movement& m1, const Movement& m2, long samples) {
    if (samples < 2) throw InvalidArgumentError("sup_distance requires samples >= 2");
    double best = 0.0;
    for (long i = 0; i < samples; ++i) {
        const double t = double(i) / double(samples - 1);
        best = std::max(best, motion_distance(m1.at(t), m2.at(t)));
    }
    return best;
}

std::vector<Point> unit_disc_points(long count) {
    std::vector<Point> pts;
    pts.reserve(size_t(count));
    // Concentric rings, outermost exactly on the unit circle.
    const long rings = std::max(2L, (long)std::floor(std::sqrt(double(count) / 4.0)));
    const long per_ring = count / rings;
    for (long r = 0; r < rings && (long)pts.size() < count; ++r) {
        const double radius = double(r + 1) / double(rings);
        for (long a = 0; a < per_ring && (long)pts.size() < count; ++a) {
            const double theta = 2.0 * M_PI * double(a) / double(per_ring) + 0.1 * double(r);
            pts.push_back(radius * unit_from_angle(theta));
        }
    }
    while ((long)pts.size() < count) pts.push_back(Point(0.0, 0.0));
    return pts;
}

BoundReport check_elementary_increment_bound(const RigidMotion& alpha, long grid) {
    if (grid < 2) throw InvalidArgumentError("grid must be >= 2");
    const Movement e = Movement::elementary(alpha);
    const double bound_factor = 2.0 * (op_norm(alpha.affine()) + 1.0);
    const auto points = unit_disc_points(256);

    BoundReport report;
    std::vector<RigidMotion> motions(static_cast<size_t>(grid));
    for (long i = 0; i < grid; ++i) motions[size_t(i)] = e.at(double(i) / double(grid - 1));

    for (long i = 0; i < grid; ++i) {
        for (long j = 0; j < grid; ++j) {
            const double dt = std::abs(double(i) - double(j)) / double(grid - 1);
            const double allowed = dt * bound_factor;
            for (const Point& x : points) {
                const double lhs = std::abs(motions[size_t(i)](x) - motions[size_t(j)](x));
                report.max_violation = std::max(report.max_violation, lhs - allowed);
                ++report.samples_checked;
            }
        }
    }
    report.pass = report.max_violation <= 1e-12;
    return report;
}

BoundReport check_splice_distance(const RigidMotion& beta, long n, const Movement& segment) {
    if (n < 1) throw InvalidArgumentError("check_splice_distance requires n >= 1");
    const double beta_dist = motion_distance(beta, identity_motion());
    if (beta_dist > 1.0 / double(n) + 1e-12)
        throw InvalidArgumentError("beta must satisfy op_norm(beta - j) <= 1/n");
    // The segment models M_t over t in [0, 1/n]; it must stay within 1/n of j.
    for (long i = 0; i <= 256; ++i) {
        const double t = double(i) / 256.0;
        if (motion_distance(segment.at(t), identity_motion()) > 1.0 / double(n) + 1e-9)
            throw SpliceDriftError("segment strays farther than 1/n from the identity");
    }

    const Movement fn = Movement::spliced(segment, beta, n);
    const RigidMotion alpha_n = iterate(beta, n);
    const Movement en = Movement::elementary(alpha_n);

    const auto points = unit_disc_points(32);
    BoundReport report;
    const double allowed = 8.0 / double(n);
    const long time_samples = 1024 / (long)points.size() + 32;
    for (long i = 0; i <= time_samples; ++i) {
        const double t = double(i) / double(time_samples);
        const RigidMotion f = fn.at(t);
        const RigidMotion g = en.at(t);
        for (const Point& x : points) {
            const double lhs = std::abs(f(x) - g(x));
            report.max_violation = std::max(report.max_violation, lhs - allowed);
            ++report.samples_checked;
        }
    }
    report.pass = report.max_violation <= 1e-12;
    return report;
}

} // namespace kakeya
