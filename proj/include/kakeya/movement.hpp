#pragma once

#include <kakeya/rigid_motion.hpp>

#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace kakeya {

// A continuous movement: t in [0,1] |-> rigid motion M_t with M_0 = identity.
//
// Kinds: constant identity, elementary translation/rotation paths E^alpha,
// inverse of a movement, spliced (segment list with breakpoints, prefix poses
// composed on the left as in F^n_t = beta^{i-1} o M_{t-(i-1)/n}), linear
// reparameterization, and sampled tables with shortest-arc angle interpolation.
class Movement {
public:
    Movement(); // constant identity

    RigidMotion at(double t) const;

    // The motion reached at t = 1.
    RigidMotion end() const { return at(1.0); }

    // Canonical path from the identity to alpha. Translations move linearly,
    // rotations turn at constant speed with |phi| < pi. alpha = identity yields
    // the constant identity movement; u = -1 has no canonical short path and
    // raises HalfTurnError.
    static Movement elementary(const RigidMotion& alpha);

    static Movement constant_identity();

    // M^{-1}_t = (M_t)^{-1}.
    static Movement inverse_of(Movement m);

    // Segment-list movement: during segment i the pose is
    // prefix_{i-1} o segment_i(local_t), where prefix_i = prefix_{i-1} o segment_i(1).
    // Every segment starts at the identity, so the joins agree from both sides.
    static Movement piecewise(std::vector<double> breakpoints, std::vector<Movement> segments);

    // The F^n construction: n copies of `segment` (viewed as the motion over one
    // slot of width 1/n), each prefixed by a power of beta. Requires
    // segment.end() = beta within tol (SpliceMismatchError otherwise). n = 1
    // returns `segment` itself.
    static Movement spliced(Movement segment, const RigidMotion& beta, long n, double tol = 1e-9);

    // Sample table; first sample must be (0, identity). Rotation parts are
    // interpolated by shortest arc, offsets linearly, so every interpolated
    // pose is rigid. The Lipschitz modulus of the table is recorded.
    static Movement sampled(std::vector<std::pair<double, RigidMotion>> samples);

    // Linear reparameterization onto the window [t0, t1] of `m` (t0 = 0 keeps
    // the M_0 = identity invariant; t0 > 0 is composed with the inverse of
    // M_{t0} so the result again starts at the identity).
    static Movement restriction(Movement m, double t0, double t1);

    // Set when the movement is a straight translation path t -> T_{t*c}.
    std::optional<Point> translation_path() const;

    // Set when the movement is a constant-speed rotation t -> R_{center, t*phi}.
    struct RotationPath {
        Point center;
        double angle;
    };
    std::optional<RotationPath> rotation_path() const;

    bool is_constant_identity() const;

    // Recorded Lipschitz modulus for sampled movements, 0 otherwise.
    double sampled_modulus() const;

    // Construction parameters recorded by spliced(), for serialization.
    struct SpliceDescription {
        RigidMotion beta;
        long n = 1;
    };
    std::optional<SpliceDescription> splice_description() const;
    std::optional<Movement> splice_segment() const;

    // Copy of the sample table for sampled movements.
    std::optional<std::vector<std::pair<double, RigidMotion>>> sample_table() const;

    struct Impl;
    const Impl& impl() const { return *impl_; }

private:
    explicit Movement(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

Movement elementary_movement(const RigidMotion& alpha);
RigidMotion evaluate(const Movement& m, double t);
Movement inverse_movement(const Movement& m);
Movement splice(const Movement& segment, const RigidMotion& beta, long n);

// Max over `samples` uniformly spaced t of op_norm(M1_t - M2_t).
double sup_distance(const Movement& m1, const Movement& m2, long samples);

// Verifies |E^alpha_{t1}(x) - E^alpha_{t2}(x)| <= 2 |t1 - t2| (|alpha| + 1)
// over a grid x grid set of time pairs and 256 points of the closed unit disc.
BoundReport check_elementary_increment_bound(const RigidMotion& alpha, long grid);

// Verifies |F^n_t(x) - E^{alpha_n}_t(x)| <= 8/n for alpha_n = beta^n, where F^n
// splices `segment` (the movement over one 1/n slot, ending at beta). Requires
// op_norm(beta - j) <= 1/n and the segment to stay within 1/n of the identity.
BoundReport check_splice_distance(const RigidMotion& beta, long n, const Movement& segment);

// Deterministic points covering the closed unit disc (rings x angles).
std::vector<Point> unit_disc_points(long count);

} // namespace kakeya
