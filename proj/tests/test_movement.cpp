#include <doctest.h>

#include <kakeya/errors.hpp>
#include <kakeya/movement.hpp>

#include "test_helpers.hpp"

using namespace kakeya;
using kakeya::testing::Rng;

TEST_CASE("elementary movement of a translation is the linear path") {
    const Movement m = elementary_movement(translation(Point(2, 0)));
    CHECK(motion_distance(evaluate(m, 0.5), translation(Point(1, 0))) < 1e-14);
    CHECK(motion_distance(evaluate(m, 1.0), translation(Point(2, 0))) < 1e-14);
    CHECK(evaluate(m, 0.0).is_identity());
}

TEST_CASE("elementary movement of a rotation turns at constant speed") {
    const Movement m = elementary_movement(rotation(Point(0, 0), M_PI / 2));
    CHECK(motion_distance(evaluate(m, 0.5), rotation(Point(0, 0), M_PI / 4)) < 1e-13);
    const Movement off_center = elementary_movement(rotation(Point(3, -2), 1.2));
    CHECK(motion_distance(evaluate(off_center, 0.25), rotation(Point(3, -2), 0.3)) < 1e-13);
}

TEST_CASE("elementary movement degenerate cases") {
    CHECK_THROWS_AS(elementary_movement(rotation(Point(0, 0), M_PI)), HalfTurnError);
    CHECK_THROWS_AS(elementary_movement(rotation(Point(5, 1), -M_PI)), HalfTurnError);
    // alpha = identity: the constant identity movement.
    const Movement constant = elementary_movement(identity_motion());
    CHECK(constant.is_constant_identity());
    CHECK(evaluate(constant, 0.7).is_identity());
}

TEST_CASE("evaluate rejects out-of-range times") {
    const Movement m = elementary_movement(translation(Point(1, 0)));
    CHECK_THROWS_AS(evaluate(m, -0.01), TimeOutOfRangeError);
    CHECK_THROWS_AS(evaluate(m, 1.01), TimeOutOfRangeError);
}

TEST_CASE("inverse movement") {
    const Movement m = elementary_movement(translation(Point(0.5, -0.25)));
    const Movement inv = inverse_movement(m);
    CHECK(motion_distance(evaluate(inv, 1.0), translation(Point(-0.5, 0.25))) < 1e-14);
    CHECK(evaluate(inv, 0.0).is_identity());

    const Movement r = elementary_movement(rotation(Point(1, 1), 2.0));
    const Movement rinv = inverse_movement(r);
    for (int i = 0; i <= 32; ++i) {
        const double t = double(i) / 32.0;
        CHECK(motion_distance(compose(evaluate(rinv, t), evaluate(r, t)), identity_motion()) <
              1e-12);
    }
}

TEST_CASE("splice reproduces the iterated elementary movement on the grid") {
    SUBCASE("translation") {
        const RigidMotion beta = translation(Point(0.05, 0.02));
        const Movement segment = elementary_movement(beta);
        const long n = 8;
        const Movement fn = splice(segment, beta, n);
        const Movement en = elementary_movement(iterate(beta, n));
        for (long i = 1; i <= n; ++i) {
            const double t = double(i) / double(n);
            CHECK(motion_distance(evaluate(fn, t), iterate(beta, i)) < 1e-10);
            CHECK(motion_distance(evaluate(fn, t), evaluate(en, t)) < 1e-10);
        }
        CHECK(evaluate(fn, 0.0).is_identity());
    }
    SUBCASE("small rotation satisfies the grid identity") {
        const long n = 16;
        const RigidMotion beta = rotation(Point(0.2, -0.1), M_PI / (2.0 * double(n)));
        const Movement fn = splice(elementary_movement(beta), beta, n);
        const Movement en = elementary_movement(iterate(beta, n));
        for (long i = 1; i <= n; ++i)
            CHECK(motion_distance(evaluate(fn, double(i) / double(n)), evaluate(en, double(i) / double(n))) <
                  1e-10);
    }
    SUBCASE("n = 1 returns the segment itself") {
        const RigidMotion beta = rotation(Point(0, 0), 0.3);
        const Movement segment = elementary_movement(beta);
        const Movement spliced = splice(segment, beta, 1);
        CHECK(sup_distance(segment, spliced, 64) < 1e-15);
    }
    SUBCASE("mismatched endpoint raises") {
        const Movement segment = elementary_movement(translation(Point(1, 0)));
        CHECK_THROWS_AS(splice(segment, translation(Point(1.1, 0)), 4), SpliceMismatchError);
    }
}

TEST_CASE("piecewise movements agree at the joins from both sides") {
    const RigidMotion beta = rotation(Point(0.5, 0), 0.2);
    const Movement fn = splice(elementary_movement(beta), beta, 5);
    for (long i = 1; i < 5; ++i) {
        const double t = double(i) / 5.0;
        CHECK(motion_distance(evaluate(fn, t - 1e-12), evaluate(fn, t + 1e-12)) < 1e-9);
    }
}

TEST_CASE("sup_distance") {
    const Movement a = elementary_movement(translation(Point(1, 0)));
    CHECK(sup_distance(a, a, 100) == doctest::Approx(0.0));
    CHECK(sup_distance(a, Movement::constant_identity(), 101) == doctest::Approx(1.0));
    // Nearby rotations stay uniformly close.
    const Movement r1 = elementary_movement(rotation(Point(0, 0), M_PI / 2));
    const Movement r2 = elementary_movement(rotation(Point(0, 0), M_PI / 2 + 1e-3));
    CHECK(sup_distance(r1, r2, 512) < 2e-3);
    // Monotone nondecreasing in the sample count.
    CHECK(sup_distance(r1, r2, 8) <= sup_distance(r1, r2, 512) + 1e-15);
}

TEST_CASE("elementary increment bound (check_elementary_increment_bound)") {
    SUBCASE("translation") {
        CHECK(check_elementary_increment_bound(translation(Point(3, 1)), 16).pass);
    }
    SUBCASE("far-center large-angle rotation") {
        const auto report = check_elementary_increment_bound(rotation(Point(5, 0), 3.0), 24);
        CHECK(report.pass);
        CHECK(report.samples_checked > 0);
    }
    SUBCASE("random motions") {
        Rng rng(31);
        for (int i = 0; i < 20; ++i)
            CHECK(check_elementary_increment_bound(kakeya::testing::random_elementary_motion(rng), 12)
                      .pass);
    }
    SUBCASE("half turn is rejected") {
        CHECK_THROWS_AS(check_elementary_increment_bound(rotation(Point(0, 0), M_PI), 8),
                        HalfTurnError);
    }
}

TEST_CASE("splice distance bound (check_splice_distance)") {
    SUBCASE("elementary segment") {
        const long n = 12;
        const RigidMotion beta = translation(Point(1.0 / (2.0 * double(n)), 0));
        CHECK(check_splice_distance(beta, n, elementary_movement(beta)).pass);
    }
    SUBCASE("n = 1 makes the bound trivial") {
        const RigidMotion beta = rotation(Point(0, 0), 0.4);
        CHECK(check_splice_distance(beta, 1, elementary_movement(beta)).pass);
    }
    SUBCASE("wiggling segment still fits the 8/n bound") {
        const long n = 10;
        const RigidMotion beta = translation(Point(0.4 / double(n), 0));
        // Perturbed path to beta staying within 1/n of the identity.
        std::vector<std::pair<double, RigidMotion>> table;
        for (long i = 0; i <= 16; ++i) {
            const double t = double(i) / 16.0;
            const Point wobble = 0.2 / double(n) * Point(std::sin(2.0 * M_PI * t), 0.0) * t;
            table.push_back({t, translation(t * beta.c() + wobble * (1.0 - t))});
        }
        const Movement segment = Movement::sampled(std::move(table));
        CHECK(check_splice_distance(beta, n, segment).pass);
    }
    SUBCASE("perturbed rotation segment still fits the bound") {
        const long n = 12;
        const Point center(0.2, 0.0);
        const double phi = 0.4 / double(n);
        const RigidMotion beta = rotation(center, phi);
        std::vector<std::pair<double, RigidMotion>> table;
        for (long i = 0; i <= 24; ++i) {
            const double s = double(i) / 24.0;
            const Point wobble =
                (0.05 / double(n)) * std::sin(2.0 * M_PI * s) * (1.0 - s) * Point(1, 1);
            table.push_back({s, compose(translation(wobble), rotation(center, s * phi))});
        }
        CHECK(check_splice_distance(beta, n, Movement::sampled(std::move(table))).pass);
    }
    SUBCASE("drifting segment is rejected") {
        const long n = 10;
        const RigidMotion beta = translation(Point(0.5 / double(n), 0));
        std::vector<std::pair<double, RigidMotion>> table;
        table.push_back({0.0, identity_motion()});
        table.push_back({0.5, translation(Point(3.0 / double(n), 0))});
        table.push_back({1.0, beta});
        CHECK_THROWS_AS(check_splice_distance(beta, n, Movement::sampled(std::move(table))),
                        SpliceDriftError);
    }
}

TEST_CASE("sampled movements interpolate rigidly and record their modulus") {
    const Movement source = elementary_movement(rotation(Point(1, 0), 1.0));
    std::vector<std::pair<double, RigidMotion>> table;
    for (long i = 0; i <= 8; ++i) {
        const double t = double(i) / 8.0;
        table.push_back({t, evaluate(source, t)});
    }
    const Movement resampled = Movement::sampled(std::move(table));
    CHECK(resampled.sampled_modulus() > 0.0);
    CHECK(sup_distance(source, resampled, 257) < 2e-2);
    Rng rng(32);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 32; ++i) {
        const RigidMotion m = evaluate(resampled, u(rng));
        CHECK(std::abs(std::abs(m.u()) - 1.0) <= 1e-12);
    }
    // The table must start at the identity.
    CHECK_THROWS_AS(Movement::sampled({{0.0, translation(Point(1, 0))}, {1.0, identity_motion()}}),
                    InvalidArgumentError);
}

TEST_CASE("restriction reparameterizes linearly") {
    const Movement m = elementary_movement(translation(Point(2, 0)));
    const Movement head = Movement::restriction(m, 0.0, 0.25);
    CHECK(motion_distance(head.end(), translation(Point(0.5, 0))) < 1e-14);
    CHECK(head.at(0.0).is_identity());
    const Movement tail = Movement::restriction(m, 0.5, 1.0);
    CHECK(tail.at(0.0).is_identity());
    CHECK(motion_distance(tail.end(), translation(Point(1, 0))) < 1e-14);
}

TEST_CASE("elementary movements commute with conjugation") {
    Rng rng(33);
    for (int i = 0; i < 20; ++i) {
        const RigidMotion alpha = kakeya::testing::random_elementary_motion(rng, 3.0);
        const RigidMotion g = kakeya::testing::random_motion(rng, 3.0);
        const RigidMotion conj = compose(compose(g, alpha), inverse(g));
        if (std::abs(conj.u() + Point(1, 0)) < 1e-6) continue;
        const Movement lhs = elementary_movement(conj);
        const Movement rhs_inner = elementary_movement(alpha);
        for (int k = 0; k <= 16; ++k) {
            const double t = double(k) / 16.0;
            const RigidMotion rhs = compose(compose(g, evaluate(rhs_inner, t)), inverse(g));
            CHECK(motion_distance(evaluate(lhs, t), rhs) < 1e-10);
        }
    }
}

TEST_CASE("elementary movements depend continuously on the motion") {
    SUBCASE("rotation centers converging") {
        const Movement limit = elementary_movement(rotation(Point(1, 1), 0.8));
        double prev = 1e9;
        for (double step : {0.1, 0.01, 0.001}) {
            const Movement near_m = elementary_movement(rotation(Point(1 + step, 1 - step), 0.8));
            const double d = sup_distance(limit, near_m, 256);
            CHECK(d < prev);
            prev = d;
        }
        CHECK(prev < 1e-2);
    }
    SUBCASE("angles converging") {
        const Movement limit = elementary_movement(rotation(Point(-0.5, 0.2), 1.1));
        double prev = 1e9;
        for (double step : {0.1, 0.01, 0.001}) {
            const Movement near_m = elementary_movement(rotation(Point(-0.5, 0.2), 1.1 + step));
            const double d = sup_distance(limit, near_m, 256);
            CHECK(d < prev);
            prev = d;
        }
        CHECK(prev < 1e-2);
    }
    SUBCASE("rotations degenerating to a translation") {
        const Point a(0.7, -0.4);
        const Movement limit = elementary_movement(translation(a));
        double prev = 1e9;
        for (double phi : {1e-2, 1e-3, 1e-4}) {
            const Movement near_m =
                elementary_movement(RigidMotion(unit_from_angle(phi), a));
            const double d = sup_distance(limit, near_m, 256);
            CHECK(d < prev);
            prev = d;
        }
        CHECK(prev < 1e-2);
    }
}

TEST_CASE("movement evaluations keep the unit-modulus invariant") {
    Rng rng(34);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const RigidMotion beta = rotation(Point(0.3, 0.3), 0.05);
    const std::vector<Movement> movements = {
        elementary_movement(kakeya::testing::random_elementary_motion(rng)),
        inverse_movement(elementary_movement(rotation(Point(2, 2), 1.5))),
        splice(elementary_movement(beta), beta, 7),
        Movement::restriction(elementary_movement(translation(Point(1, 1))), 0.25, 0.75),
    };
    for (const Movement& m : movements)
        for (int i = 0; i < 32; ++i)
            CHECK(std::abs(std::abs(evaluate(m, u(rng)).u()) - 1.0) <= 1e-12);
}
