#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "geoflow/hyperbolic.hpp"

using namespace geoflow;

namespace {

constexpr double kPi = std::numbers::pi;

Pointer random_pointer(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ux(-3.0, 3.0), uy(0.2, 5.0), ua(0.0, 2.0 * kPi);
    return {UpperHalfPoint{ux(rng), uy(rng)}, ua(rng)};
}

MobiusTransform random_transform(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    while (true) {
        const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
        if (a * d - b * c > 0.1) return MobiusTransform::from_entries(a, b, c, d);
    }
}

bool pointer_close(const Pointer& p, const Pointer& q, double tol = kGeomTol) {
    double da = std::abs(p.angle - q.angle);
    da = std::min(da, 2.0 * kPi - da);
    return hyperbolic_distance(p.base, q.base) <= tol && da <= tol;
}

}  // namespace

TEST_CASE("points must stay in the upper half plane") {
    CHECK_THROWS_AS(UpperHalfPoint(0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(UpperHalfPoint(1.0, -2.0), std::invalid_argument);
    CHECK(UpperHalfPoint(1.0, 2.0).y == 2.0);
}

TEST_CASE("normalization produces unit determinant and canonical sign") {
    const auto m = MobiusTransform::from_entries(-2.0, 0.0, 0.0, -0.5);
    CHECK(m.a() == 2.0);  // sign flipped to the canonical representative
    CHECK(m.d() == 0.5);
    const auto scaled = MobiusTransform::from_entries(3.0, 0.0, 0.0, 3.0);
    CHECK(approx_identity(scaled, kMatrixTol));
    CHECK(m.a() * m.d() - m.b() * m.c() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(m.a() > 0.0);
    CHECK_THROWS_AS(MobiusTransform::from_entries(1.0, 0.0, 0.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(MobiusTransform::from_entries(0.0, 0.0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("compose: identity, inverse and one-parameter additivity") {
    const MobiusTransform id;
    const auto m = MobiusTransform::from_entries(2.0, 1.0, 1.0, 1.0);
    CHECK(matrix_distance(compose(id, m), m) <= kMatrixTol);
    CHECK(approx_identity(compose(m, m.inverse()), kMatrixTol));
    CHECK(matrix_distance(compose(geodesic_flow(0.3), geodesic_flow(0.7)), geodesic_flow(1.0)) <=
          kMatrixTol);
}

TEST_CASE("apply: fixed points and exponential motion up the axis") {
    const UpperHalfPoint i{0.0, 1.0};
    CHECK(hyperbolic_distance(apply(MobiusTransform::identity(), i), i) <= kGeomTol);

    const auto half_turn = MobiusTransform::from_entries(0.0, 1.0, -1.0, 0.0);  // z -> -1/z
    CHECK(hyperbolic_distance(apply(half_turn, i), i) <= kGeomTol);

    const UpperHalfPoint moved = apply(geodesic_flow(1.0), i);
    CHECK(moved.x == doctest::Approx(0.0));
    CHECK(moved.y == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
}

TEST_CASE("apply_pointer: stabilizer rotates the fiber, horocycle slides it") {
    const Pointer base = base_pointer();
    CHECK(pointer_close(apply_pointer(MobiusTransform::identity(), base), base));

    const double theta = 0.8;
    const Pointer rotated =
        apply_pointer(rotation_about(UpperHalfPoint{0.0, 1.0}, theta), {base.base, 1.1});
    CHECK(pointer_close(rotated, {base.base, 1.1 + theta}));

    const Pointer slid = apply_pointer(horocycle(1.0, HoroSign::plus), base);
    CHECK(pointer_close(slid, {UpperHalfPoint{1.0, 1.0}, kPi / 2.0}));
}

TEST_CASE("apply_pointer is a left action") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto f = random_transform(rng);
        const auto g = random_transform(rng);
        const Pointer pt = random_pointer(rng);
        CHECK(pointer_close(apply_pointer(compose(f, g), pt),
                            apply_pointer(f, apply_pointer(g, pt))));
    }
}

TEST_CASE("geodesic flow matrices") {
    CHECK(approx_identity(geodesic_flow(0.0), kMatrixTol));
    const auto g2 = geodesic_flow(2.0);
    CHECK(g2.a() == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
    CHECK(g2.d() == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(g2.b() == 0.0);

    // Contraction of the stable horocycle parameter under conjugation.
    const double t = 1.0, s = 0.5;
    const auto conj = compose(compose(geodesic_flow(t), horocycle(s, HoroSign::minus)),
                              geodesic_flow(t).inverse());
    CHECK(matrix_distance(conj, horocycle(s * std::exp(-t), HoroSign::minus)) <= kMatrixTol);
}

TEST_CASE("horocycle matrices and expansion under the flow") {
    CHECK(approx_identity(horocycle(0.0, HoroSign::minus), kMatrixTol));
    const auto hm = horocycle(1.0, HoroSign::minus);
    CHECK(hm.a() == 1.0);
    CHECK(hm.b() == 0.0);
    CHECK(hm.c() == 1.0);
    CHECK(hm.d() == 1.0);

    const double t = 0.7, u = 2.0;
    const auto conj = compose(compose(geodesic_flow(t), horocycle(u, HoroSign::plus)),
                              geodesic_flow(t).inverse());
    CHECK(matrix_distance(conj, horocycle(u * std::exp(t), HoroSign::plus)) <= kMatrixTol);
}

TEST_CASE("conjugation identities over random parameters") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double t = u(rng), s = u(rng);
        const auto gt = geodesic_flow(t);
        const auto minus =
            compose(compose(gt, horocycle(s, HoroSign::minus)), gt.inverse());
        const auto plus = compose(compose(gt, horocycle(s, HoroSign::plus)), gt.inverse());
        CHECK(matrix_distance(minus, horocycle(s * std::exp(-t), HoroSign::minus)) <= kMatrixTol);
        CHECK(matrix_distance(plus, horocycle(s * std::exp(t), HoroSign::plus)) <= kMatrixTol);
    }
}

TEST_CASE("rotation_about: explicit half turn and finite order") {
    CHECK(approx_identity(rotation_about(UpperHalfPoint{0.5, 2.0}, 0.0), kGeomTol));

    const auto half_turn = rotation_about(UpperHalfPoint{0.0, 1.0}, kPi);
    CHECK(matrix_distance(half_turn, MobiusTransform::from_entries(0.0, 1.0, -1.0, 0.0)) <=
          kGeomTol);
    CHECK(std::abs(half_turn.trace()) <= kGeomTol);  // trace 2 cos(pi/2) = 0

    const int k = 5;
    const auto r = rotation_about(UpperHalfPoint{0.0, 2.0}, 2.0 * kPi / k);
    MobiusTransform acc;
    for (int j = 1; j <= k; ++j) {
        acc = compose(acc, r);
        if (j < k) CHECK_FALSE(approx_identity(acc, kGeomTol));
    }
    CHECK(approx_identity(acc, kGeomTol));
}

TEST_CASE("dictionary maps and their inverses") {
    CHECK(pointer_close(group_to_pointer(MobiusTransform::identity()), base_pointer()));

    // Contravariant map sends G_t to the point e^{-t} down the axis.
    const Pointer g1 = group_to_pointer(geodesic_flow(1.0));
    CHECK(pointer_close(g1, {UpperHalfPoint{0.0, std::exp(-1.0)}, kPi / 2.0}));

    // Left rotation acts on the covariant dictionary by rotating the base
    // about i and shifting the fiber angle.
    std::mt19937_64 rng(3);
    const double theta = 1.3;
    const auto k_theta = rotation_about(UpperHalfPoint{0.0, 1.0}, theta);
    for (int trial = 0; trial < 20; ++trial) {
        const auto b = random_transform(rng);
        const Pointer before = group_to_pointer_cov(b);
        const Pointer after = group_to_pointer_cov(compose(k_theta, b));
        CHECK(hyperbolic_distance(after.base, apply(k_theta, before.base)) <= kGeomTol);
    }

    for (int trial = 0; trial < 20; ++trial) {
        const auto b = random_transform(rng);
        CHECK(approx_identity(compose(pointer_to_group(group_to_pointer(b)), b.inverse()),
                              kGeomTol));
        CHECK(approx_identity(compose(pointer_to_group_cov(group_to_pointer_cov(b)), b.inverse()),
                              kGeomTol));
        const Pointer pt = random_pointer(rng);
        CHECK(pointer_close(group_to_pointer(pointer_to_group(pt)), pt));
        CHECK(pointer_close(group_to_pointer_cov(pointer_to_group_cov(pt)), pt));
    }
}

TEST_CASE("flow_pointer: direction convention, additivity, distance") {
    const Pointer base = base_pointer();
    CHECK(pointer_close(flow_pointer(base, 0.0), base));

    // Positive time moves the base in the pointing direction: straight up.
    const Pointer up = flow_pointer(base, 1.0);
    CHECK(pointer_close(up, {UpperHalfPoint{0.0, std::exp(1.0)}, kPi / 2.0}));

    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> ut(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        const Pointer pt = random_pointer(rng);
        const double t = ut(rng), s = ut(rng);
        CHECK(pointer_close(flow_pointer(flow_pointer(pt, t), s), flow_pointer(pt, t + s)));
        CHECK(hyperbolic_distance(pt.base, flow_pointer(pt, 0.9).base) ==
              doctest::Approx(0.9).epsilon(1e-9));
    }
}

TEST_CASE("flow_pointer against the group flows through both dictionaries") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> ut(-1.5, 1.5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto b = random_transform(rng);
        const double t = ut(rng);
        // Covariant dictionary: flowing is right multiplication by G_t.
        CHECK(pointer_close(flow_pointer(group_to_pointer_cov(b), t),
                            group_to_pointer_cov(compose(b, geodesic_flow(t)))));
        // Contravariant dictionary: left multiplication by G_{-t}.
        CHECK(pointer_close(flow_pointer(group_to_pointer(b), t),
                            group_to_pointer(compose(geodesic_flow(-t), b))));
    }
}

TEST_CASE("boundary action handles infinity via limits") {
    const auto gt = geodesic_flow(1.0);
    CHECK(apply_boundary(gt, IdealPoint::at_infinity()) == IdealPoint::at_infinity());
    CHECK(apply_boundary(gt, IdealPoint::at(0.0)) == IdealPoint::at(0.0));

    const auto inv = MobiusTransform::from_entries(0.0, 1.0, -1.0, 0.0);
    CHECK(apply_boundary(inv, IdealPoint::at_infinity()) == IdealPoint::at(0.0));
    CHECK(apply_boundary(inv, IdealPoint::at(0.0)) == IdealPoint::at_infinity());
}
