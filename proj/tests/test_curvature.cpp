#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rank1sep/curvature.hpp"

using namespace rank1sep;

namespace {

TangentVector random_tangent(int n, RatSampler& samp)
{
    TangentVector v(n);
    for (int i = 0; i < n; ++i)
        v[i] = samp();
    return v;
}

TangentVector unit(int n, int k)
{
    TangentVector v(n);
    v[k] = 1;
    return v;
}

const SpaceModel kModels[] = {
    SpaceModel(Family::real, 1, 3),
    SpaceModel(Family::complex, 1, 4),
    SpaceModel(Family::quaternionic, 1, 8),
    SpaceModel(Family::octonionic, 1, 16),
    SpaceModel(Family::real, -1, 3),
    SpaceModel(Family::complex, -1, 6),
    SpaceModel(Family::octonionic, -1, 16),
};

} // namespace

TEST_CASE("curvature tensors have the algebraic symmetries, exactly")
{
    RatSampler samp(301);
    for (const SpaceModel& m : kModels) {
        int n = m.real_dimension;
        for (int s = 0; s < 8; ++s) {
            TangentVector x = random_tangent(n, samp), y = random_tangent(n, samp),
                          z = random_tangent(n, samp), w = random_tangent(n, samp);
            // antisymmetry in both pairs and pair symmetry
            CHECK(curvature4(m, x, y, z, w) == -curvature4(m, y, x, z, w));
            CHECK(curvature4(m, x, y, z, w) == -curvature4(m, x, y, w, z));
            CHECK(curvature4(m, x, y, z, w) == curvature4(m, z, w, x, y));
            // first Bianchi identity for the operator itself
            TangentVector b = curvature(m, x, y, z) + curvature(m, y, z, x)
                + curvature(m, z, x, y);
            CHECK(is_zero(b));
        }
    }
}

TEST_CASE("sectional curvature bounds: constant for real, pinched [1,4] otherwise")
{
    RatSampler samp(302);
    SpaceModel rp(Family::real, 1, 3);
    for (int s = 0; s < 50; ++s) {
        TangentVector x = random_tangent(3, samp), y = random_tangent(3, samp);
        if (dot(x, x) * dot(y, y) == dot(x, y) * dot(x, y))
            continue;
        CHECK(sectional(rp, x, y) == 1);
    }
    for (Family f : {Family::complex, Family::quaternionic, Family::octonionic}) {
        int n = f == Family::complex ? 4 : (f == Family::quaternionic ? 8 : 16);
        SpaceModel m(f, 1, n);
        int planes = f == Family::octonionic ? 1000 : 200;
        for (int s = 0; s < planes; ++s) {
            TangentVector x = random_tangent(n, samp), y = random_tangent(n, samp);
            if (dot(x, x) * dot(y, y) == dot(x, y) * dot(x, y))
                continue;
            Rat k = sectional(m, x, y);
            CHECK(k >= 1);
            CHECK(k <= 4);
        }
        SpaceModel h(f, -1, n);
        TangentVector x = random_tangent(n, samp), y = random_tangent(n, samp);
        Rat k = sectional(h, x, y);
        CHECK(k <= -1);
        CHECK(k >= -4);
    }
}

TEST_CASE("extremal planes realize the pinching bounds")
{
    SpaceModel cp(Family::complex, 1, 4);
    // holomorphic plane span{e0, J e0}: curvature 4; totally real: curvature 1
    CHECK(sectional(cp, unit(4, 0), unit(4, 1)) == 4);
    CHECK(sectional(cp, unit(4, 0), unit(4, 2)) == 1);
    SpaceModel op(Family::octonionic, 1, 16);
    // an octonion line O x {0} and a totally "orthogonal" mixed plane
    CHECK(sectional(op, unit(16, 0), unit(16, 1)) == 4);
    CHECK(sectional(op, unit(16, 0), unit(16, 8)) == 1);
}

TEST_CASE("the two model subspaces of T O H^2 are Lie triple systems")
{
    SpaceModel op(Family::octonionic, -1, 16);
    std::vector<TangentVector> first, second;
    for (int i = 0; i < 8; ++i) {
        first.push_back(unit(16, i));
        second.push_back(unit(16, 8 + i));
    }
    CHECK(is_lie_triple(TangentSubspace(op, first)).is_lie_triple);
    CHECK(is_lie_triple(TangentSubspace(op, second)).is_lie_triple);
}

TEST_CASE("a generic 8-dimensional mixed subspace is not a Lie triple system")
{
    SpaceModel op(Family::octonionic, -1, 16);
    std::vector<TangentVector> mixed;
    mixed.push_back(unit(16, 0));
    mixed.push_back(unit(16, 1));
    mixed.push_back(unit(16, 2));
    for (int i = 0; i < 5; ++i)
        mixed.push_back(unit(16, 8 + i));
    auto rep = is_lie_triple(TangentSubspace(op, mixed));
    CHECK_FALSE(rep.is_lie_triple);
    CHECK(rep.i >= 0);
    // the witness really is off the subspace
    TangentVector r = curvature(op, mixed[rep.i], mixed[rep.j], mixed[rep.k]);
    CHECK(off_span_component(mixed, r) == rep.off_component);
    CHECK_FALSE(is_zero(rep.off_component));
}

TEST_CASE("obstruction counts in the standard frame per family")
{
    auto count = [](const SpaceModel& m) {
        std::vector<TangentVector> frame;
        for (int i = 0; i < m.real_dimension; ++i)
            frame.push_back(unit(m.real_dimension, i));
        return diagonal_obstruction(m, frame).size();
    };
    CHECK(count(SpaceModel(Family::real, 1, 4)) == 0);
    CHECK(count(SpaceModel(Family::real, -1, 4)) == 0);
    CHECK(count(SpaceModel(Family::complex, 1, 4)) == 3);
    CHECK(count(SpaceModel(Family::quaternionic, 1, 8)) == 36);
    CHECK(count(SpaceModel(Family::octonionic, 1, 16)) == 336);
    CHECK(count(SpaceModel(Family::octonionic, -1, 16)) == 336);
}

TEST_CASE("diagonal_obstruction rejects non-orthonormal frames")
{
    SpaceModel cp(Family::complex, 1, 4);
    std::vector<TangentVector> frame;
    for (int i = 0; i < 4; ++i)
        frame.push_back(unit(4, i));
    frame[0] = frame[0] + frame[1];
    CHECK_THROWS_AS(diagonal_obstruction(cp, frame), std::invalid_argument);
}

TEST_CASE("octo_residual agrees with the curvature component it abbreviates")
{
    RatSampler samp(303);
    SpaceModel op(Family::octonionic, 1, 16);
    TangentVector e1 = unit(16, 0);
    for (int s = 0; s < 40; ++s) {
        Octonion y1, y2;
        for (int i = 0; i < 8; ++i) {
            if (i > 0)
                y1[i] = samp();
            y2[i] = samp();
        }
        TangentVector e2 = detail::join_oct(y1, y2);
        // Z, W perpendicular to both e1 and e2, where the identity holds
        TangentVector z = off_span_component({e1, e2}, random_tangent(16, samp));
        TangentVector w = off_span_component({e1, e2}, random_tangent(16, samp));
        auto [z1, z2] = detail::split_oct(z);
        auto [w1, w2] = detail::split_oct(w);
        CHECK(octo_residual(y1, y2, z1, z2, w1, w2) == -curvature4(op, e1, e2, z, w));
    }
    Octonion bad = Octonion::real(1);
    CHECK_THROWS_AS(octo_residual(bad, bad, bad, bad, bad, bad), std::invalid_argument);
}

TEST_CASE("the closing identity fails on every quaternion-escaping basis vector")
{
    // with u = 1 and z = e1 the identity 1/2 za = <zu,a>u - <u,a>zu already
    // fails for a = 1, certifying the contradiction
    Octonion u = Octonion::real(1), z = Octonion::basis(1);
    CHECK_FALSE(octo_final_identity_residual(u, z, Octonion::real(1)).is_zero());
    CHECK_THROWS_AS(octo_final_identity_residual(u, Octonion::real(1), u),
        std::invalid_argument);
}
