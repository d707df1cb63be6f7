#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rank1sep/mech/eigenframe.hpp"
#include "rank1sep/mech/flow.hpp"
#include "rank1sep/mech/haantjes.hpp"
#include "rank1sep/mech/momentum_map.hpp"

using namespace rank1sep;
using namespace rank1sep::mech;

namespace {

QMat so_generator(int n, int i, int j)
{
    QMat a(n, n);
    a(i, j) = 1;
    a(j, i) = -1;
    return a;
}

double energy_drift(const MomentaPolynomial& h, const Trajectory& traj)
{
    double e0 = h(traj.points.front()), worst = 0.0;
    for (const PhasePoint& z : traj.points)
        worst = std::max(worst, std::abs(h(z) - e0));
    return worst;
}

} // namespace

TEST_CASE("canonical Poisson relations hold to finite-difference accuracy")
{
    for (const Chart& chart : {euclidean_chart(3), cpn_chart(2)}) {
        int n = chart.dim;
        for (const PhasePoint& z : sample_phase_points(chart, 5, 11)) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    auto xi = MomentaPolynomial::coordinate(i);
                    auto pj = MomentaPolynomial::momentum(j, n);
                    CHECK(std::abs(poisson_bracket(pj, xi, z) - (i == j ? 1.0 : 0.0)) < 1e-8);
                    CHECK(std::abs(poisson_bracket(xi, MomentaPolynomial::coordinate(j), z))
                        < 1e-8);
                    CHECK(std::abs(poisson_bracket(pj, MomentaPolynomial::momentum(i, n), z))
                        < 1e-8);
                }
        }
    }
}

TEST_CASE("so(3) momentum map on S^2 is a Poisson anti-homomorphism")
{
    SpaceModel s2(Family::real, 1, 2);
    Chart chart = model_chart(s2);
    std::vector<QMat> gens{so_generator(3, 0, 1), so_generator(3, 0, 2), so_generator(3, 1, 2)};
    auto points = sample_phase_points(chart, 10, 12);
    for (size_t a = 0; a < gens.size(); ++a)
        for (size_t b = 0; b < gens.size(); ++b) {
            MomentaPolynomial pa = momentum_map(gens[a], s2);
            MomentaPolynomial pb = momentum_map(gens[b], s2);
            MomentaPolynomial pc = momentum_map(gens[a] * gens[b] - gens[b] * gens[a], s2);
            for (const PhasePoint& z : points)
                CHECK(std::abs(poisson_bracket(pa, pb, z) + pc(z)) < 1e-8);
        }
}

TEST_CASE("so(2,1) momentum map on H^2 is a Poisson anti-homomorphism")
{
    SpaceModel h2(Family::real, -1, 2);
    Chart chart = model_chart(h2);
    // boosts mix the spatial rows with the time row symmetrically
    QMat rot = so_generator(3, 0, 1), boost1(3, 3), boost2(3, 3);
    boost1(0, 2) = boost1(2, 0) = 1;
    boost2(1, 2) = boost2(2, 1) = 1;
    std::vector<QMat> gens{rot, boost1, boost2};
    auto points = sample_phase_points(chart, 10, 13);
    for (size_t a = 0; a < gens.size(); ++a)
        for (size_t b = 0; b < gens.size(); ++b) {
            MomentaPolynomial pa = momentum_map(gens[a], h2);
            MomentaPolynomial pb = momentum_map(gens[b], h2);
            MomentaPolynomial pc = momentum_map(gens[a] * gens[b] - gens[b] * gens[a], h2);
            for (const PhasePoint& z : points)
                CHECK(std::abs(poisson_bracket(pa, pb, z) + pc(z)) < 1e-8);
        }
}

TEST_CASE("su(3) momentum map on CP^2 is a Poisson anti-homomorphism")
{
    SpaceModel cp2(Family::complex, 1, 4);
    Chart chart = model_chart(cp2);
    SuModel su3(3, 0);
    auto points = sample_phase_points(chart, 6, 14);
    for (int a = 0; a < su3.dim(); ++a)
        for (int b = a + 1; b < su3.dim(); ++b) {
            MomentaPolynomial pa = momentum_map(su3.basis(a), cp2);
            MomentaPolynomial pb = momentum_map(su3.basis(b), cp2);
            MomentaPolynomial pc = momentum_map(su3.lie_bracket(su3.basis(a), su3.basis(b)), cp2);
            for (const PhasePoint& z : points)
                CHECK(std::abs(poisson_bracket(pa, pb, z) + pc(z)) < 1e-8);
        }
}

TEST_CASE("momentum maps are first integrals of the geodesic flow")
{
    SpaceModel s2(Family::real, 1, 2);
    Chart chart = model_chart(s2);
    // every so(3) momentum Poisson-commutes with the kinetic Hamiltonian
    for (const QMat& g : {so_generator(3, 0, 1), so_generator(3, 1, 2)})
        CHECK(killing_check(momentum_map(g, s2), chart, 20) < 1e-8);
    // a generic linear-in-momenta function is not a first integral
    auto bogus = MomentaPolynomial::linear([](const Vec& x) {
        Vec v(2);
        v << x(0) * x(0), 1.0;
        return v;
    });
    CHECK(killing_check(bogus, chart, 20) > 1e-3);
}

TEST_CASE("RK4 geodesic flow conserves energy and Noether charges")
{
    SpaceModel s2(Family::real, 1, 2);
    Chart chart = model_chart(s2);
    MomentaPolynomial h = metric_hamiltonian(chart);
    MomentaPolynomial noether = momentum_map(so_generator(3, 0, 1), s2);

    PhasePoint z0;
    z0.x = Vec(2);
    z0.x << 0.3, -0.1;
    z0.p = Vec(2);
    z0.p << 0.4, 0.25;

    Trajectory traj = hamiltonian_flow(h, chart, z0, 10.0, 1e-3);
    CHECK_FALSE(traj.exit_time.has_value());
    CHECK(traj.points.size() == 10001);
    CHECK(energy_drift(h, traj) < 1e-8);

    double q0 = noether(z0), worst = 0.0;
    for (const PhasePoint& z : traj.points)
        worst = std::max(worst, std::abs(noether(z) - q0));
    CHECK(worst < 1e-6);
}

TEST_CASE("RK4 energy error decays at fourth order in the step size")
{
    Chart chart = cpn_chart(2);
    MomentaPolynomial h = metric_hamiltonian(chart);
    PhasePoint z0;
    z0.x = Vec(4);
    z0.x << 0.4, -0.2, 0.1, 0.3;
    z0.p = Vec(4);
    z0.p << 0.5, 0.2, -0.3, 0.4;

    double coarse = energy_drift(h, hamiltonian_flow(h, chart, z0, 2.0, 0.05));
    double fine = energy_drift(h, hamiltonian_flow(h, chart, z0, 2.0, 0.025));
    CHECK(coarse / fine >= 12.0);
}

TEST_CASE("flow stops with an exit certificate when leaving the domain")
{
    Chart box = euclidean_chart(1);
    box.in_domain = [](const Vec& x) { return std::abs(x(0)) < 1.0; };
    MomentaPolynomial h = metric_hamiltonian(box);
    PhasePoint z0;
    z0.x = Vec::Zero(1);
    z0.p = Vec::Ones(1);
    Trajectory traj = hamiltonian_flow(h, box, z0, 10.0, 1e-2);
    REQUIRE(traj.exit_time.has_value());
    CHECK(*traj.exit_time == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("common eigenframe of commuting tensors, with g-orthogonality")
{
    Chart chart = cpn_chart(2);
    Vec at(4);
    at << 0.3, 0.1, -0.2, 0.4;
    Mat g = chart.metric(at);

    // two commuting quadratic tensors built from one symmetric seed
    Mat ginv = g.inverse();
    Mat seed = Mat::Zero(4, 4);
    seed(0, 0) = 1.0;
    seed(1, 1) = 2.0;
    seed(2, 3) = seed(3, 2) = 0.5;
    auto k1 = MomentaPolynomial::quadratic([ginv, seed](const Vec&) {
        return Mat(ginv * seed * ginv);
    });
    auto k2 = MomentaPolynomial::quadratic([ginv, seed](const Vec&) {
        return Mat(ginv * seed * ginv * seed * ginv);
    });

    auto res = common_eigenframe({k1, k2}, chart, at);
    REQUIRE(res.success);
    Mat gram = res.frame.transpose() * g * res.frame;
    CHECK((gram - Mat(gram.diagonal().asDiagonal())).norm() < 1e-10);
    // each frame column is an eigenvector of both operators c2 * g
    for (const auto& k : {k1, k2}) {
        Mat op = k.c2(at) * g;
        for (int c = 0; c < res.frame.cols(); ++c) {
            Vec v = res.frame.col(c);
            Vec av = op * v;
            double lam = v.dot(av) / v.squaredNorm();
            CHECK((av - lam * v).norm() < 1e-8 * (1.0 + std::abs(lam)) * v.norm());
        }
    }
}

TEST_CASE("non-commuting tensors yield a failure certificate")
{
    Chart chart = euclidean_chart(3);
    Vec at = Vec::Zero(3);
    Mat d1 = Mat::Zero(3, 3), d2 = Mat::Zero(3, 3);
    d1(0, 0) = 1.0;
    d1(1, 1) = 2.0;
    d1(2, 2) = 3.0;
    d2(0, 1) = d2(1, 0) = 1.0;
    auto k1 = MomentaPolynomial::quadratic([d1](const Vec&) { return d1; });
    auto k2 = MomentaPolynomial::quadratic([d2](const Vec&) { return d2; });
    auto res = common_eigenframe({k1, k2}, chart, at);
    CHECK_FALSE(res.success);
    CHECK(res.fail_i == 0);
    CHECK(res.fail_j == 1);
    CHECK(res.commutator_norm > 0.1);
}

TEST_CASE("restricting to the complement of Killing vectors drops the rank")
{
    Chart chart = euclidean_chart(3);
    Vec at = Vec::Zero(3);
    auto k = MomentaPolynomial::quadratic(
        [](const Vec&) { return Mat(Mat::Identity(3, 3)); });
    auto v = MomentaPolynomial::momentum(2, 3);
    auto res = common_eigenframe({k}, chart, at, {v});
    REQUIRE(res.success);
    CHECK(res.frame.cols() == 2);
    for (int c = 0; c < 2; ++c)
        CHECK(std::abs(res.frame.col(c)(2)) < 1e-12);
}

TEST_CASE("separable pointwise-diagonal fields have vanishing Haantjes torsion")
{
    auto l = separable_diagonal_field({
        [](double t) { return std::sin(t) + 2.0; },
        [](double t) { return t * t + 1.0; },
        [](double t) { return std::exp(0.3 * t); },
    });
    Vec at(3);
    at << 0.7, -0.4, 1.1;
    CHECK(torsion_norm(haantjes_torsion(l, at)) < 1e-6);
}

TEST_CASE("the rotating eigenframe field is the sharp counterexample in 3D")
{
    auto l = rotating_eigenframe_field();
    Vec at(3);
    at << 0.5, -0.3, 0.7;
    // pointwise diagonalizable with constant eigenvalues, yet obstructed
    CHECK(torsion_norm(nijenhuis_torsion(l, at)) > 1e-2);
    CHECK(torsion_norm(haantjes_torsion(l, at)) > 1e-2);
}

TEST_CASE("in two dimensions the Haantjes torsion vanishes identically")
{
    auto l = rotating_eigenframe_field();
    Vec at(2);
    at << 0.5, 0.8;
    CHECK(torsion_norm(haantjes_torsion(l, at)) < 1e-6);
}
