#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rank1sep/lie_f4.hpp"

using namespace rank1sep;

namespace {

Octonion random_octonion(RatSampler& samp)
{
    Octonion u;
    for (int i = 0; i < 8; ++i)
        u[i] = samp();
    return u;
}

QMat random_skew(RatSampler& samp)
{
    QMat a(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            a(i, j) = samp();
            a(j, i) = -a(i, j);
        }
    return a;
}

F4Element random_f4(RatSampler& samp)
{
    QVec c(52);
    for (int i = 0; i < 52; ++i)
        c[i] = samp();
    return F4Model::from_coords(c);
}

} // namespace

TEST_CASE("octonion composition and norm identities are exact")
{
    RatSampler samp(101);
    for (int s = 0; s < 50; ++s) {
        Octonion u = random_octonion(samp), v = random_octonion(samp);
        CHECK(oct_norm2(u * v) == oct_norm2(u) * oct_norm2(v));
        CHECK((u * conj(v) + v * conj(u))[0] == 2 * oct_inner(u, v));
    }
}

TEST_CASE("octonion alternativity")
{
    RatSampler samp(102);
    for (int s = 0; s < 50; ++s) {
        Octonion u = random_octonion(samp), v = random_octonion(samp);
        CHECK((u * (u * v)) == ((u * u) * v));
        CHECK(((u * v) * v) == (u * (v * v)));
        // flexibility, a consequence of alternativity
        CHECK((u * (v * u)) == ((u * v) * u));
    }
}

TEST_CASE("octonion conjugation is an anti-automorphism")
{
    RatSampler samp(103);
    for (int s = 0; s < 50; ++s) {
        Octonion u = random_octonion(samp), v = random_octonion(samp);
        CHECK(conj(u * v) == conj(v) * conj(u));
        CHECK(conj(conj(u)) == u);
        Octonion trace = u + conj(u);
        for (int i = 1; i < 8; ++i)
            CHECK(trace[i] == 0);
    }
}

TEST_CASE("octonion associator vanishes iff a quaternion triple")
{
    // e1, e2, e3 span a quaternion subalgebra; e1, e2, e4 do not
    Octonion a = Octonion::basis(1), b = Octonion::basis(2);
    CHECK(((a * b) * Octonion::basis(3)) == (a * (b * Octonion::basis(3))));
    CHECK_FALSE(((a * b) * Octonion::basis(4)) == (a * (b * Octonion::basis(4))));
}

TEST_CASE("lambda and lambda^2 are automorphisms of so(8)")
{
    RatSampler samp(104);
    for (int s = 0; s < 50; ++s) {
        QMat a = random_skew(samp), b = random_skew(samp);
        QMat c = a * b - b * a;
        CHECK(lambda_auto(c) == lambda_auto(a) * lambda_auto(b) - lambda_auto(b) * lambda_auto(a));
        CHECK(lambda2_auto(c)
            == lambda2_auto(a) * lambda2_auto(b) - lambda2_auto(b) * lambda2_auto(a));
    }
}

TEST_CASE("lambda tables match the defining left/right multiplications")
{
    const Rat half(1, 2);
    for (int i = 1; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            Octonion a = Octonion::basis(i), b = Octonion::basis(j);
            CHECK(lambda_auto(wedge(a, b))
                == left_mul_matrix(conj(b)) * left_mul_matrix(conj(a)) * half);
            CHECK(lambda2_auto(wedge(a, b))
                == right_mul_matrix(conj(b)) * right_mul_matrix(conj(a)) * half);
        }
}

TEST_CASE("quadruple-model bracket satisfies the Jacobi identity exactly")
{
    RatSampler samp(105);
    for (int s = 0; s < 50; ++s) {
        F4Element x = random_f4(samp), y = random_f4(samp), z = random_f4(samp);
        F4Element j = bracket(bracket(x, y), z) + bracket(bracket(y, z), x)
            + bracket(bracket(z, x), y);
        CHECK(j.is_zero());
    }
}

TEST_CASE("bracket is antisymmetric and the slots close as expected")
{
    RatSampler samp(106);
    for (int s = 0; s < 20; ++s) {
        F4Element x = random_f4(samp), y = random_f4(samp);
        CHECK((bracket(x, y) + bracket(y, x)).is_zero());
    }
}

TEST_CASE("Killing form is block-orthogonal across the four slots")
{
    const QMat& g = F4Model::killing_gram();
    auto slot = [](int k) { return k < 28 ? 0 : (k - 28) / 8 + 1; };
    for (int i = 0; i < 52; ++i)
        for (int j = 0; j < 52; ++j)
            if (slot(i) != slot(j))
                CHECK(g(i, j) == 0);
}

TEST_CASE("Killing form is nondegenerate with signature matching f4^-")
{
    const QMat& g = F4Model::killing_gram();
    CHECK(rank(g) == 52);
    // negative definite on the isotropy part so(8) + first octonion slot,
    // positive definite on the two tangent slots
    for (int k = 0; k < 52; ++k) {
        if (k < 36)
            CHECK(g(k, k) < 0);
        else
            CHECK(g(k, k) > 0);
    }
}
