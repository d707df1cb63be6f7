#pragma once

#include "rank1sep/benenti.hpp"
#include "rank1sep/mech/momentum_map.hpp"

namespace rank1sep::sov {

/// The complex projective plane with the diagonal torus of su(3): chart,
/// torus momentum maps, and a full separation candidate built from them.
struct Cp2TorusData {
    SpaceModel model = SpaceModel(Family::complex, 1, 4);
    Chart chart;
    std::vector<MomentaPolynomial> torus; ///< P_{h_1}, P_{h_2}
    SeparationCandidate candidate;        ///< torus + {2H, K*}
};

/// Build the torus separation data on the affine chart of CP^2.
///
/// The torus is spanned by h_1 = diag(i, -i, 0) and h_2 = diag(0, i, -i);
/// the extra quadratic tensor is K* = P_e^2 + P_f^2 for the root pair
/// e = E_{01} - E_{10}, f = i(E_{01} + E_{10}), which is torus-invariant
/// ([h, e] and [h, f] rotate the pair into each other) and Poisson-commutes
/// with the Hamiltonian because e and f are Killing.
inline Cp2TorusData cp2_torus_candidate()
{
    Cp2TorusData d;
    d.chart = mech::model_chart(d.model);

    CQMat h1(3, 3), h2(3, 3), e(3, 3), f(3, 3);
    h1(0, 0) = GRat::i();
    h1(1, 1) = -GRat::i();
    h2(1, 1) = GRat::i();
    h2(2, 2) = -GRat::i();
    e(0, 1) = GRat(Rat(1));
    e(1, 0) = GRat(Rat(-1));
    f(0, 1) = GRat::i();
    f(1, 0) = GRat::i();

    d.torus = {mech::momentum_map(h1, d.model), mech::momentum_map(h2, d.model)};

    MomentaPolynomial pe = mech::momentum_map(e, d.model);
    MomentaPolynomial pf = mech::momentum_map(f, d.model);
    MomentaPolynomial h = mech::metric_hamiltonian(d.chart);

    d.candidate.chart = d.chart;
    d.candidate.killing_vectors = d.torus;
    d.candidate.killing_tensors.push_back(MomentaPolynomial::quadratic(
        [h](const Vec& x) { return Mat(2.0 * h.c2(x)); }));
    d.candidate.killing_tensors.push_back(
        MomentaPolynomial::quadratic([ve = pe.c1, vf = pf.c1](const Vec& x) {
            Vec a = ve(x), b = vf(x);
            return Mat(a * a.transpose() + b * b.transpose());
        }));
    return d;
}

} // namespace rank1sep::sov
