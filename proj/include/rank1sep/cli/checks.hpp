#pragma once

#include "rank1sep/cli/report.hpp"
#include "rank1sep/cp2_separation.hpp"
#include "rank1sep/curvature.hpp"
#include "rank1sep/lie.hpp"
#include "rank1sep/stackel_io.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>

#ifndef RANK1SEP_DATA_DIR
#define RANK1SEP_DATA_DIR "data"
#endif

namespace rank1sep::cli {

namespace detail {

    inline QVec join_oct(const Octonion& a, const Octonion& b)
    {
        QVec v(16);
        for (int i = 0; i < 8; ++i) {
            v[i] = a[i];
            v[8 + i] = b[i];
        }
        return v;
    }

    inline std::string oct_str(const Octonion& a)
    {
        std::ostringstream out;
        out << "(";
        for (int i = 0; i < 8; ++i)
            out << (i ? "," : "") << to_string(a[i]);
        out << ")";
        return out.str();
    }

    /// Columns of the exact null space of the single row `row` (in R^8).
    inline std::vector<Octonion> oct_perp(const std::vector<Octonion>& of)
    {
        QMat rows(static_cast<int>(of.size()), 8);
        for (size_t a = 0; a < of.size(); ++a)
            for (int i = 0; i < 8; ++i)
                rows(static_cast<int>(a), i) = of[a][i];
        QMat ns = null_space(rows);
        std::vector<Octonion> out;
        for (int k = 0; k < ns.cols(); ++k) {
            QVec c(8);
            for (int i = 0; i < 8; ++i)
                c[i] = ns(i, k);
            out.push_back(Octonion::from_coords(c));
        }
        return out;
    }

} // namespace detail

/// Reproduces the octonionic case of the non-diagonalizability theorem: for
/// e_1 = (1,0) and sampled e_2 = (y_1, y_2) with y_1 imaginary, a pair
/// Z, W perpendicular to e_1, e_2 with nonzero planarity residual is found,
/// each witness cross-checked against the full curvature tensor.
inline CheckReport cmd_verify_octonion_diagonal(const RunConfig& cfg)
{
    const std::string id = "octonion-diagonal";
    CheckReport rep;
    rep.check_id = id;
    rep.exact = true;
    rep.tolerance = tol_for(cfg, id, 0.0);
    rep.seed = derive_seed(cfg.seed, id);
    int n = samples_for(cfg, id, 100);

    RatSampler samp(rep.seed);
    SpaceModel om(Family::octonionic, 1, 16);
    const QVec e1 = detail::join_oct(Octonion::real(Rat(1)), Octonion());

    int found = 0, skipped = 0, failures = 0;
    for (int s = 0; s < n; ++s) {
        Octonion y1, y2;
        for (int i = 1; i < 8; ++i)
            y1[i] = samp();
        for (int i = 0; i < 8; ++i)
            y2[i] = samp();
        // exercise both case splits of the proof on a fixed schedule
        if (s % 4 == 1)
            y2 = Octonion();
        if (s % 7 == 3)
            y1 = Octonion();
        if (y1.is_zero() && y2.is_zero()) {
            ++skipped;
            continue;
        }

        std::optional<std::array<Octonion, 4>> witness; // z1, z2, w1, w2
        Rat residual;
        if (!y2.is_zero()) {
            // w_2 = 0 branch: w_1 perp 1, y_1 and z_2 perp y_2
            auto w1s = detail::oct_perp({Octonion::real(Rat(1)), y1});
            auto z2s = detail::oct_perp({y2});
            for (const auto& z2 : z2s) {
                for (const auto& w1 : w1s) {
                    Rat r = octo_residual(y1, y2, Octonion(), z2, w1, Octonion());
                    if (r != 0) {
                        witness = {Octonion(), z2, w1, Octonion()};
                        residual = r;
                        break;
                    }
                }
                if (witness)
                    break;
            }
        } else {
            // y_2 = 0 branch: Z = (0, z_2), W = (0, w_2) arbitrary
            for (int a = 0; a < 8 && !witness; ++a)
                for (int b = 0; b < 8 && !witness; ++b) {
                    Rat r = octo_residual(y1, y2, Octonion(), Octonion::basis(a), Octonion(),
                        Octonion::basis(b));
                    if (r != 0) {
                        witness = {Octonion(), Octonion::basis(a), Octonion(), Octonion::basis(b)};
                        residual = r;
                    }
                }
        }

        if (!witness) {
            ++failures;
            rep.witnesses.push_back("no violating pair for e2 = (" + detail::oct_str(y1) + ", "
                + detail::oct_str(y2) + ")");
            continue;
        }
        // oracle: the residual is minus the full curvature component
        QVec e2 = detail::join_oct(y1, y2);
        QVec z = detail::join_oct((*witness)[0], (*witness)[1]);
        QVec w = detail::join_oct((*witness)[2], (*witness)[3]);
        if (curvature4(om, e1, e2, z, w) != -residual) {
            ++failures;
            rep.witnesses.push_back("curvature cross-check mismatch at sample "
                + std::to_string(s));
            continue;
        }
        ++found;
    }

    // a degenerate request e_2 parallel to e_1 is skipped, not searched
    rep.witnesses.push_back("degenerate e2 parallel to e1: skipped");
    rep.witnesses.insert(rep.witnesses.begin(),
        "violating (Z, W) found for " + std::to_string(found) + "/" + std::to_string(n - skipped)
            + " sampled e2 (" + std::to_string(skipped) + " degenerate skipped)");
    rep.status = (failures == 0 && found == n - skipped) ? "pass" : "fail";
    return rep;
}

/// The four exact sub-checks of the octonion-hyperbolic nonexistence proof
/// in the quadruple model of f4^-.
inline CheckReport cmd_verify_f4(const RunConfig& cfg)
{
    const std::string id = "f4";
    CheckReport rep;
    rep.check_id = id;
    rep.exact = true;
    rep.tolerance = tol_for(cfg, id, 0.0);
    rep.seed = derive_seed(cfg.seed, id);
    int n = samples_for(cfg, id, 100);

    RatSampler samp(rep.seed);
    F4Model model;
    auto random_element = [&] {
        QVec c(52);
        for (int i = 0; i < 52; ++i)
            c[i] = samp();
        return F4Model::from_coords(c);
    };
    bool ok = true;

    // (i) Jacobi identity, exact, on random rational triples
    {
        int jn = std::min(n, 50);
        int good = 0;
        for (int s = 0; s < jn; ++s) {
            F4Element x = random_element(), y = random_element(), z = random_element();
            F4Element j = bracket(bracket(x, y), z) + bracket(bracket(y, z), x)
                + bracket(bracket(z, x), y);
            if (j.is_zero())
                ++good;
        }
        ok = ok && good == jn;
        rep.witnesses.push_back("jacobi exact zero on " + std::to_string(good) + "/"
            + std::to_string(jn) + " random triples");
    }

    // (ii) [m, m] is exactly the so(8) slot
    std::vector<QVec> mm_coords;
    {
        bool slot_ok = true;
        for (int a = 0; a < 8; ++a)
            for (int b = a + 1; b < 8; ++b) {
                F4Element c = bracket(model.basis(36 + a), model.basis(36 + b));
                if (!(c.u.is_zero() && c.v.is_zero() && c.w.is_zero()))
                    slot_ok = false;
                mm_coords.push_back(F4Model::coords(c));
            }
        int d = rank(columns(mm_coords));
        ok = ok && slot_ok && d == 28;
        rep.witnesses.push_back("[m,m] spans so(8): dimension " + std::to_string(d)
            + (slot_ok ? ", octonion slots zero" : ", NONZERO octonion slot"));
    }

    // (iii) Killing-orthogonal complement of [m,m] with zero m-projection
    {
        const QMat& g = F4Model::killing_gram();
        QMat constraints(28 + 8, 52);
        for (int a = 0; a < 28; ++a) {
            QVec row = g * mm_coords[a];
            for (int i = 0; i < 52; ++i)
                constraints(a, i) = row[i];
        }
        for (int i = 0; i < 8; ++i)
            constraints(28 + i, 36 + i) = Rat(1); // v-slot coordinates vanish
        QMat basis = null_space(constraints);
        bool shape_ok = basis.cols() == 16;
        for (int k = 0; k < basis.cols(); ++k)
            for (int i = 0; i < 52; ++i)
                if ((i < 28 || (i >= 36 && i < 44)) && basis(i, k) != 0)
                    shape_ok = false;
        ok = ok && shape_ok;
        rep.witnesses.push_back("admissible complement = {(0,u,0,w)}: dimension "
            + std::to_string(basis.cols()) + (shape_ok ? "" : " WRONG SHAPE"));
    }

    // (iv) the closing identity fails for every sampled u
    {
        Octonion z = Octonion::basis(1);
        // pinned instance: u = 0, a = e_2 gives residual e_3 / 2
        Octonion pinned = octo_final_identity_residual(Octonion(), z, Octonion::basis(2));
        bool pin_ok = pinned == Rat(1, 2) * Octonion::basis(3);
        int good = 0;
        for (int s = 0; s < n; ++s) {
            Octonion u;
            for (int i = 0; i < 8; ++i)
                u[i] = samp();
            for (int a = 0; a < 8; ++a)
                if (!octo_final_identity_residual(u, z, Octonion::basis(a)).is_zero()) {
                    ++good;
                    break;
                }
        }
        ok = ok && pin_ok && good == n;
        rep.witnesses.push_back("closing identity violated for " + std::to_string(good) + "/"
            + std::to_string(n) + " random u"
            + (pin_ok ? "; pinned residual e3/2 reproduced" : "; PINNED INSTANCE WRONG"));
    }

    rep.status = ok ? "pass" : "fail";
    return rep;
}

namespace detail {

    /// Exact coefficients of a polynomial of degree <= 2 per variable in 6
    /// variables, from its values on the grid {-1,0,1}^6. Index order: base-3
    /// digits, digit k = exponent of variable k after conversion.
    inline std::vector<GRat> grid_to_coefficients(std::vector<GRat> v)
    {
        const GRat half(Rat(1, 2));
        int stride = 1;
        for (int axis = 0; axis < 6; ++axis) {
            for (int block = 0; block < 729; block += 3 * stride)
                for (int off = 0; off < stride; ++off) {
                    GRat pm = v[block + off];              // value at -1
                    GRat p0 = v[block + off + stride];     // value at 0
                    GRat pp = v[block + off + 2 * stride]; // value at +1
                    v[block + off] = p0;
                    v[block + off + stride] = (pp - pm) * half;
                    v[block + off + 2 * stride] = (pp + pm) * half - p0;
                }
            stride *= 3;
        }
        return v;
    }

} // namespace detail

/// Certifies that the two tangent abelian-subalgebra generators appearing in
/// the complex-projective classification argument never commute: their
/// commutator entries are treated as exact polynomials in the six real
/// parameters (Re u, Im u, Re v, Im v, s, q).
inline CheckReport cmd_verify_cpn(const RunConfig& cfg)
{
    const std::string id = "cpn";
    CheckReport rep;
    rep.check_id = id;
    rep.exact = true;
    rep.tolerance = tol_for(cfg, id, 0.0);
    rep.seed = derive_seed(cfg.seed, id);
    int n = samples_for(cfg, id, 100);

    // A(u, s) and B(v, q); i denotes the imaginary unit
    auto make_a = [](const GRat& u, const Rat& s) {
        CQMat a(3, 3);
        a(0, 0) = GRat(Rat(0), -s);
        a(0, 1) = u;
        a(1, 0) = -conj(u);
        a(1, 1) = GRat(Rat(0), 2 * s);
        a(1, 2) = GRat(Rat(1));
        a(2, 1) = GRat(Rat(-1));
        a(2, 2) = GRat(Rat(0), -s);
        return a;
    };
    auto make_b = [](const GRat& v, const Rat& q) {
        CQMat b(3, 3);
        b(0, 0) = GRat(Rat(0), -q);
        b(0, 1) = v;
        b(1, 0) = -conj(v);
        b(1, 1) = GRat(Rat(0), 2 * q);
        b(1, 2) = GRat::i();
        b(2, 1) = GRat::i();
        b(2, 2) = GRat(Rat(0), -q);
        return b;
    };

    // values of all 9 commutator entries on the grid {-1,0,1}^6
    std::array<std::vector<GRat>, 9> vals;
    for (auto& v : vals)
        v.resize(729);
    for (int g = 0; g < 729; ++g) {
        int d = g;
        Rat t[6];
        for (int k = 0; k < 6; ++k) {
            t[k] = Rat(d % 3 - 1);
            d /= 3;
        }
        CQMat a = make_a(GRat(t[0], t[1]), t[4]);
        CQMat b = make_b(GRat(t[2], t[3]), t[5]);
        CQMat c = a * b - b * a;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                vals[3 * i + j][g] = c(i, j);
    }

    // constant-term certificate: an entry that is a nonzero constant
    int const_entry = -1;
    GRat const_value;
    for (int e = 0; e < 9 && const_entry < 0; ++e) {
        std::vector<GRat> coeff = detail::grid_to_coefficients(vals[e]);
        if (coeff[0].is_zero())
            continue;
        bool constant = true;
        for (int g = 1; g < 729; ++g)
            if (!coeff[g].is_zero())
                constant = false;
        if (constant) {
            const_entry = e;
            const_value = coeff[0];
        }
    }
    bool ok = const_entry >= 0;
    if (ok)
        rep.witnesses.push_back("constant-term certificate: commutator entry ("
            + std::to_string(const_entry / 3) + "," + std::to_string(const_entry % 3)
            + ") = " + to_string(const_value.re) + " + " + to_string(const_value.im)
            + " i for ALL parameter values");
    else
        rep.witnesses.push_back("no constant nonzero commutator entry found");

    // structure check and random exact evaluations
    SuModel su3(3, 0);
    RatSampler samp(rep.seed);
    int member_ok = 0, nonzero_ok = 0;
    for (int s = 0; s < n; ++s) {
        GRat u(samp(), samp()), v(samp(), samp());
        Rat ss = samp(), qq = samp();
        CQMat a = make_a(u, ss), b = make_b(v, qq);
        if (su3.contains(a) && su3.contains(b))
            ++member_ok;
        CQMat c = a * b - b * a;
        bool nz = false;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (!c(i, j).is_zero())
                    nz = true;
        if (nz)
            ++nonzero_ok;
    }
    ok = ok && member_ok == n && nonzero_ok == n;
    rep.witnesses.push_back("su(3) membership " + std::to_string(member_ok) + "/"
        + std::to_string(n) + "; commutator nonzero at " + std::to_string(nonzero_ok) + "/"
        + std::to_string(n) + " random rational tuples");

    rep.status = ok ? "pass" : "fail";
    return rep;
}

/// Lie-triple systems in the octonionic plane, generic centralizer
/// dimensions (= rank) in su(3), su(4) and f4^-, and the diagonal
/// obstruction lists of the four model families.
inline CheckReport cmd_verify_lie_triple_and_dims(const RunConfig& cfg)
{
    const std::string id = "lie-triple-dims";
    CheckReport rep;
    rep.check_id = id;
    rep.exact = true;
    rep.tolerance = tol_for(cfg, id, 0.0);
    rep.seed = derive_seed(cfg.seed, id);
    int n = samples_for(cfg, id, 20);
    bool ok = true;

    // (i) {(v,0)} and {(0,w)} are Lie triple systems in O^2
    {
        SpaceModel om(Family::octonionic, 1, 16);
        std::vector<TangentVector> first, second;
        for (int a = 0; a < 8; ++a) {
            first.push_back(detail::join_oct(Octonion::basis(a), Octonion()));
            second.push_back(detail::join_oct(Octonion(), Octonion::basis(a)));
        }
        bool t1 = is_lie_triple(TangentSubspace(om, first)).is_lie_triple;
        bool t2 = is_lie_triple(TangentSubspace(om, second)).is_lie_triple;
        ok = ok && t1 && t2;
        rep.witnesses.push_back(std::string("octonionic half-planes Lie triple: ")
            + (t1 ? "yes" : "NO") + " / " + (t2 ? "yes" : "NO"));
    }

    // (ii) generic centralizer dimensions by exact rank
    {
        RatSampler samp(rep.seed);
        auto run = [&](auto& model, int expect, const std::string& name) {
            int good = 0;
            for (int s = 0; s < n; ++s) {
                QVec c(model.dim());
                for (int i = 0; i < model.dim(); ++i)
                    c[i] = samp();
                if (centralizer_dimension(model, model.from_coords(c)) == expect)
                    ++good;
            }
            ok = ok && good == n;
            rep.witnesses.push_back(name + " generic centralizer dimension "
                + std::to_string(expect) + " at " + std::to_string(good) + "/"
                + std::to_string(n) + " random points");
        };
        SuModel su3(3, 0), su4(4, 0);
        F4Model f4;
        run(su3, 2, "su(3)");
        run(su4, 3, "su(4)");
        run(f4, 4, "f4^-");
    }

    // (iii) diagonal obstruction: empty exactly for constant curvature
    {
        auto count = [&](const SpaceModel& m) {
            std::vector<TangentVector> frame;
            for (int i = 0; i < m.real_dimension; ++i) {
                QVec v(m.real_dimension);
                v[i] = Rat(1);
                frame.push_back(v);
            }
            return diagonal_obstruction(m, frame).size();
        };
        size_t cr = count(SpaceModel(Family::real, 1, 4));
        size_t cc = count(SpaceModel(Family::complex, 1, 4));
        size_t cq = count(SpaceModel(Family::quaternionic, 1, 8));
        size_t co = count(SpaceModel(Family::octonionic, 1, 16));
        ok = ok && cr == 0 && cc > 0 && cq > 0 && co > 0;
        rep.witnesses.push_back("off-diagonal curvature quadruples: real " + std::to_string(cr)
            + ", complex " + std::to_string(cc) + ", quaternionic " + std::to_string(cq)
            + ", octonionic " + std::to_string(co));
    }

    rep.status = ok ? "pass" : "fail";
    return rep;
}

/// Positive pipeline: the two shipped Stäckel instances (involution,
/// Hamilton-Jacobi residual, conservation and the Q-drift law along the
/// flow) and the complex projective plane with its diagonal torus (momentum
/// commutation, block assembly with two ignorable directions, three-part
/// separability check).
inline CheckReport cmd_demo_separation(const RunConfig& cfg)
{
    using namespace rank1sep::sov;
    const std::string id = "demo-separation";
    CheckReport rep;
    rep.check_id = id;
    rep.tolerance = tol_for(cfg, id, 1.0);
    rep.seed = derive_seed(cfg.seed, id);
    int n = samples_for(cfg, id, 40);

    double worst = 0.0; // max of residual / pinned-bound over all sub-checks
    auto note = [&](const std::string& label, double residual, double bound) {
        worst = std::max(worst, residual / bound);
        rep.witnesses.push_back(label + " " + fmt17(residual) + " (bound " + fmt17(bound) + ")");
    };
    bool hard_fail = false;

    auto run_stackel = [&](const std::string& path, std::optional<mech::PhasePoint> start) {
        StackelSystem sys = load_stackel(path);
        try {
            Chart chart = system_chart(sys);
            chart.metric(chart.sample_center); // surfaces indefinite metrics early

            note(sys.name + " involution", verify_involution(sys, n, rep.seed), 1e-6);

            // Hamilton-Jacobi residual at admissible sampled (x, c)
            double hj = 0.0;
            int done = 0;
            for (const auto& z : mech::sample_phase_points(chart, 5 * n, rep.seed + 1)) {
                Vec c = stackel_constants(sys, z);
                std::vector<int> branch(sys.m);
                for (int i = 0; i < sys.m; ++i)
                    branch[i] = z.p(i) >= 0 ? 1 : -1;
                try {
                    WResult wr = generating_W(sys, c, z.x, branch);
                    hj = std::max(hj, hj_residual(sys, wr.gradient, c(0), z.x));
                } catch (const ForbiddenRegion&) {
                    continue;
                }
                if (++done >= n)
                    break;
            }
            note(sys.name + " hamilton-jacobi", hj, 1e-6);

            // conserved constants and the Q-drift law along the c_1 flow
            mech::PhasePoint z0 = start ? *start : mech::sample_phase_points(chart, 1, rep.seed)[0];
            MomentaPolynomial h = as_momenta_polynomial(sys, 0);
            auto traj = mech::hamiltonian_flow(h, chart, z0, 10.0, 1e-3);
            if (traj.exit_time) {
                hard_fail = true;
                rep.witnesses.push_back(sys.name + " flow left the chart at t = "
                    + fmt17(*traj.exit_time));
                return;
            }
            Vec c0 = stackel_constants(sys, z0);
            double drift = 0.0;
            for (const auto& z : traj.points)
                drift = std::max(drift, (stackel_constants(sys, z) - c0).norm());
            note(sys.name + " constants drift (T=10)", drift, 1e-5);

            auto qs = accumulate_Q(sys, traj, c0);
            double q1 = 0.0, qrest = 0.0;
            for (size_t k = 0; k < qs.size(); ++k) {
                q1 = std::max(q1, std::abs(qs[k](0) + traj.times[k]));
                for (int i = 1; i < sys.m; ++i)
                    qrest = std::max(qrest, std::abs(qs[k](i)));
            }
            note(sys.name + " Q1 + t", q1, 1e-4);
            note(sys.name + " Q_i (i>1) drift", qrest, 1e-4);
        } catch (const std::domain_error& e) {
            hard_fail = true;
            rep.witnesses.push_back(sys.name + ": " + e.what());
        }
    };

    const std::string data_dir = RANK1SEP_DATA_DIR;
    {
        mech::PhasePoint z0;
        z0.x = Vec(2);
        z0.p = Vec(2);
        z0.x << 1.0, 2.0;
        z0.p << 0.5, 0.3;
        run_stackel(cfg.stackel_override.empty() ? data_dir + "/s2_sphero_conical.stk"
                                                 : cfg.stackel_override,
            cfg.stackel_override.empty() ? std::optional(z0) : std::nullopt);
    }
    if (cfg.stackel_override.empty()) {
        mech::PhasePoint z0;
        z0.x = Vec(2);
        z0.p = Vec(2);
        z0.x << 1.2, 0.0;
        z0.p << 0.15, 0.1;
        run_stackel(data_dir + "/h2_horocyclic.stk", z0);
    }

    // complex projective plane with the diagonal torus
    {
        Cp2TorusData d = cp2_torus_candidate();
        Vec center(4);
        center << 0.5, 0.1, 0.4, -0.2;

        double br = 0.0;
        d.chart.sample_center = center;
        d.chart.sample_radius = 0.1;
        for (const auto& z : mech::sample_phase_points(d.chart, n, rep.seed + 2))
            br = std::max(br, std::abs(mech::poisson_bracket(d.torus[0], d.torus[1], z)));
        note("cp2 torus momentum bracket", br, 1e-8);

        auto sm = assemble_block_metric(d.chart, d.torus, center, 0.1, 8, rep.seed + 3);
        rep.witnesses.push_back("cp2 ignorable directions: " + std::to_string(sm.r));
        if (sm.r != 2)
            hard_fail = true;
        note("cp2 g-block t-dependence", sm.t_dependence, 1e-8);
        note("cp2 adapted cross terms", sm.max_cross, 1e-8);

        d.candidate.chart.sample_center = center;
        d.candidate.chart.sample_radius = 0.1;
        auto ben = benenti_check(d.candidate, n, rep.seed + 4);
        rep.witnesses.push_back(std::string("cp2 separability conditions I/II/III: ")
            + (ben.pass_i ? "pass" : "FAIL") + "/" + (ben.pass_ii ? "pass" : "FAIL") + "/"
            + (ben.pass_iii ? "pass" : "FAIL"));
        if (!ben.pass())
            hard_fail = true;
    }

    rep.max_residual = worst;
    rep.status = (!hard_fail && worst <= rep.tolerance) ? "pass" : "fail";
    return rep;
}

struct CheckEntry {
    const char* id;
    CheckReport (*fn)(const RunConfig&);
};

inline const std::vector<CheckEntry>& check_registry()
{
    static const std::vector<CheckEntry> entries = {
        {"octonion-diagonal", cmd_verify_octonion_diagonal},
        {"f4", cmd_verify_f4},
        {"cpn", cmd_verify_cpn},
        {"lie-triple-dims", cmd_verify_lie_triple_and_dims},
        {"demo-separation", cmd_demo_separation},
    };
    return entries;
}

inline CheckReport run_check(const CheckEntry& entry, const RunConfig& cfg)
{
    auto t0 = std::chrono::steady_clock::now();
    CheckReport rep = entry.fn(cfg);
    auto t1 = std::chrono::steady_clock::now();
    // reported only on request so that reports stay byte-identical
    rep.runtime_ms = cfg.timing
        ? std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
        : 0;
    return rep;
}

/// Run every registered check in order.
inline std::vector<CheckReport> cmd_run_all(const RunConfig& cfg)
{
    std::vector<CheckReport> out;
    for (const auto& entry : check_registry())
        out.push_back(run_check(entry, cfg));
    return out;
}

} // namespace rank1sep::cli
