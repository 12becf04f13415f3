#include "defectus/congruence.hpp"

#include <random>

namespace defectus {

bool DefectReport::all_checks_pass() const {
    for (const auto& [name, ok] : checks)
        if (!ok) return false;
    return true;
}

DefectReport analyze_point(const Matrix& a) {
    const ProblemShape shape(a.rows(), a.cols());
    const int t = shape.t;

    if (!minor_ideal_valuation(a, shape.m).is_infinite())
        throw Error(ErrorCode::point_not_on_variety,
                    "some maximal minor of the point is nonzero");

    DefectReport rep{shape, a.backend()};
    rep.on_variety = true;
    rep.rank = rank(a);
    rep.regular_A = (rep.rank == t);
    rep.w = minor_ideal_valuation(a, t);
    if (!rep.regular_A) return rep; // w is infinite; nothing further is defined

    const long w = rep.w.value();
    rep.w_alt = cokernel_torsion_length(a);
    rep.checks["w_alt"] = (*rep.w_alt == rep.w);

    rep.psi_length = rep.w;
    rep.phi_A_length = cokernel_torsion_length(jacobian_all_minors_at_point(a));
    rep.checks["phi_A"] = (*rep.phi_A_length == Valuation::of(w).times(shape.n - t));

    rep.delta = rep.phi_A_length->value() - rep.psi_length->value();
    rep.checks["delta"] = (*rep.delta == (shape.n - shape.m) * w);

    rep.conductor_colength = conductor_colength(a);

    Matrix J = jacobian_windows_at_point(a);
    rep.regular_C = (rank(J) == shape.window_count());
    if (rep.regular_C) {
        rep.phi_C_length = cokernel_torsion_length(J);
        rep.checks["conductor_finite"] = !rep.conductor_colength->is_infinite();
        rep.checks["ikm"] =
            !rep.conductor_colength->is_infinite() &&
            rep.phi_C_length->value() - rep.conductor_colength->value() ==
                rep.psi_length->value();
    }
    return rep;
}

IkmWitness crosscheck_ikm(const Matrix& a) {
    const ProblemShape shape(a.rows(), a.cols());
    if (rank(a) != shape.t)
        throw Error(ErrorCode::precondition_violated, "point is not regular");
    Matrix J = jacobian_windows_at_point(a);
    if (rank(J) != shape.window_count())
        throw Error(ErrorCode::precondition_violated,
                    "the complete-intersection side is not regular at this point");

    IkmWitness wit{false, minor_ideal_valuation(a, shape.t), cokernel_torsion_length(J),
                   conductor_colength(a)};
    wit.pass = !wit.psi.is_infinite() && !wit.colength.is_infinite() &&
               wit.phi_C.value() - wit.colength.value() == wit.psi.value();
    return wit;
}

bool invariance_probe(const Matrix& a, long trials, uint64_t seed) {
    const ProblemShape shape(a.rows(), a.cols());
    if (rank(a) != shape.t)
        throw Error(ErrorCode::precondition_violated, "point is not regular");

    const DefectReport base = analyze_point(a);
    std::mt19937_64 rng(seed);
    for (long trial = 0; trial < trials; ++trial) {
        Matrix U = random_unimodular(a.backend(), shape.m, rng(), 3L * shape.m);
        Matrix V = random_unimodular(a.backend(), shape.n, rng(), 3L * shape.n);
        const DefectReport moved = analyze_point(gl_act(a, U, V));
        if (moved.w != base.w || moved.psi_length != base.psi_length ||
            moved.delta != base.delta)
            return false;
    }
    return true;
}

} // namespace defectus
