#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "defectus/detmodel.hpp"

namespace defectus {

/// Full analysis of one point on the variety. For non-regular points the
/// pipeline stops after the rank step: w is infinite and the remaining
/// invariants are left unset.
struct DefectReport {
    DefectReport(ProblemShape s, Backend b) : shape(s), backend(std::move(b)) {}

    ProblemShape shape;
    Backend backend;
    bool on_variety = true;
    int rank = 0;
    bool regular_A = false;
    bool regular_C = false;
    Valuation w;
    std::optional<Valuation> w_alt;
    std::optional<Valuation> psi_length;
    std::optional<Valuation> phi_A_length;
    std::optional<Valuation> phi_C_length;
    std::optional<Valuation> conductor_colength;
    std::optional<long> delta;
    std::map<std::string, bool> checks;

    bool all_checks_pass() const;
};

/// Runs the length pipeline on one point with all maximal minors zero:
/// rank/regularity, w two ways, the congruence-module length, both cotangent
/// torsion lengths, the conductor colength, and the defect, recording each
/// identity's verdict in `checks`. Throws PointNotOnVariety when some
/// maximal minor of the input is nonzero.
DefectReport analyze_point(const Matrix& a);

/// Witness for the identity psi = phi_C - colength, recomputed from scratch.
struct IkmWitness {
    bool pass;
    Valuation psi, phi_C, colength;
};

/// Independently recomputes the three lengths at a point where both rings are
/// regular and checks the identity exactly.
IkmWitness crosscheck_ikm(const Matrix& a);

/// Applies `trials` fresh two-sided unimodular scrambles to the point and
/// verifies that w, the congruence-module length, and the defect are
/// unchanged each time.
bool invariance_probe(const Matrix& a, long trials, uint64_t seed);

} // namespace defectus
