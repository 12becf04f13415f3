#include "defectus/congruence.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace defectus;

namespace {

Matrix canonical(int m, int n, std::vector<long> exps, const Backend& bk) {
    return normalized_point(NormalizedPointSpec(ProblemShape(m, n), std::move(exps)), bk);
}

void check_keys(const DefectReport& rep, bool with_conductor) {
    std::vector<std::string> want = {"delta", "phi_A", "w_alt"};
    if (with_conductor) {
        want.push_back("conductor_finite");
        want.push_back("ikm");
    }
    REQUIRE(rep.checks.size() == want.size());
    for (const auto& k : want) {
        REQUIRE(rep.checks.count(k) == 1);
        CHECK(rep.checks.at(k));
    }
}

} // namespace

TEST_CASE("analysis of the one-row example point") {
    DefectReport rep = analyze_point(canonical(2, 4, {1}, Backend::int_local(5)));
    CHECK(rep.on_variety);
    CHECK(rep.rank == 1);
    CHECK(rep.regular_A);
    CHECK(rep.regular_C);
    CHECK(rep.w == Valuation::of(1));
    CHECK(*rep.w_alt == Valuation::of(1));
    CHECK(*rep.psi_length == Valuation::of(1));
    CHECK(*rep.phi_A_length == Valuation::of(3));
    CHECK(*rep.phi_C_length == Valuation::of(3));
    CHECK(*rep.conductor_colength == Valuation::of(2));
    CHECK(*rep.delta == 2);
    check_keys(rep, true);
    CHECK(rep.all_checks_pass());
}

TEST_CASE("analysis of a staggered point") {
    DefectReport rep = analyze_point(canonical(3, 4, {1, 2}, Backend::int_local(2)));
    CHECK(rep.rank == 2);
    CHECK(rep.w == Valuation::of(3));
    CHECK(*rep.psi_length == Valuation::of(3));
    CHECK(*rep.phi_A_length == Valuation::of(6));
    CHECK(*rep.phi_C_length == Valuation::of(6));
    CHECK(*rep.conductor_colength == Valuation::of(3));
    CHECK(*rep.delta == 3);
    CHECK(rep.all_checks_pass());
}

TEST_CASE("analysis over the polynomial backend") {
    DefectReport rep = analyze_point(canonical(3, 5, {0, 2}, Backend::poly_local(3)));
    CHECK(rep.w == Valuation::of(2));
    CHECK(*rep.psi_length == Valuation::of(2));
    CHECK(*rep.phi_A_length == Valuation::of(6));
    CHECK(*rep.delta == 4);
    CHECK(rep.all_checks_pass());
}

TEST_CASE("identity-padded point has every invariant zero") {
    DefectReport rep = analyze_point(canonical(3, 5, {0, 0}, Backend::int_local(5)));
    CHECK(rep.w == Valuation::of(0));
    CHECK(*rep.psi_length == Valuation::of(0));
    CHECK(*rep.phi_A_length == Valuation::of(0));
    CHECK(*rep.phi_C_length == Valuation::of(0));
    CHECK(*rep.conductor_colength == Valuation::of(0));
    CHECK(*rep.delta == 0);
    CHECK(rep.all_checks_pass());
}

TEST_CASE("square shape has defect zero at any exponent") {
    DefectReport rep = analyze_point(canonical(2, 2, {3}, Backend::int_local(5)));
    CHECK(rep.w == Valuation::of(3));
    CHECK(*rep.psi_length == Valuation::of(3));
    CHECK(*rep.phi_A_length == Valuation::of(3));
    CHECK(*rep.conductor_colength == Valuation::of(0));
    CHECK(*rep.delta == 0);
    CHECK(rep.all_checks_pass());
}

TEST_CASE("rank-deficient point stops after the rank step") {
    Matrix zero(Backend::int_local(5), 3, 4);
    DefectReport rep = analyze_point(zero);
    CHECK(rep.on_variety);
    CHECK(rep.rank == 0);
    CHECK_FALSE(rep.regular_A);
    CHECK_FALSE(rep.regular_C);
    CHECK(rep.w == Valuation::infinity());
    CHECK_FALSE(rep.w_alt.has_value());
    CHECK_FALSE(rep.psi_length.has_value());
    CHECK_FALSE(rep.phi_A_length.has_value());
    CHECK_FALSE(rep.phi_C_length.has_value());
    CHECK_FALSE(rep.conductor_colength.has_value());
    CHECK_FALSE(rep.delta.has_value());
    CHECK(rep.checks.empty());
    CHECK(rep.all_checks_pass()); // vacuous
}

TEST_CASE("off-variety input is rejected") {
    Matrix id = Matrix::identity(Backend::int_local(5), 2);
    expect_error(ErrorCode::point_not_on_variety, [&] { analyze_point(id); });
    Matrix wide = Matrix::from_ints(Backend::int_local(2), {{1, 0, 3}, {0, 1, 0}});
    expect_error(ErrorCode::point_not_on_variety, [&] { analyze_point(wide); });
}

TEST_CASE("invariants survive a unimodular scramble") {
    Backend bk = Backend::int_local(5);
    Matrix a = canonical(2, 4, {2}, bk);
    Matrix U = random_unimodular(bk, 2, 17, 20);
    Matrix V = random_unimodular(bk, 4, 18, 40);
    DefectReport base = analyze_point(a);
    DefectReport moved = analyze_point(gl_act(a, U, V));
    CHECK(moved.w == base.w);
    CHECK(*moved.psi_length == *base.psi_length);
    CHECK(*moved.phi_A_length == *base.phi_A_length);
    CHECK(*moved.delta == *base.delta);
    CHECK(moved.all_checks_pass());
}

TEST_CASE("invariance probe accepts normalized and scrambled points") {
    Backend bk = Backend::int_local(2);
    Matrix a = canonical(3, 4, {1, 2}, bk);
    CHECK(invariance_probe(a, 4, 23));
    CHECK(invariance_probe(a, 0, 23)); // vacuous
    Matrix moved = gl_act(a, random_unimodular(bk, 3, 5, 20), random_unimodular(bk, 4, 6, 40));
    CHECK(invariance_probe(moved, 3, 29));
}

TEST_CASE("conductor identity crosscheck with witness") {
    Backend bk = Backend::int_local(5);
    Matrix a = canonical(3, 4, {1, 2}, bk);
    IkmWitness wit = crosscheck_ikm(a);
    CHECK(wit.pass);
    CHECK(wit.psi == Valuation::of(3));
    CHECK(wit.phi_C == Valuation::of(6));
    CHECK(wit.colength == Valuation::of(3));

    Matrix moved = gl_act(a, random_unimodular(bk, 3, 31, 20), random_unimodular(bk, 4, 32, 40));
    IkmWitness moved_wit = crosscheck_ikm(moved);
    CHECK(moved_wit.pass);
    // psi is invariant; phi_C and the colength individually need not be
    CHECK(moved_wit.psi == Valuation::of(3));
    CHECK(moved_wit.phi_C.value() - moved_wit.colength.value() == 3);
}

TEST_CASE("crosscheck rejects points where either ring is singular") {
    Matrix zero(Backend::int_local(5), 2, 3);
    expect_error(ErrorCode::precondition_violated, [&] { crosscheck_ikm(zero); });
}

TEST_CASE("defect vanishes exactly when w does, in the non-square case") {
    Backend bk = Backend::int_local(5);
    CHECK(*analyze_point(canonical(2, 4, {0}, bk)).delta == 0);
    CHECK(*analyze_point(canonical(2, 4, {2}, bk)).delta == 4);
    CHECK(*analyze_point(canonical(3, 6, {0, 0}, bk)).delta == 0);
    CHECK(*analyze_point(canonical(3, 6, {0, 1}, bk)).delta == 3);
}
