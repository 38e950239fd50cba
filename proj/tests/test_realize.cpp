#include "doctest.h"

#include "fusionrep/realize.hpp"

#include <algorithm>

using namespace fusrep;

TEST_CASE("theorem A verdict on the index-four metacyclic instance") {
    auto ctx = context_from_spec("C5:C4@5");
    auto v = theorem_A_check(ctx);
    CHECK(v.contained);
    CHECK(v.equal);
    REQUIRE(v.image.rank() == 2);
    CHECK(v.image.basis[0] == IntVec{Int(1), Int(1)});
    CHECK(v.image.basis[1] == IntVec{Int(0), Int(4)});
    CHECK(v.image == v.cba);
}

TEST_CASE("virtual realization") {
    auto ctx = context_from_spec("C5:C4@5");
    auto ok = solve_virtual(ctx, {Int(4), Int(0)});
    CHECK(ok.status == RealizeStatus::Realized);
    auto zero = solve_virtual(ctx, {Int(0), Int(0)});
    CHECK(zero.status == RealizeStatus::Realized);
    for (const auto& c : zero.witness)
        CHECK(c == 0);
    auto bad = solve_virtual(ctx, {Int(1), Int(0)});
    CHECK(bad.status == RealizeStatus::PreconditionFailed);
    CHECK_FALSE(bad.diagnostics.empty());
}

TEST_CASE("monotone realization with scaling") {
    auto ctx = context_from_spec("C5:C4@5");
    auto half = solve_monotone(ctx, {Int(2), Int(0)});
    CHECK(half.status == RealizeStatus::Realized);
    CHECK(half.n == 2);
    auto full = solve_monotone(ctx, {Int(4), Int(0)});
    CHECK(full.status == RealizeStatus::Realized);
    CHECK(full.n == 1);
    auto constant = solve_monotone(ctx, {Int(3), Int(3)});
    CHECK(constant.status == RealizeStatus::Realized);
    CHECK(constant.n == 1);
    // instance-independent bound: 2 * phi(exp S) at p = 5... here p odd, m = 1
    CHECK(full.n_uniform == 4);
}

TEST_CASE("weak-precondition mode") {
    auto ctx = context_from_spec("C9");
    // (1,0,0) violates the oddness condition but only condition (ii) is
    // demanded in weak mode; scaling absorbs the defect
    auto strict = solve_monotone(ctx, {Int(1), Int(0), Int(0)});
    CHECK(strict.status == RealizeStatus::PreconditionFailed);
    auto weak = solve_monotone(ctx, {Int(1), Int(0), Int(0)}, true);
    CHECK(weak.status == RealizeStatus::Realized);
    CHECK(weak.n == 6);
}

TEST_CASE("p-local surjectivity report") {
    auto ctx = context_from_spec("C5:C4@5");
    auto r = p_local_surjectivity_check(ctx);
    CHECK(r.finite);
    CHECK(r.coprime_to_p);
    CHECK(r.index == 2);
    auto triv = context_from_spec("D8");
    auto rt = p_local_surjectivity_check(triv);
    CHECK(rt.index == 1);
}

TEST_CASE("box enumeration") {
    auto full = IntegerLattice::full(2);
    auto pts = lattice_points_in_box(full, {Int(2), Int(3)});
    CHECK(pts.size() == 12);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    IntMat gens = {{Int(2), Int(0)}, {Int(0), Int(1)}};
    auto even = lattice_points_in_box(IntegerLattice::from_generators(2, gens), {Int(2), Int(1)});
    CHECK(even.size() == 4); // x in {0, 2}, y in {0, 1}
}

TEST_CASE("monotone function enumeration") {
    auto ctx = context_from_spec("C3");
    auto fns = monotone_functions(ctx.cb_lattice(), ctx.subs(), 12);
    CHECK(fns.size() == 49);
    for (const auto& f : fns)
        CHECK(monotone_check(ctx.subs(), f));
}

TEST_CASE("dimension function explorer") {
    auto ctx = context_from_spec("C3");
    auto rep = question_6_2_explorer(ctx, 12);
    CHECK(rep.bound == 12);
    CHECK(rep.entries.size() == 49);
    CHECK(rep.all_realized);
    for (const auto& e : rep.entries) {
        REQUIRE(e.realized);
        // witness recheck: Dim(witness) == f
        const auto& dims = ctx.dims(FieldTag::R);
        for (size_t c = 0; c < e.f.size(); ++c) {
            Int acc = 0;
            for (size_t j = 0; j < e.witness.size(); ++j)
                acc += dims[c][j] * e.witness[j];
            CHECK(acc == e.f[c]);
        }
    }
}

TEST_CASE("whole group demo on the symmetric group of degree three") {
    auto rep = sigma3_nonrealizability_demo();
    CHECK(rep.pp_labels.size() == 3);
    CHECK(rep.f == IntVec{Int(2), Int(2), Int(0)});
    CHECK(rep.in_DP);
    CHECK(rep.unique);
    CHECK(rep.solution == RatVec{Rat(1), Rat(-1), Rat(1)});
    CHECK(rep.solution_has_negative);
    CHECK(rep.sylow_restrictions_actual);
    CHECK(rep.sylow_odd_witness == IntVec{Int(1), Int(0)});
    CHECK(rep.sylow_even_witness == IntVec{Int(0), Int(2)});
}

TEST_CASE("fusion spec parsing") {
    CHECK(context_from_spec("preset:D8").prime() == 2);
    CHECK(context_from_spec("C5-semidirect-C4").prime() == 5);
    CHECK(context_from_spec("A4@2").ambient()->order() == 12);
    CHECK_THROWS_AS(context_from_spec("A4"), PreconditionError); // prime not inferable
    CHECK_THROWS_AS(context_from_spec("nope@2"), PreconditionError);
}

TEST_CASE("saturation verdicts") {
    CHECK(context_from_spec("A4@2").fusion().check_saturation().saturated);
    CHECK(context_from_spec("S3@3").fusion().check_saturation().saturated);
    // a non-Sylow base subgroup produces an unsaturated system with a witness
    auto s4 = preset_group("S4");
    auto subs = enumerate_subgroups(s4);
    for (int c = 0; c < subs.class_count(); ++c)
        if (subs.class_rep(c).order() == 4 && subs.classes[c].size() == 1) {
            auto f = build_fusion_system(s4, subs.class_rep(c), 2);
            auto v = f.check_saturation();
            CHECK_FALSE(v.saturated);
            CHECK_FALSE(v.witness.empty());
        }
}
