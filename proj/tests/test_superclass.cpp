#include "doctest.h"

#include "fusionrep/engine.hpp"
#include "fusionrep/superclass.hpp"

using namespace fusrep;

TEST_CASE("borel-smith lattice of C2 and C4") {
    // no condition reaches a bare C2: the sign representation has f = (1, 0)
    auto subs2 = enumerate_subgroups(preset_group("C2"));
    CHECK(borel_smith_lattice(subs2, 2) == IntegerLattice::full(2));
    // inside C4 the chain 1 < C2 < C4 forces f(1) - f(C2) even
    auto subs4 = enumerate_subgroups(preset_group("C4"));
    auto lat = borel_smith_lattice(subs4, 2);
    CHECK(lat.rank() == 3);
    CHECK(lat.contains({Int(2), Int(0), Int(0)}));
    CHECK(lat.contains({Int(1), Int(1), Int(0)}));
    CHECK_FALSE(lat.contains({Int(1), Int(0), Int(0)}));
}

TEST_CASE("borel-smith checker matches lattice on C4") {
    auto subs = enumerate_subgroups(preset_group("C4"));
    auto lat = borel_smith_lattice(subs, 2);
    std::vector<Int> good = {Int(2), Int(2), Int(0)}; // f(1), f(C2), f(C4)
    std::vector<Int> bad = {Int(1), Int(0), Int(0)};
    CHECK(check_borel_smith(subs, 2, good).ok == lat.contains(good));
    CHECK(check_borel_smith(subs, 2, bad).ok == lat.contains(bad));
    CHECK_FALSE(check_borel_smith(subs, 2, bad).ok);
    CHECK_FALSE(check_borel_smith(subs, 2, bad).witnesses.empty());
}

TEST_CASE("condition lattices of the index-four metacyclic instance") {
    auto ctx = context_from_spec("C5:C4@5");
    const auto& cb = ctx.cb_lattice();
    const auto& cba = ctx.cba_lattice();
    REQUIRE(cb.rank() == 2);
    REQUIRE(cba.rank() == 2);
    // f(1) == f(S) mod 2 versus mod 4
    CHECK(cb.basis[0] == IntVec{Int(1), Int(1)});
    CHECK(cb.basis[1] == IntVec{Int(0), Int(2)});
    CHECK(cba.basis[0] == IntVec{Int(1), Int(1)});
    CHECK(cba.basis[1] == IntVec{Int(0), Int(4)});
    CHECK(cb.contains_lattice(cba));
    CHECK(cb.index_of_sublattice(cba) == 2);
}

TEST_CASE("stability rows collapse fused classes") {
    auto ctx = context_from_spec("A4@2");
    const auto& f = ctx.fusion();
    auto rows = stability_rows(f);
    // V4 in A4 fuses its three C2 subgroup classes into one
    CHECK_FALSE(rows.empty());
    std::vector<Int> constant(ctx.subs().class_count(), Int(7));
    CHECK(check_rows(rows, constant).ok);
}

TEST_CASE("prime power classes of the order six group") {
    auto pp = prime_power_classes(preset_group("S3"));
    CHECK(pp.count() == 3); // 1, C2, C3
    std::vector<long> orders;
    for (int i = 0; i < pp.count(); ++i)
        orders.push_back(pp.rep(i).order());
    CHECK(orders == std::vector<long>{1, 2, 3});
    CHECK(lattice_DP(pp).rank() == 3);
}

TEST_CASE("monotone check") {
    auto subs = enumerate_subgroups(preset_group("C4"));
    CHECK(monotone_check(subs, {Int(3), Int(1), Int(0)}));
    CHECK_FALSE(monotone_check(subs, {Int(1), Int(2), Int(0)})); // grows upward
    CHECK_FALSE(monotone_check(subs, {Int(3), Int(-1), Int(0)})); // negative
    CHECK(monotone_check(subs, {Int(0), Int(0), Int(0)}));
}

TEST_CASE("extension to prime power classes") {
    auto ctx = context_from_spec("S3@3");
    const auto& f = ctx.fusion();
    auto pp = prime_power_classes(f.ambient());
    // S = C3, f = (2, 0) on (1, C3)
    auto ext = extend_to_prime_power(f, {Int(2), Int(0)}, pp);
    REQUIRE(ext.size() == 3);
    CHECK(ext[0] == 2); // trivial subgroup keeps f(1)
    CHECK(ext[1] == 2); // C2 is coprime to p: takes f(1)
    CHECK(ext[2] == 0); // C3 conjugate into S
}

TEST_CASE("f-class and s-class translations") {
    auto ctx = context_from_spec("A4@2");
    const auto& f = ctx.fusion();
    int nf = static_cast<int>(f.subgroup_f_classes().size());
    std::vector<Int> fv(nf);
    for (int i = 0; i < nf; ++i)
        fv[i] = 10 - i;
    auto sv = f_to_s_values(f, fv);
    auto back = s_to_f_values(f, sv);
    REQUIRE(back.has_value());
    CHECK(*back == fv);
    // a function not constant on some fused pair is rejected
    REQUIRE(sv.size() > fv.size()); // A4 fusion merges subgroup classes
    for (size_t i = 0; i < sv.size(); ++i) {
        int fc = f.f_class_of_subgroup_class(static_cast<int>(i));
        if (f.subgroup_f_classes()[fc].size() > 1) {
            sv[i] += 1;
            CHECK_FALSE(s_to_f_values(f, sv).has_value());
            break;
        }
    }
}

TEST_CASE("bauer rows accept dimension functions of real representations") {
    auto s3 = preset_group("S3");
    auto pp = prime_power_classes(s3);
    // regular representation: f(H) = |G|/|H| on prime power classes
    std::vector<Int> f(pp.count());
    for (int i = 0; i < pp.count(); ++i)
        f[i] = s3->order() / pp.rep(i).order();
    CHECK(check_bauer(pp, f).ok);
}
