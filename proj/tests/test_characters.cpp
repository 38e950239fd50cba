#include "doctest.h"

#include "fusionrep/chartable.hpp"
#include "fusionrep/engine.hpp"
#include "fusionrep/rational_reps.hpp"

#include <algorithm>

using namespace fusrep;

TEST_CASE("cyclotomic arithmetic") {
    Cyclo z = Cyclo::root_of_unity(5, 1);
    Cyclo sum = Cyclo::zero();
    for (long k = 0; k < 5; ++k)
        sum += Cyclo::root_of_unity(5, k);
    CHECK(sum.is_zero());
    CHECK((z * z.conjugate()) == Cyclo::one());
    CHECK(Cyclo::root_of_unity(8, 2) == Cyclo::root_of_unity(4, 1));
    CHECK(z.galois(2).galois(3) == z.galois(6 % 5));
    CHECK_FALSE(z.is_rational());
    CHECK((z + z.conjugate()).is_real());
}

TEST_CASE("character table basics") {
    auto t = character_table(preset_group("S3"));
    std::vector<long> degs = t.degrees;
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<long>{1, 1, 2});
    // first orthogonality
    for (int i = 0; i < t.size(); ++i)
        for (int j = 0; j < t.size(); ++j)
            CHECK(inner_product(t.irreducibles[i], t.irreducibles[j]) ==
                  (i == j ? Cyclo::one() : Cyclo::zero()));
    // regular character decomposes with multiplicities = degrees
    auto coeffs = t.decompose(regular_character(t.group));
    for (int i = 0; i < t.size(); ++i)
        CHECK(coeffs[i] == t.degrees[i]);
}

TEST_CASE("degrees of nonabelian presets") {
    for (const char* n : {"D8", "Q8"}) {
        auto t = character_table(preset_group(n));
        std::vector<long> degs = t.degrees;
        std::sort(degs.begin(), degs.end());
        CHECK(degs == std::vector<long>{1, 1, 1, 1, 2});
    }
    auto t = character_table(preset_group("S4"));
    std::vector<long> degs = t.degrees;
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<long>{1, 1, 2, 3, 3});
}

TEST_CASE("frobenius-schur indicators") {
    auto tq = character_table(preset_group("Q8"));
    for (int i = 0; i < tq.size(); ++i)
        if (tq.degrees[i] == 2)
            CHECK(frobenius_schur(tq.irreducibles[i]) == -1);
    auto tc = character_table(preset_group("C3"));
    int zeros = 0;
    for (int i = 0; i < tc.size(); ++i)
        zeros += frobenius_schur(tc.irreducibles[i]) == 0;
    CHECK(zeros == 2);
}

TEST_CASE("real irreducibles and galois transfer") {
    auto tc = character_table(preset_group("C3"));
    auto real = real_irreducible_characters(tc);
    CHECK(real.size() == 2); // trivial and chi + conj(chi)
    auto tq = character_table(preset_group("Q8"));
    CHECK(real_irreducible_characters(tq).size() == 5); // the 2-dim doubled

    for (int i = 0; i < tc.size(); ++i) {
        auto tr = galois_transfer(tc.irreducibles[i], TargetField::Reals);
        CHECK(tr.is_rational_valued());
        if (tc.degrees[i] == 1 && !(tc.irreducibles[i] == trivial_character(tc.group)))
            CHECK(tr.degree() == Cyclo(Rat(2)));
    }
}

TEST_CASE("galois orbits") {
    auto t5 = character_table(preset_group("C5"));
    auto orbits = galois_orbits(t5);
    std::vector<size_t> sizes;
    for (const auto& o : orbits)
        sizes.push_back(o.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 4});
}

TEST_CASE("induction and restriction") {
    auto s3 = preset_group("S3");
    auto subs = enumerate_subgroups(s3);
    for (int c = 0; c < subs.class_count(); ++c) {
        auto chi = permutation_character(subs.class_rep(c));
        CHECK(chi.degree() == Cyclo(Rat(s3->order() / subs.class_rep(c).order())));
        // permutation characters contain the trivial character once per orbit
        CHECK(inner_product(chi, trivial_character(s3)) == Cyclo::one());
    }
}

TEST_CASE("rational irreducible basis") {
    auto subs = enumerate_subgroups(preset_group("D8"));
    auto rs = ritter_segal_basis(subs, 2);
    // one rational irreducible per cyclic subgroup class
    CHECK(rs.characters.size() == cyclic_subgroup_classes(subs).size());
    for (const auto& chi : rs.characters)
        CHECK(chi.is_rational_valued());
    auto dm = cyclic_detection_matrix(subs, rs);
    CHECK(dm.entries.size() == rs.characters.size());
    CHECK(determinant(dm.entries) != 0);
}

TEST_CASE("schur index on Q8") {
    auto t = character_table(preset_group("Q8"));
    auto subs = enumerate_subgroups(preset_group("Q8"));
    auto rs = ritter_segal_basis(subs, 2);
    bool saw_two = false;
    for (const auto& rep : schur_index_report(t, rs))
        if (rep.multiplier == 2)
            saw_two = true;
    CHECK(saw_two); // the quaternionic character needs multiplier 2
}

TEST_CASE("stability checks on a fusion system") {
    auto ctx = context_from_spec("S3@3");
    const auto& f = ctx.fusion();
    auto chi = regular_character(ctx.s());
    CHECK(is_F_stable(chi, f));
    CHECK(is_F_stable_by_restrictions(chi, f));
    // a single nontrivial linear character of C3 is fused with its inverse
    const auto& t = ctx.table();
    for (int i = 0; i < t.size(); ++i)
        if (!(t.irreducibles[i] == trivial_character(ctx.s())))
            CHECK_FALSE(is_F_stable(t.irreducibles[i], f));
}
