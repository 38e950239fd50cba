#include "doctest.h"

#include "fusionrep/perm.hpp"

using namespace fusrep;

TEST_CASE("permutation arithmetic") {
    Permutation a = Permutation::from_cycles(4, {{0, 1, 2, 3}});
    Permutation b = Permutation::from_cycles(4, {{0, 1}});
    CHECK((a * a.inverse()).is_identity());
    CHECK((a * b)(0) == a(b(0)));
    CHECK(Permutation::identity(4).is_identity());
}

TEST_CASE("preset orders") {
    struct Row {
        const char* name;
        long order;
    };
    for (Row r : {Row{"C4", 4}, {"C9", 9}, {"C2xC2", 4}, {"C3xC3", 9}, {"D8", 8}, {"Q8", 8},
                  {"SD16", 16}, {"S3", 6}, {"S4", 24}, {"A4", 12}, {"A6", 360}, {"SL2(3)", 24},
                  {"D10", 10}, {"C5:C4", 20}, {"PGL3(3)", 5616}}) {
        auto g = preset_group(r.name);
        CHECK(g->order() == r.order);
        if (g->order() <= 400)
            CHECK(g->order_by_stabilizer_chain() == r.order);
    }
    CHECK_THROWS_AS(preset_group("nonsense"), PreconditionError);
}

TEST_CASE("group structure basics") {
    auto d8 = preset_group("D8");
    CHECK(d8->class_count() == 5);
    for (int e = 0; e < d8->order(); ++e) {
        CHECK(d8->mul(e, d8->inv(e)) == d8->identity_index());
        CHECK(d8->element_order(e) == d8->element_order(d8->conjugate(1, e)));
    }
    CHECK(center(d8).order() == 2);
    CHECK(center(preset_group("Q8")).order() == 2);
}

TEST_CASE("subgroup classification") {
    CHECK(enumerate_subgroups(preset_group("D8")).class_count() == 8);
    CHECK(enumerate_subgroups(preset_group("Q8")).class_count() == 6);
    CHECK(enumerate_subgroups(preset_group("C4")).class_count() == 3);
    CHECK(enumerate_subgroups(preset_group("S4")).class_count() == 11);
    CHECK(enumerate_subgroups(preset_group("A4")).class_count() == 5);

    auto s4 = preset_group("S4");
    auto subs = enumerate_subgroups(s4);
    for (int c = 0; c < subs.class_count(); ++c) {
        const Subgroup& rep = subs.class_rep(c);
        CHECK(s4->order() % rep.order() == 0);
        // every listed class member is conjugate to the representative
        CHECK(subs.class_index_of(rep.conjugated_by(3)) == c);
    }
}

TEST_CASE("normalizer and centralizer") {
    auto s4 = preset_group("S4");
    auto syl = sylow_subgroup(s4, 2);
    CHECK(syl.order() == 8);
    CHECK(normalizer(s4, syl).order() == 8); // D8 self-normalizing in S4
    auto z = center(preset_group("D8"));
    CHECK(centralizer(preset_group("D8"), z).order() == 8);
}

TEST_CASE("sylow subgroups") {
    CHECK(sylow_subgroup(preset_group("A6"), 2).order() == 8);
    CHECK(sylow_subgroup(preset_group("A4"), 2).order() == 4);
    CHECK(sylow_subgroup(preset_group("S3"), 3).order() == 3);
    CHECK(sylow_subgroup(preset_group("C5:C4"), 5).order() == 5);
    auto p = sylow_subgroup(preset_group("PGL3(3)"), 2);
    CHECK(p.order() == 16);
    CHECK(p.is_p_group(2));
}

TEST_CASE("quotients and abelian invariants") {
    auto d8 = preset_group("D8");
    auto q = quotient_group(d8, center(d8));
    CHECK(q.quotient->order() == 4);
    CHECK(abelian_decomposition(q.quotient).invariant_factors == std::vector<long>{2, 2});
    CHECK(abelianization_invariants(Subgroup::full(preset_group("S4"))) == std::vector<long>{2});
    CHECK(abelianization_invariants(Subgroup::full(preset_group("A4"))) == std::vector<long>{3});
}

TEST_CASE("embedded regular copy") {
    auto s4 = preset_group("S4");
    auto syl = sylow_subgroup(s4, 2);
    auto emb = as_abstract_group(syl, "local");
    CHECK(emb.group->order() == 8);
    for (int i = 0; i < 8; ++i)
        CHECK(emb.to_local.at(emb.to_parent[i]) == i);
    // translation is a homomorphism
    CHECK(emb.to_parent[emb.group->mul(1, 2)] ==
          s4->mul(emb.to_parent[1], emb.to_parent[2]));
}
