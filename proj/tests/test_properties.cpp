#include "doctest.h"

#include "properties.hpp"

using namespace proptest;

static void run_all(const char* spec, int cases, unsigned seed) {
    auto ctx = context_from_spec(spec);
    CAPTURE(spec);
    auto check = [&](Tally t) {
        if (t.failures > 0)
            for (const auto& n : t.notes)
                MESSAGE(n);
        CHECK(t.failures == 0);
        CHECK(t.cases >= cases);
    };
    check(stability_equivalence(ctx, cases, seed));
    check(grothendieck_splitting(ctx, cases, seed + 1));
    check(galois_transfer_stability(ctx, cases, seed + 2));
    check(actual_lands_in_cba(ctx, cases, seed + 3));
    check(checker_vs_lattice(ctx, cases, seed + 4));
}

TEST_CASE("property suites on the order three instance") { run_all("S3@3", 300, 12001); }
TEST_CASE("property suites on the alternating instance") { run_all("A4@2", 300, 12002); }
TEST_CASE("property suites on the symmetric instance") { run_all("S4@2", 200, 12003); }
TEST_CASE("property suites on trivial dihedral fusion") { run_all("D8", 200, 12004); }
