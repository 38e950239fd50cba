#include "doctest.h"

#include "fusionrep/lattice.hpp"

using namespace fusrep;

static IntMat mat(std::initializer_list<std::initializer_list<long>> rows) {
    IntMat out;
    for (const auto& r : rows) {
        IntVec row;
        for (long v : r)
            row.emplace_back(v);
        out.push_back(std::move(row));
    }
    return out;
}

TEST_CASE("hermite normal form") {
    auto h = hermite_normal_form(mat({{2, 4}, {3, 5}}));
    CHECK(h == mat({{1, 1}, {0, 2}}));
    // idempotent and row-span preserving
    CHECK(hermite_normal_form(h) == h);
    auto l1 = IntegerLattice::from_generators(2, mat({{2, 4}, {3, 5}}));
    auto l2 = IntegerLattice::from_generators(2, mat({{1, 1}, {0, 2}}));
    CHECK(l1 == l2);
}

TEST_CASE("smith normal form") {
    auto s = smith_normal_form(mat({{2, 0}, {0, 3}}));
    CHECK(s.rank == 2);
    CHECK(s.d[0][0] == 1);
    CHECK(s.d[1][1] == 6);
    auto s2 = smith_normal_form(mat({{1, 2}, {2, 4}}));
    CHECK(s2.rank == 1);
}

TEST_CASE("integer kernel and solving") {
    auto k = integer_kernel(mat({{1, 1, 1}}));
    CHECK(k.rank() == 2);
    for (const auto& row : k.basis)
        CHECK(row[0] + row[1] + row[2] == 0);

    auto sol = solve_integer(mat({{2, 0}, {0, 3}}), {Int(4), Int(9)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 2);
    CHECK((*sol)[1] == 3);
    CHECK_FALSE(solve_integer(mat({{2}}), {Int(3)}).has_value());

    auto rsol = solve_rational({{Rat(2)}}, {Rat(3)});
    REQUIRE(rsol.has_value());
    CHECK((*rsol)[0] == Rat(3, 2));
}

TEST_CASE("lattice membership and index") {
    auto two = IntegerLattice::from_generators(2, mat({{2, 0}, {0, 2}}));
    CHECK(two.contains({Int(4), Int(-2)}));
    CHECK_FALSE(two.contains({Int(1), Int(0)}));
    CHECK(IntegerLattice::full(2).contains_lattice(two));
    CHECK(IntegerLattice::full(2).index_of_sublattice(two) == 4);
    auto coords = two.coordinates({Int(4), Int(-2)});
    REQUIRE(coords.has_value());
    CHECK((*coords)[0] == 2);
    CHECK((*coords)[1] == -1);
}

TEST_CASE("congruence kernel") {
    // x == 0 (mod 2) inside Z^1
    auto l = congruence_kernel(mat({{1}}), {Int(2)}, 1);
    CHECK(l.basis == mat({{2}}));
    // x + y == 0 exactly, x == 0 (mod 3)
    auto l2 = congruence_kernel(mat({{1, 1}, {1, 0}}), {Int(0), Int(3)}, 2);
    CHECK(l2.rank() == 1);
    CHECK(l2.contains({Int(3), Int(-3)}));
    CHECK_FALSE(l2.contains({Int(1), Int(-1)}));
}

TEST_CASE("determinant") {
    CHECK(determinant(mat({{2, 1}, {1, 2}})) == 3);
    CHECK(determinant(mat({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("rational kernel") {
    auto k = rational_kernel({{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(1), Rat(1)}});
    CHECK(k.size() == 1);
    const auto& v = k[0];
    CHECK(v[0] * 1 + v[1] * 1 == 0);
    CHECK(v[1] * 1 + v[2] * 1 == 0);
}
