#include "doctest.h"

#include "fusionrep/engine.hpp"
#include "fusionrep/json_io.hpp"

using namespace fusrep;

TEST_CASE("group round trip") {
    auto g = preset_group("D8");
    auto j = group_to_json(g);
    auto back = group_from_json(j);
    CHECK(back->order() == 8);
    CHECK(back->name() == g->name());
    CHECK(group_to_json(back) == j);
    CHECK_THROWS_AS(group_from_json(Json{{"name", "x"}}), PreconditionError);
}

TEST_CASE("group from source") {
    CHECK(group_from_source("preset:Q8")->order() == 8);
    CHECK_THROWS_AS(group_from_source("/no/such/file.json"), PreconditionError);
}

TEST_CASE("input hash is deterministic and content sensitive") {
    auto h1 = input_hash("omega --fusion A4@2");
    auto h2 = input_hash("omega --fusion A4@2");
    auto h3 = input_hash("omega --fusion S3@3");
    CHECK(h1 == h2);
    CHECK(h1 != h3);
    CHECK_FALSE(h1.empty());
}

TEST_CASE("super function parsing") {
    std::vector<std::string> labels = {"s0_o1", "s1_o5"};
    Json obj = {{"values", {{"s0_o1", 4}, {"s1_o5", 0}}}};
    auto v = super_function_values_from_json(obj, labels);
    CHECK(v == std::vector<Int>{Int(4), Int(0)});

    Json arr = {{"values", {4, 0}}};
    CHECK(super_function_values_from_json(arr, labels) == v);

    Json big = {{"values", {{"s0_o1", "123456789012345678901234567890"}, {"s1_o5", 0}}}};
    CHECK(super_function_values_from_json(big, labels)[0] == Int("123456789012345678901234567890"));

    Json missing = {{"values", {{"s0_o1", 4}}}};
    CHECK_THROWS_AS(super_function_values_from_json(missing, labels), PreconditionError);
    Json unknown = {{"values", {{"s0_o1", 4}, {"s1_o5", 0}, {"zz", 1}}}};
    CHECK_THROWS_AS(super_function_values_from_json(unknown, labels), PreconditionError);
}

TEST_CASE("lattice serialization") {
    auto ctx = context_from_spec("C5:C4@5");
    auto j = lattice_to_json(ctx.cba_lattice(), ctx.subs().class_labels);
    CHECK(j["ambient"] == 2);
    CHECK(j["rank"] == 2);
    CHECK(j["hnf_rows"].size() == 2);
    CHECK(j["hnf_rows"][1][1] == "4");
}

TEST_CASE("cyclotomic and class function serialization") {
    CHECK(cyclo_to_json(Cyclo(Rat(3, 2))) == Json("3/2"));
    auto z = Cyclo::root_of_unity(5, 1);
    auto j = cyclo_to_json(z);
    CHECK(j["level"] == 5);
    CHECK(j["coords"].size() == 4);

    auto t = character_table(preset_group("S3"));
    auto tj = table_to_json(t);
    CHECK(tj["irreducibles"].size() == 3);
    CHECK(tj["classes"].size() == 3);
}

TEST_CASE("biset serialization") {
    auto ctx = context_from_spec("S3@3");
    auto j = biset_to_json(ctx.omega(), ctx.s());
    CHECK(j.size() == 2);
    for (const auto& e : j) {
        CHECK(e["Q_order"] == 3);
        CHECK(e["coeff"] == "1/2");
    }
}

TEST_CASE("rep vector serialization") {
    auto ctx = context_from_spec("C5:C4@5");
    const auto& b = ctx.basis(FieldTag::R);
    IntVec coords(b.size(), Int(0));
    coords[0] = 2;
    auto j = rep_vector_to_json(b, coords);
    CHECK(j["field"] == "R");
    CHECK(j["coordinates"].size() == 1);
}
