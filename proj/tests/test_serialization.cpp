#include <catch2/catch_amalgamated.hpp>

#include <bondle/serialization.hpp>

using namespace bondle;

TEST_CASE("algebra tables round-trip through JSON") {
    auto [q, m] = affine_bondle(15, 8, 2, 6);
    Json j = table_to_json(q, m);
    CHECK(j["schema"] == 1);
    auto [q2, m2] = table_from_json(j);
    CHECK(q2.order == q.order);
    CHECK(q2.op == q.op);
    CHECK(q2.inv_op == q.inv_op);
    CHECK(m2.R1 == m.R1);
    CHECK(m2.R2 == m.R2);
    CHECK(m2.R3 == m.R3);

    SECTION("R3 is omitted when absent") {
        auto [qs, ms] = affine_singquandle(15, 8, 2);
        Json js = table_to_json(qs, ms);
        CHECK_FALSE(js.contains("R3"));
        CHECK_FALSE(table_from_json(js).second.has_R3());
    }
}

TEST_CASE("move specs round-trip through JSON") {
    MoveSpec s;
    s.type = MoveSpec::Type::II_insert;
    s.at = 1;
    s.at2 = 4;
    s.sign = -1;
    s.over_pair_first = true;
    MoveSpec back = movespec_from_json(movespec_to_json(s));
    CHECK(back.type == s.type);
    CHECK(back.at == s.at);
    CHECK(back.at2 == s.at2);
    CHECK(back.sign == s.sign);
    CHECK(back.over_pair_first == s.over_pair_first);

    SECTION("VII uses a direction string") {
        MoveSpec v;
        v.type = MoveSpec::Type::VII;
        v.insert = true;
        v.at = 0;
        v.at2 = 2;
        Json j = movespec_to_json(v);
        CHECK(j["direction"] == "insert");
        CHECK(movespec_from_json(j).insert);
        j["direction"] = "remove";
        CHECK_FALSE(movespec_from_json(j).insert);
    }
    SECTION("unknown move names are rejected") {
        CHECK_THROWS_AS(movespec_from_json(Json{{"move", "VIII"}}),
                        std::invalid_argument);
    }
}

TEST_CASE("diagram dumps expose arcs and sites") {
    Json j = diagram_to_json(build_diagram(parse_valid("N B1+ O2+ U2+ B1- C")));
    CHECK(j["schema"] == 1);
    CHECK(j["arc_count"] == 4);
    REQUIRE(j["sites"].size() == 2);
    bool saw_bond = false;
    for (const auto& s : j["sites"])
        if (s["type"] == "bond") {
            saw_bond = true;
            CHECK_FALSE(s["parallel"].get<bool>());
        }
    CHECK(saw_bond);
}

TEST_CASE("battery specifications resolve") {
    Bondle aff = bondle_from_spec(
        Json{{"type", "affine"}, {"n", 15}, {"a", 8}, {"b", 2}, {"m", 6}});
    CHECK(aff.name == "affine(15,8,2,6)");
    CHECK(aff.q.order == 15);
    CHECK(aff.maps.has_R3());

    Bondle d4 = bondle_from_spec(Json{{"type", "d4"}, {"family", 2}, {"n_param", 1}});
    CHECK(d4.q.order == 8);

    CHECK_THROWS_AS(bondle_from_spec(Json{{"type", "nope"}}), std::invalid_argument);

    std::vector<Bondle> battery = default_battery();
    REQUIRE(battery.size() == 3);
    CHECK(battery[0].name == "affine(15,8,2,6)");
    CHECK(battery[1].name == "affine(15,7,8,6)");
    CHECK(battery[2].q.order == 8);
}
