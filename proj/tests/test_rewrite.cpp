#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <bondle/rewrite.hpp>

#include "oracles.hpp"

using namespace bondle;

namespace {
const std::string kFullExample =
    "N S1+_0 O2+ O3- B4+ U3- S1+_1 U2+ O5- O6+ S1+_-2 S1-_-1 U6+ A7+ U5- B4- C";

MoveSpec mk(MoveSpec::Type t) {
    MoveSpec s;
    s.type = t;
    return s;
}
} // namespace

TEST_CASE("type I kink insertion and removal are inverse") {
    GaussCode base = parse_valid("N B1+ B1+ C");

    MoveSpec ins = mk(MoveSpec::Type::I_insert);
    ins.at = 1;
    ins.sign = -1;
    GaussCode kinked = apply_move(base, ins);
    CHECK(serialize(kinked) == "N B1+ O2- U2- B1+ C");

    MoveSpec rem = mk(MoveSpec::Type::I_remove);
    rem.at = 1;
    CHECK(apply_move(kinked, rem) == base);

    SECTION("under-first order") {
        ins.under_first = true;
        CHECK(serialize(apply_move(base, ins)) == "N B1+ U2- O2- B1+ C");
    }
    SECTION("kink removal reduces to the empty chain") {
        MoveSpec r = mk(MoveSpec::Type::I_remove);
        r.at = 0;
        CHECK(serialize(apply_move(parse_valid("N O1+ U1+ C"), r)) == "N C");
    }
    SECTION("removal rejects non-kinks") {
        MoveSpec r = mk(MoveSpec::Type::I_remove);
        r.at = 0;
        CHECK_THROWS_AS(apply_move(base, r), NotApplicable);
        r.at = 5;
        CHECK_THROWS_AS(apply_move(base, r), NotApplicable);
    }
}

TEST_CASE("type II bigon insertion and removal are inverse") {
    GaussCode base = parse_valid("N B1+ B1- C");

    MoveSpec ins = mk(MoveSpec::Type::II_insert);
    ins.at = 0;
    ins.at2 = 1;
    ins.sign = +1;
    ins.over_pair_first = true;
    GaussCode big = apply_move(base, ins);
    CHECK(serialize(big) == "N O1+ O2- B3+ U1+ U2- B3- C");

    MoveSpec rem = mk(MoveSpec::Type::II_remove);
    rem.at = 0;
    rem.at2 = 3;
    CHECK(apply_move(big, rem) == base);

    SECTION("swapped under order still removable") {
        ins.swap_under = true;
        GaussCode alt = apply_move(base, ins);
        CHECK(serialize(alt) == "N O1+ O2- B3+ U2- U1+ B3- C");
        CHECK(apply_move(alt, rem) == base);
    }
    SECTION("equal signs are rejected") {
        GaussCode bad = parse_valid("N O1+ O2+ B3+ U1+ U2+ B3- C");
        CHECK_THROWS_AS(apply_move(bad, rem), NotApplicable);
    }
    SECTION("pairs must use the same two crossings") {
        GaussCode bad = parse_valid("N O1+ O2- B3+ U1+ B3- U2- C");
        MoveSpec r = rem;
        r.at2 = 3; // (U1+, B3-) is not a crossing pair
        CHECK_THROWS_AS(apply_move(bad, r), NotApplicable);
    }
}

TEST_CASE("type III triangle move") {
    // pairs: (O1 O2) | (U1 O4) | (U2 U4), separated by a bond
    GaussCode code = parse_valid("N O1+ O2+ B3+ U1+ O4+ B3- U2+ U4+ C");
    MoveSpec m = mk(MoveSpec::Type::III);
    m.at = 0;
    m.at2 = 3;
    m.at3 = 6;

    GaussCode moved = apply_move(code, m);
    CHECK(serialize(moved) == "N O1+ O2+ B3+ O4+ U2+ B3- U4+ U1+ C");
    CHECK(apply_move(moved, m) == code); // involutive at the same anchors

    SECTION("sign rule rejects the wrong combination") {
        // same shape, but crossing 2 now negative: equal k-position demands
        // equal signs for crossings 1 and 2
        GaussCode bad = parse_valid("N O1+ O2- B3+ U1+ O4+ B3- U2- U4+ C");
        CHECK_THROWS_AS(apply_move(bad, m), NotApplicable);
    }
    SECTION("opposite k-position accepts opposite signs") {
        // move O4 before U1 in the mixed pair and U4 before U2 stays equal;
        // instead flip only the B pair order => signs must now differ
        GaussCode flip = parse_valid("N O1+ O2- B3+ U1+ O4+ B3- U4+ U2- C");
        CHECK_NOTHROW(apply_move(flip, m));
        GaussCode flip_bad = parse_valid("N O1+ O2+ B3+ U1+ O4+ B3- U4+ U2+ C");
        CHECK_THROWS_AS(apply_move(flip_bad, m), NotApplicable);
    }
    SECTION("three disjoint crossing pairs are required") {
        MoveSpec overlap = m;
        overlap.at2 = 1;
        CHECK_THROWS_AS(apply_move(code, overlap), NotApplicable);
    }
}

TEST_CASE("type IV bond slide") {
    SECTION("strand passing over both bond strands slides through") {
        GaussCode code = parse_valid("N U1+ B2+ U3+ B2+ O1+ O3+ C");
        MoveSpec m = mk(MoveSpec::Type::IV);
        m.label = 2;
        GaussCode slid = apply_move(code, m);
        CHECK(serialize(slid) == "N B1+ U2+ B1+ U3+ O2+ O3+ C");

        MoveSpec back = mk(MoveSpec::Type::IV);
        back.label = 1;
        back.backward = true;
        CHECK(serialize(apply_move(slid, back)) == serialize(code));

        GaussCode unequal = parse_valid("N U1+ B2+ U3- B2+ O1+ O3- C");
        CHECK_THROWS_AS(apply_move(unequal, m), NotApplicable);
    }
    SECTION("strand passing under both slides only across parallel bonds") {
        GaussCode par = parse_valid("N O1+ B2+ O3+ B2+ U1+ U3+ C");
        MoveSpec m = mk(MoveSpec::Type::IV);
        m.label = 2;
        CHECK_NOTHROW(apply_move(par, m));

        GaussCode anti = parse_valid("N O1+ B2+ O3+ B2- U1+ U3+ C");
        CHECK_THROWS_AS(apply_move(anti, m), NotApplicable);

        // negative signs need the opposite traversal order on the strand
        GaussCode neg = parse_valid("N O1- B2+ O3- B2+ U1- U3- C");
        CHECK_THROWS_AS(apply_move(neg, m), NotApplicable);
        GaussCode neg_ok = parse_valid("N O1- B2+ O3- B2+ U3- U1- C");
        CHECK_NOTHROW(apply_move(neg_ok, m));
    }
    SECTION("missing adjacency is rejected") {
        GaussCode code = parse_valid("N B1+ B1+ O2+ U2+ C");
        MoveSpec m = mk(MoveSpec::Type::IV);
        m.label = 1;
        CHECK_THROWS_AS(apply_move(code, m), NotApplicable);
    }
}

TEST_CASE("type V bond flip") {
    MoveSpec m = mk(MoveSpec::Type::V);
    m.label = 1;
    SECTION("antiparallel bonds flip to themselves") {
        GaussCode anti = parse_valid("N B1+ O2+ U2+ B1- C");
        CHECK(apply_move(anti, m) == anti);
    }
    SECTION("parallel bonds and sheets are not flippable") {
        CHECK_THROWS_AS(apply_move(parse_valid("N B1+ B1+ C"), m), NotApplicable);
        CHECK_THROWS_AS(apply_move(parse_valid("N S1+_0 S1+_1 C"), m), NotApplicable);
    }
}

TEST_CASE("type VI helix transposition") {
    GaussCode code = parse_valid("N O1+ A2+ U1+ C");
    MoveSpec m = mk(MoveSpec::Type::VI);
    m.at = 1;
    GaussCode moved = apply_move(code, m);
    CHECK(serialize(moved) == "N O1+ U1+ A2+ C");
    CHECK(apply_move(moved, m) == code);

    MoveSpec bad = mk(MoveSpec::Type::VI);
    bad.at = 0;
    CHECK_THROWS_AS(apply_move(parse_valid("N O1+ U1+ A2+ C"), bad), NotApplicable);
}

TEST_CASE("type VII terminal crossing creation and deletion") {
    SECTION("a crossing with a terminal passage can be deleted") {
        GaussCode code = parse_valid("N O1+ B2+ U1+ B2+ C");
        MoveSpec m = mk(MoveSpec::Type::VII);
        m.label = 1;
        CHECK(serialize(apply_move(code, m)) == "N B1+ B1+ C");
    }
    SECTION("a crossing buried between the bonds cannot") {
        GaussCode code = parse_valid("N B1+ O2+ U2+ B1+ C");
        MoveSpec m = mk(MoveSpec::Type::VII);
        m.label = 2;
        CHECK_THROWS_AS(apply_move(code, m), NotApplicable);
    }
    SECTION("insertion mirrors deletion") {
        GaussCode base = parse_valid("N B1+ B1+ C");
        MoveSpec ins = mk(MoveSpec::Type::VII);
        ins.insert = true;
        ins.at = 0;
        ins.at2 = 1;
        ins.sign = -1;
        GaussCode grown = apply_move(base, ins);
        CHECK(serialize(grown) == "N O1- B2+ U1- B2+ C");
        MoveSpec rem = mk(MoveSpec::Type::VII);
        rem.label = 1;
        CHECK(apply_move(grown, rem) == base);
    }
}

TEST_CASE("published reduction of the full example") {
    GaussCode code = parse_valid(kFullExample);
    MoveSpec swap_helix = mk(MoveSpec::Type::VI);
    swap_helix.at = 11;
    MoveSpec bigon = mk(MoveSpec::Type::II_remove);
    bigon.at = 7;
    bigon.at2 = 12;
    RewriteTrace trace;
    GaussCode reduced = apply_moves(code, {swap_helix, bigon}, &trace);
    CHECK(serialize(reduced) ==
          "N S1+_0 O2+ O3- B4+ U3- S1+_1 U2+ S1+_-2 S1-_-1 A5+ B4- C");
    CHECK(trace.steps.size() == 2);
    CHECK(trace.initial_hash == code_hash(code));
    CHECK(trace.steps.back().code_hash == code_hash(reduced));
}

TEST_CASE("sheet segmentation") {
    SECTION("codes without sheets are unchanged") {
        GaussCode code = parse_valid("N B1+ O2+ U2+ B1- C");
        CHECK(segment_sheets(code) == code);
    }
    SECTION("two parallel strands become one parallel bond") {
        CHECK(serialize(segment_sheets(parse_valid("N S1+_0 S1+_1 C"))) ==
              "N B1+ B1+ C");
    }
    SECTION("two antiparallel strands become one antiparallel bond") {
        CHECK(serialize(segment_sheets(parse_valid("N S1+_0 S1-_1 C"))) ==
              "N B1+ B1- C");
    }
    SECTION("four-strand staircase") {
        // strands at indices 0, 2, 1, -1 with signs +, -, +, -
        CHECK(serialize(segment_sheets(parse_valid("N S1+_0 S1-_2 S1+_1 S1-_-1 C"))) ==
              "N B1+ B2+ B3+ B3- B1+ B2- C");
    }
}

TEST_CASE("end-arc reduction") {
    SECTION("crossings outside the bond span vanish, inner ones stay") {
        GaussCode code = parse_valid("N O1+ U1+ B2+ O3- U3- B2+ O4+ U4+ C");
        CHECK(serialize(reduce_ends(code)) == "N B1+ O2- U2- B1+ C");
    }
    SECTION("deletion cascades to a fixed point") {
        // removing crossing 3 (tail passage) exposes crossing 1's passage
        GaussCode code = parse_valid("N O1+ B2+ U1+ B2+ U3+ O3+ C");
        CHECK(serialize(reduce_ends(code)) == "N B1+ B1+ C");
    }
    SECTION("without bonds everything reduces") {
        CHECK(serialize(reduce_ends(parse_valid("N O1+ U2+ O2+ U1+ C"))) == "N C");
    }
    SECTION("idempotent") {
        std::mt19937 rng(7);
        oracles::GenOptions opt;
        opt.max_crossings = 4;
        opt.max_bonds = 2;
        for (int i = 0; i < 200; ++i) {
            GaussCode r = reduce_ends(oracles::random_code(rng, opt));
            CHECK(reduce_ends(r) == r);
        }
    }
}

TEST_CASE("helix handling") {
    GaussCode code = parse_valid("N A1+ C");
    CHECK(serialize(normalize_helices(code, HelixMode::Drop)) == "N C");
    CHECK(serialize(normalize_helices(code, HelixMode::Kinks, 2)) ==
          "N O1+ U1+ O2+ U2+ C");
    CHECK(serialize(normalize_helices(parse_valid("N A1- C"), HelixMode::Kinks, 1)) ==
          "N O1- U1- C");
}

TEST_CASE("normalization pipeline") {
    SECTION("empty chain is a fixed point") {
        CHECK(serialize(normalize(parse_valid("N C"))) == "N C");
    }
    SECTION("full example reaches its frozen normal form") {
        GaussCode norm = normalize(parse_valid(kFullExample));
        CHECK(serialize(norm) ==
              "N B1+ B2+ O3+ O4- B5+ U4- B1+ U3+ O6- O7+ B8+ B8- B2- U7+ U6- B5- C");
        CHECK(normalize(norm) == norm);
    }
    SECTION("idempotent on random codes") {
        std::mt19937 rng(99);
        oracles::GenOptions opt;
        opt.max_crossings = 4;
        opt.max_bonds = 2;
        opt.max_sheets = 1;
        opt.max_helices = 1;
        for (int i = 0; i < 500; ++i) {
            GaussCode n1 = normalize(oracles::random_code(rng, opt));
            REQUIRE(normalize(n1) == n1);
        }
    }
}
