#include <doctest.h>

#include "cdc/errors.hpp"
#include "cdc/network.hpp"
#include "oracles.hpp"

using namespace cdc;

TEST_CASE("drm on the reference examples") {
    const Region a{Box::from(1, 3, 2, 3), Box::from(2, 3, 1, 3)};
    const Region b{Box::from(0, 2, 0, 2)};
    CHECK(drm(a, b).str() == "N:NE:E");
    CHECK(drm(b, a).str() == "W:O:SW:S");
    CHECK(drm(a, a).str() == "O");

    const Region u{Box::from(0, 1, 1, 3)}, v{Box::from(0, 2, 0, 3)};
    CHECK(drm(u, v).str() == "O");
    CHECK(drm(v, u) == TileSet::parse("E:SE:S:O"));
}

TEST_CASE("drm matches the sampling oracle on random regions") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 3000; ++i) {
        const Region a = oracle::random_region(rng, 1 + static_cast<int>(rng() % 4), 0, 8);
        const Region b = oracle::random_region(rng, 1 + static_cast<int>(rng() % 3), 0, 8);
        CHECK(drm(a, b).str() == oracle::drm_by_sampling(a, b));
    }
}

TEST_CASE("drm_rect agrees with drm and is scale invariant") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 10000; ++i) {
        const Box a = oracle::random_box(rng, 0, 8, 2), b = oracle::random_box(rng, 0, 8, 2);
        const TileSet t = drm_rect(a, b);
        REQUIRE(t == drm(Region{a}, Region{b}));
        const Rational k(1 + static_cast<int>(rng() % 40), 1 + static_cast<int>(rng() % 9));
        CHECK(drm_rect(scale(a, k), scale(b, k)) == t);
        CHECK(drm(Region{translate(a, k, -k)}, Region{translate(b, k, -k)}) == t);
    }
}

TEST_CASE("basic relation universes") {
    const auto c = enumerate_basic_relations(CalculusMode::Connected);
    const auto d = enumerate_basic_relations(CalculusMode::Disconnected);
    CHECK(c.size() == 218);
    CHECK(d.size() == 511);
    CHECK(std::is_sorted(c.begin(), c.end()));
    CHECK(is_basic_relation(TileSet::parse("N:NE:E"), CalculusMode::Connected));
    CHECK_FALSE(is_basic_relation(TileSet::parse("N:S"), CalculusMode::Connected));
    CHECK(is_basic_relation(TileSet::parse("N:S"), CalculusMode::Disconnected));
    CHECK_FALSE(is_basic_relation(TileSet{}, CalculusMode::Disconnected));
    CHECK(to_string(CalculusMode::Disconnected) == "disconnected");
    CHECK(parse_mode("connected") == CalculusMode::Connected);
    CHECK_FALSE(parse_mode("both").has_value());
}

TEST_CASE("realize_relation produces verified regions") {
    const Box ref = Box::from(Rational(1, 2), Rational(3, 2), 2, 5);
    for (TileSet t : enumerate_basic_relations(CalculusMode::Connected)) {
        const Region r = realize_relation(t, ref);
        CHECK(drm(r, Region{ref}) == t);
        CHECK(is_interior_connected(r));
    }
    for (TileSet t : enumerate_basic_relations(CalculusMode::Disconnected))
        CHECK(drm(realize_relation(t, ref, CalculusMode::Disconnected), Region{ref}) == t);
    CHECK_THROWS_AS(realize_relation(TileSet::parse("N:S"), ref), Unrealizable);
    CHECK_THROWS_AS(realize_relation(TileSet{}, ref, CalculusMode::Disconnected), Unrealizable);
}

TEST_CASE("network construction errors") {
    Network n;
    n.add_variable("a");
    n.add_variable("b");
    CHECK_THROWS_AS(n.add_variable("a"), InvalidNetwork);
    CHECK_THROWS_AS(n.add_constraint("a", "a", TileSet::parse("O")), InvalidNetwork);
    CHECK_THROWS_AS(n.add_constraint("a", "c", TileSet::parse("O")), InvalidNetwork);
    CHECK_THROWS_AS(n.add_constraint("a", "b", TileSet::parse("N:S")), InvalidNetwork);
    n.add_constraint("a", "b", TileSet::parse("N"));
    CHECK_THROWS_AS(n.add_constraint("a", "b", TileSet::parse("S")), DuplicateConstraint);
    CHECK_THROWS_AS(n.add_constraint("a", "b", TileSet::parse("N")), DuplicateConstraint);
    n.add_constraint("b", "a", TileSet::parse("S"));
    CHECK(n.constraint("a", "b") == TileSet::parse("N"));
    CHECK_FALSE(n.constraint("a", "x").has_value());
    CHECK_THROWS_AS(static_cast<void>(n.index_of("x")), MissingVariable);

    Network d(CalculusMode::Disconnected);
    d.add_variable("a");
    d.add_variable("b");
    d.add_constraint("a", "b", TileSet::parse("N:S"));
    CHECK_THROWS_AS(d.set_mode(CalculusMode::Connected), InvalidNetwork);
}

TEST_CASE("check_configuration reports violations and disconnection") {
    Network n;
    for (const char* v : {"a", "b", "c"}) n.add_variable(v);
    n.add_constraint("a", "b", TileSet::parse("N:NE:E"));
    n.add_constraint("b", "a", TileSet::parse("W:O:SW:S"));
    n.add_constraint("c", "a", TileSet::parse("S"));

    Configuration c;
    c.insert_or_assign("a", Region{Box::from(1, 3, 2, 3), Box::from(2, 3, 1, 3)});
    c.insert_or_assign("b", Region{Box::from(0, 2, 0, 2)});
    c.insert_or_assign("c", Region{Box::from(1, 3, -2, 0)});
    CHECK(check_configuration(n, c).ok());

    c.insert_or_assign("c", Region{Box::from(1, 3, -2, 2)});
    auto r = check_configuration(n, c);
    REQUIRE(r.constraint_violations.size() == 1);
    CHECK(r.constraint_violations[0].from == "c");
    CHECK(r.constraint_violations[0].actual == TileSet::parse("O:S"));

    c.insert_or_assign("c", Region{Box::from(1, 2, -2, -1), Box::from(2, 3, -1, 0)});  // corner touch
    r = check_configuration(n, c);
    CHECK(r.constraint_violations.empty());
    REQUIRE(r.disconnected.size() == 1);
    CHECK(r.disconnected[0] == "c");

    Network d = n;
    d.set_mode(CalculusMode::Disconnected);
    CHECK(check_configuration(d, c).ok());

    c.erase("b");
    CHECK_THROWS_AS(check_configuration(n, c), MissingVariable);
}

TEST_CASE("violations are ordered by declaration index") {
    Network n;
    for (const char* v : {"z", "y", "x"}) n.add_variable(v);
    n.add_constraint("x", "y", TileSet::parse("N"));
    n.add_constraint("z", "x", TileSet::parse("N"));
    n.add_constraint("y", "z", TileSet::parse("N"));
    Configuration c;
    for (const char* v : {"x", "y", "z"}) c.insert_or_assign(v, Region{Box::from(0, 1, 0, 1)});
    const auto r = check_configuration(n, c);
    REQUIRE(r.constraint_violations.size() == 3);
    CHECK(r.constraint_violations[0].from == "z");
    CHECK(r.constraint_violations[1].from == "y");
    CHECK(r.constraint_violations[2].from == "x");
}
