#include <catch2/catch_amalgamated.hpp>

#include <walkbij/census.hpp>
#include <walkbij/walk.hpp>
#include <walkbij/walk_nd.hpp>

using namespace walkbij;

TEST_CASE("parse_walk decodes the step letters") {
    Alphabet t0{0};
    CHECK(parse_walk("UD", t0).heights() == std::vector<int>{0, 1, 0});
    CHECK(parse_walk("", t0).heights() == std::vector<int>{0});
    CHECK(parse_walk("DN0U", Alphabet{1}).heights() == std::vector<int>{0, -1, -1, 0});
}

TEST_CASE("parse_walk rejects bad input") {
    CHECK_THROWS_AS(parse_walk("UX", Alphabet{0}), parse_error);
    CHECK_THROWS_AS(parse_walk("N", Alphabet{0}), parse_error);   // no neutral kinds at t=0
    CHECK_THROWS_AS(parse_walk("N1", Alphabet{1}), parse_error);  // kind 1 needs t >= 2
    CHECK_NOTHROW(parse_walk("N1", Alphabet{2}));
}

TEST_CASE("format_walk is canonical") {
    Alphabet t1{1};
    CHECK(format_walk(parse_walk("UD", Alphabet{0})) == "UD");
    CHECK(format_walk(Walk1D{}) == "");
    CHECK(format_walk(parse_walk("DN0U", t1)) == "DNU"); // kind 0 prints bare
    CHECK(format_walk(parse_walk("N1N0", Alphabet{2})) == "N1N");
}

TEST_CASE("parse/format round-trip, exhaustive over short walks") {
    for (int t : {0, 1, 2}) {
        Alphabet alphabet{t};
        for (int len = 0; len <= 8; ++len) {
            for_each_walk(len, alphabet, [&](const Walk1D& w) {
                Walk1D back = parse_walk(format_walk(w), alphabet);
                REQUIRE(back == w);
            });
        }
    }
}

TEST_CASE("stats") {
    Alphabet t0{0};
    WalkStats s = stats(parse_walk("DDUU", t0));
    CHECK(s.end == 0);
    CHECK(s.depth == 2);
    CHECK(s.neutral_count == 0);

    s = stats(Walk1D{});
    CHECK(s.end == 0);
    CHECK(s.depth == 0);
    CHECK(s.length == 0);

    s = stats(parse_walk("DNU", Alphabet{1}));
    CHECK(s.end == 0);
    CHECK(s.depth == 1);
    CHECK(s.neutral_count == 1);
}

TEST_CASE("classify") {
    Alphabet t0{0};
    WalkClass c = classify(parse_walk("UD", t0));
    CHECK(c.positive);
    CHECK(c.recurrent);

    c = classify(parse_walk("DU", t0));
    CHECK_FALSE(c.positive);
    CHECK(c.recurrent);

    c = classify(parse_walk("UUU", t0));
    CHECK(c.positive);
    CHECK_FALSE(c.almost_recurrent);
}

TEST_CASE("walk invariants over all short walks") {
    for (int t : {0, 1}) {
        Alphabet alphabet{t};
        for (int len = 0; len <= 7; ++len) {
            for_each_walk(len, alphabet, [&](const Walk1D& w) {
                REQUIRE(w.depth() >= 0);
                if (w.end() < 0) REQUIRE(w.depth() >= -w.end());
                REQUIRE(w.is_positive() == (w.depth() == 0));
                REQUIRE(w.heights().size() == w.size() + 1);
            });
        }
    }
}

TEST_CASE("first and last visits") {
    Walk1D w = parse_walk("UDUU", Alphabet{0}); // heights 0,1,0,1,2
    CHECK(w.first_visit(1) == 1);
    CHECK(w.last_visit(1) == 3);
    CHECK(w.first_visit(0) == 0);
    CHECK(w.last_visit(0) == 2);
    CHECK(w.first_visit(-1) == -1);
}

TEST_CASE("n-dimensional encoding round-trips") {
    auto full = std::make_shared<const StepSet>(StepSet::full(2));
    WalkND w = parse_walk_nd("-+.+0", full);
    REQUIRE(w.size() == 2);
    CHECK(w.steps()[0] == StepND{-1, +1});
    CHECK(w.steps()[1] == StepND{+1, 0});
    CHECK(format_walk_nd(w) == "-+.+0");

    CHECK(parse_walk_nd("", full).empty());
    CHECK(format_walk_nd(WalkND(full)) == "");
}

TEST_CASE("n-dimensional parsing rejects bad steps") {
    auto diag = std::make_shared<const StepSet>(
        StepSet::parse("++\n+-\n-+\n--\n00\n"));
    CHECK(diag->size() == 5);
    CHECK_THROWS_AS(parse_walk_nd("+0", diag), parse_error);  // not a member
    CHECK_THROWS_AS(parse_walk_nd("+", diag), parse_error);   // wrong dimension
    CHECK_THROWS_AS(parse_walk_nd("+x", diag), parse_error);  // bad character
}

TEST_CASE("step sets must be closed under single-coordinate negation") {
    CHECK_THROWS_AS(StepSet::from_members(2, {{+1, +1}, {-1, -1}}), parse_error);
    CHECK_NOTHROW(StepSet::from_members(2, {{+1, +1}, {-1, -1}, {+1, -1}, {-1, +1}}));
    CHECK_THROWS_AS(StepSet::parse("# only a comment\n\n"), parse_error);
}

TEST_CASE("step-set files allow comments and blank lines") {
    StepSet s = StepSet::parse("# the diagonal set\n++\n+-\n-+\n--\n\n00\n");
    CHECK(s.size() == 5);
    CHECK(s.contains(StepND{0, 0}));
    CHECK_FALSE(s.contains(StepND{1, 0}));
}

TEST_CASE("heights cache matches step deltas") {
    Walk1D w = parse_walk("UNDDU", Alphabet{1});
    const auto& h = w.heights();
    for (std::size_t i = 0; i < w.size(); ++i)
        REQUIRE(h[i + 1] - h[i] == w.step(i).delta);
    CHECK(w.neutral_count() == 1);
}
