#include <doctest.h>

#include <wallcross/chambers.hpp>
#include <wallcross/formulas.hpp>

#include "support.hpp"

using namespace wallcross;

namespace
{

Classification at(const char *z0, const char *z1)
{
    return classify(StabilityParam(parse_rational(z0), parse_rational(z1)));
}

BiSeries poly(TruncationBox box, std::initializer_list<Term> terms)
{
    return BiSeries::make(box, terms);
}

Rational random_rational(std::int64_t range)
{
    Rational r(testsupport::uniform(-range, range), testsupport::uniform(1, range));
    r.canonicalize();
    return r;
}

std::vector<Wall> walls_up_to(std::int64_t bound)
{
    std::vector<Wall> out{{WallFamily::minus_inf}, {WallFamily::plus_inf}};
    for (std::int64_t m = 0; m <= bound; ++m) {
        out.push_back({WallFamily::minus_minus, m});
        out.push_back({WallFamily::plus_minus, m});
        if (m >= 1) {
            out.push_back({WallFamily::minus_plus, m});
            out.push_back({WallFamily::plus_plus, m});
        }
    }
    return out;
}

} // namespace

TEST_CASE("parse_rational")
{
    CHECK(parse_rational("-2/3") == Rational(-2, 3));
    CHECK(parse_rational("+3") == 3);
    CHECK(parse_rational("4/6") == Rational(2, 3));
    for (const char *bad : {"", "1/0", "x", "1.5", "1/-2", "--1", "2/"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
    }
}

TEST_CASE("classify examples")
{
    CHECK(at("1", "1") == Classification{Chamber{ChamberKind::trivial}});
    CHECK(at("-1", "3") == Classification{Chamber{ChamberKind::minus_plus, 1}});
    CHECK(at("-2", "1") == Classification{OnWall{{WallFamily::minus_minus, 1}}});
    CHECK(at("0", "1") == Classification{OnWall{{WallFamily::minus_plus, 1}}});
    CHECK(at("-3", "-1") == Classification{Chamber{ChamberKind::ncdt}});
    CHECK(at("0", "0") == Classification{Degenerate{}});
    CHECK(at("-1", "1") == Classification{OnWall{{WallFamily::minus_inf}}});
    CHECK(at("1", "-1") == Classification{OnWall{{WallFamily::plus_inf}}});
    CHECK(at("1", "0") == Classification{OnWall{{WallFamily::plus_minus, 0}}});
    CHECK(at("0", "-1") == Classification{OnWall{{WallFamily::plus_plus, 1}}});
    CHECK(at("-1", "0") == Classification{OnWall{{WallFamily::minus_minus, 0}}});
    CHECK(at("2", "2") == Classification{Chamber{ChamberKind::trivial}});
    CHECK(at("-2", "-2") == Classification{Chamber{ChamberKind::ncdt}});
    // Between minus_minus(2) at zeta = (-3, 2) and minus_minus(1) at (-2, 1).
    CHECK(at("-5", "3") == Classification{Chamber{ChamberKind::minus_minus, 2}});
    // Between plus_minus(0) and plus_minus(1) at (2, -1).
    CHECK(at("3", "-1") == Classification{Chamber{ChamberKind::plus_minus, 1}});
    // Between plus_plus(2) at (1, -2) and plus_plus(1) at (0, -1).
    CHECK(at("1", "-3") == Classification{Chamber{ChamberKind::plus_plus, 1}});
    CHECK(at("-1/2", "-3") == Classification{Chamber{ChamberKind::ncdt}});
}

TEST_CASE("framing_weight")
{
    CHECK(framing_weight(StabilityParam(-1, 1), {2, 1}) == 1);
    CHECK(framing_weight(StabilityParam(0, 0), {5, 7}) == 0);
    CHECK(framing_weight(StabilityParam(-2, 1), {1, 2}) == 0);
}

TEST_CASE("classification is scale invariant")
{
    for (int trial = 0; trial < 2000; ++trial) {
        const StabilityParam zeta(random_rational(12), random_rational(12));
        Rational lambda(testsupport::uniform(1, 30), testsupport::uniform(1, 30));
        lambda.canonicalize();
        CHECK(classify(StabilityParam(zeta.zeta0 * lambda, zeta.zeta1 * lambda)) == classify(zeta));
    }
}

TEST_CASE("on-wall exactly when a wall's form vanishes in its sector")
{
    const auto walls = walls_up_to(40);
    for (int trial = 0; trial < 2000; ++trial) {
        const StabilityParam zeta(random_rational(6), random_rational(6));
        std::optional<Wall> hit;
        for (const auto &w : walls) {
            if (w.contains(zeta)) {
                REQUIRE_FALSE(hit.has_value());
                hit = w;
            }
        }
        const Classification c = classify(zeta);
        if (hit) {
            CHECK(c == Classification{OnWall{*hit}});
            const auto [a, b] = hit->linear_form();
            CHECK(a * zeta.zeta0 + b * zeta.zeta1 == 0);
        } else {
            CHECK_FALSE(std::holds_alternative<OnWall>(c));
        }
    }
    // Points built on each wall classify onto it.
    for (const auto &w : walls) {
        const auto [a, b] = w.linear_form();
        const bool minus = w.family == WallFamily::minus_plus || w.family == WallFamily::minus_inf ||
                           w.family == WallFamily::minus_minus;
        // (b, -a) spans the kernel; pick the sign putting it in the right sector.
        Rational z0 = b;
        Rational z1 = -a;
        if ((z0 < z1) != minus) {
            z0 = -z0;
            z1 = -z1;
        }
        CAPTURE(to_label(w));
        CHECK(classify(StabilityParam(z0, z1)) == Classification{OnWall{w}});
    }
}

TEST_CASE("labels round trip")
{
    for (const auto &c : {Chamber{ChamberKind::trivial}, Chamber{ChamberKind::minus_plus, 2}, Chamber{ChamberKind::pty},
                          Chamber{ChamberKind::dty}, Chamber{ChamberKind::minus_minus, 3}, Chamber{ChamberKind::ncdt},
                          Chamber{ChamberKind::plus_minus, 1}, Chamber{ChamberKind::pty_plus},
                          Chamber{ChamberKind::dty_plus}, Chamber{ChamberKind::plus_plus, 4}}) {
        CHECK(parse_chamber(to_label(c)) == c);
    }
    for (const auto &w : walls_up_to(3)) {
        CHECK(parse_wall(to_label(w)) == w);
    }
    CHECK(to_label(Chamber{ChamberKind::minus_plus, 2}) == "minus_plus:2");
    CHECK(to_label(Wall{WallFamily::minus_minus, 1}) == "wall:minus_minus:1");
    CHECK_THROWS_AS(parse_chamber("minus_plus:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_chamber("sideways"), std::invalid_argument);
    CHECK_THROWS_AS(parse_wall("wall:minus_plus:0"), std::invalid_argument);
}

TEST_CASE("wall factors")
{
    CHECK(wall_factor({WallFamily::minus_plus, 1}, {3, 3}) == poly({3, 3}, {{{0, 0}, 1}, {{1, 0}, 1}}));
    CHECK(wall_factor({WallFamily::minus_minus, 2}, {4, 6}) ==
          poly({4, 6}, {{{0, 0}, 1}, {{2, 3}, 2}, {{4, 6}, 1}}));
    CHECK(wall_factor({WallFamily::plus_minus, 0}, {5, 5}) == BiSeries::one({5, 5}));
    CHECK_THROWS_AS(wall_factor({WallFamily::minus_inf}, {2, 2}), no_finite_factor);
    CHECK(dtpt_factor({2, 2}) == poly({2, 2}, {{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 7}}));
    CHECK(dtpt_factor({0, 5}) == BiSeries::one({0, 5}));
    CHECK(dtpt_factor({3, 3}).coefficient({3, 3}) == 18);
}

TEST_CASE("crossing paths")
{
    using W = WallFamily;
    const auto walls = [](const std::vector<Crossing> &path) {
        std::vector<Wall> out;
        for (const auto &c : path) {
            out.push_back(c.wall);
        }
        return out;
    };
    CHECK(walls(crossing_path({ChamberKind::minus_plus, 2}, {5, 5})) ==
          std::vector<Wall>{{W::minus_plus, 1}, {W::minus_plus, 2}});
    CHECK(crossing_path({ChamberKind::trivial}, {7, 7}).empty());
    CHECK(walls(crossing_path({ChamberKind::pty}, {3, 3})) ==
          std::vector<Wall>{{W::minus_plus, 1}, {W::minus_plus, 2}, {W::minus_plus, 3}});
    const auto ncdt = crossing_path({ChamberKind::ncdt}, {2, 2});
    CHECK(walls(ncdt) == std::vector<Wall>{{W::minus_plus, 1}, {W::minus_plus, 2}, {W::minus_inf}, {W::minus_minus, 1}});
    CHECK(ncdt[2].kind == FactorKind::external);
    CHECK(walls(crossing_path({ChamberKind::ncdt}, {2, 2}, Route::plus)) ==
          std::vector<Wall>{{W::plus_minus, 1}, {W::plus_inf}, {W::plus_plus, 2}, {W::plus_plus, 1}});
    CHECK(walls(crossing_path({ChamberKind::dty}, {3, 0})) ==
          std::vector<Wall>{{W::minus_plus, 1}});
}

TEST_CASE("z examples")
{
    CHECK(z_unsigned({ChamberKind::trivial}, {5, 5}) == BiSeries::one({5, 5}));
    CHECK(z_unsigned({ChamberKind::minus_plus, 2}, {3, 3}) ==
          poly({3, 3}, {{{0, 0}, 1}, {{1, 0}, 1}, {{2, 1}, 2}, {{3, 1}, 2}}));
    CHECK(z_unsigned({ChamberKind::ncdt}, {2, 2}) ==
          poly({2, 2}, {{{0, 0}, 1}, {{1, 0}, 1}, {{1, 1}, 2}, {{1, 2}, 1}, {{2, 1}, 4}, {{2, 2}, 8}}));
    CHECK(z_signed({ChamberKind::trivial}, {2, 2}) == BiSeries::one({2, 2}));
    CHECK(z_signed({ChamberKind::minus_plus, 2}, {3, 3}) ==
          poly({3, 3}, {{{0, 0}, 1}, {{1, 0}, 1}, {{2, 1}, -2}, {{3, 1}, -2}}));
    CHECK(z_signed({ChamberKind::pty}, {3, 2}) ==
          poly({3, 2}, {{{0, 0}, 1}, {{1, 0}, 1}, {{2, 1}, -2}, {{3, 1}, -2}, {{3, 2}, 3}}));
}

TEST_CASE("adjacent chambers differ by one wall factor")
{
    const TruncationBox box{6, 6};
    const auto z = [&](Chamber c) { return z_unsigned(c, box); };
    const auto wf = [&](WallFamily f, std::int64_t m) { return wall_factor({f, m}, box); };
    CHECK(z({ChamberKind::minus_plus, 1}) == wf(WallFamily::minus_plus, 1) * z({ChamberKind::trivial}));
    CHECK(z({ChamberKind::plus_minus, 1}) == z({ChamberKind::trivial}));
    for (std::int64_t k = 2; k <= 8; ++k) {
        CHECK(z({ChamberKind::minus_plus, k}) == wf(WallFamily::minus_plus, k) * z({ChamberKind::minus_plus, k - 1}));
        CHECK(z({ChamberKind::minus_minus, k - 1}) ==
              wf(WallFamily::minus_minus, k - 1) * z({ChamberKind::minus_minus, k}));
        CHECK(z({ChamberKind::plus_minus, k}) == wf(WallFamily::plus_minus, k - 1) * z({ChamberKind::plus_minus, k - 1}));
        CHECK(z({ChamberKind::plus_plus, k - 1}) == wf(WallFamily::plus_plus, k) * z({ChamberKind::plus_plus, k}));
    }
    CHECK(z({ChamberKind::ncdt}) == wf(WallFamily::minus_minus, 0) * z({ChamberKind::minus_minus, 1}));
    CHECK(z_unsigned({ChamberKind::ncdt}, box, Route::plus) == wf(WallFamily::plus_plus, 1) * z({ChamberKind::plus_plus, 1}));
    CHECK(z({ChamberKind::dty}) == dtpt_factor(box) * z({ChamberKind::pty}));
    CHECK(z({ChamberKind::dty_plus}) == dtpt_factor(box) * z({ChamberKind::pty_plus}));
}

TEST_CASE("deep chambers stabilize")
{
    for (const TruncationBox box : {TruncationBox{3, 5}, TruncationBox{5, 3}, TruncationBox{4, 4}}) {
        for (std::int64_t k = box.n0_max + 1; k <= box.n0_max + 4; ++k) {
            CHECK(z_unsigned({ChamberKind::minus_minus, k}, box) == z_unsigned({ChamberKind::dty}, box));
            CHECK(z_unsigned({ChamberKind::plus_plus, k}, box) == z_unsigned({ChamberKind::dty_plus}, box));
            CHECK(z_unsigned({ChamberKind::minus_plus, k}, box) == z_unsigned({ChamberKind::pty}, box));
            CHECK(z_unsigned({ChamberKind::plus_minus, k + 1}, box) == z_unsigned({ChamberKind::pty_plus}, box));
        }
    }
}

TEST_CASE("both routes to ncdt agree")
{
    for (std::int64_t n0 = 0; n0 <= 7; ++n0) {
        for (std::int64_t n1 = 0; n1 <= 7; ++n1) {
            const TruncationBox box{n0, n1};
            const BiSeries minus = z_unsigned({ChamberKind::ncdt}, box, Route::minus);
            CHECK(minus == z_unsigned({ChamberKind::ncdt}, box, Route::plus));
            CHECK(minus == sign_twist(evaluate({FormulaKind::zncdt}, box)));
        }
    }
}

TEST_CASE("flop exchanges the two pt chambers")
{
    const IntMatrix2 flip{{{1, 0}, {2, -1}}};
    for (const TruncationBox box : {TruncationBox{6, 6}, TruncationBox{4, 9}, TruncationBox{8, 8}}) {
        CHECK(reindex(flip, z_unsigned({ChamberKind::pty}, box), box) == z_unsigned({ChamberKind::pty_plus}, box));
    }
}

TEST_CASE("external factor bookkeeping")
{
    CHECK(uses_external_factor({ChamberKind::ncdt}));
    CHECK(uses_external_factor({ChamberKind::minus_minus, 2}));
    CHECK_FALSE(uses_external_factor({ChamberKind::pty}));
    CHECK_FALSE(uses_external_factor({ChamberKind::minus_plus, 3}));
}
