#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffdyn/errors.hpp"
#include "ffdyn/heights.hpp"
#include "generators.hpp"

using namespace ffdyn;
using ffdyn::testing::fpq;
using ffdyn::testing::kq;

namespace {

ConstField Q = ConstField::rationals();

PolyMap mq(const std::string& s) { return parse_map(s, Q); }

ProjPoint pt(const std::string& s) { return parse_point(s, Q); }

Place pT() { return Place::finite(fpq("T")); }

std::vector<PolyMap> sample_maps() {
    return {mq("z^2 + T"), mq("T*z^3"), mq("z^2 - T^2 + T"), mq("z^2")};
}

} // namespace

TEST_CASE("height values: construction and arithmetic") {
    HeightValue e = HeightValue::exact(make_rat(1, 2));
    CHECK(e.is_exact());
    CHECK(e.lo() == e.hi());
    HeightValue i = HeightValue::interval(Rat(0), make_rat(1, 4));
    CHECK_FALSE(i.is_exact());
    HeightValue sum = e + i;
    CHECK_FALSE(sum.is_exact());
    CHECK(sum.lo() == make_rat(1, 2));
    CHECK(sum.hi() == make_rat(3, 4));
    CHECK_THROWS_AS(HeightValue::exact(Rat(-1)), DomainError);
    CHECK_THROWS_AS(HeightValue::interval(make_rat(1, 2), Rat(0)), DomainError);
    CHECK_THROWS_AS(i.exact_value(), DomainError);
}

TEST_CASE("standard height: worked examples") {
    PlaceContext ctx(Q);
    CHECK(standard_height(pt("T^2/(T + 1)")) == 2);
    CHECK(standard_height(pt("7")) == 0);
    CHECK(standard_height(pt("inf")) == 0);
    CHECK(standard_height(pt("0")) == 0);

    // max of degrees, cross-checked against the positive log-size sum
    ProjPoint x = pt("(T^3 - 1)/(T^5 + T)");
    CHECK(standard_height(x) == 5);
    Rat positive(0);
    for (const auto& [v, ls] : ctx.support(x.value()))
        if (ls.value() > 0) positive += ls.value();
    CHECK(positive == 5);
}

TEST_CASE("standard height equals the positive log-size sum (random)") {
    PlaceContext ctx(Q);
    std::mt19937_64 rng(311);
    for (int i = 0; i < 200; ++i) {
        KElem x = testing::random_kelem(Q, 4, rng, true);
        Rat positive(0);
        for (const auto& [v, ls] : ctx.support(x))
            if (ls.value() > 0) positive += ls.value();
        CHECK(Rat(standard_height(ProjPoint::finite(x))) == positive);
    }
}

TEST_CASE("local canonical height: worked examples") {
    PlaceContext ctx(Q);
    PolyMap phi = mq("z^2 + T");

    SUBCASE("immediate escape at infinity") {
        LocalHeightResult r = local_canonical_height(ctx, phi, ctx.infinite_place(), kq("T"));
        CHECK(r.value == HeightValue::exact(Rat(1)));
        REQUIRE(r.escape_step.has_value());
        CHECK(*r.escape_step == 0);
        CHECK_FALSE(r.certified_zero);
    }
    SUBCASE("escape after one step at infinity") {
        LocalHeightResult r = local_canonical_height(ctx, phi, ctx.infinite_place(), KElem(Q));
        CHECK(r.value == HeightValue::exact(make_rat(1, 2)));
        REQUIRE(r.escape_step.has_value());
        CHECK(*r.escape_step == 1);
    }
    SUBCASE("good places use the closed form without iteration") {
        LocalHeightResult r = local_canonical_height(ctx, phi, pT(), kq("1/T"));
        CHECK(r.value == HeightValue::exact(Rat(1)));
        CHECK_FALSE(r.escape_step.has_value());
    }
    SUBCASE("membership certificate at a potentially good place") {
        PolyMap psi = mq("T*z^3");
        LocalHeightResult r = local_canonical_height(ctx, psi, pT(), kq("1"));
        CHECK(r.certified_zero);
        CHECK(r.value == HeightValue::exact(Rat(0)));
        // orbit stays below the escape radius for ten further steps
        Rat esc = escape_radius_log(ctx, psi, pT());
        KElem y = kq("1");
        for (int k = 0; k < 10; ++k) {
            y = psi.apply(y);
            CHECK(ctx.local_logsize(y, pT()) <= LogSize::of(esc));
        }
    }
}

TEST_CASE("escape closed form has denominator dividing d^N (d-1)") {
    PlaceContext ctx(Q);
    std::mt19937_64 rng(313);
    for (const PolyMap& phi : sample_maps()) {
        Int d(phi.degree());
        for (int i = 0; i < 30; ++i) {
            KElem x = testing::random_kelem(Q, 1, rng);
            for (const Place& v : coefficient_support(ctx, phi)) {
                LocalHeightResult r = local_canonical_height(ctx, phi, v, x, 16);
                if (!r.escape_step) continue;
                Int allowed(phi.degree() - 1);
                for (int k = 0; k < *r.escape_step; ++k) allowed *= d;
                Int rem;
                mpz_fdiv_r(rem.get_mpz_t(), allowed.get_mpz_t(),
                           Rat(r.value.exact_value()).get_den_mpz_t());
                CHECK(rem == 0);
            }
        }
    }
}

TEST_CASE("canonical height: worked examples") {
    PlaceContext ctx(Q);
    SUBCASE("z^2 + T at 0 and the functional equation step") {
        CHECK(canonical_height(ctx, mq("z^2 + T"), pt("0")) == HeightValue::exact(make_rat(1, 2)));
        CHECK(canonical_height(ctx, mq("z^2 + T"), pt("T")) == HeightValue::exact(Rat(1)));
    }
    SUBCASE("good reduction everywhere: canonical equals standard") {
        CHECK(canonical_height(ctx, mq("z^2"), pt("T")) == HeightValue::exact(Rat(1)));
        std::mt19937_64 rng(317);
        for (int i = 0; i < 25; ++i) {
            ProjPoint x = ProjPoint::finite(testing::random_kelem(Q, 3, rng));
            CHECK(canonical_height(ctx, mq("z^2"), x) ==
                  HeightValue::exact(Rat(standard_height(x))));
        }
    }
    SUBCASE("infinity is a fixed point of height zero") {
        for (const PolyMap& phi : sample_maps())
            CHECK(canonical_height(ctx, phi, pt("inf")) == HeightValue::exact(Rat(0)));
    }
    SUBCASE("T z^3 sample value") {
        // lambda_inf(T) = 1 + 1/2, lambda_(T)(T) = 0 by membership
        CHECK(canonical_height(ctx, mq("T*z^3"), pt("T")) == HeightValue::exact(make_rat(3, 2)));
    }
}

TEST_CASE("interval semantics: budget exhaustion is sound and shrinks") {
    PlaceContext ctx(Q);
    PolyMap phi = mq("z^2 - T^2 + T");
    // T + 1 needs two steps to escape at infinity
    LocalHeightResult tight = local_canonical_height(ctx, phi, ctx.infinite_place(), kq("T + 1"), 1);
    CHECK_FALSE(tight.value.is_exact());
    CHECK(tight.value.lo() == 0);
    // upper end is exactly C_v * d^-n, so wider budgets shrink it
    GapConstant gap = height_gap_constant(ctx, phi);
    REQUIRE(gap.per_place.back().first.is_infinity());
    CHECK(tight.value.hi() == gap.per_place.back().second / Rat(2));

    LocalHeightResult exact = local_canonical_height(ctx, phi, ctx.infinite_place(), kq("T + 1"), 8);
    CHECK(exact.value.is_exact());
    REQUIRE(exact.escape_step.has_value());
    CHECK(*exact.escape_step == 2);
    // the interval really contained the value
    CHECK(exact.value.exact_value() <= tight.value.hi());
    CHECK(exact.value.exact_value() >= tight.value.lo());
}

TEST_CASE("gap constant: worked examples") {
    PlaceContext ctx(Q);
    CHECK(height_gap_constant(ctx, mq("z^2")).total == 0);
    CHECK(height_gap_constant(ctx, mq("z^2 + T")).total == make_rat(1, 2));
    // per-place: 1 at (T) (escape 1/2 plus rho 1/2), 1/2 at infinity
    GapConstant g = height_gap_constant(ctx, mq("T*z^3"));
    CHECK(g.total == make_rat(3, 2));
    REQUIRE(g.per_place.size() == 2);
    CHECK(g.per_place[0].first == pT());
    CHECK(g.per_place[0].second == Rat(1));
    CHECK(g.per_place[1].first.is_infinity());
    CHECK(g.per_place[1].second == make_rat(1, 2));
    CHECK(height_gap_constant(ctx, mq("z^2 - T^2 + T")).total == Rat(1));
}

TEST_CASE("gap property: |canonical - standard| <= C' on 500 random points per map") {
    PlaceContext ctx(Q);
    std::mt19937_64 rng(331);
    for (const PolyMap& phi : sample_maps()) {
        HeightEvaluator eval(ctx, phi);
        Rat gap = eval.gap().total;
        for (int i = 0; i < 500; ++i) {
            ProjPoint x = ProjPoint::finite(testing::random_kelem(Q, 2, rng));
            Rat h(standard_height(x));
            HeightValue hv = eval.canonical(x, 24);
            // exact: |hv - h| <= gap; interval: it must meet [h-gap, h+gap]
            CHECK(hv.lo() <= h + gap);
            CHECK(hv.hi() >= h - gap);
        }
    }
}

TEST_CASE("functional equation holds exactly (200 random pairs)") {
    PlaceContext ctx(Q);
    std::mt19937_64 rng(337);
    std::vector<PolyMap> maps = sample_maps();
    std::vector<HeightEvaluator> evals;
    for (const PolyMap& phi : maps) evals.emplace_back(ctx, phi);
    int checked = 0;
    for (int i = 0; checked < 200 && i < 600; ++i) {
        std::size_t pick = rng() % maps.size();
        HeightEvaluator& eval = evals[pick];
        KElem x = testing::random_kelem(Q, 1, rng);
        HeightValue hx = eval.canonical(ProjPoint::finite(x));
        HeightValue hfx = eval.canonical(ProjPoint::finite(eval.map().apply(x)));
        if (!hx.is_exact() || !hfx.is_exact()) continue;
        CHECK(hfx.exact_value() == Rat(eval.map().degree()) * hx.exact_value());
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("nonnegativity of every height value") {
    PlaceContext ctx(Q);
    std::mt19937_64 rng(347);
    for (int i = 0; i < 80; ++i) {
        PolyMap phi = testing::random_polymap(Q, rng);
        ProjPoint x = ProjPoint::finite(testing::random_kelem(Q, 1, rng));
        HeightEvaluator eval(ctx, phi);
        HeightValue hv = eval.canonical(x, 10);
        CHECK(hv.lo() >= 0);
        for (const LocalHeightResult& r : eval.locals(x.value(), 10)) {
            CHECK(r.value.lo() >= 0);
            if (r.certified_zero) CHECK(r.value == HeightValue::exact(Rat(0)));
        }
    }
}

TEST_CASE("conjugation invariance of exact canonical heights (100 random)") {
    PlaceContext ctx(Q);
    std::mt19937_64 rng(349);
    std::vector<PolyMap> maps = sample_maps();
    std::vector<HeightEvaluator> evals;
    for (const PolyMap& phi : maps) evals.emplace_back(ctx, phi);
    int checked = 0;
    for (int i = 0; checked < 100 && i < 400; ++i) {
        std::size_t pick = rng() % maps.size();
        HeightEvaluator& eval = evals[pick];
        AffineMap gamma = testing::random_affine(Q, rng);
        KElem x = testing::random_kelem(Q, 1, rng);
        HeightValue direct = eval.canonical(ProjPoint::finite(x), 24);
        PolyMap conj = conjugate(eval.map(), gamma);
        HeightValue moved =
            canonical_height(ctx, conj, ProjPoint::finite(gamma.apply_inverse(x)), 24);
        if (!direct.is_exact() || !moved.is_exact()) continue;
        CHECK(direct.exact_value() == moved.exact_value());
        ++checked;
    }
    CHECK(checked >= 90); // a few interval cases may be skipped
}

TEST_CASE("preperiodic points have bounded orbits and exactly zero height") {
    PlaceContext ctx(Q);
    struct Case {
        std::string map;
        std::string point;
    };
    std::vector<Case> cases{
        {"z^2 - T^2 + T", "T"},     {"z^2 - T^2 + T", "-T"}, {"z^2 - T^2 + T", "1 - T"},
        {"z^2 - T^2 + T", "T - 1"}, {"T*z^3", "0"},          {"z^2", "1"},
        {"z^2", "-1"},              {"z^2", "0"},
    };
    for (const Case& c : cases) {
        PolyMap phi = mq(c.map);
        ProjPoint x = pt(c.point);
        CHECK(canonical_height(ctx, phi, x) == HeightValue::exact(Rat(0)));
        // the finite orbit attains its height maximum
        long max_h = 0;
        ProjPoint y = x;
        for (int k = 0; k < 12; ++k) {
            max_h = std::max(max_h, standard_height(y));
            y = phi.apply(y);
        }
        CHECK(standard_height(phi.iterate(x, 13)) <= max_h);
    }
}
