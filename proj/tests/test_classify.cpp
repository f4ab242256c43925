#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffdyn/classify.hpp"
#include "ffdyn/errors.hpp"
#include "generators.hpp"

using namespace ffdyn;
using ffdyn::testing::fpq;
using ffdyn::testing::kq;

namespace {

ConstField Q = ConstField::rationals();

PolyMap mq(const std::string& s) { return parse_map(s, Q); }

ProjPoint pt(const std::string& s) { return parse_point(s, Q); }

std::set<ProjPoint> points_of(std::initializer_list<const char*> names) {
    std::set<ProjPoint> out;
    for (const char* n : names) out.insert(pt(n));
    return out;
}

} // namespace

TEST_CASE("isotriviality trichotomy: worked examples") {
    PlaceContext ctx(Q);

    SUBCASE("z^2 is constant as written") {
        IsoVerdict v = is_isotrivial(ctx, mq("z^2"));
        REQUIRE(v.kind == IsoVerdict::Kind::IsotrivialOverK);
        CHECK(v.gamma->is_identity());
        CHECK(*v.constant_map == mq("z^2"));
    }
    SUBCASE("T z^3 needs a square root of T") {
        IsoVerdict v = is_isotrivial(ctx, mq("T*z^3"));
        CHECK(v.kind == IsoVerdict::Kind::IsotrivialOverExtension);
    }
    SUBCASE("z^2 + T is not isotrivial, witnessed by the constant-term invariant") {
        IsoVerdict v = is_isotrivial(ctx, mq("z^2 + T"));
        REQUIRE(v.kind == IsoVerdict::Kind::NotIsotrivial);
        CHECK(*v.witness == 0);
        // the witness invariant has nonempty support
        IsoInvariants inv = iso_invariants(mq("z^2 + T"));
        CHECK_FALSE(ctx.support(inv.values[static_cast<std::size_t>(*v.witness)]).empty());
    }
    SUBCASE("T z^2 rescales into z^2 over K") {
        IsoVerdict v = is_isotrivial(ctx, mq("T*z^2"));
        REQUIRE(v.kind == IsoVerdict::Kind::IsotrivialOverK);
        CHECK(*v.constant_map == mq("z^2"));
        // the emitted data is self-verifying
        PolyMap redo = conjugate(mq("T*z^2"), *v.gamma);
        CHECK(redo == *v.constant_map);
        for (int i = 0; i <= redo.degree(); ++i) CHECK(redo.coeff(i).is_constant());
    }
    SUBCASE("conjugates of constant maps are recognized over K") {
        PolyMap hidden = conjugate(mq("z^2"), AffineMap(kq("T"), kq("T^2 - 1")));
        IsoVerdict v = is_isotrivial(ctx, hidden);
        REQUIRE(v.kind == IsoVerdict::Kind::IsotrivialOverK);
        PolyMap redo = conjugate(hidden, *v.gamma);
        for (int i = 0; i <= redo.degree(); ++i) CHECK(redo.coeff(i).is_constant());
    }
    SUBCASE("char dividing degree is rejected") {
        ConstField F2 = ConstField::prime_field(2);
        PlaceContext ctx2(F2);
        CHECK_THROWS_AS(is_isotrivial(ctx2, parse_map("z^2 + T", F2)), DomainError);
    }
}

TEST_CASE("two-point conjugation: worked examples") {
    SUBCASE("unit interval already in place") {
        TwoPointConjugation r = two_point_conjugation(mq("z^2"), kq("0"), kq("1"));
        CHECK(r.gamma.is_identity());
        CHECK(r.psi == mq("z^2"));
        CHECK(r.is_constant);
    }
    SUBCASE("translated squaring map is pulled back to z^2") {
        PolyMap phi = mq("z^2 + 2*T*z + T^2 - T"); // the z+T conjugate of z^2
        TwoPointConjugation r = two_point_conjugation(phi, kq("-T"), kq("1 - T"));
        CHECK(r.gamma.a() == kq("1"));
        CHECK(r.gamma.b() == kq("-T"));
        CHECK(r.psi == mq("z^2"));
        CHECK(r.is_constant);
    }
    SUBCASE("non height-zero inputs simply report a nonconstant conjugate") {
        TwoPointConjugation r = two_point_conjugation(mq("z^2 + T"), kq("0"), kq("1"));
        CHECK(r.psi == mq("z^2 + T"));
        CHECK_FALSE(r.is_constant);
    }
    CHECK_THROWS_AS(two_point_conjugation(mq("z^2"), kq("T"), kq("T")), DomainError);
}

TEST_CASE("preperiodic cap: worked examples and formulas") {
    PlaceContext ctx(Q);
    SUBCASE("z^2 + T has one bad place, cap 5") {
        BoundReport b = preperiodic_cap(ctx, mq("z^2 + T"));
        CHECK(b.s == 1);
        CHECK(b.cap == 5);
        REQUIRE(b.refined.has_value());
        CHECK(*b.refined == doctest::Approx(7.0));
    }
    SUBCASE("T z^3 is potentially good everywhere, cap 2") {
        BoundReport b = preperiodic_cap(ctx, mq("T*z^3"));
        CHECK(b.s == 0);
        CHECK(b.cap == 2);
        CHECK_FALSE(b.refined.has_value());
    }
    SUBCASE("constant-conjugate maps are refused") {
        CHECK_THROWS_AS(preperiodic_cap(ctx, mq("z^2")), DomainError);
        try {
            preperiodic_cap(ctx, mq("z^2"));
        } catch (const DomainError& e) {
            CHECK(e.code() == ErrorCode::IsotrivialOverK);
        }
    }
    SUBCASE("formula helpers against independent evaluation") {
        CHECK(cap_formula(2, 0) == 2);
        CHECK(cap_formula(2, 1) == 5);
        CHECK(cap_formula(3, 2) == 82);
        CHECK(cap_formula(4, 5) == 1048577);
        CHECK(refined_formula(2, 1) == doctest::Approx(7.0));
        // d=2, s=2 uses the second expression: 1 + 2*(2*1 + 2*0 + 6)
        CHECK(refined_formula(2, 2) == doctest::Approx(17.0));
    }
}

TEST_CASE("preperiodicity decision: worked examples") {
    PlaceContext ctx(Q);
    SUBCASE("infinity is always preperiodic") {
        auto [ans, cert] = is_preperiodic(ctx, mq("z^2 + T"), pt("inf"));
        CHECK(ans);
        CHECK(cert.kind == PreperiodicCertificate::Kind::Cycle);
        CHECK(cert.m == 0);
        CHECK(cert.n == 1);
    }
    SUBCASE("0 is fixed under T z^3") {
        auto [ans, cert] = is_preperiodic(ctx, mq("T*z^3"), pt("0"));
        CHECK(ans);
        CHECK(cert.kind == PreperiodicCertificate::Kind::Cycle);
        CHECK(cert.m == 0);
        CHECK(cert.n == 1);
    }
    SUBCASE("0 is not preperiodic under z^2 + T, with a six-point certificate") {
        auto [ans, cert] = is_preperiodic(ctx, mq("z^2 + T"), pt("0"));
        CHECK_FALSE(ans);
        REQUIRE(cert.kind == PreperiodicCertificate::Kind::ExceedsCap);
        CHECK(cert.cap == 5);
        REQUIRE(cert.distinct.size() == 6);
        CHECK(cert.distinct[0] == pt("0"));
        CHECK(cert.distinct[1] == pt("T"));
        CHECK(cert.distinct[2] == pt("T^2 + T"));
        // certificate soundness: pairwise distinct, consecutive under the map
        PolyMap phi = mq("z^2 + T");
        for (std::size_t i = 0; i < cert.distinct.size(); ++i) {
            if (i + 1 < cert.distinct.size())
                CHECK(phi.apply(cert.distinct[i]) == cert.distinct[i + 1]);
            for (std::size_t j = i + 1; j < cert.distinct.size(); ++j)
                CHECK(cert.distinct[i] != cert.distinct[j]);
        }
        // cross-check: positive canonical height
        CHECK(canonical_height(ctx, phi, pt("0")) == HeightValue::exact(make_rat(1, 2)));
    }
    SUBCASE("two-cycle certificate verifies by recomputation") {
        // -T maps to T which is fixed under z^2 - T^2 + T
        auto [ans, cert] = is_preperiodic(ctx, mq("z^2 - T^2 + T"), pt("-T"));
        CHECK(ans);
        REQUIRE(cert.kind == PreperiodicCertificate::Kind::Cycle);
        PolyMap phi = mq("z^2 - T^2 + T");
        CHECK(phi.iterate(pt("-T"), cert.m) == phi.iterate(pt("-T"), cert.n));
        CHECK(cert.m < cert.n);
    }
    SUBCASE("opt-in escape certificates") {
        auto [ans, cert] = is_preperiodic(ctx, mq("z^2 + T"), pt("T^3"), true);
        CHECK_FALSE(ans);
        REQUIRE(cert.kind == PreperiodicCertificate::Kind::Escape);
        REQUIRE(cert.escape_place.has_value());
        CHECK(cert.escape_place->is_infinity());
        // the escape really does witness a positive local height
        LocalHeightResult r = local_canonical_height(ctx, mq("z^2 + T"), *cert.escape_place,
                                                     pt("T^3").value());
        CHECK(r.value.is_exact());
        CHECK(r.value.exact_value() > 0);
    }
}

TEST_CASE("rational roots: worked examples") {
    SUBCASE("z^2 - T^2 factors explicitly") {
        auto roots = rational_roots(mq("z^2 - T^2").poly(), 1);
        CHECK(roots == std::set<KElem>{kq("T"), kq("-T")});
    }
    SUBCASE("z^2 + T has no roots in K") {
        CHECK(rational_roots(mq("z^2 + T").poly(), 2).empty());
    }
    SUBCASE("quadratic with polynomial discriminant") {
        auto roots = rational_roots(mq("z^2 - z - T^2 + T").poly(), 1);
        CHECK(roots == std::set<KElem>{kq("T"), kq("1 - T")});
    }
    SUBCASE("roots with denominators are found") {
        // (z T - 1)(z - T) = T z^2 - (T^2+1) z + T
        ZPoly P(Q, {kq("T"), kq("-(T^2 + 1)"), kq("T")});
        auto roots = rational_roots(P, 1);
        CHECK(roots == std::set<KElem>{kq("T"), kq("1/T")});
    }
    SUBCASE("zero roots and zero polynomial") {
        auto roots = rational_roots(mq("z^3 - T*z^2").poly(), 1);
        CHECK(roots == std::set<KElem>{kq("0"), kq("T")});
        CHECK_THROWS_AS(rational_roots(ZPoly(Q), 1), DomainError);
    }
    SUBCASE("constants specialize over F_p with enough points") {
        ConstField F7 = ConstField::prime_field(7);
        PolyMap phi = parse_map("z^2 - T^2", F7);
        auto roots = rational_roots(phi.poly(), 1);
        CHECK(roots.size() == 2);
        CHECK(roots.count(parse_kelem("T", F7)) == 1);
        // F_3 has too few admissible points for the same bound
        ConstField F3 = ConstField::prime_field(3);
        CHECK_THROWS_AS(rational_roots(parse_map("z^2 - T^2", F3).poly(), 1), DomainError);
    }
    SUBCASE("large prime fields use the modular linear-factor split") {
        ConstField Fp = ConstField::prime_field(10007);
        PolyMap phi = parse_map("z^2 - T^2", Fp);
        auto roots = rational_roots(phi.poly(), 1);
        CHECK(roots.size() == 2);
        CHECK(roots.count(parse_kelem("T", Fp)) == 1);
        CHECK(roots.count(parse_kelem("-T", Fp)) == 1);
    }
}

TEST_CASE("enumeration of all K-rational preperiodic points: worked examples") {
    PlaceContext ctx(Q);
    SUBCASE("T z^3 keeps only 0 and infinity") {
        auto [points, bounds] = enumerate_preperiodic(ctx, mq("T*z^3"));
        CHECK(points == points_of({"0", "inf"}));
        CHECK(bounds.cap == 2);
    }
    SUBCASE("z^2 + T keeps only infinity") {
        auto [points, bounds] = enumerate_preperiodic(ctx, mq("z^2 + T"));
        CHECK(points == points_of({"inf"}));
        CHECK(bounds.cap == 5);
    }
    SUBCASE("z^2 - T^2 + T carries a five-point preperiodic set") {
        auto [points, bounds] = enumerate_preperiodic(ctx, mq("z^2 - T^2 + T"));
        CHECK(points == points_of({"inf", "T", "-T", "1 - T", "T - 1"}));
        CHECK(static_cast<long long>(points.size()) <= bounds.cap);
        REQUIRE(bounds.refined.has_value());
        CHECK(static_cast<double>(points.size()) <= *bounds.refined);
        // every member has exactly zero canonical height
        for (const ProjPoint& x : points)
            CHECK(canonical_height(ctx, mq("z^2 - T^2 + T"), x) == HeightValue::exact(Rat(0)));
    }
    SUBCASE("refusals") {
        CHECK_THROWS_AS(enumerate_preperiodic(ctx, mq("z^2")), DomainError);
        // degree limit: cap 5 needs iterates of degree 32
        CHECK_THROWS_AS(enumerate_preperiodic(ctx, mq("z^2 + T"), 16), DomainError);
    }
}

TEST_CASE("non-enumerated points of small height have positive canonical height") {
    PlaceContext ctx(Q);
    PolyMap phi = mq("z^2 - T^2 + T");
    auto [points, bounds] = enumerate_preperiodic(ctx, phi);
    HeightEvaluator eval(ctx, phi);
    std::mt19937_64 rng(401);
    int checked = 0;
    while (checked < 50) {
        ProjPoint x = ProjPoint::finite(testing::random_kelem(Q, 1, rng));
        if (points.count(x)) continue;
        HeightValue hv = eval.canonical(x);
        if (hv.is_exact())
            CHECK(hv.exact_value() > 0);
        else
            CHECK(hv.lo() > 0);
        ++checked;
    }
}

TEST_CASE("finite-field oracle: worked examples") {
    ConstField F3 = ConstField::prime_field(3);
    PlaceContext ctx(F3);
    PolyMap phi = parse_map("z^2 + T", F3);

    CHECK(oracle_preperiodic(ctx, phi, ProjPoint::infinity(F3)));
    CHECK_FALSE(oracle_preperiodic(ctx, phi, ProjPoint::finite(KElem(F3))));

    // oracle must match the cap-based decision wherever the latter applies
    std::mt19937_64 rng(419);
    MapProfile profile = analyze_map(ctx, phi);
    Rat gap = height_gap_constant(ctx, phi).total;
    for (int i = 0; i < 60; ++i) {
        ProjPoint x = ProjPoint::finite(testing::random_kelem(F3, 1, rng));
        CHECK(oracle_preperiodic(phi, x, gap) == is_preperiodic(ctx, phi, profile, x).first);
    }

    // a cubic over F_3 cannot be depressed, but the oracle still decides
    PolyMap cubic = parse_map("z^3 + T*z + 1", F3);
    CHECK_THROWS_AS(is_preperiodic(ctx, cubic, ProjPoint::finite(KElem(F3))), DomainError);
    CHECK_FALSE(oracle_preperiodic(ctx, cubic, ProjPoint::finite(KElem(F3))));
    CHECK(oracle_preperiodic(ctx, cubic, ProjPoint::infinity(F3)));

    // oracle needs a finite constant field
    PlaceContext ctxq(Q);
    CHECK_THROWS_AS(oracle_preperiodic(ctxq, mq("z^2 + T"), pt("0")), DomainError);
}

TEST_CASE("constant-conjugate verdicts pull preperiodic points back to height zero") {
    PlaceContext ctx(Q);
    // gamma turns T z^2 into z^2; preperiodic points of z^2 in K pull back
    // through gamma to height-zero points of T z^2
    PolyMap phi = mq("T*z^2");
    IsoVerdict v = is_isotrivial(ctx, phi);
    REQUIRE(v.kind == IsoVerdict::Kind::IsotrivialOverK);
    for (const char* name : {"0", "1", "-1"}) {
        KElem fixed_pt = kq(name);
        KElem pulled = v.gamma->apply(fixed_pt);
        CHECK(canonical_height(ctx, phi, ProjPoint::finite(pulled)) ==
              HeightValue::exact(Rat(0)));
    }
    // with three height-zero points on hand, two-point conjugation over the
    // finite ones lands on constant coefficients
    TwoPointConjugation r =
        two_point_conjugation(phi, v.gamma->apply(kq("0")), v.gamma->apply(kq("1")));
    CHECK(r.is_constant);
}

TEST_CASE("profile reuse matches one-shot queries") {
    PlaceContext ctx(Q);
    PolyMap phi = mq("z^2 - T^2 + T");
    MapProfile profile = analyze_map(ctx, phi);
    std::mt19937_64 rng(431);
    for (int i = 0; i < 20; ++i) {
        ProjPoint x = ProjPoint::finite(testing::random_kelem(Q, 1, rng));
        CHECK(is_preperiodic(ctx, phi, profile, x).first == is_preperiodic(ctx, phi, x).first);
    }
}
