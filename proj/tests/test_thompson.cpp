// Circle-map group elements: construction, normal form, group laws, and the
// action on tessellations.

#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "infassoc/thompson.hpp"
#include "test_util.hpp"

using namespace infassoc;

namespace {

Dyadic dy(const std::string& s) { return Dyadic::parse(s); }

Arc arc(const std::string& a, const std::string& b) { return Arc(dy(a), dy(b)); }

FTessellation ft(const std::vector<Arc>& removed, const std::vector<Arc>& added) {
    return make_tessellation(std::set<Arc>(removed.begin(), removed.end()),
                             std::set<Arc>(added.begin(), added.end()));
}

// halves [0,1/2], keeps [1/2,3/4], doubles [3/4,1]
ThompsonElement slope_map() {
    return ThompsonElement::from_images({dy("0"), dy("1/2"), dy("3/4")},
                                        {dy("0"), dy("1/4"), dy("1/2")}, 1);
}

IntervalMap piece(const std::string& sl, const std::string& sh, const std::string& dl,
                  const std::string& dh) {
    return IntervalMap{dy(sl), dy(sh), dy(dl), dy(dh)};
}

} // namespace

TEST_CASE("evaluation of the basic maps") {
    ThompsonElement id = ThompsonElement::identity();
    ThompsonElement rot = ThompsonElement::rotation(dy("1/2"));
    ThompsonElement refl = ThompsonElement::reflection();
    ThompsonElement sl = slope_map();

    CHECK(evaluate(id, dy("5/8")) == dy("5/8"));
    CHECK(evaluate(id, dy("0")) == dy("0"));

    CHECK(evaluate(rot, dy("1/4")) == dy("3/4"));
    CHECK(evaluate(rot, dy("3/4")) == dy("1/4"));
    CHECK(evaluate(rot, dy("0")) == dy("1/2"));

    CHECK(evaluate(sl, dy("1/4")) == dy("1/8"));
    CHECK(evaluate(sl, dy("1/2")) == dy("1/4"));
    CHECK(evaluate(sl, dy("5/8")) == dy("3/8"));
    CHECK(evaluate(sl, dy("3/4")) == dy("1/2"));
    CHECK(evaluate(sl, dy("7/8")) == dy("3/4"));
    CHECK(evaluate(sl, dy("0")) == dy("0"));

    CHECK(evaluate(refl, dy("1/4")) == dy("3/4"));
    CHECK(evaluate(refl, dy("5/8")) == dy("3/8"));
    CHECK(evaluate(refl, dy("0")) == dy("0"));
    CHECK(evaluate(refl, dy("1/2")) == dy("1/2"));
}

TEST_CASE("piece-list construction matches the factories") {
    ThompsonElement rot = ThompsonElement::make_element(
        {piece("0", "1/2", "1/2", "1"), piece("1/2", "1", "0", "1/2")}, 1);
    CHECK(rot == ThompsonElement::rotation(dy("1/2")));
    CHECK(rot.domain_partition().str() == "0,1/2");
    CHECK(rot.image_points() == std::vector<Dyadic>{dy("1/2"), dy("0")});
    CHECK(rot.orientation() == 1);
    CHECK(rot.wrap_index() == 1);
    CHECK(rot.str() == "+ 0->1/2, 1/2->0");

    ThompsonElement sl = ThompsonElement::make_element({piece("0", "1/2", "0", "1/4"),
                                                        piece("1/2", "3/4", "1/4", "1/2"),
                                                        piece("3/4", "1", "1/2", "1")},
                                                       1);
    CHECK(sl == slope_map());

    // the reflection sends [0,1/2] onto [1/2,1] backwards and vice versa
    ThompsonElement refl = ThompsonElement::make_element(
        {piece("0", "1/2", "1/2", "1"), piece("1/2", "1", "0", "1/2")}, -1);
    CHECK(refl == ThompsonElement::reflection());
    CHECK(refl.orientation() == -1);
    CHECK(refl.wrap_index() == 0);
    CHECK(refl.str() == "- 0->0, 1/2->1/2");

    // pieces may be listed in any order
    ThompsonElement sl2 = ThompsonElement::make_element({piece("3/4", "1", "1/2", "1"),
                                                         piece("0", "1/2", "0", "1/4"),
                                                         piece("1/2", "3/4", "1/4", "1/2")},
                                                        1);
    CHECK(sl2 == sl);
}

TEST_CASE("construction rejects malformed data") {
    // sources leave a gap
    CHECK_THROWS_AS(ThompsonElement::make_element(
                        {piece("0", "1/4", "0", "1/4"), piece("1/2", "1", "1/2", "1")}, 1),
                    DomainError);
    // targets do not chain: t(1/2) is 1/4 from the left piece, 1/2 from the right
    CHECK_THROWS_AS(ThompsonElement::make_element(
                        {piece("0", "1/2", "0", "1/4"), piece("1/2", "1", "1/2", "1")}, 1),
                    DomainError);
    // target circle position never hits 0
    CHECK_THROWS_AS(ThompsonElement::make_element(
                        {piece("0", "1/2", "1/4", "3/4"), piece("1/2", "1", "3/4", "1/4")}, 1),
                    DomainError);
    // bad orientation value
    CHECK_THROWS_AS(ThompsonElement::make_element(
                        {piece("0", "1/2", "1/2", "1"), piece("1/2", "1", "0", "1/2")}, 0),
                    DomainError);

    // image count mismatch
    CHECK_THROWS_AS(ThompsonElement::from_images({dy("0"), dy("1/2")}, {dy("0")}, 1),
                    DomainError);
    // duplicate images
    CHECK_THROWS_AS(ThompsonElement::from_images({dy("0"), dy("1/2")}, {dy("0"), dy("0")}, 1),
                    DomainError);
    // image set misses 0
    CHECK_THROWS_AS(
        ThompsonElement::from_images({dy("0"), dy("1/2")}, {dy("1/4"), dy("3/4")}, 1),
        DomainError);
    // not cyclically increasing
    CHECK_THROWS_AS(ThompsonElement::from_images({dy("0"), dy("1/4"), dy("1/2")},
                                                 {dy("0"), dy("1/2"), dy("1/4")}, 1),
                    DomainError);
    // not cyclically decreasing
    CHECK_THROWS_AS(ThompsonElement::from_images({dy("0"), dy("1/4"), dy("1/2")},
                                                 {dy("0"), dy("1/4"), dy("1/2")}, -1),
                    DomainError);
    // non-standard domain gap
    CHECK_THROWS_AS(ThompsonElement::from_images({dy("0"), dy("3/8")}, {dy("0"), dy("3/8")}, 1),
                    DomainError);
}

TEST_CASE("reduction reaches the minimal breakpoint set") {
    // identity presented on four pieces collapses to two
    std::vector<Dyadic> u2 = StandardPartition::uniform(2).breakpoints();
    CHECK(ThompsonElement::from_images(u2, u2, 1) == ThompsonElement::identity());
    CHECK(ThompsonElement::identity().domain_partition().interval_count() == 2);

    // rotation by 1/2 presented on uniform(3)
    std::vector<Dyadic> u3 = StandardPartition::uniform(3).breakpoints();
    std::vector<Dyadic> u3_shift;
    for (const Dyadic& x : u3) u3_shift.push_back(x.plus_mod1(dy("1/2")));
    CHECK(ThompsonElement::from_images(u3, u3_shift, 1) ==
          ThompsonElement::rotation(dy("1/2")));

    // rotation by 1/4 genuinely needs four pieces: any merged image straddles
    // a coarser grid line
    CHECK(ThompsonElement::rotation(dy("1/4")).domain_partition().interval_count() == 4);
    CHECK(slope_map().domain_partition().interval_count() == 3);

    std::mt19937_64 rng(1203);
    for (int i = 0; i < 50; ++i) {
        ThompsonElement t = testutil::rand_thompson(rng, 1 + (int)testutil::rand_below(rng, 4));
        CHECK(reduce_minimal(t) == t);
    }
}

TEST_CASE("group laws") {
    ThompsonElement id = ThompsonElement::identity();
    ThompsonElement r4 = ThompsonElement::rotation(dy("1/4"));
    ThompsonElement r2 = ThompsonElement::rotation(dy("1/2"));
    ThompsonElement refl = ThompsonElement::reflection();
    ThompsonElement sl = slope_map();

    CHECK(compose(r4, r4) == r2);
    CHECK(compose(r2, r2) == id);
    CHECK(compose(compose(r4, r4), compose(r4, r4)) == id);
    CHECK(compose(refl, refl) == id);
    CHECK(inverse(r4) == ThompsonElement::rotation(dy("3/4")));
    CHECK(inverse(refl) == refl);
    CHECK(compose(sl, inverse(sl)) == id);
    CHECK(compose(inverse(sl), sl) == id);

    // conjugating a rotation by the reflection inverts it
    CHECK(compose(refl, compose(r4, refl)) == inverse(r4));

    std::mt19937_64 rng(1117);
    for (int i = 0; i < 100; ++i) {
        ThompsonElement a = testutil::rand_thompson(rng, 1 + (int)testutil::rand_below(rng, 4));
        ThompsonElement b = testutil::rand_thompson(rng, 1 + (int)testutil::rand_below(rng, 4));
        ThompsonElement c = testutil::rand_thompson(rng, 1 + (int)testutil::rand_below(rng, 3));
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(compose(a, id) == a);
        CHECK(compose(id, a) == a);
        CHECK(compose(a, inverse(a)) == id);
        CHECK(compose(inverse(a), a) == id);
        CHECK(inverse(inverse(a)) == a);
        // composition evaluates as s after t
        Dyadic x = testutil::rand_dyadic(rng, 6);
        CHECK(evaluate(compose(a, b), x) == evaluate(a, evaluate(b, x)));
    }
}

TEST_CASE("orientation sign is a homomorphism onto Z/2") {
    CHECK(sign(ThompsonElement::identity()) == OrientationSign::preserving);
    CHECK(sign(ThompsonElement::rotation(dy("3/8"))) == OrientationSign::preserving);
    CHECK(sign(ThompsonElement::reflection()) == OrientationSign::reversing);
    CHECK(sign(compose(ThompsonElement::reflection(), ThompsonElement::rotation(dy("1/4")))) ==
          OrientationSign::reversing);

    std::mt19937_64 rng(1301);
    for (int i = 0; i < 100; ++i) {
        ThompsonElement a = testutil::rand_thompson(rng, 1 + (int)testutil::rand_below(rng, 4));
        ThompsonElement b = testutil::rand_thompson(rng, 1 + (int)testutil::rand_below(rng, 4));
        int sa = static_cast<int>(sign(a));
        int sb = static_cast<int>(sign(b));
        CHECK(static_cast<int>(sign(compose(a, b))) == (sa ^ sb));
    }
}

TEST_CASE("elements are bijections preserving the dyadics") {
    std::mt19937_64 rng(1409);
    std::vector<ThompsonElement> pool{ThompsonElement::identity(),
                                      ThompsonElement::rotation(dy("1/4")),
                                      ThompsonElement::reflection(), slope_map()};
    for (int i = 0; i < 10; ++i)
        pool.push_back(testutil::rand_thompson(rng, 1 + (int)testutil::rand_below(rng, 5)));

    for (const ThompsonElement& t : pool) {
        ThompsonElement t_inv = inverse(t);
        std::set<Dyadic> images;
        for (int m = 0; m < 256; ++m) {
            Dyadic x = Dyadic::from_parts(m, 8);
            Dyadic y = evaluate(t, x);
            images.insert(y);
            CHECK(evaluate(t_inv, y) == x);
        }
        CHECK(images.size() == 256);

        // cyclic order of triples is preserved or reversed with the sign
        for (int i = 0; i < 30; ++i) {
            Dyadic a = testutil::rand_dyadic(rng, 6);
            Dyadic b = testutil::rand_dyadic(rng, 6);
            Dyadic c = testutil::rand_dyadic(rng, 6);
            if (a == b || b == c || a == c) continue;
            bool before = cyclically_between(b, a, c);
            bool after = t.orientation() == 1
                             ? cyclically_between(evaluate(t, b), evaluate(t, a), evaluate(t, c))
                             : cyclically_between(evaluate(t, b), evaluate(t, c), evaluate(t, a));
            CHECK(before == after);
        }
    }
}

TEST_CASE("representation invariants hold for generated elements") {
    std::mt19937_64 rng(1511);
    CHECK(element_defects(ThompsonElement::identity()).empty());
    CHECK(element_defects(ThompsonElement::reflection()).empty());
    CHECK(element_defects(slope_map()).empty());
    for (int i = 0; i < 60; ++i) {
        ThompsonElement t = testutil::rand_thompson(rng, 1 + (int)testutil::rand_below(rng, 5));
        auto defects = element_defects(t);
        CAPTURE(t.str());
        CHECK(defects.empty());
    }
}

TEST_CASE("action on the base tessellation") {
    FTessellation base;
    CHECK(act_tessellation(ThompsonElement::identity(), base) == base);
    CHECK(act_tessellation(ThompsonElement::rotation(dy("1/2")), base) == base);
    CHECK(act_tessellation(ThompsonElement::reflection(), base) == base);
    CHECK(act_tessellation(slope_map(), base) == base);

    // the quarter rotation moves the diameter off the base family
    FTessellation quarter = act_tessellation(ThompsonElement::rotation(dy("1/4")), base);
    CHECK(quarter == ft({arc("0", "1/2")}, {arc("1/4", "3/4")}));
    CHECK(quarter != base);

    // the half rotation also fixes the diameter-flipped tessellation
    FTessellation flipped = flip_arc(base, arc("0", "1/2"));
    CHECK(act_tessellation(ThompsonElement::rotation(dy("1/2")), flipped) == flipped);
}

TEST_CASE("action properties on random elements and tessellations") {
    std::mt19937_64 rng(1607);
    for (int i = 0; i < 60; ++i) {
        ThompsonElement t = testutil::rand_thompson(rng, 1 + (int)testutil::rand_below(rng, 4));
        ThompsonElement s = testutil::rand_thompson(rng, 1 + (int)testutil::rand_below(rng, 3));
        FTessellation a = testutil::rand_tessellation(rng, (int)testutil::rand_below(rng, 4),
                                                      (int)testutil::rand_below(rng, 3));
        FTessellation b = testutil::rand_tessellation(rng, (int)testutil::rand_below(rng, 4),
                                                      (int)testutil::rand_below(rng, 3));

        FTessellation ta = act_tessellation(t, a);
        CHECK(rank(ta) == rank(a));
        CHECK(validate(ta).ok());
        CHECK(act_tessellation(ThompsonElement::identity(), a) == a);
        CHECK(act_tessellation(inverse(t), ta) == a);
        CHECK(act_tessellation(compose(s, t), a) == act_tessellation(s, ta));

        // meets are equivariant, and the order transports
        FTessellation met = intersect(a, b);
        CHECK(act_tessellation(t, met) == intersect(ta, act_tessellation(t, b)));
        if (leq(a, met)) CHECK(leq(ta, act_tessellation(t, met)));
        if (leq(met, a)) CHECK(leq(act_tessellation(t, met), ta));
    }
}

TEST_CASE("faithfulness witnesses") {
    CHECK(!faithfulness_witness(ThompsonElement::identity()).has_value());

    // the quarter rotation already moves the base
    auto w4 = faithfulness_witness(ThompsonElement::rotation(dy("1/4")));
    REQUIRE(w4.has_value());
    CHECK(*w4 == FTessellation{});

    // the half rotation fixes the base and the diameter flip; the first
    // level-2 flip is moved
    auto w2 = faithfulness_witness(ThompsonElement::rotation(dy("1/2")));
    REQUIRE(w2.has_value());
    CHECK(*w2 == ft({arc("0", "1/4")}, {arc("1/8", "1/2")}));

    auto wr = faithfulness_witness(ThompsonElement::reflection());
    REQUIRE(wr.has_value());
    CHECK(*wr == ft({arc("0", "1/4")}, {arc("1/8", "1/2")}));

    // the slope map fixes the base family but moves the diameter flip
    auto ws = faithfulness_witness(slope_map());
    REQUIRE(ws.has_value());
    CHECK(*ws == ft({arc("0", "1/2")}, {arc("1/4", "3/4")}));

    std::mt19937_64 rng(1709);
    for (int i = 0; i < 40; ++i) {
        ThompsonElement t = testutil::rand_thompson(rng, 1 + (int)testutil::rand_below(rng, 5));
        auto w = faithfulness_witness(t);
        if (t == ThompsonElement::identity()) {
            CHECK(!w.has_value());
        } else {
            REQUIRE(w.has_value());
            CHECK(act_tessellation(t, *w) != *w);
        }
    }
}
