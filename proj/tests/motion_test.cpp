#include <gtest/gtest.h>

#include "dtop/fixtures.hpp"
#include "dtop/motion.hpp"

using namespace dtop;

namespace {

DigitalPath make_path(std::initializer_list<Point> pts) { return DigitalPath{pts}; }

/// Straight-line rule on a tree-like image: walk from x to y, then wait.
SectionRule geodesic_rule(const DigitalImage& x, const std::vector<Point>& part, int total_len) {
    SectionRule rule;
    int m = x.dimension();
    for (const Point& u : part) {
        auto xy = split_point(u, m, 2);
        std::vector<int> dist(static_cast<size_t>(x.size()), -1), parent(static_cast<size_t>(x.size()), -1);
        int s = x.require_index(xy[0]), t = x.require_index(xy[1]);
        std::vector<int> queue{s};
        dist[static_cast<size_t>(s)] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi)
            for (int w : x.neighbor_indices(queue[qi]))
                if (dist[static_cast<size_t>(w)] < 0) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(queue[qi])] + 1;
                    parent[static_cast<size_t>(w)] = queue[qi];
                    queue.push_back(w);
                }
        std::vector<int> rev;
        for (int v = t; v >= 0; v = parent[static_cast<size_t>(v)]) {
            rev.push_back(v);
            if (v == s) break;
        }
        DigitalPath p;
        for (auto it = rev.rbegin(); it != rev.rend(); ++it) p.points.push_back(x.point(*it));
        while (p.length() < total_len) p.points.push_back(p.points.back());
        rule.paths.emplace(u, std::move(p));
    }
    return rule;
}

}  // namespace

TEST(Paths, EndpointsAndValidity) {
    DigitalImage x = fixtures::interval(3);
    DigitalPath p = make_path({Point{0}, Point{1}, Point{2}});
    auto [a, b] = endpoints(p);
    EXPECT_EQ(a, Point{0});
    EXPECT_EQ(b, Point{2});
    EXPECT_TRUE(is_valid_path(x, p));
    EXPECT_TRUE(is_valid_path(x, make_path({Point{2}})));
    EXPECT_FALSE(is_valid_path(x, make_path({Point{0}, Point{2}})));
}

TEST(Synchronize, ExtendsShorterByRepeatingItsEnd) {
    DigitalPath a = make_path({Point{0}, Point{1}, Point{2}});
    DigitalPath b = make_path({Point{3}, Point{3}, Point{3}, Point{2}, Point{1}});
    auto [a2, b2] = synchronize(a, b);
    EXPECT_EQ(a2.length(), 4);
    EXPECT_EQ(b2.length(), 4);
    EXPECT_EQ(a2.at(3), Point{2});
    EXPECT_EQ(a2.at(4), Point{2});
    auto [a3, b3] = synchronize(a2, b2);  // idempotent
    EXPECT_EQ(a3.points, a2.points);
    EXPECT_EQ(b3.points, b2.points);
    EXPECT_EQ(endpoints(a2), endpoints(a));

    DigitalPath stay = make_path({Point{7}});
    auto [s2, c2] = synchronize(stay, a);
    EXPECT_EQ(s2.length(), a.length());
    for (const Point& p : s2.points) EXPECT_EQ(p, Point{7});
}

TEST(PathsAdjacent, PointwiseRelation) {
    DigitalImage sq = fixtures::msc4(4);
    DigitalPath a = make_path({Point{0, 0}, Point{1, 0}});
    DigitalPath b = make_path({Point{0, 1}, Point{1, 1}});
    EXPECT_TRUE(paths_adjacent(sq, a, a));
    EXPECT_TRUE(paths_adjacent(sq, a, b));
    DigitalImage x = fixtures::interval(3);
    DigitalPath c = make_path({Point{0}, Point{0}});
    DigitalPath d = make_path({Point{2}, Point{3}});
    EXPECT_FALSE(paths_adjacent(x, c, d));
    // the literal connected reading relates any two paths here
    EXPECT_TRUE(paths_adjacent(x, c, d, PathRelation::Connected));
}

TEST(Sections, GeodesicRuleOnIntervalPairs) {
    DigitalImage x = fixtures::interval(2);
    DigitalImage base = product(x, x);
    SectionRule rule = geodesic_rule(x, base.points(), diameter(x));
    VerifyReport r = verify_section(x, base, base.points(), rule);
    EXPECT_TRUE(r.ok) << r.message;
}

TEST(Sections, EndpointMismatchReported) {
    DigitalImage x = fixtures::interval(1);
    DigitalImage base = product(x, x);
    SectionRule rule;
    for (const Point& u : base.points()) rule.paths.emplace(u, make_path({Point{0}, Point{0}}));
    VerifyReport r = verify_section(x, base, base.points(), rule);
    EXPECT_FALSE(r.ok);
    EXPECT_NE(r.message.find("does not run"), std::string::npos);
}

TEST(TcWitness, NonCoveringFamilyRejected) {
    DigitalImage x = fixtures::interval(1);
    CoverWitness cover;
    cover.parts = {{pair_point(Point{0}, Point{0})}};
    std::vector<SectionRule> rules(1);
    rules[0].paths.emplace(pair_point(Point{0}, Point{0}), make_path({Point{0}}));
    BoundReport r = verify_tc_witness(x, cover, rules);
    EXPECT_FALSE(r.ok);
    EXPECT_NE(r.message.find("cover"), std::string::npos);
}

TEST(TcWitness, GlobalRuleOnInterval) {
    DigitalImage x = fixtures::interval(2);
    DigitalImage base = product(x, x);
    CoverWitness cover;
    cover.parts = {base.points()};
    std::vector<SectionRule> rules = {geodesic_rule(x, base.points(), diameter(x))};
    BoundReport r = verify_tc_witness(x, cover, rules);
    ASSERT_TRUE(r.ok) << r.message;
    EXPECT_EQ(r.bound, 1);
}

TEST(SectionFromContraction, SquareCurveGivesVerifiedGlobalSection) {
    DigitalImage x = fixtures::msc4(4);
    ContractionSearchResult c = find_contraction(x, 8, 1000000);
    ASSERT_EQ(c.status, ContractionStatus::Found);
    SectionRule rule = section_from_contraction(x, *c.certificate);
    DigitalImage base = product(x, x);
    VerifyReport r = verify_section(x, base, base.points(), rule);
    EXPECT_TRUE(r.ok) << r.message;
}

TEST(ReversedRule, SwappedPairsStillVerify) {
    DigitalImage x = fixtures::msc4(4);
    ContractionSearchResult c = find_contraction(x, 8, 1000000);
    ASSERT_EQ(c.status, ContractionStatus::Found);
    SectionRule rule = section_from_contraction(x, *c.certificate);
    SectionRule swapped;
    int m = x.dimension();
    for (const auto& [u, p] : rule.paths) {
        auto xy = split_point(u, m, 2);
        swapped.paths.emplace(pair_point(xy[1], xy[0]), reverse_path(p));
    }
    DigitalImage base = product(x, x);
    VerifyReport r = verify_section(x, base, base.points(), swapped);
    EXPECT_TRUE(r.ok) << r.message;
}

TEST(Obstruction, ThetaPairsAgainstFixedEndpoint) {
    DigitalImage x = fixtures::theta();
    DigitalImage base = product(x, x);
    SectionObstruction obs = find_section_obstruction(x, base.points());
    EXPECT_TRUE(obs.found);
}

TEST(Obstruction, SquareCurveHasNone) {
    // girth four: the sliding argument does not apply
    DigitalImage x = fixtures::msc4(4);
    DigitalImage base = product(x, x);
    EXPECT_FALSE(find_section_obstruction(x, base.points()).found);
}

TEST(Tc1, IntervalIsOne) {
    Tc1Result r = tc_is_one(fixtures::interval(1));
    EXPECT_EQ(r.verdict, Tc1Verdict::Yes);
    ASSERT_TRUE(r.witness.has_value());
}

TEST(Tc1, SquareCurveUnder8IsOne) {
    Tc1Result r = tc_is_one(fixtures::msc4(8));
    EXPECT_EQ(r.verdict, Tc1Verdict::Yes);
}

TEST(Tc1, SquareCurveUnder4IsAlsoOne) {
    // the two-step fold exists, so a verified global section exists as well
    Tc1Result r = tc_is_one(fixtures::msc4(4));
    EXPECT_EQ(r.verdict, Tc1Verdict::Yes);
    ASSERT_TRUE(r.witness.has_value());
    DigitalImage x = fixtures::msc4(4);
    DigitalImage base = product(x, x);
    VerifyReport check = verify_section(x, base, base.points(), *r.witness);
    EXPECT_TRUE(check.ok);
}

TEST(Tc1, ThetaIsRefutedByTheLoopObstruction) {
    Tc1Result r = tc_is_one(fixtures::theta(), 20000);
    EXPECT_EQ(r.verdict, Tc1Verdict::No);
    EXPECT_NE(r.reason.find("loop"), std::string::npos);
}

TEST(Tc1, WedgeOfSquaresIsOne) {
    Tc1Result r = tc_is_one(fixtures::msc6_wedge());
    EXPECT_EQ(r.verdict, Tc1Verdict::Yes);
}

TEST(Tc1, HexagonIsRefuted) {
    Tc1Result r = tc_is_one(fixtures::hex6());
    EXPECT_EQ(r.verdict, Tc1Verdict::No);
}

TEST(Synthesis, SingletonPairGetsAGeodesic) {
    DigitalImage x = fixtures::theta();
    std::vector<Point> part = {pair_point(Point{0, 0}, Point{2, 2})};
    SynthesisResult r = synthesize_section(x, part);
    ASSERT_EQ(r.status, SynthesisStatus::Found);
    EXPECT_EQ(r.rule.paths.begin()->second.length(), 4);
}

TEST(Synthesis, ArmByArmPartOfTheta) {
    DigitalImage x = fixtures::theta();
    std::vector<Point> part;
    for (const Point& a : fixtures::theta_arm_alpha())
        for (const Point& b : fixtures::theta_arm_alpha()) part.push_back(pair_point(a, b));
    SynthesisResult r = synthesize_section(x, part, 2000000);
    ASSERT_EQ(r.status, SynthesisStatus::Found) << r.message;
    DigitalImage base = product(x, x);
    VerifyReport check = verify_section(x, base, part, r.rule);
    EXPECT_TRUE(check.ok) << check.message;
}

TEST(Synthesis, RecordedTwoPartCoverOfThetaIsImpossible) {
    // beta x beta together with the mixed blocks contains a full ring of
    // start points against a fixed end, so no continuous section exists
    DigitalImage x = fixtures::theta();
    std::vector<Point> part;
    auto alpha = fixtures::theta_arm_alpha();
    auto beta = fixtures::theta_arm_beta();
    for (const Point& a : beta)
        for (const Point& b : beta) part.push_back(pair_point(a, b));
    for (const Point& a : beta)
        for (const Point& b : alpha) part.push_back(pair_point(a, b));
    for (const Point& a : alpha)
        for (const Point& b : beta) part.push_back(pair_point(a, b));
    SynthesisResult r = synthesize_section(x, part, 1000);
    EXPECT_EQ(r.status, SynthesisStatus::Impossible);
    EXPECT_NE(r.message.find("loop"), std::string::npos);
}

TEST(Spiders, MalformedLegStartsRejected) {
    DigitalImage x = fixtures::interval(1);
    Spider s;
    s.legs.push_back(make_path({Point{0}}));
    s.legs.push_back(make_path({Point{1}}));
    EXPECT_FALSE(is_valid_spider(x, s));
}

TEST(Spiders, GlobalRuleForTriplesOfTheInterval) {
    DigitalImage x = fixtures::interval(1);
    DigitalImage base = power(x, 3);
    ASSERT_EQ(base.size(), 8);
    SpiderSynthesisResult r = synthesize_spider_rule(x, 3, base.points());
    ASSERT_EQ(r.status, SynthesisStatus::Found) << r.message;
    CoverWitness cover;
    cover.arity = 3;
    cover.parts = {base.points()};
    BoundReport b = verify_tcn_witness(x, 3, cover, {r.rule});
    ASSERT_TRUE(b.ok) << b.message;
    EXPECT_EQ(b.bound, 1);
}

TEST(Spiders, TwoLeggedRuleAgreesWithPairVerdicts) {
    DigitalImage x = fixtures::interval(2);
    DigitalImage base = product(x, x);
    SectionRule rule = geodesic_rule(x, base.points(), diameter(x));
    CoverWitness cover;
    cover.parts = {base.points()};
    BoundReport tc = verify_tc_witness(x, cover, {rule});

    // convert each path rule into a two-legged spider: stay at x, walk to y
    SpiderRule spiders;
    for (const auto& [u, p] : rule.paths) {
        Spider s;
        DigitalPath stay;
        stay.points.assign(1, p.start());
        s.legs = {stay, p};
        spiders.spiders.emplace(u, s);
    }
    CoverWitness cover2;
    cover2.arity = 2;
    cover2.parts = {base.points()};
    BoundReport tcn = verify_tcn_witness(x, 2, cover2, {spiders});
    EXPECT_EQ(tc.ok, tcn.ok);
    EXPECT_EQ(tc.bound, tcn.bound);
}

TEST(Cat, SinglePartIntervalWitness) {
    DigitalImage x = fixtures::interval(3);
    CatWitness w;
    w.parts = {x.points()};
    std::vector<std::vector<int>> steps = {{0, 1, 2, 3}, {0, 0, 1, 2}, {0, 0, 0, 1}, {0, 0, 0, 0}};
    w.contractions = {HomotopyScript{induced_subimage(x, x.points()), x, steps}};
    BoundReport r = verify_cat_witness(x, w);
    ASSERT_TRUE(r.ok) << r.message;
    EXPECT_EQ(r.bound, 1);
}

TEST(Cat, SquareCurveContractsInOnePart) {
    // the two-step fold makes the whole curve one contractible part
    DigitalImage x = fixtures::msc4(4);
    ContractionSearchResult c = find_contraction(x, 8, 1000000);
    ASSERT_EQ(c.status, ContractionStatus::Found);
    CatWitness w;
    w.parts = {x.points()};
    w.contractions = {c.certificate->script};
    BoundReport r = verify_cat_witness(x, w);
    ASSERT_TRUE(r.ok) << r.message;
    EXPECT_EQ(r.bound, 1);
}

TEST(Tc1, YesWheneverAContractionExists) {
    for (const DigitalImage& x : {fixtures::interval(3), fixtures::msc4(4), fixtures::msc4(8),
                                  fixtures::msc6(), fixtures::msc6_wedge()}) {
        ContractionSearchResult c = find_contraction(x, 16, 1000000);
        ASSERT_EQ(c.status, ContractionStatus::Found);
        EXPECT_EQ(tc_is_one(x).verdict, Tc1Verdict::Yes);
    }
}

TEST(Cat, ProductSquareContractsInOnePart) {
    DigitalImage h = fixtures::interval(1);
    DigitalImage h2 = power(h, 2);
    ContractionSearchResult c = find_contraction(h2, 8, 100000);
    ASSERT_EQ(c.status, ContractionStatus::Found);
    CatWitness w;
    w.parts = {h2.points()};
    w.contractions = {c.certificate->script};
    BoundReport r = verify_cat_witness(h2, w);
    ASSERT_TRUE(r.ok) << r.message;
    EXPECT_EQ(r.bound, 1);
}

TEST(Group, XorTableOnTwoPoints) {
    DigitalImage x = fixtures::interval(1);
    GroupTable t;
    t.mul = {{0, 1}, {1, 0}};
    GroupReport r = group_check(x, t);
    EXPECT_TRUE(r.ok) << r.message;
    EXPECT_EQ(r.identity, 0);
}

TEST(Group, Mod3AdditionFailsInversionContinuity) {
    DigitalImage x = fixtures::interval(2);
    GroupTable t;
    t.mul = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    GroupReport r = group_check(x, t);
    EXPECT_FALSE(r.ok);
    EXPECT_TRUE(r.axioms_ok);
    EXPECT_NE(r.message.find("continuity"), std::string::npos);
}

TEST(Group, MissingInverseIsAnAxiomFailure) {
    DigitalImage x = fixtures::interval(1);
    GroupTable t;
    t.mul = {{0, 1}, {1, 1}};  // 1 has no inverse
    GroupReport r = group_check(x, t);
    EXPECT_FALSE(r.ok);
    EXPECT_FALSE(r.axioms_ok);
    EXPECT_NE(r.message.find("axioms"), std::string::npos);
}

TEST(Group, MissingIdentityIsAnAxiomFailure) {
    DigitalImage x = fixtures::interval(1);
    GroupTable t;
    t.mul = {{1, 1}, {1, 1}};
    GroupReport r = group_check(x, t);
    EXPECT_FALSE(r.ok);
    EXPECT_FALSE(r.axioms_ok);
    EXPECT_NE(r.message.find("identity"), std::string::npos);
}

TEST(Group, RouteToHigherPlanningBound) {
    DigitalImage h = fixtures::interval(1);
    GroupTable t;
    t.mul = {{0, 1}, {1, 0}};
    DigitalImage h2 = power(h, 2);
    ContractionSearchResult c = find_contraction(h2, 8, 100000);
    ASSERT_EQ(c.status, ContractionStatus::Found);
    CatWitness w;
    w.parts = {h2.points()};
    w.contractions = {c.certificate->script};
    BoundReport r = tcn_upper_via_group(h, t, 3, w);
    ASSERT_TRUE(r.ok) << r.message;
    EXPECT_EQ(r.bound, 1);

    // n = 2 uses the one-fold product
    CatWitness w1;
    w1.parts = {h.points()};
    ContractionSearchResult c1 = find_contraction(h, 8, 1000);
    ASSERT_EQ(c1.status, ContractionStatus::Found);
    w1.contractions = {c1.certificate->script};
    BoundReport r2 = tcn_upper_via_group(h, t, 2, w1);
    ASSERT_TRUE(r2.ok) << r2.message;
    EXPECT_EQ(r2.bound, 1);

    GroupTable bad;
    bad.mul = {{0, 1}, {1, 1}};
    EXPECT_FALSE(tcn_upper_via_group(h, bad, 3, w).ok);
}
