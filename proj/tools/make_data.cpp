// Generates the recorded certificate files under data/. Every artifact is
// verified before it is written; generation is deterministic.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "dtop/fixtures.hpp"
#include "dtop/io.hpp"
#include "dtop/motion.hpp"

using namespace dtop;

namespace {

std::string out_dir = "data";

void write_file(const std::string& name, const std::function<void(std::ostream&)>& fn) {
    std::filesystem::create_directories(out_dir);
    std::ofstream out(out_dir + "/" + name);
    if (!out) throw std::runtime_error("cannot write " + name);
    fn(out);
    std::cout << "wrote " << name << "\n";
}

void require(bool cond, const std::string& what) {
    if (!cond) throw std::logic_error("generation failed: " + what);
}

/// Walk immediately along a breadth-first geodesic, then wait; padded to a
/// fixed duration so that all paths of one rule share their time domain.
DigitalPath geodesic_walk(const DigitalImage& x, const Point& from, const Point& to, int duration) {
    int s = x.require_index(from), t = x.require_index(to);
    std::vector<int> parent(static_cast<size_t>(x.size()), -2);
    std::vector<int> queue{s};
    parent[static_cast<size_t>(s)] = -1;
    for (size_t qi = 0; qi < queue.size(); ++qi)
        for (int w : x.neighbor_indices(queue[qi]))
            if (parent[static_cast<size_t>(w)] == -2) {
                parent[static_cast<size_t>(w)] = queue[qi];
                queue.push_back(w);
            }
    require(parent[static_cast<size_t>(t)] != -2, "no path between endpoints");
    std::vector<int> rev;
    for (int v = t; v != -1; v = parent[static_cast<size_t>(v)]) rev.push_back(v);
    DigitalPath p;
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) p.points.push_back(x.point(*it));
    require(p.length() <= duration, "duration shorter than the geodesic");
    while (p.length() < duration) p.points.push_back(p.points.back());
    return p;
}

DigitalPath concatenate(const DigitalPath& a, const DigitalPath& b) {
    require(a.end() == b.start(), "paths do not meet");
    DigitalPath out = a;
    out.points.insert(out.points.end(), b.points.begin() + 1, b.points.end());
    return out;
}

std::vector<Point> pairs_of(const std::vector<Point>& xs, const std::vector<Point>& ys) {
    std::vector<Point> out;
    for (const Point& a : xs)
        for (const Point& b : ys) out.push_back(pair_point(a, b));
    return out;
}

void emit_global_section_from_contraction(const std::string& name, const DigitalImage& x) {
    ContractionSearchResult c = find_contraction(x, 16, 2000000);
    require(c.status == ContractionStatus::Found, name + ": image does not contract");
    SectionRule rule = section_from_contraction(x, *c.certificate);
    DigitalImage base = product(x, x);
    TcWitnessFile w;
    w.cover.parts = {base.points()};
    w.rules = {rule};
    BoundReport r = verify_tc_witness(x, w.cover, w.rules);
    require(r.ok && r.bound == 1, name + ": witness failed verification");
    write_file(name, [&](std::ostream& o) { write_tc_witness(o, w, base.dimension()); });
}

void make_xor_group() {
    DigitalImage h = fixtures::interval(1);
    GroupTable t;
    t.mul = {{0, 1}, {1, 0}};
    require(group_check(h, t).ok, "xor table");
    write_file("xor_group.txt", [&](std::ostream& o) { write_group_table(o, h, t); });
}

void make_interval_sq_cat() {
    DigitalImage h2 = power(fixtures::interval(1), 2);
    ContractionSearchResult c = find_contraction(h2, 8, 200000);
    require(c.status == ContractionStatus::Found, "product square contraction");
    CatWitnessFile w;
    w.witness.parts = {h2.points()};
    w.witness.contractions = {c.certificate->script};
    require(verify_cat_witness(h2, w.witness).ok, "cat witness");
    write_file("interval1_sq_cat.witness", [&](std::ostream& o) { write_cat_witness(o, w); });
}

void make_interval_tc3() {
    DigitalImage h = fixtures::interval(1);
    DigitalImage base = power(h, 3);
    SpiderSynthesisResult s = synthesize_spider_rule(h, 3, base.points());
    require(s.status == SynthesisStatus::Found, "triple rule search");
    TcnWitnessFile w;
    w.cover.arity = 3;
    w.cover.parts = {base.points()};
    w.rules = {s.rule};
    BoundReport r = verify_tcn_witness(h, 3, w.cover, w.rules);
    require(r.ok && r.bound == 1, "triple witness");
    write_file("interval1_tc3.witness",
               [&](std::ostream& o) { write_tcn_witness(o, w, base.dimension()); });
}

void make_theta_witnesses() {
    DigitalImage x = fixtures::theta();
    DigitalImage base = product(x, x);
    auto alpha = fixtures::theta_arm_alpha();
    auto beta = fixtures::theta_arm_beta();
    const int dur = diameter(x);

    // the recorded two-part cover: mixed part plus alpha x alpha; its
    // sections are endpoint-correct geodesics, continuous only under the
    // degenerate connected relation
    {
        TcWitnessFile w;
        std::set<Point> u1;
        for (const Point& u : pairs_of(beta, beta)) u1.insert(u);
        for (const Point& u : pairs_of(beta, alpha)) u1.insert(u);
        for (const Point& u : pairs_of(alpha, beta)) u1.insert(u);
        w.cover.parts = {std::vector<Point>(u1.begin(), u1.end()), pairs_of(alpha, alpha)};
        for (const auto& part : w.cover.parts) {
            SectionRule rule;
            for (const Point& u : part) {
                auto xy = split_point(u, 2, 2);
                rule.paths.emplace(u, geodesic_walk(x, xy[0], xy[1], dur));
            }
            w.rules.push_back(std::move(rule));
        }
        BoundReport lit = verify_tc_witness(x, w.cover, w.rules, PathRelation::Connected);
        require(lit.ok && lit.bound == 2, "two-part cover under the connected relation");
        BoundReport strict = verify_tc_witness(x, w.cover, w.rules, PathRelation::AdjacentOrEqual);
        require(!strict.ok, "two-part cover unexpectedly verified under adjacent-or-equal");
        write_file("theta_cover2.witness",
                   [&](std::ostream& o) { write_tc_witness(o, w, base.dimension()); });
    }

    // verified three-part witness: tree rules on each arm and junction-routed
    // rules on the mixed blocks
    {
        std::vector<Point> alpha_only, beta_only;
        std::set<Point> alpha_set(alpha.begin(), alpha.end());
        std::set<Point> beta_set(beta.begin(), beta.end());
        for (const Point& p : alpha)
            if (!beta_set.count(p)) alpha_only.push_back(p);
        for (const Point& p : beta)
            if (!alpha_set.count(p)) beta_only.push_back(p);

        DigitalImage alpha_img = induced_subimage(x, alpha);
        DigitalImage beta_img = induced_subimage(x, beta);
        Point junction{0, 0};  // shared endpoint of both arms

        auto arm_rule = [&](const DigitalImage& arm, const std::vector<Point>& part) {
            SectionRule rule;
            for (const Point& u : part) {
                auto xy = split_point(u, 2, 2);
                DigitalPath p = geodesic_walk(arm, xy[0], xy[1], 2 * dur);
                rule.paths.emplace(u, std::move(p));
            }
            return rule;
        };
        auto routed_rule = [&](const DigitalImage& first_arm, const DigitalImage& second_arm,
                               const std::vector<Point>& part) {
            SectionRule rule;
            for (const Point& u : part) {
                auto xy = split_point(u, 2, 2);
                DigitalPath to_junction = geodesic_walk(first_arm, xy[0], junction, dur);
                DigitalPath from_junction = geodesic_walk(second_arm, junction, xy[1], dur);
                rule.paths.emplace(u, concatenate(to_junction, from_junction));
            }
            return rule;
        };

        TcWitnessFile w;
        w.cover.parts = {pairs_of(alpha, alpha), pairs_of(beta, beta), pairs_of(alpha_only, beta_only)};
        std::vector<Point> mixed_back = pairs_of(beta_only, alpha_only);
        w.cover.parts[2].insert(w.cover.parts[2].end(), mixed_back.begin(), mixed_back.end());

        w.rules.push_back(arm_rule(alpha_img, w.cover.parts[0]));
        w.rules.push_back(arm_rule(beta_img, w.cover.parts[1]));
        SectionRule mixed = routed_rule(alpha_img, beta_img, pairs_of(alpha_only, beta_only));
        SectionRule mixed2 = routed_rule(beta_img, alpha_img, mixed_back);
        mixed.paths.insert(mixed2.paths.begin(), mixed2.paths.end());
        w.rules.push_back(std::move(mixed));

        BoundReport r = verify_tc_witness(x, w.cover, w.rules);
        require(r.ok && r.bound == 3, "three-part witness: " + r.message);
        write_file("theta_cover3.witness",
                   [&](std::ostream& o) { write_tc_witness(o, w, base.dimension()); });
    }
}

void make_msc4_witnesses() {
    DigitalImage x = fixtures::msc4(4);
    DigitalImage base = product(x, x);
    ContractionSearchResult c = find_contraction(x, 8, 200000);
    require(c.status == ContractionStatus::Found, "square curve contraction");
    SectionRule global = section_from_contraction(x, *c.certificate);

    emit_global_section_from_contraction("msc4_tc1.witness", x);
    emit_global_section_from_contraction("msc4_8_tc1.witness", fixtures::msc4(8));

    // two-part witness: split pairs by their first coordinate
    TcWitnessFile w;
    std::vector<Point> low = {{0, 0}, {1, 0}};
    std::vector<Point> high = {{0, 1}, {1, 1}};
    w.cover.parts = {pairs_of(low, x.points()), pairs_of(high, x.points())};
    for (const auto& part : w.cover.parts) {
        SectionRule rule;
        for (const Point& u : part) rule.paths.emplace(u, global.paths.at(u));
        w.rules.push_back(std::move(rule));
    }
    BoundReport r = verify_tc_witness(x, w.cover, w.rules);
    require(r.ok && r.bound == 2, "two-part witness");
    write_file("msc4_cover2.witness",
               [&](std::ostream& o) { write_tc_witness(o, w, base.dimension()); });
}

void make_wedge_artifacts() {
    DigitalImage w = fixtures::msc6_wedge();
    ContractionSearchResult c = find_contraction(w, 8, 2000000);
    require(c.status == ContractionStatus::Found, "wedge contraction");
    ContractionCertificate cert = *c.certificate;
    require(verify_contraction(cert).ok, "wedge certificate");
    write_file("wedge_msc6_contraction.script",
               [&](std::ostream& o) { write_script(o, cert.script); });
    emit_global_section_from_contraction("wedge_msc6_tc1.witness", w);

    DigitalImage sq = fixtures::msc6();
    ContractionSearchResult cs = find_contraction(sq, 8, 200000);
    require(cs.status == ContractionStatus::Found, "space square contraction");
    write_file("msc6_contraction.script",
               [&](std::ostream& o) { write_script(o, cs.certificate->script); });
}

void make_interval5() {
    DigitalImage x = fixtures::interval(5);
    emit_global_section_from_contraction("interval5_tc1.witness", x);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) out_dir = argv[1];
    try {
        make_xor_group();
        make_interval_sq_cat();
        make_interval_tc3();
        make_theta_witnesses();
        make_msc4_witnesses();
        make_wedge_artifacts();
        make_interval5();
        std::cout << "all artifacts verified and written\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
