#pragma once

// Built-in images used across tests, the CLI (@name references) and the
// bundled reproduction scenarios. Every fixture validates its declared
// structural properties when the registry is built.

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dtop/core.hpp"
#include "dtop/surface.hpp"

namespace dtop {
namespace fixtures {

/// [0,n] with 2-adjacency.
inline DigitalImage interval(int n) {
    if (n < 0) throw std::invalid_argument("interval needs n >= 0");
    std::vector<Point> pts;
    for (int i = 0; i <= n; ++i) pts.push_back(Point{i});
    return DigitalImage(1, AdjacencyKind::c(1), std::move(pts));
}

/// The eight corners of the unit cube with 6-adjacency; the minimal closed
/// surface of genus 0. Labels follow the customary p0..p7 naming.
inline DigitalImage mss6() {
    std::vector<Point> pts = {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 0, 1},
                              {0, 0, 1}, {0, 1, 1}, {0, 1, 0}, {0, 0, 0}};
    std::vector<std::string> labels = {"p0", "p1", "p2", "p3", "p4", "p5", "p6", "p7"};
    return DigitalImage(3, AdjacencyKind::c(1), std::move(pts), std::move(labels));
}

/// Vertex order used by the golden cohomology test for mss6:
/// p7 < p4 < p6 < p5 < p0 < p3 < p1 < p2.
inline std::vector<Point> mss6_golden_order() {
    return {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}};
}

/// The twelve oriented edges e0..e11 of mss6 in their customary listing; each
/// pair (a, b) is increasing in the golden vertex order, so the boundary of
/// the edge is b - a.
inline std::vector<std::pair<Point, Point>> mss6_golden_edges() {
    Point p0{1, 0, 0}, p1{1, 1, 0}, p2{1, 1, 1}, p3{1, 0, 1};
    Point p4{0, 0, 1}, p5{0, 1, 1}, p6{0, 1, 0}, p7{0, 0, 0};
    return {{p0, p1}, {p0, p3}, {p1, p2}, {p6, p1}, {p5, p2}, {p3, p2},
            {p4, p3}, {p7, p4}, {p4, p5}, {p6, p5}, {p7, p6}, {p7, p0}};
}

/// Unit square in the plane; pass 4 or 8 for the adjacency alias.
inline DigitalImage msc4(int adjacency_alias = 4) {
    std::vector<Point> pts = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    return DigitalImage(2, AdjacencyKind::from_alias(adjacency_alias, 2), std::move(pts));
}

/// Minimal simple closed 6-curve in Z^3 that admits a contraction: the unit
/// square in the z = 0 plane. Six-point hexagonal curves are simple closed
/// curves too, but exhaustive search shows they do not contract (see hex6).
inline DigitalImage msc6() {
    std::vector<Point> pts = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
    return DigitalImage(3, AdjacencyKind::c(1), std::move(pts));
}

/// Mirrored copy of msc6 through the origin.
inline DigitalImage msc6_mirror() {
    std::vector<Point> pts = {{0, 0, 0}, {-1, 0, 0}, {-1, -1, 0}, {0, -1, 0}};
    return DigitalImage(3, AdjacencyKind::c(1), std::move(pts));
}

/// One-point union of msc6 and its mirror at the origin.
inline DigitalImage msc6_wedge() { return wedge(msc6(), msc6_mirror(), Point{0, 0, 0}); }

/// Staircase hexagon: the six-point simple closed 6-curve on the unit cube.
inline DigitalImage hex6() {
    std::vector<Point> pts = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {0, 1, 1}, {0, 0, 1}};
    return DigitalImage(3, AdjacencyKind::c(1), std::move(pts));
}

/// Two eight-point square rings sharing the single point (2,2): first Betti
/// number 2. The customary waypoint labels are a1 = (0,0), a5 = (2,2) (the
/// shared point) and a9 = (4,4).
inline DigitalImage theta() {
    std::vector<Point> pts = {
        // left ring: boundary of [0,2]^2
        {0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1},
        // right ring: boundary of [2,4]^2, sharing (2,2)
        {3, 2}, {4, 2}, {4, 3}, {4, 4}, {3, 4}, {2, 4}, {2, 3}};
    return DigitalImage(2, AdjacencyKind::c(1), std::move(pts));
}

/// Arm of theta through the upper-left sides: a1 .. a5 .. a9 (9 points).
inline std::vector<Point> theta_arm_alpha() {
    return {{0, 0}, {0, 1}, {0, 2}, {1, 2}, {2, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 4}};
}

/// Arm of theta through the lower-right sides (9 points).
inline std::vector<Point> theta_arm_beta() {
    return {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {3, 2}, {4, 2}, {4, 3}, {4, 4}};
}

namespace detail {

/// All voxels at Chebyshev distance exactly one from the core set: a thin
/// closed membrane around the core (a tube when the core is a closed curve).
inline DigitalImage tube_shell(const std::vector<Point>& core) {
    std::set<Point> core_set(core.begin(), core.end());
    std::set<Point> shell;
    for (const Point& c : core) {
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy)
                for (int dz = -1; dz <= 1; ++dz) {
                    if (!dx && !dy && !dz) continue;
                    Point p{c[0] + dx, c[1] + dy, c[2] + dz};
                    if (!core_set.count(p)) shell.insert(p);
                }
    }
    return DigitalImage(3, AdjacencyKind::c(1),
                        std::vector<Point>(shell.begin(), shell.end()));
}

/// Voxels of the rectangle boundary [x0,x1] x [y0,y1] at height z.
inline std::vector<Point> rect_ring(int x0, int y0, int x1, int y1, int z) {
    std::vector<Point> out;
    for (int x = x0; x <= x1; ++x)
        for (int y = y0; y <= y1; ++y)
            if (x == x0 || x == x1 || y == y0 || y == y1) out.push_back(Point{x, y, z});
    return out;
}

}  // namespace detail

/// Genus-1 closed surface: membrane around a square ring core. 128 points;
/// corner census M3 = 8, M4 = 112, M5 = 8.
inline DigitalImage genus1() { return detail::tube_shell(detail::rect_ring(1, 1, 5, 5, 1)); }

/// Genus-2 closed surface: membrane around a theta-shaped core (rectangle
/// ring plus a middle bar). 198 points; census M3 = 8, M4 = 174, M5 = 16.
inline DigitalImage genus2() {
    std::vector<Point> core = detail::rect_ring(1, 1, 9, 5, 1);
    for (int y = 2; y <= 4; ++y) core.push_back(Point{5, y, 1});
    return detail::tube_shell(core);
}

inline DigitalImage genus0() { return mss6(); }

}  // namespace fixtures

/// Named fixture lookup used by the CLI's @name references. Building the
/// registry validates each fixture's declared structural properties.
class FixtureRegistry {
  public:
    FixtureRegistry() {
        add("mss6", fixtures::mss6());
        add("msc4", fixtures::msc4(4));
        add("msc4_8", fixtures::msc4(8));
        add("msc6", fixtures::msc6());
        add("wedge_msc6", fixtures::msc6_wedge());
        add("hex6", fixtures::hex6());
        add("theta", fixtures::theta());
        add("genus0", fixtures::genus0());
        add("genus1", fixtures::genus1());
        add("genus2", fixtures::genus2());
        validate();
    }

    bool has(const std::string& name) const {
        return images_.count(name) > 0 || parse_interval(name) >= 0;
    }

    DigitalImage get(const std::string& name) const {
        auto it = images_.find(name);
        if (it != images_.end()) return it->second;
        int n = parse_interval(name);
        if (n >= 0) return fixtures::interval(n);
        throw std::invalid_argument("unknown fixture: " + name);
    }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (const auto& [k, v] : images_) out.push_back(k);
        out.push_back("interval<n>");
        return out;
    }

  private:
    void add(const std::string& name, DigitalImage img) { images_.emplace(name, std::move(img)); }

    static int parse_interval(const std::string& name) {
        if (name.rfind("interval", 0) != 0) return -1;
        std::string suffix = name.substr(8);
        if (suffix.empty()) return -1;
        for (char ch : suffix)
            if (!isdigit(static_cast<unsigned char>(ch))) return -1;
        return std::stoi(suffix);
    }

    void validate() const {
        auto expect = [](bool cond, const std::string& what) {
            if (!cond) throw std::logic_error("fixture validation failed: " + what);
        };
        expect(is_connected(images_.at("mss6")), "mss6 connected");
        expect(is_simple_closed_curve(images_.at("msc4")), "msc4 is a simple closed curve");
        expect(!is_simple_closed_curve(images_.at("msc4_8")), "msc4 under 8-adjacency is not a curve");
        expect(is_simple_closed_curve(images_.at("msc6")), "msc6 is a simple closed curve");
        expect(is_simple_closed_curve(images_.at("hex6")), "hex6 is a simple closed curve");
        expect(is_connected(images_.at("wedge_msc6")), "wedge connected");
        expect(is_connected(images_.at("theta")), "theta connected");
        for (const char* s : {"genus0", "genus1", "genus2"})
            expect(is_closed_surface(images_.at(s)).ok, std::string(s) + " is a closed surface");
    }

    std::map<std::string, DigitalImage> images_;
};

}  // namespace dtop
