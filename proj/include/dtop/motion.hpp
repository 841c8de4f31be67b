#pragma once

// Digital paths with synchronization, motion-planning covers and sections,
// topological-complexity and category witness verification, topological-group
// checks, and a backtracking section synthesizer.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dtop/complex.hpp"
#include "dtop/core.hpp"
#include "dtop/homotopy.hpp"

namespace dtop {

/// Tabulated path [0,n] -> X; consecutive values equal or adjacent.
struct DigitalPath {
    std::vector<Point> points;  // n + 1 entries, n >= 0

    int length() const { return static_cast<int>(points.size()) - 1; }
    const Point& at(int t) const { return points.at(static_cast<size_t>(t)); }
    const Point& start() const { return points.front(); }
    const Point& end() const { return points.back(); }
};

inline std::pair<Point, Point> endpoints(const DigitalPath& p) {
    if (p.points.empty()) throw std::invalid_argument("empty path");
    return {p.start(), p.end()};
}

inline bool is_valid_path(const DigitalImage& x, const DigitalPath& p) {
    if (p.points.empty()) return false;
    for (const Point& q : p.points)
        if (!x.contains(q)) return false;
    for (size_t t = 0; t + 1 < p.points.size(); ++t)
        if (p.points[t] != p.points[t + 1] && !x.adjacent_points(p.points[t], p.points[t + 1]))
            return false;
    return true;
}

inline DigitalPath reverse_path(const DigitalPath& p) {
    return DigitalPath{{p.points.rbegin(), p.points.rend()}};
}

/// Extend the shorter path by repeating its final value.
inline std::pair<DigitalPath, DigitalPath> synchronize(const DigitalPath& a, const DigitalPath& b) {
    DigitalPath a2 = a, b2 = b;
    while (a2.points.size() < b2.points.size()) a2.points.push_back(a2.points.back());
    while (b2.points.size() < a2.points.size()) b2.points.push_back(b2.points.back());
    return {a2, b2};
}

/// How two synchronized paths must relate pointwise. AdjacentOrEqual is the
/// working notion; Connected is the literal reading kept behind this switch,
/// under which any two paths into one component are related.
enum class PathRelation { AdjacentOrEqual, Connected };

inline bool paths_adjacent(const DigitalImage& x, const DigitalPath& a, const DigitalPath& b,
                           PathRelation rel = PathRelation::AdjacentOrEqual) {
    auto [a2, b2] = synchronize(a, b);
    if (rel == PathRelation::Connected) {
        auto parts = components(x);
        std::vector<int> comp(static_cast<size_t>(x.size()));
        for (size_t c = 0; c < parts.size(); ++c)
            for (int i : parts[c]) comp[static_cast<size_t>(i)] = static_cast<int>(c);
        for (size_t t = 0; t < a2.points.size(); ++t)
            if (comp[static_cast<size_t>(x.require_index(a2.points[t]))] !=
                comp[static_cast<size_t>(x.require_index(b2.points[t]))])
                return false;
        return true;
    }
    for (size_t t = 0; t < a2.points.size(); ++t) {
        const Point& p = a2.points[t];
        const Point& q = b2.points[t];
        if (p != q && !x.adjacent_points(p, q)) return false;
    }
    return true;
}

/// n paths sharing a start point; leg i ends at the i-th target.
struct Spider {
    std::vector<DigitalPath> legs;

    const Point& start() const { return legs.at(0).start(); }
};

inline bool is_valid_spider(const DigitalImage& x, const Spider& s) {
    if (s.legs.empty()) return false;
    for (const DigitalPath& leg : s.legs) {
        if (!is_valid_path(x, leg)) return false;
        if (leg.start() != s.legs[0].start()) return false;
    }
    return true;
}

inline Point pair_point(const Point& x, const Point& y) { return concat(x, y); }

/// Split a point of X^n back into its n factors of dimension m each.
inline std::vector<Point> split_point(const Point& u, int m, int n) {
    if (u.dim() != m * n) throw std::invalid_argument("point dimension is not m*n");
    std::vector<Point> out;
    for (int i = 0; i < n; ++i) {
        Point p;
        for (int j = 0; j < m; ++j) p.coords.push_back(u[i * m + j]);
        out.push_back(std::move(p));
    }
    return out;
}

/// Cover of a base image (X^n for TC_n with n >= 2, X itself for category);
/// parts are point lists in base coordinates.
struct CoverWitness {
    int arity = 2;
    std::vector<std::vector<Point>> parts;
};

/// Per-part motion rules: a path for each covered pair (TC), or a spider for
/// each covered tuple (TC_n).
struct SectionRule {
    std::map<Point, DigitalPath> paths;
};
struct SpiderRule {
    std::map<Point, Spider> spiders;
};

struct VerifyReport {
    bool ok = false;
    std::string message;
};

/// Check one section rule over one part of X x X: endpoints split each
/// covered pair, and rules on adjacent pairs yield related paths.
inline VerifyReport verify_section(const DigitalImage& x, const DigitalImage& base,
                                   const std::vector<Point>& part, const SectionRule& rule,
                                   PathRelation rel = PathRelation::AdjacentOrEqual) {
    VerifyReport r;
    int m = x.dimension();
    for (const Point& u : part) {
        auto it = rule.paths.find(u);
        if (it == rule.paths.end()) {
            r.message = "rule is not defined at " + to_string(u);
            return r;
        }
        const DigitalPath& p = it->second;
        if (!is_valid_path(x, p)) {
            r.message = "rule at " + to_string(u) + " is not a path in the image";
            return r;
        }
        auto xy = split_point(u, m, 2);
        if (p.start() != xy[0] || p.end() != xy[1]) {
            r.message = "path at " + to_string(u) + " does not run from " + to_string(xy[0]) +
                        " to " + to_string(xy[1]);
            return r;
        }
    }
    for (size_t a = 0; a < part.size(); ++a) {
        for (size_t b = a + 1; b < part.size(); ++b) {
            if (!base.adjacent_points(part[a], part[b])) continue;
            if (!paths_adjacent(x, rule.paths.at(part[a]), rule.paths.at(part[b]), rel)) {
                r.message = "paths at adjacent pairs " + to_string(part[a]) + " and " +
                            to_string(part[b]) + " are not pointwise related";
                return r;
            }
        }
    }
    r.ok = true;
    return r;
}

struct BoundReport {
    bool ok = false;
    int bound = 0;
    std::string message;
};

/// Verify a full topological-complexity witness: the parts cover X x X and
/// every part carries a continuous section. On success the part count is a
/// certified upper bound.
inline BoundReport verify_tc_witness(const DigitalImage& x, const CoverWitness& cover,
                                     const std::vector<SectionRule>& rules,
                                     PathRelation rel = PathRelation::AdjacentOrEqual) {
    BoundReport r;
    if (cover.arity != 2) {
        r.message = "witness arity must be 2";
        return r;
    }
    if (cover.parts.size() != rules.size()) {
        r.message = "need one rule per part";
        return r;
    }
    DigitalImage base = product(x, x);
    std::set<Point> covered;
    for (const auto& part : cover.parts)
        for (const Point& u : part) {
            if (!base.contains(u)) {
                r.message = "part member " + to_string(u) + " is not a pair over the image";
                return r;
            }
            covered.insert(u);
        }
    if (static_cast<int>(covered.size()) != base.size()) {
        r.message = "parts do not cover the pair space (" + std::to_string(covered.size()) + " of " +
                    std::to_string(base.size()) + " pairs)";
        return r;
    }
    for (size_t i = 0; i < cover.parts.size(); ++i) {
        VerifyReport s = verify_section(x, base, cover.parts[i], rules[i], rel);
        if (!s.ok) {
            r.message = "part " + std::to_string(i + 1) + ": " + s.message;
            return r;
        }
    }
    r.ok = true;
    r.bound = static_cast<int>(cover.parts.size());
    return r;
}

/// Verify one spider rule over one part of X^n.
inline VerifyReport verify_spider_section(const DigitalImage& x, const DigitalImage& base, int n,
                                          const std::vector<Point>& part, const SpiderRule& rule,
                                          PathRelation rel = PathRelation::AdjacentOrEqual) {
    VerifyReport r;
    int m = x.dimension();
    for (const Point& u : part) {
        auto it = rule.spiders.find(u);
        if (it == rule.spiders.end()) {
            r.message = "rule is not defined at " + to_string(u);
            return r;
        }
        const Spider& s = it->second;
        if (static_cast<int>(s.legs.size()) != n) {
            r.message = "spider at " + to_string(u) + " must have " + std::to_string(n) + " legs";
            return r;
        }
        if (!is_valid_spider(x, s)) {
            r.message = "spider at " + to_string(u) + " is malformed (legs must share their start)";
            return r;
        }
        auto targets = split_point(u, m, n);
        for (int i = 0; i < n; ++i)
            if (s.legs[static_cast<size_t>(i)].end() != targets[static_cast<size_t>(i)]) {
                r.message = "leg " + std::to_string(i + 1) + " at " + to_string(u) +
                            " does not end at " + to_string(targets[static_cast<size_t>(i)]);
                return r;
            }
    }
    for (size_t a = 0; a < part.size(); ++a)
        for (size_t b = a + 1; b < part.size(); ++b) {
            if (!base.adjacent_points(part[a], part[b])) continue;
            const Spider& sa = rule.spiders.at(part[a]);
            const Spider& sb = rule.spiders.at(part[b]);
            for (int i = 0; i < n; ++i)
                if (!paths_adjacent(x, sa.legs[static_cast<size_t>(i)], sb.legs[static_cast<size_t>(i)], rel)) {
                    r.message = "leg " + std::to_string(i + 1) + " breaks at adjacent tuples " +
                                to_string(part[a]) + " and " + to_string(part[b]);
                    return r;
                }
        }
    r.ok = true;
    return r;
}

/// Verify a witness for the n-fold planning problem over X^n (n >= 2).
inline BoundReport verify_tcn_witness(const DigitalImage& x, int n, const CoverWitness& cover,
                                      const std::vector<SpiderRule>& rules,
                                      PathRelation rel = PathRelation::AdjacentOrEqual) {
    BoundReport r;
    if (n < 2) {
        r.message = "n must be at least 2";
        return r;
    }
    if (cover.arity != n) {
        r.message = "witness arity does not match n";
        return r;
    }
    if (cover.parts.size() != rules.size()) {
        r.message = "need one rule per part";
        return r;
    }
    DigitalImage base = power(x, n);
    std::set<Point> covered;
    for (const auto& part : cover.parts)
        for (const Point& u : part) {
            if (!base.contains(u)) {
                r.message = "part member " + to_string(u) + " is not a tuple over the image";
                return r;
            }
            covered.insert(u);
        }
    if (static_cast<int>(covered.size()) != base.size()) {
        r.message = "parts do not cover the tuple space";
        return r;
    }
    for (size_t i = 0; i < cover.parts.size(); ++i) {
        VerifyReport s = verify_spider_section(x, base, n, cover.parts[i], rules[i], rel);
        if (!s.ok) {
            r.message = "part " + std::to_string(i + 1) + ": " + s.message;
            return r;
        }
    }
    r.ok = true;
    r.bound = static_cast<int>(cover.parts.size());
    return r;
}

/// Category witness: parts cover X and each part contracts within X (the
/// script starts at the inclusion and ends constant; intermediate images may
/// leave the part but stay in X).
struct CatWitness {
    std::vector<std::vector<Point>> parts;
    std::vector<HomotopyScript> contractions;  // domain: the part; codomain: X
};

inline BoundReport verify_cat_witness(const DigitalImage& x, const CatWitness& w) {
    BoundReport r;
    if (w.parts.size() != w.contractions.size()) {
        r.message = "need one contraction per part";
        return r;
    }
    std::set<Point> covered;
    for (const auto& part : w.parts)
        for (const Point& p : part) {
            if (!x.contains(p)) {
                r.message = "part member " + to_string(p) + " is not in the image";
                return r;
            }
            covered.insert(p);
        }
    if (static_cast<int>(covered.size()) != x.size()) {
        r.message = "parts do not cover the image";
        return r;
    }
    for (size_t i = 0; i < w.parts.size(); ++i) {
        const HomotopyScript& s = w.contractions[i];
        DigitalImage part_image = induced_subimage(x, w.parts[i]);
        if (!(s.domain == part_image)) {
            r.message = "part " + std::to_string(i + 1) + ": script domain is not the part";
            return r;
        }
        if (!(s.codomain == x)) {
            r.message = "part " + std::to_string(i + 1) + ": script codomain is not the image";
            return r;
        }
        HomotopyReport h = verify_homotopy(s);
        if (!h.ok) {
            r.message = "part " + std::to_string(i + 1) + ": " + h.message;
            return r;
        }
        for (int k = 0; k < s.domain.size(); ++k)
            if (s.codomain.point(s.steps.front()[static_cast<size_t>(k)]) != s.domain.point(k)) {
                r.message = "part " + std::to_string(i + 1) + ": script does not start at the inclusion";
                return r;
            }
        int last = s.steps.back().front();
        for (int v : s.steps.back())
            if (v != last) {
                r.message = "part " + std::to_string(i + 1) + ": script does not end at a constant";
                return r;
            }
    }
    r.ok = true;
    r.bound = static_cast<int>(w.parts.size());
    return r;
}

/// Multiplication and inversion tables for a group structure on X's points.
struct GroupTable {
    std::vector<std::vector<int>> mul;  // mul[i][j] = index of x_i * x_j
};

struct GroupReport {
    bool ok = false;
    bool axioms_ok = false;
    int identity = -1;
    std::vector<int> inverse;
    std::string message;
};

/// Group axioms first (reported separately), then continuity of the
/// multiplication on the product and of the inversion on X.
inline GroupReport group_check(const DigitalImage& x, const GroupTable& t) {
    GroupReport r;
    int n = x.size();
    if (static_cast<int>(t.mul.size()) != n) {
        r.message = "axioms: table is not total";
        return r;
    }
    for (const auto& row : t.mul) {
        if (static_cast<int>(row.size()) != n) {
            r.message = "axioms: table is not total";
            return r;
        }
        for (int v : row)
            if (v < 0 || v >= n) {
                r.message = "axioms: table value out of range";
                return r;
            }
    }
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            ok = t.mul[static_cast<size_t>(e)][static_cast<size_t>(i)] == i &&
                 t.mul[static_cast<size_t>(i)][static_cast<size_t>(e)] == i;
        if (ok) {
            r.identity = e;
            break;
        }
    }
    if (r.identity < 0) {
        r.message = "axioms: no identity element";
        return r;
    }
    r.inverse.assign(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (t.mul[static_cast<size_t>(i)][static_cast<size_t>(j)] == r.identity &&
                t.mul[static_cast<size_t>(j)][static_cast<size_t>(i)] == r.identity) {
                r.inverse[static_cast<size_t>(i)] = j;
                break;
            }
        if (r.inverse[static_cast<size_t>(i)] < 0) {
            r.message = "axioms: " + to_string(x.point(i)) + " has no inverse";
            return r;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                int ij = t.mul[static_cast<size_t>(i)][static_cast<size_t>(j)];
                int jk = t.mul[static_cast<size_t>(j)][static_cast<size_t>(k)];
                if (t.mul[static_cast<size_t>(ij)][static_cast<size_t>(k)] !=
                    t.mul[static_cast<size_t>(i)][static_cast<size_t>(jk)]) {
                    r.message = "axioms: multiplication is not associative";
                    return r;
                }
            }
    r.axioms_ok = true;

    DigitalImage base = product(x, x);
    int m = x.dimension();
    for (auto [a, b] : base.edge_pairs()) {
        auto ua = split_point(base.point(a), m, 2);
        auto ub = split_point(base.point(b), m, 2);
        int pa = t.mul[static_cast<size_t>(x.require_index(ua[0]))][static_cast<size_t>(x.require_index(ua[1]))];
        int pb = t.mul[static_cast<size_t>(x.require_index(ub[0]))][static_cast<size_t>(x.require_index(ub[1]))];
        if (pa != pb && !x.adjacent_indices(pa, pb)) {
            r.message = "continuity: multiplication breaks at " + to_string(base.point(a)) + " ~ " +
                        to_string(base.point(b));
            return r;
        }
    }
    for (auto [i, j] : x.edge_pairs()) {
        int ii = r.inverse[static_cast<size_t>(i)], jj = r.inverse[static_cast<size_t>(j)];
        if (ii != jj && !x.adjacent_indices(ii, jj)) {
            r.message = "continuity: inversion breaks at " + to_string(x.point(i)) + " ~ " +
                        to_string(x.point(j));
            return r;
        }
    }
    r.ok = true;
    return r;
}

/// Certified route for group-like images: a verified group structure plus a
/// verified category witness for the (n-1)-fold product gives the n-fold
/// planning bound.
inline BoundReport tcn_upper_via_group(const DigitalImage& h, const GroupTable& t, int n,
                                       const CatWitness& cat_witness) {
    BoundReport r;
    if (n < 2) {
        r.message = "n must be at least 2";
        return r;
    }
    GroupReport g = group_check(h, t);
    if (!g.ok) {
        r.message = "group check failed: " + g.message;
        return r;
    }
    if (!is_connected(h)) {
        r.message = "image is not connected";
        return r;
    }
    DigitalImage hpow = power(h, n - 1);
    BoundReport c = verify_cat_witness(hpow, cat_witness);
    if (!c.ok) {
        r.message = "category witness failed: " + c.message;
        return r;
    }
    r.ok = true;
    r.bound = c.bound;
    return r;
}

/// Turn a verified contraction of X into a global section over X x X: run the
/// start point's track to the centre, then the end point's track backwards.
inline SectionRule section_from_contraction(const DigitalImage& x, const ContractionCertificate& cert) {
    SectionRule rule;
    const HomotopyScript& s = cert.script;
    int nsteps = s.time_max();
    for (int a = 0; a < x.size(); ++a) {
        for (int b = 0; b < x.size(); ++b) {
            DigitalPath p;
            for (int t = 0; t <= nsteps; ++t)
                p.points.push_back(x.point(s.steps[static_cast<size_t>(t)][static_cast<size_t>(a)]));
            for (int t = nsteps; t >= 0; --t)
                p.points.push_back(x.point(s.steps[static_cast<size_t>(t)][static_cast<size_t>(b)]));
            rule.paths.emplace(pair_point(x.point(a), x.point(b)), std::move(p));
        }
    }
    return rule;
}

/// A cycle through a slice {(x, y0)} of the part, when the ambient image has
/// no short cycles, rules out any continuous section over the part: sliding
/// the cycle's paths gives a free null-homotopy of an essential loop, which
/// degree-four-free images do not admit.
struct SectionObstruction {
    bool found = false;
    Point fixed;           // the frozen coordinate y0 (or x0)
    bool fixed_is_second = true;
    std::string message;
};

inline SectionObstruction find_section_obstruction(const DigitalImage& x,
                                                   const std::vector<Point>& part) {
    SectionObstruction out;
    int g = girth(x);
    if (g != 0 && g < 5) return out;  // short cycles defeat the argument
    int m = x.dimension();
    auto has_cycle = [&](const std::set<Point>& pts) {
        if (pts.size() < 3) return false;
        DigitalImage sub = induced_subimage(x, {pts.begin(), pts.end()});
        return static_cast<size_t>(sub.size()) - components(sub).size() <
               sub.edge_pairs().size();  // edges > vertices - components
    };
    std::map<Point, std::set<Point>> by_second, by_first;
    for (const Point& u : part) {
        auto xy = split_point(u, m, 2);
        by_second[xy[1]].insert(xy[0]);
        by_first[xy[0]].insert(xy[1]);
    }
    for (const auto& [y0, xs] : by_second) {
        if (has_cycle(xs)) {
            out.found = true;
            out.fixed = y0;
            out.fixed_is_second = true;
            out.message = "part contains an essential loop of start points against the fixed end " +
                          to_string(y0) + " and the image has no cycles shorter than 5";
            return out;
        }
    }
    for (const auto& [x0, ys] : by_first) {
        if (has_cycle(ys)) {
            out.found = true;
            out.fixed = x0;
            out.fixed_is_second = false;
            out.message = "part contains an essential loop of end points against the fixed start " +
                          to_string(x0) + " and the image has no cycles shorter than 5";
            return out;
        }
    }
    return out;
}

enum class SynthesisStatus { Found, Impossible, Unknown };

struct SynthesisResult {
    SynthesisStatus status = SynthesisStatus::Unknown;
    SectionRule rule;
    long nodes_used = 0;
    std::string message;
};

namespace detail {

/// Walks from `from` to `to` of length <= max_len, produced in order of
/// increasing length, then lexicographically by intermediate point index.
class WalkEnumerator {
  public:
    WalkEnumerator(const DigitalImage& x, int from, int to, int max_len)
        : x_(x), from_(from), to_(to), max_len_(max_len) {}

    template <typename Fn>
    bool for_each(Fn&& fn) {  // fn returns true to stop
        std::vector<int> dist = bfs_dist(to_);
        if (dist[static_cast<size_t>(from_)] < 0) return false;
        for (int len = dist[static_cast<size_t>(from_)]; len <= max_len_; ++len) {
            walk_.assign(1, from_);
            if (extend(len, dist, fn)) return true;
        }
        return false;
    }

  private:
    std::vector<int> bfs_dist(int s) const {
        std::vector<int> dist(static_cast<size_t>(x_.size()), -1);
        std::vector<int> queue{s};
        dist[static_cast<size_t>(s)] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi)
            for (int w : x_.neighbor_indices(queue[qi]))
                if (dist[static_cast<size_t>(w)] < 0) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(queue[qi])] + 1;
                    queue.push_back(w);
                }
        return dist;
    }

    template <typename Fn>
    bool extend(int len, const std::vector<int>& dist, Fn&& fn) {
        int cur = walk_.back();
        int remaining = len - static_cast<int>(walk_.size()) + 1;
        if (remaining == 0) {
            if (cur != to_) return false;
            DigitalPath p;
            for (int v : walk_) p.points.push_back(x_.point(v));
            return fn(p);
        }
        if (dist[static_cast<size_t>(cur)] > remaining) return false;  // cannot reach in time
        std::vector<int> nexts = x_.neighbor_indices(cur);
        nexts.push_back(cur);
        std::sort(nexts.begin(), nexts.end());
        for (int nx : nexts) {
            walk_.push_back(nx);
            if (extend(len, dist, fn)) return true;
            walk_.pop_back();
        }
        return false;
    }

    const DigitalImage& x_;
    int from_, to_, max_len_;
    std::vector<int> walk_;
};

}  // namespace detail

/// Backtracking search for a continuous section over one part of X x X. The
/// result is re-verified before it is returned; Impossible is reported either
/// from the loop obstruction or from exhausting the bounded search space.
inline SynthesisResult synthesize_section(const DigitalImage& x, const std::vector<Point>& part,
                                          long budget = 1000000, int max_len = -1,
                                          PathRelation rel = PathRelation::AdjacentOrEqual) {
    SynthesisResult res;
    if (max_len < 0) max_len = diameter(x) + 4;

    if (rel == PathRelation::AdjacentOrEqual) {
        SectionObstruction obs = find_section_obstruction(x, part);
        if (obs.found) {
            res.status = SynthesisStatus::Impossible;
            res.message = obs.message;
            return res;
        }
    }

    DigitalImage base = product(x, x);
    int m = x.dimension();
    std::vector<Point> order = part;
    std::sort(order.begin(), order.end());
    // adjacency lists among earlier part members
    std::vector<std::vector<size_t>> earlier(order.size());
    for (size_t a = 0; a < order.size(); ++a)
        for (size_t b = 0; b < a; ++b)
            if (base.adjacent_points(order[a], order[b])) earlier[a].push_back(b);

    std::vector<DigitalPath> chosen(order.size());
    long nodes = 0;
    bool out_of_budget = false;

    std::function<bool(size_t)> assign = [&](size_t idx) -> bool {
        if (idx == order.size()) return true;
        auto xy = split_point(order[idx], m, 2);
        detail::WalkEnumerator gen(x, x.require_index(xy[0]), x.require_index(xy[1]), max_len);
        bool found = gen.for_each([&](const DigitalPath& cand) -> bool {
            if (++nodes > budget) {
                out_of_budget = true;
                return true;  // abort enumeration
            }
            for (size_t e : earlier[idx])
                if (!paths_adjacent(x, cand, chosen[e], rel)) return false;
            chosen[idx] = cand;
            if (assign(idx + 1)) return true;
            return out_of_budget;
        });
        return found && !out_of_budget;
    };

    bool ok = assign(0);
    res.nodes_used = nodes;
    if (out_of_budget) {
        res.status = SynthesisStatus::Unknown;
        res.message = "search budget exhausted";
        return res;
    }
    if (!ok) {
        res.status = SynthesisStatus::Impossible;
        res.message = "exhausted all rules with path length <= " + std::to_string(max_len);
        return res;
    }
    for (size_t i = 0; i < order.size(); ++i) res.rule.paths.emplace(order[i], chosen[i]);
    VerifyReport check = verify_section(x, base, part, res.rule, rel);
    if (!check.ok) throw std::logic_error("synthesized section failed verification: " + check.message);
    res.status = SynthesisStatus::Found;
    return res;
}

struct SpiderSynthesisResult {
    SynthesisStatus status = SynthesisStatus::Unknown;
    SpiderRule rule;
    long nodes_used = 0;
    std::string message;
};

/// Backtracking search for a spider rule over one part of X^n.
inline SpiderSynthesisResult synthesize_spider_rule(const DigitalImage& x, int n,
                                                    const std::vector<Point>& part,
                                                    long budget = 1000000, int max_len = -1,
                                                    PathRelation rel = PathRelation::AdjacentOrEqual) {
    SpiderSynthesisResult res;
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (max_len < 0) max_len = diameter(x) + 2;

    DigitalImage base = power(x, n);
    int m = x.dimension();
    std::vector<Point> order = part;
    std::sort(order.begin(), order.end());
    std::vector<std::vector<size_t>> earlier(order.size());
    for (size_t a = 0; a < order.size(); ++a)
        for (size_t b = 0; b < a; ++b)
            if (base.adjacent_points(order[a], order[b])) earlier[a].push_back(b);

    std::vector<Spider> chosen(order.size());
    long nodes = 0;
    bool out_of_budget = false;

    // enumerate spiders for a tuple: start point ascending, then legs in order
    std::function<bool(size_t, const std::vector<Point>&, int, Spider&)> build_legs =
        [&](size_t idx, const std::vector<Point>& targets, int start, Spider& partial) -> bool {
        if (partial.legs.size() == targets.size()) {
            for (size_t e : earlier[idx]) {
                for (int leg = 0; leg < n; ++leg)
                    if (!paths_adjacent(x, partial.legs[static_cast<size_t>(leg)],
                                        chosen[e].legs[static_cast<size_t>(leg)], rel))
                        return false;
            }
            chosen[idx] = partial;
            return true;
        }
        size_t leg = partial.legs.size();
        detail::WalkEnumerator gen(x, start, x.require_index(targets[leg]), max_len);
        bool done = gen.for_each([&](const DigitalPath& cand) -> bool {
            if (++nodes > budget) {
                out_of_budget = true;
                return true;
            }
            // prune: this leg must already relate to earlier tuples' same leg
            for (size_t e : earlier[idx])
                if (!paths_adjacent(x, cand, chosen[e].legs[leg], rel)) return false;
            partial.legs.push_back(cand);
            if (build_legs(idx, targets, start, partial)) return true;
            partial.legs.pop_back();
            return out_of_budget;
        });
        return done && !out_of_budget;
    };

    std::function<bool(size_t)> assign = [&](size_t idx) -> bool {
        if (idx == order.size()) return true;
        auto targets = split_point(order[idx], m, n);
        for (int start = 0; start < x.size(); ++start) {
            if (++nodes > budget) {
                out_of_budget = true;
                return false;
            }
            Spider partial;
            if (build_legs(idx, targets, start, partial)) {
                if (assign(idx + 1)) return true;
                if (out_of_budget) return false;
            }
            if (out_of_budget) return false;
        }
        return false;
    };

    bool ok = assign(0);
    res.nodes_used = nodes;
    if (out_of_budget) {
        res.status = SynthesisStatus::Unknown;
        res.message = "search budget exhausted";
        return res;
    }
    if (!ok) {
        res.status = SynthesisStatus::Impossible;
        res.message = "exhausted all spider rules with leg length <= " + std::to_string(max_len);
        return res;
    }
    for (size_t i = 0; i < order.size(); ++i) res.rule.spiders.emplace(order[i], chosen[i]);
    VerifyReport check = verify_spider_section(x, base, n, part, res.rule, rel);
    if (!check.ok) throw std::logic_error("synthesized spider rule failed verification: " + check.message);
    res.status = SynthesisStatus::Found;
    return res;
}

enum class Tc1Verdict { Yes, No, Unknown };

struct Tc1Result {
    Tc1Verdict verdict = Tc1Verdict::Unknown;
    std::string reason;
    std::optional<SectionRule> witness;  // global section when verdict is Yes
    long nodes_used = 0;
};

/// Decide whether a single global continuous section over X x X exists.
/// Routes, in order: the loop obstruction (sound refutation), a contraction
/// search (a contraction yields a verified global section), and finally the
/// bounded backtracking search.
inline Tc1Result tc_is_one(const DigitalImage& x, long budget = 1000000, int max_steps = 32,
                           PathRelation rel = PathRelation::AdjacentOrEqual, int max_len = -1) {
    Tc1Result res;
    DigitalImage base = product(x, x);
    std::vector<Point> all_pairs = base.points();

    if (rel == PathRelation::AdjacentOrEqual) {
        SectionObstruction obs = find_section_obstruction(x, all_pairs);
        if (obs.found) {
            res.verdict = Tc1Verdict::No;
            res.reason = obs.message;
            return res;
        }
    }

    ContractionSearchResult c = find_contraction(x, max_steps, budget / 2);
    res.nodes_used += c.nodes_used;
    if (c.status == ContractionStatus::Found) {
        SectionRule rule = section_from_contraction(x, *c.certificate);
        VerifyReport check = verify_section(x, base, all_pairs, rule, rel);
        if (!check.ok) throw std::logic_error("section from contraction failed verification");
        res.verdict = Tc1Verdict::Yes;
        res.reason = "image contracts in " + std::to_string(c.certificate->script.time_max()) +
                     " steps; the induced global section verifies";
        res.witness = std::move(rule);
        return res;
    }

    SynthesisResult s = synthesize_section(x, all_pairs, budget / 2, max_len, rel);
    res.nodes_used += s.nodes_used;
    switch (s.status) {
        case SynthesisStatus::Found:
            res.verdict = Tc1Verdict::Yes;
            res.reason = "global section found by search";
            res.witness = std::move(s.rule);
            break;
        case SynthesisStatus::Impossible:
            res.verdict = Tc1Verdict::No;
            res.reason = s.message;
            break;
        case SynthesisStatus::Unknown:
            res.verdict = Tc1Verdict::Unknown;
            res.reason = s.message;
            break;
    }
    return res;
}

}  // namespace dtop
