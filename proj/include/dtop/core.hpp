#pragma once

// Core types for finite digital images: lattice points, c_k adjacencies,
// explicit edge relations, digital maps and their continuity.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dtop {

using Coord = int;

/// A lattice point in Z^m, m = coords.size().
struct Point {
    std::vector<Coord> coords;

    Point() = default;
    Point(std::initializer_list<Coord> cs) : coords(cs) {}
    explicit Point(std::vector<Coord> cs) : coords(std::move(cs)) {}

    int dim() const { return static_cast<int>(coords.size()); }
    Coord operator[](int i) const { return coords[static_cast<size_t>(i)]; }

    auto operator<=>(const Point&) const = default;
};

inline std::string to_string(const Point& p) {
    std::string s = "(";
    for (int i = 0; i < p.dim(); ++i) {
        if (i) s += ' ';
        s += std::to_string(p[i]);
    }
    return s + ")";
}

/// Concatenate coordinates, e.g. for points of a cartesian product.
inline Point concat(const Point& a, const Point& b) {
    std::vector<Coord> cs = a.coords;
    cs.insert(cs.end(), b.coords.begin(), b.coords.end());
    return Point(std::move(cs));
}

/// c_k adjacency on Z^m: at most k coordinates differ by exactly one and
/// all other coordinates are equal. Aliases: 2 (m=1), 4/8 (m=2), 6/18/26 (m=3).
struct AdjacencyKind {
    int k = 1;

    static AdjacencyKind c(int k) { return AdjacencyKind{k}; }

    /// Resolve an alias neighbour count (2,4,8,6,18,26) for dimension m.
    static AdjacencyKind from_alias(int alias, int m) {
        struct Row { int alias, m, k; };
        static constexpr Row rows[] = {{2, 1, 1},  {4, 2, 1},  {8, 2, 2},
                                       {6, 3, 1},  {18, 3, 2}, {26, 3, 3}};
        for (const Row& r : rows)
            if (r.alias == alias && r.m == m) return AdjacencyKind{r.k};
        throw std::invalid_argument("no c_k adjacency with " + std::to_string(alias) +
                                    " neighbours in dimension " + std::to_string(m));
    }

    /// Neighbour-count alias for dimension m (3^m coverage minus centre for k=m).
    int alias(int m) const {
        if (m == 1 && k == 1) return 2;
        if (m == 2) return k == 1 ? 4 : 8;
        if (m == 3) return k == 1 ? 6 : (k == 2 ? 18 : 26);
        return -1;  // no conventional alias
    }

    bool operator==(const AdjacencyKind&) const = default;
};

/// Irreflexive c_k adjacency test. Throws on dimension mismatch or p == q.
inline bool adjacent(const Point& p, const Point& q, AdjacencyKind kind) {
    if (p.dim() != q.dim()) throw std::invalid_argument("adjacent: dimension mismatch");
    if (p == q) throw std::invalid_argument("adjacent: points coincide (adjacency is irreflexive)");
    int unit_diffs = 0;
    for (int i = 0; i < p.dim(); ++i) {
        Coord d = p[i] > q[i] ? p[i] - q[i] : q[i] - p[i];
        if (d == 1)
            ++unit_diffs;
        else if (d != 0)
            return false;
    }
    return unit_diffs >= 1 && unit_diffs <= kind.k;
}

/// Equal-or-adjacent convenience used by continuity checks.
inline bool close_or_equal(const Point& p, const Point& q, AdjacencyKind kind) {
    return p == q || adjacent(p, q, kind);
}

/// A finite digital image: a non-empty set of points of one dimension plus an
/// adjacency relation, either a c_k kind or an explicit symmetric edge list
/// (the latter is produced by cartesian products). Points are stored sorted;
/// optional labels ride along for fixture readability only.
class DigitalImage {
  public:
    DigitalImage() = default;

    /// Grid image with c_k adjacency. Dimension is capped at 4; larger spaces
    /// arise only as products and use the explicit relation.
    DigitalImage(int dimension, AdjacencyKind kind, std::vector<Point> pts,
                 std::vector<std::string> labels = {})
        : dim_(dimension), kind_(kind) {
        if (dimension < 1 || dimension > 4)
            throw std::invalid_argument("grid images support dimensions 1..4");
        if (kind.k < 1 || kind.k > dimension)
            throw std::invalid_argument("adjacency c_k requires 1 <= k <= dimension");
        init_points(std::move(pts), std::move(labels));
    }

    /// Image with an explicit edge relation; edge indices refer to the order
    /// of `pts` as given (they are remapped when points are sorted).
    DigitalImage(int dimension, std::vector<Point> pts,
                 std::vector<std::pair<int, int>> edges,
                 std::vector<std::string> labels = {})
        : dim_(dimension), explicit_(true) {
        if (dimension < 1) throw std::invalid_argument("dimension must be positive");
        std::vector<int> remap = init_points(std::move(pts), std::move(labels));
        edges_.assign(points_.size(), {});
        for (auto [a0, b0] : edges) {
            if (a0 < 0 || b0 < 0 || a0 >= size() || b0 >= size())
                throw std::invalid_argument("edge endpoint out of range");
            int a = remap[static_cast<size_t>(a0)], b = remap[static_cast<size_t>(b0)];
            if (a == b) throw std::invalid_argument("edge relation must be irreflexive");
            edges_[static_cast<size_t>(a)].insert(b);
            edges_[static_cast<size_t>(b)].insert(a);
        }
    }

    int dimension() const { return dim_; }
    bool has_explicit_relation() const { return explicit_; }
    AdjacencyKind kind() const {
        if (explicit_) throw std::logic_error("image carries an explicit relation, not a c_k kind");
        return kind_;
    }
    /// Adjacency alias name for reporting: "2","4","8","6","18","26" or "product".
    std::string adjacency_name() const {
        if (explicit_) return "product";
        int a = kind_.alias(dim_);
        return a > 0 ? std::to_string(a) : ("c" + std::to_string(kind_.k));
    }

    int size() const { return static_cast<int>(points_.size()); }
    const std::vector<Point>& points() const { return points_; }
    const Point& point(int i) const { return points_.at(static_cast<size_t>(i)); }
    const std::string& label(int i) const { return labels_.at(static_cast<size_t>(i)); }

    bool contains(const Point& p) const { return index_of(p) >= 0; }
    int index_of(const Point& p) const {
        auto it = std::lower_bound(points_.begin(), points_.end(), p);
        if (it == points_.end() || *it != p) return -1;
        return static_cast<int>(it - points_.begin());
    }
    int require_index(const Point& p) const {
        int i = index_of(p);
        if (i < 0) throw std::invalid_argument("point " + to_string(p) + " is not in the image");
        return i;
    }

    bool adjacent_indices(int i, int j) const {
        if (i == j) return false;
        if (explicit_) return edges_[static_cast<size_t>(i)].count(j) > 0;
        return dtop::adjacent(points_[static_cast<size_t>(i)], points_[static_cast<size_t>(j)], kind_);
    }
    bool adjacent_points(const Point& p, const Point& q) const {
        if (explicit_) return edges_[static_cast<size_t>(require_index(p))].count(require_index(q)) > 0;
        if (p == q) return false;
        return dtop::adjacent(p, q, kind_);
    }

    /// Neighbour indices of point i, ascending.
    std::vector<int> neighbor_indices(int i) const {
        std::vector<int> out;
        if (explicit_) {
            out.assign(edges_[static_cast<size_t>(i)].begin(), edges_[static_cast<size_t>(i)].end());
        } else {
            for (int j = 0; j < size(); ++j)
                if (j != i && adjacent_indices(i, j)) out.push_back(j);
        }
        return out;
    }

    /// All unordered adjacent index pairs (i < j), ascending.
    std::vector<std::pair<int, int>> edge_pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < size(); ++i)
            for (int j : neighbor_indices(i))
                if (i < j) out.emplace_back(i, j);
        return out;
    }

    bool operator==(const DigitalImage& other) const {
        return dim_ == other.dim_ && explicit_ == other.explicit_ && points_ == other.points_ &&
               (explicit_ ? edges_ == other.edges_ : kind_ == other.kind_);
    }

  private:
    /// Sorts points; returns the map from the caller's ordering to the stored one.
    std::vector<int> init_points(std::vector<Point> pts, std::vector<std::string> labels) {
        if (pts.empty()) throw std::invalid_argument("digital image must be non-empty");
        for (const Point& p : pts)
            if (p.dim() != dim_)
                throw std::invalid_argument("point " + to_string(p) + " does not have dimension " +
                                            std::to_string(dim_));
        std::vector<size_t> order(pts.size());
        for (size_t i = 0; i < pts.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return pts[a] < pts[b]; });
        labels.resize(pts.size());
        points_.reserve(pts.size());
        labels_.reserve(pts.size());
        std::vector<int> remap(pts.size());
        for (size_t r = 0; r < order.size(); ++r) {
            points_.push_back(pts[order[r]]);
            labels_.push_back(labels[order[r]]);
            remap[order[r]] = static_cast<int>(r);
        }
        for (size_t i = 1; i < points_.size(); ++i)
            if (points_[i] == points_[i - 1])
                throw std::invalid_argument("duplicate point " + to_string(points_[i]));
        return remap;
    }

    int dim_ = 1;
    AdjacencyKind kind_{1};
    bool explicit_ = false;
    std::vector<Point> points_;
    std::vector<std::string> labels_;
    std::vector<std::set<int>> edges_;  // explicit relation only
};

/// Neighbours of p inside X (errors when p is not in X).
inline std::vector<Point> neighbors(const DigitalImage& X, const Point& p) {
    int i = X.require_index(p);
    std::vector<Point> out;
    for (int j : X.neighbor_indices(i)) out.push_back(X.point(j));
    return out;
}

/// Partition of the image's point indices into maximal connected subsets,
/// each sorted, parts ordered by their least element.
inline std::vector<std::vector<int>> components(const DigitalImage& X) {
    std::vector<int> comp(static_cast<size_t>(X.size()), -1);
    std::vector<std::vector<int>> parts;
    for (int s = 0; s < X.size(); ++s) {
        if (comp[static_cast<size_t>(s)] >= 0) continue;
        int id = static_cast<int>(parts.size());
        parts.push_back({});
        std::vector<int> stack{s};
        comp[static_cast<size_t>(s)] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            parts[static_cast<size_t>(id)].push_back(v);
            for (int w : X.neighbor_indices(v)) {
                if (comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(parts[static_cast<size_t>(id)].begin(), parts[static_cast<size_t>(id)].end());
    }
    return parts;
}

inline bool is_connected(const DigitalImage& X) { return components(X).size() == 1; }

/// A total map between digital images, tabulated point-by-point.
class DigitalMap {
  public:
    DigitalMap(DigitalImage domain, DigitalImage codomain, std::vector<int> table)
        : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {
        if (static_cast<int>(table_.size()) != domain_.size())
            throw std::invalid_argument("map table must cover exactly the domain");
        for (int v : table_)
            if (v < 0 || v >= codomain_.size())
                throw std::invalid_argument("map value out of codomain range");
    }

    static DigitalMap from_pairs(const DigitalImage& domain, const DigitalImage& codomain,
                                 const std::vector<std::pair<Point, Point>>& pairs) {
        std::vector<int> table(static_cast<size_t>(domain.size()), -1);
        for (const auto& [x, y] : pairs) {
            int i = domain.require_index(x);
            int j = codomain.require_index(y);
            if (table[static_cast<size_t>(i)] >= 0 && table[static_cast<size_t>(i)] != j)
                throw std::invalid_argument("conflicting values for " + to_string(x));
            table[static_cast<size_t>(i)] = j;
        }
        for (size_t i = 0; i < table.size(); ++i)
            if (table[i] < 0)
                throw std::invalid_argument("map not defined at " + to_string(domain.point(static_cast<int>(i))));
        return DigitalMap(domain, codomain, std::move(table));
    }

    static DigitalMap identity(const DigitalImage& X) {
        std::vector<int> t(static_cast<size_t>(X.size()));
        for (int i = 0; i < X.size(); ++i) t[static_cast<size_t>(i)] = i;
        return DigitalMap(X, X, std::move(t));
    }

    static DigitalMap constant(const DigitalImage& X, const Point& c) {
        int j = X.require_index(c);
        return DigitalMap(X, X, std::vector<int>(static_cast<size_t>(X.size()), j));
    }

    const DigitalImage& domain() const { return domain_; }
    const DigitalImage& codomain() const { return codomain_; }
    int apply_index(int i) const { return table_.at(static_cast<size_t>(i)); }
    Point apply(const Point& p) const { return codomain_.point(apply_index(domain_.require_index(p))); }
    const std::vector<int>& table() const { return table_; }

  private:
    DigitalImage domain_;
    DigitalImage codomain_;
    std::vector<int> table_;
};

/// Pointwise continuity: adjacent points map to equal or adjacent points.
/// This is the standard equivalent of "connected sets map to connected sets".
inline bool is_continuous(const DigitalMap& f) {
    const DigitalImage& X = f.domain();
    const DigitalImage& Y = f.codomain();
    for (auto [i, j] : X.edge_pairs()) {
        int a = f.apply_index(i), b = f.apply_index(j);
        if (a != b && !Y.adjacent_indices(a, b)) return false;
    }
    return true;
}

/// Bijective, continuous, and continuous inverse.
inline bool is_isomorphism(const DigitalMap& f) {
    const DigitalImage& X = f.domain();
    const DigitalImage& Y = f.codomain();
    if (X.size() != Y.size()) return false;
    std::vector<int> inverse(static_cast<size_t>(Y.size()), -1);
    for (int i = 0; i < X.size(); ++i) {
        int j = f.apply_index(i);
        if (inverse[static_cast<size_t>(j)] >= 0) return false;
        inverse[static_cast<size_t>(j)] = i;
    }
    if (!is_continuous(f)) return false;
    for (auto [i, j] : Y.edge_pairs()) {
        int a = inverse[static_cast<size_t>(i)], b = inverse[static_cast<size_t>(j)];
        if (a != b && !X.adjacent_indices(a, b)) return false;
    }
    return true;
}

/// Cartesian product with the componentwise adjacency: two distinct pairs are
/// adjacent when each component pair is equal or adjacent. The result stores
/// the relation explicitly (it is not a c_k relation in general).
inline DigitalImage product(const DigitalImage& X, const DigitalImage& Y) {
    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(X.size()) * static_cast<size_t>(Y.size()));
    for (const Point& a : X.points())
        for (const Point& b : Y.points()) pts.push_back(concat(a, b));

    int nx = X.size(), ny = Y.size();
    auto pair_index = [&](int i, int j) { return i * ny + j; };
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            for (int i2 = i; i2 < nx; ++i2) {
                bool xeq = (i2 == i);
                if (!xeq && !X.adjacent_indices(i, i2)) continue;
                for (int j2 = (xeq ? j + 1 : 0); j2 < ny; ++j2) {
                    bool yeq = (j2 == j);
                    if (!yeq && !Y.adjacent_indices(j, j2)) continue;
                    edges.emplace_back(pair_index(i, j), pair_index(i2, j2));
                }
            }
        }
    }
    return DigitalImage(X.dimension() + Y.dimension(), std::move(pts), std::move(edges));
}

inline DigitalImage power(const DigitalImage& X, int n) {
    if (n < 1) throw std::invalid_argument("power requires n >= 1");
    DigitalImage acc = X;
    for (int i = 1; i < n; ++i) acc = product(acc, X);
    return acc;
}

struct WedgeCheck {
    bool ok = false;
    std::string reason;
};

/// Validate the wedge preconditions: the two images share exactly the point x0
/// and no other cross pair is adjacent.
inline WedgeCheck check_wedge(const DigitalImage& X, const DigitalImage& Y, const Point& x0) {
    WedgeCheck r;
    if (X.dimension() != Y.dimension()) {
        r.reason = "dimension mismatch";
        return r;
    }
    if (X.has_explicit_relation() || Y.has_explicit_relation()) {
        r.reason = "wedge requires c_k images";
        return r;
    }
    if (!(X.kind() == Y.kind())) {
        r.reason = "adjacency kinds differ";
        return r;
    }
    if (!X.contains(x0) || !Y.contains(x0)) {
        r.reason = "wedge point must lie in both images";
        return r;
    }
    for (const Point& p : X.points()) {
        if (p != x0 && Y.contains(p)) {
            r.reason = "images overlap at " + to_string(p) + " besides the wedge point";
            return r;
        }
    }
    for (const Point& p : X.points()) {
        if (p == x0) continue;
        for (const Point& q : Y.points()) {
            if (q == x0) continue;
            if (adjacent(p, q, X.kind())) {
                r.reason = "cross adjacency " + to_string(p) + " ~ " + to_string(q);
                return r;
            }
        }
    }
    r.ok = true;
    return r;
}

/// One-point union of two images; preconditions re-verified, errors otherwise.
inline DigitalImage wedge(const DigitalImage& X, const DigitalImage& Y, const Point& x0) {
    WedgeCheck c = check_wedge(X, Y, x0);
    if (!c.ok) throw std::invalid_argument("invalid wedge: " + c.reason);
    std::vector<Point> pts = X.points();
    for (const Point& q : Y.points())
        if (q != x0) pts.push_back(q);
    return DigitalImage(X.dimension(), X.kind(), std::move(pts));
}

/// Subimage induced on a subset of points (adjacency restricted).
inline DigitalImage induced_subimage(const DigitalImage& X, const std::vector<Point>& pts) {
    if (!X.has_explicit_relation()) return DigitalImage(X.dimension(), X.kind(), pts);
    std::vector<std::pair<int, int>> edges;
    for (size_t a = 0; a < pts.size(); ++a)
        for (size_t b = a + 1; b < pts.size(); ++b)
            if (X.adjacent_points(pts[a], pts[b]))
                edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return DigitalImage(X.dimension(), pts, std::move(edges));
}

/// Connected, at least four points, and every point has exactly two neighbours.
inline bool is_simple_closed_curve(const DigitalImage& X) {
    if (X.size() < 4 || !is_connected(X)) return false;
    for (int i = 0; i < X.size(); ++i)
        if (X.neighbor_indices(i).size() != 2) return false;
    return true;
}

/// Length of a shortest cycle in the adjacency graph (0 when acyclic).
inline int girth(const DigitalImage& X) {
    int best = 0;
    int n = X.size();
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(static_cast<size_t>(n), -1), parent(static_cast<size_t>(n), -1);
        std::vector<int> queue{s};
        dist[static_cast<size_t>(s)] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int w : X.neighbor_indices(v)) {
                if (dist[static_cast<size_t>(w)] < 0) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                    parent[static_cast<size_t>(w)] = v;
                    queue.push_back(w);
                } else if (w != parent[static_cast<size_t>(v)]) {
                    int len = dist[static_cast<size_t>(v)] + dist[static_cast<size_t>(w)] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

/// Graph diameter of the largest component (longest shortest path).
inline int diameter(const DigitalImage& X) {
    int best = 0;
    int n = X.size();
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(static_cast<size_t>(n), -1);
        std::vector<int> queue{s};
        dist[static_cast<size_t>(s)] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            best = std::max(best, dist[static_cast<size_t>(v)]);
            for (int w : X.neighbor_indices(v))
                if (dist[static_cast<size_t>(w)] < 0) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                    queue.push_back(w);
                }
        }
    }
    return best;
}

}  // namespace dtop
