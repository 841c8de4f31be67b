#pragma once

// Closed digital surfaces in Z^3: neighbour-count classification and genus
// via the curvature formula g = 1 + (|M5| + 2|M6| - |M3|) / 8.

#include <map>
#include <string>
#include <vector>

#include "dtop/core.hpp"
#include "dtop/matrix.hpp"

namespace dtop {

/// Bucketed neighbour counts: M_i = points with exactly i neighbours in X,
/// for i in 3..6; anything outside that band lands in `leftover`.
struct SurfaceClassification {
    std::map<int, Int> counts;      // i in 3..6 -> |M_i|
    std::vector<Point> leftover;    // points whose count is outside 3..6
    std::vector<int> neighbor_count;  // per point index, for audits

    Int bucket(int i) const {
        auto it = counts.find(i);
        return it == counts.end() ? 0 : it->second;
    }
};

/// Count each point's neighbours inside X under the image's own adjacency.
inline SurfaceClassification classify_neighbors(const DigitalImage& X) {
    SurfaceClassification out;
    out.counts = {{3, 0}, {4, 0}, {5, 0}, {6, 0}};
    for (int i = 0; i < X.size(); ++i) {
        int c = static_cast<int>(X.neighbor_indices(i).size());
        out.neighbor_count.push_back(c);
        if (c >= 3 && c <= 6)
            ++out.counts[c];
        else
            out.leftover.push_back(X.point(i));
    }
    return out;
}

namespace detail {

/// Two 6-neighbours q, r of p are consecutive on the surface around p when
/// they step along different axes and the fourth corner of their unit square
/// also belongs to X.
inline bool link_consecutive(const DigitalImage& X, const Point& p, const Point& q, const Point& r) {
    int diff_axes = 0;
    Point diag = p;
    for (int i = 0; i < p.dim(); ++i) {
        Coord dq = q[i] - p[i], dr = r[i] - p[i];
        if (dq != 0 && dr != 0) return false;  // same axis (or not unit steps)
        if (dq != 0) {
            diag.coords[static_cast<size_t>(i)] += dq;
            ++diff_axes;
        }
        if (dr != 0) {
            diag.coords[static_cast<size_t>(i)] += dr;
            ++diff_axes;
        }
    }
    if (diff_axes != 2) return false;
    return X.contains(diag);
}

}  // namespace detail

struct SurfacePointCheck {
    bool ok = false;
    std::string reason;
};

/// A surface point has 3..6 neighbours that close into a single cycle under
/// the consecutive-around-p relation (every neighbour flanked by exactly two).
inline SurfacePointCheck check_surface_point(const DigitalImage& X, int index) {
    SurfacePointCheck out;
    const Point& p = X.point(index);
    std::vector<int> link = X.neighbor_indices(index);
    int n = static_cast<int>(link.size());
    if (n < 3 || n > 6) {
        out.reason = to_string(p) + " has " + std::to_string(n) + " neighbours (need 3..6)";
        return out;
    }
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (detail::link_consecutive(X, p, X.point(link[static_cast<size_t>(a)]),
                                         X.point(link[static_cast<size_t>(b)]))) {
                adj[static_cast<size_t>(a)].push_back(b);
                adj[static_cast<size_t>(b)].push_back(a);
            }
    for (int a = 0; a < n; ++a)
        if (adj[static_cast<size_t>(a)].size() != 2) {
            out.reason = "neighbour ring of " + to_string(p) + " is not a simple cycle";
            return out;
        }
    // connected 2-regular graph on n vertices = one n-cycle
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : adj[static_cast<size_t>(v)])
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = true;
                stack.push_back(w);
            }
    }
    if (reached != n) {
        out.reason = "neighbour ring of " + to_string(p) + " splits into several cycles";
        return out;
    }
    out.ok = true;
    return out;
}

struct SurfaceCheck {
    bool ok = false;
    std::string reason;
};

/// Closed-surface test for 6-adjacency images in Z^3: connected and every
/// point's neighbour ring closes into one simple cycle. This local condition
/// makes the point set a combinatorial 2-manifold built from grid squares,
/// which is the setting in which the genus formula is exact.
inline SurfaceCheck is_closed_surface(const DigitalImage& X, std::string* why = nullptr) {
    SurfaceCheck out;
    if (X.dimension() != 3) throw std::invalid_argument("closed surfaces live in dimension 3");
    if (X.has_explicit_relation() || X.kind().k != 1) {
        out.reason = "closed-surface test supports 6-adjacency images";
        if (why) *why = out.reason;
        return out;
    }
    if (!is_connected(X)) {
        out.reason = "image is not connected";
        if (why) *why = out.reason;
        return out;
    }
    for (int i = 0; i < X.size(); ++i) {
        SurfacePointCheck c = check_surface_point(X, i);
        if (!c.ok) {
            out.reason = c.reason;
            if (why) *why = out.reason;
            return out;
        }
    }
    out.ok = true;
    return out;
}

/// Genus of a verified closed surface. The weighted corner count must be a
/// multiple of 8; anything else signals a malformed surface.
inline Int genus(const DigitalImage& X) {
    SurfaceCheck sc = is_closed_surface(X);
    if (!sc.ok) throw std::invalid_argument("not a closed surface: " + sc.reason);
    SurfaceClassification cls = classify_neighbors(X);
    if (!cls.leftover.empty())
        throw std::invalid_argument("surface has points with neighbour counts outside 3..6");
    Int weighted = cls.bucket(5) + 2 * cls.bucket(6) - cls.bucket(3);
    if (weighted % 8 != 0)
        throw std::invalid_argument("weighted corner count " + to_string(weighted) +
                                    " is not divisible by 8; malformed surface");
    return 1 + weighted / 8;
}

}  // namespace dtop
