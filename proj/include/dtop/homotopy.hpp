#pragma once

// Digital homotopies as tabulated time-indexed map sequences, contraction
// certificates, and a breadth-first contraction search over one-step
// continuous shrink moves.

#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "dtop/core.hpp"

namespace dtop {

/// Time-indexed sequence of maps f_0 .. f_n from a fixed domain into a fixed
/// codomain; steps[t][i] is the codomain point index of domain point i.
struct HomotopyScript {
    DigitalImage domain;
    DigitalImage codomain;
    std::vector<std::vector<int>> steps;

    int time_max() const { return static_cast<int>(steps.size()) - 1; }

    DigitalMap map_at(int t) const {
        return DigitalMap(domain, codomain, steps.at(static_cast<size_t>(t)));
    }
};

struct HomotopyReport {
    bool ok = false;
    int time = -1;          // step at which verification failed
    std::string message;    // empty when ok
};

/// Conditions: every f_t is continuous, and for each point the track
/// t -> f_t(x) moves by at most one adjacency step at a time.
inline HomotopyReport verify_homotopy(const HomotopyScript& s) {
    HomotopyReport r;
    if (s.steps.empty()) {
        r.message = "script has no steps";
        return r;
    }
    const DigitalImage& x = s.domain;
    const DigitalImage& y = s.codomain;
    for (size_t t = 0; t < s.steps.size(); ++t) {
        if (static_cast<int>(s.steps[t].size()) != x.size()) {
            r.time = static_cast<int>(t);
            r.message = "step " + std::to_string(t) + " is not total on the domain";
            return r;
        }
        for (int v : s.steps[t])
            if (v < 0 || v >= y.size()) {
                r.time = static_cast<int>(t);
                r.message = "step " + std::to_string(t) + " maps outside the codomain";
                return r;
            }
    }
    for (size_t t = 0; t < s.steps.size(); ++t) {
        for (auto [i, j] : x.edge_pairs()) {
            int a = s.steps[t][static_cast<size_t>(i)], b = s.steps[t][static_cast<size_t>(j)];
            if (a != b && !y.adjacent_indices(a, b)) {
                r.time = static_cast<int>(t);
                r.message = "step " + std::to_string(t) + " is not continuous: images of " +
                            to_string(x.point(i)) + " and " + to_string(x.point(j)) + " are " +
                            to_string(y.point(a)) + ", " + to_string(y.point(b));
                return r;
            }
        }
    }
    for (size_t t = 0; t + 1 < s.steps.size(); ++t) {
        for (int i = 0; i < x.size(); ++i) {
            int a = s.steps[t][static_cast<size_t>(i)], b = s.steps[t + 1][static_cast<size_t>(i)];
            if (a != b && !y.adjacent_indices(a, b)) {
                r.time = static_cast<int>(t);
                r.message = "track of " + to_string(x.point(i)) + " jumps from " +
                            to_string(y.point(a)) + " to " + to_string(y.point(b)) +
                            " between steps " + std::to_string(t) + " and " + std::to_string(t + 1);
                return r;
            }
        }
    }
    r.ok = true;
    return r;
}

/// Script with equal domain and codomain, starting at the identity and ending
/// at the constant map onto `target`.
struct ContractionCertificate {
    HomotopyScript script;
    Point target;
};

inline HomotopyReport verify_contraction(const ContractionCertificate& c) {
    HomotopyReport r;
    const HomotopyScript& s = c.script;
    if (!(s.domain == s.codomain)) {
        r.message = "contraction must be a self-homotopy";
        return r;
    }
    r = verify_homotopy(s);
    if (!r.ok) return r;
    r.ok = false;
    for (int i = 0; i < s.domain.size(); ++i)
        if (s.steps.front()[static_cast<size_t>(i)] != i) {
            r.time = 0;
            r.message = "first step is not the identity at " + to_string(s.domain.point(i));
            return r;
        }
    int target_index = s.domain.require_index(c.target);
    for (int i = 0; i < s.domain.size(); ++i)
        if (s.steps.back()[static_cast<size_t>(i)] != target_index) {
            r.time = s.time_max();
            r.message = "last step is not constant at " + to_string(c.target);
            return r;
        }
    r.ok = true;
    return r;
}

/// Reverse time; a valid homotopy from f_n back to f_0.
inline HomotopyScript reverse_script(const HomotopyScript& s) {
    HomotopyScript out{s.domain, s.codomain, {s.steps.rbegin(), s.steps.rend()}};
    return out;
}

/// Concatenate two scripts whose seam maps agree.
inline HomotopyScript concatenate_scripts(const HomotopyScript& a, const HomotopyScript& b) {
    if (!(a.domain == b.domain) || !(a.codomain == b.codomain))
        throw std::invalid_argument("scripts live over different images");
    if (a.steps.back() != b.steps.front())
        throw std::invalid_argument("scripts do not agree at the seam");
    HomotopyScript out = a;
    out.steps.insert(out.steps.end(), b.steps.begin() + 1, b.steps.end());
    return out;
}

enum class ContractionStatus { Found, NotContractible, Unknown };

struct ContractionSearchResult {
    ContractionStatus status = ContractionStatus::Unknown;
    std::optional<ContractionCertificate> certificate;
    long nodes_used = 0;
};

namespace detail {

/// Enumerate continuous maps g with g(x) in the closed neighbourhood of f(x),
/// non-increasing image cardinality, in lexicographic order (by point, then by
/// target index). Each attempted assignment counts against the budget.
class StepEnumerator {
  public:
    StepEnumerator(const DigitalImage& x, const std::vector<int>& from, long& nodes, long budget)
        : x_(x), from_(from), nodes_(nodes), budget_(budget) {
        int n = x.size();
        candidates_.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            std::vector<int> cand = x.neighbor_indices(from[static_cast<size_t>(i)]);
            cand.push_back(from[static_cast<size_t>(i)]);
            std::sort(cand.begin(), cand.end());
            candidates_[static_cast<size_t>(i)] = std::move(cand);
        }
        image_bound_ = image_size(from);
        adj_lists_.resize(static_cast<size_t>(n));
        for (auto [i, j] : x.edge_pairs()) {
            if (j < i) std::swap(i, j);
            adj_lists_[static_cast<size_t>(j)].push_back(i);  // earlier neighbours of j
        }
    }

    /// Collect successors; returns false when the budget ran out mid-way.
    bool enumerate(std::vector<std::vector<int>>& out) {
        current_.assign(static_cast<size_t>(x_.size()), -1);
        complete_ = true;
        descend(0, out);
        return complete_;
    }

  private:
    static int image_size(const std::vector<int>& table) {
        std::vector<int> v = table;
        std::sort(v.begin(), v.end());
        return static_cast<int>(std::unique(v.begin(), v.end()) - v.begin());
    }

    void descend(int i, std::vector<std::vector<int>>& out) {
        if (!complete_) return;
        if (i == x_.size()) {
            if (image_size(current_) <= image_bound_) out.push_back(current_);
            return;
        }
        for (int cand : candidates_[static_cast<size_t>(i)]) {
            if (++nodes_ > budget_) {
                complete_ = false;
                return;
            }
            bool ok = true;
            for (int j : adj_lists_[static_cast<size_t>(i)]) {
                int a = current_[static_cast<size_t>(j)];
                if (a != cand && !x_.adjacent_indices(a, cand)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            current_[static_cast<size_t>(i)] = cand;
            descend(i + 1, out);
            current_[static_cast<size_t>(i)] = -1;
            if (!complete_) return;
        }
    }

    const DigitalImage& x_;
    const std::vector<int>& from_;
    long& nodes_;
    long budget_;
    int image_bound_ = 0;
    std::vector<std::vector<int>> candidates_;
    std::vector<std::vector<int>> adj_lists_;
    std::vector<int> current_;
    bool complete_ = true;
};

}  // namespace detail

/// Breadth-first search from the identity over one-step continuous shrink
/// moves. Returns the first certificate in deterministic order, a proof of
/// exhaustion, or unknown when the node budget (or step bound) cuts the
/// search off.
inline ContractionSearchResult find_contraction(const DigitalImage& x, int max_steps = 32,
                                                long budget = 1000000) {
    if (max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
    ContractionSearchResult result;

    std::vector<int> identity(static_cast<size_t>(x.size()));
    for (int i = 0; i < x.size(); ++i) identity[static_cast<size_t>(i)] = i;

    std::map<std::vector<int>, std::vector<int>> parent;  // state -> predecessor
    parent.emplace(identity, std::vector<int>{});
    std::queue<std::pair<std::vector<int>, int>> frontier;
    frontier.push({identity, 0});
    bool truncated = false;

    auto is_constant = [&](const std::vector<int>& t) {
        for (int v : t)
            if (v != t[0]) return false;
        return true;
    };
    auto reconstruct = [&](std::vector<int> state) {
        std::vector<std::vector<int>> steps{state};
        while (true) {
            const std::vector<int>& p = parent.at(state);
            if (p.empty()) break;
            steps.push_back(p);
            state = p;
        }
        std::reverse(steps.begin(), steps.end());
        return steps;
    };

    if (is_constant(identity)) {  // one-point image
        HomotopyScript s{x, x, {identity}};
        result.status = ContractionStatus::Found;
        result.certificate = ContractionCertificate{std::move(s), x.point(identity[0])};
        return result;
    }

    while (!frontier.empty()) {
        auto [state, depth] = frontier.front();
        frontier.pop();
        if (depth >= max_steps) {
            truncated = true;
            continue;
        }
        std::vector<std::vector<int>> successors;
        detail::StepEnumerator gen(x, state, result.nodes_used, budget);
        if (!gen.enumerate(successors)) {
            result.status = ContractionStatus::Unknown;
            return result;
        }
        for (const std::vector<int>& next : successors) {
            if (parent.count(next)) continue;
            parent.emplace(next, state);
            if (is_constant(next)) {
                HomotopyScript s{x, x, reconstruct(next)};
                result.status = ContractionStatus::Found;
                result.certificate = ContractionCertificate{std::move(s), x.point(next[0])};
                return result;
            }
            frontier.push({next, depth + 1});
        }
    }
    result.status = truncated ? ContractionStatus::Unknown : ContractionStatus::NotContractible;
    return result;
}

}  // namespace dtop
