#pragma once

// Text formats: images, homotopy scripts, cover/section witnesses, group
// tables. Parsers report line-numbered diagnostics; writers emit canonical,
// byte-stable output.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dtop/core.hpp"
#include "dtop/homotopy.hpp"
#include "dtop/motion.hpp"

namespace dtop {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

namespace io_detail {

struct Line {
    int number = 0;
    std::string text;
};

/// Read meaningful lines: blank lines and lines starting with '#' dropped.
/// A trailing " # ..." is split off and returned as the label.
inline std::vector<Line> read_lines(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::string text = raw;
        size_t first = text.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (text[first] == '#') continue;
        size_t last = text.find_last_not_of(" \t\r");
        out.push_back({number, text.substr(first, last - first + 1)});
    }
    return out;
}

inline std::vector<std::string> tokens(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

inline int to_int(const std::string& s, int line) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (...) {
        throw ParseError(line, "expected an integer, got '" + s + "'");
    }
}

/// Parse tuples "(1 0) (2 2) ..." from the front of a token list; returns the
/// index of the first unconsumed token.
inline size_t parse_tuples(const std::vector<std::string>& toks, size_t start, int line,
                           std::vector<Point>& out) {
    size_t i = start;
    while (i < toks.size() && toks[i].front() == '(') {
        Point p;
        std::string first = toks[i].substr(1);
        bool closed = false;
        auto push_coord = [&](std::string s) {
            if (!s.empty() && s.back() == ')') {
                s.pop_back();
                closed = true;
            }
            if (!s.empty()) p.coords.push_back(to_int(s, line));
        };
        push_coord(first);
        ++i;
        while (!closed) {
            if (i >= toks.size()) throw ParseError(line, "unterminated tuple");
            push_coord(toks[i]);
            ++i;
        }
        if (p.coords.empty()) throw ParseError(line, "empty tuple");
        out.push_back(std::move(p));
    }
    return i;
}

inline std::string tuple(const Point& p) { return to_string(p); }

}  // namespace io_detail

// ---------------------------------------------------------------------------
// image files:  dim <m> adjacency <2|4|8|6|18|26|product>
//               one point per line, "x y z [# label]"; product images add
//               "edge <i> <j>" lines indexing points in file order.

inline DigitalImage read_image(std::istream& in) {
    using namespace io_detail;
    std::vector<Line> lines;
    {
        // keep point labels: only full-line comments are dropped here
        std::string raw;
        int number = 0;
        while (std::getline(in, raw)) {
            ++number;
            size_t first = raw.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            if (raw[first] == '#') continue;
            size_t last = raw.find_last_not_of(" \t\r");
            lines.push_back({number, raw.substr(first, last - first + 1)});
        }
    }
    if (lines.empty()) throw ParseError(0, "empty image file");
    auto head = tokens(lines[0].text);
    if (head.size() != 4 || head[0] != "dim" || head[2] != "adjacency")
        throw ParseError(lines[0].number, "expected header 'dim <m> adjacency <name>'");
    int m = to_int(head[1], lines[0].number);
    std::string adj = head[3];

    std::vector<Point> pts;
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    for (size_t li = 1; li < lines.size(); ++li) {
        std::string text = lines[li].text;
        std::string label;
        size_t hash = text.find('#');
        if (hash != std::string::npos) {
            label = text.substr(hash + 1);
            size_t l0 = label.find_first_not_of(" \t");
            label = (l0 == std::string::npos) ? "" : label.substr(l0);
            text = text.substr(0, hash);
        }
        auto toks = tokens(text);
        if (toks.empty()) continue;
        if (toks[0] == "edge") {
            if (adj != "product")
                throw ParseError(lines[li].number, "edge lines are only valid for product adjacency");
            if (toks.size() != 3) throw ParseError(lines[li].number, "expected 'edge <i> <j>'");
            edges.emplace_back(to_int(toks[1], lines[li].number), to_int(toks[2], lines[li].number));
            continue;
        }
        if (static_cast<int>(toks.size()) != m)
            throw ParseError(lines[li].number,
                             "expected " + std::to_string(m) + " coordinates, got " +
                                 std::to_string(toks.size()));
        Point p;
        for (const std::string& t : toks) p.coords.push_back(to_int(t, lines[li].number));
        pts.push_back(std::move(p));
        labels.push_back(label);
    }
    try {
        if (adj == "product") return DigitalImage(m, pts, edges, labels);
        return DigitalImage(m, AdjacencyKind::from_alias(to_int(adj, lines[0].number), m), pts, labels);
    } catch (const std::invalid_argument& e) {
        throw ParseError(lines[0].number, e.what());
    }
}

inline void write_image(std::ostream& out, const DigitalImage& x) {
    out << "dim " << x.dimension() << " adjacency " << x.adjacency_name() << "\n";
    for (int i = 0; i < x.size(); ++i) {
        const Point& p = x.point(i);
        for (int c = 0; c < p.dim(); ++c) out << (c ? " " : "") << p[c];
        if (!x.label(i).empty()) out << " # " << x.label(i);
        out << "\n";
    }
    if (x.has_explicit_relation())
        for (auto [i, j] : x.edge_pairs()) out << "edge " << i << " " << j << "\n";
}

// ---------------------------------------------------------------------------
// homotopy scripts:  homotopy <n>, then per step "t <k>" and lines
// "x1 .. xm -> y1 .. ym"; domain and codomain are supplied by the caller.

inline HomotopyScript read_script(std::istream& in, const DigitalImage& domain,
                                  const DigitalImage& codomain) {
    using namespace io_detail;
    auto lines = read_lines(in);
    if (lines.empty()) throw ParseError(0, "empty script file");
    auto head = tokens(lines[0].text);
    if (head.size() != 2 || head[0] != "homotopy")
        throw ParseError(lines[0].number, "expected header 'homotopy <n>'");
    int n = to_int(head[1], lines[0].number);
    if (n < 0) throw ParseError(lines[0].number, "step count must be non-negative");

    HomotopyScript script{domain, codomain, {}};
    script.steps.assign(static_cast<size_t>(n) + 1,
                        std::vector<int>(static_cast<size_t>(domain.size()), -1));
    int current = -1;
    for (size_t li = 1; li < lines.size(); ++li) {
        auto toks = tokens(lines[li].text);
        if (toks[0] == "t") {
            if (toks.size() != 2) throw ParseError(lines[li].number, "expected 't <k>'");
            current = to_int(toks[1], lines[li].number);
            if (current < 0 || current > n)
                throw ParseError(lines[li].number, "step index out of range");
            continue;
        }
        if (current < 0) throw ParseError(lines[li].number, "mapping line before any 't <k>' block");
        auto arrow = std::find(toks.begin(), toks.end(), "->");
        if (arrow == toks.end()) throw ParseError(lines[li].number, "expected 'x... -> y...'");
        Point from, to;
        for (auto it = toks.begin(); it != arrow; ++it)
            from.coords.push_back(to_int(*it, lines[li].number));
        for (auto it = arrow + 1; it != toks.end(); ++it)
            to.coords.push_back(to_int(*it, lines[li].number));
        int i, j;
        try {
            i = domain.require_index(from);
            j = codomain.require_index(to);
        } catch (const std::invalid_argument& e) {
            throw ParseError(lines[li].number, e.what());
        }
        script.steps[static_cast<size_t>(current)][static_cast<size_t>(i)] = j;
    }
    for (size_t t = 0; t < script.steps.size(); ++t)
        for (size_t i = 0; i < script.steps[t].size(); ++i)
            if (script.steps[t][i] < 0)
                throw ParseError(0, "step " + std::to_string(t) + " is not defined at " +
                                        to_string(domain.point(static_cast<int>(i))));
    return script;
}

inline void write_script(std::ostream& out, const HomotopyScript& s) {
    out << "homotopy " << s.time_max() << "\n";
    for (size_t t = 0; t < s.steps.size(); ++t) {
        out << "t " << t << "\n";
        for (int i = 0; i < s.domain.size(); ++i) {
            const Point& a = s.domain.point(i);
            const Point& b = s.codomain.point(s.steps[t][static_cast<size_t>(i)]);
            for (int c = 0; c < a.dim(); ++c) out << (c ? " " : "") << a[c];
            out << " -> ";
            for (int c = 0; c < b.dim(); ++c) out << (c ? " " : "") << b[c];
            out << "\n";
        }
    }
}

// ---------------------------------------------------------------------------
// cover/section witnesses:
//   cover <l> arity <n>
//   part <i>            followed by tuple lines "(x..) (y..) ..."
//   rule <i>            followed by "(x..) (y..) -> path: (..) (..) .." lines
//                       or        "(..) ... -> legs <n>" + "leg <k>: (..) .."
//   contraction <i>     followed by an embedded homotopy script (category)

struct TcWitnessFile {
    CoverWitness cover;
    std::vector<SectionRule> rules;
};

struct TcnWitnessFile {
    CoverWitness cover;
    std::vector<SpiderRule> rules;
};

struct CatWitnessFile {
    CatWitness witness;
};

namespace io_detail {

inline Point glue_tuple(const std::vector<Point>& tuple_pts) {
    Point u;
    for (const Point& p : tuple_pts)
        u.coords.insert(u.coords.end(), p.coords.begin(), p.coords.end());
    return u;
}

struct WitnessHeader {
    int parts = 0;
    int arity = 2;
    size_t next = 1;
};

inline WitnessHeader parse_witness_header(const std::vector<Line>& lines) {
    if (lines.empty()) throw ParseError(0, "empty witness file");
    auto toks = tokens(lines[0].text);
    if (toks.size() < 2 || toks[0] != "cover")
        throw ParseError(lines[0].number, "expected header 'cover <l> [arity <n>]'");
    WitnessHeader h;
    h.parts = to_int(toks[1], lines[0].number);
    if (toks.size() == 4 && toks[2] == "arity")
        h.arity = to_int(toks[3], lines[0].number);
    else if (toks.size() != 2)
        throw ParseError(lines[0].number, "expected header 'cover <l> [arity <n>]'");
    return h;
}

}  // namespace io_detail

inline TcWitnessFile read_tc_witness(std::istream& in) {
    using namespace io_detail;
    auto lines = read_lines(in);
    WitnessHeader head = parse_witness_header(lines);
    if (head.arity != 2) throw ParseError(lines[0].number, "pair witnesses need arity 2");
    TcWitnessFile out;
    out.cover.arity = 2;
    out.cover.parts.resize(static_cast<size_t>(head.parts));
    out.rules.resize(static_cast<size_t>(head.parts));

    int current = -1;
    bool in_rule = false;
    for (size_t li = head.next; li < lines.size(); ++li) {
        auto toks = tokens(lines[li].text);
        if (toks[0] == "part" || toks[0] == "rule") {
            if (toks.size() != 2) throw ParseError(lines[li].number, "expected '" + toks[0] + " <i>'");
            current = to_int(toks[1], lines[li].number) - 1;
            if (current < 0 || current >= head.parts)
                throw ParseError(lines[li].number, "part index out of range");
            in_rule = (toks[0] == "rule");
            continue;
        }
        if (current < 0) throw ParseError(lines[li].number, "tuple line before any part/rule block");
        std::vector<Point> tuple_pts;
        size_t next = parse_tuples(toks, 0, lines[li].number, tuple_pts);
        if (!in_rule) {
            if (next != toks.size() || tuple_pts.size() != 2)
                throw ParseError(lines[li].number, "part members are pairs '(x..) (y..)'");
            out.cover.parts[static_cast<size_t>(current)].push_back(glue_tuple(tuple_pts));
            continue;
        }
        if (tuple_pts.size() != 2 || next + 1 >= toks.size() || toks[next] != "->" ||
            toks[next + 1] != "path:")
            throw ParseError(lines[li].number, "expected '(x..) (y..) -> path: (..) (..) ..'");
        std::vector<Point> path_pts;
        size_t end = parse_tuples(toks, next + 2, lines[li].number, path_pts);
        if (end != toks.size() || path_pts.empty())
            throw ParseError(lines[li].number, "malformed path");
        DigitalPath p;
        p.points = path_pts;
        out.rules[static_cast<size_t>(current)].paths.emplace(glue_tuple(tuple_pts), std::move(p));
    }
    return out;
}

inline void write_tc_witness(std::ostream& out, const TcWitnessFile& w, int pair_dim) {
    using namespace io_detail;
    out << "cover " << w.cover.parts.size() << " arity 2\n";
    int m = pair_dim / 2;
    auto halves = [&](const Point& u) { return split_point(u, m, 2); };
    for (size_t i = 0; i < w.cover.parts.size(); ++i) {
        out << "part " << (i + 1) << "\n";
        for (const Point& u : w.cover.parts[i]) {
            auto xy = halves(u);
            out << tuple(xy[0]) << " " << tuple(xy[1]) << "\n";
        }
    }
    for (size_t i = 0; i < w.rules.size(); ++i) {
        out << "rule " << (i + 1) << "\n";
        for (const auto& [u, p] : w.rules[i].paths) {
            auto xy = halves(u);
            out << tuple(xy[0]) << " " << tuple(xy[1]) << " -> path:";
            for (const Point& q : p.points) out << " " << tuple(q);
            out << "\n";
        }
    }
}

inline TcnWitnessFile read_tcn_witness(std::istream& in, int n) {
    using namespace io_detail;
    auto lines = read_lines(in);
    WitnessHeader head = parse_witness_header(lines);
    if (head.arity != n) throw ParseError(lines[0].number, "witness arity does not match n");
    TcnWitnessFile out;
    out.cover.arity = n;
    out.cover.parts.resize(static_cast<size_t>(head.parts));
    out.rules.resize(static_cast<size_t>(head.parts));

    int current = -1;
    bool in_rule = false;
    Point pending_tuple;
    Spider pending;
    int pending_legs = 0;
    auto flush_pending = [&](int line) {
        if (pending_legs == 0) return;
        if (static_cast<int>(pending.legs.size()) != pending_legs)
            throw ParseError(line, "spider block ended before all legs were given");
        out.rules[static_cast<size_t>(current)].spiders.emplace(pending_tuple, pending);
        pending = Spider{};
        pending_legs = 0;
    };

    for (size_t li = head.next; li < lines.size(); ++li) {
        auto toks = tokens(lines[li].text);
        if (toks[0] == "part" || toks[0] == "rule") {
            flush_pending(lines[li].number);
            if (toks.size() != 2) throw ParseError(lines[li].number, "expected '" + toks[0] + " <i>'");
            current = to_int(toks[1], lines[li].number) - 1;
            if (current < 0 || current >= head.parts)
                throw ParseError(lines[li].number, "part index out of range");
            in_rule = (toks[0] == "rule");
            continue;
        }
        if (toks[0] == "leg") {
            if (pending_legs == 0) throw ParseError(lines[li].number, "leg line outside a spider block");
            if (toks.size() < 2 || toks[1].back() != ':')
                throw ParseError(lines[li].number, "expected 'leg <k>: (..) (..) ..'");
            std::vector<Point> leg_pts;
            size_t end = parse_tuples(toks, 2, lines[li].number, leg_pts);
            if (end != toks.size() || leg_pts.empty()) throw ParseError(lines[li].number, "malformed leg");
            DigitalPath p;
            p.points = leg_pts;
            pending.legs.push_back(std::move(p));
            continue;
        }
        if (current < 0) throw ParseError(lines[li].number, "tuple line before any part/rule block");
        std::vector<Point> tuple_pts;
        size_t next = parse_tuples(toks, 0, lines[li].number, tuple_pts);
        if (static_cast<int>(tuple_pts.size()) != n)
            throw ParseError(lines[li].number, "expected " + std::to_string(n) + " tuples");
        if (!in_rule) {
            if (next != toks.size())
                throw ParseError(lines[li].number, "part members are bare tuples");
            out.cover.parts[static_cast<size_t>(current)].push_back(glue_tuple(tuple_pts));
            continue;
        }
        flush_pending(lines[li].number);
        if (next + 1 >= toks.size() || toks[next] != "->" || toks[next + 1] != "legs")
            throw ParseError(lines[li].number, "expected '(..) .. -> legs <n>'");
        if (next + 2 >= toks.size()) throw ParseError(lines[li].number, "missing leg count");
        if (to_int(toks[next + 2], lines[li].number) != n)
            throw ParseError(lines[li].number, "leg count must equal n");
        pending_tuple = glue_tuple(tuple_pts);
        pending_legs = n;
    }
    flush_pending(lines.empty() ? 0 : lines.back().number);
    return out;
}

inline void write_tcn_witness(std::ostream& out, const TcnWitnessFile& w, int point_dim) {
    using namespace io_detail;
    int n = w.cover.arity;
    out << "cover " << w.cover.parts.size() << " arity " << n << "\n";
    int m = point_dim / n;
    for (size_t i = 0; i < w.cover.parts.size(); ++i) {
        out << "part " << (i + 1) << "\n";
        for (const Point& u : w.cover.parts[i]) {
            auto xs = split_point(u, m, n);
            for (size_t k = 0; k < xs.size(); ++k) out << (k ? " " : "") << tuple(xs[k]);
            out << "\n";
        }
    }
    for (size_t i = 0; i < w.rules.size(); ++i) {
        out << "rule " << (i + 1) << "\n";
        for (const auto& [u, s] : w.rules[i].spiders) {
            auto xs = split_point(u, m, n);
            for (size_t k = 0; k < xs.size(); ++k) out << (k ? " " : "") << tuple(xs[k]);
            out << " -> legs " << n << "\n";
            for (size_t k = 0; k < s.legs.size(); ++k) {
                out << "leg " << (k + 1) << ":";
                for (const Point& q : s.legs[k].points) out << " " << tuple(q);
                out << "\n";
            }
        }
    }
}

/// Category witnesses: parts of X with one embedded contraction script each.
inline CatWitnessFile read_cat_witness(std::istream& in, const DigitalImage& x) {
    using namespace io_detail;
    auto lines = read_lines(in);
    WitnessHeader head = parse_witness_header(lines);
    if (head.arity != 1) throw ParseError(lines[0].number, "category witnesses need arity 1");
    CatWitnessFile out;
    out.witness.parts.resize(static_cast<size_t>(head.parts));

    // first pass: collect parts; remember where contraction blocks start
    std::vector<std::pair<int, size_t>> script_starts;  // (part index, line index)
    int current = -1;
    bool in_script = false;
    for (size_t li = head.next; li < lines.size(); ++li) {
        auto toks = tokens(lines[li].text);
        if (toks[0] == "part") {
            current = to_int(toks[1], lines[li].number) - 1;
            if (current < 0 || current >= head.parts)
                throw ParseError(lines[li].number, "part index out of range");
            in_script = false;
            continue;
        }
        if (toks[0] == "contraction") {
            current = to_int(toks[1], lines[li].number) - 1;
            if (current < 0 || current >= head.parts)
                throw ParseError(lines[li].number, "contraction index out of range");
            script_starts.emplace_back(current, li + 1);
            in_script = true;
            continue;
        }
        if (in_script) continue;
        if (current < 0) throw ParseError(lines[li].number, "tuple line before any block");
        std::vector<Point> tuple_pts;
        size_t next = parse_tuples(toks, 0, lines[li].number, tuple_pts);
        if (next != toks.size() || tuple_pts.size() != 1)
            throw ParseError(lines[li].number, "part members are single tuples");
        out.witness.parts[static_cast<size_t>(current)].push_back(tuple_pts[0]);
    }

    out.witness.contractions.resize(static_cast<size_t>(head.parts),
                                    HomotopyScript{x, x, {{}}});
    std::vector<bool> have(static_cast<size_t>(head.parts), false);
    for (auto [part_idx, start] : script_starts) {
        std::string block;
        for (size_t li = start; li < lines.size(); ++li) {
            auto toks = tokens(lines[li].text);
            if (toks[0] == "part" || toks[0] == "contraction") break;
            block += lines[li].text + "\n";
        }
        DigitalImage part_image = induced_subimage(x, out.witness.parts[static_cast<size_t>(part_idx)]);
        std::istringstream bin(block);
        out.witness.contractions[static_cast<size_t>(part_idx)] = read_script(bin, part_image, x);
        have[static_cast<size_t>(part_idx)] = true;
    }
    for (size_t i = 0; i < have.size(); ++i)
        if (!have[i]) throw ParseError(0, "part " + std::to_string(i + 1) + " has no contraction");
    return out;
}

inline void write_cat_witness(std::ostream& out, const CatWitnessFile& w) {
    using namespace io_detail;
    out << "cover " << w.witness.parts.size() << " arity 1\n";
    for (size_t i = 0; i < w.witness.parts.size(); ++i) {
        out << "part " << (i + 1) << "\n";
        for (const Point& p : w.witness.parts[i]) out << tuple(p) << "\n";
    }
    for (size_t i = 0; i < w.witness.contractions.size(); ++i) {
        out << "contraction " << (i + 1) << "\n";
        write_script(out, w.witness.contractions[i]);
    }
}

// ---------------------------------------------------------------------------
// group tables: lines "x1 .. xm * y1 .. ym -> z1 .. zm"

inline GroupTable read_group_table(std::istream& in, const DigitalImage& x) {
    using namespace io_detail;
    auto lines = read_lines(in);
    GroupTable t;
    t.mul.assign(static_cast<size_t>(x.size()), std::vector<int>(static_cast<size_t>(x.size()), -1));
    for (const Line& line : lines) {
        auto toks = tokens(line.text);
        auto star = std::find(toks.begin(), toks.end(), "*");
        auto arrow = std::find(toks.begin(), toks.end(), "->");
        if (star == toks.end() || arrow == toks.end() || arrow < star)
            throw ParseError(line.number, "expected 'x.. * y.. -> z..'");
        Point a, b, c;
        for (auto it = toks.begin(); it != star; ++it) a.coords.push_back(to_int(*it, line.number));
        for (auto it = star + 1; it != arrow; ++it) b.coords.push_back(to_int(*it, line.number));
        for (auto it = arrow + 1; it != toks.end(); ++it) c.coords.push_back(to_int(*it, line.number));
        try {
            t.mul[static_cast<size_t>(x.require_index(a))][static_cast<size_t>(x.require_index(b))] =
                x.require_index(c);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line.number, e.what());
        }
    }
    for (const auto& row : t.mul)
        for (int v : row)
            if (v < 0) throw ParseError(0, "multiplication table is not total");
    return t;
}

inline void write_group_table(std::ostream& out, const DigitalImage& x, const GroupTable& t) {
    for (int i = 0; i < x.size(); ++i)
        for (int j = 0; j < x.size(); ++j) {
            const Point &a = x.point(i), &b = x.point(j),
                        &c = x.point(t.mul[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            for (int k = 0; k < a.dim(); ++k) out << (k ? " " : "") << a[k];
            out << " * ";
            for (int k = 0; k < b.dim(); ++k) out << (k ? " " : "") << b[k];
            out << " -> ";
            for (int k = 0; k < c.dim(); ++k) out << (k ? " " : "") << c[k];
            out << "\n";
        }
}

}  // namespace dtop
