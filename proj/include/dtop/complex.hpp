#pragma once

// Clique (flag) complex of a digital image, integer simplicial homology and
// cohomology via Smith normal form, induced cochain maps and cup products.

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "dtop/core.hpp"
#include "dtop/matrix.hpp"

namespace dtop {

/// Total order on the image's points used to orient simplices. The default is
/// lexicographic by coordinates; golden tests may override it.
struct VertexOrder {
    std::vector<Point> order;  // empty means lexicographic

    static VertexOrder lexicographic() { return {}; }
    static VertexOrder explicit_order(std::vector<Point> pts) { return {std::move(pts)}; }
};

/// Coefficient choice for cohomology-level computations.
struct Coefficients {
    enum class Kind { Integers, Rationals, PrimeField } kind = Kind::Rationals;
    Int p = 0;

    static Coefficients integers() { return {Kind::Integers, 0}; }
    static Coefficients rationals() { return {Kind::Rationals, 0}; }
    static Coefficients prime_field(Int p) { return {Kind::PrimeField, p}; }
};

/// Simplex as strictly increasing vertex positions w.r.t. the complex's order.
using Simplex = std::vector<int>;

struct HomologyGroup {
    Int rank = 0;
    std::vector<Int> torsion;  // divisibility-ordered, entries > 1

    bool operator==(const HomologyGroup&) const = default;
};

inline std::string to_string(const HomologyGroup& g) {
    std::string s;
    if (g.rank == 0 && g.torsion.empty()) return "0";
    if (g.rank == 1)
        s = "Z";
    else if (g.rank > 1)
        s = "Z^" + to_string(g.rank);
    for (Int t : g.torsion) {
        if (!s.empty()) s += " + ";
        s += "Z/" + to_string(t);
    }
    return s;
}

struct HomologyResult {
    std::vector<HomologyGroup> groups;  // index q

    const HomologyGroup& at(int q) const {
        static const HomologyGroup zero{};
        if (q < 0 || q >= static_cast<int>(groups.size())) return zero;
        return groups[static_cast<size_t>(q)];
    }
    Int betti(int q) const { return at(q).rank; }
};

inline std::string to_string(const HomologyResult& h, const std::string& letter = "H") {
    std::string s;
    for (size_t q = 0; q < h.groups.size(); ++q)
        s += letter + "_" + std::to_string(q) + " = " + to_string(h.groups[q]) + "\n";
    return s;
}

/// Ordered simplex bases C_0..C_max plus integer boundary matrices.
class ChainComplex {
  public:
    ChainComplex(DigitalImage image, int max_dim, VertexOrder order = {})
        : image_(std::move(image)), max_dim_(max_dim) {
        if (max_dim < 0) throw std::invalid_argument("max_dim must be >= 0");
        init_order(order);
        build_bases();
        build_boundaries();
    }

    const DigitalImage& image() const { return image_; }
    int max_dim() const { return max_dim_; }

    /// Vertex at order position r.
    const Point& vertex(int r) const { return ordered_points_[static_cast<size_t>(r)]; }
    int vertex_count() const { return image_.size(); }
    /// Order position of an image point.
    int rank_of(const Point& p) const { return rank_of_index_[static_cast<size_t>(image_.require_index(p))]; }

    int basis_size(int q) const {
        if (q < 0 || q > max_dim_) return 0;
        return static_cast<int>(bases_[static_cast<size_t>(q)].size());
    }
    const std::vector<Simplex>& basis(int q) const { return bases_.at(static_cast<size_t>(q)); }

    /// Index of a simplex (given as increasing order positions); -1 if absent.
    int index_of(int q, const Simplex& s) const {
        if (q < 0 || q > max_dim_) return -1;
        const auto& b = bases_[static_cast<size_t>(q)];
        auto it = std::lower_bound(b.begin(), b.end(), s);
        if (it == b.end() || *it != s) return -1;
        return static_cast<int>(it - b.begin());
    }

    /// Boundary matrix of degree q: columns indexed by C_q, rows by C_{q-1};
    /// degree 0 is the zero map (matrix with zero rows).
    const IntMatrix& boundary(int q) const {
        if (q < 0 || q > max_dim_) throw std::invalid_argument("boundary degree out of range");
        return boundaries_[static_cast<size_t>(q)];
    }

    /// Coboundary matrix delta^q = transpose of boundary(q+1); the top
    /// coboundary maps into the zero group.
    IntMatrix coboundary(int q) const {
        if (q < 0 || q > max_dim_) throw std::invalid_argument("coboundary degree out of range");
        if (q == max_dim_) return IntMatrix(0, basis_size(q));
        return boundaries_[static_cast<size_t>(q) + 1].transposed();
    }

    Int euler_characteristic() const {
        Int chi = 0;
        for (int q = 0; q <= max_dim_; ++q) chi += (q % 2 == 0 ? 1 : -1) * static_cast<Int>(basis_size(q));
        return chi;
    }

  private:
    void init_order(const VertexOrder& order) {
        if (order.order.empty()) {
            ordered_points_ = image_.points();
        } else {
            if (static_cast<int>(order.order.size()) != image_.size())
                throw std::invalid_argument("vertex order must list every point exactly once");
            ordered_points_ = order.order;
            std::vector<bool> seen(static_cast<size_t>(image_.size()), false);
            for (const Point& p : ordered_points_) {
                int i = image_.require_index(p);
                if (seen[static_cast<size_t>(i)]) throw std::invalid_argument("vertex order repeats a point");
                seen[static_cast<size_t>(i)] = true;
            }
        }
        rank_of_index_.assign(static_cast<size_t>(image_.size()), -1);
        for (int r = 0; r < static_cast<int>(ordered_points_.size()); ++r)
            rank_of_index_[static_cast<size_t>(image_.require_index(ordered_points_[static_cast<size_t>(r)]))] = r;
    }

    bool ranks_adjacent(int ra, int rb) const {
        return image_.adjacent_points(ordered_points_[static_cast<size_t>(ra)],
                                      ordered_points_[static_cast<size_t>(rb)]);
    }

    void build_bases() {
        bases_.assign(static_cast<size_t>(max_dim_) + 1, {});
        int n = image_.size();
        for (int r = 0; r < n; ++r) bases_[0].push_back({r});
        // extend cliques by vertices of larger order position
        for (int q = 1; q <= max_dim_; ++q) {
            for (const Simplex& s : bases_[static_cast<size_t>(q) - 1]) {
                for (int r = s.back() + 1; r < n; ++r) {
                    bool ok = true;
                    for (int v : s)
                        if (!ranks_adjacent(v, r)) {
                            ok = false;
                            break;
                        }
                    if (!ok) continue;
                    Simplex next = s;
                    next.push_back(r);
                    bases_[static_cast<size_t>(q)].push_back(std::move(next));
                }
            }
            std::sort(bases_[static_cast<size_t>(q)].begin(), bases_[static_cast<size_t>(q)].end());
        }
    }

    void build_boundaries() {
        boundaries_.clear();
        boundaries_.push_back(IntMatrix(0, basis_size(0)));  // zero map in degree 0
        for (int q = 1; q <= max_dim_; ++q) {
            IntMatrix b(basis_size(q - 1), basis_size(q));
            const auto& simplices = bases_[static_cast<size_t>(q)];
            for (int c = 0; c < static_cast<int>(simplices.size()); ++c) {
                const Simplex& s = simplices[static_cast<size_t>(c)];
                for (int i = 0; i <= q; ++i) {
                    Simplex face;
                    face.reserve(s.size() - 1);
                    for (int j = 0; j <= q; ++j)
                        if (j != i) face.push_back(s[static_cast<size_t>(j)]);
                    int r = index_of(q - 1, face);
                    b.at(r, c) = (i % 2 == 0) ? 1 : -1;
                }
            }
            boundaries_.push_back(std::move(b));
        }
    }

    DigitalImage image_;
    int max_dim_;
    std::vector<Point> ordered_points_;
    std::vector<int> rank_of_index_;
    std::vector<std::vector<Simplex>> bases_;
    std::vector<IntMatrix> boundaries_;
};

inline ChainComplex build_clique_complex(const DigitalImage& X, int max_dim, VertexOrder order = {}) {
    return ChainComplex(X, max_dim, std::move(order));
}

/// Default top dimension: ambient dimension + 1.
inline int default_max_dim(const DigitalImage& X) { return X.dimension() + 1; }

/// Integer homology of the complex as given: H_q = ker d_q / im d_{q+1}, with
/// d_{max+1} = 0 (simplices above max_dim are not considered).
inline HomologyResult homology(const ChainComplex& k) {
    HomologyResult out;
    std::vector<SmithForm> snf;
    for (int q = 0; q <= k.max_dim(); ++q) snf.push_back(smith_normal_form(k.boundary(q)));
    for (int q = 0; q <= k.max_dim(); ++q) {
        HomologyGroup g;
        Int cycles = k.basis_size(q) - snf[static_cast<size_t>(q)].rank;
        Int image = (q + 1 <= k.max_dim()) ? snf[static_cast<size_t>(q) + 1].rank : 0;
        g.rank = cycles - image;
        if (q + 1 <= k.max_dim())
            for (Int d : snf[static_cast<size_t>(q) + 1].diagonal)
                if (d > 1) g.torsion.push_back(d);
        out.groups.push_back(std::move(g));
    }
    return out;
}

/// Cohomology bookkeeping per degree: Z^q = ker delta^q, B^q = im delta^{q-1}.
struct CohomologyDetail {
    Int cocycle_rank = 0;   // dim ker delta^q
    Int coboundary_rank = 0;  // rank delta^{q-1}
    HomologyGroup group;
};

struct CohomologyResult {
    std::vector<CohomologyDetail> details;
    HomologyResult groups() const {
        HomologyResult h;
        for (const auto& d : details) h.groups.push_back(d.group);
        return h;
    }
};

/// Cohomology with integer or field coefficients via ranks of the transposed
/// boundary maps. With field coefficients torsion is absent and ranks follow
/// the chosen field; with integer coefficients torsion comes from the Smith
/// form of delta^{q-1}.
inline CohomologyResult cohomology(const ChainComplex& k, Coefficients coeff = Coefficients::integers()) {
    CohomologyResult out;
    auto rank_of = [&](const IntMatrix& m) -> Int {
        if (coeff.kind == Coefficients::Kind::PrimeField) return rank_mod_p(m, coeff.p);
        return rank(m);
    };
    std::vector<IntMatrix> deltas;
    for (int q = 0; q <= k.max_dim(); ++q) deltas.push_back(k.coboundary(q));
    for (int q = 0; q <= k.max_dim(); ++q) {
        CohomologyDetail d;
        d.cocycle_rank = k.basis_size(q) - rank_of(deltas[static_cast<size_t>(q)]);
        d.coboundary_rank = (q == 0) ? 0 : rank_of(deltas[static_cast<size_t>(q) - 1]);
        d.group.rank = d.cocycle_rank - d.coboundary_rank;
        if (coeff.kind == Coefficients::Kind::Integers && q > 0) {
            SmithForm s = smith_normal_form(deltas[static_cast<size_t>(q) - 1]);
            for (Int dd : s.diagonal)
                if (dd > 1) d.group.torsion.push_back(dd);
        }
        out.details.push_back(std::move(d));
    }
    return out;
}

/// Betti number b_q of the clique complex (built through degree q+1).
inline Int betti(const DigitalImage& X, int q, VertexOrder order = {}) {
    if (q < 0) throw std::invalid_argument("betti degree must be >= 0");
    ChainComplex k(X, q + 1, std::move(order));
    return homology(k).betti(q);
}

/// A q-cochain: one integer coefficient per q-simplex of the complex.
struct Cochain {
    int degree = 0;
    std::vector<Int> coeffs;  // empty means the zero cochain (e.g. above max_dim)

    bool is_zero() const {
        for (Int c : coeffs)
            if (c != 0) return false;
        return true;
    }
};

inline Cochain zero_cochain(const ChainComplex& k, int degree) {
    Cochain c;
    c.degree = degree;
    c.coeffs.assign(static_cast<size_t>(std::max(0, k.basis_size(degree))), 0);
    return c;
}

/// Dual basis cochain of the i-th q-simplex.
inline Cochain dual_cochain(const ChainComplex& k, int degree, int i) {
    Cochain c = zero_cochain(k, degree);
    c.coeffs.at(static_cast<size_t>(i)) = 1;
    return c;
}

inline Cochain coboundary(const ChainComplex& k, const Cochain& phi) {
    Cochain out = zero_cochain(k, phi.degree + 1);
    if (phi.degree >= k.max_dim()) return out;
    IntMatrix d = k.coboundary(phi.degree);
    for (int r = 0; r < d.rows(); ++r) {
        Int acc = 0;
        for (int c = 0; c < d.cols(); ++c)
            acc = checked_add(acc, checked_mul(d.at(r, c), phi.coeffs.at(static_cast<size_t>(c))));
        out.coeffs[static_cast<size_t>(r)] = acc;
    }
    return out;
}

inline bool is_cocycle(const ChainComplex& k, const Cochain& phi) {
    return coboundary(k, phi).is_zero();
}

/// Ordered (front-face/back-face) cup product at cochain level. Products whose
/// degree exceeds max_dim are the zero cochain.
inline Cochain cup(const ChainComplex& k, const Cochain& phi, const Cochain& psi) {
    int p = phi.degree, q = psi.degree;
    Cochain out;
    out.degree = p + q;
    if (p + q > k.max_dim()) return out;  // zero by convention
    out = zero_cochain(k, p + q);
    const auto& simplices = k.basis(p + q);
    for (int i = 0; i < static_cast<int>(simplices.size()); ++i) {
        const Simplex& s = simplices[static_cast<size_t>(i)];
        Simplex front(s.begin(), s.begin() + p + 1);
        Simplex back(s.begin() + p, s.end());
        int fi = k.index_of(p, front);
        int bi = k.index_of(q, back);
        // faces of a clique are cliques, so both lookups succeed
        Int a = phi.coeffs.at(static_cast<size_t>(fi));
        Int b = psi.coeffs.at(static_cast<size_t>(bi));
        out.coeffs[static_cast<size_t>(i)] = checked_mul(a, b);
    }
    return out;
}

namespace detail {

inline Int reduce_coeff(Int v, const Coefficients& coeff) {
    if (coeff.kind == Coefficients::Kind::PrimeField) return ((v % coeff.p) + coeff.p) % coeff.p;
    return v;
}

inline int rank_with(const IntMatrix& m, const Coefficients& coeff) {
    if (coeff.kind == Coefficients::Kind::PrimeField) return rank_mod_p(m, coeff.p);
    return rank(m);
}

}  // namespace detail

/// True when phi is a coboundary over the given coefficients (its class is 0).
inline bool class_is_zero(const ChainComplex& k, const Cochain& phi, Coefficients coeff = Coefficients::rationals()) {
    if (phi.coeffs.empty() || phi.is_zero()) return true;
    int q = phi.degree;
    if (q == 0) return false;  // nonzero 0-cochain; no (-1)-coboundaries
    IntMatrix b = k.coboundary(q - 1);
    IntMatrix v(static_cast<int>(phi.coeffs.size()), 1);
    for (int r = 0; r < v.rows(); ++r) v.at(r, 0) = phi.coeffs[static_cast<size_t>(r)];
    return detail::rank_with(hstack(b, v), coeff) == detail::rank_with(b, coeff);
}

/// Largest k such that some k-fold cup product of the given positive-degree
/// cocycles is nonzero in cohomology; 0 when every class is already zero.
/// The search is breadth-first over product chains and stops at the budget.
inline int nilpotency(const ChainComplex& k, const std::vector<Cochain>& classes, long budget = 100000,
                      Coefficients coeff = Coefficients::rationals()) {
    for (const Cochain& c : classes) {
        if (c.degree < 1) throw std::invalid_argument("nilpotency expects positive-degree classes");
        if (!is_cocycle(k, c)) throw std::invalid_argument("nilpotency expects cocycles");
    }
    std::vector<Cochain> level;
    for (const Cochain& c : classes)
        if (!class_is_zero(k, c, coeff)) level.push_back(c);
    int best = level.empty() ? 0 : 1;
    long used = 0;
    while (!level.empty()) {
        std::vector<Cochain> next;
        for (const Cochain& c : level) {
            for (const Cochain& base : classes) {
                if (c.degree + base.degree > k.max_dim()) continue;
                if (++used > budget) return best;
                Cochain prod = cup(k, c, base);
                if (!prod.coeffs.empty() && !class_is_zero(k, prod, coeff)) next.push_back(prod);
            }
        }
        if (next.empty()) break;
        ++best;
        level = std::move(next);
    }
    return best;
}

/// Result of an induced cochain map computation in one degree.
struct InducedMapDegree {
    IntMatrix cochain_map;      // C^q(codomain complex) -> C^q(domain complex)
    Int source_dim = 0;         // dim H^q of the codomain complex over the field
    Int target_dim = 0;         // dim H^q of the domain complex over the field
    Int rank = 0;               // rank of the induced map on cohomology
    Int kernel_rank = 0;        // source_dim - rank
};

struct InducedMap {
    std::vector<InducedMapDegree> degrees;
};

/// Induced map on cohomology for a continuous digital map. The chain map sends
/// a simplex to its image tuple; tuples with repeated vertices collapse to 0,
/// and tuples that do not span a codomain simplex also collapse to 0, which is
/// only accepted when the resulting maps still descend to cohomology (checked
/// degree by degree; failure reports the map as not simplex-compatible).
inline InducedMap induced_cochain_map(const DigitalMap& f, const ChainComplex& k_dom,
                                      const ChainComplex& k_cod,
                                      Coefficients coeff = Coefficients::rationals()) {
    if (coeff.kind == Coefficients::Kind::Integers) coeff = Coefficients::rationals();
    if (!(f.domain().points() == k_dom.image().points()))
        throw std::invalid_argument("domain complex is not built over the map's domain");
    if (!(f.codomain().points() == k_cod.image().points()))
        throw std::invalid_argument("codomain complex is not built over the map's codomain point set");
    if (!is_continuous(f)) throw std::invalid_argument("induced map requires a continuous digital map");

    int top = std::min(k_dom.max_dim(), k_cod.max_dim());
    InducedMap out;

    // chain maps F_q : C_q(dom) -> C_q(cod)
    std::vector<IntMatrix> chain_maps;
    for (int q = 0; q <= top; ++q) {
        IntMatrix fq(k_cod.basis_size(q), k_dom.basis_size(q));
        const auto& basis = k_dom.basis(q);
        for (int c = 0; c < static_cast<int>(basis.size()); ++c) {
            const Simplex& s = basis[static_cast<size_t>(c)];
            std::vector<int> image_ranks;
            for (int r : s) {
                Point img = f.apply(k_dom.vertex(r));
                image_ranks.push_back(k_cod.rank_of(img));
            }
            // orientation sign from the sorting permutation; repeats collapse
            int sign = 1;
            bool degenerate = false;
            for (size_t i = 0; i < image_ranks.size() && !degenerate; ++i)
                for (size_t j = i + 1; j < image_ranks.size(); ++j) {
                    if (image_ranks[i] == image_ranks[j]) {
                        degenerate = true;
                        break;
                    }
                    if (image_ranks[i] > image_ranks[j]) sign = -sign;
                }
            if (degenerate) continue;
            std::sort(image_ranks.begin(), image_ranks.end());
            int idx = k_cod.index_of(q, image_ranks);
            if (idx < 0) continue;  // not a codomain simplex; collapses to 0
            fq.at(idx, c) = sign;
        }
        chain_maps.push_back(std::move(fq));
    }

    for (int q = 0; q <= top; ++q) {
        InducedMapDegree deg;
        deg.cochain_map = chain_maps[static_cast<size_t>(q)].transposed();

        IntMatrix delta_cod_q = k_cod.coboundary(q);
        IntMatrix delta_dom_q = k_dom.coboundary(q);
        IntMatrix b_cod = (q == 0) ? IntMatrix(k_cod.basis_size(0), 0) : k_cod.coboundary(q - 1);
        IntMatrix b_dom = (q == 0) ? IntMatrix(k_dom.basis_size(0), 0) : k_dom.coboundary(q - 1);

        // descent checks: cocycles to cocycles, coboundaries to coboundaries
        IntMatrix z_cod = from_columns(k_cod.basis_size(q), kernel_basis(delta_cod_q));
        IntMatrix mapped_cocycles = deg.cochain_map * z_cod;
        if (!(delta_dom_q * mapped_cocycles).is_zero())
            throw std::invalid_argument("map is not simplex-compatible: cocycles do not map to cocycles in degree " +
                                        std::to_string(q));
        IntMatrix mapped_cob = deg.cochain_map * b_cod;
        if (detail::rank_with(hstack(b_dom, mapped_cob), coeff) != detail::rank_with(b_dom, coeff))
            throw std::invalid_argument(
                "map is not simplex-compatible: coboundaries do not map to coboundaries in degree " +
                std::to_string(q));

        Int rank_b_cod = detail::rank_with(b_cod, coeff);
        Int rank_b_dom = detail::rank_with(b_dom, coeff);
        deg.source_dim = (k_cod.basis_size(q) - detail::rank_with(delta_cod_q, coeff)) - rank_b_cod;
        deg.target_dim = (k_dom.basis_size(q) - detail::rank_with(delta_dom_q, coeff)) - rank_b_dom;
        deg.rank = detail::rank_with(hstack(b_dom, mapped_cocycles), coeff) - rank_b_dom;
        deg.kernel_rank = deg.source_dim - deg.rank;
        out.degrees.push_back(std::move(deg));
    }
    return out;
}

}  // namespace dtop
