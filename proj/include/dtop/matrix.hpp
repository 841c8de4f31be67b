#pragma once

// Dense exact integer matrices over arbitrary-precision integers, Smith
// normal form with unimodular transforms, integer kernel bases and mod-p
// ranks. Transform matrices of Smith reductions outgrow any fixed width, so
// the backend is boost's cpp_int; arithmetic is exact and never wraps.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace dtop {

// Eager (non-expression-template) variant: operations return plain values,
// so mixed expressions and aliasing assignments behave like built-in ints.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

// Arithmetic helpers kept as named functions; with cpp_int they are exact.
inline Int checked_add(const Int& a, const Int& b) { return a + b; }
inline Int checked_sub(const Int& a, const Int& b) { return a - b; }
inline Int checked_mul(const Int& a, const Int& b) { return a * b; }
inline Int checked_neg(const Int& a) { return -a; }
inline Int abs_val(const Int& a) { return a < 0 ? Int(-a) : a; }

inline std::string to_string(const Int& v) { return v.str(); }

inline Int gcd_val(Int a, Int b) {
    a = abs_val(a);
    b = abs_val(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Quotient rounding the remainder into [-|b|/2, |b|/2]; keeps elimination
/// entries small.
inline Int balanced_quotient(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (2 * abs_val(r) > abs_val(b)) q += ((r > 0) == (b > 0)) ? 1 : -1;
    return q;
}

class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
    }
    IntMatrix(int rows, int cols, std::vector<Int> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != static_cast<size_t>(rows) * cols)
            throw std::invalid_argument("matrix data size mismatch");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    Int at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const {
        for (Int v : data_)
            if (v != 0) return false;
        return true;
    }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        IntMatrix out(rows_, o.cols_);
        for (int r = 0; r < rows_; ++r)
            for (int k = 0; k < cols_; ++k) {
                Int v = at(r, k);
                if (v == 0) continue;
                for (int c = 0; c < o.cols_; ++c)
                    out.at(r, c) = checked_add(out.at(r, c), checked_mul(v, o.at(k, c)));
            }
        return out;
    }

    bool operator==(const IntMatrix&) const = default;

    void swap_rows(int a, int b) {
        for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
    }
    void swap_cols(int a, int b) {
        for (int r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
    }
    /// row[a] += f * row[b]
    void add_row(int a, int b, Int f) {
        for (int c = 0; c < cols_; ++c) at(a, c) = checked_add(at(a, c), checked_mul(f, at(b, c)));
    }
    /// col[a] += f * col[b]
    void add_col(int a, int b, Int f) {
        for (int r = 0; r < rows_; ++r) at(r, a) = checked_add(at(r, a), checked_mul(f, at(r, b)));
    }
    void negate_row(int a) {
        for (int c = 0; c < cols_; ++c) at(a, c) = checked_neg(at(a, c));
    }

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

inline std::string to_string(const IntMatrix& m) {
    std::string s;
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c) s += ' ';
            s += to_string(m.at(r, c));
        }
        s += '\n';
    }
    return s;
}

/// U * A * V = D with D diagonal, d_1 | d_2 | ..., d_i >= 0, U and V unimodular.
struct SmithForm {
    IntMatrix d;  // same shape as A, diagonal
    IntMatrix u;  // rows x rows
    IntMatrix v;  // cols x cols
    int rank = 0;
    std::vector<Int> diagonal;  // min(rows, cols) entries
};

inline SmithForm smith_normal_form(const IntMatrix& a) {
    SmithForm out;
    const int m = a.rows(), n = a.cols();
    out.d = a;
    out.u = IntMatrix::identity(m);
    out.v = IntMatrix::identity(n);
    IntMatrix& d = out.d;
    IntMatrix& u = out.u;
    IntMatrix& v = out.v;

    const int steps = std::min(m, n);
    for (int s = 0; s < steps; ++s) {
        for (;;) {
            // smallest nonzero entry of the trailing submatrix into the pivot slot
            int pr = -1, pc = -1;
            for (int r = s; r < m; ++r)
                for (int c = s; c < n; ++c)
                    if (d.at(r, c) != 0 &&
                        (pr < 0 || abs_val(d.at(r, c)) < abs_val(d.at(pr, pc)))) {
                        pr = r;
                        pc = c;
                    }
            if (pr < 0) break;  // trailing submatrix all zero
            if (pr != s) {
                d.swap_rows(s, pr);
                u.swap_rows(s, pr);
            }
            if (pc != s) {
                d.swap_cols(s, pc);
                v.swap_cols(s, pc);
            }

            bool reduced = true;
            for (int r = s + 1; r < m; ++r) {
                if (d.at(r, s) == 0) continue;
                Int q = balanced_quotient(d.at(r, s), d.at(s, s));
                if (q != 0) {
                    d.add_row(r, s, checked_neg(q));
                    u.add_row(r, s, checked_neg(q));
                }
                if (d.at(r, s) != 0) reduced = false;
            }
            for (int c = s + 1; c < n; ++c) {
                if (d.at(s, c) == 0) continue;
                Int q = balanced_quotient(d.at(s, c), d.at(s, s));
                if (q != 0) {
                    d.add_col(c, s, checked_neg(q));
                    v.add_col(c, s, checked_neg(q));
                }
                if (d.at(s, c) != 0) reduced = false;
            }
            if (!reduced) continue;  // remainders left; pick a new pivot

            // pivot must divide the whole trailing submatrix for the chain
            int br = -1;
            for (int r = s + 1; r < m && br < 0; ++r)
                for (int c = s + 1; c < n; ++c)
                    if (d.at(r, c) % d.at(s, s) != 0) {
                        br = r;
                        break;
                    }
            if (br < 0) break;
            d.add_row(s, br, 1);
            u.add_row(s, br, 1);
        }
        if (d.at(s, s) < 0) {
            d.negate_row(s);
            u.negate_row(s);
        }
    }

    for (int i = 0; i < steps; ++i) {
        out.diagonal.push_back(d.at(i, i));
        if (d.at(i, i) != 0) ++out.rank;
    }
    return out;
}

inline int rank(const IntMatrix& a) { return smith_normal_form(a).rank; }

/// Integer basis of the rational null space of A (columns of V at zero
/// diagonal positions of the Smith form).
inline std::vector<std::vector<Int>> kernel_basis(const IntMatrix& a) {
    SmithForm s = smith_normal_form(a);
    std::vector<std::vector<Int>> basis;
    for (int c = 0; c < a.cols(); ++c) {
        bool zero_diag = c >= static_cast<int>(s.diagonal.size()) || s.diagonal[static_cast<size_t>(c)] == 0;
        if (!zero_diag) continue;
        std::vector<Int> col(static_cast<size_t>(a.cols()));
        for (int r = 0; r < a.cols(); ++r) col[static_cast<size_t>(r)] = s.v.at(r, c);
        basis.push_back(std::move(col));
    }
    return basis;
}

/// Determinant by exact fraction-free (Bareiss) elimination.
inline Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    int n = a.rows();
    if (n == 0) return 1;
    IntMatrix w = a;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k) == 0) {
            int pr = -1;
            for (int r = k + 1; r < n; ++r)
                if (w.at(r, k) != 0) {
                    pr = r;
                    break;
                }
            if (pr < 0) return 0;
            w.swap_rows(k, pr);
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) {
                Int num = checked_sub(checked_mul(w.at(r, c), w.at(k, k)),
                                      checked_mul(w.at(r, k), w.at(k, c)));
                w.at(r, c) = num / prev;  // divides exactly (Bareiss)
            }
            w.at(r, k) = 0;
        }
        prev = w.at(k, k);
    }
    Int det = w.at(n - 1, n - 1);
    return sign > 0 ? det : checked_neg(det);
}

/// Rank of A over the prime field F_p (Gaussian elimination mod p).
inline int rank_mod_p(const IntMatrix& a, Int p) {
    if (p < 2) throw std::invalid_argument("modulus must be a prime >= 2");
    int m = a.rows(), n = a.cols();
    std::vector<std::vector<Int>> w(static_cast<size_t>(m), std::vector<Int>(static_cast<size_t>(n)));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) w[static_cast<size_t>(r)][static_cast<size_t>(c)] = ((a.at(r, c) % p) + p) % p;
    auto inv_mod = [&](Int x) {
        Int r0 = p, r1 = x % p, s0 = 0, s1 = 1;
        while (r1 != 0) {
            Int q = r0 / r1;
            Int r2 = r0 - q * r1, s2 = s0 - q * s1;
            r0 = r1;
            r1 = r2;
            s0 = s1;
            s1 = s2;
        }
        if (r0 != 1) throw std::invalid_argument("modulus is not prime");
        return ((s0 % p) + p) % p;
    };
    int rk = 0;
    for (int c = 0; c < n && rk < m; ++c) {
        int pr = -1;
        for (int r = rk; r < m; ++r)
            if (w[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(w[static_cast<size_t>(pr)], w[static_cast<size_t>(rk)]);
        Int inv = inv_mod(w[static_cast<size_t>(rk)][static_cast<size_t>(c)]);
        for (int cc = c; cc < n; ++cc)
            w[static_cast<size_t>(rk)][static_cast<size_t>(cc)] =
                (w[static_cast<size_t>(rk)][static_cast<size_t>(cc)] * inv) % p;
        for (int r = 0; r < m; ++r) {
            if (r == rk) continue;
            Int f = w[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (f == 0) continue;
            for (int cc = c; cc < n; ++cc) {
                Int val = w[static_cast<size_t>(r)][static_cast<size_t>(cc)] -
                          f * w[static_cast<size_t>(rk)][static_cast<size_t>(cc)] % p;
                w[static_cast<size_t>(r)][static_cast<size_t>(cc)] = ((val % p) + p) % p;
            }
        }
        ++rk;
    }
    return rk;
}

/// Rank of the block matrix [A | B] (columns concatenated).
inline IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    IntMatrix out(a.rows(), a.cols() + b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
        for (int c = 0; c < b.cols(); ++c) out.at(r, a.cols() + c) = b.at(r, c);
    }
    return out;
}

inline IntMatrix from_columns(int rows, const std::vector<std::vector<Int>>& cols) {
    IntMatrix out(rows, static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c) {
        if (static_cast<int>(cols[c].size()) != rows) throw std::invalid_argument("column length mismatch");
        for (int r = 0; r < rows; ++r) out.at(r, static_cast<int>(c)) = cols[c][static_cast<size_t>(r)];
    }
    return out;
}

}  // namespace dtop
