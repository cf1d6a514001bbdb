#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

#include "torus/ring.hpp"

namespace torus {

using Vec = std::vector<std::int64_t>;

// Dense matrix; column j is the image of source basis vector j.
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<Vec> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(r, Vec(c, 0)) {}
    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.a[i][i] = 1;
        return m;
    }
    std::int64_t& operator()(int i, int j) { return a[i][j]; }
    std::int64_t operator()(int i, int j) const { return a[i][j]; }
    Vec apply(const Vec& x) const {
        Vec y(rows, 0);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (a[i][j] && x[j]) y[i] = checked_add(y[i], checked_mul(a[i][j], x[j]));
        return y;
    }
    Vec column(int j) const {
        Vec v(rows);
        for (int i = 0; i < rows; ++i) v[i] = a[i][j];
        return v;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        Matrix m(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k)
                if (x.a[i][k])
                    for (int j = 0; j < y.cols; ++j)
                        if (y.a[k][j]) m.a[i][j] = checked_add(m.a[i][j], checked_mul(x.a[i][k], y.a[k][j]));
        return m;
    }
    bool is_zero() const {
        for (const auto& r : a)
            for (auto v : r)
                if (v) return false;
        return true;
    }
};

inline Matrix mod2(const Matrix& m) {
    Matrix r = m;
    for (auto& row : r.a)
        for (auto& v : row) v = v & 1;
    return r;
}

inline bool is_zero(const Vec& v) {
    for (auto x : v)
        if (x) return false;
    return true;
}

// P A Q = D with P, Q unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
    Matrix D, P, Pinv, Q, Qinv;
    int rank = 0;
    std::vector<std::int64_t> diagonal;
};

inline SmithForm smith_normal_form(const Matrix& A) {
    SmithForm s;
    const int m = A.rows, n = A.cols;
    Matrix D = A, P = Matrix::identity(m), Pinv = Matrix::identity(m), Q = Matrix::identity(n), Qinv = Matrix::identity(n);
    auto row_add = [&](int i, int j, std::int64_t c) {  // row_i += c row_j
        for (int k = 0; k < n; ++k) D.a[i][k] = checked_add(D.a[i][k], checked_mul(c, D.a[j][k]));
        for (int k = 0; k < m; ++k) P.a[i][k] = checked_add(P.a[i][k], checked_mul(c, P.a[j][k]));
        for (int k = 0; k < m; ++k) Pinv.a[k][j] = checked_add(Pinv.a[k][j], checked_mul(-c, Pinv.a[k][i]));
    };
    auto row_swap = [&](int i, int j) {
        if (i == j) return;
        std::swap(D.a[i], D.a[j]);
        std::swap(P.a[i], P.a[j]);
        for (int k = 0; k < m; ++k) std::swap(Pinv.a[k][i], Pinv.a[k][j]);
    };
    auto row_neg = [&](int i) {
        for (int k = 0; k < n; ++k) D.a[i][k] = -D.a[i][k];
        for (int k = 0; k < m; ++k) P.a[i][k] = -P.a[i][k];
        for (int k = 0; k < m; ++k) Pinv.a[k][i] = -Pinv.a[k][i];
    };
    auto col_add = [&](int i, int j, std::int64_t c) {  // col_i += c col_j
        for (int k = 0; k < m; ++k) D.a[k][i] = checked_add(D.a[k][i], checked_mul(c, D.a[k][j]));
        for (int k = 0; k < n; ++k) Q.a[k][i] = checked_add(Q.a[k][i], checked_mul(c, Q.a[k][j]));
        for (int k = 0; k < n; ++k) Qinv.a[j][k] = checked_add(Qinv.a[j][k], checked_mul(-c, Qinv.a[i][k]));
    };
    auto col_swap = [&](int i, int j) {
        if (i == j) return;
        for (int k = 0; k < m; ++k) std::swap(D.a[k][i], D.a[k][j]);
        for (int k = 0; k < n; ++k) std::swap(Q.a[k][i], Q.a[k][j]);
        std::swap(Qinv.a[i], Qinv.a[j]);
    };
    int t = 0;
    while (t < m && t < n) {
        // Smallest nonzero entry in the trailing block.
        int bi = -1, bj = -1;
        std::int64_t best = 0;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (D.a[i][j] && (bi < 0 || std::llabs(D.a[i][j]) < best)) {
                    best = std::llabs(D.a[i][j]);
                    bi = i;
                    bj = j;
                }
        if (bi < 0) break;
        row_swap(t, bi);
        col_swap(t, bj);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (!D.a[i][t]) continue;
                row_add(i, t, -(D.a[i][t] / D.a[t][t]));
                if (D.a[i][t]) {
                    row_swap(t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (!D.a[t][j]) continue;
                col_add(j, t, -(D.a[t][j] / D.a[t][t]));
                if (D.a[t][j]) {
                    col_swap(t, j);
                    clean = false;
                }
            }
            if (clean) {
                // Divisibility of the remaining block.
                for (int i = t + 1; i < m && clean; ++i)
                    for (int j = t + 1; j < n; ++j)
                        if (D.a[i][j] % D.a[t][t] != 0) {
                            row_add(t, i, 1);
                            clean = false;
                            break;
                        }
            }
        }
        if (D.a[t][t] < 0) row_neg(t);
        ++t;
    }
    s.rank = t;
    for (int i = 0; i < t; ++i) s.diagonal.push_back(D.a[i][i]);
    s.D = std::move(D);
    s.P = std::move(P);
    s.Pinv = std::move(Pinv);
    s.Q = std::move(Q);
    s.Qinv = std::move(Qinv);
    return s;
}

// Rank over F2.
inline int rank_f2(const Matrix& A) {
    Matrix M = mod2(A);
    int r = 0;
    for (int j = 0; j < M.cols && r < M.rows; ++j) {
        int p = -1;
        for (int i = r; i < M.rows; ++i)
            if (M.a[i][j]) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(M.a[p], M.a[r]);
        for (int i = 0; i < M.rows; ++i)
            if (i != r && M.a[i][j])
                for (int k = 0; k < M.cols; ++k) M.a[i][k] ^= M.a[r][k];
        ++r;
    }
    return r;
}

// Kernel basis over F2 (as vectors in the source).
inline std::vector<Vec> kernel_f2(const Matrix& A) {
    Matrix M = mod2(A);
    std::vector<int> pivcol;
    int r = 0;
    for (int j = 0; j < M.cols && r < M.rows; ++j) {
        int p = -1;
        for (int i = r; i < M.rows; ++i)
            if (M.a[i][j]) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(M.a[p], M.a[r]);
        for (int i = 0; i < M.rows; ++i)
            if (i != r && M.a[i][j])
                for (int k = 0; k < M.cols; ++k) M.a[i][k] ^= M.a[r][k];
        pivcol.push_back(j);
        ++r;
    }
    std::vector<bool> is_piv(M.cols, false);
    for (int j : pivcol) is_piv[j] = true;
    std::vector<Vec> out;
    for (int f = 0; f < M.cols; ++f) {
        if (is_piv[f]) continue;
        Vec v(M.cols, 0);
        v[f] = 1;
        for (int i = 0; i < r; ++i)
            if (M.a[i][f]) v[pivcol[i]] = 1;
        out.push_back(v);
    }
    return out;
}

// Homology of C_prev --in--> C --out--> C_next at C.
struct HomologyData {
    int dim = 0;                          // size of the middle basis
    int rank = 0;                         // free rank (dimension over F2)
    std::vector<std::int64_t> torsion;    // invariant factors > 1
    std::vector<Vec> representatives;     // free generators first, then torsion
    bool boundary_composite_zero = true;  // out * in == 0
};

class Homology {
public:
    Homology(const Matrix& in, const Matrix& out, int dim, bool over_f2) : f2_(over_f2) {
        data_.dim = dim;
        Matrix din = in, dout = out;
        if (din.rows != dim) din = Matrix(dim, 0);
        if (dout.cols != dim) dout = Matrix(0, dim);
        if (f2_) {
            din = mod2(din);
            dout = mod2(dout);
        }
        if (din.cols && dout.rows) {
            Matrix c = dout * din;
            data_.boundary_composite_zero = f2_ ? mod2(c).is_zero() : c.is_zero();
        }
        if (f2_) build_f2(din, dout);
        else build_z(din, dout);
    }

    const HomologyData& data() const { return data_; }

    bool is_cycle(const Vec& x) const {
        Vec y = out_.apply(x);
        for (auto v : y)
            if (f2_ ? (v & 1) : v) return false;
        return true;
    }

    // Coordinates of the class of cycle x in the representative basis;
    // torsion coordinates are reduced modulo their factor.
    Vec class_of(const Vec& x) const {
        if (!is_cycle(x)) throw std::invalid_argument("class_of: not a cycle");
        return f2_ ? class_f2(x) : class_z(x);
    }

    bool is_boundary(const Vec& x) const {
        if (!is_cycle(x)) return false;
        for (auto v : class_of(x))
            if (v) return false;
        return true;
    }

private:
    void build_f2(const Matrix& din, const Matrix& dout) {
        out_ = dout;
        // Echelon basis of the image, then kernel vectors independent of it.
        for (int j = 0; j < din.cols; ++j) insert_f2(din.column(j), -1);
        auto ker = kernel_f2(dout);
        for (const auto& k : ker)
            if (insert_f2(k, static_cast<int>(data_.representatives.size()))) data_.representatives.push_back(k);
        data_.rank = static_cast<int>(data_.representatives.size());
    }

    // Reduced rows with pivots and a record of which representatives they contain.
    bool insert_f2(Vec v, int rep) {
        std::vector<std::uint8_t> combo;
        if (rep >= 0) {
            combo.assign(rep + 1, 0);
            combo[rep] = 1;
        }
        for (auto& x : v) x &= 1;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (v[piv_[r]]) {
                for (std::size_t k = 0; k < v.size(); ++k) v[k] ^= rows_[r][k];
                xor_combo(combo, combos_[r]);
            }
        }
        int p = -1;
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k]) {
                p = static_cast<int>(k);
                break;
            }
        if (p < 0) return false;
        // Keep rows fully reduced at their pivots.
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (rows_[r][p]) {
                for (std::size_t k = 0; k < v.size(); ++k) rows_[r][k] ^= v[k];
                xor_combo(combos_[r], combo);
            }
        rows_.push_back(v);
        piv_.push_back(p);
        combos_.push_back(combo);
        return true;
    }

    static void xor_combo(std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
        if (a.size() < b.size()) a.resize(b.size(), 0);
        for (std::size_t i = 0; i < b.size(); ++i) a[i] ^= b[i];
    }

    Vec class_f2(Vec v) const {
        std::vector<std::uint8_t> combo;
        for (auto& x : v) x &= 1;
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (v[piv_[r]]) {
                for (std::size_t k = 0; k < v.size(); ++k) v[k] ^= rows_[r][k];
                xor_combo(combo, combos_[r]);
            }
        if (!is_zero(v)) throw std::logic_error("cycle outside the span of image and representatives");
        Vec c(data_.rank, 0);
        for (std::size_t i = 0; i < combo.size() && i < c.size(); ++i) c[i] = combo[i];
        return c;
    }

    void build_z(const Matrix& din, const Matrix& dout) {
        out_ = dout;
        const int n = data_.dim;
        Matrix Qinv, Q;
        int r = 0;
        if (dout.rows) {
            auto s = smith_normal_form(dout);
            Q = s.Q;
            Qinv = s.Qinv;
            r = s.rank;
        } else {
            Q = Matrix::identity(n);
            Qinv = Matrix::identity(n);
        }
        const int k = n - r;
        // Kernel basis K = Q[:, r:]; image in kernel coordinates.
        Matrix K(n, k);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < k; ++j) K.a[i][j] = Q.a[i][r + j];
        kr_ = r;
        qinv_ = Qinv;
        Matrix X(k, din.cols);
        if (din.cols) {
            Matrix Y = Qinv * din;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < din.cols; ++j) X.a[i][j] = Y.a[r + i][j];
        }
        auto s2 = smith_normal_form(X);
        p2_ = s2.P;
        diag_ = s2.diagonal;
        Matrix F = K * s2.Pinv;  // new kernel basis; image spanned by d_i f_i
        std::vector<Vec> free_reps, tors_reps;
        for (int i = 0; i < k; ++i) {
            std::int64_t d = i < s2.rank ? s2.diagonal[i] : 0;
            if (d == 0) free_reps.push_back(F.column(i));
            else if (d > 1) {
                tors_reps.push_back(F.column(i));
                data_.torsion.push_back(d);
            }
        }
        data_.rank = static_cast<int>(free_reps.size());
        data_.representatives = free_reps;
        data_.representatives.insert(data_.representatives.end(), tors_reps.begin(), tors_reps.end());
    }

    Vec class_z(const Vec& x) const {
        Vec y = qinv_.apply(x);
        Vec yk(y.begin() + kr_, y.end());
        Vec z = p2_.apply(yk);
        const int k = static_cast<int>(z.size());
        const int r2 = static_cast<int>(diag_.size());
        Vec out;
        for (int i = r2; i < k; ++i) out.push_back(z[i]);
        for (int i = 0; i < r2; ++i)
            if (diag_[i] > 1) out.push_back(((z[i] % diag_[i]) + diag_[i]) % diag_[i]);
        return out;
    }

    bool f2_;
    HomologyData data_;
    Matrix out_;
    std::vector<Vec> rows_;
    std::vector<int> piv_;
    std::vector<std::vector<std::uint8_t>> combos_;
    Matrix qinv_, p2_;
    int kr_ = 0;
    std::vector<std::int64_t> diag_;
};

}  // namespace torus
