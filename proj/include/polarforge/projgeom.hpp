#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gf.hpp"

namespace polarforge {

using Row = std::vector<Elem>;
using Mat = std::vector<Row>;

// ---------------------------------------------------------------------------
// dense linear algebra over GF(q), row-vector convention
// ---------------------------------------------------------------------------

inline Mat identity_matrix(std::size_t n) {
    Mat m(n, Row(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Mat transpose(const Mat& a) {
    if (a.empty()) return {};
    Mat t(a[0].size(), Row(a.size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

inline Mat mat_mul(const FieldCtx& F, const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return {};
    Mat c(a.size(), Row(b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            const Elem aik = a[i][k];
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j)
                c[i][j] = F.add(c[i][j], F.mul(aik, b[k][j]));
        }
    return c;
}

/// x * A for a row vector x.
inline Row row_mat(const FieldCtx& F, const Row& x, const Mat& a) {
    Row r(a.empty() ? 0 : a[0].size(), 0);
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] == 0) continue;
        for (std::size_t j = 0; j < r.size(); ++j)
            r[j] = F.add(r[j], F.mul(x[k], a[k][j]));
    }
    return r;
}

inline Elem dot(const FieldCtx& F, const Row& x, const Row& y) {
    Elem s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s = F.add(s, F.mul(x[i], y[i]));
    return s;
}

inline bool row_is_zero(const Row& r) {
    for (auto c : r)
        if (c) return false;
    return true;
}

/// In-place reduced row echelon form; returns the pivot columns. Zero rows
/// are removed, so afterwards m.size() is the rank.
inline std::vector<int> rref(const FieldCtx& F, Mat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t sel = r;
        while (sel < m.size() && m[sel][c] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[r], m[sel]);
        const Elem s = F.inv(m[r][c]);
        for (auto& v : m[r]) v = F.mul(v, s);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Elem f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] = F.sub(m[i][j], F.mul(f, m[r][j]));
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);
    return pivots;
}

/// Basis (rows) of { y : M yᵀ = 0 }.
inline Mat nullspace(const FieldCtx& F, Mat m, std::size_t cols) {
    const auto pivots = rref(F, m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    Mat basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        Row v(cols, 0);
        v[fc] = 1;
        for (std::size_t r = 0; r < m.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = F.neg(m[r][fc]);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Mat mat_inverse(const FieldCtx& F, const Mat& a) {
    const std::size_t n = a.size();
    Mat work(n, Row(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) work[i][j] = a[i][j];
        work[i][n + i] = 1;
    }
    const auto pivots = rref(F, work);
    if (work.size() != n || pivots.empty() || pivots.back() >= static_cast<int>(n) ||
        pivots.size() != n)
        throw DependentVectors("matrix is singular");
    Mat inv(n, Row(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = work[i][n + j];
    return inv;
}

// ---------------------------------------------------------------------------
// projective points
// ---------------------------------------------------------------------------

/// Scale so that the first nonzero coordinate is 1. Throws on the zero vector.
inline Row normalized(const FieldCtx& F, Row v) {
    std::size_t lead = 0;
    while (lead < v.size() && v[lead] == 0) ++lead;
    if (lead == v.size()) throw InvalidArgument("zero vector is not a projective point");
    if (v[lead] != 1) {
        const Elem s = F.inv(v[lead]);
        for (auto& c : v) c = F.mul(c, s);
    }
    return v;
}

inline std::uint64_t point_key(const Row& v, unsigned q) {
    std::uint64_t k = 0;
    for (auto c : v) k = k * q + c;
    return k;
}

/// Walk every normalized coordinate tuple of PG(ncoords-1, q) in ascending
/// lexicographic order of the tuple (c0, ..., c_{ncoords-1}).
template <typename Fn>
void for_each_proj_tuple(unsigned q, std::size_t ncoords, Fn&& fn) {
    // ascending lex order = blocks by position of the leading 1, last first
    for (std::size_t lead = ncoords; lead-- > 0;) {
        Row v(ncoords, 0);
        v[lead] = 1;
        const std::size_t nfree = ncoords - lead - 1;
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < nfree; ++i) total *= q;
        for (std::uint64_t t = 0; t < total; ++t) {
            std::uint64_t x = t;
            for (std::size_t i = nfree; i-- > 0;) { // last free digit varies fastest
                v[lead + 1 + i] = static_cast<Elem>(x % q);
                x /= q;
            }
            fn(v);
        }
    }
}

/// All points of PG(n, q), sorted by index (lexicographic on normalized
/// coordinates), with O(1) point -> index lookup.
class PointIndex {
public:
    PointIndex() = default;
    PointIndex(const FieldCtx& F, int n) : q_(F.q()) {
        std::uint64_t expected = 1;
        for (int i = 0; i <= n; ++i) expected *= F.q();
        expected = (expected - 1) / (F.q() - 1);
        pts_.reserve(expected);
        id_.reserve(expected * 2);
        for_each_proj_tuple(F.q(), static_cast<std::size_t>(n) + 1, [&](const Row& v) {
            id_.emplace(point_key(v, q_), static_cast<std::uint32_t>(pts_.size()));
            pts_.push_back(v);
        });
        if (pts_.size() != expected) throw CountMismatch("projective point enumeration");
    }

    std::size_t size() const { return pts_.size(); }
    const Row& operator[](std::size_t i) const { return pts_[i]; }

    std::optional<std::uint32_t> index_of(const Row& normalized_pt) const {
        const auto it = id_.find(point_key(normalized_pt, q_));
        if (it == id_.end()) return std::nullopt;
        return it->second;
    }

private:
    unsigned q_ = 0;
    std::vector<Row> pts_;
    std::unordered_map<std::uint64_t, std::uint32_t> id_;
};

// ---------------------------------------------------------------------------
// subspaces
// ---------------------------------------------------------------------------

/// Subspace of PG(n, q), held as the reduced-row-echelon basis of its
/// underlying vector subspace. RREF is the unique canonical form: equal
/// subspaces compare bit-equal. The empty subspace (projdim -1) has no rows.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ncols) : ncols_(ncols) {}

    static Subspace from_rows(const FieldCtx& F, Mat rows, std::size_t ncols) {
        Subspace s(ncols);
        rref(F, rows);
        s.b_ = std::move(rows);
        return s;
    }

    int projdim() const { return static_cast<int>(b_.size()) - 1; }
    std::size_t ncols() const { return ncols_; }
    const Mat& basis() const { return b_; }
    bool is_empty() const { return b_.empty(); }

    /// Residual of v after elimination against the basis; zero iff v lies in
    /// the subspace.
    Row reduce(const FieldCtx& F, Row v) const {
        for (const auto& row : b_) {
            std::size_t piv = 0;
            while (piv < ncols_ && row[piv] == 0) ++piv;
            if (v[piv] != 0) {
                const Elem f = v[piv];
                for (std::size_t j = 0; j < ncols_; ++j)
                    v[j] = F.sub(v[j], F.mul(f, row[j]));
            }
        }
        return v;
    }

    bool contains(const FieldCtx& F, const Row& v) const {
        return row_is_zero(reduce(F, v));
    }

    /// Coefficients c with sum_i c_i * basis_i == v, if v is a member.
    std::optional<Row> coordinates_of(const FieldCtx& F, const Row& v) const {
        Row coeff(b_.size(), 0);
        Row w = v;
        for (std::size_t i = 0; i < b_.size(); ++i) {
            std::size_t piv = 0;
            while (piv < ncols_ && b_[i][piv] == 0) ++piv;
            if (w[piv] != 0) {
                coeff[i] = w[piv];
                const Elem f = w[piv];
                for (std::size_t j = 0; j < ncols_; ++j)
                    w[j] = F.sub(w[j], F.mul(f, b_[i][j]));
            }
        }
        if (!row_is_zero(w)) return std::nullopt;
        return coeff;
    }

    /// Canonical byte key (RREF is unique per subspace).
    std::string key() const {
        std::string k;
        k.reserve(b_.size() * ncols_ + 2);
        k.push_back(static_cast<char>(b_.size()));
        for (const auto& row : b_)
            for (auto c : row) k.push_back(static_cast<char>(c));
        return k;
    }

    bool operator==(const Subspace& o) const { return ncols_ == o.ncols_ && b_ == o.b_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    std::size_t ncols_ = 0;
    Mat b_;
};

inline Subspace span_rows(const FieldCtx& F, Mat rows, std::size_t ncols) {
    return Subspace::from_rows(F, std::move(rows), ncols);
}

inline Subspace span_points(const FieldCtx& F, const std::vector<Row>& pts) {
    if (pts.empty()) throw InvalidArgument("span of no points");
    return span_rows(F, Mat(pts.begin(), pts.end()), pts[0].size());
}

inline Subspace extend(const FieldCtx& F, const Subspace& s, const Row& p) {
    Mat rows = s.basis();
    rows.push_back(p);
    return span_rows(F, std::move(rows), s.ncols());
}

inline Subspace subspace_sum(const FieldCtx& F, const Subspace& a, const Subspace& b) {
    if (a.ncols() != b.ncols()) throw DimensionMismatch("subspace_sum");
    Mat rows = a.basis();
    for (const auto& r : b.basis()) rows.push_back(r);
    return span_rows(F, std::move(rows), a.ncols());
}

/// Intersection of two subspaces via the Zassenhaus block trick.
inline Subspace meet(const FieldCtx& F, const Subspace& a, const Subspace& b) {
    if (a.ncols() != b.ncols()) throw DimensionMismatch("meet");
    const std::size_t n = a.ncols();
    Mat work;
    for (const auto& r : a.basis()) {
        Row w(2 * n, 0);
        for (std::size_t j = 0; j < n; ++j) w[j] = w[n + j] = r[j];
        work.push_back(std::move(w));
    }
    for (const auto& r : b.basis()) {
        Row w(2 * n, 0);
        for (std::size_t j = 0; j < n; ++j) w[j] = r[j];
        work.push_back(std::move(w));
    }
    rref(F, work);
    Mat inter;
    for (const auto& w : work) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = (w[j] == 0);
        if (left_zero) inter.emplace_back(w.begin() + static_cast<long>(n), w.end());
    }
    return span_rows(F, std::move(inter), n);
}

/// All points of a subspace, as normalized coordinate rows (ambient length).
inline std::vector<Row> points_in(const FieldCtx& F, const Subspace& s) {
    std::vector<Row> pts;
    if (s.is_empty()) return pts;
    for_each_proj_tuple(F.q(), s.basis().size(), [&](const Row& y) {
        pts.push_back(normalized(F, row_mat(F, y, s.basis())));
    });
    return pts;
}

/// Every full-rank RREF matrix with `rank` rows and `ncols` columns; the
/// canonical forms of the (rank-1)-dimensional subspaces of PG(ncols-1, q).
template <typename Fn>
void rref_enumerate(const FieldCtx& F, std::size_t rank, std::size_t ncols, Fn&& fn) {
    std::vector<std::size_t> piv(rank);
    // iterate pivot-column combinations in lexicographic order
    for (std::size_t i = 0; i < rank; ++i) piv[i] = i;
    const unsigned q = F.q();
    while (true) {
        // free positions: row i, columns > piv[i], excluding pivot columns
        std::vector<std::pair<std::size_t, std::size_t>> free_pos;
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t c = piv[i] + 1; c < ncols; ++c) {
                bool is_piv = false;
                for (std::size_t k = 0; k < rank; ++k)
                    if (piv[k] == c) { is_piv = true; break; }
                if (!is_piv) free_pos.emplace_back(i, c);
            }
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < free_pos.size(); ++i) total *= q;
        Mat m(rank, Row(ncols, 0));
        for (std::size_t i = 0; i < rank; ++i) m[i][piv[i]] = 1;
        for (std::uint64_t t = 0; t < total; ++t) {
            std::uint64_t x = t;
            for (const auto& [ri, ci] : free_pos) {
                m[ri][ci] = static_cast<Elem>(x % q);
                x /= q;
            }
            fn(m);
        }
        // next combination
        std::size_t i = rank;
        while (i-- > 0) {
            if (piv[i] + (rank - i) < ncols) {
                ++piv[i];
                for (std::size_t k = i + 1; k < rank; ++k) piv[k] = piv[k - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

/// All (q²+1)(q²+q+1) lines of PG(3, q), canonical and deterministically
/// ordered by direct RREF enumeration.
inline std::vector<Subspace> enumerate_lines_pg3(const FieldCtx& F) {
    std::vector<Subspace> lines;
    rref_enumerate(F, 2, 4, [&](const Mat& m) {
        lines.push_back(Subspace::from_rows(F, m, 4));
    });
    const std::uint64_t q = F.q();
    const std::uint64_t expected = (q * q + 1) * (q * q + q + 1);
    if (lines.size() != expected) throw CountMismatch("line enumeration in PG(3,q)");
    return lines;
}

} // namespace polarforge
