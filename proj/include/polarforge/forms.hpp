#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "projgeom.hpp"

namespace polarforge {

enum class SpaceType { Qplus, Qparabolic, Qminus, W };

inline std::string space_type_name(SpaceType t) {
    switch (t) {
        case SpaceType::Qplus: return "Q+";
        case SpaceType::Qparabolic: return "Q";
        case SpaceType::Qminus: return "Q-";
        case SpaceType::W: return "W";
    }
    return "?";
}

/// Space spec grammar used by the CLI and certificates: "TYPE:projdim:q",
/// e.g. "Q-:5:3", "Q+:7:3", "W:5:3".
struct SpaceSpec {
    SpaceType type;
    int n; // projective dimension of the ambient space
    unsigned q;

    std::string to_string() const {
        return space_type_name(type) + ":" + std::to_string(n) + ":" + std::to_string(q);
    }

    static SpaceSpec parse(const std::string& s) {
        const auto c1 = s.find(':');
        const auto c2 = s.find(':', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw InvalidArgument("space spec must be TYPE:projdim:q, got '" + s + "'");
        const std::string ts = s.substr(0, c1);
        SpaceType t;
        if (ts == "Q+") t = SpaceType::Qplus;
        else if (ts == "Q") t = SpaceType::Qparabolic;
        else if (ts == "Q-") t = SpaceType::Qminus;
        else if (ts == "W") t = SpaceType::W;
        else throw InvalidArgument("unknown space type '" + ts + "'");
        const int n = std::stoi(s.substr(c1 + 1, c2 - c1 - 1));
        const unsigned q = static_cast<unsigned>(std::stoul(s.substr(c2 + 1)));
        return SpaceSpec{t, n, q};
    }
};

/// Rank and Witt-type parameter e of the standard polar spaces. The parity of
/// n is validated against the type.
inline int space_rank(SpaceType t, int n) {
    switch (t) {
        case SpaceType::Qplus:
            if (n % 2 == 0) throw IncompatibleDimension("Q+ needs odd projective dimension");
            return (n + 1) / 2;
        case SpaceType::Qminus:
            if (n % 2 == 0) throw IncompatibleDimension("Q- needs odd projective dimension");
            return (n - 1) / 2;
        case SpaceType::Qparabolic:
            if (n % 2 != 0) throw IncompatibleDimension("Q needs even projective dimension");
            return n / 2;
        case SpaceType::W:
            if (n % 2 == 0) throw IncompatibleDimension("W needs odd projective dimension");
            return (n + 1) / 2;
    }
    throw IncompatibleDimension("bad type");
}

inline int space_param_e(SpaceType t) {
    switch (t) {
        case SpaceType::Qplus: return 0;
        case SpaceType::Qparabolic: return 1;
        case SpaceType::W: return 1;
        case SpaceType::Qminus: return 2;
    }
    throw IncompatibleDimension("bad type");
}

/// Number of points of a polar space of rank r and parameter e over GF(q):
/// (q^r - 1)(q^{r+e-1} + 1)/(q - 1).
inline long long polar_point_count(unsigned q, int r, int e) {
    long long qr = 1;
    for (int i = 0; i < r; ++i) qr *= q;
    long long qre = 1;
    for (int i = 0; i < r + e - 1; ++i) qre *= q;
    return (qr - 1) / (static_cast<long long>(q) - 1) * (qre + 1);
}

/// Number of generators: prod_{i=0}^{r-1} (q^{i+e} + 1).
inline long long polar_generator_count(unsigned q, int r, int e) {
    long long total = 1;
    for (int i = 0; i < r; ++i) {
        long long qe = 1;
        for (int j = 0; j < i + e; ++j) qe *= q;
        total *= qe + 1;
    }
    return total;
}

// ---------------------------------------------------------------------------
// quadratic forms
// ---------------------------------------------------------------------------

/// Quadratic form f(x) = x S xᵀ with S a symmetric Gram matrix (odd
/// characteristic only). The polar form is B(x,y) = f(x+y) - f(x) - f(y)
/// = 2 x S yᵀ.
class QuadraticForm {
public:
    QuadraticForm() = default;
    QuadraticForm(const FieldCtx& F, Mat gram) : s_(std::move(gram)) {
        for (std::size_t i = 0; i < s_.size(); ++i)
            for (std::size_t j = 0; j < s_.size(); ++j)
                if (s_[i][j] != s_[j][i])
                    throw InvalidArgument("Gram matrix must be symmetric");
        polar_ = s_;
        for (auto& row : polar_)
            for (auto& v : row) v = F.add(v, v);
    }

    std::size_t dim() const { return s_.size(); }        // vector-space dimension
    int projdim() const { return static_cast<int>(s_.size()) - 1; }
    const Mat& gram() const { return s_; }
    const Mat& polar_gram() const { return polar_; }

    Elem eval(const FieldCtx& F, const Row& x) const {
        if (x.size() != s_.size()) throw DimensionMismatch("eval");
        Elem acc = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            Elem rowsum = 0;
            for (std::size_t j = 0; j < x.size(); ++j)
                rowsum = F.add(rowsum, F.mul(s_[i][j], x[j]));
            acc = F.add(acc, F.mul(x[i], rowsum));
        }
        return acc;
    }

    Elem bilinear(const FieldCtx& F, const Row& x, const Row& y) const {
        if (x.size() != s_.size() || y.size() != s_.size())
            throw DimensionMismatch("bilinear");
        Elem acc = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            Elem rowsum = 0;
            for (std::size_t j = 0; j < y.size(); ++j)
                rowsum = F.add(rowsum, F.mul(polar_[i][j], y[j]));
            acc = F.add(acc, F.mul(x[i], rowsum));
        }
        return acc;
    }

    bool nondegenerate(const FieldCtx& F) const {
        Mat m = s_;
        return rref(F, m), m.size() == s_.size();
    }

    /// Form induced on a subspace, in coordinates of the subspace basis:
    /// Gram = B S Bᵀ.
    QuadraticForm restrict_to(const FieldCtx& F, const Subspace& s) const {
        const Mat& b = s.basis();
        Mat g(b.size(), Row(b.size(), 0));
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) {
                Elem acc = 0;
                for (std::size_t k = 0; k < s_.size(); ++k) {
                    if (b[i][k] == 0) continue;
                    Elem rowsum = 0;
                    for (std::size_t l = 0; l < s_.size(); ++l)
                        rowsum = F.add(rowsum, F.mul(s_[k][l], b[j][l]));
                    acc = F.add(acc, F.mul(b[i][k], rowsum));
                }
                g[i][j] = acc;
            }
        return QuadraticForm(F, std::move(g));
    }

private:
    Mat s_, polar_;
};

/// Reflexive bilinear form, symmetric or alternating, given by its matrix M:
/// pairing x M yᵀ.
class BilinearForm {
public:
    enum class Kind { Symmetric, Alternating };

    BilinearForm() = default;
    BilinearForm(const FieldCtx& F, Mat m, Kind kind) : m_(std::move(m)), kind_(kind) {
        for (std::size_t i = 0; i < m_.size(); ++i)
            for (std::size_t j = 0; j < m_.size(); ++j) {
                if (kind_ == Kind::Symmetric && m_[i][j] != m_[j][i])
                    throw InvalidArgument("symmetric form matrix must be symmetric");
                if (kind_ == Kind::Alternating && m_[i][j] != F.neg(m_[j][i]))
                    throw InvalidArgument("alternating form matrix must be antisymmetric");
            }
        if (kind_ == Kind::Alternating)
            for (std::size_t i = 0; i < m_.size(); ++i)
                if (m_[i][i] != 0) throw InvalidArgument("alternating form needs zero diagonal");
    }

    std::size_t dim() const { return m_.size(); }
    Kind kind() const { return kind_; }
    const Mat& matrix() const { return m_; }

    Elem pair(const FieldCtx& F, const Row& x, const Row& y) const {
        if (x.size() != m_.size() || y.size() != m_.size())
            throw DimensionMismatch("pair");
        Elem acc = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            Elem rowsum = 0;
            for (std::size_t j = 0; j < y.size(); ++j)
                rowsum = F.add(rowsum, F.mul(m_[i][j], y[j]));
            acc = F.add(acc, F.mul(x[i], rowsum));
        }
        return acc;
    }

    bool nondegenerate(const FieldCtx& F) const {
        Mat m = m_;
        return rref(F, m), m.size() == m_.size();
    }

private:
    Mat m_;
    Kind kind_ = Kind::Symmetric;
};

/// The canonical forms. For Q-: X0X1 + ... + X_{2n-2}X_{2n-1} + X² - αY² on
/// the last two coordinates, α the field's fixed non-square. For Q+: the
/// antidiagonal sum X0X_n + X1X_{n-1} + ..., which in dimension 5 is the
/// Klein quadric X0X5 + X1X4 + X2X3. For Q: consecutive pairs plus a final
/// square.
inline QuadraticForm standard_quadratic(const FieldCtx& F, SpaceType t, int n) {
    space_rank(t, n); // parity validation
    const std::size_t d = static_cast<std::size_t>(n) + 1;
    Mat s(d, Row(d, 0));
    const Elem h = F.half();
    switch (t) {
        case SpaceType::Qplus:
            for (std::size_t i = 0; 2 * i + 1 < d; ++i) {
                s[i][d - 1 - i] = h;
                s[d - 1 - i][i] = h;
            }
            break;
        case SpaceType::Qparabolic:
            for (std::size_t i = 0; 2 * i + 1 < d - 1; ++i) {
                s[2 * i][2 * i + 1] = h;
                s[2 * i + 1][2 * i] = h;
            }
            s[d - 1][d - 1] = 1;
            break;
        case SpaceType::Qminus: {
            for (std::size_t i = 0; 2 * i + 1 < d - 2; ++i) {
                s[2 * i][2 * i + 1] = h;
                s[2 * i + 1][2 * i] = h;
            }
            s[d - 2][d - 2] = 1;
            s[d - 1][d - 1] = F.neg(F.nonsquare()); // X² - αY², irreducible
            break;
        }
        case SpaceType::W:
            throw InvalidArgument("W is not a quadratic form; use standard_alternating");
    }
    return QuadraticForm(F, std::move(s));
}

/// Alternating form X0Y1 - X1Y0 + X2Y3 - X3Y2 + ...
inline BilinearForm standard_alternating(const FieldCtx& F, int n) {
    space_rank(SpaceType::W, n);
    const std::size_t d = static_cast<std::size_t>(n) + 1;
    Mat m(d, Row(d, 0));
    for (std::size_t i = 0; 2 * i + 1 < d; ++i) {
        m[2 * i][2 * i + 1] = 1;
        m[2 * i + 1][2 * i] = F.neg(1);
    }
    return BilinearForm(F, std::move(m), BilinearForm::Kind::Alternating);
}

using FormVariant = std::variant<QuadraticForm, BilinearForm>;

inline std::size_t form_dim(const FormVariant& f) {
    return std::visit([](const auto& g) { return g.dim(); }, f);
}

inline bool form_is_singular_point(const FieldCtx& F, const FormVariant& f, const Row& x) {
    if (std::holds_alternative<QuadraticForm>(f))
        return std::get<QuadraticForm>(f).eval(F, x) == 0;
    return true; // alternating: every point is isotropic
}

inline Elem form_pair(const FieldCtx& F, const FormVariant& f, const Row& x, const Row& y) {
    if (std::holds_alternative<QuadraticForm>(f))
        return std::get<QuadraticForm>(f).bilinear(F, x, y);
    return std::get<BilinearForm>(f).pair(F, x, y);
}

inline const Mat& form_pair_matrix(const FormVariant& f) {
    if (std::holds_alternative<QuadraticForm>(f))
        return std::get<QuadraticForm>(f).polar_gram();
    return std::get<BilinearForm>(f).matrix();
}

// ---------------------------------------------------------------------------
// perp and section classification
// ---------------------------------------------------------------------------

/// A^⊥ with respect to a non-degenerate pairing matrix: the solution space of
/// (basis(A) · M) yᵀ = 0. For the empty subspace this is the whole space.
inline Subspace perp(const FieldCtx& F, const Mat& pairing, const Subspace& a) {
    const std::size_t d = pairing.size();
    {
        Mat m = pairing;
        if (rref(F, m), m.size() != d) throw DegenerateForm("pairing matrix is degenerate");
    }
    if (a.is_empty())
        return Subspace::from_rows(F, identity_matrix(d), d);
    const Mat cond = mat_mul(F, a.basis(), pairing);
    return Subspace::from_rows(F, nullspace(F, cond, d), d);
}

inline Subspace perp(const FieldCtx& F, const FormVariant& f, const Subspace& a) {
    return perp(F, form_pair_matrix(f), a);
}

enum class BaseType { Hyperbolic, Elliptic, Parabolic, Symplectic, Empty };

inline std::string base_type_name(BaseType t) {
    switch (t) {
        case BaseType::Hyperbolic: return "hyperbolic";
        case BaseType::Elliptic: return "elliptic";
        case BaseType::Parabolic: return "parabolic";
        case BaseType::Symplectic: return "symplectic";
        case BaseType::Empty: return "empty";
    }
    return "?";
}

/// Section type of a subspace against a form: the section is a cone with
/// vertex the radical A ∩ A^⊥ and base a non-degenerate polar space.
struct SectionClass {
    int radical_projdim; // -1 when the induced form is non-degenerate
    BaseType base_type;
    int base_projdim;    // ambient projective dimension of the base
    long long npoints;   // points of the section

    bool nondegenerate() const { return radical_projdim == -1; }
};

/// Point count of the non-degenerate quadric of type `t` in projective
/// dimension `pd` over GF(q).
inline long long quadric_point_count(BaseType t, int pd, unsigned q) {
    if (pd < 0) return 0;
    switch (t) {
        case BaseType::Hyperbolic: return polar_point_count(q, (pd + 1) / 2, 0);
        case BaseType::Elliptic: return polar_point_count(q, (pd - 1) / 2, 2);
        case BaseType::Parabolic: return polar_point_count(q, pd / 2, 1);
        case BaseType::Symplectic: return polar_point_count(q, (pd + 1) / 2, 1);
        case BaseType::Empty: return 0;
    }
    return 0;
}

/// Points of a cone with vertex of projective dimension rho over a base of
/// `base_count` points: |vertex| + q^{rho+1} · base_count.
inline long long cone_point_count(unsigned q, int rho, long long base_count) {
    long long vertex = 0, scale = 1;
    for (int i = 0; i <= rho; ++i) {
        vertex += scale;
        scale *= q;
    }
    return vertex + scale * base_count;
}

inline SectionClass classify_section(const FieldCtx& F, const FormVariant& f,
                                     const Subspace& a) {
    if (a.is_empty()) return SectionClass{-1, BaseType::Empty, -1, 0};
    const Subspace rad = meet(F, a, perp(F, f, a));
    const int rho = rad.projdim();
    const int t = a.projdim() - rho - 1;

    long long npoints = 0;
    const bool symplectic = std::holds_alternative<BilinearForm>(f);
    if (symplectic) {
        long long all = 1, scale = 1;
        for (int i = 0; i < a.projdim(); ++i) {
            scale *= F.q();
            all += scale;
        }
        npoints = all;
    } else {
        const auto& quad = std::get<QuadraticForm>(f);
        for (const auto& pt : points_in(F, a))
            if (quad.eval(F, pt) == 0) ++npoints;
    }

    BaseType base = BaseType::Empty;
    if (t >= 0) {
        if (symplectic) {
            if (t % 2 == 0) throw CountMismatch("symplectic radical has wrong parity");
            base = BaseType::Symplectic;
        } else {
            std::vector<BaseType> candidates;
            if (t % 2 == 0) candidates = {BaseType::Parabolic};
            else candidates = {BaseType::Hyperbolic, BaseType::Elliptic};
            bool found = false;
            for (auto c : candidates) {
                if (cone_point_count(F.q(), rho, quadric_point_count(c, t, F.q())) == npoints) {
                    base = c;
                    found = true;
                    break;
                }
            }
            if (!found)
                throw CountMismatch("section point count matches no quadric type (" +
                                    std::to_string(npoints) + " points, radical projdim " +
                                    std::to_string(rho) + ")");
        }
    }
    const SectionClass sc{rho, base, t, npoints};
    // cone-count invariant
    if (cone_point_count(F.q(), rho, quadric_point_count(base, t, F.q())) != npoints)
        throw CountMismatch("cone point-count invariant violated");
    return sc;
}

} // namespace polarforge
