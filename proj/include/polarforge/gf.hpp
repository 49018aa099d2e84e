#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace polarforge {

/// A field element, encoded as an integer in [0, q). The base-p digits of the
/// encoding are the coefficients of the representing polynomial, least
/// significant digit first. Element 0 is the zero polynomial, element 1 the
/// constant 1.
using Elem = std::uint16_t;

namespace gfdetail {

using Poly = std::vector<unsigned>; // coefficients over GF(p), little-endian

inline void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    poly_trim(c);
    return c;
}

/// Remainder of a modulo the monic polynomial m.
inline Poly poly_mod(Poly a, const Poly& m, unsigned p) {
    poly_trim(a);
    while (a.size() >= m.size()) {
        const unsigned lead = a.back(); // nonzero: a is trimmed
        const std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            a[i + shift] = (a[i + shift] + p - (lead * m[i]) % p) % p;
        poly_trim(a);
    }
    return a;
}

inline bool poly_is_zero(const Poly& a) {
    for (auto c : a)
        if (c) return false;
    return true;
}

inline bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace gfdetail

/// Arithmetic context for GF(q), q = p^h with p an odd prime. Multiplication
/// goes through a full q-by-q table built once from polynomial arithmetic
/// modulo an irreducible modulus; exp/log tables for a primitive element back
/// the quadratic-character and root queries. Immutable after construction.
class FieldCtx {
public:
    /// Build GF(p^h) with the shipped default modulus for (p, h).
    FieldCtx(unsigned p, unsigned h) : FieldCtx(p, h, default_modulus(p, h)) {}

    /// Build GF(p^h) with an explicit monic irreducible modulus
    /// (coefficient list over GF(p), little-endian, length h+1).
    FieldCtx(unsigned p, unsigned h, std::vector<unsigned> modulus)
        : p_(p), h_(h), modulus_(std::move(modulus)) {
        if (!gfdetail::is_prime(p_) || p_ == 2)
            throw InvalidArgument("p must be an odd prime, got " + std::to_string(p_));
        if (h_ < 1) throw InvalidArgument("h must be >= 1");
        unsigned long long qq = 1;
        for (unsigned i = 0; i < h_; ++i) qq *= p_;
        if (qq > 512) throw TooLarge("q = " + std::to_string(qq) + " exceeds the supported range");
        q_ = static_cast<unsigned>(qq);
        validate_modulus();
        build_tables();
    }

    unsigned p() const { return p_; }
    unsigned h() const { return h_; }
    unsigned q() const { return q_; }
    const std::vector<unsigned>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const { return add_[idx(a, b)]; }
    Elem sub(Elem a, Elem b) const { return add_[idx(a, neg_[b])]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem mul(Elem a, Elem b) const { return mul_[idx(a, b)]; }

    Elem inv(Elem a) const {
        if (a == 0) throw DivisionByZero("inv(0) in GF(" + std::to_string(q_) + ")");
        return inv_[a];
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, long long e) const {
        if (a == 0) {
            if (e < 0) throw DivisionByZero("0 to a negative power");
            return e == 0 ? Elem{1} : Elem{0};
        }
        const long long ord = q_ - 1;
        long long r = e % ord;
        if (r < 0) r += ord;
        Elem acc = 1, base = a;
        while (r) {
            if (r & 1) acc = mul(acc, base);
            base = mul(base, base);
            r >>= 1;
        }
        return acc;
    }

    /// Reduce an integer (possibly negative) into the prime subfield.
    Elem from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<Elem>(r);
    }

    /// Quadratic character by Euler's criterion: a^((q-1)/2) == 1. 0 counts
    /// as a square.
    bool is_square(Elem a) const {
        if (a == 0) return true;
        return pow(a, (q_ - 1) / 2) == 1;
    }

    /// Quadratic character via the discrete-log table (parity of log).
    bool is_square_by_log(Elem a) const {
        if (a == 0) return true;
        return log_[a] % 2 == 0;
    }

    /// One square root b of a (the smaller encoding of the pair {b, -b}),
    /// or nullopt if a is a non-square.
    std::optional<Elem> sqrt(Elem a) const {
        if (a == 0) return Elem{0};
        if (log_[a] % 2 != 0) return std::nullopt;
        const Elem b = exp_[log_[a] / 2];
        return std::min(b, neg(b));
    }

    /// The smallest encoding that is a non-square.
    Elem nonsquare() const { return nonsquare_; }

    Elem half() const { return inv_[2]; } // p odd, so 2 is invertible
    Elem primitive_element() const { return exp_[1]; }

    bool operator==(const FieldCtx& o) const {
        return p_ == o.p_ && h_ == o.h_ && modulus_ == o.modulus_;
    }
    bool operator!=(const FieldCtx& o) const { return !(*this == o); }

    /// Shipped default modulus: fixed tables for q in {9, 25, 27, 49, 81},
    /// otherwise the lexicographically smallest monic irreducible.
    static std::vector<unsigned> default_modulus(unsigned p, unsigned h) {
        if (h == 1) return {0, 1};
        if (p == 3 && h == 2) return {2, 2, 1};       // x^2+2x+2
        if (p == 3 && h == 3) return {1, 2, 0, 1};    // x^3+2x+1
        if (p == 3 && h == 4) return {2, 0, 0, 2, 1}; // x^4+2x^3+2
        if (p == 5 && h == 2) return {2, 4, 1};       // x^2+4x+2
        if (p == 7 && h == 2) return {3, 6, 1};       // x^2+6x+3
        // deterministic fallback: smallest coefficient encoding that is irreducible
        unsigned long long count = 1;
        for (unsigned i = 0; i < h; ++i) count *= p;
        for (unsigned long long c = 0; c < count; ++c) {
            std::vector<unsigned> m(h + 1, 0);
            unsigned long long t = c;
            for (unsigned i = 0; i < h; ++i) {
                m[i] = static_cast<unsigned>(t % p);
                t /= p;
            }
            m[h] = 1;
            if (irreducible(m, p)) return m;
        }
        throw Error("no irreducible modulus found"); // unreachable
    }

private:
    std::size_t idx(Elem a, Elem b) const { return static_cast<std::size_t>(a) * q_ + b; }

    static bool irreducible(const std::vector<unsigned>& m, unsigned p) {
        using namespace gfdetail;
        const unsigned h = static_cast<unsigned>(m.size()) - 1;
        if (h == 1) return true;
        // no monic factor of degree 1..h/2
        for (unsigned d = 1; d <= h / 2; ++d) {
            unsigned long long count = 1;
            for (unsigned i = 0; i < d; ++i) count *= p;
            for (unsigned long long c = 0; c < count; ++c) {
                Poly g(d + 1, 0);
                unsigned long long t = c;
                for (unsigned i = 0; i < d; ++i) {
                    g[i] = static_cast<unsigned>(t % p);
                    t /= p;
                }
                g[d] = 1;
                if (poly_is_zero(poly_mod(Poly(m), g, p))) return false;
            }
        }
        return true;
    }

    void validate_modulus() {
        if (modulus_.size() != h_ + 1 || modulus_[h_] != 1)
            throw InvalidArgument("modulus must be monic of degree h");
        for (auto c : modulus_)
            if (c >= p_) throw InvalidArgument("modulus coefficient out of range");
        if (!irreducible(modulus_, p_))
            throw InvalidArgument("modulus is reducible over GF(" + std::to_string(p_) + ")");
    }

    gfdetail::Poly decode(Elem a) const {
        gfdetail::Poly r;
        unsigned t = a;
        while (t) {
            r.push_back(t % p_);
            t /= p_;
        }
        return r;
    }

    Elem encode(const gfdetail::Poly& a) const {
        unsigned v = 0, base = 1;
        for (std::size_t i = 0; i < a.size(); ++i) {
            v += a[i] * base;
            base *= p_;
        }
        return static_cast<Elem>(v);
    }

    void build_tables() {
        using namespace gfdetail;
        const std::size_t q = q_;
        add_.resize(q * q);
        mul_.resize(q * q);
        neg_.resize(q);
        inv_.assign(q, 0);
        // addition and negation are digitwise mod p
        for (std::size_t a = 0; a < q; ++a) {
            unsigned na = 0, base = 1, t = static_cast<unsigned>(a);
            while (t) {
                na += ((p_ - t % p_) % p_) * base;
                base *= p_;
                t /= p_;
            }
            neg_[a] = static_cast<Elem>(na);
            for (std::size_t b = 0; b < q; ++b) {
                unsigned s = 0, bb = 1, ta = static_cast<unsigned>(a), tb = static_cast<unsigned>(b);
                while (ta || tb) {
                    s += ((ta % p_) + (tb % p_)) % p_ * bb;
                    bb *= p_;
                    ta /= p_;
                    tb /= p_;
                }
                add_[a * q + b] = static_cast<Elem>(s);
            }
        }
        for (std::size_t a = 0; a < q; ++a)
            for (std::size_t b = a; b < q; ++b) {
                const Elem m = encode(poly_mod(poly_mul(decode(static_cast<Elem>(a)),
                                                        decode(static_cast<Elem>(b)), p_),
                                               modulus_, p_));
                mul_[a * q + b] = m;
                mul_[b * q + a] = m;
            }
        // primitive element: smallest encoding of multiplicative order q-1
        Elem g = 0;
        for (Elem cand = 2; cand < q; ++cand) {
            unsigned ord = 1;
            Elem x = cand;
            while (x != 1) {
                x = mul(x, cand);
                ++ord;
            }
            if (ord == q_ - 1) {
                g = cand;
                break;
            }
        }
        if (g == 0) throw Error("no primitive element found");
        exp_.resize(q_ - 1);
        log_.assign(q_, 0);
        Elem x = 1;
        for (unsigned i = 0; i < q_ - 1; ++i) {
            exp_[i] = x;
            log_[x] = i;
            x = mul(x, g);
        }
        if (x != 1) throw Error("exp table has wrong period");
        for (Elem a = 1; a < q_; ++a)
            inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
        nonsquare_ = 0;
        for (Elem a = 2; a < q_; ++a)
            if (!is_square(a)) {
                nonsquare_ = a;
                break;
            }
        if (nonsquare_ == 0) throw Error("no non-square found");
    }

    unsigned p_, h_, q_ = 0;
    std::vector<unsigned> modulus_;
    std::vector<Elem> add_, mul_, neg_, inv_, exp_;
    std::vector<unsigned> log_;
    Elem nonsquare_ = 0;
};

} // namespace polarforge
