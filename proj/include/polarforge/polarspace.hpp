#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bitset.hpp"
#include "forms.hpp"

namespace polarforge {

struct BuildLimits {
    long long max_points = 20000;
    long long max_subspaces_per_level = 3000000;
    long long max_generators = 200000;
};

/// A built polar-space geometry: the singular (or isotropic) points of a form,
/// densely re-indexed, all generators enumerated, incidence and orthogonality
/// cached as bitsets. Immutable after construction; the build verifies itself
/// against the closed point- and generator-count formulas and aborts on any
/// mismatch.
class PolarSpace {
public:
    /// Build from a standard form.
    PolarSpace(const FieldCtx& F, SpaceType type, int n, BuildLimits limits = {})
        : F_(F), n_(n), rank_(space_rank(type, n)), e_(space_param_e(type)),
          label_(SpaceSpec{type, n, F.q()}.to_string()) {
        if (type == SpaceType::W) form_ = standard_alternating(F_, n);
        else form_ = standard_quadratic(F_, type, n);
        build(limits);
    }

    /// Build from an arbitrary non-degenerate quadratic form (used for
    /// quadric sections carried into their own coordinates). Rank and
    /// parameter are inferred from the singular-point count.
    PolarSpace(const FieldCtx& F, const QuadraticForm& f, std::string label,
               BuildLimits limits = {})
        : F_(F), n_(f.projdim()), form_(f), label_(std::move(label)) {
        if (!f.nondegenerate(F_)) throw DegenerateForm("polar space needs a non-degenerate form");
        infer_rank_from_counts();
        build(limits);
    }

    const FieldCtx& field() const { return F_; }
    const FormVariant& form() const { return form_; }
    const QuadraticForm& quadratic_form() const { return std::get<QuadraticForm>(form_); }
    int ambient_projdim() const { return n_; }
    int rank() const { return rank_; }
    int param_e() const { return e_; }
    const std::string& label() const { return label_; }

    std::size_t num_points() const { return pts_.size(); }
    std::size_t num_generators() const { return gens_.size(); }
    const Row& point(std::uint32_t i) const { return pts_[i]; }

    std::optional<std::uint32_t> index_of(const Row& v) const {
        const auto it = dense_.find(point_key(normalized(F_, v), F_.q()));
        if (it == dense_.end()) return std::nullopt;
        return it->second;
    }

    const Subspace& generator(std::uint32_t g) const { return gens_[g]; }
    const Bitset& generator_points(std::uint32_t g) const { return gen_pts_[g]; }
    const std::vector<std::uint32_t>& generators_of_point(std::uint32_t i) const {
        return pt_gens_[i];
    }

    /// Space points orthogonal to point i (including i itself).
    const Bitset& perp_of(std::uint32_t i) const { return perp_[i]; }

    bool is_singular(const Row& v) const { return form_is_singular_point(F_, form_, v); }
    Elem pairing(const Row& x, const Row& y) const { return form_pair(F_, form_, x, y); }

    /// Bitset of space points lying in the subspace A.
    Bitset section_points(const Subspace& a) const {
        Bitset b(pts_.size());
        for (std::size_t i = 0; i < pts_.size(); ++i)
            if (a.contains(F_, pts_[i])) b.set(i);
        return b;
    }

    /// Ids of the generators containing the totally singular subspace A.
    /// The empty subspace is contained in every generator.
    std::vector<std::uint32_t> generators_through(const Subspace& a) const {
        if (!is_totally_singular(a)) throw NotSingular("subspace is not totally singular");
        std::vector<std::uint32_t> out;
        for (std::uint32_t g = 0; g < gens_.size(); ++g) {
            bool inside = true;
            for (const auto& row : a.basis())
                if (!gens_[g].contains(F_, row)) {
                    inside = false;
                    break;
                }
            if (inside) out.push_back(g);
        }
        return out;
    }

    bool is_totally_singular(const Subspace& a) const {
        const auto pts = points_in(F_, a);
        for (const auto& p : pts)
            if (!is_singular(p)) return false;
        for (std::size_t i = 0; i < a.basis().size(); ++i)
            for (std::size_t j = i; j < a.basis().size(); ++j)
                if (pairing(a.basis()[i], a.basis()[j]) != 0) return false;
        return true;
    }

    SectionClass classify(const Subspace& a) const {
        return classify_section(F_, form_, a);
    }

    Subspace perp_subspace(const Subspace& a) const { return perp(F_, form_, a); }

    long long generators_per_point() const { return gens_per_point_; }

private:
    void infer_rank_from_counts() {
        // count singular points of the custom form
        long long npts = 0;
        for_each_proj_tuple(F_.q(), static_cast<std::size_t>(n_) + 1, [&](const Row& v) {
            if (std::get<QuadraticForm>(form_).eval(F_, v) == 0) ++npts;
        });
        struct Cand { SpaceType t; };
        std::vector<SpaceType> cands;
        if (n_ % 2 == 1) cands = {SpaceType::Qplus, SpaceType::Qminus};
        else cands = {SpaceType::Qparabolic};
        for (auto t : cands) {
            const int r = space_rank(t, n_), e = space_param_e(t);
            if (polar_point_count(F_.q(), r, e) == npts) {
                rank_ = r;
                e_ = e;
                return;
            }
        }
        throw CountMismatch("cannot infer polar-space type from " + std::to_string(npts) +
                            " singular points");
    }

    void build(const BuildLimits& limits) {
        const long long expected_pts = polar_point_count(F_.q(), rank_, e_);
        const long long expected_gens = polar_generator_count(F_.q(), rank_, e_);
        if (expected_pts > limits.max_points)
            throw TooLarge(label_ + ": " + std::to_string(expected_pts) + " points");
        if (expected_gens > limits.max_generators)
            throw TooLarge(label_ + ": " + std::to_string(expected_gens) + " generators");
        check_level_estimates(limits);

        collect_points(expected_pts);
        build_perp_bitsets();
        enumerate_generators(expected_gens);
        build_incidence();
        verify();
    }

    /// Closed count of totally singular subspaces of projective dimension k:
    /// gaussian [r, k+1]_q times prod_{i=0}^{k} (q^{e+r-1-i} + 1).
    long long level_count(int k) const {
        const long long q = F_.q();
        auto qpow = [&](int ex) {
            long long v = 1;
            for (int i = 0; i < ex; ++i) v *= q;
            return v;
        };
        // gaussian binomial [r, k+1]_q
        long long num = 1, den = 1;
        for (int i = 0; i < k + 1; ++i) {
            num *= qpow(rank_ - i) - 1;
            den *= qpow(i + 1) - 1;
        }
        long long total = num / den;
        for (int i = 0; i <= k; ++i) total *= qpow(e_ + rank_ - 1 - i) + 1;
        return total;
    }

    void check_level_estimates(const BuildLimits& limits) const {
        for (int k = 0; k < rank_; ++k)
            if (level_count(k) > limits.max_subspaces_per_level)
                throw TooLarge(label_ + ": " + std::to_string(level_count(k)) +
                               " totally singular subspaces at level " + std::to_string(k));
    }

    void collect_points(long long expected) {
        for_each_proj_tuple(F_.q(), static_cast<std::size_t>(n_) + 1, [&](const Row& v) {
            if (is_singular(v)) {
                dense_.emplace(point_key(v, F_.q()), static_cast<std::uint32_t>(pts_.size()));
                pts_.push_back(v);
            }
        });
        if (static_cast<long long>(pts_.size()) != expected)
            throw CountMismatch(label_ + ": " + std::to_string(pts_.size()) +
                                " singular points, formula gives " + std::to_string(expected));
    }

    void build_perp_bitsets() {
        const std::size_t n = pts_.size();
        const Mat& pm = form_pair_matrix(form_);
        // cache M yᵀ per point so each pairing is one dot product
        std::vector<Row> my(n);
        for (std::size_t j = 0; j < n; ++j) {
            Row col(pm.size(), 0);
            for (std::size_t i = 0; i < pm.size(); ++i) {
                Elem acc = 0;
                for (std::size_t k = 0; k < pm.size(); ++k)
                    acc = F_.add(acc, F_.mul(pm[i][k], pts_[j][k]));
                col[i] = acc;
            }
            my[j] = std::move(col);
        }
        perp_.assign(n, Bitset(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                if (dot(F_, pts_[i], my[j]) == 0) {
                    perp_[i].set(j);
                    perp_[j].set(i);
                }
    }

    Bitset subspace_point_bits(const Subspace& s) const {
        Bitset b(pts_.size());
        for (const auto& p : points_in(F_, s)) {
            const auto id = dense_.find(point_key(p, F_.q()));
            if (id == dense_.end())
                throw CountMismatch("totally singular subspace contains a non-space point");
            b.set(id->second);
        }
        return b;
    }

    /// Index of the last point in the greedy increasing spanning chain of s:
    /// walking the subspace's points in dense order and keeping those that
    /// grow the span reproduces a unique chain, so extending only past its
    /// last element reaches every subspace while cutting duplicate work.
    std::uint32_t greedy_last_index(const Subspace& s, const Bitset& pts_bits) const {
        Mat acc;
        std::uint32_t last = 0;
        const int want = static_cast<int>(s.basis().size());
        int have = 0;
        pts_bits.for_each([&](std::size_t i) {
            if (have == want) return;
            Mat trial = acc;
            trial.push_back(pts_[i]);
            if (static_cast<int>((rref(F_, trial), trial.size())) > have) {
                acc = std::move(trial);
                ++have;
                last = static_cast<std::uint32_t>(i);
            }
        });
        return last;
    }

    void enumerate_generators(long long expected) {
        struct Node {
            Subspace sub;
            Bitset pts;
        };
        std::vector<Node> level;
        for (std::uint32_t i = 0; i < pts_.size(); ++i) {
            Subspace s = span_rows(F_, {pts_[i]}, static_cast<std::size_t>(n_) + 1);
            Bitset b(pts_.size());
            b.set(i);
            level.push_back({std::move(s), std::move(b)});
        }
        for (int k = 1; k < rank_; ++k) {
            std::vector<Node> next;
            std::unordered_set<std::string> seen;
            for (const auto& node : level) {
                Bitset cand(pts_.size());
                bool first = true;
                for (const auto& row : node.sub.basis()) {
                    const auto id = dense_.at(point_key(normalized(F_, row), F_.q()));
                    if (first) {
                        cand = perp_[id];
                        first = false;
                    } else cand &= perp_[id];
                }
                cand -= node.pts;
                const std::uint32_t last = greedy_last_index(node.sub, node.pts);
                cand.for_each([&](std::size_t i) {
                    if (i <= last) return;
                    Subspace ext = extend(F_, node.sub, pts_[i]);
                    if (seen.insert(ext.key()).second) {
                        Bitset pb = subspace_point_bits(ext);
                        next.push_back({std::move(ext), std::move(pb)});
                    }
                });
            }
            level = std::move(next);
        }
        gens_.reserve(level.size());
        gen_pts_.reserve(level.size());
        for (auto& node : level) {
            gens_.push_back(std::move(node.sub));
            gen_pts_.push_back(std::move(node.pts));
        }
        if (static_cast<long long>(gens_.size()) != expected)
            throw CountMismatch(label_ + ": enumerated " + std::to_string(gens_.size()) +
                                " generators, formula gives " + std::to_string(expected));
    }

    void build_incidence() {
        pt_gens_.assign(pts_.size(), {});
        for (std::uint32_t g = 0; g < gens_.size(); ++g)
            gen_pts_[g].for_each([&](std::size_t i) { pt_gens_[i].push_back(g); });
    }

    void verify() {
        const long long ppg = (static_cast<long long>(ipow(F_.q(), rank_)) - 1) / (F_.q() - 1);
        for (std::uint32_t g = 0; g < gens_.size(); ++g) {
            if (gens_[g].projdim() != rank_ - 1)
                throw CountMismatch("generator of wrong dimension");
            if (static_cast<long long>(gen_pts_[g].count()) != ppg)
                throw CountMismatch("generator with wrong point count");
            // maximality: no singular point outside is perpendicular to all of it
            Bitset cand(pts_.size());
            bool first = true;
            for (const auto& row : gens_[g].basis()) {
                const auto id = dense_.at(point_key(normalized(F_, row), F_.q()));
                if (first) {
                    cand = perp_[id];
                    first = false;
                } else cand &= perp_[id];
            }
            cand -= gen_pts_[g];
            if (cand.any()) throw CountMismatch("non-maximal generator enumerated");
        }
        gens_per_point_ = static_cast<long long>(pt_gens_[0].size());
        for (const auto& lst : pt_gens_)
            if (static_cast<long long>(lst.size()) != gens_per_point_)
                throw CountMismatch("generator count differs between points");
        if (gens_per_point_ * static_cast<long long>(pts_.size()) !=
            static_cast<long long>(gens_.size()) * ppg)
            throw CountMismatch("incidence double count fails");
    }

    static long long ipow(unsigned q, int e) {
        long long v = 1;
        for (int i = 0; i < e; ++i) v *= q;
        return v;
    }

    FieldCtx F_;
    int n_;
    int rank_ = 0, e_ = 0;
    FormVariant form_;
    std::string label_;
    std::vector<Row> pts_;
    std::unordered_map<std::uint64_t, std::uint32_t> dense_;
    std::vector<Subspace> gens_;
    std::vector<Bitset> gen_pts_;
    std::vector<std::vector<std::uint32_t>> pt_gens_;
    std::vector<Bitset> perp_;
    long long gens_per_point_ = 0;
};

} // namespace polarforge
