#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "simplicial.hpp"

namespace gradealg {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw LimitExceeded("cohomology dimension overflows 64 bits");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw LimitExceeded("cohomology dimension overflows 64 bits");
    return r;
}

/// C(n, k) with overflow detection; 0 outside 0 <= k <= n.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
    return r;
}

}  // namespace detail

/// Exact set of degrees where a graded module is nonzero: finitely many
/// points together with an optional downward ray (-inf, ray_top].
class Support {
public:
    static Support none() { return {}; }
    static Support point(long j) {
        Support s;
        s.add_point(j);
        return s;
    }
    static Support ray(long top) {
        Support s;
        s.add_ray(top);
        return s;
    }

    void add_point(long j) {
        if (!ray_top_ || j > *ray_top_) points_.insert(j);
    }
    void add_ray(long top) {
        if (ray_top_ && *ray_top_ >= top) return;
        ray_top_ = top;
        points_.erase(points_.begin(), points_.upper_bound(top));
    }
    void unite(const Support& o) {
        for (auto p : o.points_) add_point(p);
        if (o.ray_top_) add_ray(*o.ray_top_);
    }

    bool empty() const { return points_.empty() && !ray_top_; }
    bool finite() const { return !ray_top_; }
    bool contains(long j) const { return (ray_top_ && j <= *ray_top_) || points_.count(j); }
    const std::set<long>& points() const { return points_; }
    const std::optional<long>& ray_top() const { return ray_top_; }

    /// Largest degree in the support.
    std::optional<long> max() const {
        std::optional<long> m = ray_top_;
        if (!points_.empty()) m = std::max(m.value_or(*points_.rbegin()), *points_.rbegin());
        return m;
    }
    /// Smallest degree, when bounded below.
    std::optional<long> min() const {
        if (ray_top_ || points_.empty()) return std::nullopt;
        return *points_.begin();
    }

    /// Degrees within [lo, hi]; either bound may be absent.
    Support restrict(std::optional<long> lo, std::optional<long> hi) const {
        Support s;
        for (auto p : points_)
            if ((!lo || p >= *lo) && (!hi || p <= *hi)) s.add_point(p);
        if (ray_top_) {
            long top = hi ? std::min(*ray_top_, *hi) : *ray_top_;
            if (!lo) s.add_ray(top);
            else
                for (long j = *lo; j <= top; ++j) s.add_point(j);
        }
        return s;
    }

    /// Minkowski sum {a + b}.
    Support operator+(const Support& o) const {
        Support s;
        if (empty() || o.empty()) return s;
        for (auto p : points_)
            for (auto q : o.points_) s.add_point(p + q);
        if (ray_top_) s.add_ray(*ray_top_ + *o.max());
        if (o.ray_top_) s.add_ray(*o.ray_top_ + *max());
        return s;
    }

    bool operator==(const Support&) const = default;

private:
    std::set<long> points_;
    std::optional<long> ray_top_;
};

/// One cohomological index: exact support plus dimensions on [lo, hi].
struct CohomologyIndex {
    Support support;
    std::vector<std::int64_t> dims;

    bool is_zero() const { return support.empty(); }
    bool finite_length() const { return support.finite(); }
    bool vanishes_below_minus_one() const { return support.restrict(std::nullopt, -2).empty(); }
};

/// Local cohomology H^i for i = 0..max_index, tabulated on [lo, hi].
struct CohomologyWindow {
    long lo = 0;
    long hi = 0;
    std::vector<CohomologyIndex> indices;

    int max_index() const { return static_cast<int>(indices.size()) - 1; }

    const Support& support(int i) const {
        static const Support empty;
        if (i < 0 || i > max_index()) return empty;
        return indices[i].support;
    }

    /// dim H^i_j; outside the window only degrees certified zero are answered.
    std::int64_t dim(int i, long j) const {
        if (!support(i).contains(j)) return 0;
        if (j < lo || j > hi)
            throw WindowUnderflow("H^" + std::to_string(i) + " in degree " + std::to_string(j) +
                                  " lies outside the window [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
        return indices[i].dims[j - lo];
    }

    bool is_zero(int i) const { return support(i).empty(); }
    bool finite_length(int i) const { return support(i).finite(); }
    bool vanishes_below_minus_one(int i) const { return support(i).restrict(std::nullopt, -2).empty(); }
};

inline constexpr long default_window_lo = -10;
inline constexpr long default_window_hi = 2;

/// Hochster data of k[Δ]: for each index i, the summed link homology ranks
/// grouped by face size, i.e. Σ_{|σ| = s} rank H̃_{i-s-1}(lk σ).
class HochsterData {
public:
    template <class F>
    HochsterData(const SimplicialComplex& delta, const F& field) : dim_(delta.dim() + 1) {
        terms_.resize(dim_ + 1);
        for (auto sigma : delta.faces()) {
            const int s = face_size(sigma);
            auto ranks = reduced_homology_ranks(link(delta, sigma), field);
            for (std::size_t k = 0; k < ranks.size(); ++k) {
                if (ranks[k] == 0) continue;
                const int i = s + static_cast<int>(k);  // k indexes H̃_{k-1}
                terms_.at(i)[s] += ranks[k];
            }
        }
    }

    int dim() const { return dim_; }
    const std::map<int, std::int64_t>& terms(int i) const { return terms_.at(i); }

    /// Exact support of H^i: {0} from σ = ∅ and (-inf, -s] from faces of size s.
    Support support(int i) const {
        Support out;
        if (i < 0 || i > dim_) return out;
        for (const auto& [s, rank] : terms_[i]) {
            if (s == 0) out.add_point(0);
            else out.add_ray(-s);
        }
        return out;
    }

    /// dim H^i_j: a face of size s > 0 contributes C(-j-1, s-1) for j <= -s.
    std::int64_t dim_at(int i, long j) const {
        if (i < 0 || i > dim_) return 0;
        std::int64_t total = 0;
        for (const auto& [s, rank] : terms_[i]) {
            std::int64_t count = s == 0 ? (j == 0 ? 1 : 0) : (j <= -s ? detail::binomial(-j - 1, s - 1) : 0);
            total = detail::checked_add(total, detail::checked_mul(rank, count));
        }
        return total;
    }

    CohomologyWindow window(long lo, long hi) const {
        if (lo > hi) throw InputError("empty window");
        CohomologyWindow w{lo, hi, {}};
        for (int i = 0; i <= dim_; ++i) {
            CohomologyIndex idx{support(i), {}};
            for (long j = lo; j <= hi; ++j) idx.dims.push_back(dim_at(i, j));
            w.indices.push_back(std::move(idx));
        }
        return w;
    }

private:
    int dim_;
    std::vector<std::map<int, std::int64_t>> terms_;
};

/// Graded local cohomology of k[Δ] on [lo, hi] by Hochster's formula.
template <class F>
CohomologyWindow hochster_window(const SimplicialComplex& delta, const F& field, long lo = default_window_lo,
                                 long hi = default_window_hi) {
    if (lo > 0 || hi < 0) throw InputError("window must contain degree 0");
    return HochsterData(delta, field).window(lo, hi);
}

struct SRInvariants {
    int dim_A = 0;
    int depth_A = 0;
    std::optional<long> a_invariant;  ///< absent means minus infinity
    bool cm = false;
    bool gencm = false;
    std::string field;
};

inline SRInvariants sr_invariants(const HochsterData& h, std::string field_name) {
    SRInvariants inv;
    inv.field = std::move(field_name);
    inv.dim_A = h.dim();
    inv.depth_A = inv.dim_A;
    for (int i = 0; i <= h.dim(); ++i)
        if (!h.support(i).empty()) {
            inv.depth_A = i;
            break;
        }
    inv.a_invariant = h.support(h.dim()).max();
    inv.cm = inv.depth_A == inv.dim_A;
    inv.gencm = true;
    for (int i = 0; i < h.dim(); ++i)
        if (!h.support(i).finite()) inv.gencm = false;
    return inv;
}

template <class F>
SRInvariants sr_invariants(const SimplicialComplex& delta, const F& field) {
    return sr_invariants(HochsterData(delta, field), field.name());
}

}  // namespace gradealg
