#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "criterion.hpp"
#include "errors.hpp"
#include "simplicial.hpp"
#include "sr_cohomology.hpp"

namespace gradealg {

/// A = A1 ⊗ A2 with A1 = k[Δ1] on the B-vertices and A2 = k[Δ2] on the rest,
/// where Δ = Δ1 * Δ2 and I is generated by the B-variables.
template <class F>
struct SplitSRData {
    F field;
    SimplicialComplex delta;
    SimplicialComplex delta1;
    SimplicialComplex delta2;
    std::vector<std::size_t> B;
    std::vector<std::size_t> C;
    HochsterData h1;
    HochsterData h2;

    int d1() const { return h1.dim(); }
    int d2() const { return h2.dim(); }
};

/// Splits Δ along B; throws unless Δ is the join of its restrictions.
template <class F>
SplitSRData<F> split_sr_data(const SimplicialComplex& delta, std::vector<std::size_t> B, const F& field) {
    std::sort(B.begin(), B.end());
    B.erase(std::unique(B.begin(), B.end()), B.end());
    if (B.empty()) throw InputError("I must contain at least one variable");
    const Face verts = delta.vertex_mask();
    const Face bmask = face_of(B);
    if (bmask & ~verts) throw InputError("B uses a vertex outside the complex");
    std::vector<std::size_t> C;
    for (auto v : delta.vertices())
        if (!(bmask >> v & 1)) C.push_back(v);
    auto d1 = induced_subcomplex(delta, B);
    auto d2 = induced_subcomplex(delta, C);
    if (!(join(d1, d2) == delta)) throw InputError("J does not split along the variables of I");
    if (d1.dim() < 0) throw InputError("I is zero in A (I ⊆ J)");
    HochsterData h1(d1, field), h2(d2, field);
    return SplitSRData<F>{field, delta, d1, d2, B, C, std::move(h1), std::move(h2)};
}

/// Split data for a squarefree J and I = (x_B), with B taken from the
/// criterion module's decision.
template <class F>
SplitSRData<F> split_sr_data(const Ideal<F>& J, const std::vector<Polynomial<F>>& I_gens,
                             const CriterionOptions& opts = {}) {
    auto delta = complex_from_ideal(J);
    auto decision = theorem_main_decide(J, I_gens, opts);
    if (!decision.isomorphic)
        throw InputError("I is not generated by variables along a splitting of J (" +
                         to_string(*decision.failure_reason) + ")");
    auto data = split_sr_data(delta, decision.witness->B, J.ring()->field);
    if (data.C != decision.witness->C) throw InputError("split witness disagrees with the complex");
    return data;
}

namespace detail {

inline std::optional<long> max_of_all(const CohomologyWindow& w) {
    std::optional<long> m;
    for (int i = 0; i <= w.max_index(); ++i)
        if (auto x = w.support(i).max()) m = std::max(m.value_or(*x), *x);
    return m;
}

/// Support of H^i(A[mt]) from that of A.
inline Support hpt_support(const CohomologyWindow& wA, int i) {
    auto s = wA.support(i).restrict(0, std::nullopt);
    s.unite(wA.support(i - 1).restrict(std::nullopt, -2));
    return s;
}

}  // namespace detail

/// H^i(A[mt])_a for a in [lo, hi]: (a+1)·H^i(A)_a for a >= 0, zero at
/// a = -1, and (-a-1)·H^{i-1}(A)_a for a <= -2.
inline CohomologyIndex hpt_rees_window(const CohomologyWindow& wA, int i, long lo, long hi) {
    CohomologyIndex out{detail::hpt_support(wA, i), {}};
    for (long a = lo; a <= hi; ++a) {
        std::int64_t v = 0;
        if (a >= 0) v = detail::checked_mul(a + 1, wA.dim(i, a));
        else if (a <= -2) v = detail::checked_mul(-a - 1, wA.dim(i - 1, a));
        out.dims.push_back(v);
    }
    return out;
}

inline CohomologyWindow hpt_rees_window(const CohomologyWindow& wA, long lo, long hi) {
    CohomologyWindow out{lo, hi, {}};
    for (int i = 0; i <= wA.max_index() + 1; ++i) out.indices.push_back(hpt_rees_window(wA, i, lo, hi));
    return out;
}

/// H^q(M ⊗ N)_a = Σ_{i+j=q} Σ_{α+β=a} H^i(M)_α · H^j(N)_β.
inline CohomologyIndex gw_tensor_assemble(const CohomologyWindow& w1, const CohomologyWindow& w2, int q, long lo,
                                          long hi) {
    CohomologyIndex out;
    for (int i = 0; i <= q; ++i) out.support.unite(w1.support(i) + w2.support(q - i));
    for (long a = lo; a <= hi; ++a) {
        std::int64_t total = 0;
        for (int i = 0; i <= q; ++i) {
            const auto& s1 = w1.support(i);
            const auto& s2 = w2.support(q - i);
            if (s1.empty() || s2.empty()) continue;
            for (long alpha = a - *s2.max(); alpha <= *s1.max(); ++alpha) {
                if (!s1.contains(alpha) || !s2.contains(a - alpha)) continue;
                total = detail::checked_add(total, detail::checked_mul(w1.dim(i, alpha), w2.dim(q - i, a - alpha)));
            }
        }
        out.dims.push_back(total);
    }
    return out;
}

inline CohomologyWindow gw_tensor_window(const CohomologyWindow& w1, const CohomologyWindow& w2, long lo, long hi) {
    CohomologyWindow out{lo, hi, {}};
    for (int q = 0; q <= w1.max_index() + w2.max_index(); ++q)
        out.indices.push_back(gw_tensor_assemble(w1, w2, q, lo, hi));
    return out;
}

namespace detail {

/// Factor windows wide enough that the assembly on [lo, hi] never leaves them.
template <class F>
std::pair<CohomologyWindow, CohomologyWindow> factor_windows(const SplitSRData<F>& data, long lo, long hi) {
    auto probe1 = data.h1.window(0, 0), probe2 = data.h2.window(0, 0);
    long top1 = std::max(0L, max_of_all(probe1).value_or(0));
    long top2 = std::max(0L, max_of_all(probe2).value_or(0));
    long flo = std::min(lo, 0L) - std::max(top1, top2);
    long fhi = std::max({hi, 0L, top1, top2});
    return {data.h1.window(flo, fhi), data.h2.window(flo, fhi)};
}

}  // namespace detail

/// H^ℓ(R)_a for R = A[It]: HPT on A1, then the tensor product with A2.
template <class F>
CohomologyIndex prop_assemble_rees(const SplitSRData<F>& data, int ell, long lo, long hi) {
    auto [w1, w2] = detail::factor_windows(data, lo, hi);
    auto r1 = hpt_rees_window(w1, w1.lo, w1.hi);
    return gw_tensor_assemble(r1, w2, ell, lo, hi);
}

template <class F>
CohomologyWindow rees_cohomology_window(const SplitSRData<F>& data, long lo = default_window_lo,
                                        long hi = default_window_hi) {
    auto [w1, w2] = detail::factor_windows(data, lo, hi);
    auto r1 = hpt_rees_window(w1, w1.lo, w1.hi);
    return gw_tensor_window(r1, w2, lo, hi);
}

/// Local cohomology of A = A1 ⊗ A2 assembled from the factors.
template <class F>
CohomologyWindow base_cohomology_window(const SplitSRData<F>& data, long lo = default_window_lo,
                                        long hi = default_window_hi) {
    auto [w1, w2] = detail::factor_windows(data, lo, hi);
    return gw_tensor_window(w1, w2, lo, hi);
}

/// dim A + 1 unless every top facet misses B (I inside every top minimal prime).
inline int dim_rees(const SimplicialComplex& delta, const std::vector<std::size_t>& B) {
    if (B.empty()) throw InputError("I must contain at least one variable");
    const Face b = face_of(B);
    const int dim_A = delta.dim() + 1;
    for (auto f : delta.top_facets())
        if (f & b) return dim_A + 1;
    return dim_A;
}

/// R = A1[m1 t] ⊗ A2 is CM iff A is CM and a(A1) < 0. With C empty this is
/// the condition a(A) < 0; otherwise a(A) < 0 alone is not enough (two points
/// joined with a point: A is CM with a(A) = -1, yet R has depth 2 < 3).
template <class F>
bool cm_rees(const SplitSRData<F>& data) {
    auto inv = sr_invariants(data.delta, data.field);
    auto inv1 = sr_invariants(data.h1, data.field.name());
    return inv.cm && inv1.a_invariant && *inv1.a_invariant < 0;
}

enum class GenCMCase { case1_contained, case2_dimA2_zero, case3_vanishing, none };

inline std::string to_string(GenCMCase c) {
    switch (c) {
        case GenCMCase::case1_contained: return "case1-contained";
        case GenCMCase::case2_dimA2_zero: return "case2-dimA2-zero";
        case GenCMCase::case3_vanishing: return "case3-vanishing";
        default: return "none";
    }
}

struct GenCMEvidence {
    bool I_in_all_top_primes = false;
    bool dimA2_zero = false;
    bool a_A1_negative = false;
    bool H_d1m1_A1_below_minus_two_zero = false;
    bool H_d2m1_A2_zero = false;
};

struct GenCMVerdict {
    bool gencm = false;
    GenCMCase gencm_case = GenCMCase::none;
    int dim_R = 0;
    bool cm_R = false;
    bool cm_A = false;
    std::optional<long> a_A;
    bool precondition_A_gencm = false;
    bool factors_gencm = false;     ///< both A1 and A2 generalized CM
    bool assembled_gencm = false;   ///< from the exact supports of H^ℓ(R), ℓ < dim R
    int d1 = 0;
    int d2 = 0;
    std::optional<long> a_A1;
    GenCMEvidence evidence;
};

/// Exact supports of H^ℓ(R) for ℓ = 0..dim A + 1.
template <class F>
std::vector<Support> rees_supports(const SplitSRData<F>& data) {
    auto w1 = data.h1.window(0, 0), w2 = data.h2.window(0, 0);
    std::vector<Support> out;
    for (int ell = 0; ell <= data.d1() + data.d2() + 1; ++ell) {
        Support s;
        for (int i = 0; i <= ell; ++i) s.unite(detail::hpt_support(w1, i) + w2.support(ell - i));
        out.push_back(s);
    }
    return out;
}

/// The three cases for genCM of R, evaluated in order 1, 2, 3.
template <class F>
GenCMVerdict gencm_decide(const SplitSRData<F>& data) {
    GenCMVerdict v;
    auto inv = sr_invariants(data.delta, data.field);
    auto inv1 = sr_invariants(data.h1, data.field.name());
    auto inv2 = sr_invariants(data.h2, data.field.name());
    v.precondition_A_gencm = inv.gencm;
    v.factors_gencm = inv1.gencm && inv2.gencm;
    v.d1 = data.d1();
    v.d2 = data.d2();
    v.a_A1 = inv1.a_invariant;
    v.dim_R = dim_rees(data.delta, data.B);
    v.cm_A = inv.cm;
    v.a_A = inv.a_invariant;
    v.cm_R = inv.cm && inv1.a_invariant && *inv1.a_invariant < 0;

    auto w1 = data.h1.window(0, 0), w2 = data.h2.window(0, 0);
    auto& e = v.evidence;
    e.I_in_all_top_primes = v.dim_R == inv.dim_A;
    e.dimA2_zero = v.d2 == 0;
    e.a_A1_negative = inv1.a_invariant && *inv1.a_invariant < 0;
    e.H_d1m1_A1_below_minus_two_zero = w1.vanishes_below_minus_one(v.d1 - 1);
    e.H_d2m1_A2_zero = w2.is_zero(v.d2 - 1);

    if (e.I_in_all_top_primes) v.gencm_case = GenCMCase::case1_contained;
    else if (e.dimA2_zero) v.gencm_case = GenCMCase::case2_dimA2_zero;
    else if (v.d1 > 0 && v.d2 > 0 && e.a_A1_negative && e.H_d1m1_A1_below_minus_two_zero && e.H_d2m1_A2_zero)
        v.gencm_case = GenCMCase::case3_vanishing;
    v.gencm = v.gencm_case != GenCMCase::none;

    auto supports = rees_supports(data);
    v.assembled_gencm = true;
    for (int ell = 0; ell < v.dim_R && ell < static_cast<int>(supports.size()); ++ell)
        if (!supports[ell].finite()) v.assembled_gencm = false;
    return v;
}

}  // namespace gradealg
