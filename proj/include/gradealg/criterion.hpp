#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blowup.hpp"
#include "errors.hpp"
#include "groebner.hpp"

namespace gradealg {

/// Partition of the variables into B (the generators of I) and C, with J
/// regenerated by JB ⊂ k[X_B] and JC ⊂ k[X_C].
template <class F>
struct SplitWitness {
    std::vector<std::size_t> B;
    std::vector<std::size_t> C;
    Ideal<F> JB;
    Ideal<F> JC;

    /// X_i ↦ Y_k when i = B[k]; X_i ↦ X_i otherwise, as indices into k[X, Y].
    std::vector<std::size_t> sigma(std::size_t nvars) const {
        std::vector<std::size_t> map(nvars);
        for (std::size_t i = 0; i < nvars; ++i) map[i] = i;
        for (std::size_t k = 0; k < B.size(); ++k) map[B[k]] = nvars + k;
        return map;
    }
};

enum class IsoFailure { not_variable_generated, not_split };

inline std::string to_string(IsoFailure f) {
    return f == IsoFailure::not_variable_generated ? "not-variable-generated" : "not-split";
}

template <class F>
struct IsoDecision {
    bool isomorphic = false;
    std::optional<SplitWitness<F>> witness;
    std::optional<IsoFailure> failure_reason;
    bool verified = false;
    std::optional<std::vector<std::size_t>> B;  ///< variable basis of I, when one exists
    std::vector<std::string> warnings;
};

struct CriterionOptions {
    /// Accept J with nonzero linear forms (reported as a warning).
    bool allow_linear = false;
};

namespace detail {

inline std::vector<bool> mask_of(const std::vector<std::size_t>& idx, std::size_t n) {
    std::vector<bool> m(n, false);
    for (auto i : idx) m.at(i) = true;
    return m;
}

template <class F>
Ideal<F> variables_ideal(const RingPtr<F>& ring, const std::vector<std::size_t>& vars) {
    std::vector<Polynomial<F>> gens;
    for (auto v : vars) gens.push_back(Polynomial<F>::variable(ring, v));
    return Ideal<F>(ring, gens);
}

}  // namespace detail

/// B = {i : x_i ∈ I + J, x_i ∉ J}, returned only when I + J = (X_B) + J. If
/// I/J is generated by any set of variable images, it is generated by this B.
template <class F>
std::optional<std::vector<std::size_t>> variable_subset_basis(const std::vector<Polynomial<F>>& I_gens,
                                                              const Ideal<F>& J) {
    const auto& ring = J.ring();
    auto IJ = Ideal<F>(ring, I_gens) + J;
    if (IJ.is_zero()) return std::nullopt;
    std::vector<std::size_t> B;
    auto gb = IJ.groebner();
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
        auto x = Polynomial<F>::variable(ring, i);
        if (gb->contains(x) && !ideal_member(x, J)) B.push_back(i);
    }
    if (B.empty()) return std::nullopt;
    if (!ideal_contains(detail::variables_ideal(ring, B) + J, IJ)) return std::nullopt;
    return B;
}

/// JB = J ∩ k[X_B], JC = J ∩ k[X_C]; a witness exists iff J = JB·S + JC·S.
/// (If J has generators each lying in k[X_B] or k[X_C], those generators lie
/// in JB or JC, so J ⊆ JB + JC; the reverse inclusion always holds.)
template <class F>
std::optional<SplitWitness<F>> split_check(const Ideal<F>& J, const std::vector<std::size_t>& B) {
    const auto n = J.ring()->nvars();
    auto maskB = detail::mask_of(B, n);
    std::vector<bool> maskC(n);
    SplitWitness<F> w;
    for (std::size_t i = 0; i < n; ++i) {
        maskC[i] = !maskB[i];
        (maskB[i] ? w.B : w.C).push_back(i);
    }
    w.JB = canonical(elimination_ideal(J, maskB));
    w.JC = canonical(elimination_ideal(J, maskC));
    if (!ideal_contains(w.JB + w.JC, J)) return std::nullopt;
    return w;
}

/// A ≅ G at presentation level: I generated by variable images x_B and J
/// split along B and its complement.
template <class F>
IsoDecision<F> theorem_main_decide(const Ideal<F>& J, const std::vector<Polynomial<F>>& I_gens,
                                   const CriterionOptions& opts = {}) {
    const auto& ring = J.ring();
    if (!J.homogeneous()) throw InputError("J must be homogeneous");
    for (const auto& f : I_gens) {
        if (!same_ring(f.ring(), ring)) throw AmbientMismatch();
        if (!f.is_homogeneous()) throw InputError("generators of I must be homogeneous");
    }
    IsoDecision<F> out;
    auto IJ = Ideal<F>(ring, I_gens) + J;
    if (!IJ.is_zero() && IJ.groebner()->is_unit()) throw InputError("I is the unit ideal");
    if (ideal_contains(J, Ideal<F>(ring, I_gens))) throw InputError("I is zero in A (I ⊆ J)");

    if (!J.is_zero()) {
        auto h1 = hilbert_function(J, 1);
        if (h1.dims[1] < static_cast<std::int64_t>(ring->nvars())) {
            if (!opts.allow_linear)
                throw InputError("J contains linear forms; it must be generated in degree >= 2 (override with "
                                 "--allow-linear)");
            out.warnings.push_back("J contains linear forms; no variable reduction was performed");
        }
    }

    auto B = variable_subset_basis(I_gens, J);
    if (!B) {
        out.failure_reason = IsoFailure::not_variable_generated;
        return out;
    }
    out.B = *B;
    auto w = split_check(J, *B);
    if (!w) {
        out.failure_reason = IsoFailure::not_split;
        return out;
    }
    out.isomorphic = true;
    out.witness = std::move(w);
    return out;
}

/// Ker ψ for I = (x_B) equals (X_B) + σ(JB) + JC in k[X, Y].
template <class F>
bool constructive_iso_verify(const Ideal<F>& J, const SplitWitness<F>& w) {
    const auto& ring = J.ring();
    const auto n = ring->nvars();
    auto maskB = detail::mask_of(w.B, n), maskC = detail::mask_of(w.C, n);
    for (std::size_t i = 0; i < n; ++i)
        if (maskB[i] == maskC[i]) throw InputError("witness B and C must partition the variables");
    for (const auto& g : w.JB.generators())
        if (!g.uses_only(maskB)) throw InputError("witness JB leaves k[X_B]");
    for (const auto& g : w.JC.generators())
        if (!g.uses_only(maskC)) throw InputError("witness JC leaves k[X_C]");
    if (!ideal_equal(w.JB + w.JC, J)) throw InputError("witness does not regenerate J");
    if (w.B.empty()) throw InputError("witness has empty B");

    std::vector<Polynomial<F>> xb;
    for (auto i : w.B) xb.push_back(Polynomial<F>::variable(ring, i));
    auto gr = assoc_graded_presentation(J, xb);

    auto sigma = w.sigma(n);
    auto identity = detail::identity_map<F>(n);
    std::vector<Polynomial<F>> expected;
    for (auto i : w.B) expected.push_back(Polynomial<F>::variable(gr.ring, i));
    for (const auto& g : w.JB.generators()) expected.push_back(g.relabel(gr.ring, sigma));
    for (const auto& g : w.JC.generators()) expected.push_back(g.relabel(gr.ring, identity));
    return ideal_equal(gr.defining_ideal, Ideal<F>(gr.ring, expected));
}

/// Decision plus the constructive check of the isomorphic direction.
template <class F>
IsoDecision<F> decide_and_verify(const Ideal<F>& J, const std::vector<Polynomial<F>>& I_gens,
                                 const CriterionOptions& opts = {}) {
    auto d = theorem_main_decide(J, I_gens, opts);
    if (d.isomorphic) d.verified = constructive_iso_verify(J, *d.witness);
    return d;
}

}  // namespace gradealg
