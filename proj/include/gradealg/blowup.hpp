#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "groebner.hpp"
#include "polynomial.hpp"

namespace gradealg {

enum class PresentationTarget { rees, assoc_graded };

/// A quotient k[X,Y]/defining_ideal presenting A[It] or gr_I(A). Variable
/// X_i has internal degree 1 and level 0; Y_i has internal degree deg f_i
/// and level 1.
template <class F>
struct ReesPresentation {
    RingPtr<F> base;               ///< S = k[X]
    RingPtr<F> ring;               ///< k[X, Y]
    std::vector<std::size_t> xvars;
    std::vector<std::size_t> yvars;
    std::vector<int> internal_degree;  ///< per variable of `ring`
    std::vector<int> level;            ///< per variable of `ring` (the Y-weight)
    Ideal<F> defining_ideal;
    PresentationTarget target = PresentationTarget::rees;
    std::vector<Polynomial<F>> images;  ///< f_1..f_m in S
    Ideal<F> base_ideal;                ///< J in S

    /// (internal degree, level) when homogeneous for both gradings.
    std::optional<std::pair<int, int>> bigrading_of(const Polynomial<F>& g) const {
        if (g.is_zero()) return std::nullopt;
        std::optional<std::pair<int, int>> out;
        for (const auto& t : g.terms()) {
            std::pair<int, int> b{int(t.mono.weighted_degree(internal_degree)), int(t.mono.weighted_degree(level))};
            if (!out) out = b;
            else if (*out != b) return std::nullopt;
        }
        return out;
    }
};

namespace detail {

inline std::string fresh_name(const std::vector<std::string>& taken, const std::string& want) {
    std::string name = want;
    while (std::find(taken.begin(), taken.end(), name) != taken.end()) name = "_" + name;
    return name;
}

template <class F>
void validate_rees_input(const Ideal<F>& J, const std::vector<Polynomial<F>>& f) {
    if (!J.homogeneous()) throw InputError("J must be homogeneous");
    if (f.empty()) throw InputError("I needs at least one generator");
    for (const auto& g : f) {
        if (!same_ring(g.ring(), J.ring())) throw AmbientMismatch();
        if (g.is_zero() || !g.is_homogeneous()) throw InputError("generators of I must be nonzero and homogeneous");
        if (ideal_member(g, J)) throw InputError("degenerate generator " + to_string(g) + " lies in J");
    }
}

/// k[X, Y1..Ym] with Y names chosen to avoid the X names.
template <class F>
RingPtr<F> xy_ring(const RingPtr<F>& base, std::size_t m) {
    auto names = base->names;
    for (std::size_t i = 1; i <= m; ++i) names.push_back(fresh_name(base->names, "Y" + std::to_string(i)));
    return make_ring(base->field, names);
}

template <class F>
std::vector<std::size_t> identity_map(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

}  // namespace detail

/// Defining ideal of A[It] = (J + (Y_i - f_i t)) ∩ k[X, Y], eliminating t
/// with a block order. Gradings: X ↦ 1, Y_i ↦ deg f_i + 1, t ↦ 1 make the
/// ideal homogeneous, so the normal strategy works degree by degree.
template <class F>
ReesPresentation<F> rees_presentation(const Ideal<F>& J, const std::vector<Polynomial<F>>& f) {
    detail::validate_rees_input(J, f);
    const auto& base = J.ring();
    const std::size_t n = base->nvars(), m = f.size();
    auto xy = detail::xy_ring(base, m);
    auto names_t = xy->names;
    names_t.push_back(detail::fresh_name(xy->names, "t"));
    auto xyt = make_ring(base->field, names_t);
    const std::size_t t_index = n + m;

    std::vector<Polynomial<F>> gens;
    auto into_xyt = detail::identity_map<F>(n);
    for (const auto& h : J.generators()) gens.push_back(h.relabel(xyt, into_xyt));
    auto t = Polynomial<F>::variable(xyt, t_index);
    std::vector<int> weights(n + m + 1, 1);
    for (std::size_t i = 0; i < m; ++i) {
        gens.push_back(Polynomial<F>::variable(xyt, n + i) - f[i].relabel(xyt, into_xyt) * t);
        weights[n + i] = f[i].degree().value() + 1;
    }
    std::vector<bool> front(n + m + 1, false);
    front[t_index] = true;
    auto gb = Ideal<F>(xyt, gens).groebner(MonomialOrder::block(front, weights));

    std::vector<bool> keep(n + m + 1, true);
    keep[t_index] = false;
    std::vector<std::size_t> drop_t = detail::identity_map<F>(n + m + 1);
    std::vector<Polynomial<F>> kept;
    for (const auto& g : gb->basis())
        if (g.uses_only(keep)) kept.push_back(g.relabel(xy, drop_t));

    ReesPresentation<F> p;
    p.base = base;
    p.ring = xy;
    p.xvars = detail::identity_map<F>(n);
    for (std::size_t i = 0; i < m; ++i) p.yvars.push_back(n + i);
    p.internal_degree.assign(n + m, 1);
    p.level.assign(n + m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        p.internal_degree[n + i] = f[i].degree().value();
        p.level[n + i] = 1;
    }
    p.defining_ideal = canonical(Ideal<F>(xy, kept));
    p.target = PresentationTarget::rees;
    p.images = f;
    p.base_ideal = J;
    return p;
}

/// Presentation of the associated graded ring: the Rees ideal plus the
/// images f_i(X), since gr_I(A) = A[It] / I A[It].
template <class F>
ReesPresentation<F> assoc_graded_presentation(const Ideal<F>& J, const std::vector<Polynomial<F>>& f) {
    auto p = rees_presentation(J, f);
    auto gens = p.defining_ideal.generators();
    auto into_xy = detail::identity_map<F>(p.base->nvars());
    for (const auto& fi : f) gens.push_back(fi.relabel(p.ring, into_xy));
    p.defining_ideal = canonical(Ideal<F>(p.ring, gens));
    p.target = PresentationTarget::assoc_graded;
    return p;
}

/// Membership of a homogeneous polynomial in a homogeneous ideal, using a
/// basis truncated at the polynomial's degree.
template <class F>
bool homogeneous_member(const Polynomial<F>& h, const Ideal<F>& I) {
    if (h.is_zero()) return true;
    if (I.is_zero()) return false;
    if (!h.is_homogeneous() || !I.homogeneous()) return ideal_member(h, I);
    auto gb = I.groebner(MonomialOrder::grevlex(I.ring()->nvars()), h.degree().value());
    return gb->contains(h);
}

/// g(X, f_1..f_m) ∈ (f)^{d+1} + J where d is the Y-degree of g. Requires g
/// homogeneous in both the internal grading and the Y-degree.
template <class F>
bool lemma1_membership_check(const Polynomial<F>& g, const ReesPresentation<F>& pres) {
    if (!same_ring(g.ring(), pres.ring)) throw AmbientMismatch();
    auto bg = pres.bigrading_of(g);
    if (!bg) throw InputError("lemma check needs a bihomogeneous polynomial: " + to_string(g));
    const int d = bg->second;
    const auto& base = pres.base;
    std::vector<Polynomial<F>> images;
    for (std::size_t i = 0; i < base->nvars(); ++i) images.push_back(Polynomial<F>::variable(base, i));
    for (const auto& fi : pres.images) images.push_back(fi);
    auto h = g.substitute(base, images);
    auto target = ideal_power(Ideal<F>(base, pres.images), d + 1) + pres.base_ideal;
    return homogeneous_member(h, target);
}

/// Convenience overload building the presentation rings from (J, f).
template <class F>
bool lemma1_membership_check(const Polynomial<F>& g, const Ideal<F>& J, const std::vector<Polynomial<F>>& f) {
    ReesPresentation<F> shell;
    shell.base = J.ring();
    const std::size_t n = J.ring()->nvars(), m = f.size();
    shell.ring = g.ring();
    if (shell.ring->nvars() != n + m) throw AmbientMismatch("g must live in k[X, Y1..Ym]");
    shell.internal_degree.assign(n + m, 1);
    shell.level.assign(n + m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        shell.internal_degree[n + i] = f[i].degree().value();
        shell.level[n + i] = 1;
    }
    shell.images = f;
    shell.base_ideal = J;
    return lemma1_membership_check(g, shell);
}

/// dims[n][d] = dim_k (I^n/I^{n+1})_d for 0 <= n <= N, 0 <= d <= D.
struct BigradedHilbert {
    int max_level = 0;
    int max_degree = 0;
    std::vector<std::vector<std::int64_t>> dims;
    bool operator==(const BigradedHilbert&) const = default;
};

inline constexpr int default_level_bound = 8;
inline constexpr int default_degree_bound = 8;

/// Differences of Hilbert functions of S/(I^n + J) over the window.
template <class F>
BigradedHilbert bigraded_hilbert_G(const Ideal<F>& J, const std::vector<Polynomial<F>>& f, int N, int D,
                                   int power_bound = default_power_bound) {
    detail::validate_rees_input(J, f);
    if (N < 0 || D < 0) throw InputError("negative window bound");
    if (N + 1 > power_bound)
        throw LimitExceeded("level bound " + std::to_string(N) + " needs I^" + std::to_string(N + 1) +
                            ", beyond the power bound " + std::to_string(power_bound));
    const auto& ring = J.ring();
    int min_deg = f.front().degree().value();
    for (const auto& g : f) min_deg = std::min(min_deg, g.degree().value());

    // quotient[n][d] = dim (S / (I^n + J))_d
    auto quotient_of = [&](int n) -> std::vector<std::int64_t> {
        if (n == 0) return std::vector<std::int64_t>(D + 1, 0);
        if (long(n) * min_deg > D) return hilbert_function(J, D).dims;
        auto In = ideal_power(Ideal<F>(ring, f), n, power_bound);
        return hilbert_function(In + J, D).dims;
    };
    BigradedHilbert out{N, D, std::vector<std::vector<std::int64_t>>(N + 1, std::vector<std::int64_t>(D + 1, 0))};
    auto lower = quotient_of(0);
    for (int n = 0; n <= N; ++n) {
        auto upper = quotient_of(n + 1);
        for (int d = 0; d <= D; ++d) out.dims[n][d] = upper[d] - lower[d];
        lower = std::move(upper);
    }
    return out;
}

/// Bigraded Hilbert function of a presentation, counting standard
/// monomials by (level, internal degree).
template <class F>
BigradedHilbert presentation_hilbert(const ReesPresentation<F>& pres, int N, int D) {
    const auto n = pres.ring->nvars();
    std::vector<Monomial> leads;
    if (!pres.defining_ideal.is_zero()) leads = pres.defining_ideal.groebner()->leading_monomials();
    BigradedHilbert out{N, D, std::vector<std::vector<std::int64_t>>(N + 1, std::vector<std::int64_t>(D + 1, 0))};
    for_each_standard_monomial(n, leads, pres.internal_degree, D, [&](const Monomial& m, long d) {
        long lvl = m.weighted_degree(pres.level);
        if (lvl <= N) ++out.dims[lvl][d];
    });
    return out;
}

}  // namespace gradealg
