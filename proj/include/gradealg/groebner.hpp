#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "parser.hpp"
#include "polynomial.hpp"

namespace gradealg {

template <class F>
class GroebnerBasis;

namespace detail {

/// Terms sorted descending under a fixed monomial order.
template <class F>
using OrderedTerms = std::vector<Term<F>>;

template <class F>
OrderedTerms<F> to_ordered(const Polynomial<F>& p, const MonomialOrder& order) {
    OrderedTerms<F> t = p.terms();
    std::sort(t.begin(), t.end(),
              [&](const Term<F>& a, const Term<F>& b) { return order.greater(a.mono, b.mono); });
    return t;
}

/// h[from..] - c * m * g, merged under `order`.
template <class F>
OrderedTerms<F> sub_multiple(const F& fld, const MonomialOrder& order, const OrderedTerms<F>& h, std::size_t from,
                             const typename F::value_type& c, const Monomial& m, const OrderedTerms<F>& g,
                             std::size_t gfrom) {
    OrderedTerms<F> r;
    r.reserve(h.size() - from + g.size() - gfrom);
    std::size_t i = from, j = gfrom;
    while (i < h.size() || j < g.size()) {
        std::optional<Monomial> gm;
        if (j < g.size()) gm = g[j].mono * m;
        std::strong_ordering cmp = std::strong_ordering::greater;
        if (i == h.size()) cmp = std::strong_ordering::less;
        else if (gm) cmp = order.compare(h[i].mono, *gm);
        if (cmp > 0) {
            r.push_back(h[i++]);
        } else if (cmp < 0) {
            r.push_back(Term<F>{std::move(*gm), fld.neg(fld.mul(c, g[j].coeff))});
            ++j;
        } else {
            auto v = fld.sub(h[i].coeff, fld.mul(c, g[j].coeff));
            if (!fld.is_zero(v)) r.push_back(Term<F>{h[i].mono, std::move(v)});
            ++i;
            ++j;
        }
    }
    return r;
}

/// Full reduction of `f` by polynomials whose leading terms are monic.
/// `skip` excludes one divisor (used when interreducing).
template <class F>
OrderedTerms<F> reduce(const F& fld, const MonomialOrder& order, OrderedTerms<F> h,
                       const std::vector<const OrderedTerms<F>*>& divisors, const OrderedTerms<F>* skip = nullptr) {
    OrderedTerms<F> rem;
    std::size_t head = 0;
    while (head < h.size()) {
        const auto& lt = h[head];
        const OrderedTerms<F>* div = nullptr;
        for (const auto* g : divisors)
            if (g != skip && g->front().mono.divides(lt.mono)) {
                div = g;
                break;
            }
        if (!div) {
            rem.push_back(lt);
            ++head;
            continue;
        }
        auto c = lt.coeff;  // divisor is monic
        auto m = lt.mono / div->front().mono;
        h = sub_multiple(fld, order, h, head + 1, c, m, *div, 1);
        head = 0;
    }
    return rem;
}

template <class F>
void make_monic(const F& fld, OrderedTerms<F>& t) {
    if (t.empty() || fld.is_one(t.front().coeff)) return;
    auto inv = fld.inv(t.front().coeff);
    for (auto& term : t) term.coeff = fld.mul(term.coeff, inv);
}

}  // namespace detail

/// Ideal of a polynomial ring given by generators. Copies share a
/// lock-guarded memo of Gröbner bases keyed by monomial order.
template <class F>
class Ideal {
public:
    Ideal() = default;
    explicit Ideal(RingPtr<F> ring) : ring_(std::move(ring)), memo_(std::make_shared<Memo>()) {}
    Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens) : Ideal(std::move(ring)) {
        for (auto& g : gens) {
            if (!same_ring(g.ring(), ring_)) throw AmbientMismatch();
            if (!g.is_zero()) gens_.push_back(std::move(g));
        }
    }

    const RingPtr<F>& ring() const { return ring_; }
    const std::vector<Polynomial<F>>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    bool homogeneous() const {
        return std::all_of(gens_.begin(), gens_.end(), [](const auto& g) { return g.is_homogeneous(); });
    }
    bool homogeneous(const std::vector<int>& weights) const {
        return std::all_of(gens_.begin(), gens_.end(), [&](const auto& g) { return g.is_homogeneous(weights); });
    }

    /// Reduced Gröbner basis, computed once per order. `max_degree` truncates
    /// to S-pairs of (selection) degree at most that bound.
    std::shared_ptr<const GroebnerBasis<F>> groebner(const MonomialOrder& order,
                                                     std::optional<long> max_degree = std::nullopt) const;

    std::shared_ptr<const GroebnerBasis<F>> groebner() const {
        return groebner(MonomialOrder::grevlex(ring_->nvars()));
    }

    friend Ideal operator+(const Ideal& a, const Ideal& b) {
        if (!same_ring(a.ring_, b.ring_)) throw AmbientMismatch();
        auto g = a.gens_;
        g.insert(g.end(), b.gens_.begin(), b.gens_.end());
        return Ideal(a.ring_, std::move(g));
    }

private:
    struct Memo {
        std::mutex mutex;
        std::map<std::string, std::shared_ptr<const GroebnerBasis<F>>> bases;
    };

    RingPtr<F> ring_;
    std::vector<Polynomial<F>> gens_;
    std::shared_ptr<Memo> memo_;
};

/// Reduced Gröbner basis: monic, minimal, interreduced, sorted by
/// increasing leading monomial.
template <class F>
class GroebnerBasis {
public:
    GroebnerBasis(RingPtr<F> ring, MonomialOrder order, std::vector<detail::OrderedTerms<F>> elems, bool truncated)
        : ring_(std::move(ring)), order_(std::move(order)), ordered_(std::move(elems)), truncated_(truncated) {
        for (const auto& e : ordered_) {
            basis_.emplace_back(ring_, e);
            leads_.push_back(e.front().mono);
        }
    }

    const RingPtr<F>& ring() const { return ring_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Polynomial<F>>& basis() const { return basis_; }
    const std::vector<Monomial>& leading_monomials() const { return leads_; }
    bool truncated() const { return truncated_; }
    bool is_unit() const { return leads_.size() == 1 && leads_.front().is_one(); }

    Polynomial<F> normal_form(const Polynomial<F>& f) const {
        if (!same_ring(f.ring(), ring_)) throw AmbientMismatch();
        std::vector<const detail::OrderedTerms<F>*> divs;
        for (const auto& e : ordered_) divs.push_back(&e);
        return Polynomial<F>(ring_, detail::reduce(ring_->field, order_, detail::to_ordered(f, order_), divs));
    }

    bool contains(const Polynomial<F>& f) const { return normal_form(f).is_zero(); }

    bool lead_divisible(const Monomial& m) const {
        return std::any_of(leads_.begin(), leads_.end(), [&](const Monomial& l) { return l.divides(m); });
    }

private:
    RingPtr<F> ring_;
    MonomialOrder order_;
    std::vector<detail::OrderedTerms<F>> ordered_;
    std::vector<Polynomial<F>> basis_;
    std::vector<Monomial> leads_;
    bool truncated_;
};

/// Buchberger's algorithm with the coprime and chain criteria and the
/// normal selection strategy (least lcm degree, then pair indices).
/// Pairs of two monomials are never formed.
template <class F>
GroebnerBasis<F> buchberger(const Ideal<F>& ideal, const MonomialOrder& order,
                            std::optional<long> max_degree = std::nullopt) {
    using detail::OrderedTerms;
    const auto& ring = ideal.ring();
    const F& fld = ring->field;
    if (order.nvars() != ring->nvars()) throw InputError("monomial order arity mismatch");

    std::vector<OrderedTerms<F>> elems;
    std::vector<const OrderedTerms<F>*> divs;
    elems.reserve(64);

    using PairKey = std::tuple<long, std::size_t, std::size_t>;
    std::set<PairKey> pending;
    std::set<std::pair<std::size_t, std::size_t>> pending_index;

    // Pointers into `elems` are refreshed after every insertion.
    auto refresh = [&] {
        divs.clear();
        for (const auto& e : elems) divs.push_back(&e);
    };

    auto add_element = [&](OrderedTerms<F> h) {
        detail::make_monic(fld, h);
        std::size_t k = elems.size();
        elems.push_back(std::move(h));
        refresh();
        for (std::size_t i = 0; i < k; ++i) {
            if (elems[i].size() == 1 && elems[k].size() == 1) continue;
            auto l = lcm(elems[i].front().mono, elems[k].front().mono);
            pending.emplace(order.selection_degree(l), i, k);
            pending_index.emplace(i, k);
        }
    };

    auto is_pending = [&](std::size_t a, std::size_t b) {
        return pending_index.count({std::min(a, b), std::max(a, b)}) != 0;
    };

    // Seed with generators reduced against what is already present.
    std::vector<OrderedTerms<F>> seeds;
    for (const auto& g : ideal.generators()) seeds.push_back(detail::to_ordered(g, order));
    std::sort(seeds.begin(), seeds.end(), [&](const auto& a, const auto& b) {
        auto da = order.selection_degree(a.front().mono), db = order.selection_degree(b.front().mono);
        if (da != db) return da < db;
        return order.greater(b.front().mono, a.front().mono);
    });
    for (auto& s : seeds) {
        auto r = detail::reduce(fld, order, std::move(s), divs);
        if (!r.empty()) add_element(std::move(r));
    }

    while (!pending.empty()) {
        auto [deg, i, j] = *pending.begin();
        if (max_degree && deg > *max_degree) break;
        pending.erase(pending.begin());
        pending_index.erase({i, j});

        const auto& lmi = elems[i].front().mono;
        const auto& lmj = elems[j].front().mono;
        if (lmi.coprime(lmj)) continue;
        auto l = lcm(lmi, lmj);
        bool chain = false;
        for (std::size_t k = 0; k < elems.size() && !chain; ++k) {
            if (k == i || k == j) continue;
            if (elems[k].front().mono.divides(l) && !is_pending(i, k) && !is_pending(j, k)) chain = true;
        }
        if (chain) continue;

        // S-polynomial: (l/lmi) * fi - (l/lmj) * fj, both monic.
        OrderedTerms<F> left;
        auto mi = l / lmi;
        for (std::size_t t = 1; t < elems[i].size(); ++t)
            left.push_back(Term<F>{elems[i][t].mono * mi, elems[i][t].coeff});
        auto s = detail::sub_multiple(fld, order, left, 0, fld.one(), l / lmj, elems[j], 1);
        auto r = detail::reduce(fld, order, std::move(s), divs);
        if (!r.empty()) add_element(std::move(r));
    }

    // Minimalize: drop elements whose leading monomial is divisible by another's.
    std::vector<std::size_t> keep;
    for (std::size_t a = 0; a < elems.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < elems.size() && !redundant; ++b) {
            if (a == b) continue;
            const auto& ma = elems[a].front().mono;
            const auto& mb = elems[b].front().mono;
            if (mb.divides(ma) && (!(ma == mb) || b < a)) redundant = true;
        }
        if (!redundant) keep.push_back(a);
    }
    std::vector<OrderedTerms<F>> minimal;
    for (auto a : keep) minimal.push_back(elems[a]);

    // Interreduce tails.
    std::vector<const OrderedTerms<F>*> mdivs;
    for (const auto& e : minimal) mdivs.push_back(&e);
    std::vector<OrderedTerms<F>> reduced;
    for (const auto& e : minimal) {
        OrderedTerms<F> tail(e.begin() + 1, e.end());
        auto rt = detail::reduce(fld, order, std::move(tail), mdivs, &e);
        OrderedTerms<F> full;
        full.push_back(e.front());
        full.insert(full.end(), rt.begin(), rt.end());
        reduced.push_back(std::move(full));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const auto& a, const auto& b) { return order.greater(b.front().mono, a.front().mono); });
    return GroebnerBasis<F>(ring, order, std::move(reduced), max_degree.has_value());
}

template <class F>
std::shared_ptr<const GroebnerBasis<F>> Ideal<F>::groebner(const MonomialOrder& order,
                                                           std::optional<long> max_degree) const {
    std::string key = order.key();
    if (max_degree) key += "@" + std::to_string(*max_degree);
    {
        std::lock_guard lock(memo_->mutex);
        auto it = memo_->bases.find(key);
        if (it != memo_->bases.end()) return it->second;
    }
    auto gb = std::make_shared<const GroebnerBasis<F>>(buchberger(*this, order, max_degree));
    std::lock_guard lock(memo_->mutex);
    return memo_->bases.emplace(key, gb).first->second;
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& gb) {
    return gb.normal_form(f);
}

template <class F>
bool ideal_member(const Polynomial<F>& f, const Ideal<F>& ideal) {
    if (!same_ring(f.ring(), ideal.ring())) throw AmbientMismatch();
    if (f.is_zero()) return true;
    if (ideal.is_zero()) return false;
    return ideal.groebner()->contains(f);
}

/// Every generator of `inner` lies in `outer`.
template <class F>
bool ideal_contains(const Ideal<F>& outer, const Ideal<F>& inner) {
    if (!same_ring(outer.ring(), inner.ring())) throw AmbientMismatch();
    if (inner.is_zero()) return true;
    if (outer.is_zero()) return false;
    auto gb = outer.groebner();
    return std::all_of(inner.generators().begin(), inner.generators().end(),
                       [&](const auto& g) { return gb->contains(g); });
}

template <class F>
bool ideal_equal(const Ideal<F>& a, const Ideal<F>& b) {
    return ideal_contains(a, b) && ideal_contains(b, a);
}

/// I ∩ k[keep], via a block order placing the eliminated variables first.
template <class F>
Ideal<F> elimination_ideal(const Ideal<F>& ideal, const std::vector<bool>& keep) {
    const auto n = ideal.ring()->nvars();
    if (keep.size() != n) throw InputError("elimination mask arity mismatch");
    if (ideal.is_zero()) return Ideal<F>(ideal.ring());
    std::vector<bool> front(n);
    for (std::size_t i = 0; i < n; ++i) front[i] = !keep[i];
    auto gb = ideal.groebner(MonomialOrder::block(front));
    std::vector<Polynomial<F>> gens;
    for (const auto& g : gb->basis())
        if (g.uses_only(keep)) gens.push_back(g);
    return Ideal<F>(ideal.ring(), std::move(gens));
}

/// Canonical (reduced grevlex) generators.
template <class F>
Ideal<F> canonical(const Ideal<F>& ideal) {
    if (ideal.is_zero()) return ideal;
    return Ideal<F>(ideal.ring(), ideal.groebner()->basis());
}

inline constexpr int default_power_bound = 12;

template <class F>
Ideal<F> ideal_power(const Ideal<F>& ideal, int n, int bound = default_power_bound) {
    if (n < 0) throw InputError("negative ideal power");
    if (n > bound)
        throw LimitExceeded("ideal power " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
    const auto& ring = ideal.ring();
    if (n == 0) return Ideal<F>(ring, {Polynomial<F>::constant(ring, ring->field.one())});
    // Dedupe up to scalars by normalizing to monic (in canonical order).
    auto key_of = [](const Polynomial<F>& p) { return to_string(p.monic()); };
    std::vector<Polynomial<F>> current;
    std::set<std::string> seen;
    for (const auto& g : ideal.generators())
        if (seen.insert(key_of(g)).second) current.push_back(g.monic());
    const auto base = current;
    for (int k = 1; k < n; ++k) {
        std::vector<Polynomial<F>> next;
        seen.clear();
        for (const auto& a : current)
            for (const auto& b : base) {
                auto p = (a * b).monic();
                if (seen.insert(to_string(p)).second) next.push_back(std::move(p));
            }
        current = std::move(next);
    }
    return Ideal<F>(ring, std::move(current));
}

/// Monomial enumeration: calls `visit(m, weighted degree)` for every
/// monomial of weighted degree <= max_degree that is not divisible by any
/// of `leads`. Weights must be positive.
template <class Visit>
void for_each_standard_monomial(std::size_t nvars, const std::vector<Monomial>& leads, const std::vector<int>& weights,
                                long max_degree, Visit&& visit) {
    std::vector<int> exps(nvars, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t var, long deg) {
        if (var == nvars) {
            visit(Monomial(exps), deg);
            return;
        }
        for (int e = 0; deg + long(e) * weights[var] <= max_degree; ++e) {
            exps[var] = e;
            if (e > 0) {
                // Divisibility is monotone in exponents, so stop this branch early.
                Monomial partial(exps);
                bool divisible = std::any_of(leads.begin(), leads.end(),
                                             [&](const Monomial& l) { return l.divides(partial); });
                if (divisible) break;
            }
            rec(var + 1, deg + long(e) * weights[var]);
        }
        exps[var] = 0;
    };
    rec(0, 0);
}

struct GradedHilbert {
    int bound = 0;
    std::vector<std::int64_t> dims;  ///< dims[d] = dim (S/I)_d for 0 <= d <= bound
    bool operator==(const GradedHilbert&) const = default;
};

inline constexpr int default_hilbert_bound = 8;

/// Standard monomial counts of S/I per degree, from a Gröbner basis
/// truncated at the window bound.
template <class F>
GradedHilbert hilbert_function(const Ideal<F>& ideal, int bound) {
    if (!ideal.homogeneous()) throw InputError("hilbert_function needs a homogeneous ideal");
    if (bound < 0) throw InputError("negative degree bound");
    const auto n = ideal.ring()->nvars();
    // Generators above the bound cannot touch degrees <= bound.
    std::vector<Polynomial<F>> low;
    for (const auto& g : ideal.generators())
        if (g.degree().value() <= bound) low.push_back(g);
    std::vector<Monomial> leads;
    if (!low.empty()) {
        auto truncated = low.size() == ideal.generators().size() ? ideal : Ideal<F>(ideal.ring(), low);
        leads = truncated.groebner(MonomialOrder::grevlex(n), bound)->leading_monomials();
    }
    GradedHilbert h{bound, std::vector<std::int64_t>(bound + 1, 0)};
    for_each_standard_monomial(n, leads, std::vector<int>(n, 1), bound,
                               [&](const Monomial&, long d) { ++h.dims[d]; });
    return h;
}

/// Largest set of variables carrying no leading monomial of a Gröbner
/// basis, i.e. the dimension of S/in(I) = dim S/I.
inline int krull_dim_of_leads(std::size_t nvars, const std::vector<Monomial>& leads) {
    int best = -1;
    const std::uint64_t total = std::uint64_t{1} << nvars;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        int size = __builtin_popcountll(mask);
        if (size <= best) continue;
        std::vector<bool> allowed(nvars);
        for (std::size_t v = 0; v < nvars; ++v) allowed[v] = (mask >> v) & 1;
        bool free = std::none_of(leads.begin(), leads.end(),
                                 [&](const Monomial& l) { return l.supported_in(allowed); });
        if (free) best = size;
    }
    return best;
}

template <class F>
int krull_dim(const Ideal<F>& ideal) {
    const auto n = ideal.ring()->nvars();
    if (n > 24) throw LimitExceeded("krull_dim enumerates variable subsets; at most 24 variables");
    if (ideal.is_zero()) return static_cast<int>(n);
    auto gb = ideal.groebner();
    if (gb->is_unit()) throw InputError("krull_dim of the unit ideal");
    return krull_dim_of_leads(n, gb->leading_monomials());
}

/// Ideal generated by the leading monomials of the grevlex basis.
template <class F>
Ideal<F> initial_ideal(const Ideal<F>& ideal) {
    std::vector<Polynomial<F>> gens;
    if (!ideal.is_zero())
        for (const auto& m : ideal.groebner()->leading_monomials())
            gens.push_back(Polynomial<F>::monomial(ideal.ring(), m));
    return Ideal<F>(ideal.ring(), std::move(gens));
}

}  // namespace gradealg
