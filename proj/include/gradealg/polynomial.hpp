#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "monomial.hpp"

namespace gradealg {

/// Ambient polynomial ring: coefficient field plus ordered variable names.
template <class F>
struct Ring {
    F field;
    std::vector<std::string> names;

    std::size_t nvars() const { return names.size(); }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return i;
        return std::nullopt;
    }

    bool operator==(const Ring&) const = default;
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(F field, std::vector<std::string> names) {
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) throw InputError("duplicate variable name '" + names[i] + "'");
    return std::make_shared<const Ring<F>>(Ring<F>{std::move(field), std::move(names)});
}

template <class F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
    return a == b || (a && b && *a == *b);
}

/// Total degree with an explicit marker for the zero polynomial.
class Degree {
public:
    static Degree minus_infinity() { return Degree(); }
    static Degree of(int d) { return Degree(d); }

    bool is_minus_infinity() const { return !value_; }
    int value() const {
        if (!value_) throw std::logic_error("degree of the zero polynomial");
        return *value_;
    }

    auto operator<=>(const Degree& o) const {
        if (!value_ || !o.value_) return bool(value_) <=> bool(o.value_);
        return *value_ <=> *o.value_;
    }
    bool operator==(const Degree&) const = default;

private:
    Degree() = default;
    explicit Degree(int d) : value_(d) {}
    std::optional<int> value_;
};

template <class F>
struct Term {
    Monomial mono;
    typename F::value_type coeff;
};

/// Sparse polynomial with terms kept in grevlex-descending order and no
/// zero coefficients. Immutable in practice: every operation returns a new
/// value.
template <class F>
class Polynomial {
public:
    using value_type = typename F::value_type;
    using term_type = Term<F>;

    Polynomial() = default;
    explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

    /// Collects like terms and drops zeros.
    Polynomial(RingPtr<F> ring, std::vector<term_type> terms) : ring_(std::move(ring)) {
        const auto& fld = field();
        auto order = canonical_order();
        std::sort(terms.begin(), terms.end(), [&](const term_type& a, const term_type& b) {
            return order.greater(a.mono, b.mono);
        });
        for (auto& t : terms) {
            if (t.mono.size() != ring_->nvars()) throw AmbientMismatch("monomial arity mismatch");
            if (!terms_.empty() && terms_.back().mono == t.mono) {
                terms_.back().coeff = fld.add(terms_.back().coeff, t.coeff);
                if (fld.is_zero(terms_.back().coeff)) terms_.pop_back();
            } else if (!fld.is_zero(t.coeff)) {
                terms_.push_back(std::move(t));
            }
        }
    }

    static Polynomial constant(RingPtr<F> ring, value_type c) {
        std::size_t n = ring->nvars();
        return Polynomial(ring, {term_type{Monomial(n), std::move(c)}});
    }
    static Polynomial variable(RingPtr<F> ring, std::size_t index) {
        std::size_t n = ring->nvars();
        auto one = ring->field.one();
        return Polynomial(ring, {term_type{Monomial::variable(n, index), one}});
    }
    static Polynomial monomial(RingPtr<F> ring, Monomial m) {
        auto one = ring->field.one();
        return Polynomial(ring, {term_type{std::move(m), one}});
    }

    const RingPtr<F>& ring() const { return ring_; }
    const F& field() const { return ring_->field; }
    const std::vector<term_type>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    Degree degree() const {
        if (terms_.empty()) return Degree::minus_infinity();
        int d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return Degree::of(d);
    }

    bool is_homogeneous() const {
        for (const auto& t : terms_)
            if (t.mono.degree() != terms_.front().mono.degree()) return false;
        return true;
    }

    /// Homogeneous for the grading that gives variable i weight `weights[i]`.
    bool is_homogeneous(const std::vector<int>& weights) const {
        for (const auto& t : terms_)
            if (t.mono.weighted_degree(weights) != terms_.front().mono.weighted_degree(weights))
                return false;
        return true;
    }

    /// Variables occurring in some term.
    std::vector<bool> support() const {
        std::vector<bool> s(ring_->nvars(), false);
        for (const auto& t : terms_)
            for (std::size_t i = 0; i < s.size(); ++i)
                if (t.mono[i] != 0) s[i] = true;
        return s;
    }

    bool uses_only(const std::vector<bool>& allowed) const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [&](const term_type& t) { return t.mono.supported_in(allowed); });
    }

    const term_type& leading_term(const MonomialOrder& order) const {
        if (terms_.empty()) throw std::logic_error("leading term of zero");
        auto it = std::max_element(terms_.begin(), terms_.end(), [&](const term_type& a, const term_type& b) {
            return order.compare(a.mono, b.mono) < 0;
        });
        return *it;
    }

    Polynomial operator-() const {
        Polynomial r(ring_);
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_same(a, b);
        const auto& fld = a.field();
        auto order = a.canonical_order();
        auto cmp = [&order](const Monomial& x, const Monomial& y) { return order.greater(x, y); };
        std::map<Monomial, value_type, decltype(cmp)> acc(cmp);
        for (const auto& s : a.terms_)
            for (const auto& t : b.terms_) {
                auto m = s.mono * t.mono;
                auto c = fld.mul(s.coeff, t.coeff);
                auto [it, fresh] = acc.try_emplace(std::move(m), c);
                if (!fresh) it->second = fld.add(it->second, c);
            }
        Polynomial r(a.ring_);
        for (auto& [m, c] : acc)
            if (!fld.is_zero(c)) r.terms_.push_back(term_type{m, c});
        return r;
    }

    Polynomial scaled(const value_type& c) const {
        if (field().is_zero(c)) return Polynomial(ring_);
        Polynomial r(ring_);
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.coeff = field().mul(t.coeff, c);
        return r;
    }

    Polynomial pow(int n) const {
        if (n < 0) throw InputError("negative power");
        Polynomial result = constant(ring_, field().one());
        Polynomial base = *this;
        while (n > 0) {
            if (n & 1) result = result * base;
            n >>= 1;
            if (n) base = base * base;
        }
        return result;
    }

    /// Ring map into `target`: variable i goes to images[i].
    Polynomial<F> substitute(const RingPtr<F>& target, const std::vector<Polynomial<F>>& images) const {
        if (images.size() != ring_->nvars()) throw InputError("substitution needs one image per variable");
        Polynomial<F> result(target);
        for (const auto& t : terms_) {
            Polynomial<F> p = Polynomial<F>::constant(target, t.coeff);
            for (std::size_t i = 0; i < ring_->nvars(); ++i)
                if (t.mono[i] > 0) {
                    if (!same_ring(images[i].ring(), target)) throw AmbientMismatch();
                    p = p * images[i].pow(t.mono[i]);
                }
            result = result + p;
        }
        return result;
    }

    /// Renames variables into `target`: variable i goes to target variable
    /// index_map[i]. Coefficients are copied.
    Polynomial<F> relabel(const RingPtr<F>& target, const std::vector<std::size_t>& index_map) const {
        std::vector<term_type> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            std::vector<int> e(target->nvars(), 0);
            for (std::size_t i = 0; i < ring_->nvars(); ++i) e[index_map[i]] += t.mono[i];
            out.push_back(term_type{Monomial(std::move(e)), t.coeff});
        }
        return Polynomial<F>(target, std::move(out));
    }

    /// Divides by the leading coefficient of the canonical leading term.
    Polynomial monic() const {
        if (terms_.empty()) return *this;
        return scaled(field().inv(terms_.front().coeff));
    }

    bool operator==(const Polynomial& o) const {
        if (!same_ring(ring_, o.ring_) || terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].mono == o.terms_[i].mono) || !field().equal(terms_[i].coeff, o.terms_[i].coeff))
                return false;
        return true;
    }

    MonomialOrder canonical_order() const { return MonomialOrder::grevlex(ring_->nvars()); }

    static void check_same(const Polynomial& a, const Polynomial& b) {
        if (!same_ring(a.ring_, b.ring_)) throw AmbientMismatch();
    }

private:
    static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
        check_same(a, b);
        const auto& fld = a.field();
        auto order = a.canonical_order();
        Polynomial r(a.ring_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            std::strong_ordering c = std::strong_ordering::greater;
            if (i == a.terms_.size()) c = std::strong_ordering::less;
            else if (j < b.terms_.size()) c = order.compare(a.terms_[i].mono, b.terms_[j].mono);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                auto t = b.terms_[j++];
                if (subtract) t.coeff = fld.neg(t.coeff);
                r.terms_.push_back(std::move(t));
            } else {
                auto s = subtract ? fld.sub(a.terms_[i].coeff, b.terms_[j].coeff)
                                  : fld.add(a.terms_[i].coeff, b.terms_[j].coeff);
                if (!fld.is_zero(s)) r.terms_.push_back(term_type{a.terms_[i].mono, s});
                ++i;
                ++j;
            }
        }
        return r;
    }

    RingPtr<F> ring_;
    std::vector<term_type> terms_;
};

struct Bidegree {
    int deg_x = 0;
    int deg_y = 0;
    bool operator==(const Bidegree&) const = default;
};

/// (X-degree, Y-degree) when every term shares both; std::nullopt when the
/// polynomial is not bihomogeneous or is zero.
template <class F>
std::optional<Bidegree> bidegree(const Polynomial<F>& p, const std::vector<std::size_t>& xvars,
                                 const std::vector<std::size_t>& yvars) {
    std::vector<int> seen(p.ring()->nvars(), 0);
    for (auto v : xvars) ++seen.at(v);
    for (auto v : yvars) ++seen.at(v);
    for (int s : seen)
        if (s != 1) throw InputError("X and Y blocks must partition the ambient variables");
    if (p.is_zero()) return std::nullopt;
    std::optional<Bidegree> result;
    for (const auto& t : p.terms()) {
        Bidegree b{t.mono.degree_in(xvars), t.mono.degree_in(yvars)};
        if (!result) result = b;
        else if (!(*result == b)) return std::nullopt;
    }
    return result;
}

}  // namespace gradealg
