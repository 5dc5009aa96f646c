#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "groebner.hpp"
#include "linalg.hpp"

namespace gradealg {

/// A face as a bit set of vertex labels (labels below 64).
using Face = std::uint64_t;

inline constexpr std::size_t max_sr_vertices = 12;

inline int face_size(Face f) { return std::popcount(f); }

inline std::vector<std::size_t> face_vertices(Face f) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; f; ++v, f >>= 1)
        if (f & 1) out.push_back(v);
    return out;
}

inline Face face_of(const std::vector<std::size_t>& vs) {
    Face f = 0;
    for (auto v : vs) {
        if (v >= 64) throw LimitExceeded("vertex label " + std::to_string(v) + " out of range");
        f |= Face(1) << v;
    }
    return f;
}

/// Sorts faces by their increasing vertex lists.
inline bool face_lex_less(Face a, Face b) { return face_vertices(a) < face_vertices(b); }

/// Finite simplicial complex given by its facets. Vertex labels are indices
/// into an ambient variable list; a vertex in `vertices` that lies in no
/// facet is a non-face. The void complex is rejected; {∅} is allowed.
class SimplicialComplex {
public:
    SimplicialComplex(std::vector<std::size_t> vertices, const std::vector<std::vector<std::size_t>>& facets)
        : vertices_(std::move(vertices)) {
        std::vector<Face> masks;
        for (const auto& f : facets) masks.push_back(face_of(f));
        init(std::move(masks));
    }

    static SimplicialComplex from_masks(std::vector<std::size_t> vertices, std::vector<Face> facets) {
        SimplicialComplex c;
        c.vertices_ = std::move(vertices);
        c.init(std::move(facets));
        return c;
    }

    const std::vector<std::size_t>& vertices() const { return vertices_; }
    Face vertex_mask() const { return face_of(vertices_); }
    const std::vector<Face>& facet_masks() const { return facets_; }

    std::vector<std::vector<std::size_t>> facets() const {
        std::vector<std::vector<std::size_t>> out;
        for (auto f : facets_) out.push_back(face_vertices(f));
        return out;
    }

    /// dim Δ; -1 for {∅}.
    int dim() const {
        int d = -1;
        for (auto f : facets_) d = std::max(d, face_size(f) - 1);
        return d;
    }

    bool contains(Face s) const {
        return std::any_of(facets_.begin(), facets_.end(), [s](Face f) { return (s & ~f) == 0; });
    }

    /// Facets of maximal dimension.
    std::vector<Face> top_facets() const {
        std::vector<Face> out;
        for (auto f : facets_)
            if (face_size(f) - 1 == dim()) out.push_back(f);
        return out;
    }

    /// All faces including ∅, ordered by size and then lexicographically.
    std::vector<Face> faces() const {
        std::vector<Face> all;
        for (auto f : facets_)
            for (Face s = f;; s = (s - 1) & f) {
                all.push_back(s);
                if (s == 0) break;
            }
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        std::sort(all.begin(), all.end(), [](Face a, Face b) {
            if (face_size(a) != face_size(b)) return face_size(a) < face_size(b);
            return face_lex_less(a, b);
        });
        return all;
    }

    /// f_{-1}, f_0, ..., f_{dim}.
    std::vector<std::int64_t> f_vector() const {
        std::vector<std::int64_t> f(dim() + 2, 0);
        for (auto s : faces()) ++f[face_size(s)];
        return f;
    }

    bool operator==(const SimplicialComplex& o) const {
        return vertex_mask() == o.vertex_mask() && facets_ == o.facets_;
    }

private:
    SimplicialComplex() = default;

    void init(std::vector<Face> masks) {
        std::sort(vertices_.begin(), vertices_.end());
        vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
        if (masks.empty()) throw InputError("the void complex (no faces) is not allowed");
        const Face all = vertex_mask();
        for (auto f : masks)
            if (f & ~all) throw InputError("facet uses a vertex outside the vertex set");
        std::sort(masks.begin(), masks.end());
        masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
        for (auto f : masks) {
            bool maximal = std::none_of(masks.begin(), masks.end(),
                                        [f](Face g) { return g != f && (f & ~g) == 0; });
            if (maximal) facets_.push_back(f);
        }
        std::sort(facets_.begin(), facets_.end(), face_lex_less);
    }

    std::vector<std::size_t> vertices_;
    std::vector<Face> facets_;
};

/// lk σ = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}.
inline SimplicialComplex link(const SimplicialComplex& delta, Face sigma) {
    if (!delta.contains(sigma)) throw InputError("link of a non-face");
    std::vector<Face> facets;
    for (auto f : delta.facet_masks())
        if ((sigma & ~f) == 0) facets.push_back(f & ~sigma);
    std::vector<std::size_t> verts;
    for (auto v : delta.vertices())
        if (!(sigma >> v & 1)) verts.push_back(v);
    return SimplicialComplex::from_masks(verts, facets);
}

/// Δ restricted to the vertex set W.
inline SimplicialComplex induced_subcomplex(const SimplicialComplex& delta, const std::vector<std::size_t>& W) {
    Face w = face_of(W);
    std::vector<Face> facets;
    for (auto f : delta.facet_masks()) facets.push_back(f & w);
    return SimplicialComplex::from_masks(W, facets);
}

/// Δ1 * Δ2 on disjoint vertex sets.
inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.vertex_mask() & b.vertex_mask()) throw InputError("join needs disjoint vertex sets");
    std::vector<Face> facets;
    for (auto f : a.facet_masks())
        for (auto g : b.facet_masks()) facets.push_back(f | g);
    auto verts = a.vertices();
    verts.insert(verts.end(), b.vertices().begin(), b.vertices().end());
    return SimplicialComplex::from_masks(verts, facets);
}

/// Complex of a squarefree monomial ideal J ⊂ k[x_1..x_n]: faces are the
/// vertex sets containing no generator support.
template <class F>
SimplicialComplex complex_from_ideal(const Ideal<F>& J) {
    const std::size_t n = J.ring()->nvars();
    if (n > max_sr_vertices)
        throw LimitExceeded(std::to_string(n) + " vertices exceed the bound " + std::to_string(max_sr_vertices));
    std::vector<Face> gens;
    for (const auto& g : J.generators()) {
        if (g.terms().size() != 1) throw InputError("not a monomial: " + to_string(g));
        const auto& e = g.terms().front().mono.exponents();
        Face s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i] > 1) throw InputError("not squarefree: " + to_string(g));
            if (e[i] == 1) s |= Face(1) << i;
        }
        if (s == 0) throw InputError("J is the unit ideal");
        gens.push_back(s);
    }
    auto is_face = [&](Face s) {
        return std::none_of(gens.begin(), gens.end(), [s](Face g) { return (g & ~s) == 0; });
    };
    std::vector<Face> facets;
    const Face all = n == 64 ? ~Face(0) : (Face(1) << n) - 1;
    for (Face s = 0; s <= all; ++s) {
        if (!is_face(s)) continue;
        bool maximal = true;
        for (std::size_t v = 0; v < n && maximal; ++v)
            if (!(s >> v & 1) && is_face(s | Face(1) << v)) maximal = false;
        if (maximal) facets.push_back(s);
    }
    std::vector<std::size_t> verts(n);
    for (std::size_t i = 0; i < n; ++i) verts[i] = i;
    return SimplicialComplex::from_masks(verts, facets);
}

/// Stanley-Reisner ideal: the minimal non-faces as monomials of `ring`.
template <class F>
Ideal<F> stanley_reisner_ideal(const SimplicialComplex& delta, const RingPtr<F>& ring) {
    const Face all = delta.vertex_mask();
    if (delta.vertices().size() > max_sr_vertices)
        throw LimitExceeded("too many vertices for face enumeration");
    if (!delta.vertices().empty() && delta.vertices().back() >= ring->nvars())
        throw InputError("complex has more vertices than the ring has variables");
    std::vector<Polynomial<F>> gens;
    for (Face s = all;; s = (s - 1) & all) {
        if (!delta.contains(s)) {
            bool minimal = true;
            for (auto v : face_vertices(s))
                if (!delta.contains(s & ~(Face(1) << v))) minimal = false;
            if (minimal) {
                std::vector<int> e(ring->nvars(), 0);
                for (auto v : face_vertices(s)) e[v] = 1;
                gens.push_back(Polynomial<F>::monomial(ring, Monomial(e)));
            }
        }
        if (s == 0) break;
    }
    std::reverse(gens.begin(), gens.end());
    return Ideal<F>(ring, gens);
}

/// Ranks of reduced homology H̃_k(Δ; k) for k = -1..dim Δ (entry k + 1),
/// from ranks of the augmented boundary matrices.
template <class F>
std::vector<std::int64_t> reduced_homology_ranks(const SimplicialComplex& delta, const F& field) {
    const int d = delta.dim();
    std::vector<std::vector<Face>> by_size(d + 2);
    for (auto s : delta.faces()) by_size[face_size(s)].push_back(s);

    // rank of ∂ : C_{size} → C_{size-1}, with C_{-1} spanned by ∅.
    auto boundary_rank = [&](int size) -> std::int64_t {
        if (size < 1 || size > d + 1) return 0;
        const auto& rows = by_size[size];
        const auto& cols = by_size[size - 1];
        std::unordered_map<Face, std::size_t> col_index;
        for (std::size_t c = 0; c < cols.size(); ++c) col_index[cols[c]] = c;
        std::vector<std::vector<typename F::value_type>> m(rows.size(),
                                                           std::vector<typename F::value_type>(cols.size(), field.zero()));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            auto vs = face_vertices(rows[r]);
            for (std::size_t pos = 0; pos < vs.size(); ++pos) {
                Face facet = rows[r] & ~(Face(1) << vs[pos]);
                m[r][col_index.at(facet)] = pos % 2 == 0 ? field.one() : field.neg(field.one());
            }
        }
        return static_cast<std::int64_t>(matrix_rank(field, std::move(m)));
    };

    std::vector<std::int64_t> ranks(d + 2, 0);
    std::vector<std::int64_t> brank(d + 3, 0);
    for (int size = 1; size <= d + 1; ++size) brank[size] = boundary_rank(size);
    for (int size = 0; size <= d + 1; ++size)
        ranks[size] = static_cast<std::int64_t>(by_size[size].size()) - brank[size] - brank[size + 1];
    return ranks;
}

/// For each facet of top dimension, the variables off it (generators of the
/// corresponding minimal prime), in facet order.
inline std::vector<std::vector<std::size_t>> minimal_primes_top(const SimplicialComplex& delta) {
    std::vector<std::vector<std::size_t>> out;
    for (auto f : delta.top_facets()) {
        std::vector<std::size_t> p;
        for (auto v : delta.vertices())
            if (!(f >> v & 1)) p.push_back(v);
        out.push_back(p);
    }
    return out;
}

}  // namespace gradealg
