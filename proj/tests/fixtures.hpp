#pragma once

#include <string>
#include <vector>

#include "gradealg/groebner.hpp"
#include "gradealg/parser.hpp"
#include "gradealg/simplicial.hpp"

namespace fixtures {

using gradealg::Ideal;
using gradealg::Polynomial;
using gradealg::Rationals;

struct BlowupCase {
    std::string name;
    std::vector<std::string> vars;
    std::vector<std::string> J;
    std::vector<std::string> I;
};

/// Corpus of (A = S/J, I) pairs used across the blowup, criterion and
/// acceptance suites.
inline std::vector<BlowupCase> blowup_corpus() {
    return {
        {"line_m", {"x"}, {}, {"x"}},
        {"plane_m", {"x1", "x2"}, {}, {"x1", "x2"}},
        {"cross_x1", {"x1", "x2"}, {"x1*x2"}, {"x1"}},
        {"split_pair", {"x1", "x2", "x3"}, {"x1*x2", "x3^2"}, {"x1", "x2"}},
        {"cube_x1", {"x1"}, {"x1^3"}, {"x1"}},
        {"triangle_m", {"x1", "x2", "x3"}, {"x1*x2*x3"}, {"x1", "x2", "x3"}},
        {"cone_x1", {"x1", "x2", "x3"}, {"x1^2 - x2*x3"}, {"x1"}},
        {"sum_form", {"x1", "x2", "x3"}, {}, {"x1 + x2", "x3"}},
        {"cone_xz", {"x", "y", "z"}, {"x*y - z^2"}, {"x", "z"}},
        {"squares", {"x", "y"}, {}, {"x^2", "y^2"}},
        {"mixed_degrees", {"x", "y"}, {}, {"x", "y^2"}},
        {"two_lines_m", {"x1", "x2", "x3", "x4"}, {"x1*x3", "x1*x4", "x2*x3", "x2*x4"}, {"x1", "x2", "x3", "x4"}},
        {"split_cone", {"x1", "x2", "x3", "x4"}, {"x1*x2", "x3^2 - x4^2"}, {"x1", "x2"}},
    };
}

template <class F>
struct Built {
    gradealg::RingPtr<F> ring;
    Ideal<F> J;
    std::vector<Polynomial<F>> I;
};

template <class F>
Built<F> build(const BlowupCase& c, F field = F{}) {
    auto ring = gradealg::make_ring(field, c.vars);
    std::vector<Polynomial<F>> j, i;
    for (const auto& s : c.J) j.push_back(gradealg::parse_poly(s, ring));
    for (const auto& s : c.I) i.push_back(gradealg::parse_poly(s, ring));
    return {ring, Ideal<F>(ring, j), i};
}

struct ComplexCase {
    std::string name;
    int nvertices;
    std::vector<std::vector<std::size_t>> facets;  // 0-based
};

inline std::vector<std::vector<std::size_t>> rp2_facets() {
    return {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
            {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}};
}

inline std::vector<std::vector<std::size_t>> torus7_facets() {
    std::vector<std::vector<std::size_t>> f;
    for (std::size_t i = 0; i < 7; ++i) {
        f.push_back({i, (i + 1) % 7, (i + 3) % 7});
        f.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return f;
}

/// Simplicial complexes on at most 8 vertices.
inline std::vector<ComplexCase> complex_corpus() {
    return {
        {"empty_complex", 0, {{}}},
        {"point", 1, {{0}}},
        {"two_points", 2, {{0}, {1}}},
        {"edge", 2, {{0, 1}}},
        {"triangle_boundary", 3, {{0, 1}, {0, 2}, {1, 2}}},
        {"point_and_edge", 3, {{0}, {1, 2}}},
        {"path", 3, {{0, 1}, {1, 2}}},
        {"two_disjoint_edges", 4, {{0, 1}, {2, 3}}},
        {"ghost_vertex", 3, {{0, 1}}},
        {"bowtie", 5, {{0, 1, 2}, {0, 3, 4}}},
        {"triangle_with_tail", 4, {{0, 1, 2}, {2, 3}}},
        {"square_cycle", 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}},
        {"octahedron", 6, {{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}}},
        {"rp2", 6, rp2_facets()},
        {"torus7", 7, torus7_facets()},
        {"two_triangles_edge", 4, {{0, 1, 2}, {1, 2, 3}}},
        {"tetra_boundary_plus_point", 5, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {4}}},
        {"simplex4", 4, {{0, 1, 2, 3}}},
    };
}

inline gradealg::SimplicialComplex make_complex(const ComplexCase& c) {
    std::vector<std::size_t> verts(c.nvertices);
    for (int i = 0; i < c.nvertices; ++i) verts[i] = i;
    return gradealg::SimplicialComplex(verts, c.facets);
}

inline std::vector<std::size_t> range(std::size_t from, std::size_t to) {
    std::vector<std::size_t> v;
    for (auto i = from; i < to; ++i) v.push_back(i);
    return v;
}

struct SplitCase {
    std::string name;
    gradealg::SimplicialComplex delta;
    std::vector<std::size_t> B;
};

/// Joins of small complexes, split along the first factor's vertices.
inline std::vector<SplitCase> split_corpus() {
    std::vector<SplitCase> out;
    using Facets = std::vector<std::vector<std::size_t>>;
    auto add = [&](std::string name, int n1, Facets f1, int n2, Facets f2) {
        auto d1 = gradealg::SimplicialComplex(range(0, n1), f1);
        Facets shifted;
        for (auto f : f2) {
            for (auto& v : f) v += n1;
            shifted.push_back(f);
        }
        auto d2 = gradealg::SimplicialComplex(range(n1, n1 + n2), shifted);
        out.push_back({name, gradealg::join(d1, d2), range(0, n1)});
    };
    add("point_x_field", 1, {{0}}, 0, {{}});
    add("edge_x_field", 2, {{0, 1}}, 0, {{}});
    add("two_points_m", 2, {{0}, {1}}, 0, {{}});
    add("cycle_m", 3, {{0, 1}, {0, 2}, {1, 2}}, 0, {{}});
    add("point_x_point", 1, {{0}}, 1, {{0}});
    add("point_x_two_points", 1, {{0}}, 2, {{0}, {1}});
    add("edge_x_cycle", 2, {{0, 1}}, 3, {{0, 1}, {0, 2}, {1, 2}});
    add("edge_x_disjoint_edges", 2, {{0, 1}}, 4, {{0, 1}, {2, 3}});
    add("two_points_x_point", 2, {{0}, {1}}, 1, {{0}});
    add("cycle_x_point", 3, {{0, 1}, {0, 2}, {1, 2}}, 1, {{0}});
    add("point_and_edge_x_point", 3, {{0}, {1, 2}}, 1, {{0}});
    add("point_x_rp2", 1, {{0}}, 6, rp2_facets());
    add("two_points_x_two_points", 2, {{0}, {1}}, 2, {{0}, {1}});
    add("path_x_edge", 3, {{0, 1}, {1, 2}}, 2, {{0, 1}});
    return out;
}

}  // namespace fixtures
