#include <gtest/gtest.h>

#include <array>

#include "cech_oracle.hpp"
#include "fixtures.hpp"
#include "gradealg/blowup.hpp"
#include "gradealg/rees_cohomology.hpp"

using namespace gradealg;
using Q = Rationals;
using Facets = std::vector<std::vector<std::size_t>>;
using Index = std::vector<std::size_t>;

namespace {

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
    std::vector<std::size_t> v;
    for (auto i = from; i < to; ++i) v.push_back(i);
    return v;
}

SimplicialComplex on(int n, Facets facets) { return SimplicialComplex(range(0, n), facets); }

/// Every complex (downward-closed nonempty family) on vertices offset..offset+k-1.
std::vector<SimplicialComplex> all_complexes(int k, std::size_t offset) {
    std::vector<SimplicialComplex> out;
    const unsigned nsub = 1u << k;
    for (std::uint64_t fam = 1; fam < (std::uint64_t(1) << nsub); ++fam) {
        if (!(fam & 1)) continue;  // must contain ∅
        bool closed = true;
        for (unsigned s = 0; s < nsub && closed; ++s) {
            if (!(fam >> s & 1)) continue;
            for (int v = 0; v < k; ++v)
                if ((s >> v & 1) && !(fam >> (s & ~(1u << v)) & 1)) closed = false;
        }
        if (!closed) continue;
        std::vector<Face> faces;
        for (unsigned s = 0; s < nsub; ++s)
            if (fam >> s & 1) faces.push_back(Face(s) << offset);
        out.push_back(SimplicialComplex::from_masks(range(offset, offset + k), faces));
    }
    return out;
}

using fixtures::split_corpus;

/// Window with every dimension and support cleared.
CohomologyWindow zero_window(int max_index, long lo, long hi) {
    CohomologyWindow w{lo, hi, {}};
    for (int i = 0; i <= max_index; ++i) w.indices.push_back({Support::none(), std::vector<std::int64_t>(hi - lo + 1, 0)});
    return w;
}

}  // namespace

TEST(GWTensor, Examples) {
    auto wA = hochster_window(on(2, {{0}, {1}}), Q{}, -8, 2);
    auto wk = hochster_window(on(0, {{}}), Q{}, -8, 2);
    for (int q = 0; q <= 2; ++q) {
        auto t = gw_tensor_assemble(wA, wk, q, -6, 2);
        EXPECT_EQ(t.support, wA.support(q));
        for (long a = -6; a <= 2; ++a) EXPECT_EQ(t.dims[a + 6], wA.dim(q, a));
    }

    auto wx = hochster_window(on(1, {{0}}), Q{}, -8, 2);
    auto t = gw_tensor_assemble(wx, wx, 2, -7, 2);
    bool acyclic = false;
    auto oracle = cech::local_cohomology(cech::polynomial_ring(2), Q{}, -7, 2, acyclic);
    EXPECT_TRUE(acyclic);
    for (long a = -7; a <= 2; ++a) {
        EXPECT_EQ(t.dims[a + 7], a <= -2 ? -a - 1 : 0);
        EXPECT_EQ(t.dims[a + 7], oracle[2][a + 7]);
    }

    auto zero = zero_window(2, -8, 2);
    for (int q = 0; q <= 4; ++q) {
        auto z = gw_tensor_assemble(wA, zero, q, -6, 2);
        EXPECT_TRUE(z.support.empty());
        for (auto d : z.dims) EXPECT_EQ(d, 0);
    }
}

TEST(GWTensor, WindowUnderflow) {
    auto wx = hochster_window(on(1, {{0}}), Q{}, -3, 0);
    EXPECT_THROW(gw_tensor_assemble(wx, wx, 2, -6, 0), WindowUnderflow);
    EXPECT_NO_THROW(gw_tensor_assemble(wx, wx, 2, -4, 0));
}

TEST(GWTensor, Bilinear) {
    auto w1 = hochster_window(on(3, {{0}, {1, 2}}), Q{}, -8, 2);
    auto w2 = hochster_window(on(2, {{0}, {1}}), Q{}, -8, 2);
    for (int j = 0; j <= 1; ++j)
        for (long beta = -4; beta <= 0; ++beta) {
            if (w2.dim(j, beta) == 0) continue;
            auto doubled = w2;
            doubled.indices[j].dims[beta + 8] *= 2;
            for (int q = 0; q <= 3; ++q) {
                auto base = gw_tensor_assemble(w1, w2, q, -4, 0);
                auto more = gw_tensor_assemble(w1, doubled, q, -4, 0);
                for (long a = -4; a <= 0; ++a) {
                    std::int64_t extra = 0;
                    if (q - j >= 0 && a - beta >= -8) extra = w1.dim(q - j, a - beta) * w2.dim(j, beta);
                    EXPECT_EQ(more.dims[a + 4] - base.dims[a + 4], extra) << j << " " << beta << " " << q << " " << a;
                }
            }
        }
}

TEST(HPT, Examples) {
    auto wx = hochster_window(on(1, {{0}}), Q{}, -10, 2);
    auto h = hpt_rees_window(wx, 2, -8, 2);
    bool acyclic = false;
    auto oracle = cech::local_cohomology(cech::polynomial_ring(2), Q{}, -8, 2, acyclic);
    for (long a = -8; a <= 2; ++a) EXPECT_EQ(h.dims[a + 8], oracle[2][a + 8]) << a;
    EXPECT_EQ(h.dims[-2 + 8], 1);
    EXPECT_EQ(h.dims[-3 + 8], 2);
    EXPECT_EQ(h.dims[-1 + 8], 0);

    auto wp = hochster_window(on(2, {{0, 1}}), Q{}, -10, 2);
    auto top = hpt_rees_window(wp, 2, 0, 2);
    for (auto d : top.dims) EXPECT_EQ(d, 0);
    EXPECT_THROW(hpt_rees_window(wx, 2, -12, 0), WindowUnderflow);
}

TEST(HPT, MiddleBandVanishes) {
    for (const auto& c : fixtures::complex_corpus()) {
        auto w = hochster_window(fixtures::make_complex(c), Q{}, -6, 2);
        auto r = hpt_rees_window(w, -6, 2);
        for (int i = 0; i <= r.max_index(); ++i) {
            EXPECT_EQ(r.dim(i, -1), 0) << c.name;
            EXPECT_FALSE(r.support(i).contains(-1)) << c.name;
        }
    }
}

TEST(Proposition, Trivariate) {
    auto data = split_sr_data(on(2, {{0, 1}}), {0}, Q{});
    auto h3 = prop_assemble_rees(data, 3, -8, 2);
    bool acyclic = false;
    auto oracle = cech::local_cohomology(cech::polynomial_ring(3), Q{}, -8, 2, acyclic);
    EXPECT_TRUE(acyclic);
    for (long a = -8; a <= 2; ++a) {
        std::int64_t want = a <= -3 ? (-a - 1) * (-a - 2) / 2 : 0;
        EXPECT_EQ(h3.dims[a + 8], want) << a;
        EXPECT_EQ(h3.dims[a + 8], oracle[3][a + 8]) << a;
    }
    EXPECT_EQ(h3.dims[-4 + 8], 3);
    for (int ell = 0; ell < 3; ++ell) EXPECT_TRUE(prop_assemble_rees(data, ell, -8, 2).support.empty());
}

TEST(Proposition, LineTimesTwoPoints) {
    auto data = split_sr_data(join(on(1, {{0}}), SimplicialComplex({1, 2}, {{1}, {2}})), {0}, Q{});
    EXPECT_EQ(prop_assemble_rees(data, 2, -4, 2).dims[4], 0);
    auto h3 = prop_assemble_rees(data, 3, -4, 2);
    EXPECT_EQ(h3.dims[-2 + 4], 1);
    EXPECT_EQ(h3.dims[-3 + 4], 4);
    EXPECT_EQ(h3.dims[-1 + 4], 0);
    EXPECT_EQ(h3.dims[0 + 4], 0);
}

TEST(Proposition, DegeneratesToHPTWhenCEmpty) {
    for (const auto& c : fixtures::complex_corpus()) {
        auto delta = fixtures::make_complex(c);
        if (delta.dim() < 0) continue;
        auto data = split_sr_data(delta, delta.vertices(), Q{});
        ASSERT_TRUE(data.C.empty());
        auto wA = hochster_window(delta, Q{}, -9, 2);
        for (int ell = 0; ell <= delta.dim() + 2; ++ell) {
            auto p = prop_assemble_rees(data, ell, -9, 2);
            auto h = hpt_rees_window(wA, ell, -9, 2);
            EXPECT_EQ(p.dims, h.dims) << c.name << " " << ell;
            EXPECT_EQ(p.support, h.support) << c.name << " " << ell;
        }
    }
}

TEST(Proposition, TensorMatchesHochsterOfJoin) {
    for (const auto& sc : split_corpus()) {
        auto data = split_sr_data(sc.delta, sc.B, Q{});
        auto assembled = base_cohomology_window(data, -7, 2);
        auto direct = hochster_window(sc.delta, Q{}, -7, 2);
        ASSERT_EQ(assembled.max_index() >= direct.max_index(), true) << sc.name;
        for (int i = 0; i <= assembled.max_index(); ++i) {
            EXPECT_EQ(assembled.support(i), direct.support(i)) << sc.name << " " << i;
            for (long j = -7; j <= 2; ++j) EXPECT_EQ(assembled.dim(i, j), direct.dim(i, j)) << sc.name;
        }
    }
}

TEST(SplitData, Errors) {
    auto cross = on(2, {{0}, {1}});
    EXPECT_THROW(split_sr_data(cross, {0}, Q{}), InputError);
    auto data = split_sr_data(cross, {0, 0, 1}, Q{});
    EXPECT_EQ(data.B, (Index{0, 1}));
    EXPECT_THROW(split_sr_data(cross, {}, Q{}), InputError);
    EXPECT_THROW(split_sr_data(on(3, {{0}, {1, 2}}), {0}, Q{}), InputError);
    EXPECT_THROW(split_sr_data(on(2, {{1}}), {0}, Q{}), InputError);

    auto b = fixtures::build<Q>({"s", {"x1", "x2", "x3"}, {"x1*x2", "x3^2"}, {"x1", "x2"}});
    EXPECT_THROW(split_sr_data(b.J, b.I), InputError);
    auto ok = fixtures::build<Q>({"s", {"x1", "x2", "x3"}, {"x1*x2"}, {"x1", "x2"}});
    auto d = split_sr_data(ok.J, ok.I);
    EXPECT_EQ(d.B, (Index{0, 1}));
    EXPECT_EQ(d.C, (Index{2}));
    auto bad = fixtures::build<Q>({"s", {"x1", "x2"}, {"x1*x2"}, {"x1"}});
    EXPECT_THROW(split_sr_data(bad.J, bad.I), InputError);
}

TEST(DimRees, Examples) {
    EXPECT_EQ(dim_rees(on(2, {{0}, {1}}), {0}), 2);
    EXPECT_EQ(dim_rees(on(3, {{0}, {1, 2}}), {0}), 2);
    EXPECT_EQ(dim_rees(on(3, {{0}, {1, 2}}), {1}), 3);
    EXPECT_THROW(dim_rees(on(2, {{0}, {1}}), {}), InputError);
}

TEST(DimRees, AgreesWithKrullDimension) {
    struct Row {
        std::vector<std::string> vars, J, I;
        bool plus_one;
    };
    const std::vector<Row> rows = {
        {{"x1", "x2"}, {"x1*x2"}, {"x1"}, true},
        {{"x1", "x2", "x3"}, {"x1*x2", "x1*x3"}, {"x1"}, false},
        {{"x1", "x2", "x3"}, {"x1*x2", "x1*x3"}, {"x2"}, true},
        {{"x1", "x2"}, {}, {"x1"}, true},
        {{"x1", "x2", "x3", "x4"}, {"x1*x3", "x1*x4", "x2*x3", "x2*x4", "x1*x2"}, {"x1", "x2"}, false},
        {{"x1", "x2", "x3", "x4"}, {"x1*x4", "x2*x4", "x3*x4"}, {"x4"}, false},
        {{"x1", "x2", "x3"}, {"x1*x2*x3"}, {"x1", "x2", "x3"}, true},
        {{"x1", "x2", "x3", "x4"}, {"x1*x3", "x1*x4", "x2*x3", "x2*x4"}, {"x1", "x2"}, true},
    };
    int plus = 0, same = 0;
    for (const auto& r : rows) {
        auto b = fixtures::build<Q>({"d", r.vars, r.J, r.I});
        auto delta = complex_from_ideal(b.J);
        Index B;
        for (const auto& f : b.I)
            for (std::size_t v = 0; v < b.ring->nvars(); ++v)
                if (f == Polynomial<Q>::variable(b.ring, v)) B.push_back(v);
        ASSERT_EQ(B.size(), b.I.size());
        int d = dim_rees(delta, B);
        auto rees = rees_presentation(b.J, b.I);
        EXPECT_EQ(d, krull_dim(rees.defining_ideal)) << r.J.size();
        EXPECT_EQ(d, delta.dim() + 1 + (r.plus_one ? 1 : 0));
        (r.plus_one ? plus : same)++;
    }
    EXPECT_GE(plus, 2);
    EXPECT_GE(same, 2);
}

TEST(CMRees, Examples) {
    EXPECT_TRUE(cm_rees(split_sr_data(on(2, {{0, 1}}), {0}, Q{})));
    EXPECT_FALSE(cm_rees(split_sr_data(on(2, {{0}, {1}}), {0, 1}, Q{})));
    EXPECT_TRUE(cm_rees(split_sr_data(join(on(1, {{0}}), SimplicialComplex({1}, {{1}})), {0}, Q{})));
}

// A = k[x1,x2,y]/(x1 x2), I = (x1, x2): A is CM with a(A) = -1, but the Rees
// ideal is squarefree and its complex has depth 2 < 3, so R is not CM.
TEST(CMRees, NeedsNegativeAInvariantOfFirstFactor) {
    auto b = fixtures::build<Q>({"c", {"x1", "x2", "y"}, {"x1*x2"}, {"x1", "x2"}});
    auto A = sr_invariants(complex_from_ideal(b.J), Q{});
    EXPECT_TRUE(A.cm);
    EXPECT_EQ(A.a_invariant, -1);
    auto rees = rees_presentation(b.J, b.I);
    auto R = sr_invariants(complex_from_ideal(rees.defining_ideal), Q{});
    EXPECT_EQ(R.dim_A, 3);
    EXPECT_EQ(R.depth_A, 2);
    EXPECT_FALSE(R.cm);
    EXPECT_FALSE(R.gencm);

    auto data = split_sr_data(b.J, b.I);
    EXPECT_FALSE(cm_rees(data));
    auto v = gencm_decide(data);
    EXPECT_TRUE(v.cm_A);
    EXPECT_EQ(v.a_A, -1);
    EXPECT_FALSE(v.gencm);
    EXPECT_FALSE(v.assembled_gencm);
}

// When the Rees ideal is monomial, Hochster's formula on its complex gives
// the local cohomology of R directly; it must match the assembly.
TEST(Proposition, MatchesMonomialReesPresentations) {
    const std::vector<fixtures::BlowupCase> cases = {
        {"a", {"x1", "x2", "y"}, {"x1*x2"}, {"x1", "x2"}},
        {"b", {"x1", "x2", "y1", "y2"}, {"x1*x2", "y1*y2"}, {"x1", "x2"}},
        {"c", {"x1", "x2", "x3"}, {"x1*x2", "x1*x3", "x2*x3"}, {"x1", "x2", "x3"}},
        {"d", {"x", "y"}, {}, {"x"}},
        {"e", {"x", "y", "z"}, {}, {"x"}},
        {"f", {"x1", "x2", "y"}, {"x1*x2"}, {"y"}},
        {"g", {"x1", "x2", "y1", "y2", "y3"}, {"x1*x2", "y1*y2*y3"}, {"x1", "x2"}},
    };
    int compared = 0;
    for (const auto& c : cases) {
        auto b = fixtures::build<Q>(c);
        auto rees = rees_presentation(b.J, b.I);
        bool monomial = true;
        for (const auto& g : rees.defining_ideal.generators()) monomial = monomial && g.terms().size() == 1;
        if (!monomial) continue;
        ++compared;
        auto direct = hochster_window(complex_from_ideal(rees.defining_ideal), Q{}, -7, 2);
        auto assembled = rees_cohomology_window(split_sr_data(b.J, b.I), -7, 2);
        for (int l = 0; l <= std::max(direct.max_index(), assembled.max_index()); ++l) {
            EXPECT_EQ(direct.support(l), assembled.support(l)) << c.name << " " << l;
            for (long a = -7; a <= 2; ++a) EXPECT_EQ(direct.dim(l, a), assembled.dim(l, a)) << c.name << " " << l << " " << a;
        }
    }
    EXPECT_GE(compared, 5);
}

TEST(GenCM, JoinFixtures) {
    auto m = gencm_decide(split_sr_data(on(2, {{0}, {1}}), {0, 1}, Q{}));
    EXPECT_TRUE(m.gencm);
    EXPECT_EQ(m.gencm_case, GenCMCase::case2_dimA2_zero);
    EXPECT_FALSE(m.cm_R);
    EXPECT_TRUE(m.precondition_A_gencm);

    auto cycle = SimplicialComplex({2, 3, 4}, {{2, 3}, {2, 4}, {3, 4}});
    auto c3 = gencm_decide(split_sr_data(join(on(2, {{0, 1}}), cycle), {0, 1}, Q{}));
    EXPECT_TRUE(c3.gencm);
    EXPECT_EQ(c3.gencm_case, GenCMCase::case3_vanishing);
    EXPECT_TRUE(c3.precondition_A_gencm);
    EXPECT_TRUE(c3.evidence.a_A1_negative);
    EXPECT_TRUE(c3.evidence.H_d1m1_A1_below_minus_two_zero);
    EXPECT_TRUE(c3.evidence.H_d2m1_A2_zero);
    EXPECT_EQ(c3.dim_R, 5);
    EXPECT_TRUE(c3.assembled_gencm);

    auto edges = SimplicialComplex({2, 3, 4, 5}, {{2, 3}, {4, 5}});
    auto neg = gencm_decide(split_sr_data(join(on(2, {{0, 1}}), edges), {0, 1}, Q{}));
    EXPECT_FALSE(neg.gencm);
    EXPECT_EQ(neg.gencm_case, GenCMCase::none);
    EXPECT_FALSE(neg.evidence.H_d2m1_A2_zero);
    EXPECT_FALSE(neg.evidence.dimA2_zero);
    EXPECT_FALSE(neg.evidence.I_in_all_top_primes);
    EXPECT_FALSE(neg.precondition_A_gencm);
    EXPECT_FALSE(neg.assembled_gencm);
}

TEST(GenCM, CaseTwoWheneverIIsMaximal) {
    for (const auto& c : fixtures::complex_corpus()) {
        auto delta = fixtures::make_complex(c);
        if (delta.dim() < 0) continue;
        auto v = gencm_decide(split_sr_data(delta, delta.vertices(), Q{}));
        if (!v.precondition_A_gencm) continue;
        EXPECT_EQ(v.gencm_case, GenCMCase::case2_dimA2_zero) << c.name;
        EXPECT_TRUE(v.assembled_gencm) << c.name;
    }
}

TEST(GenCM, CorpusProperties) {
    for (const auto& sc : split_corpus())
        for (unsigned p : {0u, 2u}) {
            auto check = [&](const auto& fld) {
                auto data = split_sr_data(sc.delta, sc.B, fld);
                auto v = gencm_decide(data);
                if (v.cm_R && v.precondition_A_gencm) {
                    EXPECT_TRUE(v.gencm) << sc.name;
                }
                // CM of R read off the exact supports: only H^{dim R} survives.
                bool assembled_cm = true;
                auto sup = rees_supports(data);
                for (int l = 0; l < int(sup.size()); ++l)
                    if (l != v.dim_R && !sup[l].empty()) assembled_cm = false;
                EXPECT_EQ(v.cm_R, assembled_cm) << sc.name;
                if (v.precondition_A_gencm) {
                    EXPECT_TRUE(v.factors_gencm) << sc.name;
                    EXPECT_EQ(v.gencm, v.assembled_gencm) << sc.name;
                }
                auto supports = rees_supports(data);
                int top = -1;
                for (int l = 0; l < int(supports.size()); ++l)
                    if (!supports[l].empty()) top = l;
                EXPECT_EQ(top, v.dim_R) << sc.name;
                EXPECT_EQ(v.cm_R, cm_rees(data));
            };
            if (p == 0) check(Q{});
            else check(PrimeField(p));
        }
}

// All splittings of joins of complexes on at most three vertices each. The
// containment case never occurs with I nonzero in A, and whenever A is
// generalized CM the three cases agree with the assembled supports.
TEST(GenCM, ExhaustiveSmallJoins) {
    int checked = 0, in_scope = 0;
    std::array<int, 4> cases{};
    for (int k1 = 1; k1 <= 3; ++k1)
        for (int k2 = 0; k2 <= 3; ++k2)
            for (const auto& d1 : all_complexes(k1, 0)) {
                if (d1.dim() < 0) continue;
                for (const auto& d2 : all_complexes(k2, k1)) {
                    auto delta = join(d1, d2);
                    auto data = split_sr_data(delta, range(0, k1), Q{});
                    auto v = gencm_decide(data);
                    EXPECT_FALSE(v.evidence.I_in_all_top_primes);
                    EXPECT_EQ(v.dim_R, delta.dim() + 2);
                    if (v.precondition_A_gencm) {
                        ++in_scope;
                        EXPECT_TRUE(v.factors_gencm);
                        EXPECT_EQ(v.gencm, v.assembled_gencm);
                    }
                    ++cases[static_cast<int>(v.gencm_case)];
                    ++checked;
                }
            }
    EXPECT_GT(checked, 250);
    EXPECT_GT(in_scope, 100);
    EXPECT_EQ(cases[0], 0);
    EXPECT_GT(cases[1], 0);
    EXPECT_GT(cases[2], 0);
    EXPECT_GT(cases[3], 0);
}

// Over all complexes on four vertices and every B, a splitting with I
// nonzero in A always has a top facet meeting B.
TEST(GenCM, ContainmentNeedsNonSplitIdeal) {
    int splits = 0, contained_nonsplit = 0;
    for (const auto& delta : all_complexes(4, 0)) {
        if (delta.dim() < 0) continue;
        for (unsigned bm = 1; bm < 16; ++bm) {
            Index B, C;
            for (std::size_t v = 0; v < 4; ++v) (bm >> v & 1 ? B : C).push_back(v);
            bool contained = dim_rees(delta, B) == delta.dim() + 1;
            auto d1 = induced_subcomplex(delta, B);
            bool split = join(d1, induced_subcomplex(delta, C)) == delta;
            if (split && d1.dim() >= 0) {
                ++splits;
                EXPECT_FALSE(contained);
            }
            if (contained && d1.dim() >= 0 && !split) ++contained_nonsplit;
        }
    }
    EXPECT_GT(splits, 50);
    EXPECT_GT(contained_nonsplit, 0);
}
