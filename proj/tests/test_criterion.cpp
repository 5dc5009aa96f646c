#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "gradealg/criterion.hpp"
#include "oracles.hpp"

using namespace gradealg;
using Q = Rationals;

namespace {

fixtures::Built<Q> make(std::vector<std::string> vars, std::vector<std::string> J, std::vector<std::string> I) {
    return fixtures::build<Q>({"adhoc", std::move(vars), std::move(J), std::move(I)});
}

Ideal<Q> ideal_in(const RingPtr<Q>& ring, std::initializer_list<const char*> gens) {
    std::vector<Polynomial<Q>> v;
    for (auto g : gens) v.push_back(parse_poly(g, ring));
    return Ideal<Q>(ring, v);
}

std::vector<Polynomial<Q>> maximal_ideal(const RingPtr<Q>& ring) {
    std::vector<Polynomial<Q>> m;
    for (std::size_t i = 0; i < ring->nvars(); ++i) m.push_back(Polynomial<Q>::variable(ring, i));
    return m;
}

using Index = std::vector<std::size_t>;

}  // namespace

TEST(VariableSubsetBasis, Examples) {
    auto a = make({"x1", "x2"}, {}, {"x1", "x1 + x2"});
    EXPECT_EQ(variable_subset_basis(a.I, a.J), (Index{0, 1}));
    auto b = make({"x1", "x2"}, {}, {"x1 + x2"});
    EXPECT_FALSE(variable_subset_basis(b.I, b.J));
    auto c = make({"x1", "x2"}, {}, {"x1^2"});
    EXPECT_FALSE(variable_subset_basis(c.I, c.J));
    auto d = make({"x1", "x2", "x3"}, {"x1*x3"}, {"x1", "x2"});
    EXPECT_EQ(variable_subset_basis(d.I, d.J), (Index{0, 1}));
}

TEST(SplitCheck, Examples) {
    auto a = make({"X1", "X2", "X3"}, {"X1*X2", "X3^2"}, {});
    auto w = split_check(a.J, {0, 1});
    ASSERT_TRUE(w);
    EXPECT_EQ(w->C, (Index{2}));
    EXPECT_TRUE(ideal_equal(w->JB, ideal_in(a.ring, {"X1*X2"})));
    EXPECT_TRUE(ideal_equal(w->JC, ideal_in(a.ring, {"X3^2"})));

    auto b = make({"X1", "X2"}, {"X1*X2"}, {});
    EXPECT_FALSE(split_check(b.J, {0}));
    EXPECT_TRUE(elimination_ideal(b.J, {true, false}).is_zero());
    EXPECT_TRUE(elimination_ideal(b.J, {false, true}).is_zero());

    auto c = make({"X1", "X2", "X3"}, {}, {});
    for (Index B : {Index{}, Index{0}, Index{1, 2}, Index{0, 1, 2}}) {
        auto z = split_check(c.J, B);
        ASSERT_TRUE(z);
        EXPECT_TRUE(z->JB.is_zero());
        EXPECT_TRUE(z->JC.is_zero());
    }
}

TEST(TheoremMain, Examples) {
    auto cross = make({"X1", "X2"}, {"X1*X2"}, {"X1"});
    auto d = decide_and_verify(cross.J, cross.I);
    EXPECT_FALSE(d.isomorphic);
    EXPECT_EQ(d.failure_reason, IsoFailure::not_split);
    EXPECT_FALSE(d.verified);
    EXPECT_FALSE(d.witness);

    auto split = make({"X1", "X2", "X3"}, {"X1*X2", "X3^2"}, {"X1", "X2"});
    auto s = decide_and_verify(split.J, split.I);
    EXPECT_TRUE(s.isomorphic);
    EXPECT_TRUE(s.verified);
    ASSERT_TRUE(s.witness);
    EXPECT_EQ(s.witness->B, (Index{0, 1}));

    auto sum = make({"x1", "x2"}, {}, {"x1 + x2"});
    auto n = theorem_main_decide(sum.J, sum.I);
    EXPECT_FALSE(n.isomorphic);
    EXPECT_EQ(n.failure_reason, IsoFailure::not_variable_generated);

    for (const auto& c : fixtures::blowup_corpus()) {
        auto b = fixtures::build<Q>(c);
        auto m = maximal_ideal(b.ring);
        auto dm = decide_and_verify(b.J, m);
        EXPECT_TRUE(dm.isomorphic) << c.name;
        EXPECT_TRUE(dm.verified) << c.name;
        EXPECT_TRUE(dm.witness->C.empty()) << c.name;
    }
}

TEST(TheoremMain, Errors) {
    auto unit = make({"x1", "x2"}, {}, {"x1", "x2", "1"});
    EXPECT_THROW(theorem_main_decide(unit.J, unit.I), InputError);
    auto inside = make({"x1", "x2"}, {"x1*x2"}, {"x1*x2"});
    EXPECT_THROW(theorem_main_decide(inside.J, inside.I), InputError);
    auto linear = make({"x1", "x2"}, {"x1 - x2"}, {"x1"});
    EXPECT_THROW(theorem_main_decide(linear.J, linear.I), InputError);
    auto allowed = theorem_main_decide(linear.J, linear.I, CriterionOptions{true});
    EXPECT_EQ(allowed.warnings.size(), 1u);
    auto nonhom = make({"x1", "x2"}, {"x1^2 - x2"}, {"x1"});
    EXPECT_THROW(theorem_main_decide(nonhom.J, nonhom.I), InputError);
}

TEST(TheoremMain, VariablesInsideJStayOutOfB) {
    auto p = make({"x1", "x2"}, {"x1"}, {"x2"});
    auto d = decide_and_verify(p.J, p.I, CriterionOptions{true});
    ASSERT_TRUE(d.isomorphic);
    EXPECT_TRUE(d.verified);
    EXPECT_EQ(*d.B, (std::vector<std::size_t>{1}));
    EXPECT_EQ(d.witness->C, (std::vector<std::size_t>{0}));
}

TEST(ConstructiveVerify, Examples) {
    auto a = make({"X1", "X2", "X3"}, {"X1*X2", "X3^2"}, {"X1", "X2"});
    auto gr = assoc_graded_presentation(a.J, a.I);
    EXPECT_TRUE(ideal_equal(gr.defining_ideal, ideal_in(gr.ring, {"X1", "X2", "Y1*Y2", "X3^2"})));
    EXPECT_TRUE(constructive_iso_verify(a.J, *split_check(a.J, {0, 1})));

    auto plane = make({"x1", "x2"}, {}, {"x1", "x2"});
    EXPECT_TRUE(constructive_iso_verify(plane.J, *split_check(plane.J, {0, 1})));

    auto cube = make({"X1"}, {"X1^3"}, {"X1"});
    auto grc = assoc_graded_presentation(cube.J, cube.I);
    EXPECT_TRUE(ideal_equal(grc.defining_ideal, ideal_in(grc.ring, {"X1", "Y1^3"})));
    EXPECT_TRUE(constructive_iso_verify(cube.J, *split_check(cube.J, {0})));
}

TEST(ConstructiveVerify, RejectsInconsistentWitness) {
    auto a = make({"X1", "X2", "X3"}, {"X1*X2", "X3^2"}, {});
    auto w = *split_check(a.J, {0, 1});
    auto wrong = w;
    wrong.JC = Ideal<Q>(a.ring, {});
    EXPECT_THROW(constructive_iso_verify(a.J, wrong), InputError);
    auto overlap = w;
    overlap.C = {1, 2};
    EXPECT_THROW(constructive_iso_verify(a.J, overlap), InputError);
    auto leak = w;
    leak.JB = ideal_in(a.ring, {"X1*X2", "X3^2"});
    EXPECT_THROW(constructive_iso_verify(a.J, leak), InputError);
}

TEST(TheoremMain, RandomMonomialJWithMaximalIdeal) {
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + int(rng() % 3);
        std::vector<std::string> names;
        for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
        auto ring = make_ring(Q{}, names);
        std::vector<Polynomial<Q>> gens;
        const int count = 1 + int(rng() % 3);
        for (int g = 0; g < count; ++g) {
            std::vector<int> e(n, 0);
            int deg = 2 + int(rng() % 2);
            for (int k = 0; k < deg; ++k) ++e[rng() % n];
            gens.push_back(Polynomial<Q>::monomial(ring, Monomial(e)));
        }
        Ideal<Q> J(ring, gens);
        auto d = decide_and_verify(J, maximal_ideal(ring));
        EXPECT_TRUE(d.isomorphic) << trial;
        EXPECT_TRUE(d.verified) << trial;
    }
}

TEST(TheoremMain, PermutationInvariance) {
    std::mt19937 rng(7);
    for (const auto& c : fixtures::blowup_corpus()) {
        auto base = fixtures::build<Q>(c);
        auto want = theorem_main_decide(base.J, base.I);
        for (int k = 0; k < 3; ++k) {
            std::vector<std::size_t> perm(c.vars.size());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            // Variable i of the original ring becomes variable perm[i] of the permuted ring.
            std::vector<std::string> names(c.vars.size());
            for (std::size_t i = 0; i < perm.size(); ++i) names[perm[i]] = c.vars[i];
            auto ring = make_ring(Q{}, names);
            std::vector<Polynomial<Q>> J, I;
            for (const auto& g : base.J.generators()) J.push_back(g.relabel(ring, perm));
            for (const auto& g : base.I) I.push_back(g.relabel(ring, perm));
            auto got = theorem_main_decide(Ideal<Q>(ring, J), I);
            EXPECT_EQ(got.isomorphic, want.isomorphic) << c.name;
            EXPECT_EQ(got.failure_reason, want.failure_reason) << c.name;
            if (want.B) {
                Index mapped;
                for (auto i : *want.B) mapped.push_back(perm[i]);
                std::sort(mapped.begin(), mapped.end());
                EXPECT_EQ(got.B, mapped) << c.name;
            }
        }
    }
}

TEST(TheoremMain, CorpusDecisionsAndHilbertEvidence) {
    const int D = 6;
    const std::vector<std::pair<std::string, bool>> expected = {
        {"line_m", true},       {"plane_m", true},      {"cross_x1", false},   {"split_pair", true},
        {"cube_x1", true},      {"triangle_m", true},   {"cone_x1", false},    {"sum_form", false},
        {"cone_xz", false},     {"squares", false},     {"mixed_degrees", false},
        {"two_lines_m", true},  {"split_cone", true},
    };
    auto corpus = fixtures::blowup_corpus();
    ASSERT_EQ(corpus.size(), expected.size());
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        ASSERT_EQ(corpus[k].name, expected[k].first);
        auto c = fixtures::build<Q>(corpus[k]);
        auto d = decide_and_verify(c.J, c.I);
        EXPECT_EQ(d.isomorphic, expected[k].second) << corpus[k].name;
        EXPECT_EQ(d.verified, d.isomorphic) << corpus[k].name;

        auto gr = assoc_graded_presentation(c.J, c.I);
        auto hg = presentation_hilbert(gr, D, D);
        auto ha = hilbert_function(c.J, D);
        for (int deg = 0; deg <= D; ++deg) {
            std::int64_t total = 0;
            for (int n = 0; n <= D; ++n) total += hg.dims[n][deg];
            EXPECT_EQ(total, ha.dims[deg]) << corpus[k].name << " degree " << deg;
            EXPECT_EQ(total, oracle::quotient_dim(c.ring, c.J.generators(), deg)) << corpus[k].name;
        }
    }
}

TEST(TheoremMain, PrimeField) {
    auto c = fixtures::build<PrimeField>({"p", {"x1", "x2", "x3", "x4"}, {"x1*x2", "x3^2 - x4^2"}, {"x1", "x2"}},
                                         PrimeField(2));
    auto d = decide_and_verify(c.J, c.I);
    EXPECT_TRUE(d.isomorphic);
    EXPECT_TRUE(d.verified);
}
