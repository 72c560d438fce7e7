#include <gtest/gtest.h>

#include <algorithm>

#include "corpus.hpp"
#include "effalg/constructions.hpp"
#include "effalg/decomposition.hpp"
#include "effalg/io.hpp"
#include "oracle.hpp"

namespace effalg {
namespace {

ElementId id(const EffectAlgebra& e, std::string_view name) { return e.find(name).value(); }

EffectAlgebra product_2_c2() { return load_eaf(testing::read_text(testing::data_path("product-2-c2.eaf"))); }

TEST(AtomicDecomposition, ChainElementIsAMultiple) {
    const Analysis an(mv_chain(5));
    const auto& e = an.algebra();
    const auto d = atomic_decomposition(an, id(e, "3a"));
    ASSERT_EQ(d.parts.size(), 1u);
    EXPECT_EQ(d.parts[0].atom, id(e, "a"));
    EXPECT_EQ(d.parts[0].multiplicity, 3u);
    EXPECT_TRUE(d.unique);
    EXPECT_TRUE(atomic_decomposition(an, e.zero()).parts.empty());
}

TEST(AtomicDecomposition, BooleanTopIsEveryAtom) {
    const Analysis an(boolean_algebra(3));
    const auto d = atomic_decomposition(an, an.algebra().one());
    ASSERT_EQ(d.parts.size(), 3u);
    for (const auto& part : d.parts) EXPECT_EQ(part.multiplicity, 1u);
    EXPECT_EQ(family_sum(an.algebra(), d.parts), an.algebra().one());
}

TEST(AtomicDecomposition, NonLatticeIsMarkedNotUnique) {
    const Analysis an(fixture("coinciding-multiples"));
    const auto& e = an.algebra();
    const auto d = atomic_decomposition(an, id(e, "2a"));
    EXPECT_FALSE(d.unique);
    EXPECT_EQ(family_sum(e, d.parts), id(e, "2a"));
}

TEST(FamilySum, UndefinedWhenNotOrthogonal) {
    const auto e = mv_chain(3);
    const std::vector<AtomMultiple> parts{{id(e, "a"), 2}, {id(e, "a"), 2}};
    EXPECT_FALSE(family_sum(e, parts));
}

TEST(Split, SeparatesFullMultiples) {
    const Analysis an(product_2_c2());
    const auto& e = an.algebra();
    const auto split = split_atomic_decomposition(an, atomic_decomposition(an, id(e, "(1,c)")));
    ASSERT_EQ(split.full.parts.size(), 1u);
    EXPECT_EQ(split.full.parts[0].atom, id(e, "(1,0)"));
    ASSERT_EQ(split.partial.parts.size(), 1u);
    EXPECT_EQ(split.partial.parts[0].atom, id(e, "(0,c)"));
    EXPECT_EQ(split.full_sum, id(e, "(1,0)"));
    EXPECT_EQ(split.partial_sum, id(e, "(0,c)"));
}

TEST(Split, RejectsMalformedFamilies) {
    const Analysis an(mv_chain(3));
    const auto& e = an.algebra();
    const auto a = id(e, "a");
    EXPECT_THROW(split_atomic_decomposition(an, {{{id(e, "2a"), 1}}}), InvalidDecomposition);
    EXPECT_THROW(split_atomic_decomposition(an, {{{a, 1}, {a, 1}}}), InvalidDecomposition);
    EXPECT_THROW(split_atomic_decomposition(an, {{{a, 4}}}), InvalidDecomposition);
    EXPECT_THROW(split_atomic_decomposition(an, {{{a, 0}}}), InvalidDecomposition);

    const Analysis hs(load_eaf(testing::read_text(testing::data_path("hsum-c2-c3.eaf"))));
    const auto& h = hs.algebra();
    EXPECT_THROW(split_atomic_decomposition(hs, {{{id(h, "a"), 1}, {id(h, "b"), 1}}}), InvalidDecomposition);
}

TEST(Basic, ProductElement) {
    const Analysis an(product_2_c2());
    const auto& e = an.algebra();
    const auto d = basic_decomposition(an, id(e, "(1,c)"));
    EXPECT_EQ(d.sharp_part, id(e, "(1,0)"));
    ASSERT_EQ(d.meager_parts.parts.size(), 1u);
    EXPECT_EQ(d.meager_parts.parts[0].atom, id(e, "(0,c)"));
    EXPECT_EQ(d.meager_parts.parts[0].multiplicity, 1u);
}

TEST(Basic, SharpElementHasNoMeagerPart) {
    const Analysis an(boolean_algebra(2));
    for (auto x : an.algebra().elements()) {
        const auto d = basic_decomposition(an, x);
        EXPECT_EQ(d.sharp_part, x);
        EXPECT_TRUE(d.meager_parts.parts.empty());
    }
}

TEST(Basic, RequiresLattice) {
    const Analysis an(fixture("coinciding-multiples"));
    EXPECT_THROW(basic_decomposition(an, an.algebra().one()), PreconditionFailed);
}

// Property: on lattices in the corpus the basic decomposition is the single
// decomposition found by brute force.
TEST(Properties, BasicDecompositionMatchesOracle) {
    for (const auto& entry : testing::generated_corpus()) {
        const Analysis an(entry.algebra);
        if (!an.is_lattice()) continue;
        const auto& e = an.algebra();
        for (auto x : e.elements()) {
            const auto all = testing::enumerate_decompositions(e, x);
            ASSERT_EQ(all.size(), 1u) << entry.label << " " << e.name(x);
            const auto d = basic_decomposition(an, x);
            EXPECT_EQ(d.sharp_part, all[0].sharp_part) << entry.label;
            std::vector<std::pair<ElementId, std::size_t>> parts;
            for (const auto& p : d.meager_parts.parts) parts.emplace_back(p.atom, p.multiplicity);
            std::sort(parts.begin(), parts.end());
            EXPECT_EQ(parts, all[0].parts) << entry.label << " " << e.name(x);
        }
    }
}

// Property: the greedy decomposition sums back to x, with distinct atoms.
TEST(Properties, GreedyDecompositionSumsBack) {
    for (const auto& entry : testing::generated_corpus()) {
        const Analysis an(entry.algebra);
        const auto& e = an.algebra();
        for (auto x : e.elements()) {
            const auto d = atomic_decomposition(an, x);
            EXPECT_EQ(family_sum(e, d.parts), x) << entry.label;
            const auto split = split_atomic_decomposition(an, d);
            EXPECT_EQ(e.sum(split.full_sum, split.partial_sum), x) << entry.label;
        }
    }
}

}  // namespace
}  // namespace effalg
