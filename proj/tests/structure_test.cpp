#include <gtest/gtest.h>

#include "corpus.hpp"
#include "effalg/analysis.hpp"
#include "effalg/constructions.hpp"
#include "effalg/io.hpp"
#include "effalg/structure.hpp"

namespace effalg {
namespace {

ElementId id(const EffectAlgebra& e, std::string_view name) { return e.find(name).value(); }

std::vector<std::string> names_of(const EffectAlgebra& e, const std::vector<ElementId>& ids) {
    std::vector<std::string> out;
    for (auto x : ids) out.push_back(e.name(x));
    return out;
}

using Names = std::vector<std::string>;

EffectAlgebra product_2_c2() { return load_eaf(testing::read_text(testing::data_path("product-2-c2.eaf"))); }

TEST(Structure, ChainProfile) {
    const auto e = mv_chain(3);
    const Analysis an(e);
    const auto& p = an.profile();
    EXPECT_EQ(names_of(e, p.atoms), (Names{"a"}));
    EXPECT_EQ(names_of(e, p.sharp), (Names{"0", "1"}));
    EXPECT_EQ(names_of(e, p.meager), (Names{"0", "a", "2a"}));
    EXPECT_EQ(an.ord(id(e, "a")), 3u);
    EXPECT_EQ(an.ord(id(e, "2a")), 1u);
    EXPECT_EQ(an.ord(e.one()), 1u);
    EXPECT_TRUE(p.flags.atomic);
    EXPECT_TRUE(p.flags.archimedean);
    EXPECT_TRUE(p.flags.sharply_dominating);
    EXPECT_TRUE(p.flags.s_dominating);
}

TEST(Structure, ProductProfileAndSharpBounds) {
    const auto e = product_2_c2();
    const Analysis an(e);
    const auto& p = an.profile();
    EXPECT_EQ(names_of(e, p.atoms), (Names{"(0,c)", "(1,0)"}));
    EXPECT_EQ(names_of(e, p.sharp), (Names{"(0,0)", "(0,1)", "(1,0)", "(1,1)"}));
    EXPECT_EQ(names_of(e, p.meager), (Names{"(0,0)", "(0,c)"}));
    EXPECT_EQ(an.ord(id(e, "(0,c)")), 2u);
    EXPECT_EQ(an.ord(id(e, "(1,0)")), 1u);
    const auto bounds = sharp_bounds(e, id(e, "(1,c)"));
    EXPECT_EQ(bounds.cover, id(e, "(1,1)"));
    EXPECT_EQ(bounds.kernel, id(e, "(1,0)"));
    EXPECT_EQ(p.sharp_bounds[id(e, "(1,c)").index].kernel, bounds.kernel);
}

TEST(Structure, IsotropicIndexOfZeroThrows) {
    const auto e = mv_chain(2);
    EXPECT_THROW(isotropic_index(e, e.zero()), ZeroElement);
    EXPECT_EQ(isotropic_index(e, id(e, "a")), 2u);
}

TEST(Structure, CoincidingMultiplesFacts) {
    const auto e = fixture("coinciding-multiples");
    const Analysis an(e);
    const auto& p = an.profile();
    EXPECT_EQ(an.ord(id(e, "a")), 2u);
    EXPECT_EQ(an.ord(id(e, "b")), 3u);
    EXPECT_EQ(names_of(e, p.atoms), (Names{"a", "b"}));
    EXPECT_EQ(names_of(e, p.sharp), (Names{"0", "1"}));
    EXPECT_EQ(multiple(e, id(e, "a"), 2), multiple(e, id(e, "b"), 2));
    EXPECT_TRUE(p.flags.sharply_dominating);
    EXPECT_TRUE(p.flags.atomic);
}

TEST(Structure, StatelessFacts) {
    const auto e = fixture("stateless");
    const Analysis an(e);
    EXPECT_EQ(an.ord(id(e, "a")), 3u);
    EXPECT_EQ(an.ord(id(e, "b")), 4u);
    EXPECT_EQ(an.ord(id(e, "c")), 3u);
    EXPECT_EQ(names_of(e, an.profile().sharp), (Names{"0", "1"}));
    EXPECT_EQ(names_of(e, an.profile().atoms), (Names{"a", "b", "c"}));
    EXPECT_FALSE(an.is_lattice());
}

TEST(Structure, SharpSubalgebraOfProductIsBoolean) {
    const auto e = product_2_c2();
    const auto sub = sharp_subalgebra(e);
    ASSERT_EQ(sub.algebra.size(), 4u);
    EXPECT_EQ(sub.algebra.names(), (Names{"(0,0)", "(0,1)", "(1,0)", "(1,1)"}));
    EXPECT_EQ(sub.locate(id(e, "(1,0)")), ElementId{2});
    EXPECT_FALSE(sub.locate(id(e, "(1,c)")));
    EXPECT_EQ(sub.algebra.sum(ElementId{1}, ElementId{2}), ElementId{3});
}

TEST(Structure, ExtractSubalgebra) {
    const auto e = mv_chain(4);
    const auto sub = extract_subalgebra(e, {e.zero(), id(e, "2a"), e.one()});
    EXPECT_EQ(sub.algebra.size(), 3u);
    EXPECT_EQ(sub.algebra.sum(ElementId{1}, ElementId{1}), ElementId{2});

    const auto c3 = mv_chain(3);
    EXPECT_THROW(extract_subalgebra(c3, {c3.zero(), id(c3, "a"), c3.one()}), AxiomViolation);
}

TEST(Structure, AnalysisSharpPartIsCached) {
    const Analysis an(boolean_algebra(2));
    const auto* first = &an.sharp_part();
    EXPECT_EQ(first, &an.sharp_part());
    EXPECT_EQ(first->algebra.size(), 4u);
}

// Properties over the corpus: 0 and 1 are sharp, x sharp ⇔ x' sharp, sharp
// elements are exactly the elements with x ∧ x' = 0 on lattices, and every
// element is its own sharp cover and kernel when sharp.
TEST(Properties, SharpElements) {
    for (const auto& entry : testing::generated_corpus()) {
        const auto& e = entry.algebra;
        const Analysis an(e);
        const auto& p = an.profile();
        EXPECT_TRUE(p.is_sharp(e.zero()) && p.is_sharp(e.one())) << entry.label;
        for (auto x : e.elements()) {
            EXPECT_EQ(p.is_sharp(x), p.is_sharp(e.supplement(x))) << entry.label;
            if (an.is_lattice()) {
                EXPECT_EQ(p.is_sharp(x), an.order().meet(x, e.supplement(x)) == e.zero()) << entry.label;
            }
            if (p.is_sharp(x)) {
                EXPECT_EQ(p.sharp_bounds[x.index].cover, x) << entry.label;
                EXPECT_EQ(p.sharp_bounds[x.index].kernel, x) << entry.label;
            }
            if (x != e.zero()) {
                const auto n = p.ord[x.index];
                EXPECT_TRUE(multiple(e, x, n)) << entry.label;
                EXPECT_FALSE(multiple(e, x, n + 1)) << entry.label;
            }
        }
    }
}

// Property: atoms are minimal nonzero, and every element of a finite algebra
// lies above some atom.
TEST(Properties, AtomsAreMinimal) {
    for (const auto& entry : testing::generated_corpus()) {
        const auto& e = entry.algebra;
        const auto list = atoms(e);
        for (auto a : list) {
            for (auto x : e.elements()) {
                if (x != e.zero() && x != a) EXPECT_FALSE(e.leq(x, a)) << entry.label;
            }
        }
        EXPECT_TRUE(Analysis(e).profile().flags.atomic) << entry.label;
    }
}

}  // namespace
}  // namespace effalg
