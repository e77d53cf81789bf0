#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "ordgroups/magnus.hpp"
#include "ordgroups/properties.hpp"
#include "ordgroups/random.hpp"

using namespace ordgroups;
using testing_helpers::fw;
using testing_helpers::kw;

namespace {

Series series(std::initializer_list<std::pair<Monomial, long>> terms, int cap)
{
	Series s(cap);
	for (auto const &[m, c] : terms)
		s.add_term(m, c);
	return s;
}

FreeWord commutator(FreeWord const &a, FreeWord const &b)
{
	return a * b * a.inverse() * b.inverse();
}

} // namespace

TEST(Expand, Examples)
{
	EXPECT_EQ(expand(FreeWord{}, 3), Series::constant(1, 3));
	EXPECT_EQ(expand(fw("x1"), 3), gen_series(1, 1, 3));
	EXPECT_EQ(expand(fw("x1 x2 x1^-1 x2^-1"), 2),
	          series({{{}, 1}, {{1, 2}, 1}, {{2, 1}, -1}}, 2));

	auto z2 = zn_lex_oracle(2);
	auto k = kw("x{3,1,1}", *z2);
	KernelWord const *ks[] = {&k};
	VariableRanking vars(*z2, ks);
	EXPECT_EQ(expand(k, vars, 3), gen_series(0, 1, 3));
}

TEST(Expand, MatchesNaiveProduct)
{
	Rng rng(41);
	for (int n = 0; n < 500; ++n)
	{
		auto w = random_free_word(rng, 3, 8);
		int cap = rng.between(1, 5);
		ASSERT_EQ(oracle::to_poly(expand(w, cap)), oracle::naive_expand(w.letters(), cap));
	}
}

TEST(Expand, Homomorphism)
{
	auto r = check_magnus_homomorphism(3, 9, 500, 1, 5);
	EXPECT_TRUE(r.ok()) << format_report(r);
}

TEST(MagnusCmp, Examples)
{
	auto bs = bs1m_oracle(2);
	for (auto lit : {"0;k=0", "3/4;k=-1", "-5;k=2"})
	{
		auto k = KernelWord::letter(bs->parse(lit), 1);
		EXPECT_EQ(magnus_cmp(k, KernelWord{}, *bs), std::strong_ordering::greater);
	}
	EXPECT_EQ(magnus_cmp(fw("x1^-1"), FreeWord{}), std::strong_ordering::less);
	auto r = magnus_compare(fw("x1"), fw("x2"));
	EXPECT_EQ(r.order, std::strong_ordering::greater);
	EXPECT_EQ(r.cap, 2);
	r = magnus_compare(fw("x1 x2"), fw("x1 x2"));
	EXPECT_EQ(r.order, std::strong_ordering::equal);
	EXPECT_EQ(r.cap, 0);
}

TEST(MagnusCmp, DeepensWhenLowDegreesAgree)
{
	auto c = commutator(commutator(fw("x1"), fw("x2")), fw("x1"));
	// first nonzero term of i(c) - 1 is in degree 3
	EXPECT_EQ(magnus_cmp_at_cap(c, FreeWord{}, 2), std::strong_ordering::equal);
	auto r = magnus_compare(c, FreeWord{});
	EXPECT_EQ(r.cap, 4);
	EXPECT_EQ(r.order, magnus_cmp_at_cap(c, FreeWord{}, 16));
	EXPECT_NE(r.order, std::strong_ordering::equal);
}

TEST(MagnusCmp, GIndexedVariablesFollowTheGroupOrder)
{
	auto z2 = zn_lex_oracle(2);
	auto const &g = *z2;
	auto lo = KernelWord::letter(g.parse("0,0"), 2);
	auto hi = KernelWord::letter(g.parse("1,0"), 1);
	EXPECT_TRUE(varkey_cmp(g, g.parse("0,0"), 2, g.parse("1,0"), 1) < 0);
	EXPECT_TRUE(varkey_cmp(g, g.parse("1,0"), 1, g.parse("1,0"), 2) < 0);
	// X_lo < X_hi, so i(lo) - i(hi) = X_lo - X_hi leads with +1
	EXPECT_EQ(magnus_cmp(lo, hi, g), std::strong_ordering::greater);

	KernelWord const *ks[] = {&hi, &lo};
	VariableRanking vars(g, ks);
	ASSERT_EQ(vars.size(), 2u);
	EXPECT_EQ(vars.rank_of(lo.letters()[0]), 0);
	EXPECT_EQ(vars.rank_of(hi.letters()[0]), 1);
	EXPECT_THROW(vars.rank_of(KernelLetter{g.parse("5,5"), 1, 1}), std::invalid_argument);
}

TEST(IsPositive, Examples)
{
	auto z2 = zn_lex_oracle(2);
	EXPECT_TRUE(is_positive(kw("x{0,1,1} x{2,0,2}", *z2), *z2));
	EXPECT_FALSE(is_positive(KernelWord{}, *z2));
	EXPECT_FALSE(is_positive(FreeWord{}));

	Rng rng(6);
	for (int n = 0; n < 500; ++n)
	{
		auto w = random_free_word(rng, 3, 8);
		if (w.empty())
			continue;
		ASSERT_NE(is_positive(w), is_positive(w.inverse()));
	}
}

TEST(MagnusOrder, BiOrder)
{
	auto r = check_magnus_biorder(3, 1, 2000, 8);
	EXPECT_TRUE(r.ok()) << format_report(r);
	r = check_magnus_biorder(2, 2, 1000, 10);
	EXPECT_TRUE(r.ok()) << format_report(r);
}

TEST(MagnusOrder, DeepeningMatchesSingleShot)
{
	auto r = check_magnus_deepening(3, 3, 1000);
	EXPECT_TRUE(r.ok()) << format_report(r);
}

TEST(MagnusOrder, ConjugatesOfPositivesArePositive)
{
	auto r = check_conjugate_positivity(3, 4, 500);
	EXPECT_TRUE(r.ok()) << format_report(r);
}

TEST(MagnusOrder, KernelWordsAreBiOrdered)
{
	// the G-indexed order restricted to random kernel words over BS(1,-1)
	auto g = bs1m_oracle(-1);
	Rng rng(12);
	for (int n = 0; n < 300; ++n)
	{
		auto a = random_kernel_word(rng, *g, 4, 2);
		auto b = random_kernel_word(rng, *g, 4, 2);
		auto w = random_kernel_word(rng, *g, 3, 2);
		auto ab = magnus_cmp(a, b, *g);
		ASSERT_EQ(ab == 0, a == b);
		ASSERT_EQ(magnus_cmp(w * a, w * b, *g), ab);
		ASSERT_EQ(magnus_cmp(a * w, b * w, *g), ab);
	}
}

TEST(MagnusOrder, CapLimit)
{
	EXPECT_EQ(magnus_cap_limit(3, 4), 16);
	EXPECT_EQ(magnus_cap_limit(0, 0), 2);
}
