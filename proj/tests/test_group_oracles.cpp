#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "ordgroups/properties.hpp"
#include "ordgroups/random.hpp"

using namespace ordgroups;
using testing_helpers::el;

TEST(ZnOracle, Examples)
{
	auto z2 = zn_lex_oracle(2);
	auto const &g = *z2;
	EXPECT_EQ(g.cmp(el("0,0", g), el("0,1", g)), std::strong_ordering::less);
	EXPECT_TRUE(g.is_identity(g.mul(el("1,2", g), el("-1,-2", g))));
	EXPECT_EQ(g.cmp(el("0,0", g), el("1,0", g)), std::strong_ordering::less);
	EXPECT_EQ(g.cmp(el("5,7", g), el("6,7", g)), std::strong_ordering::less);
	EXPECT_EQ(g.generators(), (std::vector<Element>{ZnElement{{1, 0}}, ZnElement{{0, 1}}}));
	EXPECT_EQ(g.format(el("-3,4", g)), "-3,4");
}

TEST(ZnOracle, KeysSortLikeTheOrder)
{
	auto z3 = zn_lex_oracle(3);
	Rng rng(8);
	for (int n = 0; n < 1000; ++n)
	{
		auto a = random_element(rng, *z3, 6);
		auto b = random_element(rng, *z3, 6);
		ASSERT_EQ(z3->key(a) <=> z3->key(b), z3->cmp(a, b));
	}
}

TEST(ZnOracle, Rejects)
{
	EXPECT_THROW(zn_lex_oracle(0), std::invalid_argument);
	auto z2 = zn_lex_oracle(2);
	EXPECT_THROW(z2->parse("1,2,3"), std::invalid_argument);
	EXPECT_THROW(z2->parse("1,x"), std::invalid_argument);
	EXPECT_THROW(z2->require(BSElement{1, 0}), std::invalid_argument);
}

TEST(BSOracle, Examples)
{
	auto bs2 = bs1m_oracle(2);
	auto const &g = *bs2;
	auto b = g.generator(1), t = g.generator(2);
	EXPECT_EQ(g.mul(t, b), (Element{BSElement{2, 1}}));
	EXPECT_EQ(g.mul(t, b), g.mul(g.mul(b, b), t));

	auto bsm = bs1m_oracle(-1);
	auto const &h = *bsm;
	auto tbt = h.mul(h.mul(h.generator(2), h.generator(1)), h.generator(2, -1));
	EXPECT_EQ(tbt, (Element{BSElement{-1, 0}}));
	EXPECT_EQ(tbt, h.inv(h.generator(1)));

	for (auto const *grp : {&g, &h})
		EXPECT_EQ(grp->cmp(grp->identity(), grp->parse("0;k=1")), std::strong_ordering::less);
}

TEST(BSOracle, Literals)
{
	auto g = bs1m_oracle(2);
	EXPECT_EQ(g->parse("3/4;k=-1"), (Element{BSElement{BigRational(3, 4), -1}}));
	EXPECT_EQ(g->parse("5"), (Element{BSElement{5, 0}}));
	EXPECT_EQ(g->format(g->parse("6/8;k=2")), "3/4;k=2");
	EXPECT_THROW(g->parse("1/3;k=0"), std::invalid_argument);
	EXPECT_THROW(g->parse("1/2;k="), std::invalid_argument);
	auto h = bs1m_oracle(-1);
	EXPECT_THROW(h->parse("1/2"), std::invalid_argument);
	EXPECT_EQ(h->parse("-7;k=3"), (Element{BSElement{-7, 3}}));
}

TEST(BSOracle, RejectsParameters)
{
	EXPECT_THROW(bs1m_oracle(0), std::invalid_argument);
	EXPECT_THROW(bs1m_oracle(1), std::invalid_argument);
	EXPECT_THROW(bs1m_oracle(-2), std::invalid_argument);
	EXPECT_NO_THROW(bs1m_oracle(3));
}

TEST(BSOracle, AgreesWithAffineMaps)
{
	Rng rng(21);
	for (int m : {2, 3, -1})
	{
		auto g = bs1m_oracle(m);
		for (int n = 0; n < 500; ++n)
		{
			auto w = random_free_word(rng, 2, 12);
			auto e = std::get<BSElement>(g->evaluate(w));
			auto ref = oracle::affine_word(w.letters(), m);
			ASSERT_EQ(e.a, ref.shift);
			ASSERT_EQ(e.k, ref.k);
		}
	}
}

TEST(BSOracle, ConeIsASemigroupSplittingTheGroup)
{
	Rng rng(4);
	for (int m : {2, -1})
	{
		auto g = bs1m_oracle(m);
		auto e = g->identity();
		auto positive = [&](Element const &x) { return g->cmp(e, x) < 0; };
		for (int n = 0; n < 1000; ++n)
		{
			auto a = random_element(rng, *g, 5);
			auto b = random_element(rng, *g, 5);
			if (positive(a) && positive(b))
				ASSERT_TRUE(positive(g->mul(a, b)));
			if (!g->is_identity(a))
				ASSERT_NE(positive(a), positive(g->inv(a)));
			else
				ASSERT_FALSE(positive(a));
		}
	}
}

TEST(FreeOracle, Examples)
{
	auto f2 = free_oracle(2);
	auto const &g = *f2;
	EXPECT_EQ(g.cmp(g.identity(), g.parse("x1")), std::strong_ordering::less);
	EXPECT_EQ(g.cmp(g.parse("x1^-1"), g.identity()), std::strong_ordering::less);
	EXPECT_EQ(g.cmp(g.parse("x1"), g.parse("x2")), std::strong_ordering::greater);
	EXPECT_EQ(g.format(g.parse("x1 x2^-1 x2 x2")), "x1 x2");
	EXPECT_EQ(g.format(g.identity()), "1");
}

TEST(MakeGroup, Specs)
{
	EXPECT_EQ(make_group("Z^2")->spec(), "Z^2");
	EXPECT_EQ(make_group("Z^3")->rank(), 3);
	EXPECT_EQ(make_group("BS(1,2)")->spec(), "BS(1,2)");
	EXPECT_EQ(make_group("BS(1,-1)")->spec(), "BS(1,-1)");
	EXPECT_EQ(make_group("F2")->rank(), 2);
	EXPECT_THROW(make_group("Z^0"), std::invalid_argument);
	EXPECT_THROW(make_group("BS(2,3)"), std::invalid_argument);
	EXPECT_THROW(make_group("F0"), std::invalid_argument);
	EXPECT_THROW(make_group("SL2"), std::invalid_argument);
}

TEST(Oracles, AxiomsAndLeftInvariance)
{
	std::uint64_t seed = 100;
	for (auto spec : {"Z^2", "Z^3", "BS(1,2)", "BS(1,3)", "BS(1,-1)", "F2"})
	{
		auto r = check_oracle_axioms(*make_group(spec), ++seed, 1000);
		EXPECT_TRUE(r.ok()) << format_report(r);
	}
}

TEST(Oracles, KeysRoundTrip)
{
	Rng rng(77);
	for (auto spec : {"Z^2", "BS(1,2)", "BS(1,-1)", "F2"})
	{
		auto g = make_group(spec);
		for (int n = 0; n < 300; ++n)
		{
			auto a = random_element(rng, *g, 8);
			ASSERT_EQ(g->decode(g->key(a)), a);
		}
		EXPECT_THROW(g->decode("\x01"), std::invalid_argument);
	}
}
