#include <thread>

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "ordgroups/errors.hpp"
#include "ordgroups/fiber.hpp"
#include "ordgroups/properties.hpp"
#include "ordgroups/random.hpp"
#include "ordgroups/rs_rewrite.hpp"

using namespace ordgroups;
using testing_helpers::fw;
using testing_helpers::kw;
using testing_helpers::mw;

TEST(FiberMake, Examples)
{
	auto G = zn_lex_oracle(2);
	EXPECT_NO_THROW(FiberElement::make({}, {}, G));
	for (int i = 1; i <= 2; ++i)
	{
		auto s = FreeWord::generator(i);
		EXPECT_NO_THROW(FiberElement::make(MixedWord::from_free(s), s, G));
		try
		{
			FiberElement::make(MixedWord::from_free(s), {}, G);
			FAIL() << "expected NotInFiber";
		}
		catch (NotInFiber const &e)
		{
			EXPECT_EQ(e.pi1, G->format(G->generator(i)));
			EXPECT_EQ(e.pi2, "0,0");
		}
	}
	EXPECT_THROW(FiberElement::make({}, fw("s3"), G), std::out_of_range);
}

TEST(FiberGroup, Laws)
{
	auto G = bs1m_oracle(-1);
	auto p = FiberElement::make(mw("s2 g{1;k=0} s1^-1 g{-1;k=0} s2", *G), fw("s2 s1^-1 s2", 2), G);
	auto q = FiberElement::compose(kw("x{1;k=1,2}^-1 x{0,1}", *G), fw("s1^2", 2), G);
	auto e = FiberElement::identity(G);
	EXPECT_EQ(fiber_mul(p, e), p);
	EXPECT_EQ(fiber_mul(e, p), p);
	EXPECT_EQ(fiber_inv(fiber_inv(p)), p);
	EXPECT_EQ(fiber_mul(p, fiber_inv(p)), e);
	EXPECT_EQ(fiber_mul(fiber_mul(p, q), p), fiber_mul(p, fiber_mul(q, p)));
}

TEST(Decompose, Examples)
{
	auto G = zn_lex_oracle(2);
	auto d = decompose(FiberElement::identity(G));
	EXPECT_TRUE(d.k.empty());
	EXPECT_TRUE(d.v.empty());
	for (int i = 1; i <= 2; ++i)
	{
		auto u = mixed_normalize({FreeWord::generator(i), G->generator(i, -1)}, *G);
		d = decompose(FiberElement::make(u, {}, G));
		EXPECT_EQ(d.k, KernelWord::letter(G->identity(), i));
		EXPECT_TRUE(d.v.empty());

		auto s = FreeWord::generator(i);
		d = decompose(FiberElement::make(MixedWord::from_free(s), s, G));
		EXPECT_TRUE(d.k.empty());
		EXPECT_EQ(d.v, s);
	}
}

TEST(Decompose, CachedAcrossThreads)
{
	auto G = bs1m_oracle(2);
	auto p = FiberElement::compose(kw("x{1/2;k=1,1} x{0;k=-1,2}^-1", *G), fw("s1 s2", 2), G);
	std::vector<FiberElement> copies(4, p);
	std::vector<Decomposition const *> seen(4);
	std::vector<std::thread> threads;
	for (int t = 0; t < 4; ++t)
		threads.emplace_back([&, t] { seen[t] = &copies[t].decomposition(); });
	for (auto &t : threads)
		t.join();
	for (auto const *d : seen)
		EXPECT_EQ(d, seen[0]);
	EXPECT_EQ(seen[0]->k, kw("x{1/2;k=1,1} x{0;k=-1,2}^-1", *G));
}

TEST(ActLetter, Examples)
{
	auto grp = bs1m_oracle(2);
	auto const &G = *grp;
	auto g = G.parse("1/2;k=1");
	auto x = KernelWord::letter(g, 2);
	for (int i = 1; i <= 2; ++i)
	{
		auto plus = KernelWord::letter(G.identity(), i) *
		            KernelWord::letter(G.mul(G.generator(i), g), 2) *
		            KernelWord::letter(G.identity(), i, -1);
		EXPECT_EQ(act_letter(i, 1, x, G), plus);

		auto si_inv = G.generator(i, -1);
		auto minus = KernelWord::letter(si_inv, i, -1) *
		             KernelWord::letter(G.mul(si_inv, g), 2) * KernelWord::letter(si_inv, i);
		EXPECT_EQ(act_letter(i, -1, x, G), minus);
		EXPECT_TRUE(act_letter(i, 1, {}, G).empty());
	}
	EXPECT_THROW(act_letter(1, 0, x, G), std::invalid_argument);
}

TEST(Act, Examples)
{
	auto grp = zn_lex_oracle(2);
	auto const &G = *grp;
	auto k = kw("x{1,2,1} x{0,-1,2}^-1", G);
	EXPECT_EQ(act({}, k, G), k);
	EXPECT_EQ(act(fw("s1") * fw("s1^-1"), k, G), k);
	EXPECT_EQ(act_letter(1, -1, act_letter(1, 1, k, G), G), k);
	EXPECT_EQ(act(fw("s1"), kw("x{0,0,1}", G), G), kw("x{0,0,1} x{1,0,1} x{0,0,1}^-1", G));
}

TEST(FiberCmp, Examples)
{
	auto G = zn_lex_oracle(2);
	auto e = FiberElement::identity(G);
	auto s1 = FreeWord::generator(1);
	auto p = FiberElement::make(MixedWord::from_free(s1), s1, G);
	auto r = fiber_compare(p, e);
	EXPECT_EQ(r.order, std::strong_ordering::greater);
	EXPECT_EQ(r.level, FiberComparison::Level::Quotient);

	auto q = FiberElement::make(mixed_normalize({s1, G->generator(1, -1)}, *G), {}, G);
	r = fiber_compare(q, e);
	EXPECT_EQ(r.order, std::strong_ordering::greater);
	EXPECT_EQ(r.level, FiberComparison::Level::Kernel);
	EXPECT_TRUE(fiber_is_positive(q));
	EXPECT_FALSE(fiber_is_positive(fiber_inv(q)));

	r = fiber_compare(p, p);
	EXPECT_EQ(r.order, std::strong_ordering::equal);
	EXPECT_STREQ(to_string(r.level), "equal");
	EXPECT_STREQ(to_string(FiberComparison::Level::Quotient), "quotient");
	EXPECT_STREQ(to_string(FiberComparison::Level::Kernel), "kernel");

	auto other = FiberElement::identity(zn_lex_oracle(2));
	EXPECT_THROW(fiber_cmp(e, other), std::invalid_argument);
}

TEST(Action, ClosedFormulasMatchConjugation)
{
	std::uint64_t seed = 500;
	for (auto spec : {"Z^2", "BS(1,2)", "BS(1,-1)", "F2"})
	{
		auto r = check_action_formulas(*make_group(spec), ++seed, 100, 4);
		EXPECT_TRUE(r.ok()) << format_report(r);
	}
	auto r = check_action_formulas(*make_group("Z^3"), 3, 50, 3, 3);
	EXPECT_TRUE(r.ok()) << format_report(r);
}

TEST(Action, Axioms)
{
	std::uint64_t seed = 600;
	for (auto spec : {"Z^2", "BS(1,2)", "BS(1,-1)"})
	{
		auto r = check_action_axioms(*make_group(spec), ++seed, 300, 3);
		EXPECT_TRUE(r.ok()) << format_report(r);
	}
}

TEST(Action, PreservesThePositiveCone)
{
	std::uint64_t seed = 700;
	for (auto spec : {"Z^2", "BS(1,2)", "BS(1,-1)", "F2"})
	{
		auto r = check_cone_invariance(*make_group(spec), ++seed, 300, 6, 4, 3);
		EXPECT_TRUE(r.ok()) << format_report(r);
	}
}

TEST(FiberCmp, BiOrder)
{
	std::uint64_t seed = 800;
	for (auto spec : {"Z^2", "BS(1,2)", "BS(1,-1)"})
	{
		auto r = check_fiber_biorder(make_group(spec), ++seed, 300);
		EXPECT_TRUE(r.ok()) << format_report(r);
	}
}

TEST(Decompose, InverseOfCompose)
{
	std::uint64_t seed = 900;
	for (auto spec : {"Z^2", "BS(1,2)", "BS(1,-1)"})
	{
		auto r = check_decompose_compose(make_group(spec), ++seed, 300);
		EXPECT_TRUE(r.ok()) << format_report(r);
	}
}
