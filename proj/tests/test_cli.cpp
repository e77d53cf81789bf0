#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"

namespace {

struct Result {
	int status;
	std::string out, err;
};

Result run(std::vector<std::string> args)
{
	std::ostringstream out, err;
	int status = ordgroups::cli::dispatch(args, out, err);
	return {status, out.str(), err.str()};
}

} // namespace

TEST(Cli, OrderCmp)
{
	auto r = run({"order", "cmp", "--group", "F2", "x1", "x2"});
	EXPECT_EQ(r.status, 0);
	EXPECT_EQ(r.out, "GREATER cap=2\n");
	r = run({"order", "cmp", "--group", "F2", "x1 x2", "x1 x2"});
	EXPECT_EQ(r.out, "EQUAL cap=0\n");
	r = run({"order", "cmp", "--group", "Z^2", "g{0,0}", "g{0,1}"});
	EXPECT_EQ(r.out, "LESS\n");
	r = run({"order", "cmp", "--group", "BS(1,-1)", "s2", "1"});
	EXPECT_EQ(r.out, "GREATER\n");
}

TEST(Cli, MagnusExpand)
{
	auto r = run({"magnus", "expand", "--deg", "2", "x1 x2 x1^-1 x2^-1"});
	EXPECT_EQ(r.status, 0);
	EXPECT_EQ(r.out, "series=1 + X1X2 - X2X1\ncoef[]=1\ncoef[X1X2]=1\ncoef[X2X1]=-1\n");
	r = run({"magnus", "expand", "--deg", "3", "--group", "BS(1,2)", "x{1/2;k=1,2}^-1"});
	EXPECT_EQ(r.out, "series=1 - X{1/2;k=1,2} + X{1/2;k=1,2}X{1/2;k=1,2} - "
	                 "X{1/2;k=1,2}X{1/2;k=1,2}X{1/2;k=1,2}\n"
	                 "coef[]=1\ncoef[X{1/2;k=1,2}]=-1\ncoef[X{1/2;k=1,2}X{1/2;k=1,2}]=1\n"
	                 "coef[X{1/2;k=1,2}X{1/2;k=1,2}X{1/2;k=1,2}]=-1\n");
	EXPECT_EQ(run({"magnus", "expand", "--deg", "0", "x1"}).status, 2);
}

TEST(Cli, RsRewrite)
{
	auto r = run({"rs", "rewrite", "--group", "Z^2", "s1 s2 g{-1,-1}"});
	EXPECT_EQ(r.status, 0);
	EXPECT_EQ(r.out, "x{0,0,1} x{1,0,2}\n");
	r = run({"rs", "rewrite", "--group", "Z^2", "g{1,0} s1 g{-1,0} g{-1,0} s2"});
	EXPECT_EQ(r.status, 1);
	EXPECT_EQ(r.out, "error=not_in_kernel residual=g{0,1}\n");
	r = run({"rs", "rewrite", "--group", "Z^2", "s3"});
	EXPECT_EQ(r.status, 2);
}

TEST(Cli, Fiber)
{
	auto r = run({"fiber", "make", "--group", "Z^2", "s1 g{-1,0}", "1"});
	EXPECT_EQ(r.status, 0);
	EXPECT_EQ(r.out, "u=s1 g{-1,0}\nv=1\nkernel=x{0,0,1}\n");

	r = run({"fiber", "make", "--group", "Z^2", "s1", "1"});
	EXPECT_EQ(r.status, 1);
	EXPECT_EQ(r.out, "error=not_in_fiber pi1=g{1,0} pi2=g{0,0}\n");

	r = run({"fiber", "mul", "--group", "Z^2", "s1", "s1", "s1 g{-1,0}", "1"});
	EXPECT_EQ(r.out, "u=s1^2 g{-1,0}\nv=s1\nkernel=x{0,0,1} x{1,0,1} x{0,0,1}^-1\n");

	r = run({"fiber", "cmp", "--group", "Z^2", "s1", "s1", "1", "1"});
	EXPECT_EQ(r.out, "order=GREATER level=quotient\n");
	r = run({"fiber", "cmp", "--group", "Z^2", "s1 g{-1,0}", "1", "1", "1"});
	EXPECT_EQ(r.out, "order=GREATER level=kernel\n");
	r = run({"fiber", "cmp", "--group", "Z^2", "s1", "s1", "s1", "s1"});
	EXPECT_EQ(r.out, "order=EQUAL level=equal\n");

	r = run({"fiber", "act", "--group", "Z^2", "s1", "x{0,0,1}"});
	EXPECT_EQ(r.out, "x{0,0,1} x{1,0,1} x{0,0,1}^-1\n");
}

TEST(Cli, Quotients)
{
	auto r = run({"quotients", "count", "--target", "S3", "BS(1,2)"});
	EXPECT_EQ(r.status, 0);
	EXPECT_EQ(r.out.rfind("target=S3 total=12 nontrivial=11 ", 0), 0u) << r.out;

	r = run({"quotients", "trivial-upto", "--K", "4", "higman"});
	EXPECT_EQ(r.status, 0);
	EXPECT_NE(r.out.find("target=S4 total=1 nontrivial=0"), std::string::npos);
	EXPECT_NE(r.out.find("K=4 trivial=true\n"), std::string::npos);

	r = run({"quotients", "count", "--target", "S5", "--max-nodes", "10", "higman"});
	EXPECT_EQ(r.status, 3);
	EXPECT_EQ(r.out.rfind("error=budget_exhausted", 0), 0u);

	EXPECT_EQ(run({"quotients", "count", "--target", "S9", "higman"}).status, 2);
	EXPECT_EQ(run({"quotients", "count", "no-such-file"}).status, 2);
}

TEST(Cli, Abelianize)
{
	auto r = run({"abelianize", "lemma41"});
	EXPECT_EQ(r.status, 0);
	EXPECT_EQ(r.out, "invariant_factors= free_rank=0 balanced=true\n");
	EXPECT_EQ(run({"abelianize", "BS(2,4)"}).out, "invariant_factors=2 free_rank=1 balanced=false\n");
}

TEST(Cli, GenTorsion)
{
	auto r = run({"gentorsion", "verify", "--group", "BS(1,-1)", "s1", "1", "s2"});
	EXPECT_EQ(r.status, 0);
	EXPECT_EQ(r.out, "valid=true\n");
	r = run({"gentorsion", "verify", "--group", "BS(1,2)", "s1", "1", "s2"});
	EXPECT_EQ(r.out, "valid=false\n");

	r = run({"gentorsion", "search", "--group", "BS(1,-1)", "--max-k", "2", "--radius", "1", "s1"});
	EXPECT_EQ(r.out, "found=true k=2 conjugators=g{0;k=0},g{0;k=1}\n");
	r = run({"gentorsion", "search", "--group", "BS(1,2)", "s1"});
	EXPECT_EQ(r.out, "found=false\n");

	r = run({"gentorsion", "verify", "--group", "lemma41", "b", "1", "a1"});
	EXPECT_EQ(r.status, 1);
	EXPECT_EQ(r.out, "error=word_problem_unavailable\n");
	EXPECT_EQ(run({"gentorsion", "search", "--group", "BS(1,-1)", "--max-k", "4", "s1"}).status, 2);
}

TEST(Cli, Selftest)
{
	auto a = run({"selftest", "--seed", "7", "--cases", "20"});
	auto b = run({"selftest", "--seed", "7", "--cases", "20"});
	EXPECT_EQ(a.status, 0) << a.out;
	EXPECT_EQ(a.out, b.out);
	EXPECT_EQ(a.out.find("FAIL"), std::string::npos);
	EXPECT_NE(a.out.find("seed=7 checks="), std::string::npos);
}

TEST(Cli, Usage)
{
	EXPECT_EQ(run({}).status, 2);
	EXPECT_EQ(run({"bogus"}).status, 2);
	EXPECT_EQ(run({"order"}).status, 2);
	EXPECT_EQ(run({"order", "cmp", "--group", "Z^2", "g{1,0}"}).status, 2);
	EXPECT_EQ(run({"order", "cmp", "--group", "Q", "1", "1"}).status, 2);
	EXPECT_EQ(run({"--help"}).status, 0);
}
