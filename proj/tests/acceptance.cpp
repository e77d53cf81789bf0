// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// gate fails. The S5 tier only ever warns.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "oracles.hpp"
#include "ordgroups/errors.hpp"
#include "ordgroups/gentorsion.hpp"
#include "ordgroups/hom_search.hpp"
#include "ordgroups/properties.hpp"
#include "ordgroups/smith.hpp"

using namespace ordgroups;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, std::string const &title, bool ok, std::string const &detail)
{
	std::printf("%s %2d %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
	std::fflush(stdout);
	failures += !ok;
}

std::string secs(double s)
{
	char buf[32];
	std::snprintf(buf, sizeof buf, "%.2fs", s);
	return buf;
}

// Runs property checks, ANDs their verdicts and joins their summaries.
struct Batch {
	bool ok = true;
	double seconds = 0;
	std::string detail;

	void add(PropertyReport const &r)
	{
		ok = ok && r.ok();
		seconds += r.seconds;
		if (!detail.empty())
			detail += "; ";
		detail += format_report(r);
	}
};

void magnus_biorder()
{
	auto r = check_magnus_biorder(3, 1001, 10000, 8);
	report(1, "Magnus bi-order on F3", r.ok() && r.seconds < 30,
	       format_report(r) + " time=" + secs(r.seconds) + " (limit 30s)");
}

void magnus_homomorphism()
{
	auto r = check_magnus_homomorphism(3, 1002, 1000, 2, 4);
	report(2, "Magnus expansion is a homomorphism", r.ok(), format_report(r));
}

void free_generation()
{
	Batch b;
	std::uint64_t seed = 1003;
	for (auto spec : {"Z^2", "BS(1,2)", "BS(1,-1)"})
	{
		auto g = make_group(spec);
		b.add(check_tau_after_substitute(*g, ++seed, 1000, 8, 4));
		b.add(check_substitute_after_tau(*g, ++seed, 1000, 4));
	}
	report(3, "kernel rewriting round trips", b.ok, b.detail);
}

void action_formulas()
{
	Batch b;
	std::uint64_t seed = 1010;
	for (auto spec : {"Z^2", "BS(1,2)", "BS(1,-1)"})
		b.add(check_action_formulas(*make_group(spec), ++seed, 200, 4, 2));
	report(4, "closed conjugation formulas", b.ok, b.detail);
}

void cone_invariance()
{
	Batch b;
	std::uint64_t seed = 1020;
	for (auto spec : {"Z^2", "BS(1,2)"})
		b.add(check_cone_invariance(*make_group(spec), ++seed, 2000, 6, 4, 4));
	report(5, "kernel cone invariant under F_n", b.ok && b.seconds < 60,
	       b.detail + " time=" + secs(b.seconds) + " (limit 60s)");
}

void fiber_biorder()
{
	auto r = check_fiber_biorder(make_group("Z^2"), 1030, 2000);
	report(6, "fiber product bi-order over Z^2", r.ok(), format_report(r));
}

void finite_quotients()
{
	bool ok = true;
	std::string detail;
	for (auto fixture : {"higman", "lemma41"})
	{
		auto pres = load_presentation(fixture);
		for (int k = 2; k <= 4; ++k)
		{
			auto target = FiniteGroupTable::symmetric(k);
			auto r = enumerate_homs(pres, target);
			bool good = r.total == 1 && r.nontrivial == 0 && r.seconds < 60;
			ok = ok && good;
			if (!detail.empty())
				detail += "; ";
			detail += std::string(fixture) + "->S" + std::to_string(k) + " total=" +
			          std::to_string(r.total) + " time=" + secs(r.seconds);
		}
	}
	report(7, "no nontrivial maps into S2..S4", ok, detail);

	// stretch tier
	SearchBudget budget;
	budget.max_time = std::chrono::minutes(10);
	try
	{
		auto r = enumerate_homs(higman_presentation(), FiniteGroupTable::symmetric(5), budget);
		std::printf("%s  7 stretch higman->S5: total=%llu nodes=%llu time=%s\n",
		            r.total == 1 ? "PASS" : "WARN", static_cast<unsigned long long>(r.total),
		            static_cast<unsigned long long>(r.nodes), secs(r.seconds).c_str());
	}
	catch (BudgetExhausted const &e)
	{
		std::printf("WARN  7 stretch higman->S5: %s\n", e.what());
	}
}

void homology()
{
	bool ok = true;
	std::string detail;
	auto base = abelianization(load_presentation("lemma41"));
	ok = base.trivial() && base.balanced;
	detail = "lemma41 " + format_abelianization(base);
	for (int m : {1, 2, 3})
	{
		auto r = abelianization(lemma41_presentation(m));
		ok = ok && r.trivial();
		detail += "; m=" + std::to_string(m) + " " + format_abelianization(r);
	}
	report(8, "trivial first homology", ok, detail);
}

void generalized_torsion()
{
	auto bsm = bs1m_oracle(-1);
	auto b = bsm->generator(1), t = bsm->generator(2);
	bool verified = verify_certificate(*bsm, {b, {bsm->identity(), t}});
	auto found = search_certificate(*bsm, b, 2, 1);
	bool found_expected = found && found->conjugators == std::vector<Element>{bsm->identity(), t};
	auto bs2 = bs1m_oracle(2);
	auto absent = search_certificate(*bs2, bs2->generator(1), 2, 1);
	report(9, "generalized torsion certificates", verified && found_expected && !absent,
	       std::string("BS(1,-1) verify=") + (verified ? "true" : "false") +
	           " search=" + (found_expected ? "(1,t)" : found ? "other" : "absent") +
	           "; BS(1,2) search=" + (absent ? "found" : "absent"));
}

void hom_count_oracle()
{
	auto z2 = parse_presentation("gens: a b\nrel: a b a^-1 b^-1\n");
	auto s3 = FiniteGroupTable::symmetric(3);
	auto engine = enumerate_homs(z2, s3).total;
	auto brute = oracle::brute_force_homs(z2, s3);
	report(10, "|Hom(Z^2, S3)| = 18", engine == 18 && brute == 18,
	       "engine=" + std::to_string(engine) + " brute_force=" + std::to_string(brute));
}

} // namespace

int main()
{
	std::vector<std::function<void()>> criteria{magnus_biorder,   magnus_homomorphism,
	                                            free_generation,  action_formulas,
	                                            cone_invariance,  fiber_biorder,
	                                            finite_quotients, homology,
	                                            generalized_torsion, hom_count_oracle};
	auto start = Clock::now();
	for (auto const &c : criteria)
	{
		try
		{
			c();
		}
		catch (std::exception const &e)
		{
			report(0, "exception", false, e.what());
		}
	}
	double total = std::chrono::duration<double>(Clock::now() - start).count();
	std::printf("acceptance: %d failed, total time %s\n", failures, secs(total).c_str());
	return failures ? 1 : 0;
}
