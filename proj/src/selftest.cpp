#include "ordgroups/selftest.hpp"

#include "ordgroups/gentorsion.hpp"
#include "ordgroups/hom_search.hpp"
#include "ordgroups/presentation.hpp"
#include "ordgroups/smith.hpp"

namespace ordgroups {

namespace {

// Counts assignments by trying all of them.
std::uint64_t brute_force_homs(Presentation const &pres, FiniteGroupTable const &target)
{
	std::vector<int> images(static_cast<std::size_t>(pres.num_generators()), 0);
	std::uint64_t total = 0;
	while (true)
	{
		bool ok = true;
		for (auto const &r : pres.relators())
			ok = ok && evaluate(r, images, target) == target.identity();
		total += ok;
		std::size_t pos = 0;
		while (pos < images.size() && ++images[pos] == target.order())
			images[pos++] = 0;
		if (pos == images.size())
			return total;
	}
}

PropertyReport fixed(std::string name, bool ok, std::string detail)
{
	PropertyReport r;
	r.name = std::move(name);
	r.cases = 1;
	r.violations = ok ? 0 : 1;
	if (!ok)
		r.first_violation = std::move(detail);
	return r;
}

} // namespace

std::vector<PropertyReport> run_selftest(std::uint64_t seed, SelftestScale scale)
{
	int const n = scale.cases;
	std::vector<PropertyReport> out;
	// Each check gets its own derived seed.
	std::uint64_t s = seed;
	auto next_seed = [&s] { return s = s * 6364136223846793005ULL + 1442695040888963407ULL; };

	out.push_back(check_free_reduction(next_seed(), n));
	out.push_back(check_magnus_biorder(3, next_seed(), n, 8));
	out.push_back(check_magnus_homomorphism(3, next_seed(), n, 1, 4));
	out.push_back(check_magnus_deepening(3, next_seed(), n));
	out.push_back(check_conjugate_positivity(2, next_seed(), n));

	for (auto spec : {"Z^2", "BS(1,2)", "BS(1,-1)", "F2"})
	{
		auto g = make_group(spec);
		out.push_back(check_oracle_axioms(*g, next_seed(), n));
		out.push_back(check_projections(*g, next_seed(), n));
	}
	for (auto spec : {"Z^2", "BS(1,2)", "BS(1,-1)"})
	{
		auto g = make_group(spec);
		out.push_back(check_tau_after_substitute(*g, next_seed(), n, 8, 4));
		out.push_back(check_substitute_after_tau(*g, next_seed(), n, 3));
		out.push_back(check_tau_homomorphism(*g, next_seed(), n, 3));
		out.push_back(check_action_formulas(*g, next_seed(), n / 4 + 1, 4));
		out.push_back(check_cone_invariance(*g, next_seed(), n, 6, 4, 3));
		out.push_back(check_action_axioms(*g, next_seed(), n, 3));
		out.push_back(check_fiber_biorder(g, next_seed(), n / 2 + 1));
		out.push_back(check_decompose_compose(g, next_seed(), n));
	}

	auto ab = abelianization(lemma41_presentation());
	out.push_back(fixed("abelianization lemma41", ab.trivial() && ab.balanced,
	                    format_abelianization(ab)));

	Presentation z2({"a", "b"}, {FreeWord::reduce(std::vector<Letter>{{1, 1}, {2, 1}, {1, -1}, {2, -1}})});
	auto s3 = FiniteGroupTable::symmetric(3);
	auto rep = enumerate_homs(z2, s3);
	auto brute = brute_force_homs(z2, s3);
	out.push_back(fixed("hom_count Z^2->S3", rep.total == 18 && brute == 18,
	                    "search=" + std::to_string(rep.total) + " brute=" + std::to_string(brute)));

	auto higman = enumerate_homs(higman_presentation(), s3);
	out.push_back(fixed("hom_count higman->S3", higman.total == 1,
	                    "total=" + std::to_string(higman.total)));

	auto bsm1 = bs1m_oracle(-1);
	auto b = bsm1->generator(1), t = bsm1->generator(2);
	bool verified = verify_certificate(*bsm1, {b, {bsm1->identity(), t}});
	auto found = search_certificate(*bsm1, b, 2, 1);
	auto bs2 = bs1m_oracle(2);
	auto none = search_certificate(*bs2, bs2->generator(1), 2, 1);
	out.push_back(fixed("generalized_torsion", verified && found && !none,
	                    std::string("verified=") + (verified ? "true" : "false") +
	                        " found=" + (found ? "true" : "false") +
	                        " bs12=" + (none ? "found" : "absent")));
	return out;
}

} // namespace ordgroups
