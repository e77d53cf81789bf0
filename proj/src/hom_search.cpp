#include "ordgroups/hom_search.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ordgroups/errors.hpp"

namespace ordgroups {

int evaluate(FreeWord const &w, std::vector<int> const &images, FiniteGroupTable const &target)
{
	int r = target.identity();
	for (auto const &l : w.letters())
	{
		int x = images[l.gen - 1];
		r = target.mul(r, l.sign > 0 ? x : target.inv(x));
	}
	return r;
}

namespace {

using Clock = std::chrono::steady_clock;

struct PairConstraint {
	std::size_t partner_depth; ///< depth at which the partner is assigned
	bool partner_first;        ///< partner is the row index of `allowed`
	std::vector<char> const *allowed;
};

struct LongConstraint {
	FreeWord const *relator;
};

class HomSearch
{
  public:
	HomSearch(Presentation const &pres, FiniteGroupTable const &target, SearchBudget budget)
	    : pres_(pres), target_(target), budget_(budget), n_(target.order()),
	      gens_(pres.num_generators()), images_(gens_, target.identity())
	{
		plan();
	}

	HomSearchReport run()
	{
		start_ = Clock::now();
		report_.target = target_.name();
		if (!dead_)
			descend(0);
		report_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
		return report_;
	}

  private:
	void plan()
	{
		std::vector<std::set<int>> involved;
		std::vector<int> participation(gens_, 0);
		for (auto const &r : pres_.relators())
		{
			std::set<int> s;
			for (auto const &l : r.letters())
				s.insert(l.gen - 1);
			for (int g : s)
				++participation[g];
			involved.push_back(std::move(s));
		}

		order_.resize(gens_);
		for (int g = 0; g < gens_; ++g)
			order_[g] = g;
		std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
			return participation[a] > participation[b];
		});
		std::vector<std::size_t> depth_of(gens_);
		for (int d = 0; d < gens_; ++d)
			depth_of[order_[d]] = d;

		unary_.assign(gens_, std::vector<char>(n_, 1));
		pairs_.resize(gens_);
		longs_.resize(gens_);
		pair_tables_.reserve(pres_.relators().size());

		for (std::size_t ri = 0; ri < pres_.relators().size(); ++ri)
		{
			auto const &r = pres_.relators()[ri];
			auto const &s = involved[ri];
			if (s.empty())
				continue;
			std::vector<int> img(gens_, target_.identity());
			if (s.size() == 1)
			{
				int g = *s.begin();
				for (int x = 0; x < n_; ++x)
				{
					img[g] = x;
					if (evaluate(r, img, target_) != target_.identity())
						unary_[g][x] = 0;
				}
			}
			else if (s.size() == 2)
			{
				int a = *s.begin(), b = *s.rbegin();
				auto &table = pair_tables_.emplace_back(static_cast<std::size_t>(n_) * n_, 0);
				for (int x = 0; x < n_; ++x)
					for (int y = 0; y < n_; ++y)
					{
						img[a] = x;
						img[b] = y;
						table[static_cast<std::size_t>(x) * n_ + y] =
						    evaluate(r, img, target_) == target_.identity();
					}
				// attach to whichever end is assigned later
				if (depth_of[a] > depth_of[b])
					pairs_[depth_of[a]].push_back({depth_of[b], false, &table});
				else
					pairs_[depth_of[b]].push_back({depth_of[a], true, &table});
			}
			else
			{
				std::size_t last = 0;
				for (int g : s)
					last = std::max(last, depth_of[g]);
				longs_[last].push_back({&r});
			}
		}
		for (auto const &u : unary_)
			if (std::find(u.begin(), u.end(), 1) == u.end())
				dead_ = true;
	}

	void tick()
	{
		++report_.nodes;
		if (report_.nodes > budget_.max_nodes)
			throw BudgetExhausted(report_.nodes - 1, report_.total, "into " + target_.name());
		if (budget_.max_time.count() > 0 && (report_.nodes & 0xfff) == 0 &&
		    Clock::now() - start_ > budget_.max_time)
			throw BudgetExhausted(report_.nodes, report_.total,
			                      "into " + target_.name() + " (time limit)");
	}

	bool consistent(std::size_t depth, int x) const
	{
		if (!unary_[order_[depth]][x])
			return false;
		for (auto const &pc : pairs_[depth])
		{
			int y = images_[order_[pc.partner_depth]];
			std::size_t idx = pc.partner_first ? static_cast<std::size_t>(y) * n_ + x
			                                   : static_cast<std::size_t>(x) * n_ + y;
			if (!(*pc.allowed)[idx])
				return false;
		}
		return true;
	}

	void descend(std::size_t depth)
	{
		if (depth == static_cast<std::size_t>(gens_))
		{
			++report_.total;
			bool nontrivial = std::any_of(images_.begin(), images_.end(),
			                              [&](int x) { return x != target_.identity(); });
			if (nontrivial)
			{
				++report_.nontrivial;
				if (!report_.sample)
					report_.sample = images_;
			}
			return;
		}
		int g = order_[depth];
		for (int x = 0; x < n_; ++x)
		{
			images_[g] = x;
			if (!consistent(depth, x))
				continue;
			bool ok = true;
			for (auto const &lc : longs_[depth])
				if (evaluate(*lc.relator, images_, target_) != target_.identity())
				{
					ok = false;
					break;
				}
			if (!ok)
				continue;
			tick();
			descend(depth + 1);
		}
		images_[g] = target_.identity();
	}

	Presentation const &pres_;
	FiniteGroupTable const &target_;
	SearchBudget budget_;
	int n_;
	int gens_;
	std::vector<int> images_;
	std::vector<int> order_;
	std::vector<std::vector<char>> unary_;
	std::vector<std::vector<char>> pair_tables_;
	std::vector<std::vector<PairConstraint>> pairs_;
	std::vector<std::vector<LongConstraint>> longs_;
	bool dead_ = false;
	Clock::time_point start_;
	HomSearchReport report_;
};

} // namespace

HomSearchReport enumerate_homs(Presentation const &pres, FiniteGroupTable const &target,
                               SearchBudget budget)
{
	return HomSearch(pres, target, budget).run();
}

std::vector<HomSearchReport> symmetric_quotient_reports(Presentation const &pres, int K,
                                                        SearchBudget budget)
{
	if (K < 2)
		throw std::invalid_argument("trivial-upto requires K >= 2");
	std::vector<HomSearchReport> out;
	for (int k = 2; k <= K; ++k)
		out.push_back(enumerate_homs(pres, FiniteGroupTable::symmetric(k), budget));
	return out;
}

bool trivial_quotients_up_to(Presentation const &pres, int K, SearchBudget budget)
{
	for (auto const &r : symmetric_quotient_reports(pres, K, budget))
		if (r.nontrivial != 0)
			return false;
	return true;
}

} // namespace ordgroups
