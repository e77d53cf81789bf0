#include "ordgroups/properties.hpp"

#include <chrono>
#include <utility>

#include "ordgroups/fiber.hpp"
#include "ordgroups/magnus.hpp"
#include "ordgroups/random.hpp"
#include "ordgroups/rs_rewrite.hpp"
#include "ordgroups/text.hpp"

namespace ordgroups {

std::string format_report(PropertyReport const &r)
{
	std::string out = r.name + " cases=" + std::to_string(r.cases) +
	                  " violations=" + std::to_string(r.violations);
	if (!r.first_violation.empty())
		out += " first=" + r.first_violation;
	return out;
}

namespace {

using Clock = std::chrono::steady_clock;

class Run
{
  public:
	explicit Run(std::string name) : start_(Clock::now()) { report_.name = std::move(name); }

	void next_case() { ++report_.cases; }

	/// `describe` is only called for the first violation.
	template <class Describe>
	void expect(bool ok, Describe &&describe)
	{
		if (ok)
			return;
		if (report_.violations++ == 0)
			report_.first_violation = describe();
	}

	PropertyReport finish()
	{
		report_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
		return std::move(report_);
	}

  private:
	PropertyReport report_;
	Clock::time_point start_;
};

// x and y are the results of cmp(a,b) and cmp(b,a).
bool antisymmetric(std::strong_ordering x, std::strong_ordering y)
{
	return (x < 0) == (y > 0) && (x == 0) == (y == 0);
}

bool transitive(std::strong_ordering ab, std::strong_ordering bc, std::strong_ordering ac)
{
	if (ab < 0 && bc < 0)
		return ac < 0;
	if (ab > 0 && bc > 0)
		return ac > 0;
	return true;
}

std::string fw(FreeWord const &w) { return "'" + format_free_word(w) + "'"; }

std::string el(OrderedGroup const &g, Element const &e) { return "g{" + g.format(e) + "}"; }

std::string kw(OrderedGroup const &g, KernelWord const &k)
{
	return "'" + format_kernel_word(k, g) + "'";
}

std::string mw(OrderedGroup const &g, MixedWord const &u)
{
	return "'" + format_mixed_word(u, g) + "'";
}

KernelWord random_positive_kernel_word(Rng &rng, OrderedGroup const &group, int max_len,
                                       int radius)
{
	KernelWord k;
	while (k.empty())
		k = random_kernel_word(rng, group, max_len, radius);
	return is_positive(k, group) ? k : k.inverse();
}

FreeWord random_nonempty_free_word(Rng &rng, int rank, int max_len)
{
	FreeWord w;
	while (w.empty())
		w = random_free_word(rng, rank, max_len);
	return w;
}

} // namespace

PropertyReport check_free_reduction(std::uint64_t seed, int count)
{
	Run run("free_reduction");
	Rng rng(seed);
	constexpr int rank = 3;
	for (int n = 0; n < count; ++n)
	{
		run.next_case();
		int len = rng.between(0, 12);
		std::vector<Letter> raw;
		for (int i = 0; i < len; ++i)
		{
			int gen = rng.between(1, rank);
			raw.push_back({gen, rng.sign()});
		}
		auto w = FreeWord::reduce(raw, rank);
		run.expect(FreeWord::reduce(w.letters(), rank) == w, [&] { return "not idempotent " + fw(w); });
		run.expect(w.length() <= raw.size(), [&] { return "length grew " + fw(w); });
		bool reduced = true;
		for (std::size_t i = 1; i < w.length(); ++i)
			reduced = reduced && !w.letters()[i - 1].cancels(w.letters()[i]);
		run.expect(reduced, [&] { return "not reduced " + fw(w); });

		auto both = raw;
		for (auto it = raw.rbegin(); it != raw.rend(); ++it)
			both.push_back(it->inverse());
		run.expect(FreeWord::reduce(both, rank).empty(), [&] { return "w w^-1 != 1 for " + fw(w); });
	}
	return run.finish();
}

PropertyReport check_oracle_axioms(OrderedGroup const &group, std::uint64_t seed, int count)
{
	Run run("oracle_axioms " + group.spec());
	Rng rng(seed);
	auto const e = group.identity();
	for (int n = 0; n < count; ++n)
	{
		run.next_case();
		auto a = random_element(rng, group, 4);
		auto b = random_element(rng, group, 4);
		auto c = random_element(rng, group, 4);
		auto who = [&] { return el(group, a) + " " + el(group, b) + " " + el(group, c); };

		run.expect(group.mul(group.mul(a, b), c) == group.mul(a, group.mul(b, c)),
		           [&] { return "associativity " + who(); });
		run.expect(group.is_identity(group.mul(a, group.inv(a))) &&
		               group.is_identity(group.mul(group.inv(a), a)),
		           [&] { return "inverse " + who(); });
		run.expect(group.mul(a, e) == a && group.mul(e, a) == a, [&] { return "identity " + who(); });

		auto ab = group.cmp(a, b), ba = group.cmp(b, a);
		auto bc = group.cmp(b, c), ac = group.cmp(a, c);
		run.expect(antisymmetric(ab, ba) && (ab == 0) == (a == b),
		           [&] { return "trichotomy " + who(); });
		run.expect(transitive(ab, bc, ac), [&] { return "transitivity " + who(); });
		run.expect(group.cmp(group.mul(c, a), group.mul(c, b)) == ab,
		           [&] { return "left invariance " + who(); });

		run.expect(group.decode(group.key(a)) == a, [&] { return "key round trip " + who(); });
		run.expect((group.key(a) == group.key(b)) == (a == b), [&] { return "key equality " + who(); });
		run.expect(group.parse(group.format(a)) == a, [&] { return "literal round trip " + who(); });
	}
	return run.finish();
}

PropertyReport check_projections(OrderedGroup const &group, std::uint64_t seed, int count)
{
	Run run("projections " + group.spec());
	Rng rng(seed);
	for (int n = 0; n < count; ++n)
	{
		run.next_case();
		auto u = random_mixed_word(rng, group, 5, 3);
		auto v = random_mixed_word(rng, group, 5, 3);
		auto a = random_free_word(rng, group.rank(), 6);
		auto b = random_free_word(rng, group.rank(), 6);
		auto uv = mixed_mul(u, v, group);

		run.expect(uv.is_normal(group) && u.is_normal(group),
		           [&] { return "normal form " + mw(group, uv); });
		run.expect(pi1(uv, group) == group.mul(pi1(u, group), pi1(v, group)),
		           [&] { return "pi1 product " + mw(group, u) + " " + mw(group, v); });
		run.expect(pi2(a * b, group) == group.mul(pi2(a, group), pi2(b, group)),
		           [&] { return "pi2 product " + fw(a) + " " + fw(b); });
		run.expect(pi1(MixedWord::from_free(a), group) == pi2(a, group),
		           [&] { return "pi1 on F_n " + fw(a); });
		run.expect(mixed_mul(u, mixed_inv(u, group), group).empty(),
		           [&] { return "u u^-1 " + mw(group, u); });
	}
	return run.finish();
}

PropertyReport check_magnus_biorder(int rank, std::uint64_t seed, int count, int max_len)
{
	Run run("magnus_biorder F" + std::to_string(rank));
	Rng rng(seed);
	for (int n = 0; n < count; ++n)
	{
		run.next_case();
		auto a = random_free_word(rng, rank, max_len);
		auto b = random_free_word(rng, rank, max_len);
		auto c = random_free_word(rng, rank, max_len);
		auto w = random_free_word(rng, rank, max_len);
		auto who = [&] { return fw(a) + " " + fw(b) + " " + fw(c) + " w=" + fw(w); };

		auto ab = magnus_cmp(a, b), ba = magnus_cmp(b, a);
		auto bc = magnus_cmp(b, c), ac = magnus_cmp(a, c);
		run.expect(antisymmetric(ab, ba) && (ab == 0) == (a == b),
		           [&] { return "trichotomy " + who(); });
		run.expect(transitive(ab, bc, ac), [&] { return "transitivity " + who(); });
		run.expect(magnus_cmp(w * a, w * b) == ab, [&] { return "left invariance " + who(); });
		run.expect(magnus_cmp(a * w, b * w) == ab, [&] { return "right invariance " + who(); });
	}
	return run.finish();
}

PropertyReport check_magnus_homomorphism(int rank, std::uint64_t seed, int count, int min_cap,
                                         int max_cap)
{
	Run run("magnus_homomorphism F" + std::to_string(rank));
	Rng rng(seed);
	for (int n = 0; n < count; ++n)
	{
		auto u = random_free_word(rng, rank, 8);
		auto v = random_free_word(rng, rank, 8);
		for (int cap = min_cap; cap <= max_cap; ++cap)
		{
			run.next_case();
			run.expect(expand(u * v, cap) == expand(u, cap) * expand(v, cap), [&] {
				return "cap=" + std::to_string(cap) + " " + fw(u) + " " + fw(v);
			});
		}
	}
	return run.finish();
}

PropertyReport check_magnus_deepening(int rank, std::uint64_t seed, int count)
{
	Run run("magnus_deepening F" + std::to_string(rank));
	Rng rng(seed);
	for (int n = 0; n < count; ++n)
	{
		run.next_case();
		auto a = random_free_word(rng, rank, 8);
		auto b = random_free_word(rng, rank, 8);
		int cap = std::max<int>(1, static_cast<int>(a.length() + b.length()));
		run.expect(magnus_cmp(a, b) == magnus_cmp_at_cap(a, b, cap),
		           [&] { return fw(a) + " " + fw(b); });
	}
	return run.finish();
}

PropertyReport check_conjugate_positivity(int rank, std::uint64_t seed, int count)
{
	Run run("conjugate_positivity F" + std::to_string(rank));
	Rng rng(seed);
	for (int n = 0; n < count; ++n)
	{
		auto w = random_nonempty_free_word(rng, rank, 8);
		if (!is_positive(w))
			w = w.inverse();
		run.next_case();
		run.expect(is_positive(w) && !is_positive(w.inverse()), [&] { return "cone split " + fw(w); });
		for (int i = 1; i <= rank; ++i)
			for (int sign : {1, -1})
			{
				run.next_case();
				auto l = FreeWord::generator(i, sign);
				run.expect(is_positive(l * w * l.inverse()),
				           [&] { return fw(l) + " " + fw(w); });
			}
	}
	return run.finish();
}

PropertyReport check_tau_after_substitute(OrderedGroup const &group, std::uint64_t seed,
                                          int count, int max_len, int radius)
{
	Run run("tau_after_substitute " + group.spec());
	Rng rng(seed);
	for (int n = 0; n < count; ++n)
	{
		run.next_case();
		auto k = random_kernel_word(rng, group, max_len, radius);
		auto u = substitute(k, group);
		run.expect(group.is_identity(pi1(u, group)), [&] { return "pi1 != 1 " + kw(group, k); });
		run.expect(tau(u, group) == k, [&] { return kw(group, k); });
	}
	return run.finish();
}

PropertyReport check_substitute_after_tau(OrderedGroup const &group, std::uint64_t seed,
                                          int count, int radius)
{
	Run run("substitute_after_tau " + group.spec());
	Rng rng(seed);
	for (int n = 0; n < count; ++n)
	{
		run.next_case();
		int factors = rng.between(1, 4);
		auto w = random_kernel_mixed_word(rng, group, factors, radius);
		run.expect(substitute(tau(w, group), group) == w, [&] { return mw(group, w); });
	}
	return run.finish();
}

PropertyReport check_tau_homomorphism(OrderedGroup const &group, std::uint64_t seed, int count,
                                      int radius)
{
	Run run("tau_homomorphism " + group.spec());
	Rng rng(seed);
	for (int n = 0; n < count; ++n)
	{
		run.next_case();
		int f1 = rng.between(1, 3);
		auto w1 = random_kernel_mixed_word(rng, group, f1, radius);
		int f2 = rng.between(1, 3);
		auto w2 = random_kernel_mixed_word(rng, group, f2, radius);
		auto t = tau(mixed_mul(w1, w2, group), group);
		run.expect(t == tau(w1, group) * tau(w2, group),
		           [&] { return mw(group, w1) + " " + mw(group, w2); });
	}
	return run.finish();
}

PropertyReport check_action_formulas(OrderedGroup const &group, std::uint64_t seed, int count,
                                      int radius, int max_index)
{
	Run run("action_formulas " + group.spec());
	Rng rng(seed);
	max_index = std::min(max_index, group.rank());
	for (int n = 0; n < count; ++n)
	{
		auto g = random_element(rng, group, radius);
		for (int i = 1; i <= max_index; ++i)
			for (int j = 1; j <= max_index; ++j)
				for (int sign : {1, -1})
					for (int e : {1, -1})
					{
						run.next_case();
						auto x = KernelWord::letter(g, j, e);
						auto closed = act_letter(i, sign, x, group);
						auto s = MixedWord::from_free(FreeWord::generator(i, sign));
						auto conj = mixed_mul(mixed_mul(s, substitute(x, group), group),
						                      mixed_inv(s, group), group);
						run.expect(closed == tau(conj, group), [&] {
							return "i=" + std::to_string(i) + " sign=" + std::to_string(sign) +
							       " " + kw(group, x) + " closed=" + kw(group, closed) +
							       " rewritten=" + kw(group, tau(conj, group));
						});
					}
	}
	return run.finish();
}

PropertyReport check_cone_invariance(OrderedGroup const &group, std::uint64_t seed, int count,
                                     int k_len, int w_len, int radius)
{
	Run run("cone_invariance " + group.spec());
	Rng rng(seed);
	for (int n = 0; n < count; ++n)
	{
		run.next_case();
		auto k = random_positive_kernel_word(rng, group, k_len, radius);
		auto w = random_free_word(rng, group.rank(), w_len);
		run.expect(is_positive(act(w, k, group), group),
		           [&] { return "w=" + fw(w) + " k=" + kw(group, k); });
	}
	return run.finish();
}

PropertyReport check_action_axioms(OrderedGroup const &group, std::uint64_t seed, int count,
                                   int radius)
{
	Run run("action_axioms " + group.spec());
	Rng rng(seed);
	for (int n = 0; n < count; ++n)
	{
		run.next_case();
		auto k1 = random_kernel_word(rng, group, 5, radius);
		auto k2 = random_kernel_word(rng, group, 5, radius);
		auto w1 = random_free_word(rng, group.rank(), 4);
		auto w2 = random_free_word(rng, group.rank(), 4);
		int i = rng.between(1, group.rank());
		int sign = rng.sign();
		auto who = [&] {
			return "w1=" + fw(w1) + " w2=" + fw(w2) + " k1=" + kw(group, k1) + " k2=" + kw(group, k2);
		};

		run.expect(act(FreeWord{}, k1, group) == k1, [&] { return "identity " + who(); });
		run.expect(act(w1 * w2, k1, group) == act(w1, act(w2, k1, group), group),
		           [&] { return "composition " + who(); });
		run.expect(act_letter(i, sign, k1 * k2, group) ==
		               act_letter(i, sign, k1, group) * act_letter(i, sign, k2, group),
		           [&] { return "automorphism " + who(); });

		auto w = MixedWord::from_free(w1);
		auto conj = mixed_mul(mixed_mul(w, substitute(k1, group), group), mixed_inv(w, group), group);
		run.expect(act(w1, k1, group) == tau(conj, group), [&] { return "conjugation " + who(); });
	}
	return run.finish();
}

PropertyReport check_fiber_biorder(GroupPtr const &group, std::uint64_t seed, int count)
{
	Run run("fiber_biorder " + group->spec());
	Rng rng(seed);
	auto const &g = *group;
	auto fe = [&](FiberElement const &p) { return "(" + mw(g, p.u()) + "," + fw(p.v()) + ")"; };
	for (int n = 0; n < count; ++n)
	{
		run.next_case();
		auto p = random_fiber_element(rng, group, 3, 3, 2);
		auto q = random_fiber_element(rng, group, 3, 3, 2);
		auto r = random_fiber_element(rng, group, 3, 3, 2);
		auto who = [&] { return fe(p) + " " + fe(q) + " " + fe(r); };

		auto pq = fiber_cmp(p, q), qp = fiber_cmp(q, p);
		auto qr = fiber_cmp(q, r), pr = fiber_cmp(p, r);
		run.expect(antisymmetric(pq, qp) && (pq == 0) == (p == q),
		           [&] { return "trichotomy " + who(); });
		run.expect(transitive(pq, qr, pr), [&] { return "transitivity " + who(); });
		run.expect(fiber_cmp(fiber_mul(r, p), fiber_mul(r, q)) == pq,
		           [&] { return "left invariance " + who(); });
		run.expect(fiber_cmp(fiber_mul(p, r), fiber_mul(q, r)) == pq,
		           [&] { return "right invariance " + who(); });
	}
	return run.finish();
}

PropertyReport check_decompose_compose(GroupPtr const &group, std::uint64_t seed, int count)
{
	Run run("decompose_compose " + group->spec());
	Rng rng(seed);
	auto const &g = *group;
	for (int n = 0; n < count; ++n)
	{
		run.next_case();
		auto k = random_kernel_word(rng, g, 5, 3);
		auto v = random_free_word(rng, g.rank(), 4);
		auto p = FiberElement::compose(k, v, group);
		auto d = decompose(p);
		run.expect(d.k == k && d.v == v, [&] { return "decompose " + kw(g, k) + " " + fw(v); });

		auto u = random_mixed_word(rng, g, 4, 3);
		// any u pairs with a v of the same image only if one exists; build
		// (u', v) with u' = u . pi1(u)^-1 . v to land in the fiber
		auto v2 = random_free_word(rng, g.rank(), 4);
		auto fix = mixed_mul(MixedWord::from_element(g.inv(pi1(u, g)), g), MixedWord::from_free(v2), g);
		auto q = FiberElement::make(mixed_mul(u, fix, g), v2, group);
		auto dq = decompose(q);
		run.expect(FiberElement::compose(dq.k, dq.v, group) == q,
		           [&] { return "compose " + mw(g, q.u()) + " " + fw(q.v()); });
	}
	return run.finish();
}

} // namespace ordgroups
