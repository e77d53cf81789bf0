#include "ordgroups/fiber.hpp"

#include <stdexcept>

#include "ordgroups/errors.hpp"
#include "ordgroups/magnus.hpp"
#include "ordgroups/rs_rewrite.hpp"

namespace ordgroups {

FiberElement::FiberElement(MixedWord u, FreeWord v, GroupPtr group)
    : group_(std::move(group)), u_(std::move(u)), v_(std::move(v)),
      cache_(std::make_shared<Cache>())
{}

FiberElement FiberElement::make(MixedWord u, FreeWord v, GroupPtr group)
{
	if (!group)
		throw std::invalid_argument("fiber element needs a group");
	if (v.max_generator() > group->rank())
		throw std::out_of_range("free coordinate outside rank " +
		                        std::to_string(group->rank()));
	Element a = pi1(u, *group);
	Element b = pi2(v, *group);
	if (!(a == b))
		throw NotInFiber(group->format(a), group->format(b));
	return FiberElement(std::move(u), std::move(v), std::move(group));
}

FiberElement FiberElement::identity(GroupPtr group)
{
	return FiberElement(MixedWord{}, FreeWord{}, std::move(group));
}

FiberElement FiberElement::compose(KernelWord const &k, FreeWord const &v, GroupPtr group)
{
	auto const &g = *group;
	MixedWord u = mixed_mul(substitute(k, g), MixedWord::from_free(v), g);
	return make(std::move(u), v, std::move(group));
}

Decomposition const &FiberElement::decomposition() const
{
	std::call_once(cache_->once, [this] {
		auto const &g = *group_;
		MixedWord kernel_part = mixed_mul(u_, MixedWord::from_free(v_.inverse()), g);
		cache_->value = Decomposition{tau(kernel_part, g), v_};
	});
	return *cache_->value;
}

Decomposition decompose(FiberElement const &p) { return p.decomposition(); }

namespace {

void require_same_group(FiberElement const &p, FiberElement const &q)
{
	if (p.group_ptr() != q.group_ptr())
		throw std::invalid_argument("fiber elements over different groups");
}

} // namespace

FiberElement fiber_mul(FiberElement const &p, FiberElement const &q)
{
	require_same_group(p, q);
	auto const &g = p.group();
	return FiberElement::make(mixed_mul(p.u(), q.u(), g), p.v() * q.v(), p.group_ptr());
}

FiberElement fiber_inv(FiberElement const &p)
{
	return FiberElement::make(mixed_inv(p.u(), p.group()), p.v().inverse(), p.group_ptr());
}

KernelWord act_letter(int i, int sign, KernelWord const &k, OrderedGroup const &group)
{
	if (sign != 1 && sign != -1)
		throw std::invalid_argument("act_letter: sign must be +1 or -1");
	Element shift = group.generator(i, sign);
	// conjugating letter: x_{1,i} for s_i, x_{s~_i^-1,i}^-1 for s_i^-1
	KernelLetter outer = sign > 0 ? KernelLetter{group.identity(), i, 1}
	                              : KernelLetter{shift, i, -1};
	KernelWord out;
	for (auto const &l : k.letters())
	{
		out *= outer;
		out *= KernelLetter{group.mul(shift, l.g), l.gen, l.sign};
		out *= outer.inverse();
	}
	return out;
}

KernelWord act(FreeWord const &w, KernelWord const &k, OrderedGroup const &group)
{
	KernelWord out = k;
	auto const &ls = w.letters();
	for (auto it = ls.rbegin(); it != ls.rend(); ++it)
		out = act_letter(it->gen, it->sign, out, group);
	return out;
}

char const *to_string(FiberComparison::Level level)
{
	switch (level)
	{
	case FiberComparison::Level::Quotient:
		return "quotient";
	case FiberComparison::Level::Kernel:
		return "kernel";
	case FiberComparison::Level::Equal:
		break;
	}
	return "equal";
}

FiberComparison fiber_compare(FiberElement const &p, FiberElement const &q)
{
	require_same_group(p, q);
	auto d = decompose(fiber_mul(fiber_inv(p), q));
	// p < q iff p^-1 q is positive
	if (!d.v.empty())
		return {is_positive(d.v) ? std::strong_ordering::less : std::strong_ordering::greater,
		        FiberComparison::Level::Quotient};
	if (!d.k.empty())
		return {is_positive(d.k, p.group()) ? std::strong_ordering::less
		                                    : std::strong_ordering::greater,
		        FiberComparison::Level::Kernel};
	return {};
}

bool fiber_is_positive(FiberElement const &p)
{
	return fiber_cmp(FiberElement::identity(p.group_ptr()), p) < 0;
}

} // namespace ordgroups
