#pragma once

#include <compare>
#include <memory>
#include <mutex>
#include <optional>

#include "ordgroups/free_word.hpp"
#include "ordgroups/group.hpp"
#include "ordgroups/kernel_word.hpp"
#include "ordgroups/mixed_word.hpp"

namespace ordgroups {

/// p = (substitute(k) . v, v) in the splitting P = F_inf x| F_n.
struct Decomposition {
	KernelWord k;
	FreeWord v;
};

/// Element (u, v) of the fiber product P < (F_n * G) x F_n of pi1 and pi2,
/// i.e. pi1(u) = pi2(v).
class FiberElement
{
  public:
	/// Throws NotInFiber if pi1(u) != pi2(v).
	static FiberElement make(MixedWord u, FreeWord v, GroupPtr group);
	static FiberElement identity(GroupPtr group);
	static FiberElement compose(KernelWord const &k, FreeWord const &v, GroupPtr group);

	MixedWord const &u() const { return u_; }
	FreeWord const &v() const { return v_; }
	OrderedGroup const &group() const { return *group_; }
	GroupPtr const &group_ptr() const { return group_; }

	/// Computed once per element (shared by copies).
	Decomposition const &decomposition() const;

	friend bool operator==(FiberElement const &a, FiberElement const &b)
	{
		return a.group_ == b.group_ && a.u_ == b.u_ && a.v_ == b.v_;
	}

  private:
	struct Cache {
		std::once_flag once;
		std::optional<Decomposition> value;
	};

	FiberElement(MixedWord u, FreeWord v, GroupPtr group);

	GroupPtr group_;
	MixedWord u_;
	FreeWord v_;
	std::shared_ptr<Cache> cache_;
};

FiberElement fiber_mul(FiberElement const &p, FiberElement const &q);
FiberElement fiber_inv(FiberElement const &p);

/// k = tau(u . v^-1), v as is.
Decomposition decompose(FiberElement const &p);

/// s_i^sign . x_{g,j}^e:
///   sign +1:  x_{1,i} x_{s~_i g, j}^e x_{1,i}^-1
///   sign -1:  x_{s~_i^-1, i}^-1 x_{s~_i^-1 g, j}^e x_{s~_i^-1, i}
/// applied letterwise, then reduced.
KernelWord act_letter(int i, int sign, KernelWord const &k, OrderedGroup const &group);

/// Left action of F_n on ker(pi1) by conjugation; folds right to left so
/// act(w1 w2, k) = act(w1, act(w2, k)).
KernelWord act(FreeWord const &w, KernelWord const &k, OrderedGroup const &group);

struct FiberComparison {
	enum class Level { Equal, Quotient, Kernel };
	std::strong_ordering order = std::strong_ordering::equal;
	Level level = Level::Equal;
};

char const *to_string(FiberComparison::Level level);

/// p < q iff p^-1 q = (k, v) has v > 1 in the Magnus order on F_n, or
/// v = 1 and k > 1 in the G-indexed Magnus order on ker(pi1).
FiberComparison fiber_compare(FiberElement const &p, FiberElement const &q);

inline std::strong_ordering fiber_cmp(FiberElement const &p, FiberElement const &q)
{
	return fiber_compare(p, q).order;
}

bool fiber_is_positive(FiberElement const &p);

} // namespace ordgroups
