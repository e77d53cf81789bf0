#include "ordgroups/free_word.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ordgroups {

namespace {

void check_letter(Letter const &l)
{
	if (l.sign != 1 && l.sign != -1)
		throw std::invalid_argument("letter sign must be +1 or -1");
	if (l.gen < 1)
		throw std::out_of_range("generator index " + std::to_string(l.gen) +
		                        " is not positive");
}

// Stack-based reduction; appends `l` to an already reduced sequence.
void push_reduced(std::vector<Letter> &out, Letter l)
{
	if (!out.empty() && out.back().cancels(l))
		out.pop_back();
	else
		out.push_back(l);
}

} // namespace

FreeWord FreeWord::reduce(std::span<Letter const> raw, int rank)
{
	for (auto const &l : raw)
	{
		check_letter(l);
		if (l.gen > rank)
			throw std::out_of_range("generator s" + std::to_string(l.gen) +
			                        " outside rank " + std::to_string(rank));
	}
	FreeWord w;
	w.letters_.reserve(raw.size());
	for (auto const &l : raw)
		push_reduced(w.letters_, l);
	return w;
}

FreeWord FreeWord::reduce(std::span<Letter const> raw)
{
	FreeWord w;
	w.letters_.reserve(raw.size());
	for (auto const &l : raw)
	{
		check_letter(l);
		push_reduced(w.letters_, l);
	}
	return w;
}

FreeWord FreeWord::generator(int gen, int sign)
{
	Letter l{gen, sign};
	return reduce(std::span<Letter const>(&l, 1));
}

int FreeWord::max_generator() const
{
	int m = 0;
	for (auto const &l : letters_)
		m = std::max(m, l.gen);
	return m;
}

FreeWord FreeWord::inverse() const
{
	FreeWord w;
	w.letters_.reserve(letters_.size());
	for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
		w.letters_.push_back(it->inverse());
	return w;
}

FreeWord operator*(FreeWord const &a, FreeWord const &b)
{
	FreeWord r = a;
	r *= b;
	return r;
}

FreeWord &FreeWord::operator*=(FreeWord const &b)
{
	letters_.reserve(letters_.size() + b.letters_.size());
	for (auto const &l : b.letters_)
		push_reduced(letters_, l);
	return *this;
}

FreeWord cyclically_reduce(FreeWord const &w)
{
	auto const &ls = w.letters();
	std::size_t lo = 0, hi = ls.size();
	while (hi - lo >= 2 && ls[lo].cancels(ls[hi - 1]))
	{
		++lo;
		--hi;
	}
	return FreeWord::reduce(std::span<Letter const>(ls.data() + lo, hi - lo));
}

long exponent_sum(FreeWord const &w, int gen)
{
	long s = 0;
	for (auto const &l : w.letters())
		if (l.gen == gen)
			s += l.sign;
	return s;
}

} // namespace ordgroups
