#pragma once

// Length-prefixed byte encodings shared by the group oracles.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ordgroups::detail {

inline void put_u32(std::string &out, std::uint32_t v)
{
	for (int s = 24; s >= 0; s -= 8)
		out.push_back(static_cast<char>((v >> s) & 0xff));
}

/// Big-endian with the sign bit flipped, so byte order equals numeric order.
inline void put_i64(std::string &out, std::int64_t v)
{
	auto u = static_cast<std::uint64_t>(v) ^ (std::uint64_t{1} << 63);
	for (int s = 56; s >= 0; s -= 8)
		out.push_back(static_cast<char>((u >> s) & 0xff));
}

inline void put_bytes(std::string &out, std::string_view b)
{
	put_u32(out, static_cast<std::uint32_t>(b.size()));
	out.append(b);
}

class KeyReader
{
  public:
	explicit KeyReader(std::string_view key) : rest_(key) {}

	std::uint32_t u32()
	{
		need(4);
		std::uint32_t v = 0;
		for (int i = 0; i < 4; ++i)
			v = (v << 8) | static_cast<unsigned char>(rest_[i]);
		rest_.remove_prefix(4);
		return v;
	}

	std::int64_t i64()
	{
		need(8);
		std::uint64_t u = 0;
		for (int i = 0; i < 8; ++i)
			u = (u << 8) | static_cast<unsigned char>(rest_[i]);
		rest_.remove_prefix(8);
		return static_cast<std::int64_t>(u ^ (std::uint64_t{1} << 63));
	}

	std::string_view bytes()
	{
		auto n = u32();
		need(n);
		auto b = rest_.substr(0, n);
		rest_.remove_prefix(n);
		return b;
	}

	unsigned char byte()
	{
		need(1);
		auto b = static_cast<unsigned char>(rest_[0]);
		rest_.remove_prefix(1);
		return b;
	}

	void finish() const
	{
		if (!rest_.empty())
			throw std::invalid_argument("trailing bytes in element key");
	}

  private:
	void need(std::size_t n) const
	{
		if (rest_.size() < n)
			throw std::invalid_argument("truncated element key");
	}
	std::string_view rest_;
};

} // namespace ordgroups::detail
