#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ordgroups/free_word.hpp"

namespace ordgroups {

/// One whitespace-separated token of the word grammar:
///   s3  s3^-2  x1^4  g{...}^2  x{...,2}^-1  1
struct WordToken {
	enum class Kind { Identity, Generator, GroupLiteral, KernelLiteral };
	Kind kind = Kind::Identity;
	char prefix = 's';  ///< 's' or 'x' for Generator
	int gen = 0;        ///< Generator only
	std::string body;   ///< text between the braces for literals
	long exponent = 1;
};

/// Splits on whitespace outside braces. Throws std::invalid_argument on
/// malformed tokens.
std::vector<WordToken> tokenize_word(std::string_view text);

/// Word in s1.. (or x1..) letters; "1" and "" denote the identity.
FreeWord parse_free_word(std::string_view text, int rank);

/// Runs of equal letters are written with exponents: "s1^2 s2^-1".
std::string format_free_word(FreeWord const &w, char prefix = 's');

/// "base", "base^e"; e != 0.
std::string format_power(std::string const &base, long e);

/// Splits a literal body at the last top-level comma: "1,2,3" -> {"1,2","3"}.
std::pair<std::string_view, std::string_view> split_last_comma(std::string_view body);

std::string_view trim(std::string_view s);

} // namespace ordgroups
