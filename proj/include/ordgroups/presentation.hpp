#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ordgroups/free_word.hpp"

namespace ordgroups {

/// Finite presentation <names | relators>. Relators are words over the
/// generator indices 1..names.size(), stored freely and cyclically reduced.
class Presentation
{
  public:
	Presentation() = default;
	Presentation(std::vector<std::string> names, std::vector<FreeWord> relators);

	std::vector<std::string> const &names() const { return names_; }
	std::vector<FreeWord> const &relators() const { return relators_; }
	int num_generators() const { return static_cast<int>(names_.size()); }
	int num_relators() const { return static_cast<int>(relators_.size()); }

	/// 1-based index of a generator name; throws std::invalid_argument.
	int generator_index(std::string_view name) const;

	/// Word over the generator names: "a2^-1 a1 a2 a1^-2".
	FreeWord parse_word(std::string_view text) const;
	std::string format_word(FreeWord const &w) const;

	Presentation with_relator(FreeWord r) const;

  private:
	std::vector<std::string> names_;
	std::vector<FreeWord> relators_;
};

/// Line format:
///   gens: a1 a2 a3 a4 b
///   rel: a2^-1 a1 a2 a1^-2
///   rel: a1^-1 b^2 a1 = b^3      (lhs = rhs means lhs rhs^-1)
/// Blank lines and '#' comments are ignored.
Presentation parse_presentation(std::string_view text);
std::string format_presentation(Presentation const &p);

/// Higman's group <a1..a4 | a_{i+1}^-1 a_i a_{i+1} = a_i^2 (cyclically)>.
Presentation higman_presentation();

/// Higman's group amalgamated with BS(2m, 2m+1) along a1 = t:
/// the Higman relators plus a1^-1 b^{2m} a1 = b^{2m+1}. m = 1 is the
/// balanced 5-generator example.
Presentation lemma41_presentation(int m = 1);

/// <b, t | t b^p t^-1 = b^q>.
Presentation bs_presentation(int p, int q);

/// Fixture name ("higman", "lemma41", "lemma41:m=3", "BS(2,3)") or a path
/// to a presentation file.
Presentation load_presentation(std::string_view fixture_or_path);

} // namespace ordgroups
