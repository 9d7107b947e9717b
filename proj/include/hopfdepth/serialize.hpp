#pragma once

#include <string>
#include <string_view>

#include "hopfdepth/characters.hpp"
#include "hopfdepth/corpus.hpp"
#include "hopfdepth/cyclotomic.hpp"
#include "hopfdepth/depth.hpp"
#include "hopfdepth/hopf_algebra.hpp"

namespace hopfdepth {

// All writers emit two-space indented JSON with a fixed key order and a
// trailing newline, so equal inputs give byte-identical text.

/// {"order": n, "coeffs": ["num/den", ...]} in the minimal-conductor basis.
std::string scalar_to_json(const Cyclotomic& c);
/// Accepts any order and power-basis length; the result is canonical.
/// Throws ParseError.
Cyclotomic scalar_from_json(std::string_view text);

/// {"name", "dimension", "labels", "mult": [[i, j, k, c]], "comult": [[i, l, r, c]],
///  "counit": [c], "unit": [c], "antipode": [[i, j, c]]}, nonzero entries only.
std::string dump_algebra(const HopfAlgebra& h);
/// Rebuilds the structure constants without checking the Hopf axioms.
/// Throws ParseError on malformed input.
HopfAlgebraPtr load_algebra(std::string_view text);

/// {"algebra", "labels", "characters": [{"degree", "values"}]} in IrrSet order.
std::string dump_character_table(const IrrSet& irr);

std::string verdict_to_json(const Verdict& v);
std::string survey_to_json(const SurveyReport& report);

}  // namespace hopfdepth
