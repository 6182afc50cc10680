#pragma once

#include <string>

#include "burnside/series.hpp"
#include "burnside/subgroup_table.hpp"
#include "burnside/torus.hpp"

namespace burnside {

class Ctx;

// Text forms. The identity class prints as a bare integer; every other class
// prints as [label], so e.g. "L^2 - [o1_c0]L + [o1_c0] - 1".
std::string render_element_text(const BurnsideElement& x);
std::string render_lpolynomial_text(const LPolynomial& x);
// "[[2,0],[1,1]]" row-major.
std::string render_marks_text(const SubgroupTable& table);
// "classes: <k>" then one "label order=.. normalizer_order=.." row per class.
std::string render_subgroups_text(const SubgroupTable& table);

// JSON forms; schemas are documented in docs/formats.md.
std::string render_element_json(const BurnsideElement& x);
std::string render_lpolynomial_json(const LPolynomial& x);
std::string render_series_json(const Series& s);
std::string render_marks_json(const SubgroupTable& table);
std::string render_subgroups_json(const SubgroupTable& table);
std::string render_torus_report_json(const TorusClassReport& report,
                                     const LPolynomial* restricted = nullptr);

// Inverses of the JSON forms, for round-tripping.
BurnsideElement parse_element_json(const TablePtr& table, const std::string& text);
LPolynomial parse_lpolynomial_json(const TablePtr& table, const std::string& text);
Series parse_series_json(Ctx& ctx, const std::string& text);

// Reads {"degree": d, "generators": [[images...], ...]} and closes the
// generators into a group.
PermutationGroup parse_action_file(const std::string& path);

}  // namespace burnside
