#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chainwarn/chainring.hpp"
#include "chainwarn/mpoly.hpp"

namespace chainwarn {

/// Element literal: a bare integer ("7", "-3") or a coefficient vector
/// ("[3,1]" meaning 3 + x). Whitespace is ignored.
RingElement parse_element(const RingPtr& ring, const std::string& text);

/// Polynomial grammar: terms joined by '+' (or '-'), each term a product
/// of an optional coefficient literal and variables "t<k>" with optional
/// "^<e>", '*' separators optional. Variables are 1-based in the text.
///   examples: "t1+t2", "2*t1*t2 + 3", "[1,1]*t1^2 + [0,3]"
MPoly parse_poly(const RingPtr& ring, int nvars, const std::string& text);

std::vector<i64> parse_int_list(const std::string& text);  // "2,2,4"

/// Graph literal "1-2,2-3,3-3" (loops as "u-u").
std::vector<std::pair<int, int>> parse_edge_list(const std::string& text);

/// Hypergraph literal "1,2;2,3;4": sets separated by ';', members by ','.
std::vector<std::vector<int>> parse_set_family(const std::string& text);

}  // namespace chainwarn
