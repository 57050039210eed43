#pragma once

#include <string_view>

#include "chowsq/chow_model.hpp"
#include "chowsq/quadric.hpp"

namespace chowsq::cli {

// Grammar (whitespace insignificant):
//   cycle  := '0' | term ('+' term)*
//   term   := factor | factor 'x' factor
//   factor := letter <unsigned integer>
// Repeated terms cancel mod 2. Errors carry a 1-based column.

/// Factors h<j>, l<i>; no products.
QuadricF2Cycle parse_quadric_cycle(std::string_view text, const QuadricContext& ctx);

/// Terms h<j> x l<i> etc.; every term must be a product.
ProductF2Cycle parse_product_cycle(std::string_view text, const QuadricContext& ctx);

/// True if the expression uses the product separator.
bool is_product_expression(std::string_view text);

/// Tokens p<j> for [P^j] on pn_model(n), reduced mod 2.
ModTwoCycle parse_pn_cycle(std::string_view text, int n);

/// Tokens o<j> for [O_{P^j}]; repeated tokens add up over the integers.
K0Vector parse_pn_class(std::string_view text, const VarietyModel& model);

}  // namespace chowsq::cli
