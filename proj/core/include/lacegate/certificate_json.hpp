#ifndef LACEGATE_CERTIFICATE_JSON_HPP
#define LACEGATE_CERTIFICATE_JSON_HPP

#include <string>
#include <string_view>
#include <vector>

#include <lacegate/rw_engine.hpp>
#include <lacegate/verifier.hpp>

namespace lacegate
{

// Rationals are written as {"num", "den", "decimal"} with decimal strings.
// Certified values carry exact_part, tail_part, value and the enclosure
// endpoints. Output is deterministic for identical inputs.
std::string certificate_to_json(const verify::certificate &cert, int indent = 2);

// Throws std::invalid_argument naming the first offending field when the text
// is not a "lace-cert/1" certificate or its verdict fields disagree.
void validate_certificate_json(std::string_view text);

std::string rw_table_to_json(const std::vector<rw::rw_quantities> &rows, int indent = 2);

std::string search_result_to_json(const verify::search_result &res, int indent = 2);

} // namespace lacegate

#endif
