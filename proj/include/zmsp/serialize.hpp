#pragma once

// Machine-readable output: expansion export records, verification and
// conjecture reports.
//
// Integers that fit in a signed 64-bit value are written as JSON numbers;
// larger ones as strings of decimal digits.

#include <zmsp/bigint.hpp>
#include <zmsp/monomial_map.hpp>
#include <zmsp/verify.hpp>

#include "json.hpp"

#include <string>
#include <string_view>

namespace zmsp {

using Json = nlohmann::ordered_json;

enum class OutputFormat { kJson, kTsv, kPlain };

OutputFormat parse_format(std::string_view name);

Json to_json(const BigInt& value);

/// One record per term, sorted by partition (lexicographic on the
/// nondecreasing parts): JSON [{"lambda": "1,2,3", "coefficient": -3}, ...],
/// TSV "lambda<TAB>coefficient" with a header line, or plain polynomial text.
std::string export_expansion(const MonomialMap& expansion, OutputFormat format);

Json to_json(const VerificationReport& report, bool include_elapsed = true);
Json to_json(const ConjectureReport& report, bool include_elapsed = true);

std::string render(const VerificationReport& report, OutputFormat format,
                   bool include_elapsed = true);
std::string render(const ConjectureReport& report, OutputFormat format,
                   bool include_elapsed = true);

}  // namespace zmsp
