#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "vperiod/finite_field.hpp"
#include "vperiod/numeric.hpp"

namespace vperiod {

// Laurent polynomial over F_q: terms are (exponent vector, nonzero
// coefficient encoding), exponent vectors pairwise distinct.
struct LaurentPoly {
    unsigned mvars = 0;
    std::vector<std::pair<std::vector<std::int64_t>, std::uint64_t>> terms;
};

struct LaurentParseError : std::runtime_error {
    LaurentParseError(std::size_t pos, const std::string& expected, const std::string& found)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": expected " +
                             expected + ", found " + found),
          position(pos),
          expected_token(expected) {}
    std::size_t position;
    std::string expected_token;
};

// Field-independent parse tree. Grammar (whitespace insensitive):
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := INT | 'g' ['^' sint] | 'x' INT ['^' sint]
//   sint   := ['-'] INT
// A term must contain at least one factor; integer coefficients map through
// Z -> F_p, 'g' is the field's primitive element.
struct ParsedTerm {
    Int int_coef = 1;
    std::int64_t g_power = 0;
    std::vector<std::pair<unsigned, std::int64_t>> var_powers;  // (1-based index, exponent)
};

struct ParsedLaurent {
    std::vector<ParsedTerm> terms;
    unsigned max_var = 0;
};

ParsedLaurent parse_laurent(const std::string& src);

// Resolve coefficients in F_q, combine duplicate exponent vectors, and drop
// zeros. mvars = 0 means "use the highest variable index seen".
LaurentPoly materialize(const ParsedLaurent& ast, const GaloisField& F, unsigned mvars = 0);

LaurentPoly parse_laurent_poly(const std::string& src, const GaloisField& F, unsigned mvars = 0);

}  // namespace vperiod
