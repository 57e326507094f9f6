#pragma once

#include <string>
#include <vector>

#include "circpoly/numeric.hpp"

namespace circpoly {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

// args exclude the program name; exit codes: 0 pass, 1 check failure, 2 input error
CliResult run_cli(const std::vector<std::string>& args);

// "re", "imi", or "re+imi"; parts are integers, fractions "p/q", finite
// decimals, or scientific floats (converted to the exact dyadic value)
GaussianRational parse_complex_literal(const std::string& s);

std::vector<Complex> parse_complex_list(const std::string& csv);

}  // namespace circpoly
