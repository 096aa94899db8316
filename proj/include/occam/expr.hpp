#pragma once

#include <functional>
#include <string>

namespace occam {

// Tiny arithmetic-expression compiler for polynomial specs given on the
// command line, e.g. "2*s*(2*ceil(log2(s))+ceil(log2(n)))/n". Supported:
// numbers, variables n/s/g (g = gamma), + - * / ^, parentheses, and the
// functions log, log2, ceil, sqrt. Throws InputFormatError on bad syntax.
std::function<double(double n, double s, double gamma)> compile_expression(
    const std::string& text);

}  // namespace occam
