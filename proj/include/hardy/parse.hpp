#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include "hardy/poly_hardy.hpp"
#include "hardy/real_matrix.hpp"

namespace hardy {

// Input that cannot be understood at all, as opposed to a DomainError raised
// by a well-formed value that violates a precondition. The CLI maps the two
// to different exit codes.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Complex literal "a+bi" with optional parts: "3", "4i", "i", "-i", "2-i",
// "1.5e-3+2e1i". Whitespace around the literal is ignored.
std::complex<double> parse_complex(const std::string& text);

// Comma-separated list of complex literals; at least one entry.
CoeffVec parse_coeff_list(const std::string& text);

// "inf" (any case) or a finite real; range checks are left to Exponent.
Exponent parse_exponent(const std::string& text);

// {"n": int, "rows": [[...], ...]}: n rows of n finite reals, row-major.
RealMatrix parse_matrix_json(const std::string& text);

// parse_matrix_json applied to the contents of a file.
RealMatrix load_matrix_file(const std::string& path);

}  // namespace hardy
