#ifndef BIGRADE_PARSE_HPP
#define BIGRADE_PARSE_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "bigrade/ideal.hpp"

namespace bigrade {

// Infix expression over x0..x{nx-1}, y0..y{ny-1} with integer or
// rational coefficients and the operators + - * ^ and parentheses.
// The line number only feeds diagnostics.
Polynomial parse_polynomial(const std::string& text, const RingDescriptor& ring,
                            int line = 1);

// An ideal file:
//   ring x <nx> y <ny>
//   field qq | fp:<prime>      (optional)
//   gens
//   <one generator expression per line>
// Blank lines and #-comments are ignored everywhere.
struct IdealFile {
    Ideal ideal;
    std::optional<FieldSpec> field_directive;
};

// field_override wins over the file's field directive. Generators must
// be bihomogeneous unless allow_inhomogeneous is set.
IdealFile parse_ideal_stream(std::istream& in,
                             std::optional<FieldSpec> field_override = std::nullopt,
                             BlockOrder order = BlockOrder::XBlockLow,
                             bool allow_inhomogeneous = false);
IdealFile parse_ideal_file(const std::string& path,
                           std::optional<FieldSpec> field_override = std::nullopt,
                           BlockOrder order = BlockOrder::XBlockLow,
                           bool allow_inhomogeneous = false);

// Re-parsable rendering of an ideal in the file format above.
std::string print_ideal(const Ideal& I);

// "fp:<p>" or "qq", the CLI flag syntax.
FieldSpec parse_field_spec(const std::string& text);

} // namespace bigrade

#endif
