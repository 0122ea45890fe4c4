#ifndef BIGRADE_ERRORS_HPP
#define BIGRADE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bigrade {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Incompatible rings, zero polynomial where nonzero required, etc.
struct contract_error : error {
    using error::error;
};

// A theorem certified elsewhere failed on computed data. Always a bug
// or a genericity failure that slipped through; never absorbed.
struct contradiction_error : error {
    using error::error;
};

// The two-seed stability check for bigin failed; caller may retry.
struct genericity_error : error {
    using error::error;
};

struct parse_error : error {
    int line;
    int column;
    parse_error(const std::string& msg, int l, int c)
        : error(msg + " at line " + std::to_string(l) + ", column " + std::to_string(c)),
          line(l), column(c) {}
};

} // namespace bigrade

#endif
