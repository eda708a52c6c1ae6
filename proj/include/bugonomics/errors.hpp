#pragma once

#include <stdexcept>
#include <string>

namespace bugonomics {

// Error categories align with the CLI exit-code contract:
// io/parse problems exit 2, domain/computation problems exit 3.
// Fatal lint findings are data, not exceptions, and exit 1.

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid construction of a domain value (negative money, inverted
// interval, funnel counts out of order, ...).
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A well-formed computation with no defined answer (unit cost over an
// empty denominator, overflow, division by an interval containing zero).
struct computation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace bugonomics
