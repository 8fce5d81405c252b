#ifndef WILDFIRE_ERRORS_HPP_
#define WILDFIRE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace wildfire {

// Invalid user-supplied configuration: degrees, meshes, parameters, CLI values.
class config_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed input file (fuel CSV, config file, snapshot).
class format_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands whose sizes do not conform.
class dimension_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Exactly zero pivot during banded LU factorization.
class factorization_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace wildfire

#endif  // WILDFIRE_ERRORS_HPP_
