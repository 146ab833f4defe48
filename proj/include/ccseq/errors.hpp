#pragma once

#include <stdexcept>
#include <string>

namespace ccseq {

// Inputs whose shapes, moduli or domains do not line up.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Indices or shifts outside their admissible range.
class range_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Construction parameters that violate a construction's preconditions.
class parameter_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace ccseq
