#pragma once

#include <stdexcept>
#include <string>

namespace graded {

/// Malformed input: bad ring description, non-monic modulus, inconsistent
/// grade assignment, unparseable problem document.
class spec_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Violated operation precondition: improper ideal where a proper one is
/// required, P meeting S, mismatched owning rings, S not inside R_e, ...
class precondition_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Carrier size above the supported enumeration cap.
class cap_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace graded
