#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

// An operator failed density-matrix validation: negative eigenvalue beyond
// tolerance, non-unit trace, or an unphysical coefficient triple.
class NotAStateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A matrix is structurally incompatible with the requested decomposition
// (e.g. carries Pauli components outside the Bell-diagonal family).
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The state is valid but outside the fast path's domain; the message names
// the general-purpose alternative.
class UnsupportedStateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qcorr
