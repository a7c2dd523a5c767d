#ifndef MTC_ERRORS_HPP
#define MTC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mtc {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input documents: bad schema, unparseable fractions, missing fields.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Structurally inconsistent in-memory data: shape mismatches between
// labels, S and theta. Distinct from axiom failures, which are reported
// through Report and never thrown.
class StructureError : public Error {
public:
    explicit StructureError(const std::string& msg) : Error(msg) {}
};

// Mathematically inconsistent data discovered mid-computation: non-integral
// fusion coefficients, invertibles with reducible products, non-rational
// partition function entries, inconsistent epsilon forms.
class DataError : public Error {
public:
    explicit DataError(const std::string& msg) : Error(msg) {}
};

} // namespace mtc

#endif
