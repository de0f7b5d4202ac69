#pragma once

#include <stdexcept>
#include <string>

namespace cellatlas {

// Malformed input: bad partition, bad symbol rows, bad family data.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Two values from different ambient F2 spaces were combined.
class AmbientMismatchError : public std::runtime_error {
public:
    explicit AmbientMismatchError(const std::string& what) : std::runtime_error(what) {}
};

// The orbit partition is valid but not special.
class NotSpecialError : public std::runtime_error {
public:
    explicit NotSpecialError(const std::string& what) : std::runtime_error(what) {}
};

// Very even / degenerate type-D family: Abar is trivial and the report
// machinery does not apply.
class DegenerateFamilyError : public std::runtime_error {
public:
    explicit DegenerateFamilyError(const std::string& what) : std::runtime_error(what) {}
};

// Unknown exceptional orbit label.
class NotFoundError : public std::runtime_error {
public:
    explicit NotFoundError(const std::string& what) : std::runtime_error(what) {}
};

// A theorem-level identity failed while assembling a report. Always a bug.
class InternalInconsistencyError : public std::logic_error {
public:
    explicit InternalInconsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cellatlas
