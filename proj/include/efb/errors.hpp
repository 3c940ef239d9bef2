#pragma once

#include <stdexcept>
#include <string>

namespace efb {

// Every error raised by the library carries a stable machine-readable code.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error("dimension_mismatch", what) {}
};

class FieldError : public Error {
public:
    explicit FieldError(const std::string& what) : Error("field_mismatch", what) {}
};

class RangeError : public Error {
public:
    explicit RangeError(const std::string& what) : Error("out_of_range", what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("malformed_input", what) {}
};

class ZeroSpinorError : public Error {
public:
    explicit ZeroSpinorError(const std::string& what) : Error("zero_spinor", what) {}
};

class NotTotallyNullError : public Error {
public:
    NotTotallyNullError(std::size_t i, std::size_t j)
        : Error("not_totally_null", "vectors " + std::to_string(i) + " and " +
                                        std::to_string(j) + " are not mutually null"),
          first(i), second(j) {}
    std::size_t first;
    std::size_t second;
};

class DependentVectorsError : public Error {
public:
    explicit DependentVectorsError(const std::string& what) : Error("dependent_vectors", what) {}
};

class SingularTransformError : public Error {
public:
    explicit SingularTransformError(const std::string& what) : Error("singular_transform", what) {}
};

class DivisionByZeroError : public Error {
public:
    explicit DivisionByZeroError(const std::string& what) : Error("division_by_zero", what) {}
};

// An identity that must hold by construction failed.
class InconsistencyError : public Error {
public:
    explicit InconsistencyError(const std::string& what) : Error("internal_inconsistency", what) {}
};

}  // namespace efb
