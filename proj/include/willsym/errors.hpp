#pragma once

#include <stdexcept>
#include <string>

namespace willsym {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Evaluation of a rational map at a zero of its denominator.
struct PoleError : Error {
    using Error::Error;
};

/// Arithmetic between scalars adjoining distinct radicands sqrt(d).
struct FieldMixError : Error {
    using Error::Error;
};

/// An exact-only operation was requested on floating-point data.
struct ApproxModeError : Error {
    using Error::Error;
};

/// Mismatched matrix dimensions or block splits.
struct SizeMismatchError : Error {
    using Error::Error;
};

/// Eigen-solver failed to converge or produced invalid residuals.
struct ConvergenceError : Error {
    using Error::Error;
};

/// W0(0) (or another required matrix) is singular.
struct SingularMatrixError : Error {
    using Error::Error;
};

/// Point excluded from a surface family's domain.
struct DomainError : Error {
    using Error::Error;
};

/// Light-cone vector with vanishing leading component cannot be projected.
struct ZeroLeadError : Error {
    using Error::Error;
};

/// Conformal factor below threshold; point treated as a branch point.
struct BranchPointError : Error {
    using Error::Error;
};

/// Integrand has no rational antiderivative (nonzero residue away from the
/// supported monomial-pole form).
struct NonrationalAntiderivativeError : Error {
    using Error::Error;
};

/// Adaptive quadrature failed to meet tolerance within the depth limit.
struct NonConvergenceError : Error {
    using Error::Error;
};

/// Unrecognized example family name.
struct UnknownExampleError : Error {
    using Error::Error;
};

/// Malformed input file; carries a 1-based line number.
struct ParseError : Error {
    int line;
    ParseError(const std::string& msg, int line_no)
        : Error("parse error at line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

/// g3 = -(f1 f4 + f2 f3) vanishes identically; the descent system degenerates.
struct DegenerateG3Error : Error {
    using Error::Error;
};

/// Computed appendix product deviates from its closed-form expansion.
struct MismatchError : Error {
    using Error::Error;
};

/// The two independent descent criteria disagree (implementation bug).
struct InconsistentTheoremError : Error {
    using Error::Error;
};

/// Symbolic computation exceeded the configured degree cap.
struct DegreeCapError : Error {
    using Error::Error;
};

/// File could not be read or written.
struct IoError : Error {
    using Error::Error;
};

}  // namespace willsym
