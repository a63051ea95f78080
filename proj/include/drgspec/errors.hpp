#ifndef DRGSPEC_ERRORS_HPP
#define DRGSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace drgspec {

/// Malformed edge list or invalid generator parameters.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Structurally invalid graph (loop, out-of-range endpoint, disconnected).
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DisconnectedError : public GraphError {
public:
    using GraphError::GraphError;
};

/// The Jacobi sweep cap was hit before the off-diagonal mass vanished.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numerical result contradicts a theorem the pipeline relies on
/// (bound violated, d < D, vanishing q_i(0), oracle disagreement).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The predistance polynomials cannot be represented in double precision
/// for this spectrum (typically many distinct eigenvalues, d above 10, where
/// the monomial coefficients dwarf the values on the nodes).
class NumericalBreakdown : public InternalError {
public:
    using InternalError::InternalError;
};

} // namespace drgspec

#endif // DRGSPEC_ERRORS_HPP
