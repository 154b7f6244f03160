#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ygraph {

enum class ErrorKind {
    BadSize,
    LoopEdge,
    DisconnectedGraph,
    NonSquare,
    ZeroPolynomial,
    InexactDivision,
    NoConvergence,
    OutOfStatedRange,
    UnitCircleRoot,
    BadGcd,
    TooLarge,
    InternalInconsistency,
    Cancelled,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it onto an exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace ygraph
