#include "ygraph/error.hpp"

namespace ygraph {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::BadSize: return "BadSize";
        case ErrorKind::LoopEdge: return "LoopEdge";
        case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
        case ErrorKind::NonSquare: return "NonSquare";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::InexactDivision: return "InexactDivision";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::OutOfStatedRange: return "OutOfStatedRange";
        case ErrorKind::UnitCircleRoot: return "UnitCircleRoot";
        case ErrorKind::BadGcd: return "BadGcd";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
        case ErrorKind::Cancelled: return "Cancelled";
    }
    return "Unknown";
}

}  // namespace ygraph
