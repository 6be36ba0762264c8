#include "hodgegraph/error.hpp"

namespace hodgegraph {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidVertex: return "InvalidVertex";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::Disconnected: return "Disconnected";
    case Errc::UnknownDirectedEdge: return "UnknownDirectedEdge";
    case Errc::InvalidSubgraph: return "InvalidSubgraph";
    case Errc::GraphMismatch: return "GraphMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotMeanZero: return "NotMeanZero";
    case Errc::MissingPole: return "MissingPole";
    case Errc::InvalidWalk: return "InvalidWalk";
    case Errc::NotATrail: return "NotATrail";
    case Errc::CycleLimitExceeded: return "CycleLimitExceeded";
    case Errc::NotOrthonormal: return "NotOrthonormal";
    case Errc::RhsNotOrthogonal: return "RhsNotOrthogonal";
    case Errc::SingularBeyondDeflation: return "SingularBeyondDeflation";
    case Errc::CompositionNotZero: return "CompositionNotZero";
    case Errc::NonPositiveStep: return "NonPositiveStep";
    case Errc::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace hodgegraph
