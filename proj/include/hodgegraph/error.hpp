#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hodgegraph {

enum class Errc {
  InvalidVertex,
  DuplicateEdge,
  SelfLoop,
  UnknownVertex,
  Disconnected,
  UnknownDirectedEdge,
  InvalidSubgraph,
  GraphMismatch,
  DimensionMismatch,
  NotMeanZero,
  MissingPole,
  InvalidWalk,
  NotATrail,
  CycleLimitExceeded,
  NotOrthonormal,
  RhsNotOrthogonal,
  SingularBeyondDeflation,
  CompositionNotZero,
  NonPositiveStep,
  MalformedInput,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hodgegraph
