#pragma once

#include <stdexcept>
#include <string>

namespace fds {

enum class Errc {
  Parse,
  Schema,
  DisconnectedGraph,
  SelfLoop,
  DuplicateEdge,
  EdgeNotShortest,
  NegativeLength,
  UnknownVertex,
  InvalidOffset,
  BadRoute,
  PositionNotOnRoute,
  NoStops,
  InfeasiblePlan,
  EdgeOnRoute,
  EdgeNotCandidate,
  NotAdjacent,
  UncoverableRoute,
  Infeasible,
  TooLarge,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace fds
