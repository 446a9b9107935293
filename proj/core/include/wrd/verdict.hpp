#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "wrd/grid.hpp"

namespace wrd {

/// Rule codes reported by both verifiers. Accept is the only passing code.
enum class Rule {
  Accept,
  // structural, per path
  PathTooShort,
  OutOfBounds,
  NotAdjacent,
  RepeatedCell,
  // Numberlink
  UnknownLabel,
  DuplicateLabel,
  MissingPath,
  EndpointMismatch,
  TerminalCrossed,
  UncoveredCell,
  // shared
  CellShared,
  // Wataridori
  EndpointNotCircle,
  CircleReused,
  UnpairedCircle,
  RegionReentered,
  NumberMismatch,
  CountMismatch,
};

std::string_view to_string(Rule rule);

struct Verdict {
  Rule rule = Rule::Accept;
  int path_index = -1;
  std::optional<CellCoord> cell;
  std::string detail;

  bool accepted() const noexcept { return rule == Rule::Accept; }

  static Verdict accept() { return {}; }
  static Verdict reject(Rule rule, int path_index, std::optional<CellCoord> cell, std::string detail) {
    return {rule, path_index, cell, std::move(detail)};
  }
};

/// "ACCEPT", or "REJECT <RULE> path=<idx> cell=<x,y>" with -1 / "-" when a
/// rejection is not tied to a path or cell.
std::string format_verdict(const Verdict& verdict);

}  // namespace wrd
