#include "wrd/verdict.hpp"

#include <sstream>

namespace wrd {

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::Accept: return "ACCEPT";
    case Rule::PathTooShort: return "PATH_TOO_SHORT";
    case Rule::OutOfBounds: return "OUT_OF_BOUNDS";
    case Rule::NotAdjacent: return "NOT_ADJACENT";
    case Rule::RepeatedCell: return "REPEATED_CELL";
    case Rule::UnknownLabel: return "UNKNOWN_LABEL";
    case Rule::DuplicateLabel: return "DUPLICATE_LABEL";
    case Rule::MissingPath: return "MISSING_PATH";
    case Rule::EndpointMismatch: return "ENDPOINT_MISMATCH";
    case Rule::TerminalCrossed: return "TERMINAL_CROSSED";
    case Rule::UncoveredCell: return "UNCOVERED_CELL";
    case Rule::CellShared: return "CELL_SHARED";
    case Rule::EndpointNotCircle: return "ENDPOINT_NOT_CIRCLE";
    case Rule::CircleReused: return "CIRCLE_REUSED";
    case Rule::UnpairedCircle: return "UNPAIRED_CIRCLE";
    case Rule::RegionReentered: return "REGION_REENTERED";
    case Rule::NumberMismatch: return "NUMBER_MISMATCH";
    case Rule::CountMismatch: return "COUNT_MISMATCH";
  }
  return "UNKNOWN";
}

std::string format_verdict(const Verdict& verdict) {
  if (verdict.accepted()) return "ACCEPT";
  std::ostringstream os;
  os << "REJECT " << to_string(verdict.rule) << " path=" << verdict.path_index << " cell=";
  if (verdict.cell) {
    os << verdict.cell->x << "," << verdict.cell->y;
  } else {
    os << "-";
  }
  return os.str();
}

}  // namespace wrd
