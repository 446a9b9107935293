#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wrd/grid.hpp"
#include "wrd/search.hpp"
#include "wrd/verdict.hpp"

namespace wrd {

/// One label and the cells carrying it. A well-formed instance has exactly
/// two cells per label and each label listed once; raw (unvalidated)
/// instances may violate that, which validate_instance reports.
struct Terminal {
  int label = 0;
  std::vector<CellCoord> cells;

  friend bool operator==(const Terminal&, const Terminal&) = default;
};

struct NumberlinkInstance {
  int width = 0;   // columns
  int height = 0;  // rows
  std::vector<Terminal> terminals;

  int pair_count() const noexcept { return static_cast<int>(terminals.size()); }

  friend bool operator==(const NumberlinkInstance&, const NumberlinkInstance&) = default;
};

struct LabeledPath {
  int label = 0;
  Path cells;

  friend bool operator==(const LabeledPath&, const LabeledPath&) = default;
};

struct NumberlinkSolution {
  std::vector<LabeledPath> paths;

  friend bool operator==(const NumberlinkSolution&, const NumberlinkSolution&) = default;
};

/// Structural checks plus normalization: entries sharing a label are merged,
/// and labels are renumbered 1..p in order of first appearance.
/// Throws Error with OutOfBounds, InvalidLabel, LabelMultiplicity,
/// DuplicateTerminal, NoLabels or InvalidArgument.
NumberlinkInstance validate_instance(const NumberlinkInstance& inst);

/// `inst` must be validated. With require_full_coverage unset (the default),
/// cells may stay empty.
Verdict verify_solution(const NumberlinkInstance& inst, const NumberlinkSolution& sol,
                        bool require_full_coverage = false);

/// Exact backtracking over labels 1..p in order, neighbours tried up, down,
/// left, right. Deterministic. Solves the non-covering variant.
SolveResult<NumberlinkSolution> solve(const NumberlinkInstance& inst,
                                      std::uint64_t budget = kDefaultBudget);

/// Paths sorted by label, each oriented so that the endpoint with the
/// smaller (y, x) comes first.
NumberlinkSolution normalize_direction(NumberlinkSolution sol);

/// Canonical documents. parse_* throws Error(ParseError / UnknownField /
/// MissingField) with a location; parse_numberlink_instance also validates.
NumberlinkInstance parse_numberlink_instance(std::string_view text);
NumberlinkSolution parse_numberlink_solution(std::string_view text);
std::string serialize(const NumberlinkInstance& inst);
std::string serialize(const NumberlinkSolution& sol);

}  // namespace wrd
