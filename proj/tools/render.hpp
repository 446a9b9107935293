#pragma once

#include <string>

#include "wrd/numberlink.hpp"
#include "wrd/wataridori.hpp"

namespace wrd::cli {

// Text and SVG renderings. Both print the top row first; the documents keep
// y pointing up. A null solution renders the bare puzzle.

std::string render_ascii(const WataridoriInstance& inst, const WataridoriSolution* sol);
std::string render_ascii(const NumberlinkInstance& inst, const NumberlinkSolution* sol);
std::string render_svg(const WataridoriInstance& inst, const WataridoriSolution* sol);
std::string render_svg(const NumberlinkInstance& inst, const NumberlinkSolution* sol);

}  // namespace wrd::cli
