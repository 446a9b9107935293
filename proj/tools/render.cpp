#include "render.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace wrd::cli {

namespace {

constexpr int kScale = 40;
constexpr int kMargin = 10;

// Board-agnostic description shared by both puzzles.
struct Board {
  int width = 0;
  int height = 0;
  std::function<bool(int x, int y)> hwall;  // segment below cell (x, y); y == height is the top edge
  std::function<bool(int x, int y)> vwall;  // segment left of cell (x, y); x == width is the right edge
  std::map<CellCoord, std::string> marks;   // text drawn inside a cell
  std::set<CellCoord> circled;
  std::vector<Path> paths;
};

std::string center_text(const std::string& text, std::size_t width) {
  if (text.size() >= width) return text;
  const std::size_t left = (width - text.size()) / 2;
  return std::string(left, ' ') + text + std::string(width - text.size() - left, ' ');
}

std::string ascii(const Board& b) {
  std::size_t w = 3;
  for (const auto& [cell, text] : b.marks) w = std::max(w, text.size());
  std::set<CellCoord> on_path;
  for (const Path& p : b.paths) on_path.insert(p.begin(), p.end());

  std::ostringstream os;
  for (int row = b.height; row >= 0; --row) {
    os << '+';
    for (int x = 0; x < b.width; ++x) os << (b.hwall(x, row) ? std::string(w, '-') : std::string(w, ' ')) << '+';
    os << '\n';
    if (row == 0) break;
    const int y = row - 1;
    for (int x = 0; x <= b.width; ++x) {
      os << (b.vwall(x, y) ? '|' : ' ');
      if (x == b.width) break;
      auto mark = b.marks.find({x, y});
      if (mark != b.marks.end()) {
        os << center_text(mark->second, w);
      } else if (on_path.contains({x, y})) {
        os << center_text("*", w);
      } else {
        os << std::string(w, ' ');
      }
    }
    os << '\n';
  }
  return os.str();
}

int px(int x) { return kMargin + x * kScale; }
int py(int y, int height) { return kMargin + (height - y) * kScale; }

std::string svg(const Board& b) {
  const int total_w = b.width * kScale + 2 * kMargin;
  const int total_h = b.height * kScale + 2 * kMargin;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total_w << "\" height=\"" << total_h
     << "\" viewBox=\"0 0 " << total_w << ' ' << total_h << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << total_w << "\" height=\"" << total_h << "\" fill=\"white\"/>\n";

  os << "<g stroke=\"#cccccc\" stroke-width=\"1\">\n";
  for (int x = 0; x <= b.width; ++x) {
    os << "<line x1=\"" << px(x) << "\" y1=\"" << py(0, b.height) << "\" x2=\"" << px(x) << "\" y2=\""
       << py(b.height, b.height) << "\"/>\n";
  }
  for (int y = 0; y <= b.height; ++y) {
    os << "<line x1=\"" << px(0) << "\" y1=\"" << py(y, b.height) << "\" x2=\"" << px(b.width) << "\" y2=\""
       << py(y, b.height) << "\"/>\n";
  }
  os << "</g>\n";

  os << "<g stroke=\"black\" stroke-width=\"4\" stroke-linecap=\"square\">\n";
  for (int y = 0; y <= b.height; ++y) {
    for (int x = 0; x < b.width; ++x) {
      if (!b.hwall(x, y)) continue;
      os << "<line x1=\"" << px(x) << "\" y1=\"" << py(y, b.height) << "\" x2=\"" << px(x + 1) << "\" y2=\""
         << py(y, b.height) << "\"/>\n";
    }
  }
  for (int x = 0; x <= b.width; ++x) {
    for (int y = 0; y < b.height; ++y) {
      if (!b.vwall(x, y)) continue;
      os << "<line x1=\"" << px(x) << "\" y1=\"" << py(y, b.height) << "\" x2=\"" << px(x) << "\" y2=\""
         << py(y + 1, b.height) << "\"/>\n";
    }
  }
  os << "</g>\n";

  const int half = kScale / 2;
  for (const Path& p : b.paths) {
    os << "<polyline fill=\"none\" stroke=\"red\" stroke-width=\"4\" points=\"";
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) os << ' ';
      os << px(p[i].x) + half << ',' << py(p[i].y + 1, b.height) + half;
    }
    os << "\"/>\n";
  }

  for (const auto& [cell, text] : b.marks) {
    const int cx = px(cell.x) + half;
    const int cy = py(cell.y + 1, b.height) + half;
    if (b.circled.contains(cell)) {
      os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << kScale * 3 / 8
         << "\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    if (!text.empty()) {
      os << "<text x=\"" << cx << "\" y=\"" << cy << "\" text-anchor=\"middle\" dominant-baseline=\"central\""
         << " font-family=\"sans-serif\" font-size=\"16\">" << text << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

Board wataridori_board(const WataridoriInstance& inst, const WataridoriSolution* sol, bool ascii_marks) {
  Board b;
  b.width = inst.width();
  b.height = inst.height();
  const RegionMap& r = inst.regions;
  b.hwall = [&r](int x, int y) { return y == 0 || y == r.height() || r.id(x, y - 1) != r.id(x, y); };
  b.vwall = [&r](int x, int y) { return x == 0 || x == r.width() || r.id(x - 1, y) != r.id(x, y); };
  for (const Circle& c : inst.circles) {
    const std::string number = c.number ? std::to_string(*c.number) : std::string();
    b.marks[c.cell] = ascii_marks ? "(" + (number.empty() ? std::string(" ") : number) + ")" : number;
    b.circled.insert(c.cell);
  }
  if (sol) b.paths = sol->paths;
  return b;
}

Board numberlink_board(const NumberlinkInstance& inst, const NumberlinkSolution* sol) {
  Board b;
  b.width = inst.width;
  b.height = inst.height;
  const int w = inst.width;
  const int h = inst.height;
  b.hwall = [h](int, int y) { return y == 0 || y == h; };
  b.vwall = [w](int x, int) { return x == 0 || x == w; };
  for (const Terminal& t : inst.terminals) {
    for (CellCoord c : t.cells) b.marks[c] = std::to_string(t.label);
  }
  if (sol) {
    for (const LabeledPath& p : sol->paths) b.paths.push_back(p.cells);
  }
  return b;
}

}  // namespace

std::string render_ascii(const WataridoriInstance& inst, const WataridoriSolution* sol) {
  return ascii(wataridori_board(inst, sol, true));
}

std::string render_ascii(const NumberlinkInstance& inst, const NumberlinkSolution* sol) {
  return ascii(numberlink_board(inst, sol));
}

std::string render_svg(const WataridoriInstance& inst, const WataridoriSolution* sol) {
  return svg(wataridori_board(inst, sol, false));
}

std::string render_svg(const NumberlinkInstance& inst, const NumberlinkSolution* sol) {
  return svg(numberlink_board(inst, sol));
}

}  // namespace wrd::cli
