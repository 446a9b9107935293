#include "wrd/wataridori.hpp"

namespace wrd {

namespace {

class WataridoriSearch {
 public:
  WataridoriSearch(const WataridoriInstance& inst, std::uint64_t budget)
      : inst_(inst), width_(inst.width()), height_(inst.height()), budget_(budget),
        used_(cell_count(), false), circle_at_(cell_count(), -1), paired_(inst.circles.size(), false),
        region_seen_(static_cast<std::size_t>(inst.regions.region_count()), false) {
    for (std::size_t c = 0; c < inst.circles.size(); ++c) circle_at_[index(inst.circles[c].cell)] = static_cast<int>(c);
    for (int y = height_ - 1; y >= 0; --y) {
      for (int x = 0; x < width_; ++x) {
        if (circle_at_[index({x, y})] >= 0) scan_order_.push_back(circle_at_[index({x, y})]);
      }
    }
  }

  SolveResult<WataridoriSolution> run() {
    SolveResult<WataridoriSolution> result;
    const bool found = inst_.circles.size() % 2 == 0 && pair_next();
    result.nodes = nodes_;
    if (found) {
      result.status = SolveStatus::Solved;
      result.solution = WataridoriSolution{paths_};
    } else {
      result.status = aborted_ ? SolveStatus::BudgetExceeded : SolveStatus::Unsat;
    }
    return result;
  }

 private:
  std::size_t cell_count() const { return static_cast<std::size_t>(width_ * height_); }
  std::size_t index(CellCoord c) const { return static_cast<std::size_t>(c.y * width_ + c.x); }
  int region(CellCoord c) const { return inst_.regions.id(c); }

  bool pair_next() {
    int start = -1;
    for (int c : scan_order_) {
      if (!paired_[static_cast<std::size_t>(c)]) {
        start = c;
        break;
      }
    }
    if (start < 0) return true;

    const Circle& circle = inst_.circles[static_cast<std::size_t>(start)];
    paired_[static_cast<std::size_t>(start)] = true;
    used_[index(circle.cell)] = true;
    region_seen_[static_cast<std::size_t>(region(circle.cell))] = true;
    paths_.push_back({circle.cell});

    const bool found = extend(circle.number, 1);

    if (!found) {
      paths_.pop_back();
      region_seen_[static_cast<std::size_t>(region(circle.cell))] = false;
      used_[index(circle.cell)] = false;
      paired_[static_cast<std::size_t>(start)] = false;
    }
    return found;
  }

  bool extend(std::optional<int> target, int runs) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    const CellCoord head = paths_.back().back();
    if (!unpaired_circles_have_room(head)) return false;

    const int head_region = region(head);
    for (CellCoord next : orthogonal_neighbors(head, width_, height_)) {
      if (used_[index(next)]) continue;
      const int next_region = region(next);
      const bool new_region = next_region != head_region;
      if (new_region && region_seen_[static_cast<std::size_t>(next_region)]) continue;
      const int next_runs = runs + (new_region ? 1 : 0);
      if (target && next_runs > *target) continue;

      const int circle = circle_at_[index(next)];
      if (circle >= 0) {
        const auto& number = inst_.circles[static_cast<std::size_t>(circle)].number;
        if (target && number && *target != *number) continue;
        const auto need = target ? target : number;
        if (need && *need != next_runs) continue;
        if (close_on(next, circle, new_region)) return true;
      } else {
        if (advance_to(next, new_region, target, next_runs)) return true;
      }
      if (aborted_) return false;
    }
    return false;
  }

  bool close_on(CellCoord cell, int circle, bool new_region) {
    enter(cell, new_region);
    paired_[static_cast<std::size_t>(circle)] = true;
    // The finished path keeps its region marks only while it is the last
    // one; the next path starts a fresh set.
    std::vector<bool> saved(region_seen_.size(), false);
    saved.swap(region_seen_);
    const bool found = pair_next();
    if (found) return true;
    saved.swap(region_seen_);
    paired_[static_cast<std::size_t>(circle)] = false;
    leave(cell, new_region);
    return false;
  }

  bool advance_to(CellCoord cell, bool new_region, std::optional<int> target, int runs) {
    enter(cell, new_region);
    if (extend(target, runs)) return true;
    leave(cell, new_region);
    return false;
  }

  void enter(CellCoord cell, bool new_region) {
    used_[index(cell)] = true;
    if (new_region) region_seen_[static_cast<std::size_t>(region(cell))] = true;
    paths_.back().push_back(cell);
  }

  void leave(CellCoord cell, bool new_region) {
    paths_.back().pop_back();
    if (new_region) region_seen_[static_cast<std::size_t>(region(cell))] = false;
    used_[index(cell)] = false;
  }

  // Every unpaired circle needs an unused neighbour, or must sit next to the
  // head of the path being grown.
  bool unpaired_circles_have_room(CellCoord head) const {
    for (std::size_t c = 0; c < inst_.circles.size(); ++c) {
      if (paired_[c]) continue;
      bool room = false;
      for (CellCoord nb : orthogonal_neighbors(inst_.circles[c].cell, width_, height_)) {
        if (!used_[index(nb)] || nb == head) {
          room = true;
          break;
        }
      }
      if (!room) return false;
    }
    return true;
  }

  const WataridoriInstance& inst_;
  int width_;
  int height_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<bool> used_;
  std::vector<int> circle_at_;
  std::vector<bool> paired_;
  std::vector<bool> region_seen_;
  std::vector<int> scan_order_;
  std::vector<Path> paths_;
};

}  // namespace

SolveResult<WataridoriSolution> solve(const WataridoriInstance& inst, std::uint64_t budget) {
  validate_instance(inst);
  return WataridoriSearch(inst, budget).run();
}

}  // namespace wrd
