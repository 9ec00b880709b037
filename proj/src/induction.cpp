#include <algorithm>
#include <utility>

#include "octomaze/accel.hpp"

namespace octomaze {

namespace {

// Excursion of an induced piece: `height` applications of the original map,
// net translation `offset`, made of `rep` copies of each child's excursion
// in order. Leaves are the original pieces (height 1).
struct TowerNode {
  Integer height;
  Integer offset;
  std::vector<std::pair<std::size_t, Integer>> children;
};

struct InducedPiece {
  Integer lo;
  Integer len;
  std::size_t node;
};

// First-return induction onto [0, L), shrinking L from the right. Pieces
// are kept in source order (`top_`) and image order (`bottom_`). The
// tracked point x is held as T^level(base) with `base` in [0, L) and
// level below the height of base's piece.
class Induction {
 public:
  explicit Induction(const TotalIET& t) : length_(t.range()) {
    for (const Piece& p : t.pieces()) {
      nodes_.push_back({Integer(1), p.offset, {}});
      pieces_.push_back({p.src.lo, p.src.size(), nodes_.size() - 1});
      top_.push_back(pieces_.size() - 1);
    }
    bottom_ = top_;
    std::sort(bottom_.begin(), bottom_.end(), [&](std::size_t a, std::size_t b) { return image_lo(a) < image_lo(b); });
  }

  struct Located {
    std::size_t node;
    Integer base;
    Integer level;
  };

  Located locate(const Integer& x) {
    Integer u = x;
    Integer level = 0;
    while (true) {
      if (top_.empty()) throw Error(ErrorCode::ConstructionInconsistency, "induction exhausted the range");
      ++steps_;
      const std::size_t a = top_.back();
      const std::size_t b = bottom_.back();
      if (a == b) {
        // [lo, L) maps to itself with offset 0: a closed cylinder.
        if (u >= pieces_[a].lo) return {pieces_[a].node, u, level};
        length_ -= pieces_[a].len;
        top_.pop_back();
        bottom_.pop_back();
        continue;
      }
      const Integer top_len = pieces_[a].len;
      const Integer bottom_len = pieces_[b].len;
      if (top_len == bottom_len) {
        merge_equal(a, b, u, level);
      } else if (top_len > bottom_len) {
        top_wins(a, u, level);
      } else {
        bottom_wins(b, u, level);
      }
    }
  }

  Integer descend(std::size_t node, Integer u, Integer level) const {
    while (!nodes_[node].children.empty()) {
      for (const auto& [child, rep] : nodes_[node].children) {
        const TowerNode& c = nodes_[child];
        const Integer span = rep * c.height;
        if (level < span) {
          const Integer turns = level / c.height;
          u += turns * c.offset;
          level -= turns * c.height;
          node = child;
          break;
        }
        level -= span;
        u += rep * c.offset;
      }
    }
    return u;
  }

  const TowerNode& node(std::size_t i) const { return nodes_[i]; }
  std::size_t steps() const { return steps_; }

 private:
  Integer image_lo(std::size_t p) const { return pieces_[p].lo + nodes_[pieces_[p].node].offset; }
  const Integer& offset(std::size_t p) const { return nodes_[pieces_[p].node].offset; }
  const Integer& height(std::size_t p) const { return nodes_[pieces_[p].node].height; }

  std::size_t compose(std::size_t first, const Integer& first_rep, std::size_t second, const Integer& second_rep) {
    TowerNode n;
    n.height = first_rep * nodes_[first].height + second_rep * nodes_[second].height;
    n.offset = first_rep * nodes_[first].offset + second_rep * nodes_[second].offset;
    n.children = {{first, first_rep}, {second, second_rep}};
    nodes_.push_back(std::move(n));
    return nodes_.size() - 1;
  }

  static std::size_t position(const std::vector<std::size_t>& order, std::size_t p) {
    return static_cast<std::size_t>(std::find(order.begin(), order.end(), p) - order.begin());
  }

  // Last source piece `a` equals the image of last image piece `b`; `b`
  // absorbs `a`'s excursion and `a` leaves the base.
  void merge_equal(std::size_t a, std::size_t b, Integer& u, Integer& level) {
    const Integer cut = length_ - pieces_[a].len;
    if (u >= cut) {
      u -= offset(b);
      level += height(b);
    }
    pieces_[b].node = compose(pieces_[b].node, 1, pieces_[a].node, 1);
    length_ = cut;
    top_.pop_back();
    // b now lands where a used to.
    bottom_[position(bottom_, a)] = b;
    bottom_.pop_back();
  }

  // Last source piece `a` is longer than the last image piece. The pieces
  // whose images lie right of a's image lose to `a` in turn; each full
  // round strips their total length off the end of `a`.
  void top_wins(std::size_t a, Integer& u, Integer& level) {
    const std::size_t pos = position(bottom_, a);
    Integer losers_len = 0;
    for (std::size_t i = pos + 1; i < bottom_.size(); ++i) losers_len += pieces_[bottom_[i]].len;
    const Integer rounds = (pieces_[a].len - 1) / losers_len;

    if (rounds > 0) {
      const Integer cut = length_ - rounds * losers_len;
      if (u >= cut) {
        const Integer from_end = length_ - 1 - u;
        const Integer round = from_end / losers_len;
        Integer rem = from_end - round * losers_len;
        for (std::size_t i = bottom_.size(); i-- > pos + 1;) {
          const std::size_t loser = bottom_[i];
          if (rem < pieces_[loser].len) {
            u -= offset(loser) + round * offset(a);
            level += height(loser) + round * height(a);
            break;
          }
          rem -= pieces_[loser].len;
        }
      }
      for (std::size_t i = pos + 1; i < bottom_.size(); ++i) {
        InducedPiece& p = pieces_[bottom_[i]];
        p.node = compose(p.node, 1, pieces_[a].node, rounds);
      }
      pieces_[a].len -= rounds * losers_len;
      length_ = cut;
      return;
    }

    const std::size_t b = bottom_.back();
    const Integer cut = length_ - pieces_[b].len;
    if (u >= cut) {
      u -= offset(b);
      level += height(b);
    }
    pieces_[b].node = compose(pieces_[b].node, 1, pieces_[a].node, 1);
    pieces_[a].len -= pieces_[b].len;
    length_ = cut;
    bottom_.pop_back();
    bottom_.insert(bottom_.begin() + static_cast<std::ptrdiff_t>(pos + 1), b);
  }

  // Mirror case: the last image piece `b` is longer than the last source
  // piece. The pieces whose sources lie right of b's source lose in turn
  // and are pulled back through `b`.
  void bottom_wins(std::size_t b, Integer& u, Integer& level) {
    const std::size_t pos = position(top_, b);
    Integer losers_len = 0;
    for (std::size_t i = pos + 1; i < top_.size(); ++i) losers_len += pieces_[top_[i]].len;
    const Integer rounds = (pieces_[b].len - 1) / losers_len;

    if (rounds > 0) {
      const Integer cut = length_ - rounds * losers_len;
      if (u >= cut) {
        const Integer round = (length_ - 1 - u) / losers_len;
        u -= (rounds - round) * losers_len;
        level += (rounds - round) * height(b);
      }
      for (std::size_t i = pos + 1; i < top_.size(); ++i) {
        InducedPiece& p = pieces_[top_[i]];
        p.node = compose(pieces_[b].node, rounds, p.node, 1);
        p.lo -= rounds * losers_len;
      }
      pieces_[b].len -= rounds * losers_len;
      length_ = cut;
      return;
    }

    const std::size_t a = top_.back();
    const Integer cut = length_ - pieces_[a].len;
    if (u >= cut) {
      u -= offset(b);
      level += height(b);
    }
    pieces_[a].node = compose(pieces_[b].node, 1, pieces_[a].node, 1);
    pieces_[a].lo = pieces_[b].lo + pieces_[b].len - pieces_[a].len;
    pieces_[b].len -= pieces_[a].len;
    length_ = cut;
    top_.pop_back();
    top_.insert(top_.begin() + static_cast<std::ptrdiff_t>(pos + 1), a);
  }

  std::vector<TowerNode> nodes_;
  std::vector<InducedPiece> pieces_;
  std::vector<std::size_t> top_;
  std::vector<std::size_t> bottom_;
  Integer length_;
  std::size_t steps_ = 0;
};

}  // namespace

AcceleratedResult query_accelerated(const TotalIET& t, const Integer& x, const Integer& k) {
  if (x < 0 || x >= t.range()) throw Error(ErrorCode::OutOfRange, to_string(x) + " outside range");
  if (k < 0) throw Error(ErrorCode::PreconditionViolated, "negative iteration count");
  Induction ind(t);
  const Induction::Located loc = ind.locate(x);
  const Integer& period = ind.node(loc.node).height;
  const Integer level = floor_mod(loc.level + k, period);
  return {ind.descend(loc.node, loc.base, level), period, ind.steps()};
}

}  // namespace octomaze
