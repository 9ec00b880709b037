#include "octomaze/iet.hpp"

#include <algorithm>
#include <numeric>

namespace octomaze {

PartialIET::PartialIET(Integer range, std::vector<Piece> pieces) : range_(std::move(range)), pieces_(std::move(pieces)) {
  if (range_ < 0) throw Error(ErrorCode::InvalidIET, "negative range");
  std::sort(pieces_.begin(), pieces_.end(), [](const Piece& a, const Piece& b) { return a.src.lo < b.src.lo; });
  Integer covered = 0;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Piece& p = pieces_[i];
    const Interval img = p.image();
    if (p.src.lo > p.src.hi) throw Error(ErrorCode::InvalidIET, "empty interval");
    if (p.src.lo < 0 || p.src.hi >= range_ || img.lo < 0 || img.hi >= range_) {
      throw Error(ErrorCode::InvalidIET, "piece [" + to_string(p.src.lo) + "," + to_string(p.src.hi) + "] leaves range");
    }
    if (i > 0 && pieces_[i - 1].src.hi >= p.src.lo) {
      throw Error(ErrorCode::InvalidIET, "source intervals overlap at " + to_string(p.src.lo));
    }
    covered += p.src.size();
  }
  by_image_.resize(pieces_.size());
  std::iota(by_image_.begin(), by_image_.end(), std::size_t{0});
  std::sort(by_image_.begin(), by_image_.end(), [this](std::size_t a, std::size_t b) {
    return pieces_[a].src.lo + pieces_[a].offset < pieces_[b].src.lo + pieces_[b].offset;
  });
  for (std::size_t i = 1; i < by_image_.size(); ++i) {
    if (pieces_[by_image_[i - 1]].image().hi >= pieces_[by_image_[i]].image().lo) {
      throw Error(ErrorCode::InvalidIET, "image intervals overlap at " + to_string(pieces_[by_image_[i]].image().lo));
    }
  }
  missing_ = range_ - covered;
}

void PartialIET::check_range(const Integer& v) const {
  if (v < 0 || v >= range_) throw Error(ErrorCode::OutOfRange, to_string(v) + " outside [0, " + to_string(range_) + ")");
}

const Piece* PartialIET::piece_for_source(const Integer& x) const {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x, [](const Integer& v, const Piece& p) { return v < p.src.lo; });
  if (it == pieces_.begin()) return nullptr;
  --it;
  return it->src.hi >= x ? &*it : nullptr;
}

const Piece* PartialIET::piece_for_image(const Integer& y) const {
  auto it = std::upper_bound(by_image_.begin(), by_image_.end(), y, [this](const Integer& v, std::size_t i) {
    return v < pieces_[i].src.lo + pieces_[i].offset;
  });
  if (it == by_image_.begin()) return nullptr;
  const Piece& p = pieces_[*std::prev(it)];
  return p.src.hi + p.offset >= y ? &p : nullptr;
}

std::optional<Integer> PartialIET::apply(const Integer& x) const {
  check_range(x);
  const Piece* p = piece_for_source(x);
  if (!p) return std::nullopt;
  return Integer(x + p->offset);
}

std::optional<Integer> PartialIET::apply_inverse(const Integer& y) const {
  check_range(y);
  const Piece* p = piece_for_image(y);
  if (!p) return std::nullopt;
  return Integer(y - p->offset);
}

bool PartialIET::in_domain(const Integer& x) const {
  check_range(x);
  return piece_for_source(x) != nullptr;
}

bool PartialIET::in_codomain(const Integer& y) const {
  check_range(y);
  return piece_for_image(y) != nullptr;
}

namespace {

std::vector<Interval> gaps(const std::vector<Interval>& sorted, const Integer& range) {
  std::vector<Interval> out;
  Integer cursor = 0;
  for (const Interval& iv : sorted) {
    if (iv.lo > cursor) out.push_back({cursor, iv.lo - 1});
    cursor = iv.hi + 1;
  }
  if (cursor < range) out.push_back({cursor, range - 1});
  return out;
}

}  // namespace

std::vector<Interval> PartialIET::domain_gaps() const {
  std::vector<Interval> src;
  src.reserve(pieces_.size());
  for (const Piece& p : pieces_) src.push_back(p.src);
  return gaps(src, range_);
}

std::vector<Interval> PartialIET::codomain_gaps() const {
  std::vector<Interval> img;
  img.reserve(pieces_.size());
  for (std::size_t i : by_image_) img.push_back(pieces_[i].image());
  return gaps(img, range_);
}

TotalIET::TotalIET(PartialIET f) : f_(std::move(f)) {
  if (!f_.is_total()) throw Error(ErrorCode::InvalidIET, to_string(f_.missing_count()) + " elements not covered");
}

CompletionMap complete(const PartialIET& f) {
  const Integer& M = f.range();
  const Integer& m = f.missing_count();
  if (m == 0) throw Error(ErrorCode::AlreadyTotal, "nothing to complete");

  CompletionMap cm;
  cm.original_range = M;
  cm.missing = m;
  std::vector<Piece> pieces = f.pieces();

  Integer slot = M;
  for (const Interval& j : f.domain_gaps()) {
    cm.j_pieces.push_back({j, slot - j.lo});
    slot += j.size();
  }
  cm.conveyor = Piece{{M, M * m + M - 1}, m};
  slot = M * m + M;
  for (const Interval& k : f.codomain_gaps()) {
    cm.k_pieces.push_back({{slot, slot + k.size() - 1}, k.lo - slot});
    slot += k.size();
  }

  pieces.insert(pieces.end(), cm.j_pieces.begin(), cm.j_pieces.end());
  pieces.push_back(cm.conveyor);
  pieces.insert(pieces.end(), cm.k_pieces.begin(), cm.k_pieces.end());
  cm.total = TotalIET(M * m + M + m, std::move(pieces));
  return cm;
}

Integer iterate_naive(const TotalIET& t, const Integer& x, const Integer& k, const std::optional<Integer>& step_budget) {
  if (x < 0 || x >= t.range()) throw Error(ErrorCode::OutOfRange, to_string(x) + " outside range");
  if (k < 0) throw Error(ErrorCode::PreconditionViolated, "negative iteration count");
  if (step_budget && k > *step_budget) {
    throw Error(ErrorCode::StepBudgetExceeded, to_string(k) + " steps requested, budget " + to_string(*step_budget));
  }
  const auto& pieces = t.pieces();
  Integer v = x;
  for (Integer i = 0; i < k; ++i) {
    auto it = std::upper_bound(pieces.begin(), pieces.end(), v, [](const Integer& a, const Piece& p) { return a < p.src.lo; });
    v += std::prev(it)->offset;
  }
  return v;
}

ConveyorReading bounce_count_from_iterate(const Integer& range, const Integer& missing, const Integer& z) {
  if (z < range || z > range * missing + range - 1) {
    throw Error(ErrorCode::OutOfConveyor, to_string(z) + " is not on the conveyor");
  }
  ConveyorReading r;
  r.exit_slot = range + floor_mod(z - range, missing);
  r.steps = range - 1 - Integer((z - r.exit_slot) / missing);
  return r;
}

PathEnd solve_partial(const PartialIET& f, const Integer& x, const IterationEngine& engine) {
  if (f.in_codomain(x)) throw Error(ErrorCode::PreconditionViolated, to_string(x) + " is in the codomain");
  const CompletionMap cm = complete(f);
  const Integer z = engine.iterate(cm.total, x, f.range());
  const ConveyorReading r = bounce_count_from_iterate(f.range(), f.missing_count(), z);
  return {cm.total.apply_inverse(r.exit_slot), r.steps};
}

}  // namespace octomaze
