#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "octomaze/errors.hpp"
#include "octomaze/numeric.hpp"

namespace octomaze {

/// Closed integer interval [lo, hi].
struct Interval {
  Integer lo;
  Integer hi;

  Integer size() const { return hi - lo + 1; }
  bool contains(const Integer& v) const { return v >= lo && v <= hi; }
};

inline bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }

/// Translation of `src` by `offset`.
struct Piece {
  Interval src;
  Integer offset;

  Interval image() const { return {src.lo + offset, src.hi + offset}; }
};

inline bool operator==(const Piece& a, const Piece& b) { return a.src == b.src && a.offset == b.offset; }

/// Disjoint source intervals in [0, M-1], each translated onto pairwise
/// disjoint images in the same range.
class PartialIET {
 public:
  PartialIET() = default;

  /// Sorts the pieces and checks range, disjointness of sources and of
  /// images; throws InvalidIET otherwise.
  PartialIET(Integer range, std::vector<Piece> pieces);

  const Integer& range() const { return range_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  /// Elements of [0, M-1] outside every source interval.
  const Integer& missing_count() const { return missing_; }
  bool is_total() const { return missing_ == 0; }

  /// nullopt when x is outside the domain; OutOfRange unless 0 <= x < M.
  std::optional<Integer> apply(const Integer& x) const;
  std::optional<Integer> apply_inverse(const Integer& y) const;

  bool in_domain(const Integer& x) const;
  bool in_codomain(const Integer& y) const;

  /// Maximal intervals of [0, M-1] not in the domain, left to right.
  std::vector<Interval> domain_gaps() const;
  /// Maximal intervals of [0, M-1] not in the codomain, left to right.
  std::vector<Interval> codomain_gaps() const;

 private:
  void check_range(const Integer& v) const;
  const Piece* piece_for_source(const Integer& x) const;
  const Piece* piece_for_image(const Integer& y) const;

  Integer range_{0};
  std::vector<Piece> pieces_;
  std::vector<std::size_t> by_image_;
  Integer missing_{0};
};

/// A partial IET whose domain and codomain are the whole range.
class TotalIET {
 public:
  TotalIET() = default;
  /// Throws InvalidIET if `f` leaves any element out.
  explicit TotalIET(PartialIET f);
  TotalIET(Integer range, std::vector<Piece> pieces) : TotalIET(PartialIET(std::move(range), std::move(pieces))) {}

  const Integer& range() const { return f_.range(); }
  const std::vector<Piece>& pieces() const { return f_.pieces(); }
  const PartialIET& partial() const { return f_; }

  Integer apply(const Integer& x) const { return *f_.apply(x); }
  Integer apply_inverse(const Integer& y) const { return *f_.apply_inverse(y); }

 private:
  PartialIET f_;
};

/// Extension of a partial IET on [0, M-1] with m missing elements to a total
/// IET on [0, Mm+M+m-1]: domain gaps feed [M, M+m-1], a conveyor shifts
/// [M, Mm+M-1] by +m, and [Mm+M, Mm+M+m-1] feeds the codomain gaps.
struct CompletionMap {
  TotalIET total;
  Integer original_range;
  Integer missing;
  std::vector<Piece> j_pieces;
  std::vector<Piece> k_pieces;
  Piece conveyor;
};

/// Throws AlreadyTotal when nothing is missing.
CompletionMap complete(const PartialIET& f);

/// Computes t^(k)(x).
class IterationEngine {
 public:
  virtual ~IterationEngine() = default;
  virtual Integer iterate(const TotalIET& t, const Integer& x, const Integer& k) const = 0;
  virtual std::string_view name() const = 0;
};

/// k sequential applications. With a budget, k above it raises
/// StepBudgetExceeded before any work is done.
Integer iterate_naive(const TotalIET& t, const Integer& x, const Integer& k,
                      const std::optional<Integer>& step_budget = std::nullopt);

class NaiveEngine final : public IterationEngine {
 public:
  explicit NaiveEngine(std::optional<Integer> step_budget = std::nullopt) : budget_(std::move(step_budget)) {}
  Integer iterate(const TotalIET& t, const Integer& x, const Integer& k) const override {
    return iterate_naive(t, x, k, budget_);
  }
  std::string_view name() const override { return "naive"; }

 private:
  std::optional<Integer> budget_;
};

/// Conveyor readout: y' = M + ((z - M) mod m), t = M - 1 - (z - y')/m.
/// OutOfConveyor unless M <= z <= Mm+M-1.
struct ConveyorReading {
  Integer exit_slot;
  Integer steps;
};
ConveyorReading bounce_count_from_iterate(const Integer& range, const Integer& missing, const Integer& z);

/// End of the path of `x` under `f`: the first iterate outside the domain
/// and the number of applications taken to reach it.
struct PathEnd {
  Integer terminal;
  Integer steps;
};

/// `x` must not be in the codomain (PreconditionViolated). Runs the
/// completion for M iterations with `engine` and decodes the conveyor
/// position.
PathEnd solve_partial(const PartialIET& f, const Integer& x, const IterationEngine& engine);

}  // namespace octomaze
