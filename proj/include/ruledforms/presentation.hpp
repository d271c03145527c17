#pragma once

// Combinatorial presentation of a real ruled manifold: a reference real
// structure on a degree-0 model over a real curve, plus a multiset of
// elementary transformations recorded by (locus kind, rank). The rewrite
// moves below are the deformation-preserving operations used to reduce a
// presentation to normal form.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "ruledforms/curve_top.hpp"
#include "ruledforms/error.hpp"

namespace ruledforms {

/// Element of Z/modulus, always stored as its least nonnegative representative.
struct Residue {
  std::int64_t value = 0;
  std::int64_t modulus = 1;

  static Residue of(std::int64_t x, std::int64_t modulus) {
    std::int64_t r = x % modulus;
    if (r < 0) r += modulus;
    return {r, modulus};
  }

  auto operator<=>(const Residue&) const = default;
};

// ---------------------------------------------------------------------------
// Reference structures

/// Odd n: c_B x conj on B x CP^{n-1}, the only fibered real structure.
struct ProductConjOdd {
  auto operator<=>(const ProductConjOdd&) const = default;
};

/// Even n, mu > 0: (P((L + L_0)^{n/2}), c^+_{f_D}) with f_D >= 0 exactly on
/// the components listed in plus_set.
struct SplitPM {
  std::set<int> plus_set;
  auto operator<=>(const SplitPM&) const = default;
};

enum class EmptyBaseLabel { ConjLike, C0Like };

/// Even n, mu = 0: c_B x conj or c_B x c_0 on B x CP^{n-1}.
struct EmptyBase {
  EmptyBaseLabel label = EmptyBaseLabel::ConjLike;
  auto operator<=>(const EmptyBase&) const = default;
};

using ReferenceStructure = std::variant<ProductConjOdd, SplitPM, EmptyBase>;

// ---------------------------------------------------------------------------
// Elementary transformation records

struct RealPoint {
  int component = 0;
  auto operator<=>(const RealPoint&) const = default;
};

/// A pair of transformations at x and c_B(x), x non-real.
struct ConjPair {
  auto operator<=>(const ConjPair&) const = default;
};

using Locus = std::variant<RealPoint, ConjPair>;

inline bool is_real_locus(const Locus& l) { return std::holds_alternative<RealPoint>(l); }

/// Ordering puts real loci first (by component, then rank), ConjPair last.
struct ElemTransformRec {
  Locus locus;
  int rank = 1;
  auto operator<=>(const ElemTransformRec&) const = default;
};

inline ElemTransformRec real_rec(int component, int rank = 1) {
  return {RealPoint{component}, rank};
}
inline ElemTransformRec conj_rec(int rank = 1) { return {ConjPair{}, rank}; }

/// Record -> multiplicity (always >= 1).
using TransformMultiset = std::map<ElemTransformRec, int>;

inline int total_records(const TransformMultiset& ms) {
  int s = 0;
  for (const auto& [rec, count] : ms) s += count;
  return s;
}

namespace detail {

inline void ms_add(TransformMultiset& ms, const ElemTransformRec& rec, int count = 1) {
  if (count > 0) ms[rec] += count;
}

inline bool ms_remove(TransformMultiset& ms, const ElemTransformRec& rec, int count = 1) {
  auto it = ms.find(rec);
  if (it == ms.end() || it->second < count) return false;
  it->second -= count;
  if (it->second == 0) ms.erase(it);
  return true;
}

inline bool ms_contains(const TransformMultiset& ms, const TransformMultiset& sub) {
  for (const auto& [rec, count] : sub) {
    auto it = ms.find(rec);
    if (it == ms.end() || it->second < count) return false;
  }
  return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Presentation

class Presentation {
 public:
  /// Validates every invariant; throws Error on violation.
  Presentation(CurveTopType base, int n, ReferenceStructure structure,
               TransformMultiset transforms = {})
      : base_(base), n_(n), structure_(std::move(structure)), transforms_(std::move(transforms)) {
    validate();
  }

  /// The degree-0 reference model with the default structure: c_B x conj for
  /// odd n or mu = 0, and c^+ over every real component otherwise.
  static Presentation reference(const CurveTopType& base, int n) {
    if (n % 2 != 0) return {base, n, ProductConjOdd{}};
    if (base.mu == 0) return {base, n, EmptyBase{}};
    SplitPM s;
    for (int c = 0; c < base.mu; ++c) s.plus_set.insert(c);
    return {base, n, s};
  }

  const CurveTopType& base() const { return base_; }
  int n() const { return n_; }
  const ReferenceStructure& structure() const { return structure_; }
  const TransformMultiset& transforms() const { return transforms_; }

  int count(const ElemTransformRec& rec) const {
    auto it = transforms_.find(rec);
    return it == transforms_.end() ? 0 : it->second;
  }

  int record_count() const { return total_records(transforms_); }

  /// Whether X has real points over the given component of RB.
  bool has_real_part_over(int component) const {
    if (component < 0 || component >= base_.mu) return false;
    if (std::holds_alternative<ProductConjOdd>(structure_)) return true;
    if (const auto* s = std::get_if<SplitPM>(&structure_)) return s->plus_set.count(component) > 0;
    return false;
  }

  /// Components over which X has real points, in increasing order.
  std::vector<int> real_components() const {
    std::vector<int> out;
    for (int c = 0; c < base_.mu; ++c) {
      if (has_real_part_over(c)) out.push_back(c);
    }
    return out;
  }

  /// Checks a record against the locus constraints of this presentation.
  void check_record(const ElemTransformRec& rec) const {
    if (rec.rank < 1 || rec.rank > n_ - 1) {
      fail(ErrorCode::RankOutOfRange,
           "rank " + std::to_string(rec.rank) + " outside [1, " + std::to_string(n_ - 1) + "]");
    }
    if (const auto* rp = std::get_if<RealPoint>(&rec.locus)) {
      if (!has_real_part_over(rp->component)) {
        fail(ErrorCode::RealLocusOutsideRealPart,
             "no real point of X over component " + std::to_string(rp->component));
      }
    }
  }

  Presentation with_transforms(TransformMultiset t) const {
    return {base_, n_, structure_, std::move(t)};
  }

  friend bool operator==(const Presentation&, const Presentation&) = default;
  friend auto operator<=>(const Presentation& a, const Presentation& b) {
    return std::tie(a.base_, a.n_, a.structure_, a.transforms_) <=>
           std::tie(b.base_, b.n_, b.structure_, b.transforms_);
  }

 private:
  void validate() {
    require_valid(base_);
    if (n_ < 2) fail(ErrorCode::InvalidDimension, "dimension n must be at least 2");
    const bool odd = n_ % 2 != 0;
    if (odd) {
      if (!std::holds_alternative<ProductConjOdd>(structure_)) {
        fail(ErrorCode::StructureMismatch, "odd dimension requires the product structure");
      }
    } else if (base_.mu > 0) {
      const auto* s = std::get_if<SplitPM>(&structure_);
      if (s == nullptr) {
        fail(ErrorCode::StructureMismatch, "even dimension over a real base requires split_pm");
      }
      for (int c : s->plus_set) {
        if (c < 0 || c >= base_.mu) {
          fail(ErrorCode::StructureMismatch,
               "plus_set component " + std::to_string(c) + " out of range");
        }
      }
    } else if (!std::holds_alternative<EmptyBase>(structure_)) {
      fail(ErrorCode::StructureMismatch, "even dimension over an empty real base requires empty_base");
    }
    for (auto it = transforms_.begin(); it != transforms_.end();) {
      if (it->second < 0) fail(ErrorCode::StructureMismatch, "negative record multiplicity");
      if (it->second == 0) {
        it = transforms_.erase(it);
        continue;
      }
      check_record(it->first);
      ++it;
    }
  }

  CurveTopType base_;
  int n_;
  ReferenceStructure structure_;
  TransformMultiset transforms_;
};

// ---------------------------------------------------------------------------
// Degree

inline std::int64_t record_degree(const ElemTransformRec& rec) {
  return is_real_locus(rec.locus) ? rec.rank : 2 * static_cast<std::int64_t>(rec.rank);
}

/// deg E of the presented bundle, relative to the degree-0 reference model.
inline std::int64_t degree_lift(const Presentation& p) {
  std::int64_t s = 0;
  for (const auto& [rec, count] : p.transforms()) s += record_degree(rec) * count;
  return s;
}

inline Residue degree(const Presentation& p) { return Residue::of(degree_lift(p), p.n()); }

// ---------------------------------------------------------------------------
// Moves

inline Presentation apply_transform(const Presentation& p, const ElemTransformRec& rec) {
  p.check_record(rec);
  auto t = p.transforms();
  detail::ms_add(t, rec);
  return p.with_transforms(std::move(t));
}

/// Rank of the single transformation along the span of two fiber subspaces
/// of ranks r1 and r2; nullopt when the span is the whole fiber, in which
/// case the transformation is a twist by O(x) and disappears.
inline std::optional<int> merge_in_fiber(int r1, int r2, int n) {
  if (r1 < 1 || r2 < 1 || r1 > n - 1 || r2 > n - 1 || r1 + r2 > n) {
    fail(ErrorCode::RankOutOfRange, "cannot merge ranks " + std::to_string(r1) + " and " +
                                        std::to_string(r2) + " in dimension " + std::to_string(n));
  }
  if (r1 + r2 == n) return std::nullopt;
  return r1 + r2;
}

inline std::pair<int, int> split_in_fiber(int r, int first, int n) {
  if (r < 2 || r > n - 1 || first < 1 || first >= r) {
    fail(ErrorCode::RankOutOfRange, "cannot split rank " + std::to_string(r) + " as " +
                                        std::to_string(first) + " + " + std::to_string(r - first));
  }
  return {first, r - first};
}

namespace detail {

// Rank > 1 real records have no orientability rule in even dimension.
inline void require_real_rank_moves(const Presentation& p, const Locus& locus) {
  if (is_real_locus(locus) && p.n() % 2 == 0) {
    fail(ErrorCode::NotApplicable, "real-locus merge/split is only supported in odd dimension");
  }
}

}  // namespace detail

/// Brings two records with the same locus kind into one fiber and merges them.
inline Presentation move_merge(const Presentation& p, const Locus& locus, int r1, int r2) {
  detail::require_real_rank_moves(p, locus);
  auto t = p.transforms();
  const ElemTransformRec a{locus, r1}, b{locus, r2};
  if (!detail::ms_remove(t, a) || !detail::ms_remove(t, b)) {
    fail(ErrorCode::NotApplicable, "records to merge are not present");
  }
  if (auto merged = merge_in_fiber(r1, r2, p.n())) detail::ms_add(t, {locus, *merged});
  return p.with_transforms(std::move(t));
}

inline Presentation move_split(const Presentation& p, const Locus& locus, int rank, int first) {
  detail::require_real_rank_moves(p, locus);
  auto [r1, r2] = split_in_fiber(rank, first, p.n());
  auto t = p.transforms();
  if (!detail::ms_remove(t, {locus, rank})) {
    fail(ErrorCode::NotApplicable, "record to split is not present");
  }
  detail::ms_add(t, {locus, r1});
  detail::ms_add(t, {locus, r2});
  return p.with_transforms(std::move(t));
}

/// Two real points on one component cancel. The transformation at the first
/// point is undone by one at the image of the contracted fiber; in dimension
/// above two the pair instead deforms through a double real point into a
/// conjugate pair, which keeps deg E.
inline Presentation move_cancel_real_pair(const Presentation& p, int component) {
  auto t = p.transforms();
  if (!detail::ms_remove(t, real_rec(component), 2)) {
    fail(ErrorCode::NotApplicable,
         "fewer than two rank-1 real records on component " + std::to_string(component));
  }
  if (p.n() > 2) detail::ms_add(t, conj_rec());
  return p.with_transforms(std::move(t));
}

/// A conjugate pair deforms into a double real point, then two real points.
inline Presentation move_conj_to_real(const Presentation& p, int component) {
  if (!p.has_real_part_over(component)) {
    fail(ErrorCode::NotApplicable, "no real part over component " + std::to_string(component));
  }
  auto t = p.transforms();
  if (!detail::ms_remove(t, conj_rec())) {
    fail(ErrorCode::NotApplicable, "no rank-1 conjugate-pair record");
  }
  detail::ms_add(t, real_rec(component), 2);
  return p.with_transforms(std::move(t));
}

inline Presentation move_real_to_conj(const Presentation& p, int component) {
  auto t = p.transforms();
  if (!detail::ms_remove(t, real_rec(component), 2)) {
    fail(ErrorCode::NotApplicable,
         "fewer than two rank-1 real records on component " + std::to_string(component));
  }
  detail::ms_add(t, conj_rec());
  return p.with_transforms(std::move(t));
}

/// Whether `selection` is a group of records that together amount to a twist
/// by a line bundle: real records on one component of total rank n,
/// conjugate records of total rank n, or (even n, mu > 0) conjugate records
/// of total rank n/2 collapsed onto one real fiber.
inline bool is_full_group(const Presentation& p, const TransformMultiset& selection) {
  if (selection.empty()) return false;
  const Locus& locus = selection.begin()->first.locus;
  int rank_sum = 0;
  for (const auto& [rec, count] : selection) {
    if (rec.locus != locus || count < 1) return false;
    rank_sum += rec.rank * count;
  }
  if (is_real_locus(locus)) {
    return rank_sum == p.n() && p.has_real_part_over(std::get<RealPoint>(locus).component);
  }
  if (rank_sum == p.n()) return true;
  return p.n() % 2 == 0 && p.base().mu > 0 && 2 * rank_sum == p.n();
}

inline Presentation move_remove_full(const Presentation& p, const TransformMultiset& selection) {
  if (!is_full_group(p, selection) || !detail::ms_contains(p.transforms(), selection)) {
    fail(ErrorCode::NotApplicable, "selection is not a removable full-rank group");
  }
  auto t = p.transforms();
  for (const auto& [rec, count] : selection) detail::ms_remove(t, rec, count);
  return p.with_transforms(std::move(t));
}

inline Presentation move_insert_full(const Presentation& p, const TransformMultiset& selection) {
  if (!is_full_group(p, selection)) {
    fail(ErrorCode::NotApplicable, "selection is not a full-rank group");
  }
  auto t = p.transforms();
  for (const auto& [rec, count] : selection) {
    p.check_record(rec);
    detail::ms_add(t, rec, count);
  }
  return p.with_transforms(std::move(t));
}

namespace detail {

// All multisets of ranks in [1, max_part] summing to `total`, parts nonincreasing.
inline void rank_partitions(int total, int max_part, std::vector<int>& cur,
                            std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (int r = std::min(total, max_part); r >= 1; --r) {
    cur.push_back(r);
    rank_partitions(total - r, r, cur, out);
    cur.pop_back();
  }
}

inline TransformMultiset group_of(const Locus& locus, const std::vector<int>& ranks) {
  TransformMultiset g;
  for (int r : ranks) ms_add(g, {locus, r});
  return g;
}

inline std::vector<std::pair<Locus, int>> full_group_targets(const Presentation& p) {
  std::vector<std::pair<Locus, int>> out;
  for (int c : p.real_components()) out.emplace_back(RealPoint{c}, p.n());
  out.emplace_back(ConjPair{}, p.n());
  if (p.n() % 2 == 0 && p.base().mu > 0) out.emplace_back(ConjPair{}, p.n() / 2);
  return out;
}

}  // namespace detail

/// Every full-rank group that could be inserted (one per locus and rank
/// partition). Real groups of rank > 1 are skipped in even dimension.
inline std::vector<TransformMultiset> full_insertion_candidates(const Presentation& p) {
  std::vector<TransformMultiset> out;
  for (const auto& [locus, total] : detail::full_group_targets(p)) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    detail::rank_partitions(total, p.n() - 1, cur, parts);
    for (const auto& ranks : parts) {
      if (is_real_locus(locus) && p.n() % 2 == 0 && ranks.front() > 1) continue;
      out.push_back(detail::group_of(locus, ranks));
    }
  }
  return out;
}

/// Every full-rank group present in p.
inline std::vector<TransformMultiset> full_removal_candidates(const Presentation& p) {
  std::vector<TransformMultiset> out;
  for (const auto& [locus, total] : detail::full_group_targets(p)) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    detail::rank_partitions(total, p.n() - 1, cur, parts);
    for (const auto& ranks : parts) {
      auto g = detail::group_of(locus, ranks);
      if (detail::ms_contains(p.transforms(), g)) out.push_back(std::move(g));
    }
  }
  return out;
}

/// Removes the first removable group in canonical order.
inline Presentation move_remove_full(const Presentation& p) {
  auto candidates = full_removal_candidates(p);
  if (candidates.empty()) fail(ErrorCode::NotApplicable, "no full-rank group to remove");
  return move_remove_full(p, candidates.front());
}

enum class FlipMode { Add, Remove };

/// Toggles c_B x conj <-> c_B x c_0 over an empty real base. For odd genus
/// the two structures are deformation equivalent; for even genus the toggle
/// is paid for by a couple of transformations of rank n/2 at x, c_B(x).
inline Presentation move_structure_flip(const Presentation& p, FlipMode mode = FlipMode::Add) {
  const auto* eb = std::get_if<EmptyBase>(&p.structure());
  if (eb == nullptr) {
    fail(ErrorCode::NotApplicable, "structure flip needs even dimension and empty real base");
  }
  EmptyBase flipped{eb->label == EmptyBaseLabel::ConjLike ? EmptyBaseLabel::C0Like
                                                          : EmptyBaseLabel::ConjLike};
  auto t = p.transforms();
  if (p.base().g % 2 == 0) {
    const auto half = conj_rec(p.n() / 2);
    if (mode == FlipMode::Add) {
      detail::ms_add(t, half);
    } else if (!detail::ms_remove(t, half)) {
      fail(ErrorCode::NotApplicable, "no conjugate-pair record of rank n/2 to absorb the flip");
    }
  }
  return Presentation(p.base(), p.n(), flipped, std::move(t));
}

/// Relabels two components of RB (a deformation of the base curve carrying
/// one component to the other).
inline Presentation move_swap_components(const Presentation& p, int i, int j) {
  const int mu = p.base().mu;
  if (i < 0 || j < 0 || i >= mu || j >= mu || i == j) {
    fail(ErrorCode::NotApplicable, "component swap needs two distinct components of RB");
  }
  auto swap_index = [&](int c) { return c == i ? j : (c == j ? i : c); };
  ReferenceStructure s = p.structure();
  if (auto* split = std::get_if<SplitPM>(&s)) {
    std::set<int> swapped;
    for (int c : split->plus_set) swapped.insert(swap_index(c));
    split->plus_set = std::move(swapped);
  }
  TransformMultiset t;
  for (const auto& [rec, count] : p.transforms()) {
    ElemTransformRec r = rec;
    if (auto* rp = std::get_if<RealPoint>(&r.locus)) rp->component = swap_index(rp->component);
    detail::ms_add(t, r, count);
  }
  return Presentation(p.base(), p.n(), std::move(s), std::move(t));
}

}  // namespace ruledforms
