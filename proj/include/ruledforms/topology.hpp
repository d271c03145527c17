#pragma once

// Topology of the real part of a presented manifold: per-component
// orientability in even dimension, the quintuple (t, k, g, mu, eps), and the
// mod-2n lift of the degree that separates quotients over an empty real base.

#include <cstdint>
#include <variant>
#include <vector>

#include "ruledforms/curve_top.hpp"
#include "ruledforms/error.hpp"
#include "ruledforms/presentation.hpp"

namespace ruledforms {

enum class ComponentStatus { None, Orientable, NonOrientable };

struct Quintuple {
  int t = 0;
  int k = 0;
  int g = 0;
  int mu = 0;
  DividingType eps = DividingType::NonDividing;

  CurveTopType curve() const { return {g, mu, eps}; }

  auto operator<=>(const Quintuple&) const = default;
};

inline Quintuple make_quintuple(int t, int k, const CurveTopType& c) {
  return {t, k, c.g, c.mu, c.eps};
}

struct RealPartTopology {
  /// Indexed by component of RB.
  std::vector<ComponentStatus> statuses;
  int t = 0;
  int k = 0;

  bool operator==(const RealPartTopology&) const = default;
};

/// Even n only. Over a plus component the real part is an RP^{n-1}-bundle
/// over a circle; each rank-1 real transformation on it flips orientability.
inline RealPartTopology real_part_topology(const Presentation& p) {
  if (p.n() % 2 != 0) {
    fail(ErrorCode::OddDimension, "orientability is only defined in even dimension");
  }
  std::vector<int> real_count(p.base().mu, 0);
  for (const auto& [rec, count] : p.transforms()) {
    if (const auto* rp = std::get_if<RealPoint>(&rec.locus)) {
      if (rec.rank != 1) {
        fail(ErrorCode::UnsupportedRank, "real records of rank > 1 in even dimension");
      }
      real_count[rp->component] += count;
    }
  }
  RealPartTopology out;
  out.statuses.assign(p.base().mu, ComponentStatus::None);
  for (int c = 0; c < p.base().mu; ++c) {
    if (!p.has_real_part_over(c)) continue;
    if (real_count[c] % 2 == 0) {
      out.statuses[c] = ComponentStatus::Orientable;
      ++out.t;
    } else {
      out.statuses[c] = ComponentStatus::NonOrientable;
      ++out.k;
    }
  }
  return out;
}

/// Odd n: one real component over each component of RB.
inline int real_component_count(const Presentation& p) {
  if (p.n() % 2 == 0) fail(ErrorCode::EvenDimension, "use real_part_topology in even dimension");
  return p.base().mu;
}

inline bool allowable(const Quintuple& q) {
  return q.t >= 0 && q.k >= 0 && q.t + q.k <= q.mu && validate_curve_type(q.curve());
}

/// Whether some real ruled manifold of even dimension n and degree d has
/// topological type q.
inline bool realizable(const Quintuple& q, int n, const Residue& d) {
  if (n < 2 || n % 2 != 0) fail(ErrorCode::OddDimension, "realizable needs an even dimension");
  return allowable(q) && (d.value - q.k) % 2 == 0;
}

struct QuotientClass {
  Residue d2n;
  int q = 0;

  auto operator<=>(const QuotientClass&) const = default;
};

/// Degree offset of the reference structure, relative to c_B x conj.
inline std::int64_t structure_offset(const Presentation& p) {
  const auto* eb = std::get_if<EmptyBase>(&p.structure());
  if (eb == nullptr || eb->label == EmptyBaseLabel::ConjLike) return 0;
  return p.base().g % 2 == 0 ? p.n() : 0;
}

inline QuotientClass quotient_class(const Presentation& p) {
  if (p.n() % 2 != 0) fail(ErrorCode::OddDimension, "quotient class needs even dimension");
  if (p.base().mu != 0) fail(ErrorCode::NotEmptyBase, "quotient class needs an empty real base");
  const std::int64_t n = p.n();
  auto d2n = Residue::of(structure_offset(p) + degree_lift(p), 2 * n);
  return {d2n, d2n.value >= n ? 1 : 0};
}

}  // namespace ruledforms
