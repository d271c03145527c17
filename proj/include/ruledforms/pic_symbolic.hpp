#pragma once

// Symbolic line-bundle classes on the base curve and on ruled surfaces
// P(L + L_0) -> B. Classes are carried by explicit divisor representatives;
// linear equivalence is never decided.

#include <cstdint>
#include <utility>
#include <vector>

#include "ruledforms/curve_top.hpp"
#include "ruledforms/error.hpp"

namespace ruledforms {

/// deg(E (x) L) for E of rank n.
inline std::int64_t tensor_degree(std::int64_t deg_e, int n, std::int64_t deg_l) {
  if (n < 2) fail(ErrorCode::InvalidDimension, "rank must be at least 2");
  return deg_e + static_cast<std::int64_t>(n) * deg_l;
}

/// A line bundle on B given by a divisor representative. The empty divisor
/// represents the trivial bundle L_0.
struct LineBundleRep {
  Divisor divisor;

  static LineBundleRep trivial() { return {}; }

  std::int64_t degree() const { return divisor.degree(); }
  bool is_trivial() const { return divisor.empty(); }

  LineBundleRep dual() const { return {-divisor}; }

  friend LineBundleRep tensor(const LineBundleRep& a, const LineBundleRep& b) {
    return {a.divisor + b.divisor};
  }

  friend bool operator==(const LineBundleRep&, const LineBundleRep&) = default;
};

/// a [D_{L_0}] + p^*(m): a class on a ruled surface P(L + L_0) written in the
/// canonical generators.
struct PicSurfaceExpr {
  std::int64_t a = 0;
  LineBundleRep m;

  friend bool operator==(const PicSurfaceExpr&, const PicSurfaceExpr&) = default;
};

/// An unreduced sum of section classes [D_L], the zero section [D_{L_0}] and
/// pulled-back base classes. reduce() rewrites every [D_L] through
/// O(D_L) = O(D_{L_0}) (x) p^*(L^*).
class SurfaceClassSum {
 public:
  SurfaceClassSum() = default;

  /// Lifts a canonical expression back into sum form.
  explicit SurfaceClassSum(const PicSurfaceExpr& e) : zero_section_(e.a), pullback_(e.m) {}

  SurfaceClassSum& add_section(const LineBundleRep& l, std::int64_t coeff = 1) {
    if (l.is_trivial()) {
      zero_section_ += coeff;
    } else {
      sections_.emplace_back(coeff, l);
    }
    return *this;
  }

  SurfaceClassSum& add_zero_section(std::int64_t coeff = 1) {
    zero_section_ += coeff;
    return *this;
  }

  SurfaceClassSum& add_pullback(const LineBundleRep& m) {
    pullback_ = tensor(pullback_, m);
    return *this;
  }

  bool reduced() const { return sections_.empty(); }

  PicSurfaceExpr reduce() const {
    PicSurfaceExpr out{zero_section_, pullback_};
    for (const auto& [coeff, l] : sections_) {
      out.a += coeff;
      out.m = tensor(out.m, LineBundleRep{l.dual().divisor.scaled(coeff)});
    }
    return out;
  }

 private:
  std::int64_t zero_section_ = 0;
  std::vector<std::pair<std::int64_t, LineBundleRep>> sections_;
  LineBundleRep pullback_;
};

/// Class of the section P(L) of P(L + L_0).
inline PicSurfaceExpr section_class_of(const LineBundleRep& l) {
  return SurfaceClassSum{}.add_section(l).reduce();
}

/// Summands of the normal bundle of P(L + L_0) inside P(L + L_0 + F),
/// N = p^*(F) (x) O(D_L), one per line-bundle summand of F.
inline std::vector<PicSurfaceExpr> normal_bundle(const LineBundleRep& l,
                                                 const std::vector<LineBundleRep>& f) {
  if (f.empty()) fail(ErrorCode::EmptyF, "F must have at least one summand");
  std::vector<PicSurfaceExpr> out;
  out.reserve(f.size());
  for (const auto& fj : f) {
    out.push_back(SurfaceClassSum{}.add_pullback(fj).add_section(l).reduce());
  }
  return out;
}

enum class RealityConstraint { RequiresInvariant, RequiresAntiInvariant, None };

/// Condition a real surface class imposes on its pulled-back part: if the
/// class is preserved by the real structure, c_B^*(m) = m.
inline RealityConstraint reality_constraint(const PicSurfaceExpr& expr) {
  return expr.m.is_trivial() ? RealityConstraint::None : RealityConstraint::RequiresInvariant;
}

/// Condition on the twist bundle L of a reference model P(L + L_0) carrying
/// c_X^+-: c_B^*(L) = L^*, realized by an anti-invariant representative.
inline RealityConstraint twist_reality_constraint(const LineBundleRep& l) {
  return l.is_trivial() ? RealityConstraint::None : RealityConstraint::RequiresAntiInvariant;
}

inline bool satisfies(RealityConstraint c, const LineBundleRep& l) {
  switch (c) {
    case RealityConstraint::RequiresInvariant: return is_invariant(l.divisor);
    case RealityConstraint::RequiresAntiInvariant: return is_anti_invariant(l.divisor);
    case RealityConstraint::None: return true;
  }
  return false;
}

}  // namespace ruledforms
