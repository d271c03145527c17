#pragma once

// Topological types of real algebraic curves, abstract points on them and
// exact divisors with the action of the real structure.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>

#include "ruledforms/error.hpp"

namespace ruledforms {

enum class DividingType { Dividing, NonDividing };

/// Topological type (g, mu, eps) of a real curve (B, c_B).
struct CurveTopType {
  int g = 0;
  int mu = 0;
  DividingType eps = DividingType::NonDividing;

  auto operator<=>(const CurveTopType&) const = default;
};

/// Harnack bound plus the parity constraint of dividing curves.
constexpr bool validate_curve_type(const CurveTopType& t) {
  if (t.g < 0 || t.mu < 0 || t.mu > t.g + 1) return false;
  if (t.eps == DividingType::Dividing) {
    if (t.mu < 1) return false;
    if ((t.mu - (t.g + 1)) % 2 != 0) return false;
  }
  return true;
}

inline void require_valid(const CurveTopType& t) {
  if (!validate_curve_type(t)) {
    fail(ErrorCode::InvalidCurveType,
         "invalid curve type (g=" + std::to_string(t.g) +
             ", mu=" + std::to_string(t.mu) + ")");
  }
}

/// A point of RB lying on the given real component.
struct RealOn {
  int component = 0;
  auto operator<=>(const RealOn&) const = default;
};

/// A non-real point; `partner` is the id of its conjugate.
struct NonReal {
  std::string partner;
  auto operator<=>(const NonReal&) const = default;
};

/// An abstract point of the base. Only component membership and the
/// conjugation pairing are recorded; the curve type travels with the label
/// so that labels from different curves can be told apart.
struct PointLabel {
  std::string id;
  std::variant<RealOn, NonReal> kind;
  CurveTopType curve;

  bool is_real() const { return std::holds_alternative<RealOn>(kind); }

  bool operator==(const PointLabel&) const = default;
};

inline PointLabel real_point(const CurveTopType& curve, std::string id,
                             int component) {
  require_valid(curve);
  if (component < 0 || component >= curve.mu) {
    fail(ErrorCode::InvalidPoint,
         "real component " + std::to_string(component) +
             " out of range for mu=" + std::to_string(curve.mu));
  }
  return PointLabel{std::move(id), RealOn{component}, curve};
}

/// Returns (x, c_B(x)).
inline std::pair<PointLabel, PointLabel> conjugate_pair(const CurveTopType& curve,
                                                        std::string id,
                                                        std::string partner_id) {
  require_valid(curve);
  if (id == partner_id) {
    fail(ErrorCode::InvalidPoint, "a non-real point cannot be its own conjugate");
  }
  PointLabel x{id, NonReal{partner_id}, curve};
  PointLabel xbar{std::move(partner_id), NonReal{std::move(id)}, curve};
  return {std::move(x), std::move(xbar)};
}

/// Image of a label under c_B.
inline PointLabel conj_label(const PointLabel& p) {
  if (p.is_real()) return p;
  const auto& nr = std::get<NonReal>(p.kind);
  return PointLabel{nr.partner, NonReal{p.id}, p.curve};
}

/// Finite formal sum of labeled points with nonzero integer coefficients.
class Divisor {
 public:
  struct Term {
    PointLabel point;
    std::int64_t coeff;
  };

  Divisor() = default;

  static Divisor of(const PointLabel& p, std::int64_t coeff = 1) {
    Divisor d;
    d.add_term(p, coeff);
    return d;
  }

  /// Adds coeff * p. Throws MixedCurves if `p` clashes with a label already
  /// stored under the same id or with a label of another curve.
  Divisor& add_term(const PointLabel& p, std::int64_t coeff) {
    if (!terms_.empty() && terms_.begin()->second.point.curve != p.curve) {
      fail(ErrorCode::MixedCurves, "divisor mixes points of different curves");
    }
    auto it = terms_.find(p.id);
    if (it == terms_.end()) {
      if (coeff != 0) terms_.emplace(p.id, Term{p, coeff});
      return *this;
    }
    if (!(it->second.point == p)) {
      fail(ErrorCode::MixedCurves, "point id '" + p.id + "' used with two meanings");
    }
    it->second.coeff += coeff;
    if (it->second.coeff == 0) terms_.erase(it);
    return *this;
  }

  std::int64_t coefficient(const std::string& id) const {
    auto it = terms_.find(id);
    return it == terms_.end() ? 0 : it->second.coeff;
  }

  std::int64_t degree() const {
    std::int64_t s = 0;
    for (const auto& [id, term] : terms_) s += term.coeff;
    return s;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Terms ordered by point id.
  const std::map<std::string, Term>& terms() const { return terms_; }

  Divisor scaled(std::int64_t k) const {
    Divisor out;
    if (k == 0) return out;
    for (const auto& [id, term] : terms_) out.terms_.emplace(id, Term{term.point, term.coeff * k});
    return out;
  }

  Divisor operator-() const { return scaled(-1); }

  friend Divisor operator+(Divisor a, const Divisor& b) {
    for (const auto& [id, term] : b.terms_) a.add_term(term.point, term.coeff);
    return a;
  }

  friend Divisor operator-(const Divisor& a, const Divisor& b) { return a + (-b); }

  friend bool operator==(const Divisor& a, const Divisor& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib) {
      if (ia->first != ib->first || ia->second.coeff != ib->second.coeff ||
          !(ia->second.point == ib->second.point)) {
        return false;
      }
    }
    return true;
  }

 private:
  std::map<std::string, Term> terms_;
};

namespace detail {

// Every stored label must agree with what its conjugate partner says about it.
inline void check_pairing(const Divisor& d) {
  for (const auto& [id, term] : d.terms()) {
    if (term.point.is_real()) {
      if (std::get<RealOn>(term.point.kind).component >= term.point.curve.mu) {
        fail(ErrorCode::MixedCurves, "real point '" + id + "' lies outside its curve");
      }
      continue;
    }
    const auto& partner = std::get<NonReal>(term.point.kind).partner;
    auto it = d.terms().find(partner);
    if (it == d.terms().end()) continue;
    const auto& other = it->second.point;
    if (other.is_real() || std::get<NonReal>(other.kind).partner != id) {
      fail(ErrorCode::MixedCurves,
           "conjugation pairing of '" + id + "' and '" + partner + "' is not an involution");
    }
  }
}

}  // namespace detail

/// c_B acting on a divisor: real points fixed, conjugate points swapped.
inline Divisor conj_divisor(const Divisor& d) {
  detail::check_pairing(d);
  Divisor out;
  for (const auto& [id, term] : d.terms()) out.add_term(conj_label(term.point), term.coeff);
  return out;
}

inline bool is_invariant(const Divisor& d) { return conj_divisor(d) == d; }

inline bool is_anti_invariant(const Divisor& d) { return conj_divisor(d) == -d; }

}  // namespace ruledforms
