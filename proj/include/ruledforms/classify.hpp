#pragma once

// Complete deformation invariants, the equivalence decision, canonical normal
// forms, realization of invariants and enumeration of all classes.
//
// Odd n: (curve type, degree). Even n over a real base: (quintuple, degree).
// Even n over an empty real base: (curve type, degree, quotient bit).

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "ruledforms/curve_top.hpp"
#include "ruledforms/error.hpp"
#include "ruledforms/presentation.hpp"
#include "ruledforms/topology.hpp"

namespace ruledforms {

struct OddDimKey {
  CurveTopType curve;
  int n = 3;
  int d = 0;
  auto operator<=>(const OddDimKey&) const = default;
};

struct EvenDimRealBaseKey {
  CurveTopType curve;
  int n = 2;
  int t = 0;
  int k = 0;
  int d = 0;
  auto operator<=>(const EvenDimRealBaseKey&) const = default;
};

struct EvenDimEmptyBaseKey {
  CurveTopType curve;
  int n = 2;
  int d = 0;
  int q = 0;
  auto operator<=>(const EvenDimEmptyBaseKey&) const = default;
};

using DefClassKey = std::variant<OddDimKey, EvenDimRealBaseKey, EvenDimEmptyBaseKey>;

/// Throws InvalidKey unless the key satisfies its variant's invariants.
inline void check_key(const DefClassKey& key) {
  auto bad = [](const std::string& msg) { fail(ErrorCode::InvalidKey, msg); };
  std::visit(
      [&](const auto& k) {
        if (!validate_curve_type(k.curve)) bad("invalid curve type");
        if (k.n < 2) bad("n must be at least 2");
        if (k.d < 0 || k.d >= k.n) bad("d must lie in [0, n)");
      },
      key);
  if (const auto* k = std::get_if<OddDimKey>(&key)) {
    if (k->n % 2 == 0) bad("odd_dim key with even n");
  } else if (const auto* k = std::get_if<EvenDimRealBaseKey>(&key)) {
    if (k->n % 2 != 0) bad("even_dim_real_base key with odd n");
    if (k->curve.mu == 0) bad("even_dim_real_base key needs mu > 0");
    if (!allowable(make_quintuple(k->t, k->k, k->curve))) bad("quintuple is not allowable");
    if ((k->d - k->k) % 2 != 0) bad("d != k mod 2");
  } else if (const auto* k = std::get_if<EvenDimEmptyBaseKey>(&key)) {
    if (k->n % 2 != 0) bad("even_dim_empty_base key with odd n");
    if (k->curve.mu != 0) bad("even_dim_empty_base key needs mu = 0");
    if (k->d % 2 != 0) bad("d must be even over an empty real base");
    if (k->q != 0 && k->q != 1) bad("q must be 0 or 1");
  }
}

inline DefClassKey key_of(const Presentation& p) {
  const int d = static_cast<int>(degree(p).value);
  if (p.n() % 2 != 0) return OddDimKey{p.base(), p.n(), d};
  if (p.base().mu > 0) {
    auto topo = real_part_topology(p);
    return EvenDimRealBaseKey{p.base(), p.n(), topo.t, topo.k, d};
  }
  auto qc = quotient_class(p);
  return EvenDimEmptyBaseKey{p.base(), p.n(), d, qc.q};
}

inline bool equivalent(const Presentation& a, const Presentation& b) {
  return key_of(a) == key_of(b);
}

// ---------------------------------------------------------------------------
// Canonical presentations

/// A presentation in reduced shape: rank-1 records only, at most one real
/// record per component, and the conjugate-record count in the canonical
/// range of its case.
class CanonicalPresentation {
 public:
  const Presentation& presentation() const { return value_; }
  operator const Presentation&() const { return value_; }

  friend bool operator==(const CanonicalPresentation&, const CanonicalPresentation&) = default;

 private:
  explicit CanonicalPresentation(Presentation p) : value_(std::move(p)) {}

  friend CanonicalPresentation normal_form(const Presentation& p);
  friend CanonicalPresentation realize(const DefClassKey& key);

  Presentation value_;
};

inline bool is_canonical(const Presentation& p) {
  const int n = p.n();
  int conj = 0;
  for (const auto& [rec, count] : p.transforms()) {
    if (rec.rank != 1) return false;
    if (is_real_locus(rec.locus)) {
      if (count != 1 || n % 2 != 0) return false;
    } else {
      conj = count;
    }
  }
  if (n % 2 != 0) return conj <= n - 1;
  if (p.base().mu > 0) {
    const auto& plus = std::get<SplitPM>(p.structure()).plus_set;
    int expect = 0;
    for (int c : plus) {
      if (c != expect++) return false;
    }
    // Real records sit on a prefix of the plus set.
    bool seen_gap = false;
    for (int c : plus) {
      const bool has = p.count(real_rec(c)) > 0;
      if (has && seen_gap) return false;
      if (!has) seen_gap = true;
    }
    return 2 * conj <= n - 2;
  }
  if (p.base().g % 2 != 0) {
    return std::get<EmptyBase>(p.structure()).label == EmptyBaseLabel::ConjLike &&
           conj <= n - 1;
  }
  return 2 * conj <= n - 2;
}

namespace detail {

inline Presentation split_to_rank_one(Presentation cur) {
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [rec, count] : cur.transforms()) {
      if (rec.rank == 1) continue;
      if (is_real_locus(rec.locus) && cur.n() % 2 == 0) {
        fail(ErrorCode::UnsupportedRank, "real records of rank > 1 in even dimension");
      }
      cur = move_split(cur, rec.locus, rec.rank, 1);
      changed = true;
      break;
    }
  }
  return cur;
}

inline Presentation drop_conj_groups(Presentation cur, int group) {
  while (cur.count(conj_rec()) >= group) {
    cur = move_remove_full(cur, TransformMultiset{{conj_rec(), group}});
  }
  return cur;
}

// Moves odd-parity plus components first, then even-parity plus components,
// then the rest, so plus_set becomes {0..t+k-1} with real records on 0..k-1.
inline Presentation sort_components(Presentation cur) {
  const int mu = cur.base().mu;
  auto rank_of = [&](const Presentation& p, int c) {
    if (!p.has_real_part_over(c)) return 2;
    return p.count(real_rec(c)) % 2 != 0 ? 0 : 1;
  };
  for (int i = 0; i < mu; ++i) {
    int best = i;
    for (int j = i + 1; j < mu; ++j) {
      if (rank_of(cur, j) < rank_of(cur, best)) best = j;
    }
    if (best != i) cur = move_swap_components(cur, i, best);
  }
  return cur;
}

}  // namespace detail

/// Reduces p by deformation-preserving moves to its canonical presentation.
inline CanonicalPresentation normal_form(const Presentation& p) {
  const int n = p.n();
  Presentation cur = detail::split_to_rank_one(p);

  if (n % 2 != 0) {
    for (int c : cur.real_components()) {
      if (cur.count(real_rec(c)) % 2 != 0) {
        cur = move_insert_full(cur, TransformMultiset{{real_rec(c), n}});
      }
      while (cur.count(real_rec(c)) >= 2) cur = move_real_to_conj(cur, c);
    }
    return CanonicalPresentation(detail::drop_conj_groups(std::move(cur), n));
  }

  if (cur.base().mu > 0) {
    for (int c : cur.real_components()) {
      while (cur.count(real_rec(c)) >= 2) cur = move_real_to_conj(cur, c);
    }
    cur = detail::drop_conj_groups(std::move(cur), n / 2);
    return CanonicalPresentation(detail::sort_components(std::move(cur)));
  }

  cur = detail::drop_conj_groups(std::move(cur), n);
  const bool c0 = std::get<EmptyBase>(cur.structure()).label == EmptyBaseLabel::C0Like;
  if (cur.base().g % 2 != 0) {
    if (c0) cur = move_structure_flip(cur);
    return CanonicalPresentation(std::move(cur));
  }
  if (cur.count(conj_rec()) >= n / 2) {
    for (int r = 1; r < n / 2; ++r) cur = move_merge(cur, ConjPair{}, r, 1);
    cur = move_structure_flip(cur, FlipMode::Remove);
  }
  return CanonicalPresentation(std::move(cur));
}

/// The canonical presentation with the given invariants.
inline CanonicalPresentation realize(const DefClassKey& key) {
  check_key(key);
  if (const auto* k = std::get_if<OddDimKey>(&key)) {
    // 2c = d (mod n) has the unique solution c = d * (n+1)/2 mod n.
    const int c = static_cast<int>((static_cast<long long>(k->d) * ((k->n + 1) / 2)) % k->n);
    TransformMultiset t;
    detail::ms_add(t, conj_rec(), c);
    return CanonicalPresentation(Presentation(k->curve, k->n, ProductConjOdd{}, std::move(t)));
  }
  if (const auto* k = std::get_if<EvenDimRealBaseKey>(&key)) {
    SplitPM s;
    for (int c = 0; c < k->t + k->k; ++c) s.plus_set.insert(c);
    TransformMultiset t;
    for (int c = 0; c < k->k; ++c) detail::ms_add(t, real_rec(c));
    const int e = static_cast<int>(Residue::of(k->d - k->k, k->n).value);
    detail::ms_add(t, conj_rec(), e / 2);
    return CanonicalPresentation(Presentation(k->curve, k->n, std::move(s), std::move(t)));
  }
  const auto& k = std::get<EvenDimEmptyBaseKey>(key);
  TransformMultiset t;
  EmptyBase s;
  if (k.curve.g % 2 != 0) {
    detail::ms_add(t, conj_rec(), (k.d + k.q * k.n) / 2);
  } else {
    s.label = k.q != 0 ? EmptyBaseLabel::C0Like : EmptyBaseLabel::ConjLike;
    detail::ms_add(t, conj_rec(), k.d / 2);
  }
  return CanonicalPresentation(Presentation(k.curve, k.n, s, std::move(t)));
}

/// Every deformation class of real ruled manifolds of dimension n over a
/// base of the given topological type, sorted by (t, k, d, q).
inline std::vector<DefClassKey> enumerate(int n, const CurveTopType& curve) {
  require_valid(curve);
  if (n < 2) fail(ErrorCode::InvalidDimension, "dimension n must be at least 2");
  std::vector<DefClassKey> out;
  if (n % 2 != 0) {
    for (int d = 0; d < n; ++d) out.push_back(OddDimKey{curve, n, d});
    return out;
  }
  if (curve.mu > 0) {
    for (int t = 0; t <= curve.mu; ++t) {
      for (int k = 0; t + k <= curve.mu; ++k) {
        for (int d = k % 2; d < n; d += 2) out.push_back(EvenDimRealBaseKey{curve, n, t, k, d});
      }
    }
    return out;
  }
  for (int d = 0; d < n; d += 2) {
    for (int q = 0; q <= 1; ++q) out.push_back(EvenDimEmptyBaseKey{curve, n, d, q});
  }
  return out;
}

/// Valid curve types of genus g, ordered by (mu, eps).
inline std::vector<CurveTopType> curve_types_of_genus(int g) {
  std::vector<CurveTopType> out;
  for (int mu = 0; mu <= g + 1; ++mu) {
    for (auto eps : {DividingType::Dividing, DividingType::NonDividing}) {
      CurveTopType c{g, mu, eps};
      if (validate_curve_type(c)) out.push_back(c);
    }
  }
  return out;
}

}  // namespace ruledforms
