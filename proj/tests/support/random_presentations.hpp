#pragma once

// Seeded generators for property tests. Set RULEDFORMS_SEED to reproduce a run.

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ruledforms/classify.hpp"
#include "ruledforms/presentation.hpp"

namespace ruledforms::testing {

inline std::uint64_t seed_from_env(std::uint64_t fallback = 0x5eed2026u) {
  if (const char* s = std::getenv("RULEDFORMS_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
    }
  }
  return fallback;
}

struct GenLimits {
  int min_n = 2;
  int max_n = 6;
  int max_genus = 3;
  int max_mu = 4;
  int max_records = 6;
};

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline CurveTopType random_curve(std::mt19937_64& rng, const GenLimits& lim) {
  for (;;) {
    const int g = uniform(rng, 0, lim.max_genus);
    std::vector<CurveTopType> pool;
    for (const auto& c : curve_types_of_genus(g)) {
      if (c.mu <= lim.max_mu) pool.push_back(c);
    }
    if (!pool.empty()) return pool[uniform(rng, 0, static_cast<int>(pool.size()) - 1)];
  }
}

/// A valid presentation. Real records have rank 1 in even dimension so that
/// key_of is defined.
inline Presentation random_presentation(std::mt19937_64& rng, const GenLimits& lim,
                                        std::optional<CurveTopType> fixed_curve = std::nullopt,
                                        std::optional<int> fixed_n = std::nullopt) {
  const CurveTopType curve = fixed_curve ? *fixed_curve : random_curve(rng, lim);
  const int n = fixed_n ? *fixed_n : uniform(rng, lim.min_n, lim.max_n);
  ReferenceStructure s;
  if (n % 2 != 0) {
    s = ProductConjOdd{};
  } else if (curve.mu > 0) {
    SplitPM split;
    for (int c = 0; c < curve.mu; ++c) {
      if (uniform(rng, 0, 1) == 1) split.plus_set.insert(c);
    }
    s = split;
  } else {
    s = EmptyBase{uniform(rng, 0, 1) == 0 ? EmptyBaseLabel::ConjLike : EmptyBaseLabel::C0Like};
  }
  Presentation p(curve, n, s);
  const auto real = p.real_components();
  const int count = uniform(rng, 0, lim.max_records);
  TransformMultiset t;
  for (int i = 0; i < count; ++i) {
    if (!real.empty() && uniform(rng, 0, 1) == 1) {
      const int c = real[uniform(rng, 0, static_cast<int>(real.size()) - 1)];
      t[real_rec(c, n % 2 == 0 ? 1 : uniform(rng, 1, n - 1))] += 1;
    } else {
      t[conj_rec(uniform(rng, 1, n - 1))] += 1;
    }
  }
  return p.with_transforms(std::move(t));
}

}  // namespace ruledforms::testing
