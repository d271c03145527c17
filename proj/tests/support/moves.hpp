#pragma once

// Enumerates every applicable rewrite move of a presentation, used by the
// soundness properties and by the move-graph oracle.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ruledforms/presentation.hpp"

namespace ruledforms::testing {

struct MoveResult {
  std::string name;
  Presentation result;
};

inline std::vector<MoveResult> applicable_moves(const Presentation& p) {
  std::vector<MoveResult> out;
  const int n = p.n();
  const auto& t = p.transforms();

  // merge / split
  for (auto i = t.begin(); i != t.end(); ++i) {
    const auto& [a, ca] = *i;
    const bool real = is_real_locus(a.locus);
    if (real && n % 2 == 0) continue;
    for (auto j = i; j != t.end(); ++j) {
      const auto& [b, cb] = *j;
      if (b.locus != a.locus) continue;
      if (i == j && ca < 2) continue;
      if (a.rank + b.rank > n) continue;
      out.push_back({"merge", move_merge(p, a.locus, a.rank, b.rank)});
    }
    for (int first = 1; first < a.rank; ++first) {
      out.push_back({"split", move_split(p, a.locus, a.rank, first)});
    }
  }

  for (int c = 0; c < p.base().mu; ++c) {
    if (p.count(real_rec(c)) >= 2) {
      out.push_back({"cancel_real_pair", move_cancel_real_pair(p, c)});
      out.push_back({"real_to_conj", move_real_to_conj(p, c)});
    }
    if (p.has_real_part_over(c) && p.count(conj_rec()) >= 1) {
      out.push_back({"conj_to_real", move_conj_to_real(p, c)});
    }
  }

  for (const auto& sel : full_removal_candidates(p)) {
    out.push_back({"remove_full", move_remove_full(p, sel)});
  }
  for (const auto& sel : full_insertion_candidates(p)) {
    out.push_back({"insert_full", move_insert_full(p, sel)});
  }

  if (std::holds_alternative<EmptyBase>(p.structure())) {
    out.push_back({"structure_flip", move_structure_flip(p, FlipMode::Add)});
    if (p.base().g % 2 == 0 && p.count(conj_rec(n / 2)) > 0) {
      out.push_back({"structure_flip_remove", move_structure_flip(p, FlipMode::Remove)});
    }
  }

  for (int i = 0; i < p.base().mu; ++i) {
    for (int j = i + 1; j < p.base().mu; ++j) {
      out.push_back({"swap_components", move_swap_components(p, i, j)});
    }
  }
  return out;
}

}  // namespace ruledforms::testing
