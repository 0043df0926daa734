#pragma once

#include <vector>

#include "hookdec/characters.hpp"
#include "hookdec/partition.hpp"

// Brute-force character-theoretic recomputations of the multiplicities
// produced by the formula layer.  Everything here is built from class
// sums and explicit enumeration only; this translation unit must stay
// independent of the tableau-counting engine so that agreement between
// the two routes is meaningful evidence.

namespace hookdec::oracle {

/// C(n-1,t) <chi^lambda chi^mu chi^{(n-t,1^t)}, 1>, straight from the
/// character table.
Int oracle_rect_multiplicity(const Partition& lambda, const Partition& mu, int t, int cap = 6);

/// Multiplicity of chi^lambda (lambda of 2n) in the character of S_2n on
/// perfect matchings twisted through the diagonal S_n: the class-sum
/// average of the doubled-cycle-type values of chi^lambda.
Int oracle_sym_square(const Partition& lambda, int cap = 4);

/// Same average against the hook character chi^{(n-t,1^t)} of S_n, scaled
/// by C(n-1,t).
Int oracle_hook_square(const Partition& lambda, int t, int cap = 4);

/// Canonical representative of the class of cycle type rho: cycles laid
/// out left to right in decreasing length over 0..n-1.
std::vector<int> class_representative(const sn::CycleType& rho);

/// All perfect matchings of {0, ..., points-1} as partner arrays.
std::vector<std::vector<int>> all_perfect_matchings(int points);

/// Number of matchings fixed by the permutation (as a partner-array count).
Int count_fixed_matchings(const std::vector<int>& perm,
                          const std::vector<std::vector<int>>& matchings);

/// Character of S_2n acting on perfect matchings of 2n points, evaluated
/// on one canonical representative per class.
sn::ClassFunction oracle_matching_character(int n, int cap = 4);

/// The matching character decomposes as the multiplicity-one sum of
/// chi^{2 lambda} over lambda of n.
bool verify_d0a(int n, int cap = 4);

} // namespace hookdec::oracle
