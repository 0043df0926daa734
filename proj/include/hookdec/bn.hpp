#pragma once

#include "hookdec/lr.hpp"
#include "hookdec/partition.hpp"

namespace hookdec::bn {

/// Dimension of the irreducible labeled (mu, nu), |mu| + |nu| = n:
/// C(n, |nu|) f^mu f^nu.
Int bipartition_dimension(const Bipartition& b);

/// Character value at the class of the distinguished reflection:
/// C(n-1, |nu|) f^mu f^nu - C(n-1, |nu|-1) f^mu f^nu.  Needs n >= 1.
Int sigma1_value(const Bipartition& b);

/// n - 2|nu|: the scaled reflection eigenvalue n * sigma1 / dim.
Int central_eigenvalue(const Bipartition& b);

/// Character of the restriction to S_n: the Schur expansion of the skew
/// shape first (+) second.
lr::SchurExpansion restrict_to_sn(const Bipartition& b);

enum class D2Variant { trivial, sign };

/// For every (mu, nu) of total size n, the restriction contains the
/// trivial character exactly once iff both components are rows (trivial
/// variant) resp. the sign character iff both are columns (sign variant).
bool check_d2(int n, D2Variant variant, int cap = 5);

/// The four dimension sums (over 2lambda, its conjugate, the diagonal
/// doubling of distinct lambda, and its conjugate) all equal
/// (2n-1)!! = (2n)!/(2^n n!).
bool check_d0_dimensions(int n, int cap = 4);

} // namespace hookdec::bn
