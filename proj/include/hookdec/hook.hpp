#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hookdec/lr.hpp"
#include "hookdec/partition.hpp"

namespace hookdec::hook {

/// Dimension C(n-1, t) of the hook weight space; 0 <= t <= n-1.
Int hook_binomial(int n, int t);

/// When enabled (the default), every alternating-sum multiplicity is
/// evaluated through both the prefix and the suffix form and the two are
/// compared; a mismatch throws std::logic_error.  Turning this off skips
/// the redundant second evaluation.
void set_dual_form_check(bool enabled);
bool dual_form_check();

/// Multiplicity of the (lambda, mu) module in the t-th hook component of
/// the n-th tensor power: C(n-1,t) * sum_{i=0}^t (-1)^{t-i} sigma_rect(i).
Int mult_rect(const Partition& lambda, const Partition& mu, int t);

/// Multiplicity of lambda (of size 2n) in the symmetric square picture
/// with i antisymmetric factors summed out:
/// sum over |mu|+|nu| = n of c^lambda_{2mu,(2nu)'}.
Int mult_sym_square(const Partition& lambda);

/// Single grade: mu of n-i, nu of i.
Int mult_sym_square_graded(const Partition& lambda, int i);

/// Hook component of the square case: C(n-1,t) alternating sum of
/// sigma_square, with the same prefix/suffix cross-check as mult_rect.
Int mult_hook_square(const Partition& lambda, int t);

/// As mult_hook_square with the grading |beta|+|delta| = j pinned.
Int mult_hook_square_graded(const Partition& lambda, int t, int j);

struct TableContext {
    std::string kind; // "rect" or "square"
    int n = 0;
    int k = 0; // max length of lambda; 0 means unbounded (square only)
    int m = 0; // max length of mu (rect only)
    int t = 0;
    std::optional<int> j;
};

struct TableEntry {
    Partition lambda;
    std::optional<Partition> mu;
    Int mult = 0;
};

/// Nonzero entries in enumeration order; zero entries are never stored.
struct MultiplicityTable {
    TableContext context;
    std::vector<TableEntry> entries;
};

/// All nonzero mult_rect values over lambda with at most k parts and mu
/// with at most m parts, in decreasing lex order (lambda outer, mu inner).
MultiplicityTable mult_rect_table(int n, int k, int m, int t);

/// Square-case table over lambda of 2n with at most k parts (k = 0 for
/// no bound); graded when j is given.
MultiplicityTable mult_square_table(int n, int k, int t, std::optional<int> j);

/// mult_rect(lambda, mu, t) == mult_rect(lambda, mu', n-1-t) for all
/// pairs and all t.
bool check_duality_rect(int n, int cap = 7);

/// Every nonzero entry (lambda with <= k parts, mu with <= m parts)
/// satisfies d(lambda, mu) <= t, d(lambda, mu') <= n-1-t and
/// d(lambda, mu) < km.
bool check_distance_bounds(int n, int k, int m, int cap = 7);

/// Closed forms at t = 1 and its mirror t = n-2: on the diagonal the
/// multiplicity is (n-1)(corners - 1); off it, (n-1) exactly when the
/// distance is 1.  Needs n >= 2.
bool corner_formula_check(int n, int cap = 7);

} // namespace hookdec::hook
