#pragma once

#include <map>
#include <vector>

#include "hookdec/partition.hpp"

namespace hookdec::lr {

/// Nonnegative integer combination of Schur functions of one degree.
/// Absent keys mean coefficient zero; stored coefficients are positive.
class SchurExpansion {
public:
    explicit SchurExpansion(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    const std::map<Partition, Int>& entries() const { return entries_; }

    Int coefficient(const Partition& p) const {
        auto it = entries_.find(p);
        return it == entries_.end() ? 0 : it->second;
    }

    void add(const Partition& p, Int coeff);

    bool operator==(const SchurExpansion&) const = default;

private:
    int degree_;
    std::map<Partition, Int> entries_;
};

/// Number of semistandard fillings of the shape with the given content
/// whose reverse reading word satisfies the lattice condition.  This is
/// the raw counting routine behind every coefficient below.
Int count_lr_tableaux(const SkewShape& shape, const Partition& content);

/// Structure constant c^lambda_{mu,nu}.  Returns 0 (never throws) when
/// |mu| + |nu| != |lambda| or either factor is not contained in lambda.
/// Memoized on the canonicalized argument triple.
Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Expansion of the skew Schur function of the shape: nu -> c^outer_{inner,nu}.
SchurExpansion skew_schur_expansion(const SkewShape& shape);

/// Expansion of a product of Schur functions, built by iterated pairwise
/// multiplication.  Memoized on the sorted factor list.
SchurExpansion product_expansion(std::vector<Partition> factors);

/// Four-factor coefficient c^lambda_{a,b,c,d}; 0 unless the sizes add up.
Int extended_lr(const Partition& lambda, const Partition& a, const Partition& b,
                const Partition& c, const Partition& d);

/// sum over alpha of n-i, beta of i, of c^lambda_{alpha,beta} c^mu_{alpha,beta'}.
Int sigma_rect(const Partition& lambda, const Partition& mu, int i);

/// sum over |alpha|+|beta| = n-i and distinct-part gamma, delta with
/// |gamma|+|delta| = i of c^lambda_{2a,(2b)',2*g,(2*d)'}, for lambda of 2n.
Int sigma_square(const Partition& lambda, int i);

/// As sigma_square with the extra constraint |beta| + |delta| = j.
Int sigma_square_graded(const Partition& lambda, int i, int j);

} // namespace hookdec::lr
