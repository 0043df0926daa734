#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "hookdec/partition.hpp"

namespace hookdec::sn {

using CycleType = Partition;
using Rational = boost::rational<Int>;

/// Size of the conjugacy class of cycle type rho in S_n, n!/z(rho).
Int class_size(const CycleType& rho);

/// Integer-valued class function on S_n, values indexed by the cycle
/// types of n in canonical (decreasing lexicographic) order.
class ClassFunction {
public:
    ClassFunction(int degree, std::vector<Int> values);

    int degree() const { return degree_; }
    const std::vector<Int>& values() const { return values_; }
    Int at(const CycleType& rho) const;

    /// Pointwise product.
    ClassFunction operator*(const ClassFunction& other) const;

    bool operator==(const ClassFunction&) const = default;

private:
    int degree_;
    std::vector<Int> values_;
};

/// Character value of the (skew) shape at cycle type rho, by border strip
/// removal.  Requires |rho| equal to the number of cells of the shape.
Int mn_value(const SkewShape& shape, const CycleType& rho);

inline constexpr int kDefaultTableCap = 8;

struct CharacterTable {
    int n = 0;
    std::vector<Partition> classes;     // canonical order; also the row labels
    std::vector<Int> class_sizes;
    std::vector<ClassFunction> rows;    // rows[i] is the character of classes[i]

    const ClassFunction& irreducible(const Partition& lambda) const;
};

/// Full table for S_n, memoized per n.  Throws ResourceLimit when n
/// exceeds cap; pass a larger cap explicitly to go beyond the default.
const CharacterTable& character_table(int n, int cap = kDefaultTableCap);

/// (1/n!) sum over classes of |class| phi psi, as an exact rational.
Rational inner_product(const ClassFunction& phi, const ClassFunction& psi);

/// inner_product when the result is known to be integral (throws otherwise).
Int integral_inner_product(const ClassFunction& phi, const ClassFunction& psi);

/// Kronecker coefficient <chi^lambda chi^mu chi^nu, 1>, symmetric in all
/// three arguments.
Int kronecker(const Partition& lambda, const Partition& mu, const Partition& nu,
              int table_cap = kDefaultTableCap);

/// Largest length (resp. largest first part) among nu with nonzero
/// coefficient in chi^lambda chi^mu.  Cached per argument pair.
int product_height(const Partition& lambda, const Partition& mu,
                   int table_cap = kDefaultTableCap);
int product_width(const Partition& lambda, const Partition& mu,
                  int table_cap = kDefaultTableCap);

/// chi^lambda evaluated on the doubled cycle type rho u rho, for lambda
/// of size 2|rho|: the character value seen on the diagonal copy of S_n.
Int diagonal_restriction_value(const Partition& lambda, const CycleType& rho);

/// Table construction without the memo layer (used by the disk cache).
CharacterTable build_character_table(int n);

/// Optional persistent table cache.  Files are versioned JSON protected
/// by a checksum; anything unreadable or mismatched counts as a miss.
void set_table_cache_dir(std::string dir); // empty string disables
std::optional<CharacterTable> load_cached_table(const std::string& dir, int n);
bool store_cached_table(const std::string& dir, const CharacterTable& table);

} // namespace hookdec::sn
