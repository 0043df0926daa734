#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "hookdec/arith.hpp"
#include "hookdec/errors.hpp"

namespace hookdec {

/// Integer partition: weakly decreasing positive parts, stored without
/// trailing zeros.  The empty partition is a first-class value of size 0.
/// part(i) is 0-indexed and returns 0 beyond the last row, which lets
/// formulas treat a partition as an infinite weakly decreasing sequence.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }

    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct FrobeniusCoordinates {
    std::vector<int> arms; // strictly decreasing, >= 0
    std::vector<int> legs; // strictly decreasing, >= 0
};

/// Pair inner <= outer (containment is validated on construction).
class SkewShape {
public:
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int size() const { return outer_.size() - inner_.size(); }

    bool operator==(const SkewShape&) const = default;

private:
    Partition outer_;
    Partition inner_;
};

struct Bipartition {
    Partition first;
    Partition second;

    int total_size() const { return first.size() + second.size(); }
    bool operator==(const Bipartition&) const = default;
};

Partition conjugate(const Partition& p);

/// mu <= lambda cell-wise (mu_i <= lambda_i for all i).
bool contains(const Partition& lambda, const Partition& mu);

/// Cell-wise minimum.
Partition intersection(const Partition& a, const Partition& b);

/// d(lambda, mu) = |lambda \ mu| = (1/2) sum |lambda_i - mu_i|, defined for
/// partitions of the same size.
int distance(const Partition& lambda, const Partition& mu);

/// Row doubling (2lambda_1, 2lambda_2, ...).
Partition double_rows(const Partition& p);

/// Diagonal doubling: for lambda with distinct parts, the partition with
/// Frobenius coordinates (lambda_1,...,lambda_k | lambda_1-1,...,lambda_k-1).
Partition double_diagonal(const Partition& p);

/// Diagonal union: skew shape with outer
/// (lambda_1+mu_1,...,lambda_k+mu_1, mu_1,...,mu_m) and inner (mu_1^k).
SkewShape oplus(const Partition& lambda, const Partition& mu);

FrobeniusCoordinates frobenius(const Partition& p);
Partition from_frobenius(const FrobeniusCoordinates& fc);

/// All partitions of n in decreasing lexicographic order, optionally
/// restricted to at most max_length parts.  This order is the canonical
/// enumeration order used everywhere (class functions, tables, output).
std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_length = std::nullopt);

/// Memoized enumerate_partitions(n) without a length bound.
const std::vector<Partition>& partitions_of(int n);

/// Position of p within partitions_of(p.size()).
int partition_index(const Partition& p);

/// Number of standard Young tableaux, by the hook length formula
/// (evaluated through prime factorization so every step stays integral).
Int num_standard_tableaux(const Partition& p);

/// Number of cells whose removal leaves a partition, i.e. the number of
/// distinct part values.
int inner_corners(const Partition& p);

bool has_distinct_parts(const Partition& p);

/// All pairs (first, second) with |first| + |second| = n, ordered by
/// |second| ascending, then each component in decreasing lex order.
std::vector<Bipartition> enumerate_bipartitions(int n);

/// Canonical text form: comma-separated parts ("3,2,1"), "-" for the
/// empty partition.  Shared by the CLI and the JSON/TSV encodings.
std::string format_partition(const Partition& p);

/// Inverse of format_partition.  Throws Error(errc::parse) on malformed
/// input, including non-decreasing part lists (never sorts silently).
Partition parse_partition(const std::string& text);

} // namespace hookdec
