#include "hookdec/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hookdec {

namespace {

void validate_parts(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

std::vector<int> strip_trailing_zeros(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return parts;
}

} // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(strip_trailing_zeros(std::move(parts))) {
    validate_parts(parts_);
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!contains(outer_, inner_))
        throw std::invalid_argument("skew shape requires inner contained in outer");
}

Partition conjugate(const Partition& p) {
    std::vector<int> cols(static_cast<std::size_t>(p.part(0)), 0);
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p.part(i); ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

bool contains(const Partition& lambda, const Partition& mu) {
    for (int i = 0; i < mu.length(); ++i)
        if (mu.part(i) > lambda.part(i)) return false;
    return true;
}

Partition intersection(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    for (int i = 0; i < std::min(a.length(), b.length()); ++i)
        parts.push_back(std::min(a.part(i), b.part(i)));
    return Partition(std::move(parts));
}

int distance(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        fail(errc::size_mismatch, "distance requires partitions of the same size");
    int total = 0;
    for (int i = 0; i < std::max(lambda.length(), mu.length()); ++i)
        total += std::abs(lambda.part(i) - mu.part(i));
    return total / 2;
}

Partition double_rows(const Partition& p) {
    std::vector<int> parts = p.parts();
    for (int& x : parts) x *= 2;
    return Partition(std::move(parts));
}

Partition double_diagonal(const Partition& p) {
    if (!has_distinct_parts(p))
        fail(errc::non_distinct_parts, "diagonal doubling requires distinct parts");
    FrobeniusCoordinates fc;
    for (int i = 0; i < p.length(); ++i) {
        fc.arms.push_back(p.part(i));
        fc.legs.push_back(p.part(i) - 1);
    }
    return from_frobenius(fc);
}

SkewShape oplus(const Partition& lambda, const Partition& mu) {
    const int shift = mu.part(0);
    std::vector<int> outer;
    for (int i = 0; i < lambda.length(); ++i) outer.push_back(lambda.part(i) + shift);
    for (int i = 0; i < mu.length(); ++i) outer.push_back(mu.part(i));
    std::vector<int> inner(static_cast<std::size_t>(shift > 0 ? lambda.length() : 0), shift);
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

FrobeniusCoordinates frobenius(const Partition& p) {
    const Partition q = conjugate(p);
    FrobeniusCoordinates fc;
    for (int i = 0; p.part(i) >= i + 1; ++i) {
        fc.arms.push_back(p.part(i) - (i + 1));
        fc.legs.push_back(q.part(i) - (i + 1));
    }
    return fc;
}

Partition from_frobenius(const FrobeniusCoordinates& fc) {
    const int d = static_cast<int>(fc.arms.size());
    if (fc.legs.size() != fc.arms.size())
        throw std::invalid_argument("Frobenius coordinates need equally many arms and legs");
    for (int i = 0; i < d; ++i) {
        if (fc.arms[static_cast<std::size_t>(i)] < 0 || fc.legs[static_cast<std::size_t>(i)] < 0)
            throw std::invalid_argument("Frobenius coordinates must be nonnegative");
        if (i > 0 && (fc.arms[static_cast<std::size_t>(i)] >= fc.arms[static_cast<std::size_t>(i - 1)] ||
                      fc.legs[static_cast<std::size_t>(i)] >= fc.legs[static_cast<std::size_t>(i - 1)]))
            throw std::invalid_argument("Frobenius coordinates must be strictly decreasing");
    }
    std::vector<int> parts;
    for (int i = 0; i < d; ++i) parts.push_back(fc.arms[static_cast<std::size_t>(i)] + i + 1);
    // Rows below the diagonal are recovered from the column lengths legs_j + j.
    const int depth = d == 0 ? 0 : fc.legs[0] + 1;
    for (int i = d; i < depth; ++i) {
        int row = 0;
        for (int j = 0; j < d; ++j)
            if (fc.legs[static_cast<std::size_t>(j)] + j + 1 >= i + 1) ++row;
        parts.push_back(row);
    }
    return Partition(std::move(parts));
}

namespace {

void emit_partitions(int remaining, int max_part, std::optional<int> slots_left,
                     std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    if (slots_left && *slots_left == 0) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        emit_partitions(remaining - part, part,
                        slots_left ? std::optional<int>(*slots_left - 1) : std::nullopt, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_length) {
    if (n < 0) fail(errc::index_out_of_range, "cannot enumerate partitions of a negative integer");
    if (max_length && *max_length < 0)
        fail(errc::index_out_of_range, "negative length bound in partition enumeration");
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit_partitions(n, n, max_length, prefix, out);
    return out;
}

const std::vector<Partition>& partitions_of(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Partition>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, enumerate_partitions(n)).first;
    return it->second;
}

int partition_index(const Partition& p) {
    const std::vector<Partition>& all = partitions_of(p.size());
    auto it = std::lower_bound(all.begin(), all.end(), p,
                               [](const Partition& a, const Partition& b) { return a > b; });
    return static_cast<int>(it - all.begin());
}

namespace {

// Exponent vector of m's prime factorization, accumulated into exps with
// the given sign.  Trial division is plenty for hook lengths.
void accumulate_factorization(int m, int sign, std::vector<int>& exps) {
    for (int p = 2; p * p <= m; ++p)
        while (m % p == 0) {
            exps[static_cast<std::size_t>(p)] += sign;
            m /= p;
        }
    if (m > 1) exps[static_cast<std::size_t>(m)] += sign;
}

} // namespace

Int num_standard_tableaux(const Partition& p) {
    const int n = p.size();
    if (n == 0) return 1;
    std::vector<int> exps(static_cast<std::size_t>(n) + 1, 0);
    for (int m = 2; m <= n; ++m) accumulate_factorization(m, +1, exps);
    const Partition q = conjugate(p);
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p.part(i); ++j) {
            const int hook = (p.part(i) - j) + (q.part(j) - i) - 1;
            accumulate_factorization(hook, -1, exps);
        }
    Int r = 1;
    for (std::size_t base = 2; base < exps.size(); ++base)
        for (int e = 0; e < exps[base]; ++e) r = checked_mul(r, static_cast<Int>(base));
    return r;
}

int inner_corners(const Partition& p) {
    int corners = 0;
    for (int i = 0; i < p.length(); ++i)
        if (p.part(i) > p.part(i + 1)) ++corners;
    return corners;
}

bool has_distinct_parts(const Partition& p) {
    for (int i = 1; i < p.length(); ++i)
        if (p.part(i) == p.part(i - 1)) return false;
    return true;
}

std::vector<Bipartition> enumerate_bipartitions(int n) {
    std::vector<Bipartition> out;
    for (int second_size = 0; second_size <= n; ++second_size)
        for (const Partition& first : partitions_of(n - second_size))
            for (const Partition& second : partitions_of(second_size))
                out.push_back(Bipartition{first, second});
    return out;
}

std::string format_partition(const Partition& p) {
    if (p.empty()) return "-";
    std::string s;
    for (int i = 0; i < p.length(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(p.part(i));
    }
    return s;
}

Partition parse_partition(const std::string& text) {
    if (text == "-") return Partition{};
    if (text.empty()) fail(errc::parse, "empty partition literal");
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc() || ptr == text.data() + pos)
            fail(errc::parse, "malformed partition literal '" + text + "'");
        if (value <= 0) fail(errc::parse, "partition parts must be positive in '" + text + "'");
        if (!parts.empty() && value > parts.back())
            fail(errc::parse, "partition parts must be weakly decreasing in '" + text + "'");
        parts.push_back(value);
        pos = static_cast<std::size_t>(ptr - text.data());
        if (pos < text.size()) {
            if (text[pos] != ',') fail(errc::parse, "expected ',' in partition literal '" + text + "'");
            ++pos;
            if (pos == text.size()) fail(errc::parse, "trailing ',' in partition literal '" + text + "'");
        }
    }
    return Partition(std::move(parts));
}

} // namespace hookdec
