#include "hookdec/characters.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

namespace hookdec::sn {

Int class_size(const CycleType& rho) {
    // n!/z, z = prod over part values i of i^m_i m_i!.
    Int z = 1;
    int run = 0;
    for (int i = 0; i < rho.length(); ++i) {
        run = (i > 0 && rho.part(i) == rho.part(i - 1)) ? run + 1 : 1;
        z = checked_mul(z, checked_mul(rho.part(i), run));
    }
    return factorial(rho.size()) / z;
}

ClassFunction::ClassFunction(int degree, std::vector<Int> values)
    : degree_(degree), values_(std::move(values)) {
    if (values_.size() != partitions_of(degree_).size())
        fail(errc::size_mismatch, "class function needs one value per cycle type");
}

Int ClassFunction::at(const CycleType& rho) const {
    if (rho.size() != degree_)
        fail(errc::size_mismatch, "cycle type degree does not match the class function");
    return values_[static_cast<std::size_t>(partition_index(rho))];
}

ClassFunction ClassFunction::operator*(const ClassFunction& other) const {
    if (degree_ != other.degree_)
        fail(errc::size_mismatch, "cannot multiply class functions of different degrees");
    std::vector<Int> prod(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i)
        prod[i] = checked_mul(values_[i], other.values_[i]);
    return ClassFunction(degree_, std::move(prod));
}

namespace {

void append_key(std::string& key, const std::vector<int>& parts) {
    for (int x : parts) {
        key += std::to_string(x);
        key += ',';
    }
    key += ';';
}

// All ways to remove a border strip of size r from outer while keeping
// the result over inner.  A strip spanning rows a..b is forced to leave
// nu_i = outer_{i+1} - 1 strictly between its end rows, so candidates are
// indexed by the row pair alone.  Yields (nu, height) pairs.
template <typename Fn>
void for_each_border_strip(const Partition& outer, const Partition& inner, int r, Fn&& yield) {
    for (int a = 0; a < outer.length(); ++a) {
        for (int b = a; b < outer.length(); ++b) {
            const int last = outer.part(a) + (b - a) - r;
            std::vector<int> parts(outer.parts().begin(), outer.parts().end());
            bool ok = last >= outer.part(b + 1) && last < outer.part(b) && last >= inner.part(b);
            for (int i = a; ok && i < b; ++i) {
                parts[static_cast<std::size_t>(i)] = outer.part(i + 1) - 1;
                if (parts[static_cast<std::size_t>(i)] < inner.part(i)) ok = false;
            }
            if (!ok) continue;
            parts[static_cast<std::size_t>(b)] = last;
            yield(Partition(std::move(parts)), b - a);
        }
    }
}

Int mn_recursive(const Partition& outer, const Partition& inner, const std::vector<int>& cycles,
                 std::size_t consumed) {
    if (consumed == cycles.size()) return 1; // sizes matched along the way, so the shape is empty

    static std::mutex cache_mutex;
    static std::unordered_map<std::string, Int> cache;
    std::string key;
    append_key(key, outer.parts());
    append_key(key, inner.parts());
    append_key(key, std::vector<int>(cycles.begin() + static_cast<std::ptrdiff_t>(consumed), cycles.end()));
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    const int r = cycles[consumed];
    Int total = 0;
    for_each_border_strip(outer, inner, r, [&](Partition nu, int height) {
        const Int sub = mn_recursive(nu, inner, cycles, consumed + 1);
        total = checked_add(total, (height % 2 == 0) ? sub : -sub);
    });

    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(std::move(key), total).first->second;
}

} // namespace

Int mn_value(const SkewShape& shape, const CycleType& rho) {
    if (rho.size() != shape.size())
        fail(errc::size_mismatch, "cycle type size must equal the number of cells");
    // Largest cycles are consumed first; any order gives the same value.
    return mn_recursive(shape.outer(), shape.inner(), rho.parts(), 0);
}

CharacterTable build_character_table(int n) {
    CharacterTable table;
    table.n = n;
    table.classes = partitions_of(n);
    for (const Partition& rho : table.classes) table.class_sizes.push_back(class_size(rho));
    for (const Partition& lambda : table.classes) {
        std::vector<Int> values;
        values.reserve(table.classes.size());
        const SkewShape shape(lambda, Partition{});
        for (const Partition& rho : table.classes) values.push_back(mn_value(shape, rho));
        table.rows.emplace_back(n, std::move(values));
    }
    return table;
}

const ClassFunction& CharacterTable::irreducible(const Partition& lambda) const {
    if (lambda.size() != n) fail(errc::size_mismatch, "row label has the wrong size");
    return rows[static_cast<std::size_t>(partition_index(lambda))];
}

namespace {

std::mutex g_cache_dir_mutex;
std::string g_cache_dir;

std::string cache_dir() {
    std::lock_guard<std::mutex> lock(g_cache_dir_mutex);
    return g_cache_dir;
}

} // namespace

void set_table_cache_dir(std::string dir) {
    std::lock_guard<std::mutex> lock(g_cache_dir_mutex);
    g_cache_dir = std::move(dir);
}

const CharacterTable& character_table(int n, int cap) {
    if (n < 0) fail(errc::index_out_of_range, "character table of negative degree");
    if (n > cap)
        fail(errc::resource_limit, "character table for n = " + std::to_string(n) +
                                       " exceeds the cap of " + std::to_string(cap));
    static std::mutex memo_mutex;
    static std::map<int, std::unique_ptr<const CharacterTable>> memo;
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(n);
        if (it != memo.end()) return *it->second;
    }
    const std::string dir = cache_dir();
    std::optional<CharacterTable> table;
    if (!dir.empty()) table = load_cached_table(dir, n);
    if (!table) {
        table = build_character_table(n);
        if (!dir.empty()) store_cached_table(dir, *table);
    }
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(n);
    if (it == memo.end())
        it = memo.emplace(n, std::make_unique<const CharacterTable>(std::move(*table))).first;
    return *it->second;
}

Rational inner_product(const ClassFunction& phi, const ClassFunction& psi) {
    if (phi.degree() != psi.degree())
        fail(errc::size_mismatch, "inner product needs class functions of one degree");
    const int n = phi.degree();
    const std::vector<Partition>& classes = partitions_of(n);
    Int sum = 0;
    for (std::size_t i = 0; i < classes.size(); ++i)
        sum = checked_add(sum, checked_mul(class_size(classes[i]),
                                           checked_mul(phi.values()[i], psi.values()[i])));
    return Rational(sum, factorial(n));
}

Int integral_inner_product(const ClassFunction& phi, const ClassFunction& psi) {
    const Rational r = inner_product(phi, psi);
    if (r.denominator() != 1) fail(errc::size_mismatch, "inner product is not integral");
    return r.numerator();
}

Int kronecker(const Partition& lambda, const Partition& mu, const Partition& nu, int table_cap) {
    if (lambda.size() != mu.size() || lambda.size() != nu.size())
        fail(errc::size_mismatch, "Kronecker coefficient needs three partitions of one size");
    const CharacterTable& table = character_table(lambda.size(), table_cap);
    return integral_inner_product(table.irreducible(lambda) * table.irreducible(mu),
                                  table.irreducible(nu));
}

namespace {

std::pair<int, int> product_stats(const Partition& lambda, const Partition& mu, int table_cap) {
    static std::mutex cache_mutex;
    static std::map<std::pair<Partition, Partition>, std::pair<int, int>> cache;
    const auto key = std::make_pair(std::min(lambda, mu), std::max(lambda, mu));
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    int height = 0, width = 0;
    for (const Partition& nu : partitions_of(lambda.size()))
        if (kronecker(lambda, mu, nu, table_cap) != 0) {
            height = std::max(height, nu.length());
            width = std::max(width, nu.part(0));
        }
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(key, std::make_pair(height, width)).first->second;
}

} // namespace

int product_height(const Partition& lambda, const Partition& mu, int table_cap) {
    return product_stats(lambda, mu, table_cap).first;
}

int product_width(const Partition& lambda, const Partition& mu, int table_cap) {
    return product_stats(lambda, mu, table_cap).second;
}

Int diagonal_restriction_value(const Partition& lambda, const CycleType& rho) {
    if (lambda.size() != 2 * rho.size())
        fail(errc::size_mismatch, "diagonal restriction needs |lambda| = 2|rho|");
    std::vector<int> doubled;
    for (int i = 0; i < rho.length(); ++i) {
        doubled.push_back(rho.part(i));
        doubled.push_back(rho.part(i));
    }
    return mn_value(SkewShape(lambda, Partition{}), CycleType(std::move(doubled)));
}

} // namespace hookdec::sn
