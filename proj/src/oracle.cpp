#include "hookdec/oracle.hpp"

#include <functional>
#include <string>

namespace hookdec::oracle {

namespace {

void check_cap(int n, int cap, const char* what) {
    if (n > cap)
        fail(errc::resource_limit, std::string(what) + " for n = " + std::to_string(n) +
                                       " exceeds the cap of " + std::to_string(cap));
}

} // namespace

Int oracle_rect_multiplicity(const Partition& lambda, const Partition& mu, int t, int cap) {
    if (lambda.size() != mu.size())
        fail(errc::size_mismatch, "multiplicity needs partitions of the same size");
    const int n = lambda.size();
    if (t < 0 || t > n - 1) fail(errc::index_out_of_range, "hook index must lie in [0, n-1]");
    check_cap(n, cap, "rectangular oracle");
    std::vector<int> hook_parts{n - t};
    hook_parts.insert(hook_parts.end(), static_cast<std::size_t>(t), 1);
    return checked_mul(binomial(n - 1, t),
                       sn::kronecker(lambda, mu, Partition(std::move(hook_parts)),
                                     std::max(cap, sn::kDefaultTableCap)));
}

namespace {

// (1/n!) sum over rho of |class(rho)| * weight(rho) * chi^lambda(rho u rho).
Int diagonal_class_average(const Partition& lambda, const std::function<Int(const Partition&)>& weight) {
    const int n = lambda.size() / 2;
    Int sum = 0;
    for (const Partition& rho : partitions_of(n)) {
        const Int w = checked_mul(sn::class_size(rho), weight(rho));
        sum = checked_add(sum, checked_mul(w, sn::diagonal_restriction_value(lambda, rho)));
    }
    const Int order = factorial(n);
    if (sum % order != 0) fail(errc::size_mismatch, "class average is not integral");
    return sum / order;
}

} // namespace

Int oracle_sym_square(const Partition& lambda, int cap) {
    if (lambda.size() % 2 != 0) fail(errc::odd_size, "partition must have even size");
    check_cap(lambda.size() / 2, cap, "square oracle");
    return diagonal_class_average(lambda, [](const Partition&) { return Int{1}; });
}

Int oracle_hook_square(const Partition& lambda, int t, int cap) {
    if (lambda.size() % 2 != 0) fail(errc::odd_size, "partition must have even size");
    const int n = lambda.size() / 2;
    if (t < 0 || t > n - 1) fail(errc::index_out_of_range, "hook index must lie in [0, n-1]");
    check_cap(n, cap, "square oracle");
    std::vector<int> hook_parts{n - t};
    hook_parts.insert(hook_parts.end(), static_cast<std::size_t>(t), 1);
    const SkewShape hook_shape(Partition(std::move(hook_parts)), Partition{});
    const Int avg = diagonal_class_average(
        lambda, [&](const Partition& rho) { return sn::mn_value(hook_shape, rho); });
    return checked_mul(binomial(n - 1, t), avg);
}

std::vector<int> class_representative(const sn::CycleType& rho) {
    std::vector<int> perm(static_cast<std::size_t>(rho.size()));
    int start = 0;
    for (int i = 0; i < rho.length(); ++i) {
        const int len = rho.part(i);
        for (int x = 0; x < len; ++x)
            perm[static_cast<std::size_t>(start + x)] = start + (x + 1) % len;
        start += len;
    }
    return perm;
}

std::vector<std::vector<int>> all_perfect_matchings(int points) {
    std::vector<std::vector<int>> out;
    std::vector<int> partner(static_cast<std::size_t>(points), -1);
    // Always pair the smallest unmatched point; this visits each matching once.
    auto extend = [&](auto&& self, int matched) -> void {
        if (matched == points) {
            out.push_back(partner);
            return;
        }
        int a = 0;
        while (partner[static_cast<std::size_t>(a)] != -1) ++a;
        for (int b = a + 1; b < points; ++b) {
            if (partner[static_cast<std::size_t>(b)] != -1) continue;
            partner[static_cast<std::size_t>(a)] = b;
            partner[static_cast<std::size_t>(b)] = a;
            self(self, matched + 2);
            partner[static_cast<std::size_t>(a)] = -1;
            partner[static_cast<std::size_t>(b)] = -1;
        }
    };
    extend(extend, 0);
    return out;
}

Int count_fixed_matchings(const std::vector<int>& perm,
                          const std::vector<std::vector<int>>& matchings) {
    Int fixed = 0;
    for (const std::vector<int>& partner : matchings) {
        bool ok = true;
        for (std::size_t i = 0; i < perm.size() && ok; ++i)
            ok = perm[static_cast<std::size_t>(partner[i])] ==
                 partner[static_cast<std::size_t>(perm[i])];
        if (ok) ++fixed;
    }
    return fixed;
}

sn::ClassFunction oracle_matching_character(int n, int cap) {
    check_cap(n, cap, "matching character");
    const std::vector<std::vector<int>> matchings = all_perfect_matchings(2 * n);
    std::vector<Int> values;
    for (const Partition& rho : partitions_of(2 * n))
        values.push_back(count_fixed_matchings(class_representative(rho), matchings));
    return sn::ClassFunction(2 * n, std::move(values));
}

bool verify_d0a(int n, int cap) {
    check_cap(n, cap, "matching character decomposition");
    const sn::ClassFunction matching = oracle_matching_character(n, cap);
    const sn::CharacterTable& table =
        sn::character_table(2 * n, std::max(2 * cap, sn::kDefaultTableCap));
    for (const Partition& mu : partitions_of(2 * n)) {
        bool is_doubled_row = true;
        for (int i = 0; i < mu.length(); ++i)
            if (mu.part(i) % 2 != 0) {
                is_doubled_row = false;
                break;
            }
        const Int expected = is_doubled_row ? 1 : 0;
        if (sn::integral_inner_product(matching, table.irreducible(mu)) != expected) return false;
    }
    return true;
}

} // namespace hookdec::oracle
