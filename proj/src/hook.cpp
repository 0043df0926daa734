#include "hookdec/hook.hpp"

#include <atomic>
#include <functional>
#include <stdexcept>

namespace hookdec::hook {

Int hook_binomial(int n, int t) {
    if (t < 0 || t > n - 1)
        fail(errc::index_out_of_range, "hook index must lie in [0, n-1]");
    return binomial(n - 1, t);
}

namespace {

std::atomic<bool> g_dual_form_check{true};

// C(n-1,t) * prefix where prefix = sum_{i=0}^t (-1)^{t-i} sigma(i); the
// suffix form sums i = t+1..n with sign (-1)^{i-t-1}.  Both evaluate the
// same multiplicity, which is the cross-check.
Int alternating_mult(int n, int t, const std::function<Int(int)>& sigma) {
    if (t < 0 || t > n - 1)
        fail(errc::index_out_of_range, "hook index must lie in [0, n-1]");
    const Int scale = binomial(n - 1, t);
    Int prefix = 0;
    for (int i = 0; i <= t; ++i) {
        const Int term = sigma(i);
        prefix = checked_add(prefix, (t - i) % 2 == 0 ? term : -term);
    }
    const Int value = checked_mul(scale, prefix);
    if (g_dual_form_check.load(std::memory_order_relaxed)) {
        Int suffix = 0;
        for (int i = t + 1; i <= n; ++i) {
            const Int term = sigma(i);
            suffix = checked_add(suffix, (i - t - 1) % 2 == 0 ? term : -term);
        }
        if (checked_mul(scale, suffix) != value)
            throw std::logic_error("prefix and suffix alternating sums disagree");
    }
    return value;
}

} // namespace

void set_dual_form_check(bool enabled) {
    g_dual_form_check.store(enabled, std::memory_order_relaxed);
}

bool dual_form_check() { return g_dual_form_check.load(std::memory_order_relaxed); }

Int mult_rect(const Partition& lambda, const Partition& mu, int t) {
    if (lambda.size() != mu.size())
        fail(errc::size_mismatch, "multiplicity needs partitions of the same size");
    return alternating_mult(lambda.size(), t,
                            [&](int i) { return lr::sigma_rect(lambda, mu, i); });
}

Int mult_sym_square(const Partition& lambda) {
    if (lambda.size() % 2 != 0) fail(errc::odd_size, "partition must have even size");
    const int n = lambda.size() / 2;
    Int total = 0;
    for (int i = 0; i <= n; ++i) total = checked_add(total, mult_sym_square_graded(lambda, i));
    return total;
}

Int mult_sym_square_graded(const Partition& lambda, int i) {
    if (lambda.size() % 2 != 0) fail(errc::odd_size, "partition must have even size");
    const int n = lambda.size() / 2;
    if (i < 0 || i > n) fail(errc::index_out_of_range, "grade must lie in [0, n]");
    Int total = 0;
    for (const Partition& mu : partitions_of(n - i))
        for (const Partition& nu : partitions_of(i))
            total = checked_add(
                total, lr::lr_coefficient(lambda, double_rows(mu), conjugate(double_rows(nu))));
    return total;
}

Int mult_hook_square(const Partition& lambda, int t) {
    if (lambda.size() % 2 != 0) fail(errc::odd_size, "partition must have even size");
    return alternating_mult(lambda.size() / 2, t,
                            [&](int i) { return lr::sigma_square(lambda, i); });
}

Int mult_hook_square_graded(const Partition& lambda, int t, int j) {
    if (lambda.size() % 2 != 0) fail(errc::odd_size, "partition must have even size");
    const int n = lambda.size() / 2;
    if (j < 0 || j > n) fail(errc::index_out_of_range, "grade must lie in [0, n]");
    return alternating_mult(n, t, [&](int i) { return lr::sigma_square_graded(lambda, i, j); });
}

MultiplicityTable mult_rect_table(int n, int k, int m, int t) {
    if (k < 1 || m < 1) fail(errc::index_out_of_range, "length bounds must be positive");
    MultiplicityTable table;
    table.context = TableContext{"rect", n, k, m, t, std::nullopt};
    for (const Partition& lambda : enumerate_partitions(n, k))
        for (const Partition& mu : enumerate_partitions(n, m)) {
            const Int value = mult_rect(lambda, mu, t);
            if (value != 0) table.entries.push_back(TableEntry{lambda, mu, value});
        }
    return table;
}

MultiplicityTable mult_square_table(int n, int k, int t, std::optional<int> j) {
    if (k < 0) fail(errc::index_out_of_range, "length bound must be nonnegative");
    MultiplicityTable table;
    table.context = TableContext{"square", n, k, 0, t, j};
    const auto bound = k == 0 ? std::nullopt : std::optional<int>(k);
    for (const Partition& lambda : enumerate_partitions(2 * n, bound)) {
        const Int value =
            j ? mult_hook_square_graded(lambda, t, *j) : mult_hook_square(lambda, t);
        if (value != 0) table.entries.push_back(TableEntry{lambda, std::nullopt, value});
    }
    return table;
}

namespace {

void check_cap(int n, int cap, const char* what) {
    if (n < 0) fail(errc::index_out_of_range, "n must be nonnegative");
    if (n > cap)
        fail(errc::resource_limit, std::string(what) + " for n = " + std::to_string(n) +
                                       " exceeds the cap of " + std::to_string(cap));
}

} // namespace

bool check_duality_rect(int n, int cap) {
    check_cap(n, cap, "duality check");
    for (const Partition& lambda : partitions_of(n))
        for (const Partition& mu : partitions_of(n)) {
            const Partition mu_conj = conjugate(mu);
            for (int t = 0; t < n; ++t)
                if (mult_rect(lambda, mu, t) != mult_rect(lambda, mu_conj, n - 1 - t))
                    return false;
        }
    return true;
}

bool check_distance_bounds(int n, int k, int m, int cap) {
    check_cap(n, cap, "distance bound check");
    if (k < 1 || m < 1) fail(errc::index_out_of_range, "length bounds must be positive");
    for (const Partition& lambda : enumerate_partitions(n, k))
        for (const Partition& mu : enumerate_partitions(n, m)) {
            const Partition mu_conj = conjugate(mu);
            for (int t = 0; t < n; ++t) {
                if (mult_rect(lambda, mu, t) == 0) continue;
                if (distance(lambda, mu) > t) return false;
                if (distance(lambda, mu_conj) > n - 1 - t) return false;
                if (distance(lambda, mu) >= static_cast<Int>(k) * m) return false;
            }
        }
    return true;
}

bool corner_formula_check(int n, int cap) {
    check_cap(n, cap, "corner formula check");
    if (n < 2) fail(errc::index_out_of_range, "corner formulas need n >= 2");
    for (const Partition& lambda : partitions_of(n))
        for (const Partition& mu : partitions_of(n)) {
            const Int at_one = mult_rect(lambda, mu, 1);
            const Int expect_one = lambda == mu
                                       ? static_cast<Int>(n - 1) * (inner_corners(lambda) - 1)
                                       : (distance(lambda, mu) == 1 ? n - 1 : 0);
            if (at_one != expect_one) return false;

            const Partition mu_conj = conjugate(mu);
            const Int at_mirror = mult_rect(lambda, mu, n - 2);
            const Int expect_mirror = lambda == mu_conj
                                          ? static_cast<Int>(n - 1) * (inner_corners(lambda) - 1)
                                          : (distance(lambda, mu_conj) == 1 ? n - 1 : 0);
            if (at_mirror != expect_mirror) return false;
        }
    return true;
}

} // namespace hookdec::hook
