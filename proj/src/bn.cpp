#include "hookdec/bn.hpp"

#include <string>

namespace hookdec::bn {

Int bipartition_dimension(const Bipartition& b) {
    const Int fs = checked_mul(num_standard_tableaux(b.first), num_standard_tableaux(b.second));
    return checked_mul(binomial(b.total_size(), b.second.size()), fs);
}

Int sigma1_value(const Bipartition& b) {
    const int n = b.total_size();
    if (n < 1) fail(errc::index_out_of_range, "sigma1 needs total size at least 1");
    const int k = b.second.size();
    const Int fs = checked_mul(num_standard_tableaux(b.first), num_standard_tableaux(b.second));
    return checked_sub(checked_mul(binomial(n - 1, k), fs), checked_mul(binomial(n - 1, k - 1), fs));
}

Int central_eigenvalue(const Bipartition& b) {
    return b.total_size() - 2 * b.second.size();
}

lr::SchurExpansion restrict_to_sn(const Bipartition& b) {
    return lr::skew_schur_expansion(oplus(b.first, b.second));
}

bool check_d2(int n, D2Variant variant, int cap) {
    if (n < 1) fail(errc::index_out_of_range, "check needs n >= 1");
    if (n > cap)
        fail(errc::resource_limit, "restriction check for n = " + std::to_string(n) +
                                       " exceeds the cap of " + std::to_string(cap));
    const Partition target = variant == D2Variant::trivial
                                 ? Partition{std::vector<int>{n}}
                                 : Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const Bipartition& b : enumerate_bipartitions(n)) {
        const bool expect_one = variant == D2Variant::trivial
                                    ? b.first.length() <= 1 && b.second.length() <= 1
                                    : b.first.part(0) <= 1 && b.second.part(0) <= 1;
        if (restrict_to_sn(b).coefficient(target) != (expect_one ? 1 : 0)) return false;
    }
    return true;
}

bool check_d0_dimensions(int n, int cap) {
    if (n < 0) fail(errc::index_out_of_range, "check needs n >= 0");
    if (n > cap)
        fail(errc::resource_limit, "dimension sum check for n = " + std::to_string(n) +
                                       " exceeds the cap of " + std::to_string(cap));
    Int rows = 0, rows_conj = 0, diag = 0, diag_conj = 0;
    for (const Partition& lambda : partitions_of(n)) {
        rows = checked_add(rows, num_standard_tableaux(double_rows(lambda)));
        rows_conj = checked_add(rows_conj, num_standard_tableaux(conjugate(double_rows(lambda))));
        if (has_distinct_parts(lambda)) {
            diag = checked_add(diag, num_standard_tableaux(double_diagonal(lambda)));
            diag_conj =
                checked_add(diag_conj, num_standard_tableaux(conjugate(double_diagonal(lambda))));
        }
    }
    const Int matchings = double_factorial_odd(n);
    return rows == matchings && rows_conj == matchings && diag == matchings &&
           diag_conj == matchings;
}

} // namespace hookdec::bn
