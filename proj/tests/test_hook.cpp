#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hookdec/hook.hpp"
#include "hookdec/oracle.hpp"

using namespace hookdec;
using namespace hookdec::hook;

namespace {

bool all_parts_even(const Partition& p) {
    for (int part : p.parts())
        if (part % 2 != 0) return false;
    return true;
}

} // namespace

TEST_CASE("hook dimensions") {
    CHECK(hook_binomial(4, 0) == 1);
    CHECK(hook_binomial(4, 2) == 3);
    CHECK(hook_binomial(1, 0) == 1);
    CHECK_THROWS_AS(hook_binomial(4, 4), Error);
    CHECK_THROWS_AS(hook_binomial(4, -1), Error);
}

TEST_CASE("dual form evaluation toggle") {
    REQUIRE(dual_form_check());
    CHECK(mult_rect(Partition{2, 1}, Partition{2, 1}, 1) == 2);
    set_dual_form_check(false);
    CHECK_FALSE(dual_form_check());
    CHECK(mult_rect(Partition{2, 1}, Partition{2, 1}, 1) == 2);
    set_dual_form_check(true);
}

// Every mult_* call below also exercises the prefix/suffix cross-check,
// which throws on any disagreement between the two alternating forms.

TEST_CASE("rectangular multiplicities") {
    CHECK(mult_rect(Partition{2, 1}, Partition{2, 1}, 1) == 2);
    CHECK_THROWS_AS(mult_rect(Partition{2}, Partition{1}, 0), Error);
    CHECK_THROWS_AS(mult_rect(Partition{2}, Partition{2}, 2), Error);

    // t = 0 and t = n-1 pick out equal and conjugate pairs.
    for (int n = 1; n <= 6; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (const Partition& mu : partitions_of(n)) {
                CHECK(mult_rect(lambda, mu, 0) == (lambda == mu ? 1 : 0));
                CHECK(mult_rect(lambda, mu, n - 1) == (lambda == conjugate(mu) ? 1 : 0));
            }

    // Full agreement with the character-table route.
    for (int n = 1; n <= 5; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (const Partition& mu : partitions_of(n))
                for (int t = 0; t < n; ++t) {
                    CAPTURE(lambda);
                    CAPTURE(mu);
                    CAPTURE(t);
                    CHECK(mult_rect(lambda, mu, t) ==
                          oracle::oracle_rect_multiplicity(lambda, mu, t));
                }
}

TEST_CASE("closed forms next to the boundary") {
    for (int n = 2; n <= 6; ++n) CHECK(corner_formula_check(n));
    CHECK_THROWS_AS(corner_formula_check(1), Error);
    CHECK_THROWS_AS(corner_formula_check(8), Error);
}

TEST_CASE("conjugation duality") {
    for (int n = 1; n <= 5; ++n) CHECK(check_duality_rect(n));
    CHECK_THROWS_AS(check_duality_rect(8), Error);
}

TEST_CASE("support at the second hook index") {
    // On the diagonal, t = 2 picks up exactly the non-rectangles.
    for (int n = 3; n <= 7; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            CAPTURE(format_partition(lambda));
            CHECK((mult_rect(lambda, lambda, 2) > 0) == (inner_corners(lambda) >= 2));
        }

    // Off the diagonal a nonzero value forces sigma(2) > 0, hence some
    // alpha of n-2 with lambda/alpha a horizontal 2-strip and mu/alpha a
    // vertical one (or the other way around).
    const Partition row2({2});
    const Partition col2({1, 1});
    for (int n = 3; n <= 6; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (const Partition& mu : partitions_of(n)) {
                if (lambda == mu || mult_rect(lambda, mu, 2) == 0) continue;
                bool strips = false;
                for (const Partition& alpha : partitions_of(n - 2))
                    if ((lr::lr_coefficient(lambda, alpha, row2) > 0 &&
                         lr::lr_coefficient(mu, alpha, col2) > 0) ||
                        (lr::lr_coefficient(lambda, alpha, col2) > 0 &&
                         lr::lr_coefficient(mu, alpha, row2) > 0)) {
                        strips = true;
                        break;
                    }
                CAPTURE(format_partition(lambda));
                CAPTURE(format_partition(mu));
                CHECK(strips);
            }

    // The implication is strict: (4)/(2) and (3,1)/(2) are such a strip
    // pair, yet the alternating sum cancels (sigma(2) = sigma(1) = 1).
    CHECK(lr::lr_coefficient(Partition({4}), row2, row2) == 1);
    CHECK(lr::lr_coefficient(Partition({3, 1}), row2, col2) == 1);
    CHECK(mult_rect(Partition({4}), Partition({3, 1}), 2) == 0);

    // Mirror statement at t = n-3, through the conjugation duality.
    for (int n = 4; n <= 6; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            const Partition flipped = conjugate(lambda);
            CHECK((mult_rect(lambda, flipped, n - 3) > 0) == (inner_corners(lambda) >= 2));
        }
}

TEST_CASE("distance bounds on the support") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= n; ++k)
            for (int m = 1; m <= n; ++m) CHECK(check_distance_bounds(n, k, m));
    CHECK(check_distance_bounds(5, 2, 2));
    CHECK_THROWS_AS(check_distance_bounds(3, 0, 1), Error);
    CHECK_THROWS_AS(check_distance_bounds(8, 2, 2), Error);
}

TEST_CASE("symmetric square multiplicities") {
    CHECK(mult_sym_square(Partition{2}) == 1);
    CHECK(mult_sym_square(Partition{1, 1}) == 1);
    CHECK(mult_sym_square(Partition{2, 2}) == 2);
    CHECK_THROWS_AS(mult_sym_square(Partition{2, 1}), Error);
    CHECK_THROWS_AS(mult_sym_square_graded(Partition{2}, 2), Error);

    for (int n = 1; n <= 3; ++n)
        for (const Partition& lambda : partitions_of(2 * n))
            CHECK(mult_sym_square(lambda) == oracle::oracle_sym_square(lambda));

    for (int n = 1; n <= 4; ++n)
        for (const Partition& lambda : partitions_of(2 * n)) {
            CAPTURE(lambda);
            // Extreme grades detect doubled rows and doubled columns.
            CHECK(mult_sym_square_graded(lambda, 0) == (all_parts_even(lambda) ? 1 : 0));
            CHECK(mult_sym_square_graded(lambda, n) ==
                  (all_parts_even(conjugate(lambda)) ? 1 : 0));
            Int total = 0;
            for (int i = 0; i <= n; ++i) total += mult_sym_square_graded(lambda, i);
            CHECK(total == mult_sym_square(lambda));
        }
}

TEST_CASE("square hook multiplicities") {
    CHECK(mult_hook_square(Partition{2, 2}, 0) == 2);
    CHECK(mult_hook_square(Partition{2, 2}, 1) == 0);
    CHECK(mult_hook_square(Partition{2, 1, 1}, 1) == 2);
    CHECK_THROWS_AS(mult_hook_square(Partition{2, 1}, 0), Error);
    CHECK_THROWS_AS(mult_hook_square(Partition{2}, 1), Error);
    CHECK_THROWS_AS(mult_hook_square_graded(Partition{2}, 0, -1), Error);

    // The t = 0 component is the whole symmetric square.
    for (int n = 1; n <= 4; ++n)
        for (const Partition& lambda : partitions_of(2 * n))
            CHECK(mult_hook_square(lambda, 0) == mult_sym_square(lambda));

    for (int n = 1; n <= 3; ++n)
        for (const Partition& lambda : partitions_of(2 * n))
            for (int t = 0; t < n; ++t) {
                CAPTURE(lambda);
                CAPTURE(t);
                CHECK(mult_hook_square(lambda, t) == oracle::oracle_hook_square(lambda, t));
                Int total = 0;
                for (int j = 0; j <= n; ++j) total += mult_hook_square_graded(lambda, t, j);
                CHECK(total == mult_hook_square(lambda, t));
            }
}

TEST_CASE("rectangular tables") {
    const MultiplicityTable table = mult_rect_table(3, 2, 2, 1);
    CHECK(table.context.kind == "rect");
    CHECK(table.context.n == 3);
    REQUIRE(table.entries.size() == 3);
    CHECK(table.entries[0].lambda == Partition{3});
    CHECK(table.entries[0].mu == Partition{2, 1});
    CHECK(table.entries[0].mult == 2);
    CHECK(table.entries[1].lambda == Partition{2, 1});
    CHECK(table.entries[1].mu == Partition{3});
    CHECK(table.entries[1].mult == 2);
    CHECK(table.entries[2].lambda == Partition{2, 1});
    CHECK(table.entries[2].mu == Partition{2, 1});
    CHECK(table.entries[2].mult == 2);

    CHECK_THROWS_AS(mult_rect_table(3, 0, 2, 1), Error);

    // Zero entries never appear, and restricting the bounds filters rows.
    for (const TableEntry& e : mult_rect_table(4, 4, 4, 2).entries) {
        CHECK(e.mult != 0);
        REQUIRE(e.mu.has_value());
        CHECK(e.mult == mult_rect(e.lambda, *e.mu, 2));
    }
    for (const TableEntry& e : mult_rect_table(4, 2, 3, 2).entries) {
        CHECK(e.lambda.length() <= 2);
        CHECK(e.mu->length() <= 3);
    }
}

TEST_CASE("square tables") {
    const MultiplicityTable table = mult_square_table(2, 0, 0, std::nullopt);
    CHECK(table.context.kind == "square");
    REQUIRE(table.entries.size() == 5);
    CHECK(table.entries[0].lambda == Partition{4});
    CHECK(table.entries[0].mult == 1);
    CHECK(table.entries[1].lambda == Partition{3, 1});
    CHECK(table.entries[1].mult == 1);
    CHECK(table.entries[2].lambda == Partition{2, 2});
    CHECK(table.entries[2].mult == 2);
    CHECK(table.entries[3].lambda == Partition{2, 1, 1});
    CHECK(table.entries[3].mult == 1);
    CHECK(table.entries[4].lambda == Partition{1, 1, 1, 1});
    CHECK(table.entries[4].mult == 1);
    for (const TableEntry& e : table.entries) CHECK(!e.mu.has_value());

    const MultiplicityTable bounded = mult_square_table(2, 1, 0, std::nullopt);
    REQUIRE(bounded.entries.size() == 1);
    CHECK(bounded.entries[0].lambda == Partition{4});

    // A graded table slices the ungraded one.
    const MultiplicityTable graded = mult_square_table(2, 0, 0, 0);
    for (const TableEntry& e : graded.entries)
        CHECK(e.mult == mult_hook_square_graded(e.lambda, 0, 0));

    CHECK_THROWS_AS(mult_square_table(2, -1, 0, std::nullopt), Error);
}
