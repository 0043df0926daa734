// Command line front end: exact multiplicity queries, batch tables in
// TSV or JSON, and the self-verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 parse error,
// 3 violated precondition, 4 resource limit.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hookdec/bn.hpp"
#include "hookdec/characters.hpp"
#include "hookdec/hook.hpp"
#include "hookdec/lr.hpp"
#include "hookdec/oracle.hpp"
#include "hookdec/partition.hpp"

namespace {

using namespace hookdec;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitResource = 4;

constexpr int kRectCap = 6;   // default --n cap for rectangular tables and suites
constexpr int kSquareCap = 4; // default --n cap for square tables and suites (S_8)

std::string table_to_tsv(const hook::MultiplicityTable& table) {
    const bool rect = table.context.kind == "rect";
    std::string out = rect ? "lambda\tmu\tmult\n" : "lambda\tmult\n";
    for (const hook::TableEntry& e : table.entries) {
        out += format_partition(e.lambda);
        if (rect) {
            out += '\t';
            out += format_partition(*e.mu);
        }
        out += '\t';
        out += std::to_string(e.mult);
        out += '\n';
    }
    return out;
}

nlohmann::json table_to_json(const hook::MultiplicityTable& table) {
    nlohmann::json context;
    context["kind"] = table.context.kind;
    context["n"] = table.context.n;
    if (table.context.kind == "rect") {
        context["k"] = table.context.k;
        context["m"] = table.context.m;
    } else if (table.context.k > 0) {
        context["k"] = table.context.k;
    }
    context["t"] = table.context.t;
    if (table.context.j) context["j"] = *table.context.j;

    nlohmann::json entries = nlohmann::json::array();
    for (const hook::TableEntry& e : table.entries) {
        nlohmann::json entry;
        entry["lambda"] = format_partition(e.lambda);
        if (e.mu) entry["mu"] = format_partition(*e.mu);
        entry["mult"] = e.mult;
        entries.push_back(std::move(entry));
    }
    return nlohmann::json{{"context", std::move(context)}, {"entries", std::move(entries)}};
}

void enforce_n_cap(int n, int cap, std::optional<int> unsafe_max) {
    const int effective_cap = unsafe_max ? std::max(cap, *unsafe_max) : cap;
    if (n > effective_cap)
        fail(errc::resource_limit,
             "n = " + std::to_string(n) + " exceeds the default cap of " + std::to_string(cap) +
                 " (raise it with --unsafe-max-n)");
}

// ---------------------------------------------------------------------------
// verify suites

struct VerifyReport {
    bool all_passed = true;

    // Runs check(n) for n in [lo, hi] and prints one PASS/FAIL line.
    void run(const std::string& name, int lo, int hi, const std::function<bool(int)>& check) {
        for (int n = lo; n <= hi; ++n) {
            if (!check(n)) {
                std::cout << "FAIL  " << name << "  n=" << n << '\n';
                all_passed = false;
                return;
            }
        }
        std::cout << "PASS  " << name << "  n<=" << hi << '\n';
    }
};

bool is_delta(Int value, bool expect_one) { return value == (expect_one ? 1 : 0); }

bool rect_boundary(int n) {
    for (const Partition& lambda : partitions_of(n))
        for (const Partition& mu : partitions_of(n)) {
            if (!is_delta(hook::mult_rect(lambda, mu, 0), lambda == mu)) return false;
            if (!is_delta(hook::mult_rect(lambda, mu, n - 1), lambda == conjugate(mu)))
                return false;
        }
    return true;
}

bool rect_oracle(int n) {
    for (const Partition& lambda : partitions_of(n))
        for (const Partition& mu : partitions_of(n))
            for (int t = 0; t < n; ++t)
                if (hook::mult_rect(lambda, mu, t) !=
                    oracle::oracle_rect_multiplicity(lambda, mu, t, n))
                    return false;
    return true;
}

bool rect_alternating(int n) {
    for (const Partition& lambda : partitions_of(n))
        for (const Partition& mu : partitions_of(n)) {
            Int sum = 0;
            for (int i = 0; i <= n; ++i) {
                const Int term = lr::sigma_rect(lambda, mu, i);
                sum = checked_add(sum, i % 2 == 0 ? term : -term);
            }
            if (sum != 0) return false;
        }
    return true;
}

bool square_sym_oracle(int n) {
    for (const Partition& lambda : partitions_of(2 * n))
        if (hook::mult_sym_square(lambda) != oracle::oracle_sym_square(lambda, n)) return false;
    return true;
}

bool square_sym_graded(int n) {
    for (const Partition& lambda : partitions_of(2 * n)) {
        Int total = 0;
        for (int i = 0; i <= n; ++i) total += hook::mult_sym_square_graded(lambda, i);
        if (total != hook::mult_sym_square(lambda)) return false;

        bool is_doubled = true;
        for (int r = 0; r < lambda.length(); ++r)
            if (lambda.part(r) % 2 != 0) is_doubled = false;
        if (!is_delta(hook::mult_sym_square_graded(lambda, 0), is_doubled)) return false;

        bool conj_doubled = true;
        const Partition lc = conjugate(lambda);
        for (int r = 0; r < lc.length(); ++r)
            if (lc.part(r) % 2 != 0) conj_doubled = false;
        if (!is_delta(hook::mult_sym_square_graded(lambda, n), conj_doubled)) return false;
    }
    return true;
}

bool square_hook_oracle(int n) {
    for (const Partition& lambda : partitions_of(2 * n))
        for (int t = 0; t < n; ++t)
            if (hook::mult_hook_square(lambda, t) != oracle::oracle_hook_square(lambda, t, n))
                return false;
    return true;
}

bool square_hook_graded(int n) {
    for (const Partition& lambda : partitions_of(2 * n))
        for (int t = 0; t < n; ++t) {
            Int total = 0;
            for (int j = 0; j <= n; ++j) total += hook::mult_hook_square_graded(lambda, t, j);
            if (total != hook::mult_hook_square(lambda, t)) return false;
        }
    return true;
}

bool square_duality(int n) {
    for (const Partition& lambda : partitions_of(2 * n)) {
        const Partition lc = conjugate(lambda);
        if (hook::mult_sym_square(lambda) != hook::mult_sym_square(lc)) return false;
        for (int i = 0; i <= n; ++i)
            if (hook::mult_sym_square_graded(lambda, i) !=
                hook::mult_sym_square_graded(lc, n - i))
                return false;
        for (int t = 0; t < n; ++t)
            for (int j = 0; j <= n; ++j)
                if (hook::mult_hook_square_graded(lambda, t, j) !=
                    hook::mult_hook_square_graded(lc, t, n - j))
                    return false;
    }
    return true;
}

bool square_alternating(int n) {
    for (const Partition& lambda : partitions_of(2 * n)) {
        Int sum = 0;
        for (int i = 0; i <= n; ++i) {
            const Int term = lr::sigma_square(lambda, i);
            sum = checked_add(sum, i % 2 == 0 ? term : -term);
        }
        if (sum != 0) return false;
    }
    return true;
}

bool bn_eigenvalue(int n) {
    Int dim_sq = 0;
    for (const Bipartition& b : enumerate_bipartitions(n)) {
        const Int dim = bn::bipartition_dimension(b);
        if (checked_mul(n, bn::sigma1_value(b)) != checked_mul(bn::central_eigenvalue(b), dim))
            return false;
        dim_sq = checked_add(dim_sq, checked_mul(dim, dim));
    }
    // Sum of squared dimensions is the group order 2^n n!.
    Int order = factorial(n);
    for (int i = 0; i < n; ++i) order = checked_mul(order, 2);
    return dim_sq == order;
}

bool bn_restriction_dimension(int n) {
    for (const Bipartition& b : enumerate_bipartitions(n)) {
        Int dim = 0;
        const lr::SchurExpansion expansion = bn::restrict_to_sn(b);
        for (const auto& [nu, coeff] : expansion.entries())
            dim = checked_add(dim, checked_mul(coeff, num_standard_tableaux(nu)));
        if (dim != bn::bipartition_dimension(b)) return false;
    }
    return true;
}

int run_verify(const std::string& suite, std::optional<int> max_n, std::optional<int> unsafe_max) {
    const bool unsafe = unsafe_max.has_value();
    // A specific suite rejects a --max-n above its default cap; --suite all
    // clamps each sub-suite to its own cap instead.
    if (!unsafe && max_n && suite != "all")
        enforce_n_cap(*max_n, suite == "square" ? kSquareCap : kRectCap, std::nullopt);
    const int rect_n = unsafe ? *unsafe_max : std::min(max_n.value_or(kRectCap), kRectCap);
    const int square_n = unsafe ? *unsafe_max : std::min(max_n.value_or(kSquareCap), kSquareCap);
    const int other_n = rect_n;
    // Per-check ceilings (lifted entirely in unsafe mode).
    auto ceil_at = [&](int base, int ceiling) { return unsafe ? base : std::min(base, ceiling); };

    VerifyReport report;
    if (suite == "rect" || suite == "all") {
        report.run("rect/boundary", 1, ceil_at(rect_n, 7), rect_boundary);
        report.run("rect/oracle", 1, ceil_at(rect_n, 6), rect_oracle);
        report.run("rect/alternating", 1, ceil_at(rect_n, 7), rect_alternating);
        report.run("rect/duality", 1, ceil_at(rect_n, 7),
                   [&](int n) { return hook::check_duality_rect(n, n); });
        report.run("rect/corners", 2, ceil_at(rect_n, 6),
                   [&](int n) { return hook::corner_formula_check(n, n); });
    }
    if (suite == "square" || suite == "all") {
        report.run("square/sym-oracle", 1, ceil_at(square_n, 4), square_sym_oracle);
        report.run("square/sym-graded", 1, ceil_at(square_n, 4), square_sym_graded);
        report.run("square/hook-oracle", 1, ceil_at(square_n, 4), square_hook_oracle);
        report.run("square/hook-graded", 1, ceil_at(square_n, 4), square_hook_graded);
        report.run("square/duality", 1, ceil_at(square_n, 4), square_duality);
        report.run("square/alternating", 1, ceil_at(square_n, 4), square_alternating);
    }
    if (suite == "bn" || suite == "all") {
        report.run("bn/matching-decomposition", 1, ceil_at(other_n, 3),
                   [&](int n) { return oracle::verify_d0a(n, n); });
        report.run("bn/dimension-sums", 0, ceil_at(other_n, 4),
                   [&](int n) { return bn::check_d0_dimensions(n, n); });
        report.run("bn/restriction-trivial", 1, ceil_at(other_n, 5),
                   [&](int n) { return bn::check_d2(n, bn::D2Variant::trivial, n); });
        report.run("bn/restriction-sign", 1, ceil_at(other_n, 5),
                   [&](int n) { return bn::check_d2(n, bn::D2Variant::sign, n); });
        report.run("bn/eigenvalue", 1, ceil_at(other_n, 6), bn_eigenvalue);
        report.run("bn/restriction-dimension", 1, ceil_at(other_n, 6), bn_restriction_dimension);
    }
    if (suite == "bounds" || suite == "all") {
        report.run("bounds/distance", 1, ceil_at(other_n, 6), [&](int n) {
            for (int k = 1; k <= n; ++k)
                for (int m = 1; m <= n; ++m)
                    if (!hook::check_distance_bounds(n, k, m, n)) return false;
            return true;
        });
        report.run("bounds/regev", 1, ceil_at(other_n, 6), [&](int n) {
            const int cap = std::max(n, sn::kDefaultTableCap);
            for (const Partition& lambda : partitions_of(n))
                for (const Partition& mu : partitions_of(n))
                    if (sn::product_height(lambda, mu, cap) > lambda.length() * mu.length())
                        return false;
            return true;
        });
        report.run("bounds/dvir", 1, ceil_at(other_n, 6), [&](int n) {
            const int cap = std::max(n, sn::kDefaultTableCap);
            for (const Partition& lambda : partitions_of(n))
                for (const Partition& mu : partitions_of(n)) {
                    if (sn::product_width(lambda, mu, cap) != intersection(lambda, mu).size())
                        return false;
                    if (sn::product_height(lambda, mu, cap) !=
                        intersection(lambda, conjugate(mu)).size())
                        return false;
                }
            return true;
        });
    }
    std::cout << (report.all_passed ? "all checks passed" : "some checks FAILED") << '\n';
    return report.all_passed ? 0 : kExitVerifyFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact multiplicities of irreducible modules in hook components of tensor "
                 "powers of matrix spaces"};
    app.require_subcommand(1);

    std::string lambda_text, mu_text, nu_text;
    std::string kind = "rect";
    std::string format = "tsv";
    std::string suite = "all";
    int n = 0, t = 0;
    std::optional<int> k_opt, m_opt, j_opt, max_n, unsafe_max;

    CLI::App* lr_cmd = app.add_subcommand("lr", "One Littlewood-Richardson coefficient");
    lr_cmd->add_option("--lambda", lambda_text, "outer partition")->required();
    lr_cmd->add_option("--mu", mu_text, "first factor")->required();
    lr_cmd->add_option("--nu", nu_text, "second factor")->required();

    CLI::App* mult_cmd = app.add_subcommand("mult", "One multiplicity");
    mult_cmd->add_option("--kind", kind, "rect|square|square-graded")
        ->check(CLI::IsMember({"rect", "square", "square-graded"}));
    mult_cmd->add_option("--lambda", lambda_text, "module label")->required();
    mult_cmd->add_option("--mu", mu_text, "second label (rect only)");
    mult_cmd->add_option("--t", t, "hook index")->required();
    mult_cmd->add_option("--j", j_opt, "grade (square-graded only)");

    CLI::App* table_cmd = app.add_subcommand("table", "All nonzero multiplicities for fixed n, t");
    table_cmd->add_option("--n", n, "tensor power")->required();
    table_cmd->add_option("--k", k_opt, "max rows of lambda");
    table_cmd->add_option("--m", m_opt, "max rows of mu (rectangular case)");
    table_cmd->add_option("--t", t, "hook index")->required();
    table_cmd->add_option("--j", j_opt, "grade (square case)");
    table_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"tsv", "json"}));
    table_cmd->add_option("--unsafe-max-n", unsafe_max, "lift the default n cap");

    CLI::App* verify_cmd = app.add_subcommand("verify", "Run self-checks");
    verify_cmd->add_option("--suite", suite, "all|rect|square|bn|bounds")
        ->check(CLI::IsMember({"all", "rect", "square", "bn", "bounds"}));
    verify_cmd->add_option("--max-n", max_n, "largest n to check");
    verify_cmd->add_option("--unsafe-max-n", unsafe_max,
                           "largest n to check, ignoring default caps and ceilings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    if (const char* cache_dir = std::getenv("HOOKDEC_CACHE_DIR"); cache_dir && *cache_dir)
        sn::set_table_cache_dir(cache_dir);

    try {
        if (lr_cmd->parsed()) {
            std::cout << lr::lr_coefficient(parse_partition(lambda_text), parse_partition(mu_text),
                                            parse_partition(nu_text))
                      << '\n';
            return 0;
        }
        if (mult_cmd->parsed()) {
            const Partition lambda = parse_partition(lambda_text);
            Int value = 0;
            if (kind == "rect") {
                if (mu_text.empty()) fail(errc::parse, "--kind rect requires --mu");
                value = hook::mult_rect(lambda, parse_partition(mu_text), t);
            } else if (kind == "square") {
                value = hook::mult_hook_square(lambda, t);
            } else {
                if (!j_opt) fail(errc::parse, "--kind square-graded requires --j");
                value = hook::mult_hook_square_graded(lambda, t, *j_opt);
            }
            std::cout << value << '\n';
            return 0;
        }
        if (table_cmd->parsed()) {
            hook::MultiplicityTable table;
            if (m_opt) {
                if (!k_opt) fail(errc::parse, "rectangular tables need both --k and --m");
                enforce_n_cap(n, kRectCap, unsafe_max);
                table = hook::mult_rect_table(n, *k_opt, *m_opt, t);
            } else {
                enforce_n_cap(n, kSquareCap, unsafe_max);
                table = hook::mult_square_table(n, k_opt.value_or(0), t, j_opt);
            }
            if (format == "tsv")
                std::cout << table_to_tsv(table);
            else
                std::cout << table_to_json(table).dump() << '\n';
            return 0;
        }
        return run_verify(suite, max_n, unsafe_max);
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        switch (e.code()) {
        case errc::parse: return kExitParse;
        case errc::resource_limit:
        case errc::overflow: return kExitResource;
        default: return kExitPrecondition;
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitPrecondition;
    }
}
