#include "hookdec/lr.hpp"

#include <algorithm>
#include <mutex>
#include <string>
#include <unordered_map>

namespace hookdec::lr {

void SchurExpansion::add(const Partition& p, Int coeff) {
    if (p.size() != degree_)
        fail(errc::size_mismatch, "expansion keys must match the expansion degree");
    if (coeff == 0) return;
    Int& slot = entries_[p];
    slot = checked_add(slot, coeff);
    if (slot == 0) entries_.erase(p);
}

namespace {

void append_key(std::string& key, const Partition& p) {
    for (int i = 0; i < p.length(); ++i) {
        key += std::to_string(p.part(i));
        key += ',';
    }
    key += ';';
}

// Backtracking over the cells of outer/inner in reverse reading order
// (rows top to bottom, each row right to left).  Rows must weakly
// increase left to right, columns strictly increase top to bottom, and
// after each placed letter v the running counts must satisfy
// count[v] <= count[v-1]; checking that prefix property at every step is
// exactly the lattice condition on the reverse reading word.
struct TableauCounter {
    const Partition& outer;
    const Partition& inner;
    const Partition* content = nullptr;        // fixed content, or null for free
    std::map<Partition, Int>* tally = nullptr; // per-content counts in free mode
    int max_letter = 0;
    std::vector<std::vector<int>> rows{};      // rows[r][c - inner_r] for placed cells
    std::vector<int> counts{};                 // counts[v] = letters v placed so far
    Int total = 0;

    void run() {
        rows.assign(static_cast<std::size_t>(outer.length()), {});
        for (int r = 0; r < outer.length(); ++r)
            rows[static_cast<std::size_t>(r)].assign(
                static_cast<std::size_t>(outer.part(r) - inner.part(r)), 0);
        counts.assign(static_cast<std::size_t>(max_letter) + 1, 0);
        place(0, outer.part(0) - 1);
    }

    int cell(int r, int c) const { return rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - inner.part(r))]; }
    void set_cell(int r, int c, int v) { rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - inner.part(r))] = v; }

    void advance(int r, int c, int& nr, int& nc) const {
        nr = r;
        nc = c - 1;
        while (nr < outer.length() && nc < inner.part(nr)) {
            ++nr;
            nc = outer.part(nr) - 1;
        }
    }

    void finish() {
        if (content) {
            total = checked_add(total, 1);
            return;
        }
        std::vector<int> parts(counts.begin() + 1, counts.end());
        Int& slot = (*tally)[Partition(std::move(parts))];
        slot = checked_add(slot, 1);
    }

    void place(int r, int c) {
        while (r < outer.length() && c < inner.part(r)) {
            ++r;
            c = outer.part(r) - 1;
        }
        if (r >= outer.length()) {
            finish();
            return;
        }
        int lo = 1, hi = max_letter;
        if (c + 1 < outer.part(r)) hi = std::min(hi, cell(r, c + 1));
        if (r > 0 && c >= inner.part(r - 1)) lo = std::max(lo, cell(r - 1, c) + 1);
        int nr, nc;
        advance(r, c, nr, nc);
        for (int v = lo; v <= hi; ++v) {
            if (v > 1 && counts[static_cast<std::size_t>(v)] >= counts[static_cast<std::size_t>(v - 1)]) continue;
            if (content && counts[static_cast<std::size_t>(v)] >= content->part(v - 1)) continue;
            ++counts[static_cast<std::size_t>(v)];
            set_cell(r, c, v);
            place(nr, nc);
            --counts[static_cast<std::size_t>(v)];
        }
    }
};

} // namespace

Int count_lr_tableaux(const SkewShape& shape, const Partition& content) {
    if (content.size() != shape.size()) return 0;
    if (shape.size() == 0) return 1;
    TableauCounter counter{shape.outer(), shape.inner()};
    counter.content = &content;
    counter.max_letter = content.length();
    counter.run();
    return counter.total;
}

Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (mu.size() + nu.size() != lambda.size()) return 0;
    if (!contains(lambda, mu) || !contains(lambda, nu)) return 0;
    // c^lambda_{mu,nu} = c^lambda_{nu,mu}, so order the pair for the cache.
    const Partition& a = std::min(mu, nu);
    const Partition& b = std::max(mu, nu);

    static std::mutex cache_mutex;
    static std::unordered_map<std::string, Int> cache;
    std::string key;
    append_key(key, lambda);
    append_key(key, a);
    append_key(key, b);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const Int value = count_lr_tableaux(SkewShape(lambda, a), b);
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(std::move(key), value).first->second;
}

SchurExpansion skew_schur_expansion(const SkewShape& shape) {
    SchurExpansion out(shape.size());
    if (shape.size() == 0) {
        out.add(Partition{}, 1);
        return out;
    }
    std::map<Partition, Int> tally;
    TableauCounter counter{shape.outer(), shape.inner()};
    counter.tally = &tally;
    counter.max_letter = shape.size();
    counter.run();
    for (const auto& [content, count] : tally) out.add(content, count);
    return out;
}

SchurExpansion product_expansion(std::vector<Partition> factors) {
    std::sort(factors.begin(), factors.end());

    static std::mutex cache_mutex;
    static std::unordered_map<std::string, SchurExpansion> cache;
    std::string key;
    for (const Partition& f : factors) append_key(key, f);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    SchurExpansion acc(0);
    acc.add(Partition{}, 1);
    for (const Partition& f : factors) {
        SchurExpansion next(acc.degree() + f.size());
        for (const Partition& lambda : partitions_of(next.degree())) {
            Int coeff = 0;
            for (const auto& [kappa, c] : acc.entries())
                coeff = checked_add(coeff, checked_mul(c, lr_coefficient(lambda, kappa, f)));
            next.add(lambda, coeff);
        }
        acc = std::move(next);
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(std::move(key), std::move(acc)).first->second;
}

Int extended_lr(const Partition& lambda, const Partition& a, const Partition& b,
                const Partition& c, const Partition& d) {
    if (a.size() + b.size() + c.size() + d.size() != lambda.size()) return 0;
    return product_expansion({a, b, c, d}).coefficient(lambda);
}

Int sigma_rect(const Partition& lambda, const Partition& mu, int i) {
    if (lambda.size() != mu.size())
        fail(errc::size_mismatch, "sigma requires partitions of the same size");
    const int n = lambda.size();
    if (i < 0 || i > n) fail(errc::index_out_of_range, "sigma index must lie in [0, n]");
    Int total = 0;
    for (const Partition& beta : partitions_of(i)) {
        const Partition beta_conj = conjugate(beta);
        for (const Partition& alpha : partitions_of(n - i)) {
            const Int left = lr_coefficient(lambda, alpha, beta);
            if (left == 0) continue;
            total = checked_add(total, checked_mul(left, lr_coefficient(mu, alpha, beta_conj)));
        }
    }
    return total;
}

namespace {

const std::vector<Partition>& distinct_partitions_of(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Partition>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<Partition> out;
        for (const Partition& p : enumerate_partitions(n))
            if (has_distinct_parts(p)) out.push_back(p);
        it = cache.emplace(n, std::move(out)).first;
    }
    return it->second;
}

int half_size(const Partition& lambda) {
    if (lambda.size() % 2 != 0)
        fail(errc::odd_size, "partition must have even size");
    return lambda.size() / 2;
}

// Shared quadruple loop: beta_size/delta_size run over the split of the
// symmetric and antisymmetric budgets, optionally pinned to |beta|+|delta| = j.
Int sigma_square_sum(const Partition& lambda, int i, std::optional<int> j) {
    const int n = half_size(lambda);
    if (i < 0 || i > n) fail(errc::index_out_of_range, "sigma index must lie in [0, n]");
    if (j && (*j < 0 || *j > n)) fail(errc::index_out_of_range, "grading index must lie in [0, n]");
    Int total = 0;
    for (int delta_size = 0; delta_size <= i; ++delta_size) {
        const int gamma_size = i - delta_size;
        for (int beta_size = 0; beta_size <= n - i; ++beta_size) {
            if (j && beta_size + delta_size != *j) continue;
            const int alpha_size = n - i - beta_size;
            for (const Partition& gamma : distinct_partitions_of(gamma_size))
                for (const Partition& delta : distinct_partitions_of(delta_size)) {
                    const Partition g2 = double_diagonal(gamma);
                    const Partition d2 = conjugate(double_diagonal(delta));
                    for (const Partition& alpha : partitions_of(alpha_size))
                        for (const Partition& beta : partitions_of(beta_size)) {
                            const Int c = extended_lr(lambda, double_rows(alpha),
                                                      conjugate(double_rows(beta)), g2, d2);
                            total = checked_add(total, c);
                        }
                }
        }
    }
    return total;
}

} // namespace

Int sigma_square(const Partition& lambda, int i) { return sigma_square_sum(lambda, i, std::nullopt); }

Int sigma_square_graded(const Partition& lambda, int i, int j) {
    return sigma_square_sum(lambda, i, j);
}

} // namespace hookdec::lr
