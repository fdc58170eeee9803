#include "antiexact/linsys.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <climits>
#include <map>

#include "antiexact/errors.hpp"

namespace antiexact {

namespace {

/// Working row over integers: entries plus rhs, content-normalized after
/// every combination step to keep the integers small.
struct WorkRow {
    std::map<int, mpz_class> entries;
    mpz_class rhs;

    bool empty_lhs() const { return entries.empty(); }

    void normalize() {
        mpz_class g = 0;
        for (const auto& [c, v] : entries) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), rhs.get_mpz_t());
        if (g == 0 || g == 1) return;
        for (auto& [c, v] : entries) v /= g;
        rhs /= g;
    }
};

WorkRow to_integer_row(const SparseRow& row) {
    mpz_class lcm = 1;
    for (const auto& [c, v] : row.entries) {
        mpz_class den(v.raw().get_den());
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    {
        mpz_class den(row.rhs.raw().get_den());
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    WorkRow out;
    for (const auto& [c, v] : row.entries) {
        mpz_class num = v.raw().get_num() * (lcm / v.raw().get_den());
        if (num != 0) out.entries.emplace(c, std::move(num));
    }
    out.rhs = row.rhs.raw().get_num() * (lcm / row.rhs.raw().get_den());
    out.normalize();
    return out;
}

}  // namespace

LinsysResult solve_sparse(const SparseSystem& sys) {
    std::vector<WorkRow> rows;
    rows.reserve(sys.rows.size());
    for (const auto& r : sys.rows) {
        for (const auto& [c, v] : r.entries)
            if (c < 0 || c >= sys.num_cols) throw Error("linsys column out of range");
        WorkRow w = to_integer_row(r);
        if (!w.empty_lhs() || w.rhs != 0) rows.push_back(std::move(w));
    }

    // Occurrence counts per column over active rows, kept incrementally so
    // pivot selection stays cheap.
    std::vector<int> col_count(static_cast<size_t>(sys.num_cols), 0);
    for (const auto& row : rows)
        for (const auto& [c, v] : row.entries) ++col_count[static_cast<size_t>(c)];

    std::vector<char> active(rows.size(), 1);
    std::vector<char> col_is_pivot(static_cast<size_t>(sys.num_cols), 0);
    std::vector<std::pair<size_t, int>> pivots;  // (row, column) in elimination order

    while (true) {
        size_t best = rows.size();
        for (size_t i = 0; i < rows.size(); ++i) {
            if (!active[i] || rows[i].empty_lhs()) continue;
            if (best == rows.size() || rows[i].entries.size() < rows[best].entries.size()) best = i;
        }
        if (best == rows.size()) break;

        int pivot_col = -1;
        int best_count = INT_MAX;
        for (const auto& [c, v] : rows[best].entries) {
            int count = col_count[static_cast<size_t>(c)];
            if (count < best_count) {
                best_count = count;
                pivot_col = c;
            }
        }

        const mpz_class p = rows[best].entries.at(pivot_col);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (!active[i] || i == best) continue;
            auto it = rows[i].entries.find(pivot_col);
            if (it == rows[i].entries.end()) continue;
            const mpz_class f = it->second;
            // row_i := p * row_i - f * row_best, then strip content.
            for (const auto& [c, v] : rows[i].entries) --col_count[static_cast<size_t>(c)];
            for (auto& [c, v] : rows[i].entries) v *= p;
            rows[i].rhs *= p;
            for (const auto& [c, v] : rows[best].entries) {
                auto jt = rows[i].entries.find(c);
                if (jt == rows[i].entries.end())
                    rows[i].entries.emplace(c, -f * v);
                else {
                    jt->second -= f * v;
                    if (jt->second == 0) rows[i].entries.erase(jt);
                }
            }
            rows[i].rhs -= f * rows[best].rhs;
            rows[i].normalize();
            for (const auto& [c, v] : rows[i].entries) ++col_count[static_cast<size_t>(c)];
        }

        active[best] = 0;
        for (const auto& [c, v] : rows[best].entries) --col_count[static_cast<size_t>(c)];
        col_is_pivot[static_cast<size_t>(pivot_col)] = 1;
        pivots.emplace_back(best, pivot_col);
    }

    LinsysResult result;
    for (size_t i = 0; i < rows.size(); ++i)
        if (active[i] && rows[i].empty_lhs() && rows[i].rhs != 0) result.consistent = false;

    // Back-substitution in reverse elimination order: earlier pivot rows may
    // still contain later pivot columns. Free variables stay zero.
    auto back_substitute = [&](std::vector<Rational>& x, bool homogeneous) {
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
            const auto& [ri, pc] = *it;
            const WorkRow& row = rows[ri];
            Rational acc = homogeneous ? Rational(0) : Rational(row.rhs);
            for (const auto& [c, v] : row.entries) {
                if (c == pc) continue;
                const Rational& xc = x[static_cast<size_t>(c)];
                if (!xc.is_zero()) acc -= Rational(v) * xc;
            }
            x[static_cast<size_t>(pc)] = acc / Rational(row.entries.at(pc));
        }
    };

    result.particular.assign(static_cast<size_t>(sys.num_cols), Rational(0));
    back_substitute(result.particular, /*homogeneous=*/false);

    for (int f = 0; f < sys.num_cols; ++f) {
        if (col_is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<Rational> vec(static_cast<size_t>(sys.num_cols), Rational(0));
        vec[static_cast<size_t>(f)] = Rational(1);
        back_substitute(vec, /*homogeneous=*/true);
        result.kernel.push_back(std::move(vec));
    }

    return result;
}

}  // namespace antiexact
