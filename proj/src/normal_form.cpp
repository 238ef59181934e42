#include "configcomplex/normal_form.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <tuple>

#include "configcomplex/checked.hpp"

namespace configcomplex {

namespace {

// Shared HNF driver; tracks the row transform only when `u` is non-null.
std::size_t hermite_reduce(IntMatrix& h, IntMatrix* u) {
    const std::size_t rows = h.rows();
    const std::size_t cols = h.cols();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        while (true) {
            std::size_t best = rows;
            for (std::size_t r = pivot_row; r < rows; ++r) {
                if (h(r, col) == 0) continue;
                if (best == rows || abs_checked(h(r, col)) < abs_checked(h(best, col))) best = r;
            }
            if (best == rows) break;
            h.swap_rows(pivot_row, best);
            if (u) u->swap_rows(pivot_row, best);
            bool cleared = true;
            for (std::size_t r = pivot_row + 1; r < rows; ++r) {
                if (h(r, col) == 0) continue;
                const std::int64_t q = h(r, col) / h(pivot_row, col);
                h.sub_row_multiple(r, pivot_row, q);
                if (u) u->sub_row_multiple(r, pivot_row, q);
                if (h(r, col) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (h(pivot_row, col) == 0) continue;
        if (h(pivot_row, col) < 0) {
            h.negate_row(pivot_row);
            if (u) u->negate_row(pivot_row);
        }
        const std::int64_t pivot = h(pivot_row, col);
        for (std::size_t r = 0; r < pivot_row; ++r) {
            const std::int64_t q = floor_div(h(r, col), pivot);
            h.sub_row_multiple(r, pivot_row, q);
            if (u) u->sub_row_multiple(r, pivot_row, q);
        }
        ++pivot_row;
    }
    return pivot_row;
}

void smith_reduce(IntMatrix& s, IntMatrix* u, IntMatrix* v) {
    const std::size_t rows = s.rows();
    const std::size_t cols = s.cols();
    const std::size_t diag = std::min(rows, cols);
    for (std::size_t t = 0; t < diag; ++t) {
        while (true) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pr = rows, pc = cols;
            std::int64_t best = 0;
            for (std::size_t r = t; r < rows; ++r)
                for (std::size_t c = t; c < cols; ++c) {
                    const std::int64_t a = abs_checked(s(r, c));
                    if (a != 0 && (best == 0 || a < best)) {
                        best = a;
                        pr = r;
                        pc = c;
                    }
                }
            if (best == 0) return;
            s.swap_rows(t, pr);
            if (u) u->swap_rows(t, pr);
            s.swap_cols(t, pc);
            if (v) v->swap_cols(t, pc);

            bool residue = false;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (s(r, t) == 0) continue;
                const std::int64_t q = s(r, t) / s(t, t);
                s.sub_row_multiple(r, t, q);
                if (u) u->sub_row_multiple(r, t, q);
                residue = residue || s(r, t) != 0;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (s(t, c) == 0) continue;
                const std::int64_t q = s(t, c) / s(t, t);
                s.sub_col_multiple(c, t, q);
                if (v) v->sub_col_multiple(c, t, q);
                residue = residue || s(t, c) != 0;
            }
            if (residue) continue;

            // Pivot must divide the whole trailing block.
            bool fixed = false;
            for (std::size_t r = t + 1; r < rows && !fixed; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (s(r, c) % s(t, t) != 0) {
                        s.sub_row_multiple(t, r, -1);
                        if (u) u->sub_row_multiple(t, r, -1);
                        fixed = true;
                        break;
                    }
            if (!fixed) break;
        }
        if (s(t, t) < 0) {
            s.negate_row(t);
            if (u) u->negate_row(t);
        }
    }
}

}  // namespace

IntMatrix hnf(const IntMatrix& m) {
    IntMatrix h = m;
    const std::size_t rank = hermite_reduce(h, nullptr);
    IntMatrix out(0, m.cols());
    for (std::size_t r = 0; r < rank; ++r) out.append_row(h.row(r));
    return out;
}

HermiteDecomposition hnf_with_transform(const IntMatrix& m) {
    HermiteDecomposition d{m, IntMatrix::identity(m.rows()), 0};
    d.rank = hermite_reduce(d.h, &d.u);
    return d;
}

IntMatrix left_kernel(const IntMatrix& m) {
    const auto d = hnf_with_transform(m);
    IntMatrix kernel(0, m.rows());
    for (std::size_t r = d.rank; r < m.rows(); ++r) kernel.append_row(d.u.row(r));
    return hnf(kernel);
}

SmithDecomposition snf(const IntMatrix& m) {
    SmithDecomposition d{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    smith_reduce(d.s, &d.u, &d.v);
    return d;
}

std::vector<std::int64_t> smith_diagonal(const IntMatrix& m) {
    IntMatrix s = m;
    smith_reduce(s, nullptr, nullptr);
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i)
        if (s(i, i) != 0) out.push_back(s(i, i));
    return out;
}

SmithSummary smith_summary(SparseIntMatrix m) {
    std::vector<std::set<std::size_t>> col_rows(m.cols);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (auto it = m.entries[r].begin(); it != m.entries[r].end();) {
            if (it->second == 0) {
                it = m.entries[r].erase(it);
                continue;
            }
            col_rows[it->first].insert(r);
            ++it;
        }

    std::vector<bool> active(m.rows, true);
    SmithSummary out;
    while (true) {
        // Markowitz-style choice among unit entries keeps fill-in low.
        std::size_t best_r = m.rows, best_c = 0;
        std::size_t best_cost = std::numeric_limits<std::size_t>::max();
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (!active[r]) continue;
            const std::size_t rsize = m.entries[r].size();
            for (const auto& [c, val] : m.entries[r]) {
                if (val != 1 && val != -1) continue;
                const std::size_t cost = (rsize - 1) * (col_rows[c].size() - 1);
                if (cost < best_cost) {
                    best_cost = cost;
                    best_r = r;
                    best_c = c;
                }
            }
            if (best_cost == 0) break;
        }
        if (best_r == m.rows) break;

        const auto pivot_row = m.entries[best_r];
        const std::int64_t pivot = pivot_row.at(best_c);
        const std::vector<std::size_t> targets(col_rows[best_c].begin(), col_rows[best_c].end());
        for (std::size_t r : targets) {
            if (r == best_r) continue;
            const std::int64_t factor = checked_mul(m.entries[r].at(best_c), pivot);
            for (const auto& [c, val] : pivot_row) {
                auto& slot = m.entries[r][c];
                slot = checked_axpy(slot, factor, val);
                if (slot == 0) {
                    m.entries[r].erase(c);
                    col_rows[c].erase(r);
                } else {
                    col_rows[c].insert(r);
                }
            }
        }
        for (const auto& [c, val] : pivot_row) col_rows[c].erase(best_r);
        m.entries[best_r].clear();
        active[best_r] = false;
        ++out.rank;
    }

    std::vector<std::size_t> rest_rows;
    std::map<std::size_t, std::size_t> rest_cols;
    for (std::size_t r = 0; r < m.rows; ++r) {
        if (!active[r] || m.entries[r].empty()) continue;
        rest_rows.push_back(r);
        for (const auto& [c, val] : m.entries[r]) rest_cols.emplace(c, 0);
    }
    std::size_t idx = 0;
    for (auto& [c, slot] : rest_cols) slot = idx++;
    IntMatrix dense(rest_rows.size(), rest_cols.size());
    for (std::size_t i = 0; i < rest_rows.size(); ++i)
        for (const auto& [c, val] : m.entries[rest_rows[i]]) dense(i, rest_cols.at(c)) = val;
    for (std::int64_t d : smith_diagonal(dense)) {
        ++out.rank;
        if (d != 1) out.torsion.push_back(d);
    }
    return out;
}

}  // namespace configcomplex
