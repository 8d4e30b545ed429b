#include "graded/snf.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace graded {

namespace {

// Work matrix is stored row-major: M[r][c].  Row operations update Pinv
// (left factor) and P (its inverse, updated by the inverse column op).

struct Work {
    int k;
    int m;
    std::vector<std::vector<long long>> M;
    std::vector<std::vector<long long>>& P;
    std::vector<std::vector<long long>>& Pinv;

    void swap_rows(int i, int j) {
        if (i == j) return;
        std::swap(M[i], M[j]);
        std::swap(Pinv[i], Pinv[j]);
        for (int r = 0; r < k; ++r) std::swap(P[r][i], P[r][j]);
    }
    // row_i += c * row_j  =>  P column_j -= c * column_i
    void add_row(int i, int j, long long c) {
        if (c == 0) return;
        for (int t = 0; t < m; ++t) M[i][t] += c * M[j][t];
        for (int t = 0; t < k; ++t) Pinv[i][t] += c * Pinv[j][t];
        for (int r = 0; r < k; ++r) P[r][j] -= c * P[r][i];
    }
    void negate_row(int i) {
        for (int t = 0; t < m; ++t) M[i][t] = -M[i][t];
        for (int t = 0; t < k; ++t) Pinv[i][t] = -Pinv[i][t];
        for (int r = 0; r < k; ++r) P[r][i] = -P[r][i];
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < k; ++r) std::swap(M[r][i], M[r][j]);
    }
    void add_col(int i, int j, long long c) {
        if (c == 0) return;
        for (int r = 0; r < k; ++r) M[r][i] += c * M[r][j];
    }
};

} // namespace

SmithResult smith_normal_form(std::vector<std::vector<long long>> cols, int k) {
    if (k < 1) throw std::invalid_argument("smith_normal_form: k must be >= 1");
    int m = static_cast<int>(cols.size());
    SmithResult out;
    out.P.assign(k, std::vector<long long>(k, 0));
    out.Pinv.assign(k, std::vector<long long>(k, 0));
    for (int i = 0; i < k; ++i) out.P[i][i] = out.Pinv[i][i] = 1;

    Work w{k, m, std::vector<std::vector<long long>>(k, std::vector<long long>(m, 0)),
           out.P, out.Pinv};
    for (int c = 0; c < m; ++c) {
        if (static_cast<int>(cols[c].size()) != k)
            throw std::invalid_argument("smith_normal_form: ragged input");
        for (int r = 0; r < k; ++r) w.M[r][c] = cols[c][r];
    }

    for (int t = 0; t < k; ++t) {
        for (;;) {
            // Locate a pivot of minimal absolute value in the trailing block.
            int pr = -1, pc = -1;
            long long best = 0;
            for (int r = t; r < k; ++r)
                for (int c = t; c < m; ++c)
                    if (w.M[r][c] != 0 &&
                        (pr < 0 || std::llabs(w.M[r][c]) < best)) {
                        pr = r;
                        pc = c;
                        best = std::llabs(w.M[r][c]);
                    }
            if (pr < 0)
                throw std::invalid_argument("smith_normal_form: lattice not full rank");
            w.swap_rows(t, pr);
            w.swap_cols(t, pc);
            if (w.M[t][t] < 0) w.negate_row(t);

            bool clean = true;
            for (int r = t + 1; r < k; ++r) {
                long long q = w.M[r][t] / w.M[t][t];
                w.add_row(r, t, -q);
                if (w.M[r][t] != 0) clean = false;
            }
            for (int c = t + 1; c < m; ++c) {
                long long q = w.M[t][c] / w.M[t][t];
                w.add_col(c, t, -q);
                if (w.M[t][c] != 0) clean = false;
            }
            if (!clean) continue; // remainders became new, smaller pivot candidates

            // Divisibility fix-up: the pivot must divide every remaining entry.
            bool fixed = true;
            for (int r = t + 1; r < k && fixed; ++r)
                for (int c = t + 1; c < m && fixed; ++c)
                    if (w.M[r][c] % w.M[t][t] != 0) {
                        w.add_row(t, r, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
    }

    out.diag.resize(k);
    for (int t = 0; t < k; ++t) out.diag[t] = w.M[t][t];
    return out;
}

} // namespace graded
