#include "circpoly/intmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace circpoly {

IntMat hermite_normal_form(const IntMat& m) {
    IntMat h = m;
    const int rows = static_cast<int>(h.size());
    if (rows == 0) return h;
    const int cols = static_cast<int>(h[0].size());
    for (const auto& r : h)
        if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("ragged matrix");

    auto col_sub = [&](int dst, int src, const Int& q) {
        if (q == 0) return;
        for (int r = 0; r < rows; ++r) h[r][dst] -= q * h[r][src];
    };
    auto col_swap = [&](int c1, int c2) {
        if (c1 == c2) return;
        for (int r = 0; r < rows; ++r) std::swap(h[r][c1], h[r][c2]);
    };
    auto col_neg = [&](int c) {
        for (int r = 0; r < rows; ++r) h[r][c] = -h[r][c];
    };

    int pivot = 0;
    for (int row = 0; row < rows && pivot < cols; ++row) {
        while (true) {
            int best = -1;
            for (int c = pivot; c < cols; ++c) {
                if (h[row][c] == 0) continue;
                if (best == -1 || mpz_cmpabs(h[row][c].get_mpz_t(), h[row][best].get_mpz_t()) < 0)
                    best = c;
            }
            if (best == -1) break;
            col_swap(pivot, best);
            bool cleared = true;
            for (int c = pivot + 1; c < cols; ++c) {
                col_sub(c, pivot, floor_div(h[row][c], h[row][pivot]));
                if (h[row][c] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (h[row][pivot] == 0) continue;
        if (h[row][pivot] < 0) col_neg(pivot);
        for (int c = 0; c < pivot; ++c) col_sub(c, pivot, floor_div(h[row][c], h[row][pivot]));
        ++pivot;
    }

    IntMat out(rows, std::vector<Int>(pivot));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < pivot; ++c) out[r][c] = h[r][c];
    return out;
}

int rank(const RatMat& m) {
    RatMat a = m;
    const int rows = static_cast<int>(a.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(a[0].size());
    int rk = 0;
    for (int col = 0; col < cols && rk < rows; ++col) {
        int piv = -1;
        for (int r = rk; r < rows; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv == -1) continue;
        std::swap(a[rk], a[piv]);
        for (int r = rk + 1; r < rows; ++r) {
            if (a[r][col] == 0) continue;
            Rat f = a[r][col] / a[rk][col];
            for (int c = col; c < cols; ++c) a[r][c] -= f * a[rk][c];
        }
        ++rk;
    }
    return rk;
}

int rank(const IntMat& m) {
    RatMat q(m.size());
    for (size_t r = 0; r < m.size(); ++r) q[r].assign(m[r].begin(), m[r].end());
    return rank(q);
}

IntMat matmul(const IntMat& x, const IntMat& y) {
    const int n = static_cast<int>(x.size());
    const int k = n ? static_cast<int>(x[0].size()) : 0;
    const int mm = k ? static_cast<int>(y[0].size()) : 0;
    if (static_cast<int>(y.size()) != k) throw std::invalid_argument("dimension mismatch");
    IntMat out(n, std::vector<Int>(mm, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) {
            if (x[i][j] == 0) continue;
            for (int c = 0; c < mm; ++c) out[i][c] += x[i][j] * y[j][c];
        }
    return out;
}

}  // namespace circpoly
