#include <abmod/linalg.hpp>
#include <abmod/errors.hpp>
#include <algorithm>

namespace abmod {

bool is_zero_vec(const KVec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

KVec add_scaled(const KVec& a, const KVec& b, const RatFunc& s) {
    KVec r(a);
    if (s.is_zero()) return r;
    for (size_t i = 0; i < r.size(); ++i)
        if (!b[i].is_zero()) r[i] += b[i] * s;
    return r;
}

std::vector<int> rref(std::vector<KVec>& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const size_t ncols = rows.front().size();
    size_t rank = 0;
    for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t sel = rank;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        RatFunc inv = rows[rank][col].inverse();
        for (size_t c = col; c < ncols; ++c)
            if (!rows[rank][c].is_zero()) rows[rank][c] *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            RatFunc f = rows[r][col];
            for (size_t c = col; c < ncols; ++c)
                if (!rows[rank][c].is_zero()) rows[r][c] -= rows[rank][c] * f;
        }
        pivots.push_back((int)col);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

KVec reduce_against(const std::vector<KVec>& rows, const std::vector<int>& pivots, KVec v) {
    for (size_t r = 0; r < rows.size(); ++r) {
        const RatFunc& c = v[pivots[r]];
        if (c.is_zero()) continue;
        RatFunc f = c;  // pivot entries are 1
        for (size_t i = 0; i < v.size(); ++i)
            if (!rows[r][i].is_zero()) v[i] -= rows[r][i] * f;
    }
    return v;
}

std::vector<KVec> kernel_basis(std::vector<KVec> A, int ncols) {
    std::vector<int> pivots = rref(A);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<KVec> out;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        KVec v(ncols, RatFunc());
        v[free] = RatFunc(1);
        for (size_t r = 0; r < A.size(); ++r)
            v[pivots[r]] = -A[r][free];
        out.push_back(std::move(v));
    }
    rref(out);
    return out;
}

}  // namespace abmod
