#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace gradealg {

/// Rank of a dense matrix over F by Gaussian elimination. The matrix is
/// taken by value and destroyed.
template <class F>
std::size_t matrix_rank(const F& field, std::vector<std::vector<typename F::value_type>> rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && field.is_zero(rows[pivot][col])) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        auto inv = field.inv(rows[rank][col]);
        for (std::size_t c = col; c < ncols; ++c) rows[rank][c] = field.mul(rows[rank][c], inv);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (field.is_zero(rows[r][col])) continue;
            auto factor = rows[r][col];
            for (std::size_t c = col; c < ncols; ++c)
                rows[r][c] = field.sub(rows[r][c], field.mul(factor, rows[rank][c]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace gradealg
