#include "conext/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace conext {

std::vector<std::size_t> row_reduce(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const Rational inv = Rational(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j].sub_product(f, m[r][j]);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(RationalMatrix m) { return row_reduce(m).size(); }

RationalMatrix null_space(RationalMatrix m, std::size_t cols) {
    const auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    RationalMatrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(cols);
        v[free] = Rational(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& rhs) {
    if (m.size() != rhs.size()) throw std::invalid_argument("solve: row count mismatch");
    if (m.empty()) return RationalVector{};
    const std::size_t cols = m.front().size();
    RationalMatrix aug = m;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
    const auto pivots = row_reduce(aug);
    RationalVector x(cols);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == cols) return std::nullopt;
        x[pivots[i]] = aug[i][cols];
    }
    return x;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return RationalMatrix{};
    RationalMatrix aug = m;
    for (std::size_t i = 0; i < n; ++i) {
        if (aug[i].size() != n) throw std::invalid_argument("inverse: matrix not square");
        aug[i].resize(2 * n);
        aug[i][n + i] = Rational(1);
    }
    const auto pivots = row_reduce(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    RationalMatrix inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i].assign(aug[i].begin() + static_cast<long>(n), aug[i].end());
    return inv;
}

}  // namespace conext
