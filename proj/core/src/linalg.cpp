#include <automorph/linalg.hpp>

#include <stdexcept>
#include <utility>

namespace automorph
{

RationalMatrix row_reduce(RationalMatrix m)
{
    if (m.empty()) {
        return m;
    }
    const std::size_t cols = m.front().size();
    for (const auto &row : m) {
        if (row.size() != cols) {
            throw std::invalid_argument("row_reduce: ragged matrix");
        }
    }
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < m.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.size() && m[sel][col] == 0) {
            ++sel;
        }
        if (sel == m.size()) {
            continue;
        }
        std::swap(m[sel], m[pivot_row]);
        const Rational inv = 1 / m[pivot_row][col];
        for (auto &x : m[pivot_row]) {
            x *= inv;
        }
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == pivot_row || m[r][col] == 0) {
                continue;
            }
            const Rational f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) {
                m[r][c] -= f * m[pivot_row][c];
            }
        }
        ++pivot_row;
    }
    m.resize(pivot_row);
    return m;
}

std::size_t rank(const RationalMatrix &m)
{
    return row_reduce(m).size();
}

} // namespace automorph
