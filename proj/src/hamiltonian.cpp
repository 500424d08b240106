#include "ccls/hamiltonian.hpp"

#include <bit>
#include <stdexcept>

namespace ccls {

uint64_t gray_rank(uint64_t word) {
    uint64_t idx = 0;
    while (word) {
        idx ^= word;
        word >>= 1;
    }
    return idx;
}

int gray_step_bit(uint64_t idx, int n) {
    uint64_t mask = n >= 64 ? ~0ull : (1ull << n) - 1;
    uint64_t a = gray(idx & mask);
    uint64_t b = gray((idx + 1) & mask);
    uint64_t diff = a ^ b;
    if (std::popcount(diff) != 1)
        throw std::logic_error("gray step is not a single bit");
    return std::countr_zero(diff);
}

std::vector<VertexCode> hypercube_ham_path(int n) {
    if (n < 1 || n > 24)
        throw std::invalid_argument("hypercube_ham_path: dimension out of range");
    std::vector<VertexCode> out;
    out.reserve(1ull << n);
    for (uint64_t i = 0; i < (1ull << n); ++i) {
        uint64_t g = gray(i);
        VertexCode c(n);
        for (int b = 0; b < n; ++b)
            c[b] = static_cast<int>((g >> b) & 1);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<std::pair<int, int>> grid_ham_path(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("grid_ham_path: empty grid");
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r) {
        if (r % 2 == 0)
            for (int c = 0; c < cols; ++c)
                out.emplace_back(r, c);
        else
            for (int c = cols - 1; c >= 0; --c)
                out.emplace_back(r, c);
    }
    return out;
}

namespace {

// rows even: top row left-to-right, snake rows 1..rows-1 over columns
// 1..cols-1, return along column 0.
std::vector<std::pair<int, int>> cycle_rows_even(int rows, int cols) {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(rows) * cols);
    for (int c = 0; c < cols; ++c)
        out.emplace_back(0, c);
    for (int r = 1; r < rows; ++r) {
        if (r % 2 == 1)
            for (int c = cols - 1; c >= 1; --c)
                out.emplace_back(r, c);
        else
            for (int c = 1; c <= cols - 1; ++c)
                out.emplace_back(r, c);
    }
    for (int r = rows - 1; r >= 1; --r)
        out.emplace_back(r, 0);
    return out;
}

} // namespace

GridCycle grid_ham_cycle(int rows, int cols) {
    if (rows < 2 || cols < 2)
        throw std::invalid_argument("grid_ham_cycle: need at least a 2x2 grid");
    if (rows % 2 != 0 && cols % 2 != 0)
        throw std::invalid_argument("grid_ham_cycle: odd-by-odd grid has no Hamiltonian cycle");
    GridCycle g;
    g.rows = rows;
    g.cols = cols;
    if (rows % 2 == 0) {
        g.order = cycle_rows_even(rows, cols);
    } else {
        for (auto [c, r] : cycle_rows_even(cols, rows))
            g.order.emplace_back(r, c);
    }
    g.rank.assign(static_cast<size_t>(rows) * cols, -1);
    for (size_t i = 0; i < g.order.size(); ++i)
        g.rank[static_cast<size_t>(g.order[i].first) * cols + g.order[i].second] = static_cast<int>(i);
    return g;
}

} // namespace ccls
