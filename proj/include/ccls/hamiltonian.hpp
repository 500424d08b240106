#pragma once

#include "ccls/code.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace ccls {

// Binary reflected Gray code. Consecutive words differ in one bit, and the
// sequence is cyclic: gray(2^n - 1) and gray(0) also differ in one bit.
inline uint64_t gray(uint64_t idx) { return idx ^ (idx >> 1); }

uint64_t gray_rank(uint64_t word);

// Bit that changes between gray(idx) and gray(idx + 1 mod 2^n).
int gray_step_bit(uint64_t idx, int n);

// All 2^n codes of the n-cube in Gray order (n <= 24). Codes are bit tuples,
// entry j = bit j.
std::vector<VertexCode> hypercube_ham_path(int n);

// Boustrophedon Hamiltonian path of the rows x cols grid.
std::vector<std::pair<int, int>> grid_ham_path(int rows, int cols);

// Hamiltonian cycle of the rows x cols grid; requires rows*cols even (an
// odd-by-odd grid has no Hamiltonian cycle). order[r] lists cells once, with
// order.back() adjacent to order.front(); rank is the inverse table.
struct GridCycle {
    int rows = 0, cols = 0;
    std::vector<std::pair<int, int>> order;
    std::vector<int> rank; // rank[r * cols + c]

    size_t length() const { return order.size(); }
    std::pair<int, int> at(uint64_t idx) const { return order[idx % order.size()]; }
};

GridCycle grid_ham_cycle(int rows, int cols);

} // namespace ccls
