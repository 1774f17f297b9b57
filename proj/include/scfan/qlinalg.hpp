#pragma once

#include "scfan/numeric.hpp"

#include <cstddef>
#include <vector>

namespace scfan {

// Exact rational Gaussian elimination, small scale only.

struct LinearSolution {
    bool consistent = false;
    QVec particular;            // one solution with free variables set to 0
    std::vector<QVec> kernel;   // basis of the solution space of A x = 0
};

// Solve A x = b where A has the given rows (each of length `unknowns`).
LinearSolution solve_rows(const std::vector<QVec>& rows, const QVec& rhs, std::size_t unknowns);

// Solve sum_j x_j * cols[j] = target.
LinearSolution solve_columns(const std::vector<Vec>& cols, const QVec& target, std::size_t height);

std::size_t q_rank(std::vector<QVec> rows);
std::size_t q_rank_int(const std::vector<Vec>& rows);

// Component of v orthogonal to span(basis), computed over Q.
QVec project_off(const Vec& v, const std::vector<Vec>& basis);

}  // namespace scfan
