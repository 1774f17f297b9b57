#include "scfan/qlinalg.hpp"

#include <algorithm>

namespace scfan {

LinearSolution solve_rows(const std::vector<QVec>& rows, const QVec& rhs, std::size_t unknowns) {
    const std::size_t m = rows.size();
    std::vector<QVec> a(m, QVec(unknowns + 1, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < unknowns; ++j) a[i][j] = rows[i][j];
        a[i][unknowns] = rhs[i];
    }

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < unknowns && row < m; ++col) {
        std::size_t p = row;
        while (p < m && a[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(a[p], a[row]);
        Rat inv = a[row][col];
        for (std::size_t j = col; j <= unknowns; ++j) a[row][j] /= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = col; j <= unknowns; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }

    LinearSolution out;
    for (std::size_t i = row; i < m; ++i)
        if (a[i][unknowns] != 0) return out;  // inconsistent
    out.consistent = true;

    out.particular.assign(unknowns, Rat(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) out.particular[pivot_col[i]] = a[i][unknowns];

    std::vector<bool> is_pivot(unknowns, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    for (std::size_t free_col = 0; free_col < unknowns; ++free_col) {
        if (is_pivot[free_col]) continue;
        QVec k(unknowns, Rat(0));
        k[free_col] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) k[pivot_col[i]] = -a[i][free_col];
        out.kernel.push_back(std::move(k));
    }
    return out;
}

LinearSolution solve_columns(const std::vector<Vec>& cols, const QVec& target, std::size_t height) {
    std::vector<QVec> rows(height, QVec(cols.size(), Rat(0)));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < height; ++i) rows[i][j] = Rat(cols[j][i]);
    return solve_rows(rows, target, cols.size());
}

std::size_t q_rank(std::vector<QVec> rows) {
    if (rows.empty()) return 0;
    const std::size_t n = rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][col] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            Rat f = rows[i][col] / rows[r][col];
            for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

std::size_t q_rank_int(const std::vector<Vec>& rows) {
    std::vector<QVec> q;
    q.reserve(rows.size());
    for (const Vec& v : rows) q.push_back(to_qvec(v));
    return q_rank(std::move(q));
}

QVec project_off(const Vec& v, const std::vector<Vec>& basis) {
    QVec acc = to_qvec(v);
    std::vector<QVec> ortho;
    for (const Vec& b : basis) {
        QVec w = to_qvec(b);
        for (const QVec& o : ortho) {
            Rat num = 0, den = 0;
            for (std::size_t i = 0; i < w.size(); ++i) {
                num += w[i] * o[i];
                den += o[i] * o[i];
            }
            if (den == 0) continue;
            Rat f = num / den;
            for (std::size_t i = 0; i < w.size(); ++i) w[i] -= f * o[i];
        }
        bool zero = true;
        for (const Rat& x : w)
            if (x != 0) zero = false;
        if (!zero) ortho.push_back(std::move(w));
    }
    for (const QVec& o : ortho) {
        Rat num = 0, den = 0;
        for (std::size_t i = 0; i < acc.size(); ++i) {
            num += acc[i] * o[i];
            den += o[i] * o[i];
        }
        Rat f = num / den;
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] -= f * o[i];
    }
    return acc;
}

}  // namespace scfan
