#include "bezkit/matrix.hpp"

namespace bez {

namespace {

Polynomial cofactor_det(const PolyMatrix& m, std::vector<int> rows,
                        std::vector<int> cols) {
    const size_t k = rows.size();
    if (k == 1) return m.at(rows[0], cols[0]);
    Polynomial sum = Polynomial::zero(m.entries.front().ring());
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < k; ++j) {
        const Polynomial& e = m.at(rows[0], cols[j]);
        if (e.is_zero()) continue;
        std::vector<int> sub_cols;
        sub_cols.reserve(k - 1);
        for (size_t l = 0; l < k; ++l)
            if (l != j) sub_cols.push_back(cols[l]);
        Polynomial minor = cofactor_det(m, sub_rows, sub_cols);
        if (j % 2 == 0)
            sum += e * minor;
        else
            sum -= e * minor;
    }
    return sum;
}

Polynomial bareiss_det(PolyMatrix a) {
    const int n = a.rows;
    const RingPtr ring = a.entries.front().ring();
    Polynomial prev = Polynomial::constant(ring, Rational(1));
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k).is_zero()) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i) {
                if (!a.at(i, k).is_zero()) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) return Polynomial::zero(ring);
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Polynomial num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                // The Bareiss identity guarantees exact divisibility here.
                a.at(i, j) = num.is_zero() ? num : exact_quotient(num, prev);
            }
            a.at(i, k) = Polynomial::zero(ring);
        }
        prev = a.at(k, k);
    }
    Polynomial det = a.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

}  // namespace

Polynomial determinant(const PolyMatrix& m) {
    if (m.rows != m.cols) throw NonSquareMatrix("determinant of a non-square matrix");
    if (m.rows == 0 || m.entries.empty())
        throw NonSquareMatrix("determinant of an empty matrix");
    if (m.rows <= 3) {
        std::vector<int> idx(m.rows);
        for (int i = 0; i < m.rows; ++i) idx[i] = i;
        return cofactor_det(m, idx, idx);
    }
    return bareiss_det(m);
}

Rational rational_determinant(const RationalMatrix& m) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw NonSquareMatrix("determinant of a non-square matrix");
    RationalMatrix a = m;
    Rational det(1);
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i) {
            if (a[i][k] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) return Rational(0);
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (int i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rational factor = a[i][k] / a[k][k];
            for (int j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
        }
    }
    return det;
}

}  // namespace bez
