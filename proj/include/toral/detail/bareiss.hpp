#ifndef TORAL_DETAIL_BAREISS_HPP
#define TORAL_DETAIL_BAREISS_HPP

#include <vector>

#include "toral/numeric.hpp"

namespace toral::detail {

// Bareiss fraction-free elimination. Consumes the row-major n x n grid and
// returns its exact determinant. All intermediate divisions are exact.
inline Int bareiss_determinant(std::vector<Int> m, int n) {
    if (n == 0) return Int(1);
    Int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k * n + k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i) {
                if (m[i * n + k] != 0) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) return Int(0);
            for (int j = k; j < n; ++j) std::swap(m[k * n + j], m[pivot * n + j]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int num = m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j];
                m[i * n + j] = num / prev;  // exact by the Bareiss identity
            }
            m[i * n + k] = 0;
        }
        prev = m[k * n + k];
    }
    return sign * m[(n - 1) * n + (n - 1)];
}

}  // namespace toral::detail

#endif
