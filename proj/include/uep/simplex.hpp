#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace uep {

// Dense tableau simplex for
//   maximize c^T y  subject to  G y <= h, y >= 0
// with h >= 0, so the all-slack basis is feasible. Dantzig pricing with a
// switch to Bland's rule after a degeneracy streak to prevent cycling.
class Simplex {
public:
    struct Result {
        bool optimal = false;    // false: iteration limit hit (value is still a
                                 // valid objective of a feasible point)
        bool unbounded = false;
        double value = 0.0;
    };

    // slack_duals, when given, receives the negated reduced costs of the
    // slack columns, i.e. the optimal dual values of the row constraints.
    static Result maximize(const std::vector<std::vector<double>>& G,
                           const std::vector<double>& h,
                           const std::vector<double>& c,
                           double tol = 1e-9,
                           std::vector<double>* slack_duals = nullptr) {
        const std::size_t m = G.size();       // constraints
        const std::size_t n = c.size();       // structural variables
        // tableau: m rows, columns [structural | slack | rhs]
        std::vector<std::vector<double>> T(m, std::vector<double>(n + m + 1, 0.0));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) T[i][j] = G[i][j];
            T[i][n + i] = 1.0;
            T[i][n + m] = h[i];
        }
        std::vector<double> obj(n + m + 1, 0.0);   // reduced costs, maximize
        for (std::size_t j = 0; j < n; ++j) obj[j] = c[j];
        std::vector<std::size_t> basis(m);
        for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

        Result res;
        const std::size_t max_iter = 50 * (m + n) + 1000;
        std::size_t degenerate_streak = 0;
        bool bland = false;
        for (std::size_t iter = 0; iter < max_iter; ++iter) {
            // entering column
            std::size_t enter = n + m;
            if (bland) {
                for (std::size_t j = 0; j < n + m; ++j)
                    if (obj[j] > tol) { enter = j; break; }
            } else {
                double best = tol;
                for (std::size_t j = 0; j < n + m; ++j)
                    if (obj[j] > best) { best = obj[j]; enter = j; }
            }
            if (enter == n + m) { res.optimal = true; break; }

            // ratio test
            std::size_t leave = m;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < m; ++i) {
                if (T[i][enter] > tol) {
                    double ratio = T[i][n + m] / T[i][enter];
                    if (ratio < best_ratio - tol ||
                        (ratio < best_ratio + tol &&
                         (leave == m || basis[i] < basis[leave]))) {
                        best_ratio = ratio;
                        leave = i;
                    }
                }
            }
            if (leave == m) { res.unbounded = true; break; }

            if (best_ratio < tol) {
                if (++degenerate_streak > m + n) bland = true;
            } else {
                degenerate_streak = 0;
            }

            pivot(T, obj, leave, enter, n + m);
            basis[leave] = enter;
        }
        res.value = -obj[n + m];  // objective row stores negated value
        if (slack_duals) {
            slack_duals->assign(m, 0.0);
            for (std::size_t i = 0; i < m; ++i) (*slack_duals)[i] = -obj[n + i];
        }
        return res;
    }

private:
    static void pivot(std::vector<std::vector<double>>& T, std::vector<double>& obj,
                      std::size_t row, std::size_t col, std::size_t width) {
        const double piv = T[row][col];
        for (std::size_t j = 0; j <= width; ++j) T[row][j] /= piv;
        for (std::size_t i = 0; i < T.size(); ++i) {
            if (i == row) continue;
            const double f = T[i][col];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= width; ++j) T[i][j] -= f * T[row][j];
        }
        const double f = obj[col];
        if (f != 0.0)
            for (std::size_t j = 0; j <= width; ++j) obj[j] -= f * T[row][j];
    }
};

} // namespace uep
