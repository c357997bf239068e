#include <mptrack/assignment.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mptrack {

namespace {

constexpr double kTieEps = 1e-9;

struct MatchResult {
    std::vector<int> row_to_col;  // -1 = unmatched
    int cardinality = 0;
    double cost = 0.0;
    std::vector<double> u, v;  // dual potentials (row/col)
};

// Min-cost maximum-cardinality matching over the finite entries of a cost
// grid, by successive shortest augmenting paths with potentials. Rows with
// no reachable free column stay unmatched. `row_ok`/`col_ok` mask out
// indices fixed by the caller.
MatchResult min_cost_matching(const CostMatrix& cm, const std::vector<char>& row_ok,
                              const std::vector<char>& col_ok) {
    const int n = cm.rows();
    const int m = cm.cols();
    const double inf = std::numeric_limits<double>::infinity();

    std::vector<double> u(n, 0.0), v(m, 0.0);
    std::vector<int> col_to_row(m, -1);
    std::vector<int> row_to_col(n, -1);

    for (int start = 0; start < n; ++start) {
        if (!row_ok[start]) continue;
        // Dijkstra over columns in the alternating graph rooted at `start`.
        std::vector<double> dist(m, inf);
        std::vector<int> prev(m, -1);   // previous column on the path
        std::vector<char> done(m, 0);
        int cur_row = start;
        double cur_dist = 0.0;
        int reached_free = -1;

        // dist bookkeeping uses reduced costs; `offset[j]` remembers the
        // distance at which column j was finalized.
        std::vector<double> final_dist(m, inf);
        while (true) {
            for (int j = 0; j < m; ++j) {
                if (!col_ok[j] || done[j]) continue;
                const double c = cm.at(cur_row, j);
                if (is_gate(c)) continue;
                const double nd = cur_dist + c - u[cur_row] - v[j];
                if (nd < dist[j]) {
                    dist[j] = nd;
                    prev[j] = -2;  // came directly from cur_row's expansion
                }
            }
            // pick nearest unfinished column
            int jmin = -1;
            for (int j = 0; j < m; ++j) {
                if (!col_ok[j] || done[j]) continue;
                if (dist[j] < inf && (jmin == -1 || dist[j] < dist[jmin])) jmin = j;
            }
            if (jmin == -1) break;  // no augmenting path
            done[jmin] = 1;
            final_dist[jmin] = dist[jmin];
            if (col_to_row[jmin] == -1) {
                reached_free = jmin;
                break;
            }
            cur_row = col_to_row[jmin];
            cur_dist = dist[jmin];
        }

        if (reached_free == -1) continue;  // row stays unmatched

        // Update potentials along finalized columns.
        const double dstar = final_dist[reached_free];
        u[start] += dstar;
        for (int j = 0; j < m; ++j) {
            if (!done[j]) continue;
            if (j == reached_free) continue;
            const int r = col_to_row[j];
            if (r >= 0) u[r] += dstar - final_dist[j];
            v[j] -= dstar - final_dist[j];
        }

        // Augment: walk back along the path. Reconstruct by retracing which
        // row each finalized column was entered from.
        // We rebuild the path with a second pass: repeatedly find, for the
        // free column, the row whose edge is tight after the dual update.
        // Simpler and robust: store the entering row per column during the
        // search instead.
        (void)prev;
        break;  // replaced below by the tracked-path variant
    }

    (void)row_to_col;
    throw std::logic_error("unreachable");
}

}  // namespace

Assignment solve(const CostMatrix&, double) { throw std::logic_error("stub"); }
Assignment solve_bruteforce(const CostMatrix&) { throw std::logic_error("stub"); }

}  // namespace mptrack
