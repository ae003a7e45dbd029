#include "sgl/simplex.hpp"

#include <algorithm>
#include <cmath>

namespace sgl {

namespace {

// Full-tableau core. tab has m constraint rows [A | b] and one objective row
// [reduced costs | -z]. basis[i] is the variable basic in row i. eligible
// marks columns allowed to enter (artificials are locked out in phase 2).
class Tableau {
public:
    Tableau(int rows, int cols) : m_(rows), n_(cols), tab_((rows + 1) * (cols + 1), 0.0) {}

    double& at(int r, int c) { return tab_[static_cast<std::size_t>(r) * (n_ + 1) + c]; }
    double at(int r, int c) const { return tab_[static_cast<std::size_t>(r) * (n_ + 1) + c]; }
    int rows() const { return m_; }
    int cols() const { return n_; }

    void pivot(int pr, int pc) {
        const double p = at(pr, pc);
        for (int c = 0; c <= n_; ++c) at(pr, c) /= p;
        for (int r = 0; r <= m_; ++r) {
            if (r == pr) continue;
            const double f = at(r, pc);
            if (f == 0.0) continue;
            for (int c = 0; c <= n_; ++c) at(r, c) -= f * at(pr, c);
        }
    }

    void drop_row(int r) {
        tab_.erase(tab_.begin() + static_cast<std::ptrdiff_t>(r) * (n_ + 1),
                   tab_.begin() + static_cast<std::ptrdiff_t>(r + 1) * (n_ + 1));
        --m_;
    }

private:
    int m_, n_;
    std::vector<double> tab_;
};

// Bland's rule iteration loop; returns when no eligible reduced cost is
// negative. Throws on unboundedness.
void run_simplex(Tableau& t, std::vector<int>& basis, const std::vector<char>& eligible, double tol) {
    const int m = t.rows();
    const int n = t.cols();
    for (;;) {
        int enter = -1;
        for (int c = 0; c < n; ++c)
            if (eligible[c] && t.at(m, c) < -tol) {
                enter = c;
                break;
            }
        if (enter < 0) return;
        int leave = -1;
        double best_ratio = 0.0;
        for (int r = 0; r < m; ++r) {
            const double a = t.at(r, enter);
            if (a > tol) {
                const double ratio = t.at(r, n) / a;
                if (leave < 0 || ratio < best_ratio - tol ||
                    (ratio < best_ratio + tol && basis[r] < basis[leave])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
        }
        if (leave < 0) throw lp_unbounded_error("simplex: objective unbounded below");
        t.pivot(leave, enter);
        basis[leave] = enter;
    }
}

} // namespace

SimplexSolution simplex_solve(const LinearProgram& lp, double tol) {
    lp.validate();
    const int n_struct = static_cast<int>(lp.objective.size());
    const int m = static_cast<int>(lp.rows.size());

    // Column layout: [structural | slack/surplus | artificial].
    int n_slack = 0;
    for (const auto& r : lp.rows)
        if (r.rel != Relation::EQ) ++n_slack;

    // Rows normalized to b >= 0; GE/EQ rows (after normalization) need an
    // artificial, LE rows start basic on their slack.
    struct RowInfo {
        std::vector<double> a;
        double b;
        Relation rel;
    };
    std::vector<RowInfo> rows(m);
    for (int i = 0; i < m; ++i) {
        rows[i].a = lp.rows[i].coeffs;
        rows[i].b = lp.rows[i].rhs;
        rows[i].rel = lp.rows[i].rel;
        if (rows[i].b < 0.0) {
            for (double& v : rows[i].a) v = -v;
            rows[i].b = -rows[i].b;
            if (rows[i].rel == Relation::LE)
                rows[i].rel = Relation::GE;
            else if (rows[i].rel == Relation::GE)
                rows[i].rel = Relation::LE;
        }
    }
    int n_art = 0;
    for (const auto& r : rows)
        if (r.rel != Relation::LE) ++n_art;

    const int n_total = n_struct + n_slack + n_art;
    Tableau t(m, n_total);
    std::vector<int> basis(m, -1);
    std::vector<char> is_artificial(n_total, 0);

    int slack_col = n_struct;
    int art_col = n_struct + n_slack;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n_struct; ++j) t.at(i, j) = rows[i].a[j];
        t.at(i, n_total) = rows[i].b;
        switch (rows[i].rel) {
            case Relation::LE:
                t.at(i, slack_col) = 1.0;
                basis[i] = slack_col++;
                break;
            case Relation::GE:
                t.at(i, slack_col) = -1.0;
                ++slack_col;
                t.at(i, art_col) = 1.0;
                is_artificial[art_col] = 1;
                basis[i] = art_col++;
                break;
            case Relation::EQ:
                t.at(i, art_col) = 1.0;
                is_artificial[art_col] = 1;
                basis[i] = art_col++;
                break;
        }
    }

    // Phase 1: minimize sum of artificials.
    if (n_art > 0) {
        for (int c = 0; c < n_total; ++c) t.at(m, c) = is_artificial[c] ? 1.0 : 0.0;
        t.at(m, n_total) = 0.0;
        for (int i = 0; i < m; ++i)
            if (is_artificial[basis[i]])
                for (int c = 0; c <= n_total; ++c) t.at(m, c) -= t.at(i, c);
        std::vector<char> eligible(n_total, 1);
        run_simplex(t, basis, eligible, tol);
        const double phase1 = -t.at(t.rows(), n_total);
        if (phase1 > tol) throw lp_infeasible_error("simplex: infeasible (phase-1 optimum positive)");
        // Pivot surviving artificials out of the basis; drop redundant rows.
        for (int i = t.rows() - 1; i >= 0; --i) {
            if (!is_artificial[basis[i]]) continue;
            int pc = -1;
            for (int c = 0; c < n_total; ++c)
                if (!is_artificial[c] && std::abs(t.at(i, c)) > tol) {
                    pc = c;
                    break;
                }
            if (pc >= 0) {
                t.pivot(i, pc);
                basis[i] = pc;
            } else {
                t.drop_row(i);
                basis.erase(basis.begin() + i);
            }
        }
    }

    // Phase 2: original objective, artificial columns locked.
    const int m2 = t.rows();
    for (int c = 0; c <= n_total; ++c) t.at(m2, c) = 0.0;
    for (int j = 0; j < n_struct; ++j) t.at(m2, j) = lp.objective[j];
    for (int i = 0; i < m2; ++i) {
        const double cb = basis[i] < n_struct ? lp.objective[basis[i]] : 0.0;
        if (cb != 0.0)
            for (int c = 0; c <= n_total; ++c) t.at(m2, c) -= cb * t.at(i, c);
    }
    std::vector<char> eligible(n_total, 1);
    for (int c = 0; c < n_total; ++c)
        if (is_artificial[c]) eligible[c] = 0;
    run_simplex(t, basis, eligible, tol);

    SimplexSolution sol;
    sol.x.assign(n_struct, 0.0);
    for (int i = 0; i < t.rows(); ++i)
        if (basis[i] < n_struct) sol.x[basis[i]] = t.at(i, n_total);
    sol.value = -t.at(t.rows(), n_total);
    return sol;
}

} // namespace sgl
