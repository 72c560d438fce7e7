#include "effalg/linear.hpp"

#include <stdexcept>

namespace effalg {

namespace {

// Dense tableau for  A x = b,  x + s = 1,  x, s ≥ 0  with one artificial
// variable per row. Column layout: x (n) | s (n) | artificial (rows) | rhs.
class Tableau {
  public:
    explicit Tableau(const LinearSystem& system)
        : n_(system.variables.size()),
          m_(system.equalities.size()),
          rows_(m_ + n_),
          cols_(2 * n_ + rows_),
          cells_(rows_, std::vector<Rational>(cols_ + 1)),
          sign_(rows_, 1),
          basis_(rows_),
          active_(rows_, 1),
          cost_(cols_ + 1),
          original_(m_, std::vector<Rational>(n_)) {
        for (std::size_t i = 0; i < m_; ++i) {
            const auto& row = system.equalities[i];
            for (const auto& term : row.terms) {
                if (term.variable >= n_) throw std::out_of_range("linear term references unknown variable");
                cells_[i][term.variable] += term.coefficient;
                original_[i][term.variable] += term.coefficient;
            }
            cells_[i][cols_] = row.rhs;
        }
        for (std::size_t j = 0; j < n_; ++j) {
            cells_[m_ + j][j] = 1;
            cells_[m_ + j][n_ + j] = 1;
            cells_[m_ + j][cols_] = 1;
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            if (cells_[i][cols_] < 0) {
                sign_[i] = -1;
                for (auto& c : cells_[i]) c = -c;
            }
            cells_[i][artificial(i)] = 1;
            basis_[i] = artificial(i);
        }
    }

    // Returns true when the artificial variables can be driven to zero.
    bool phase_one() {
        for (std::size_t j = 0; j <= cols_; ++j) {
            if (j < cols_ && is_artificial(j)) continue;
            Rational total = 0;
            for (std::size_t i = 0; i < rows_; ++i) total += cells_[i][j];
            cost_[j] = -total;
        }
        run();
        return cost_[cols_] == 0;
    }

    // Dual multipliers of the phase-one optimum, mapped back to the original
    // row orientation and turned into a Farkas certificate.
    InfeasibilityCertificate certificate() const {
        InfeasibilityCertificate cert;
        cert.row_multipliers.resize(m_);
        cert.upper_multipliers.resize(n_);
        cert.lower_multipliers.resize(n_);
        std::vector<Rational> w(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            const Rational y = Rational(1) - cost_[artificial(i)];
            w[i] = -y * sign_[i];
        }
        for (std::size_t i = 0; i < m_; ++i) cert.row_multipliers[i] = -w[i];
        for (std::size_t j = 0; j < n_; ++j) cert.upper_multipliers[j] = w[m_ + j];
        for (std::size_t j = 0; j < n_; ++j) {
            Rational l = cert.upper_multipliers[j];
            for (std::size_t i = 0; i < m_; ++i) l += w[i] * original(i, j);
            cert.lower_multipliers[j] = l;
        }
        return cert;
    }

    // Pivots basic artificials out (or retires redundant rows) and optimizes
    // max objectiveᵀx over the feasible region found by phase one.
    void phase_two(const std::vector<Rational>& objective) {
        for (std::size_t r = 0; r < rows_; ++r) {
            if (!is_artificial(basis_[r])) continue;
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < 2 * n_ && !col; ++j) {
                if (cells_[r][j] != 0) col = j;
            }
            if (col) {
                pivot(r, *col);
            } else {
                active_[r] = 0;
            }
        }
        for (std::size_t j = 0; j <= cols_; ++j) cost_[j] = 0;
        for (std::size_t j = 0; j < n_; ++j) cost_[j] = -objective.at(j);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (!active_[r]) continue;
            const Rational cb = basis_[r] < n_ ? Rational(-objective[basis_[r]]) : Rational(0);
            if (cb == 0) continue;
            for (std::size_t j = 0; j <= cols_; ++j) {
                if (cells_[r][j] != 0) cost_[j] -= cb * cells_[r][j];
            }
        }
        run();
    }

    std::vector<Rational> point() const {
        std::vector<Rational> x(n_);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (active_[r] && basis_[r] < n_) x[basis_[r]] = cells_[r][cols_];
        }
        return x;
    }

  private:
    std::size_t artificial(std::size_t row) const { return 2 * n_ + row; }
    bool is_artificial(std::size_t col) const { return col >= 2 * n_; }

    const Rational& original(std::size_t row, std::size_t col) const { return original_[row][col]; }

    // Bland's rule: lowest-index improving column, ties in the ratio test go to
    // the lowest-index basic variable.
    void run() {
        for (;;) {
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < 2 * n_; ++j) {
                if (cost_[j] < 0) {
                    entering = j;
                    break;
                }
            }
            if (!entering) return;
            std::optional<std::size_t> leaving;
            Rational best;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (!active_[r] || cells_[r][*entering] <= 0) continue;
                Rational ratio = cells_[r][cols_] / cells_[r][*entering];
                if (!leaving || ratio < best || (ratio == best && basis_[r] < basis_[*leaving])) {
                    leaving = r;
                    best = ratio;
                }
            }
            if (!leaving) throw std::logic_error("unbounded direction in a boxed linear system");
            pivot(*leaving, *entering);
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        const Rational p = cells_[r][c];
        std::vector<std::size_t> support;
        for (std::size_t j = 0; j <= cols_; ++j) {
            if (cells_[r][j] == 0) continue;
            cells_[r][j] /= p;
            support.push_back(j);
        }
        auto eliminate = [&](std::vector<Rational>& row) {
            const Rational factor = row[c];
            if (factor == 0) return;
            for (auto j : support) row[j] -= factor * cells_[r][j];
        };
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i != r && active_[i]) eliminate(cells_[i]);
        }
        eliminate(cost_);
        basis_[r] = c;
    }

    std::size_t n_;
    std::size_t m_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::vector<Rational>> cells_;
    std::vector<int> sign_;
    std::vector<std::size_t> basis_;
    std::vector<char> active_;
    std::vector<Rational> cost_;
    std::vector<std::vector<Rational>> original_;
};

}  // namespace

FeasibilityResult solve_exact(const LinearSystem& system) {
    Tableau tableau(system);
    if (tableau.phase_one()) return FeasiblePoint{tableau.point()};
    return tableau.certificate();
}

std::optional<FeasiblePoint> maximize_exact(const LinearSystem& system, const std::vector<Rational>& objective) {
    if (objective.size() != system.variables.size()) {
        throw std::invalid_argument("objective size does not match the number of variables");
    }
    Tableau tableau(system);
    if (!tableau.phase_one()) return std::nullopt;
    tableau.phase_two(objective);
    return FeasiblePoint{tableau.point()};
}

std::optional<InfeasibilityCertificate> irreducible_certificate(const LinearSystem& system) {
    if (std::holds_alternative<FeasiblePoint>(solve_exact(system))) return std::nullopt;

    std::vector<char> kept(system.equalities.size(), 1);
    auto subsystem = [&](std::size_t skip) {
        LinearSystem sub{system.variables, {}};
        for (std::size_t i = 0; i < system.equalities.size(); ++i) {
            if (kept[i] && i != skip) sub.equalities.push_back(system.equalities[i]);
        }
        return sub;
    };
    for (std::size_t i = 0; i < system.equalities.size(); ++i) {
        if (std::holds_alternative<InfeasibilityCertificate>(solve_exact(subsystem(i)))) kept[i] = 0;
    }

    auto reduced = std::get<InfeasibilityCertificate>(solve_exact(subsystem(system.equalities.size())));
    InfeasibilityCertificate cert;
    cert.row_multipliers.resize(system.equalities.size());
    cert.upper_multipliers = std::move(reduced.upper_multipliers);
    cert.lower_multipliers = std::move(reduced.lower_multipliers);
    std::size_t next = 0;
    for (std::size_t i = 0; i < system.equalities.size(); ++i) {
        if (kept[i]) cert.row_multipliers[i] = reduced.row_multipliers[next++];
    }
    return cert;
}

bool satisfies(const LinearSystem& system, const std::vector<Rational>& point) {
    if (point.size() != system.variables.size()) return false;
    for (const auto& v : point) {
        if (v < 0 || v > 1) return false;
    }
    for (const auto& row : system.equalities) {
        Rational lhs = 0;
        for (const auto& term : row.terms) lhs += term.coefficient * point.at(term.variable);
        if (lhs != row.rhs) return false;
    }
    return true;
}

CertificateCheck check_certificate(const LinearSystem& system, const InfeasibilityCertificate& certificate) {
    const std::size_t n = system.variables.size();
    CertificateCheck check;
    if (certificate.row_multipliers.size() != system.equalities.size() ||
        certificate.upper_multipliers.size() != n || certificate.lower_multipliers.size() != n) {
        check.reason = "multiplier vectors do not match the system dimensions";
        return check;
    }
    std::vector<Rational> combined(n);
    Rational constant = 0;
    for (std::size_t i = 0; i < system.equalities.size(); ++i) {
        const auto& y = certificate.row_multipliers[i];
        if (y == 0) continue;
        for (const auto& term : system.equalities[i].terms) combined[term.variable] += y * term.coefficient;
        constant += y * system.equalities[i].rhs;
    }
    Rational gap = -constant;
    for (std::size_t j = 0; j < n; ++j) {
        const auto& z = certificate.upper_multipliers[j];
        const auto& l = certificate.lower_multipliers[j];
        if (z < 0 || l < 0) {
            check.reason = "negative bound multiplier on " + system.variables[j];
            return check;
        }
        if (combined[j] - z + l != 0) {
            check.reason = "combination does not cancel variable " + system.variables[j];
            return check;
        }
        gap += z;
    }
    check.gap = gap;
    if (gap >= 0) {
        check.reason = "combined inequality 0 <= " + to_string(gap) + " is not contradictory";
        return check;
    }
    check.valid = true;
    return check;
}

}  // namespace effalg
