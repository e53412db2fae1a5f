#include "conext/lp.hpp"

#include <algorithm>
#include <limits>

namespace conext {

const char* to_string(LpStatus s) {
    switch (s) {
        case LpStatus::feasible: return "feasible";
        case LpStatus::infeasible: return "infeasible";
        case LpStatus::unbounded: return "unbounded";
    }
    return "unknown";
}

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

/// Standard form A y = b, y >= 0 with one artificial column per row. Column
/// layout: structural columns [0, n), artificial columns [n, n + m), and the
/// right-hand side in column n + m. The last row holds reduced costs and -z.
class Tableau {
public:
    Tableau(std::vector<RationalVector> rows, RationalVector rhs, std::size_t structural)
        : m_(rows.size()), n_(structural), sign_(rows.size(), 1) {
        t_.assign(m_ + 1, RationalVector(n_ + m_ + 1));
        for (std::size_t i = 0; i < m_; ++i) {
            if (rhs[i].sign() < 0) sign_[i] = -1;
            for (std::size_t j = 0; j < n_; ++j) {
                t_[i][j] = sign_[i] < 0 ? -rows[i][j] : std::move(rows[i][j]);
            }
            t_[i][n_ + i] = Rational(1);
            t_[i][rhs_col()] = sign_[i] < 0 ? -rhs[i] : std::move(rhs[i]);
            basis_.push_back(n_ + i);
        }
    }

    std::size_t rhs_col() const { return n_ + m_; }

    /// Phase one: minimize the sum of artificials. Returns the optimal value.
    Rational phase_one() {
        auto& obj = t_[m_];
        std::fill(obj.begin(), obj.end(), Rational());
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) obj[j] -= t_[i][j];
            obj[rhs_col()] -= t_[i][rhs_col()];
        }
        iterate();
        return -obj[rhs_col()];
    }

    /// Farkas multipliers y for the original (unsigned) rows after an
    /// infeasible phase one: y^T A <= 0 columnwise and y^T b > 0.
    RationalVector farkas_rows() const {
        RationalVector y(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            y[i] = Rational(1) - t_[m_][n_ + i];
            if (sign_[i] < 0) y[i] = -y[i];
        }
        return y;
    }

    /// Pivots basic artificials out where possible; rows that remain are
    /// redundant and carry zeros in every structural column.
    void expel_artificials() {
        for (std::size_t r = 0; r < m_; ++r) {
            if (basis_[r] < n_) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (!t_[r][j].is_zero()) {
                    pivot(r, j);
                    break;
                }
            }
        }
    }

    /// Phase two with the given structural costs. Returns false if unbounded.
    bool phase_two(const RationalVector& cost) {
        auto& obj = t_[m_];
        std::fill(obj.begin(), obj.end(), Rational());
        for (std::size_t j = 0; j < n_; ++j) obj[j] = cost[j];
        for (std::size_t i = 0; i < m_; ++i) {
            const std::size_t b = basis_[i];
            if (b >= n_ || cost[b].is_zero()) continue;
            for (std::size_t j = 0; j <= rhs_col(); ++j) obj[j].sub_product(cost[b], t_[i][j]);
        }
        return iterate();
    }

    RationalVector structural_solution() const {
        RationalVector y(n_);
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) y[basis_[i]] = t_[i][rhs_col()];
        }
        return y;
    }

private:
    /// Bland's rule; returns false on an unbounded direction.
    bool iterate() {
        auto& obj = t_[m_];
        while (true) {
            std::size_t enter = npos;
            for (std::size_t j = 0; j < n_; ++j) {
                if (obj[j].sign() < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == npos) return true;
            std::size_t leave = npos;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (t_[i][enter].sign() <= 0) continue;
                Rational ratio = t_[i][rhs_col()] / t_[i][enter];
                if (leave == npos || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = std::move(ratio);
                }
            }
            if (leave == npos) return false;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t e) {
        auto& row = t_[r];
        const Rational inv = Rational(1) / row[e];
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j <= rhs_col(); ++j) {
            if (row[j].is_zero()) continue;
            row[j] *= inv;
            nz.push_back(j);
        }
        for (std::size_t i = 0; i <= m_; ++i) {
            if (i == r || t_[i][e].is_zero()) continue;
            const Rational f = t_[i][e];
            auto& target = t_[i];
            for (auto j : nz) target[j].sub_product(f, row[j]);
        }
        basis_[r] = e;
    }

    std::size_t m_;
    std::size_t n_;
    std::vector<int> sign_;
    std::vector<RationalVector> t_;
    std::vector<std::size_t> basis_;
};

void check_shape(const LpProblem& p) {
    auto check = [&](const std::vector<LinearRow>& rows) {
        for (const auto& r : rows) {
            if (r.coeffs.size() != p.variables) throw std::invalid_argument("LP row length differs from variable count");
        }
    };
    check(p.equalities);
    check(p.inequalities);
    if (!p.nonneg.empty() && p.nonneg.size() != p.variables) throw std::invalid_argument("nonneg mask has wrong length");
    if (p.objective && p.objective->size() != p.variables) throw std::invalid_argument("objective has wrong length");
}

}  // namespace

LpOutcome solve(const LpProblem& p) {
    check_shape(p);
    const std::size_t nv = p.variables;

    // Column layout of the standard form.
    std::vector<std::size_t> plus(nv), minus(nv, npos);
    std::size_t cols = 0;
    for (std::size_t j = 0; j < nv; ++j) {
        plus[j] = cols++;
        if (!p.is_nonneg(j)) minus[j] = cols++;
    }
    const std::size_t slack0 = cols;
    cols += p.inequalities.size();

    std::vector<RationalVector> rows;
    RationalVector rhs;
    auto add_row = [&](const LinearRow& r, std::size_t slack) {
        RationalVector a(cols);
        for (std::size_t j = 0; j < nv; ++j) {
            if (r.coeffs[j].is_zero()) continue;
            a[plus[j]] = r.coeffs[j];
            if (minus[j] != npos) a[minus[j]] = -r.coeffs[j];
        }
        if (slack != npos) a[slack] = Rational(-1);
        rows.push_back(std::move(a));
        rhs.push_back(r.rhs);
    };
    for (const auto& r : p.equalities) add_row(r, npos);
    for (std::size_t i = 0; i < p.inequalities.size(); ++i) add_row(p.inequalities[i], slack0 + i);

    LpOutcome out;
    Tableau tab(std::move(rows), std::move(rhs), cols);
    if (tab.phase_one().sign() > 0) {
        const RationalVector y = tab.farkas_rows();
        const std::size_t ne = p.equalities.size();
        out.status = LpStatus::infeasible;
        out.certificate.equality.assign(y.begin(), y.begin() + static_cast<long>(ne));
        out.certificate.inequality.assign(y.begin() + static_cast<long>(ne), y.end());
        out.certificate.bound.assign(nv, Rational());
        for (std::size_t j = 0; j < nv; ++j) {
            if (!p.is_nonneg(j)) continue;
            Rational s;
            for (std::size_t i = 0; i < ne; ++i) s.add_product(y[i], p.equalities[i].coeffs[j]);
            for (std::size_t i = 0; i < p.inequalities.size(); ++i) s.add_product(y[ne + i], p.inequalities[i].coeffs[j]);
            out.certificate.bound[j] = -s;
        }
        if (!verify_certificate(p, out.certificate)) throw LpVerificationError("Farkas certificate failed verification");
        return out;
    }

    tab.expel_artificials();
    bool bounded = true;
    if (p.objective) {
        RationalVector cost(cols);
        for (std::size_t j = 0; j < nv; ++j) {
            cost[plus[j]] = (*p.objective)[j];
            if (minus[j] != npos) cost[minus[j]] = -(*p.objective)[j];
        }
        bounded = tab.phase_two(cost);
    }
    const RationalVector y = tab.structural_solution();
    out.point.assign(nv, Rational());
    for (std::size_t j = 0; j < nv; ++j) {
        out.point[j] = y[plus[j]];
        if (minus[j] != npos) out.point[j] -= y[minus[j]];
    }
    if (!satisfies(p, out.point)) throw LpVerificationError("LP point failed verification");
    out.status = bounded ? LpStatus::feasible : LpStatus::unbounded;
    if (bounded && p.objective) out.optimum = dot(*p.objective, out.point);
    return out;
}

bool satisfies(const LpProblem& p, const RationalVector& x) {
    if (x.size() != p.variables) return false;
    for (const auto& r : p.equalities) {
        if (dot(r.coeffs, x) != r.rhs) return false;
    }
    for (const auto& r : p.inequalities) {
        if (dot(r.coeffs, x) < r.rhs) return false;
    }
    for (std::size_t j = 0; j < p.variables; ++j) {
        if (p.is_nonneg(j) && x[j].sign() < 0) return false;
    }
    return true;
}

bool verify_certificate(const LpProblem& p, const FarkasCertificate& c) {
    if (c.equality.size() != p.equalities.size() || c.inequality.size() != p.inequalities.size() ||
        c.bound.size() != p.variables) {
        return false;
    }
    RationalVector combined(p.variables);
    Rational rhs;
    for (std::size_t i = 0; i < p.equalities.size(); ++i) {
        for (std::size_t j = 0; j < p.variables; ++j) combined[j].add_product(c.equality[i], p.equalities[i].coeffs[j]);
        rhs.add_product(c.equality[i], p.equalities[i].rhs);
    }
    for (std::size_t i = 0; i < p.inequalities.size(); ++i) {
        if (c.inequality[i].sign() < 0) return false;
        for (std::size_t j = 0; j < p.variables; ++j) combined[j].add_product(c.inequality[i], p.inequalities[i].coeffs[j]);
        rhs.add_product(c.inequality[i], p.inequalities[i].rhs);
    }
    for (std::size_t j = 0; j < p.variables; ++j) {
        if (c.bound[j].is_zero()) continue;
        if (!p.is_nonneg(j) || c.bound[j].sign() < 0) return false;
        combined[j] += c.bound[j];
    }
    const bool zero_row = std::all_of(combined.begin(), combined.end(), [](const Rational& v) { return v.is_zero(); });
    return zero_row && rhs.sign() > 0;
}

// ---------------------------------------------------------------------------

ConicOutcome conic_membership(const RationalVector& target, const std::vector<RationalVector>& generators) {
    const std::size_t n = target.size();
    for (const auto& g : generators) {
        if (g.size() != n) throw std::invalid_argument("conic_membership: generator dimension mismatch");
    }
    LpProblem lp;
    lp.variables = generators.size();
    lp.nonneg.assign(generators.size(), true);
    for (std::size_t i = 0; i < n; ++i) {
        LinearRow r{RationalVector(generators.size()), target[i]};
        for (std::size_t j = 0; j < generators.size(); ++j) r.coeffs[j] = generators[j][i];
        lp.equalities.push_back(std::move(r));
    }
    const LpOutcome o = solve(lp);
    ConicOutcome out;
    if (o.status == LpStatus::feasible) {
        out.member = true;
        out.weights = o.point;
        if (!verify_decomposition(target, generators, out.weights)) throw LpVerificationError("decomposition does not re-sum");
        return out;
    }
    // h = -y: y.g_j <= 0 for every generator and y.target > 0.
    RationalVector h(n);
    for (std::size_t i = 0; i < n; ++i) h[i] = -o.certificate.equality[i];
    out.separator = primitive(h);
    if (!verify_separator(target, generators, out.separator)) throw LpVerificationError("separator failed verification");
    return out;
}

bool verify_decomposition(const RationalVector& target, const std::vector<RationalVector>& generators,
                          const RationalVector& weights) {
    if (weights.size() != generators.size()) return false;
    RationalVector sum(target.size());
    for (std::size_t j = 0; j < generators.size(); ++j) {
        if (weights[j].sign() < 0) return false;
        if (weights[j].is_zero()) continue;
        for (std::size_t i = 0; i < target.size(); ++i) sum[i].add_product(weights[j], generators[j][i]);
    }
    return sum == target;
}

bool verify_separator(const RationalVector& target, const std::vector<RationalVector>& generators,
                      const RationalVector& separator) {
    if (dot(separator, target).sign() >= 0) return false;
    return std::all_of(generators.begin(), generators.end(),
                       [&](const RationalVector& g) { return dot(separator, g).sign() >= 0; });
}

}  // namespace conext
