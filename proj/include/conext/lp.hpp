#pragma once

// Exact rational linear programming with verifiable outcomes.

#include "conext/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace conext {

struct LinearRow {
    RationalVector coeffs;
    Rational rhs;
};

/// Constraints: equalities row.x = rhs, inequalities row.x >= rhs, and
/// x_j >= 0 for every j with nonneg[j]. Optional objective is minimized.
struct LpProblem {
    std::size_t variables = 0;
    std::vector<LinearRow> equalities;
    std::vector<LinearRow> inequalities;
    std::vector<bool> nonneg;  // empty means all free
    std::optional<RationalVector> objective;

    bool is_nonneg(std::size_t j) const { return !nonneg.empty() && nonneg[j]; }
};

enum class LpStatus { feasible, infeasible, unbounded };

const char* to_string(LpStatus s);

/// Multipliers for every constraint of an infeasible problem: equality
/// multipliers are free, inequality and bound multipliers are >= 0, the
/// combined row is identically zero and the combined right-hand side is > 0.
struct FarkasCertificate {
    RationalVector equality;
    RationalVector inequality;
    RationalVector bound;  // one per variable; zero for free variables
};

struct LpOutcome {
    LpStatus status = LpStatus::infeasible;
    RationalVector point;             // feasible or unbounded: a feasible point
    std::optional<Rational> optimum;  // feasible with objective
    FarkasCertificate certificate;    // infeasible
};

class LpVerificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Two-phase primal simplex on a dense tableau with Bland's rule. The outcome
/// is verified before return; a failed check throws LpVerificationError.
LpOutcome solve(const LpProblem& p);

bool satisfies(const LpProblem& p, const RationalVector& x);
bool verify_certificate(const LpProblem& p, const FarkasCertificate& c);

/// Membership of target in cone(generators).
struct ConicOutcome {
    bool member = false;
    RationalVector weights;    // member: target = sum weights[j] * generators[j], weights >= 0
    RationalVector separator;  // non-member: primitive h with h(target) < 0 <= h(g)
};

ConicOutcome conic_membership(const RationalVector& target, const std::vector<RationalVector>& generators);

bool verify_decomposition(const RationalVector& target, const std::vector<RationalVector>& generators,
                          const RationalVector& weights);
bool verify_separator(const RationalVector& target, const std::vector<RationalVector>& generators,
                      const RationalVector& separator);

}  // namespace conext
