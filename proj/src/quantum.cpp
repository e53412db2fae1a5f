#include "conext/quantum.hpp"

#include <random>

namespace conext::quantum {

namespace {

constexpr std::size_t d = 3;

std::size_t idx2(std::size_t i, std::size_t j) { return d * i + j; }
std::size_t idx3(std::size_t i, std::size_t j, std::size_t k) { return d * d * i + d * j + k; }

void require_dim(const ExactOperator& m, std::size_t n, const char* what) {
    if (m.dim != n || m.entries.size() != n * n) {
        throw QuantumError(std::string(what) + ": expected a " + std::to_string(n) + "x" + std::to_string(n) + " operator");
    }
}

ExactOperator scaled(const QuadScalar& c, ExactOperator m) { return c * std::move(m); }

void add_basis(QuadVector& v, std::size_t i, std::size_t j, std::size_t k, const QuadScalar& c) { v[idx3(i, j, k)] += c; }

ExactOperator random_symmetric(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    ExactOperator z = ExactOperator::zero(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const QuadScalar x(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
            z(i, j) = x;
            z(j, i) = x;
        }
    }
    return z;
}

ClaimRecord& check(ClaimRecord& c, const std::string& what, bool ok) {
    c.values.emplace_back(what, ok ? "yes" : "no");
    c.verdict = c.verdict && ok;
    return c;
}

}  // namespace

ExactOperator ExactOperator::identity(std::size_t n) {
    ExactOperator m = zero(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = QuadScalar(1);
    return m;
}

ExactOperator ExactOperator::outer(const QuadVector& v) {
    ExactOperator m = zero(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * v[j];
    }
    return m;
}

bool ExactOperator::is_symmetric() const {
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) return false;
        }
    }
    return true;
}

QuadScalar ExactOperator::trace() const {
    QuadScalar t;
    for (std::size_t i = 0; i < dim; ++i) t += (*this)(i, i);
    return t;
}

ExactOperator& ExactOperator::operator+=(const ExactOperator& o) {
    if (o.dim != dim) throw QuantumError("operator sizes differ");
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] += o.entries[i];
    return *this;
}

ExactOperator& ExactOperator::operator*=(const QuadScalar& c) {
    for (auto& e : entries) e *= c;
    return *this;
}

ExactOperator operator*(const ExactOperator& a, const ExactOperator& b) {
    if (a.dim != b.dim) throw QuantumError("operator sizes differ");
    const std::size_t n = a.dim;
    ExactOperator out = ExactOperator::zero(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j).add_product(a(i, k), b(k, j));
        }
    }
    return out;
}

QuadScalar trace_product(const ExactOperator& a, const ExactOperator& b) {
    if (a.dim != b.dim) throw QuantumError("operator sizes differ");
    QuadScalar t;
    for (std::size_t i = 0; i < a.dim; ++i) {
        for (std::size_t j = 0; j < a.dim; ++j) t.add_product(a(i, j), b(j, i));
    }
    return t;
}

ExactOperator kron(const ExactOperator& a, const ExactOperator& b) {
    ExactOperator out = ExactOperator::zero(a.dim * b.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        for (std::size_t j = 0; j < a.dim; ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.dim; ++k) {
                for (std::size_t l = 0; l < b.dim; ++l) out(i * b.dim + k, j * b.dim + l) = a(i, j) * b(k, l);
            }
        }
    }
    return out;
}

ExactOperator build_X(const QuadScalar& alpha, const QuadScalar& beta, const QuadScalar& gamma) {
    ExactOperator x = ExactOperator::zero(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            if (i == j) {
                x(idx2(i, i), idx2(i, i)) = alpha;
            } else {
                x(idx2(i, j), idx2(i, j)) = beta;
                x(idx2(i, i), idx2(j, j)) = gamma;
            }
        }
    }
    return x;
}

PivotRun pivot_run(const ExactOperator& m) {
    require_dim(m, m.dim, "pivot_run");
    if (!m.is_symmetric()) throw QuantumError("pivot_run: operator is not symmetric");
    const std::size_t n = m.dim;
    ExactOperator s = m;
    PivotRun run;
    run.psd = true;
    for (std::size_t k = 0; k < n; ++k) {
        const QuadScalar p = s(k, k);
        const int sign = p.sign();
        if (sign < 0) {
            run.psd = false;
            break;
        }
        if (sign == 0) {
            for (std::size_t j = k + 1; j < n; ++j) {
                if (!s(k, j).is_zero()) run.psd = false;
            }
            if (!run.psd) break;
            continue;
        }
        run.pivots.push_back(p);
        ++run.rank;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (s(i, k).is_zero()) continue;
            const QuadScalar f = s(i, k) / p;
            for (std::size_t j = k + 1; j < n; ++j) s(i, j).sub_product(f, s(k, j));
            s(i, k) = QuadScalar();
        }
        for (std::size_t j = k + 1; j < n; ++j) s(k, j) = QuadScalar();
    }
    run.definite = run.psd && run.rank == n;
    return run;
}

bool psd_check_exact(const ExactOperator& m, bool strict) {
    const PivotRun run = pivot_run(m);
    return strict ? run.definite : run.psd;
}

ExactOperator partial_transpose(const ExactOperator& m, const std::vector<std::size_t>& factor_dims, std::size_t which) {
    if (which >= factor_dims.size()) throw QuantumError("partial_transpose: factor index out of range");
    std::size_t total = 1;
    for (std::size_t f : factor_dims) {
        if (f == 0) throw QuantumError("partial_transpose: zero factor dimension");
        total *= f;
    }
    require_dim(m, total, "partial_transpose");
    std::size_t inner = 1;
    for (std::size_t f = which + 1; f < factor_dims.size(); ++f) inner *= factor_dims[f];
    const std::size_t fd = factor_dims[which];
    const auto digit = [&](std::size_t i) { return (i / inner) % fd; };
    const auto with_digit = [&](std::size_t i, std::size_t v) { return i - digit(i) * inner + v * inner; };
    ExactOperator out = ExactOperator::zero(total);
    for (std::size_t r = 0; r < total; ++r) {
        for (std::size_t c = 0; c < total; ++c) out(with_digit(r, digit(c)), with_digit(c, digit(r))) = m(r, c);
    }
    return out;
}

ExactOperator partial_trace_b2(const ExactOperator& m) {
    require_dim(m, d * d * d, "partial_trace_b2");
    ExactOperator out = ExactOperator::zero(d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t a2 = 0; a2 < d; ++a2)
                for (std::size_t b2 = 0; b2 < d; ++b2)
                    for (std::size_t c = 0; c < d; ++c) out(idx2(a, b), idx2(a2, b2)) += m(idx3(a, b, c), idx3(a2, b2, c));
    return out;
}

ExactOperator partial_trace_b1(const ExactOperator& m) {
    require_dim(m, d * d * d, "partial_trace_b1");
    ExactOperator out = ExactOperator::zero(d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t a2 = 0; a2 < d; ++a2)
                for (std::size_t b2 = 0; b2 < d; ++b2)
                    for (std::size_t c = 0; c < d; ++c) out(idx2(a, b), idx2(a2, b2)) += m(idx3(a, c, b), idx3(a2, c, b2));
    return out;
}

ExactOperator reduce_b_factors(const ExactOperator& m) {
    return scaled(QuadScalar(Rational(1, 2)), partial_trace_b2(m) + partial_trace_b1(m));
}

ExactOperator symmetric_lift(const ExactOperator& w) {
    require_dim(w, d * d, "symmetric_lift");
    ExactOperator out = ExactOperator::zero(d * d * d);
    const QuadScalar half(Rational(1, 2));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t a2 = 0; a2 < d; ++a2)
                    for (std::size_t b2 = 0; b2 < d; ++b2)
                        for (std::size_t c2 = 0; c2 < d; ++c2) {
                            QuadScalar v;
                            if (c == c2) v += w(idx2(a, b), idx2(a2, b2));
                            if (b == b2) v += w(idx2(a, c), idx2(a2, c2));
                            out(idx3(a, b, c), idx3(a2, b2, c2)) = half * v;
                        }
    return out;
}

ExactOperator swap_b_factors(const ExactOperator& m) {
    require_dim(m, d * d * d, "swap_b_factors");
    ExactOperator out = ExactOperator::zero(d * d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t a2 = 0; a2 < d; ++a2)
                    for (std::size_t b2 = 0; b2 < d; ++b2)
                        for (std::size_t c2 = 0; c2 < d; ++c2)
                            out(idx3(a, c, b), idx3(a2, c2, b2)) = m(idx3(a, b, c), idx3(a2, b2, c2));
    return out;
}

QuadScalar eta() { return {Rational(1), Rational(-1, 2)}; }

QuadVector sym_extension_vector(std::size_t i) {
    if (i >= d) throw QuantumError("sym_extension_vector: index out of range");
    QuadVector v(d * d * d);
    add_basis(v, i, i, i, QuadScalar::sqrt2());
    for (std::size_t j = 0; j < d; ++j) {
        if (j == i) continue;
        add_basis(v, j, i, j, QuadScalar(1));
        add_basis(v, j, j, i, QuadScalar(1));
    }
    return v;
}

QuadVector permutation_vector() {
    QuadVector v(d * d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c)
                if (a != b && b != c && a != c) add_basis(v, a, b, c, QuadScalar(1));
    return v;
}

bool AppendixReport::all_pass() const {
    for (const auto& c : claims) {
        if (!c.verdict) return false;
    }
    return !claims.empty();
}

AppendixReport verify_appendix() {
    AppendixReport report;
    const QuadScalar r2 = QuadScalar::sqrt2();
    const QuadScalar e = eta();
    const ExactOperator y = build_X(1, e, 1);
    const ExactOperator x_psd = build_X(4, 1, r2 * QuadScalar(2) + QuadScalar(1));
    const ExactOperator x_max = build_X(0, 1, 1);
    const QuadScalar w_psd(Rational(1, 4));
    const QuadScalar w_max = (QuadScalar(3) - QuadScalar(2) * r2) / QuadScalar(4);

    {
        ClaimRecord c{"convex decomposition of Y", true, {}};
        c.values.emplace_back("eta", e.str());
        c.values.emplace_back("weights", w_psd.str() + ", " + w_max.str());
        check(c, "weights positive", w_psd.sign() > 0 && w_max.sign() > 0);
        check(c, "Y equals the weighted sum", scaled(w_psd, x_psd) + scaled(w_max, x_max) == y);
        check(c, "Y positive semidefinite", psd_check_exact(y, false));
        report.claims.push_back(std::move(c));
    }
    {
        ClaimRecord c{"PSD 2-extension of X(4,1,2sqrt2+1)", true, {}};
        ExactOperator ext = ExactOperator::zero(d * d * d);
        for (std::size_t i = 0; i < d; ++i) ext += ExactOperator::outer(sym_extension_vector(i));
        const PivotRun run = pivot_run(ext);
        c.values.emplace_back("extension rank", std::to_string(run.rank));
        check(c, "extension positive semidefinite", run.psd);
        check(c, "extension symmetric in B1, B2", swap_b_factors(ext) == ext);
        check(c, "reduction equals X(4,1,2sqrt2+1)", reduce_b_factors(ext) == x_psd);
        report.claims.push_back(std::move(c));
    }
    {
        ClaimRecord c{"max 2-extension of X(0,1,1)", true, {}};
        const ExactOperator sigma = ExactOperator::outer(permutation_vector());
        const std::vector<std::size_t> two{d, d}, three{d, d, d};
        const ExactOperator pt = partial_transpose(x_max, two, 1);
        const ExactOperator reduced = reduce_b_factors(sigma);
        // Scale from the first nonzero entry, then confirmed entrywise.
        QuadScalar s;
        for (std::size_t i = 0; i < pt.entries.size(); ++i) {
            if (!pt.entries[i].is_zero()) {
                s = reduced.entries[i] / pt.entries[i];
                break;
            }
        }
        report.reduction_scale = s;
        c.values.emplace_back("reduction scale", s.str());
        check(c, "sigma positive semidefinite", psd_check_exact(sigma, false));
        check(c, "sigma symmetric in B1, B2", swap_b_factors(sigma) == sigma);
        check(c, "scale positive", s.sign() > 0);
        check(c, "reduce(sigma) = scale * PT(X(0,1,1))", reduced == scaled(s, pt));
        const ExactOperator sigma_pt = partial_transpose(partial_transpose(sigma, three, 1), three, 2);
        check(c, "reduce(PT_B sigma) = scale * X(0,1,1)", reduce_b_factors(sigma_pt) == scaled(s, x_max));
        check(c, "PT involution", partial_transpose(pt, two, 1) == x_max);
        report.claims.push_back(std::move(c));
    }
    {
        ClaimRecord c{"Y is not PSD 2-extendible", true, {}};
        const ExactOperator w = build_X(1, e, QuadScalar(-2) * e);
        const ExactOperator w2 = symmetric_lift(w);
        const PivotRun run = pivot_run(w2);
        const QuadScalar tr = trace_product(y, w);
        c.values.emplace_back("tr(YW)", tr.str());
        c.values.emplace_back("W2 rank", std::to_string(run.rank));
        check(c, "W not positive semidefinite", !psd_check_exact(w, false));
        check(c, "W2 positive definite", run.definite);
        check(c, "tr(YW) = 0", tr.is_zero());
        check(c, "Y nonzero", y != ExactOperator::zero(d * d));
        bool adjoint = trace_product(reduce_b_factors(kron(build_X(1, 0, 0), ExactOperator::identity(d))), w) ==
                       trace_product(kron(build_X(1, 0, 0), ExactOperator::identity(d)), w2);
        std::mt19937_64 rng(2);
        for (int trial = 0; trial < 3; ++trial) {
            const ExactOperator z = random_symmetric(rng, d * d * d);
            adjoint = adjoint && trace_product(reduce_b_factors(z), w) == trace_product(z, w2);
        }
        check(c, "tr(reduce(Z) W) = tr(Z W2)", adjoint);
        report.claims.push_back(std::move(c));
    }
    for (const auto& c : report.claims) {
        if (!c.verdict) throw AppendixFailure("claim failed: " + c.label);
    }
    return report;
}

}  // namespace conext::quantum
