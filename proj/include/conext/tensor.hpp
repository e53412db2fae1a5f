#pragma once

// Dense exact tensors with slot bookkeeping.
//
// Entries are stored row-major: the last slot varies fastest. Slots carry a
// dimension and a variance; pairing and contraction always match a primal
// slot against a dual slot of the same dimension.

#include "conext/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace conext {

enum class Variance { primal, dual };

inline Variance opposite(Variance v) { return v == Variance::primal ? Variance::dual : Variance::primal; }

struct Slot {
    std::size_t dim = 0;
    Variance variance = Variance::primal;
    friend bool operator==(const Slot&, const Slot&) = default;
};

class TensorShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using MultiIndex = std::vector<std::size_t>;
using Permutation = std::vector<std::size_t>;  // sigma[s] = image of slot s

template <class S>
class DenseTensor {
public:
    /// The 0-slot tensor with value 1, neutral for kron.
    DenseTensor() : entries_{S(1)} {}

    explicit DenseTensor(std::vector<Slot> slots) : slots_(std::move(slots)) {
        entries_.assign(count(slots_), S());
    }

    DenseTensor(std::vector<Slot> slots, std::vector<S> entries)
        : slots_(std::move(slots)), entries_(std::move(entries)) {
        if (entries_.size() != count(slots_)) {
            throw TensorShapeError("entry count " + std::to_string(entries_.size()) +
                                   " does not match slot product " + std::to_string(count(slots_)));
        }
        for (const auto& s : slots_) {
            if (s.dim == 0) throw TensorShapeError("slot dimension must be positive");
        }
    }

    static DenseTensor scalar(S value) {
        DenseTensor t;
        t.entries_[0] = std::move(value);
        return t;
    }

    static DenseTensor vector(std::vector<S> v, Variance variance = Variance::primal) {
        const std::size_t n = v.size();
        return DenseTensor({Slot{n, variance}}, std::move(v));
    }

    static DenseTensor basis_vector(std::size_t dim, std::size_t i, Variance variance = Variance::primal) {
        DenseTensor t({Slot{dim, variance}});
        t.entries_.at(i) = S(1);
        return t;
    }

    const std::vector<Slot>& slots() const { return slots_; }
    std::size_t order() const { return slots_.size(); }
    std::size_t size() const { return entries_.size(); }
    std::span<const S> entries() const { return entries_; }
    std::vector<S>& mutable_entries() { return entries_; }

    const S& operator[](std::size_t flat) const { return entries_[flat]; }
    S& operator[](std::size_t flat) { return entries_[flat]; }

    const S& at(const MultiIndex& idx) const { return entries_[flat_index(idx)]; }
    S& at(const MultiIndex& idx) { return entries_[flat_index(idx)]; }

    std::size_t flat_index(const MultiIndex& idx) const {
        if (idx.size() != slots_.size()) throw TensorShapeError("multi-index has wrong length");
        std::size_t flat = 0;
        for (std::size_t s = 0; s < slots_.size(); ++s) {
            if (idx[s] >= slots_[s].dim) throw TensorShapeError("multi-index out of range");
            flat = flat * slots_[s].dim + idx[s];
        }
        return flat;
    }

    MultiIndex multi_index(std::size_t flat) const {
        MultiIndex idx(slots_.size());
        for (std::size_t s = slots_.size(); s-- > 0;) {
            idx[s] = flat % slots_[s].dim;
            flat /= slots_[s].dim;
        }
        return idx;
    }

    bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.end(), [](const S& x) { return x.is_zero(); });
    }

    DenseTensor& operator+=(const DenseTensor& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
        return *this;
    }
    DenseTensor& operator-=(const DenseTensor& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
        return *this;
    }
    DenseTensor& operator*=(const S& c) {
        for (auto& x : entries_) x *= c;
        return *this;
    }
    /// this += c * o
    void add_scaled(const S& c, const DenseTensor& o) {
        require_same_shape(o);
        if (c.is_zero()) return;
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i].add_product(c, o.entries_[i]);
    }

    friend DenseTensor operator+(DenseTensor a, const DenseTensor& b) { return a += b; }
    friend DenseTensor operator-(DenseTensor a, const DenseTensor& b) { return a -= b; }
    friend DenseTensor operator*(DenseTensor a, const S& c) { return a *= c; }
    friend DenseTensor operator*(const S& c, DenseTensor a) { return a *= c; }

    friend bool operator==(const DenseTensor& a, const DenseTensor& b) {
        return a.slots_ == b.slots_ && a.entries_ == b.entries_;
    }

private:
    static std::size_t count(const std::vector<Slot>& slots) {
        std::size_t n = 1;
        for (const auto& s : slots) n *= s.dim;
        return n;
    }

    void require_same_shape(const DenseTensor& o) const {
        if (slots_ != o.slots_) throw TensorShapeError("tensor shapes differ");
    }

    std::vector<Slot> slots_;
    std::vector<S> entries_;
};

using Tensor = DenseTensor<Rational>;

// ---------------------------------------------------------------------------
// Combinatorial helpers

/// All permutations of {0, ..., k-1} in lexicographic order.
inline std::vector<Permutation> all_permutations(std::size_t k) {
    Permutation p(k);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::vector<Permutation> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// Non-decreasing sequences of length k over {0, ..., n-1}, lexicographic.
inline std::vector<MultiIndex> multisets(std::size_t n, std::size_t k) {
    std::vector<MultiIndex> out;
    MultiIndex cur(k, 0);
    if (n == 0) return out;
    while (true) {
        out.push_back(cur);
        std::size_t pos = k;
        while (pos > 0 && cur[pos - 1] == n - 1) --pos;
        if (pos == 0) break;
        const std::size_t v = cur[pos - 1] + 1;
        for (std::size_t i = pos - 1; i < k; ++i) cur[i] = v;
    }
    return out;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline std::size_t factorial(std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 2; i <= k; ++i) r *= i;
    return r;
}

/// Permanent of a square matrix by dynamic programming over column subsets.
template <class S>
S permanent(const std::vector<std::vector<S>>& m) {
    const std::size_t k = m.size();
    if (k == 0) return S(1);
    std::vector<S> dp(std::size_t{1} << k);
    dp[0] = S(1);
    for (std::size_t mask = 0; mask < dp.size(); ++mask) {
        if (dp[mask].is_zero()) continue;
        const auto row = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (row >= k) continue;
        for (std::size_t c = 0; c < k; ++c) {
            if (mask & (std::size_t{1} << c)) continue;
            dp[mask | (std::size_t{1} << c)].add_product(dp[mask], m[row][c]);
        }
    }
    return dp.back();
}

// ---------------------------------------------------------------------------
// Operations

/// U_sigma: output slot sigma(s) carries input slot s, so on pure tensors
/// output slot j holds factor sigma^{-1}(j).
template <class S>
DenseTensor<S> permute_slots(const DenseTensor<S>& t, const Permutation& sigma) {
    const std::size_t k = t.order();
    if (sigma.size() != k) throw TensorShapeError("permutation length differs from tensor order");
    std::vector<bool> seen(k, false);
    for (auto s : sigma) {
        if (s >= k || seen[s]) throw TensorShapeError("not a permutation");
        seen[s] = true;
    }
    for (std::size_t s = 0; s < k; ++s) {
        if (!(t.slots()[s] == t.slots()[sigma[s]])) throw TensorShapeError("permuted slots have different shape");
    }
    DenseTensor<S> out(t.slots());
    MultiIndex in_idx(k);
    for (std::size_t f = 0; f < out.size(); ++f) {
        const MultiIndex out_idx = out.multi_index(f);
        for (std::size_t s = 0; s < k; ++s) in_idx[s] = out_idx[sigma[s]];
        out[f] = t.at(in_idx);
    }
    return out;
}

/// Average of U_sigma over all permutations of the `count` slots starting at
/// `first`; the remaining slots are untouched (Id (x) P_Sym).
template <class S>
DenseTensor<S> symmetric_project(const DenseTensor<S>& t, std::size_t first, std::size_t count) {
    const std::size_t k = t.order();
    if (first + count > k) throw TensorShapeError("slot range out of bounds");
    for (std::size_t s = first; s < first + count; ++s) {
        if (!(t.slots()[s] == t.slots()[first])) throw TensorShapeError("symmetrized slots must share shape");
    }
    if (count <= 1) return t;
    const auto perms = all_permutations(count);
    DenseTensor<S> out(t.slots());
    MultiIndex in_idx(k);
    for (std::size_t f = 0; f < out.size(); ++f) {
        const MultiIndex out_idx = out.multi_index(f);
        S acc;
        for (const auto& p : perms) {
            in_idx = out_idx;
            for (std::size_t s = 0; s < count; ++s) in_idx[first + s] = out_idx[first + p[s]];
            acc += t.at(in_idx);
        }
        out[f] = acc / S(static_cast<long>(perms.size()));
    }
    return out;
}

template <class S>
DenseTensor<S> symmetric_project(const DenseTensor<S>& t) {
    return symmetric_project(t, 0, t.order());
}

template <class S>
DenseTensor<S> kron(const DenseTensor<S>& a, const DenseTensor<S>& b) {
    std::vector<Slot> slots = a.slots();
    slots.insert(slots.end(), b.slots().begin(), b.slots().end());
    std::vector<S> entries;
    entries.reserve(a.size() * b.size());
    for (const auto& x : a.entries()) {
        for (const auto& y : b.entries()) entries.push_back(x * y);
    }
    return DenseTensor<S>(std::move(slots), std::move(entries));
}

/// t^{(x) k}; k = 0 gives the scalar 1.
template <class S>
DenseTensor<S> tensor_power(const DenseTensor<S>& t, std::size_t k) {
    DenseTensor<S> out;
    for (std::size_t i = 0; i < k; ++i) out = kron(out, t);
    return out;
}

/// Contracts `slot` of t against the one-slot tensor f of opposite variance.
template <class S>
DenseTensor<S> contract_slot(const DenseTensor<S>& t, std::size_t slot, const DenseTensor<S>& f) {
    if (f.order() != 1) throw TensorShapeError("contraction functional must have exactly one slot");
    if (slot >= t.order()) throw TensorShapeError("slot index out of range");
    const Slot& ts = t.slots()[slot];
    const Slot& fs = f.slots()[0];
    if (ts.dim != fs.dim) throw TensorShapeError("contraction dimension mismatch");
    if (ts.variance == fs.variance) throw TensorShapeError("contraction requires opposite variance");
    std::vector<Slot> slots = t.slots();
    slots.erase(slots.begin() + static_cast<long>(slot));
    DenseTensor<S> out(slots);
    std::size_t inner = 1;
    for (std::size_t s = slot + 1; s < t.order(); ++s) inner *= t.slots()[s].dim;
    const std::size_t d = ts.dim;
    for (std::size_t f_out = 0; f_out < out.size(); ++f_out) {
        const std::size_t hi = f_out / inner;
        const std::size_t lo = f_out % inner;
        S acc;
        for (std::size_t i = 0; i < d; ++i) acc.add_product(t[(hi * d + i) * inner + lo], f[i]);
        out[f_out] = std::move(acc);
    }
    return out;
}

/// Full pairing <a, b>: same dimensions slot by slot, opposite variances.
template <class S>
S pairing(const DenseTensor<S>& a, const DenseTensor<S>& b) {
    if (a.order() != b.order()) throw TensorShapeError("pairing: orders differ");
    for (std::size_t s = 0; s < a.order(); ++s) {
        if (a.slots()[s].dim != b.slots()[s].dim || a.slots()[s].variance == b.slots()[s].variance) {
            throw TensorShapeError("pairing: slot " + std::to_string(s) + " is not dual");
        }
    }
    S acc;
    for (std::size_t i = 0; i < a.size(); ++i) acc.add_product(a[i], b[i]);
    return acc;
}

/// Slot list with every variance flipped.
inline std::vector<Slot> dual_slots(std::vector<Slot> slots) {
    for (auto& s : slots) s.variance = opposite(s.variance);
    return slots;
}

/// Basis of Sym_k(Q^n): P_Sym(e_{m_1} (x) ... (x) e_{m_k}) for each multiset m
/// in lexicographic order.
template <class S = Rational>
std::vector<DenseTensor<S>> sym_basis(std::size_t n, std::size_t k, Variance variance = Variance::primal) {
    if (n == 0 || k == 0) throw std::invalid_argument("sym_basis requires n >= 1 and k >= 1");
    std::vector<DenseTensor<S>> out;
    const std::vector<Slot> slots(k, Slot{n, variance});
    for (const auto& m : multisets(n, k)) {
        // Entries are 1/|orbit| on every rearrangement of m.
        MultiIndex idx = m;
        std::vector<MultiIndex> orbit;
        do {
            orbit.push_back(idx);
        } while (std::next_permutation(idx.begin(), idx.end()));
        DenseTensor<S> t(slots);
        const S w = S(1) / S(static_cast<long>(orbit.size()));
        for (const auto& o : orbit) t.at(o) = w;
        out.push_back(std::move(t));
    }
    return out;
}

/// Entry of P_Sym(v_1 (x) ... (x) v_k) at multi-index idx: perm(v_s[idx_t]) / k!.
template <class S>
S sym_product_entry(const std::vector<const std::vector<S>*>& factors, const MultiIndex& idx) {
    const std::size_t k = factors.size();
    std::vector<std::vector<S>> m(k, std::vector<S>(k));
    for (std::size_t s = 0; s < k; ++s) {
        for (std::size_t t = 0; t < k; ++t) m[s][t] = (*factors[s])[idx[t]];
    }
    return permanent(m) / S(static_cast<long>(factorial(k)));
}

/// Entries of a tensor at the multi-indices whose trailing `sym_count` slots
/// are non-decreasing; coordinates for tensors symmetric in those slots.
template <class S>
std::vector<S> sorted_coordinates(const DenseTensor<S>& t, std::size_t sym_count) {
    const std::size_t k = t.order();
    if (sym_count > k) throw TensorShapeError("sym_count exceeds order");
    std::vector<S> out;
    for (std::size_t f = 0; f < t.size(); ++f) {
        const MultiIndex idx = t.multi_index(f);
        if (std::is_sorted(idx.begin() + static_cast<long>(k - sym_count), idx.end())) out.push_back(t[f]);
    }
    return out;
}

}  // namespace conext
