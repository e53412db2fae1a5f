#include "conext/cone.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace conext {

namespace {

/// Dynamic bitset over processed constraint rows.
class ZeroSet {
public:
    explicit ZeroSet(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}
    void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    void grow(std::size_t bits) { words_.resize((bits + 63) / 64, 0); }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }
    ZeroSet operator&(const ZeroSet& o) const {
        ZeroSet r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
        return r;
    }
    bool subset_of(const ZeroSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & ~o.words_[i]) return false;
        }
        return true;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct DdRay {
    RationalVector v;
    ZeroSet zeros;
};

std::vector<std::size_t> tight_indices(const RationalVector& x, const std::vector<RationalVector>& functionals) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < functionals.size(); ++i) {
        if (dot(functionals[i], x).is_zero()) out.push_back(i);
    }
    return out;
}

std::size_t rank_of(const std::vector<RationalVector>& all, const std::vector<std::size_t>& pick) {
    RationalMatrix m;
    m.reserve(pick.size());
    for (auto i : pick) m.push_back(all[i]);
    return rank(std::move(m));
}

/// Colexicographic comparison of index sets: the larger set is the one that
/// owns the largest element of the symmetric difference.
bool colex_less(const std::vector<bool>& a, const std::vector<bool>& b) {
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return b[i];
    }
    return false;
}

}  // namespace

std::vector<RationalVector> double_description(const std::vector<RationalVector>& rows) {
    if (rows.empty()) throw ConeError("double description needs at least one constraint");
    const std::size_t n = rows.front().size();

    // Greedy choice of n independent rows for the initial simplicial cone.
    std::vector<std::size_t> basis_rows;
    RationalMatrix chosen;
    for (std::size_t i = 0; i < rows.size() && basis_rows.size() < n; ++i) {
        chosen.push_back(rows[i]);
        if (rank(chosen) == chosen.size()) {
            basis_rows.push_back(i);
        } else {
            chosen.pop_back();
        }
    }
    if (basis_rows.size() < n) throw ConeError("constraint rows do not span the ambient space");
    const auto inv = inverse(chosen);

    std::vector<std::size_t> order = basis_rows;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (std::find(basis_rows.begin(), basis_rows.end(), i) == basis_rows.end()) order.push_back(i);
    }

    // Rays of {B f >= 0} are the columns of B^{-1}; ray j is tight on every
    // basis row except row j. Zero sets index positions in `order`.
    std::vector<DdRay> rays;
    for (std::size_t j = 0; j < n; ++j) {
        DdRay r{RationalVector(n), ZeroSet(rows.size())};
        for (std::size_t i = 0; i < n; ++i) r.v[i] = (*inv)[i][j];
        r.v = primitive(r.v);
        for (std::size_t i = 0; i < n; ++i) {
            if (i != j) r.zeros.set(i);
        }
        rays.push_back(std::move(r));
    }

    for (std::size_t step = n; step < order.size(); ++step) {
        const RationalVector& a = rows[order[step]];
        std::vector<Rational> val(rays.size());
        std::vector<std::size_t> pos, neg;
        std::vector<DdRay> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(a, rays[i].v);
            if (val[i].sign() > 0) pos.push_back(i);
            else if (val[i].sign() < 0) neg.push_back(i);
        }
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (val[i].sign() == 0) rays[i].zeros.set(step);
            if (val[i].sign() >= 0) next.push_back(rays[i]);
        }
        for (auto p : pos) {
            for (auto q : neg) {
                const ZeroSet common = rays[p].zeros & rays[q].zeros;
                if (common.count() + 2 < n) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == q) continue;
                    if (common.subset_of(rays[r].zeros)) adjacent = false;
                }
                if (!adjacent) continue;
                RationalVector v(n);
                for (std::size_t i = 0; i < n; ++i) {
                    v[i] = val[p] * rays[q].v[i] - val[q] * rays[p].v[i];
                }
                DdRay nr{primitive(v), common};
                nr.zeros.set(step);
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
    }

    std::vector<RationalVector> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.v));
    return out;
}

Cone make_cone(const std::vector<RationalVector>& generators) {
    if (generators.empty()) throw ConeError("empty generator list");
    const std::size_t n = generators.front().size();
    if (n == 0) throw ConeError("zero-dimensional ambient space");

    std::vector<RationalVector> gens;
    for (const auto& g : generators) {
        if (g.size() != n) throw ConeError("generators have different dimensions");
        auto p = primitive(g);
        if (std::all_of(p.begin(), p.end(), [](const Rational& x) { return x.is_zero(); })) {
            throw ConeError("zero generator");
        }
        if (std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(std::move(p));
    }
    if (rank(gens) < n) throw ConeError("generators are not full-dimensional");

    auto facets = double_description(gens);
    if (rank(facets) < n) throw ConeError("cone contains a line");

    Cone c;
    c.dim_ = n;
    for (auto& g : gens) {
        if (rank_of(facets, tight_indices(g, facets)) + 1 == n) c.rays_.push_back(std::move(g));
    }

    // Colex order of facets by incident ray sets.
    std::vector<std::vector<bool>> inc(facets.size(), std::vector<bool>(c.rays_.size()));
    for (std::size_t f = 0; f < facets.size(); ++f) {
        for (std::size_t r = 0; r < c.rays_.size(); ++r) inc[f][r] = dot(facets[f], c.rays_[r]).is_zero();
    }
    std::vector<std::size_t> idx(facets.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return colex_less(inc[a], inc[b]); });
    for (auto i : idx) c.facets_.push_back(std::move(facets[i]));

    c.incidence_.assign(c.rays_.size(), std::vector<bool>(c.facets_.size()));
    for (std::size_t r = 0; r < c.rays_.size(); ++r) {
        for (std::size_t f = 0; f < c.facets_.size(); ++f) c.incidence_[r][f] = dot(c.facets_[f], c.rays_[r]).is_zero();
    }
    c.certify();
    return c;
}

void Cone::certify() const {
    const std::size_t n = dim_;
    for (const auto& r : rays_) {
        for (const auto& f : facets_) {
            if (dot(f, r).sign() < 0) throw ConeError("double description certificate failed: negative pairing");
        }
        if (rank_of(facets_, tight_indices(r, facets_)) + 1 != n) {
            throw ConeError("double description certificate failed: ray not extreme");
        }
    }
    for (const auto& f : facets_) {
        if (rank_of(rays_, tight_indices(f, rays_)) + 1 != n) {
            throw ConeError("double description certificate failed: facet not supported");
        }
    }
    if (rank(rays_) != n || rank(facets_) != n) throw ConeError("cone is not proper");
}

bool Cone::contains(const RationalVector& x) const {
    return std::all_of(facets_.begin(), facets_.end(), [&](const RationalVector& f) { return dot(f, x).sign() >= 0; });
}

bool Cone::contains_in_interior(const RationalVector& x) const {
    return std::all_of(facets_.begin(), facets_.end(), [&](const RationalVector& f) { return dot(f, x).sign() > 0; });
}

Cone dualize(const Cone& c) {
    Cone d;
    d.dim_ = c.dim_;
    d.rays_ = c.facets_;
    std::vector<std::vector<bool>> inc(c.rays_.size(), std::vector<bool>(d.rays_.size()));
    for (std::size_t f = 0; f < c.rays_.size(); ++f) {
        for (std::size_t r = 0; r < d.rays_.size(); ++r) inc[f][r] = c.incidence_[f][r];
    }
    std::vector<std::size_t> idx(c.rays_.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return colex_less(inc[a], inc[b]); });
    for (auto i : idx) d.facets_.push_back(c.rays_[i]);
    d.incidence_.assign(d.rays_.size(), std::vector<bool>(d.facets_.size()));
    for (std::size_t r = 0; r < d.rays_.size(); ++r) {
        for (std::size_t f = 0; f < d.facets_.size(); ++f) d.incidence_[r][f] = c.incidence_[idx[f]][r];
    }
    d.certify();
    return d;
}

bool is_simplicial(const Cone& c) { return c.rays().size() == c.dim(); }

RationalVector interior_point(const Cone& c) {
    RationalVector s(c.dim());
    for (const auto& r : c.rays()) {
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += r[i];
    }
    if (!c.contains_in_interior(s)) throw ConeError("ray sum is not interior");
    return s;
}

bool same_cone(const Cone& a, const Cone& b) {
    if (a.dim() != b.dim() || a.rays().size() != b.rays().size()) return false;
    return std::all_of(a.rays().begin(), a.rays().end(), [&](const RationalVector& r) {
        return std::find(b.rays().begin(), b.rays().end(), r) != b.rays().end();
    });
}

Polytope base_polytope(const Cone& c, const RationalVector& phi) {
    if (phi.size() != c.dim()) throw ConeError("phi has the wrong dimension");
    Polytope p;
    p.dim = c.dim() - 1;
    p.hyperplane = phi;
    for (const auto& r : c.rays()) {
        const Rational s = dot(phi, r);
        if (s.sign() <= 0) throw ConeError("phi is not strictly positive on ray " + to_string(r));
        RationalVector v(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) v[i] = r[i] / s;
        p.vertices.push_back(std::move(v));
    }
    p.point = p.vertices.front();
    p.directions = null_space(RationalMatrix{phi}, c.dim());
    p.facet_functionals = c.facets();
    p.incidence = c.incidence();
    return p;
}

BasedCone make_based(Cone c, RationalVector phi) {
    Polytope base = base_polytope(c, phi);
    return BasedCone{std::move(c), std::move(phi), std::move(base)};
}

}  // namespace conext
