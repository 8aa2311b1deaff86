// Power-set index categories and cube diagrams.
//
// Corners are subsets of [n] = {0..n} stored as bitmasks; the canonical
// corner order is (popcount, numeric value). Only covering arrows
// S -> S + {j} are stored; general arrows compose along ascending chains,
// which the functoriality check makes path-independent.

#ifndef CUBECALC_CUBE_HPP
#define CUBECALC_CUBE_HPP

#include <cstdint>
#include <map>

#include "smap.hpp"
#include "ops.hpp"

namespace cubecalc {

using Mask = std::uint32_t;

inline int popcount(Mask m) { return __builtin_popcount(m); }

inline OrderedFiniteSet mask_to_set(Mask m) {
    std::vector<int> e;
    for (int j = 0; j < 31; ++j)
        if (m & (1u << j)) e.push_back(j);
    return OrderedFiniteSet(e);
}
inline Mask set_to_mask(const OrderedFiniteSet& S) {
    Mask m = 0;
    for (int v : S.elems) {
        if (v < 0 || v > 30) throw UsageError("subset element out of range");
        m |= 1u << v;
    }
    return m;
}

enum class CubeVariant { Full, Punctured, Copunctured };

inline std::string variant_name(CubeVariant v) {
    switch (v) {
        case CubeVariant::Full: return "full";
        case CubeVariant::Punctured: return "punctured";
        default: return "copunctured";
    }
}

struct CubeShape {
    int n = 1;  // cube on [n] = {0..n}
    CubeVariant variant = CubeVariant::Full;

    CubeShape() = default;
    CubeShape(int n_, CubeVariant v) : n(n_), variant(v) {
        if (n < 1) throw UsageError("cube shapes start at n = 1");
    }
    Mask full_mask() const { return (1u << (n + 1)) - 1; }
    bool contains(Mask m) const {
        if (m > full_mask()) return false;
        if (variant == CubeVariant::Punctured && m == 0) return false;
        if (variant == CubeVariant::Copunctured && m == full_mask()) return false;
        return true;
    }
    // corners ordered by (size, value)
    std::vector<Mask> corners() const {
        std::vector<Mask> out;
        for (int c = 0; c <= n + 1; ++c)
            for (Mask m = 0; m <= full_mask(); ++m)
                if (popcount(m) == c && contains(m)) out.push_back(m);
        return out;
    }
};

struct CubeDiagram {
    CubeShape shape;
    int trunc = 0;
    std::map<Mask, SSetPtr> obj;
    std::map<std::pair<Mask, Mask>, SimplicialMap> arr;  // covering arrows

    const SSetPtr& at(Mask m) const {
        auto it = obj.find(m);
        if (it == obj.end()) throw ValidationError("cube: missing corner " + mask_to_set(m).to_string());
        return it->second;
    }
    const SimplicialMap& covering(Mask from, Mask to) const {
        auto it = arr.find({from, to});
        if (it == arr.end())
            throw ValidationError("cube: missing arrow " + mask_to_set(from).to_string() + "->" +
                                  mask_to_set(to).to_string());
        return it->second;
    }
    // arrow along the ascending chain from -> to (adds bits in increasing order)
    SimplicialMap arrow(Mask from, Mask to) const {
        if ((from & to) != from) throw UsageError("cube arrow: not a subset");
        SimplicialMap f = identity_map(at(from));
        Mask cur = from;
        for (int j = 0; j <= shape.n; ++j)
            if ((to & (1u << j)) && !(cur & (1u << j))) {
                f = compose(covering(cur, cur | (1u << j)), f);
                cur |= 1u << j;
            }
        return f;
    }

    void validate(const std::string& where = "CubeDiagram") const {
        for (Mask m : shape.corners()) at(m);
        for (const auto& [key, f] : arr) {
            if (!shape.contains(key.first) || !shape.contains(key.second) ||
                popcount(key.second) != popcount(key.first) + 1 ||
                (key.first & key.second) != key.first)
                throw ValidationError(where + ": bad arrow key");
            if (*f.src != *at(key.first) || *f.dst != *at(key.second))
                throw ValidationError(where + ": arrow endpoints mismatch");
            f.validate(where);
        }
        int D = trunc;
        for (Mask m : shape.corners())
            if (at(m)->trunc != D) throw ValidationError(where + ": corners at mixed truncations");
        // functoriality: all covering squares commute
        for (Mask m : shape.corners())
            for (int i = 0; i <= shape.n; ++i)
                for (int j = i + 1; j <= shape.n; ++j) {
                    Mask mi = m | (1u << i), mj = m | (1u << j), mij = m | (1u << i) | (1u << j);
                    if ((m & (1u << i)) || (m & (1u << j))) continue;
                    if (!shape.contains(m) || !shape.contains(mi) || !shape.contains(mj) ||
                        !shape.contains(mij))
                        continue;
                    SimplicialMap a = compose(covering(mi, mij), covering(m, mi));
                    SimplicialMap b = compose(covering(mj, mij), covering(m, mj));
                    if (!a.same_components(b))
                        throw ValidationError(where + ": square at " + mask_to_set(m).to_string() +
                                              " +{" + std::to_string(i) + "," + std::to_string(j) +
                                              "} does not commute");
                }
    }

    CubeDiagram restricted(CubeVariant v) const {
        CubeDiagram out;
        out.shape = CubeShape(shape.n, v);
        out.trunc = trunc;
        for (Mask m : out.shape.corners()) out.obj[m] = at(m);
        for (const auto& [key, f] : arr)
            if (out.shape.contains(key.first) && out.shape.contains(key.second)) out.arr[key] = f;
        return out;
    }
};

// Apply a functor-like object/map action corner-wise.
inline CubeDiagram map_corners(const CubeDiagram& d,
                               const std::function<SSetPtr(const SSetPtr&)>& ob,
                               const std::function<SimplicialMap(const SimplicialMap&)>& mor) {
    CubeDiagram out;
    out.shape = d.shape;
    for (const auto& [m, X] : d.obj) out.obj[m] = ob(X);
    for (const auto& [key, f] : d.arr) {
        SimplicialMap g = mor(f);
        g.src = out.obj[key.first];
        g.dst = out.obj[key.second];
        out.arr[key] = g;
    }
    out.trunc = out.obj.begin()->second->trunc;
    return out;
}

// n-ary product with mixed-radix packing (first factor most significant).
struct MultiProduct {
    SSetPtr space;
    std::vector<SSetPtr> factors;
    std::vector<SimplicialMap> proj;

    SimplexId pack(int k, const std::vector<SimplexId>& xs) const {
        SimplexId id = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) id = id * factors[i]->size(k) + xs[i];
        return id;
    }
};

inline MultiProduct multi_product(const std::vector<SSetPtr>& fs, int D) {
    MultiProduct M;
    M.factors = fs;
    if (fs.empty()) {
        M.space = point_sset(D);
        return M;
    }
    SSetBuilder b(D);
    std::vector<long long> tot(D + 1, 1);
    for (int k = 0; k <= D; ++k) {
        for (const auto& f : fs) tot[k] *= f->size(k);
        b.set_level(k, static_cast<int>(tot[k]));
    }
    auto unpack = [&](int k, SimplexId p) {
        std::vector<SimplexId> xs(fs.size());
        for (int i = static_cast<int>(fs.size()) - 1; i >= 0; --i) {
            xs[i] = p % fs[i]->size(k);
            p /= fs[i]->size(k);
        }
        return xs;
    };
    for (int k = 1; k <= D; ++k)
        for (int i = 0; i <= k; ++i)
            for (SimplexId p = 0; p < b.sizes[k]; ++p) {
                auto xs = unpack(k, p);
                for (std::size_t q = 0; q < fs.size(); ++q) xs[q] = fs[q]->face(k, i, xs[q]);
                SimplexId id = 0;
                for (std::size_t q = 0; q < fs.size(); ++q) id = id * fs[q]->size(k - 1) + xs[q];
                b.face_[k][i][p] = id;
            }
    for (int k = 0; k < D; ++k)
        for (int i = 0; i <= k; ++i)
            for (SimplexId p = 0; p < b.sizes[k]; ++p) {
                auto xs = unpack(k, p);
                for (std::size_t q = 0; q < fs.size(); ++q) xs[q] = fs[q]->degen(k, i, xs[q]);
                SimplexId id = 0;
                for (std::size_t q = 0; q < fs.size(); ++q) id = id * fs[q]->size(k + 1) + xs[q];
                b.degen_[k][i][p] = id;
            }
    int trust = D;
    for (const auto& f : fs) trust = std::min(trust, f->trusted);
    b.trusted = trust;
    M.space = b.finish(true, "multi_product");
    for (std::size_t q = 0; q < fs.size(); ++q) {
        SimplicialMap pr;
        pr.src = M.space;
        pr.dst = fs[q];
        pr.comp.resize(D + 1);
        for (int k = 0; k <= D; ++k) {
            pr.comp[k].resize(M.space->size(k));
            for (SimplexId p = 0; p < M.space->size(k); ++p) pr.comp[k][p] = unpack(k, p)[q];
        }
        M.proj.push_back(std::move(pr));
    }
    return M;
}

}  // namespace cubecalc

#endif
