// Levelwise maps of truncated simplicial sets.

#ifndef CUBECALC_SMAP_HPP
#define CUBECALC_SMAP_HPP

#include <string>
#include <vector>

#include "sset.hpp"

namespace cubecalc {

struct SimplicialMap {
    SSetPtr src;
    SSetPtr dst;
    std::vector<std::vector<SimplexId>> comp;  // comp[k][x] for k in 0..trunc

    SimplexId at(int k, SimplexId x) const { return comp[k][x]; }

    void validate(const std::string& where = "SimplicialMap") const {
        auto fail = [&](const std::string& msg) { throw ValidationError(where + ": " + msg); };
        if (!src || !dst) fail("missing endpoint");
        if (src->trunc != dst->trunc) fail("maps are compared only at a common truncation");
        if (static_cast<int>(comp.size()) != src->trunc + 1) fail("component count");
        for (int k = 0; k <= src->trunc; ++k) {
            if (static_cast<int>(comp[k].size()) != src->size(k)) fail("component size at level " + std::to_string(k));
            for (SimplexId x : comp[k])
                if (x < 0 || x >= dst->size(k)) fail("image out of range at level " + std::to_string(k));
        }
        for (int k = 1; k <= src->trunc; ++k)
            for (int i = 0; i <= k; ++i)
                for (SimplexId x = 0; x < src->size(k); ++x)
                    if (dst->face(k, i, comp[k][x]) != comp[k - 1][src->face(k, i, x)])
                        fail("does not commute with d_" + std::to_string(i) + " at level " + std::to_string(k));
        for (int k = 0; k < src->trunc; ++k)
            for (int i = 0; i <= k; ++i)
                for (SimplexId x = 0; x < src->size(k); ++x)
                    if (dst->degen(k, i, comp[k][x]) != comp[k + 1][src->degen(k, i, x)])
                        fail("does not commute with s_" + std::to_string(i) + " at level " + std::to_string(k));
    }

    bool same_components(const SimplicialMap& o) const { return comp == o.comp; }
    bool operator==(const SimplicialMap& o) const {
        return *src == *o.src && *dst == *o.dst && comp == o.comp;
    }
};

inline SimplicialMap identity_map(const SSetPtr& X) {
    SimplicialMap f;
    f.src = f.dst = X;
    f.comp.resize(X->trunc + 1);
    for (int k = 0; k <= X->trunc; ++k) {
        f.comp[k].resize(X->size(k));
        for (SimplexId x = 0; x < X->size(k); ++x) f.comp[k][x] = x;
    }
    return f;
}

inline SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    // g after f
    if (*f.dst != *g.src) throw ValidationError("compose: middle objects differ");
    SimplicialMap h;
    h.src = f.src;
    h.dst = g.dst;
    h.comp.resize(f.comp.size());
    for (std::size_t k = 0; k < f.comp.size(); ++k) {
        h.comp[k].resize(f.comp[k].size());
        for (std::size_t x = 0; x < f.comp[k].size(); ++x)
            h.comp[k][x] = g.comp[k][f.comp[k][x]];
    }
    return h;
}

inline bool is_identity(const SimplicialMap& f) {
    for (std::size_t k = 0; k < f.comp.size(); ++k)
        for (std::size_t x = 0; x < f.comp[k].size(); ++x)
            if (f.comp[k][x] != static_cast<SimplexId>(x)) return false;
    return true;
}

// True iff every component function is injective.
inline bool is_levelwise_injective(const SimplicialMap& f) {
    for (int k = 0; k <= f.src->trunc; ++k) {
        std::vector<char> seen(f.dst->size(k), 0);
        for (SimplexId x = 0; x < f.src->size(k); ++x) {
            SimplexId y = f.comp[k][x];
            if (seen[y]) return false;
            seen[y] = 1;
        }
    }
    return true;
}

// Constant map at vertex v of Y (all simplices to the degeneracies of v).
inline SimplicialMap constant_map(const SSetPtr& X, const SSetPtr& Y, SimplexId v) {
    SimplicialMap f;
    f.src = X;
    f.dst = Y;
    f.comp.resize(X->trunc + 1);
    for (int k = 0; k <= X->trunc; ++k)
        f.comp[k].assign(X->size(k), Y->degen_to(v, k));
    return f;
}

}  // namespace cubecalc

#endif
