// Realizing a simplicial set from its nondegenerate presentation.
//
// Degenerate simplices at level k are pairs (nondegenerate x of dim j,
// monotone surjection [k] ->> [j]); faces of nondegenerate simplices may be
// degenerate and are given as such pairs. The realizer synthesizes every
// level up to the truncation. Level order: nondegenerate part first, then
// degenerates by (codimension, core id, surjection).

#ifndef CUBECALC_PRESENT_HPP
#define CUBECALC_PRESENT_HPP

#include "sset.hpp"

namespace cubecalc {

// monotone surjections [k] ->> [j] in lexicographic order
inline std::vector<std::vector<int>> monotone_surjections(int k, int j) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int pos, int val) {
        if (pos == k + 1) {
            if (val == j) out.push_back(cur);
            return;
        }
        // remaining positions must still reach j
        for (int v = val; v <= std::min(val + 1, j); ++v) {
            if (j - v > k - pos) continue;
            cur.push_back(v);
            rec(pos + 1, v);
            cur.pop_back();
        }
    };
    cur.push_back(0);
    rec(1, 0);
    return out;
}

struct FaceRef {
    int core_dim = 0;
    int core_id = 0;
    std::vector<int> surj;  // [j-1] ->> [core_dim]; identity when core_dim == j-1
};

struct Presentation {
    int D = 0;
    std::vector<int> counts;  // nondegenerate count per dim (size = top dim + 1)
    // faces[j][x][i] for j >= 1
    std::vector<std::vector<std::vector<FaceRef>>> faces;
    std::optional<int> basepoint;  // a 0-simplex
};

struct Realization {
    SSetPtr space;
    // (core dim, core id, surjection) per level simplex
    std::vector<std::vector<std::tuple<int, int, std::vector<int>>>> atoms;
    std::vector<std::vector<SimplexId>> nondeg_id;  // [j][x] -> id at level j

    SimplexId id_of(int k, int j, int x, const std::vector<int>& surj) const {
        const auto& lv = atoms[k];
        auto key = std::make_tuple(k - j, x, surj);  // ordering below
        (void)key;
        for (std::size_t i = 0; i < lv.size(); ++i)
            if (std::get<0>(lv[i]) == j && std::get<1>(lv[i]) == x && std::get<2>(lv[i]) == surj)
                return static_cast<SimplexId>(i);
        throw ValidationError("realize: atom not found");
    }
};

inline Realization realize(const Presentation& pres) {
    const int D = pres.D;
    const int J = static_cast<int>(pres.counts.size()) - 1;
    Realization R;
    R.atoms.resize(D + 1);
    for (int k = 0; k <= D; ++k) {
        // nondegenerate first
        if (k <= J)
            for (int x = 0; x < pres.counts[k]; ++x) {
                std::vector<int> id_surj(k + 1);
                std::iota(id_surj.begin(), id_surj.end(), 0);
                R.atoms[k].emplace_back(k, x, id_surj);
            }
        for (int cod = 1; cod <= k; ++cod) {
            int j = k - cod;
            if (j > J) continue;
            auto surjs = monotone_surjections(k, j);
            for (int x = 0; x < pres.counts[j]; ++x)
                for (const auto& s : surjs) {
                    bool ident = (j == k);
                    if (!ident) R.atoms[k].emplace_back(j, x, s);
                }
        }
    }
    // fast id lookup
    std::vector<std::map<std::tuple<int, int, std::vector<int>>, SimplexId>> index(D + 1);
    for (int k = 0; k <= D; ++k)
        for (std::size_t i = 0; i < R.atoms[k].size(); ++i)
            index[k][R.atoms[k][i]] = static_cast<SimplexId>(i);
    auto lookup = [&](int k, int j, int x, const std::vector<int>& s) {
        auto it = index[k].find(std::make_tuple(j, x, s));
        if (it == index[k].end()) throw ValidationError("realize: missing atom");
        return it->second;
    };

    // apply a monotone map psi : [l] -> [j] to nondegenerate x of dim j,
    // returning the atom at level l
    std::function<std::tuple<int, int, std::vector<int>>(int, int, const std::vector<int>&)> act =
        [&](int j, int x, const std::vector<int>& psi) -> std::tuple<int, int, std::vector<int>> {
        const int l = static_cast<int>(psi.size()) - 1;
        // find a missed value (psi not surjective)
        std::vector<char> hit(j + 1, 0);
        for (int v : psi) hit[v] = 1;
        int miss = -1;
        for (int v = j; v >= 0; --v)
            if (!hit[v]) { miss = v; break; }
        if (miss < 0) return {j, x, psi};  // surjective: normal form
        // psi = delta_miss . psi'  with psi' into [j-1]
        std::vector<int> psi2(psi.size());
        for (std::size_t u = 0; u < psi.size(); ++u) psi2[u] = psi[u] > miss ? psi[u] - 1 : psi[u];
        const FaceRef& fr = pres.faces[j][x][miss];
        // face = (core, rho); total action: core . (rho . psi2)
        std::vector<int> comp(psi2.size());
        if (fr.surj.empty()) {
            for (std::size_t u = 0; u < psi2.size(); ++u) comp[u] = psi2[u];
        } else {
            for (std::size_t u = 0; u < psi2.size(); ++u) comp[u] = fr.surj[psi2[u]];
        }
        (void)l;
        return act(fr.core_dim, fr.core_id, comp);
    };

    SSetBuilder b(D);
    for (int k = 0; k <= D; ++k) b.set_level(k, static_cast<int>(R.atoms[k].size()));
    for (int k = 1; k <= D; ++k)
        for (int i = 0; i <= k; ++i)
            for (std::size_t p = 0; p < R.atoms[k].size(); ++p) {
                auto [j, x, surj] = R.atoms[k][p];
                // delta_i then surj
                std::vector<int> psi(k);
                for (int u = 0, w = 0; u <= k; ++u) {
                    if (u == i) continue;
                    psi[w++] = surj[u];
                }
                auto [j2, x2, s2] = act(j, x, psi);
                b.face_[k][i][p] = lookup(k - 1, j2, x2, s2);
            }
    for (int k = 0; k < D; ++k)
        for (int i = 0; i <= k; ++i)
            for (std::size_t p = 0; p < R.atoms[k].size(); ++p) {
                auto [j, x, surj] = R.atoms[k][p];
                std::vector<int> psi(k + 2);
                for (int u = 0; u <= k + 1; ++u) psi[u] = surj[u <= i ? u : u - 1];
                b.degen_[k][i][p] = lookup(k + 1, j, x, psi);
            }
    b.basepoint = pres.basepoint;
    R.space = b.finish(true, "realize");
    R.nondeg_id.assign(J + 1, {});
    for (int j = 0; j <= std::min(J, D); ++j) {
        R.nondeg_id[j].resize(pres.counts[j]);
        for (int x = 0; x < pres.counts[j]; ++x) R.nondeg_id[j][x] = lookup(j, j, x, [&] {
            std::vector<int> idv(j + 1);
            std::iota(idv.begin(), idv.end(), 0);
            return idv;
        }());
    }
    return R;
}

}  // namespace cubecalc

#endif
