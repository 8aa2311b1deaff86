// Cartesian / cocartesian checks on full cubes.
//
// Strict mode compares the corner with the strict (co)limit of the
// punctured/copunctured restriction through the canonical map (a levelwise
// bijection is required; ids may differ). Homology mode compares homology
// profiles against the homotopy (co)limit models.

#ifndef CUBECALC_CHECKS_HPP
#define CUBECALC_CHECKS_HPP

#include "hocolim.hpp"
#include "holim.hpp"
#include "homology.hpp"
#include "reduce.hpp"
#include "report.hpp"

namespace cubecalc {

// strict limit of a punctured diagram: tuples over the singleton corners
// whose pushforwards agree at every larger corner
struct StrictLim {
    SSetPtr space;
    std::vector<std::vector<std::vector<SimplexId>>> tuples;  // [k][elt][singleton idx]
};

inline StrictLim strict_lim_punctured(const CubeDiagram& Y, std::size_t budget) {
    const int D = Y.trunc;
    const int n = Y.shape.n;
    StrictLim L;
    L.tuples.resize(D + 1);
    std::vector<Mask> singls;
    for (int j = 0; j <= n; ++j) singls.push_back(1u << j);
    std::vector<Mask> corners = Y.shape.corners();
    // precompose arrows singleton -> corner
    std::map<Mask, std::vector<SimplicialMap>> arrows;
    for (Mask S : corners) {
        std::vector<SimplicialMap> a;
        for (int j = 0; j <= n; ++j)
            if (S & (1u << j)) a.push_back(Y.arrow(1u << j, S));
        arrows[S] = a;
    }
    for (int k = 0; k <= D; ++k) {
        std::vector<SimplexId> cur(n + 1, 0);
        std::function<void(int)> rec = [&](int j) {
            if (j == n + 1) {
                for (Mask S : corners) {
                    if (popcount(S) < 2) continue;
                    SimplexId common = -1;
                    int idx = 0;
                    for (int t = 0; t <= n; ++t) {
                        if (!(S & (1u << t))) continue;
                        SimplexId v = arrows[S][idx++].comp[k][cur[t]];
                        if (common < 0) common = v;
                        else if (common != v) return;
                    }
                }
                L.tuples[k].push_back(cur);
                if (L.tuples[k].size() > budget) throw BudgetError("strict limit exceeded budget");
                return;
            }
            for (cur[j] = 0; cur[j] < Y.at(1u << j)->size(k); ++cur[j]) rec(j + 1);
            cur[j] = 0;
        };
        bool any_empty = false;
        for (int j = 0; j <= n; ++j) any_empty |= Y.at(1u << j)->size(k) == 0;
        if (!any_empty) rec(0);
    }
    SSetBuilder b(D);
    for (int k = 0; k <= D; ++k) b.set_level(k, static_cast<int>(L.tuples[k].size()));
    auto id_of = [&](int k, const std::vector<SimplexId>& t) {
        auto it = std::lower_bound(L.tuples[k].begin(), L.tuples[k].end(), t);
        if (it == L.tuples[k].end() || *it != t) throw ValidationError("strict lim: tuple missing");
        return static_cast<SimplexId>(it - L.tuples[k].begin());
    };
    for (int k = 1; k <= D; ++k)
        for (int i = 0; i <= k; ++i)
            for (SimplexId x = 0; x < b.sizes[k]; ++x) {
                std::vector<SimplexId> t = L.tuples[k][x];
                for (int j = 0; j <= n; ++j) t[j] = Y.at(1u << j)->face(k, i, t[j]);
                b.face_[k][i][x] = id_of(k - 1, t);
            }
    for (int k = 0; k < D; ++k)
        for (int i = 0; i <= k; ++i)
            for (SimplexId x = 0; x < b.sizes[k]; ++x) {
                std::vector<SimplexId> t = L.tuples[k][x];
                for (int j = 0; j <= n; ++j) t[j] = Y.at(1u << j)->degen(k, i, t[j]);
                b.degen_[k][i][x] = id_of(k + 1, t);
            }
    int trust = D;
    for (Mask m : corners) trust = std::min(trust, Y.at(m)->trusted);
    b.trusted = trust;
    L.space = b.finish(true, "strict_lim");
    return L;
}

// strict colimit of a copunctured diagram: quotient of the disjoint union
struct StrictColim {
    SSetPtr space;
    std::vector<std::vector<int>> cls;  // per level over disjoint union
    std::vector<std::vector<int>> off;  // [k][corner]
    std::vector<std::vector<int>> rep;
};

inline StrictColim strict_colim_copunctured(const CubeDiagram& Y) {
    const int D = Y.trunc;
    std::vector<Mask> corners = Y.shape.corners();
    const int NC = static_cast<int>(corners.size());
    StrictColim C;
    C.off.assign(D + 1, std::vector<int>(NC + 1, 0));
    auto cidx = [&](Mask m) {
        for (int c = 0; c < NC; ++c)
            if (corners[c] == m) return c;
        throw ValidationError("strict colim: unknown corner");
    };
    for (int k = 0; k <= D; ++k)
        for (int c = 0; c < NC; ++c) C.off[k][c + 1] = C.off[k][c] + Y.at(corners[c])->size(k);
    C.cls.assign(D + 1, {});
    C.rep.assign(D + 1, {});
    std::vector<int> ncls(D + 1, 0);
    for (int k = 0; k <= D; ++k) {
        detail::UnionFind uf(C.off[k][NC]);
        for (const auto& [key, a] : Y.arr) {
            int c1 = cidx(key.first), c2 = cidx(key.second);
            for (SimplexId x = 0; x < Y.at(key.first)->size(k); ++x)
                uf.unite(C.off[k][c1] + x, C.off[k][c2] + a.comp[k][x]);
        }
        C.cls[k].assign(C.off[k][NC], -1);
        for (int v = 0; v < C.off[k][NC]; ++v)
            if (uf.find(v) == v) {
                C.cls[k][v] = ncls[k]++;
                C.rep[k].push_back(v);
            }
        for (int v = 0; v < C.off[k][NC]; ++v) C.cls[k][v] = C.cls[k][uf.find(v)];
    }
    SSetBuilder b(D);
    for (int k = 0; k <= D; ++k) b.set_level(k, ncls[k]);
    auto decompose = [&](int k, int raw) {
        int c = 0;
        while (C.off[k][c + 1] <= raw) ++c;
        return std::make_pair(c, raw - C.off[k][c]);
    };
    for (int k = 1; k <= D; ++k)
        for (int i = 0; i <= k; ++i)
            for (int cl = 0; cl < ncls[k]; ++cl) {
                auto [c, x] = decompose(k, C.rep[k][cl]);
                b.face_[k][i][cl] = C.cls[k - 1][C.off[k - 1][c] + Y.at(corners[c])->face(k, i, x)];
            }
    for (int k = 0; k < D; ++k)
        for (int i = 0; i <= k; ++i)
            for (int cl = 0; cl < ncls[k]; ++cl) {
                auto [c, x] = decompose(k, C.rep[k][cl]);
                b.degen_[k][i][cl] = C.cls[k + 1][C.off[k + 1][c] + Y.at(corners[c])->degen(k, i, x)];
            }
    int trust = D;
    for (Mask m : corners) trust = std::min(trust, Y.at(m)->trusted);
    b.trusted = trust;
    C.space = b.finish(true, "strict_colim");
    return C;
}

namespace detail {
inline bool bijective_levelwise(const SimplicialMap& f, CheckReport& rep) {
    for (int k = 0; k <= f.src->trunc; ++k) {
        rep.row(k, std::to_string(f.src->size(k)), std::to_string(f.dst->size(k)));
        if (f.src->size(k) != f.dst->size(k)) return false;
        std::vector<char> seen(f.dst->size(k), 0);
        for (SimplexId x = 0; x < f.src->size(k); ++x) {
            if (seen[f.comp[k][x]]) {
                rep.fail("level " + std::to_string(k) + " simplex " + std::to_string(x) +
                         " collides");
                return false;
            }
            seen[f.comp[k][x]] = 1;
        }
    }
    return true;
}
}  // namespace detail

inline CheckReport cartesian_check(Workspace& ws, const CubeDiagram& cube,
                                   const std::string& mode) {
    if (cube.shape.variant != CubeVariant::Full) throw UsageError("cartesian_check: full cube expected");
    CheckReport rep;
    rep.name = "cartesian";
    rep.mode = mode;
    CubeDiagram punct = cube.restricted(CubeVariant::Punctured);
    const SSetPtr& init = cube.at(0);
    if (mode == "strict") {
        StrictLim L = strict_lim_punctured(punct, ws.cfg.max_enumeration);
        // canonical map init -> lim via the cube arrows to the singletons
        SimplicialMap f;
        f.src = init;
        f.dst = L.space;
        f.comp.resize(cube.trunc + 1);
        std::vector<SimplicialMap> legs;
        for (int j = 0; j <= cube.shape.n; ++j) legs.push_back(cube.arrow(0, 1u << j));
        for (int k = 0; k <= cube.trunc; ++k) {
            f.comp[k].resize(init->size(k));
            for (SimplexId x = 0; x < init->size(k); ++x) {
                std::vector<SimplexId> t(cube.shape.n + 1);
                for (int j = 0; j <= cube.shape.n; ++j) t[j] = legs[j].comp[k][x];
                auto it = std::lower_bound(L.tuples[k].begin(), L.tuples[k].end(), t);
                if (it == L.tuples[k].end() || *it != t) {
                    rep.fail("level " + std::to_string(k) + ": image tuple missing");
                    return rep;
                }
                f.comp[k][x] = static_cast<SimplexId>(it - L.tuples[k].begin());
            }
        }
        detail::bijective_levelwise(f, rep);
    } else if (mode == "homology") {
        EndModel E = holim_punctured(ws, punct);
        auto p = homology_profile(*init);
        auto q = homology_profile(*E.space);
        int overlap = std::min(p.valid_dim, q.valid_dim);
        for (int k = 0; k <= overlap; ++k) {
            auto show = [&](const HomologyProfile& pr) {
                std::string s = "Z^" + std::to_string(pr.betti[k]);
                for (long long t : pr.torsion[k]) s += "+Z/" + std::to_string(t);
                return s;
            };
            rep.row(k, show(p), show(q));
        }
    } else {
        throw UsageError("cartesian_check: unknown mode " + mode);
    }
    return rep;
}

inline CheckReport cocartesian_check(Workspace& ws, const CubeDiagram& cube,
                                     const std::string& mode) {
    if (cube.shape.variant != CubeVariant::Full)
        throw UsageError("cocartesian_check: full cube expected");
    CheckReport rep;
    rep.name = "cocartesian";
    rep.mode = mode;
    CubeDiagram cop = cube.restricted(CubeVariant::Copunctured);
    const Mask full = cube.shape.full_mask();
    const SSetPtr& fin = cube.at(full);
    if (mode == "strict") {
        StrictColim C = strict_colim_copunctured(cop);
        // canonical map colim -> final corner
        std::vector<Mask> corners = cop.shape.corners();
        SimplicialMap f;
        f.src = C.space;
        f.dst = fin;
        f.comp.resize(cube.trunc + 1);
        std::vector<SimplicialMap> arrows;
        for (Mask m : corners) arrows.push_back(cube.arrow(m, full));
        for (int k = 0; k <= cube.trunc; ++k) {
            f.comp[k].resize(C.space->size(k));
            for (SimplexId cl = 0; cl < C.space->size(k); ++cl) {
                int raw = C.rep[k][cl];
                int c = 0;
                while (C.off[k][c + 1] <= raw) ++c;
                f.comp[k][cl] = arrows[c].comp[k][raw - C.off[k][c]];
            }
        }
        detail::bijective_levelwise(f, rep);
    } else if (mode == "homology") {
        CoendModel C = hocolim_copunctured(ws, cop);
        auto p = homology_profile(*fin);
        auto q = homology_profile(*C.space);
        int overlap = std::min(p.valid_dim, q.valid_dim);
        for (int k = 0; k <= overlap; ++k) {
            auto show = [&](const HomologyProfile& pr) {
                std::string s = "Z^" + std::to_string(pr.betti[k]);
                for (long long t : pr.torsion[k]) s += "+Z/" + std::to_string(t);
                return s;
            };
            rep.row(k, show(p), show(q));
        }
    } else {
        throw UsageError("cocartesian_check: unknown mode " + mode);
    }
    return rep;
}

// sub-2-face of a full cube at base S0 in directions {i, j}
inline CubeDiagram sub_square(const CubeDiagram& cube, Mask S0, int i, int j) {
    CubeDiagram sq;
    sq.shape = CubeShape(1, CubeVariant::Full);
    sq.trunc = cube.trunc;
    sq.obj[0b00] = cube.at(S0);
    sq.obj[0b01] = cube.at(S0 | (1u << i));
    sq.obj[0b10] = cube.at(S0 | (1u << j));
    sq.obj[0b11] = cube.at(S0 | (1u << i) | (1u << j));
    sq.arr[{0b00, 0b01}] = cube.covering(S0, S0 | (1u << i));
    sq.arr[{0b00, 0b10}] = cube.covering(S0, S0 | (1u << j));
    sq.arr[{0b01, 0b11}] = cube.covering(S0 | (1u << i), S0 | (1u << i) | (1u << j));
    sq.arr[{0b10, 0b11}] = cube.covering(S0 | (1u << j), S0 | (1u << i) | (1u << j));
    return sq;
}

inline CheckReport strongly_check(Workspace& ws, const CubeDiagram& cube, const std::string& mode,
                                  bool cocartesian) {
    CheckReport rep;
    rep.name = cocartesian ? "strongly_cocartesian" : "strongly_cartesian";
    rep.mode = mode;
    for (Mask S0 = 0; S0 <= cube.shape.full_mask(); ++S0)
        for (int i = 0; i <= cube.shape.n; ++i)
            for (int j = i + 1; j <= cube.shape.n; ++j) {
                if ((S0 >> i) & 1 || (S0 >> j) & 1) continue;
                if (!cube.shape.contains(S0 | (1u << i) | (1u << j))) continue;
                CubeDiagram sq = sub_square(cube, S0, i, j);
                CheckReport sub = cocartesian ? cocartesian_check(ws, sq, mode)
                                              : cartesian_check(ws, sq, mode);
                if (!sub.passed) {
                    rep.fail("face base=" + mask_to_set(S0).to_string() + " dirs={" +
                             std::to_string(i) + "," + std::to_string(j) + "}: " + sub.witness);
                    return rep;
                }
            }
    return rep;
}

// Cube generated by iterated pushouts of a star of maps X -> X_i.
inline CubeDiagram strongly_cocartesian_from_maps(const std::vector<SimplicialMap>& maps) {
    if (maps.size() < 2) throw UsageError("strongly_cocartesian_from_maps: need n+1 >= 2 maps");
    const int n = static_cast<int>(maps.size()) - 1;
    SSetPtr X = maps[0].src;
    for (const auto& f : maps)
        if (*f.src != *X) throw UsageError("strongly_cocartesian_from_maps: common source required");
    const int D = X->trunc;
    CubeDiagram cube;
    cube.shape = CubeShape(n, CubeVariant::Full);
    cube.trunc = D;
    std::map<Mask, StarColimit> colims;
    for (Mask S = 0; S <= cube.shape.full_mask(); ++S) {
        std::vector<SimplicialMap> legs;
        for (int j = 0; j <= n; ++j)
            if (S & (1u << j)) legs.push_back(maps[j]);
        colims[S] = star_colimit(X, legs);
        cube.obj[S] = colims[S].space;
    }
    for (Mask S = 0; S <= cube.shape.full_mask(); ++S)
        for (int j = 0; j <= n; ++j) {
            if (S & (1u << j)) continue;
            Mask T = S | (1u << j);
            // induced map on classes via representatives
            const StarColimit& A = colims[S];
            const StarColimit& B = colims[T];
            auto Sset = mask_to_set(S);
            SimplicialMap out;
            out.src = A.space;
            out.dst = B.space;
            out.comp.resize(D + 1);
            for (int k = 0; k <= D; ++k) {
                out.comp[k].assign(A.space->size(k), -1);
                if (Sset.size() == 0) {
                    // center: X -> colim(T)
                    out.comp[k] = B.fromCenter.comp[k];
                } else {
                    auto Tset = mask_to_set(T);
                    for (int p = 0; p < Sset.size(); ++p) {
                        int q = Tset.position_of(Sset.elems[p]);
                        const SSetPtr& leg = maps[Sset.elems[p]].dst;
                        for (SimplexId x = 0; x < leg->size(k); ++x)
                            out.comp[k][A.fromLeg[p].comp[k][x]] = B.fromLeg[q].comp[k][x];
                    }
                }
            }
            cube.arr[{S, T}] = out;
        }
    cube.validate("strongly_cocartesian_from_maps");
    return cube;
}

}  // namespace cubecalc

#endif
