// Homotopy limit of a punctured cube: the end of Hom(Delta^S x Delta^m, X(S)).
//
// A level-m element is a family f_S : Delta^S x Delta^m -> X(S), natural in
// S. Families are stored as flat value vectors over the nondegenerate prism
// simplices, corner blocks in canonical corner order. Slots lying on a
// sub-prism Delta^{S'} x Delta^m are forced from the facet family; only
// full-support slots are searched.

#ifndef CUBECALC_HOLIM_HPP
#define CUBECALC_HOLIM_HPP

#include "cube.hpp"
#include "fcomplex.hpp"

namespace cubecalc {

inline SimplexId eval_assignment_off(const SimplicialSet& P, const SimplicialSet& Y,
                                     const Assignment& flat, int base,
                                     const std::vector<int>& level_off, int k, SimplexId x) {
    if (!P.is_degenerate(k, x)) return flat[base + level_off[k] + P.nondeg_pos_[k][x]];
    auto [i, core] = P.witness_[k][x];
    return Y.degen(k - 1, i, eval_assignment_off(P, Y, flat, base, level_off, k - 1, core));
}

struct EndModel {
    CubeDiagram diag;  // punctured
    int n = 1;
    int D = 0;
    std::vector<Mask> corners;
    std::vector<int> corner_a;  // |S| - 1
    // prisms[c][m]; poff[c][m] = nondeg level offsets of that prism
    std::vector<std::vector<std::shared_ptr<const PrismModel>>> prisms;
    std::vector<std::vector<std::vector<int>>> poff;
    std::vector<std::vector<int>> corner_off;    // [m][c], last entry = flat length
    std::vector<std::vector<Assignment>> elems;  // [m], lex-sorted
    SSetPtr space;
    std::vector<SimplicialMap> projections;

    int corner_index(Mask m) const {
        for (std::size_t c = 0; c < corners.size(); ++c)
            if (corners[c] == m) return static_cast<int>(c);
        throw ValidationError("end: unknown corner");
    }
    SimplexId lookup(int m, const Assignment& flat) const {
        const auto& lv = elems[m];
        auto it = std::lower_bound(lv.begin(), lv.end(), flat);
        if (it == lv.end() || *it != flat) throw ValidationError("end: family not found");
        return static_cast<SimplexId>(it - lv.begin());
    }
    // component c of the family `flat` (level m), evaluated at prism simplex x (level k)
    SimplexId eval_comp(int m, const Assignment& flat, int c, int k, SimplexId x) const {
        return eval_assignment_off(*prisms[c][m]->space, *diag.at(corners[c]), flat,
                                   corner_off[m][c], poff[c][m], k, x);
    }
};

namespace detail {

// forced slot: value comes from a facet family through a diagram arrow
struct ForcedSlot {
    int slot;        // index into this corner's assignment block
    int level;
    int facet;       // corner index of the facet
    SimplexId pre;   // nondegenerate preimage in the facet prism
    const SimplicialMap* arrow;  // facet corner -> this corner
};

}  // namespace detail

inline EndModel holim_punctured(Workspace& ws, const CubeDiagram& diag_in) {
    if (diag_in.shape.variant != CubeVariant::Punctured)
        throw UsageError("holim_punctured: expected a punctured diagram");
    EndModel E;
    E.diag = diag_in;
    E.n = diag_in.shape.n;
    E.D = diag_in.trunc;
    E.corners = diag_in.shape.corners();
    const int NC = static_cast<int>(E.corners.size());

    int trust = E.D;
    int deficit = 0;
    for (Mask m : E.corners) {
        int a = popcount(m) - 1;
        int t = diag_in.at(m)->trusted - a;
        trust = std::min(trust, t);
        deficit = std::max(deficit, a - diag_in.at(m)->trusted);
    }
    if (trust < 0)
        throw TruncationError("holim: trusted level budget insufficient", E.D + deficit - trust);

    E.corner_a.resize(NC);
    E.prisms.resize(NC);
    E.poff.resize(NC);
    for (int c = 0; c < NC; ++c) {
        E.corner_a[c] = popcount(E.corners[c]) - 1;
        E.prisms[c].resize(E.D + 1);
        E.poff[c].resize(E.D + 1);
        for (int m = 0; m <= E.D; ++m) {
            E.prisms[c][m] = prism_model(E.corner_a[c], m, E.D);
            E.poff[c][m] = nondeg_offsets(*E.prisms[c][m]->space);
        }
    }

    E.corner_off.assign(E.D + 1, std::vector<int>(NC + 1, 0));
    for (int m = 0; m <= E.D; ++m)
        for (int c = 0; c < NC; ++c)
            E.corner_off[m][c + 1] =
                E.corner_off[m][c] + E.poff[c][m][E.D + 1];

    // facet data: for corner c and facet S-{j}, position translation
    // (facet positions -> corner positions)
    struct FacetInfo {
        int facet_corner;
        std::vector<int> pos;  // facet position -> corner position
        SimplicialMap arrow;   // X(S') -> X(S)
    };
    std::vector<std::vector<FacetInfo>> facets(NC);
    for (int c = 0; c < NC; ++c) {
        Mask S = E.corners[c];
        if (popcount(S) == 1) continue;
        auto Sset = mask_to_set(S);
        for (int p = 0; p < Sset.size(); ++p) {
            Mask Sp = S & ~(1u << Sset.elems[p]);
            FacetInfo fi;
            fi.facet_corner = E.corner_index(Sp);
            auto Spset = mask_to_set(Sp);
            fi.pos.resize(Spset.size());
            for (int q = 0; q < Spset.size(); ++q) fi.pos[q] = Sset.position_of(Spset.elems[q]);
            fi.arrow = diag_in.covering(Sp, S);
            facets[c].push_back(std::move(fi));
        }
    }

    E.elems.assign(E.D + 1, {});
    for (int m = 0; m <= E.D; ++m) {
        // per corner: split slots into free / forced
        std::vector<std::vector<detail::ForcedSlot>> forced(NC);
        std::vector<Assignment> pinmask(NC);  // -2 free, else forced marker (resolved per branch)
        for (int c = 0; c < NC; ++c) {
            const auto& pm = *E.prisms[c][m];
            pinmask[c].assign(E.poff[c][m][E.D + 1], -1);
            if (facets[c].empty()) continue;
            Mask S = E.corners[c];
            auto Sset = mask_to_set(S);
            for (int k = 0; k <= E.D; ++k)
                for (SimplexId z : pm.space->nondeg(k)) {
                    auto [s, t] = pm.unpack(k, z);
                    const auto& tup = pm.da->tuples[k][s];
                    Mask support = 0;
                    for (int v : tup) support |= 1u << Sset.elems[v];
                    if (support == S) continue;  // free
                    // forced from the facet dropping the largest absent label
                    int drop = -1;
                    for (int p = Sset.size() - 1; p >= 0; --p)
                        if (!(support & (1u << Sset.elems[p]))) { drop = p; break; }
                    const FacetInfo& fi = facets[c][drop];
                    // translate tuple to facet positions
                    std::vector<int> ft(tup.size());
                    for (std::size_t u = 0; u < tup.size(); ++u) {
                        int q = -1;
                        for (std::size_t w = 0; w < fi.pos.size(); ++w)
                            if (fi.pos[w] == tup[u]) { q = static_cast<int>(w); break; }
                        ft[u] = q;
                    }
                    const auto& fpm = *E.prisms[fi.facet_corner][m];
                    SimplexId fs = fpm.da->id_of(k, ft);
                    SimplexId pre = fpm.pack(k, fs, t);
                    detail::ForcedSlot f;
                    f.slot = E.poff[c][m][k] + pm.space->nondeg_pos_[k][z];
                    f.level = k;
                    f.facet = fi.facet_corner;
                    f.pre = pre;  // nondegenerate in the facet prism
                    f.arrow = &fi.arrow;
                    forced[c].push_back(f);
                }
        }

        Assignment flat(E.corner_off[m][NC], -1);
        std::vector<Assignment>& out = E.elems[m];
        std::function<void(int)> corner_dfs = [&](int c) {
            if (c == NC) {
                out.push_back(flat);
                if (out.size() > ws.cfg.max_enumeration)
                    throw BudgetError("holim enumeration exceeded budget at level " +
                                      std::to_string(m));
                return;
            }
            const auto& pm = *E.prisms[c][m];
            const SSetPtr& target = E.diag.at(E.corners[c]);
            MapSearch s;
            s.P = pm.space.get();
            s.Y = target.get();
            s.idx = &ws.index_for(target);
            s.pin = pinmask[c];
            for (const auto& f : forced[c]) {
                SimplexId v = eval_assignment_off(*E.prisms[f.facet][m]->space,
                                                  *E.diag.at(E.corners[f.facet]), flat,
                                                  E.corner_off[m][f.facet], E.poff[f.facet][m],
                                                  f.level, f.pre);
                s.pin[f.slot] = f.arrow->comp[f.level][v];
            }
            bool ok = s.run(
                [&](const Assignment& a) {
                    std::copy(a.begin(), a.end(), flat.begin() + E.corner_off[m][c]);
                    corner_dfs(c + 1);
                },
                ws.cfg.max_enumeration);
            if (!ok)
                throw BudgetError("holim corner enumeration exceeded budget at level " +
                                  std::to_string(m));
            std::fill(flat.begin() + E.corner_off[m][c], flat.begin() + E.corner_off[m][c + 1], -1);
        };
        corner_dfs(0);
    }

    // assemble the simplicial set
    SSetBuilder b(E.D);
    for (int m = 0; m <= E.D; ++m) b.set_level(m, static_cast<int>(E.elems[m].size()));
    // Precomposition with id x delta^i (or sigma^i) only depends on the slot,
    // so the image tables are shared by all elements of a level.
    auto img_table = [&](int m_from, int m_to, bool face_dir, int i) {
        std::vector<std::vector<std::pair<int, SimplexId>>> tbl(NC);  // slot -> (level, img simplex)
        for (int c = 0; c < NC; ++c) {
            const auto& pmt = *E.prisms[c][m_to];
            const auto& pmf = *E.prisms[c][m_from];
            tbl[c].resize(E.poff[c][m_to][E.D + 1]);
            for (int k = 0; k <= E.D; ++k)
                for (SimplexId z : pmt.space->nondeg(k)) {
                    auto [s, t] = pmt.unpack(k, z);
                    std::vector<int> tup = pmt.dm->tuples[k][t];
                    if (face_dir)
                        for (int& v : tup) { if (v >= i) ++v; }
                    else
                        for (int& v : tup) { if (v > i) --v; }
                    SimplexId img = pmf.pack(k, s, pmf.dm->id_of(k, tup));
                    tbl[c][E.poff[c][m_to][k] + pmt.space->nondeg_pos_[k][z]] = {k, img};
                }
        }
        return tbl;
    };
    auto apply_table = [&](int m_from, int m_to,
                           const std::vector<std::vector<std::pair<int, SimplexId>>>& tbl,
                           const Assignment& e) {
        Assignment out(E.corner_off[m_to][NC]);
        for (int c = 0; c < NC; ++c)
            for (std::size_t s = 0; s < tbl[c].size(); ++s)
                out[E.corner_off[m_to][c] + s] =
                    E.eval_comp(m_from, e, c, tbl[c][s].first, tbl[c][s].second);
        return out;
    };
    for (int m = 1; m <= E.D; ++m)
        for (int i = 0; i <= m; ++i) {
            auto tbl = img_table(m, m - 1, true, i);
            for (SimplexId x = 0; x < b.sizes[m]; ++x)
                b.face_[m][i][x] = E.lookup(m - 1, apply_table(m, m - 1, tbl, E.elems[m][x]));
        }
    for (int m = 0; m < E.D; ++m)
        for (int i = 0; i <= m; ++i) {
            auto tbl = img_table(m, m + 1, false, i);
            for (SimplexId x = 0; x < b.sizes[m]; ++x)
                b.degen_[m][i][x] = E.lookup(m + 1, apply_table(m, m + 1, tbl, E.elems[m][x]));
        }
    b.trusted = trust;
    E.space = b.finish(true, "holim");

    // projections: evaluate at (least vertex of Delta^S, top simplex of Delta^m)
    for (int c = 0; c < NC; ++c) {
        SimplicialMap pr;
        pr.src = E.space;
        pr.dst = E.diag.at(E.corners[c]);
        pr.comp.resize(E.D + 1);
        for (int m = 0; m <= E.D; ++m) {
            pr.comp[m].resize(b.sizes[m]);
            const auto& pm = *E.prisms[c][m];
            std::vector<int> zero(m + 1, 0), top(m + 1);
            std::iota(top.begin(), top.end(), 0);
            SimplexId at = pm.pack(m, pm.da->id_of(m, zero), pm.dm->id_of(m, top));
            for (SimplexId x = 0; x < b.sizes[m]; ++x)
                pr.comp[m][x] = E.eval_comp(m, E.elems[m][x], c, m, at);
        }
        E.projections.push_back(std::move(pr));
    }
    return E;
}

}  // namespace cubecalc

#endif
