// Reduction of punctured diagrams (singleton corners become literal points)
// and its dual, coreduction of copunctured diagrams.

#ifndef CUBECALC_REDUCE_HPP
#define CUBECALC_REDUCE_HPP

#include "cube.hpp"

namespace cubecalc {

struct ReducedDiagram {
    CubeDiagram diag;                       // the reduced diagram
    std::map<Mask, SimplicialMap> natural;  // Y(S) -> red(Y)(S)
};

// red(Y)(S) = colim( Y(S) <- ⊔_{j in S} Y({j}) -> S ), computed as the
// pushout of the same relation set the join construction uses.
inline ReducedDiagram reduce_diagram(const CubeDiagram& Y) {
    if (Y.shape.variant != CubeVariant::Punctured)
        throw UsageError("reduce_diagram: expected a punctured diagram");
    const int D = Y.trunc;
    ReducedDiagram R;
    R.diag.shape = Y.shape;
    R.diag.trunc = D;
    std::map<Mask, SimplicialMap> from_pts;
    for (Mask S : Y.shape.corners()) {
        auto Sset = mask_to_set(S);
        std::vector<SSetPtr> singls;
        std::vector<SimplicialMap> legs;
        for (int j : Sset.elems) singls.push_back(Y.at(1u << j));
        Coproduct A = coproduct(singls, D);
        SimplicialMap f;  // ⊔ Y({j}) -> Y(S)
        f.src = A.space;
        f.dst = Y.at(S);
        f.comp.resize(D + 1);
        for (int k = 0; k <= D; ++k) f.comp[k].resize(A.space->size(k));
        for (int p = 0; p < Sset.size(); ++p) {
            SimplicialMap arrow = Y.arrow(1u << Sset.elems[p], S);
            for (int k = 0; k <= D; ++k)
                for (SimplexId x = 0; x < singls[p]->size(k); ++x)
                    f.comp[k][A.in[p].comp[k][x]] = arrow.comp[k][x];
        }
        auto disc = discrete_sset(Sset.size(), D);
        SimplicialMap g;  // collapse each summand to its indexing point
        g.src = A.space;
        g.dst = disc;
        g.comp.resize(D + 1);
        for (int k = 0; k <= D; ++k) {
            g.comp[k].resize(A.space->size(k));
            for (int p = 0; p < Sset.size(); ++p)
                for (SimplexId x = 0; x < singls[p]->size(k); ++x)
                    g.comp[k][A.in[p].comp[k][x]] = p;
        }
        Pushout P = pushout(f, g);
        R.diag.obj[S] = P.space;
        R.natural[S] = P.fromX;
        from_pts[S] = P.fromY;
    }
    // arrows descend along representatives
    for (const auto& [key, a] : Y.arr) {
        auto [S, T] = key;
        auto Sset = mask_to_set(S);
        auto Tset = mask_to_set(T);
        SimplicialMap out;
        out.src = R.diag.obj[S];
        out.dst = R.diag.obj[T];
        out.comp.resize(D + 1);
        for (int k = 0; k <= D; ++k) {
            out.comp[k].assign(out.src->size(k), -1);
            for (SimplexId x = 0; x < Y.at(S)->size(k); ++x)
                out.comp[k][R.natural[S].comp[k][x]] = R.natural[T].comp[k][a.comp[k][x]];
            for (int p = 0; p < Sset.size(); ++p) {
                // point p of disc(S) goes to point q of disc(T)
                int q = Tset.position_of(Sset.elems[p]);
                SimplexId src_pt = from_pts[S].comp[k][p];
                out.comp[k][src_pt] = from_pts[T].comp[k][q];
            }
        }
        R.diag.arr[key] = out;
    }
    R.diag.validate("reduce_diagram");
    return R;
}

inline bool is_reduced(const CubeDiagram& Y) {
    for (Mask S : Y.shape.corners())
        if (popcount(S) == 1) {
            const SSetPtr& X = Y.at(S);
            for (int k = 0; k <= X->trunc; ++k)
                if (X->size(k) != 1) return false;
        }
    return true;
}

// Coreduction: corner [n]-S is cut down to the strict pullback of the
// basepoint tuple against the product of restriction maps. `basepoints`
// gives a chosen vertex of each corner [n]-{s}.
struct CoreducedDiagram {
    CubeDiagram diag;
    std::map<Mask, Subspace> cut;  // inclusion data per corner
};

inline CoreducedDiagram coreduce_diagram(const CubeDiagram& Y,
                                         const std::map<int, SimplexId>& basepoints) {
    if (Y.shape.variant != CubeVariant::Copunctured)
        throw UsageError("coreduce_diagram: expected a copunctured diagram");
    const int D = Y.trunc;
    const Mask full = Y.shape.full_mask();
    CoreducedDiagram R;
    R.diag.shape = Y.shape;
    R.diag.trunc = D;
    for (Mask T : Y.shape.corners()) {
        Mask S = full & ~T;
        std::vector<std::vector<char>> keep(D + 1);
        const SSetPtr& X = Y.at(T);
        for (int k = 0; k <= D; ++k) keep[k].assign(X->size(k), 1);
        for (int s = 0; s <= Y.shape.n; ++s) {
            if (!(S & (1u << s))) continue;
            Mask Ts = full & ~(1u << s);
            auto it = basepoints.find(s);
            if (it == basepoints.end())
                throw UsageError("coreduce_diagram: missing basepoint for corner [n]-{" +
                                 std::to_string(s) + "}");
            SimplicialMap a = Y.arrow(T, Ts);
            const SSetPtr& Xs = Y.at(Ts);
            for (int k = 0; k <= D; ++k) {
                SimplexId bp = Xs->degen_to(it->second, k);
                for (SimplexId x = 0; x < X->size(k); ++x)
                    if (a.comp[k][x] != bp) keep[k][x] = 0;
            }
        }
        R.cut[T] = subspace(X, keep);
        R.diag.obj[T] = R.cut[T].space;
    }
    for (const auto& [key, a] : Y.arr) {
        auto [T, T2] = key;
        SimplicialMap out;
        out.src = R.diag.obj[T];
        out.dst = R.diag.obj[T2];
        out.comp.resize(D + 1);
        for (int k = 0; k <= D; ++k) {
            out.comp[k].resize(out.src->size(k));
            for (SimplexId x = 0; x < out.src->size(k); ++x) {
                SimplexId y = a.comp[k][R.cut[T].incl.comp[k][x]];
                SimplexId z = R.cut[T2].new_id[k][y];
                if (z < 0) throw ValidationError("coreduce: arrow leaves the coreduced part");
                out.comp[k][x] = z;
            }
        }
        R.diag.arr[key] = out;
    }
    R.diag.validate("coreduce_diagram");
    return R;
}

}  // namespace cubecalc

#endif
