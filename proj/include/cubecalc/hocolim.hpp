// Homotopy colimit of a copunctured cube: the coend of X(T) x Delta^{[n]-T}.
//
// Levelwise coequalizer of the arrow layer against the object layer, i.e.
// the quotient of the disjoint union of X(T) x Delta^{[n]-T} by
// (a(x), w) ~ (x, incl(w)) for every covering arrow a : T -> T'. Classes are
// ordered by least member, so ids are deterministic.

#ifndef CUBECALC_HOCOLIM_HPP
#define CUBECALC_HOCOLIM_HPP

#include "cube.hpp"
#include "fcomplex.hpp"

namespace cubecalc {

struct CoendModel {
    CubeDiagram diag;  // copunctured
    int n = 1;
    int D = 0;
    std::vector<Mask> corners;
    std::vector<std::shared_ptr<const DeltaModel>> weight;  // Delta^{[n]-T} per corner
    std::vector<std::vector<int>> weight_pos;  // label position translation [n]-T -> 0..
    std::vector<std::vector<int>> off;         // [k][c] block offsets, last = total
    std::vector<std::vector<int>> cls;         // [k][raw] -> class
    std::vector<std::vector<int>> rep;         // [k][class] -> raw (least member)
    SSetPtr space;
    std::vector<SimplicialMap> insertions;     // X(T) -> hocolim at least weight vertex

    int corner_index(Mask m) const {
        for (std::size_t c = 0; c < corners.size(); ++c)
            if (corners[c] == m) return static_cast<int>(c);
        throw ValidationError("coend: unknown corner");
    }
    SimplexId class_of(int k, int c, SimplexId x, SimplexId w) const {
        return cls[k][off[k][c] + x * weight[c]->space->size(k) + w];
    }
    // decompose a raw id
    std::tuple<int, SimplexId, SimplexId> raw_decompose(int k, int raw) const {
        int c = 0;
        while (off[k][c + 1] <= raw) ++c;
        int local = raw - off[k][c];
        int wsz = weight[c]->space->size(k);
        return {c, local / wsz, local % wsz};
    }
};

inline CoendModel hocolim_copunctured(Workspace& /*ws*/, const CubeDiagram& diag_in) {
    if (diag_in.shape.variant != CubeVariant::Copunctured)
        throw UsageError("hocolim_copunctured: expected a copunctured diagram");
    CoendModel C;
    C.diag = diag_in;
    C.n = diag_in.shape.n;
    C.D = diag_in.trunc;
    C.corners = diag_in.shape.corners();
    const int NC = static_cast<int>(C.corners.size());
    const Mask full = diag_in.shape.full_mask();

    C.weight.resize(NC);
    C.weight_pos.resize(NC);
    for (int c = 0; c < NC; ++c) {
        Mask comp = full & ~C.corners[c];
        auto compset = mask_to_set(comp);
        C.weight[c] = DeltaModel::get(compset.size() - 1, C.D);
        C.weight_pos[c].assign(C.n + 1, -1);
        for (int q = 0; q < compset.size(); ++q) C.weight_pos[c][compset.elems[q]] = q;
    }

    C.off.assign(C.D + 1, std::vector<int>(NC + 1, 0));
    for (int k = 0; k <= C.D; ++k)
        for (int c = 0; c < NC; ++c)
            C.off[k][c + 1] =
                C.off[k][c] + diag_in.at(C.corners[c])->size(k) * C.weight[c]->space->size(k);

    C.cls.assign(C.D + 1, {});
    C.rep.assign(C.D + 1, {});
    std::vector<int> nclasses(C.D + 1, 0);
    for (int k = 0; k <= C.D; ++k) {
        detail::UnionFind uf(C.off[k][NC]);
        for (int c = 0; c < NC; ++c) {
            Mask T = C.corners[c];
            for (int j = 0; j <= C.n; ++j) {
                if (T & (1u << j)) continue;
                Mask T2 = T | (1u << j);
                if (!diag_in.shape.contains(T2)) continue;
                int c2 = C.corner_index(T2);
                const SimplicialMap& a = diag_in.covering(T, T2);
                // include weight of T2 into weight of T (labels [n]-T2 into [n]-T)
                const auto& w2 = *C.weight[c2];
                const auto& w1 = *C.weight[c];
                Mask comp2 = full & ~T2;
                auto comp2set = mask_to_set(comp2);
                std::vector<int> trans(comp2set.size());
                for (int q = 0; q < comp2set.size(); ++q)
                    trans[q] = C.weight_pos[c][comp2set.elems[q]];
                for (SimplexId x = 0; x < diag_in.at(T)->size(k); ++x)
                    for (SimplexId w = 0; w < w2.space->size(k); ++w) {
                        std::vector<int> t = w2.tuples[k][w];
                        for (int& v : t) v = trans[v];
                        SimplexId wi = w1.id_of(k, t);
                        int raw1 = C.off[k][c] + x * w1.space->size(k) + wi;
                        int raw2 = C.off[k][c2] + a.comp[k][x] * w2.space->size(k) + w;
                        uf.unite(raw1, raw2);
                    }
            }
        }
        C.cls[k].assign(C.off[k][NC], -1);
        for (int v = 0; v < C.off[k][NC]; ++v)
            if (uf.find(v) == v) {
                C.cls[k][v] = nclasses[k]++;
                C.rep[k].push_back(v);
            }
        for (int v = 0; v < C.off[k][NC]; ++v) C.cls[k][v] = C.cls[k][uf.find(v)];
    }

    SSetBuilder b(C.D);
    for (int k = 0; k <= C.D; ++k) b.set_level(k, nclasses[k]);
    int trust = C.D;
    for (Mask m : C.corners) trust = std::min(trust, diag_in.at(m)->trusted);
    auto structure = [&](int k, int kk, bool face_dir, int i, int raw) {
        auto [c, x, w] = C.raw_decompose(k, raw);
        const SSetPtr& X = C.diag.at(C.corners[c]);
        SimplexId x2 = face_dir ? X->face(k, i, x) : X->degen(k, i, x);
        SimplexId w2 = face_dir ? C.weight[c]->space->face(k, i, w) : C.weight[c]->space->degen(k, i, w);
        return C.off[kk][c] + x2 * C.weight[c]->space->size(kk) + w2;
    };
    for (int k = 1; k <= C.D; ++k)
        for (int i = 0; i <= k; ++i)
            for (int cl = 0; cl < nclasses[k]; ++cl)
                b.face_[k][i][cl] = C.cls[k - 1][structure(k, k - 1, true, i, C.rep[k][cl])];
    for (int k = 0; k < C.D; ++k)
        for (int i = 0; i <= k; ++i)
            for (int cl = 0; cl < nclasses[k]; ++cl)
                b.degen_[k][i][cl] = C.cls[k + 1][structure(k, k + 1, false, i, C.rep[k][cl])];
    b.trusted = trust;
    C.space = b.finish(true, "hocolim");

    for (int c = 0; c < NC; ++c) {
        SimplicialMap ins;
        ins.src = C.diag.at(C.corners[c]);
        ins.dst = C.space;
        ins.comp.resize(C.D + 1);
        for (int k = 0; k <= C.D; ++k) {
            ins.comp[k].resize(ins.src->size(k));
            SimplexId w0 = C.weight[c]->space->degen_to(0, k);
            for (SimplexId x = 0; x < ins.src->size(k); ++x)
                ins.comp[k][x] = C.class_of(k, c, x, w0);
        }
        C.insertions.push_back(std::move(ins));
    }
    return C;
}

}  // namespace cubecalc

#endif
