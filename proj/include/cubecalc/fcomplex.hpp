// Enumeration of simplicial maps and function complexes.
//
// A simplicial map out of P is determined by its values on nondegenerate
// simplices; values on degenerate simplices follow from the degeneracy
// witnesses. enumerate_maps runs a depth-first search over the nondegenerate
// slots in (level, id) order with full-boundary lookup at levels >= 1 and
// edge-consistency forward checking at level 0.

#ifndef CUBECALC_FCOMPLEX_HPP
#define CUBECALC_FCOMPLEX_HPP

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "ops.hpp"

namespace cubecalc {

// values on nondegenerate simplices, level-major, nondeg order
using Assignment = std::vector<SimplexId>;

namespace detail {

struct VecHash {
    std::size_t operator()(const std::vector<SimplexId>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (SimplexId x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace detail

// Per-target lookup tables, built once and cached in a Workspace.
struct TargetIndex {
    const SimplicialSet* Y = nullptr;
    // level k >= 1: full face tuple -> candidates (ascending)
    std::vector<std::unordered_map<std::vector<SimplexId>, std::vector<SimplexId>, detail::VecHash>> by_faces;
    // directed vertex pairs joined by some edge (d_1 e, d_0 e)
    std::unordered_set<std::int64_t> edge_pair;

    void build(const SimplicialSet& target) {
        Y = &target;
        by_faces.assign(target.trunc + 1, {});
        for (int k = 1; k <= target.trunc; ++k) {
            for (SimplexId y = 0; y < target.size(k); ++y) {
                std::vector<SimplexId> key(k + 1);
                for (int i = 0; i <= k; ++i) key[i] = target.face(k, i, y);
                by_faces[k][key].push_back(y);
            }
        }
        if (target.trunc >= 1)
            for (SimplexId e = 0; e < target.size(1); ++e)
                edge_pair.insert(static_cast<std::int64_t>(target.face(1, 1, e)) * target.size(0) +
                                 target.face(1, 0, e));
    }
    bool has_edge(SimplexId u, SimplexId w) const {
        return edge_pair.count(static_cast<std::int64_t>(u) * Y->size(0) + w) != 0;
    }
    const std::vector<SimplexId>* candidates(int k, const std::vector<SimplexId>& faces) const {
        auto it = by_faces[k].find(faces);
        return it == by_faces[k].end() ? nullptr : &it->second;
    }
};

struct Workspace {
    std::unordered_map<const SimplicialSet*, std::shared_ptr<TargetIndex>> target_index;
    // keep targets alive while indexed
    std::vector<SSetPtr> pinned;
    Config cfg;

    const TargetIndex& index_for(const SSetPtr& Y) {
        auto it = target_index.find(Y.get());
        if (it != target_index.end()) return *it->second;
        auto idx = std::make_shared<TargetIndex>();
        idx->build(*Y);
        pinned.push_back(Y);
        target_index[Y.get()] = idx;
        return *idx;
    }
};

// Evaluate an assignment (values on nondegenerate simplices of P) at an
// arbitrary simplex of P, pushing degeneracy witnesses into Y.
inline SimplexId eval_assignment(const SimplicialSet& P, const SimplicialSet& Y,
                                 const Assignment& vals, const std::vector<int>& level_off,
                                 int k, SimplexId x) {
    if (!P.is_degenerate(k, x)) return vals[level_off[k] + P.nondeg_pos_[k][x]];
    auto [i, core] = P.witness_[k][x];
    return Y.degen(k - 1, i, eval_assignment(P, Y, vals, level_off, k - 1, core));
}

// Offsets of each level's nondegenerate block inside an Assignment.
inline std::vector<int> nondeg_offsets(const SimplicialSet& P) {
    std::vector<int> off(P.trunc + 2, 0);
    for (int k = 0; k <= P.trunc; ++k)
        off[k + 1] = off[k] + static_cast<int>(P.nondeg(k).size());
    return off;
}

struct MapSearch {
    const SimplicialSet* P;
    const SimplicialSet* Y;
    const TargetIndex* idx;
    // pinned values per nondeg slot; -1 free
    Assignment pin;
    std::function<bool(int level, SimplexId x, SimplexId cand)> filter;  // optional
    std::size_t budget = 0;                                              // 0 = from caller

    std::vector<int> off;
    // per vertex slot: constraints against earlier vertex slots
    struct VertexEdge {
        int other_slot;
        bool other_is_tail;  // true: need edge val(other) -> cand
    };
    std::vector<std::vector<VertexEdge>> vcons;

    void prepare() {
        off = nondeg_offsets(*P);
        int nv = static_cast<int>(P->nondeg(0).size());
        vcons.assign(nv, {});
        if (P->trunc >= 1) {
            std::unordered_set<std::int64_t> seen;
            for (SimplexId e : P->nondeg(1)) {
                SimplexId u = P->face(1, 1, e), w = P->face(1, 0, e);  // u -> w
                if (seen.insert(static_cast<std::int64_t>(u) * P->size(0) + w).second) {
                    int su = P->nondeg_pos_[0][u], sw = P->nondeg_pos_[0][w];
                    if (su < sw)
                        vcons[sw].push_back({su, true});
                    else if (sw < su)
                        vcons[su].push_back({sw, false});
                }
            }
        }
    }

    // Enumerate all maps in lexicographic order of the assignment vector.
    // Returns false if the budget was exhausted.
    bool run(const std::function<void(const Assignment&)>& sink, std::size_t max_solutions) {
        prepare();
        Assignment vals(off[P->trunc + 1], -1);
        std::size_t count = 0;
        bool ok = dfs(0, 0, vals, sink, count, max_solutions);
        return ok;
    }

private:
    bool dfs(int k, int pos_in_level, Assignment& vals,
             const std::function<void(const Assignment&)>& sink, std::size_t& count,
             std::size_t max_solutions) {
        while (k <= P->trunc && pos_in_level >= static_cast<int>(P->nondeg(k).size())) {
            ++k;
            pos_in_level = 0;
        }
        if (k > P->trunc) {
            if (++count > max_solutions) return false;
            sink(vals);
            return true;
        }
        const int slot = off[k] + pos_in_level;
        const SimplexId x = P->nondeg(k)[pos_in_level];
        auto try_value = [&](SimplexId cand) -> bool {
            if (pin[slot] >= 0 && pin[slot] != cand) return true;
            if (filter && !filter(k, x, cand)) return true;
            vals[slot] = cand;
            bool ok = dfs(k, pos_in_level + 1, vals, sink, count, max_solutions);
            vals[slot] = -1;
            return ok;
        };
        if (k == 0) {
            for (SimplexId cand = 0; cand < Y->size(0); ++cand) {
                bool fits = true;
                for (const auto& c : vcons[pos_in_level]) {
                    SimplexId other = vals[off[0] + c.other_slot];
                    if (c.other_is_tail ? !idx->has_edge(other, cand) : !idx->has_edge(cand, other)) {
                        fits = false;
                        break;
                    }
                }
                if (fits && !try_value(cand)) return false;
            }
            return true;
        }
        std::vector<SimplexId> faces(k + 1);
        for (int i = 0; i <= k; ++i)
            faces[i] = eval_assignment(*P, *Y, vals, off, k - 1, P->face(k, i, x));
        const auto* cands = idx->candidates(k, faces);
        if (!cands) return true;
        for (SimplexId cand : *cands)
            if (!try_value(cand)) return false;
        return true;
    }
};

// Materialize a full SimplicialMap from an assignment on nondeg slots.
inline SimplicialMap materialize(const SSetPtr& P, const SSetPtr& Y, const Assignment& vals) {
    auto off = nondeg_offsets(*P);
    SimplicialMap f;
    f.src = P;
    f.dst = Y;
    f.comp.resize(P->trunc + 1);
    for (int k = 0; k <= P->trunc; ++k) {
        f.comp[k].resize(P->size(k));
        for (SimplexId x = 0; x < P->size(k); ++x)
            f.comp[k][x] = eval_assignment(*P, *Y, vals, off, k, x);
    }
    return f;
}

// Restrict a full map to its nondeg assignment vector.
inline Assignment to_assignment(const SimplicialMap& f) {
    Assignment vals;
    for (int k = 0; k <= f.src->trunc; ++k)
        for (SimplexId x : f.src->nondeg(k)) vals.push_back(f.comp[k][x]);
    return vals;
}

// All simplicial maps P -> Y in lexicographic order.
inline std::vector<Assignment> enumerate_maps(Workspace& ws, const SSetPtr& P, const SSetPtr& Y,
                                              const Assignment* pins = nullptr) {
    MapSearch s;
    s.P = P.get();
    s.Y = Y.get();
    s.idx = &ws.index_for(Y);
    auto off = nondeg_offsets(*P);
    s.pin.assign(off[P->trunc + 1], -1);
    if (pins) s.pin = *pins;
    std::vector<Assignment> out;
    if (!s.run([&](const Assignment& a) { out.push_back(a); }, ws.cfg.max_enumeration))
        throw BudgetError("map enumeration exceeded budget (" +
                          std::to_string(ws.cfg.max_enumeration) + ")");
    return out;
}

// ---------------------------------------------------------------------------
// Shared prism models Delta^a x Delta^m at a fixed truncation.
struct PrismModel {
    std::shared_ptr<const DeltaModel> da, dm;
    SSetPtr space;  // product, a-major pairing

    SimplexId pack(int k, SimplexId s, SimplexId t) const { return prod_id(*dm->space, k, s, t); }
    std::pair<SimplexId, SimplexId> unpack(int k, SimplexId p) const { return unprod_id(*dm->space, k, p); }
};

inline std::shared_ptr<const PrismModel> prism_model(int a, int m, int D) {
    static std::map<std::tuple<int, int, int>, std::shared_ptr<const PrismModel>> cache;
    auto key = std::make_tuple(a, m, D);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto pm = std::make_shared<PrismModel>();
    pm->da = DeltaModel::get(a, D);
    pm->dm = DeltaModel::get(m, D);
    pm->space = product(pm->da->space, pm->dm->space).space;
    cache[key] = pm;
    return pm;
}

// ---------------------------------------------------------------------------
// Function complex: level m = all simplicial maps A x Delta^m -> Y.
struct FunctionComplex {
    SSetPtr space;
    SSetPtr A, Y;
    std::vector<Product> prisms;                 // A x Delta^m per level m
    std::vector<std::vector<Assignment>> elems;  // per level, lex-sorted
    std::vector<std::vector<int>> off;           // nondeg offsets of each prism

    SimplexId id_of(int m, const Assignment& a) const {
        const auto& lv = elems[m];
        auto it = std::lower_bound(lv.begin(), lv.end(), a);
        if (it == lv.end() || *it != a) throw ValidationError("function_complex: element not found");
        return static_cast<SimplexId>(it - lv.begin());
    }
    SimplexId eval(int m, SimplexId f, int k, SimplexId x) const {
        return eval_assignment(*prisms[m].space, *Y, elems[m][f], off[m], k, x);
    }
};

// out_dim is the requested trusted dimension of the result. Levels are
// computed up to the common truncation; trust stops at out_dim.
inline FunctionComplex function_complex(Workspace& ws, const SSetPtr& A, const SSetPtr& Y,
                                        int out_dim) {
    if (A->trunc != Y->trunc) throw UsageError("function_complex: mismatched truncation");
    const int D = Y->trunc;
    const int gdim = std::max(A->geometric_dim(), 0);
    if (gdim + out_dim > Y->trusted)
        throw TruncationError("function_complex: truncation too small", gdim + out_dim);
    FunctionComplex F;
    F.A = A;
    F.Y = Y;
    F.prisms.reserve(D + 1);
    F.elems.resize(D + 1);
    F.off.resize(D + 1);
    for (int m = 0; m <= D; ++m) {
        F.prisms.push_back(product(A, DeltaModel::get(m, D)->space));
        F.off[m] = nondeg_offsets(*F.prisms[m].space);
        F.elems[m] = enumerate_maps(ws, F.prisms[m].space, Y);
    }
    SSetBuilder b(D);
    for (int m = 0; m <= D; ++m) b.set_level(m, static_cast<int>(F.elems[m].size()));
    auto dm_of = [&](int m) { return DeltaModel::get(m, D); };
    for (int m = 1; m <= D; ++m) {
        auto dm = dm_of(m);
        auto dm1 = dm_of(m - 1);
        for (int i = 0; i <= m; ++i) {
            for (SimplexId f = 0; f < b.sizes[m]; ++f) {
                Assignment a;
                const auto& Pm1 = *F.prisms[m - 1].space;
                for (int k = 0; k <= D; ++k)
                    for (SimplexId z : Pm1.nondeg(k)) {
                        auto [sa, st] = unprod_id(*dm1->space, k, z);
                        std::vector<int> t = dm1->tuples[k][st];
                        for (int& v : t)
                            if (v >= i) ++v;  // coface delta^i
                        SimplexId img = prod_id(*dm->space, k, sa, dm->id_of(k, t));
                        a.push_back(F.eval(m, f, k, img));
                    }
                b.face_[m][i][f] = F.id_of(m - 1, a);
            }
        }
    }
    for (int m = 0; m < D; ++m) {
        auto dm = dm_of(m);
        auto dm1 = dm_of(m + 1);
        for (int i = 0; i <= m; ++i) {
            for (SimplexId f = 0; f < b.sizes[m]; ++f) {
                Assignment a;
                const auto& Pm1 = *F.prisms[m + 1].space;
                for (int k = 0; k <= D; ++k)
                    for (SimplexId z : Pm1.nondeg(k)) {
                        auto [sa, st] = unprod_id(*dm1->space, k, z);
                        std::vector<int> t = dm1->tuples[k][st];
                        for (int& v : t)
                            if (v > i) --v;  // codegeneracy sigma^i
                        SimplexId img = prod_id(*dm->space, k, sa, dm->id_of(k, t));
                        a.push_back(F.eval(m, f, k, img));
                    }
                b.degen_[m][i][f] = F.id_of(m + 1, a);
            }
        }
    }
    b.trusted = std::min(out_dim, Y->trusted - gdim);
    F.space = b.finish(true, "function_complex");
    return F;
}

}  // namespace cubecalc

#endif
