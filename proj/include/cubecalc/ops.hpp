// Construction operations: standard simplices, products, coproducts,
// pushouts, pullbacks, joins, suspension, wedge, subspaces.
//
// All outputs assign canonical ids deterministically (lexicographic in the
// inputs' ids, quotient classes ordered by least member), so repeating a
// construction path reproduces the same object id-for-id.

#ifndef CUBECALC_OPS_HPP
#define CUBECALC_OPS_HPP

#include <map>
#include <tuple>
#include <utility>

#include "smap.hpp"

namespace cubecalc {

struct OrderedFiniteSet {
    std::vector<int> elems;  // strictly increasing

    OrderedFiniteSet() = default;
    explicit OrderedFiniteSet(std::vector<int> e) : elems(std::move(e)) {
        for (std::size_t i = 1; i < elems.size(); ++i)
            if (elems[i - 1] >= elems[i]) throw UsageError("index set must be strictly increasing");
    }
    int size() const { return static_cast<int>(elems.size()); }
    bool empty() const { return elems.empty(); }
    int position_of(int v) const {
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == v) return static_cast<int>(i);
        return -1;
    }
    bool contains(int v) const { return position_of(v) >= 0; }
    bool subset_of(const OrderedFiniteSet& o) const {
        for (int v : elems)
            if (!o.contains(v)) return false;
        return true;
    }
    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(elems[i]);
        }
        return s + "}";
    }
};

// ---------------------------------------------------------------------------
// Standard simplex Delta^a (a+1 vertices), truncated at D. Level k holds all
// weakly monotone (k+1)-tuples over {0..a} in lexicographic order; the
// strictly increasing ones are the nondegenerate simplices.
class DeltaModel {
public:
    int a;
    int D;
    SSetPtr space;
    std::vector<std::vector<std::vector<int>>> tuples;  // [k][id]

    SimplexId id_of(int k, const std::vector<int>& t) const {
        const auto& lv = tuples[k];
        auto it = std::lower_bound(lv.begin(), lv.end(), t);
        if (it == lv.end() || *it != t) throw ValidationError("DeltaModel: tuple not found");
        return static_cast<SimplexId>(it - lv.begin());
    }

    static std::shared_ptr<const DeltaModel> get(int a, int D) {
        static std::map<std::pair<int, int>, std::shared_ptr<const DeltaModel>> cache;
        auto key = std::make_pair(a, D);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        auto m = std::make_shared<DeltaModel>();
        m->a = a;
        m->D = D;
        m->tuples.resize(D + 1);
        for (int k = 0; k <= D; ++k) {
            std::vector<int> cur(k + 1, 0);
            // enumerate weakly monotone tuples in lex order
            while (true) {
                m->tuples[k].push_back(cur);
                int t = k;
                while (t >= 0 && cur[t] == a) --t;
                if (t < 0) break;
                ++cur[t];
                for (int u = t + 1; u <= k; ++u) cur[u] = cur[t];
            }
        }
        SSetBuilder b(D);
        for (int k = 0; k <= D; ++k) b.set_level(k, static_cast<int>(m->tuples[k].size()));
        for (int k = 1; k <= D; ++k)
            for (int i = 0; i <= k; ++i)
                for (SimplexId x = 0; x < b.sizes[k]; ++x) {
                    std::vector<int> t = m->tuples[k][x];
                    t.erase(t.begin() + i);
                    b.face_[k][i][x] = m->id_of(k - 1, t);
                }
        for (int k = 0; k < D; ++k)
            for (int i = 0; i <= k; ++i)
                for (SimplexId x = 0; x < b.sizes[k]; ++x) {
                    std::vector<int> t = m->tuples[k][x];
                    t.insert(t.begin() + i, t[i]);
                    b.degen_[k][i][x] = m->id_of(k + 1, t);
                }
        m->space = b.finish(true, "Delta^" + std::to_string(a));
        cache[key] = m;
        return m;
    }
};

// Delta^S for an ordered label set S; vertices follow the order of S.
inline SSetPtr standard_simplex(const OrderedFiniteSet& S, int D) {
    if (S.empty()) throw UsageError("standard_simplex: empty index set");
    if (D < S.size() - 1)
        throw TruncationError("standard_simplex: truncation below geometric dimension", S.size() - 1);
    return DeltaModel::get(S.size() - 1, D)->space;
}

inline SSetPtr empty_sset(int D) {
    SSetBuilder b(D);
    return b.finish(true, "empty");
}

// Discrete simplicial set on n points (every level has n simplices).
inline SSetPtr discrete_sset(int n, int D) {
    SSetBuilder b(D);
    for (int k = 0; k <= D; ++k) b.set_level(k, n);
    for (int k = 1; k <= D; ++k)
        for (int i = 0; i <= k; ++i)
            for (SimplexId x = 0; x < n; ++x) b.face_[k][i][x] = x;
    for (int k = 0; k < D; ++k)
        for (int i = 0; i <= k; ++i)
            for (SimplexId x = 0; x < n; ++x) b.degen_[k][i][x] = x;
    return b.finish(true, "discrete");
}

inline SSetPtr point_sset(int D) {
    SSetBuilder b(D);
    for (int k = 0; k <= D; ++k) b.set_level(k, 1);
    for (int k = 1; k <= D; ++k)
        for (int i = 0; i <= k; ++i) b.face_[k][i][0] = 0;
    for (int k = 0; k < D; ++k)
        for (int i = 0; i <= k; ++i) b.degen_[k][i][0] = 0;
    b.basepoint = 0;
    return b.finish(true, "point");
}

// ---------------------------------------------------------------------------
// Product, with x-major pairing.
inline SimplexId prod_id(const SimplicialSet& Y, int k, SimplexId x, SimplexId y) {
    return x * Y.size(k) + y;
}
inline std::pair<SimplexId, SimplexId> unprod_id(const SimplicialSet& Y, int k, SimplexId p) {
    return {p / Y.size(k), p % Y.size(k)};
}

struct Product {
    SSetPtr space;
    SSetPtr X, Y;
    SimplicialMap projX, projY;
};

inline Product product(const SSetPtr& X, const SSetPtr& Y) {
    if (X->trunc != Y->trunc) throw UsageError("product: mismatched truncation");
    const int D = X->trunc;
    SSetBuilder b(D);
    for (int k = 0; k <= D; ++k) {
        long long n = 1LL * X->size(k) * Y->size(k);
        b.set_level(k, static_cast<int>(n));
    }
    for (int k = 1; k <= D; ++k)
        for (int i = 0; i <= k; ++i)
            for (SimplexId x = 0; x < X->size(k); ++x)
                for (SimplexId y = 0; y < Y->size(k); ++y)
                    b.face_[k][i][prod_id(*Y, k, x, y)] =
                        prod_id(*Y, k - 1, X->face(k, i, x), Y->face(k, i, y));
    for (int k = 0; k < D; ++k)
        for (int i = 0; i <= k; ++i)
            for (SimplexId x = 0; x < X->size(k); ++x)
                for (SimplexId y = 0; y < Y->size(k); ++y)
                    b.degen_[k][i][prod_id(*Y, k, x, y)] =
                        prod_id(*Y, k + 1, X->degen(k, i, x), Y->degen(k, i, y));
    if (X->basepoint && Y->basepoint)
        b.basepoint = prod_id(*Y, 0, *X->basepoint, *Y->basepoint);
    b.trusted = std::min(X->trusted, Y->trusted);
    Product P;
    P.space = b.finish(true, "product");
    P.X = X;
    P.Y = Y;
    P.projX.src = P.space; P.projX.dst = X; P.projX.comp.resize(D + 1);
    P.projY.src = P.space; P.projY.dst = Y; P.projY.comp.resize(D + 1);
    for (int k = 0; k <= D; ++k) {
        P.projX.comp[k].resize(P.space->size(k));
        P.projY.comp[k].resize(P.space->size(k));
        for (SimplexId p = 0; p < P.space->size(k); ++p) {
            auto [x, y] = unprod_id(*Y, k, p);
            P.projX.comp[k][p] = x;
            P.projY.comp[k][p] = y;
        }
    }
    return P;
}

struct Coproduct {
    SSetPtr space;
    std::vector<SimplicialMap> in;          // insertions
    std::vector<std::vector<int>> offsets;  // offsets[k][piece]
};

inline Coproduct coproduct(const std::vector<SSetPtr>& pieces, int D) {
    for (const auto& p : pieces)
        if (p->trunc != D) throw UsageError("coproduct: mismatched truncation");
    SSetBuilder b(D);
    Coproduct C;
    C.offsets.assign(D + 1, std::vector<int>(pieces.size() + 1, 0));
    for (int k = 0; k <= D; ++k) {
        int total = 0;
        for (std::size_t p = 0; p < pieces.size(); ++p) {
            C.offsets[k][p] = total;
            total += pieces[p]->size(k);
        }
        C.offsets[k][pieces.size()] = total;
        b.set_level(k, total);
    }
    for (int k = 1; k <= D; ++k)
        for (int i = 0; i <= k; ++i)
            for (std::size_t p = 0; p < pieces.size(); ++p)
                for (SimplexId x = 0; x < pieces[p]->size(k); ++x)
                    b.face_[k][i][C.offsets[k][p] + x] = C.offsets[k - 1][p] + pieces[p]->face(k, i, x);
    for (int k = 0; k < D; ++k)
        for (int i = 0; i <= k; ++i)
            for (std::size_t p = 0; p < pieces.size(); ++p)
                for (SimplexId x = 0; x < pieces[p]->size(k); ++x)
                    b.degen_[k][i][C.offsets[k][p] + x] = C.offsets[k + 1][p] + pieces[p]->degen(k, i, x);
    int trust = D;
    for (const auto& p : pieces) trust = std::min(trust, p->trusted);
    b.trusted = trust;
    C.space = b.finish(true, "coproduct");
    for (std::size_t p = 0; p < pieces.size(); ++p) {
        SimplicialMap f;
        f.src = pieces[p];
        f.dst = C.space;
        f.comp.resize(D + 1);
        for (int k = 0; k <= D; ++k) {
            f.comp[k].resize(pieces[p]->size(k));
            for (SimplexId x = 0; x < pieces[p]->size(k); ++x) f.comp[k][x] = C.offsets[k][p] + x;
        }
        C.in.push_back(std::move(f));
    }
    return C;
}

// ---------------------------------------------------------------------------
// Levelwise set pushout of X <-f- A -g-> Y. Classes are ordered by their
// least member of X_k ⊔ Y_k (X first), which keeps ids deterministic and
// independent of A's internal ordering.
struct Pushout {
    SSetPtr space;
    SimplicialMap fromX, fromY;
};

namespace detail {
struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int v) {
        while (up[v] != v) v = up[v] = up[up[v]];
        return v;
    }
    void unite(int u, int v) {
        u = find(u);
        v = find(v);
        if (u == v) return;
        if (u > v) std::swap(u, v);
        up[v] = u;  // keep the least element as root
    }
};
}  // namespace detail

inline Pushout pushout(const SimplicialMap& f, const SimplicialMap& g) {
    if (*f.src != *g.src) throw UsageError("pushout: legs must share a source");
    const SSetPtr X = f.dst, Y = g.dst, A = f.src;
    const int D = X->trunc;
    if (Y->trunc != D) throw UsageError("pushout: mismatched truncation");

    std::vector<std::vector<int>> cls(D + 1);     // class index per element of X⊔Y
    std::vector<std::vector<int>> rep(D + 1);     // least element per class
    std::vector<int> nclasses(D + 1, 0);
    for (int k = 0; k <= D; ++k) {
        detail::UnionFind uf(X->size(k) + Y->size(k));
        for (SimplexId a = 0; a < A->size(k); ++a)
            uf.unite(f.comp[k][a], X->size(k) + g.comp[k][a]);
        cls[k].assign(X->size(k) + Y->size(k), -1);
        for (int v = 0; v < X->size(k) + Y->size(k); ++v)
            if (uf.find(v) == v) {
                cls[k][v] = nclasses[k]++;
                rep[k].push_back(v);
            }
        for (int v = 0; v < X->size(k) + Y->size(k); ++v) cls[k][v] = cls[k][uf.find(v)];
    }

    SSetBuilder b(D);
    for (int k = 0; k <= D; ++k) b.set_level(k, nclasses[k]);
    auto face_of = [&](int k, int i, int v) {
        return v < X->size(k) ? X->face(k, i, v) : X->size(k - 1) + Y->face(k, i, v - X->size(k));
    };
    auto degen_of = [&](int k, int i, int v) {
        return v < X->size(k) ? X->degen(k, i, v) : X->size(k + 1) + Y->degen(k, i, v - X->size(k));
    };
    for (int k = 1; k <= D; ++k)
        for (int i = 0; i <= k; ++i)
            for (int c = 0; c < nclasses[k]; ++c)
                b.face_[k][i][c] = cls[k - 1][face_of(k, i, rep[k][c])];
    for (int k = 0; k < D; ++k)
        for (int i = 0; i <= k; ++i)
            for (int c = 0; c < nclasses[k]; ++c)
                b.degen_[k][i][c] = cls[k + 1][degen_of(k, i, rep[k][c])];
    if (X->basepoint)
        b.basepoint = cls[0][*X->basepoint];
    else if (Y->basepoint)
        b.basepoint = cls[0][X->size(0) + *Y->basepoint];
    b.trusted = std::min(X->trusted, Y->trusted);

    Pushout P;
    P.space = b.finish(true, "pushout");
    P.fromX.src = X; P.fromX.dst = P.space; P.fromX.comp.resize(D + 1);
    P.fromY.src = Y; P.fromY.dst = P.space; P.fromY.comp.resize(D + 1);
    for (int k = 0; k <= D; ++k) {
        P.fromX.comp[k].resize(X->size(k));
        for (SimplexId x = 0; x < X->size(k); ++x) P.fromX.comp[k][x] = cls[k][x];
        P.fromY.comp[k].resize(Y->size(k));
        for (SimplexId y = 0; y < Y->size(k); ++y) P.fromY.comp[k][y] = cls[k][X->size(k) + y];
    }
    return P;
}

// Colimit of a finite star A -> X_i (all legs share the source). S may be
// empty, in which case the result is A itself with identity cocone.
struct StarColimit {
    SSetPtr space;
    std::vector<SimplicialMap> fromLeg;  // one per leg
    SimplicialMap fromCenter;
};

inline StarColimit star_colimit(const SSetPtr& A, const std::vector<SimplicialMap>& legs) {
    const int D = A->trunc;
    StarColimit R;
    if (legs.empty()) {
        R.space = A;
        R.fromCenter = identity_map(A);
        return R;
    }
    std::vector<SSetPtr> targets;
    for (const auto& l : legs) {
        if (*l.src != *A) throw UsageError("star_colimit: legs must share the source");
        targets.push_back(l.dst);
    }
    std::vector<std::vector<int>> cls(D + 1), rep(D + 1);
    std::vector<std::vector<int>> off(D + 1, std::vector<int>(legs.size() + 1, 0));
    std::vector<int> nclasses(D + 1, 0);
    for (int k = 0; k <= D; ++k) {
        int total = 0;
        for (std::size_t p = 0; p < legs.size(); ++p) {
            off[k][p] = total;
            total += targets[p]->size(k);
        }
        off[k][legs.size()] = total;
        detail::UnionFind uf(total);
        for (SimplexId a = 0; a < A->size(k); ++a)
            for (std::size_t p = 1; p < legs.size(); ++p)
                uf.unite(off[k][0] + legs[0].comp[k][a], off[k][p] + legs[p].comp[k][a]);
        cls[k].assign(total, -1);
        for (int v = 0; v < total; ++v)
            if (uf.find(v) == v) {
                cls[k][v] = nclasses[k]++;
                rep[k].push_back(v);
            }
        for (int v = 0; v < total; ++v) cls[k][v] = cls[k][uf.find(v)];
    }
    SSetBuilder b(D);
    for (int k = 0; k <= D; ++k) b.set_level(k, nclasses[k]);
    auto piece_of = [&](int k, int v) {
        std::size_t p = 0;
        while (off[k][p + 1] <= v) ++p;
        return std::make_pair(p, v - off[k][p]);
    };
    for (int k = 1; k <= D; ++k)
        for (int i = 0; i <= k; ++i)
            for (int c = 0; c < nclasses[k]; ++c) {
                auto [p, x] = piece_of(k, rep[k][c]);
                b.face_[k][i][c] = cls[k - 1][off[k - 1][p] + targets[p]->face(k, i, x)];
            }
    for (int k = 0; k < D; ++k)
        for (int i = 0; i <= k; ++i)
            for (int c = 0; c < nclasses[k]; ++c) {
                auto [p, x] = piece_of(k, rep[k][c]);
                b.degen_[k][i][c] = cls[k + 1][off[k + 1][p] + targets[p]->degen(k, i, x)];
            }
    int trust = A->trusted;
    for (const auto& t : targets) trust = std::min(trust, t->trusted);
    b.trusted = trust;
    R.space = b.finish(true, "star_colimit");
    for (std::size_t p = 0; p < legs.size(); ++p) {
        SimplicialMap f;
        f.src = targets[p];
        f.dst = R.space;
        f.comp.resize(D + 1);
        for (int k = 0; k <= D; ++k) {
            f.comp[k].resize(targets[p]->size(k));
            for (SimplexId x = 0; x < targets[p]->size(k); ++x)
                f.comp[k][x] = cls[k][off[k][p] + x];
        }
        R.fromLeg.push_back(std::move(f));
    }
    R.fromCenter = compose(R.fromLeg[0], legs[0]);
    return R;
}

// ---------------------------------------------------------------------------
// Levelwise fiber product of X -f-> Z <-g- Y, pairs in (x, y) lex order.
struct Pullback {
    SSetPtr space;
    SimplicialMap toX, toY;
    std::vector<std::vector<std::pair<SimplexId, SimplexId>>> pairs;  // per level, sorted

    SimplexId pair_id(int k, SimplexId x, SimplexId y) const {
        const auto& lv = pairs[k];
        auto it = std::lower_bound(lv.begin(), lv.end(), std::make_pair(x, y));
        if (it == lv.end() || *it != std::make_pair(x, y))
            throw ValidationError("pullback: pair not found");
        return static_cast<SimplexId>(it - lv.begin());
    }
};

inline Pullback pullback(const SimplicialMap& f, const SimplicialMap& g) {
    if (*f.dst != *g.dst) throw UsageError("pullback: legs must share a target");
    const SSetPtr X = f.src, Y = g.src;
    const int D = X->trunc;
    if (Y->trunc != D) throw UsageError("pullback: mismatched truncation");
    Pullback P;
    P.pairs.resize(D + 1);
    for (int k = 0; k <= D; ++k)
        for (SimplexId x = 0; x < X->size(k); ++x)
            for (SimplexId y = 0; y < Y->size(k); ++y)
                if (f.comp[k][x] == g.comp[k][y]) P.pairs[k].emplace_back(x, y);
    SSetBuilder b(D);
    for (int k = 0; k <= D; ++k) b.set_level(k, static_cast<int>(P.pairs[k].size()));
    for (int k = 1; k <= D; ++k)
        for (int i = 0; i <= k; ++i)
            for (SimplexId p = 0; p < b.sizes[k]; ++p) {
                auto [x, y] = P.pairs[k][p];
                b.face_[k][i][p] = P.pair_id(k - 1, X->face(k, i, x), Y->face(k, i, y));
            }
    for (int k = 0; k < D; ++k)
        for (int i = 0; i <= k; ++i)
            for (SimplexId p = 0; p < b.sizes[k]; ++p) {
                auto [x, y] = P.pairs[k][p];
                b.degen_[k][i][p] = P.pair_id(k + 1, X->degen(k, i, x), Y->degen(k, i, y));
            }
    if (X->basepoint && Y->basepoint) {
        auto key = std::make_pair(*X->basepoint, *Y->basepoint);
        auto it = std::lower_bound(P.pairs[0].begin(), P.pairs[0].end(), key);
        if (it != P.pairs[0].end() && *it == key)
            b.basepoint = static_cast<SimplexId>(it - P.pairs[0].begin());
    }
    b.trusted = std::min(X->trusted, Y->trusted);
    P.space = b.finish(true, "pullback");
    P.toX.src = P.space; P.toX.dst = X; P.toX.comp.resize(D + 1);
    P.toY.src = P.space; P.toY.dst = Y; P.toY.comp.resize(D + 1);
    for (int k = 0; k <= D; ++k) {
        P.toX.comp[k].resize(b.sizes[k]);
        P.toY.comp[k].resize(b.sizes[k]);
        for (SimplexId p = 0; p < b.sizes[k]; ++p) {
            P.toX.comp[k][p] = P.pairs[k][p].first;
            P.toY.comp[k][p] = P.pairs[k][p].second;
        }
    }
    return P;
}

// Simplicial subset selected by a levelwise keep-mask (must be closed under
// faces and degeneracies; validated by finish()).
struct Subspace {
    SSetPtr space;
    SimplicialMap incl;
    std::vector<std::vector<SimplexId>> new_id;  // -1 when dropped
};

inline Subspace subspace(const SSetPtr& X, const std::vector<std::vector<char>>& keep) {
    const int D = X->trunc;
    Subspace S;
    S.new_id.assign(D + 1, {});
    std::vector<std::vector<SimplexId>> old_id(D + 1);
    for (int k = 0; k <= D; ++k) {
        S.new_id[k].assign(X->size(k), -1);
        for (SimplexId x = 0; x < X->size(k); ++x)
            if (keep[k][x]) {
                S.new_id[k][x] = static_cast<SimplexId>(old_id[k].size());
                old_id[k].push_back(x);
            }
    }
    SSetBuilder b(D);
    for (int k = 0; k <= D; ++k) b.set_level(k, static_cast<int>(old_id[k].size()));
    for (int k = 1; k <= D; ++k)
        for (int i = 0; i <= k; ++i)
            for (SimplexId p = 0; p < b.sizes[k]; ++p) {
                SimplexId q = S.new_id[k - 1][X->face(k, i, old_id[k][p])];
                if (q < 0) throw ValidationError("subspace: not closed under faces");
                b.face_[k][i][p] = q;
            }
    for (int k = 0; k < D; ++k)
        for (int i = 0; i <= k; ++i)
            for (SimplexId p = 0; p < b.sizes[k]; ++p) {
                SimplexId q = S.new_id[k + 1][X->degen(k, i, old_id[k][p])];
                if (q < 0) throw ValidationError("subspace: not closed under degeneracies");
                b.degen_[k][i][p] = q;
            }
    if (X->basepoint && S.new_id[0][*X->basepoint] >= 0) b.basepoint = S.new_id[0][*X->basepoint];
    b.trusted = X->trusted;
    S.space = b.finish(true, "subspace");
    S.incl.src = S.space; S.incl.dst = X; S.incl.comp.resize(D + 1);
    for (int k = 0; k <= D; ++k) S.incl.comp[k] = old_id[k];
    return S;
}

// ---------------------------------------------------------------------------
// Join with a finite ordered set: pushout of X x Delta^S <- X x S -> S.
// Collapses each slice X x {s} to the vertex s, so singleton joins are
// literal points.
struct Join {
    SSetPtr space;
    SSetPtr cyl;   // X x Delta^S
    SSetPtr pts;   // discrete S
    SSetPtr X;
    OrderedFiniteSet S;
    SimplicialMap from_cyl;  // X x Delta^S -> join
    SimplicialMap from_pts;  // S -> join
};

inline Join join(const SSetPtr& X, const OrderedFiniteSet& S, int /*unused*/ = 0) {
    if (S.empty()) throw UsageError("join: empty index set");
    const int D = X->trunc;
    if (D < S.size() - 1)
        throw TruncationError("join: truncation below dim of Delta^S", S.size() - 1);
    auto delta = DeltaModel::get(S.size() - 1, D);
    auto disc = discrete_sset(S.size(), D);
    Product cylP = product(X, delta->space);
    Product XS = product(X, disc);
    // f : X x S -> X x Delta^S  sends (x, j) to (x, vertex_j fully degenerate)
    SimplicialMap f;
    f.src = XS.space;
    f.dst = cylP.space;
    f.comp.resize(D + 1);
    for (int k = 0; k <= D; ++k) {
        f.comp[k].resize(XS.space->size(k));
        for (SimplexId p = 0; p < XS.space->size(k); ++p) {
            auto [x, j] = unprod_id(*disc, k, p);
            f.comp[k][p] = prod_id(*delta->space, k, x, delta->space->degen_to(j, k));
        }
    }
    // g : X x S -> S projection
    SimplicialMap g = XS.projY;
    Pushout P = pushout(f, g);
    Join J;
    J.space = P.space;
    J.cyl = cylP.space;
    J.pts = disc;
    J.X = X;
    J.S = S;
    J.from_cyl = P.fromX;
    J.from_pts = P.fromY;
    return J;
}

// Map induced on joins by h : X -> Y (same label set).
inline SimplicialMap join_map(const Join& JX, const Join& JY, const SimplicialMap& h) {
    const int D = h.src->trunc;
    auto delta = DeltaModel::get(JX.S.size() - 1, D)->space;
    SimplicialMap out;
    out.src = JX.space;
    out.dst = JY.space;
    out.comp.resize(D + 1);
    for (int k = 0; k <= D; ++k) {
        out.comp[k].assign(JX.space->size(k), -1);
        // classes through the cylinder part
        for (SimplexId p = 0; p < JX.cyl->size(k); ++p) {
            auto [x, s] = unprod_id(*delta, k, p);
            SimplexId q = prod_id(*delta, k, h.comp[k][x], s);
            out.comp[k][JX.from_cyl.comp[k][p]] = JY.from_cyl.comp[k][q];
        }
        for (SimplexId j = 0; j < JX.pts->size(k); ++j)
            out.comp[k][JX.from_pts.comp[k][j]] = JY.from_pts.comp[k][j];
    }
    return out;
}

// Inclusion join(X, S) -> join(X, T) for S a subset of T.
inline SimplicialMap join_inclusion(const Join& JS, const Join& JT) {
    const int D = JS.X->trunc;
    auto dS = DeltaModel::get(JS.S.size() - 1, D);
    auto dT = DeltaModel::get(JT.S.size() - 1, D);
    std::vector<int> pos(JS.S.size());
    for (int p = 0; p < JS.S.size(); ++p) {
        pos[p] = JT.S.position_of(JS.S.elems[p]);
        if (pos[p] < 0) throw UsageError("join_inclusion: label sets not nested");
    }
    SimplicialMap out;
    out.src = JS.space;
    out.dst = JT.space;
    out.comp.resize(D + 1);
    for (int k = 0; k <= D; ++k) {
        out.comp[k].assign(JS.space->size(k), -1);
        for (SimplexId p = 0; p < JS.cyl->size(k); ++p) {
            auto [x, s] = unprod_id(*dS->space, k, p);
            std::vector<int> t = dS->tuples[k][s];
            for (int& v : t) v = pos[v];
            SimplexId q = prod_id(*dT->space, k, x, dT->id_of(k, t));
            out.comp[k][JS.from_cyl.comp[k][p]] = JT.from_cyl.comp[k][q];
        }
        for (SimplexId j = 0; j < JS.pts->size(k); ++j)
            out.comp[k][JS.from_pts.comp[k][j]] = JT.from_pts.comp[k][pos[j]];
    }
    return out;
}

inline SSetPtr suspension(const SSetPtr& X) {
    return join(X, OrderedFiniteSet({0, 1})).space;
}

// One-point union at the basepoints (least vertex when undeclared).
inline SSetPtr wedge(const SSetPtr& X, const SSetPtr& Y) {
    if (X->size(0) == 0 || Y->size(0) == 0) throw UsageError("wedge: needs vertices");
    const int D = X->trunc;
    SSetPtr pt = point_sset(D);
    SimplicialMap f = constant_map(pt, X, X->basepoint.value_or(0));
    SimplicialMap g = constant_map(pt, Y, Y->basepoint.value_or(0));
    return pushout(f, g).space;
}

}  // namespace cubecalc

#endif
