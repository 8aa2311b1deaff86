// Dimension-truncated finite simplicial sets.
//
// A SimplicialSet stores *every* simplex (degenerate ones included) up to a
// truncation level D, as indexed finite sets with explicit face/degeneracy
// tables. Simplex identity is positional: ids are assigned in construction
// order, so objects built through the same construction path compare equal
// id-for-id. `trusted` tracks the highest level at which the object agrees
// with its untruncated counterpart; function complexes lower it.

#ifndef CUBECALC_SSET_HPP
#define CUBECALC_SSET_HPP

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"

namespace cubecalc {

using SimplexId = int;

class SimplicialSet;
using SSetPtr = std::shared_ptr<const SimplicialSet>;

class SimplicialSet {
public:
    int trunc = 0;
    int trusted = 0;
    std::vector<int> sizes;  // sizes[k] for k in 0..trunc

    // face_[k][i][x] = d_i(x) for x at level k (k in 1..trunc, i in 0..k).
    // degen_[k][i][x] = s_i(x) for x at level k (k in 0..trunc-1, i in 0..k).
    std::vector<std::vector<std::vector<SimplexId>>> face_;
    std::vector<std::vector<std::vector<SimplexId>>> degen_;

    std::vector<std::vector<char>> degenerate_;
    // For each degenerate x at level k: some (i, y) with s_i(y) = x.
    std::vector<std::vector<std::pair<int, SimplexId>>> witness_;
    // Nondegenerate ids per level, ascending; and position of x in that list.
    std::vector<std::vector<SimplexId>> nondeg_;
    std::vector<std::vector<int>> nondeg_pos_;

    std::optional<SimplexId> basepoint;

    int size(int k) const { return k <= trunc ? sizes[k] : 0; }
    std::size_t total_size() const {
        std::size_t t = 0;
        for (int v : sizes) t += static_cast<std::size_t>(v);
        return t;
    }

    SimplexId face(int k, int i, SimplexId x) const { return face_[k][i][x]; }
    SimplexId degen(int k, int i, SimplexId x) const { return degen_[k][i][x]; }
    bool is_degenerate(int k, SimplexId x) const { return degenerate_[k][x] != 0; }
    const std::vector<SimplexId>& nondeg(int k) const { return nondeg_[k]; }

    bool empty() const {
        return std::all_of(sizes.begin(), sizes.end(), [](int s) { return s == 0; });
    }

    // Highest level carrying a nondegenerate simplex; -1 for the empty set.
    int geometric_dim() const {
        for (int k = trunc; k >= 0; --k)
            if (!nondeg_[k].empty()) return k;
        return -1;
    }

    // x at level m acted on by a weakly monotone map op: [l] -> [m]
    // (op.size() == l+1). Returns the simplex x.op at level l.
    SimplexId apply_operator(int m, SimplexId x, const std::vector<int>& op) const {
        if (static_cast<int>(op.size()) - 1 > trunc)
            throw TruncationError("apply_operator: result above truncation",
                                  static_cast<int>(op.size()) - 1);
        return apply_op_impl(m, x, op);
    }

    // Total degeneracy of a 0-simplex v up to level k.
    SimplexId degen_to(SimplexId v, int k) const {
        SimplexId x = v;
        for (int j = 0; j < k; ++j) x = degen_[j][0][x];
        return x;
    }

    bool operator==(const SimplicialSet& o) const {
        return trunc == o.trunc && sizes == o.sizes && face_ == o.face_ &&
               degen_ == o.degen_ && degenerate_ == o.degenerate_ && basepoint == o.basepoint;
    }
    bool operator!=(const SimplicialSet& o) const { return !(*this == o); }

    // Exhaustive simplicial-identity check over all stored simplices.
    void validate(const std::string& where) const {
        auto fail = [&](const std::string& msg) { throw ValidationError(where + ": " + msg); };
        for (int k = 0; k <= trunc; ++k) {
            if (static_cast<int>(degenerate_[k].size()) != sizes[k]) fail("flag table size");
            if (k >= 1 && static_cast<int>(face_[k].size()) != k + 1) fail("face arity");
            if (k < trunc && static_cast<int>(degen_[k].size()) != k + 1) fail("degen arity");
        }
        for (int k = 2; k <= trunc; ++k)
            for (int j = 1; j <= k; ++j)
                for (int i = 0; i < j; ++i)
                    for (SimplexId x = 0; x < sizes[k]; ++x)
                        if (face_[k - 1][i][face_[k][j][x]] != face_[k - 1][j - 1][face_[k][i][x]])
                            fail("d_i d_j identity at level " + std::to_string(k));
        for (int k = 0; k + 2 <= trunc; ++k)
            for (int j = 0; j <= k; ++j)
                for (int i = 0; i <= j; ++i)
                    for (SimplexId x = 0; x < sizes[k]; ++x)
                        if (degen_[k + 1][i][degen_[k][j][x]] != degen_[k + 1][j + 1][degen_[k][i][x]])
                            fail("s_i s_j identity at level " + std::to_string(k));
        for (int k = 1; k <= trunc; ++k) {
            if (k > trunc - 1) continue;
            // d_i s_j on level-k input (s_j lands at k+1 <= trunc)
            for (int j = 0; j <= k; ++j)
                for (int i = 0; i <= k + 1; ++i)
                    for (SimplexId x = 0; x < sizes[k]; ++x) {
                        SimplexId lhs = face_[k + 1][i][degen_[k][j][x]];
                        SimplexId rhs;
                        if (i < j)
                            rhs = degen_[k - 1][j - 1][face_[k][i][x]];
                        else if (i == j || i == j + 1)
                            rhs = x;
                        else
                            rhs = degen_[k - 1][j][face_[k][i - 1][x]];
                        if (lhs != rhs) fail("d_i s_j identity at level " + std::to_string(k));
                    }
        }
        // level-0 inputs of d_i s_0
        if (trunc >= 1)
            for (SimplexId v = 0; v < sizes[0]; ++v)
                for (int i = 0; i <= 1; ++i)
                    if (face_[1][i][degen_[0][0][v]] != v) fail("d_i s_0 identity at level 0");
        // every degenerate simplex has a stored witness
        for (int k = 0; k <= trunc; ++k)
            for (SimplexId x = 0; x < sizes[k]; ++x)
                if (degenerate_[k][x]) {
                    auto [i, y] = witness_[k][x];
                    if (k == 0 || degen_[k - 1][i][y] != x) fail("bad degeneracy witness");
                }
        if (basepoint && (sizes.empty() || *basepoint < 0 || *basepoint >= sizes[0]))
            fail("basepoint out of range");
    }

private:
    SimplexId apply_op_impl(int m, SimplexId x, const std::vector<int>& op) const {
        const int l = static_cast<int>(op.size()) - 1;
        // identity?
        if (l == m) {
            bool id = true;
            for (int t = 0; t <= l; ++t)
                if (op[t] != t) { id = false; break; }
            if (id) return x;
        }
        // duplicated value: op = op' after dropping position t+1, then s_t
        for (int t = 0; t + 1 <= l; ++t)
            if (op[t] == op[t + 1]) {
                std::vector<int> rest;
                rest.reserve(op.size() - 1);
                for (int u = 0; u <= l; ++u)
                    if (u != t + 1) rest.push_back(op[u]);
                return degen_[l - 1][t][apply_op_impl(m, x, rest)];
            }
        // injective, not surjective: strip the largest missed value j with d_j
        std::vector<char> hit(m + 1, 0);
        for (int v : op) hit[v] = 1;
        for (int j = m; j >= 0; --j)
            if (!hit[j]) {
                std::vector<int> rest(op.size());
                for (std::size_t u = 0; u < op.size(); ++u) rest[u] = op[u] > j ? op[u] - 1 : op[u];
                return apply_op_impl(m - 1, face_[m][j][x], rest);
            }
        return x;  // unreachable for monotone op
    }
};

// Mutable staging area; finish() freezes flags, witnesses and nondeg lists.
struct SSetBuilder {
    int trunc = 0;
    int trusted = 0;
    std::vector<int> sizes;
    std::vector<std::vector<std::vector<SimplexId>>> face_;
    std::vector<std::vector<std::vector<SimplexId>>> degen_;
    std::optional<SimplexId> basepoint;

    explicit SSetBuilder(int D) : trunc(D), trusted(D), sizes(D + 1, 0), face_(D + 1), degen_(D + 1) {
        for (int k = 1; k <= D; ++k) face_[k].assign(k + 1, {});
        for (int k = 0; k < D; ++k) degen_[k].assign(k + 1, {});
    }

    void set_level(int k, int n) {
        sizes[k] = n;
        if (k >= 1)
            for (auto& f : face_[k]) f.assign(n, -1);
        if (k < trunc)
            for (auto& s : degen_[k]) s.assign(n, -1);
    }

    SSetPtr finish(bool validate = true, const std::string& where = "SimplicialSet") const {
        auto out = std::make_shared<SimplicialSet>();
        out->trunc = trunc;
        out->trusted = std::min(trusted, trunc);
        out->sizes = sizes;
        out->face_ = face_;
        out->degen_ = degen_;
        out->basepoint = basepoint;
        out->degenerate_.assign(trunc + 1, {});
        out->witness_.assign(trunc + 1, {});
        out->nondeg_.assign(trunc + 1, {});
        out->nondeg_pos_.assign(trunc + 1, {});
        for (int k = 0; k <= trunc; ++k) {
            out->degenerate_[k].assign(sizes[k], 0);
            out->witness_[k].assign(sizes[k], {-1, -1});
        }
        for (int k = 0; k < trunc; ++k)
            for (int i = 0; i <= k; ++i)
                for (SimplexId x = 0; x < sizes[k]; ++x) {
                    SimplexId y = degen_[k][i][x];
                    if (!out->degenerate_[k + 1][y]) {
                        out->degenerate_[k + 1][y] = 1;
                        out->witness_[k + 1][y] = {i, x};
                    }
                }
        for (int k = 0; k <= trunc; ++k) {
            out->nondeg_pos_[k].assign(sizes[k], -1);
            for (SimplexId x = 0; x < sizes[k]; ++x)
                if (!out->degenerate_[k][x]) {
                    out->nondeg_pos_[k][x] = static_cast<int>(out->nondeg_[k].size());
                    out->nondeg_[k].push_back(x);
                }
        }
        if (validate) out->validate(where);
        return out;
    }
};

}  // namespace cubecalc

#endif
