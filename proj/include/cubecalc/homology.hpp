// Integer simplicial homology via normalized chains and Smith normal form.
//
// Chains are generated by nondegenerate simplices; the boundary is the
// alternating face sum with degenerate faces dropped. Arithmetic uses
// arbitrary-precision integers since SNF intermediates can blow up, with
// pivoting on least absolute value to keep entries small.

#ifndef CUBECALC_HOMOLOGY_HPP
#define CUBECALC_HOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "sset.hpp"

namespace cubecalc {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;  // row major

struct ChainComplex {
    int top = 0;                                  // highest stored degree
    std::vector<int> dims;                        // nondegenerate counts per degree
    std::vector<IntMatrix> boundary;              // boundary[k] : C_k -> C_{k-1}, k >= 1
};

inline ChainComplex chain_complex(const SimplicialSet& X) {
    ChainComplex C;
    C.top = X.trunc;
    C.dims.resize(X.trunc + 1);
    for (int k = 0; k <= X.trunc; ++k) C.dims[k] = static_cast<int>(X.nondeg(k).size());
    C.boundary.resize(X.trunc + 1);
    for (int k = 1; k <= X.trunc; ++k) {
        IntMatrix M(C.dims[k - 1], std::vector<BigInt>(C.dims[k], 0));
        for (int col = 0; col < C.dims[k]; ++col) {
            SimplexId x = X.nondeg(k)[col];
            for (int i = 0; i <= k; ++i) {
                SimplexId f = X.face(k, i, x);
                if (X.is_degenerate(k - 1, f)) continue;
                int row = X.nondeg_pos_[k - 1][f];
                if (i % 2 == 0)
                    M[row][col] += 1;
                else
                    M[row][col] -= 1;
            }
        }
        C.boundary[k] = std::move(M);
    }
    return C;
}

// diagonal of the Smith normal form (nonzero entries, unsigned)
inline std::vector<BigInt> smith_diagonal(IntMatrix M) {
    std::vector<BigInt> diag;
    std::size_t rows = M.size();
    std::size_t cols = rows ? M[0].size() : 0;
    std::size_t r0 = 0, c0 = 0;
    while (r0 < rows && c0 < cols) {
        // pivot: least nonzero absolute value in the active block
        std::size_t pr = r0, pc = c0;
        BigInt best = 0;
        for (std::size_t r = r0; r < rows; ++r)
            for (std::size_t c = c0; c < cols; ++c)
                if (M[r][c] != 0 && (best == 0 || abs(M[r][c]) < best)) {
                    best = abs(M[r][c]);
                    pr = r;
                    pc = c;
                }
        if (best == 0) break;
        std::swap(M[r0], M[pr]);
        for (std::size_t r = 0; r < rows; ++r) std::swap(M[r][c0], M[r][pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t r = r0 + 1; r < rows; ++r)
                if (M[r][c0] != 0) {
                    BigInt q = M[r][c0] / M[r0][c0];
                    for (std::size_t c = c0; c < cols; ++c) M[r][c] -= q * M[r0][c];
                    if (M[r][c0] != 0) {  // remainder smaller than pivot: swap up
                        std::swap(M[r0], M[r]);
                        clean = false;
                    }
                }
            for (std::size_t c = c0 + 1; c < cols; ++c)
                if (M[r0][c] != 0) {
                    BigInt q = M[r0][c] / M[r0][c0];
                    for (std::size_t r = r0; r < rows; ++r) M[r][c] -= q * M[r][c0];
                    if (M[r0][c] != 0) {
                        for (std::size_t r = r0; r < rows; ++r) std::swap(M[r][c0], M[r][c]);
                        clean = false;
                    }
                }
        }
        // ensure divisibility of the rest by the pivot
        bool again = false;
        for (std::size_t r = r0 + 1; r < rows && !again; ++r)
            for (std::size_t c = c0 + 1; c < cols && !again; ++c)
                if (M[r][c] % M[r0][c0] != 0) {
                    for (std::size_t cc = c0; cc < cols; ++cc) M[r0][cc] += M[r][cc];
                    again = true;
                }
        if (again) continue;
        diag.push_back(abs(M[r0][c0]));
        ++r0;
        ++c0;
    }
    return diag;
}

struct HomologyProfile {
    int valid_dim = -1;                            // highest trusted degree
    std::vector<long> betti;                       // 0..valid_dim
    std::vector<std::vector<long long>> torsion;   // sorted coefficients >= 2 per degree

    long betti_at(int k) const {
        if (k < 0 || k > valid_dim)
            throw UsageError("homology profile queried above valid_dim " + std::to_string(valid_dim));
        return betti[k];
    }
    const std::vector<long long>& torsion_at(int k) const {
        if (k < 0 || k > valid_dim)
            throw UsageError("homology profile queried above valid_dim " + std::to_string(valid_dim));
        return torsion[k];
    }
    std::string to_string() const {
        std::string s;
        for (int k = 0; k <= valid_dim; ++k) {
            s += "H_" + std::to_string(k) + " = Z^" + std::to_string(betti[k]);
            for (long long t : torsion[k]) s += " (+ Z/" + std::to_string(t) + ")";
            s += "\n";
        }
        return s;
    }
};

inline HomologyProfile homology_profile(const SimplicialSet& X) {
    ChainComplex C = chain_complex(X);
    HomologyProfile P;
    // degree k needs a complete boundary out of level k+1
    P.valid_dim = std::min(X.trusted, X.trunc) - 1;
    std::vector<std::vector<BigInt>> diag(X.trunc + 2);
    std::vector<int> rank(X.trunc + 2, 0);
    for (int k = 1; k <= X.trunc; ++k) {
        diag[k] = smith_diagonal(C.boundary[k]);
        rank[k] = static_cast<int>(diag[k].size());
    }
    P.betti.assign(std::max(P.valid_dim + 1, 0), 0);
    P.torsion.assign(std::max(P.valid_dim + 1, 0), {});
    for (int k = 0; k <= P.valid_dim; ++k) {
        P.betti[k] = C.dims[k] - rank[k] - rank[k + 1];
        for (const BigInt& d : diag[k + 1])
            if (d >= 2) P.torsion[k].push_back(d.convert_to<long long>());
        std::sort(P.torsion[k].begin(), P.torsion[k].end());
    }
    return P;
}

// Equality on the overlap of valid ranges; `witness` is set to the first
// mismatching degree, -1 when equal.
inline bool profiles_equal(const HomologyProfile& p, const HomologyProfile& q, int* witness = nullptr) {
    int overlap = std::min(p.valid_dim, q.valid_dim);
    if (overlap < 0) throw UsageError("profiles_equal: no comparable range");
    for (int k = 0; k <= overlap; ++k)
        if (p.betti[k] != q.betti[k] || p.torsion[k] != q.torsion[k]) {
            if (witness) *witness = k;
            return false;
        }
    if (witness) *witness = -1;
    return true;
}

}  // namespace cubecalc

#endif
