#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace superchar {

// A poset on {1..n} refining the positional order, stored as its strict
// relation plus the allowed-position set J = {(i,j) : i < j in P}.
// chain(n) and interpolating(n, m) cover this library's two families;
// the type itself admits any transitively closed refinement.
class PatternPoset {
public:
    int n = 0;
    // family bookkeeping: m is meaningful for the interpolating family;
    // chains are stored as interpolating with m <= 1.
    int m = 0;

    static PatternPoset chain(int n) { return interpolating(n, 0); }

    // U_(m): 2 < 3 < ... < n as a chain, and 1 < j exactly for j > m.
    static PatternPoset interpolating(int n, int m) {
        if (n < 1) throw std::invalid_argument("poset size must be >= 1");
        if (m < 0 || m > n) throw std::invalid_argument("m out of range");
        PatternPoset P;
        P.n = n;
        P.m = m;
        P.less_.assign((n + 1) * (n + 1), false);
        for (int i = 2; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) P.set_less(i, j);
        for (int j = 2; j <= n; ++j)
            if (j > m) P.set_less(1, j);
        P.finish();
        return P;
    }

    bool less(int i, int j) const { return less_[i * (n + 1) + j]; }
    bool is_chain() const { return m <= 1; }

    const std::vector<std::pair<int, int>>& J() const { return J_; }
    int jsize() const { return (int)J_.size(); }

    // index of (i,j) in the row-major J list, or -1
    int jindex(int i, int j) const { return jidx_[i * (n + 1) + j]; }
    bool in_J(int i, int j) const { return i >= 1 && j <= n && i < j && less(i, j); }

    friend bool operator==(const PatternPoset& a, const PatternPoset& b) {
        return a.n == b.n && a.less_ == b.less_;
    }

private:
    void set_less(int i, int j) { less_[i * (n + 1) + j] = true; }

    void finish() {
        // transitivity check; every family built here satisfies it
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k)
                    if (less(i, j) && less(j, k) && !less(i, k))
                        throw std::logic_error("poset relation is not transitive");
        jidx_.assign((n + 1) * (n + 1), -1);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (less(i, j)) {
                    jidx_[i * (n + 1) + j] = (int)J_.size();
                    J_.emplace_back(i, j);
                }
    }

    std::vector<bool> less_;
    std::vector<int> jidx_;
    std::vector<std::pair<int, int>> J_;
};

}  // namespace superchar
