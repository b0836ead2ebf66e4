#pragma once

#include <garnir/partition.hpp>

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <thread>
#include <vector>

namespace garnir {

namespace detail {

// sum_{l1=0}^{l} C(m-i,l1) C(n-i,l1) C(i,l-l1) (-1)^l1
inline BigInt omega_inner_sum(const BinomialTable& bt, int n, int m, int l,
                              int i) {
    BigInt sum(0);
    for (int l1 = 0; l1 <= l; ++l1) {
        BigInt term = bt(m - i, l1) * bt(n - i, l1) * bt(i, l - l1);
        if (l1 % 2)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

inline void check_omega_args(int n, int m, int l, int i) {
    if (!(1 <= m && m <= n && 1 <= l && l <= m && 0 <= i && i <= m))
        throw shape_error("omega: need 1 <= l <= m <= n and 0 <= i <= m");
}

}  // namespace detail

/// Scalar by which the symmetrized exchange operator for exchange size l
/// acts on the component 2^i 1^(n+m-2i) of M^(n,m)':
///   C(m,l) - sum_{l1=0}^{l} C(m-i,l1) C(n-i,l1) C(i,l-l1) (-1)^l1.
inline BigInt omega(const BinomialTable& bt, int n, int m, int l, int i) {
    detail::check_omega_args(n, m, l, i);
    return bt(m, l) - detail::omega_inner_sum(bt, n, m, l, i);
}

inline BigInt omega(int n, int m, int l, int i) {
    detail::check_omega_args(n, m, l, i);
    const BinomialTable bt(std::max(n, m));
    return omega(bt, n, m, l, i);
}

/// All eigenvalues for a fixed two-column shape (n,m)', indexed by
/// (l, i) with 1 <= l <= m and 0 <= i <= m.
class OmegaTable {
public:
    OmegaTable(int n, int m) : n_(n), m_(m) {
        if (!(1 <= m && m <= n)) throw shape_error("OmegaTable: need 1 <= m <= n");
        const BinomialTable bt(n);
        values_.resize(static_cast<std::size_t>(m), {});
        for (int l = 1; l <= m; ++l) {
            auto& row = values_[static_cast<std::size_t>(l - 1)];
            row.reserve(static_cast<std::size_t>(m + 1));
            for (int i = 0; i <= m; ++i) row.push_back(omega(bt, n_, m_, l, i));
        }
    }

    int n() const { return n_; }
    int m() const { return m_; }

    const BigInt& value(int l, int i) const {
        if (l < 1 || l > m_ || i < 0 || i > m_)
            throw shape_error("OmegaTable::value: index out of range");
        return values_[static_cast<std::size_t>(l - 1)]
                      [static_cast<std::size_t>(i)];
    }

private:
    int n_, m_;
    std::vector<std::vector<BigInt>> values_;
};

/// Checks the trace identity for the shape (n,m)' and exchange size l by two
/// routes evaluated independently in exact arithmetic:
///   (a) sum_i dim(2^i 1^(n+m-2i)) * [inner alternating sum]  ==  0,
///   (b) sum_i omega(l,i) * dim(2^i 1^(n+m-2i))  ==  C(m,l) * C(n+m,n).
inline bool trace_identity_check(const BinomialTable& bt, int n, int m, int l) {
    if (!(1 <= m && m <= n && 1 <= l && l <= m))
        throw shape_error("trace_identity_check: need 1 <= l <= m <= n");
    BigInt displayed(0);
    BigInt spectral(0);
    for (int i = 0; i <= m; ++i) {
        const BigInt dim = hook_dim_two_column(n, m, i);
        displayed += dim * detail::omega_inner_sum(bt, n, m, l, i);
        spectral += dim * omega(bt, n, m, l, i);
    }
    return displayed == 0 && spectral == bt(m, l) * binomial(n + m, n);
}

inline bool trace_identity_check(int n, int m, int l) {
    const BinomialTable bt(std::max(n + m, 1));
    return trace_identity_check(bt, n, m, l);
}

/// Values of j in 1..m for which the alternating exchange sum
///   sum_{t=1}^{j} (-1)^(t-1) C(m-t,m-l) C(j,t) C(n-m+j+t,t)
/// vanishes. Empty means the condition holds.
inline std::vector<int> mms_failing_js(const BinomialTable& bt, int n, int m,
                                       int l) {
    if (!(1 <= m && m <= n && 1 <= l && l <= m))
        throw shape_error("mms_condition: need 1 <= l <= m <= n");
    std::vector<int> failing;
    for (int j = 1; j <= m; ++j) {
        BigInt sum(0);
        for (int t = 1; t <= j; ++t) {
            BigInt term = bt(m - t, m - l) * bt(j, t) * bt(n - m + j + t, t);
            if ((t - 1) % 2)
                sum -= term;
            else
                sum += term;
        }
        if (sum == 0) failing.push_back(j);
    }
    return failing;
}

inline bool mms_condition(const BinomialTable& bt, int n, int m, int l) {
    return mms_failing_js(bt, n, m, l).empty();
}

inline bool mms_condition(int n, int m, int l) {
    const BinomialTable bt(2 * std::max(n, 1));
    return mms_condition(bt, n, m, l);
}

/// Parameters (n,m,l,i) with i < m at which omega vanishes, i.e. a component
/// other than the Specht module itself falls into the operator's kernel.
struct ZeroTuple {
    int n, m, l, i;
    auto operator<=>(const ZeroTuple&) const = default;
};

/// Per-(n,m,l) count of vanishing i < m.
struct TripleZeros {
    int n, m, l;
    int zero_count;
    auto operator<=>(const TripleZeros&) const = default;
};

struct ScanResult {
    int n_max = 0;
    bool ell_lt_m = false;        // scanned l < m instead of l <= m
    long long total_triples = 0;  // size of the scanned (n,m,l) domain
    std::vector<ZeroTuple> zeros;
    std::vector<TripleZeros> triples;  // only triples with >= 1 zero

    long long triples_with_count(int k) const {
        long long c = 0;
        for (const auto& t : triples)
            if (t.zero_count == k) ++c;
        return c;
    }
};

/// Scans 1 <= l <= m <= n <= n_max (or l < m when ell_lt_m), 0 <= i < m,
/// for omega(n,m,l,i) == 0. Output is sorted lexicographically and is
/// deterministic regardless of thread count.
inline ScanResult scan_zero_tuples(int n_max, bool ell_lt_m = false) {
    if (n_max < 1) throw shape_error("scan_zero_tuples: n_max >= 1 required");
    ScanResult result;
    result.n_max = n_max;
    result.ell_lt_m = ell_lt_m;

    struct Bucket {
        std::vector<ZeroTuple> zeros;
        std::vector<TripleZeros> triples;
        long long total = 0;
    };
    std::vector<Bucket> buckets(static_cast<std::size_t>(n_max) + 1);

    const BinomialTable bt(n_max);
    auto scan_n = [&](int n) {
        Bucket& b = buckets[static_cast<std::size_t>(n)];
        for (int m = 1; m <= n; ++m) {
            const int l_hi = ell_lt_m ? m - 1 : m;
            for (int l = 1; l <= l_hi; ++l) {
                ++b.total;
                int zeros_here = 0;
                for (int i = 0; i < m; ++i) {
                    if (omega(bt, n, m, l, i) == 0) {
                        b.zeros.push_back({n, m, l, i});
                        ++zeros_here;
                    }
                }
                if (zeros_here > 0) b.triples.push_back({n, m, l, zeros_here});
            }
        }
    };

    unsigned workers = std::min(std::thread::hardware_concurrency(), 8u);
    if (workers <= 1 || n_max < 8) {
        for (int n = 1; n <= n_max; ++n) scan_n(n);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (int n = 1 + static_cast<int>(w); n <= n_max;
                     n += static_cast<int>(workers))
                    scan_n(n);
            });
        for (auto& th : pool) th.join();
    }

    for (int n = 1; n <= n_max; ++n) {
        const Bucket& b = buckets[static_cast<std::size_t>(n)];
        result.total_triples += b.total;
        result.zeros.insert(result.zeros.end(), b.zeros.begin(), b.zeros.end());
        result.triples.insert(result.triples.end(), b.triples.begin(),
                              b.triples.end());
    }
    return result;
}

/// For every l <= m <= n <= n_max: omega(n,m,l,i) != 0 for all i < m
/// iff the alternating exchange sums are nonzero for all j in 1..m.
/// Returns the offending triples (empty means the equivalence holds).
inline std::vector<TripleZeros> condition_equivalence_failures(int n_max) {
    if (n_max < 1)
        throw shape_error("condition_equivalence_check: n_max >= 1 required");
    const BinomialTable bt(2 * n_max);
    std::vector<TripleZeros> failures;
    for (int n = 1; n <= n_max; ++n)
        for (int m = 1; m <= n; ++m)
            for (int l = 1; l <= m; ++l) {
                bool omega_ok = true;
                for (int i = 0; i < m && omega_ok; ++i)
                    if (omega(bt, n, m, l, i) == 0) omega_ok = false;
                if (omega_ok != mms_condition(bt, n, m, l))
                    failures.push_back({n, m, l, omega_ok ? 1 : 0});
            }
    return failures;
}

inline bool condition_equivalence_check(int n_max) {
    return condition_equivalence_failures(n_max).empty();
}

}  // namespace garnir
