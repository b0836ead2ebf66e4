#pragma once

#include <garnir/arith.hpp>
#include <garnir/garnir_operator.hpp>

#include <algorithm>
#include <cstdint>
#include <vector>

namespace garnir {

/// Dense matrix over the rationals (integer-valued in practice here).
/// Only exact operations: no floating point anywhere.
class ExactMatrix {
public:
    ExactMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        if (rows < 0 || cols < 0) throw shape_error("ExactMatrix: bad size");
    }

    static ExactMatrix identity(int k) {
        ExactMatrix m(k, k);
        for (int i = 0; i < k; ++i) m.at(i, i) = 1;
        return m;
    }

    static ExactMatrix from_operator(const OperatorMatrix& op) {
        ExactMatrix m(op.dim(), op.dim());
        for (int c = 0; c < op.dim(); ++c)
            for (const auto& e : op.column(c)) m.at(e.row, c) = e.value;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigRat& at(int r, int c) {
        return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(c)];
    }
    const BigRat& at(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(c)];
    }

private:
    int rows_, cols_;
    std::vector<BigRat> a_;
};

struct RankOptions {
    // Matrices with max dimension above this go through the modular path.
    int modular_threshold = 80;
    // Certification: this many distinct primes must agree (clamped to >= 3);
    // any disagreement falls back to fraction-free elimination.
    int agreeing_primes = 3;
};

namespace detail {

// Integer working copy: every row is scaled by the lcm of its denominators,
// which leaves the rank unchanged.
inline std::vector<std::vector<BigInt>> integer_rows(const ExactMatrix& m) {
    std::vector<std::vector<BigInt>> rows(
        static_cast<std::size_t>(m.rows()),
        std::vector<BigInt>(static_cast<std::size_t>(m.cols())));
    for (int r = 0; r < m.rows(); ++r) {
        BigInt lcm(1);
        for (int c = 0; c < m.cols(); ++c)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                    m.at(r, c).get_den().get_mpz_t());
        for (int c = 0; c < m.cols(); ++c) {
            BigRat scaled = m.at(r, c) * BigRat(lcm);
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                scaled.get_num();
        }
    }
    return rows;
}

inline std::vector<std::vector<BigInt>> to_bigint_rows(
    const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<BigInt>> out(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out[r].reserve(rows[r].size());
        for (long long v : rows[r]) out[r].emplace_back(static_cast<long>(v));
    }
    return out;
}

// Fraction-free (single-step Bareiss) elimination. Every quotient in the
// cross-multiplication update is an exact integer; checked, not assumed.
inline int bareiss_rank(std::vector<std::vector<BigInt>> a) {
    const int R = static_cast<int>(a.size());
    const int C = R == 0 ? 0 : static_cast<int>(a[0].size());
    BigInt prev(1);
    int rank = 0;
    for (int col = 0; col < C && rank < R; ++col) {
        int pivot = -1;
        for (int r = rank; r < R; ++r) {
            if (a[r][col] == 0) continue;
            if (pivot == -1 ||
                mpz_cmpabs(a[r][col].get_mpz_t(), a[pivot][col].get_mpz_t()) < 0)
                pivot = r;
        }
        if (pivot == -1) continue;
        std::swap(a[static_cast<std::size_t>(rank)],
                  a[static_cast<std::size_t>(pivot)]);
        for (int r = rank + 1; r < R; ++r) {
            for (int c = col + 1; c < C; ++c) {
                BigInt num = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
                BigInt q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                            prev.get_mpz_t());
                if (rem != 0)
                    throw std::logic_error("bareiss_rank: inexact division");
                a[r][c] = std::move(q);
            }
            a[r][col] = 0;
        }
        prev = a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
        ++rank;
    }
    return rank;
}

// Primes just under 2^31, so that x + a*b stays within 64 bits in the
// elimination inner loop.
inline const std::vector<std::uint32_t>& rank_primes() {
    static const std::vector<std::uint32_t> primes = {
        2147483647u, 2147483629u, 2147483587u, 2147483579u,
        2147483563u, 2147483549u, 2147483543u, 2147483497u,
    };
    return primes;
}

inline std::uint64_t residue(const BigInt& v, std::uint32_t p) {
    BigInt r = v % p;
    long x = r.get_si();
    if (x < 0) x += p;
    return static_cast<std::uint64_t>(x);
}

inline std::uint64_t residue(long long v, std::uint32_t p) {
    long long x = v % static_cast<long long>(p);
    if (x < 0) x += p;
    return static_cast<std::uint64_t>(x);
}

template <class T>
int modular_rank(const std::vector<std::vector<T>>& a, std::uint32_t p) {
    const int R = static_cast<int>(a.size());
    const int C = R == 0 ? 0 : static_cast<int>(a[0].size());
    std::vector<std::vector<std::uint64_t>> w(
        static_cast<std::size_t>(R),
        std::vector<std::uint64_t>(static_cast<std::size_t>(C)));
    for (int r = 0; r < R; ++r)
        for (int c = 0; c < C; ++c)
            w[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                residue(a[static_cast<std::size_t>(r)]
                         [static_cast<std::size_t>(c)],
                        p);

    auto pow_mod = [p](std::uint64_t b, std::uint64_t e) {
        std::uint64_t acc = 1;
        while (e) {
            if (e & 1) acc = acc * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return acc;
    };

    int rank = 0;
    for (int col = 0; col < C && rank < R; ++col) {
        int pivot = -1;
        for (int r = rank; r < R; ++r)
            if (w[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) {
                pivot = r;
                break;
            }
        if (pivot == -1) continue;
        std::swap(w[static_cast<std::size_t>(rank)],
                  w[static_cast<std::size_t>(pivot)]);
        auto& prow = w[static_cast<std::size_t>(rank)];
        const std::uint64_t inv =
            pow_mod(prow[static_cast<std::size_t>(col)], p - 2);
        for (int c = col; c < C; ++c)
            prow[static_cast<std::size_t>(c)] =
                prow[static_cast<std::size_t>(c)] * inv % p;
        for (int r = rank + 1; r < R; ++r) {
            auto& row = w[static_cast<std::size_t>(r)];
            const std::uint64_t f = row[static_cast<std::size_t>(col)];
            if (!f) continue;
            const std::uint64_t nf = p - f;
            for (int c = col; c < C; ++c)
                row[static_cast<std::size_t>(c)] =
                    (row[static_cast<std::size_t>(c)] +
                     nf * prow[static_cast<std::size_t>(c)]) %
                    p;
        }
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<BigInt>> to_bigint_rows_any(
    std::vector<std::vector<BigInt>> rows) {
    return rows;
}

inline std::vector<std::vector<BigInt>> to_bigint_rows_any(
    const std::vector<std::vector<long long>>& rows) {
    return to_bigint_rows(rows);
}

template <class T>
int certified_rank(const std::vector<std::vector<T>>& rows, int rows_n,
                   int cols_n, const RankOptions& opts) {
    if (rows_n == 0 || cols_n == 0) return 0;
    if (std::max(rows_n, cols_n) <= opts.modular_threshold)
        return bareiss_rank(to_bigint_rows_any(rows));
    const auto& primes = rank_primes();
    const std::size_t wanted = static_cast<std::size_t>(
        std::clamp(opts.agreeing_primes, 3, static_cast<int>(primes.size())));
    const int agreed = modular_rank(rows, primes[0]);
    for (std::size_t k = 1; k < wanted; ++k)
        if (modular_rank(rows, primes[k]) != agreed)
            return bareiss_rank(to_bigint_rows_any(rows));
    return agreed;
}

}  // namespace detail

/// Rank over Q. Small matrices go through fraction-free elimination; larger
/// ones through mod-p elimination certified by agreement of several primes,
/// with a fraction-free fallback on any disagreement.
inline int exact_rank(const ExactMatrix& m, const RankOptions& opts = {}) {
    return detail::certified_rank(detail::integer_rows(m), m.rows(), m.cols(),
                                  opts);
}

/// Same contract for a plain integer row list (relation matrices).
inline int exact_rank(const std::vector<std::vector<long long>>& rows,
                      const RankOptions& opts = {}) {
    const int R = static_cast<int>(rows.size());
    const int C = R == 0 ? 0 : static_cast<int>(rows[0].size());
    return detail::certified_rank(rows, R, C, opts);
}

inline int kernel_dimension(const ExactMatrix& m,
                            const RankOptions& opts = {}) {
    return m.cols() - exact_rank(m, opts);
}

}  // namespace garnir
