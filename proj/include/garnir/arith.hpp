#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace garnir {

// Exact arbitrary-precision scalars. Machine integers are reserved for
// indices and loop bounds; anything that can outgrow 64 bits lives here.
using BigInt = mpz_class;
using BigRat = mpq_class;

// Raised when a shape / tableau / parameter combination is malformed.
struct shape_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when a group action is applied to an incompatible object.
struct action_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when a computation would exceed a configured size bound.
struct bound_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// C(a,b) with the usual out-of-range convention: 0 when b < 0 or b > a.
inline BigInt binomial(long a, long b) {
    if (a < 0) throw shape_error("binomial: negative upper argument");
    if (b < 0 || b > a) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
                 static_cast<unsigned long>(b));
    return r;
}

inline BigInt factorial(long n) {
    if (n < 0) throw shape_error("factorial: negative argument");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// Dense table of C(a,b) for 0 <= b <= a <= max_n. Immutable after
// construction, so it is freely shareable across threads; the big scans
// build one up front instead of recomputing binomials per tuple.
class BinomialTable {
public:
    explicit BinomialTable(int max_n) : max_n_(max_n) {
        if (max_n < 0) throw shape_error("BinomialTable: negative size");
        rows_.resize(max_n + 1);
        for (int a = 0; a <= max_n; ++a) {
            rows_[a].resize(a + 1);
            rows_[a][0] = 1;
            rows_[a][a] = 1;
            for (int b = 1; b < a; ++b)
                rows_[a][b] = rows_[a - 1][b - 1] + rows_[a - 1][b];
        }
    }

    const BigInt& operator()(int a, int b) const {
        if (a < 0 || a > max_n_)
            throw shape_error("BinomialTable: argument out of range");
        if (b < 0 || b > a) return zero_;
        return rows_[a][b];
    }

    int max_n() const { return max_n_; }

private:
    int max_n_;
    std::vector<std::vector<BigInt>> rows_;
    BigInt zero_{0};
};

}  // namespace garnir
