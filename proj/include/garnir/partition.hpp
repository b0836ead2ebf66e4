#pragma once

#include <garnir/arith.hpp>

#include <algorithm>
#include <compare>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace garnir {

/// Integer partition lambda = (lambda_1 >= ... >= lambda_l >= 1), stored as
/// its part list. Column c of the Young diagram (1-based) has length
/// conjugate().part(c), the access pattern that dominates everything built
/// on top of this class.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] < 1)
                throw shape_error("Partition: parts must be positive");
            if (k > 0 && parts_[k] > parts_[k - 1])
                throw shape_error("Partition: parts must be weakly decreasing");
        }
        cells_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    /// Two-column shape 2^m 1^(n-m): conjugate (n, m). Requires 1 <= m <= n.
    static Partition two_column(int n, int m) {
        if (m < 1 || m > n)
            throw shape_error("two_column: need 1 <= m <= n");
        std::vector<int> p(static_cast<std::size_t>(n), 1);
        for (int k = 0; k < m; ++k) p[static_cast<std::size_t>(k)] = 2;
        return Partition(std::move(p));
    }

    /// Parses "3,2,1" (also accepts whitespace separators).
    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        std::string token;
        std::istringstream in(text);
        while (std::getline(in, token, ',')) {
            if (token.empty()) continue;
            parts.push_back(std::stoi(token));
        }
        return Partition(std::move(parts));
    }

    int cells() const { return cells_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// r-th part, 1-based; 0 beyond the last row.
    int part(int r) const {
        if (r < 1) throw shape_error("Partition::part: 1-based index");
        return r <= rows() ? parts_[static_cast<std::size_t>(r - 1)] : 0;
    }

    int first_part() const { return parts_.empty() ? 0 : parts_[0]; }

    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const {
        if (parts_.empty()) return Partition();
        std::vector<int> conj(static_cast<std::size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int c = 0; c < p; ++c) ++conj[static_cast<std::size_t>(c)];
        return Partition(std::move(conj));
    }

    /// Column length lambda'_c, 1-based; 0 beyond the last column.
    int col_length(int c) const {
        if (c < 1) throw shape_error("Partition::col_length: 1-based index");
        int len = 0;
        for (int p : parts_)
            if (p >= c) ++len;
        return len;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(parts_[k]);
        }
        return s + ")";
    }

private:
    std::vector<int> parts_;
    int cells_ = 0;
};

/// Number of standard Young tableaux of shape lambda, by the hook length
/// formula: n! / prod of hook lengths. Division is exact by construction;
/// asserted anyway to catch transcription slips.
inline BigInt hook_dim(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    BigInt hooks(1);
    for (int r = 1; r <= lambda.rows(); ++r) {
        for (int c = 1; c <= lambda.part(r); ++c) {
            const int arm = lambda.part(r) - c;
            const int leg = conj.part(c) - r;
            hooks *= arm + leg + 1;
        }
    }
    BigInt num = factorial(lambda.cells());
    BigInt q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                hooks.get_mpz_t());
    if (rem != 0) throw std::logic_error("hook_dim: inexact division");
    return q;
}

/// dim S^(2^i 1^(n+m-2i)) = C(n+m, i) * (n+m-2i+1) / (n+m-i+1), evaluated
/// product-first so everything stays integral; the final division must be
/// exact and is checked.
inline BigInt hook_dim_two_column(int n, int m, int i) {
    if (!(0 <= i && i <= m && m <= n))
        throw shape_error("hook_dim_two_column: need 0 <= i <= m <= n");
    BigInt num = binomial(n + m, i) * (n + m - 2 * i + 1);
    BigInt q, rem;
    const BigInt den(n + m - i + 1);
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                den.get_mpz_t());
    if (rem != 0)
        throw std::logic_error("hook_dim_two_column: inexact division");
    return q;
}

/// Exhaustive count of standard fillings, used as the independent oracle for
/// hook_dim. Grows factorially, hence the hard size guard.
inline BigInt count_standard_tableaux_bruteforce(const Partition& lambda) {
    if (lambda.cells() > 12)
        throw bound_error(
            "count_standard_tableaux_bruteforce: shape larger than 12 cells");
    if (lambda.empty()) return BigInt(1);

    // Fill 1..n in increasing order; at each step the filled cells of every
    // row must form a prefix, and the prefix lengths must stay a partition.
    std::vector<int> filled(static_cast<std::size_t>(lambda.rows()), 0);
    BigInt count(0);
    auto place = [&](auto&& self, int next) -> void {
        if (next > lambda.cells()) {
            ++count;
            return;
        }
        for (int r = 0; r < lambda.rows(); ++r) {
            const bool row_open = filled[r] < lambda.part(r + 1);
            const bool column_ok = r == 0 || filled[r - 1] > filled[r];
            if (row_open && column_ok) {
                ++filled[r];
                self(self, next + 1);
                --filled[r];
            }
        }
    };
    place(place, 1);
    return count;
}

/// All partitions of n in lexicographically decreasing part-list order.
inline std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

}  // namespace garnir
