#pragma once

#include <garnir/tabloid.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <memory>
#include <utility>
#include <vector>

namespace garnir {

/// Selects the dual Garnir family on a shape: adjacent column pair
/// (column, column+1), 1-based, and the exchange size.
struct GarnirSpec {
    Partition shape;
    int column = 0;    // c, with 1 <= c <= lambda_1 - 1
    int exchange = 0;  // l, with 1 <= l <= lambda'_{c+1}

    GarnirSpec(Partition shape_, int column_, int exchange_)
        : shape(std::move(shape_)), column(column_), exchange(exchange_) {
        if (column < 1 || column > shape.first_part() - 1)
            throw shape_error("GarnirSpec: no such adjacent column pair");
        const int next_len = shape.conjugate().part(column + 1);
        if (exchange < 1 || exchange > next_len)
            throw shape_error("GarnirSpec: exchange size out of range");
    }
};

namespace detail {

// All k-subsets of {0,...,pool-1} in lexicographic order.
inline void for_each_index_subset(
    int pool, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> pick(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int from, int got) -> void {
        if (got == k) {
            fn(pick);
            return;
        }
        for (int v = from; v <= pool - (k - got); ++v) {
            pick[static_cast<std::size_t>(got)] = v;
            self(self, v + 1, got + 1);
        }
    };
    rec(rec, 0, 0);
}

// Exchanges the entries of column ca at positions I with the entries of
// column cb at positions J, preserving the vertical order of each moved set.
inline Tableau splice_exchange(const Tableau& t, int ca,
                               const std::vector<int>& pos_a, int cb,
                               const std::vector<int>& pos_b) {
    std::vector<std::vector<int>> cols = t.columns();
    for (std::size_t k = 0; k < pos_a.size(); ++k)
        std::swap(cols[static_cast<std::size_t>(ca)]
                      [static_cast<std::size_t>(pos_a[k])],
                  cols[static_cast<std::size_t>(cb)]
                      [static_cast<std::size_t>(pos_b[k])]);
    return Tableau(t.shape(), std::move(cols));
}

}  // namespace detail

/// Dual Garnir relation g_{c,l}(t): [t] minus the sum over all ways of
/// exchanging the top l entries of column c+1 with an l-subset of column c,
/// each moved set keeping its vertical order. Accepts any tableau.
inline TabloidVector garnir_relation(const Tableau& t, const GarnirSpec& spec) {
    if (t.shape() != spec.shape)
        throw shape_error("garnir_relation: spec shape does not match tableau");
    const int c = spec.column - 1;
    const int l = spec.exchange;
    const int left_len = static_cast<int>(t.columns()[c].size());

    TabloidVector out(t.shape());
    out.add_tableau(t, BigRat(1));
    std::vector<int> top(static_cast<std::size_t>(l));
    for (int k = 0; k < l; ++k) top[static_cast<std::size_t>(k)] = k;
    detail::for_each_index_subset(left_len, l, [&](const std::vector<int>& I) {
        out.add_tableau(detail::splice_exchange(t, c, I, c + 1, top),
                        BigRat(-1));
    });
    return out;
}

namespace detail {

// C(m,l)[t] - sum over order-preserving l-for-l exchanges between columns
// c and c+1 of t, accumulated into `out` with weight `coeff`.
inline void symmetrized_pair_apply(TabloidVector& out, const Tableau& t,
                                   int c, int l, const BigRat& coeff) {
    const int left_len = static_cast<int>(t.columns()[c].size());
    const int right_len = static_cast<int>(t.columns()[c + 1].size());
    out.add_tableau(t, coeff * binomial(right_len, l));
    for_each_index_subset(left_len, l, [&](const std::vector<int>& I) {
        const std::vector<int> left = I;
        for_each_index_subset(right_len, l, [&](const std::vector<int>& J) {
            out.add_tableau(splice_exchange(t, c, left, c + 1, J), -coeff);
        });
    });
}

}  // namespace detail

/// The symmetrized operator for a two-column shape (n,m)':
///   eta_l [t] = C(m,l)[t] - sum of all order-preserving l-for-l exchanges
/// between the two columns, extended linearly and canonicalized.
inline TabloidVector eta_apply(const TabloidVector& v, int l) {
    const Partition& shape = v.shape();
    if (shape.first_part() != 2)
        throw shape_error("eta_apply: shape must have exactly two columns");
    const int m = shape.conjugate().part(2);
    if (l < 1 || l > m) throw shape_error("eta_apply: need 1 <= l <= m");
    TabloidVector out(shape);
    for (const auto& [word, coeff] : v.terms())
        detail::symmetrized_pair_apply(
            out, tabloid_from_word(shape, word).tableau(), 0, l, coeff);
    return out;
}

/// h_{c,l_c}: the two-column operator applied to columns (c, c+1) of each
/// tabloid, all other columns fixed. One spec per adjacent column pair,
/// in column order; returns one image vector per pair.
inline std::vector<TabloidVector> h_apply(const TabloidVector& v,
                                          const std::vector<GarnirSpec>& specs) {
    const Partition& shape = v.shape();
    const int pairs = shape.first_part() - 1;
    if (static_cast<int>(specs.size()) != pairs)
        throw shape_error("h_apply: need one spec per adjacent column pair");
    for (int c = 0; c < pairs; ++c) {
        if (specs[static_cast<std::size_t>(c)].shape != shape)
            throw shape_error("h_apply: spec shape mismatch");
        if (specs[static_cast<std::size_t>(c)].column != c + 1)
            throw shape_error("h_apply: specs must be in column order");
    }
    std::vector<TabloidVector> images;
    images.reserve(static_cast<std::size_t>(pairs));
    for (int c = 0; c < pairs; ++c) {
        TabloidVector image(shape);
        const int l = specs[static_cast<std::size_t>(c)].exchange;
        for (const auto& [word, coeff] : v.terms())
            detail::symmetrized_pair_apply(
                image, tabloid_from_word(shape, word).tableau(), c, l, coeff);
        images.push_back(std::move(image));
    }
    return images;
}

// ---------------------------------------------------------------------------
// Matrix realization on the two-column basis.
// ---------------------------------------------------------------------------

namespace detail {

// Machine-word binomials for subset ranking; C(64,32) still fits in 64 bits.
class Choose64 {
public:
    explicit Choose64(int max_n) : max_n_(max_n), c_(max_n + 1) {
        for (int a = 0; a <= max_n; ++a) {
            c_[a].assign(static_cast<std::size_t>(a) + 1, 1);
            for (int b = 1; b < a; ++b) c_[a][b] = c_[a - 1][b - 1] + c_[a - 1][b];
        }
    }
    long long operator()(int a, int b) const {
        if (b < 0 || b > a) return 0;
        return static_cast<long long>(c_[a][b]);
    }

private:
    int max_n_;
    std::vector<std::vector<unsigned long long>> c_;
};

// Lexicographic rank of a sorted k-subset of {1..N}, 0-based.
inline long long subset_rank(const Choose64& ch, int N,
                             const std::vector<int>& subset) {
    long long rank = 0;
    int prev = 0;
    const int k = static_cast<int>(subset.size());
    for (int idx = 0; idx < k; ++idx) {
        for (int v = prev + 1; v < subset[static_cast<std::size_t>(idx)]; ++v)
            rank += ch(N - v, k - idx - 1);
        prev = subset[static_cast<std::size_t>(idx)];
    }
    return rank;
}

inline std::vector<int> subset_unrank(const Choose64& ch, int N, int k,
                                      long long rank) {
    std::vector<int> subset(static_cast<std::size_t>(k));
    int v = 1;
    for (int idx = 0; idx < k; ++idx) {
        while (ch(N - v, k - idx - 1) <= rank) {
            rank -= ch(N - v, k - idx - 1);
            ++v;
        }
        subset[static_cast<std::size_t>(idx)] = v;
        ++v;
    }
    return subset;
}

}  // namespace detail

struct OperatorEntry {
    int row;
    long value;
    bool operator==(const OperatorEntry&) const = default;
};

/// Sparse integer matrix of an operator on a tabloid basis. Columns index
/// the input basis vector, rows the output coefficients, so apply() is an
/// ordinary matrix-vector product.
class OperatorMatrix {
public:
    OperatorMatrix(std::shared_ptr<const TabloidBasis> basis,
                   std::vector<std::vector<OperatorEntry>> columns)
        : basis_(std::move(basis)), cols_(std::move(columns)) {}

    int dim() const { return static_cast<int>(cols_.size()); }
    const TabloidBasis& basis() const { return *basis_; }

    const std::vector<OperatorEntry>& column(int c) const {
        return cols_[static_cast<std::size_t>(c)];
    }

    long entry(int row, int col) const {
        const auto& entries = cols_[static_cast<std::size_t>(col)];
        auto it = std::lower_bound(
            entries.begin(), entries.end(), row,
            [](const OperatorEntry& e, int r) { return e.row < r; });
        return (it != entries.end() && it->row == row) ? it->value : 0;
    }

    BigInt trace() const {
        BigInt t(0);
        for (int c = 0; c < dim(); ++c) t += entry(c, c);
        return t;
    }

    bool operator==(const OperatorMatrix& o) const { return cols_ == o.cols_; }

private:
    std::shared_ptr<const TabloidBasis> basis_;
    std::vector<std::vector<OperatorEntry>> cols_;
};

/// Streams the columns of the closed-form matrix of the symmetrized operator
/// on the (n,m)' basis without materializing it. Column S (a lex-ranked
/// n-subset of [n+m]) has C(m,l) on the diagonal and, for each replacement
/// of an l-subset R of S by an l-subset A of its complement, the sign
///   (-1)^(sum(R) + sum(A) + l + 1)
/// at the row of (S \ R) u A. No swap enumeration is involved.
inline void eta_closed_form_columns(
    int n, int m, int l,
    const std::function<void(long long, const std::vector<OperatorEntry>&)>&
        fn) {
    if (!(1 <= m && m <= n)) throw shape_error("eta matrix: need 1 <= m <= n");
    if (l < 1 || l > m) throw shape_error("eta matrix: need 1 <= l <= m");
    const int N = n + m;
    if (N > 60) throw bound_error("eta matrix: n + m too large to index");
    const detail::Choose64 ch(N);
    const long long dim = ch(N, n);
    if (dim > std::numeric_limits<int>::max())
        throw bound_error("eta matrix: basis too large to index");
    const long diag = static_cast<long>(ch(m, l));

    std::vector<OperatorEntry> entries;
    std::vector<int> complement(static_cast<std::size_t>(m));
    std::vector<int> target(static_cast<std::size_t>(n));
    for (long long s = 0; s < dim; ++s) {
        const std::vector<int> S = detail::subset_unrank(ch, N, n, s);
        {
            std::size_t pos = 0, k = 0;
            for (int v = 1; v <= N; ++v) {
                if (pos < S.size() && S[pos] == v)
                    ++pos;
                else
                    complement[k++] = v;
            }
        }
        entries.clear();
        entries.push_back({static_cast<int>(s), diag});
        detail::for_each_index_subset(n, l, [&](const std::vector<int>& ri) {
            int sum_r = 0;
            for (int idx : ri) sum_r += S[static_cast<std::size_t>(idx)];
            detail::for_each_index_subset(
                m, l, [&](const std::vector<int>& ai) {
                    int sum_a = 0;
                    for (int idx : ai)
                        sum_a += complement[static_cast<std::size_t>(idx)];
                    // Merge S \ R and A into the sorted target subset.
                    std::size_t out = 0, sp = 0, rp = 0, ap = 0;
                    while (out < target.size()) {
                        int from_s = -1;
                        while (sp < S.size()) {
                            if (rp < ri.size() &&
                                static_cast<int>(sp) ==
                                    ri[static_cast<std::size_t>(rp)]) {
                                ++sp;
                                ++rp;
                                continue;
                            }
                            from_s = S[sp];
                            break;
                        }
                        const int from_a =
                            ap < ai.size()
                                ? complement[static_cast<std::size_t>(
                                      ai[static_cast<std::size_t>(ap)])]
                                : -1;
                        if (from_s != -1 && (from_a == -1 || from_s < from_a)) {
                            target[out++] = from_s;
                            ++sp;
                        } else {
                            target[out++] = from_a;
                            ++ap;
                        }
                    }
                    const long long row = detail::subset_rank(ch, N, target);
                    const int sign = (sum_r + sum_a + l + 1) % 2 == 0 ? 1 : -1;
                    entries.push_back({static_cast<int>(row), sign});
                });
        });
        std::sort(entries.begin(), entries.end(),
                  [](const OperatorEntry& a, const OperatorEntry& b) {
                      return a.row < b.row;
                  });
        fn(s, entries);
    }
}

/// Materialized closed-form matrix (production path).
inline OperatorMatrix eta_matrix_closed_form(int n, int m, int l) {
    auto basis = std::make_shared<const TabloidBasis>(
        TabloidBasis::two_column(n, m));
    std::vector<std::vector<OperatorEntry>> cols(
        static_cast<std::size_t>(basis->size()));
    eta_closed_form_columns(
        n, m, l, [&](long long c, const std::vector<OperatorEntry>& entries) {
            cols[static_cast<std::size_t>(c)] = entries;
        });
    return OperatorMatrix(std::move(basis), std::move(cols));
}

/// Swap-enumeration matrix, column by column through eta_apply. Exponential
/// in l; kept as the independent oracle for the closed form.
inline OperatorMatrix eta_matrix_definitional(int n, int m, int l) {
    auto basis = std::make_shared<const TabloidBasis>(
        TabloidBasis::two_column(n, m));
    std::vector<std::vector<OperatorEntry>> cols(
        static_cast<std::size_t>(basis->size()));
    for (int c = 0; c < basis->size(); ++c) {
        TabloidVector unit(basis->shape());
        unit.add(basis->at(c), BigRat(1));
        const TabloidVector image = eta_apply(unit, l);
        auto& col = cols[static_cast<std::size_t>(c)];
        for (const auto& [word, coeff] : image.terms()) {
            if (coeff.get_den() != 1 ||
                !mpz_fits_slong_p(coeff.get_num().get_mpz_t()))
                throw std::logic_error("eta matrix: entry not a small integer");
            col.push_back({basis->index_of(word), coeff.get_num().get_si()});
        }
    }
    return OperatorMatrix(std::move(basis), std::move(cols));
}

}  // namespace garnir
