#pragma once

#include <garnir/exact_matrix.hpp>
#include <garnir/omega.hpp>

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

namespace garnir {

/// Size guards for the matrix-level checks. Everything here grows like
/// C(n+m,n), so exceeding a bound is an explicit error, never a silent
/// truncation.
struct VerifyOptions {
    int max_cells = 10;          // verify_presentation: sum of the shape
    int max_nm = 14;             // two-column kernel / presentation checks
    int max_nm_annihilator = 10; // dense polynomial-in-H product
    int max_nm_oracle = 9;       // projected eigenvalue construction
    RankOptions rank;
};

namespace detail {

// Rows of the closed-form operator matrix (the transpose; rank-equivalent).
inline std::vector<std::vector<long long>> eta_matrix_rows(int n, int m,
                                                           int l) {
    const Choose64 ch(n + m);
    const auto dim = static_cast<std::size_t>(ch(n + m, n));
    std::vector<std::vector<long long>> rows(dim);
    eta_closed_form_columns(
        n, m, l, [&](long long c, const std::vector<OperatorEntry>& entries) {
            auto& row = rows[static_cast<std::size_t>(c)];
            row.assign(dim, 0);
            for (const auto& e : entries)
                row[static_cast<std::size_t>(e.row)] = e.value;
        });
    return rows;
}

}  // namespace detail

struct KernelCheckReport {
    int n = 0, m = 0, l = 0;
    std::vector<int> zero_components;  // i in 0..m with omega(l,i) == 0
    BigInt expected_kernel;            // sum of hook dims over those i
    BigInt actual_kernel;              // dim M - rank(eta matrix)
    bool ok = false;
};

/// dim ker(eta matrix) must equal the total dimension of the components on
/// which the operator acts by 0.
inline KernelCheckReport kernel_dimension_report(
    int n, int m, int l, const VerifyOptions& opts = {}) {
    if (!(1 <= m && m <= n && 1 <= l && l <= m))
        throw shape_error("kernel_dimension_check: need 1 <= l <= m <= n");
    if (n + m > opts.max_nm)
        throw bound_error("kernel_dimension_check: n + m exceeds bound");
    KernelCheckReport report;
    report.n = n;
    report.m = m;
    report.l = l;
    const OmegaTable table(n, m);
    for (int i = 0; i <= m; ++i)
        if (table.value(l, i) == 0) {
            report.zero_components.push_back(i);
            report.expected_kernel += hook_dim_two_column(n, m, i);
        }
    const auto rows = detail::eta_matrix_rows(n, m, l);
    const int rank = exact_rank(rows, opts.rank);
    report.actual_kernel = static_cast<long>(rows.size()) - rank;
    report.ok = report.actual_kernel == report.expected_kernel;
    return report;
}

inline bool kernel_dimension_check(int n, int m, int l,
                                   const VerifyOptions& opts = {}) {
    return kernel_dimension_report(n, m, l, opts).ok;
}

/// Checks that prod over distinct eigenvalues w of (H - w I) is the zero
/// matrix, i.e. the operator is annihilated by its predicted spectrum.
inline bool annihilator_check(int n, int m, int l,
                              const VerifyOptions& opts = {}) {
    if (!(1 <= m && m <= n && 1 <= l && l <= m))
        throw shape_error("annihilator_check: need 1 <= l <= m <= n");
    if (n + m > opts.max_nm_annihilator)
        throw bound_error("annihilator_check: n + m exceeds bound");

    const OmegaTable table(n, m);
    std::set<BigInt> spectrum;
    for (int i = 0; i <= m; ++i) spectrum.insert(table.value(l, i));

    const OperatorMatrix h = eta_matrix_closed_form(n, m, l);
    const int d = h.dim();
    // acc starts as I and absorbs one factor (H - w I) per distinct w.
    std::vector<std::vector<BigInt>> acc(
        static_cast<std::size_t>(d),
        std::vector<BigInt>(static_cast<std::size_t>(d)));
    for (int r = 0; r < d; ++r)
        acc[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] = 1;

    for (const BigInt& w : spectrum) {
        std::vector<std::vector<BigInt>> next(
            static_cast<std::size_t>(d),
            std::vector<BigInt>(static_cast<std::size_t>(d)));
        for (int c = 0; c < d; ++c) {
            for (const auto& e : h.column(c)) {
                const BigInt v(e.value);
                for (int r = 0; r < d; ++r)
                    next[static_cast<std::size_t>(r)]
                        [static_cast<std::size_t>(c)] +=
                        acc[static_cast<std::size_t>(r)]
                           [static_cast<std::size_t>(e.row)] *
                        v;
            }
            if (w != 0)
                for (int r = 0; r < d; ++r)
                    next[static_cast<std::size_t>(r)]
                        [static_cast<std::size_t>(c)] -=
                        acc[static_cast<std::size_t>(r)]
                           [static_cast<std::size_t>(c)] *
                        w;
        }
        acc = std::move(next);
    }

    for (const auto& row : acc)
        for (const BigInt& v : row)
            if (v != 0) return false;
    return true;
}

/// Builds the projected vector r_t f_t v_T for the component 2^i 1^(n+m-2i),
/// applies the symmetrized operator, and reads off the eigenvalue as the
/// coefficient of v_T. Must equal omega(n, m, l, i).
///
/// v_T has first column [1..n]; t pairs row k with n+k for k <= i. The
/// coset representatives are the sign-summed column permutations increasing
/// on {1..n} and on {n+i+1..n+m} and fixing {n+1..n+i} pointwise (left
/// cosets); they are generated directly as interleavings, with the sign
/// obtained from the cross-inversion count. The row group contributes the
/// 2^i unsigned pair swaps.
inline BigInt projected_eigenvalue_oracle(int n, int m, int l, int i,
                                          const VerifyOptions& opts = {}) {
    if (!(1 <= m && m <= n && 1 <= l && l <= m && 0 <= i && i <= m))
        throw shape_error("projected_eigenvalue_oracle: bad parameters");
    if (n + m > opts.max_nm_oracle)
        throw bound_error("projected_eigenvalue_oracle: n + m exceeds bound");
    if (i > 25)
        throw bound_error("projected_eigenvalue_oracle: row group too large");

    const Partition mu = Partition::two_column(n, m);
    std::vector<std::vector<int>> base_cols(2);
    for (int e = 1; e <= n; ++e) base_cols[0].push_back(e);
    for (int e = n + 1; e <= n + m; ++e) base_cols[1].push_back(e);
    const Tableau base(mu, base_cols);
    const std::vector<int> base_word = base.word();

    // Sorted first-column alphabet of t: [1..n] then [n+i+1..n+m].
    std::vector<int> alphabet;
    for (int e = 1; e <= n; ++e) alphabet.push_back(e);
    for (int e = n + i + 1; e <= n + m; ++e) alphabet.push_back(e);
    const int a_len = static_cast<int>(alphabet.size());

    TabloidVector projected(mu);
    std::vector<int> pi(static_cast<std::size_t>(n + m));
    detail::for_each_index_subset(a_len, n, [&](const std::vector<int>& xi) {
        std::vector<int> x(static_cast<std::size_t>(n));
        std::vector<int> y;
        y.reserve(static_cast<std::size_t>(m - i));
        {
            std::size_t next = 0;
            for (int k = 0; k < a_len; ++k) {
                if (next < xi.size() && xi[next] == k) {
                    x[next] = alphabet[static_cast<std::size_t>(k)];
                    ++next;
                } else {
                    y.push_back(alphabet[static_cast<std::size_t>(k)]);
                }
            }
        }
        int cross_inversions = 0;
        for (int xv : x)
            for (int yv : y)
                if (xv > yv) ++cross_inversions;
        const int sigma_sign = cross_inversions % 2 == 0 ? 1 : -1;

        std::vector<int> sigma(static_cast<std::size_t>(n + m));
        for (int k = 1; k <= n; ++k)
            sigma[static_cast<std::size_t>(k - 1)] =
                x[static_cast<std::size_t>(k - 1)];
        for (int k = 1; k <= i; ++k)
            sigma[static_cast<std::size_t>(n + k - 1)] = n + k;
        for (int k = 1; k <= m - i; ++k)
            sigma[static_cast<std::size_t>(n + i + k - 1)] =
                y[static_cast<std::size_t>(k - 1)];

        // Row group: swap the values k <-> n+k for k in any subset of [i],
        // composed after sigma (pi = alpha o sigma).
        for (unsigned mask = 0; mask < (1u << i); ++mask) {
            for (int e = 1; e <= n + m; ++e) {
                int v = sigma[static_cast<std::size_t>(e - 1)];
                if (v <= i && (mask & (1u << (v - 1))))
                    v += n;
                else if (v > n && v <= n + i && (mask & (1u << (v - n - 1))))
                    v -= n;
                pi[static_cast<std::size_t>(e - 1)] = v;
            }
            std::vector<std::vector<int>> cols(2);
            cols[0].reserve(static_cast<std::size_t>(n));
            cols[1].reserve(static_cast<std::size_t>(m));
            for (int e = 1; e <= n; ++e)
                cols[0].push_back(pi[static_cast<std::size_t>(e - 1)]);
            for (int e = n + 1; e <= n + m; ++e)
                cols[1].push_back(pi[static_cast<std::size_t>(e - 1)]);
            projected.add_tableau(Tableau(mu, std::move(cols)),
                                  BigRat(sigma_sign));
        }
    });

    if (projected.coefficient(base_word) != 1)
        throw std::logic_error(
            "projected_eigenvalue_oracle: base coefficient is not 1");

    const TabloidVector image = eta_apply(projected, l);
    const BigRat value = image.coefficient(base_word);
    if (value.get_den() != 1)
        throw std::logic_error(
            "projected_eigenvalue_oracle: non-integer eigenvalue");
    return value.get_num();
}

struct PresentationVerdict {
    Partition shape;
    std::vector<int> lhat;
    bool predicted = false;  // all relevant omega values nonzero
    bool observed = false;   // quotient dimension equals the Specht dimension
    BigInt dim_m;
    BigInt specht_dim;
    BigInt relation_rank;
    BigInt quotient_dim;
};

namespace detail {

inline void finish_verdict(PresentationVerdict& v) {
    v.quotient_dim = v.dim_m - v.relation_rank;
    v.observed = v.quotient_dim == v.specht_dim;
    // The relations are sums of dual Garnir relations, so they can never cut
    // below the Specht dimension; anything else is an implementation bug.
    if (v.quotient_dim < v.specht_dim)
        throw std::logic_error("verify: relation rank exceeds dim M - dim S");
}

}  // namespace detail

/// Two-column verdict: the relation space is the image of the symmetrized
/// operator, so its rank comes from the closed-form matrix.
inline PresentationVerdict verify_two_column(int n, int m, int l,
                                             const VerifyOptions& opts = {}) {
    if (!(1 <= m && m <= n && 1 <= l && l <= m))
        throw shape_error("verify_two_column: need 1 <= l <= m <= n");
    if (n + m > opts.max_nm)
        throw bound_error("verify_two_column: n + m exceeds bound");

    PresentationVerdict v;
    v.shape = Partition::two_column(n, m);
    v.lhat = {l};
    const OmegaTable table(n, m);
    v.predicted = true;
    for (int i = 0; i < m; ++i)
        if (table.value(l, i) == 0) v.predicted = false;

    const auto rows = detail::eta_matrix_rows(n, m, l);
    v.dim_m = static_cast<long>(rows.size());
    v.specht_dim = hook_dim_two_column(n, m, m);
    v.relation_rank = exact_rank(rows, opts.rank);
    detail::finish_verdict(v);
    return v;
}

/// General verdict: stacks the images of every basis tabloid under each
/// pair operator h_{c,l_c} and compares the quotient dimension with the
/// hook-length dimension.
inline PresentationVerdict verify_presentation(const Partition& shape,
                                               const std::vector<int>& lhat,
                                               const VerifyOptions& opts = {}) {
    if (shape.cells() > opts.max_cells)
        throw bound_error("verify_presentation: shape exceeds cell bound");
    const int pairs = shape.first_part() - 1;
    if (static_cast<int>(lhat.size()) != pairs)
        throw shape_error("verify_presentation: need one exchange size per "
                          "adjacent column pair");

    PresentationVerdict v;
    v.shape = shape;
    v.lhat = lhat;
    v.specht_dim = hook_dim(shape);

    const Partition conj = shape.conjugate();
    v.predicted = true;
    std::vector<GarnirSpec> specs;
    for (int c = 1; c <= pairs; ++c) {
        const int l = lhat[static_cast<std::size_t>(c - 1)];
        specs.emplace_back(shape, c, l);
        for (int i = 0; i < conj.part(c + 1); ++i)
            if (omega(conj.part(c), conj.part(c + 1), l, i) == 0)
                v.predicted = false;
    }

    const TabloidBasis basis = TabloidBasis::build(shape);
    const int dim = basis.size();
    v.dim_m = dim;

    std::vector<std::vector<long long>> rows;
    rows.reserve(static_cast<std::size_t>(pairs) *
                 static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) {
        TabloidVector unit(shape);
        unit.add(basis.at(k), BigRat(1));
        for (TabloidVector& image : h_apply(unit, specs)) {
            std::vector<long long> row(static_cast<std::size_t>(dim), 0);
            for (const auto& [word, coeff] : image.terms()) {
                if (coeff.get_den() != 1 ||
                    !mpz_fits_slong_p(coeff.get_num().get_mpz_t()))
                    throw std::logic_error("verify: non-integer relation");
                row[static_cast<std::size_t>(basis.index_of(word))] =
                    coeff.get_num().get_si();
            }
            rows.push_back(std::move(row));
        }
    }

    v.relation_rank = pairs == 0 ? 0 : exact_rank(rows, opts.rank);
    detail::finish_verdict(v);
    return v;
}

}  // namespace garnir
