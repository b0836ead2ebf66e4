#pragma once

#include <garnir/partition.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace garnir {

/// A filling of the Young diagram of `shape` with the entries 1..n, each
/// exactly once, stored column by column. Columns need not be sorted here;
/// sorting (with its sign) is canonicalize()'s job.
class Tableau {
public:
    Tableau(Partition shape, std::vector<std::vector<int>> columns)
        : shape_(std::move(shape)), columns_(std::move(columns)) {
        const Partition conj = shape_.conjugate();
        if (static_cast<int>(columns_.size()) != shape_.first_part())
            throw shape_error("Tableau: wrong number of columns");
        std::vector<char> seen(static_cast<std::size_t>(shape_.cells()) + 1, 0);
        for (int c = 0; c < static_cast<int>(columns_.size()); ++c) {
            if (static_cast<int>(columns_[c].size()) != conj.part(c + 1))
                throw shape_error("Tableau: column length does not match shape");
            for (int e : columns_[c]) {
                if (e < 1 || e > shape_.cells() || seen[e])
                    throw shape_error("Tableau: entries must be 1..n, distinct");
                seen[e] = 1;
            }
        }
    }

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& columns() const { return columns_; }
    std::vector<std::vector<int>>& columns() { return columns_; }

    bool column_strict() const {
        for (const auto& col : columns_)
            if (!std::is_sorted(col.begin(), col.end())) return false;
        return true;
    }

    /// Column-concatenated word; the total order used everywhere.
    std::vector<int> word() const {
        std::vector<int> w;
        w.reserve(static_cast<std::size_t>(shape_.cells()));
        for (const auto& col : columns_) w.insert(w.end(), col.begin(), col.end());
        return w;
    }

private:
    Partition shape_;
    std::vector<std::vector<int>> columns_;
};

/// Signed equivalence class of a tableau under column permutations,
/// represented by the unique column-strict member.
class ColumnTabloid {
public:
    explicit ColumnTabloid(Tableau t) : tableau_(std::move(t)) {
        if (!tableau_.column_strict())
            throw shape_error("ColumnTabloid: representative must be column-strict");
    }

    const Tableau& tableau() const { return tableau_; }
    const Partition& shape() const { return tableau_.shape(); }
    const std::vector<std::vector<int>>& columns() const {
        return tableau_.columns();
    }
    std::vector<int> word() const { return tableau_.word(); }

    bool operator==(const ColumnTabloid& o) const { return word() == o.word(); }
    bool operator<(const ColumnTabloid& o) const { return word() < o.word(); }

private:
    Tableau tableau_;
};

/// "[[1,2],[3]]" -- columns as JSON arrays of integers.
inline std::string to_json(const ColumnTabloid& t) {
    std::string s = "[";
    const auto& cols = t.columns();
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (c) s += ",";
        s += "[";
        for (std::size_t k = 0; k < cols[c].size(); ++k) {
            if (k) s += ",";
            s += std::to_string(cols[c][k]);
        }
        s += "]";
    }
    return s + "]";
}

namespace detail {

// Parity of the permutation that sorts `col` ascending = parity of the
// inversion count.
inline int sort_sign(const std::vector<int>& col) {
    int inversions = 0;
    for (std::size_t a = 0; a < col.size(); ++a)
        for (std::size_t b = a + 1; b < col.size(); ++b)
            if (col[a] > col[b]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace detail

/// Sorts every column ascending. The sign is the product over columns of the
/// sorting permutation's sign, so `t == sign * canonical` in M^lambda.
inline std::pair<ColumnTabloid, int> canonicalize(const Tableau& t) {
    int sign = 1;
    std::vector<std::vector<int>> cols = t.columns();
    for (auto& col : cols) {
        sign *= detail::sort_sign(col);
        std::sort(col.begin(), col.end());
    }
    return {ColumnTabloid(Tableau(t.shape(), std::move(cols))), sign};
}

/// Element of M^lambda: finite rational combination of column tabloids,
/// keyed by their words. Exact zeros are pruned eagerly.
class TabloidVector {
public:
    TabloidVector() = default;
    explicit TabloidVector(Partition shape) : shape_(std::move(shape)) {}

    const Partition& shape() const { return shape_; }

    void add(const std::vector<int>& word, const BigRat& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = coeffs_.try_emplace(word, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    void add(const ColumnTabloid& t, const BigRat& coeff) { add(t.word(), coeff); }

    /// Adds `coeff * [t]` for an arbitrary tableau, canonicalizing first.
    void add_tableau(const Tableau& t, const BigRat& coeff) {
        auto [canon, sign] = canonicalize(t);
        add(canon.word(), coeff * sign);
    }

    BigRat coefficient(const std::vector<int>& word) const {
        auto it = coeffs_.find(word);
        return it == coeffs_.end() ? BigRat(0) : it->second;
    }

    BigRat coefficient(const ColumnTabloid& t) const {
        return coefficient(t.word());
    }

    std::size_t support_size() const { return coeffs_.size(); }
    bool is_zero() const { return coeffs_.empty(); }

    const std::map<std::vector<int>, BigRat>& terms() const { return coeffs_; }

    TabloidVector& operator+=(const TabloidVector& o) {
        for (const auto& [w, c] : o.coeffs_) add(w, c);
        return *this;
    }

    TabloidVector& operator-=(const TabloidVector& o) {
        for (const auto& [w, c] : o.coeffs_) add(w, -c);
        return *this;
    }

    TabloidVector& operator*=(const BigRat& s) {
        if (s == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [w, c] : coeffs_) c *= s;
        return *this;
    }

    bool operator==(const TabloidVector& o) const {
        return shape_ == o.shape_ && coeffs_ == o.coeffs_;
    }

private:
    Partition shape_;
    std::map<std::vector<int>, BigRat> coeffs_;
};

/// Rebuilds the column-strict tableau whose concatenated word is `word`.
inline ColumnTabloid tabloid_from_word(const Partition& shape,
                                       const std::vector<int>& word) {
    const Partition conj = shape.conjugate();
    std::vector<std::vector<int>> cols;
    std::size_t pos = 0;
    for (int c = 1; c <= shape.first_part(); ++c) {
        const auto len = static_cast<std::size_t>(conj.part(c));
        cols.emplace_back(word.begin() + pos, word.begin() + pos + len);
        pos += len;
    }
    return ColumnTabloid(Tableau(shape, std::move(cols)));
}

/// Ordered basis of M^lambda: all column-strict fillings, enumerated in
/// lexicographic order of the column-concatenated word. For a two-column
/// shape this is lexicographic order of the first-column subset.
class TabloidBasis {
public:
    static TabloidBasis build(const Partition& shape) {
        TabloidBasis basis;
        basis.shape_ = shape;
        const Partition conj = shape.conjugate();
        std::vector<int> available(static_cast<std::size_t>(shape.cells()));
        for (int e = 1; e <= shape.cells(); ++e)
            available[static_cast<std::size_t>(e - 1)] = e;
        std::vector<std::vector<int>> cols(
            static_cast<std::size_t>(shape.first_part()));
        basis.enumerate(conj, available, cols, 0);
        for (std::size_t k = 0; k < basis.elements_.size(); ++k)
            basis.index_[basis.elements_[k].word()] = static_cast<int>(k);
        return basis;
    }

    /// Basis of M^mu for mu = (n,m)': one element v_T per n-subset T of
    /// [n+m], lexicographic in T.
    static TabloidBasis two_column(int n, int m) {
        if (m < 1 || m > n) throw shape_error("two_column basis: need 1 <= m <= n");
        return build(Partition::two_column(n, m));
    }

    const Partition& shape() const { return shape_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const ColumnTabloid& at(int k) const {
        return elements_[static_cast<std::size_t>(k)];
    }

    int index_of(const std::vector<int>& word) const {
        auto it = index_.find(word);
        if (it == index_.end())
            throw shape_error("TabloidBasis: word not in basis");
        return it->second;
    }

    int index_of(const ColumnTabloid& t) const { return index_of(t.word()); }

private:
    TabloidBasis() = default;

    void enumerate(const Partition& conj, std::vector<int>& available,
                   std::vector<std::vector<int>>& cols, int c) {
        if (c == static_cast<int>(cols.size())) {
            elements_.emplace_back(Tableau(shape_, cols));
            return;
        }
        const int len = conj.part(c + 1);
        const int pool = static_cast<int>(available.size());
        std::vector<int> pick(static_cast<std::size_t>(len));
        // Index combinations of `available` in lexicographic order; since
        // `available` is sorted, so are the chosen column contents.
        auto choose = [&](auto&& self, int from, int got) -> void {
            if (got == len) {
                std::vector<int> rest;
                rest.reserve(static_cast<std::size_t>(pool - len));
                std::vector<char> used(static_cast<std::size_t>(pool), 0);
                for (int k = 0; k < len; ++k) used[pick[k]] = 1;
                cols[c].assign(len, 0);
                for (int k = 0; k < len; ++k) cols[c][k] = available[pick[k]];
                for (int k = 0; k < pool; ++k)
                    if (!used[k]) rest.push_back(available[k]);
                std::swap(available, rest);
                enumerate(conj, available, cols, c + 1);
                std::swap(available, rest);
                return;
            }
            for (int k = from; k <= pool - (len - got); ++k) {
                pick[got] = k;
                self(self, k + 1, got + 1);
            }
        };
        choose(choose, 0, 0);
    }

    Partition shape_;
    std::vector<ColumnTabloid> elements_;
    std::map<std::vector<int>, int> index_;
};

/// Entry-replacement action of a permutation of [n] (1-based images) on a
/// tableau, canonicalized. Returns the canonical tabloid and the sign.
inline std::pair<ColumnTabloid, int> permute(const std::vector<int>& sigma,
                                             const Tableau& t) {
    const int n = t.shape().cells();
    if (static_cast<int>(sigma.size()) != n)
        throw action_error("permute: permutation size does not match shape");
    std::vector<std::vector<int>> cols = t.columns();
    for (auto& col : cols)
        for (int& e : col) e = sigma[static_cast<std::size_t>(e - 1)];
    return canonicalize(Tableau(t.shape(), std::move(cols)));
}

/// Linear extension to M^lambda. Left action: permute(sigma on tau, v) ==
/// permute(sigma, permute(tau, v)).
inline TabloidVector permute(const std::vector<int>& sigma,
                             const TabloidVector& v) {
    const int n = v.shape().cells();
    if (static_cast<int>(sigma.size()) != n)
        throw action_error("permute: permutation size does not match shape");
    std::vector<char> seen(sigma.size() + 1, 0);
    for (int s : sigma) {
        if (s < 1 || s > n || seen[static_cast<std::size_t>(s)])
            throw action_error("permute: not a bijection on [n]");
        seen[static_cast<std::size_t>(s)] = 1;
    }
    TabloidVector out(v.shape());
    for (const auto& [word, coeff] : v.terms()) {
        auto [canon, sign] =
            permute(sigma, tabloid_from_word(v.shape(), word).tableau());
        out.add(canon.word(), coeff * sign);
    }
    return out;
}

}  // namespace garnir
