#pragma once

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <vector>

namespace qweb {

// Row-major sparse matrix over an exact scalar type (entries compare to T()).
// Rows hold (col, value) pairs sorted by column.
template <class T>
class SparseMat {
public:
    SparseMat() = default;
    SparseMat(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows)) {}

    static SparseMat identity(int n) {
        SparseMat m(n, n);
        for (int i = 0; i < n; ++i) m.data_[size_t(i)] = {{i, T(1)}};
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const std::vector<std::pair<int, T>>& row(int i) const { return data_[size_t(i)]; }

    void set(int i, int j, T v) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        auto& r = data_[size_t(i)];
        auto it = std::lower_bound(r.begin(), r.end(), j,
                                   [](const auto& p, int col) { return p.first < col; });
        if (it != r.end() && it->first == j) {
            if (v == T()) r.erase(it);
            else it->second = std::move(v);
        } else if (!(v == T())) {
            r.insert(it, {j, std::move(v)});
        }
    }

    void add_to(int i, int j, const T& v) {
        if (v == T()) return;
        auto& r = data_[size_t(i)];
        auto it = std::lower_bound(r.begin(), r.end(), j,
                                   [](const auto& p, int col) { return p.first < col; });
        if (it != r.end() && it->first == j) {
            it->second += v;
            if (it->second == T()) r.erase(it);
        } else {
            r.insert(it, {j, v});
        }
    }

    T get(int i, int j) const {
        const auto& r = data_[size_t(i)];
        auto it = std::lower_bound(r.begin(), r.end(), j,
                                   [](const auto& p, int col) { return p.first < col; });
        return (it != r.end() && it->first == j) ? it->second : T();
    }

    size_t nnz() const {
        size_t n = 0;
        for (const auto& r : data_) n += r.size();
        return n;
    }
    bool is_zero() const { return nnz() == 0; }

    friend SparseMat operator*(const SparseMat& a, const SparseMat& b) {
        assert(a.cols_ == b.rows_);
        SparseMat c(a.rows_, b.cols_);
        std::map<int, T> acc;
        for (int i = 0; i < a.rows_; ++i) {
            acc.clear();
            for (const auto& [j, av] : a.data_[size_t(i)])
                for (const auto& [k, bv] : b.data_[size_t(j)])
                    acc[k] += av * bv;
            auto& row = c.data_[size_t(i)];
            row.reserve(acc.size());
            for (auto& [k, v] : acc)
                if (!(v == T())) row.emplace_back(k, std::move(v));
        }
        return c;
    }

    friend SparseMat operator+(const SparseMat& a, const SparseMat& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        SparseMat c = a;
        for (int i = 0; i < b.rows_; ++i)
            for (const auto& [j, v] : b.data_[size_t(i)]) c.add_to(i, j, v);
        return c;
    }
    friend SparseMat operator-(const SparseMat& a, const SparseMat& b) {
        return a + (T(-1) * b);
    }
    friend SparseMat operator*(const T& s, const SparseMat& a) {
        SparseMat c(a.rows_, a.cols_);
        if (s == T()) return c;
        for (int i = 0; i < a.rows_; ++i)
            for (const auto& [j, v] : a.data_[size_t(i)]) {
                T w = s * v;
                if (!(w == T())) c.data_[size_t(i)].emplace_back(j, std::move(w));
            }
        return c;
    }

    friend bool operator==(const SparseMat& a, const SparseMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const SparseMat& a, const SparseMat& b) { return !(a == b); }

    // Kronecker product; index (i1,i2) -> i1 * b.rows + i2, matching the
    // convention that the first tensor factor is the slow index.
    friend SparseMat kron(const SparseMat& a, const SparseMat& b) {
        SparseMat c(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (int i1 = 0; i1 < a.rows_; ++i1)
            for (const auto& [j1, v1] : a.data_[size_t(i1)])
                for (int i2 = 0; i2 < b.rows_; ++i2) {
                    auto& row = c.data_[size_t(i1 * b.rows_ + i2)];
                    for (const auto& [j2, v2] : b.data_[size_t(i2)]) {
                        T w = v1 * v2;
                        if (!(w == T())) row.emplace_back(j1 * b.cols_ + j2, std::move(w));
                    }
                }
        return c;
    }

    SparseMat transposed() const {
        SparseMat c(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (const auto& [j, v] : data_[size_t(i)]) c.data_[size_t(j)].emplace_back(i, v);
        return c;
    }

    template <class U, class Fn>
    SparseMat<U> map(Fn&& fn) const {
        SparseMat<U> c(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (const auto& [j, v] : data_[size_t(i)]) {
                U w = fn(v);
                if (!(w == U())) c.set(i, j, std::move(w));
            }
        return c;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::vector<std::pair<int, T>>> data_;
};

} // namespace qweb
