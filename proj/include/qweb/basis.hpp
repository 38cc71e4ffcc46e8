#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <vector>

namespace qweb {

// The two strand flavors: exterior powers (basis = strict subsets of {1..n},
// written as increasing words) and symmetric powers (weakly increasing words).
enum class Flavor { Ext, Sym };

inline int64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline int strand_dim(Flavor f, int n, int label) {
    assert(label >= 0);
    return int(f == Flavor::Ext ? binom(n, label) : binom(n + label - 1, label));
}

// Basis words of one strand: length `label`, letters in 1..n, strictly
// (Ext) or weakly (Sym) increasing, enumerated in lexicographic order.
class StrandBasis {
public:
    StrandBasis(Flavor f, int n, int label) : f_(f), n_(n), label_(label) {
        std::vector<int> w(static_cast<size_t>(label), 0);
        gen(w, 0, 1);
    }

    int dim() const { return int(words_.size()); }
    const std::vector<int>& word(int idx) const { return words_[size_t(idx)]; }

    int index(const std::vector<int>& w) const {
        auto it = std::lower_bound(words_.begin(), words_.end(), w);
        assert(it != words_.end() && *it == w);
        return int(it - words_.begin());
    }

private:
    void gen(std::vector<int>& w, int pos, int min) {
        if (pos == label_) { words_.push_back(w); return; }
        for (int x = min; x <= n_; ++x) {
            w[size_t(pos)] = x;
            gen(w, pos + 1, f_ == Flavor::Ext ? x + 1 : x);
        }
    }

    Flavor f_;
    int n_, label_;
    std::vector<std::vector<int>> words_;
};

// Basis of a tensor product of strand spaces for an object (= label list).
// Flat indices are mixed-radix with the FIRST strand as the slowest digit,
// matching kron() in sparse.hpp.
class ObjectBasis {
public:
    ObjectBasis(Flavor f, int n, std::vector<int> labels)
        : f_(f), n_(n), labels_(std::move(labels)) {
        dim_ = 1;
        for (int a : labels_) {
            strands_.emplace_back(f, n, a);
            dim_ *= strands_.back().dim();
        }
    }

    Flavor flavor() const { return f_; }
    int n() const { return n_; }
    const std::vector<int>& labels() const { return labels_; }
    int num_strands() const { return int(labels_.size()); }
    int64_t dim() const { return dim_; }
    const StrandBasis& strand(int s) const { return strands_[size_t(s)]; }

    std::vector<int> digits(int64_t flat) const {
        std::vector<int> d(strands_.size());
        for (int s = num_strands() - 1; s >= 0; --s) {
            int sd = strands_[size_t(s)].dim();
            d[size_t(s)] = int(flat % sd);
            flat /= sd;
        }
        return d;
    }

    int64_t flat(const std::vector<int>& digits) const {
        int64_t idx = 0;
        for (int s = 0; s < num_strands(); ++s)
            idx = idx * strands_[size_t(s)].dim() + digits[size_t(s)];
        return idx;
    }

    // Concatenation of the per-strand words at a flat index.
    std::vector<int> letters(int64_t flat) const {
        std::vector<int> out;
        auto d = digits(flat);
        for (int s = 0; s < num_strands(); ++s) {
            const auto& w = strands_[size_t(s)].word(d[size_t(s)]);
            out.insert(out.end(), w.begin(), w.end());
        }
        return out;
    }

    // Letter multiplicity vector (index 0 unused), conserved by every web.
    std::vector<int> content(int64_t flat) const {
        std::vector<int> c(size_t(n_) + 1, 0);
        for (int x : letters(flat)) ++c[size_t(x)];
        return c;
    }

private:
    Flavor f_;
    int n_;
    std::vector<int> labels_;
    std::vector<StrandBasis> strands_;
    int64_t dim_ = 1;
};

} // namespace qweb
