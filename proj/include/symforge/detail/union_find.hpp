#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace symforge::detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), sets_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// False if a and b were already joined.
    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        if (b < a) {
            std::swap(a, b);
        }
        parent_[b] = a;
        --sets_;
        return true;
    }

    std::size_t set_count() const { return sets_; }

private:
    std::vector<std::size_t> parent_;
    std::size_t sets_;
};

}  // namespace symforge::detail
