#pragma once

// Enumeration and ranking of index tuples, sorted multisets and subsets.

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

namespace lie2coh {

using Tuple = std::vector<std::size_t>;

inline std::size_t ipow(std::size_t b, std::size_t e)
{
    std::size_t r = 1;
    while (e--)
        r *= b;
    return r;
}

// All tuples in range(n)^k, lexicographic.
inline std::vector<Tuple> all_tuples(std::size_t n, std::size_t k)
{
    std::vector<Tuple> out;
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    if (n == 0)
        return out;
    Tuple t(k, 0);
    while (true) {
        out.push_back(t);
        std::size_t s = k;
        while (s > 0) {
            --s;
            if (++t[s] < n)
                break;
            t[s] = 0;
            if (s == 0)
                return out;
        }
    }
}

inline std::size_t tuple_rank(const Tuple& t, std::size_t n)
{
    std::size_t r = 0;
    for (auto x : t)
        r = r * n + x;
    return r;
}

// Sorted multisets of size k from range(n), lexicographic.
inline std::vector<Tuple> all_multisets(std::size_t n, std::size_t k)
{
    std::vector<Tuple> out;
    Tuple cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Strictly increasing k-subsets of range(n), lexicographic.
inline std::vector<Tuple> all_subsets(std::size_t n, std::size_t k)
{
    std::vector<Tuple> out;
    Tuple cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Index lookup for a fixed list of sorted tuples.
class TupleIndex {
public:
    TupleIndex() = default;
    explicit TupleIndex(std::vector<Tuple> items) : items_(std::move(items))
    {
        for (std::size_t i = 0; i < items_.size(); ++i)
            map_.emplace(items_[i], i);
    }
    std::size_t size() const { return items_.size(); }
    const Tuple& operator[](std::size_t i) const { return items_[i]; }
    std::size_t index(const Tuple& t) const { return map_.at(t); }
    bool contains(const Tuple& t) const { return map_.count(t) != 0; }
    const std::vector<Tuple>& items() const { return items_; }

private:
    std::vector<Tuple> items_;
    std::map<Tuple, std::size_t> map_;
};

inline Tuple sorted(Tuple t)
{
    std::sort(t.begin(), t.end());
    return t;
}

// Sign of the permutation sorting t; 0 if t has a repeated entry.
inline int sort_sign(Tuple& t)
{
    int s = 1;
    for (std::size_t i = 1; i < t.size(); ++i)
        for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
            if (t[j - 1] == t[j])
                return 0;
            std::swap(t[j - 1], t[j]);
            s = -s;
        }
    return s;
}

inline Tuple erase_at(const Tuple& t, std::size_t i)
{
    Tuple r;
    r.reserve(t.size());
    for (std::size_t k = 0; k < t.size(); ++k)
        if (k != i)
            r.push_back(t[k]);
    return r;
}

inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

inline std::size_t binom(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

}  // namespace lie2coh
