#pragma once

// Dynamic bitset used as a vertex set over a fixed universe [0, n).
// One 64-bit word per 64 vertices; all set algebra is word-parallel.

#include <cstdint>
#include <cassert>
#include <bit>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace chibound {

class VertexSet {
public:
    VertexSet() : n_(0) {}

    explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {
        if (n < 0) throw std::invalid_argument("VertexSet: negative universe");
    }

    VertexSet(int n, std::initializer_list<int> vs) : VertexSet(n) {
        for (int v : vs) set(v);
    }

    static VertexSet full(int n) {
        VertexSet s(n);
        for (auto& w : s.words_) w = ~uint64_t{0};
        s.trim();
        return s;
    }

    static VertexSet single(int n, int v) {
        VertexSet s(n);
        s.set(v);
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const {
        assert(v >= 0 && v < n_);
        return (words_[v >> 6] >> (v & 63)) & 1;
    }

    void set(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] |= uint64_t{1} << (v & 63);
    }

    void reset(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] &= ~(uint64_t{1} << (v & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    // First member, or -1 when empty.
    int first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    // Next member strictly after v, or -1. Enables
    // for (int v = s.first(); v != -1; v = s.next(v)).
    int next(int v) const {
        ++v;
        if (v >= n_) return -1;
        size_t i = size_t(v) >> 6;
        uint64_t w = words_[i] & (~uint64_t{0} << (v & 63));
        while (true) {
            if (w) return int(i * 64 + std::countr_zero(w));
            if (++i == words_.size()) return -1;
            w = words_[i];
        }
    }

    VertexSet& operator|=(const VertexSet& o) {
        check_same(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        check_same(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& operator-=(const VertexSet& o) {
        check_same(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    // Complement within the universe.
    VertexSet operator~() const {
        VertexSet r(*this);
        for (auto& w : r.words_) w = ~w;
        r.trim();
        return r;
    }

    bool operator==(const VertexSet& o) const {
        return n_ == o.n_ && words_ == o.words_;
    }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    // Strict weak order so sets can key std::map / be sorted deterministically.
    bool operator<(const VertexSet& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return words_ < o.words_;
    }

    bool intersects(const VertexSet& o) const {
        check_same(o);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        check_same(o);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v != -1; v = next(v)) out.push_back(v);
        return out;
    }

private:
    void trim() {
        if (n_ & 63) words_.back() &= (~uint64_t{0}) >> (64 - (n_ & 63));
    }

    void check_same(const VertexSet& o) const {
        if (n_ != o.n_) throw std::invalid_argument("VertexSet: universe mismatch");
    }

    int n_;
    std::vector<uint64_t> words_;
};

} // namespace chibound
