#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace gtop {

/// Dynamically sized bit set used for vertex sets, adjacency rows and
/// order-relation rows. Value type; ordering is lexicographic on the
/// member sequence so that sets sort canonically.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}
    Bits(std::size_t size, std::initializer_list<int> members) : Bits(size)
    {
        for (int m : members)
            set(static_cast<std::size_t>(m));
    }

    static Bits full(std::size_t size)
    {
        Bits b(size);
        for (std::size_t i = 0; i < size; ++i)
            b.set(i);
        return b;
    }

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void set(std::size_t i, bool v) { v ? set(i) : reset(i); }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const
    {
        for (auto w : words_)
            if (w)
                return true;
        return false;
    }
    bool none() const { return !any(); }

    bool is_subset_of(const Bits& other) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }

    bool intersects(const Bits& other) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    Bits& operator|=(const Bits& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    Bits& operator&=(const Bits& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    Bits& subtract(const Bits& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

    /// Index of the lowest member, or size() if empty.
    std::size_t first() const { return next(0); }

    /// Lowest member >= from, or size() if none.
    std::size_t next(std::size_t from) const
    {
        if (from >= size_)
            return size_;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w)
                return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi >= words_.size())
                return size_;
            w = words_[wi];
        }
    }

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                f(static_cast<int>((wi << 6) + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
    }

    std::vector<int> members() const
    {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    friend bool operator==(const Bits& a, const Bits& b)
    {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

    /// Lexicographic on the ascending member sequence.
    friend bool operator<(const Bits& a, const Bits& b)
    {
        std::size_t i = a.first(), j = b.first();
        while (i < a.size_ && j < b.size_) {
            if (i != j)
                return i < j;
            i = a.next(i + 1);
            j = b.next(j + 1);
        }
        return i >= a.size_ && j < b.size_;
    }

    std::size_t hash() const
    {
        std::size_t h = size_;
        for (auto w : words_)
            h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsHash {
    std::size_t operator()(const Bits& b) const { return b.hash(); }
};

} // namespace gtop
