#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace kcoal {

using Vertex = int;

/// Fixed-width bit vector over vertex ids 0..63.
class VertexSet {
public:
    static constexpr int kCapacity = 64;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<Vertex> vs)
    {
        for (Vertex v : vs)
            insert(v);
    }

    /// {0, .., n-1}
    static constexpr VertexSet range(int n)
    {
        return VertexSet(n >= kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static VertexSet from_vector(const std::vector<Vertex> & vs)
    {
        VertexSet s;
        for (Vertex v : vs)
            s.insert(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1u; }
    constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    /// Smallest element; undefined on the empty set.
    constexpr Vertex front() const { return std::countr_zero(bits_); }
    /// Largest element; undefined on the empty set.
    constexpr Vertex back() const { return 63 - std::countl_zero(bits_); }
    /// One past the largest element, 0 for the empty set.
    constexpr int span() const { return 64 - std::countl_zero(bits_); }

    constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet & operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet & operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet & operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const VertexSet &) const = default;

    class iterator {
    public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr Vertex operator*() const { return std::countr_zero(rest_); }
        constexpr iterator & operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
        constexpr bool operator==(const iterator &) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

    /// Lexicographic comparison of the sorted element lists.
    static bool lex_less(VertexSet a, VertexSet b)
    {
        auto ia = a.begin(), ib = b.begin();
        for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
            if (*ia != *ib)
                return *ia < *ib;
        return ia == a.end() && ib != b.end();
    }

    /// "{0,2,5}"
    std::string to_string() const;

private:
    std::uint64_t bits_ = 0;
};

} // namespace kcoal
