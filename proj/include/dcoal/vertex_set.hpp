#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace dcoal {

using Vertex = int;

/// Largest supported graph order: one vertex set fits in a machine word.
inline constexpr int max_order = 64;

/// A set of vertices stored as a 64-bit mask. Bit v is set iff vertex v is a member.
class VertexSet {
  public:
    class iterator {
      public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex *;
        using reference = Vertex;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : _rest(rest) {}

        constexpr auto operator*() const -> Vertex { return std::countr_zero(_rest); }
        constexpr auto operator++() -> iterator &
        {
            _rest &= _rest - 1;
            return *this;
        }
        constexpr auto operator++(int) -> iterator
        {
            auto old = *this;
            ++*this;
            return old;
        }
        constexpr auto operator==(const iterator &) const -> bool = default;

      private:
        std::uint64_t _rest = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : _bits(bits) {}

    static constexpr auto of(std::initializer_list<Vertex> vs) -> VertexSet
    {
        VertexSet s;
        for (auto v : vs)
            s.insert(v);
        return s;
    }

    /// The set {0, ..., n-1}.
    static constexpr auto first_n(int n) -> VertexSet
    {
        return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }

    static constexpr auto singleton(Vertex v) -> VertexSet { return VertexSet{std::uint64_t{1} << v}; }

    constexpr auto bits() const -> std::uint64_t { return _bits; }
    constexpr auto size() const -> int { return std::popcount(_bits); }
    constexpr auto empty() const -> bool { return _bits == 0; }
    constexpr auto contains(Vertex v) const -> bool { return (_bits >> v) & 1U; }

    /// Smallest member. Undefined on the empty set.
    constexpr auto lowest() const -> Vertex { return std::countr_zero(_bits); }

    constexpr auto insert(Vertex v) -> void { _bits |= std::uint64_t{1} << v; }
    constexpr auto erase(Vertex v) -> void { _bits &= ~(std::uint64_t{1} << v); }
    constexpr auto with(Vertex v) const -> VertexSet { return VertexSet{_bits | (std::uint64_t{1} << v)}; }
    constexpr auto without(Vertex v) const -> VertexSet { return VertexSet{_bits & ~(std::uint64_t{1} << v)}; }

    constexpr auto subset_of(VertexSet other) const -> bool { return (_bits & ~other._bits) == 0; }
    constexpr auto intersects(VertexSet other) const -> bool { return (_bits & other._bits) != 0; }

    constexpr auto operator|=(VertexSet o) -> VertexSet & { _bits |= o._bits; return *this; }
    constexpr auto operator&=(VertexSet o) -> VertexSet & { _bits &= o._bits; return *this; }
    constexpr auto operator-=(VertexSet o) -> VertexSet & { _bits &= ~o._bits; return *this; }

    friend constexpr auto operator|(VertexSet a, VertexSet b) -> VertexSet { return VertexSet{a._bits | b._bits}; }
    friend constexpr auto operator&(VertexSet a, VertexSet b) -> VertexSet { return VertexSet{a._bits & b._bits}; }
    friend constexpr auto operator-(VertexSet a, VertexSet b) -> VertexSet { return VertexSet{a._bits & ~b._bits}; }

    /// Ordered by mask value, which is what the canonical sorts rely on.
    friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

    constexpr auto begin() const -> iterator { return iterator{_bits}; }
    constexpr auto end() const -> iterator { return iterator{0}; }

    auto to_vector() const -> std::vector<Vertex> { return {begin(), end()}; }

  private:
    std::uint64_t _bits = 0;
};

} // namespace dcoal
