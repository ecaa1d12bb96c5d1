#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace exhd {

/// A weak K-composition: K non-negative counts. The order n is the sum.
///
/// All symmetric objects over an alphabet of K symbols are indexed by
/// compositions, one count per symbol d_1..d_K. Where a formula drops the
/// last coordinate, it is recovered as n minus the others.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> counts);
    Composition(std::initializer_list<int> counts) : Composition(std::vector<int>(counts)) {}

    /// The all-zero composition with k parts.
    static Composition zero(int parts);
    /// The unit vector e_j (0-based j) with k parts.
    static Composition unit(int parts, int j);

    int parts() const { return static_cast<int>(counts_.size()); }
    int order() const { return order_; }
    int operator[](int j) const { return counts_[static_cast<std::size_t>(j)]; }
    const std::vector<int>& counts() const { return counts_; }

    /// Componentwise c <= *this.
    bool dominates(const Composition& c) const;

    Composition operator+(const Composition& o) const;
    Composition operator-(const Composition& o) const;  // throws if a count goes negative
    Composition plus_unit(int j) const;

    std::string to_string() const;

    friend bool operator==(const Composition& a, const Composition& b) { return a.counts_ == b.counts_; }
    friend bool operator<(const Composition& a, const Composition& b) { return a.counts_ < b.counts_; }

private:
    std::vector<int> counts_;
    int order_ = 0;
};

/// Number of weak K-compositions of n, C(n+K-1, K-1).
std::uint64_t composition_count(int n, int parts);

/// Every weak composition of n into `parts` counts, in lexicographically
/// descending order: (n,0,..,0) first, (0,..,0,n) last.
std::vector<Composition> compositions(int n, int parts);

/// Union over a = 0..n of compositions(a, parts), ordered by a then as above.
/// With parts == 0 this is the single empty vector.
std::vector<Composition> compositions_up_to(int n, int parts);

/// Position of c inside compositions(c.order(), c.parts()).
std::size_t composition_rank(const Composition& c);

}  // namespace exhd

template <>
struct std::hash<exhd::Composition> {
    std::size_t operator()(const exhd::Composition& c) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (int v : c.counts()) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
        return h;
    }
};
