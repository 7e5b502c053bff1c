#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sfq {

// Weakly decreasing list of positive parts, largest first.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // "4,4,2,2" or "4^2,2^2"; blank string gives the empty partition.
    static Partition parse(std::string_view text);

    std::span<const int> parts() const { return parts_; }
    const std::vector<int>& vec() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }

    // Largest variable index in the h-basis Jacobi-Trudi matrix: λ1 + ℓ − 1.
    int max_label() const;

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

Partition transpose(const Partition& p);

enum class Shape : unsigned {
    None = 0,
    Hook = 1u << 0,
    Rectangle = 1u << 1,
    Staircase = 1u << 2,
    FattenedHook = 1u << 3,
};

struct ShapeClass {
    unsigned flags = 0;
    bool has(Shape s) const { return (flags & static_cast<unsigned>(s)) != 0; }
    bool hook() const { return has(Shape::Hook); }
    bool rectangle() const { return has(Shape::Rectangle); }
    bool staircase() const { return has(Shape::Staircase); }
    bool fattened_hook() const { return has(Shape::FattenedHook); }
    // hook, rectangle or staircase
    bool uniform_family() const { return hook() || rectangle() || staircase(); }
    std::string to_string() const;
};

ShapeClass classify(const Partition& p);

using Composition = std::vector<int>;

// All 2^(n-1) compositions of n, lexicographically ascending; n = 0 gives {()}.
std::vector<Composition> compositions(int n);

// Every nonempty partition whose h-basis max label is at most max_label,
// ordered by (max label, size, parts).
std::vector<Partition> partitions_up_to_max_label(int max_label);

// Partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

// (k, k-1, ..., 1); δ_0 is empty.
Partition staircase(int k);
Partition rectangle(int a, int n);

} // namespace sfq
