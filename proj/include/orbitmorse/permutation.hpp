#ifndef ORBITMORSE_PERMUTATION_HPP
#define ORBITMORSE_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace orbitmorse {

using Point = std::uint32_t;

/**
 * A permutation of {0, ..., degree - 1} stored as its image array.
 *
 * Products compose right to left: (a * b)(x) = a(b(x)). Ordering is the
 * lexicographic order of the image arrays, which is the element order used
 * for indexing group elements.
 */
class Permutation
{
  public:
    Permutation() = default;

    /// Throws InvalidPermutation unless `images` is a bijection.
    explicit Permutation(std::vector<Point> images);

    static Permutation identity(std::size_t degree);

    /// Builds from 0-based disjoint cycles. Throws InvalidPermutation on
    /// repeated or out-of-range points.
    static Permutation from_cycles(std::size_t degree, std::span<const std::vector<Point>> cycles);

    std::size_t degree() const noexcept { return images_.size(); }
    Point operator()(Point x) const { return images_[x]; }
    const std::vector<Point>& images() const noexcept { return images_; }

    Permutation inverse() const;
    bool is_identity() const noexcept;

    /// Disjoint-cycle notation on 1-based points, "()" for the identity.
    std::string to_cycle_string() const;

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation&, const Permutation&) = default;

  private:
    std::vector<Point> images_;
};

struct PermutationHash
{
    std::size_t operator()(const Permutation& p) const noexcept;
};

} // namespace orbitmorse

#endif
