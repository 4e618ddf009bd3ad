#pragma once

/**
 * @file partition.hpp
 * @brief Integer partitions and the box combinatorics of their diagrams.
 *
 * A partition is a weakly decreasing list of positive parts.  Diagrams use
 * the rotated convention: part lambda_i is the height of column i, and the
 * box s = (column, row) lies in the diagram iff row <= lambda_column.
 * Consequently arm(s) counts boxes above s in its column and leg(s) counts
 * boxes to the right of s in its row:
 *
 *   arm(s)   = lambda_i - j          coarm(s) = j - 1
 *   leg(s)   = lambda'_j - i         coleg(s) = i - 1
 *
 * for s = (i, j) with lambda' the conjugate.
 */

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hilb {

struct Box {
    int column = 1;
    int row = 1;
    friend bool operator==(const Box&, const Box&) = default;
};

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /// Parses "[3,1,1]" (whitespace allowed, "[]" is the empty partition).
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }
    /// Part i (1-based); zero beyond the length.
    int part(int i) const;

    bool contains(const Box& s) const;

    Partition conjugate() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    /// Orders by size, then descending lexicographically within a size, so
    /// sorted containers list each degree in the dominance-refining order.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

    /// "[3,1,1]"; "[]" for the empty partition.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Partition& p);

private:
    std::vector<int> parts_;
    int size_ = 0;  // cached sum of parts
};

enum class DomRel { less, equal, greater, incomparable, different_size };

/// Dominance comparison of mu against lam: less means lam dominates mu.
DomRel dominance_compare(const Partition& mu, const Partition& lam);

struct BoxStats {
    int arm = 0;
    int leg = 0;
    int coarm = 0;
    int coleg = 0;
};

/// Arm, leg, coarm, coleg of a box; throws std::out_of_range when the box
/// lies outside the diagram.
BoxStats arm_leg(const Partition& lam, const Box& s);

/// All boxes of the diagram, column-major.
std::vector<Box> boxes(const Partition& lam);

/// n(lambda) = sum_i (i - 1) * lambda_i.
long n_stat(const Partition& lam);

/// z_lambda = prod_v v^{m_v} * m_v! over part values v with multiplicity m_v.
mpz_class z_stat(const Partition& lam);

/// All partitions of n in descending lexicographic order, which refines
/// dominance.  Throws std::invalid_argument for n < 0 or n > enumerate_bound.
std::vector<Partition> enumerate(int n);
inline constexpr int enumerate_bound = 50;

/// Partitions covering mu by one box, with the added box, in the order the
/// column index of the added box increases.
std::vector<std::pair<Partition, Box>> add_box_targets(const Partition& mu);

/// True when lam is mu plus exactly one box.
bool is_single_box_cover(const Partition& mu, const Partition& lam);

/// The added box of a single-box cover; throws std::invalid_argument otherwise.
Box added_box(const Partition& mu, const Partition& lam);

/// Boxes of mu in the same row as the box lam \ mu (for single-box covers);
/// throws std::invalid_argument when lam does not cover mu.
std::vector<Box> pieri_R(const Partition& mu, const Partition& lam);

}  // namespace hilb
