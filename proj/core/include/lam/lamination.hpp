#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lam/leaf.hpp"

namespace lam {

/// Finite non-crossing leaf set of degree d. Each leaf carries the pullback
/// stage that produced it (0 for generators).
class Lamination {
public:
    explicit Lamination(int degree);

    int degree() const { return d_; }
    /// Inserts a leaf, keeping the smaller depth if it is already present.
    void add(const Leaf& l, int depth = 0);
    bool contains(const Leaf& l) const { return leaves_.count(l) != 0; }
    std::optional<int> depth_of(const Leaf& l) const;
    const std::map<Leaf, int>& leaves() const { return leaves_; }
    std::vector<Leaf> leaf_list() const;
    std::vector<Leaf> leaves_up_to(int depth) const;
    std::size_t size() const { return leaves_.size(); }
    bool empty() const { return leaves_.empty(); }
    int max_depth() const;

    /// Depth up to which every leaf's preimages were generated. Backward and
    /// sibling invariance are judged only below it. Defaults to max_depth().
    int truncation_depth() const { return truncation_ ? *truncation_ : max_depth(); }
    void set_truncation_depth(int n) { truncation_ = n; }

private:
    int d_;
    std::map<Leaf, int> leaves_;
    std::optional<int> truncation_;
};

/// Some pair of crossing leaves, or nullopt. O(n log n).
std::optional<std::pair<Leaf, Leaf>> find_crossing(const std::vector<Leaf>& leaves);

struct LeafVerdict {
    Leaf leaf;
    int depth = 0;
    bool forward = true;
    std::optional<bool> backward;  // unset when not judged at this depth
    std::optional<bool> sibling;
};

struct InvarianceReport {
    std::optional<std::pair<Leaf, Leaf>> crossing;
    std::vector<LeafVerdict> verdicts;  // sorted by leaf

    bool ok() const;
    std::size_t forward_failures() const;
    std::size_t backward_failures() const;
    std::size_t sibling_failures() const;
};

InvarianceReport check_invariance(const Lamination& L);

} // namespace lam
