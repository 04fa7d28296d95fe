#include "lam/lamination.hpp"

#include <algorithm>
#include <functional>

namespace lam {

Lamination::Lamination(int degree) : d_(degree) { require_degree(degree); }

void Lamination::add(const Leaf& l, int depth) {
    auto [it, inserted] = leaves_.emplace(l, depth);
    if (!inserted && depth < it->second) it->second = depth;
}

std::optional<int> Lamination::depth_of(const Leaf& l) const {
    auto it = leaves_.find(l);
    if (it == leaves_.end()) return std::nullopt;
    return it->second;
}

std::vector<Leaf> Lamination::leaf_list() const {
    std::vector<Leaf> out;
    out.reserve(leaves_.size());
    for (const auto& [l, _] : leaves_) out.push_back(l);
    return out;
}

std::vector<Leaf> Lamination::leaves_up_to(int depth) const {
    std::vector<Leaf> out;
    for (const auto& [l, k] : leaves_)
        if (k <= depth) out.push_back(l);
    return out;
}

int Lamination::max_depth() const {
    int m = 0;
    for (const auto& [_, k] : leaves_) m = std::max(m, k);
    return m;
}

std::optional<std::pair<Leaf, Leaf>> find_crossing(const std::vector<Leaf>& leaves) {
    // Cut the circle at 0: each chord becomes an interval [lo, hi] and two
    // chords cross exactly when their intervals overlap without nesting.
    struct Item {
        const Angle* lo;
        const Angle* hi;
        const Leaf* leaf;
    };
    std::vector<Item> items;
    items.reserve(leaves.size());
    for (const auto& l : leaves) {
        const Angle* lo = &l.first();
        const Angle* hi = &l.second();
        if (*hi < *lo) std::swap(lo, hi);
        items.push_back({lo, hi, &l});
    }
    std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
        if (auto c = *x.lo <=> *y.lo; c != 0) return c < 0;
        return *y.hi < *x.hi;
    });
    std::vector<const Item*> stack;
    for (const auto& it : items) {
        while (!stack.empty() && *stack.back()->hi <= *it.lo) stack.pop_back();
        if (!stack.empty()) {
            const Item& top = *stack.back();
            if (*top.lo < *it.lo && *top.hi < *it.hi) return std::make_pair(*top.leaf, *it.leaf);
        }
        stack.push_back(&it);
    }
    return std::nullopt;
}

bool InvarianceReport::ok() const {
    return !crossing && forward_failures() == 0 && backward_failures() == 0 && sibling_failures() == 0;
}

std::size_t InvarianceReport::forward_failures() const {
    return std::count_if(verdicts.begin(), verdicts.end(), [](const LeafVerdict& v) { return !v.forward; });
}

std::size_t InvarianceReport::backward_failures() const {
    return std::count_if(verdicts.begin(), verdicts.end(),
                         [](const LeafVerdict& v) { return v.backward && !*v.backward; });
}

std::size_t InvarianceReport::sibling_failures() const {
    return std::count_if(verdicts.begin(), verdicts.end(),
                         [](const LeafVerdict& v) { return v.sibling && !*v.sibling; });
}

namespace {

bool disjoint(const Leaf& x, const Leaf& y) { return !x.shares_endpoint(y) && !crosses(x, y); }

// Extends `chosen` to d pairwise disjoint leaves drawn from `pool`.
bool complete_collection(std::vector<const Leaf*>& chosen, const std::vector<Leaf>& pool, std::size_t from,
                         int d) {
    if (static_cast<int>(chosen.size()) == d) return true;
    for (std::size_t i = from; i < pool.size(); ++i) {
        bool ok = true;
        for (const Leaf* c : chosen)
            if (!disjoint(*c, pool[i])) {
                ok = false;
                break;
            }
        if (!ok) continue;
        chosen.push_back(&pool[i]);
        if (complete_collection(chosen, pool, i + 1, d)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

InvarianceReport check_invariance(const Lamination& L) {
    InvarianceReport rep;
    auto leaves = L.leaf_list();
    rep.crossing = find_crossing(leaves);
    const int d = L.degree();
    const int limit = L.truncation_depth();

    std::map<Leaf, std::vector<Leaf>> by_image;
    std::vector<std::optional<Leaf>> images;
    images.reserve(leaves.size());
    for (const auto& l : leaves) {
        auto img = image_leaf(d, l);
        if (auto* p = std::get_if<Leaf>(&img)) {
            by_image[*p].push_back(l);
            images.emplace_back(*p);
        } else {
            images.emplace_back(std::nullopt);
        }
    }

    rep.verdicts.reserve(leaves.size());
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        const Leaf& l = leaves[i];
        LeafVerdict v{l, *L.depth_of(l), true, std::nullopt, std::nullopt};
        v.forward = !images[i] || L.contains(*images[i]);
        if (v.depth < limit) {
            v.backward = by_image.count(l) != 0;
            if (images[i] && L.contains(*images[i])) {
                const auto& pool = by_image[*images[i]];
                std::vector<const Leaf*> chosen{&l};
                std::vector<Leaf> rest;
                for (const auto& c : pool)
                    if (c != l && disjoint(c, l)) rest.push_back(c);
                v.sibling = complete_collection(chosen, rest, 0, d);
            } else if (images[i]) {
                v.sibling = false;
            }
        }
        rep.verdicts.push_back(std::move(v));
    }
    return rep;
}

} // namespace lam
