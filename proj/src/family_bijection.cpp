#include "symforge/detail/family_bijection.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace symforge::detail {

namespace {

using Key = std::pair<std::vector<std::pair<std::uint32_t, std::uint32_t>>, std::uint32_t>;

std::uint64_t mix(std::uint64_t h, std::uint64_t v)
{
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

struct Indexed {
    std::vector<std::uint32_t> ground;
    std::map<std::uint32_t, std::size_t> position;
    std::vector<std::vector<std::uint64_t>> signature;
    std::vector<std::vector<std::uint32_t>> pair_count;
};

Indexed index_family(const std::vector<std::uint32_t>& ground, const std::vector<FamilyItem>& items)
{
    Indexed ix;
    ix.ground = ground;
    std::sort(ix.ground.begin(), ix.ground.end());
    for (std::size_t k = 0; k < ix.ground.size(); ++k) {
        ix.position[ix.ground[k]] = k;
    }
    const std::size_t n = ix.ground.size();
    ix.signature.assign(n, {});
    ix.pair_count.assign(n, std::vector<std::uint32_t>(n, 0));
    for (const auto& item : items) {
        std::uint32_t size = 0;
        for (const auto& [e, mult] : item.elements) {
            size += mult;
        }
        for (const auto& [e, mult] : item.elements) {
            const auto pe = ix.position.at(e);
            std::uint64_t h = mix(item.label, mult);
            h = mix(h, size);
            h = mix(h, item.elements.size());
            ix.signature[pe].push_back(h);
            for (const auto& [f, multf] : item.elements) {
                ix.pair_count[pe][ix.position.at(f)] += 1;
            }
        }
    }
    for (auto& s : ix.signature) {
        std::sort(s.begin(), s.end());
    }
    return ix;
}

Key key_of(const FamilyItem& item)
{
    auto elems = item.elements;
    std::sort(elems.begin(), elems.end());
    return {std::move(elems), item.label};
}

}  // namespace

std::optional<std::map<std::uint32_t, std::uint32_t>> find_family_bijection(
    const std::vector<std::uint32_t>& ground_a, const std::vector<FamilyItem>& items_a,
    const std::vector<std::uint32_t>& ground_b, const std::vector<FamilyItem>& items_b)
{
    if (ground_a.size() != ground_b.size() || items_a.size() != items_b.size()) {
        return std::nullopt;
    }
    const Indexed a = index_family(ground_a, items_a);
    const Indexed b = index_family(ground_b, items_b);
    const std::size_t n = a.ground.size();

    std::set<Key> target;
    for (const auto& item : items_b) {
        target.insert(key_of(item));
    }

    // Each item of `a` is checked at the step where its last element is fixed.
    std::vector<std::vector<std::size_t>> completes_at(n);
    for (std::size_t k = 0; k < items_a.size(); ++k) {
        const auto& item = items_a[k];
        if (item.elements.empty()) {
            if (!target.contains(key_of(item))) {
                return std::nullopt;
            }
            continue;
        }
        std::size_t last = 0;
        for (const auto& [e, mult] : item.elements) {
            last = std::max(last, a.position.at(e));
        }
        completes_at[last].push_back(k);
    }

    std::vector<std::size_t> image(n, 0);
    std::vector<bool> used(n, false);

    std::function<bool(std::size_t)> extend = [&](std::size_t step) -> bool {
        if (step == n) {
            return true;
        }
        for (std::size_t cand = 0; cand < n; ++cand) {
            if (used[cand] || a.signature[step] != b.signature[cand]) {
                continue;
            }
            if (a.pair_count[step][step] != b.pair_count[cand][cand]) {
                continue;
            }
            bool consistent = true;
            for (std::size_t prev = 0; prev < step && consistent; ++prev) {
                consistent = a.pair_count[step][prev] == b.pair_count[cand][image[prev]];
            }
            if (!consistent) {
                continue;
            }
            image[step] = cand;
            used[cand] = true;
            for (const auto k : completes_at[step]) {
                FamilyItem mapped;
                mapped.label = items_a[k].label;
                for (const auto& [e, mult] : items_a[k].elements) {
                    mapped.elements.emplace_back(b.ground[image[a.position.at(e)]], mult);
                }
                if (!target.contains(key_of(mapped))) {
                    consistent = false;
                    break;
                }
            }
            if (consistent && extend(step + 1)) {
                return true;
            }
            used[cand] = false;
        }
        return false;
    };

    if (!extend(0)) {
        return std::nullopt;
    }
    std::map<std::uint32_t, std::uint32_t> sigma;
    for (std::size_t k = 0; k < n; ++k) {
        sigma[a.ground[k]] = b.ground[image[k]];
    }
    return sigma;
}

}  // namespace symforge::detail
