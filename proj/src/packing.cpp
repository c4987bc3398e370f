#include "hfactor/packing.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace hfactor {

std::string_view to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::absent: return "absent";
    case SearchStatus::budget: return "budget";
    }
    return "?";
}

namespace {

struct StateKey {
    HostMask covered;
    std::vector<int> quota;
    bool operator==(const StateKey&) const = default;
};

struct StateHash {
    std::size_t operator()(const StateKey& k) const noexcept
    {
        std::size_t h = std::hash<HostMask>{}(k.covered);
        for (int q : k.quota)
            h ^= std::hash<int>{}(q) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

void check_pool(const PiecePool& pool)
{
    if (pool.vertex_count > kMaskVertexCap)
        throw FactorError("exact search is limited to " + std::to_string(kMaskVertexCap) + " host vertices");
    for (const auto& p : pool.pieces)
        if (p.type < 0 || p.type >= static_cast<int>(pool.quota.size()))
            throw FactorError("piece type out of range");
}

HostMask full_mask(int n)
{
    return n == 64 ? ~HostMask{0} : (HostMask{1} << n) - 1;
}

class Searcher {
public:
    Searcher(const PiecePool& pool, std::uint64_t budget)
        : pool_(pool), budget_(budget), full_(full_mask(pool.vertex_count)), quota_(pool.quota),
          by_vertex_(pool.vertex_count), singleton_type_(pool.quota.size(), 0)
    {
        std::vector<char> wide(pool.quota.size(), 0);
        for (int i = 0; i < static_cast<int>(pool.pieces.size()); ++i) {
            const auto& p = pool.pieces[i];
            if (std::popcount(p.mask) != 1)
                wide[p.type] = 1;
            else if (!wide[p.type])
                singleton_type_[p.type] = 1;
            for (HostMask m = p.mask; m != 0; m &= m - 1)
                by_vertex_[std::countr_zero(m)].push_back(i);
        }
        for (std::size_t t = 0; t < wide.size(); ++t)
            if (wide[t])
                singleton_type_[t] = 0;
        // Larger pieces first: a factor is usually found before singletons are tried.
        for (auto& list : by_vertex_)
            std::stable_sort(list.begin(), list.end(), [&](int a, int b) {
                return std::popcount(pool.pieces[a].mask) > std::popcount(pool.pieces[b].mask);
            });
    }

    CoverResult run()
    {
        CoverResult r;
        bool ok = search(0);
        r.nodes = nodes_;
        if (ok) {
            r.status = SearchStatus::found;
            r.chosen = chosen_;
        } else {
            r.status = exhausted_ ? SearchStatus::budget : SearchStatus::absent;
        }
        return r;
    }

private:
    bool live(int piece, HostMask covered) const
    {
        const auto& p = pool_.pieces[piece];
        return (p.mask & covered) == 0 && quota_[p.type] > 0;
    }

    bool search(HostMask covered)
    {
        if (covered == full_)
            return true;
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return false;
        }
        StateKey key{covered, quota_};
        if (failed_.count(key))
            return false;

        int best = -1;
        int best_count = 0;
        int singleton_only = 0;
        for (HostMask m = full_ & ~covered; m != 0; m &= m - 1) {
            int v = std::countr_zero(m);
            int count = 0;
            bool wide = false;
            for (int i : by_vertex_[v])
                if (live(i, covered)) {
                    ++count;
                    wide = wide || !singleton_type_[pool_.pieces[i].type];
                }
            if (count == 0) {
                failed_.insert(std::move(key));
                return false;
            }
            if (!wide)
                ++singleton_only;
            if (best < 0 || count < best_count) {
                best = v;
                best_count = count;
            }
        }
        int singleton_room = 0;
        for (std::size_t t = 0; t < quota_.size(); ++t)
            if (singleton_type_[t])
                singleton_room += quota_[t];
        if (singleton_only > singleton_room) {
            failed_.insert(std::move(key));
            return false;
        }

        for (int i : by_vertex_[best]) {
            if (!live(i, covered))
                continue;
            const auto& p = pool_.pieces[i];
            --quota_[p.type];
            chosen_.push_back(i);
            if (search(covered | p.mask))
                return true;
            chosen_.pop_back();
            ++quota_[p.type];
            if (exhausted_)
                return false;
        }
        failed_.insert(std::move(key));
        return false;
    }

    const PiecePool& pool_;
    std::uint64_t budget_;
    HostMask full_;
    std::vector<int> quota_;
    std::vector<std::vector<int>> by_vertex_;
    std::vector<char> singleton_type_;
    std::vector<int> chosen_;
    std::unordered_set<StateKey, StateHash> failed_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

class Counter {
public:
    explicit Counter(const PiecePool& pool)
        : full_(full_mask(pool.vertex_count)), quota_(pool.quota), by_low_(pool.vertex_count)
    {
        std::map<std::pair<HostMask, int>, int> groups;
        for (const auto& p : pool.pieces)
            ++groups[{p.mask, p.type}];
        for (const auto& [k, count] : groups)
            for (HostMask m = k.first; m != 0; m &= m - 1)
                by_low_[std::countr_zero(m)].push_back({k.first, k.second, count});
    }

    BigInt run() { return count(0); }

private:
    struct Group {
        HostMask mask;
        int type;
        int count;
    };

    BigInt count(HostMask covered)
    {
        if (covered == full_)
            return 1;
        StateKey key{covered, quota_};
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        int v = std::countr_zero(~covered);
        BigInt total = 0;
        for (const auto& g : by_low_[v]) {
            if ((g.mask & covered) != 0 || quota_[g.type] == 0)
                continue;
            --quota_[g.type];
            BigInt rest = count(covered | g.mask);
            ++quota_[g.type];
            total += rest * g.count;
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

    HostMask full_;
    std::vector<int> quota_;
    std::vector<std::vector<Group>> by_low_;
    std::unordered_map<StateKey, BigInt, StateHash> memo_;
};

}  // namespace

CoverResult exact_cover(const PiecePool& pool, std::uint64_t node_budget)
{
    check_pool(pool);
    return Searcher(pool, node_budget).run();
}

BigInt count_covers(const PiecePool& pool)
{
    check_pool(pool);
    return Counter(pool).run();
}

}  // namespace hfactor
