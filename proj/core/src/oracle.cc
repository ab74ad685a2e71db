#include <rolecol/error.hh>
#include <rolecol/oracle.hh>

#include <algorithm>
#include <limits>
#include <string>

namespace rolecol
{
    PartitionIterator::PartitionIterator(int n, int k) :
        _n(n),
        _k(k)
    {
        if (k < 1 || k > n)
            throw InvalidInput("need 1 <= k <= n, got n = " + std::to_string(n) + ", k = " + std::to_string(k));

        // smallest string with exactly k blocks: zeros, then 1, 2, ..., k-1
        _blocks.assign(n, 0);
        for (int b = 1; b < k; ++b)
            _blocks[n - k + b] = b;

        _prefix_max.resize(n);
        int m = 0;
        for (int i = 0; i < n; ++i)
            _prefix_max[i] = m = std::max(m, _blocks[i]);
    }

    auto PartitionIterator::next() -> bool
    {
        for (int i = _n - 1; i >= 1; --i) {
            int bound = std::min(_k - 1, _prefix_max[i - 1] + 1);
            if (_blocks[i] >= bound)
                continue;

            int m = std::max(_prefix_max[i - 1], _blocks[i] + 1);
            int remaining = _n - 1 - i;
            int missing = _k - 1 - m;
            if (missing > remaining)
                continue;

            _blocks[i] += 1;
            _prefix_max[i] = m;
            for (int j = i + 1; j < _n; ++j) {
                int from_end = _n - j;
                _blocks[j] = from_end <= missing ? _k - from_end : 0;
                _prefix_max[j] = std::max(_prefix_max[j - 1], _blocks[j]);
            }
            return true;
        }
        return false;
    }

    auto PartitionIterator::colouring() const -> RoleColouring
    {
        RoleColouring rc{_k, std::vector<Colour>(_n)};
        for (int i = 0; i < _n; ++i)
            rc.colours[i] = _blocks[i] + 1;
        return rc;
    }

    auto enumerate_k_partitions(int n, int k) -> PartitionIterator
    {
        return PartitionIterator{n, k};
    }

    auto stirling2(int n, int k) -> std::uint64_t
    {
        if (n < 0 || k < 0)
            return 0;
        constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
        std::vector<std::uint64_t> row(k + 1, 0);
        row[0] = 1;
        for (int i = 1; i <= n; ++i) {
            for (int j = std::min(i, k); j >= 1; --j) {
                auto term = row[j];
                std::uint64_t a = (term != 0 && static_cast<std::uint64_t>(j) > cap / term) ? cap : term * static_cast<std::uint64_t>(j);
                std::uint64_t b = row[j - 1];
                row[j] = (a > cap - b) ? cap : a + b;
            }
            row[0] = 0;
        }
        return row[k];
    }

    namespace
    {
        class Search
        {
        public:
            Search(const Graph & g, int k, const std::function<bool(const RoleColouring &)> & visit) :
                _g(g),
                _k(k),
                _n(g.size()),
                _visit(visit),
                _blocks(g.size(), -1),
                _completes_at(g.size()),
                _signature(k, 0),
                _has_signature(k, false)
            {
                if (k < 1 || k > _n)
                    throw InvalidInput("need 1 <= k <= n, got n = " + std::to_string(_n) + ", k = " + std::to_string(k));
                if (_n > oracle_max_vertices)
                    throw BudgetExceeded("oracle handles at most " + std::to_string(oracle_max_vertices) + " vertices");

                for (Vertex v = 0; v < _n; ++v) {
                    int ready = v;
                    for (Vertex w : g.neighbours(v))
                        ready = std::max(ready, w);
                    _completes_at[ready].push_back(v);
                }
            }

            auto run() -> std::uint64_t
            {
                place(0, 0);
                return _found;
            }

        private:
            const Graph & _g;
            int _k, _n;
            const std::function<bool(const RoleColouring &)> & _visit;
            std::vector<int> _blocks;
            std::vector<std::vector<Vertex>> _completes_at;
            std::vector<std::uint64_t> _signature;
            std::vector<bool> _has_signature;
            std::uint64_t _found = 0;
            bool _stopped = false;

            // Returns false if a newly completed vertex contradicts its class.
            // Colours whose signature was set here are appended to `fresh`.
            auto settle(int position, std::vector<int> & fresh) -> bool
            {
                for (Vertex v : _completes_at[position]) {
                    std::uint64_t mask = 0;
                    for (Vertex w : _g.neighbours(v))
                        mask |= std::uint64_t{1} << _blocks[w];
                    int c = _blocks[v];
                    if (_has_signature[c]) {
                        if (_signature[c] != mask)
                            return false;
                    }
                    else {
                        _has_signature[c] = true;
                        _signature[c] = mask;
                        fresh.push_back(c);
                    }
                }
                return true;
            }

            auto place(int position, int used) -> void
            {
                if (position == _n) {
                    if (used != _k)
                        return;
                    ++_found;
                    RoleColouring rc{_k, std::vector<Colour>(_n)};
                    for (int i = 0; i < _n; ++i)
                        rc.colours[i] = _blocks[i] + 1;
                    if (! _visit(rc))
                        _stopped = true;
                    return;
                }

                int highest = std::min(used, _k - 1);
                for (int b = 0; b <= highest && ! _stopped; ++b) {
                    int now_used = std::max(used, b + 1);
                    if (now_used + (_n - 1 - position) < _k)
                        continue;

                    _blocks[position] = b;
                    std::vector<int> fresh;
                    if (settle(position, fresh))
                        place(position + 1, now_used);
                    for (int c : fresh)
                        _has_signature[c] = false;
                }
                _blocks[position] = -1;
            }
        };
    }

    auto for_each_valid_colouring(const Graph & g, int k,
        const std::function<bool(const RoleColouring &)> & visit) -> std::uint64_t
    {
        Search search{g, k, visit};
        return search.run();
    }

    auto solve_exact(const Graph & g, int k) -> std::optional<RoleColouring>
    {
        std::optional<RoleColouring> result;
        for_each_valid_colouring(g, k, [&](const RoleColouring & rc) {
            result = rc;
            return false;
        });
        return result;
    }

    auto solvable_k_set(const Graph & g) -> std::vector<int>
    {
        std::vector<int> result;
        for (int k = 1; k <= g.size(); ++k)
            if (solve_exact(g, k))
                result.push_back(k);
        return result;
    }
}
