#include <rolecol/error.hh>
#include <rolecol/path_solver.hh>

#include <string>

namespace rolecol
{
    namespace
    {
        auto check_range(int n, int k) -> void
        {
            if (n < 1 || k < 1 || k > n)
                throw InvalidInput("need 1 <= k <= n, got n = " + std::to_string(n) + ", k = " + std::to_string(k));
        }

        // n = base + s * step for some s >= 0. step = 0 only matches n = base.
        auto repetitions(int n, int base, int step) -> std::optional<int>
        {
            if (n < base)
                return std::nullopt;
            if (step == 0)
                return n == base ? std::optional<int>{0} : std::nullopt;
            if ((n - base) % step != 0)
                return std::nullopt;
            return (n - base) / step;
        }

        // Bounce along a line of `width` stops: 0, 1, ..., width-1, width-2, ..., 0, 1, ...
        auto bounce(int i, int width) -> int
        {
            if (width == 1)
                return 0;
            int period = 2 * (width - 1);
            int r = i % period;
            return r < width ? r : period - r;
        }
    }

    auto path_k_colourable(int n, int k) -> bool
    {
        check_range(n, k);
        return repetitions(n, k, k - 1) || repetitions(n, 2 * k, 2 * k - 1);
    }

    auto colour_path(int n, int k) -> std::optional<PathWitness>
    {
        check_range(n, k);

        if (auto s = repetitions(n, 2 * k, 2 * k - 1)) {
            // walk on the doubled role path 1..k,k..1, i.e. a loop on colour k
            PathWitness w{PathFamily::LeafLoop, *s, RoleColouring{k, std::vector<Colour>(n)}};
            for (int i = 0; i < n; ++i) {
                int stop = bounce(i, 2 * k);
                w.colouring.colours[i] = (stop < k ? stop : 2 * k - 1 - stop) + 1;
            }
            return w;
        }

        if (auto s = repetitions(n, k, k - 1)) {
            PathWitness w{PathFamily::NoLoop, *s, RoleColouring{k, std::vector<Colour>(n)}};
            for (int i = 0; i < n; ++i)
                w.colouring.colours[i] = bounce(i, k) + 1;
            return w;
        }

        return std::nullopt;
    }
}
