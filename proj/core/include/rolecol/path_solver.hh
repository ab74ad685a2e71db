#pragma once

#include <rolecol/role_check.hh>

#include <optional>

namespace rolecol
{
    /// NoLoop: the colours sweep back and forth over a role path 1..k, so
    /// n = k + s(k-1). LeafLoop: the role path carries a loop on its last
    /// colour and n = 2k + s(2k-1).
    enum class PathFamily
    {
        NoLoop,
        LeafLoop
    };

    struct PathWitness
    {
        PathFamily family = PathFamily::NoLoop;
        int s = 0;
        RoleColouring colouring;
    };

    /// Whether the path on n vertices has a k-role-colouring. s ranges over
    /// s >= 0; for k = 1 the answer is true for every n >= 1.
    /// Throws InvalidInput unless 1 <= k <= n.
    auto path_k_colourable(int n, int k) -> bool;

    /// A colouring of the path 0-1-...-(n-1). Where both families fit (only
    /// possible for k = 2) the LeafLoop colouring 1,2,2,1,... is returned.
    auto colour_path(int n, int k) -> std::optional<PathWitness>;
}
