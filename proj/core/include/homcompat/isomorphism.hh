/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HOMCOMPAT_GUARD_ISOMORPHISM_HH
#define HOMCOMPAT_GUARD_ISOMORPHISM_HH 1

#include <homcompat/graph.hh>

namespace homcompat
{
    inline constexpr int small_isomorphism_limit = 12;

    /// Backtracking isomorphism test for test-sized graphs (at most
    /// small_isomorphism_limit vertices each, otherwise InvalidInput).
    auto is_isomorphic_small(const Graph & g1, const Graph & g2) -> bool;
}

#endif
