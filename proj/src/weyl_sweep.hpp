#pragma once

#include <algorithm>
#include <thread>
#include <vector>

#include "kwm/weyl.hpp"

namespace kwm::detail {

// Splits W = S_{r+1} by first image value and visits each slice with its own
// worker state. Workers take slices in a fixed round-robin assignment and
// states are returned in slice order, so the caller's reduction is
// deterministic.
template <typename State, typename MakeState, typename Visit>
std::vector<State> sweep_weyl_group(const WeylGroup& group, unsigned threads, MakeState make_state,
                                    Visit visit)
{
    const int slices = group.rank() + 1;
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(slices));

    std::vector<State> states;
    states.reserve(slices);
    for (int s = 0; s < slices; ++s)
        states.push_back(make_state());

    auto work = [&](unsigned worker) {
        for (int s = static_cast<int>(worker); s < slices; s += static_cast<int>(threads))
            for (const auto& w : group.slice(s + 1))
                visit(states[s], w);
    };

    if (threads == 1) {
        work(0);
        return states;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(work, t);
    for (auto& t : pool)
        t.join();
    return states;
}

}  // namespace kwm::detail
