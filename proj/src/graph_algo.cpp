/*
 * Copyright 2026 The covgame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "covgame/graph_algo.hpp"

#include <algorithm>
#include <deque>

namespace covgame {

Mask forward_reachable(const Adjacency& succ, VertexId from) {
    Mask seen(succ.size(), 0);
    std::vector<VertexId> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (VertexId w : succ[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

Adjacency reverse(const Adjacency& succ) {
    Adjacency pred(succ.size());
    for (VertexId v = 0; v < succ.size(); ++v)
        for (VertexId w : succ[v]) pred[w].push_back(v);
    return pred;
}

SccDecomposition tarjan_scc(const Adjacency& succ, const Mask* allowed) {
    constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
    const auto n = static_cast<std::uint32_t>(succ.size());
    auto in_scope = [&](VertexId v) { return allowed == nullptr || (*allowed)[v]; };

    SccDecomposition out;
    out.component.assign(n, SccDecomposition::kNoComponent);
    std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<VertexId> stack;
    // Explicit DFS frames: (vertex, next successor position).
    std::vector<std::pair<VertexId, std::size_t>> frames;
    std::uint32_t next_index = 0;

    for (VertexId root = 0; root < n; ++root) {
        if (!in_scope(root) || index[root] != kUnvisited) continue;
        frames.emplace_back(root, 0);
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;

        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            if (pos < succ[v].size()) {
                VertexId w = succ[v][pos++];
                if (!in_scope(w)) continue;
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            VertexId done = v;
            frames.pop_back();
            if (!frames.empty()) {
                VertexId parent = frames.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
            if (low[done] == index[done]) {
                VertexId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    out.component[w] = out.count;
                } while (w != done);
                ++out.count;
            }
        }
    }
    return out;
}

Attractor attractor(const Adjacency& succ, const Adjacency& pred, const std::vector<Player>& owner,
                    const Mask& target, Player player) {
    const auto n = succ.size();
    Attractor attr;
    attr.rank.assign(n, Attractor::kUnreached);
    // Opponent vertices enter once every successor is attracted.
    std::vector<std::size_t> pending(n);
    std::deque<VertexId> queue;
    for (VertexId v = 0; v < n; ++v) {
        pending[v] = succ[v].size();
        if (target[v]) {
            attr.rank[v] = 0;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        VertexId w = queue.front();
        queue.pop_front();
        for (VertexId v : pred[w]) {
            if (attr.contains(v)) continue;
            if (owner[v] == player || --pending[v] == 0) {
                attr.rank[v] = attr.rank[w] + 1;
                queue.push_back(v);
            }
        }
    }
    return attr;
}

} // namespace covgame
