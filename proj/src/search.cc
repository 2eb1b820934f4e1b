// Copyright 2026 The qsynth4 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qsynth4/search.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "qsynth4/simulator.h"

namespace qsynth4 {

namespace {

// Permutations of up to 16 states packed one nibble per state.
using Packed = uint64_t;

Packed pack(const StatePerm &p) {
    Packed out = 0;
    for (size_t s = 0; s < p.size(); s++) {
        out |= static_cast<Packed>(p[s]) << (4 * s);
    }
    return out;
}

int image(Packed p, int s) {
    return static_cast<int>((p >> (4 * s)) & 0xF);
}

// (g o p)[s] = g[p[s]].
Packed compose(const StatePerm &g, Packed p, int n) {
    Packed out = 0;
    for (int s = 0; s < n; s++) {
        out |= static_cast<Packed>(g[image(p, s)]) << (4 * s);
    }
    return out;
}

struct Visit {
    Packed parent;
    int generator;
};

using Side = std::unordered_map<Packed, Visit>;

std::vector<int> walk(const Side &side, Packed from, Packed root) {
    std::vector<int> gens;
    while (from != root) {
        const Visit &v = side.at(from);
        gens.push_back(v.generator);
        from = v.parent;
    }
    return gens;
}

}  // namespace

StatePerm state_permutation(const std::vector<Gate> &gates, int num_wires) {
    if (num_wires < 1) {
        throw std::invalid_argument("state_permutation needs at least one wire");
    }
    for (const Gate &g : gates) {
        validate_gate(g, num_wires);
    }
    int n = 1 << (2 * num_wires);
    StatePerm perm(n);
    std::vector<bool> seen(n, false);
    BasisState state(num_wires);
    for (int s = 0; s < n; s++) {
        for (int w = 0; w < num_wires; w++) {
            state[w] = Gf4((s >> (2 * (num_wires - 1 - w))) & 3);
        }
        for (const Gate &g : gates) {
            apply_gate(state, g);
        }
        int t = 0;
        for (int w = 0; w < num_wires; w++) {
            t = 4 * t + state[w].value();
        }
        if (seen[t]) {
            throw std::invalid_argument("gate sequence is not a permutation of basis states");
        }
        seen[t] = true;
        perm[s] = t;
    }
    return perm;
}

std::vector<Gate> search_generators(int num_wires) {
    std::vector<Gate> gens;
    for (int w = 0; w < num_wires; w++) {
        for (const ShiftOp &s : shift_catalog()) {
            if (!s.is_identity()) {
                gens.push_back(ShiftGate{w, s});
            }
        }
    }
    for (int c = 0; c < num_wires; c++) {
        for (int t = 0; t < num_wires; t++) {
            if (c == t) {
                continue;
            }
            for (const ShiftOp &s : shift_catalog()) {
                if (!s.is_identity()) {
                    gens.push_back(MsGate{c, t, s});
                }
            }
        }
    }
    return gens;
}

std::optional<std::vector<Gate>> search_decomposition(const StatePerm &target, int num_wires, int max_gates,
                                                      SearchStats *stats) {
    if (num_wires < 1 || num_wires > kMaxSearchWires) {
        throw std::invalid_argument("search_decomposition supports 1 or 2 wires");
    }
    if (max_gates < 0 || max_gates > kMaxSearchGates) {
        throw std::invalid_argument("max_gates must be between 0 and 6");
    }
    int n = 1 << (2 * num_wires);
    if (static_cast<int>(target.size()) != n) {
        throw std::invalid_argument("target permutation has the wrong size");
    }
    std::vector<bool> seen(n, false);
    for (int t : target) {
        if (t < 0 || t >= n || seen[t]) {
            throw std::invalid_argument("target is not a permutation");
        }
        seen[t] = true;
    }

    std::vector<Gate> gens = search_generators(num_wires);
    std::vector<StatePerm> fwd_perm;
    std::vector<StatePerm> bwd_perm;
    for (const Gate &g : gens) {
        StatePerm p = state_permutation({g}, num_wires);
        StatePerm inv(n);
        for (int s = 0; s < n; s++) {
            inv[p[s]] = s;
        }
        fwd_perm.push_back(std::move(p));
        bwd_perm.push_back(std::move(inv));
    }

    StatePerm id(n);
    for (int s = 0; s < n; s++) {
        id[s] = s;
    }
    Packed start = pack(id);
    Packed goal = pack(target);
    Side fwd{{start, Visit{start, -1}}};
    Side bwd{{goal, Visit{goal, -1}}};
    std::vector<Packed> fwd_frontier{start};
    std::vector<Packed> bwd_frontier{goal};
    int fwd_depth = 0;
    int bwd_depth = 0;

    auto finish = [&](Packed meet) {
        if (stats) {
            stats->forward_states = fwd.size();
            stats->backward_states = bwd.size();
        }
        std::vector<int> f = walk(fwd, meet, start);
        std::reverse(f.begin(), f.end());
        std::vector<int> b = walk(bwd, meet, goal);
        std::vector<Gate> out;
        for (int i : f) {
            out.push_back(gens[i]);
        }
        for (int i : b) {
            out.push_back(gens[i]);
        }
        return out;
    };

    if (start == goal) {
        return finish(start);
    }
    while (fwd_depth + bwd_depth < max_gates && !fwd_frontier.empty() && !bwd_frontier.empty()) {
        bool forward = fwd_frontier.size() <= bwd_frontier.size();
        Side &mine = forward ? fwd : bwd;
        Side &other = forward ? bwd : fwd;
        std::vector<Packed> &frontier = forward ? fwd_frontier : bwd_frontier;
        const std::vector<StatePerm> &moves = forward ? fwd_perm : bwd_perm;
        std::vector<Packed> next;
        std::optional<Packed> best;
        size_t best_len = 0;
        for (Packed p : frontier) {
            for (size_t gi = 0; gi < moves.size(); gi++) {
                Packed q = compose(moves[gi], p, n);
                if (mine.count(q)) {
                    continue;
                }
                mine.emplace(q, Visit{p, static_cast<int>(gi)});
                next.push_back(q);
                if (other.count(q)) {
                    size_t len = walk(other, q, forward ? goal : start).size();
                    if (!best || len < best_len) {
                        best = q;
                        best_len = len;
                    }
                }
            }
        }
        (forward ? fwd_depth : bwd_depth)++;
        if (best) {
            return finish(*best);
        }
        frontier = std::move(next);
    }
    if (stats) {
        stats->forward_states = fwd.size();
        stats->backward_states = bwd.size();
    }
    return std::nullopt;
}

Circuit search_result_circuit(const std::vector<Gate> &gates, int num_wires) {
    Circuit c;
    for (int w = 0; w < num_wires; w++) {
        WireId id = c.add_input();
        c.add_output(id, "q" + std::to_string(w));
    }
    for (const Gate &g : gates) {
        c.append_gate(g);
    }
    return c;
}

}  // namespace qsynth4
