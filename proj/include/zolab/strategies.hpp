#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zolab/ef_game.hpp"
#include "zolab/extensions.hpp"
#include "zolab/graph.hpp"
#include "zolab/rational.hpp"
#include "zolab/sparseness.hpp"

namespace zolab {

/// The Duplicator's bookkeeping: matched families of witness subgraphs on
/// both boards and the isomorphism between their unions. Stored in
/// left/right terms; the mover orients them by the Spoiler's current side.
struct WitnessFamily {
    std::vector<VertexSet> left_parts;
    std::vector<VertexSet> right_parts; ///< aligned with left_parts
    std::map<int, int> left_to_right;   ///< phi on the union, bijective

    int part_count() const { return static_cast<int>(left_parts.size()); }
    VertexSet left_union() const;
    VertexSet right_union() const;

    /// (I) pebbled vertices lie inside the unions; (III) phi restricted to
    /// each part pair is an isomorphism mapping pebble to pebble.
    bool invariants_hold(const GamePosition& pos) const;
};

struct KirReport {
    bool pass = true;
    std::string failed_bullet; ///< "disjoint", "distance", "extension", "size"
    std::string detail;
};

/// The four-bullet witness-family condition: pairwise disjoint, pairwise
/// distance > 2^{k-i}, no type-1/2 2^{k-i}-extension of any part, and the
/// union no larger than eta(rho) + (i-1)(ceil(1/(rho-1)) + 1).
KirReport check_kir_property(const Graph& q, const std::vector<VertexSet>& subgraphs, int k,
                             int i, int r, const Rational& rho);

/// One Duplicator reply per the three-case witness-family rulebook. Every
/// existential step is searched explicitly; a StrategyPreconditionError
/// names whatever required structure is missing. Case 1 replies by phi;
/// case 2 mirrors the unique short connecting chain by an exact maximal
/// extension; case 3 plants a fresh witness at chain distance
/// floor(1/(rho-1)) + 1. Round 1 runs from an empty family.
struct ConservedMove {
    Move move;
    WitnessFamily family;
    int case_taken = 0; ///< 1, 2 or 3
};
ConservedMove conservator_move(const WitnessFamily& family, const GamePosition& pos,
                               const Rational& rho);

/// Ready-to-play Duplicator wrapping conservator_move (stateful).
Strategy witness_family_duplicator(const Rational& rho);

/// Two simple cycles sharing exactly one vertex, plus the opposing path.
struct CounterexampleConfig {
    int k = 4;
    int beta = 1;
    int c1_len = 0;    ///< derived from (k, beta) when 0: the unique feasible split
    int c2_len = 0;
    int path_len = 0;  ///< opposing path edge count; 0 means 2^k
    int padding = 0;   ///< isolated vertices appended to the cycles graph
};

/// Fills in derived fields and validates the cycle-length invariants.
CounterexampleConfig resolve_counterexample_config(CounterexampleConfig cfg);

/// g = the two-cycle graph (plus padding), h = a path on path_len edges.
/// Asserts has_L1(g) and has_L2(h) before returning.
std::pair<Graph, Graph> build_counterexample(const CounterexampleConfig& cfg);

/// Contains a subgraph isomorphic to the two-cycle graph of cfg.
bool has_L1(const Graph& g, const CounterexampleConfig& cfg);

/// No vertex admits both a c1-cycle and a c2-cycle type-1 extension of its
/// singleton subgraph.
bool has_L2(const Graph& g, const CounterexampleConfig& cfg);

/// The Spoiler that locates a two-cycle copy, then halves distances along
/// the tracked chain until the opposing board runs out of matching paths.
/// Stateful; construction verifies L1/L2 on the two boards.
Strategy cycle_chase_spoiler(const Graph& g, const Graph& h, const CounterexampleConfig& cfg);

} // namespace zolab
