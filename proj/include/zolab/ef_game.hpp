#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "zolab/graph.hpp"

namespace zolab {

enum class Winner { Spoiler, Duplicator };
enum class Side { Left, Right };

inline Side other_side(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

struct Move {
    Side side;
    int vertex;
    bool operator==(const Move&) const = default;
};

/// DistinctOnly is the play default (every pick fresh). FullRepeatRule
/// additionally lets the Spoiler repeat a vertex, forcing the matched
/// reply; the solver always uses the full rule.
enum class MoveRule { DistinctOnly, FullRepeatRule };

struct GamePosition {
    Graph left, right;
    int rounds_total = 0;
    MoveRule rule = MoveRule::DistinctOnly;
    std::vector<std::pair<int, int>> pebbles; ///< one (left, right) pair per finished round
    std::optional<Move> pending;              ///< Spoiler's pick awaiting the reply

    bool awaiting_spoiler() const { return !pending.has_value(); }
    int rounds_played() const { return static_cast<int>(pebbles.size()); }
    bool finished() const { return !pending && rounds_played() == rounds_total; }
};

GamePosition new_game(Graph g, Graph h, int k, MoveRule rule = MoveRule::DistinctOnly);

/// Moves available to whoever is to move; empty means the mover loses
/// immediately (the no-fresh-vertex rule) or, for a stuck Spoiler in
/// distinct-only play, that the game ends on the final-position check.
std::vector<Move> legal_moves(const GamePosition& pos);

/// Applies a legal move (throws DomainError otherwise).
GamePosition apply_move(const GamePosition& pos, const Move& move);

/// The pairing of distinct pebbled vertices is a well-defined bijection
/// preserving equality, adjacency and non-adjacency.
bool partial_isomorphism_holds(const GamePosition& pos);

struct SolveCaps {
    int vertex_cap = 12;
    int round_cap = 5;
};

/// Exact minimax over the full-rule game tree. Two-level memoization: an
/// exact key on the pebble-pair set, backed by a canonical signature of the
/// pebbled configuration that collapses symmetric positions.
class GameSolver {
public:
    GameSolver(Graph left, Graph right, int rounds, SolveCaps caps = {});

    Winner winner();
    Winner value(const GamePosition& pos);

    /// Optimal move for the side to move (first optimal in deterministic
    /// order; a losing mover gets the first legal move). nullopt when the
    /// mover has no legal move.
    std::optional<Move> best_move(const GamePosition& pos);

    const Graph& left() const { return left_; }
    const Graph& right() const { return right_; }
    int rounds() const { return rounds_; }

private:
    using PairSet = std::vector<std::pair<int, int>>; // sorted unique

    Winner value_of(const PairSet& pairs, int rounds_played);
    Winner reply_value(const PairSet& pairs, int rounds_played, const Move& pick);
    static PairSet with_pair(const PairSet& pairs, std::pair<int, int> p);
    bool pairs_consistent(const PairSet& pairs) const;
    std::vector<std::uint8_t> canonical_key(const PairSet& pairs) const;

    Graph left_, right_;
    int rounds_ = 0;

    struct VecHash {
        std::size_t operator()(const std::vector<long long>& v) const {
            std::size_t h = 1469598103934665603ull;
            for (long long x : v) {
                h ^= static_cast<std::size_t>(x);
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    std::unordered_map<std::vector<long long>, Winner, VecHash> exact_memo_;
    std::unordered_map<std::vector<long long>, Winner, VecHash> canon_memo_;
};

/// Exact winner of EHR(g, h, k) under the full repeat rule.
Winner solve(const Graph& g, const Graph& h, int k, SolveCaps caps = {});

/// A chosen move plus an optional strategy note kept in the transcript.
struct ChosenMove {
    Move move;
    std::string note;
};

struct Strategy {
    std::string name;
    /// nullopt = resign (recorded as a forfeit)
    std::function<std::optional<ChosenMove>(const GamePosition&)> choose;
};

Strategy minimax_spoiler(std::shared_ptr<GameSolver> solver);
Strategy minimax_duplicator(std::shared_ptr<GameSolver> solver);
/// Always the lowest-id legal vertex; total on legal positions.
Strategy lowest_vertex_strategy(const std::string& name = "lowest-vertex");

struct Transcript {
    Graph left, right;
    int rounds_total = 0;
    MoveRule rule = MoveRule::DistinctOnly;
    std::vector<Move> moves;
    std::vector<std::string> notes; ///< aligned with moves
    Winner winner = Winner::Duplicator;
    std::string outcome; ///< "completed", "no-reply", "forfeit:<who>", "resign:<who>"

    std::string to_json() const;
    static Transcript from_json(const std::string& text);
};

/// Runs a full game. Illegal moves and resignations forfeit.
Transcript play(const Graph& g, const Graph& h, int k, const Strategy& spoiler,
                const Strategy& duplicator, MoveRule rule = MoveRule::DistinctOnly);

/// Re-applies the transcript's moves and recomputes the winner.
Winner replay(const Transcript& t);

} // namespace zolab
