#include "zolab/ef_game.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "zolab/graph_alg.hpp"

namespace zolab {

GamePosition new_game(Graph g, Graph h, int k, MoveRule rule) {
    if (k < 1) throw DomainError("new_game needs k >= 1");
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        throw DomainError("new_game needs nonempty graphs");
    GamePosition pos;
    pos.left = std::move(g);
    pos.right = std::move(h);
    pos.rounds_total = k;
    pos.rule = rule;
    return pos;
}

namespace {

std::vector<bool> used_on(const GamePosition& pos, Side side) {
    const Graph& g = side == Side::Left ? pos.left : pos.right;
    std::vector<bool> used(g.vertex_count(), false);
    for (auto [l, r] : pos.pebbles) used[side == Side::Left ? l : r] = true;
    return used;
}

// partner of an already-pebbled vertex on the given side
std::optional<int> partner_of(const GamePosition& pos, Side side, int v) {
    for (auto [l, r] : pos.pebbles) {
        if (side == Side::Left && l == v) return r;
        if (side == Side::Right && r == v) return l;
    }
    return std::nullopt;
}

} // namespace

std::vector<Move> legal_moves(const GamePosition& pos) {
    if (pos.finished()) return {};
    std::vector<Move> out;
    if (pos.awaiting_spoiler()) {
        for (Side side : {Side::Left, Side::Right}) {
            const Graph& g = side == Side::Left ? pos.left : pos.right;
            auto used = used_on(pos, side);
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (pos.rule == MoveRule::DistinctOnly && used[v]) continue;
                out.push_back({side, v});
            }
        }
        return out;
    }
    Side reply_side = other_side(pos.pending->side);
    const Graph& g = reply_side == Side::Left ? pos.left : pos.right;
    if (auto partner = partner_of(pos, pos.pending->side, pos.pending->vertex)) {
        // repeated pick forces the matched reply
        out.push_back({reply_side, *partner});
        return out;
    }
    auto used = used_on(pos, reply_side);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!used[v]) out.push_back({reply_side, v});
    return out;
}

GamePosition apply_move(const GamePosition& pos, const Move& move) {
    auto legal = legal_moves(pos);
    if (std::find(legal.begin(), legal.end(), move) == legal.end())
        throw DomainError("apply_move: illegal move");
    GamePosition next = pos;
    if (pos.awaiting_spoiler()) {
        next.pending = move;
        return next;
    }
    int l = pos.pending->side == Side::Left ? pos.pending->vertex : move.vertex;
    int r = pos.pending->side == Side::Left ? move.vertex : pos.pending->vertex;
    next.pebbles.emplace_back(l, r);
    next.pending.reset();
    return next;
}

bool partial_isomorphism_holds(const GamePosition& pos) {
    const auto& p = pos.pebbles;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j) {
            bool same_l = p[i].first == p[j].first;
            bool same_r = p[i].second == p[j].second;
            if (same_l != same_r) return false;
            if (same_l) continue;
            if (pos.left.has_edge(p[i].first, p[j].first) !=
                pos.right.has_edge(p[i].second, p[j].second))
                return false;
        }
    return true;
}

GameSolver::GameSolver(Graph left, Graph right, int rounds, SolveCaps caps)
    : left_(std::move(left)), right_(std::move(right)), rounds_(rounds) {
    if (rounds < 1) throw DomainError("solver needs k >= 1");
    if (left_.vertex_count() == 0 || right_.vertex_count() == 0)
        throw DomainError("solver needs nonempty graphs");
    if (left_.vertex_count() > caps.vertex_cap || right_.vertex_count() > caps.vertex_cap)
        throw CapExceededError("solve: graph exceeds vertex cap " +
                               std::to_string(caps.vertex_cap));
    if (rounds > caps.round_cap)
        throw CapExceededError("solve: k exceeds round cap " + std::to_string(caps.round_cap));
}

bool GameSolver::pairs_consistent(const PairSet& pairs) const {
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j) {
            bool same_l = pairs[i].first == pairs[j].first;
            bool same_r = pairs[i].second == pairs[j].second;
            if (same_l != same_r) return false;
            if (same_l) continue;
            if (left_.has_edge(pairs[i].first, pairs[j].first) !=
                right_.has_edge(pairs[i].second, pairs[j].second))
                return false;
        }
    return true;
}

GameSolver::PairSet GameSolver::with_pair(const PairSet& pairs, std::pair<int, int> p) {
    PairSet out = pairs;
    auto it = std::lower_bound(out.begin(), out.end(), p);
    if (it == out.end() || *it != p) out.insert(it, p);
    return out;
}

std::vector<std::uint8_t> GameSolver::canonical_key(const PairSet& pairs) const {
    // two-colored disjoint union with anonymous cross links per pebble pair
    int nl = left_.vertex_count(), nr = right_.vertex_count();
    std::vector<Edge> edges = left_.edges();
    for (auto [u, v] : right_.edges()) edges.emplace_back(nl + u, nl + v);
    for (auto [l, r] : pairs) edges.emplace_back(l, nl + r);
    Graph joint(nl + nr, std::move(edges));
    std::vector<int> colors(nl + nr, 0);
    for (int v = 0; v < nr; ++v) colors[nl + v] = 1;
    return canonical_form(joint, &colors, nl + nr);
}

Winner GameSolver::value_of(const PairSet& pairs, int rounds_played) {
    if (!pairs_consistent(pairs)) return Winner::Spoiler;
    if (rounds_played == rounds_) return Winner::Duplicator;

    std::vector<long long> exact_key{rounds_played};
    for (auto [l, r] : pairs) exact_key.push_back(static_cast<long long>(l) * 4096 + r);
    if (auto it = exact_memo_.find(exact_key); it != exact_memo_.end()) return it->second;

    auto canon = canonical_key(pairs);
    std::vector<long long> canon_key{rounds_played};
    for (auto b : canon) canon_key.push_back(b);
    if (auto it = canon_memo_.find(canon_key); it != canon_memo_.end()) {
        exact_memo_.emplace(std::move(exact_key), it->second);
        return it->second;
    }

    Winner result = Winner::Duplicator;
    for (Side side : {Side::Left, Side::Right}) {
        int n = (side == Side::Left ? left_ : right_).vertex_count();
        for (int v = 0; v < n && result == Winner::Duplicator; ++v)
            if (reply_value(pairs, rounds_played, {side, v}) == Winner::Spoiler)
                result = Winner::Spoiler;
        if (result == Winner::Spoiler) break;
    }

    exact_memo_.emplace(std::move(exact_key), result);
    canon_memo_.emplace(std::move(canon_key), result);
    return result;
}

// value after the Spoiler's pick, with the Duplicator to reply
Winner GameSolver::reply_value(const PairSet& pairs, int rounds_played, const Move& pick) {
    Side rside = other_side(pick.side);
    const Graph& rgraph = rside == Side::Left ? left_ : right_;

    auto partner = [&]() -> std::optional<int> {
        for (auto [l, r] : pairs) {
            if (pick.side == Side::Left && l == pick.vertex) return r;
            if (pick.side == Side::Right && r == pick.vertex) return l;
        }
        return std::nullopt;
    }();
    if (partner) {
        // forced reply; the pair set is unchanged
        return value_of(pairs, rounds_played + 1);
    }
    std::vector<bool> used(rgraph.vertex_count(), false);
    for (auto [l, r] : pairs) used[rside == Side::Left ? l : r] = true;
    for (int u = 0; u < rgraph.vertex_count(); ++u) {
        if (used[u]) continue;
        auto p = pick.side == Side::Left ? std::pair{pick.vertex, u} : std::pair{u, pick.vertex};
        if (value_of(with_pair(pairs, p), rounds_played + 1) == Winner::Duplicator)
            return Winner::Duplicator;
    }
    return Winner::Spoiler; // includes the no-fresh-vertex loss
}

Winner GameSolver::winner() { return value_of({}, 0); }

Winner GameSolver::value(const GamePosition& pos) {
    if (!(pos.left == left_) || !(pos.right == right_) || pos.rounds_total != rounds_)
        throw DomainError("solver: position belongs to a different game");
    PairSet pairs(pos.pebbles.begin(), pos.pebbles.end());
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    if (pos.awaiting_spoiler()) return value_of(pairs, pos.rounds_played());
    if (!pairs_consistent(pairs)) return Winner::Spoiler;
    return reply_value(pairs, pos.rounds_played(), *pos.pending);
}

std::optional<Move> GameSolver::best_move(const GamePosition& pos) {
    auto legal = legal_moves(pos);
    if (legal.empty()) return std::nullopt;
    Winner mover_wants = pos.awaiting_spoiler() ? Winner::Spoiler : Winner::Duplicator;
    for (const auto& move : legal) {
        GamePosition next = apply_move(pos, move);
        if (value(next) == mover_wants) return move;
    }
    return legal.front();
}

Winner solve(const Graph& g, const Graph& h, int k, SolveCaps caps) {
    return GameSolver(g, h, k, caps).winner();
}

Strategy minimax_spoiler(std::shared_ptr<GameSolver> solver) {
    return {"minimax-spoiler", [solver](const GamePosition& pos) -> std::optional<ChosenMove> {
                auto move = solver->best_move(pos);
                if (!move) return std::nullopt;
                return ChosenMove{*move, ""};
            }};
}

Strategy minimax_duplicator(std::shared_ptr<GameSolver> solver) {
    return {"minimax-duplicator", [solver](const GamePosition& pos) -> std::optional<ChosenMove> {
                auto move = solver->best_move(pos);
                if (!move) return std::nullopt;
                return ChosenMove{*move, ""};
            }};
}

Strategy lowest_vertex_strategy(const std::string& name) {
    return {name, [](const GamePosition& pos) -> std::optional<ChosenMove> {
                auto legal = legal_moves(pos);
                if (legal.empty()) return std::nullopt;
                return ChosenMove{legal.front(), ""};
            }};
}

Transcript play(const Graph& g, const Graph& h, int k, const Strategy& spoiler,
                const Strategy& duplicator, MoveRule rule) {
    GamePosition pos = new_game(g, h, k, rule);
    Transcript t;
    t.left = g;
    t.right = h;
    t.rounds_total = k;
    t.rule = rule;
    while (!pos.finished()) {
        bool spoiler_turn = pos.awaiting_spoiler();
        auto legal = legal_moves(pos);
        if (legal.empty()) {
            if (spoiler_turn) {
                // distinct-only play can strand the Spoiler; final check decides
                t.winner = partial_isomorphism_holds(pos) ? Winner::Duplicator : Winner::Spoiler;
                t.outcome = "spoiler-stuck";
            } else {
                t.winner = Winner::Spoiler;
                t.outcome = "no-reply";
            }
            return t;
        }
        const Strategy& actor = spoiler_turn ? spoiler : duplicator;
        auto chosen = actor.choose(pos);
        if (!chosen) {
            t.winner = spoiler_turn ? Winner::Duplicator : Winner::Spoiler;
            t.outcome = "resign:" + actor.name;
            return t;
        }
        if (std::find(legal.begin(), legal.end(), chosen->move) == legal.end()) {
            t.winner = spoiler_turn ? Winner::Duplicator : Winner::Spoiler;
            t.outcome = "forfeit:" + actor.name;
            return t;
        }
        pos = apply_move(pos, chosen->move);
        t.moves.push_back(chosen->move);
        t.notes.push_back(chosen->note);
    }
    t.winner = partial_isomorphism_holds(pos) ? Winner::Duplicator : Winner::Spoiler;
    t.outcome = "completed";
    return t;
}

Winner replay(const Transcript& t) {
    GamePosition pos = new_game(t.left, t.right, t.rounds_total, t.rule);
    for (const auto& move : t.moves) pos = apply_move(pos, move);
    if (!t.outcome.empty() && t.outcome != "completed") return t.winner;
    return partial_isomorphism_holds(pos) ? Winner::Duplicator : Winner::Spoiler;
}

std::string Transcript::to_json() const {
    nlohmann::ordered_json j;
    j["left"] = left.to_graph6();
    j["right"] = right.to_graph6();
    j["k"] = rounds_total;
    j["rule"] = rule == MoveRule::DistinctOnly ? "distinct" : "full";
    nlohmann::ordered_json moves_json = nlohmann::ordered_json::array();
    for (size_t i = 0; i < moves.size(); ++i) {
        nlohmann::ordered_json m;
        m["side"] = moves[i].side == Side::Left ? "left" : "right";
        m["vertex"] = moves[i].vertex;
        if (i < notes.size() && !notes[i].empty()) m["note"] = notes[i];
        moves_json.push_back(std::move(m));
    }
    j["moves"] = std::move(moves_json);
    j["winner"] = winner == Winner::Spoiler ? "spoiler" : "duplicator";
    j["outcome"] = outcome;
    return j.dump();
}

Transcript Transcript::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("transcript: ") + e.what());
    }
    Transcript t;
    t.left = Graph::from_graph6(j.at("left").get<std::string>());
    t.right = Graph::from_graph6(j.at("right").get<std::string>());
    t.rounds_total = j.at("k").get<int>();
    t.rule = j.at("rule").get<std::string>() == "full" ? MoveRule::FullRepeatRule
                                                       : MoveRule::DistinctOnly;
    for (const auto& m : j.at("moves")) {
        t.moves.push_back({m.at("side").get<std::string>() == "left" ? Side::Left : Side::Right,
                           m.at("vertex").get<int>()});
        t.notes.push_back(m.value("note", ""));
    }
    t.winner = j.at("winner").get<std::string>() == "spoiler" ? Winner::Spoiler : Winner::Duplicator;
    t.outcome = j.value("outcome", "completed");
    return t;
}

} // namespace zolab
