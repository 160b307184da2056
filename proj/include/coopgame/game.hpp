#ifndef COOPGAME_GAME_HPP
#define COOPGAME_GAME_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "coopgame/rational.hpp"

namespace coopgame {

// Dense coalition tables get big fast; 24 players is already a 16M-entry
// table and is the hard cap for this library.
inline constexpr int kMaxPlayers = 24;

// A coalition over players 1..m, stored as a bitmask with player k on bit
// k-1. The empty coalition is bits == 0.
struct Coalition {
    std::uint32_t bits = 0;

    constexpr Coalition() = default;
    constexpr explicit Coalition(std::uint32_t b) : bits(b) {}

    static Coalition from_members(const std::vector<int>& players);
    static constexpr Coalition grand(int m) {
        return Coalition((std::uint32_t{1} << m) - 1);
    }
    static constexpr Coalition singleton(int player) {
        return Coalition(std::uint32_t{1} << (player - 1));
    }

    bool contains(int player) const { return (bits >> (player - 1)) & 1u; }
    bool empty() const { return bits == 0; }
    int size() const;
    std::vector<int> members() const; // ascending, 1-indexed

    Coalition united(Coalition o) const { return Coalition(bits | o.bits); }
    Coalition intersected(Coalition o) const { return Coalition(bits & o.bits); }
    Coalition minus(Coalition o) const { return Coalition(bits & ~o.bits); }
    bool disjoint(Coalition o) const { return (bits & o.bits) == 0; }
    bool subset_of(Coalition o) const { return (bits & ~o.bits) == 0; }

    friend bool operator==(Coalition a, Coalition b) { return a.bits == b.bits; }
    friend bool operator!=(Coalition a, Coalition b) { return a.bits != b.bits; }
    friend bool operator<(Coalition a, Coalition b) { return a.bits < b.bits; }
};

// An m-player transferable-utility game in normal form: a total valuation
// table over all 2^m coalitions with v(empty) = 0.
class Game {
public:
    // values[c.bits] is v(c); must have exactly 2^m entries and values[0] == 0.
    Game(int player_count, std::vector<Rational> values);

    int player_count() const { return m_; }
    std::uint32_t coalition_count() const { return std::uint32_t{1} << m_; }
    const Rational& value(Coalition c) const { return values_[c.bits]; }
    const std::vector<Rational>& values() const { return values_; }
    Coalition grand_coalition() const { return Coalition::grand(m_); }

    friend bool operator==(const Game& a, const Game& b) {
        return a.m_ == b.m_ && a.values_ == b.values_;
    }

private:
    int m_;
    std::vector<Rational> values_;
};

// The (0,1)-normalised three-player game with pair values
// v({1,2}) = a, v({2,3}) = b, v({3,1}) = c, singletons 0, grand coalition 1.
struct CanonicalThreePlayer {
    Rational a, b, c;

    CanonicalThreePlayer(Rational a_, Rational b_, Rational c_);
    Game to_game() const;
};

struct NormalizationResult {
    Game game;                  // the (0,1)-normalised form
    Rational scale;             // K with 1/K = v(N) - sum of singletons
    std::vector<Rational> shift; // shift[k-1] = -K * v({k})
};

struct EquivalenceWitness {
    Rational scale;              // K > 0
    std::vector<Rational> shift; // per-player additive constants
};

// Valuation property checks. All decide over the full table exactly.
bool check_nonnegative(const Game& g);
bool check_monotonic(const Game& g);
bool check_superadditive(const Game& g);
bool check_constant_sum(const Game& g);
bool check_essential(const Game& g);
bool check_convex(const Game& g);

// True iff all singleton values are 0 and v(N) = 1.
bool is_normalized_01(const Game& g);

// v'(C) = K v(C) + sum_{k in C} shift_k applied to the whole table.
// Throws PreconditionError unless scale > 0 and shift has m entries.
Game apply_equivalence(const Game& g, const Rational& scale,
                       const std::vector<Rational>& shift);

// Throws InessentialGameError when sum v({k}) = v(N), and
// NotNormalizableError when sum v({k}) > v(N).
NormalizationResult normalize_01(const Game& g);

// Returns a witness (K > 0, shift) with g2 = K*g + shift, or nullopt.
// Games with different player counts are never equivalent.
std::optional<EquivalenceWitness> strategically_equivalent(const Game& g, const Game& g2);

// Reads (a, b, c) off the (0,1)-normalisation of an essential 3-player game.
// Throws WrongPlayerCountError / InessentialGameError / NotNormalizableError,
// and PreconditionError if a normalized pair value falls outside [0,1].
CanonicalThreePlayer to_canonical_three_player(const Game& g);

// Convexity of the canonical game: a+b <= 1, b+c <= 1 and c+a <= 1.
bool canonical_is_convex(const CanonicalThreePlayer& p);

} // namespace coopgame

#endif
