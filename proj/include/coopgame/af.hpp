#ifndef COOPGAME_AF_HPP
#define COOPGAME_AF_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "coopgame/errors.hpp"

namespace coopgame {

inline constexpr int kDefaultEnumCap = 20;

// A subset of the arguments 0..n-1 of a fixed framework, as a bitset.
class ArgSet {
public:
    ArgSet() = default;
    explicit ArgSet(int universe_size);
    static ArgSet full(int universe_size);

    int universe_size() const { return n_; }
    bool contains(int i) const;
    void insert(int i);
    void erase(int i);
    int count() const;
    bool empty() const;
    bool is_subset_of(const ArgSet& o) const;
    std::vector<int> members() const;

    ArgSet union_with(const ArgSet& o) const;
    ArgSet intersect_with(const ArgSet& o) const;
    ArgSet minus(const ArgSet& o) const;
    ArgSet complement() const;

    friend bool operator==(const ArgSet& a, const ArgSet& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

    // Numeric order on the underlying bitmask (argument 0 is the lowest bit).
    bool bitmask_less(const ArgSet& o) const;

    // Canonical list order: cardinality first, then bitmask.
    static bool canonical_less(const ArgSet& a, const ArgSet& b);

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

// Finite directed attack graph. Attacks are (attacker, attacked) pairs over
// 0-indexed arguments; self-attacks are allowed.
class Framework {
public:
    Framework(int n_args, std::vector<std::pair<int, int>> attacks);

    int n_args() const { return n_; }
    const std::vector<std::pair<int, int>>& attacks() const { return attacks_; }
    const ArgSet& attackers_of(int arg) const { return in_[arg]; }
    const ArgSet& targets_of(int arg) const { return out_[arg]; }
    bool has_attack(int from, int to) const { return out_[from].contains(to); }

private:
    int n_;
    std::vector<std::pair<int, int>> attacks_; // deduplicated, sorted
    std::vector<ArgSet> in_;
    std::vector<ArgSet> out_;
};

// S+ : the set of arguments attacked by S.
ArgSet attacked_by(const ArgSet& s, const Framework& f);

// n(S) = A - S+.
ArgSet neutrality(const ArgSet& s, const Framework& f);

// d(S) = { a : every attacker of a is attacked by S }; equals n(n(S)).
ArgSet defence(const ArgSet& s, const Framework& f);

bool is_conflict_free(const ArgSet& s, const Framework& f);
bool is_self_defending(const ArgSet& s, const Framework& f);
bool is_admissible(const ArgSet& s, const Framework& f);

// The set of unattacked arguments, d(empty).
ArgSet unattacked(const Framework& f);

// Least fixed point of d starting from the empty set.
ArgSet grounded(const Framework& f);

// All conflict-free fixed points of d, enumerated by backtracking over
// three-valued labellings with unit propagation. Results are sorted by
// cardinality then bitmask. Throws TooLargeError beyond the cap.
std::vector<ArgSet> complete_extensions(const Framework& f, int enum_cap = kDefaultEnumCap);

// Subset-maximal complete extensions.
std::vector<ArgSet> preferred_extensions(const Framework& f, int enum_cap = kDefaultEnumCap);

// Sets with n(S) = S.
std::vector<ArgSet> stable_extensions(const Framework& f, int enum_cap = kDefaultEnumCap);

// For finite frameworks, no infinite backward attack sequence exists iff the
// attack digraph is acyclic: a cycle can be walked forever, and any infinite
// sequence over finitely many arguments revisits one, closing a cycle.
bool is_well_founded(const Framework& f);

} // namespace coopgame

#endif
