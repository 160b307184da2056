#include "coopgame/af.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace coopgame {

namespace {
constexpr int kWordBits = 64;
}

ArgSet::ArgSet(int universe_size)
    : n_(universe_size), words_((universe_size + kWordBits - 1) / kWordBits, 0) {}

ArgSet ArgSet::full(int universe_size) {
    ArgSet s(universe_size);
    for (int i = 0; i < universe_size; ++i) s.insert(i);
    return s;
}

bool ArgSet::contains(int i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void ArgSet::insert(int i) { words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits); }

void ArgSet::erase(int i) { words_[i / kWordBits] &= ~(std::uint64_t{1} << (i % kWordBits)); }

int ArgSet::count() const {
    int total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

bool ArgSet::empty() const {
    for (std::uint64_t w : words_)
        if (w) return false;
    return true;
}

bool ArgSet::is_subset_of(const ArgSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

std::vector<int> ArgSet::members() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

ArgSet ArgSet::union_with(const ArgSet& o) const {
    ArgSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
    return r;
}

ArgSet ArgSet::intersect_with(const ArgSet& o) const {
    ArgSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
}

ArgSet ArgSet::minus(const ArgSet& o) const {
    ArgSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
}

ArgSet ArgSet::complement() const {
    ArgSet r(n_);
    for (int i = 0; i < n_; ++i)
        if (!contains(i)) r.insert(i);
    return r;
}

bool ArgSet::bitmask_less(const ArgSet& o) const {
    for (std::size_t i = words_.size(); i-- > 0;) {
        if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
    }
    return false;
}

bool ArgSet::canonical_less(const ArgSet& a, const ArgSet& b) {
    const int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.bitmask_less(b);
}

Framework::Framework(int n_args, std::vector<std::pair<int, int>> attacks)
    : n_(n_args), attacks_(std::move(attacks)) {
    if (n_ < 0) throw PreconditionError("argument count must be non-negative");
    for (auto [from, to] : attacks_)
        if (from < 0 || from >= n_ || to < 0 || to >= n_)
            throw PreconditionError("attack endpoint out of range");
    std::sort(attacks_.begin(), attacks_.end());
    attacks_.erase(std::unique(attacks_.begin(), attacks_.end()), attacks_.end());
    in_.assign(n_, ArgSet(n_));
    out_.assign(n_, ArgSet(n_));
    for (auto [from, to] : attacks_) {
        out_[from].insert(to);
        in_[to].insert(from);
    }
}

ArgSet attacked_by(const ArgSet& s, const Framework& f) {
    ArgSet result(f.n_args());
    for (int a : s.members()) result = result.union_with(f.targets_of(a));
    return result;
}

ArgSet neutrality(const ArgSet& s, const Framework& f) {
    return attacked_by(s, f).complement();
}

ArgSet defence(const ArgSet& s, const Framework& f) {
    const ArgSet reach = attacked_by(s, f);
    ArgSet result(f.n_args());
    for (int a = 0; a < f.n_args(); ++a)
        if (f.attackers_of(a).is_subset_of(reach)) result.insert(a);
    return result;
}

bool is_conflict_free(const ArgSet& s, const Framework& f) {
    return s.is_subset_of(neutrality(s, f));
}

bool is_self_defending(const ArgSet& s, const Framework& f) {
    return s.is_subset_of(defence(s, f));
}

bool is_admissible(const ArgSet& s, const Framework& f) {
    return is_conflict_free(s, f) && is_self_defending(s, f);
}

ArgSet unattacked(const Framework& f) { return defence(ArgSet(f.n_args()), f); }

ArgSet grounded(const Framework& f) {
    ArgSet current(f.n_args());
    for (;;) {
        ArgSet next = defence(current, f);
        if (next == current) return current;
        current = std::move(next);
    }
}

namespace {

enum class Lab : std::uint8_t { unset, in, out, undec };

// Backtracking enumeration of complete labellings. An argument is `in` iff
// all its attackers are `out`, and `out` iff some attacker is `in`;
// everything else is `undec`.
class LabellingSearch {
public:
    explicit LabellingSearch(const Framework& f) : f_(f), labels_(f.n_args(), Lab::unset) {}

    std::vector<ArgSet> run() {
        search();
        std::sort(results_.begin(), results_.end(), ArgSet::canonical_less);
        return std::move(results_);
    }

private:
    const Framework& f_;
    std::vector<Lab> labels_;
    std::vector<ArgSet> results_;

    // Applies all forced consequences; false on contradiction.
    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int a = 0; a < f_.n_args(); ++a) {
                int n_in = 0, n_out = 0, n_undec = 0;
                int last_unset = -1, n_unset = 0;
                for (int b : f_.attackers_of(a).members()) {
                    switch (labels_[b]) {
                        case Lab::in: ++n_in; break;
                        case Lab::out: ++n_out; break;
                        case Lab::undec: ++n_undec; break;
                        case Lab::unset:
                            ++n_unset;
                            last_unset = b;
                            break;
                    }
                }
                const int degree = n_in + n_out + n_undec + n_unset;
                switch (labels_[a]) {
                    case Lab::unset:
                        if (n_in > 0) {
                            labels_[a] = Lab::out;
                            changed = true;
                        } else if (n_out == degree) {
                            labels_[a] = Lab::in;
                            changed = true;
                        } else if (n_unset == 0) {
                            // no attacker is in, some attacker is undec
                            labels_[a] = Lab::undec;
                            changed = true;
                        }
                        break;
                    case Lab::in:
                        if (n_in > 0 || n_undec > 0) return false;
                        if (n_unset > 0) {
                            for (int b : f_.attackers_of(a).members()) {
                                if (labels_[b] == Lab::unset) labels_[b] = Lab::out;
                            }
                            changed = true;
                        }
                        break;
                    case Lab::out:
                        if (n_in == 0) {
                            if (n_unset == 0) return false;
                            if (n_unset == 1) {
                                labels_[last_unset] = Lab::in;
                                changed = true;
                            }
                        }
                        break;
                    case Lab::undec:
                        if (n_in > 0) return false;
                        if (n_undec == 0) {
                            if (n_unset == 0) return false;
                            if (n_unset == 1) {
                                labels_[last_unset] = Lab::undec;
                                changed = true;
                            }
                        }
                        break;
                }
            }
        }
        return true;
    }

    bool is_valid_total() const {
        for (int a = 0; a < f_.n_args(); ++a) {
            bool any_in = false, all_out = true;
            for (int b : f_.attackers_of(a).members()) {
                if (labels_[b] == Lab::in) any_in = true;
                if (labels_[b] != Lab::out) all_out = false;
            }
            const Lab expected = any_in ? Lab::out : (all_out ? Lab::in : Lab::undec);
            if (labels_[a] != expected) return false;
        }
        return true;
    }

    void search() {
        auto saved = labels_;
        if (!propagate()) {
            labels_ = std::move(saved);
            return;
        }
        int branch_arg = -1;
        for (int a = 0; a < f_.n_args(); ++a) {
            if (labels_[a] == Lab::unset) {
                branch_arg = a;
                break;
            }
        }
        if (branch_arg < 0) {
            if (is_valid_total()) {
                ArgSet in_set(f_.n_args());
                for (int a = 0; a < f_.n_args(); ++a)
                    if (labels_[a] == Lab::in) in_set.insert(a);
                results_.push_back(std::move(in_set));
            }
            labels_ = std::move(saved);
            return;
        }
        const auto after_propagation = labels_;
        for (Lab choice : {Lab::in, Lab::out, Lab::undec}) {
            labels_ = after_propagation;
            labels_[branch_arg] = choice;
            search();
        }
        labels_ = std::move(saved);
    }
};

void enforce_cap(const Framework& f, int enum_cap) {
    if (f.n_args() > enum_cap)
        throw TooLargeError("extension enumeration capped at " + std::to_string(enum_cap) +
                            " arguments (framework has " + std::to_string(f.n_args()) + ")");
}

} // namespace

std::vector<ArgSet> complete_extensions(const Framework& f, int enum_cap) {
    enforce_cap(f, enum_cap);
    return LabellingSearch(f).run();
}

std::vector<ArgSet> preferred_extensions(const Framework& f, int enum_cap) {
    const std::vector<ArgSet> complete = complete_extensions(f, enum_cap);
    std::vector<ArgSet> maximal;
    for (const ArgSet& s : complete) {
        bool dominated = false;
        for (const ArgSet& t : complete) {
            if (!(t == s) && s.is_subset_of(t)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) maximal.push_back(s);
    }
    return maximal;
}

std::vector<ArgSet> stable_extensions(const Framework& f, int enum_cap) {
    // Stable extensions are complete, so filtering the complete family by
    // n(S) = S is exact.
    const std::vector<ArgSet> complete = complete_extensions(f, enum_cap);
    std::vector<ArgSet> stable;
    for (const ArgSet& s : complete)
        if (neutrality(s, f) == s) stable.push_back(s);
    return stable;
}

bool is_well_founded(const Framework& f) {
    // Kahn's algorithm; leftovers mean a directed cycle.
    std::vector<int> in_degree(f.n_args(), 0);
    for (auto [from, to] : f.attacks()) {
        (void)from;
        ++in_degree[to];
    }
    std::vector<int> stack;
    for (int a = 0; a < f.n_args(); ++a)
        if (in_degree[a] == 0) stack.push_back(a);
    int removed = 0;
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        ++removed;
        for (int b : f.targets_of(a).members())
            if (--in_degree[b] == 0) stack.push_back(b);
    }
    return removed == f.n_args();
}

} // namespace coopgame
