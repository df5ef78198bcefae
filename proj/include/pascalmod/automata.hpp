#pragma once

/**
 * @file automata.hpp
 * @brief Automata over tuples of base-p digits.
 *
 * A Dfa reads words whose letters are d-tuples of digits (d = arity). The
 * tuple (c_0, ..., c_{d-1}) is encoded as the symbol index sum_j c_j p^j.
 * Every machine is complete: builders add an explicit sink where a letter
 * has no meaningful successor. Each machine records whether it reads
 * numbers most-significant digit first or least-significant digit first.
 *
 * Besides the concrete machines (the N_p pair acceptor, carry automata for
 * m -> a m + b, the Nim-sum triple acceptor, the alternating digit sum
 * acceptor) this header provides product, projection, reversal, Moore
 * minimization, exact language equivalence, the Cobham morphism of the
 * alternating-sum acceptor, and an exact rational linear representation of N.
 */

#include "basep.hpp"
#include "nim.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pascalmod {

enum class ReadDirection { MsdFirst, LsdFirst };

inline const char* to_string(ReadDirection d) { return d == ReadDirection::MsdFirst ? "msd-first" : "lsd-first"; }

using State = std::size_t;
using Symbol = std::size_t;

class Dfa {
public:
    Dfa(Prime p, std::size_t arity, std::size_t states, ReadDirection dir)
        : p_(p), arity_(arity), dir_(dir), alphabet_(1) {
        if (arity == 0) throw std::invalid_argument("Dfa: arity must be >= 1");
        for (std::size_t i = 0; i < arity; ++i) alphabet_ *= p;
        delta_.assign(states * alphabet_, 0);
        accepting_.assign(states, false);
    }

    Prime base() const noexcept { return p_; }
    std::size_t arity() const noexcept { return arity_; }
    ReadDirection direction() const noexcept { return dir_; }
    std::size_t alphabet_size() const noexcept { return alphabet_; }
    std::size_t state_count() const noexcept { return accepting_.size(); }

    State initial() const noexcept { return initial_; }
    void set_initial(State s) { initial_ = checked(s); }

    bool accepting(State s) const { return accepting_[checked(s)]; }
    void set_accepting(State s, bool a = true) { accepting_[checked(s)] = a; }

    State next(State s, Symbol a) const { return delta_[checked(s) * alphabet_ + a]; }
    void set_transition(State s, Symbol a, State to) {
        if (a >= alphabet_) throw std::out_of_range("Dfa: symbol out of range");
        delta_[checked(s) * alphabet_ + a] = checked(to);
    }

    Symbol encode(std::span<const Digit> tuple) const {
        if (tuple.size() != arity_) throw std::invalid_argument("Dfa: tuple arity mismatch");
        Symbol s = 0;
        for (std::size_t j = arity_; j-- > 0;) {
            if (tuple[j] >= p_) throw std::out_of_range("Dfa: digit out of range");
            s = s * p_ + tuple[j];
        }
        return s;
    }

    std::vector<Digit> decode(Symbol s) const {
        std::vector<Digit> t(arity_);
        for (std::size_t j = 0; j < arity_; ++j) {
            t[j] = static_cast<Digit>(s % p_);
            s /= p_;
        }
        return t;
    }

    /// States visited while reading `word`, starting with the initial state.
    std::vector<State> trace(std::span<const Symbol> word) const {
        std::vector<State> path{initial_};
        for (Symbol a : word) path.push_back(next(path.back(), a));
        return path;
    }

    State run(std::span<const Symbol> word) const {
        State s = initial_;
        for (Symbol a : word) s = next(s, a);
        return s;
    }

    bool accepts(std::span<const Symbol> word) const { return accepting_[run(word)]; }

    /// States from which no accepting state is reachable.
    std::vector<bool> dead_states() const {
        const std::size_t n = state_count();
        std::vector<std::vector<State>> preds(n);
        for (State s = 0; s < n; ++s) {
            for (Symbol a = 0; a < alphabet_; ++a) preds[next(s, a)].push_back(s);
        }
        std::vector<bool> live(n, false);
        std::queue<State> q;
        for (State s = 0; s < n; ++s) {
            if (accepting_[s]) {
                live[s] = true;
                q.push(s);
            }
        }
        while (!q.empty()) {
            const State s = q.front();
            q.pop();
            for (State r : preds[s]) {
                if (!live[r]) {
                    live[r] = true;
                    q.push(r);
                }
            }
        }
        std::vector<bool> dead(n);
        for (State s = 0; s < n; ++s) dead[s] = !live[s];
        return dead;
    }

    /// Number of states that can still reach acceptance.
    std::size_t live_state_count() const {
        const auto dead = dead_states();
        return static_cast<std::size_t>(std::count(dead.begin(), dead.end(), false));
    }

private:
    State checked(State s) const {
        if (s >= accepting_.size()) throw std::out_of_range("Dfa: state out of range");
        return s;
    }

    Prime p_;
    std::size_t arity_;
    ReadDirection dir_;
    std::size_t alphabet_;
    State initial_ = 0;
    std::vector<State> delta_;
    std::vector<bool> accepting_;
};

// ---------------------------------------------------------------------------
// Padded tuple words

/// d tracks of equal length, each most-significant digit first.
struct TupleWord {
    std::vector<std::vector<Digit>> tracks;

    std::size_t length() const noexcept { return tracks.empty() ? 0 : tracks.front().size(); }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t j = 0; j < tracks.size(); ++j) {
            if (j) out += ",";
            for (Digit d : tracks[j]) out += std::to_string(d);
        }
        return out + ")";
    }

    friend bool operator==(const TupleWord&, const TupleWord&) = default;
};

/// pad(rep(v_1), ..., rep(v_d)): left-pad every representation to the
/// longest one.
template <DigitInteger Int>
TupleWord pad_tuple(std::span<const Int> values, Prime p) {
    std::vector<DigitWord> reps;
    std::size_t len = 0;
    for (const auto& v : values) {
        reps.push_back(rep(v, p));
        len = std::max(len, reps.back().size());
    }
    TupleWord w;
    for (const auto& r : reps) {
        std::vector<Digit> track(len, 0);
        for (std::size_t i = 0; i < r.size(); ++i) track[len - 1 - i] = r[i];
        w.tracks.push_back(std::move(track));
    }
    return w;
}

template <DigitInteger Int>
TupleWord pad_pair(const Int& m, const Int& n, Prime p) {
    const Int vals[2] = {m, n};
    return pad_tuple<Int>(std::span<const Int>(vals, 2), p);
}

/// Symbol word for `dfa`, honouring its reading direction.
inline std::vector<Symbol> encode_word(const Dfa& dfa, const TupleWord& w) {
    if (w.tracks.size() != dfa.arity()) throw std::invalid_argument("encode_word: arity mismatch");
    std::vector<Symbol> out(w.length());
    std::vector<Digit> tuple(dfa.arity());
    for (std::size_t i = 0; i < w.length(); ++i) {
        for (std::size_t j = 0; j < dfa.arity(); ++j) tuple[j] = w.tracks[j][i];
        out[i] = dfa.encode(tuple);
    }
    if (dfa.direction() == ReadDirection::LsdFirst) std::reverse(out.begin(), out.end());
    return out;
}

template <DigitInteger Int>
bool accepts_values(const Dfa& dfa, std::span<const Int> values) {
    return dfa.accepts(encode_word(dfa, pad_tuple<Int>(values, dfa.base())));
}

template <DigitInteger Int>
bool accepts_pair(const Dfa& dfa, const Int& x, const Int& y) {
    const Int vals[2] = {x, y};
    return accepts_values<Int>(dfa, std::span<const Int>(vals, 2));
}

// ---------------------------------------------------------------------------
// Concrete machines

/// Pairs (m, N_p(m)), read most-significant first. State s is the digit of m
/// expected at the current position; reading (a, b) with a = s moves to the
/// next lower digit of m, which must be (b - a) mod p. State p is the sink.
inline Dfa pair_dfa_N(Prime p) {
    const Digit sink = p;
    Dfa d(p, 2, p + 1, ReadDirection::MsdFirst);
    for (Digit s = 0; s <= sink; ++s) {
        for (Digit a = 0; a < p; ++a) {
            for (Digit b = 0; b < p; ++b) {
                const Digit tuple[2] = {a, b};
                const State to = (s != sink && a == s) ? (b + p - a) % p : sink;
                d.set_transition(s, d.encode(tuple), to);
            }
        }
    }
    d.set_initial(0);
    d.set_accepting(0);
    return d;
}

/// Pairs (m, a m + b), read least-significant first. States are carries,
/// starting from carry b; the last state is the sink.
inline Dfa affine_dfa(std::uint64_t a, std::uint64_t b, Prime p) {
    std::map<std::uint64_t, State> index;
    std::vector<std::uint64_t> carries;
    std::queue<std::uint64_t> todo;
    auto intern = [&](std::uint64_t c) {
        auto [it, fresh] = index.emplace(c, carries.size());
        if (fresh) {
            carries.push_back(c);
            todo.push(c);
        }
        return it->second;
    };
    intern(b);
    std::vector<std::vector<std::pair<Digit, std::uint64_t>>> out;  // per state: (x -> next carry)
    while (!todo.empty()) {
        const std::uint64_t c = todo.front();
        todo.pop();
        for (Digit x = 0; x < p; ++x) intern((a * x + c) / p);
    }
    intern(0);

    const State sink = carries.size();
    Dfa d(p, 2, carries.size() + 1, ReadDirection::LsdFirst);
    for (State s = 0; s <= sink; ++s) {
        for (Digit x = 0; x < p; ++x) {
            for (Digit y = 0; y < p; ++y) {
                const Digit tuple[2] = {x, y};
                State to = sink;
                if (s != sink) {
                    const std::uint64_t v = a * x + carries[s];
                    if (v % p == y) to = index.at(v / p);
                }
                d.set_transition(s, d.encode(tuple), to);
            }
        }
    }
    d.set_initial(index.at(b));
    d.set_accepting(index.at(0));
    return d;
}

/// Triples (m, n, m (+)_p n): one looping state plus a sink.
inline Dfa nim_triple_dfa(Prime p) {
    Dfa d(p, 3, 2, ReadDirection::MsdFirst);
    for (Symbol s = 0; s < d.alphabet_size(); ++s) {
        const auto t = d.decode(s);
        d.set_transition(0, s, t[2] == (t[0] + t[1]) % p ? 0 : 1);
        d.set_transition(1, s, 1);
    }
    d.set_accepting(0);
    return d;
}

/// Index of the state (i, +) or (i, -) in altsum_dfa.
inline State altsum_state(Digit i, bool plus, Prime p) { return i + (plus ? 0 : p.value()); }

/// 2p states (i, sign); (i,+) --d--> (i+d, -), (i,-) --d--> (i-d, +).
/// Accepts rep_p(n) iff the alternating digit sum of n vanishes mod p.
inline Dfa altsum_dfa(Prime p) {
    Dfa d(p, 1, 2 * p.value(), ReadDirection::MsdFirst);
    for (Digit i = 0; i < p; ++i) {
        for (Digit digit = 0; digit < p; ++digit) {
            const Digit tuple[1] = {digit};
            const Symbol s = d.encode(tuple);
            d.set_transition(altsum_state(i, true, p), s, altsum_state((i + digit) % p, false, p));
            d.set_transition(altsum_state(i, false, p), s, altsum_state((i + p - digit) % p, true, p));
        }
    }
    d.set_initial(altsum_state(0, true, p));
    d.set_accepting(altsum_state(0, true, p));
    d.set_accepting(altsum_state(0, false, p));
    return d;
}

/// Pairs (x, y) with x != y, either direction.
inline Dfa inequality_dfa(Prime p, ReadDirection dir) {
    Dfa d(p, 2, 2, dir);
    for (Symbol s = 0; s < d.alphabet_size(); ++s) {
        const auto t = d.decode(s);
        d.set_transition(0, s, t[0] == t[1] ? 0 : 1);
        d.set_transition(1, s, 1);
    }
    d.set_accepting(1);
    return d;
}

// ---------------------------------------------------------------------------
// Minimization and comparison

struct MinimizeResult {
    Dfa dfa;
    /// Old state -> new state; unreachable states map to nullopt.
    std::vector<std::optional<State>> class_of;
};

/// Moore partition refinement on the reachable part. New states are numbered
/// in breadth-first order from the initial state, so equal languages give
/// identical machines.
inline MinimizeResult minimize_with_map(const Dfa& d) {
    const std::size_t n = d.state_count();
    const std::size_t k = d.alphabet_size();

    std::vector<bool> reach(n, false);
    std::vector<State> order;
    {
        std::queue<State> q;
        q.push(d.initial());
        reach[d.initial()] = true;
        while (!q.empty()) {
            const State s = q.front();
            q.pop();
            order.push_back(s);
            for (Symbol a = 0; a < k; ++a) {
                const State t = d.next(s, a);
                if (!reach[t]) {
                    reach[t] = true;
                    q.push(t);
                }
            }
        }
    }

    std::vector<std::size_t> block(n, 0);
    for (State s : order) block[s] = d.accepting(s) ? 1 : 0;
    std::size_t blocks = 0;
    for (;;) {
        std::map<std::vector<std::size_t>, std::size_t> sig_index;
        std::vector<std::size_t> next_block(n, 0);
        for (State s : order) {
            std::vector<std::size_t> sig;
            sig.reserve(k + 1);
            sig.push_back(block[s]);
            for (Symbol a = 0; a < k; ++a) sig.push_back(block[d.next(s, a)]);
            auto [it, fresh] = sig_index.emplace(std::move(sig), sig_index.size());
            next_block[s] = it->second;
        }
        const std::size_t count = sig_index.size();
        block = std::move(next_block);
        if (count == blocks) break;
        blocks = count;
    }

    // Renumber blocks breadth-first from the initial state.
    std::vector<std::optional<State>> renum(blocks);
    std::vector<State> rep_of;
    {
        std::queue<State> q;
        q.push(d.initial());
        renum[block[d.initial()]] = 0;
        rep_of.push_back(d.initial());
        while (!q.empty()) {
            const State s = q.front();
            q.pop();
            for (Symbol a = 0; a < k; ++a) {
                const State t = d.next(s, a);
                if (!renum[block[t]]) {
                    renum[block[t]] = rep_of.size();
                    rep_of.push_back(t);
                    q.push(t);
                }
            }
        }
    }

    Dfa out(d.base(), d.arity(), rep_of.size(), d.direction());
    for (State ns = 0; ns < rep_of.size(); ++ns) {
        const State old = rep_of[ns];
        out.set_accepting(ns, d.accepting(old));
        for (Symbol a = 0; a < k; ++a) out.set_transition(ns, a, *renum[block[d.next(old, a)]]);
    }
    out.set_initial(0);

    std::vector<std::optional<State>> class_of(n);
    for (State s : order) class_of[s] = renum[block[s]];
    return {std::move(out), std::move(class_of)};
}

inline Dfa minimize(const Dfa& d) { return minimize_with_map(d).dfa; }

/// Structural identity of two machines (same numbering).
inline bool identical(const Dfa& a, const Dfa& b) {
    if (a.base() != b.base() || a.arity() != b.arity() || a.direction() != b.direction() ||
        a.state_count() != b.state_count() || a.initial() != b.initial()) {
        return false;
    }
    for (State s = 0; s < a.state_count(); ++s) {
        if (a.accepting(s) != b.accepting(s)) return false;
        for (Symbol x = 0; x < a.alphabet_size(); ++x) {
            if (a.next(s, x) != b.next(s, x)) return false;
        }
    }
    return true;
}

/// Isomorphism of minimal machines: their breadth-first canonical forms
/// coincide.
inline bool isomorphic(const Dfa& a, const Dfa& b) { return identical(minimize(a), minimize(b)); }

/// Exact language equality by exploring the reachable product.
inline bool equivalent(const Dfa& a, const Dfa& b) {
    if (a.base() != b.base() || a.arity() != b.arity() || a.direction() != b.direction()) {
        throw std::invalid_argument("equivalent: incompatible machines");
    }
    std::vector<bool> seen(a.state_count() * b.state_count(), false);
    std::queue<std::pair<State, State>> q;
    q.emplace(a.initial(), b.initial());
    seen[a.initial() * b.state_count() + b.initial()] = true;
    while (!q.empty()) {
        const auto [s, t] = q.front();
        q.pop();
        if (a.accepting(s) != b.accepting(t)) return false;
        for (Symbol x = 0; x < a.alphabet_size(); ++x) {
            const State s2 = a.next(s, x);
            const State t2 = b.next(t, x);
            if (!seen[s2 * b.state_count() + t2]) {
                seen[s2 * b.state_count() + t2] = true;
                q.emplace(s2, t2);
            }
        }
    }
    return true;
}

/// True iff the machine accepts no word.
inline bool is_empty(const Dfa& d) { return d.dead_states()[d.initial()]; }

// ---------------------------------------------------------------------------
// Product, projection and reversal

namespace detail {

class SubsetIndex {
public:
    std::pair<State, bool> intern(std::vector<State> set) {
        auto [it, fresh] = index_.emplace(set, sets_.size());
        if (fresh) sets_.push_back(std::move(set));
        return {it->second, fresh};
    }
    const std::vector<State>& set(State s) const { return sets_[s]; }
    std::size_t size() const noexcept { return sets_.size(); }

private:
    std::map<std::vector<State>, State> index_;
    std::vector<std::vector<State>> sets_;
};

inline std::vector<State> normalized(std::vector<State> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

/// Builds a Dfa from a subset construction whose successor function and
/// acceptance test are supplied by the caller.
template <class Step, class Accept>
Dfa determinize(Prime p, std::size_t arity, ReadDirection dir, std::vector<State> start, Step step,
                Accept accept) {
    SubsetIndex idx;
    std::vector<std::vector<State>> delta;
    std::queue<State> q;
    idx.intern(normalized(std::move(start)));
    q.push(0);
    std::size_t alphabet = 1;
    for (std::size_t i = 0; i < arity; ++i) alphabet *= p;
    while (!q.empty()) {
        const State s = q.front();
        q.pop();
        if (delta.size() <= s) delta.resize(s + 1);
        delta[s].resize(alphabet);
        for (Symbol a = 0; a < alphabet; ++a) {
            auto [t, fresh] = idx.intern(normalized(step(idx.set(s), a)));
            delta[s][a] = t;
            if (fresh) q.push(t);
        }
    }
    Dfa out(p, arity, idx.size(), dir);
    for (State s = 0; s < idx.size(); ++s) {
        out.set_accepting(s, accept(idx.set(s)));
        for (Symbol a = 0; a < alphabet; ++a) out.set_transition(s, a, delta[s][a]);
    }
    out.set_initial(0);
    return out;
}

}  // namespace detail

/// Machine for the reversed language (reading direction flips).
inline Dfa reversed(const Dfa& d) {
    const std::size_t k = d.alphabet_size();
    std::vector<std::vector<std::vector<State>>> preds(d.state_count(), std::vector<std::vector<State>>(k));
    for (State s = 0; s < d.state_count(); ++s) {
        for (Symbol a = 0; a < k; ++a) preds[d.next(s, a)][a].push_back(s);
    }
    std::vector<State> start;
    for (State s = 0; s < d.state_count(); ++s) {
        if (d.accepting(s)) start.push_back(s);
    }
    const ReadDirection flipped =
        d.direction() == ReadDirection::MsdFirst ? ReadDirection::LsdFirst : ReadDirection::MsdFirst;
    return minimize(detail::determinize(
        d.base(), d.arity(), flipped, std::move(start),
        [&](const std::vector<State>& set, Symbol a) {
            std::vector<State> out;
            for (State s : set) out.insert(out.end(), preds[s][a].begin(), preds[s][a].end());
            return out;
        },
        [&](const std::vector<State>& set) {
            return std::binary_search(set.begin(), set.end(), d.initial());
        }));
}

/// Synchronized product: machine `a` reads tracks `a_tracks` and machine `b`
/// reads tracks `b_tracks` of an `arity`-track word; the result accepts when
/// both do.
inline Dfa join(const Dfa& a, const std::vector<std::size_t>& a_tracks, const Dfa& b,
                const std::vector<std::size_t>& b_tracks, std::size_t arity) {
    if (a.base() != b.base()) throw std::invalid_argument("join: base mismatch");
    if (a.direction() != b.direction()) throw std::invalid_argument("join: reading direction mismatch");
    if (a_tracks.size() != a.arity() || b_tracks.size() != b.arity()) {
        throw std::invalid_argument("join: track list does not match arity");
    }
    for (std::size_t t : a_tracks) {
        if (t >= arity) throw std::invalid_argument("join: track out of range");
    }
    for (std::size_t t : b_tracks) {
        if (t >= arity) throw std::invalid_argument("join: track out of range");
    }

    Dfa shape(a.base(), arity, 1, a.direction());
    const std::size_t k = shape.alphabet_size();
    std::vector<Symbol> to_a(k), to_b(k);
    std::vector<Digit> ta(a.arity()), tb(b.arity());
    for (Symbol s = 0; s < k; ++s) {
        const auto full = shape.decode(s);
        for (std::size_t j = 0; j < a_tracks.size(); ++j) ta[j] = full[a_tracks[j]];
        for (std::size_t j = 0; j < b_tracks.size(); ++j) tb[j] = full[b_tracks[j]];
        to_a[s] = a.encode(ta);
        to_b[s] = b.encode(tb);
    }

    std::map<std::pair<State, State>, State> index;
    std::vector<std::pair<State, State>> pairs;
    std::queue<State> q;
    auto intern = [&](std::pair<State, State> st) {
        auto [it, fresh] = index.emplace(st, pairs.size());
        if (fresh) {
            pairs.push_back(st);
            q.push(it->second);
        }
        return it->second;
    };
    intern({a.initial(), b.initial()});
    std::vector<std::vector<State>> delta;
    while (!q.empty()) {
        const State s = q.front();
        q.pop();
        if (delta.size() <= s) delta.resize(s + 1);
        delta[s].resize(k);
        const auto [sa, sb] = pairs[s];
        for (Symbol x = 0; x < k; ++x) delta[s][x] = intern({a.next(sa, to_a[x]), b.next(sb, to_b[x])});
    }
    Dfa out(a.base(), arity, pairs.size(), a.direction());
    for (State s = 0; s < pairs.size(); ++s) {
        out.set_accepting(s, a.accepting(pairs[s].first) && b.accepting(pairs[s].second));
        for (Symbol x = 0; x < k; ++x) out.set_transition(s, x, delta[s][x]);
    }
    return out;
}

/// Existential projection onto the tracks in `keep` (in that order).
/// Hidden tracks may be longer than the kept ones, so kept words are also
/// accepted when some zero-padded extension of them is.
inline Dfa project(const Dfa& d, const std::vector<std::size_t>& keep) {
    if (keep.empty()) throw std::invalid_argument("project: nothing to keep");
    for (std::size_t t : keep) {
        if (t >= d.arity()) throw std::invalid_argument("project: track out of range");
    }
    Dfa shape(d.base(), keep.size(), 1, d.direction());
    const std::size_t k = d.alphabet_size();
    std::vector<Symbol> kept_symbol(k);
    std::vector<bool> zero_on_kept(k);
    std::vector<Digit> tk(keep.size());
    for (Symbol s = 0; s < k; ++s) {
        const auto full = d.decode(s);
        bool zero = true;
        for (std::size_t j = 0; j < keep.size(); ++j) {
            tk[j] = full[keep[j]];
            zero = zero && tk[j] == 0;
        }
        kept_symbol[s] = shape.encode(tk);
        zero_on_kept[s] = zero;
    }

    // Closure of a state set under letters that are zero on every kept track.
    auto zero_closure = [&](std::vector<State> set) {
        std::vector<bool> in(d.state_count(), false);
        std::queue<State> q;
        for (State s : set) {
            if (!in[s]) {
                in[s] = true;
                q.push(s);
            }
        }
        while (!q.empty()) {
            const State s = q.front();
            q.pop();
            for (Symbol a = 0; a < k; ++a) {
                if (!zero_on_kept[a]) continue;
                const State t = d.next(s, a);
                if (!in[t]) {
                    in[t] = true;
                    q.push(t);
                }
            }
        }
        std::vector<State> out;
        for (State s = 0; s < d.state_count(); ++s) {
            if (in[s]) out.push_back(s);
        }
        return out;
    };

    std::vector<bool> accept_after_zeros(d.state_count(), false);
    if (d.direction() == ReadDirection::LsdFirst) {
        for (State s = 0; s < d.state_count(); ++s) {
            for (State t : zero_closure({s})) {
                if (d.accepting(t)) {
                    accept_after_zeros[s] = true;
                    break;
                }
            }
        }
    } else {
        for (State s = 0; s < d.state_count(); ++s) accept_after_zeros[s] = d.accepting(s);
    }

    std::vector<State> start{d.initial()};
    if (d.direction() == ReadDirection::MsdFirst) start = zero_closure(start);

    return minimize(detail::determinize(
        d.base(), keep.size(), d.direction(), std::move(start),
        [&](const std::vector<State>& set, Symbol kept) {
            std::vector<State> out;
            for (State s : set) {
                for (Symbol a = 0; a < k; ++a) {
                    if (kept_symbol[a] == kept) out.push_back(d.next(s, a));
                }
            }
            return out;
        },
        [&](const std::vector<State>& set) {
            return std::any_of(set.begin(), set.end(), [&](State s) { return accept_after_zeros[s]; });
        }));
}

/// True iff the binary relation accepted by `rel` is the graph of a partial
/// function of its first track: no x is related to two distinct y.
inline bool is_functional(const Dfa& rel) {
    if (rel.arity() != 2) throw std::invalid_argument("is_functional: binary relation expected");
    const Dfa both = join(rel, {0, 1}, rel, {0, 2}, 3);
    const Dfa differ = join(both, {0, 1, 2}, inequality_dfa(rel.base(), rel.direction()), {1, 2}, 3);
    return is_empty(differ);
}

/// {(x, z) : exists y, (x, y) in rel1 and (y, z) in rel2}.
inline Dfa compose_synchronized(const Dfa& rel1, const Dfa& rel2) {
    if (rel1.arity() != 2 || rel2.arity() != 2) throw std::invalid_argument("compose: binary relations expected");
    if (rel1.base() != rel2.base()) throw std::invalid_argument("compose: base mismatch");
    const Dfa r2 = rel2.direction() == rel1.direction() ? rel2 : reversed(rel2);
    return project(join(rel1, {0, 1}, r2, {1, 2}, 3), {0, 2});
}

/// The pair acceptor for N_p obtained by composition: (m, p m) from the
/// carry automaton joined with the Nim-sum triple (m, p m, m (+)_p p m),
/// the middle track projected away.
inline Dfa pair_dfa_N_by_composition(Prime p) {
    const Dfa times_p = reversed(affine_dfa(p, 0, p));
    return project(join(times_p, {0, 1}, nim_triple_dfa(p), {0, 1, 2}, 3), {0, 2});
}

/// Graphviz text. Transitions into dead states are omitted.
inline std::string to_dot(const Dfa& d, const std::string& name = "dfa") {
    std::ostringstream os;
    const auto dead = d.dead_states();
    os << "digraph " << name << " {\n";
    os << "  // reading direction: " << to_string(d.direction()) << "\n";
    os << "  // base " << d.base().value() << ", arity " << d.arity() << "\n";
    os << "  rankdir=LR;\n";
    os << "  init [shape=point];\n";
    for (State s = 0; s < d.state_count(); ++s) {
        if (dead[s]) continue;
        os << "  s" << s << " [label=\"" << s << "\", shape=" << (d.accepting(s) ? "doublecircle" : "circle")
           << "];\n";
    }
    os << "  init -> s" << d.initial() << ";\n";
    for (State s = 0; s < d.state_count(); ++s) {
        if (dead[s]) continue;
        for (Symbol a = 0; a < d.alphabet_size(); ++a) {
            const State t = d.next(s, a);
            if (dead[t]) continue;
            const auto tuple = d.decode(a);
            std::string label;
            for (std::size_t j = 0; j < tuple.size(); ++j) {
                if (j) label += "/";
                label += std::to_string(tuple[j]);
            }
            os << "  s" << s << " -> s" << t << " [label=\"" << label << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Uniform morphism and coding for the characteristic sequence of E_p

struct UniformMorphism {
    Prime p{2};
    std::vector<std::vector<Digit>> images;  // images[j] has length p
    std::vector<Digit> coding;               // symbol -> {0, 1}

    std::vector<Digit> apply(std::span<const Digit> word) const {
        std::vector<Digit> out;
        out.reserve(word.size() * p);
        for (Digit s : word) out.insert(out.end(), images.at(s).begin(), images.at(s).end());
        return out;
    }
};

/// phi(j)[d] = (p - j - d) mod p, tau(0) = 1 and tau(j) = 0 otherwise.
inline UniformMorphism cobham_morphism(Prime p) {
    UniformMorphism m{p, {}, {}};
    for (Digit j = 0; j < p; ++j) {
        std::vector<Digit> img(p);
        for (Digit d = 0; d < p; ++d) img[d] = (2 * p.value() - j - d) % p;
        m.images.push_back(std::move(img));
        m.coding.push_back(j == 0 ? 1 : 0);
    }
    return m;
}

/// Morphism read off a complete most-significant-first unary machine:
/// state s maps to its successors on digits 0..p-1, coded by acceptance.
/// A fixed point starting at the initial state exists when the initial state
/// loops on 0.
inline UniformMorphism morphism_from_dfa(const Dfa& d) {
    if (d.arity() != 1 || d.direction() != ReadDirection::MsdFirst) {
        throw std::invalid_argument("morphism_from_dfa: unary msd-first machine expected");
    }
    UniformMorphism m{d.base(), {}, {}};
    for (State s = 0; s < d.state_count(); ++s) {
        std::vector<Digit> img(d.base());
        for (Digit digit = 0; digit < d.base(); ++digit) {
            const Digit t[1] = {digit};
            img[digit] = static_cast<Digit>(d.next(s, d.encode(t)));
        }
        m.images.push_back(std::move(img));
        m.coding.push_back(d.accepting(s) ? 1 : 0);
    }
    return m;
}

/// Prefix of the fixed point of `m` that starts with symbol 0.
inline std::vector<Digit> fixed_point_prefix(const UniformMorphism& m, std::size_t length) {
    if (m.images.empty() || m.images[0].empty() || m.images[0][0] != 0) {
        throw std::invalid_argument("fixed_point_prefix: morphism is not prolongable on 0");
    }
    std::vector<Digit> w{0};
    while (w.size() < length) {
        auto next = m.apply(w);
        if (next.size() <= w.size()) throw std::logic_error("fixed_point_prefix: morphism does not grow");
        w = std::move(next);
    }
    w.resize(length);
    return w;
}

// ---------------------------------------------------------------------------
// Linear representation of N (p = 2)

using RationalMatrix = std::vector<std::vector<Rational>>;

struct LinearRep {
    std::vector<Rational> lambda;
    std::vector<RationalMatrix> mats;  // one per digit
    std::vector<Rational> nu;

    std::size_t dimension() const noexcept { return lambda.size(); }

    void validate() const {
        const std::size_t n = lambda.size();
        if (nu.size() != n) throw std::invalid_argument("LinearRep: nu has wrong dimension");
        for (const auto& m : mats) {
            if (m.size() != n) throw std::invalid_argument("LinearRep: matrix has wrong row count");
            for (const auto& r : m) {
                if (r.size() != n) throw std::invalid_argument("LinearRep: matrix has wrong column count");
            }
        }
    }
};

inline LinearRep linear_rep_N() {
    using R = Rational;
    LinearRep r;
    r.lambda = {R(1), R(0), R(0)};
    r.mats.push_back({{R(2), R(0), R(0)}, {R(0), R(0), R(1)}, {R(4), R(0), R(1)}});
    r.mats.push_back({{R(0), R(1), R(0)}, {R(4, 3), R(2), R(-1, 3)}, {R(-4), R(4), R(1)}});
    r.nu = {R(0), R(3), R(3)};
    r.validate();
    return r;
}

/// lambda * mu(m_0) * mu(m_1) * ... * nu, digits of m least significant
/// first. Throws if the result is not an integer.
template <DigitInteger Int>
BigInt eval_linear_rep(const LinearRep& r, Int m) {
    const std::size_t n = r.dimension();
    const Digit base = static_cast<Digit>(r.mats.size());
    std::vector<Rational> v = r.lambda;
    while (!is_zero(m)) {
        const auto& mat = r.mats.at(small_mod(m, base));
        std::vector<Rational> w(n);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i) w[j] += v[i] * mat[i][j];
        }
        v = std::move(w);
        m /= base;
    }
    Rational result = 0;
    for (std::size_t i = 0; i < n; ++i) result += v[i] * r.nu[i];
    if (boost::multiprecision::denominator(result) != 1) {
        throw std::logic_error("linear representation produced a non-integer value");
    }
    return boost::multiprecision::numerator(result);
}

/// Integer-only evaluation with 3 mu(1) in place of mu(1) and a power of
/// three divided out at the end.
template <DigitInteger Int>
BigInt eval_N_scaled(Int m) {
    static const BigInt mu0[3][3] = {{2, 0, 0}, {0, 0, 1}, {4, 0, 1}};
    static const BigInt mu1x3[3][3] = {{0, 3, 0}, {4, 6, -1}, {-12, 12, 3}};
    std::vector<BigInt> v = {1, 0, 0};
    BigInt scale = 1;
    while (!is_zero(m)) {
        const bool one = small_mod(m, 2) == 1;
        const auto& mat = one ? mu1x3 : mu0;
        std::vector<BigInt> w(3);
        for (std::size_t j = 0; j < 3; ++j) {
            for (std::size_t i = 0; i < 3; ++i) w[j] += v[i] * mat[i][j];
        }
        v = std::move(w);
        if (one) scale *= 3;
        m /= 2U;
    }
    const BigInt total = v[1] * 3 + v[2] * 3;
    if (total % scale != 0) throw std::logic_error("scaled linear representation is not integral");
    return total / scale;
}

}  // namespace pascalmod
