#include "ofsign/factorization_sum.hpp"

#include <bit>
#include <cstdint>
#include <future>
#include <string>
#include <thread>
#include <unordered_map>

#include "ofsign/matching_sign.hpp"

namespace ofsign {

namespace {

constexpr int kMaxOrder = 64;

using Mask = std::uint64_t;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }

struct Overflow {};

/// int64 accumulator that reports overflow instead of wrapping.
struct CheckedInt {
    std::int64_t value = 0;

    CheckedInt& operator+=(CheckedInt other) {
        if (__builtin_add_overflow(value, other.value, &value)) throw Overflow{};
        return *this;
    }
    CheckedInt& operator-=(CheckedInt other) {
        if (__builtin_sub_overflow(value, other.value, &value)) throw Overflow{};
        return *this;
    }
};

BigInt to_big(const CheckedInt& x) { return BigInt(static_cast<long>(x.value)); }
BigInt to_big(const BigInt& x) { return x; }

bool is_nonzero(const CheckedInt& x) { return x.value != 0; }
bool is_nonzero(const BigInt& x) { return x != 0; }

template <class Int>
struct Subtotal {
    Int count{};
    Int sum{};
};

template <class Int>
Int one() {
    if constexpr (std::is_same_v<Int, CheckedInt>) {
        return CheckedInt{1};
    } else {
        return Int(1);
    }
}

enum class Mode { Signed, CountOnly, FirstOnly };

struct MaskVectorHash {
    std::size_t operator()(const std::vector<Mask>& v) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (Mask m : v) {
            h ^= m + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

/// Remaining successor adjacency (bitmasks), one unmatched list per factor
/// depth, and the index of the factor under construction.
template <class Int>
class Engine {
public:
    Engine(const Graph& g, int k, Mode mode, std::size_t memo_capacity = 0)
        : mode_(mode), succ_(g.order(), 0), memo_capacity_(mode == Mode::FirstOnly ? 0 : memo_capacity) {
        for (const Edge& e : g.edges()) succ_[e.u] |= bit(e.v);
        lists_.reserve(k + 1);
        for (int i = 0; i <= k; ++i) lists_.emplace_back(g.order());
    }

    Subtotal<Int> run() { return next_step(); }

    /// Splits the search at the partner choice of the second vertex to be
    /// matched in the first factor. Branch totals add up to run().
    struct Split {
        int first_sign = 1;
        Vertex first_partner = -1;
        Vertex second = -1;
        std::vector<Vertex> second_partners;
    };

    Split split() const {
        Split s;
        if (succ_.empty() || succ_[0] == 0) return s;
        s.first_partner = std::countr_zero(succ_[0]);
        s.first_sign = (s.first_partner - 1) % 2 ? -1 : 1;
        s.second = s.first_partner == 1 ? 2 : 1;
        if (s.second >= static_cast<int>(succ_.size())) return s;
        for (Mask m = succ_[s.second] & ~bit(s.first_partner); m; m &= m - 1) {
            s.second_partners.push_back(std::countr_zero(m));
        }
        return s;
    }

    /// Total of the subtree where the first factor starts with edges
    /// {0, first_partner} and {second, partner}, *without* the sign of {0, first_partner}.
    Subtotal<Int> run_branch(const Split& s, Vertex partner) {
        depth_ = 0;
        UnmatchedList& list = lists_[0];
        list.reset();
        list.splice_out(0);
        list.splice_out(s.first_partner);
        succ_[0] &= ~bit(s.first_partner);
        Subtotal<Int> out = match_from(s.second, bit(partner));
        succ_[0] |= bit(s.first_partner);
        list.reset();
        depth_ = -1;
        return out;
    }

private:
    Subtotal<Int> next_step() {
        if (depth_ >= 0) {
            const UnmatchedList& list = lists_[depth_];
            if (!list.empty()) {
                const Vertex to_match = list.first();
                return match_from(to_match, succ_[to_match]);
            }
        }
        // Between factors. Regularity means vertex 0 runs out of edges exactly
        // when the whole graph has.
        if (succ_.empty() || succ_[0] == 0) return {one<Int>(), one<Int>()};
        if (memo_capacity_ > 0) {
            if (const auto hit = memo_.find(succ_); hit != memo_.end()) return hit->second;
        }
        ++depth_;
        lists_[depth_].reset();
        // Only the first remaining edge at vertex 0 seeds the new factor.
        Subtotal<Int> out = match_from(0, succ_[0] & (~succ_[0] + 1));
        --depth_;
        if (memo_.size() < memo_capacity_) memo_.emplace(succ_, out);
        return out;
    }

    Subtotal<Int> match_from(Vertex to_match, Mask candidates) {
        UnmatchedList& list = lists_[depth_];
        list.splice_out(to_match);
        Vertex um = list.next(to_match);
        int sign = 1;
        Subtotal<Int> total;
        for (Mask m = candidates; m; m &= m - 1) {
            const Vertex nbr = std::countr_zero(m);
            while (um < nbr) {  // um is bridged by {to_match, nbr}
                sign = -sign;
                um = list.next(um);
            }
            if (um != nbr) continue;  // nbr already matched in this factor
            succ_[to_match] &= ~bit(nbr);
            list.splice_out(nbr);
            const Subtotal<Int> child = next_step();
            list.splice_in(nbr);
            succ_[to_match] |= bit(nbr);
            total.count += child.count;
            if (mode_ == Mode::Signed) {
                if (sign > 0) {
                    total.sum += child.sum;
                } else {
                    total.sum -= child.sum;
                }
            }
            if (mode_ == Mode::FirstOnly && is_nonzero(total.count)) break;
        }
        list.splice_in(to_match);
        return total;
    }

    Mode mode_;
    std::vector<Mask> succ_;
    std::vector<UnmatchedList> lists_;
    int depth_ = -1;
    std::size_t memo_capacity_;
    std::unordered_map<std::vector<Mask>, Subtotal<Int>, MaskVectorHash> memo_;
};

template <class Int>
SignSumResult run_engine(const Graph& g, int k, const SumOptions& options) {
    const Mode mode = options.count_only ? Mode::CountOnly : Mode::Signed;
    const std::size_t capacity = options.memoize ? options.memo_capacity : 0;
    if (options.jobs <= 1) {
        Engine<Int> engine(g, k, mode, capacity);
        const Subtotal<Int> r = engine.run();
        return {to_big(r.count), to_big(r.sum)};
    }

    const auto split = Engine<Int>(g, k, mode).split();
    if (split.second_partners.empty()) {
        Engine<Int> engine(g, k, mode, capacity);
        const Subtotal<Int> r = engine.run();
        return {to_big(r.count), to_big(r.sum)};
    }

    // Branches are dealt round-robin to workers; each worker owns its engine.
    const std::size_t n_branches = split.second_partners.size();
    const std::size_t workers = std::min<std::size_t>(options.jobs, n_branches);
    std::vector<std::future<SignSumResult>> futures;
    for (std::size_t w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w] {
            Engine<Int> engine(g, k, mode, capacity);
            SignSumResult acc;
            for (std::size_t b = w; b < n_branches; b += workers) {
                const Subtotal<Int> r = engine.run_branch(split, split.second_partners[b]);
                acc.factorization_count += to_big(r.count);
                acc.signed_sum += to_big(r.sum);
            }
            return acc;
        }));
    }
    SignSumResult out;
    std::exception_ptr failure;
    for (auto& f : futures) {
        try {
            const SignSumResult part = f.get();
            out.factorization_count += part.factorization_count;
            out.signed_sum += part.signed_sum;
        } catch (...) {
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    out.signed_sum *= split.first_sign;
    return out;
}

int validated_degree(const Graph& g) {
    const int k = validate_regular_even(g);
    if (g.order() > kMaxOrder) {
        throw GraphError(GraphError::Kind::TooLarge,
                         "graph has " + std::to_string(g.order()) + " vertices; at most 64 are supported");
    }
    return k;
}

}  // namespace

SignSumResult weighted_sum(const Graph& g, const SumOptions& options) {
    const int k = validated_degree(g);
    if (options.force_bigint) return run_engine<BigInt>(g, k, options);
    try {
        return run_engine<CheckedInt>(g, k, options);
    } catch (const Overflow&) {
        return run_engine<BigInt>(g, k, options);
    }
}

bool is_one_factorable(const Graph& g) {
    const int k = validated_degree(g);
    Engine<CheckedInt> engine(g, k, Mode::FirstOnly);
    return is_nonzero(engine.run().count);
}

namespace {

/// Same recursion as Engine, but keeps the edges and per-edge signs so each
/// factorization can be reported.
class Enumerator {
public:
    Enumerator(const Graph& g, int k, const FactorizationVisitor& visit)
        : visit_(visit), succ_(g.order(), 0), factors_(k) {
        for (const Edge& e : g.edges()) succ_[e.u] |= bit(e.v);
        for (int i = 0; i <= k; ++i) lists_.emplace_back(g.order());
    }

    void run() { next_step(1); }

private:
    void next_step(int sign_so_far) {
        if (depth_ >= 0 && !lists_[depth_].empty()) {
            const Vertex to_match = lists_[depth_].first();
            match_from(to_match, succ_[to_match], sign_so_far);
            return;
        }
        if (succ_.empty() || succ_[0] == 0) {
            visit_(std::span<const std::vector<Edge>>(factors_.data(), static_cast<std::size_t>(depth_ + 1)),
                   sign_so_far);
            return;
        }
        ++depth_;
        lists_[depth_].reset();
        factors_[depth_].clear();
        match_from(0, succ_[0] & (~succ_[0] + 1), sign_so_far);
        --depth_;
    }

    void match_from(Vertex to_match, Mask candidates, int sign_so_far) {
        UnmatchedList& list = lists_[depth_];
        for (Mask m = candidates; m; m &= m - 1) {
            const Vertex nbr = std::countr_zero(m);
            if (!list.contains(nbr)) continue;
            const int sign = list.incremental_edge_sign({to_match, nbr});
            succ_[to_match] &= ~bit(nbr);
            list.remove_pair(to_match, nbr);
            factors_[depth_].push_back({to_match, nbr});
            next_step(sign_so_far * sign);
            factors_[depth_].pop_back();
            list.restore_pair(to_match, nbr);
            succ_[to_match] |= bit(nbr);
        }
    }

    const FactorizationVisitor& visit_;
    std::vector<Mask> succ_;
    std::vector<UnmatchedList> lists_;
    std::vector<std::vector<Edge>> factors_;
    int depth_ = -1;
};

}  // namespace

void enumerate_factorizations(const Graph& g, const FactorizationVisitor& visit) {
    const int k = validated_degree(g);
    Enumerator(g, k, visit).run();
}

}  // namespace ofsign
