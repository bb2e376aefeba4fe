#include "hfp/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <exception>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "hfp/circulant.hpp"

namespace hfp {

namespace {

constexpr std::size_t kMaxOrder = 60;
constexpr unsigned kDefaultBudgetLog2Unpruned = 24;
constexpr unsigned kDefaultBudgetLog2Pruned = 34;
constexpr std::uint64_t kCheckpointInterval = 1ull << 20;

// Single-word fast path; the candidate's bit k is coordinate k+1.
bool verify_bits(std::uint64_t row, std::size_t order) {
    const std::uint64_t mask = (order == 64) ? ~0ull : (1ull << order) - 1;
    const std::size_t half = order / 2;
    for (std::size_t i = 1; i <= half; ++i) {
        const std::uint64_t rot = ((row << i) | (row >> (order - i))) & mask;
        if (static_cast<std::size_t>(std::popcount(row ^ rot)) != half) return false;
    }
    return true;
}

std::vector<unsigned> admissible_weights(const SearchSpec& spec) {
    // No pruning: an empty list means "all weights" to the enumerator, so the
    // caller distinguishes by prune level, not by this list.
    const std::size_t n = spec.order / 4;
    if (spec.prune == PruneLevel::weight_and_turyn && !turyn_feasible(spec.order)) return {};
    std::size_t r = 0;
    while (r * r < n) ++r;
    if (r * r != n) return {};  // column weights 2n +- sqrt(n) need a square n
    const std::size_t half = spec.order / 2;
    return {static_cast<unsigned>(half - r), static_cast<unsigned>(half + r)};
}

std::uint64_t binomial(unsigned n, unsigned k) {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, 65>, 65> t{};
        for (unsigned i = 0; i <= 64; ++i) {
            t[i][0] = 1;
            for (unsigned j = 1; j <= i; ++j)
                t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
        }
        return t;
    }();
    if (k > n) return 0;
    return table[n][k];
}

// Number of x in [0, v) with popcount w, scanning the bits of v from the top.
std::uint64_t count_with_weight_below(std::uint64_t v, unsigned w, std::size_t nbits) {
    std::uint64_t count = 0;
    unsigned ones = 0;
    for (std::size_t p = nbits; p-- > 0;) {
        if ((v >> p) & 1) {
            if (w >= ones && w - ones <= p) count += binomial(static_cast<unsigned>(p), w - ones);
            ++ones;
        }
    }
    return count;
}

// Smallest x >= lo with popcount w and x < 2^nbits. All x > lo agree with lo
// above some position p where x has a one and lo a zero; scanning p upward
// and filling the remaining ones at the bottom yields the minimum.
std::optional<std::uint64_t> next_ge_with_weight(std::uint64_t lo, unsigned w, std::size_t nbits) {
    if (nbits < 64 && lo >= (1ull << nbits)) return std::nullopt;
    if (static_cast<unsigned>(std::popcount(lo)) == w) return lo;
    for (std::size_t p = 0; p < nbits; ++p) {
        if ((lo >> p) & 1) continue;
        const unsigned ones_above = static_cast<unsigned>(std::popcount(lo >> (p + 1)));
        if (ones_above + 1 > w) continue;
        const unsigned rem = w - ones_above - 1;
        if (rem > p) continue;
        const std::uint64_t high = (p + 1 < 64) ? (lo >> (p + 1)) << (p + 1) : 0;
        const std::uint64_t low = (rem == 0) ? 0 : (1ull << rem) - 1;
        return high | (1ull << p) | low;
    }
    return std::nullopt;
}

std::uint64_t gosper_next(std::uint64_t v) {
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

struct CheckpointState {
    std::uint64_t cursor = 0;
    std::vector<std::uint64_t> hits;
};

CheckpointState read_checkpoint(const std::string& path, std::size_t order) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("checkpoint file cannot be opened: " + path);
    CheckpointState state;
    std::string line;
    bool saw_order = false, saw_cursor = false;
    while (std::getline(in, line)) {
        if (line.starts_with("order=")) {
            if (std::stoull(line.substr(6)) != order)
                throw std::invalid_argument("checkpoint order does not match the search order");
            saw_order = true;
        } else if (line.starts_with("cursor=")) {
            state.cursor = std::stoull(line.substr(7));
            saw_cursor = true;
        } else if (line.starts_with("hits=")) {
            std::stringstream ss(line.substr(5));
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item.empty()) continue;
                if (item.size() != order)
                    throw std::invalid_argument("checkpoint hit has the wrong length");
                state.hits.push_back(BitVector::from_string(item).low_word());
            }
        }
    }
    if (!saw_order || !saw_cursor) throw std::invalid_argument("checkpoint file is malformed");
    return state;
}

void write_checkpoint(const std::string& path, std::size_t order, std::uint64_t cursor,
                      const std::vector<std::uint64_t>& hits) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint file: " + path);
        out << "order=" << order << '\n';
        out << "cursor=" << cursor << '\n';
        out << "hits=";
        for (std::size_t i = 0; i < hits.size(); ++i) {
            if (i != 0) out << ',';
            out << BitVector::from_bits(hits[i], order).to_string();
        }
        out << '\n';
    }
    std::filesystem::rename(tmp, path);
}

void validate(const SearchSpec& spec) {
    if (spec.order == 0 || spec.order % 4 != 0)
        throw std::invalid_argument("search order must be a positive multiple of 4");
    if (spec.order > kMaxOrder) throw std::invalid_argument("search order is limited to 60");
    if (spec.worker_count == 0 || spec.worker_index >= spec.worker_count)
        throw std::invalid_argument("worker index must be below the worker count");
}

std::uint64_t global_candidate_count(const SearchSpec& spec) {
    if (spec.prune == PruneLevel::none) return 1ull << spec.order;
    std::uint64_t total = 0;
    for (unsigned w : admissible_weights(spec)) total += binomial(static_cast<unsigned>(spec.order), w);
    return total;
}

}  // namespace

bool verify_candidate(const BitVector& row) {
    if (row.length() == 0 || row.length() % 4 != 0)
        throw std::invalid_argument("candidate length must be a positive multiple of 4");
    return circulant_is_hadamard(row);
}

BitVector canonical_shift_representative(const BitVector& row) {
    BitVector best = row;
    for (std::size_t i = 1; i < row.length(); ++i) {
        BitVector shifted = row.rotated(static_cast<long>(i));
        if (shifted < best) best = shifted;
    }
    return best;
}

SearchResult run_search(const SearchSpec& spec) { return run_search(spec, CheckpointOptions{}); }

SearchResult run_search(const SearchSpec& spec, const CheckpointOptions& checkpoint) {
    validate(spec);
    const std::size_t order = spec.order;

    const unsigned budget = spec.budget_log2.value_or(
        spec.prune == PruneLevel::none ? kDefaultBudgetLog2Unpruned : kDefaultBudgetLog2Pruned);
    const std::uint64_t total = global_candidate_count(spec);
    if (budget < 64 && total > (1ull << budget)) {
        std::ostringstream msg;
        msg << "search budget exceeded: " << total << " candidates over the 2^" << budget
            << " budget (raise HFP_BUDGET_LOG2 or prune)";
        throw BudgetExceededError(msg.str());
    }

    // This worker's contiguous slice of the value space.
    const unsigned __int128 space = static_cast<unsigned __int128>(1) << order;
    const std::uint64_t lo =
        static_cast<std::uint64_t>(space * spec.worker_index / spec.worker_count);
    const std::uint64_t hi =
        static_cast<std::uint64_t>(space * (spec.worker_index + 1) / spec.worker_count);

    const std::vector<unsigned> weights = admissible_weights(spec);
    const bool pruned = spec.prune != PruneLevel::none;

    std::uint64_t cursor = lo;
    std::vector<std::uint64_t> hit_bits;
    std::uint64_t tested = 0;
    std::string notes;

    const bool use_checkpoint = !checkpoint.path.empty();
    if (use_checkpoint && checkpoint.resume && std::filesystem::exists(checkpoint.path)) {
        CheckpointState state = read_checkpoint(checkpoint.path, order);
        cursor = std::clamp(state.cursor, lo, hi);
        hit_bits = std::move(state.hits);
        if (!pruned) {
            tested = cursor - lo;
        } else {
            for (unsigned w : weights)
                tested += count_with_weight_below(cursor, w, order) -
                          count_with_weight_below(lo, w, order);
        }
        notes += "resumed at cursor " + std::to_string(cursor) + "; ";
    }

    std::uint64_t since_checkpoint = 0;
    bool limit_hit = false;
    const auto consume = [&](std::uint64_t value) -> bool {
        ++tested;
        if (verify_bits(value, order)) hit_bits.push_back(value);
        cursor = value + 1;
        if (use_checkpoint && ++since_checkpoint >= kCheckpointInterval) {
            write_checkpoint(checkpoint.path, order, cursor, hit_bits);
            since_checkpoint = 0;
        }
        if (spec.limit && tested >= *spec.limit) {
            limit_hit = true;
            return false;
        }
        return true;
    };

    if (!pruned) {
        for (std::uint64_t c = cursor; c < hi; ++c)
            if (!consume(c)) break;
    } else {
        // Merge the per-weight ascending streams so candidates are visited in
        // plain value order and a single cursor describes the progress.
        std::vector<std::optional<std::uint64_t>> next(weights.size());
        for (std::size_t k = 0; k < weights.size(); ++k) {
            next[k] = next_ge_with_weight(cursor, weights[k], order);
            if (next[k] && *next[k] >= hi) next[k] = std::nullopt;
        }
        while (true) {
            std::size_t best = weights.size();
            for (std::size_t k = 0; k < weights.size(); ++k)
                if (next[k] && (best == weights.size() || *next[k] < *next[best])) best = k;
            if (best == weights.size()) break;
            const std::uint64_t value = *next[best];
            const std::uint64_t advanced = gosper_next(value);
            next[best] = (advanced < hi && advanced >> order == 0)
                             ? std::optional<std::uint64_t>(advanced)
                             : std::nullopt;
            if (!consume(value)) break;
        }
    }

    if (use_checkpoint) write_checkpoint(checkpoint.path, order, cursor, hit_bits);

    SearchResult result;
    result.candidates_tested = tested;
    result.hits.reserve(hit_bits.size());
    for (std::uint64_t h : hit_bits) result.hits.push_back(BitVector::from_bits(h, order));
    std::sort(result.hits.begin(), result.hits.end());
    result.hits.erase(std::unique(result.hits.begin(), result.hits.end()), result.hits.end());

    std::vector<BitVector> classes;
    for (const BitVector& h : result.hits) classes.push_back(canonical_shift_representative(h));
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    result.shift_complement_classes = std::move(classes);

    notes += limit_hit ? "stopped at the candidate limit" : "complete";
    if (spec.worker_count > 1)
        notes += "; worker " + std::to_string(spec.worker_index) + "/" +
                 std::to_string(spec.worker_count);
    result.wall_notes = std::move(notes);
    return result;
}

SearchResult run_search_parallel(const SearchSpec& spec, unsigned jobs) {
    if (jobs <= 1) return run_search(spec);
    validate(spec);
    if (spec.worker_count != 1)
        throw std::invalid_argument("parallel driver expects an unpartitioned spec");

    std::vector<SearchResult> partial(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
        threads.emplace_back([&, w] {
            try {
                SearchSpec sub = spec;
                sub.worker_index = w;
                sub.worker_count = jobs;
                partial[w] = run_search(sub);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    SearchResult merged;
    for (SearchResult& p : partial) {
        merged.candidates_tested += p.candidates_tested;
        merged.hits.insert(merged.hits.end(), p.hits.begin(), p.hits.end());
    }
    std::sort(merged.hits.begin(), merged.hits.end());
    merged.hits.erase(std::unique(merged.hits.begin(), merged.hits.end()), merged.hits.end());
    for (const BitVector& h : merged.hits)
        merged.shift_complement_classes.push_back(canonical_shift_representative(h));
    std::sort(merged.shift_complement_classes.begin(), merged.shift_complement_classes.end());
    merged.shift_complement_classes.erase(
        std::unique(merged.shift_complement_classes.begin(), merged.shift_complement_classes.end()),
        merged.shift_complement_classes.end());
    merged.wall_notes = "complete; merged from " + std::to_string(jobs) + " workers";
    return merged;
}

}  // namespace hfp
