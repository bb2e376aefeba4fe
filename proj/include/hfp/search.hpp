#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hfp/bitvector.hpp"

namespace hfp {

enum class PruneLevel { none, weight, weight_and_turyn };

struct SearchSpec {
    std::size_t order = 0;                    // multiple of 4
    PruneLevel prune = PruneLevel::none;
    unsigned worker_index = 0;                // this worker's slice of the value space
    unsigned worker_count = 1;
    std::optional<std::uint64_t> limit;       // stop after this many candidates
    std::optional<unsigned> budget_log2;      // max log2(candidates); defaults 24 / 34
};

struct SearchResult {
    std::uint64_t candidates_tested = 0;
    std::vector<BitVector> hits;                      // sorted lexicographically
    std::vector<BitVector> shift_complement_classes;  // lex-least shift per class
    std::string wall_notes;
};

struct CheckpointOptions {
    std::string path;
    bool resume = false;
};

class BudgetExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Circulant Hadamard check on a first row: all offsets 1..N/2 must give
/// distance N/2. Throws on a length that is not a positive multiple of 4.
bool verify_candidate(const BitVector& row);

/// Enumerates first rows of the given order, restricted to the admissible
/// weight classes when pruning, verifies each candidate, and groups the hits
/// into cyclic-shift classes (complement classes come in pairs).
SearchResult run_search(const SearchSpec& spec);
SearchResult run_search(const SearchSpec& spec, const CheckpointOptions& checkpoint);

/// Splits the value space across `jobs` threads and merges their results.
SearchResult run_search_parallel(const SearchSpec& spec, unsigned jobs);

/// Lexicographically least cyclic shift, the canonical class representative.
BitVector canonical_shift_representative(const BitVector& row);

}  // namespace hfp
