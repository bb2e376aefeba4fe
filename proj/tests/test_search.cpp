#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <string>

#include "fixtures.hpp"
#include "hfp/search.hpp"

using namespace hfp;
using hfp::testing::bv;

namespace {

SearchSpec spec_for(std::size_t order, PruneLevel prune = PruneLevel::none) {
    SearchSpec s;
    s.order = order;
    s.prune = prune;
    return s;
}

std::vector<std::string> hit_strings(const SearchResult& r) {
    std::vector<std::string> out;
    for (const BitVector& h : r.hits) out.push_back(h.to_string());
    return out;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("candidate verification") {
    CHECK(verify_candidate(bv("1000")));
    CHECK_FALSE(verify_candidate(bv("1100")));
    CHECK_FALSE(verify_candidate(BitVector(4)));
    CHECK_THROWS_AS(verify_candidate(bv("100000")), std::invalid_argument);
}

TEST_CASE("order 4 has eight hits in two shift classes") {
    const SearchResult r = run_search(spec_for(4));
    CHECK(r.candidates_tested == 16);
    REQUIRE(r.hits.size() == 8);
    const std::vector<std::string> expected{"0001", "0010", "0100", "0111",
                                            "1000", "1011", "1101", "1110"};
    CHECK(hit_strings(r) == expected);
    REQUIRE(r.shift_complement_classes.size() == 2);
    CHECK(r.shift_complement_classes[0] == bv("0001"));
    CHECK(r.shift_complement_classes[1] == bv("0111"));
}

TEST_CASE("orders 8 and 12 have no hits") {
    const SearchResult r8 = run_search(spec_for(8));
    CHECK(r8.candidates_tested == 256);
    CHECK(r8.hits.empty());

    const SearchResult r12 = run_search(spec_for(12));
    CHECK(r12.candidates_tested == 4096);
    CHECK(r12.hits.empty());
}

TEST_CASE("weight pruning is sound") {
    for (std::size_t order : {4, 8, 12}) {
        const SearchResult full = run_search(spec_for(order));
        const SearchResult pruned = run_search(spec_for(order, PruneLevel::weight));
        CHECK(hit_strings(full) == hit_strings(pruned));
        CHECK(pruned.candidates_tested <= full.candidates_tested);
    }
    // n = 2 and n = 3 are not squares: the weight slice is empty.
    CHECK(run_search(spec_for(8, PruneLevel::weight)).candidates_tested == 0);
    CHECK(run_search(spec_for(12, PruneLevel::weight)).candidates_tested == 0);
    // n = 1: weights 1 and 3 only.
    CHECK(run_search(spec_for(4, PruneLevel::weight)).candidates_tested == 8);
}

TEST_CASE("weight pruning at order 16 scans the two binomial slices") {
    // n = 4 is a square, so weights 6 and 10 are admissible; no hits exist.
    const SearchResult r = run_search(spec_for(16, PruneLevel::weight));
    CHECK(r.candidates_tested == 16016);  // C(16,6) + C(16,10)
    CHECK(r.hits.empty());
    const SearchResult full = run_search(spec_for(16));
    CHECK(full.candidates_tested == 65536);
    CHECK(full.hits.empty());
}

TEST_CASE("turyn pruning empties infeasible orders") {
    // n = 4 is even, so the feasibility predicate rules the order out.
    const SearchResult r16 = run_search(spec_for(16, PruneLevel::weight_and_turyn));
    CHECK(r16.candidates_tested == 0);
    // n = 1 is an odd square: same slice as the weight prune.
    const SearchResult r4 = run_search(spec_for(4, PruneLevel::weight_and_turyn));
    CHECK(r4.candidates_tested == 8);
    CHECK(r4.hits.size() == 8);
}

TEST_CASE("partitioned workers cover the space exactly once") {
    const SearchResult serial = run_search(spec_for(16));
    std::uint64_t tested = 0;
    std::vector<BitVector> all_hits;
    for (unsigned w = 0; w < 4; ++w) {
        SearchSpec part = spec_for(16);
        part.worker_index = w;
        part.worker_count = 4;
        const SearchResult r = run_search(part);
        tested += r.candidates_tested;
        all_hits.insert(all_hits.end(), r.hits.begin(), r.hits.end());
    }
    CHECK(tested == serial.candidates_tested);
    std::sort(all_hits.begin(), all_hits.end());
    CHECK(std::unique(all_hits.begin(), all_hits.end()) == all_hits.end());
    CHECK(all_hits == serial.hits);
}

TEST_CASE("partitioned weight-pruned workers match the serial slice") {
    std::uint64_t tested = 0;
    for (unsigned w = 0; w < 3; ++w) {
        SearchSpec part = spec_for(16, PruneLevel::weight);
        part.worker_index = w;
        part.worker_count = 3;
        tested += run_search(part).candidates_tested;
    }
    CHECK(tested == 16016);
}

TEST_CASE("parallel driver equals the serial run") {
    const SearchResult serial = run_search(spec_for(12));
    const SearchResult parallel = run_search_parallel(spec_for(12), 4);
    CHECK(parallel.candidates_tested == serial.candidates_tested);
    CHECK(hit_strings(parallel) == hit_strings(serial));
}

TEST_CASE("hits carry admissible weights") {
    const SearchResult r = run_search(spec_for(4));
    for (const BitVector& h : r.hits) {
        const std::size_t w = h.weight();
        CHECK((w == 1 || w == 3));  // 2n +- sqrt(n) at n = 1
    }
}

TEST_CASE("budget guard refuses oversized searches") {
    SearchSpec spec = spec_for(28);  // 2^28 over the default 2^24 budget
    CHECK_THROWS_AS(run_search(spec), BudgetExceededError);
    spec.budget_log2 = 28;  // explicit override allows it
    spec.limit = 1000;
    const SearchResult r = run_search(spec);
    CHECK(r.candidates_tested == 1000);
}

TEST_CASE("invalid specs are rejected") {
    CHECK_THROWS_AS(run_search(spec_for(6)), std::invalid_argument);
    CHECK_THROWS_AS(run_search(spec_for(0)), std::invalid_argument);
    SearchSpec bad = spec_for(4);
    bad.worker_index = 2;
    bad.worker_count = 2;
    CHECK_THROWS_AS(run_search(bad), std::invalid_argument);
}

TEST_CASE("checkpointed runs resume to the full result") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "hfp_search_test";
    fs::create_directories(dir);
    const std::string path = (dir / "cursor.txt").string();
    fs::remove(path);

    SearchSpec limited = spec_for(4);
    limited.limit = 5;
    const SearchResult partial = run_search(limited, CheckpointOptions{path, false});
    CHECK(partial.candidates_tested == 5);
    REQUIRE(fs::exists(path));

    SearchSpec rest = spec_for(4);
    const SearchResult resumed = run_search(rest, CheckpointOptions{path, true});
    CHECK(resumed.candidates_tested == 16);
    CHECK(resumed.hits.size() == 8);
    CHECK(resumed.shift_complement_classes.size() == 2);

    // Resuming a finished run adds no work and keeps the hits.
    const SearchResult again = run_search(rest, CheckpointOptions{path, true});
    CHECK(again.candidates_tested == 16);
    CHECK(again.hits.size() == 8);
    fs::remove(path);
}

TEST_CASE("checkpointed weight-pruned runs restore exact counts") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "hfp_search_test";
    fs::create_directories(dir);
    const std::string path = (dir / "pruned.txt").string();
    fs::remove(path);

    SearchSpec limited = spec_for(16, PruneLevel::weight);
    limited.limit = 1000;
    run_search(limited, CheckpointOptions{path, false});

    SearchSpec rest = spec_for(16, PruneLevel::weight);
    const SearchResult resumed = run_search(rest, CheckpointOptions{path, true});
    CHECK(resumed.candidates_tested == 16016);
    fs::remove(path);
}

TEST_CASE("checkpoint order mismatch is rejected") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "hfp_search_test";
    fs::create_directories(dir);
    const std::string path = (dir / "mismatch.txt").string();
    fs::remove(path);
    run_search(spec_for(4), CheckpointOptions{path, false});
    CHECK_THROWS_AS(run_search(spec_for(8), CheckpointOptions{path, true}),
                    std::invalid_argument);
    fs::remove(path);
}

TEST_CASE("canonical shift representative") {
    CHECK(canonical_shift_representative(bv("1000")) == bv("0001"));
    CHECK(canonical_shift_representative(bv("0111")) == bv("0111"));
    CHECK(canonical_shift_representative(bv("1011")) == bv("0111"));
}

}  // TEST_SUITE
