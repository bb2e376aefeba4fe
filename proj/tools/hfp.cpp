#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hfp/circulant.hpp"
#include "hfp/hadamard.hpp"
#include "hfp/json_io.hpp"
#include "hfp/search.hpp"

namespace {

// Exit codes: 0 success / Hadamard, 1 not Hadamard, 2 input error, 3 budget.
constexpr int kExitNotHadamard = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

std::optional<unsigned> env_unsigned(const char* name) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(raw, raw + std::string(raw).size(), value);
    if (ec != std::errc{} || *ptr != '\0')
        throw std::invalid_argument(std::string(name) + " must be an unsigned integer");
    return value;
}

void print_analysis_text(const hfp::CirculantAnalysis& a) {
    std::cout << "generator=" << a.generator.to_string() << '\n'
              << "order=" << a.order << '\n'
              << "is_hadamard=" << (a.is_hadamard ? "true" : "false") << '\n'
              << "column_weight=" << (a.column_weights.empty() ? 0 : a.column_weights.front()) << '\n'
              << "sigma=" << a.sigma << '\n'
              << "rank_gcd=" << a.rank_by_gcd << '\n'
              << "rank_elim=" << a.rank_by_elimination << '\n';
    std::cout << "kernel_dim=";
    if (a.kernel_dim)
        std::cout << *a.kernel_dim << '\n';
    else
        std::cout << "skipped\n";
    std::cout << "group_type=" << (a.group_type ? hfp::group_type_label(*a.group_type) : "none")
              << '\n';
}

void print_search_text(const hfp::SearchResult& r) {
    std::cout << "candidates_tested=" << r.candidates_tested << '\n';
    std::cout << "hits=";
    for (std::size_t i = 0; i < r.hits.size(); ++i)
        std::cout << (i ? "," : "") << r.hits[i].to_string();
    std::cout << '\n' << "shift_complement_classes=";
    for (std::size_t i = 0; i < r.shift_complement_classes.size(); ++i)
        std::cout << (i ? "," : "") << r.shift_complement_classes[i].to_string();
    std::cout << '\n' << "wall_notes=" << r.wall_notes << '\n';
}

int cmd_analyze(const std::string& bits, const std::string& format) {
    hfp::CirculantAnalysis analysis = hfp::full_analysis(hfp::RingElement::from_string(bits));
    if (format == "json")
        std::cout << hfp::to_json(analysis).dump(2) << '\n';
    else
        print_analysis_text(analysis);
    return analysis.is_hadamard ? 0 : kExitNotHadamard;
}

int cmd_search(const hfp::SearchSpec& spec, unsigned jobs, const std::string& checkpoint,
               bool resume, const std::string& format) {
    hfp::SearchResult result;
    if (!checkpoint.empty()) {
        if (jobs > 1)
            throw std::invalid_argument("checkpointing is only supported for single-worker runs");
        result = hfp::run_search(spec, hfp::CheckpointOptions{checkpoint, resume});
    } else {
        result = hfp::run_search_parallel(spec, jobs);
    }
    if (format == "json")
        std::cout << hfp::to_json(result).dump(2) << '\n';
    else
        print_search_text(result);
    return 0;
}

int cmd_verify(const std::string& path, bool show_forms, const std::string& format) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
    const hfp::MatrixInput input = hfp::read_matrix(in);
    const bool hadamard = hfp::is_hadamard(input.matrix);
    const bool circ = hfp::is_circulant(input.matrix);

    nlohmann::json j{{"order", input.matrix.order()},
                     {"alphabet", input.was_binary ? "binary" : "sign"},
                     {"is_hadamard", hadamard},
                     {"is_circulant", circ}};
    if (show_forms && hadamard) {
        const hfp::SignMatrix normalized = hfp::normalize(input.matrix);
        const hfp::BinaryMatrix binary = hfp::binarize(normalized);
        nlohmann::json norm_rows = nlohmann::json::array();
        nlohmann::json bin_rows = nlohmann::json::array();
        for (std::size_t r = 0; r < normalized.order(); ++r) {
            std::string row;
            for (std::size_t c = 0; c < normalized.order(); ++c)
                row += normalized.at(r, c) > 0 ? '+' : '-';
            norm_rows.push_back(row);
            bin_rows.push_back(binary.row(r).to_string());
        }
        j["normalized"] = norm_rows;
        j["binary"] = bin_rows;
    }
    if (format == "json") {
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "order=" << input.matrix.order() << '\n'
                  << "alphabet=" << (input.was_binary ? "binary" : "sign") << '\n'
                  << "is_hadamard=" << (hadamard ? "true" : "false") << '\n'
                  << "is_circulant=" << (circ ? "true" : "false") << '\n';
        if (show_forms && hadamard) {
            std::cout << "normalized:\n";
            hfp::write_matrix(std::cout, hfp::normalize(input.matrix));
            std::cout << "binary:\n";
            hfp::write_matrix(std::cout, hfp::binarize(hfp::normalize(input.matrix)));
        }
    }
    return hadamard ? 0 : kExitNotHadamard;
}

int cmd_fixtures(const std::string& kind, std::optional<unsigned> size) {
    hfp::BinaryCode code;
    if (kind == "sylvester") {
        if (!size) throw std::invalid_argument("sylvester fixture needs a size");
        code = hfp::sylvester_code(*size);
    } else if (kind == "paley") {
        if (!size) throw std::invalid_argument("paley fixture needs a size");
        code = hfp::paley_code(*size);
    } else if (kind == "circulant4") {
        if (size) throw std::invalid_argument("circulant4 fixture takes no size");
        code = hfp::circulant4_code();
    } else {
        throw std::invalid_argument("unknown fixture kind: " + kind);
    }
    for (const hfp::BitVector& w : code.words()) std::cout << w.to_string() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circulant Hadamard matrices and Hadamard full propelinear codes"};
    app.require_subcommand(1);

    std::string format = "json";

    auto* analyze = app.add_subcommand("analyze", "full analysis of a circulant generator row");
    std::string generator_bits;
    analyze->add_option("generator", generator_bits, "first row as a bit string, e.g. 1000")
        ->required();
    analyze->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* search = app.add_subcommand("search", "enumerate circulant first rows of one order");
    std::size_t order = 0;
    std::string prune = "none";
    unsigned jobs = 0;
    std::uint64_t limit = 0;
    std::string checkpoint;
    bool resume = false;
    unsigned budget_log2 = 0;
    search->add_option("--order", order, "matrix order, a multiple of 4")->required();
    search->add_option("--prune", prune, "none, weight or turyn")
        ->check(CLI::IsMember({"none", "weight", "turyn"}));
    search->add_option("--jobs", jobs, "worker threads (default HFP_JOBS or 1)");
    search->add_option("--limit", limit, "stop after this many candidates");
    search->add_option("--checkpoint", checkpoint, "cursor file for resumable runs");
    search->add_flag("--resume", resume, "continue from the checkpoint file");
    search->add_option("--budget-log2", budget_log2,
                       "max log2 of the candidate count (default HFP_BUDGET_LOG2 or 24/34)");
    search->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* verify = app.add_subcommand("verify", "check a matrix file");
    std::string matrix_path;
    bool show_forms = false;
    verify->add_option("path", matrix_path, "matrix file")->required();
    verify->add_flag("--forms", show_forms, "also print the normalized and binary forms");
    verify->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* fixtures = app.add_subcommand("fixtures", "emit a reference code, one word per line");
    std::string kind;
    std::optional<unsigned> fixture_size;
    fixtures->add_option("kind", kind, "sylvester, paley or circulant4")->required();
    fixtures->add_option("size", fixture_size, "sylvester exponent or paley prime");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(generator_bits, format);
        if (search->parsed()) {
            hfp::SearchSpec spec;
            spec.order = order;
            if (prune == "weight")
                spec.prune = hfp::PruneLevel::weight;
            else if (prune == "turyn")
                spec.prune = hfp::PruneLevel::weight_and_turyn;
            if (search->count("--limit") > 0) spec.limit = limit;
            if (search->count("--budget-log2") > 0)
                spec.budget_log2 = budget_log2;
            else if (auto env = env_unsigned("HFP_BUDGET_LOG2"))
                spec.budget_log2 = *env;
            unsigned effective_jobs = 1;
            if (search->count("--jobs") > 0)
                effective_jobs = jobs;
            else if (auto env = env_unsigned("HFP_JOBS"))
                effective_jobs = *env;
            if (effective_jobs == 0) effective_jobs = 1;
            return cmd_search(spec, effective_jobs, checkpoint, resume, format);
        }
        if (verify->parsed()) return cmd_verify(matrix_path, show_forms, format);
        if (fixtures->parsed()) return cmd_fixtures(kind, fixture_size);
    } catch (const hfp::BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
