#include "hfp/json_io.hpp"

#include <stdexcept>

namespace hfp {

nlohmann::json to_json(const HadamardCodeReport& report) {
    return nlohmann::json{{"length", report.length},   {"n", report.n},
                          {"s", report.s},             {"n_prime", report.n_prime},
                          {"rank", report.rank},       {"kernel_dim", report.kernel_dim},
                          {"is_linear", report.is_linear}};
}

nlohmann::json to_json(const CirculantAnalysis& analysis) {
    nlohmann::json j{
        {"generator", analysis.generator.to_string()},
        {"order", analysis.order},
        {"is_hadamard", analysis.is_hadamard},
        {"column_weight", analysis.column_weights.empty() ? 0 : analysis.column_weights.front()},
        {"sigma", analysis.sigma},
        {"rank_gcd", analysis.rank_by_gcd},
        {"rank_elim", analysis.rank_by_elimination},
    };
    if (analysis.kernel_dim)
        j["kernel_dim"] = *analysis.kernel_dim;
    else
        j["kernel_dim"] = nullptr;
    if (analysis.group_type)
        j["group_type"] = group_type_label(*analysis.group_type);
    else
        j["group_type"] = nullptr;
    return j;
}

nlohmann::json to_json(const SearchResult& result) {
    nlohmann::json hits = nlohmann::json::array();
    for (const BitVector& h : result.hits) hits.push_back(h.to_string());
    nlohmann::json classes = nlohmann::json::array();
    for (const BitVector& c : result.shift_complement_classes) classes.push_back(c.to_string());
    return nlohmann::json{{"candidates_tested", result.candidates_tested},
                          {"hits", hits},
                          {"shift_complement_classes", classes},
                          {"wall_notes", result.wall_notes}};
}

nlohmann::json to_json(const PropelinearStructure& s) {
    nlohmann::json words = nlohmann::json::array();
    nlohmann::json perms = nlohmann::json::array();
    const auto& ws = s.code().words();
    for (std::size_t i = 0; i < ws.size(); ++i) {
        words.push_back(ws[i].to_string());
        nlohmann::json images = nlohmann::json::array();
        for (std::size_t c = 1; c <= s.perm_at(i).degree(); ++c)
            images.push_back(s.perm_at(i).image_of(c));
        perms.push_back(std::move(images));
    }
    return nlohmann::json{{"words", words}, {"perms", perms}};
}

PropelinearStructure structure_from_json(const nlohmann::json& j) {
    if (!j.contains("words") || !j.contains("perms") || !j["words"].is_array() ||
        !j["perms"].is_array() || j["words"].size() != j["perms"].size())
        throw std::invalid_argument("structure json needs parallel 'words' and 'perms' arrays");
    std::vector<BitVector> words;
    std::vector<Permutation> perms;
    for (std::size_t i = 0; i < j["words"].size(); ++i) {
        words.push_back(BitVector::from_string(j["words"][i].get<std::string>()));
        std::vector<std::uint32_t> images;
        for (const auto& entry : j["perms"][i]) images.push_back(entry.get<std::uint32_t>());
        perms.emplace_back(std::move(images));
    }
    return PropelinearStructure(std::move(words), std::move(perms));
}

}  // namespace hfp
