#pragma once

#include "json.hpp"

#include "hfp/circulant.hpp"
#include "hfp/codes.hpp"
#include "hfp/propelinear.hpp"
#include "hfp/search.hpp"

namespace hfp {

nlohmann::json to_json(const HadamardCodeReport& report);
nlohmann::json to_json(const CirculantAnalysis& analysis);
nlohmann::json to_json(const SearchResult& result);

/// Structure files: {"words": ["0000", ...], "perms": [[1,2,3,4], ...]},
/// parallel arrays with 1-indexed permutation images.
nlohmann::json to_json(const PropelinearStructure& s);
PropelinearStructure structure_from_json(const nlohmann::json& j);

}  // namespace hfp
