#pragma once

// JSON wire formats.  Key order is stable (ordered_json) so fixtures diff
// cleanly.  Schemas:
//   Shape        {"m":2,"n":3,"a":[1,2],"a_prime":[2,3]}
//   Tableau      {"shape":{...},"plus":[[1,1,2],[2,4]],"minus":[[3,4],[4]]}
//                (minus[j-1] lists column j top to bottom)
//   Pair         {"b":[...],"b_prime":[...]}
//   Skew         {"shape":{...},"inner":{"b":..,"b_prime":..},
//                 "plus":[row suffixes],"minus":[column suffixes]}
//   Combination  [{"coeff":"-3/2","tableau":{...}}, ...]
// Shape JSON may omit m/n when the caller supplies them out of band.

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "hooktab/extraction.hpp"
#include "hooktab/hook_shape.hpp"
#include "hooktab/hook_tableau.hpp"
#include "hooktab/taquin.hpp"

namespace hooktab {

using json = nlohmann::ordered_json;

json shape_to_json(const HookShape& s);
HookShape shape_from_json(const json& j, std::optional<int> m = {},
                          std::optional<int> n = {});

json tableau_to_json(const HookTableau& t);
HookTableau tableau_from_json(const json& j, std::optional<int> m = {},
                              std::optional<int> n = {});

json pair_to_json(const TrivialPair& p);
TrivialPair pair_from_json(const json& j, int m, int n);

json skew_to_json(const SkewTableau& s);
SkewTableau skew_from_json(const json& j, std::optional<int> m = {},
                           std::optional<int> n = {});

json combination_to_json(const FormalCombination& c);
FormalCombination combination_from_json(const json& j, std::optional<int> m = {},
                                        std::optional<int> n = {});

json bijection_report_to_json(const BijectionReport& r);

// Human-readable grid renderings for --pretty.
std::string pretty_shape(const HookShape& s);
std::string pretty_tableau(const HookTableau& t);
std::string pretty_skew(const SkewTableau& s);
std::string pretty_combination(const FormalCombination& c);

}  // namespace hooktab
