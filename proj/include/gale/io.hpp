#ifndef GALE_IO_HPP
#define GALE_IO_HPP

#include <json.hpp>
#include <string>
#include <variant>

#include "gale/solver.hpp"
#include "gale/system.hpp"

namespace gale {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

std::string rat_str(const Rat& q);
Rat parse_rat(const std::string& s);

Json to_json(const FewnomialSystem& F);
Json to_json(const GaleSystem& G);
FewnomialSystem fewnomial_from_json(const Json& j);
GaleSystem gale_from_json(const Json& j);

/// Either kind of system file, dispatched on the "type" field.
std::variant<FewnomialSystem, GaleSystem> system_from_json(const Json& j);
std::variant<FewnomialSystem, GaleSystem> load_system(const std::string& path);
void save_json(const Json& j, const std::string& path);
Json load_json(const std::string& path);

/// Gale solutions with the run report; points as decimal strings at the
/// tracker precision.
Json solutions_to_json(const SolutionSet& sol, int precision_bits);
std::vector<std::vector<BigFloat>> points_from_json(const Json& j, int precision_bits);

}  // namespace gale

#endif
