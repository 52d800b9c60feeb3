#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qtrace/rational.hpp"
#include "qtrace/series.hpp"

namespace qtrace::zoo {

using Params = std::map<std::string, Rational>;

/// A realized series together with the name and parameters that produced it.
struct NamedSeries {
    std::string name;
    Params params;
    QSeries series;
};

/// Thrown for a name not in the registry; what() lists the valid names.
struct UnknownSeries : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Registry names in a fixed order: E2k Ll Fj Gj Hj Hjtr gk penta Vnum Unum Uden
/// Ak-oracle Aktr-oracle sk-oracle.
const std::vector<std::string>& named_series_names();

/// Parameter names a registry entry requires (e.g. {"j","t","r","a"} for Hjtr).
std::vector<std::string> named_series_parameters(std::string_view name);

/// Throws UnknownSeries for an unknown name and std::invalid_argument for a
/// missing, extra or out-of-range parameter. Validation happens before any work.
NamedSeries build_named_series(std::string_view name, const Params& params, std::size_t order);

} // namespace qtrace::zoo
