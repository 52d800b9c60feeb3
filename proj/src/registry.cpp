#include "qtrace/registry.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "qtrace/oracles.hpp"
#include "qtrace/zoo.hpp"

namespace qtrace::zoo {

namespace {

struct Entry {
    std::string name;
    std::vector<std::string> params;
    std::function<QSeries(const Params&, std::size_t)> build;
};

unsigned positive(const Params& p, const std::string& key)
{
    const Rational& v = p.at(key);
    if (!v.is_integer() || v.sign() <= 0 || v > Rational(1000000))
        throw std::invalid_argument("parameter " + key + " must be a positive integer, got " + v.str());
    return static_cast<unsigned>(v.num().get_ui());
}

unsigned nonnegative(const Params& p, const std::string& key)
{
    const Rational& v = p.at(key);
    if (!v.is_integer() || v.sign() < 0 || v > Rational(1000000))
        throw std::invalid_argument("parameter " + key + " must be a nonnegative integer, got " + v.str());
    return static_cast<unsigned>(v.num().get_ui());
}

const std::vector<Entry>& entries()
{
    static const std::vector<Entry> table{
        {"E2k", {"k"}, [](const Params& p, std::size_t N) { return eisenstein(positive(p, "k"), N); }},
        {"Ll", {"l"}, [](const Params& p, std::size_t N) { return L_series(positive(p, "l"), N); }},
        {"Fj", {"j"}, [](const Params& p, std::size_t N) { return F_series(positive(p, "j"), N); }},
        {"Gj", {"j"}, [](const Params& p, std::size_t N) { return G_series(positive(p, "j"), N); }},
        {"Hj", {"j"}, [](const Params& p, std::size_t N) { return H_series(positive(p, "j"), N); }},
        {"Hjtr", {"j", "t", "r", "a"},
         [](const Params& p, std::size_t N) {
             return H_ktr_series(positive(p, "j"), positive(p, "t"), positive(p, "r"), p.at("a"), N);
         }},
        {"gk", {"k"}, [](const Params& p, std::size_t N) { return g_series(positive(p, "k"), N); }},
        {"penta", {}, [](const Params&, std::size_t N) { return pentagonal_theta(N); }},
        {"Vnum", {"k"}, [](const Params& p, std::size_t N) { return V_numerator(nonnegative(p, "k"), N); }},
        {"Unum", {"k"}, [](const Params& p, std::size_t N) { return U_numerator(nonnegative(p, "k"), N); }},
        {"Uden", {}, [](const Params&, std::size_t N) { return U_denominator(N); }},
        {"Ak-oracle", {"k"}, [](const Params& p, std::size_t N) { return macmahon_oracle(positive(p, "k"), N); }},
        {"Aktr-oracle", {"k", "t", "r", "a"},
         [](const Params& p, std::size_t N) {
             return a_ktr_oracle(positive(p, "k"), positive(p, "t"), positive(p, "r"), p.at("a"), N);
         }},
        {"sk-oracle", {"k"}, [](const Params& p, std::size_t N) { return srp_moment_oracle(positive(p, "k"), N); }},
    };
    return table;
}

const Entry& find(std::string_view name)
{
    for (const auto& e : entries())
        if (e.name == name)
            return e;
    std::string valid;
    for (const auto& n : named_series_names())
        valid += (valid.empty() ? "" : ", ") + n;
    throw UnknownSeries("unknown series '" + std::string(name) + "'; valid names: " + valid);
}

} // namespace

const std::vector<std::string>& named_series_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& e : entries())
            out.push_back(e.name);
        return out;
    }();
    return names;
}

std::vector<std::string> named_series_parameters(std::string_view name)
{
    return find(name).params;
}

NamedSeries build_named_series(std::string_view name, const Params& params, std::size_t order)
{
    const Entry& e = find(name);
    for (const auto& key : e.params)
        if (!params.contains(key))
            throw std::invalid_argument("series " + e.name + " needs parameter " + key);
    for (const auto& [key, value] : params)
        if (std::find(e.params.begin(), e.params.end(), key) == e.params.end())
            throw std::invalid_argument("series " + e.name + " does not take parameter " + key);
    return {e.name, params, e.build(params, order)};
}

} // namespace qtrace::zoo
