#include "qtrace/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"

#include "qtrace/json_io.hpp"
#include "qtrace/partitions.hpp"
#include "qtrace/recognize.hpp"
#include "qtrace/report_json.hpp"
#include "qtrace/verify.hpp"

namespace qtrace::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty())
            out.push_back(item);
    return out;
}

void write_output(const std::string& path, const std::string& text)
{
    std::ofstream f(path);
    if (!f)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    f << text;
}

void render_series(const QSeries& s, const std::string& format, std::ostream& out)
{
    if (format == "json") {
        out << to_json_value(s).dump() << '\n';
        return;
    }
    for (std::size_t n = 0; n <= s.order(); ++n)
        out << n << '\t' << s[n] << '\n';
}

std::string render_certificate(const verify::QuasimodularCertificate& c)
{
    std::string text = "certificate level=" + std::to_string(c.level) + " weight<=" +
                       std::to_string(c.weight_bound) + " order=" + std::to_string(c.residual_order) + "\n";
    for (std::size_t i = 0; i < c.basis.size(); ++i)
        if (!c.coefficients[i].is_zero())
            text += "  " + c.coefficients[i].str() + " * " + c.basis[i] + "\n";
    return text;
}

struct Common {
    std::string format;
    std::string out_path;
};

// The partition-trace listing for Tr_k(phi; X_1..X_k), one monomial per line.
void render_trace(unsigned k, const std::string& phi_name, std::ostream& out)
{
    const auto& phi = partitions::weight_function(phi_name);
    partitions::for_each_partition(k, [&](const partitions::Partition& p) {
        std::string mono;
        for (unsigned j = k; j >= 1; --j) {
            unsigned m = p.multiplicity(j);
            if (m == 0)
                continue;
            mono += (mono.empty() ? "" : "*") + std::string("X") + std::to_string(j) +
                    (m > 1 ? "^" + std::to_string(m) : "");
        }
        out << phi(p) << '\t' << mono << '\n';
    });
}

} // namespace

zoo::Params parse_params(const std::vector<std::string>& specs)
{
    zoo::Params params;
    for (const auto& spec : specs)
        for (const auto& item : split(spec, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0)
                throw std::invalid_argument("parameter '" + item + "' is not key=value");
            std::string key = item.substr(0, eq);
            if (params.contains(key))
                throw std::invalid_argument("parameter '" + key + "' given twice");
            params.emplace(key, Rational::parse(item.substr(eq + 1)));
        }
    return params;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact q-series construction and identity verification"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    const std::vector<std::string> formats{"json", "pretty"};

    // series
    auto* series_cmd = app.add_subcommand("series", "Print a named series");
    std::string series_name;
    std::vector<std::string> series_params;
    std::size_t series_order = 20;
    Common series_common{"json", ""};
    series_cmd->add_option("--name", series_name, "Registry name")->required();
    series_cmd->add_option("--param", series_params, "key=val[,key=val...]");
    series_cmd->add_option("--order", series_order, "Truncation order N")->check(CLI::Range(1, 100000));
    series_cmd->add_option("--format", series_common.format)->check(CLI::IsMember(formats));
    series_cmd->add_option("--out", series_common.out_path);

    // trace
    auto* trace_cmd = app.add_subcommand("trace", "List the monomials of a partition trace");
    unsigned trace_k = 4;
    std::string trace_phi = "one";
    trace_cmd->add_option("--k", trace_k)->check(CLI::Range(1, 30));
    trace_cmd->add_option("--phi", trace_phi, "one, phi_B, phi_V or phi_Phi");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Verify one identity");
    std::string theorem;
    long vk = 1, vn = 2, vt = 1, vr = 1;
    std::string va = "-2";
    std::size_t verify_order = 40;
    Common verify_common{"pretty", ""};
    verify_cmd->add_option("--theorem", theorem)->required()->check(CLI::IsMember(verify::theorem_ids()));
    verify_cmd->add_option("--k", vk);
    verify_cmd->add_option("--n", vn);
    verify_cmd->add_option("--t", vt);
    verify_cmd->add_option("--r", vr);
    verify_cmd->add_option("--a", va, "Rational, e.g. -2 or 1/2");
    verify_cmd->add_option("--order", verify_order)->check(CLI::Range(1, 100000));
    verify_cmd->add_option("--format", verify_common.format)->check(CLI::IsMember(formats));
    verify_cmd->add_option("--out", verify_common.out_path);

    // verify-all
    auto* all_cmd = app.add_subcommand("verify-all", "Verify every identity over a parameter grid");
    std::optional<std::size_t> all_order;
    std::string only;
    std::optional<unsigned> k_max, t_max, r_max, n_max;
    std::optional<long> a_min, a_max;
    unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
    Common all_common{"pretty", ""};
    all_cmd->add_option("--order", all_order, "Override every per-theorem order")->check(CLI::Range(1, 100000));
    all_cmd->add_option("--only", only, "Comma-separated theorem ids");
    all_cmd->add_option("--k-max", k_max);
    all_cmd->add_option("--t-max", t_max);
    all_cmd->add_option("--r-max", r_max);
    all_cmd->add_option("--a-min", a_min);
    all_cmd->add_option("--a-max", a_max);
    all_cmd->add_option("--n-max", n_max);
    all_cmd->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
    all_cmd->add_option("--format", all_common.format)->check(CLI::IsMember(formats));
    all_cmd->add_option("--out", all_common.out_path);

    // recognize
    auto* rec_cmd = app.add_subcommand("recognize", "Find a quasimodular certificate for a named series");
    std::string rec_name;
    std::vector<std::string> rec_params;
    unsigned weight = 2;
    int level = 1;
    std::size_t rec_order = 60;
    Common rec_common{"pretty", ""};
    rec_cmd->add_option("--name", rec_name)->required();
    rec_cmd->add_option("--param", rec_params);
    rec_cmd->add_option("--weight", weight)->required();
    rec_cmd->add_option("--level", level)->check(CLI::IsMember({1, 3}));
    rec_cmd->add_option("--order", rec_order)->check(CLI::Range(1, 100000));
    rec_cmd->add_option("--format", rec_common.format)->check(CLI::IsMember(formats));
    rec_cmd->add_option("--out", rec_common.out_path);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage;
    }

    auto emit = [&](const Common& c, const std::string& text) {
        if (c.out_path.empty())
            out << text;
        else
            write_output(c.out_path, text);
    };

    try {
        if (*series_cmd) {
            auto params = parse_params(series_params);
            auto named = zoo::build_named_series(series_name, params, series_order);
            std::ostringstream text;
            render_series(named.series, series_common.format, text);
            emit(series_common, text.str());
            return ok;
        }

        if (*trace_cmd) {
            render_trace(trace_k, trace_phi, out);
            return ok;
        }

        if (*verify_cmd) {
            if (vk < 1 || vn < 1 || vt < 1 || vr < 1)
                throw std::invalid_argument("--k, --n, --t and --r must be positive");
            verify::Task task{theorem, {}, verify_order, {}};
            const Rational a = Rational::parse(va);
            if (theorem == "a-ktr")
                task.params = {{"k", Rational(vk)}, {"t", Rational(vt)}, {"r", Rational(vr)}, {"a", a}};
            else if (theorem == "lehmer")
                task.params = {{"n", Rational(vn)}, {"k", Rational(vk)}};
            else if (theorem != "ramanujan")
                task.params = {{"k", Rational(vk)}};
            auto report = verify::run_task(task);
            if (!verify_common.out_path.empty())
                write_output(verify_common.out_path, verify::to_json_value(report).dump(2) + "\n");
            if (verify_common.format == "json" && verify_common.out_path.empty())
                out << verify::to_json_value(report).dump(2) << '\n';
            else
                out << verify::summary_line(report) << '\n';
            if (report.status == verify::Status::error) {
                err << report.message << '\n';
                return failed;
            }
            return report.status == verify::Status::verified ? ok : failed;
        }

        if (*all_cmd) {
            verify::GridConfig grid;
            grid.order = all_order;
            grid.only = split(only, ',');
            for (const auto& id : grid.only)
                if (std::find(verify::theorem_ids().begin(), verify::theorem_ids().end(), id) ==
                    verify::theorem_ids().end())
                    throw std::invalid_argument("unknown theorem id '" + id + "' in --only");
            grid.k_max = k_max;
            grid.t_max = t_max;
            grid.r_max = r_max;
            grid.a_min = a_min;
            grid.a_max = a_max;
            grid.n_max = n_max;
            auto reports = verify::verify_all(verify::default_grid(grid), jobs);
            if (!all_common.out_path.empty())
                write_output(all_common.out_path, verify::to_json_value(reports).dump(2) + "\n");
            if (all_common.format == "json" && all_common.out_path.empty())
                out << verify::to_json_value(reports).dump(2) << '\n';
            else
                for (const auto& r : reports)
                    out << verify::summary_line(r) << '\n';
            auto bad = std::count_if(reports.begin(), reports.end(),
                                     [](const auto& r) { return r.status != verify::Status::verified; });
            if (bad) {
                err << bad << " of " << reports.size() << " reports not verified\n";
                return failed;
            }
            return ok;
        }

        if (*rec_cmd) {
            auto params = parse_params(rec_params);
            // Validate the weight and level before building anything.
            verify::quasimodular_basis_size(level, weight);
            auto named = zoo::build_named_series(rec_name, params, rec_order);
            auto cert = verify::recognize_quasimodular(named.series, weight, level);
            std::string text;
            if (rec_common.format == "json")
                text = (cert ? verify::to_json_value(*cert).dump(2) : std::string("\"not-found\"")) + "\n";
            else
                text = cert ? render_certificate(*cert) : std::string("not-found\n");
            emit(rec_common, text);
            return cert ? ok : failed;
        }
    } catch (const verify::InsufficientOrder& e) {
        err << e.what() << "; rerun with --order " << e.required << " or higher\n";
        return usage;
    } catch (const zoo::UnknownSeries& e) {
        err << e.what() << '\n';
        return usage;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return usage;
    } catch (const std::out_of_range& e) {
        err << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return failed;
    }
    return usage;
}

} // namespace qtrace::cli
