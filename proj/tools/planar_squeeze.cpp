// planar-squeeze: command-line front end emitting CSV/JSON tables for the
// planar variance bound, squeezed-state moments, double-well BEC scans,
// interferometric phase noise and the Werner-mixture entanglement witness.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "pqs/bec.hpp"
#include "pqs/bound.hpp"
#include "pqs/entanglement.hpp"
#include "pqs/interferometer.hpp"
#include "pqs/io.hpp"
#include "pqs/parallel.hpp"

namespace {

using json = nlohmann::json;
using pqs::io::format_double;

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

std::vector<pqs::SpinQuantumNumber> parse_j_list(const std::string& spec, double step) {
    std::vector<pqs::SpinQuantumNumber> out;
    std::stringstream stream(spec);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (token.empty()) throw std::invalid_argument("empty --j entry");
        const auto dots = token.find("..");
        if (dots == std::string::npos) {
            out.push_back(pqs::SpinQuantumNumber::from_j(std::stod(token)));
            continue;
        }
        const double lo = std::stod(token.substr(0, dots));
        const double hi = std::stod(token.substr(dots + 2));
        if (!(step > 0.0) || hi < lo) throw std::invalid_argument("bad --j range");
        for (double j = lo; j <= hi + 1e-9; j += step)
            out.push_back(pqs::SpinQuantumNumber::from_j(j));
    }
    if (out.empty()) throw std::invalid_argument("--j produced no values");
    return out;
}

struct Range {
    double lo = 0.0, hi = 0.0;
    int steps = 0;
};

// "a:b" or "a:b:steps" (steps = point count)
Range parse_range(const std::string& spec, int default_steps) {
    Range r;
    r.steps = default_steps;
    const auto c1 = spec.find(':');
    if (c1 == std::string::npos) throw std::invalid_argument("--range needs a:b[:steps]");
    const auto c2 = spec.find(':', c1 + 1);
    r.lo = std::stod(spec.substr(0, c1));
    if (c2 == std::string::npos) {
        r.hi = std::stod(spec.substr(c1 + 1));
    } else {
        r.hi = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
        r.steps = std::stoi(spec.substr(c2 + 1));
    }
    return r;
}

// "a:b:step" (step = increment)
std::vector<double> parse_grid_by_step(const std::string& spec) {
    const auto c1 = spec.find(':');
    const auto c2 = spec.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("--pn needs a:b:step");
    const double lo = std::stod(spec.substr(0, c1));
    const double hi = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
    const double step = std::stod(spec.substr(c2 + 1));
    if (!(step > 0.0) || hi < lo) throw std::invalid_argument("bad --pn grid");
    std::vector<double> out;
    for (double v = lo; v <= hi + 1e-12; v += step) out.push_back(std::min(v, hi));
    return out;
}

void write_json(const std::filesystem::path& path, const json& j) {
    pqs::io::write_text(path, j.dump(2) + "\n");
}

std::filesystem::path default_out(const std::string& command, const std::string& format) {
    return command + (format == "json" ? std::string(".json") : std::string(".csv"));
}

int run_bounds(const std::string& j_spec, double step, const std::string& out,
               const std::string& format, std::uint64_t seed) {
    const auto js = parse_j_list(j_spec, step);
    std::vector<pqs::BoundResult> results;
    results.reserve(js.size());
    for (std::size_t i = 0; i < js.size(); ++i) results.push_back(pqs::cj_exact(js[i]));
    // direct minimization is independent per J; parallelize across rows
    std::vector<double> direct(js.size());
    pqs::parallel_for(
        js.size(), std::min<int>(pqs::thread_cap_from_env(), static_cast<int>(js.size())),
        [&](std::size_t i) { direct[i] = pqs::cj_direct(js[i], 8, seed); });
    for (std::size_t i = 0; i < js.size(); ++i) results[i].c_direct = direct[i];

    const std::filesystem::path path = out.empty() ? default_out("bounds", format) : std::filesystem::path(out);
    if (format == "json") {
        json rows = json::array();
        for (const auto& r : results) {
            json row{{"j", r.j.j()},
                     {"c_exact", r.c_exact},
                     {"c_direct", *r.c_direct},
                     {"c_asymptotic", r.c_asymptotic},
                     {"rel_err_asymptotic", std::abs(r.c_asymptotic - r.c_exact) / r.c_exact}};
            rows.push_back(std::move(row));
        }
        write_json(path, rows);
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : results)
            rows.push_back({format_double(r.j.j()), format_double(r.c_exact),
                            format_double(*r.c_direct), format_double(r.c_asymptotic),
                            format_double(std::abs(r.c_asymptotic - r.c_exact) / r.c_exact)});
        pqs::io::write_csv(path, "j,c_exact,c_direct,c_asymptotic,rel_err_asymptotic", rows);
    }
    return 0;
}

int run_state(const std::string& j_spec, const std::string& out, const std::string& format) {
    const auto js = parse_j_list(j_spec, 0.5);
    if (js.size() != 1) throw std::invalid_argument("state expects a single --j value");
    const auto r = pqs::cj_exact(js[0]);
    const std::filesystem::path path = out.empty() ? default_out("state", format) : std::filesystem::path(out);
    if (format == "json") {
        write_json(path, pqs::io::bound_to_json(r));
    } else {
        const auto& m = r.optimal_moments;
        pqs::io::write_csv(
            path, "j,mean_x,mean_y,mean_z,var_x,var_y,var_z,planar_sum",
            {{format_double(r.j.j()), format_double(m.mean(0)), format_double(m.mean(1)),
              format_double(m.mean(2)), format_double(m.variances(0)),
              format_double(m.variances(1)), format_double(m.variances(2)),
              format_double(m.planar_sum)}});
    }
    return 0;
}

int run_bec(int n, const std::string& range_spec, const std::string& out,
            const std::string& format) {
    const Range range = parse_range(range_spec, 201);
    const auto points = pqs::variance_scan(n, range.lo, range.hi, range.steps,
                                           std::min(pqs::thread_cap_from_env(), range.steps));
    const std::filesystem::path path = out.empty() ? default_out("bec", format) : std::filesystem::path(out);
    if (format == "json") {
        json rows = json::array();
        for (const auto& p : points) rows.push_back(pqs::io::scan_point_to_json(p));
        write_json(path, rows);
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& p : points)
            rows.push_back({format_double(p.ratio), format_double(p.var_x),
                            format_double(p.var_y), format_double(p.var_z),
                            format_double(p.planar_sum), format_double(p.mean_x)});
        pqs::io::write_csv(path, "ratio,var_x,var_y,var_z,planar_sum,mean_x", rows);
    }
    return 0;
}

int run_phase(const std::string& j_spec, int grid, const std::string& out,
              const std::string& format) {
    const auto js = parse_j_list(j_spec, 0.5);
    const std::filesystem::path path = out.empty() ? default_out("phase", format) : std::filesystem::path(out);

    if (js.size() == 1) {
        // alpha-resolved noise for one probe
        if (grid < 2) throw std::invalid_argument("--grid must be at least 2");
        const auto m = pqs::cj_exact(js[0]).optimal_moments;
        json jrows = json::array();
        std::vector<std::vector<std::string>> rows;
        for (int i = 0; i < grid; ++i) {
            const double alpha = std::numbers::pi * (i + 0.5) / grid;
            double dphi = std::numeric_limits<double>::quiet_NaN();
            bool insensitive = false;
            try {
                dphi = pqs::phase_uncertainty(m, alpha);
            } catch (const pqs::InsensitivePointError&) {
                insensitive = true;
            }
            rows.push_back({format_double(alpha), format_double(dphi)});
            jrows.push_back({{"alpha", alpha},
                             {"delta_phi", insensitive ? json() : json(dphi)},
                             {"insensitive", insensitive}});
        }
        if (format == "json")
            write_json(path, jrows);
        else
            pqs::io::write_csv(path, "alpha,delta_phi", rows);
        return 0;
    }

    // minimum achievable noise per J (attained at alpha = pi/2)
    json jrows = json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& j : js) {
        const auto m = pqs::cj_exact(j).optimal_moments;
        const double dphi = pqs::phase_uncertainty(m, 0.5 * std::numbers::pi);
        rows.push_back({format_double(j.j()), format_double(dphi)});
        jrows.push_back({{"j", j.j()}, {"delta_phi_min", dphi}});
    }
    if (format == "json")
        write_json(path, jrows);
    else
        pqs::io::write_csv(path, "j,delta_phi_min", rows);
    return 0;
}

int run_witness(const std::string& j_spec, const std::string& pn_spec, int n_sites,
                const std::string& out, const std::string& format) {
    const auto js = parse_j_list(j_spec, 0.5);
    const auto pn = parse_grid_by_step(pn_spec);

    for (const auto& j : js) {
        std::filesystem::path path = out.empty() ? default_out("witness", format) : std::filesystem::path(out);
        if (js.size() > 1) {
            // the four-column format carries no j, so multi-J runs get one file per J
            std::filesystem::path tagged = path;
            tagged.replace_filename(path.stem().string() + "_j" + format_double(j.j()) +
                                    path.extension().string());
            path = tagged;
        }
        const double c = pqs::cj_exact(j).c_exact;
        json jrows = json::array();
        std::vector<std::vector<std::string>> rows;
        for (double p : pn) {
            const double s2 = pqs::werner_s2_closed({j, n_sites, p});
            const auto verdict = pqs::witness(s2, n_sites, c);
            const char* verdict_name =
                verdict == pqs::Verdict::Entangled ? "Entangled" : "NotDetected";
            rows.push_back({format_double(p), format_double(s2 / (n_sites * j.j())),
                            format_double(c / j.j()), verdict_name});
            jrows.push_back({{"p_n", p},
                             {"s2_over_nj", s2 / (n_sites * j.j())},
                             {"cj_over_j", c / j.j()},
                             {"verdict", verdict_name}});
        }
        if (format == "json")
            write_json(path, jrows);
        else
            pqs::io::write_csv(path, "p_n,s2_over_nj,cj_over_j,verdict", rows);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar spin squeezing toolkit"};
    app.require_subcommand(1);

    std::string j_spec, range_spec, pn_spec = "0:1:0.01", out, format = "csv";
    double step = 0.5;
    int n = 0, grid = 64, n_sites = 2;
    std::uint64_t seed = 20120613u;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out, "output file path");
        cmd->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--seed", seed, "seed for randomized refinement paths");
    };

    auto* bounds = app.add_subcommand("bounds", "tabulate the planar variance bound C_J");
    bounds->add_option("--j", j_spec, "J values: list or a..b range")->required();
    bounds->add_option("--step", step, "step for a..b ranges (default 0.5)");
    add_common(bounds);

    auto* state = app.add_subcommand("state", "moments of the optimal squeezed state");
    state->add_option("--j", j_spec, "spin quantum number")->required();
    add_common(state);

    auto* bec = app.add_subcommand("bec", "double-well ground-state variance scan");
    bec->add_option("--n", n, "atom number N = 2J")->required();
    bec->add_option("--range", range_spec, "Ng/kappa range a:b[:steps]")->required();
    add_common(bec);

    auto* phase = app.add_subcommand("phase", "interferometric phase noise");
    phase->add_option("--j", j_spec, "single J (alpha grid) or J list (minima)")->required();
    phase->add_option("--grid", grid, "number of alpha samples (default 64)");
    add_common(phase);

    auto* witness = app.add_subcommand("witness", "Werner-mixture entanglement witness");
    witness->add_option("--j", j_spec, "J values")->required();
    witness->add_option("--pn", pn_spec, "noise grid a:b:step (default 0:1:0.01)");
    witness->add_option("--n", n_sites, "number of sites (default 2)");
    add_common(witness);

    try {
        app.parse(argc, argv);
        if (bounds->parsed()) return run_bounds(j_spec, step, out, format, seed);
        if (state->parsed()) return run_state(j_spec, out, format);
        if (bec->parsed()) return run_bec(n, range_spec, out, format);
        if (phase->parsed()) return run_phase(j_spec, grid, out, format);
        if (witness->parsed()) return run_witness(j_spec, pn_spec, n_sites, out, format);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const pqs::Error& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNumerical;
    }
}
