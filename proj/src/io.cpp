#include "pqs/io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "pqs/parallel.hpp"

namespace pqs {

int thread_cap_from_env() {
    const char* raw = std::getenv("PLANAR_SQUEEZE_THREADS");
    const int hw = std::max(1u, std::thread::hardware_concurrency());
    if (!raw) return hw;
    char* end = nullptr;
    const long parsed = std::strtol(raw, &end, 10);
    if (end == raw || parsed < 1) return hw;
    return static_cast<int>(std::min<long>(parsed, 1024));
}

}  // namespace pqs

namespace pqs::io {

std::string format_double(double x) {
    char buf[48];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x,
                                   std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

std::string csv_row(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += cells[i];
    }
    out += '\n';
    return out;
}

void write_csv(const std::filesystem::path& path, const std::string& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open output file: " + path.string());
    file << header << '\n';
    for (const auto& row : rows) file << csv_row(row);
    if (!file) throw Error("failed writing output file: " + path.string());
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open output file: " + path.string());
    file << text;
    if (!file) throw Error("failed writing output file: " + path.string());
}

nlohmann::json state_to_json(const SpinState& state) {
    nlohmann::json amps = nlohmann::json::array();
    for (int k = 0; k < state.dimension(); ++k) {
        const Complex a = state.amplitudes()(k);
        amps.push_back({a.real(), a.imag()});
    }
    return nlohmann::json{{"two_j", state.j().two_j}, {"amplitudes", std::move(amps)}};
}

SpinState state_from_json(const nlohmann::json& j) {
    const SpinQuantumNumber spin = SpinQuantumNumber::from_two_j(j.at("two_j").get<int>());
    const auto& amps = j.at("amplitudes");
    Eigen::VectorXcd amplitudes(amps.size());
    for (std::size_t k = 0; k < amps.size(); ++k)
        amplitudes(k) = Complex(amps[k][0].get<double>(), amps[k][1].get<double>());
    return SpinState(spin, std::move(amplitudes));
}

nlohmann::json scan_point_to_json(const BecScanPoint& p) {
    return nlohmann::json{{"ratio", p.ratio},
                          {"var_x", p.var_x},
                          {"var_y", p.var_y},
                          {"var_z", p.var_z},
                          {"planar_sum", p.planar_sum},
                          {"mean_x", p.mean_x},
                          {"degenerate", p.degenerate}};
}

BecScanPoint scan_point_from_json(const nlohmann::json& j) {
    BecScanPoint p;
    p.ratio = j.at("ratio").get<double>();
    p.var_x = j.at("var_x").get<double>();
    p.var_y = j.at("var_y").get<double>();
    p.var_z = j.at("var_z").get<double>();
    p.planar_sum = j.at("planar_sum").get<double>();
    p.mean_x = j.at("mean_x").get<double>();
    p.degenerate = j.value("degenerate", false);
    return p;
}

nlohmann::json bound_to_json(const BoundResult& r) {
    nlohmann::json out{{"j", r.j.j()},
                       {"two_j", r.j.two_j},
                       {"c_exact", r.c_exact},
                       {"c_asymptotic", r.c_asymptotic},
                       {"lambda_star", r.lambda_star},
                       {"mean", {r.optimal_moments.mean(0), r.optimal_moments.mean(1),
                                 r.optimal_moments.mean(2)}},
                       {"variances",
                        {r.optimal_moments.variances(0), r.optimal_moments.variances(1),
                         r.optimal_moments.variances(2)}},
                       {"planar_sum", r.optimal_moments.planar_sum},
                       {"state", state_to_json(r.optimal_state)}};
    if (r.c_direct) out["c_direct"] = *r.c_direct;
    return out;
}

}  // namespace pqs::io
