#include "bwlv/scenario.hpp"

#include <array>
#include <cstddef>
#include <sstream>
#include <string>

#include "bwlv/errors.hpp"

namespace bwlv {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) out.push_back(trim(field));
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

double parse_double(const std::string& text, std::size_t line_no) {
    std::size_t consumed = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &consumed);
    } catch (const std::exception&) {
        throw parse_error(line_no, "not a number: '" + text + "'");
    }
    if (consumed != text.size()) throw parse_error(line_no, "trailing junk in '" + text + "'");
    return v;
}

constexpr std::array<const char*, 6> kScenarioColumns = {
    "alpha_pp", "alpha_dd", "lambda1", "lambda2", "xi_p", "xi_d"};

interaction_params merge(const global_constants& g, double alpha_pp, double alpha_dd,
                         double lambda1, double lambda2, double xi_p, double xi_d) {
    interaction_params p;
    p.gamma = g.gamma;
    p.alpha_pp = alpha_pp;
    p.alpha_dd = alpha_dd;
    p.alpha_pd = g.alpha_pd;
    p.beta_p = g.beta_p;
    p.beta_d = g.beta_d;
    p.lambda1 = lambda1;
    p.lambda2 = lambda2;
    p.xi_p = xi_p;
    p.xi_d = xi_d;
    p.nu = g.nu;
    p.phi = g.phi;
    p.eps_p = g.eps_p;
    p.eps_d = g.eps_d;
    return p;
}

}  // namespace

global_constants serengeti_constants() { return global_constants{}; }

std::vector<interaction_params> bundled_scenario_table() {
    const global_constants g = serengeti_constants();
    return {
        merge(g, 0.0, 1.0, 1.0, 0.0, 0.0, 1.0),
        merge(g, 0.2, 0.2, 0.8, 0.8, 0.2, 0.8),
        merge(g, 0.6, 0.4, 0.6, 0.4, 0.6, 0.4),
        merge(g, 0.8, 0.8, 0.2, 0.2, 0.8, 0.2),
        merge(g, 1.0, 0.0, 0.0, 1.0, 1.0, 0.0),
    };
}

std::vector<interaction_params> load_scenario_table(std::istream& source,
                                                    const global_constants& globals) {
    std::vector<interaction_params> rows;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(source, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto fields = split(stripped, ',');
        if (!header_seen) {
            if (fields.size() != kScenarioColumns.size())
                throw parse_error(line_no, "header must have " +
                                               std::to_string(kScenarioColumns.size()) +
                                               " columns, got " + std::to_string(fields.size()));
            for (std::size_t i = 0; i < fields.size(); ++i)
                if (fields[i] != kScenarioColumns[i])
                    throw parse_error(line_no, "missing column '" +
                                                   std::string(kScenarioColumns[i]) + "', got '" +
                                                   fields[i] + "'");
            header_seen = true;
            continue;
        }
        if (fields.size() != kScenarioColumns.size())
            throw parse_error(line_no, "expected " + std::to_string(kScenarioColumns.size()) +
                                           " columns, got " + std::to_string(fields.size()));
        std::array<double, 6> v{};
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = parse_double(fields[i], line_no);
        rows.push_back(merge(globals, v[0], v[1], v[2], v[3], v[4], v[5]));
    }
    return rows;
}

global_constants load_params_file(std::istream& source) {
    global_constants g = serengeti_constants();
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(source, line)) {
        ++line_no;
        const auto hash = line.find('#');
        const std::string stripped = trim(hash == std::string::npos ? line : line.substr(0, hash));
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) throw parse_error(line_no, "expected 'key = value'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (value.empty()) throw parse_error(line_no, "empty value for '" + key + "'");
        const double v = parse_double(value, line_no);
        if (key == "beta_p") g.beta_p = v;
        else if (key == "beta_d") g.beta_d = v;
        else if (key == "alpha_pd") g.alpha_pd = v;
        else if (key == "nu") g.nu = v;
        else if (key == "phi") g.phi = v;
        else if (key == "eps_p") g.eps_p = v;
        else if (key == "eps_d") g.eps_d = v;
        else if (key == "gamma") {
            if (v != static_cast<int>(v)) throw parse_error(line_no, "gamma must be an integer");
            g.gamma = static_cast<int>(v);
        } else if (key == "n_p0") g.n_p0 = v;
        else if (key == "n_d0") g.n_d0 = v;
        else throw parse_error(line_no, "unknown key '" + key + "'");
    }
    return g;
}

}  // namespace bwlv
