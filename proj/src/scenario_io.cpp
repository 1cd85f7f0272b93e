#include "raaskit/scenario_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace raaskit {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& token, int line) {
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw ParseError("expected a number, got '" + token + "'", line);
    return value;
}

std::vector<double> parse_list(const std::string& text, int line) {
    std::istringstream in(text);
    std::vector<double> values;
    std::string token;
    while (in >> token) values.push_back(parse_double(token, line));
    return values;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    enum class Section { none, costs, actions, outcomes, distribution };
    Section section = Section::none;
    std::map<std::string, double> costs, actions;
    std::vector<double> levels;
    bool levels_seen = false;
    std::vector<double> outcomes;
    std::vector<std::vector<double>> rows;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError("unterminated section header", line_no);
            std::string name = line.substr(1, line.size() - 2);
            if (name == "costs") section = Section::costs;
            else if (name == "actions") section = Section::actions;
            else if (name == "outcomes") section = Section::outcomes;
            else if (name == "distribution") section = Section::distribution;
            else throw ParseError("unknown section [" + name + "]", line_no);
            continue;
        }

        switch (section) {
            case Section::none:
                throw ParseError("data before any section header", line_no);
            case Section::costs:
            case Section::actions: {
                auto eq = line.find('=');
                if (eq == std::string::npos)
                    throw ParseError("expected 'key = value'", line_no);
                std::string key = trim(line.substr(0, eq));
                std::string value = trim(line.substr(eq + 1));
                if (section == Section::costs) {
                    static const char* known[] = {"alpha", "beta", "gamma", "tau",
                                                  "zeta", "kappa", "rho", "premium"};
                    bool ok = false;
                    for (const char* k : known) ok = ok || key == k;
                    if (!ok) throw ParseError("unknown cost key '" + key + "'", line_no);
                    if (costs.count(key)) throw ParseError("duplicate key '" + key + "'", line_no);
                    costs[key] = parse_double(value, line_no);
                } else if (key == "levels") {
                    if (levels_seen) throw ParseError("duplicate key 'levels'", line_no);
                    levels_seen = true;
                    levels = parse_list(value, line_no);
                } else if (key == "load" || key == "max_generation") {
                    if (actions.count(key)) throw ParseError("duplicate key '" + key + "'", line_no);
                    actions[key] = parse_double(value, line_no);
                } else {
                    throw ParseError("unknown action key '" + key + "'", line_no);
                }
                break;
            }
            case Section::outcomes: {
                for (double v : parse_list(line, line_no)) outcomes.push_back(v);
                break;
            }
            case Section::distribution:
                rows.push_back(parse_list(line, line_no));
                break;
        }
    }

    for (const char* k : {"alpha", "beta", "gamma", "tau", "zeta", "kappa", "rho", "premium"})
        if (!costs.count(k)) throw ParseError(std::string("[costs] is missing key '") + k + "'", 0);
    if (!levels_seen) throw ParseError("[actions] is missing key 'levels'", 0);
    for (const char* k : {"load", "max_generation"})
        if (!actions.count(k)) throw ParseError(std::string("[actions] is missing key '") + k + "'", 0);
    if (outcomes.empty()) throw ParseError("[outcomes] section is missing or empty", 0);
    if (rows.empty()) throw ParseError("[distribution] section is missing or empty", 0);

    Scenario s;
    s.costs.alpha = costs["alpha"];
    s.costs.beta = costs["beta"];
    s.costs.gamma = costs["gamma"];
    s.costs.tau = costs["tau"];
    s.costs.zeta = costs["zeta"];
    s.costs.kappa = costs["kappa"];
    s.costs.rho = costs["rho"];
    s.costs.premium = costs["premium"];
    s.actions.levels = levels;
    s.actions.load = actions["load"];
    s.actions.max_generation = actions["max_generation"];
    s.outcomes.values = outcomes;
    s.distribution.rows = rows;
    s.validate();
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scenario file '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string format_scenario(const Scenario& s) {
    std::ostringstream out;
    out << "[costs]\n";
    out << "alpha = " << format_double(s.costs.alpha) << "\n";
    out << "beta = " << format_double(s.costs.beta) << "\n";
    out << "gamma = " << format_double(s.costs.gamma) << "\n";
    out << "tau = " << format_double(s.costs.tau) << "\n";
    out << "zeta = " << format_double(s.costs.zeta) << "\n";
    out << "kappa = " << format_double(s.costs.kappa) << "\n";
    out << "rho = " << format_double(s.costs.rho) << "\n";
    out << "premium = " << format_double(s.costs.premium) << "\n\n";
    out << "[actions]\n";
    out << "levels =";
    for (double v : s.actions.levels) out << " " << format_double(v);
    out << "\n";
    out << "load = " << format_double(s.actions.load) << "\n";
    out << "max_generation = " << format_double(s.actions.max_generation) << "\n\n";
    out << "[outcomes]\n";
    for (std::size_t i = 0; i < s.outcomes.values.size(); ++i)
        out << (i ? " " : "") << format_double(s.outcomes.values[i]);
    out << "\n\n";
    out << "[distribution]\n";
    for (const auto& row : s.distribution.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << format_double(row[i]);
        out << "\n";
    }
    return out.str();
}

void save_scenario(const Scenario& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write scenario file '" + path + "'");
    out << format_scenario(s);
}

}  // namespace raaskit
