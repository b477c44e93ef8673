#include "mealsim/config.hpp"

#include "mealsim/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace mealsim {

namespace {

const std::vector<std::string> kRunKeys = {"model",      "horizon", "output_interval",
                                           "scheme",     "resolution", "per_kg",
                                           "meal",       "carbs"};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_whitespace(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream stream(s);
    std::string token;
    while (stream >> token) out.push_back(token);
    return out;
}

[[noreturn]] void fail(const std::string& path, int line, const std::string& message) {
    throw ConfigError(path + ":" + std::to_string(line) + ": " + message);
}

double parse_number(const std::string& path, int line, const std::string& text) {
    const std::string t = trim(text);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size()) {
        fail(path, line, "'" + t + "' is not a number");
    }
    return value;
}

bool parse_bool(const std::string& path, int line, const std::string& text) {
    const std::string t = trim(text);
    if (t == "true" || t == "yes" || t == "on" || t == "1") return true;
    if (t == "false" || t == "no" || t == "off" || t == "0") return false;
    fail(path, line, "'" + t + "' is not a boolean (use true/false)");
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diagonal = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t above = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                               diagonal + (a[i - 1] == b[j - 1] ? 0 : 1)});
            diagonal = above;
        }
    }
    return row[b.size()];
}

struct PendingOverride {
    std::string key;
    double value;
    int line;
};

struct PendingScenario {
    ScenarioConfig config;
    std::vector<PendingOverride> overrides;
    int header_line = 0;
    int model_line = 0;
    int horizon_line = 0;
    bool resolution_set = false;
};

void finalize(const std::string& path, PendingScenario& pending,
              std::vector<ScenarioConfig>& out) {
    ScenarioConfig& cfg = pending.config;
    if (cfg.model_id.empty()) {
        fail(path, pending.header_line, "scenario does not name a model");
    }
    if (!is_known_model(cfg.model_id)) {
        std::vector<std::string> ids;
        for (const ModelSummary& m : model_catalog()) ids.push_back(m.id);
        const std::string suggestion = nearest_key(cfg.model_id, ids);
        fail(path, pending.model_line,
             "unknown model '" + cfg.model_id + "'" +
                 (suggestion.empty() ? "" : " (did you mean '" + suggestion + "'?)"));
    }
    if (!(cfg.horizon_min > 0.0)) {
        fail(path, pending.horizon_line > 0 ? pending.horizon_line : pending.header_line,
             "horizon must be positive");
    }
    const std::vector<std::string>& known = known_parameter_names(cfg.model_id);
    for (const PendingOverride& o : pending.overrides) {
        if (std::find(known.begin(), known.end(), o.key) == known.end()) {
            std::vector<std::string> candidates = known;
            candidates.insert(candidates.end(), kRunKeys.begin(), kRunKeys.end());
            const std::string suggestion = nearest_key(o.key, candidates);
            fail(path, o.line,
                 "unknown key '" + o.key + "' for model '" + cfg.model_id + "'" +
                     (suggestion.empty() ? ""
                                         : " (did you mean '" + suggestion + "'?)"));
        }
        cfg.overrides[o.key] = o.value;
    }
    if (cfg.name.empty()) cfg.name = cfg.model_id;
    try {
        cfg.schedule.validate();
    } catch (const std::exception& e) {
        fail(path, pending.header_line, e.what());
    }
    out.push_back(cfg);
}

}  // namespace

ModelInstance ScenarioConfig::build_model() const {
    return make_model(model_id, overrides, scheme, resolution);
}

std::string nearest_key(const std::string& key, const std::vector<std::string>& candidates) {
    std::string best;
    std::size_t best_distance = std::string::npos;
    for (const std::string& candidate : candidates) {
        const std::size_t d = edit_distance(key, candidate);
        if (d < best_distance) {
            best_distance = d;
            best = candidate;
        }
    }
    // Only suggest when the candidate is actually close.
    if (best_distance == std::string::npos ||
        best_distance > std::max<std::size_t>(2, key.size() / 2)) {
        return "";
    }
    return best;
}

std::vector<ScenarioConfig> load_configs(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw ConfigError(path + ": cannot open file");

    std::vector<ScenarioConfig> out;
    PendingScenario pending;
    bool in_scenario = false;

    std::string raw;
    int line_number = 0;
    while (std::getline(file, raw)) {
        ++line_number;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') fail(path, line_number, "unterminated section header");
            if (in_scenario) finalize(path, pending, out);
            pending = PendingScenario{};
            pending.header_line = line_number;
            in_scenario = true;
            std::string header = trim(line.substr(1, line.size() - 2));
            if (header.rfind("scenario", 0) != 0) {
                fail(path, line_number,
                     "unknown section '" + header + "' (expected [scenario <name>])");
            }
            pending.config.name = trim(header.substr(8));
            continue;
        }

        const auto equals = line.find('=');
        if (equals == std::string::npos) {
            fail(path, line_number, "expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, equals));
        const std::string value = trim(line.substr(equals + 1));
        if (key.empty()) fail(path, line_number, "empty key");

        if (!in_scenario) {
            fail(path, line_number, "'" + key + "' appears before any [scenario] section");
        }

        ScenarioConfig& cfg = pending.config;
        if (key == "model") {
            cfg.model_id = value;
            pending.model_line = line_number;
        } else if (key == "horizon") {
            cfg.horizon_min = parse_number(path, line_number, value);
            pending.horizon_line = line_number;
        } else if (key == "output_interval") {
            cfg.output_interval_min = parse_number(path, line_number, value);
            if (!(cfg.output_interval_min > 0.0)) {
                fail(path, line_number, "output_interval must be positive");
            }
        } else if (key == "scheme") {
            if (value == "fv") cfg.scheme = IntestineScheme::FiniteVolume;
            else if (value == "sg") cfg.scheme = IntestineScheme::SpectralGalerkin;
            else fail(path, line_number, "scheme must be 'fv' or 'sg'");
        } else if (key == "resolution") {
            cfg.resolution = static_cast<int>(parse_number(path, line_number, value));
            if (cfg.resolution < 1) fail(path, line_number, "resolution must be >= 1");
        } else if (key == "per_kg") {
            cfg.per_kg = parse_bool(path, line_number, value);
        } else if (key == "meal") {
            const std::vector<std::string> parts = split_whitespace(value);
            if (parts.size() != 3) {
                fail(path, line_number,
                     "meal takes three values: start_min carbs_g duration_min");
            }
            MealEvent event;
            event.time_min = parse_number(path, line_number, parts[0]);
            event.carbs_mg = 1000.0 * parse_number(path, line_number, parts[1]);
            event.duration_min = parse_number(path, line_number, parts[2]);
            cfg.schedule.events.push_back(event);
        } else if (key == "carbs") {
            cfg.carbs_g.clear();
            for (const std::string& part : split_whitespace(value)) {
                cfg.carbs_g.push_back(parse_number(path, line_number, part));
            }
            if (cfg.carbs_g.empty()) fail(path, line_number, "carbs list is empty");
        } else {
            pending.overrides.push_back({key, parse_number(path, line_number, value),
                                         line_number});
        }
    }
    if (in_scenario) finalize(path, pending, out);
    if (out.empty()) throw ConfigError(path + ": no [scenario] section found");
    return out;
}

ScenarioConfig load_config(const std::string& path) {
    std::vector<ScenarioConfig> all = load_configs(path);
    if (all.size() != 1) {
        throw ConfigError(path + ": expected exactly one scenario, found " +
                          std::to_string(all.size()));
    }
    return all.front();
}

}  // namespace mealsim
