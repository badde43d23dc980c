#include "icnoma/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>

#include "icnoma/error.hpp"

namespace icnoma {

using nlohmann::json;

IndexCodingProblem Scenario::problem() const {
    std::vector<User> out;
    out.reserve(users.size());
    for (const auto& u : users) {
        User user;
        user.side.plain_known = u.cache;
        user.side.coded_rows = BitMatrix(n, u.coded_cache);
        std::set_difference(u.demands.begin(), u.demands.end(), u.cache.begin(), u.cache.end(),
                            std::inserter(user.demand.want, user.demand.want.end()));
        out.push_back(std::move(user));
    }
    return IndexCodingProblem(n, std::move(out));
}

ChannelState Scenario::channel() const {
    ChannelState ch;
    for (const auto& u : users) ch.gains.push_back(u.gain);
    return ch;
}

GroupAssignment Scenario::groups() const {
    const auto tagged = std::count_if(users.begin(), users.end(), [](const auto& u) { return u.group.has_value(); });
    if (tagged == 0) return assign_groups(channel());
    if (static_cast<std::size_t>(tagged) != users.size()) {
        throw ValidationError("either every user or no user may carry an explicit group");
    }
    std::vector<Group> tags;
    for (const auto& u : users) tags.push_back(*u.group);
    return assignment_from_tags(tags);
}

bool operator==(const Scenario& a, const Scenario& b) {
    const auto& p = a.profile;
    const auto& q = b.profile;
    return a.n == b.n && a.users == b.users && a.solver == b.solver && p.power == q.power && p.alpha == q.alpha &&
           p.beta == q.beta && p.gamma == q.gamma && p.alpha1 == q.alpha1;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ValidationError(where + ": " + what);
}

MessageSet read_indices(const json& j, std::size_t n, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of message indices");
    MessageSet out;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const auto& v = j[k];
        if (!v.is_number_integer()) fail(where + "[" + std::to_string(k) + "]", "expected an integer");
        const auto idx = v.get<long long>();
        if (idx < 1 || static_cast<std::size_t>(idx) > n) {
            fail(where + "[" + std::to_string(k) + "]", "index " + std::to_string(idx) + " outside 1.." +
                                                            std::to_string(n));
        }
        out.insert(static_cast<MessageIndex>(idx - 1));
    }
    return out;
}

json write_indices(const MessageSet& s) {
    json out = json::array();
    for (auto i : s) out.push_back(i + 1);
    return out;
}

double read_number(const json& obj, const char* key, const std::string& where, double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number()) fail(where + "." + key, "expected a number");
    return obj[key].get<double>();
}

}  // namespace

Scenario scenario_from_json(const json& doc) {
    if (!doc.is_object()) fail("scenario", "expected a JSON object");
    Scenario s;

    if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) {
        fail("n", "expected a positive integer message count");
    }
    s.n = doc["n"].get<std::size_t>();

    if (!doc.contains("users") || !doc["users"].is_array()) fail("users", "expected an array");
    const auto& users = doc["users"];
    for (std::size_t i = 0; i < users.size(); ++i) {
        const std::string where = "users[" + std::to_string(i) + "]";
        const auto& ju = users[i];
        if (!ju.is_object()) fail(where, "expected an object");
        ScenarioUser u;
        if (!ju.contains("demands")) fail(where + ".demands", "missing");
        u.demands = read_indices(ju["demands"], s.n, where + ".demands");
        if (ju.contains("cache")) u.cache = read_indices(ju["cache"], s.n, where + ".cache");
        if (ju.contains("coded_cache")) {
            const auto& rows = ju["coded_cache"];
            if (!rows.is_array()) fail(where + ".coded_cache", "expected an array of bit strings");
            for (std::size_t r = 0; r < rows.size(); ++r) {
                const std::string rw = where + ".coded_cache[" + std::to_string(r) + "]";
                if (!rows[r].is_string()) fail(rw, "expected a bit string");
                const auto text = rows[r].get<std::string>();
                if (text.size() != s.n) fail(rw, "expected " + std::to_string(s.n) + " bits");
                try {
                    u.coded_cache.push_back(BitVector::from_string(text));
                } catch (const ValidationError& e) {
                    fail(rw, e.what());
                }
            }
        }
        if (!ju.contains("gain") || !ju["gain"].is_number()) fail(where + ".gain", "expected a number");
        u.gain = ju["gain"].get<double>();
        if (!(u.gain > 0.0) || !std::isfinite(u.gain)) fail(where + ".gain", "must be positive");
        if (ju.contains("group")) {
            if (!ju["group"].is_string()) fail(where + ".group", "expected near, intermediate or far");
            try {
                u.group = parse_group(ju["group"].get<std::string>());
            } catch (const ValidationError& e) {
                fail(where + ".group", e.what());
            }
        }
        s.users.push_back(std::move(u));
    }

    if (doc.contains("profile")) {
        const auto& jp = doc["profile"];
        if (!jp.is_object()) fail("profile", "expected an object");
        auto& p = s.profile;
        p.power = read_number(jp, "power", "profile", p.power);
        p.alpha = read_number(jp, "alpha", "profile", p.alpha);
        p.beta = read_number(jp, "beta", "profile", p.beta);
        p.gamma = read_number(jp, "gamma", "profile", p.gamma);
        p.alpha1 = read_number(jp, "alpha1", "profile", p.alpha1);
        try {
            p.validate();
        } catch (const ValidationError& e) {
            fail("profile", e.what());
        }
    }
    if (doc.contains("solver")) {
        if (!doc["solver"].is_string()) fail("solver", "expected \"exact\" or \"greedy\"");
        try {
            s.solver = parse_solver(doc["solver"].get<std::string>());
        } catch (const ValidationError& e) {
            fail("solver", e.what());
        }
    }
    return s;
}

json scenario_to_json(const Scenario& s) {
    json users = json::array();
    for (const auto& u : s.users) {
        json ju;
        ju["demands"] = write_indices(u.demands);
        ju["cache"] = write_indices(u.cache);
        if (!u.coded_cache.empty()) {
            ju["coded_cache"] = json::array();
            for (const auto& r : u.coded_cache) ju["coded_cache"].push_back(r.to_string());
        }
        ju["gain"] = u.gain;
        if (u.group) ju["group"] = std::string(to_string(*u.group));
        users.push_back(std::move(ju));
    }
    return json{{"n", s.n},
                {"users", std::move(users)},
                {"profile",
                 {{"power", s.profile.power},
                  {"alpha", s.profile.alpha},
                  {"beta", s.profile.beta},
                  {"gamma", s.profile.gamma},
                  {"alpha1", s.profile.alpha1}}},
                {"solver", std::string(to_string(s.solver))}};
}

Scenario ingest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError(path.string() + ": cannot open scenario file");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
    return scenario_from_json(doc);
}

void emit(const Scenario& scenario, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError(path.string() + ": cannot write scenario file");
    out << scenario_to_json(scenario).dump(2) << '\n';
}

void RandomInstanceSpec::validate() const {
    if (n < 1) throw ValidationError("n must be positive");
    if (near_users == 0 || intermediate_users == 0 || far_users == 0) {
        throw ValidationError("every group needs at least one user");
    }
    auto in_unit = [](double d) { return d >= 0.0 && d <= 1.0; };
    if (!in_unit(cache_density) || !in_unit(demand_density)) throw ValidationError("densities must lie in [0, 1]");
    if (require_wants && demand_density == 0.0) {
        throw ValidationError("demand density 0 cannot give every user a nonempty want set");
    }
    if (require_wants && n < 2 && cache_density > 0.0) {
        throw ValidationError("with one message, a user cannot both cache and want");
    }
    if (!(spread >= 0.0)) throw ValidationError("spread must be nonnegative");
    if (!(far_center - spread > 0.0)) throw ValidationError("far cluster must stay above zero gain");
    // Clusters must not overlap, otherwise the group minima may be out of order.
    if (!(near_center - spread > intermediate_center + spread && intermediate_center - spread > far_center + spread)) {
        throw ValidationError("gain clusters overlap");
    }
}

Scenario generate(const RandomInstanceSpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    Scenario s;
    s.n = spec.n;
    auto add_cluster = [&](std::size_t count, double center, Group g) {
        for (std::size_t k = 0; k < count; ++k) {
            ScenarioUser u;
            u.gain = center + spec.spread * (2.0 * unit(rng) - 1.0);
            u.group = g;
            for (std::size_t j = 0; j < spec.n; ++j) {
                if (unit(rng) < spec.cache_density) u.cache.insert(j);
            }
            for (std::size_t j = 0; j < spec.n; ++j) {
                if (unit(rng) < spec.demand_density && !u.cache.contains(j)) u.demands.insert(j);
            }
            if (spec.require_wants && u.demands.empty()) {
                if (u.cache.size() == spec.n) {
                    // Free one cached message to be wanted.
                    auto it = std::next(u.cache.begin(), static_cast<long>(rng() % u.cache.size()));
                    u.demands.insert(*it);
                    u.cache.erase(it);
                } else {
                    std::vector<std::size_t> free;
                    for (std::size_t j = 0; j < spec.n; ++j) {
                        if (!u.cache.contains(j)) free.push_back(j);
                    }
                    u.demands.insert(free[rng() % free.size()]);
                }
            }
            s.users.push_back(std::move(u));
        }
    };
    add_cluster(spec.near_users, spec.near_center, Group::Near);
    add_cluster(spec.intermediate_users, spec.intermediate_center, Group::Intermediate);
    add_cluster(spec.far_users, spec.far_center, Group::Far);
    return s;
}

}  // namespace icnoma
