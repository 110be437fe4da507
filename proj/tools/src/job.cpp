#include "job.hpp"

#include <fstream>

#include "cartan/errors.hpp"
#include "cartan/vortex2d.hpp"

namespace cartan::cli {

namespace {

using nlohmann::json;
using poly::cd;
using poly::Polynomial;
using poly::RationalMap;

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::Config, what); }

cd complexOf(const json& v, const std::string& where)
{
    if (v.is_number()) {
        return {v.get<double>(), 0.0};
    }
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return {v[0].get<double>(), v[1].get<double>()};
    }
    fail(where + ": expected a number or [re, im]");
}

std::vector<cd> complexList(const json& obj, const char* key, bool required)
{
    if (!obj.contains(key)) {
        if (required) {
            fail(std::string("map: missing '") + key + "'");
        }
        return {};
    }
    const json& v = obj.at(key);
    if (!v.is_array()) {
        fail(std::string("map.") + key + ": expected an array");
    }
    std::vector<cd> out;
    for (const json& x : v) {
        out.push_back(complexOf(x, std::string("map.") + key));
    }
    return out;
}

int positiveInt(const json& obj, const char* key)
{
    if (!obj.contains(key) || !obj.at(key).is_number_integer() || obj.at(key).get<int>() < 1) {
        fail(std::string("map.") + key + ": expected a positive integer");
    }
    return obj.at(key).get<int>();
}

void parseFamily(const json& j, Job& job)
{
    if (!j.contains("family")) {
        fail("missing 'family'");
    }
    const json& f = j.at("family");
    if (f.is_string()) {
        std::tie(job.lambda0, job.lambda) = vortex2d::familyParameters(f.get<std::string>());
        return;
    }
    if (f.is_object() && f.contains("lambda0") && f.contains("lambda") && f["lambda0"].is_number() &&
        f["lambda"].is_number()) {
        job.lambda0 = f["lambda0"].get<double>();
        job.lambda = f["lambda"].get<double>();
        for (double l : {job.lambda0, job.lambda}) {
            if (l != -1.0 && l != 0.0 && l != 1.0) {
                fail("family: lambda0 and lambda must be -1, 0 or 1");
            }
        }
        return;
    }
    fail("family: expected a family name or {\"lambda0\": .., \"lambda\": ..}");
}

void parseMap(const json& j, Job& job)
{
    if (!j.contains("map") || !j.at("map").is_object()) {
        fail("missing 'map' object");
    }
    const json& m = j.at("map");
    const std::string type = m.value("type", "");
    if (type == "power") {
        const int n = positiveInt(m, "n");
        job.map = RationalMap::power(n);
        job.mapDescription = "z^" + std::to_string(n);
    } else if (type == "inverse_power" || type == "jackiw_pi_axial") {
        const int n = positiveInt(m, type == "inverse_power" ? "n" : "N");
        job.map = RationalMap::inversePower(n);
        job.mapDescription = "1/z^" + std::to_string(n);
    } else if (type == "blaschke") {
        const auto zeros = complexList(m, "zeros", false);
        const auto poles = complexList(m, "poles", false);
        for (const cd& c : zeros) {
            if (std::abs(c) >= 1.0) {
                fail("map.zeros: Blaschke zeros must lie in the unit disk");
            }
        }
        for (const cd& d : poles) {
            if (std::abs(d) >= 1.0) {
                fail("map.poles: Blaschke poles must lie in the unit disk");
            }
        }
        if (zeros.empty() && poles.empty()) {
            fail("map: a Blaschke map needs at least one zero or pole");
        }
        job.map = RationalMap::blaschke(zeros, poles);
        job.mapDescription = "blaschke(" + std::to_string(zeros.size()) + "," + std::to_string(poles.size()) + ")";
    } else if (type == "rational") {
        job.map = RationalMap(Polynomial(complexList(m, "f1", true)), Polynomial(complexList(m, "f2", true)));
        job.mapDescription = "rational(deg " + std::to_string(job.map.degree()) + ")";
    } else {
        fail("map.type: expected power, inverse_power, jackiw_pi_axial, blaschke or rational");
    }
}

void parseLift(const json& j, Job& job)
{
    const std::string lift = j.value("lift", "homogeneous");
    if (lift == "homogeneous") {
        job.lift = vortex3d::LiftMode::Homogeneous;
    } else if (lift == "trivial") {
        job.lift = vortex3d::LiftMode::Trivial;
    } else if (lift == "none") {
        job.lift.reset();
    } else {
        fail("lift: expected homogeneous, trivial or none");
    }
}

Job parseJob(const json& j, const Overrides& ov, std::size_t index)
{
    if (!j.is_object()) {
        fail("job " + std::to_string(index) + ": expected an object");
    }
    Job job;
    job.name = j.value("name", "job" + std::to_string(index));
    parseFamily(j, job);
    parseMap(j, job);
    parseLift(j, job);
    if (j.contains("sampling")) {
        const json& s = j.at("sampling");
        job.sampling.count = s.value("count", job.sampling.count);
        job.sampling.seed = s.value("seed", job.sampling.seed);
        job.sampling.excision = s.value("excision", job.sampling.excision);
    }
    if (ov.seed) {
        job.sampling.seed = *ov.seed;
    }
    if (ov.points) {
        job.sampling.count = *ov.points;
    }
    if (job.sampling.count < 1 || !(job.sampling.excision > 0.0)) {
        fail("sampling: count must be positive and excision > 0");
    }
    if (j.contains("grid")) {
        const json& g = j.at("grid");
        job.grid.n = g.value("n", job.grid.n);
        if (g.contains("x")) {
            job.grid.xmin = g["x"].at(0).get<double>();
            job.grid.xmax = g["x"].at(1).get<double>();
        }
        if (g.contains("y")) {
            job.grid.ymin = g["y"].at(0).get<double>();
            job.grid.ymax = g["y"].at(1).get<double>();
        }
        if (job.grid.n < 2 || !(job.grid.xmax > job.grid.xmin) || !(job.grid.ymax > job.grid.ymin)) {
            fail("grid: need n >= 2 and increasing ranges");
        }
    }
    job.perturbation = j.value("perturbation", 0.0);
    return job;
}

}  // namespace

std::vector<Job> parseJobs(const json& config, const Overrides& overrides)
{
    try {
        std::vector<Job> jobs;
        if (config.is_object() && config.contains("jobs")) {
            const json& list = config.at("jobs");
            if (!list.is_array() || list.empty()) {
                fail("'jobs' must be a non-empty array");
            }
            for (std::size_t k = 0; k < list.size(); ++k) {
                jobs.push_back(parseJob(list[k], overrides, k));
            }
        } else {
            jobs.push_back(parseJob(config, overrides, 0));
        }
        return jobs;
    } catch (const json::exception& e) {
        fail(std::string("malformed config: ") + e.what());
    }
}

std::vector<Job> loadJobs(const std::string& path, const Overrides& overrides)
{
    std::ifstream in(path);
    if (!in) {
        fail("cannot open config '" + path + "'");
    }
    json config;
    try {
        config = json::parse(in);
    } catch (const json::parse_error& e) {
        fail("config '" + path + "' is not valid JSON: " + e.what());
    }
    return parseJobs(config, overrides);
}

}  // namespace cartan::cli
