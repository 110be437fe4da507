#include "commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>

#include "cartan/errors.hpp"
#include "cartan/extensions.hpp"
#include "cartan/group.hpp"
#include "cartan/surface.hpp"
#include "cartan/vortex2d.hpp"
#include "cartan/vortex3d.hpp"

namespace cartan::cli {

namespace {

using nlohmann::json;
using poly::cd;
using std::numbers::pi;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
/// Grid points this close to the boundary of a disk chart are reported as NaN.
constexpr double kBoundaryMargin = 1e-9;

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

int exitCodeFor(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NonConvergence:
    case ErrorKind::TailDivergence:
    case ErrorKind::DifferentiationDepth:
        return kNonConvergence;
    default:
        return kUsageError;
    }
}

void surfaceChecks(ResidualReport& rep, const surface::SurfaceGeometry& g, const Sampling& s, const std::string& name)
{
    const auto pts = surface::samplePoints(g, s.count, s.seed);
    rep.merge(surface::structureGaussResiduals(g, pts), name);
    rep.merge(surface::flatnessResidual(g, pts), name);
    rep.merge(surface::realityResidual(g, pts), name);
    rep.merge(surface::sectionPullbackCheck(g, pts), name);
}

cd holonomyBase(const std::vector<cd>& excluded)
{
    for (cd z : {cd{0.0, 0.0}, cd{0.5, 0.0}, cd{0.0, 0.5}, cd{-0.5, 0.0}}) {
        bool clear = true;
        for (const cd& e : excluded) {
            clear = clear && std::abs(z - e) > 0.05;
        }
        if (clear) {
            return z;
        }
    }
    return {0.3, 0.3};
}

void liftChecks(ResidualReport& rep, const Job& job, const vortex2d::VortexSolution& vs)
{
    const auto pair = vortex3d::liftRationalMap(job.map, *job.lift, job.lambda0, job.lambda);
    auto vc = vortex3d::extractConfiguration(pair);
    const auto pts = vortex3d::samplePoints(vc, job.sampling.count, job.sampling.seed, job.sampling.excision);
    rep.merge(vortex3d::bundleMapChecks(pair, pts), "vortex3d");
    rep.merge(vortex3d::connectionFlatness(vc, pts), "vortex3d");
    if (pair.mode == vortex3d::LiftMode::Homogeneous) {
        rep.merge(vortex3d::closedFormCheck(pair, pts), "vortex3d");
    }
    try {
        const auto h = vortex3d::holonomy(vc, holonomyBase(vc.excluded));
        rep.addValue("vortex3d.holonomy", std::abs(h.value.c0.value().real() - 2.0 * pi * h.n), 1e-6 * (1.0 + 2.0 * pi * std::abs(h.n)));
        rep.setMeta("holonomy_n", std::to_string(h.n));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NonQuantized) {
            throw;
        }
        rep.addValue("vortex3d.holonomy", std::numeric_limits<double>::infinity(), 0.0);
    }
    const auto basePoints = vortex2d::samplePoints(vs, job.sampling.count, job.sampling.seed, job.sampling.excision);
    rep.merge(vortex3d::descendCheck(vc, basePoints), "vortex3d");
    if (job.perturbation != 0.0) {
        vc = vortex3d::perturb(vc, job.perturbation);
    }
    rep.merge(vortex3d::configResiduals(vc, pts), "vortex3d");
    if (job.lambda0 == 1.0) {
        rep.merge(ext::magneticModeCheck(vc, pts), "extensions");
    }
}

}  // namespace

ResidualReport verifyJob(const Job& job, double tolScale)
{
    ResidualReport rep;
    const surface::SurfaceGeometry src{-job.lambda0};
    const surface::SurfaceGeometry tgt{-job.lambda};
    surfaceChecks(rep, src, job.sampling, "surface.source");
    surfaceChecks(rep, tgt, job.sampling, "surface.target");
    rep.merge(group::maurerCartanResiduals(job.lambda0, group::samplePoints(job.lambda0, job.sampling.count, job.sampling.seed)),
              "group.source");
    rep.merge(group::maurerCartanResiduals(job.lambda, group::samplePoints(job.lambda, job.sampling.count, job.sampling.seed)),
              "group.target");

    const auto clean = vortex2d::buildVortex(job.map, job.lambda0, job.lambda);
    const auto vs = job.perturbation != 0.0 ? vortex2d::perturb(clean, job.perturbation) : clean;
    const auto pts = vortex2d::samplePoints(vs, job.sampling.count, job.sampling.seed, job.sampling.excision);
    rep.merge(vortex2d::vortexResiduals(vs, pts), "vortex2d");
    rep.merge(vortex2d::flatnessResidual(vs, pts), "vortex2d");
    const auto away = vortex2d::samplePoints(vs, job.sampling.count, job.sampling.seed, job.sampling.excision, true);
    rep.merge(vortex2d::taubesResidual(clean, away), "vortex2d");

    if (job.lift) {
        liftChecks(rep, job, clean);
    }
    const auto productPts = ext::productSamplePoints(vs, std::min(job.sampling.count, 50), job.sampling.seed);
    rep.merge(ext::asdResidual(vs, ext::instantonConnection(vs), productPts), "extensions");

    rep.scaleTolerances(tolScale);
    rep.setMeta("family", vortex2d::familyName(vortex2d::classifyFamily(job.lambda0, job.lambda)));
    rep.setMeta("lambda0", std::to_string(job.lambda0));
    rep.setMeta("lambda", std::to_string(job.lambda));
    rep.setMeta("map", job.mapDescription);
    rep.setMeta("seed", std::to_string(job.sampling.seed));
    rep.setMeta("points", std::to_string(job.sampling.count));
    rep.setMeta("perturbation", std::to_string(job.perturbation));
    return rep;
}

json fluxJob(const Job& job)
{
    const auto vs = vortex2d::buildVortex(job.map, job.lambda0, job.lambda);
    auto describe = [](const vortex2d::IntegralResult& r) {
        return json{{"value", r.value},
                    {"error", r.error},
                    {"tail", r.tail},
                    {"tail_exponent", number(r.tailExponent)},
                    {"compact", r.compact}};
    };
    json out;
    out["family"] = vortex2d::familyName(vs.family());
    out["map"] = job.mapDescription;
    const auto flux = vortex2d::fluxIntegral(vs);
    json f = describe(flux);
    const double n = flux.value / (2.0 * pi);
    f["over_2pi"] = n;
    f["nearest_integer"] = std::lround(n);
    f["integer_deviation"] = std::abs(n - std::round(n));
    out["flux"] = f;
    if (vs.family() == vortex2d::Family::Hyperbolic) {
        const auto e = vortex2d::energyIntegral(vs);
        json ej = describe(e);
        ej["over_pi"] = e.value / pi;
        out["energy"] = ej;
    }
    return out;
}

void sampleJob(const Job& job, std::ostream& out)
{
    const auto vs = vortex2d::buildVortex(job.map, job.lambda0, job.lambda);
    const surface::SurfaceGeometry src = vs.source();
    const Grid& g = job.grid;
    out << "x,y,phi_modulus_squared,magnetic_field,baptista_factor\n";
    out << std::setprecision(17);
    for (int j = 0; j < g.n; ++j) {
        const double y = g.ymin + (g.ymax - g.ymin) * j / (g.n - 1);
        for (int i = 0; i < g.n; ++i) {
            const double x = g.xmin + (g.xmax - g.xmin) * i / (g.n - 1);
            const cd z{x, y};
            double m = kNaN;
            double b = kNaN;
            double bap = kNaN;
            if (src.inDomain(z, kBoundaryMargin)) {
                m = vs.phiModulusSquared(z);
                if (std::isfinite(m)) {
                    b = vortex2d::magneticField(vs, z);
                    bap = vortex2d::baptistaFactor(vs, z);
                } else {
                    m = kNaN;
                }
            }
            out << x << ',' << y << ',' << m << ',' << b << ',' << bap << '\n';
        }
    }
}

json reportToJson(const ResidualReport& report)
{
    json entries = json::array();
    for (const auto& e : report.entries()) {
        entries.push_back({{"name", e.name},
                           {"sup", number(e.sup)},
                           {"mean", number(e.mean)},
                           {"count", e.count},
                           {"tolerance", e.tolerance},
                           {"pass", e.pass}});
    }
    return json{{"meta", report.meta()}, {"all_pass", report.allPass()}, {"failing", report.failing()},
                {"entries", entries}};
}

ResidualReport reportFromJson(const json& j)
{
    ResidualReport rep;
    for (const auto& [k, v] : j.at("meta").items()) {
        rep.setMeta(k, v.get<std::string>());
    }
    for (const json& e : j.at("entries")) {
        const double sup = e.at("sup").is_null() ? std::numeric_limits<double>::infinity() : e.at("sup").get<double>();
        rep.addValue(e.at("name").get<std::string>(), sup, e.at("tolerance").get<double>());
    }
    return rep;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Integrable vortices, flat Cartan connections and their numerical verification"};
    app.require_subcommand(1);
    std::string configPath;
    std::uint64_t seed = 0;
    int points = 200;
    double tolScale = 1.0;
    std::string outDir;
    std::vector<std::string> inputs;

    auto addCommon = [&](CLI::App* sub, bool needsConfig) {
        auto* c = sub->add_option("--config", configPath, "JSON job file");
        if (needsConfig) {
            c->required();
        }
        sub->add_option("--out", outDir, "directory for result files");
    };
    auto* verify = app.add_subcommand("verify", "run every residual check for the configured jobs");
    addCommon(verify, true);
    auto* seedOpt = verify->add_option("--seed", seed, "sampling seed (default 0)");
    auto* pointsOpt = verify->add_option("--points", points, "sample points per check (default 200)")
                          ->check(CLI::PositiveNumber);
    verify->add_option("--tol-scale", tolScale, "multiply every tolerance (default 1)")->check(CLI::PositiveNumber);
    auto* flux = app.add_subcommand("flux", "flux and energy integrals");
    addCommon(flux, true);
    auto* sample = app.add_subcommand("sample", "write field grids as CSV");
    addCommon(sample, true);
    auto* report = app.add_subcommand("report", "merge verify outputs into one summary");
    report->add_option("inputs", inputs, "verify JSON files")->required()->check(CLI::ExistingFile);
    report->add_option("--out", outDir, "directory for the summary");

    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    auto emit = [&](const std::string& file, const std::string& text) {
        if (!outDir.empty()) {
            std::filesystem::create_directories(outDir);
            std::ofstream f(std::filesystem::path(outDir) / file);
            f << text;
        }
    };

    try {
        Overrides ov;
        if (*seedOpt) {
            ov.seed = seed;
        }
        if (*pointsOpt) {
            ov.points = points;
        }
        if (verify->parsed()) {
            const auto jobs = loadJobs(configPath, ov);
            std::vector<std::future<ResidualReport>> pending;
            for (const auto& job : jobs) {
                pending.push_back(std::async(std::launch::async, [&job, tolScale] { return verifyJob(job, tolScale); }));
            }
            ResidualReport all;
            json perJob = json::array();
            for (std::size_t k = 0; k < jobs.size(); ++k) {
                const Job& job = jobs[k];
                const ResidualReport r = pending[k].get();
                json jr = reportToJson(r);
                jr["name"] = job.name;
                perJob.push_back(jr);
                all.merge(r, job.name);
            }
            json result{{"all_pass", all.allPass()}, {"failing", all.failing()}, {"jobs", perJob}};
            const std::string text = result.dump(2) + "\n";
            out << text;
            emit("verify.json", text);
            return all.allPass() ? kPass : kVerificationFailed;
        }
        if (flux->parsed()) {
            json results = json::array();
            for (const auto& job : loadJobs(configPath, ov)) {
                json r = fluxJob(job);
                r["name"] = job.name;
                results.push_back(r);
            }
            const std::string text = json{{"results", results}}.dump(2) + "\n";
            out << text;
            emit("flux.json", text);
            return kPass;
        }
        if (sample->parsed()) {
            const auto jobs = loadJobs(configPath, ov);
            for (const auto& job : jobs) {
                std::ostringstream csv;
                sampleJob(job, csv);
                if (outDir.empty()) {
                    out << csv.str();
                } else {
                    emit(job.name + ".csv", csv.str());
                    out << "wrote " << (std::filesystem::path(outDir) / (job.name + ".csv")).string() << '\n';
                }
            }
            return kPass;
        }
        // report
        ResidualReport merged;
        json sources = json::array();
        for (const auto& path : inputs) {
            std::ifstream in(path);
            json j;
            try {
                j = json::parse(in);
            } catch (const json::parse_error& e) {
                throw Error(ErrorKind::Config, "'" + path + "' is not valid JSON: " + e.what());
            }
            const std::string stem = std::filesystem::path(path).stem().string();
            try {
                for (const json& jr : j.at("jobs")) {
                    merged.merge(reportFromJson(jr), stem + "." + jr.at("name").get<std::string>());
                }
            } catch (const json::exception& e) {
                throw Error(ErrorKind::Config, "'" + path + "' is not a verify report: " + e.what());
            }
            sources.push_back(path);
        }
        json summary = reportToJson(merged);
        summary["inputs"] = sources;
        const std::string text = summary.dump(2) + "\n";
        out << text;
        emit("report.json", text);
        return merged.allPass() ? kPass : kVerificationFailed;
    } catch (const Error& e) {
        err << "error [" << errorKindName(e.kind()) << "]: " << e.what() << '\n';
        return exitCodeFor(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace cartan::cli
