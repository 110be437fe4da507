#include "cartan/residual.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cartan {

namespace {

bool passes(double sup, double tol) { return std::isfinite(sup) && sup <= tol; }

}  // namespace

void ResidualReport::add(const std::string& name, const std::vector<double>& values, double tolerance)
{
    ResidualEntry e;
    e.name = name;
    e.tolerance = tolerance;
    e.count = static_cast<int>(values.size());
    double sum = 0.0;
    for (double v : values) {
        const double a = std::isnan(v) ? std::numeric_limits<double>::infinity() : std::abs(v);
        e.sup = std::max(e.sup, a);
        sum += a;
    }
    e.mean = values.empty() ? 0.0 : sum / static_cast<double>(values.size());
    e.pass = passes(e.sup, tolerance);
    entries_.push_back(e);
}

void ResidualReport::addValue(const std::string& name, double value, double tolerance)
{
    add(name, std::vector<double>{value}, tolerance);
}

void ResidualReport::merge(const ResidualReport& other, const std::string& prefix)
{
    for (ResidualEntry e : other.entries_) {
        if (!prefix.empty()) {
            e.name = prefix + "." + e.name;
        }
        entries_.push_back(e);
    }
}

void ResidualReport::scaleTolerances(double factor)
{
    for (auto& e : entries_) {
        e.tolerance *= factor;
        e.pass = passes(e.sup, e.tolerance);
    }
}

bool ResidualReport::allPass() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const ResidualEntry& e) { return e.pass; });
}

bool ResidualReport::has(const std::string& name) const
{
    return std::any_of(entries_.begin(), entries_.end(), [&](const ResidualEntry& e) { return e.name == name; });
}

const ResidualEntry& ResidualReport::at(const std::string& name) const
{
    for (const auto& e : entries_) {
        if (e.name == name) {
            return e;
        }
    }
    throw std::out_of_range("no residual named " + name);
}

std::vector<std::string> ResidualReport::failing() const
{
    std::vector<std::string> out;
    for (const auto& e : entries_) {
        if (!e.pass) {
            out.push_back(e.name);
        }
    }
    return out;
}

double ResidualReport::worst() const
{
    double w = 0.0;
    for (const auto& e : entries_) {
        w = std::max(w, e.sup);
    }
    return w;
}

}  // namespace cartan
