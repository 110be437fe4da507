#pragma once

#include <map>
#include <string>
#include <vector>

namespace cartan {

struct ResidualEntry {
    std::string name;
    double sup = 0.0;
    double mean = 0.0;
    int count = 0;
    double tolerance = 0.0;
    bool pass = true;
};

/// Named residual summaries in insertion order, plus free-form metadata.
/// An entry passes iff its sup is finite and at most its tolerance.
class ResidualReport {
public:
    void add(const std::string& name, const std::vector<double>& values, double tolerance);
    void addValue(const std::string& name, double value, double tolerance);
    /// Append every entry of `other`, prefixing names with `prefix` + ".".
    void merge(const ResidualReport& other, const std::string& prefix = {});
    void scaleTolerances(double factor);

    void setMeta(const std::string& key, const std::string& value) { meta_[key] = value; }
    [[nodiscard]] const std::map<std::string, std::string>& meta() const { return meta_; }

    [[nodiscard]] const std::vector<ResidualEntry>& entries() const { return entries_; }
    [[nodiscard]] bool allPass() const;
    [[nodiscard]] bool has(const std::string& name) const;
    /// Throws std::out_of_range for an unknown name.
    [[nodiscard]] const ResidualEntry& at(const std::string& name) const;
    [[nodiscard]] double sup(const std::string& name) const { return at(name).sup; }
    [[nodiscard]] std::vector<std::string> failing() const;
    /// Largest sup over all entries.
    [[nodiscard]] double worst() const;

private:
    std::vector<ResidualEntry> entries_;
    std::map<std::string, std::string> meta_;
};

}  // namespace cartan
