#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

namespace trisectrix {

/// Named residuals of one verified construction. pass() holds exactly when
/// every residual is finite and within tolerance.
class Certificate {
public:
    explicit Certificate(double tolerance) : tolerance_(tolerance) {}

    void add(const std::string& name, double residual) { residuals_[name] = residual; }

    double tolerance() const { return tolerance_; }
    const std::map<std::string, double>& residuals() const { return residuals_; }
    double residual(const std::string& name) const { return residuals_.at(name); }

    bool passes(const std::string& name) const {
        const double r = residuals_.at(name);
        return std::isfinite(r) && r <= tolerance_;
    }

    bool pass() const {
        for (const auto& [name, r] : residuals_) {
            if (!(std::isfinite(r) && r <= tolerance_)) return false;
        }
        return true;
    }

    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (const auto& [name, r] : residuals_) {
            if (!(std::isfinite(r) && r <= tolerance_)) out.push_back(name);
        }
        return out;
    }

    double max_residual() const {
        double m = 0.0;
        for (const auto& [name, r] : residuals_) {
            if (std::isnan(r)) return r;
            m = std::max(m, r);
        }
        return m;
    }

private:
    double tolerance_;
    std::map<std::string, double> residuals_;
};

}  // namespace trisectrix
