#pragma once

#include <string>
#include <vector>

namespace infomeas {

/// One verified condition. Slacks are normalized so that the condition holds
/// exactly when every slack is >= -tol: margins are positive, violations
/// negative, equality constraints are stored as -|error|.
struct CertificateCheck {
    std::string name;
    bool pass = false;
    double worst_slack = 0.0;
    std::vector<double> slacks;  // one entry per vertex / instance / sample
};

struct CertificateReport {
    std::vector<CertificateCheck> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

}  // namespace infomeas
