#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace walkbij {

// Result of exhaustively checking a bijection or identity.
struct VerificationReport {
    std::string name;
    BigInt domain_size{0};
    BigInt codomain_size{0};
    bool injective = true;
    bool surjective = true;
    std::vector<std::pair<std::string, bool>> preserved_stats;
    std::optional<std::string> counterexample;

    bool bijection_verified() const {
        return injective && surjective && domain_size == codomain_size;
    }

    bool all_ok() const {
        if (!bijection_verified()) return false;
        for (const auto& [_, ok] : preserved_stats)
            if (!ok) return false;
        return true;
    }

    void note_counterexample(const std::string& text) {
        if (!counterexample) counterexample = text;
    }

    std::string summary() const {
        std::ostringstream out;
        out << "domain=" << domain_size << " codomain=" << codomain_size
            << " injective=" << (injective ? "yes" : "no")
            << " surjective=" << (surjective ? "yes" : "no");
        for (const auto& [stat, ok] : preserved_stats)
            out << " " << stat << "=" << (ok ? "ok" : "violated");
        if (counterexample) out << " counterexample[" << *counterexample << "]";
        return out.str();
    }
};

// Combine per-class reports (e.g. one per vote split) into one.
inline VerificationReport merge_reports(std::string name,
                                        const std::vector<VerificationReport>& parts) {
    VerificationReport out;
    out.name = std::move(name);
    for (const VerificationReport& p : parts) {
        out.domain_size += p.domain_size;
        out.codomain_size += p.codomain_size;
        out.injective = out.injective && p.injective;
        out.surjective = out.surjective && p.surjective;
        if (p.counterexample) out.note_counterexample(*p.counterexample);
        for (const auto& [stat, ok] : p.preserved_stats) {
            bool found = false;
            for (auto& [have, have_ok] : out.preserved_stats) {
                if (have == stat) {
                    have_ok = have_ok && ok;
                    found = true;
                    break;
                }
            }
            if (!found) out.preserved_stats.emplace_back(stat, ok);
        }
    }
    return out;
}

} // namespace walkbij
