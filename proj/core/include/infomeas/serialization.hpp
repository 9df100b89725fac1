#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "infomeas/certificate.hpp"
#include "infomeas/maxent.hpp"
#include "infomeas/measure.hpp"
#include "infomeas/poisson.hpp"
#include "infomeas/projection.hpp"
#include "infomeas/scoring.hpp"

namespace infomeas {

/// File formats.
///
/// Measure:   {"alphabet": ["a","b"], "weights": [2, 0]}
/// Family:    {"alphabet": [...], "instances": [[...], ...], "names": [...]}
///            ("names" optional; instance weights must be nonnegative
///            integers, real-valued vertices use the same layout through
///            read_convex_family_*)
/// Solution:  {"mu_star": [...], "ell_star_nats": [...], "c_nats": ...,
///             "p": [...], "support": [...], "gap": ..., "iterations": ...}
/// Report:    {"checks": [{"check": ..., "pass": ..., "worst_slack": ...,
///             "per_vertex": [...]}, ...], "pass": ...}
///
/// Writers emit numbers with 17 significant digits so artifacts are
/// byte-identical across runs and round-trip exactly; +infinity is written
/// as the string "inf" and accepted back by every reader.

DiscreteMeasure read_measure_json(const std::string& text);
DiscreteMeasure read_measure_file(const std::filesystem::path& path);
std::string to_json(const DiscreteMeasure& mu);

EmpiricalMeasure read_empirical_json(const std::string& text);
EmpiricalMeasure read_empirical_file(const std::filesystem::path& path);

InstanceFamily read_family_json(const std::string& text);
InstanceFamily read_family_file(const std::filesystem::path& path);
std::string to_json(const InstanceFamily& family);

ConvexFamily read_convex_family_json(const std::string& text);
ConvexFamily read_convex_family_file(const std::filesystem::path& path);
std::string to_json(const ConvexFamily& family);

/// Solution files carry weight vectors only; the alphabet comes from the
/// family the solution belongs to.
MaxEntSolution read_solution_json(const std::string& text, AlphabetPtr alphabet);
MaxEntSolution read_solution_file(const std::filesystem::path& path, AlphabetPtr alphabet);
std::string to_json(const MaxEntSolution& solution);

std::string to_json(const CertificateReport& report);
std::string to_json(const ProjectionResult& result);
std::string to_json(const ExpectationCheckReport& report);
std::string to_json(const HonestyScanReport& report);

/// CSV sample dump: header row of alphabet symbols, one row of counts per
/// draw.
std::string to_csv(const Alphabet& alphabet, const std::vector<CountVector>& samples);
std::string samples_to_json(const Alphabet& alphabet, const std::vector<CountVector>& samples);

void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

/// FNV-1a 64-bit content hash, hex encoded; used in run manifests.
std::string fnv1a64_hex(const std::string& bytes);

namespace jsonw {

/// Deterministic JSON emitter: keys in insertion order, doubles as %.17g,
/// +infinity as "inf". The structured writers above are built on this.
class Writer {
public:
    void begin_object();
    void end_object();
    void begin_array();
    void end_array();
    void key(const std::string& name);
    void value(const std::string& s);
    void value(const char* s);
    void value(double x);
    void value(std::int64_t x);
    void value(std::uint64_t x);
    void value(bool b);
    void raw_number(const std::string& token);

    const std::string& str() const noexcept { return out_; }

private:
    void comma();

    std::string out_;
    std::vector<bool> first_in_scope_;
    bool pending_key_ = false;
};

std::string format_double(double x);

}  // namespace jsonw

}  // namespace infomeas
