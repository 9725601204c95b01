#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "divcancel/cancellation.hpp"

namespace divcancel {

/// Malformed job or corpus input; the message names the offending field.
class JobError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct JobSpec {
    std::string name;
    FieldKind field;
    WeierstrassModel model;
    CurvePoint point;
    Place place;
    long n_max = 10;
    long np_bound = default_np_bound;
    long scalar_cap = default_scalar_cap;
    nlohmann::json expected;  // optional {"kodaira", "c_v", "k"}
};

/// {"field": "Q" | "Q(t)", "a": [5 strings], "point": [2 strings],
///  "place": {"type": "prime", "p": N} | {"type": "poly", "pi": "..."},
///  "n_max": N, "np_bound": N, "scalar_cap": N, "name": "...", "expected": {...}}
/// `where` prefixes diagnostics (e.g. the file name or the corpus entry).
JobSpec parse_job(const nlohmann::json& j, const std::string& where);

nlohmann::json krecord_to_json(const KRecord& r);
KRecord krecord_from_json(const nlohmann::json& j);
std::string krecords_csv(const std::vector<KRecord>& records);

/// Entry point of the command-line tool; returns the process exit code
/// (0 success, 1 usage or input error, 2 verification mismatch).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace divcancel
