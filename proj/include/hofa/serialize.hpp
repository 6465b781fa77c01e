#pragma once

#include <json.hpp>
#include <string>

#include "hofa/codes.hpp"
#include "hofa/ncpoly.hpp"
#include "hofa/nets.hpp"

namespace hofa {

using Json = nlohmann::json;

inline constexpr int kReportSchemaVersion = 1;

// Field config: {"p": .., "t": .., "modulus_poly": [c_0, ..., c_t]}
Json field_to_json(const Field& fld);
FieldPtr field_from_json(const Json& j);

// Tables carry their field, dimension, optional alphabet, and values in the
// canonical point order.
Json dense_fn_to_json(const DenseFn& f);
DenseFn dense_fn_from_json(const Json& j);

Json word_to_json(const Word& w);
Word word_from_json(const Json& j);

// {"field": .., "n": .., "theta": [num, M], "terms": [{"exponents": [[d_ij]],
//  "depth": k, "coeff": c}]}
Json ncpoly_to_json(const NCPoly& poly);
NCPoly ncpoly_from_json(const Json& j);

Json code_to_json(const CodeSpec& code);

// Net as its generating polynomial list plus per-element tuple indices and
// tau tables (atom index -> lattice point).
Json net_to_json(const NetSpec& net);

/// Report envelope shared by every CLI subcommand. `seed` is always
/// present (0 for deterministic commands); `timestamp` is excluded from
/// byte-comparisons.
Json make_report(const std::string& command, std::uint64_t seed, const Json& params,
                 const Json& outputs, bool pass);

struct ReportValidation {
    bool ok = false;
    std::string diagnostic;
};
ReportValidation validate_report(const Json& report);
ReportValidation validate_report_file(const std::string& path);

}  // namespace hofa
