#pragma once

// Knot/link records with embedded fixtures for the worked examples (L9a20,
// the trefoil and cinquefoil, the figure-eight, the T(2,1-2n) twist family).
// File format is JSON-lines, one record per line; polynomials are lists of
// {"e": [exponents...], "c": coefficient} pairs.

#include "dehn/alexander.hpp"
#include "dehn/invariants.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace dehn {

using Json = nlohmann::ordered_json;

struct KnotRecord {
    std::string name;
    LaurentPoly1 alexander;  // any unit representative
    std::optional<Int> genus;
    std::optional<std::pair<Int, Int>> torus;
    std::optional<bool> lspace_knot;
    std::optional<VSequence> v_sequence;
    std::optional<std::string> mirror_of;
};

struct LinkRecord {
    std::string name;
    Int linking_number;
    LaurentPoly2 multivariable;
    std::pair<bool, bool> unknotted;
};

using Record = std::variant<KnotRecord, LinkRecord>;

/// (t^{ab}-1)(t-1)/((t^a-1)(t^b-1)) by exact polynomial division; mirror
/// parameters give the same polynomial (the Alexander polynomial is
/// mirror-invariant), so |a|,|b| are used.
LaurentPoly1 torus_alexander(const Int& a, const Int& b);

Json poly_to_json(const LaurentPoly1& f);
Json poly_to_json(const LaurentPoly2& f);
LaurentPoly1 poly1_from_json(const Json& j);
LaurentPoly2 poly2_from_json(const Json& j);

Json record_to_json(const Record& record);

/// Parses and fully validates one record; violations raise
/// std::invalid_argument naming the record and field.
Record record_from_json(const Json& j);

/// UTF-8 JSON-lines, one record per line; blank lines are ignored.
std::vector<Record> load_records(std::string_view text);

std::string dump_records(const std::vector<Record>& records);

const std::vector<Record>& embedded_fixtures();

const std::string& record_name(const Record& record);
const Record* find_record(const std::vector<Record>& records, const std::string& name);
const LinkRecord& fixture_link(const std::string& name);
const KnotRecord& fixture_knot(const std::string& name);

}  // namespace dehn
