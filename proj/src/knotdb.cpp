#include "dehn/knotdb.hpp"

#include <sstream>
#include <stdexcept>

namespace dehn {

LaurentPoly1 torus_alexander(const Int& a, const Int& b) {
    Int aa = abs(a), bb = abs(b);
    if (aa < 2 || bb < 2) throw std::domain_error("torus_alexander: need |a|,|b| >= 2");
    if (gcd(aa, bb) != 1) throw std::domain_error("torus_alexander: parameters must be coprime");
    if (aa * bb > 100000) throw std::domain_error("torus_alexander: parameters too large");
    auto power_minus_one = [](long e) {
        // t^e - 1
        LaurentPoly1 f;
        f.add_term(e, 1);
        f.add_term(0, -1);
        return f;
    };
    long la = mpz_get_si(aa.get_mpz_t()), lb = mpz_get_si(bb.get_mpz_t());
    LaurentPoly1 numerator = power_minus_one(la * lb) * power_minus_one(1);
    LaurentPoly1 result = exact_divide(exact_divide(numerator, power_minus_one(la)), power_minus_one(lb));
    return result;
}

namespace {

Int int_from_json(const Json& j, const std::string& context) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument(context + ": expected integer or integer string");
}

Json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return Json(mpz_get_si(v.get_mpz_t()));
    return Json(v.get_str());
}

std::int64_t exp_from_json(const Json& j, const std::string& context) {
    if (!j.is_number_integer()) throw std::invalid_argument(context + ": exponents must be integers");
    return j.get<std::int64_t>();
}

}  // namespace

Json poly_to_json(const LaurentPoly1& f) {
    Json out = Json::array();
    for (const auto& [e, c] : f.terms()) {
        out.push_back(Json{{"e", Json::array({e})}, {"c", int_to_json(c)}});
    }
    return out;
}

Json poly_to_json(const LaurentPoly2& f) {
    Json out = Json::array();
    for (const auto& [e, c] : f.terms()) {
        out.push_back(Json{{"e", Json::array({e.first, e.second})}, {"c", int_to_json(c)}});
    }
    return out;
}

LaurentPoly1 poly1_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial: expected an array of terms");
    LaurentPoly1 f;
    for (const auto& term : j) {
        if (!term.contains("e") || !term.contains("c") || !term["e"].is_array() || term["e"].size() != 1) {
            throw std::invalid_argument("polynomial: each term needs e=[exp] and c");
        }
        f.add_term(exp_from_json(term["e"][0], "polynomial"), int_from_json(term["c"], "polynomial"));
    }
    return f;
}

LaurentPoly2 poly2_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial: expected an array of terms");
    LaurentPoly2 f;
    for (const auto& term : j) {
        if (!term.contains("e") || !term.contains("c") || !term["e"].is_array() || term["e"].size() != 2) {
            throw std::invalid_argument("polynomial: each term needs e=[exp1,exp2] and c");
        }
        f.add_term({exp_from_json(term["e"][0], "polynomial"), exp_from_json(term["e"][1], "polynomial")},
                   int_from_json(term["c"], "polynomial"));
    }
    return f;
}

Json record_to_json(const Record& record) {
    Json j;
    if (const auto* knot = std::get_if<KnotRecord>(&record)) {
        j["type"] = "knot";
        j["name"] = knot->name;
        j["alexander"] = poly_to_json(knot->alexander);
        if (knot->genus) j["genus"] = int_to_json(*knot->genus);
        if (knot->torus) j["torus"] = Json::array({int_to_json(knot->torus->first), int_to_json(knot->torus->second)});
        if (knot->lspace_knot) j["lspace_knot"] = *knot->lspace_knot;
        if (knot->v_sequence) {
            Json vs = Json::array();
            for (const auto& v : knot->v_sequence->values()) vs.push_back(int_to_json(v));
            j["v_sequence"] = vs;
        }
        if (knot->mirror_of) j["mirror_of"] = *knot->mirror_of;
    } else {
        const auto& link = std::get<LinkRecord>(record);
        j["type"] = "link";
        j["name"] = link.name;
        j["components"] = 2;
        j["linking_number"] = int_to_json(link.linking_number);
        j["unknotted"] = Json::array({link.unknotted.first, link.unknotted.second});
        j["multivariable"] = poly_to_json(link.multivariable);
    }
    return j;
}

namespace {

[[noreturn]] void load_fail(const std::string& name, const std::string& field, const std::string& what) {
    throw std::invalid_argument("record '" + name + "', field '" + field + "': " + what);
}

KnotRecord knot_from_json(const Json& j, const std::string& name) {
    KnotRecord knot;
    knot.name = name;
    if (!j.contains("alexander")) load_fail(name, "alexander", "missing");
    try {
        knot.alexander = poly1_from_json(j["alexander"]);
    } catch (const std::exception& e) {
        load_fail(name, "alexander", e.what());
    }
    if (knot.alexander.is_zero()) load_fail(name, "alexander", "the zero polynomial is not a knot polynomial");
    try {
        symmetric_normalize(knot.alexander);
    } catch (const std::exception& e) {
        load_fail(name, "alexander", std::string("symmetric check failed: ") + e.what());
    }
    if (j.contains("genus")) {
        Int g = int_from_json(j["genus"], name + ".genus");
        if (g < 0) load_fail(name, "genus", "must be non-negative");
        Int span = knot.alexander.max_exp() - knot.alexander.min_exp();
        if (span > 2 * g) load_fail(name, "genus", "Alexander span exceeds 2*genus");
        knot.genus = g;
    }
    if (j.contains("torus")) {
        const Json& t = j["torus"];
        if (!t.is_array() || t.size() != 2) load_fail(name, "torus", "expected [a, b]");
        Int a = int_from_json(t[0], name + ".torus");
        Int b = int_from_json(t[1], name + ".torus");
        LaurentPoly1 expected;
        try {
            expected = torus_alexander(a, b);
        } catch (const std::exception& e) {
            load_fail(name, "torus", e.what());
        }
        if (!eq_up_to_units(knot.alexander, expected)) {
            load_fail(name, "torus", "alexander does not match the torus-knot polynomial");
        }
        Int expected_genus = (abs(a) - 1) * (abs(b) - 1) / 2;
        if (knot.genus && *knot.genus != expected_genus) {
            load_fail(name, "genus", "torus knot T(" + a.get_str() + "," + b.get_str() + ") has genus " +
                                         expected_genus.get_str());
        }
        knot.torus = {a, b};
    }
    if (j.contains("lspace_knot")) {
        if (!j["lspace_knot"].is_boolean()) load_fail(name, "lspace_knot", "expected a boolean");
        knot.lspace_knot = j["lspace_knot"].get<bool>();
    }
    if (j.contains("v_sequence")) {
        if (!j["v_sequence"].is_array()) load_fail(name, "v_sequence", "expected an array");
        std::vector<Int> vs;
        for (const auto& v : j["v_sequence"]) vs.push_back(int_from_json(v, name + ".v_sequence"));
        try {
            knot.v_sequence = VSequence(std::move(vs));
        } catch (const std::exception& e) {
            load_fail(name, "v_sequence", e.what());
        }
    }
    if (j.contains("mirror_of")) {
        if (!j["mirror_of"].is_string()) load_fail(name, "mirror_of", "expected a string");
        knot.mirror_of = j["mirror_of"].get<std::string>();
    }
    return knot;
}

LinkRecord link_from_json(const Json& j, const std::string& name) {
    LinkRecord link;
    link.name = name;
    if (j.contains("components")) {
        if (!j["components"].is_number_integer() || j["components"].get<int>() != 2) {
            load_fail(name, "components", "only 2-component links are supported");
        }
    }
    if (!j.contains("linking_number")) load_fail(name, "linking_number", "missing");
    link.linking_number = int_from_json(j["linking_number"], name + ".linking_number");
    if (!j.contains("unknotted") || !j["unknotted"].is_array() || j["unknotted"].size() != 2 ||
        !j["unknotted"][0].is_boolean() || !j["unknotted"][1].is_boolean()) {
        load_fail(name, "unknotted", "expected [bool, bool]");
    }
    link.unknotted = {j["unknotted"][0].get<bool>(), j["unknotted"][1].get<bool>()};
    if (!j.contains("multivariable")) load_fail(name, "multivariable", "missing");
    try {
        link.multivariable = poly2_from_json(j["multivariable"]);
    } catch (const std::exception& e) {
        load_fail(name, "multivariable", e.what());
    }
    if (link.linking_number != 0) {
        // Torres condition at (1,1): |Delta_L(1,1)| = |lk(L1,L2)|
        Int total = 0;
        for (const auto& [e, c] : link.multivariable.terms()) total += c;
        if (abs(total) != abs(link.linking_number)) {
            load_fail(name, "multivariable",
                      "Torres condition failed: |Delta(1,1)| = " + Int(abs(total)).get_str() +
                          " but |linking_number| = " + Int(abs(link.linking_number)).get_str());
        }
    }
    return link;
}

}  // namespace

Record record_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("record: expected a JSON object");
    if (!j.contains("name") || !j["name"].is_string()) {
        throw std::invalid_argument("record: missing string field 'name'");
    }
    std::string name = j["name"].get<std::string>();
    if (!j.contains("type") || !j["type"].is_string()) load_fail(name, "type", "missing");
    std::string type = j["type"].get<std::string>();
    if (type == "knot") return knot_from_json(j, name);
    if (type == "link") return link_from_json(j, name);
    load_fail(name, "type", "unknown record type '" + type + "'");
}

std::vector<Record> load_records(std::string_view text) {
    std::vector<Record> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        ++line_no;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        Json j;
        try {
            j = Json::parse(line);
        } catch (const Json::parse_error& e) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
        }
        out.push_back(record_from_json(j));
    }
    return out;
}

std::string dump_records(const std::vector<Record>& records) {
    std::ostringstream os;
    for (const auto& r : records) os << record_to_json(r).dump() << "\n";
    return os.str();
}

namespace {

std::vector<Record> build_fixtures() {
    std::vector<Record> out;

    // L9a20: both components unknots, linking number 1; the 13-term
    // multivariable Alexander polynomial. The +1/-1 twists of its two
    // components share an Alexander polynomial pairwise but are distinct
    // knots (known from volume computations, which are outside this tool's
    // reach) -- the distinctness tables deliberately report only the
    // polynomial comparison.
    LinkRecord l9a20;
    l9a20.name = "L9a20";
    l9a20.linking_number = 1;
    l9a20.unknotted = {true, true};
    l9a20.multivariable = LaurentPoly2::from_terms({
        {{2, 4}, 1}, {{2, 3}, -3}, {{1, 4}, -1}, {{2, 2}, 3}, {{1, 3}, 4}, {{2, 1}, -1}, {{1, 2}, -7},
        {{0, 3}, -1}, {{1, 1}, 4}, {{0, 2}, 3}, {{1, 0}, -1}, {{0, 1}, -3}, {{0, 0}, 1},
    });
    out.emplace_back(std::move(l9a20));

    auto torus_knot = [](std::string name, const Int& a, const Int& b, bool lspace,
                         std::optional<std::string> mirror_of) {
        KnotRecord k;
        k.name = std::move(name);
        k.torus = {a, b};
        k.alexander = symmetric_normalize(torus_alexander(a, b));
        k.genus = (abs(a) - 1) * (abs(b) - 1) / 2;
        k.lspace_knot = lspace;
        k.mirror_of = std::move(mirror_of);
        return k;
    };

    // Right-handed trefoil and cinquefoil: the genus <= 2 L-space knots.
    out.emplace_back(torus_knot("K3a1", 3, 2, true, "H_2"));
    out.emplace_back(torus_knot("K5a2", 5, 2, true, "H_3"));

    // Figure-eight: amphichiral, not an L-space knot.
    KnotRecord fig8;
    fig8.name = "K4a1";
    fig8.alexander = LaurentPoly1::from_terms({{-1, -1}, {0, 3}, {1, -1}});
    fig8.genus = 1;
    fig8.lspace_knot = false;
    fig8.mirror_of = "K4a1";
    out.emplace_back(std::move(fig8));

    // The twist family H_n = T(2, 1-2n); n = 0, 1 give unknots and are
    // omitted. Positive n >= 2 are mirrors of the positive torus knots.
    for (int n : {-3, -2, -1, 2, 3}) {
        Int b = 1 - 2 * Int(n);
        std::string name = "H_" + std::to_string(n);
        std::optional<std::string> mirror;
        if (n == 2) mirror = "K3a1";
        if (n == 3) mirror = "K5a2";
        out.emplace_back(torus_knot(name, 2, b, b > 0, mirror));
    }
    return out;
}

}  // namespace

const std::vector<Record>& embedded_fixtures() {
    static const std::vector<Record> fixtures = build_fixtures();
    return fixtures;
}

const std::string& record_name(const Record& record) {
    if (const auto* knot = std::get_if<KnotRecord>(&record)) return knot->name;
    return std::get<LinkRecord>(record).name;
}

const Record* find_record(const std::vector<Record>& records, const std::string& name) {
    for (const auto& r : records) {
        if (record_name(r) == name) return &r;
    }
    return nullptr;
}

const LinkRecord& fixture_link(const std::string& name) {
    const Record* r = find_record(embedded_fixtures(), name);
    if (!r || !std::holds_alternative<LinkRecord>(*r)) {
        throw std::invalid_argument("no embedded link fixture named '" + name + "'");
    }
    return std::get<LinkRecord>(*r);
}

const KnotRecord& fixture_knot(const std::string& name) {
    const Record* r = find_record(embedded_fixtures(), name);
    if (!r || !std::holds_alternative<KnotRecord>(*r)) {
        throw std::invalid_argument("no embedded knot fixture named '" + name + "'");
    }
    return std::get<KnotRecord>(*r);
}

}  // namespace dehn
