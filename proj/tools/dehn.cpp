// Command-line frontend. Every operation is exposed with machine-readable
// JSON output (default) or human-readable text (--pretty). Exact rationals
// print as "num/den"; exit codes: 0 ok, 1 failed verification, 2 usage or
// domain errors.

#include "dehn/alexander.hpp"
#include "dehn/arith.hpp"
#include "dehn/classify.hpp"
#include "dehn/hypbounds.hpp"
#include "dehn/invariants.hpp"
#include "dehn/knotdb.hpp"
#include "dehn/search.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using dehn::Int;
using dehn::Json;
using dehn::Rational;

Int parse_int(const std::string& s) {
    try {
        return Int(s, 10);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
}

std::vector<Int> parse_int_list(const std::string& s) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int(item));
    return out;
}

std::string rat_str(const Rational& r) {
    return r.get_str();
}

Json slope_json(const dehn::Slope& s) {
    return Json{{"p", s.p().get_str()}, {"q", s.q().get_str()}};
}

Json seifert_json(const dehn::SeifertData& s) {
    if (s.kind == dehn::SeifertData::Kind::SfsOverS2) {
        Json fibers = Json::array();
        for (const auto& f : s.fibers) fibers.push_back(f.get_str());
        return Json{{"kind", "sfs_over_s2"}, {"fibers", fibers}};
    }
    Json summands = Json::array();
    for (const auto& [a, b] : s.summands) summands.push_back(Json::array({a.get_str(), b.get_str()}));
    return Json{{"kind", "connected_sum_lens"}, {"summands", summands}};
}

Json certificate_json(const dehn::SlopeCertificate& cert) {
    Json conditions = Json::array();
    for (const auto& c : cert.conditions) {
        conditions.push_back(Json{{"name", c.name}, {"ok", c.ok}, {"witness", c.witness.get_str()}});
    }
    Json j{{"p", cert.p.get_str()}, {"q", cert.q.get_str()}};
    if (cert.torus) {
        j["torus"] = Json::array({cert.torus->first.get_str(), cert.torus->second.get_str()});
    }
    j["conditions"] = conditions;
    return j;
}

dehn::SlopeCertificate certificate_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("q") || !j.contains("conditions")) {
        throw std::invalid_argument("certificate: expected {p, q, conditions}");
    }
    auto as_int = [](const Json& v) {
        if (v.is_string()) return parse_int(v.get<std::string>());
        if (v.is_number_integer()) return Int(v.get<std::int64_t>());
        throw std::invalid_argument("certificate: expected integer");
    };
    dehn::SlopeCertificate cert;
    cert.p = as_int(j["p"]);
    cert.q = as_int(j["q"]);
    if (j.contains("torus")) {
        if (!j["torus"].is_array() || j["torus"].size() != 2) {
            throw std::invalid_argument("certificate: torus must be [a, b]");
        }
        cert.torus = {as_int(j["torus"][0]), as_int(j["torus"][1])};
    }
    for (const auto& c : j["conditions"]) {
        cert.conditions.push_back(
            {c.at("name").get<std::string>(), c.at("ok").get<bool>(), as_int(c.at("witness"))});
    }
    return cert;
}

// Resolves --link as an embedded fixture name, else as a JSON-lines file.
dehn::LinkRecord resolve_link(const std::string& link_arg, const std::string& name_filter) {
    if (const dehn::Record* r = dehn::find_record(dehn::embedded_fixtures(), link_arg)) {
        if (const auto* link = std::get_if<dehn::LinkRecord>(r)) return *link;
        throw std::invalid_argument("record '" + link_arg + "' is a knot, not a link");
    }
    std::ifstream in(link_arg);
    if (!in) throw std::invalid_argument("no fixture or readable file named '" + link_arg + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto records = dehn::load_records(buffer.str());
    for (const auto& r : records) {
        if (const auto* link = std::get_if<dehn::LinkRecord>(&r)) {
            if (name_filter.empty() || link->name == name_filter) return *link;
        }
    }
    throw std::invalid_argument("no matching link record in '" + link_arg + "'");
}

struct Output {
    Json json;
    std::string pretty;  // empty: fall back to indented JSON
    int exit_code = 0;
};

void emit(const Output& out, bool pretty) {
    if (pretty) {
        if (!out.pretty.empty()) {
            std::cout << out.pretty;
            if (out.pretty.back() != '\n') std::cout << "\n";
        } else {
            std::cout << out.json.dump(2) << "\n";
        }
    } else {
        std::cout << out.json.dump() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact surgery-slope calculator: obstruction invariants, twist-family "
                 "Alexander calculus, and certified characterising-slope search"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "human-readable output instead of compact JSON");

    std::function<Output()> run;

    // ---- invariants ----
    auto* lens_cw = app.add_subcommand("lens-cw", "Casson-Walker invariant of the lens space L(p,q)");
    {
        auto p = std::make_shared<std::string>();
        auto q = std::make_shared<std::string>();
        lens_cw->add_option("P", *p, "order of H_1")->required();
        lens_cw->add_option("Q", *q, "surgery denominator")->required();
        lens_cw->callback([&run, p, q] {
            run = [p, q]() -> Output {
                Rational lambda = dehn::cw_lens(parse_int(*p), parse_int(*q));
                return {Json{{"lambda", rat_str(lambda)}},
                        "lambda(L(" + *p + "," + *q + ")) = " + rat_str(lambda)};
            };
        });
    }

    auto* surgery_cw = app.add_subcommand("surgery-cw", "Casson-Walker invariant of K(p/q) from Delta''_K(1)");
    {
        auto dd = std::make_shared<std::string>();
        auto p = std::make_shared<std::string>();
        auto q = std::make_shared<std::string>();
        surgery_cw->add_option("DD", *dd, "Delta''_K(1)")->required();
        surgery_cw->add_option("P", *p)->required();
        surgery_cw->add_option("Q", *q)->required();
        surgery_cw->callback([&run, dd, p, q] {
            run = [dd, p, q]() -> Output {
                Rational lambda = dehn::cw_surgery(parse_int(*dd), parse_int(*p), parse_int(*q));
                return {Json{{"lambda", rat_str(lambda)}},
                        "lambda(K(" + *p + "/" + *q + ")) = " + rat_str(lambda) +
                            "  (Delta''(1) = " + *dd + ")"};
            };
        });
    }

    auto* d_inv = app.add_subcommand("d-inv", "Heegaard Floer d-invariant d(p,q,i), optionally with a V-sequence");
    {
        auto p = std::make_shared<std::string>();
        auto q = std::make_shared<std::string>();
        auto i = std::make_shared<std::string>();
        auto v = std::make_shared<std::string>();
        d_inv->add_option("P", *p)->required();
        d_inv->add_option("Q", *q)->required();
        d_inv->add_option("I", *i, "spin-c index")->required();
        d_inv->add_option("--v", *v, "comma-separated V-sequence V0,V1,...");
        d_inv->callback([&run, p, q, i, v] {
            run = [p, q, i, v]() -> Output {
                Rational d;
                if (v->empty()) {
                    d = dehn::d_lens(parse_int(*p), parse_int(*q), parse_int(*i));
                } else {
                    d = dehn::d_surgery(parse_int(*p), parse_int(*q), parse_int(*i),
                                        dehn::VSequence(parse_int_list(*v)));
                }
                return {Json{{"d", rat_str(d)}},
                        "d(" + *p + "," + *q + "," + *i + ") = " + rat_str(d)};
            };
        });
    }

    auto* d_gap = app.add_subcommand("d-gap", "max_j d(p,q',j) - d(p,1,0)");
    {
        auto p = std::make_shared<std::string>();
        auto qp = std::make_shared<std::string>();
        d_gap->add_option("P", *p)->required();
        d_gap->add_option("QP", *qp, "counterpart denominator q' >= 2")->required();
        d_gap->callback([&run, p, qp] {
            run = [p, qp]() -> Output {
                Rational g = dehn::d_gap_max(parse_int(*p), parse_int(*qp));
                return {Json{{"gap", rat_str(g)}},
                        "max_j d(" + *p + "," + *qp + ",j) - d(" + *p + ",1,0) = " + rat_str(g)};
            };
        });
    }

    auto* prop51 = app.add_subcommand("prop51", "required Delta''-sum (p^2-3p+2)/6 for a p vs -p identification");
    {
        auto p = std::make_shared<std::string>();
        prop51->add_option("P", *p)->required();
        prop51->callback([&run, p] {
            run = [p]() -> Output {
                auto sum = dehn::prop51_required_sum(parse_int(*p));
                Json j{{"required_sum", sum ? Json(sum->get_str()) : Json(nullptr)}};
                std::string msg = sum ? "required Delta''-sum: " + sum->get_str()
                                      : "no integer solution: p = " + *p + " surgery obstructed";
                return {j, msg};
            };
        });
    }

    // ---- alexander ----
    auto* alex_twist = app.add_subcommand("alex-twist", "Alexander polynomial of a twist-family knot");
    {
        auto link = std::make_shared<std::string>();
        auto name = std::make_shared<std::string>();
        auto component = std::make_shared<int>(0);
        auto k = std::make_shared<std::string>();
        alex_twist->add_option("--link", *link, "fixture name or JSON-lines file")->required();
        alex_twist->add_option("--name", *name, "record name when --link is a file");
        alex_twist->add_option("--component", *component, "component being twisted")
            ->required()
            ->check(CLI::IsMember({1, 2}));
        alex_twist->add_option("--k", *k, "number of twists")->required();
        alex_twist->callback([&run, link, name, component, k] {
            run = [link, name, component, k]() -> Output {
                dehn::LinkRecord rec = resolve_link(*link, *name);
                Int twists = parse_int(*k);
                if (!twists.fits_slong_p()) throw std::domain_error("twist count out of range");
                dehn::LaurentPoly1 poly =
                    dehn::twist_family_alex(rec.multivariable, *component, mpz_get_si(twists.get_mpz_t()));
                Json j{{"link", rec.name},
                       {"component", *component},
                       {"k", *k},
                       {"polynomial", dehn::poly_to_json(poly)}};
                return {j, "Delta = " + poly.str()};
            };
        });
    }

    auto* distinct = app.add_subcommand("distinct-matrix", "twist-family distinctness table over up-to-unit equality");
    {
        auto link = std::make_shared<std::string>();
        auto name = std::make_shared<std::string>();
        auto range = std::make_shared<std::vector<std::int64_t>>();
        distinct->add_option("--link", *link, "fixture name or JSON-lines file")->required();
        distinct->add_option("--name", *name, "record name when --link is a file");
        distinct->add_option("--range", *range, "max |m| and max |n|")->expected(2)->required();
        distinct->callback([&run, link, name, range] {
            run = [link, name, range]() -> Output {
                dehn::LinkRecord rec = resolve_link(*link, *name);
                auto m_values = dehn::twist_range((*range)[0]);
                auto n_values = dehn::twist_range((*range)[1]);
                auto table = dehn::distinctness_matrix(rec.multivariable, m_values, n_values);
                Json rows = Json::array();
                for (const auto& row : table.equal) {
                    Json r = Json::array();
                    for (bool b : row) r.push_back(b);
                    rows.push_back(r);
                }
                Json matches = Json::array();
                for (const auto& [m, n] : table.matches()) matches.push_back(Json::array({m, n}));
                Json j{{"link", rec.name},
                       {"m_values", table.m_values},
                       {"n_values", table.n_values},
                       {"equal", rows},
                       {"matches", matches}};
                std::ostringstream os;
                os << "pairs (m,n) with Delta_{K_m} = Delta_{J_n} up to units:";
                for (const auto& [m, n] : table.matches()) os << " (" << m << "," << n << ")";
                return {j, os.str()};
            };
        });
    }

    // ---- classify ----
    auto* moser = app.add_subcommand("moser", "Seifert classification of T(a,b)(p/q), or its mirror with --mirror");
    {
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto p = std::make_shared<std::string>();
        auto q = std::make_shared<std::string>();
        auto mirror = std::make_shared<bool>(false);
        moser->add_option("A", *a)->required();
        moser->add_option("B", *b)->required();
        moser->add_option("P", *p)->required();
        moser->add_option("Q", *q)->required();
        moser->add_flag("--mirror", *mirror, "classify the mirror -T(a,b)(p/q)");
        moser->callback([&run, a, b, p, q, mirror] {
            run = [a, b, p, q, mirror]() -> Output {
                dehn::SeifertData s = *mirror
                                          ? dehn::mirror_surgery(parse_int(*a), parse_int(*b), parse_int(*p), parse_int(*q))
                                          : dehn::moser_classify(parse_int(*a), parse_int(*b), parse_int(*p), parse_int(*q));
                Json j = seifert_json(s);
                j["lens_space"] = dehn::is_lens_space(s);
                std::ostringstream os;
                if (s.kind == dehn::SeifertData::Kind::SfsOverS2) {
                    os << "Seifert fibered over S^2, fiber orders {";
                    for (std::size_t i = 0; i < s.fibers.size(); ++i) {
                        os << (i ? ", " : "") << s.fibers[i].get_str();
                    }
                    os << "}" << (dehn::is_lens_space(s) ? " (lens space)" : "");
                } else {
                    os << "L(" << s.summands[0].first.get_str() << "," << s.summands[0].second.get_str()
                       << ") # L(" << s.summands[1].first.get_str() << "," << s.summands[1].second.get_str()
                       << ")";
                }
                return {j, os.str()};
            };
        });
    }

    auto* cable_reduce = app.add_subcommand("cable-reduce", "reduce C_{r,s}(K)(p/q) to a surgery on K when |qrs-p|=1");
    {
        auto r = std::make_shared<std::string>();
        auto s = std::make_shared<std::string>();
        auto p = std::make_shared<std::string>();
        auto q = std::make_shared<std::string>();
        cable_reduce->add_option("R", *r)->required();
        cable_reduce->add_option("S", *s)->required();
        cable_reduce->add_option("P", *p)->required();
        cable_reduce->add_option("Q", *q)->required();
        cable_reduce->callback([&run, r, s, p, q] {
            run = [r, s, p, q]() -> Output {
                auto slope = dehn::cable_fill_reduce(parse_int(*r), parse_int(*s), parse_int(*p), parse_int(*q));
                Json j{{"slope", slope ? slope_json(*slope) : Json(nullptr)}};
                return {j, slope ? "reduces to the companion surgery slope " + slope->str()
                                 : "does not reduce (|qrs - p| != 1)"};
            };
        });
    }

    auto* cable_slopes = app.add_subcommand("cable-slopes", "slopes p/(q s^2) that are never strongly-characterising");
    {
        auto max_p = std::make_shared<std::string>();
        auto max_s = std::make_shared<std::string>();
        cable_slopes->add_option("--max-p", *max_p)->required();
        cable_slopes->add_option("--max-s", *max_s)->required();
        cable_slopes->callback([&run, max_p, max_s] {
            run = [max_p, max_s]() -> Output {
                auto slopes = dehn::enumerate_cable_slopes(parse_int(*max_p), parse_int(*max_s));
                Json arr = Json::array();
                std::ostringstream os;
                for (const auto& s : slopes) {
                    arr.push_back(slope_json(s));
                    os << s.str() << "\n";
                }
                return {Json{{"count", slopes.size()}, {"slopes", arr}}, os.str()};
            };
        });
    }

    // ---- search ----
    auto* link_form = app.add_subcommand("link-form", "linking form value -(q/p)ab in Q/Z");
    {
        auto p = std::make_shared<std::string>();
        auto q = std::make_shared<std::string>();
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        link_form->add_option("P", *p)->required();
        link_form->add_option("Q", *q)->required();
        link_form->add_option("A", *a)->required();
        link_form->add_option("B", *b)->required();
        link_form->callback([&run, p, q, a, b] {
            run = [p, q, a, b]() -> Output {
                Rational v = dehn::linking_form_value(parse_int(*p), parse_int(*q), parse_int(*a), parse_int(*b));
                return {Json{{"value", rat_str(v)}},
                        "lambda(" + *a + "," + *b + ") = " + rat_str(v) + " in Q/Z"};
            };
        });
    }

    auto* residue = app.add_subcommand("residue-check", "is q*q' a square mod p (linking-form compatibility)");
    {
        auto p = std::make_shared<std::string>();
        auto q = std::make_shared<std::string>();
        auto qp = std::make_shared<std::string>();
        residue->add_option("P", *p)->required();
        residue->add_option("Q", *q)->required();
        residue->add_option("QP", *qp)->required();
        residue->callback([&run, p, q, qp] {
            run = [p, q, qp]() -> Output {
                bool ok = dehn::residue_obstruction(parse_int(*p), parse_int(*q), parse_int(*qp));
                return {Json{{"compatible", ok}},
                        ok ? "compatible: q*q' is a residue mod p (not obstructed)"
                           : "obstructed: q*q' is a non-residue mod p"};
            };
        });
    }

    auto* find_slopes = app.add_subcommand("find-slopes", "certified search for strongly-characterising slope candidates");
    {
        auto c_opt = std::make_shared<std::string>();
        auto q_opt = std::make_shared<std::string>();
        auto torus = std::make_shared<std::string>();
        auto count = std::make_shared<int>(1);
        auto limit = std::make_shared<std::string>();
        auto q1mod4 = std::make_shared<bool>(false);
        find_slopes->add_option("--C", *c_opt, "per-knot constant C(K) >= 8")->required();
        find_slopes->add_option("--q", *q_opt, "odd prime q > C")->required();
        find_slopes->add_option("--torus", *torus, "torus parameters a,b when K = T(a,b)");
        find_slopes->add_flag("--q1mod4", *q1mod4, "require q = 1 (mod 4) as in the general proof");
        find_slopes->add_option("--count", *count, "number of certificates")->required();
        find_slopes->add_option("--limit", *limit, "prime search limit")->required();
        find_slopes->callback([&run, c_opt, q_opt, torus, count, limit, q1mod4] {
            run = [c_opt, q_opt, torus, count, limit, q1mod4]() -> Output {
                dehn::SearchParams params;
                params.C = parse_int(*c_opt);
                params.q = parse_int(*q_opt);
                params.count = *count;
                params.prime_limit = parse_int(*limit);
                params.require_q_1mod4 = *q1mod4;
                if (!torus->empty()) {
                    auto parts = parse_int_list(*torus);
                    if (parts.size() != 2) throw std::invalid_argument("--torus expects a,b");
                    params.torus = {parts[0], parts[1]};
                }
                dehn::SearchResult result = dehn::find_candidates(params);
                Json certs = Json::array();
                int exit_code = 0;
                std::ostringstream os;
                for (const auto& cert : result.certificates) {
                    certs.push_back(certificate_json(cert));
                    if (!dehn::verify_certificate(cert, params.C, params.q).all_ok()) exit_code = 1;
                    os << "p = " << cert.p.get_str() << ", q = " << cert.q.get_str() << ": slope "
                       << cert.p.get_str() << "/" << cert.q.get_str() << " certified ("
                       << cert.conditions.size() << " conditions)\n";
                }
                if (result.certificates.empty()) os << "no certificate found\n";
                if (result.exhausted) os << "search exhausted the limit " << *limit << "\n";
                Json j{{"crt",
                        Json{{"residue", result.combined.residue.get_str()},
                             {"modulus", result.combined.modulus.get_str()}}},
                       {"exhausted", result.exhausted},
                       {"certificates", certs}};
                return {j, os.str(), exit_code};
            };
        });
    }

    auto* verify_cert = app.add_subcommand("verify-cert", "re-verify a certificate file from scratch");
    {
        auto file = std::make_shared<std::string>();
        auto c_opt = std::make_shared<std::string>();
        auto q_opt = std::make_shared<std::string>();
        verify_cert->add_option("FILE", *file, "certificate JSON (object or {\"certificates\": [...]})")
            ->required();
        verify_cert->add_option("--C", *c_opt)->required();
        verify_cert->add_option("--q", *q_opt)->required();
        verify_cert->callback([&run, file, c_opt, q_opt] {
            run = [file, c_opt, q_opt]() -> Output {
                std::ifstream in(*file);
                if (!in) throw std::invalid_argument("cannot read '" + *file + "'");
                Json parsed = Json::parse(in);
                std::vector<dehn::SlopeCertificate> certs;
                if (parsed.is_object() && parsed.contains("certificates")) {
                    for (const auto& c : parsed["certificates"]) certs.push_back(certificate_from_json(c));
                } else {
                    certs.push_back(certificate_from_json(parsed));
                }
                Json reports = Json::array();
                bool all_ok = !certs.empty();
                std::ostringstream os;
                for (const auto& cert : certs) {
                    dehn::VerifyReport report =
                        dehn::verify_certificate(cert, parse_int(*c_opt), parse_int(*q_opt));
                    Json checks = Json::array();
                    for (const auto& c : report.checks) {
                        checks.push_back(Json{{"name", c.name}, {"ok", c.ok}, {"witness", c.witness.get_str()}});
                        os << (c.ok ? "  ok  " : " FAIL ") << c.name << "\n";
                    }
                    reports.push_back(Json{{"p", cert.p.get_str()},
                                           {"valid", report.all_ok()},
                                           {"checks", checks}});
                    all_ok = all_ok && report.all_ok();
                    os << "certificate p = " << cert.p.get_str() << ": "
                       << (report.all_ok() ? "VALID" : "INVALID") << "\n";
                }
                return {Json{{"valid", all_ok}, {"reports", reports}}, os.str(), all_ok ? 0 : 1};
            };
        });
    }

    auto* twist_slopes = app.add_subcommand("twist-slopes", "matched non-characterising slope families -m l^2 + 1/n");
    {
        auto l = std::make_shared<std::string>();
        auto m = std::make_shared<std::string>();
        auto n = std::make_shared<std::string>();
        twist_slopes->add_option("--l", *l, "linking number")->required();
        twist_slopes->add_option("--m", *m, "twist count on the second component")->required();
        twist_slopes->add_option("--n", *n, "instantiate at this n");
        twist_slopes->callback([&run, l, m, n] {
            run = [l, m, n]() -> Output {
                dehn::TwistSlopeFamily family = dehn::nonchar_twist_slopes(parse_int(*l), parse_int(*m));
                Json j{{"l", family.l.get_str()},
                       {"m", family.m.get_str()},
                       {"knot_slope", family.knot_formula()},
                       {"counterpart_slope", family.counterpart_formula()}};
                std::ostringstream os;
                os << "K_m(" << family.knot_formula() << ") = J_n(" << family.counterpart_formula() << ")";
                if (!n->empty()) {
                    dehn::Slope ks = family.knot_slope(parse_int(*n));
                    dehn::Slope cs = family.counterpart_slope(parse_int(*n));
                    j["n"] = *n;
                    j["knot_slope_at_n"] = slope_json(ks);
                    j["counterpart_slope_at_n"] = slope_json(cs);
                    os << "\nat n = " << *n << ": " << ks.str() << " paired with " << cs.str();
                }
                return {j, os.str()};
            };
        });
    }

    // ---- hypbounds ----
    auto* hyp = app.add_subcommand("hyp-consts", "filling constants c, D, and the 5D threshold for a given systole");
    {
        auto sys = std::make_shared<double>(0.0);
        hyp->add_option("--sys", *sys, "systole of the outermost hyperbolic piece")->required();
        hyp->callback([&run, sys] {
            run = [sys]() -> Output {
                dehn::FillingConstants fc = dehn::filling_constants(*sys);
                double threshold = 5.0 * fc.D;
                Json j{{"c", fc.c}, {"D", fc.D}, {"five_D", threshold}};
                std::ostringstream os;
                os << "c = " << fc.c << ", D = " << fc.D << ", 5D = " << threshold;
                return {j, os.str()};
            };
        });
    }

    // ---- knotdb ----
    auto* fixtures = app.add_subcommand("fixtures", "embedded knot/link records as JSON-lines");
    fixtures->callback([&run] {
        run = []() -> Output {
            const auto& records = dehn::embedded_fixtures();
            std::ostringstream os;
            for (const auto& r : records) {
                if (const auto* knot = std::get_if<dehn::KnotRecord>(&r)) {
                    os << knot->name << "  (knot)  Delta = " << knot->alexander.str();
                    if (knot->torus) {
                        os << "  T(" << knot->torus->first.get_str() << ","
                           << knot->torus->second.get_str() << ")";
                    }
                    os << "\n";
                } else {
                    const auto& link = std::get<dehn::LinkRecord>(r);
                    os << link.name << "  (link)  lk = " << link.linking_number.get_str() << ", "
                       << link.multivariable.term_count() << " terms\n";
                }
            }
            Output out;
            out.pretty = os.str();
            out.json = Json(nullptr);  // unused: fixtures emit raw JSON-lines
            return out;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(fixtures) && !pretty) {
            std::cout << dehn::dump_records(dehn::embedded_fixtures());
            return 0;
        }
        Output out = run();
        emit(out, pretty);
        return out.exit_code;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }
}
