// JSON serialisation of specs, derived data and check reports.
//
// One top-level document per invocation; insertion-ordered keys and
// rationals rendered as "p/q" strings keep reports byte-deterministic
// for a fixed (spec, seed). No wall-clock data goes in here.

#pragma once

#include <string>

#include "json.hpp"

#include "thaforge/focal.hpp"
#include "thaforge/tha.hpp"

namespace thaforge {

using Json = nlohmann::ordered_json;

inline Json json_rational(const Rational &q) { return q.to_string(); }

inline Json json_matrix(const QMatrix &m)
{
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols(); ++j)
            row.push_back(json_rational(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline QMatrix matrix_from_json(const Json &j)
{
    size_t rows = j.size();
    size_t cols = rows ? j[0].size() : 0;
    QMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t c = 0; c < cols; ++c)
            m(i, c) = Rational::from_string(j[i][c].get<std::string>());
    return m;
}

inline Json json_weight(const BWeight &w)
{
    Json a = Json::array();
    for (int c : w)
        a.push_back(c);
    return a;
}

inline Json json_sparse_int(const SparseVec<int> &v)
{
    Json a = Json::array();
    for (const auto &[k, c] : v.terms())
        a.push_back(Json::array({k, json_rational(c)}));
    return a;
}

inline Json json_monomial(const Monomial &m)
{
    Json a = Json::array();
    for (int b : m)
        a.push_back(b);
    return a;
}

inline Json json_env(const EnvElement &e)
{
    Json a = Json::array();
    for (const auto &[m, c] : e.terms())
        a.push_back(Json::array({json_monomial(m), json_rational(c)}));
    return a;
}

inline Json json_tensor(const TensorElement &t)
{
    Json a = Json::array();
    for (const auto &[k, c] : t.terms())
        a.push_back(
            Json::array({k.first, json_monomial(k.second), json_rational(c)}));
    return a;
}

// ---- check reports ----

inline Json json_check_report(const CheckReport &rep, bool asserted)
{
    Json j;
    j["name"] = rep.name;
    j["asserted"] = asserted;
    j["seed"] = std::to_string(rep.seed);
    j["exhaustive_checked"] = rep.exhaustive_checked;
    j["sampled_checked"] = rep.sampled_checked;
    j["violations"] = Json::array();
    for (const auto &v : rep.violations)
        j["violations"].push_back({{"identity", v.identity}, {"triple", v.triple}});
    j["passed"] = rep.passed();
    return j;
}

inline Json json_prop41(const std::vector<Prop41Hit> &hits)
{
    Json j;
    j["name"] = "prop41";
    j["all_zero"] = hits.empty();
    j["witnesses"] = Json::array();
    for (const auto &h : hits)
        j["witnesses"].push_back({{"module_index", h.module_index},
                                  {"root", json_weight(h.root)},
                                  {"factor", json_rational(h.factor)}});
    return j;
}

inline Json json_lemma42(const Lemma42Report &rep)
{
    Json j;
    j["name"] = "lemma42";
    j["checked"] = rep.checked;
    j["failures"] = rep.failures;
    j["passed"] = rep.passed;
    return j;
}

inline Json json_thm43(const Thm43Report &rep)
{
    Json j;
    j["name"] = "thm43";
    j["cutoff"] = rep.cutoff;
    j["numbering"] = rep.numbering;
    j["ideal_dimension"] = rep.ideal_dimension;
    j["ideal_peripheral"] = rep.ideal_peripheral;
    Json rels = Json::array();
    for (const auto &r : rep.results) {
        const char *status =
            r.status == RelationResult::ZeroExact          ? "zero"
            : r.status == RelationResult::ZeroModuloIdeal  ? "zero-modulo-ideal"
            : r.status == RelationResult::OutsideLocalPart ? "outside-local-part"
                                                           : "FAILED";
        Json e = {{"group", r.group}, {"instance", r.instance}, {"status", status}};
        if (r.status == RelationResult::Failed)
            e["residue"] = r.residue;
        rels.push_back(std::move(e));
    }
    j["relations"] = std::move(rels);
    j["passed"] = rep.passed;
    return j;
}

inline Json json_conjecture(const ConjectureReport &rep)
{
    Json j;
    j["name"] = "conjecture";
    j["cutoff"] = rep.cutoff;
    j["caveat"] = rep.caveat;
    Json rows = Json::array();
    for (const auto &r : rep.rows)
        rows.push_back({{"degree", r.degree},
                        {"level", r.level},
                        {"v_dim", r.v_dim},
                        {"w_reference", r.w_dim}});
    j["rows"] = std::move(rows);
    return j;
}

// ---- emitted artifacts ----

inline Json emit_tables(const LocalAlgebra &alg)
{
    const auto &eng = alg.engine;
    Json j;
    j["format"] = 1;
    j["kind"] = "tables";
    j["rank"] = alg.rank();
    j["B"] = json_matrix(alg.ext.B);
    j["L"] = Json::array();
    for (const auto &c : alg.ext.Lcoef)
        j["L"].push_back(json_rational(c));

    int dim0 = static_cast<int>(eng.basis0().size());
    Json basis0 = Json::array();
    for (int b = 0; b < dim0; ++b)
        basis0.push_back({{"name", eng.basis0_name(b)},
                          {"weight", json_weight(eng.basis0_weight(b))}});
    j["basis0"] = std::move(basis0);

    Json module = Json::array();
    for (int m = 0; m < eng.dim_module(); ++m)
        module.push_back({{"weight", json_weight(eng.module_weight(m))}});
    j["module"] = std::move(module);

    Json br = Json::array();
    for (int a = 0; a < dim0; ++a)
        for (int b = 0; b < dim0; ++b) {
            const auto &v = eng.bracket00(a, b);
            if (!v.is_zero())
                br.push_back(Json::array({a, b, json_sparse_int(v)}));
        }
    j["bracket00"] = std::move(br);

    Json actp = Json::array(), actm = Json::array();
    for (int z = 0; z < dim0; ++z)
        for (int m = 0; m < eng.dim_module(); ++m) {
            const auto &vp = eng.act(z, +1, m);
            if (!vp.is_zero())
                actp.push_back(Json::array({z, m, json_sparse_int(vp)}));
            const auto &vm = eng.act(z, -1, m);
            if (!vm.is_zero())
                actm.push_back(Json::array({z, m, json_sparse_int(vm)}));
        }
    j["act_plus"] = std::move(actp);
    j["act_minus"] = std::move(actm);

    Json mixed = Json::array();
    for (int i = 0; i < eng.dim_module(); ++i)
        for (int k = 0; k < eng.dim_module(); ++k) {
            const auto &v = eng.mixed(i, k);
            if (!v.is_zero())
                mixed.push_back(Json::array({i, k, json_sparse_int(v)}));
        }
    j["mixed"] = std::move(mixed);

    Json pairing = Json::array();
    for (int i = 0; i < eng.dim_module(); ++i)
        for (int k = 0; k < eng.dim_module(); ++k) {
            Rational p = eng.pairing(i, k);
            if (!p.is_zero())
                pairing.push_back(Json::array({i, k, json_rational(p)}));
        }
    j["pairing"] = std::move(pairing);
    return j;
}

// Parsed image of an emitted tables document; the reader for round trips
// and downstream consumers.
struct EmittedTables {
    int rank = 0;
    QMatrix B;
    std::vector<Rational> L;
    std::vector<std::string> basis0_names;
    std::vector<BWeight> basis0_weights;
    std::vector<BWeight> module_weights;
    std::map<std::pair<int, int>, SparseVec<int>> bracket00, act_plus, act_minus,
        mixed;
    std::map<std::pair<int, int>, Rational> pairing;

    friend bool operator==(const EmittedTables &a, const EmittedTables &b)
    {
        return a.rank == b.rank && a.B == b.B && a.L == b.L &&
               a.basis0_names == b.basis0_names &&
               a.basis0_weights == b.basis0_weights &&
               a.module_weights == b.module_weights &&
               a.bracket00 == b.bracket00 && a.act_plus == b.act_plus &&
               a.act_minus == b.act_minus && a.mixed == b.mixed &&
               a.pairing == b.pairing;
    }
};

inline SparseVec<int> sparse_int_from_json(const Json &j)
{
    SparseVec<int> v;
    for (const auto &e : j)
        v.add(e[0].get<int>(), Rational::from_string(e[1].get<std::string>()));
    return v;
}

inline EmittedTables parse_tables(const Json &j)
{
    if (!j.contains("format") || j["format"].get<int>() != 1 ||
        j["kind"].get<std::string>() != "tables")
        throw ConfigError("not a format-1 tables document");
    EmittedTables t;
    t.rank = j["rank"].get<int>();
    t.B = matrix_from_json(j["B"]);
    for (const auto &c : j["L"])
        t.L.push_back(Rational::from_string(c.get<std::string>()));
    for (const auto &b : j["basis0"]) {
        t.basis0_names.push_back(b["name"].get<std::string>());
        t.basis0_weights.push_back(b["weight"].get<BWeight>());
    }
    for (const auto &m : j["module"])
        t.module_weights.push_back(m["weight"].get<BWeight>());
    auto load = [&](const char *key,
                    std::map<std::pair<int, int>, SparseVec<int>> &dst) {
        for (const auto &e : j[key])
            dst[{e[0].get<int>(), e[1].get<int>()}] = sparse_int_from_json(e[2]);
    };
    load("bracket00", t.bracket00);
    load("act_plus", t.act_plus);
    load("act_minus", t.act_minus);
    load("mixed", t.mixed);
    for (const auto &e : j["pairing"])
        t.pairing[{e[0].get<int>(), e[1].get<int>()}] =
            Rational::from_string(e[2].get<std::string>());
    return t;
}

inline EmittedTables tables_of(const LocalAlgebra &alg)
{
    return parse_tables(emit_tables(alg));
}

// presentation <-> JSON

inline Json json_relexpr(const RelExpr &e)
{
    switch (e.kind) {
    case RelExpr::Gen:
        return Json{{"op", "gen"}, {"name", e.gen}};
    case RelExpr::Bracket:
        return Json{{"op", "bracket"},
                    {"args", Json::array({json_relexpr(e.args[0]),
                                          json_relexpr(e.args[1])})}};
    case RelExpr::AdPow:
        return Json{{"op", "adpow"},
                    {"n", e.power},
                    {"args", Json::array({json_relexpr(e.args[0]),
                                          json_relexpr(e.args[1])})}};
    case RelExpr::Scale:
        return Json{{"op", "scale"},
                    {"coef", json_rational(e.coef)},
                    {"arg", json_relexpr(e.args[0])}};
    case RelExpr::Sum: {
        Json args = Json::array();
        for (const auto &a : e.args)
            args.push_back(json_relexpr(a));
        return Json{{"op", "sum"}, {"args", std::move(args)}};
    }
    }
    throw std::logic_error("unreachable");
}

inline RelExpr relexpr_from_json(const Json &j)
{
    std::string op = j["op"].get<std::string>();
    if (op == "gen")
        return RelExpr::generator(j["name"].get<std::string>());
    if (op == "bracket")
        return RelExpr::bracket(relexpr_from_json(j["args"][0]),
                                relexpr_from_json(j["args"][1]));
    if (op == "adpow")
        return RelExpr::ad_pow(j["n"].get<int>(),
                               relexpr_from_json(j["args"][0]),
                               relexpr_from_json(j["args"][1]));
    if (op == "scale")
        return RelExpr::scale(Rational::from_string(j["coef"].get<std::string>()),
                              relexpr_from_json(j["arg"]));
    if (op == "sum") {
        std::vector<RelExpr> args;
        for (const auto &a : j["args"])
            args.push_back(relexpr_from_json(a));
        return RelExpr::sum(std::move(args));
    }
    throw ConfigError("unknown relation-expression op '" + op + "'");
}

inline Json emit_presentation(const Presentation &p)
{
    Json j;
    j["format"] = 1;
    j["kind"] = "presentation";
    j["variant"] = p.s_variant ? "S" : "W";
    Json gens = Json::array();
    for (const auto &g : p.generators)
        gens.push_back(
            {{"name", g.name}, {"degree", g.degree}, {"parity", g.parity}});
    j["generators"] = std::move(gens);
    Json rels = Json::array();
    for (const auto &r : p.relations) {
        Json e = {{"group", r.group},
                  {"instance", r.instance},
                  {"expr", json_relexpr(r.expr)}};
        if (r.degree)
            e["degree"] = *r.degree;
        else
            e["degree"] = nullptr;
        rels.push_back(std::move(e));
    }
    j["relations"] = std::move(rels);
    return j;
}

inline Presentation parse_presentation(const Json &j)
{
    if (!j.contains("format") || j["format"].get<int>() != 1 ||
        j["kind"].get<std::string>() != "presentation")
        throw ConfigError("not a format-1 presentation document");
    Presentation p;
    p.s_variant = j["variant"].get<std::string>() == "S";
    for (const auto &g : j["generators"])
        p.generators.push_back({g["name"].get<std::string>(),
                                g["degree"].get<int>(), g["parity"].get<int>()});
    for (const auto &r : j["relations"]) {
        Relation rel;
        rel.group = r["group"].get<std::string>();
        rel.instance = r["instance"].get<std::string>();
        rel.expr = relexpr_from_json(r["expr"]);
        if (!r["degree"].is_null())
            rel.degree = r["degree"].get<int>();
        p.relations.push_back(std::move(rel));
    }
    return p;
}

} // namespace thaforge
