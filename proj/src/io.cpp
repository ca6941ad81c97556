#include "sigmakit/io.hpp"

#include <cctype>

namespace sigmakit::io {

namespace {

[[noreturn]] void fail(const std::string& what, std::size_t pos) { throw ParseError(what, pos); }

std::uint64_t parse_u64(const std::string& s, std::size_t& i) {
    std::size_t start = i;
    std::uint64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + std::uint64_t(s[i] - '0');
        ++i;
    }
    if (i == start) fail("expected an integer", i);
    return v;
}

void expect(const std::string& s, std::size_t& i, const std::string& token) {
    if (s.compare(i, token.size(), token) != 0) fail("expected '" + token + "'", i);
    i += token.size();
}

}  // namespace

TowerElem parse_tower_elem(const std::string& text, FieldTower& tower) {
    std::size_t i = 0;
    if (text.compare(0, 2, "p=") != 0) {
        // integer shorthand at level 1
        bool neg = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
        std::uint64_t v = parse_u64(text, i);
        if (i != text.size()) fail("trailing characters in element literal", i);
        TowerElem x = tower.from_int(long(v % tower.p()), 1);
        return neg ? -x : x;
    }
    i = 2;
    std::uint64_t p = parse_u64(text, i);
    expect(text, i, ",e=");
    std::uint64_t e = parse_u64(text, i);
    if (p != tower.p() || e != tower.e()) fail("element belongs to a different tower", 0);
    expect(text, i, ",t=");
    std::uint64_t t = parse_u64(text, i);
    expect(text, i, ":[");
    std::vector<std::uint64_t> coeffs;
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        while (true) {
            coeffs.push_back(parse_u64(text, i));
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            expect(text, i, "]");
            break;
        }
    }
    if (i != text.size()) fail("trailing characters in element literal", i);
    if (coeffs.size() > std::size_t(e) * t) fail("too many coefficients for level", i);
    for (auto c : coeffs)
        if (c >= p) fail("coefficient out of range", 0);
    return TowerElem(&tower, unsigned(t), std::move(coeffs));
}

ZSigmaModule module_from_json(const Json& j) {
    if (!j.contains("generators") || !j.contains("relations"))
        fail("module JSON needs 'generators' and 'relations'", 0);
    std::size_t g = j.at("generators").get<std::size_t>();
    std::vector<std::vector<SigmaPoly>> relations;
    for (const auto& row : j.at("relations")) {
        std::vector<SigmaPoly> r;
        for (const auto& entry : row) r.push_back(SigmaPoly::parse(entry.get<std::string>()));
        if (r.size() != g) fail("relation row width does not match generators", 0);
        relations.push_back(std::move(r));
    }
    ModuleShape shape = ModuleShape::General;
    if (j.contains("shape")) {
        std::string s = j.at("shape").get<std::string>();
        if (s == "cyclic") shape = ModuleShape::Cyclic;
        else if (s == "sum") shape = ModuleShape::SumOfCyclics;
        else if (s != "general") fail("unknown module shape '" + s + "'", 0);
    }
    if (shape == ModuleShape::Cyclic) {
        std::vector<SigmaPoly> ideal;
        for (auto& row : relations) ideal.push_back(row.at(0));
        return ZSigmaModule::cyclic(std::move(ideal));
    }
    if (shape == ModuleShape::SumOfCyclics) {
        // each row carries exactly one nonzero entry; group them by column
        std::vector<std::vector<SigmaPoly>> ideals(g);
        for (const auto& row : relations) {
            std::size_t nz = g;
            for (std::size_t k = 0; k < g; ++k) {
                if (row[k].is_zero()) continue;
                if (nz != g) fail("sum-of-cyclics row has two nonzero entries", 0);
                nz = k;
            }
            if (nz < g) ideals[nz].push_back(row[nz]);
        }
        return ZSigmaModule::sum_of_cyclics(std::move(ideals));
    }
    return ZSigmaModule(g, std::move(relations));
}

Json module_to_json(const ZSigmaModule& m) {
    Json j;
    j["generators"] = m.generators();
    Json rows = Json::array();
    for (const auto& row : m.relations()) {
        Json r = Json::array();
        for (const auto& p : row) r.push_back(p.to_string());
        rows.push_back(std::move(r));
    }
    j["relations"] = std::move(rows);
    switch (m.shape()) {
        case ModuleShape::General: j["shape"] = "general"; break;
        case ModuleShape::Cyclic: j["shape"] = "cyclic"; break;
        case ModuleShape::SumOfCyclics: j["shape"] = "sum"; break;
    }
    return j;
}

LinDiffEq linear_from_json(const Json& j, FieldTower& tower) {
    LinDiffEq eq;
    eq.d = j.value("d", 1u);
    if (eq.d < 1) fail("d must be >= 1", 0);
    if (!j.contains("A")) fail("linear system JSON needs 'A'", 0);
    for (const auto& row : j.at("A")) {
        std::vector<TowerElem> r;
        for (const auto& entry : row) r.push_back(parse_tower_elem(entry.get<std::string>(), tower));
        eq.A.push_back(std::move(r));
    }
    std::size_t m = eq.A.size();
    for (const auto& row : eq.A)
        if (row.size() != m) fail("A must be square", 0);
    if (m == 0) fail("A must be nonempty", 0);
    return eq;
}

Json linear_to_json(const LinDiffEq& eq, FieldTower& tower) {
    Json j;
    j["p"] = tower.p();
    j["e"] = tower.e();
    j["d"] = eq.d;
    Json rows = Json::array();
    for (const auto& row : eq.A) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(x.to_string());
        rows.push_back(std::move(r));
    }
    j["A"] = std::move(rows);
    return j;
}

MultTorsor mult_from_json(const Json& j, FieldTower& tower) {
    MultTorsor t;
    if (!j.contains("exponents") || !j.contains("constants"))
        fail("multiplicative system JSON needs 'exponents' and 'constants'", 0);
    for (const auto& row : j.at("exponents")) {
        std::vector<SigmaPoly> r;
        for (const auto& entry : row) r.push_back(SigmaPoly::parse(entry.get<std::string>()));
        t.exponents.push_back(std::move(r));
    }
    for (const auto& entry : j.at("constants"))
        t.constants.push_back(parse_tower_elem(entry.get<std::string>(), tower));
    if (t.exponents.empty()) fail("multiplicative system needs at least one row", 0);
    std::size_t r = t.exponents[0].size();
    for (const auto& row : t.exponents)
        if (row.size() != r) fail("ragged exponent matrix", 0);
    if (t.constants.size() != t.exponents.size())
        fail("constants count does not match rows", 0);
    for (const auto& c : t.constants)
        if (c.is_zero()) fail("constants must be invertible", 0);
    return t;
}

Json mult_to_json(const MultTorsor& t) {
    Json j;
    Json rows = Json::array();
    for (const auto& row : t.exponents) {
        Json r = Json::array();
        for (const auto& p : row) r.push_back(p.to_string());
        rows.push_back(std::move(r));
    }
    j["exponents"] = std::move(rows);
    Json cs = Json::array();
    for (const auto& c : t.constants) cs.push_back(c.to_string());
    j["constants"] = std::move(cs);
    return j;
}

Json outcome_to_json(const SolveOutcome& o) {
    Json j;
    if (o.found()) {
        j["status"] = "found";
        j["n"] = o.n;
        j["level"] = o.level;
        if (!o.witness.empty()) {
            Json w = Json::array();
            for (const auto& x : o.witness) {
                Json comps = Json::array();
                for (const auto& c : x.components()) comps.push_back(c.to_string());
                w.push_back(std::move(comps));
            }
            j["witness"] = std::move(w);
        }
        if (!o.matrix_witness.empty()) {
            Json rows = Json::array();
            for (const auto& row : o.matrix_witness) {
                Json r = Json::array();
                for (const auto& x : row) r.push_back(x.to_string());
                rows.push_back(std::move(r));
            }
            j["witness"] = std::move(rows);
        }
    } else {
        j["status"] = "exhausted";
        j["tried_n"] = o.tried_n;
        j["max_level"] = o.max_level;
        j["report"] = o.report;
    }
    return j;
}

Json group_report_to_json(const GroupReport& r) {
    Json j;
    j["sigma_dim"] = r.sigma_dim;
    if (r.order) j["order"] = *r.order;
    else j["order"] = "infinite";
    auto tri = [](TriState t) -> Json {
        switch (t) {
            case TriState::True: return true;
            case TriState::False: return false;
            default: return "unsupported";
        }
    };
    j["connected"] = tri(r.connected);
    j["almost_simple"] = tri(r.almost_simple);
    return j;
}

}  // namespace sigmakit::io
