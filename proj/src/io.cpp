#include "cabletau/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cabletau/errors.hpp"

namespace cabletau {

using nlohmann::ordered_json;

std::string dump_complex(const CfkComplex& c) {
    ordered_json j;
    j["name"] = c.name;
    std::vector<int> order(c.gens.size());
    for (int i = 0; i < int(c.gens.size()); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&c](int a, int b) { return c.gens[a].id < c.gens[b].id; });
    j["generators"] = ordered_json::array();
    for (int i : order) {
        ordered_json g;
        g["id"] = c.gens[i].id;
        g["alexander"] = c.gens[i].alexander;
        if (c.gens[i].maslov) g["maslov"] = *c.gens[i].maslov;
        j["generators"].push_back(g);
    }
    std::vector<std::tuple<std::string, std::string, int>> arrows;
    for (const auto& a : c.arrows)
        arrows.push_back({c.gens[a.src].id, c.gens[a.tgt].id, a.u_power});
    std::sort(arrows.begin(), arrows.end());
    j["arrows"] = ordered_json::array();
    for (const auto& [from, to, k] : arrows) {
        ordered_json a;
        a["from"] = from;
        a["to"] = to;
        a["u_power"] = k;
        j["arrows"].push_back(a);
    }
    return j.dump(2) + "\n";
}

CfkComplex parse_complex(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw Error(std::string("invalid JSON: ") + e.what());
    }
    CfkComplex c;
    try {
        c.name = j.value("name", std::string("unnamed"));
        if (!j.contains("generators") || !j["generators"].is_array())
            throw Error("missing generators array");
        for (const auto& g : j["generators"]) {
            CfkGenerator gen;
            gen.id = g.at("id").get<std::string>();
            gen.alexander = g.at("alexander").get<int>();
            if (g.contains("maslov")) gen.maslov = g["maslov"].get<int>();
            c.gens.push_back(std::move(gen));
        }
        if (j.contains("arrows"))
            for (const auto& a : j["arrows"]) {
                int src = c.index_of(a.at("from").get<std::string>());
                int tgt = c.index_of(a.at("to").get<std::string>());
                if (src < 0 || tgt < 0) throw Error("arrow references unknown generator");
                c.toggle(src, tgt, a.at("u_power").get<int>());
            }
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error(std::string("malformed complex: ") + e.what());
    }
    return c;
}

CfkComplex load_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_complex(ss.str());
}

void save_complex_file(const CfkComplex& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << dump_complex(c);
}

namespace {

struct ExprParser {
    const std::string& s;
    size_t pos = 0;

    explicit ExprParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && isspace(uint8_t(s[pos]))) ++pos;
    }

    CfkComplex parse_expr() {
        CfkComplex left = parse_term();
        skip_ws();
        while (pos < s.size() && s[pos] == '#') {
            ++pos;
            CfkComplex right = parse_term();
            left = connected_sum(left, right);
            skip_ws();
        }
        return left;
    }

    CfkComplex parse_term() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (isalnum(uint8_t(s[pos])) || s[pos] == '_')) ++pos;
        std::string name = s.substr(start, pos - start);
        if (name.empty()) throw Error("expected knot name at position " + std::to_string(start));
        skip_ws();
        if (name == "mirror") {
            if (pos >= s.size() || s[pos] != '(') throw Error("mirror needs parentheses");
            ++pos;
            CfkComplex inner = parse_expr();
            skip_ws();
            if (pos >= s.size() || s[pos] != ')') throw Error("unbalanced parentheses");
            ++pos;
            return mirror(inner);
        }
        return knot_library(name);
    }
};

}  // namespace

CfkComplex parse_knot_expression(const std::string& expr) {
    ExprParser p(expr);
    CfkComplex c = p.parse_expr();
    p.skip_ws();
    if (p.pos != expr.size())
        throw Error("trailing characters in knot expression: " + expr.substr(p.pos));
    return c;
}

}  // namespace cabletau
