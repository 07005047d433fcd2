#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qcong/catalog.hpp"

namespace qcong {

namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

ordered_json expr_json(const SourceExpr& e) { return e.text; }

ordered_json sum_json(const SumSpec& s) {
    ordered_json j = ordered_json::object();
    if (!s.summand.empty()) j["summand"] = s.summand.text;
    if (!s.bound.empty()) j["bound"] = s.bound.text;
    return j;
}

ordered_json case_json(const Case& c) {
    ordered_json j;
    j["id"] = c.id;
    j["kind"] = to_string(c.kind);
    j["domain"] = c.domain == Domain::classical ? "classical" : "q";
    j["anchor"] = {{"label", c.anchor.label}, {"result", c.anchor.result}, {"quote", c.anchor.quote}};
    if (!c.description.empty()) j["description"] = c.description;
    if (c.has_d()) j["d_values"] = c.d_values;
    j["r_min"] = c.r_min;
    if (c.r_max) j["r_max"] = *c.r_max;
    j["constraints"] = c.constraints;
    j["lhs"] = sum_json(c.lhs);
    j["prefactor"] = expr_json(c.prefactor);
    if (c.has_rhs_sum() || !c.rhs.summand.empty()) j["rhs"] = sum_json(c.rhs);
    j["rhs_scale"] = expr_json(c.rhs_scale);
    if (!c.modulus.empty()) {
        ordered_json vars = ordered_json::array();
        for (const auto& v : c.modulus) {
            ordered_json terms = ordered_json::array();
            for (const auto& t : v.terms) {
                ordered_json tj;
                tj["kind"] = t.kind;
                tj["arg"] = t.arg.text;
                tj["scale"] = t.scale.text;
                tj["power"] = t.power.text;
                if (t.j_range) tj["j"] = {t.j_range->first.text, t.j_range->second.text};
                terms.push_back(tj);
            }
            vars.push_back({{"when", v.when}, {"terms", terms}});
        }
        j["modulus"] = vars;
    }
    if (c.roots) j["roots"] = {{"exponent", c.roots->exponent.text}, {"lo", c.roots->lo.text}, {"hi", c.roots->hi.text}};
    if (!c.target.empty()) j["target"] = c.target.text;
    if (!c.conjectured_target.empty()) j["conjectured_target"] = c.conjectured_target.text;
    if (!c.q_analogue.empty()) j["q_analogue"] = c.q_analogue;
    return j;
}

// Reads fields with a JSON-pointer-like location for error messages.
class Reader {
public:
    Reader(const ordered_json& j, std::string where) : j_(j), where_(std::move(where)) {}

    [[noreturn]] void fail(const std::string& field, const std::string& msg) const {
        throw CaseError(where_ + (field.empty() ? "" : "." + field) + ": " + msg);
    }

    bool has(const char* f) const { return j_.contains(f); }

    const ordered_json& get(const char* f) const {
        if (!j_.contains(f)) fail(f, "missing required field");
        return j_.at(f);
    }

    std::string str(const char* f) const {
        const auto& v = get(f);
        if (!v.is_string()) fail(f, "expected a string");
        return v.get<std::string>();
    }

    std::string str_or(const char* f, const std::string& def) const { return has(f) ? str(f) : def; }

    long integer(const char* f) const {
        const auto& v = get(f);
        if (!v.is_number_integer()) fail(f, "expected an integer");
        return v.get<long>();
    }

    SourceExpr expr(const char* f) const { return parse_at(str(f), f); }

    SourceExpr parse_at(const std::string& text, const std::string& f) const {
        try {
            return SourceExpr(text);
        } catch (const ParseError& e) {
            fail(f, std::string("bad expression '") + text + "': " + e.what());
        }
    }

    std::vector<std::string> strings(const char* f) const {
        std::vector<std::string> out;
        if (!has(f)) return out;
        const auto& v = get(f);
        if (!v.is_array()) fail(f, "expected an array");
        for (const auto& x : v) {
            if (!x.is_string()) fail(f, "expected an array of strings");
            out.push_back(x.get<std::string>());
        }
        return out;
    }

    Reader sub(const char* f) const {
        const auto& v = get(f);
        if (!v.is_object()) fail(f, "expected an object");
        return Reader(v, where_ + "." + f);
    }

    const std::string& where() const { return where_; }
    const ordered_json& json() const { return j_; }

private:
    const ordered_json& j_;
    std::string where_;
};

void check_keys(const Reader& r, std::initializer_list<const char*> allowed) {
    for (auto it = r.json().begin(); it != r.json().end(); ++it) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || it.key() == a;
        if (!ok) r.fail(it.key(), "unknown field");
    }
}

SumSpec read_sum(const Reader& r) {
    check_keys(r, {"summand", "bound"});
    SumSpec s;
    if (r.has("summand")) s.summand = r.expr("summand");
    if (r.has("bound")) s.bound = r.expr("bound");
    return s;
}

Case read_case(const Reader& r) {
    check_keys(r, {"id", "kind", "domain", "anchor", "description", "d_values", "r_min", "r_max", "constraints", "lhs",
                   "prefactor", "rhs", "rhs_scale", "modulus", "roots", "target", "conjectured_target", "q_analogue"});
    Case c;
    c.id = r.str("id");
    try {
        c.kind = case_kind_from_string(r.str("kind"));
    } catch (const CaseError& e) {
        r.fail("kind", e.what());
    }
    const std::string dom = r.str_or("domain", "q");
    if (dom != "q" && dom != "classical") r.fail("domain", "expected \"q\" or \"classical\"");
    c.domain = dom == "classical" ? Domain::classical : Domain::q;
    if (c.domain == Domain::classical) c.rhs_scale = "1";
    {
        Reader a = r.sub("anchor");
        check_keys(a, {"label", "result", "quote"});
        c.anchor = {a.str("label"), a.str_or("result", ""), a.str_or("quote", "")};
    }
    c.description = r.str_or("description", "");
    if (r.has("d_values")) {
        const auto& v = r.get("d_values");
        if (!v.is_array()) r.fail("d_values", "expected an array of integers");
        for (const auto& x : v) {
            if (!x.is_number_integer()) r.fail("d_values", "expected an array of integers");
            c.d_values.push_back(x.get<long>());
        }
    }
    if (r.has("r_min")) c.r_min = r.integer("r_min");
    if (r.has("r_max")) c.r_max = r.integer("r_max");
    c.constraints = r.strings("constraints");
    c.lhs = read_sum(r.sub("lhs"));
    if (r.has("prefactor")) c.prefactor = r.expr("prefactor");
    if (r.has("rhs")) c.rhs = read_sum(r.sub("rhs"));
    if (r.has("rhs_scale")) c.rhs_scale = r.expr("rhs_scale");
    if (r.has("modulus")) {
        const auto& vars = r.get("modulus");
        if (!vars.is_array()) r.fail("modulus", "expected an array of variants");
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (!vars[i].is_object()) r.fail("modulus", "expected an array of objects");
            Reader vr(vars[i], r.where() + ".modulus[" + std::to_string(i) + "]");
            check_keys(vr, {"when", "terms"});
            ModulusVariant v;
            v.when = vr.strings("when");
            const auto& terms = vr.get("terms");
            if (!terms.is_array()) vr.fail("terms", "expected an array");
            for (std::size_t k = 0; k < terms.size(); ++k) {
                if (!terms[k].is_object()) vr.fail("terms", "expected an array of objects");
                Reader tr(terms[k], vr.where() + ".terms[" + std::to_string(k) + "]");
                check_keys(tr, {"kind", "arg", "scale", "power", "j"});
                ModulusTerm t;
                t.kind = tr.str("kind");
                if (t.kind != "qint" && t.kind != "cyc") tr.fail("kind", "expected \"qint\" or \"cyc\"");
                t.arg = tr.expr("arg");
                if (tr.has("scale")) t.scale = tr.expr("scale");
                if (tr.has("power")) t.power = tr.expr("power");
                if (tr.has("j")) {
                    const auto& jr = tr.get("j");
                    if (!jr.is_array() || jr.size() != 2 || !jr[0].is_string() || !jr[1].is_string())
                        tr.fail("j", "expected [lo, hi] expressions");
                    t.j_range = std::make_pair(tr.parse_at(jr[0].get<std::string>(), "j"),
                                               tr.parse_at(jr[1].get<std::string>(), "j"));
                }
                v.terms.push_back(std::move(t));
            }
            c.modulus.push_back(std::move(v));
        }
    }
    if (r.has("roots")) {
        Reader rr = r.sub("roots");
        check_keys(rr, {"exponent", "lo", "hi"});
        c.roots = RootSpec{rr.expr("exponent"), rr.expr("lo"), rr.expr("hi")};
    }
    if (r.has("target")) c.target = r.expr("target");
    if (r.has("conjectured_target")) c.conjectured_target = r.expr("conjectured_target");
    c.q_analogue = r.str_or("q_analogue", "");
    try {
        validate_case(c);
    } catch (const CaseError& e) {
        throw CaseError(r.where() + ": " + e.what());
    } catch (const std::exception& e) {
        throw CaseError(r.where() + ": " + c.id + ": " + e.what());
    }
    return c;
}

}  // namespace

std::string cases_to_json(const std::vector<Case>& cases) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["cases"] = ordered_json::array();
    for (const auto& c : cases) doc["cases"].push_back(case_json(c));
    return doc.dump(2) + "\n";
}

std::vector<Case> cases_from_json(const std::string& text, const std::string& origin) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw CaseError(origin + ": " + e.what());
    }
    if (!doc.is_object()) throw CaseError(origin + ": top level must be an object");
    Reader top(doc, origin);
    check_keys(top, {"schema_version", "cases"});
    if (top.integer("schema_version") != kSchemaVersion)
        top.fail("schema_version", "unsupported version (expected " + std::to_string(kSchemaVersion) + ")");
    const auto& arr = top.get("cases");
    if (!arr.is_array()) top.fail("cases", "expected an array");
    std::vector<Case> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string where = origin + ": cases[" + std::to_string(i) + "]";
        if (!arr[i].is_object()) throw CaseError(where + ": expected an object");
        Case c = read_case(Reader(arr[i], where));
        if (find_case(out, c.id)) throw CaseError(where + ": duplicate id '" + c.id + "'");
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Case> load_cases(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CaseError(path + ": cannot open");
    std::stringstream ss;
    ss << in.rdbuf();
    return cases_from_json(ss.str(), path);
}

void save_cases(const std::string& path, const std::vector<Case>& cases) {
    std::ofstream out(path);
    if (!out) throw CaseError(path + ": cannot write");
    out << cases_to_json(cases);
}

}  // namespace qcong
