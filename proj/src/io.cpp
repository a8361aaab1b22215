#include "flagdirac/io.hpp"

#include <cctype>
#include <climits>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace flagdirac {

namespace {

using Json = nlohmann::ordered_json;

// "123" -> 123 with overflow detection; digits only.
std::optional<long long> parse_digits(const std::string& text) {
    if (text.empty()) {
        return std::nullopt;
    }
    long long value = 0;
    for (char ch : text) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            return std::nullopt;
        }
        if (value > (LLONG_MAX - (ch - '0')) / 10) {
            return std::nullopt;
        }
        value = value * 10 + (ch - '0');
    }
    return value;
}

// Accepted exact forms: "3", "-3", "3/4", "-3/4", "1.25", "-1.25".
std::optional<Rational> parse_exact(const std::string& text) {
    std::string body = text;
    long long sign = 1;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        sign = body.front() == '-' ? -1 : 1;
        body.erase(body.begin());
    }
    if (const auto slash = body.find('/'); slash != std::string::npos) {
        const auto num = parse_digits(body.substr(0, slash));
        const auto den = parse_digits(body.substr(slash + 1));
        if (!num || !den || *den == 0) {
            return std::nullopt;
        }
        return Rational(sign * *num, *den);
    }
    if (const auto dot = body.find('.'); dot != std::string::npos) {
        const auto whole = parse_digits(body.substr(0, dot));
        const std::string frac_text = body.substr(dot + 1);
        const auto frac = parse_digits(frac_text);
        if (!whole || !frac) {
            return std::nullopt;
        }
        long long scale = 1;
        for (std::size_t i = 0; i < frac_text.size(); ++i) {
            if (scale > LLONG_MAX / 10) {
                return std::nullopt;
            }
            scale *= 10;
        }
        if (*whole > (LLONG_MAX - *frac) / scale) {
            return std::nullopt;
        }
        return Rational(sign * (*whole * scale + *frac), scale);
    }
    const auto whole = parse_digits(body);
    if (!whole) {
        return std::nullopt;
    }
    return Rational(sign * *whole);
}

Scalar parse_scalar(const Json& value, const std::string& where) {
    if (value.is_number_integer()) {
        return Scalar(Rational(value.get<long long>()));
    }
    if (value.is_number_float()) {
        return Scalar(value.get<double>());
    }
    if (value.is_string()) {
        const auto exact = parse_exact(value.get<std::string>());
        if (!exact) {
            throw StructureFileError(where + ": cannot parse \"" + value.get<std::string>() +
                                     "\" as an integer, fraction or decimal");
        }
        return Scalar(*exact);
    }
    throw StructureFileError(where + ": expected a number or an exact value string");
}

struct ComplexScalar {
    Scalar re;
    Scalar im;
};

ComplexScalar parse_complex_scalar(const Json& value, const std::string& where) {
    if (value.is_array()) {
        if (value.size() != 2) {
            throw StructureFileError(where + ": a complex value needs exactly two entries");
        }
        return {parse_scalar(value[0], where + " real part"),
                parse_scalar(value[1], where + " imaginary part")};
    }
    return {parse_scalar(value, where), Scalar(0)};
}

void check_keys(const Json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& item : obj.items()) {
        if (!allowed.contains(item.key())) {
            throw StructureFileError(where + ": unexpected field \"" + item.key() + "\"");
        }
    }
}

const Json& require_field(const Json& obj, const std::string& key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw StructureFileError(where + ": missing field \"" + key + "\"");
    }
    return *it;
}

PerRootCase parse_case(const Json& obj, const std::string& where) {
    if (!obj.is_object()) {
        throw StructureFileError(where + ": expected an object with a \"case\" field");
    }
    const Json& tag_value = require_field(obj, "case", where);
    if (!tag_value.is_string()) {
        throw StructureFileError(where + ": \"case\" must be one of \"1\", \"2\", \"3\", "
                                         "\"4.1\", \"4.2\"");
    }
    const std::string tag = tag_value.get<std::string>();
    if (tag == "1" || tag == "2") {
        check_keys(obj, {"case"}, where);
        if (tag == "1") {
            return Case1{};
        }
        return Case2{};
    }
    if (tag == "3") {
        check_keys(obj, {"case", "epsilon"}, where);
        const Json& eps = require_field(obj, "epsilon", where);
        if (!eps.is_number_integer() ||
            (eps.get<long long>() != 1 && eps.get<long long>() != -1)) {
            throw StructureFileError(where + ": \"epsilon\" must be 1 or -1");
        }
        return Case3{static_cast<int>(eps.get<long long>())};
    }
    if (tag == "4.1") {
        check_keys(obj, {"case", "a1", "b1"}, where);
        const ComplexScalar a1 =
            parse_complex_scalar(require_field(obj, "a1", where), where + ": \"a1\"");
        const ComplexScalar b1 =
            parse_complex_scalar(require_field(obj, "b1", where), where + ": \"b1\"");
        const Scalar a_norm = a1.re * a1.re + a1.im * a1.im;
        const Scalar b_norm = b1.re * b1.re + b1.im * b1.im;
        if (scalar_is_zero(a_norm)) {
            throw StructureFileError(where + ": \"a1\" must be nonzero");
        }
        if (scalar_is_zero(b_norm)) {
            throw StructureFileError(where + ": \"b1\" must be nonzero");
        }
        const Scalar ratio_re = (b1.re * a1.re + b1.im * a1.im) / a_norm;
        const Scalar ratio_im = (b1.im * a1.re - b1.re * a1.im) / a_norm;
        if (!scalar_is_zero(ratio_im)) {
            throw StructureFileError(where + ": b1/a1 must be real");
        }
        if (scalar_is_zero(ratio_re)) {
            throw StructureFileError(where + ": b1/a1 must be nonzero");
        }
        return Case41{ratio_re};
    }
    if (tag == "4.2") {
        check_keys(obj, {"case", "x", "a"}, where);
        const Scalar x = parse_scalar(require_field(obj, "x", where), where + ": \"x\"");
        const Scalar a = parse_scalar(require_field(obj, "a", where), where + ": \"a\"");
        if (scalar_is_zero(x)) {
            throw StructureFileError(where + ": \"x\" must be nonzero");
        }
        return Case42{x, a};
    }
    throw StructureFileError(where + ": unknown case \"" + tag + "\"");
}

Json scalar_json(const Scalar& s) {
    if (s.exact) {
        if (s.exact->denominator() == 1) {
            return Json(s.exact->numerator());
        }
        return Json(std::to_string(s.exact->numerator()) + "/" +
                    std::to_string(s.exact->denominator()));
    }
    return Json(s.value);
}

}  // namespace

StructureDocument parse_structure_document(const std::string& json_text) {
    Json doc;
    try {
        doc = Json::parse(json_text);
    } catch (const Json::parse_error& err) {
        throw StructureFileError(std::string("invalid JSON: ") + err.what());
    }
    if (!doc.is_object()) {
        throw StructureFileError("structure file must be a JSON object");
    }
    check_keys(doc, {"algebra", "assignment"}, "structure file");

    const Json& algebra = require_field(doc, "algebra", "structure file");
    if (!algebra.is_object()) {
        throw StructureFileError("\"algebra\" must be an object");
    }
    check_keys(algebra, {"family", "rank"}, "\"algebra\"");
    const Json& family = require_field(algebra, "family", "\"algebra\"");
    if (!family.is_string() || family.get<std::string>().size() != 1) {
        throw StructureFileError("\"algebra\": \"family\" must be a single letter");
    }
    const Json& rank = require_field(algebra, "rank", "\"algebra\"");
    if (!rank.is_number_integer() || rank.get<long long>() < 1 ||
        rank.get<long long>() > INT_MAX) {
        throw StructureFileError("\"algebra\": \"rank\" must be a positive integer");
    }

    StructureDocument out;
    out.algebra = {family.get<std::string>()[0], static_cast<int>(rank.get<long long>())};

    const Json& assignment = require_field(doc, "assignment", "structure file");
    if (!assignment.is_object()) {
        throw StructureFileError("\"assignment\" must map root names to cases");
    }
    std::set<Root> seen;
    for (const auto& item : assignment.items()) {
        const auto root = RootSystem::parse_root_name(item.key(), out.algebra.rank);
        if (!root) {
            throw StructureFileError("\"" + item.key() + "\" is not a root name of rank " +
                                     std::to_string(out.algebra.rank));
        }
        if (!seen.insert(*root).second) {
            throw StructureFileError("root " + RootSystem::root_name(*root) +
                                     " appears more than once");
        }
        out.entries.emplace_back(*root, parse_case(item.value(), "root " + item.key()));
    }
    return out;
}

DiracStructure bind_structure(const StructureDocument& doc, const RootSystem& rs) {
    if (!(doc.algebra == rs.spec)) {
        throw StructureFileError("document algebra does not match the root system");
    }
    std::vector<std::optional<PerRootCase>> slots(rs.size());
    for (const auto& [root, per_case] : doc.entries) {
        const auto index = rs.index_of(root);
        if (!index) {
            throw StructureFileError(RootSystem::root_name(root) +
                                     " is not a positive root of this algebra");
        }
        if (slots[*index]) {
            throw StructureFileError("root " + rs.root_name(*index) + " appears more than once");
        }
        slots[*index] = per_case;
    }
    std::string missing;
    for (int i = 0; i < rs.size(); ++i) {
        if (!slots[i]) {
            missing += missing.empty() ? "" : ", ";
            missing += rs.root_name(i);
        }
    }
    if (!missing.empty()) {
        throw StructureFileError("assignment is missing roots: " + missing);
    }
    std::vector<PerRootCase> assignment;
    assignment.reserve(slots.size());
    for (auto& slot : slots) {
        assignment.push_back(*slot);
    }
    return make_structure(rs, std::move(assignment));
}

std::string serialize_structure(const DiracStructure& structure) {
    const RootSystem& rs = *structure.rs;
    Json doc;
    doc["algebra"] = {{"family", std::string(1, rs.spec.family)}, {"rank", rs.spec.rank}};
    Json assignment = Json::object();
    for (int i = 0; i < rs.size(); ++i) {
        Json entry;
        const PerRootCase& c = structure.assignment[static_cast<std::size_t>(i)];
        switch (case_tag(c)) {
            case CaseTag::c1:
                entry["case"] = "1";
                break;
            case CaseTag::c2:
                entry["case"] = "2";
                break;
            case CaseTag::c3:
                entry["case"] = "3";
                entry["epsilon"] = std::get<Case3>(c).epsilon;
                break;
            case CaseTag::c41:
                entry["case"] = "4.1";
                entry["a1"] = 1;
                entry["b1"] = scalar_json(std::get<Case41>(c).ratio);
                break;
            case CaseTag::c42:
                entry["case"] = "4.2";
                entry["x"] = scalar_json(std::get<Case42>(c).x);
                entry["a"] = scalar_json(std::get<Case42>(c).a);
                break;
        }
        assignment[rs.root_name(i)] = std::move(entry);
    }
    doc["assignment"] = std::move(assignment);
    return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw StructureFileError("cannot read file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content) || !out.flush()) {
        throw StructureFileError("cannot write file: " + path);
    }
}

}  // namespace flagdirac
