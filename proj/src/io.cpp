#include "nilcone/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nilcone/errors.hpp"

namespace nilcone {

using json = nlohmann::ordered_json;

namespace {

json field_json(const Field& f) {
    if (f.is_rational()) return {{"type", "Q"}};
    return {{"type", "Fp"}, {"p", f.characteristic()}};
}

Field field_from(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "Q") return Field::rationals();
    if (type == "Fp") {
        try {
            return Field::prime(j.at("p").get<std::uint32_t>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("unknown field type '" + type + "'");
}

Scalar scalar_from(const Field& f, const json& j) {
    std::string text = j.is_number_integer() ? std::to_string(j.get<long long>()) : j.get<std::string>();
    try {
        return Scalar::parse(f, text);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError("bad scalar '" + text + "': " + e.what());
    }
}

}  // namespace

std::string element_to_json(const AnyElement& e, int indent) {
    const bool exotic = std::holds_alternative<ExoticElement>(e);
    const Vector& v = exotic ? std::get<ExoticElement>(e).v : std::get<EnhancedElement>(e).v;
    const Matrix& x = exotic ? std::get<ExoticElement>(e).x : std::get<EnhancedElement>(e).x;
    json j;
    j["n"] = exotic ? v.dim() / 2 : v.dim();
    j["module"] = exotic ? "exotic" : "enhanced";
    j["field"] = field_json(x.field());
    j["v"] = json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) j["v"].push_back(v[i].to_string());
    j["x"] = json::array();
    for (std::size_t i = 0; i < x.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < x.cols(); ++c) row.push_back(x(i, c).to_string());
        j["x"].push_back(std::move(row));
    }
    return j.dump(indent);
}

AnyElement element_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        const std::size_t n = j.at("n").get<std::size_t>();
        const std::string module = j.value("module", "enhanced");
        if (module != "enhanced" && module != "exotic") throw ParseError("unknown module '" + module + "'");
        const bool exotic = module == "exotic";
        const std::size_t dim = exotic ? 2 * n : n;
        const Field f = field_from(j.at("field"));
        const json& jv = j.at("v");
        const json& jx = j.at("x");
        if (jv.size() != dim || jx.size() != dim)
            throw ParseError("expected v and x of size " + std::to_string(dim) + " for " + module + " n=" + std::to_string(n));
        Vector v(f, dim);
        Matrix x(f, dim, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            v[i] = scalar_from(f, jv[i]);
            if (jx[i].size() != dim) throw ParseError("row " + std::to_string(i) + " of x has the wrong length");
            for (std::size_t c = 0; c < dim; ++c) x(i, c) = scalar_from(f, jx[i][c]);
        }
        if (exotic) return ExoticElement(std::move(v), std::move(x));
        return EnhancedElement(std::move(v), std::move(x));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed element document: ") + e.what());
    }
}

AnyElement read_element_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return element_from_json(buf.str());
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IOError("cannot write " + path);
    out << text;
    if (!out) throw IOError("write to " + path + " failed");
}

}  // namespace nilcone
