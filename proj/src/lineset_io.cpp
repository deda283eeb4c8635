#include "eqlines/lineset_io.hpp"

#include "eqlines/errors.hpp"

#include <fstream>
#include <sstream>

namespace eqlines {

using nlohmann::json;

json to_json(const LineSet& lines) {
    json j;
    j["n"] = lines.size();
    j["angle"] = to_string(lines.angle());
    const std::size_t n = lines.size();
    if (lines.is_equiangular()) {
        const SignMatrix s = lines.signs();
        json rows = json::array();
        for (std::size_t i = 0; i < n; ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < n; ++k) row.push_back(static_cast<int>(s(i, k)));
            rows.push_back(std::move(row));
        }
        j["signs"] = std::move(rows);
    } else {
        json rows = json::array();
        for (std::size_t i = 0; i < n; ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < n; ++k) row.push_back(to_string(lines.gram()(i, k)));
            rows.push_back(std::move(row));
        }
        j["gram"] = std::move(rows);
    }
    if (lines.frame()) {
        j["frame"] = {{"squared_norm", lines.frame()->squared_norm},
                      {"vectors", lines.frame()->vectors}};
    }
    return j;
}

namespace {

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("line set JSON is missing \"") + key + "\"");
    }
    return j.at(key);
}

void require_square(const json& rows, std::size_t n, const char* what) {
    if (!rows.is_array() || rows.size() != n) {
        throw ParseError(std::string(what) + " must have n rows");
    }
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n) {
            throw ParseError(std::string(what) + " must have n columns in every row");
        }
    }
}

}  // namespace

LineSet lineset_from_json(const json& j) {
    try {
        const std::size_t n = require(j, "n").get<std::size_t>();
        const Rational angle = parse_rational(require(j, "angle").get<std::string>());

        std::optional<IntegerFrame> frame;
        if (j.contains("frame")) {
            IntegerFrame f;
            f.squared_norm = require(j["frame"], "squared_norm").get<std::int64_t>();
            f.vectors = require(j["frame"], "vectors").get<std::vector<std::vector<std::int64_t>>>();
            frame = std::move(f);
        }

        if (j.contains("signs")) {
            const json& rows = j["signs"];
            require_square(rows, n, "\"signs\"");
            std::vector<std::int8_t> signs;
            signs.reserve(n * n);
            for (const auto& row : rows) {
                for (const auto& v : row) signs.push_back(static_cast<std::int8_t>(v.get<int>()));
            }
            LineSet base = from_sign_matrix(SignMatrix(n, std::move(signs)), angle);
            if (!frame) return base;
            return LineSet(angle, base.gram(), std::move(frame));
        }
        const json& rows = require(j, "gram");
        require_square(rows, n, "\"gram\"");
        std::vector<Rational> entries;
        entries.reserve(n * n);
        for (const auto& row : rows) {
            for (const auto& v : row) entries.push_back(parse_rational(v.get<std::string>()));
        }
        return LineSet(angle, RatMatrix(n, n, std::move(entries)), std::move(frame));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed line set JSON: ") + e.what());
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("invalid line set: ") + e.what());
    }
}

std::string serialize(const LineSet& lines) {
    return to_json(lines).dump() + "\n";
}

LineSet parse_lineset(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return lineset_from_json(j);
}

LineSet read_lineset(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_lineset(buf.str());
}

void write_lineset(const std::filesystem::path& path, const LineSet& lines) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << serialize(lines);
}

}  // namespace eqlines
