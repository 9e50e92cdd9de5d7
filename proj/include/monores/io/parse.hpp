#pragma once

// Reading generator lists.
//
// Text form:
//
//   # comment
//   dim: 3            optional, before the first monomial
//   vars: x, y, z     optional, fixes names and order
//   z1^8, z1^6 z2, z2^6
//
// ideal := mono (',' mono)*, mono := factor (WS factor)*,
// factor := VAR ('^' UINT)?, VAR := [A-Za-z]+ UINT?. Newlines count as
// whitespace. If every variable is a common prefix followed by an index >= 1
// the indices give the axes; otherwise axes follow first appearance.
//
// JSON form: {"dimension": n, "exponents": [[...], ...]}, variables z1..zn.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "monores/checked.hpp"
#include "monores/error.hpp"
#include "monores/exponent.hpp"

namespace monores::io {

struct IdealSource {
    std::size_t dimension = 0;
    std::vector<Exponent> exponents;
    std::vector<std::string> variableNames;
    std::string provenance;
    std::vector<std::string> warnings;

    /// Provenance and warnings are not part of the value.
    friend bool operator==(const IdealSource& a, const IdealSource& b) {
        return a.dimension == b.dimension && a.exponents == b.exponents && a.variableNames == b.variableNames;
    }
};

namespace detail {

struct Pos {
    std::size_t line = 1;
    std::size_t column = 1;
};

struct Factor {
    std::string name;
    Int power = 1;
    Pos at;
};

struct Mono {
    std::vector<Factor> factors;
    Pos at;
};

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

inline bool isIdentifier(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
    if (i == 0) return false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return i == s.size();
}

inline Int parseUInt(std::string_view digits, Pos at) {
    Int v = 0;
    for (char c : digits) {
        if (__builtin_mul_overflow(v, Int{10}, &v) || __builtin_add_overflow(v, Int{c - '0'}, &v))
            throw ParseError("number too large", at.line, at.column);
    }
    return v;
}

// "z12" -> {"z", 12}; no trailing index -> nullopt.
inline std::optional<std::pair<std::string, Int>> splitIndexed(const std::string& name) {
    std::size_t i = 0;
    while (i < name.size() && std::isalpha(static_cast<unsigned char>(name[i]))) ++i;
    if (i == name.size()) return std::nullopt;
    Int idx = 0;
    for (std::size_t j = i; j < name.size(); ++j) {
        if (idx > 1'000'000) return std::nullopt;
        idx = idx * 10 + (name[j] - '0');
    }
    if (idx < 1) return std::nullopt;
    return std::pair{name.substr(0, i), idx};
}

class Scanner {
public:
    void feed(std::string_view line, std::size_t lineNo) {
        for (std::size_t c = 0; c < line.size(); ++c) chars_.push_back({line[c], {lineNo, c + 1}});
        chars_.push_back({'\n', {lineNo, line.size() + 1}});
    }

    std::vector<Mono> monomials() {
        std::vector<Mono> out;
        skipSpace();
        if (atEnd()) return out;
        while (true) {
            out.push_back(monomial());
            skipSpace();
            if (atEnd()) return out;
            if (peek() != ',') fail("expected ',' or end of input");
            ++i_;
            skipSpace();
            if (atEnd()) fail("expected a monomial after ','");
        }
    }

private:
    struct Ch {
        char c;
        Pos at;
    };

    bool atEnd() const { return i_ >= chars_.size(); }
    char peek() const { return chars_[i_].c; }
    Pos here() const { return atEnd() ? end() : chars_[i_].at; }
    Pos end() const { return chars_.empty() ? Pos{} : chars_.back().at; }
    [[noreturn]] void fail(const std::string& what) const {
        const Pos p = here();
        throw ParseError(what, p.line, p.column);
    }
    static bool space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
    static bool alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
    static bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

    void skipSpace() {
        while (!atEnd() && space(peek())) ++i_;
    }

    Mono monomial() {
        Mono m;
        m.at = here();
        m.factors.push_back(factor());
        while (true) {
            const std::size_t save = i_;
            skipSpace();
            if (atEnd() || peek() == ',') {
                i_ = save;
                return m;
            }
            if (save == i_) fail("expected whitespace between factors");
            m.factors.push_back(factor());
        }
    }

    Factor factor() {
        Factor f;
        f.at = here();
        if (atEnd() || !alpha(peek())) fail("expected a variable");
        while (!atEnd() && alpha(peek())) f.name += chars_[i_++].c;
        while (!atEnd() && digit(peek())) f.name += chars_[i_++].c;
        if (!atEnd() && alpha(peek())) fail("expected whitespace between factors");
        if (!atEnd() && peek() == '^') {
            ++i_;
            if (!atEnd() && peek() == '-') fail("negative exponent");
            if (atEnd() || !digit(peek())) fail("expected an exponent after '^'");
            const Pos at = here();
            std::string digits;
            while (!atEnd() && digit(peek())) digits += chars_[i_++].c;
            f.power = parseUInt(digits, at);
        }
        return f;
    }

    std::vector<Ch> chars_;
    std::size_t i_ = 0;
};

inline std::vector<std::string> defaultNames(std::size_t n, const std::string& prefix = "z") {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
    return names;
}

inline void dedupe(IdealSource& s) {
    std::vector<Exponent> kept;
    for (const auto& e : s.exponents) {
        if (std::find(kept.begin(), kept.end(), e) != kept.end()) {
            std::ostringstream os;
            os << "duplicate generator " << e << " dropped";
            s.warnings.push_back(os.str());
            continue;
        }
        kept.push_back(e);
    }
    s.exponents = std::move(kept);
}

}  // namespace detail

inline IdealSource parseIdeal(std::string_view text, std::string provenance = "<inline>") {
    using namespace detail;
    std::optional<std::size_t> declaredDim;
    std::optional<std::vector<std::string>> declaredVars;
    Pos dimAt;

    Scanner scanner;
    bool body = false;
    std::size_t lineNo = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(start, nl - start);
        ++lineNo;
        start = nl + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        const std::string t = trim(line);
        const std::size_t indent = line.find_first_not_of(" \t");
        if (!body && t.rfind("dim:", 0) == 0) {
            if (declaredDim) throw ParseError("repeated dim header", lineNo, indent + 1);
            const std::string v = trim(t.substr(4));
            const std::size_t col = line.find(':') + 2;
            if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw ParseError("dim must be a positive integer", lineNo, col);
            const Int d = parseUInt(v, {lineNo, col});
            if (d < 1) throw ParseError("dim must be a positive integer", lineNo, col);
            declaredDim = static_cast<std::size_t>(d);
            dimAt = {lineNo, indent + 1};
            continue;
        }
        if (!body && t.rfind("vars:", 0) == 0) {
            if (declaredVars) throw ParseError("repeated vars header", lineNo, indent + 1);
            std::vector<std::string> names;
            std::stringstream ss(t.substr(5));
            std::string item;
            while (std::getline(ss, item, ',')) {
                std::string name = trim(item);
                if (!isIdentifier(name)) throw ParseError("bad variable name '" + name + "'", lineNo, indent + 1);
                if (std::find(names.begin(), names.end(), name) != names.end())
                    throw ParseError("variable '" + name + "' declared twice", lineNo, indent + 1);
                names.push_back(name);
            }
            if (names.empty()) throw ParseError("empty vars header", lineNo, indent + 1);
            declaredVars = std::move(names);
            continue;
        }
        if (!t.empty()) body = true;
        scanner.feed(line, lineNo);
    }

    const std::vector<Mono> monos = scanner.monomials();
    if (monos.empty()) throw ParseError("no generators (the zero ideal is not accepted)", lineNo, 1);

    // Axis assignment.
    std::vector<std::string> names;
    std::map<std::string, std::size_t> axis;
    if (declaredVars) {
        names = *declaredVars;
        for (std::size_t i = 0; i < names.size(); ++i) axis[names[i]] = i;
        for (const auto& m : monos)
            for (const auto& f : m.factors)
                if (!axis.contains(f.name))
                    throw ParseError("undeclared variable '" + f.name + "'", f.at.line, f.at.column);
        if (declaredDim && *declaredDim != names.size())
            throw ParseError("dim disagrees with vars header", dimAt.line, dimAt.column);
    } else {
        std::vector<std::string> seen;
        for (const auto& m : monos)
            for (const auto& f : m.factors)
                if (std::find(seen.begin(), seen.end(), f.name) == seen.end()) seen.push_back(f.name);
        std::optional<std::string> prefix;
        bool indexed = true;
        Int maxIndex = 0;
        for (const auto& s : seen) {
            auto split = splitIndexed(s);
            if (!split || (prefix && *prefix != split->first)) {
                indexed = false;
                break;
            }
            prefix = split->first;
            maxIndex = std::max(maxIndex, split->second);
        }
        if (indexed) {
            std::size_t n = static_cast<std::size_t>(maxIndex);
            if (declaredDim) {
                if (*declaredDim < n)
                    throw ParseError("variable index exceeds declared dim", dimAt.line, dimAt.column);
                n = *declaredDim;
            }
            names = defaultNames(n, *prefix);
        } else {
            names = seen;
            if (declaredDim && *declaredDim != names.size())
                throw ParseError("dim disagrees with the number of variables", dimAt.line, dimAt.column);
        }
        for (std::size_t i = 0; i < names.size(); ++i) axis[names[i]] = i;
    }

    IdealSource src;
    src.dimension = names.size();
    src.variableNames = names;
    src.provenance = std::move(provenance);
    for (const auto& m : monos) {
        std::vector<Int> e(src.dimension, 0);
        for (const auto& f : m.factors) {
            Int& slot = e[axis.at(f.name)];
            if (__builtin_add_overflow(slot, f.power, &slot))
                throw ParseError("exponent too large", f.at.line, f.at.column);
        }
        Exponent x(e);
        if (x.isZero()) throw ParseError("constant monomial (the unit ideal is not accepted)", m.at.line, m.at.column);
        src.exponents.push_back(std::move(x));
    }
    detail::dedupe(src);
    return src;
}

inline IdealSource parseIdealJson(std::string_view text, std::string provenance = "<inline>") {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // Byte offset to line/column.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("invalid JSON", line, col);
    }
    auto bad = [](const std::string& what) { return ParseError(what, 1, 1); };
    if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("exponents"))
        throw bad("expected an object with \"dimension\" and \"exponents\"");
    const json& d = doc["dimension"];
    if (!d.is_number_integer() || d.get<std::int64_t>() < 1) throw bad("\"dimension\" must be a positive integer");
    const auto n = static_cast<std::size_t>(d.get<std::int64_t>());
    const json& rows = doc["exponents"];
    if (!rows.is_array()) throw bad("\"exponents\" must be an array");

    IdealSource src;
    src.dimension = n;
    src.variableNames = detail::defaultNames(n);
    src.provenance = std::move(provenance);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const json& row = rows[r];
        const std::string where = "exponents[" + std::to_string(r) + "]";
        if (!row.is_array() || row.size() != n) throw bad(where + " must have " + std::to_string(n) + " entries");
        std::vector<Int> e;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw bad(where + " must contain integers");
            if (v.get<std::int64_t>() < 0) throw bad("negative exponent in " + where);
            e.push_back(v.get<std::int64_t>());
        }
        Exponent x(e);
        if (x.isZero()) throw bad(where + " is constant (the unit ideal is not accepted)");
        src.exponents.push_back(std::move(x));
    }
    if (src.exponents.empty()) throw bad("no generators (the zero ideal is not accepted)");
    detail::dedupe(src);
    return src;
}

/// JSON if the first non-blank character is '{', text otherwise.
inline IdealSource parseAny(std::string_view text, std::string provenance = "<inline>") {
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parseIdealJson(text, std::move(provenance));
    return parseIdeal(text, std::move(provenance));
}

/// Text form that parses back to the same source.
inline std::string render(const IdealSource& src) {
    std::string out = "vars: ";
    for (std::size_t i = 0; i < src.variableNames.size(); ++i) {
        if (i) out += ", ";
        out += src.variableNames[i];
    }
    out += "\n";
    for (std::size_t g = 0; g < src.exponents.size(); ++g) {
        if (g) out += ", ";
        bool first = true;
        for (std::size_t i = 0; i < src.dimension; ++i) {
            const Int p = src.exponents[g][i];
            if (p == 0) continue;
            if (!first) out += " ";
            first = false;
            out += src.variableNames[i];
            if (p != 1) out += "^" + std::to_string(p);
        }
    }
    out += "\n";
    return out;
}

}  // namespace monores::io
