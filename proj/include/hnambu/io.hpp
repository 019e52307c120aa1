#ifndef HNAMBU_IO_HPP
#define HNAMBU_IO_HPP

#include <hnambu/algebra.hpp>
#include <hnambu/cohomology.hpp>
#include <hnambu/errors.hpp>

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

/// Text documents for algebras, representations, cochains and matrices.
///
/// Algebra:
///     name: leib2
///     dim: 2
///     arity: 2
///     twist 1: id              # or [4 0; 0 2]; omitted twists are the identity
///     2 2 -> 1 : 1             # [e2, e2] = 1 e1
///
/// Representation: `name`, `algebra_dim`, `module_dim`, `arity`, then
/// `act p: i1 .. in -> j : v` where slot p indexes the module basis.
///
/// Cochain: `algebra_dim`, `arity`, `module_dim`, then `i1 .. in -> r : v`.
///
/// Matrix: one row per line, entries separated by blanks.
///
/// Indices are 1-based, `#` starts a comment, omitted constants are zero.
namespace hnambu::io {

namespace detail {

struct Token {
    std::string text;
    std::size_t column = 0;
};

inline std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == ':' || c == '[' || c == ']' || c == ';') {
            out.push_back({std::string(1, c), i + 1});
            ++i;
            continue;
        }
        if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
            out.push_back({"->", i + 1});
            i += 2;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size()) {
            const char e = line[i];
            if (std::isspace(static_cast<unsigned char>(e)) || e == '#' || e == ':' || e == '[' || e == ']' ||
                e == ';')
                break;
            if (e == '-' && i + 1 < line.size() && line[i + 1] == '>' && i > start) break;
            ++i;
        }
        out.push_back({std::string(line.substr(start, i - start)), start + 1});
    }
    return out;
}

struct Header {
    std::string key;
    std::vector<Token> value;
    std::size_t line = 0;
    std::size_t column = 0;
};

struct Constant {
    std::vector<std::size_t> tuple;  // 1-based as written
    std::size_t out = 0;             // 1-based as written
    Rational value;
    std::size_t line = 0;
    std::size_t column = 0;
};

inline bool is_identifier_start(const std::string& s) {
    return !s.empty() && (std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_');
}

inline std::size_t parse_count(const Token& t, std::size_t line) {
    if (t.text.empty() || t.text.size() > 18) throw ParseError("expected a count", line, t.column);
    std::size_t v = 0;
    for (char c : t.text) {
        if (c < '0' || c > '9') throw ParseError("expected a count, got '" + t.text + "'", line, t.column);
        v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    return v;
}

inline Rational parse_value(const Token& t, std::size_t line) {
    try {
        return Rational::parse(t.text);
    } catch (const ParseError& e) {
        throw ParseError(e.what(), line, t.column + (e.column() == 0 ? 0 : e.column() - 1));
    }
}

inline std::size_t end_column(const std::vector<Token>& toks, std::string_view line) {
    return toks.empty() ? line.size() + 1 : toks.back().column + toks.back().text.size();
}

// `i1 .. in -> j : v` starting at token `from`.
inline Constant parse_constant(const std::vector<Token>& toks, std::size_t from, std::size_t line,
                               std::size_t eol) {
    Constant c;
    c.line = line;
    c.column = from < toks.size() ? toks[from].column : eol;
    std::size_t i = from;
    while (i < toks.size() && toks[i].text != "->") c.tuple.push_back(parse_count(toks[i++], line));
    if (i == toks.size()) throw ParseError("expected '->'", line, eol);
    if (c.tuple.empty()) throw ParseError("expected input indices before '->'", line, toks[i].column);
    ++i;
    if (i == toks.size()) throw ParseError("expected output index after '->'", line, eol);
    c.out = parse_count(toks[i++], line);
    if (i == toks.size() || toks[i].text != ":")
        throw ParseError("expected ':' after output index", line, i == toks.size() ? eol : toks[i].column);
    ++i;
    if (i == toks.size()) throw ParseError("expected a value after ':'", line, eol);
    c.value = parse_value(toks[i++], line);
    if (i != toks.size()) throw ParseError("unexpected '" + toks[i].text + "'", line, toks[i].column);
    return c;
}

struct Document {
    std::vector<Header> headers;
    std::vector<Constant> constants;
    std::vector<std::pair<std::string, Constant>> keyed_constants;  // `act p: ...` lines
};

inline Document read_document(std::string_view text, const std::set<std::string>& constant_keys = {}) {
    Document doc;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;
        pos = nl + 1;
        const auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::size_t eol = end_column(toks, line);
        if (is_identifier_start(toks[0].text)) {
            std::size_t i = 0;
            std::string key;
            while (i < toks.size() && toks[i].text != ":") key += (key.empty() ? "" : " ") + toks[i++].text;
            if (i == toks.size()) throw ParseError("expected ':' after '" + key + "'", line_no, eol);
            const std::string head = key.substr(0, key.find(' '));
            if (constant_keys.count(head)) {
                doc.keyed_constants.emplace_back(key, parse_constant(toks, i + 1, line_no, eol));
                doc.keyed_constants.back().second.column = toks[0].column;
            } else {
                doc.headers.push_back(
                    {key, std::vector<Token>(toks.begin() + static_cast<std::ptrdiff_t>(i + 1), toks.end()), line_no,
                     toks[0].column});
            }
        } else {
            doc.constants.push_back(parse_constant(toks, 0, line_no, eol));
        }
    }
    return doc;
}

inline const Header* find_header(const Document& doc, const std::string& key) {
    const Header* found = nullptr;
    for (const auto& h : doc.headers)
        if (h.key == key) {
            if (found)
                throw DuplicateKey("line " + std::to_string(h.line) + ": '" + key + "' given more than once");
            found = &h;
        }
    return found;
}

inline std::size_t header_count(const Document& doc, const std::string& key) {
    const Header* h = find_header(doc, key);
    if (!h) throw ParseError("missing '" + key + ":' line", 0, 0);
    if (h->value.size() != 1) throw ParseError("'" + key + "' takes one count", h->line, h->column);
    return parse_count(h->value[0], h->line);
}

inline std::string header_name(const Document& doc, const std::string& fallback) {
    const Header* h = find_header(doc, "name");
    if (!h) return fallback;
    if (h->value.size() != 1) throw ParseError("'name' takes one word", h->line, h->column);
    return h->value[0].text;
}

// `id` or `[a b; c d]` (the header's value tokens).
inline Matrix parse_matrix_value(const Header& h, std::size_t dim) {
    const auto& v = h.value;
    if (v.size() == 1 && v[0].text == "id") return Matrix::identity(dim);
    if (v.empty() || v[0].text != "[") throw ParseError("expected 'id' or '[' for a matrix", h.line, h.column);
    std::vector<Vector> rows(1);
    std::size_t i = 1;
    for (; i < v.size() && v[i].text != "]"; ++i) {
        if (v[i].text == ";")
            rows.emplace_back();
        else
            rows.back().push_back(parse_value(v[i], h.line));
    }
    if (i == v.size()) throw ParseError("expected ']'", h.line, v.back().column);
    if (i + 1 != v.size()) throw ParseError("unexpected '" + v[i + 1].text + "'", h.line, v[i + 1].column);
    if (rows.size() != dim) throw DimMismatch("line " + std::to_string(h.line) + ": matrix must have " +
                                              std::to_string(dim) + " rows");
    for (const auto& r : rows)
        if (r.size() != dim)
            throw DimMismatch("line " + std::to_string(h.line) + ": matrix rows must have " + std::to_string(dim) +
                              " entries");
    return Matrix::from_rows(dim, rows);
}

inline void check_unknown_headers(const Document& doc, const std::set<std::string>& known,
                                  const std::string& prefix = "") {
    for (const auto& h : doc.headers) {
        if (known.count(h.key)) continue;
        if (!prefix.empty() && h.key.rfind(prefix + " ", 0) == 0) continue;
        throw ParseError("unknown key '" + h.key + "'", h.line, h.column);
    }
}

// Stores constants into a map with the given per-slot ranges (1-based in files).
inline void fill(MultiLinearMap& map, const std::vector<Constant>& constants) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    const auto& dims = map.source_dims();
    for (const auto& c : constants) {
        const std::string where = "line " + std::to_string(c.line) + ": ";
        if (c.tuple.size() != dims.size())
            throw ArityMismatch(where + "expected " + std::to_string(dims.size()) + " input indices, got " +
                                std::to_string(c.tuple.size()));
        std::vector<std::size_t> t(c.tuple.size());
        for (std::size_t p = 0; p < t.size(); ++p) {
            if (c.tuple[p] < 1 || c.tuple[p] > dims[p])
                throw RangeError(where + "index " + std::to_string(c.tuple[p]) + " outside 1.." +
                                 std::to_string(dims[p]));
            t[p] = c.tuple[p] - 1;
        }
        if (c.out < 1 || c.out > map.target_dim())
            throw RangeError(where + "output index " + std::to_string(c.out) + " outside 1.." +
                             std::to_string(map.target_dim()));
        const std::size_t l = map.radix().linearize(t);
        if (!seen.insert({l, c.out}).second) throw DuplicateKey(where + "constant given more than once");
        map.set_linear(l, c.out - 1, c.value);
    }
}

inline void write_constants(std::ostringstream& os, const MultiLinearMap& map, const std::string& prefix = "") {
    for (std::size_t l = 0; l < map.tuple_count(); ++l) {
        const auto terms = map.terms(l);
        if (terms.empty()) continue;
        const auto digits = map.radix().delinearize(l);
        for (const auto& t : terms) {
            os << prefix;
            for (std::size_t p = 0; p < digits.size(); ++p) os << (p ? " " : "") << digits[p] + 1;
            os << " -> " << t.out + 1 << " : " << t.value << "\n";
        }
    }
}

}  // namespace detail

/// `id` or `[a b; c d]`.
inline std::string format_matrix_inline(const Matrix& m) {
    if (m.is_square() && m.is_identity()) return "id";
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    }
    os << "]";
    return os.str();
}

inline std::string format_vector(const Vector& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    os << "]";
    return os.str();
}

inline HomNambuAlgebra parse_algebra(std::string_view text) {
    const auto doc = detail::read_document(text);
    detail::check_unknown_headers(doc, {"name", "dim", "arity"}, "twist");
    const std::size_t d = detail::header_count(doc, "dim");
    const std::size_t n = detail::header_count(doc, "arity");
    if (n < 2) throw RangeError("arity must be at least 2");
    TwistFamily twists(n - 1, Matrix::identity(d));
    std::set<std::size_t> given;
    for (const auto& h : doc.headers) {
        if (h.key.rfind("twist ", 0) != 0) continue;
        const detail::Token idx{h.key.substr(6), h.column + 6};
        const std::size_t i = detail::parse_count(idx, h.line);
        if (i < 1 || i > n - 1)
            throw RangeError("line " + std::to_string(h.line) + ": twist index " + std::to_string(i) + " outside 1.." +
                             std::to_string(n - 1));
        if (!given.insert(i).second)
            throw DuplicateKey("line " + std::to_string(h.line) + ": twist " + std::to_string(i) + " given twice");
        twists[i - 1] = detail::parse_matrix_value(h, d);
    }
    BracketTensor br = BracketTensor::uniform(d, n);
    detail::fill(br, doc.constants);
    return HomNambuAlgebra(detail::header_name(doc, "unnamed"), std::move(br), std::move(twists));
}

/// Canonical form: headers, every twist, constants in tuple order.
inline std::string serialize_algebra(const HomNambuAlgebra& alg) {
    std::ostringstream os;
    os << "name: " << alg.name() << "\n";
    os << "dim: " << alg.dim() << "\n";
    os << "arity: " << alg.arity() << "\n";
    for (std::size_t i = 0; i < alg.twists().size(); ++i)
        os << "twist " << i + 1 << ": " << format_matrix_inline(alg.twist(i)) << "\n";
    detail::write_constants(os, alg.bracket());
    return os.str();
}

inline Representation parse_representation(std::string_view text) {
    const auto doc = detail::read_document(text, {"act"});
    detail::check_unknown_headers(doc, {"name", "algebra_dim", "module_dim", "arity"});
    if (!doc.constants.empty())
        throw ParseError("constants in a representation must be prefixed by 'act p:'", doc.constants[0].line,
                         doc.constants[0].column);
    const std::size_t d = detail::header_count(doc, "algebra_dim");
    const std::size_t m = detail::header_count(doc, "module_dim");
    const std::size_t n = detail::header_count(doc, "arity");
    if (n < 2) throw RangeError("arity must be at least 2");
    Representation rep = Representation::zero(detail::header_name(doc, "unnamed"), d, m, n);
    std::vector<std::vector<detail::Constant>> per(n);
    for (const auto& [key, c] : doc.keyed_constants) {
        const detail::Token idx{key.size() > 4 ? key.substr(4) : "", c.column + 4};
        const std::size_t p = detail::parse_count(idx, c.line);
        if (p < 1 || p > n)
            throw RangeError("line " + std::to_string(c.line) + ": action position " + std::to_string(p) +
                             " outside 1.." + std::to_string(n));
        per[p - 1].push_back(c);
    }
    for (std::size_t p = 0; p < n; ++p) detail::fill(rep.actions[p], per[p]);
    return rep;
}

inline std::string serialize_representation(const Representation& rep) {
    std::ostringstream os;
    os << "name: " << rep.name << "\n";
    os << "algebra_dim: " << rep.algebra_dim << "\n";
    os << "module_dim: " << rep.module_dim << "\n";
    os << "arity: " << rep.arity() << "\n";
    for (std::size_t p = 0; p < rep.arity(); ++p)
        detail::write_constants(os, rep.actions[p], "act " + std::to_string(p + 1) + ": ");
    return os.str();
}

inline Cochain parse_cochain(std::string_view text) {
    const auto doc = detail::read_document(text);
    detail::check_unknown_headers(doc, {"name", "algebra_dim", "module_dim", "arity"});
    const std::size_t d = detail::header_count(doc, "algebra_dim");
    const std::size_t m = detail::header_count(doc, "module_dim");
    const std::size_t n = detail::header_count(doc, "arity");
    Cochain f = Cochain::zero(d, n, m);
    detail::fill(f.map, doc.constants);
    return f;
}

inline std::string serialize_cochain(const Cochain& f) {
    std::ostringstream os;
    const auto& dims = f.map.source_dims();
    os << "algebra_dim: " << (dims.empty() ? 0 : dims[0]) << "\n";
    os << "module_dim: " << f.module_dim() << "\n";
    os << "arity: " << f.map.arity() << "\n";
    detail::write_constants(os, f.map);
    return os.str();
}

inline Matrix parse_matrix(std::string_view text) {
    std::vector<Vector> rows;
    std::size_t line_no = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        const std::string_view line = text.substr(pos, nl - pos);
        ++line_no;
        pos = nl + 1;
        const auto toks = detail::tokenize(line);
        if (toks.empty()) continue;
        Vector row;
        for (const auto& t : toks) row.push_back(detail::parse_value(t, line_no));
        if (!rows.empty() && row.size() != rows[0].size())
            throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(rows[0].size()),
                             line_no, toks[0].column);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix", 0, 0);
    return Matrix::from_rows(rows[0].size(), rows);
}

inline std::string serialize_matrix(const Matrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
        os << "\n";
    }
    return os.str();
}

}  // namespace hnambu::io

#endif  // HNAMBU_IO_HPP
