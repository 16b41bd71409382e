#include "koszul/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace koszul {

int Quiver::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] == name) return static_cast<int>(i);
    }
    return -1;
}

int Quiver::arrow_index(const std::string& name) const {
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        if (arrows[i].name == name) return static_cast<int>(i);
    }
    return -1;
}

std::string Path::str(const Quiver& q) const {
    if (arrows.empty()) return q.vertices[vertex];
    std::string out;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        if (i) out += '.';
        out += q.arrows[arrows[i]].name;
    }
    return out;
}

bool operator==(const Path& a, const Path& b) {
    return a.vertex == b.vertex && a.arrows == b.arrows;
}

bool operator<(const Path& a, const Path& b) {
    if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
    if (a.arrows != b.arrows) return a.arrows < b.arrows;
    return a.vertex < b.vertex;
}

bool paths_composable(const Quiver& q, const Path& a, const Path& b) {
    return a.target(q) == b.source();
}

Path path_concat(const Quiver& q, const Path& a, const Path& b) {
    if (!paths_composable(q, a, b)) throw ValidationError("paths are not composable");
    Path out = a;
    out.arrows.insert(out.arrows.end(), b.arrows.begin(), b.arrows.end());
    return out;
}

Path parse_path(const Quiver& q, const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == '.') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() == 1) {
        int a = q.arrow_index(parts[0]);
        if (a >= 0) return Path::of_arrow(q, a);
        int v = q.vertex_index(parts[0]);
        if (v >= 0) return Path::trivial(v);
        throw ValidationError("unknown arrow or vertex '" + parts[0] + "'");
    }
    Path out;
    for (const auto& name : parts) {
        int a = q.arrow_index(name);
        if (a < 0) throw ValidationError("unknown arrow '" + name + "'");
        if (out.arrows.empty()) {
            out = Path::of_arrow(q, a);
        } else {
            if (out.target(q) != q.arrows[a].src) {
                throw ValidationError("path '" + text + "' is not composable");
            }
            out.arrows.push_back(a);
        }
    }
    return out;
}

void TensorElement::add_term(const Path& p, const Scalar& c) {
    if (p.degree() != degree) {
        throw ValidationError("term of degree " + std::to_string(p.degree()) +
                              " in an element of degree " + std::to_string(degree));
    }
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (const auto& [p, c] : o.terms) add_term(p, c);
    return *this;
}

TensorElement TensorElement::scaled(const Scalar& c) const {
    TensorElement out;
    out.degree = degree;
    if (c.is_zero()) return out;
    for (const auto& [p, x] : terms) out.terms.emplace(p, x * c);
    return out;
}

std::optional<std::pair<int, int>> TensorElement::uniform_endpoints(const Quiver& q) const {
    std::optional<std::pair<int, int>> ends;
    for (const auto& [p, c] : terms) {
        std::pair<int, int> here{p.source(), p.target(q)};
        if (!ends) {
            ends = here;
        } else if (*ends != here) {
            return std::nullopt;
        }
    }
    return ends;
}

bool TensorElement::operator==(const TensorElement& o) const {
    if (degree != o.degree || terms.size() != o.terms.size()) return false;
    auto it = terms.begin();
    auto jt = o.terms.begin();
    for (; it != terms.end(); ++it, ++jt) {
        if (!(it->first == jt->first) || it->second != jt->second) return false;
    }
    return true;
}

TensorElement tensor_concat(const Quiver& q, const TensorElement& a, const TensorElement& b) {
    TensorElement out;
    out.degree = a.degree + b.degree;
    for (const auto& [pa, ca] : a.terms) {
        for (const auto& [pb, cb] : b.terms) {
            if (!paths_composable(q, pa, pb)) continue;
            out.add_term(path_concat(q, pa, pb), ca * cb);
        }
    }
    return out;
}

std::vector<TensorElement> uniform_components(const Quiver& q, const TensorElement& x) {
    std::map<std::pair<int, int>, TensorElement> blocks;
    for (const auto& [p, c] : x.terms) {
        TensorElement& piece = blocks[{p.source(), p.target(q)}];
        piece.degree = x.degree;
        piece.add_term(p, c);
    }
    std::vector<TensorElement> out;
    out.reserve(blocks.size());
    for (auto& [key, piece] : blocks) out.push_back(std::move(piece));
    return out;
}

bool Presentation::operator==(const Presentation& o) const {
    if (!(field == o.field) || maxdeg != o.maxdeg) return false;
    if (quiver.vertices != o.quiver.vertices) return false;
    if (quiver.arrows.size() != o.quiver.arrows.size()) return false;
    for (std::size_t i = 0; i < quiver.arrows.size(); ++i) {
        const Arrow& a = quiver.arrows[i];
        const Arrow& b = o.quiver.arrows[i];
        if (a.name != b.name || a.src != b.src || a.tgt != b.tgt) return false;
    }
    if (params.size() != o.params.size() || relations.size() != o.relations.size()) return false;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (params[i].first != o.params[i].first || params[i].second != o.params[i].second) {
            return false;
        }
    }
    for (std::size_t i = 0; i < relations.size(); ++i) {
        if (!(relations[i] == o.relations[i])) return false;
    }
    return true;
}

namespace {

enum class Tok { Ident, Number, Plus, Minus, Star, Dot, Colon, RArrow, Equals, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int col = 0;
};

std::vector<Token> lex_line(const std::string& line, int line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto fail = [&](const std::string& msg, std::size_t at) -> void {
        throw ParseError(msg, line_no, static_cast<int>(at) + 1);
    };
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        int col = static_cast<int>(i) + 1;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i;
            while (i < line.size() &&
                   (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_')) {
                ++i;
            }
            out.push_back({Tok::Ident, line.substr(start, i - start), col});
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
            if (i < line.size() && line[i] == '/') {
                ++i;
                if (i == line.size() || !std::isdigit(static_cast<unsigned char>(line[i]))) {
                    fail("expected digits after '/'", i);
                }
                while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
            }
            out.push_back({Tok::Number, line.substr(start, i - start), col});
        } else if (c == '+') {
            out.push_back({Tok::Plus, "+", col});
            ++i;
        } else if (c == '-') {
            if (i + 1 < line.size() && line[i + 1] == '>') {
                out.push_back({Tok::RArrow, "->", col});
                i += 2;
            } else {
                out.push_back({Tok::Minus, "-", col});
                ++i;
            }
        } else if (c == '*') {
            out.push_back({Tok::Star, "*", col});
            ++i;
        } else if (c == '.') {
            out.push_back({Tok::Dot, ".", col});
            ++i;
        } else if (c == ':') {
            out.push_back({Tok::Colon, ":", col});
            ++i;
        } else if (c == '=') {
            out.push_back({Tok::Equals, "=", col});
            ++i;
        } else {
            fail(std::string("unexpected character '") + c + "'", i);
        }
    }
    out.push_back({Tok::End, "", static_cast<int>(line.size()) + 1});
    return out;
}

struct LineParser {
    const std::vector<Token>& toks;
    std::size_t pos = 0;
    int line_no;

    const Token& peek() const { return toks[pos]; }
    const Token& next() { return toks[pos++]; }
    bool accept(Tok kind) {
        if (toks[pos].kind == kind) {
            ++pos;
            return true;
        }
        return false;
    }
    const Token& expect(Tok kind, const std::string& what) {
        if (toks[pos].kind != kind) {
            throw ParseError("expected " + what, line_no, toks[pos].col);
        }
        return toks[pos++];
    }
    void expect_end() {
        if (toks[pos].kind != Tok::End) {
            throw ParseError("unexpected trailing input", line_no, toks[pos].col);
        }
    }
};

struct RawLine {
    int line_no;
    std::vector<Token> toks;
};

}  // namespace

Presentation parse_presentation(const std::string& text) {
    std::vector<RawLine> lines;
    {
        std::istringstream in(text);
        std::string line;
        int no = 0;
        while (std::getline(in, line)) {
            ++no;
            auto toks = lex_line(line, no);
            if (toks.size() > 1) lines.push_back({no, std::move(toks)});
        }
    }

    Presentation pres;
    bool field_seen = false;
    bool maxdeg_seen = false;

    // The field must be known before coefficients appear, so resolve it first.
    for (const auto& raw : lines) {
        if (raw.toks[0].kind != Tok::Ident || raw.toks[0].text != "field") continue;
        LineParser p{raw.toks, 1, raw.line_no};
        if (field_seen) throw ParseError("duplicate field line", raw.line_no, raw.toks[0].col);
        field_seen = true;
        const Token& which = p.expect(Tok::Ident, "field name (Q or Fp)");
        if (which.text == "Q") {
            pres.field = Field();
        } else if (which.text == "Fp") {
            const Token& num = p.expect(Tok::Number, "prime modulus");
            if (num.text.find('/') != std::string::npos) {
                throw ParseError("modulus must be an integer", raw.line_no, num.col);
            }
            try {
                pres.field = Field(std::stoull(num.text));
            } catch (const ValidationError& e) {
                throw ParseError(e.what(), raw.line_no, num.col);
            }
        } else {
            throw ParseError("unknown field '" + which.text + "'", raw.line_no, which.col);
        }
        p.expect_end();
    }

    auto known_name = [&](const std::string& name) {
        return pres.quiver.vertex_index(name) >= 0 || pres.quiver.arrow_index(name) >= 0;
    };
    auto find_param = [&](const std::string& name) -> const Scalar* {
        for (const auto& [pname, value] : pres.params) {
            if (pname == name) return &value;
        }
        return nullptr;
    };

    for (const auto& raw : lines) {
        LineParser p{raw.toks, 0, raw.line_no};
        const Token& head = p.expect(Tok::Ident, "directive");
        if (head.text == "field") continue;  // handled above

        if (head.text == "vertex") {
            const Token& name = p.expect(Tok::Ident, "vertex name");
            p.expect_end();
            if (known_name(name.text)) {
                throw ParseError("duplicate name '" + name.text + "'", raw.line_no, name.col);
            }
            pres.quiver.vertices.push_back(name.text);
        } else if (head.text == "arrow") {
            const Token& name = p.expect(Tok::Ident, "arrow name");
            p.expect(Tok::Colon, "':'");
            const Token& src = p.expect(Tok::Ident, "source vertex");
            p.expect(Tok::RArrow, "'->'");
            const Token& tgt = p.expect(Tok::Ident, "target vertex");
            p.expect_end();
            if (known_name(name.text)) {
                throw ParseError("duplicate name '" + name.text + "'", raw.line_no, name.col);
            }
            int s = pres.quiver.vertex_index(src.text);
            if (s < 0) throw ParseError("unknown vertex '" + src.text + "'", raw.line_no, src.col);
            int t = pres.quiver.vertex_index(tgt.text);
            if (t < 0) throw ParseError("unknown vertex '" + tgt.text + "'", raw.line_no, tgt.col);
            pres.quiver.arrows.push_back({name.text, s, t});
        } else if (head.text == "param") {
            const Token& name = p.expect(Tok::Ident, "parameter name");
            p.expect(Tok::Equals, "'='");
            bool neg = p.accept(Tok::Minus);
            const Token& num = p.expect(Tok::Number, "rational value");
            p.expect_end();
            if (find_param(name.text) || known_name(name.text)) {
                throw ParseError("duplicate name '" + name.text + "'", raw.line_no, name.col);
            }
            Scalar value = pres.field.parse((neg ? "-" : "") + num.text);
            pres.params.emplace_back(name.text, value);
        } else if (head.text == "relation") {
            TensorElement rel;
            rel.degree = 2;
            bool first = true;
            for (;;) {
                Scalar sign = pres.field.one();
                if (p.accept(Tok::Minus)) {
                    sign = -sign;
                } else {
                    p.accept(Tok::Plus);
                }
                // optional coefficient
                Scalar coeff = sign;
                if (p.peek().kind == Tok::Number) {
                    const Token& num = p.next();
                    coeff = sign * pres.field.parse(num.text);
                    p.expect(Tok::Star, "'*' after coefficient");
                } else if (p.peek().kind == Tok::Ident &&
                           p.toks[p.pos + 1].kind == Tok::Star) {
                    const Token& pname = p.next();
                    const Scalar* value = find_param(pname.text);
                    if (!value) {
                        throw ParseError("unbound parameter '" + pname.text + "'", raw.line_no,
                                         pname.col);
                    }
                    coeff = sign * *value;
                    p.next();  // '*'
                }
                // arrow path
                std::vector<int> arrows;
                const Token& first_arrow = p.expect(Tok::Ident, "arrow name");
                int a = pres.quiver.arrow_index(first_arrow.text);
                if (a < 0) {
                    throw ParseError("unknown arrow '" + first_arrow.text + "'", raw.line_no,
                                     first_arrow.col);
                }
                arrows.push_back(a);
                while (p.accept(Tok::Dot)) {
                    const Token& next_arrow = p.expect(Tok::Ident, "arrow name");
                    int b = pres.quiver.arrow_index(next_arrow.text);
                    if (b < 0) {
                        throw ParseError("unknown arrow '" + next_arrow.text + "'", raw.line_no,
                                         next_arrow.col);
                    }
                    if (pres.quiver.arrows[arrows.back()].tgt != pres.quiver.arrows[b].src) {
                        throw ParseError("non-composable path in relation", raw.line_no,
                                         next_arrow.col);
                    }
                    arrows.push_back(b);
                }
                if (arrows.size() != 2) {
                    throw ParseError("inhomogeneous relation: term of degree " +
                                         std::to_string(arrows.size()) + " (expected 2)",
                                     raw.line_no, first_arrow.col);
                }
                Path path{pres.quiver.arrows[arrows[0]].src, arrows};
                rel.add_term(path, coeff);
                first = false;
                if (p.peek().kind == Tok::End) break;
                if (p.peek().kind != Tok::Plus && p.peek().kind != Tok::Minus) {
                    throw ParseError("expected '+' or '-' between terms", raw.line_no,
                                     p.peek().col);
                }
            }
            (void)first;
            if (rel.is_zero()) {
                throw ParseError("relation is zero", raw.line_no, raw.toks[0].col);
            }
            pres.relations.push_back(std::move(rel));
        } else if (head.text == "maxdeg") {
            const Token& num = p.expect(Tok::Number, "degree bound");
            p.expect_end();
            if (maxdeg_seen) throw ParseError("duplicate maxdeg line", raw.line_no, num.col);
            maxdeg_seen = true;
            if (num.text.find('/') != std::string::npos) {
                throw ParseError("maxdeg must be an integer", raw.line_no, num.col);
            }
            pres.maxdeg = std::stoi(num.text);
        } else {
            throw ParseError("unknown directive '" + head.text + "'", raw.line_no, head.col);
        }
    }

    if (pres.quiver.vertices.empty()) {
        throw ParseError("presentation declares no vertices", 1, 1);
    }
    return pres;
}

std::string serialize_presentation(const Presentation& p) {
    std::ostringstream out;
    if (p.field.is_rational()) {
        out << "field Q\n";
    } else {
        out << "field Fp " << p.field.characteristic() << "\n";
    }
    for (const auto& v : p.quiver.vertices) out << "vertex " << v << "\n";
    for (const auto& a : p.quiver.arrows) {
        out << "arrow " << a.name << " : " << p.quiver.vertices[a.src] << " -> "
            << p.quiver.vertices[a.tgt] << "\n";
    }
    for (const auto& [name, value] : p.params) {
        out << "param " << name << " = " << value.str() << "\n";
    }
    for (const auto& rel : p.relations) {
        out << "relation";
        bool first = true;
        for (const auto& [path, coeff] : rel.terms) {
            Scalar c = coeff;
            if (first) {
                out << " ";
                if (c.characteristic() == 0 && c.sign() < 0) {
                    out << "-";
                    c = -c;
                }
            } else if (c.characteristic() == 0 && c.sign() < 0) {
                out << " - ";
                c = -c;
            } else {
                out << " + ";
            }
            if (!c.is_one()) out << c.str() << "*";
            out << path.str(p.quiver);
            first = false;
        }
        out << "\n";
    }
    out << "maxdeg " << p.maxdeg << "\n";
    return out.str();
}

}  // namespace koszul
