#include "conext/io.hpp"

#include <fstream>
#include <sstream>

namespace conext::io {

namespace {

struct Line {
    std::size_t number = 0;
    std::string keyword;
    std::vector<std::string> args;
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> out;
    std::string text;
    std::size_t number = 0;
    while (std::getline(in, text)) {
        ++number;
        std::istringstream ss(text);
        Line line{number, {}, {}};
        if (!(ss >> line.keyword) || line.keyword[0] == '#') continue;
        std::string tok;
        while (ss >> tok) line.args.push_back(tok);
        out.push_back(std::move(line));
    }
    return out;
}

Rational parse_rational(const Line& line, const std::string& tok) {
    try {
        return Rational::parse(tok);
    } catch (const ParseError& e) {
        throw FormatError(line.number, e.what());
    }
}

std::size_t parse_size(const Line& line, const std::string& tok) {
    const Rational r = parse_rational(line, tok);
    if (!r.is_integer() || r.sign() <= 0) throw FormatError(line.number, "expected a positive integer, got '" + tok + "'");
    return r.num().get_ui();
}

RationalVector parse_row(const Line& line, std::size_t expected) {
    if (line.args.size() != expected) {
        throw FormatError(line.number, "'" + line.keyword + "' expects " + std::to_string(expected) + " entries, got " +
                                           std::to_string(line.args.size()));
    }
    RationalVector v;
    for (const auto& tok : line.args) v.push_back(parse_rational(line, tok));
    return v;
}

void require_header(const std::vector<Line>& lines, const std::string& keyword) {
    if (lines.empty()) throw FormatError(0, "empty file");
    if (lines[0].keyword != keyword) {
        throw FormatError(lines[0].number, "expected '" + keyword + "', got '" + lines[0].keyword + "'");
    }
    if (lines[0].args.size() != 1) throw FormatError(lines[0].number, "'" + keyword + "' takes exactly one name");
}

std::size_t parse_dim(const std::vector<Line>& lines) {
    if (lines.size() < 2 || lines[1].keyword != "dim") {
        throw FormatError(lines.size() < 2 ? lines[0].number : lines[1].number, "expected 'dim' after the header");
    }
    if (lines[1].args.size() != 1) throw FormatError(lines[1].number, "'dim' takes one value");
    return parse_size(lines[1], lines[1].args[0]);
}

ConeFile cone_from_lines(const std::vector<Line>& lines) {
    require_header(lines, "cone");
    ConeFile f;
    f.name = lines[0].args[0];
    f.dim = parse_dim(lines);
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.keyword == "ray") {
            f.generators.push_back(parse_row(l, f.dim));
        } else if (l.keyword == "phi") {
            if (f.phi) throw FormatError(l.number, "duplicate 'phi'");
            f.phi = parse_row(l, f.dim);
        } else {
            throw FormatError(l.number, "unknown keyword '" + l.keyword + "'");
        }
    }
    if (f.generators.empty()) throw FormatError(lines.back().number, "no 'ray' lines");
    return f;
}

PolytopeFile polytope_from_lines(const std::vector<Line>& lines) {
    require_header(lines, "polytope");
    PolytopeFile f;
    f.name = lines[0].args[0];
    f.dim = parse_dim(lines);
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.keyword != "vertex") throw FormatError(l.number, "unknown keyword '" + l.keyword + "'");
        f.vertices.push_back(parse_row(l, f.dim));
    }
    if (f.vertices.empty()) throw FormatError(lines.back().number, "no 'vertex' lines");
    return f;
}

TensorFile tensor_from_lines(const std::vector<Line>& lines) {
    require_header(lines, "tensor");
    TensorFile f;
    f.name = lines[0].args[0];
    if (lines.size() < 2 || lines[1].keyword != "shape" || lines[1].args.empty()) {
        throw FormatError(lines.size() < 2 ? lines[0].number : lines[1].number, "expected 'shape' after the header");
    }
    for (const auto& tok : lines[1].args) f.shape.push_back(parse_size(lines[1], tok));
    std::size_t rows = 1;
    for (std::size_t s = 0; s + 1 < f.shape.size(); ++s) rows *= f.shape[s];
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.keyword != "row") throw FormatError(l.number, "unknown keyword '" + l.keyword + "'");
        const RationalVector r = parse_row(l, f.shape.back());
        f.entries.insert(f.entries.end(), r.begin(), r.end());
    }
    if (f.entries.size() != rows * f.shape.back()) {
        throw FormatError(lines.back().number, "expected " + std::to_string(rows) + " rows");
    }
    return f;
}

std::vector<Line> open_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError(0, "cannot open " + path);
    return tokenize(in);
}

void write_row(std::ostringstream& out, const std::string& keyword, const RationalVector& v) {
    out << keyword;
    for (const auto& x : v) out << ' ' << x.str();
    out << '\n';
}

}  // namespace

Tensor TensorFile::tensor() const {
    std::vector<Slot> slots;
    for (std::size_t d : shape) slots.push_back({d, Variance::primal});
    return Tensor(slots, entries);
}

ConeFile parse_cone(std::istream& in) { return cone_from_lines(tokenize(in)); }
PolytopeFile parse_polytope(std::istream& in) { return polytope_from_lines(tokenize(in)); }
TensorFile parse_tensor(std::istream& in) { return tensor_from_lines(tokenize(in)); }

GeometryFile parse_geometry(std::istream& in) {
    const auto lines = tokenize(in);
    if (!lines.empty() && lines[0].keyword == "polytope") return polytope_from_lines(lines);
    return cone_from_lines(lines);
}

ConeFile read_cone(const std::string& path) { return cone_from_lines(open_lines(path)); }
PolytopeFile read_polytope(const std::string& path) { return polytope_from_lines(open_lines(path)); }
TensorFile read_tensor(const std::string& path) { return tensor_from_lines(open_lines(path)); }

GeometryFile read_geometry(const std::string& path) {
    const auto lines = open_lines(path);
    if (!lines.empty() && lines[0].keyword == "polytope") return polytope_from_lines(lines);
    return cone_from_lines(lines);
}

std::string serialize(const ConeFile& f) {
    std::ostringstream out;
    out << "cone " << f.name << "\ndim " << f.dim << '\n';
    for (const auto& g : f.generators) write_row(out, "ray", g);
    if (f.phi) write_row(out, "phi", *f.phi);
    return out.str();
}

std::string serialize(const PolytopeFile& f) {
    std::ostringstream out;
    out << "polytope " << f.name << "\ndim " << f.dim << '\n';
    for (const auto& v : f.vertices) write_row(out, "vertex", v);
    return out.str();
}

std::string serialize(const TensorFile& f) {
    std::ostringstream out;
    out << "tensor " << f.name << "\nshape";
    for (std::size_t d : f.shape) out << ' ' << d;
    out << '\n';
    const std::size_t width = f.shape.back();
    for (std::size_t i = 0; i < f.entries.size(); i += width) {
        write_row(out, "row", RationalVector(f.entries.begin() + static_cast<long>(i),
                                             f.entries.begin() + static_cast<long>(i + width)));
    }
    return out.str();
}

ConeFile canonicalize(const ConeFile& f) { return to_file(make_cone(f.generators), f.name, f.phi); }

ConeFile to_file(const Cone& c, const std::string& name, std::optional<RationalVector> phi) {
    return {name, c.dim(), c.rays(), std::move(phi)};
}

TensorFile to_file(const Tensor& t, const std::string& name) {
    TensorFile f{name, {}, RationalVector(t.entries().begin(), t.entries().end())};
    for (const auto& s : t.slots()) f.shape.push_back(s.dim);
    if (f.shape.empty()) f.shape.push_back(1);
    return f;
}

RationalVector parse_vector(const std::string& text) {
    std::string spaced = text;
    for (auto& ch : spaced) {
        if (ch == ',') ch = ' ';
    }
    std::istringstream ss(spaced);
    RationalVector out;
    std::string tok;
    while (ss >> tok) out.push_back(Rational::parse(tok));
    if (out.empty()) throw ParseError("empty vector");
    return out;
}

}  // namespace conext::io
