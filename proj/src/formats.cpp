#include "configcomplex/formats.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "configcomplex/error.hpp"

namespace configcomplex {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in, bool commas_separate = false) {
    std::vector<Line> out;
    std::string text;
    int number = 0;
    while (std::getline(in, text)) {
        ++number;
        if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
        if (commas_separate) std::replace(text.begin(), text.end(), ',', ' ');
        std::istringstream ss(text);
        Line line{number, {}};
        for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

[[noreturn]] void bad(int line, const std::string& what) {
    throw FormatError("line " + std::to_string(line) + ": " + what);
}

std::int64_t parse_int(const std::string& tok, int line) {
    std::int64_t v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (!tok.empty() && tok.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) bad(line, "expected an integer, got '" + tok + "'");
    return v;
}

void expect_keyword(const Line& l, const std::string& key, std::size_t args) {
    if (l.tokens.front() != key || l.tokens.size() != args + 1)
        bad(l.number, "expected '" + key + "' followed by " + std::to_string(args) + " value(s)");
}

void check_name(const std::string& name) {
    if (name.empty() || std::any_of(name.begin(), name.end(), [](char ch) {
            return ch == '#' || std::isspace(static_cast<unsigned char>(ch));
        }))
        throw FormatError("id '" + name + "' cannot be written: ids must be nonempty without spaces or '#'");
}

FiniteAbelianGroup parse_group(const Line& l) {
    if (l.tokens.front() != "group") bad(l.number, "expected 'group d_1 ... d_r'");
    std::vector<std::int64_t> factors;
    for (std::size_t i = 1; i < l.tokens.size(); ++i) factors.push_back(parse_int(l.tokens[i], l.number));
    if (factors.size() == 1 && factors.front() == 1) factors.clear();
    try {
        return FiniteAbelianGroup(factors);
    } catch (const InvalidInput& e) {
        bad(l.number, std::string("group must be given by invariant factors d_1 | d_2 | ...: ") + e.what());
    }
}

std::pair<FiniteAbelianGroup, std::vector<GroupElement>> read_group_subset(std::istream& in) {
    const auto lines = tokenize(in, true);
    if (lines.empty()) throw FormatError("empty input: expected a 'group' line");
    FiniteAbelianGroup g = parse_group(lines.front());
    std::vector<GroupElement> elems;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (g.is_trivial()) {
            if (l.tokens.size() != 1 || parse_int(l.tokens.front(), l.number) != 0)
                bad(l.number, "the trivial group has only the element 0");
            elems.push_back({});
            continue;
        }
        if (l.tokens.size() != g.rank())
            bad(l.number, "element needs " + std::to_string(g.rank()) + " coordinate(s)");
        std::vector<std::int64_t> coords;
        for (const auto& t : l.tokens) coords.push_back(parse_int(t, l.number));
        elems.push_back(g.reduce(coords));
    }
    return {std::move(g), std::move(elems)};
}

void write_group_subset(std::ostream& out, const FiniteAbelianGroup& g, const std::vector<GroupElement>& elems) {
    out << "group";
    if (g.is_trivial()) out << " 1";
    for (auto d : g.factors()) out << ' ' << d;
    out << '\n';
    for (const auto& e : elems) {
        if (e.empty()) out << '0';
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
}

std::vector<std::string> sorted_names(std::vector<std::string> names) {
    std::sort(names.begin(), names.end(), natural_less);
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

}  // namespace

bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    auto digit = [](char ch) { return ch >= '0' && ch <= '9'; };
    while (i < a.size() && j < b.size()) {
        if (digit(a[i]) && digit(b[j])) {
            std::size_t ie = i, je = j;
            while (ie < a.size() && digit(a[ie])) ++ie;
            while (je < b.size() && digit(b[je])) ++je;
            std::size_t is = i, js = j;
            while (is + 1 < ie && a[is] == '0') ++is;
            while (js + 1 < je && b[js] == '0') ++js;
            const auto la = ie - is, lb = je - js;
            if (la != lb) return la < lb;
            if (int c = a.compare(is, la, b, js, lb); c != 0) return c < 0;
            i = ie;
            j = je;
        } else {
            if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
            ++i;
            ++j;
        }
    }
    if ((a.size() - i) != (b.size() - j)) return a.size() - i < b.size() - j;
    return a < b;
}

ColoredConfiguration read_config(std::istream& in) {
    const auto lines = tokenize(in);
    if (lines.size() < 2) throw FormatError("configuration needs 'k' and 'n' header lines");
    expect_keyword(lines[0], "k", 1);
    expect_keyword(lines[1], "n", 1);
    const std::int64_t k = parse_int(lines[0].tokens[1], lines[0].number);
    const std::int64_t n = parse_int(lines[1].tokens[1], lines[1].number);
    if (k < 1 || k > 1000) bad(lines[0].number, "k must be between 1 and 1000");
    if (n < 1) bad(lines[1].number, "n must be positive");

    struct Record {
        std::string point, line;
        std::int64_t color;
        int number;
    };
    std::vector<Record> records;
    std::vector<std::string> points, lines_;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.tokens.size() != 3) bad(l.number, "expected '<point> <line> <color>'");
        records.push_back({l.tokens[0], l.tokens[1], parse_int(l.tokens[2], l.number), l.number});
        points.push_back(l.tokens[0]);
        lines_.push_back(l.tokens[1]);
    }
    points = sorted_names(std::move(points));
    lines_ = sorted_names(std::move(lines_));
    if (static_cast<std::int64_t>(points.size()) != n)
        throw FormatError("header says n = " + std::to_string(n) + " but " + std::to_string(points.size()) +
                          " points occur");
    std::map<std::string, int> point_index, line_index;
    for (std::size_t i = 0; i < points.size(); ++i) point_index[points[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < lines_.size(); ++i) line_index[lines_[i]] = static_cast<int>(i);
    std::vector<Incidence> incidences;
    for (const auto& r : records) {
        if (r.color < 1 || r.color > k) bad(r.number, "color must be in [1, " + std::to_string(k) + "]");
        incidences.push_back({point_index.at(r.point), line_index.at(r.line), static_cast<int>(r.color)});
    }
    return ColoredConfiguration(static_cast<int>(k), std::move(points), std::move(lines_), std::move(incidences));
}

void write_config(std::ostream& out, const ColoredConfiguration& c) {
    for (const auto& s : c.point_names()) check_name(s);
    for (const auto& s : c.line_names()) check_name(s);
    auto incidences = c.incidences();
    const auto& pn = c.point_names();
    const auto& ln = c.line_names();
    std::sort(incidences.begin(), incidences.end(), [&](const Incidence& a, const Incidence& b) {
        const auto& pa = pn[static_cast<std::size_t>(a.point)];
        const auto& pb = pn[static_cast<std::size_t>(b.point)];
        if (pa != pb) return natural_less(pa, pb);
        if (a.color != b.color) return a.color < b.color;
        return natural_less(ln[static_cast<std::size_t>(a.line)], ln[static_cast<std::size_t>(b.line)]);
    });
    out << "k " << c.k() << '\n' << "n " << c.num_points() << '\n';
    for (const auto& inc : incidences)
        out << pn[static_cast<std::size_t>(inc.point)] << ' ' << ln[static_cast<std::size_t>(inc.line)] << ' '
            << inc.color << '\n';
}

CodeFile read_code(std::istream& in) {
    std::vector<std::pair<std::int64_t, int>> values;
    for (const auto& l : tokenize(in))
        for (const auto& t : l.tokens) values.push_back({parse_int(t, l.number), l.number});
    if (values.empty()) throw FormatError("empty code file");
    const std::int64_t k = values.front().first;
    if (k < 1 || k > 64) bad(values.front().second, "k must be between 1 and 64");
    const auto width = static_cast<std::size_t>(k + 1);
    if (values.size() - 1 != static_cast<std::size_t>(k) * width)
        throw FormatError("code needs " + std::to_string(k) + " rows of " + std::to_string(k + 1) + " integers");
    IntMatrix rows(static_cast<std::size_t>(k), width);
    for (std::size_t r = 0; r < static_cast<std::size_t>(k); ++r)
        for (std::size_t c = 0; c < width; ++c) rows(r, c) = values[1 + r * width + c].first;
    CodeFile out{LinearCode::from_generators(rows), true};
    out.was_canonical = out.code.basis() == rows;
    return out;
}

void write_code(std::ostream& out, const LinearCode& code) {
    out << code.k() << '\n';
    const IntMatrix& b = code.basis();
    for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) out << (c ? " " : "") << b(r, c);
        out << '\n';
    }
}

DifferenceSet read_difference_set(std::istream& in) {
    auto [g, elems] = read_group_subset(in);
    return {std::move(g), std::move(elems)};
}

void write_difference_set(std::ostream& out, const DifferenceSet& d) { write_group_subset(out, d.group, d.elements); }

SidonSet read_sidon(std::istream& in) {
    auto [g, elems] = read_group_subset(in);
    return {std::move(g), std::move(elems)};
}

void write_sidon(std::ostream& out, const SidonSet& b) { write_group_subset(out, b.group, b.elements); }

Semifield read_semifield(std::istream& in) {
    std::vector<std::pair<std::int64_t, int>> values;
    for (const auto& l : tokenize(in))
        for (const auto& t : l.tokens) values.push_back({parse_int(t, l.number), l.number});
    if (values.empty()) throw FormatError("empty semifield file");
    Semifield s;
    s.q = values.front().first;
    if (s.q < 2 || s.q > 256) bad(values.front().second, "q must be between 2 and 256");
    const auto cells = static_cast<std::size_t>(s.q * s.q);
    if (values.size() != 1 + 2 * cells)
        throw FormatError("semifield needs q and two tables of q^2 entries (" + std::to_string(1 + 2 * cells) +
                          " integers), got " + std::to_string(values.size()));
    for (std::size_t i = 0; i < cells; ++i) {
        s.add.push_back(values[1 + i].first);
        s.mul.push_back(values[1 + cells + i].first);
    }
    return s;
}

void write_semifield(std::ostream& out, const Semifield& s) {
    out << s.q << '\n';
    for (const auto* table : {&s.add, &s.mul}) {
        for (std::int64_t a = 0; a < s.q; ++a) {
            for (std::int64_t b = 0; b < s.q; ++b) out << (b ? " " : "") << (*table)[static_cast<std::size_t>(a * s.q + b)];
            out << '\n';
        }
    }
}

void write_complex(std::ostream& out, const QuotientComplex& x) {
    const auto& names = x.complex.vertex_names();
    for (const auto& s : names) check_name(s);
    out << "simplicial-complex\n" << "vertices " << names.size() << '\n';
    for (std::size_t i = 0; i < names.size(); ++i) out << (i ? " " : "") << names[i];
    out << '\n' << "facets " << x.positive.size() + x.negative.size() << '\n';
    for (const auto& s : x.line_names) check_name(s);
    auto emit = [&](char tag, const std::string& id, const Facet& f) {
        out << tag << id;
        for (int v : f) out << ' ' << names[static_cast<std::size_t>(v)];
        out << '\n';
    };
    for (std::size_t l = 0; l < x.positive.size(); ++l) emit('+', x.line_names[l], x.positive_facet(static_cast<int>(l)));
    for (std::size_t p = 0; p < x.negative.size(); ++p) emit('-', names[p], x.negative_facet(static_cast<int>(p)));
}

SimplicialComplex read_complex(std::istream& in) {
    const auto lines = tokenize(in);
    if (lines.empty()) throw FormatError("empty complex file");
    if (lines[0].tokens.front() != "simplicial-complex") {
        std::vector<Facet> facets;
        int n = 0;
        for (const auto& l : lines) {
            Facet f;
            for (const auto& t : l.tokens) {
                const auto v = parse_int(t, l.number);
                if (v < 0 || v > 10000000) bad(l.number, "vertex index out of range");
                f.push_back(static_cast<int>(v));
                n = std::max(n, static_cast<int>(v) + 1);
            }
            facets.push_back(std::move(f));
        }
        std::vector<std::string> names;
        for (int v = 0; v < n; ++v) names.push_back(std::to_string(v));
        return SimplicialComplex(std::move(names), std::move(facets));
    }
    if (lines.size() < 4) throw FormatError("truncated complex file");
    expect_keyword(lines[1], "vertices", 1);
    const auto n = parse_int(lines[1].tokens[1], lines[1].number);
    const Line& name_line = lines[2];
    if (static_cast<std::int64_t>(name_line.tokens.size()) != n)
        bad(name_line.number, "expected " + std::to_string(n) + " vertex names");
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < name_line.tokens.size(); ++i)
        if (!index.emplace(name_line.tokens[i], static_cast<int>(i)).second)
            bad(name_line.number, "duplicate vertex name " + name_line.tokens[i]);
    expect_keyword(lines[3], "facets", 1);
    const auto m = parse_int(lines[3].tokens[1], lines[3].number);
    if (static_cast<std::int64_t>(lines.size()) - 4 != m)
        throw FormatError("header says " + std::to_string(m) + " facets but " + std::to_string(lines.size() - 4) +
                          " are listed");
    std::vector<Facet> facets;
    for (std::size_t i = 4; i < lines.size(); ++i) {
        const Line& l = lines[i];
        const auto& tag = l.tokens.front();
        if (tag.size() < 2 || (tag[0] != '+' && tag[0] != '-')) bad(l.number, "facet must start with +id or -id");
        Facet f;
        for (std::size_t t = 1; t < l.tokens.size(); ++t) {
            auto it = index.find(l.tokens[t]);
            if (it == index.end()) bad(l.number, "unknown vertex " + l.tokens[t]);
            f.push_back(it->second);
        }
        if (f.empty()) bad(l.number, "empty facet");
        facets.push_back(std::move(f));
    }
    return SimplicialComplex(name_line.tokens, std::move(facets));
}

void write_facet_list(std::ostream& out, const SimplicialComplex& x) {
    for (const auto& f : x.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
        out << '\n';
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write " + path);
    out << contents;
    if (!out) throw FormatError("error while writing " + path);
}

}  // namespace configcomplex
