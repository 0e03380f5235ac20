#include "addchow/complex_io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "addchow/error.hpp"

namespace addchow {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

struct LineSource {
    std::istringstream in;
    int line_no = 0;

    explicit LineSource(const std::string& text) : in(text) {}

    // next non-blank line with comments stripped; nullopt at end of input
    std::optional<std::string> next() {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            size_t hash = raw.find('#');
            if (hash != std::string::npos) raw = raw.substr(0, hash);
            std::string line = trim(raw);
            if (!line.empty()) return line;
        }
        return std::nullopt;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(line_no) + ": " + msg);
    }
};

Rat parse_rat(const std::string& tok, LineSource& src) {
    for (char c : tok)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' ||
              c == '/'))
            src.fail("bad rational entry '" + tok + "'");
    try {
        Rat r(tok);
        if (r.get_den() == 0) src.fail("zero denominator in '" + tok + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        src.fail("bad rational entry '" + tok + "'");
    }
}

int parse_degree(const std::string& tok, LineSource& src) {
    std::string t = trim(tok);
    size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (t.empty() || i == t.size() || t.size() > 7)
        src.fail("bad degree '" + t + "'");
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i])))
            src.fail("bad degree '" + t + "'");
    return std::stoi(t);
}

QMatrix read_matrix(LineSource& src, int rows, int cols) {
    std::vector<std::vector<Rat>> data;
    for (int i = 0; i < rows; ++i) {
        auto line = src.next();
        if (!line) src.fail("unexpected end of input inside a matrix block");
        std::istringstream ls(*line);
        std::vector<Rat> row;
        std::string tok;
        while (ls >> tok) row.push_back(parse_rat(tok, src));
        if (static_cast<int>(row.size()) != cols)
            src.fail("expected " + std::to_string(cols) + " entries in this row, got " +
                     std::to_string(row.size()));
        data.push_back(std::move(row));
    }
    if (rows == 0) return QMatrix(0, cols);
    return QMatrix::from_rows(data);
}

void write_matrix(std::ostringstream& out, const QMatrix& m) {
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m.at(i, j).get_str();
        }
        out << '\n';
    }
}

} // namespace

std::string complex_to_text(const MixedComplex& m) {
    std::ostringstream out;
    out << "complex\n";
    for (const auto& [q, d] : m.space.dims)
        if (d > 0) out << "dim " << q << ' ' << d << '\n';
    for (const auto& [q, ls] : m.space.labels) {
        if (ls.empty()) continue;
        out << "labels " << q;
        for (const auto& l : ls) {
            if (l.find('|') != std::string::npos || l.find('\n') != std::string::npos)
                throw DomainError("complex_to_text: label '" + l +
                                  "' contains a reserved character");
            out << " | " << l;
        }
        out << '\n';
    }
    for (const auto& [q, mat] : m.b) {
        if (mat.is_zero()) continue;
        out << "b " << q << '\n';
        write_matrix(out, mat);
    }
    for (const auto& [q, mat] : m.B) {
        if (mat.is_zero()) continue;
        out << "B " << q << '\n';
        write_matrix(out, mat);
    }
    out << "end\n";
    return out.str();
}

MixedComplex complex_from_text(const std::string& text) {
    LineSource src(text);
    MixedComplex m;
    bool saw_complex = false, saw_end = false, saw_map = false;

    while (auto got = src.next()) {
        const std::string& line = *got;
        if (saw_end) src.fail("content after 'end'");
        std::istringstream ls(line);
        std::string key;
        ls >> key;

        if (!saw_complex) {
            if (key != "complex") src.fail("expected 'complex' as the first line");
            std::string rest;
            if (ls >> rest) src.fail("unexpected token after 'complex'");
            saw_complex = true;
            continue;
        }

        if (key == "dim") {
            if (saw_map) src.fail("'dim' after the first matrix block");
            std::string qs, ds;
            if (!(ls >> qs >> ds)) src.fail("'dim' needs a degree and a dimension");
            std::string extra;
            if (ls >> extra) src.fail("unexpected token after 'dim'");
            int q = parse_degree(qs, src);
            int d = parse_degree(ds, src);
            if (d < 0) src.fail("dimensions must be nonnegative");
            if (m.space.dims.count(q)) src.fail("duplicate 'dim' for degree " + qs);
            if (d > 0) m.space.dims[q] = d;
        } else if (key == "labels") {
            if (saw_map) src.fail("'labels' after the first matrix block");
            std::vector<std::string> fields = split(line, '|');
            std::istringstream hs(fields[0]);
            std::string kw, qs, extra;
            hs >> kw >> qs;
            if (qs.empty() || (hs >> extra)) src.fail("'labels' needs a degree");
            int q = parse_degree(qs, src);
            std::vector<std::string> ls_out;
            for (size_t i = 1; i < fields.size(); ++i) ls_out.push_back(trim(fields[i]));
            int d = m.space.dims.count(q) ? m.space.dims.at(q) : 0;
            if (static_cast<int>(ls_out.size()) != d)
                src.fail("expected " + std::to_string(d) + " label(s) for degree " + qs);
            m.space.labels[q] = std::move(ls_out);
        } else if (key == "b" || key == "B") {
            saw_map = true;
            std::string qs, extra;
            if (!(ls >> qs)) src.fail("'" + key + "' needs a degree");
            if (ls >> extra) src.fail("unexpected token after the degree");
            int q = parse_degree(qs, src);
            int from = m.space.dims.count(q) ? m.space.dims.at(q) : 0;
            int to_deg = key == "b" ? q - 1 : q + 1;
            int to = m.space.dims.count(to_deg) ? m.space.dims.at(to_deg) : 0;
            QMatrix mat = read_matrix(src, to, from);
            auto& store = key == "b" ? m.b : m.B;
            if (store.count(q)) src.fail("duplicate '" + key + "' block for degree " + qs);
            store[q] = std::move(mat);
        } else if (key == "end") {
            std::string extra;
            if (ls >> extra) src.fail("unexpected token after 'end'");
            saw_end = true;
        } else {
            src.fail("unknown keyword '" + key + "'");
        }
    }

    if (!saw_complex) throw ParseError("empty input: expected a 'complex' block");
    if (!saw_end) throw ParseError("missing 'end' line");
    return m;
}

void write_complex_file(const std::string& path, const MixedComplex& m) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << complex_to_text(m);
    if (!out) throw Error("failed writing '" + path + "'");
}

MixedComplex read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return complex_from_text(buf.str());
}

std::string homology_text(const ChainComplex& c, int lo, int hi, bool structured) {
    std::ostringstream out;
    for (int n = hi; n >= lo; --n) {
        HomologyData h = homology(c, n);
        if (structured) {
            out << "homology degree=" << n << " chain_dim=" << h.chain_dim
                << " dim=" << h.dim << '\n';
        } else {
            out << "H_" << n << ": dimension " << h.dim << "  (chains " << h.chain_dim
                << ")\n";
        }
    }
    return out.str();
}

std::string les_text(const LESReport& r, bool structured) {
    std::ostringstream out;
    if (structured) {
        out << "sequence valid_input=" << (r.valid_input ? 1 : 0)
            << " all_exact=" << (r.all_exact ? 1 : 0) << " lo=" << r.lo << " hi=" << r.hi
            << " report_hi=" << r.report_hi << '\n';
        if (!r.valid_input) {
            out << "invalid " << r.validation_detail << '\n';
            return out.str();
        }
        for (const auto& n : r.nodes)
            out << "node name=" << n.kind << '_' << n.degree << " dim=" << n.dim
                << " in=" << n.in_map << " out=" << n.out_map << " in_rank=" << n.in_rank
                << " out_rank=" << n.out_rank
                << " composite_zero=" << (n.composite_zero ? 1 : 0)
                << " exact=" << (n.exact ? 1 : 0) << " verified=" << (n.verified ? 1 : 0)
                << '\n';
        return out.str();
    }
    if (!r.valid_input) {
        out << "input is not a mixed complex: " << r.validation_detail << '\n';
        return out.str();
    }
    out << "periodicity sequence over degrees [" << r.lo << ", " << r.hi << "]"
        << ", reported up to degree " << r.report_hi << '\n';
    for (const auto& n : r.nodes) {
        out << "  " << n.name << " (dim " << n.dim << "): " << n.in_map << " -> . -> "
            << n.out_map << ", ranks " << n.in_rank << "+" << n.out_rank;
        if (!n.verified)
            out << " [above the verified range]";
        else
            out << (n.exact ? " [exact]" : " [NOT EXACT]");
        out << '\n';
    }
    out << (r.all_exact ? "exact at every verified node" : "EXACTNESS FAILS") << '\n';
    return out.str();
}

} // namespace addchow
