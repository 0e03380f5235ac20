#include "addchow/cycle_io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <variant>
#include <vector>

#include "addchow/error.hpp"
#include "addchow/expr.hpp"

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

bool valid_symbol(const std::string& s) {
    if (s.empty() || s[0] == '_') return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

void collect_vars(const RatFunc& f, std::set<std::string>& out) {
    for (const auto& v : f.num().vars()) out.insert(v);
    for (const auto& v : f.den().vars()) out.insert(v);
}

void collect_vars(const ProjValue& v, std::set<std::string>& out) {
    if (!v.is_infinite()) collect_vars(v.value(), out);
}

std::set<std::string> cycle_symbols(const FormalCycle& z) {
    std::set<std::string> syms;
    for (const auto& [t, data] : z.terms()) {
        (void)data;
        if (term_is_point(t)) {
            const auto& p = std::get<PointTerm>(t);
            for (const auto& x : p.a) collect_vars(x, syms);
            for (const auto& v : p.box) collect_vars(v, syms);
        } else {
            const auto& c = std::get<CurveTerm>(t);
            for (const auto& x : c.a) collect_vars(x, syms);
            for (const auto& slot : c.box) {
                if (slot.index() == 0) {
                    collect_vars(std::get<ProjValue>(slot), syms);
                } else {
                    const auto& m = std::get<Mobius>(slot);
                    collect_vars(m.a(), syms);
                    collect_vars(m.b(), syms);
                    collect_vars(m.c(), syms);
                    collect_vars(m.d(), syms);
                }
            }
        }
    }
    return syms;
}

struct Cursor {
    int line_no = 0;
    std::string line;
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(line_no) + ": " + msg);
    }
};

Int parse_int(const std::string& s, const Cursor& at) {
    std::string t = trim(s);
    if (t.empty()) at.fail("expected an integer coefficient");
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) at.fail("expected an integer coefficient, got '" + t + "'");
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i])))
            at.fail("expected an integer coefficient, got '" + t + "'");
    return Int(t);
}

int parse_small(const std::string& s, const Cursor& at, const std::string& what) {
    std::string t = trim(s);
    for (char c : t)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            at.fail("expected a nonnegative integer for " + what + ", got '" + t + "'");
    if (t.empty() || t.size() > 6)
        at.fail("expected a nonnegative integer for " + what + ", got '" + t + "'");
    return std::stoi(t);
}

} // namespace

std::string cycle_to_text(const FormalCycle& z, const std::string& param) {
    std::set<std::string> syms = cycle_symbols(z);
    if (!valid_symbol(param))
        throw DomainError("cycle_to_text: invalid parameter name '" + param + "'");
    if (syms.count(param))
        throw DomainError("cycle_to_text: parameter name '" + param +
                          "' collides with a symbol of the cycle");
    for (const auto& s : syms)
        if (!valid_symbol(s))
            throw DomainError("cycle_to_text: symbol '" + s +
                              "' cannot be written (reserved name)");

    std::ostringstream out;
    out << "cycle\n";
    out << "ring";
    for (int m : z.space().ring.m) out << ' ' << m;
    out << "\n";
    out << "slots " << z.space().n << "\n";
    if (!syms.empty()) {
        out << "symbols";
        for (const auto& s : syms) out << ' ' << s;
        out << "\n";
    }
    if (param != "s") out << "param " << param << "\n";

    for (const auto& [t, data] : z.terms()) {
        out << "term " << data.coeff.get_str() << " | ";
        bool first = true;
        auto put_a = [&](const std::vector<RatFunc>& a) {
            for (const auto& x : a) {
                if (!first) out << ", ";
                first = false;
                out << x.str();
            }
        };
        if (term_is_point(t)) {
            const auto& p = std::get<PointTerm>(t);
            put_a(p.a);
            out << " |";
            first = true;
            for (const auto& v : p.box) {
                out << (first ? " " : " ; ");
                first = false;
                out << v.str();
            }
        } else {
            const auto& c = std::get<CurveTerm>(t);
            put_a(c.a);
            out << " |";
            first = true;
            for (const auto& slot : c.box) {
                out << (first ? " " : " ; ");
                first = false;
                if (slot.index() == 0)
                    out << std::get<ProjValue>(slot).str();
                else
                    out << std::get<Mobius>(slot).as_ratfunc(param).str();
            }
        }
        if (data.decomposable) out << " | decomposable";
        out << "\n";
    }
    out << "end\n";
    return out.str();
}

FormalCycle cycle_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    Cursor at;

    std::optional<std::vector<int>> ring_m;
    std::optional<int> slots;
    std::set<std::string> symbols;
    std::string param = "s";
    bool saw_cycle = false, saw_end = false, saw_term = false;
    std::optional<FormalCycle> z;

    auto ensure_space = [&]() -> FormalCycle& {
        if (!z) {
            if (!ring_m) at.fail("'term' before 'ring'");
            if (!slots) at.fail("'term' before 'slots'");
            ModulusRing ring;
            ring.e = static_cast<int>(ring_m->size());
            ring.m = *ring_m;
            z.emplace(SlotSpace{ring, *slots});
        }
        return *z;
    };

    while (std::getline(in, raw)) {
        ++at.line_no;
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        at.line = line;
        if (line.empty()) continue;
        if (saw_end) at.fail("content after 'end'");

        std::istringstream ls(line);
        std::string key;
        ls >> key;

        if (!saw_cycle) {
            if (key != "cycle") at.fail("expected 'cycle' as the first line");
            std::string rest;
            if (ls >> rest) at.fail("unexpected token after 'cycle'");
            saw_cycle = true;
            continue;
        }

        if (key == "ring") {
            if (saw_term) at.fail("'ring' after the first term");
            if (ring_m) at.fail("duplicate 'ring' line");
            std::vector<int> ms;
            std::string tok;
            while (ls >> tok) ms.push_back(parse_small(tok, at, "a truncation exponent"));
            if (ms.empty() || ms.size() > 2)
                at.fail("'ring' takes one or two truncation exponents");
            for (int m : ms)
                if (m < 2) at.fail("truncation exponents must be at least 2");
            ring_m = ms;
        } else if (key == "slots") {
            if (saw_term) at.fail("'slots' after the first term");
            if (slots) at.fail("duplicate 'slots' line");
            std::string tok;
            if (!(ls >> tok)) at.fail("'slots' needs a count");
            slots = parse_small(tok, at, "the slot count");
            std::string extra;
            if (ls >> extra) at.fail("unexpected token after the slot count");
        } else if (key == "symbols") {
            if (saw_term) at.fail("'symbols' after the first term");
            std::string tok;
            while (ls >> tok) {
                if (!valid_symbol(tok))
                    at.fail("invalid symbol name '" + tok +
                            "' (identifiers may not start with an underscore)");
                symbols.insert(tok);
            }
        } else if (key == "param") {
            if (saw_term) at.fail("'param' after the first term");
            std::string tok;
            if (!(ls >> tok)) at.fail("'param' needs a name");
            if (!valid_symbol(tok)) at.fail("invalid parameter name '" + tok + "'");
            std::string extra;
            if (ls >> extra) at.fail("unexpected token after the parameter name");
            param = tok;
        } else if (key == "term") {
            saw_term = true;
            FormalCycle& cyc = ensure_space();
            if (symbols.count(param))
                at.fail("parameter '" + param + "' also declared as a symbol");
            std::set<std::string> allowed = symbols;
            allowed.insert(param);

            std::string body = trim(line.substr(4));
            std::vector<std::string> fields = split(body, '|');
            if (fields.size() < 3 || fields.size() > 4)
                at.fail("a term needs 'term <coeff> | <affine coords> | <box coords>'");
            Int coeff = parse_int(fields[0], at);

            std::vector<RatFunc> a;
            for (const auto& piece : split(fields[1], ',')) {
                std::string expr = trim(piece);
                if (expr.empty()) at.fail("empty affine coordinate");
                try {
                    a.push_back(parse_ratfunc(expr, allowed));
                } catch (const Error& e) {
                    at.fail(std::string("affine coordinate '") + expr + "': " + e.what());
                }
            }
            if (static_cast<int>(a.size()) != cyc.space().ring.e)
                at.fail("expected " + std::to_string(cyc.space().ring.e) +
                        " affine coordinate(s), got " + std::to_string(a.size()));

            std::vector<std::string> box_exprs;
            if (!trim(fields[2]).empty())
                for (const auto& piece : split(fields[2], ';')) box_exprs.push_back(trim(piece));
            if (static_cast<int>(box_exprs.size()) != cyc.space().n)
                at.fail("expected " + std::to_string(cyc.space().n) +
                        " box coordinate(s), got " + std::to_string(box_exprs.size()));

            bool decomposable = false;
            if (fields.size() == 4) {
                std::string flag = trim(fields[3]);
                if (flag != "decomposable") at.fail("unknown term flag '" + flag + "'");
                decomposable = true;
            }

            bool parametrized = false;
            std::vector<ProjValue> proj_slots;
            std::vector<CurveSlot> curve_slots;
            for (const auto& expr : box_exprs) {
                if (expr.empty()) at.fail("empty box coordinate");
                ProjValue v;
                try {
                    v = parse_proj(expr, allowed);
                } catch (const Error& e) {
                    at.fail(std::string("box coordinate '") + expr + "': " + e.what());
                }
                if (!v.is_infinite() && v.value().depends_on(param)) {
                    parametrized = true;
                    Mobius m = Mobius::identity();
                    try {
                        m = Mobius::from_ratfunc(v.value(), param);
                    } catch (const Error& e) {
                        at.fail(std::string("box coordinate '") + expr + "': " + e.what());
                    }
                    curve_slots.emplace_back(m);
                } else {
                    curve_slots.emplace_back(v);
                }
                proj_slots.push_back(v);
            }

            for (const auto& x : a)
                if (x.depends_on(param))
                    at.fail("affine coordinates must be constant along the parameter");

            try {
                if (parametrized) {
                    cyc.add(CurveTerm{std::move(a), std::move(curve_slots)}, coeff,
                            decomposable);
                } else {
                    cyc.add(PointTerm{std::move(a), std::move(proj_slots)}, coeff,
                            decomposable);
                }
            } catch (const Error& e) {
                at.fail(std::string("rejected term: ") + e.what());
            }
        } else if (key == "end") {
            std::string extra;
            if (ls >> extra) at.fail("unexpected token after 'end'");
            saw_end = true;
        } else {
            at.fail("unknown keyword '" + key + "'");
        }
    }

    if (!saw_cycle) throw ParseError("empty input: expected a 'cycle' block");
    if (!saw_end) throw ParseError("missing 'end' line");
    if (!ring_m) throw ParseError("missing 'ring' line");
    if (!slots) throw ParseError("missing 'slots' line");
    return ensure_space();
}

void write_cycle_file(const std::string& path, const FormalCycle& z,
                      const std::string& param) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << cycle_to_text(z, param);
    if (!out) throw Error("failed writing '" + path + "'");
}

FormalCycle read_cycle_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return cycle_from_text(buf.str());
}

} // namespace addchow
