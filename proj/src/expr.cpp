#include "addchow/expr.hpp"

#include <cctype>

namespace addchow {

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;
    const std::optional<std::set<std::string>>& allowed;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError(why + " at offset " + std::to_string(i) + " in '" + s + "'");
    }

    RatFunc expr() {
        RatFunc v = term();
        while (true) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }

    RatFunc term() {
        RatFunc v = factor();
        while (true) {
            if (eat('*')) v *= factor();
            else if (eat('/')) {
                RatFunc d = factor();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else return v;
        }
    }

    RatFunc factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        RatFunc v = atom();
        if (eat('^')) {
            skip();
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i) fail("expected integer exponent");
            int k = std::stoi(s.substr(i, j - i));
            i = j;
            RatFunc r{1};
            for (int t = 0; t < k; ++t) r *= v;
            v = r;
        }
        return v;
    }

    RatFunc atom() {
        skip();
        if (i >= s.size()) fail("unexpected end of expression");
        char c = s[i];
        if (c == '(') {
            ++i;
            RatFunc v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            Rat r(s.substr(i, j - i));
            i = j;
            return RatFunc(r);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            std::string name = s.substr(i, j - i);
            i = j;
            if (allowed && !allowed->count(name)) fail("unknown symbol '" + name + "'");
            return RatFunc::var(name);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

RatFunc parse_ratfunc(const std::string& text,
                      const std::optional<std::set<std::string>>& allowed) {
    Parser p{text, 0, allowed};
    RatFunc v = p.expr();
    p.skip();
    if (p.i != text.size()) p.fail("trailing input");
    return v;
}

ProjValue parse_proj(const std::string& text,
                     const std::optional<std::set<std::string>>& allowed) {
    Parser probe{text, 0, allowed};
    probe.skip();
    size_t start = probe.i;
    if (text.compare(start, 3, "inf") == 0) {
        Parser rest{text, start + 3, allowed};
        rest.skip();
        if (rest.i == text.size()) return ProjValue::infinity();
    }
    return ProjValue(parse_ratfunc(text, allowed));
}

} // namespace addchow
