#include "symprod/errors.hpp"
#include "symprod/macdonald.hpp"

#include <cctype>

namespace symprod::mac {

std::string to_string(const Monomial& m)
{
    std::string out;
    auto put = [&](const std::string& f) {
        if (!out.empty())
            out += '.';
        out += f;
    };
    for (unsigned i = 0; i < 32; ++i)
        if (m.x >> i & 1u)
            put("x" + std::to_string(i + 1));
    for (unsigned i = 0; i < 32; ++i)
        if (m.xp >> i & 1u)
            put("x'" + std::to_string(i + 1));
    if (m.q == 1)
        put("y");
    else if (m.q > 1)
        put("y^" + std::to_string(m.q));
    return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    for (const auto& [m, c] : f.terms()) {
        if (!out.empty())
            out += ' ';
        out += c < 0 ? '-' : '+';
        out += symprod::to_string(Integer(abs(c)));
        out += '*';
        out += to_string(m);
    }
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    Polynomial run()
    {
        Polynomial f;
        skip();
        if (done())
            fail("empty polynomial");
        bool first = true;
        while (!done()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            term(f, sign);
            skip();
        }
        return f;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return done() ? '\0' : s_[pos_]; }
    void skip()
    {
        while (!done() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("offset " + std::to_string(pos_), what);
    }

    std::string digits()
    {
        std::size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected digits");
        return std::string(s_.substr(start, pos_ - start));
    }

    unsigned small(const std::string& d, unsigned lo, unsigned hi)
    {
        if (d.size() > 6 || std::stoul(d) < lo || std::stoul(d) > hi)
            fail("number " + d + " out of range");
        return static_cast<unsigned>(std::stoul(d));
    }

    void term(Polynomial& f, int sign)
    {
        Integer coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            std::string d = digits();
            if (peek() == '*') {
                ++pos_;
                if (!parse_integer(d, coeff))
                    fail("bad coefficient");
            } else if (done() || std::isspace(static_cast<unsigned char>(peek())) || peek() == '+' || peek() == '-') {
                if (!parse_integer(d, coeff))
                    fail("bad coefficient");
                f.add(Monomial{}, sign * coeff);
                return;
            } else {
                pos_ = start;
            }
        }
        Monomial m;
        int msign = 1;
        for (;;) {
            Monomial factor;
            if (peek() == 'x') {
                ++pos_;
                bool prime = peek() == '\'';
                if (prime)
                    ++pos_;
                unsigned i = small(digits(), 1, 32);
                (prime ? factor.xp : factor.x) = 1u << (i - 1);
            } else if (peek() == 'y') {
                ++pos_;
                factor.q = 1;
                if (peek() == '^') {
                    ++pos_;
                    factor.q = small(digits(), 0, 1000000);
                }
            } else if (peek() == '1') {
                ++pos_;
            } else {
                fail("expected a variable");
            }
            Monomial next;
            int s = multiply(m, factor, next);
            if (s == 0)
                fail("repeated exterior variable");
            msign *= s;
            m = next;
            if (peek() != '.')
                break;
            ++pos_;
        }
        f.add(m, sign * msign * coeff);
    }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text)
{
    return Parser(text).run();
}

}  // namespace symprod::mac
