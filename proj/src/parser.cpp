#include "freedist/parser.hpp"

#include "freedist/errors.hpp"

#include <cctype>
#include <sstream>

namespace freedist {
namespace {

// Value of a subexpression: scalar part plus D-atom part (coefficients per coordinate).
struct Value {
    Polynomial scalar;
    VectorField field;

    bool has_field() const { return !field.is_zero(); }
};

class Parser {
public:
    Parser(std::string_view src, const Chart& chart, int line_offset)
        : src_(src), chart_(chart), line_(1 + line_offset) {}

    Value parse_all()
    {
        Value v = expr();
        skip_ws();
        if (pos_ < src_.size()) fail(std::string("unexpected '") + src_[pos_] + "'");
        return v;
    }

private:
    std::string_view src_;
    Chart chart_;
    std::size_t pos_ = 0;
    int line_;
    int col_ = 1;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }
    [[noreturn]] void fail_at(const std::string& msg, int line, int col) const { throw ParseError(msg, line, col); }

    void advance()
    {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            advance();
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    unsigned long uint_literal()
    {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) fail("expected unsigned integer");
        std::string digits;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            digits += src_[pos_];
            advance();
        }
        if (digits.size() > 9) fail("integer literal too large for an index or exponent");
        return std::stoul(digits);
    }

    Value scalar_value(Polynomial p) const { return Value{std::move(p), VectorField(chart_)}; }

    Value add(Value a, const Value& b, bool subtract) const
    {
        if (subtract) {
            a.scalar -= b.scalar;
            a.field -= b.field;
        } else {
            a.scalar += b.scalar;
            a.field += b.field;
        }
        return a;
    }

    Value multiply(const Value& a, const Value& b) const
    {
        if (a.has_field() && b.has_field()) fail("product of two vector-field atoms");
        Value r = scalar_value(a.scalar * b.scalar);
        if (a.has_field()) r.field = b.scalar * a.field;
        if (b.has_field()) r.field = a.scalar * b.field;
        return r;
    }

    Value power(const Value& base, unsigned long e) const
    {
        if (base.has_field() && e > 1) fail("power of a vector-field atom");
        if (e == 0) return scalar_value(Polynomial(1));
        if (base.has_field()) return base;
        return scalar_value(base.scalar.pow(static_cast<unsigned>(e)));
    }

    Value expr()
    {
        Value v = term();
        for (;;) {
            if (accept('+'))
                v = add(std::move(v), term(), false);
            else if (accept('-'))
                v = add(std::move(v), term(), true);
            else
                return v;
        }
    }

    Value term()
    {
        Value v = factor();
        while (accept('*')) v = multiply(v, factor());
        return v;
    }

    Value factor()
    {
        if (accept('-')) {
            Value v = factor();
            v.scalar = -v.scalar;
            v.field = -v.field;
            return v;
        }
        Value base;
        if (accept('(')) {
            base = expr();
            expect(')');
        } else {
            base = atom();
        }
        if (accept('^')) return power(base, uint_literal());
        return base;
    }

    std::pair<int, int> bracket_indices()
    {
        expect('[');
        auto j = static_cast<int>(uint_literal());
        expect(',');
        auto k = static_cast<int>(uint_literal());
        expect(']');
        return {j, k};
    }

    Coordinate checked(const Coordinate& c) const
    {
        if (!chart_.contains(c)) fail("coordinate " + c.to_string() + " outside chart l=" + std::to_string(chart_.l()));
        return c;
    }

    // y[j,k] or Dy[j,k]; returns the coordinate and the orientation sign.
    std::pair<Coordinate, int> pair_coordinate()
    {
        auto [j, k] = bracket_indices();
        if (j == k) fail("y index pair must be distinct");
        if (j < k) return {checked(Coordinate::y(j, k)), 1};
        return {checked(Coordinate::y(k, j)), -1};
    }

    Value atom()
    {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string text = std::to_string(uint_literal());
            if (pos_ < src_.size() && src_[pos_] == '/') {
                advance();
                unsigned long den = uint_literal();
                if (den == 0) fail("zero denominator");
                text += "/" + std::to_string(den);
            }
            mpq_class q(text);
            q.canonicalize();
            return scalar_value(Polynomial::constant(chart_, ExactScalar(q)));
        }
        if (!std::isalpha(static_cast<unsigned char>(c))) fail(std::string("unexpected '") + c + "'");
        const int word_line = line_;
        const int word_col = col_;
        std::string word;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
            word += src_[pos_];
            advance();
        }
        if (word == "sqrt") {
            if (uint_literal() != 2) fail("only sqrt2 is supported");
            return scalar_value(Polynomial::constant(chart_, ExactScalar::sqrt2()));
        }
        if (word == "x") {
            Coordinate coord = checked(Coordinate::x(static_cast<int>(uint_literal())));
            return scalar_value(Polynomial::variable(chart_, coord));
        }
        if (word == "y") {
            auto [coord, sign] = pair_coordinate();
            return scalar_value(Polynomial::variable(chart_, coord) * ExactScalar(sign));
        }
        if (word == "Dx" || word == "Dy") {
            Coordinate coord = Coordinate::x(1);
            int sign = 1;
            if (word == "Dx")
                coord = checked(Coordinate::x(static_cast<int>(uint_literal())));
            else
                std::tie(coord, sign) = pair_coordinate();
            Value v = scalar_value(Polynomial());
            v.field.set(chart_.index_of(coord), Polynomial::constant(chart_, sign));
            return v;
        }
        fail_at("unknown atom '" + word + "'", word_line, word_col);
    }
};

Value parse_value(std::string_view text, const Chart& chart, int line_offset)
{
    return Parser(text, chart, line_offset).parse_all();
}

}  // namespace

Polynomial parse_expression(std::string_view text, const Chart& chart)
{
    Value v = parse_value(text, chart, 0);
    if (v.has_field()) throw ParseError("vector-field atom in scalar expression", 1, 1);
    return v.scalar;
}

VectorField parse_vector_field(std::string_view text, const Chart& chart)
{
    Value v = parse_value(text, chart, 0);
    if (!v.scalar.is_zero()) throw ParseError("vector field has a scalar term", 1, 1);
    return v.field;
}

ExactScalar parse_scalar(std::string_view text)
{
    Polynomial p = parse_expression(text, Chart(0));
    return p.constant_value();
}

DistributionSpec parse_frame_file(std::string_view text)
{
    DistributionSpec spec;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    std::vector<bool> seen;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("expected '<key>: <value>'", lineno, static_cast<int>(start) + 1);
        std::string key = line.substr(start, colon - start);
        while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
        std::string value = line.substr(colon + 1);
        if (key == "l") {
            if (spec.l != 0) throw ParseError("duplicate l header", lineno, static_cast<int>(start) + 1);
            try {
                std::size_t used = 0;
                spec.l = std::stoi(value, &used);
                if (value.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw ParseError("l must be an integer", lineno, static_cast<int>(colon) + 2);
            }
            if (spec.l < 1) throw ParseError("l must be positive", lineno, static_cast<int>(colon) + 2);
            spec.fields.assign(spec.l, VectorField(Chart(spec.l)));
            seen.assign(spec.l, false);
            continue;
        }
        if (spec.l == 0) throw ParseError("field line before the l header", lineno, static_cast<int>(start) + 1);
        if (key.size() < 2 || key[0] != 'X' || key.find_first_not_of("0123456789", 1) != std::string::npos)
            throw ParseError("expected X<i> key", lineno, static_cast<int>(start) + 1);
        int i = std::stoi(key.substr(1));
        if (i < 1 || i > spec.l) throw ParseError("field index out of range", lineno, static_cast<int>(start) + 1);
        if (seen[i - 1]) throw ParseError("duplicate field " + key, lineno, static_cast<int>(start) + 1);
        seen[i - 1] = true;
        Value v;
        try {
            v = parse_value(value, Chart(spec.l), lineno - 1);
        } catch (const ParseError& e) {
            // Shift columns past the key.
            throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).find(" at line")), e.line(),
                             e.column() + static_cast<int>(colon) + 1);
        }
        if (!v.scalar.is_zero()) throw ParseError("vector field has a scalar term", lineno, static_cast<int>(colon) + 2);
        spec.fields[i - 1] = v.field;
    }
    if (spec.l == 0) throw ParseError("missing l header", lineno == 0 ? 1 : lineno, 1);
    for (int i = 0; i < spec.l; ++i)
        if (!seen[i]) throw ParseError("missing field X" + std::to_string(i + 1), lineno, 1);
    return spec;
}

}  // namespace freedist
