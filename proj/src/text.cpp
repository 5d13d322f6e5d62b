/*
   Copyright 2026 The drinfeld-heights Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "drinfeld/text.hpp"

#include <cctype>

#include "drinfeld/error.hpp"

namespace drinfeld {

namespace {

/// Recursive-descent parser over RatK.  `var` is the polynomial variable
/// ('t' normally, 'u' when reading a field modulus); 'u' otherwise denotes the
/// generator of an extension field.
class ExprParser {
public:
    ExprParser(FieldPtr field, std::string_view text, char var) : field_(std::move(field)), s_(text), var_(var) {}

    RatK parse() {
        RatK r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("cannot parse \"" + std::string(s_) + "\" at offset " + std::to_string(pos_) + ": " + why);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatK expr() {
        skip();
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        RatK acc = term();
        if (negate) acc = -acc;
        while (true) {
            if (accept('+')) acc = acc + term();
            else if (accept('-')) acc = acc - term();
            else return acc;
        }
    }

    RatK term() {
        RatK acc = factor();
        while (true) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (accept('/')) {
                RatK d = factor();
                if (d.is_zero()) fail("division by zero");
                acc = acc / d;
            } else {
                return acc;
            }
        }
    }

    RatK factor() {
        RatK base = atom();
        if (accept('^')) {
            skip();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            const auto n = std::stoull(std::string(s_.substr(start, pos_ - start)));
            if (n > (1ull << 24)) fail("exponent too large");
            base = base.pow(n);
        }
        return base;
    }

    RatK atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = 0;
            const long long p = field_->characteristic();
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                v = (v * 10 + (s_[pos_] - '0')) % p;
                ++pos_;
            }
            return RatK::from_int(field_, v);
        }
        if (c == var_) {
            ++pos_;
            return RatK::t(field_);
        }
        if (c == 'u') {
            ++pos_;
            if (field_->is_prime_field()) fail("'u' used over a prime field");
            return RatK(Poly::constant(field_, field_->generator()));
        }
        if (c == '(') {
            ++pos_;
            RatK r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    FieldPtr field_;
    std::string_view s_;
    char var_;
    std::size_t pos_ = 0;
};

bool has_plus(const std::string& s) { return s.find('+') != std::string::npos; }

}  // namespace

std::string format_fq(const Field& field, FqElem a) {
    if (field.is_prime_field()) return std::to_string(a);
    if (a == 0) return "0";
    const auto coords = field.coordinates(a);
    std::string out;
    for (std::size_t k = coords.size(); k-- > 0;) {
        const auto c = coords[k];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (k == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c) + "*";
        out += "u";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

std::string format_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    const auto& c = f.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        if (!out.empty()) out += '+';
        const std::string cs = format_fq(f.F(), c[k]);
        if (k == 0) {
            out += cs;
            continue;
        }
        if (c[k] != 1) out += (has_plus(cs) ? "(" + cs + ")" : cs) + "*";
        out += "t";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

std::string format_ratk(const RatK& x) {
    const std::string n = format_poly(x.num());
    if (x.den().is_one()) return n;
    const std::string d = format_poly(x.den());
    return (has_plus(n) ? "(" + n + ")" : n) + "/" + (has_plus(d) ? "(" + d + ")" : d);
}

RatK parse_ratk(const FieldPtr& field, std::string_view text) { return ExprParser(field, text, 't').parse(); }

Poly parse_poly(const FieldPtr& field, std::string_view text) {
    RatK r = parse_ratk(field, text);
    if (!r.is_polynomial()) throw ParseError("\"" + std::string(text) + "\" is not a polynomial");
    return r.num();
}

FqElem parse_fq(const FieldPtr& field, std::string_view text) {
    for (char c : text)
        if (c == 't') throw ParseError("\"" + std::string(text) + "\" is not a field constant");
    Poly p = parse_poly(field, text);
    return p.coeff(0);
}

std::vector<FqElem> parse_modulus(std::uint32_t p, std::string_view text) {
    auto base = Field::prime(p);
    RatK r = ExprParser(base, text, 'u').parse();
    if (!r.is_polynomial()) throw ParseError("field modulus \"" + std::string(text) + "\" is not a polynomial");
    return r.num().coeffs();
}

FieldPtr make_field(std::uint32_t q, const std::string& modulus) {
    const auto [p, e] = prime_power(q);
    if (e == 1) {
        if (!modulus.empty()) {
            auto m = parse_modulus(p, modulus);
            if (m.size() != 2) throw DomainError("modulus degree does not match q = " + std::to_string(q));
        }
        return Field::prime(p);
    }
    if (modulus.empty())
        throw DomainError("q = " + std::to_string(q) + " is not prime; an irreducible modulus in u is required");
    auto m = parse_modulus(p, modulus);
    if (m.size() != e + 1) throw DomainError("modulus degree does not match q = " + std::to_string(q));
    return Field::extension(p, std::move(m));
}

}  // namespace drinfeld
