#include "chainwarn/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace chainwarn {

namespace {

std::string strip(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

i64 parse_i64(const std::string& s, size_t& pos) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        throw std::invalid_argument("expected integer at '" + s.substr(start) + "'");
    return std::stoll(s.substr(start, pos - start));
}

std::vector<i64> parse_vector_literal(const std::string& s, size_t& pos) {
    if (s[pos] != '[') throw std::invalid_argument("expected '['");
    ++pos;
    std::vector<i64> out;
    while (pos < s.size() && s[pos] != ']') {
        out.push_back(parse_i64(s, pos));
        if (pos < s.size() && s[pos] == ',') ++pos;
    }
    if (pos >= s.size()) throw std::invalid_argument("unterminated coefficient vector");
    ++pos;  // ']'
    return out;
}

}  // namespace

RingElement parse_element(const RingPtr& ring, const std::string& text) {
    std::string s = strip(text);
    if (s.empty()) throw std::invalid_argument("empty element literal");
    size_t pos = 0;
    if (s[0] == '[') {
        auto v = parse_vector_literal(s, pos);
        if (pos != s.size()) throw std::invalid_argument("trailing text after element literal");
        return ring->element(v);
    }
    i64 n = parse_i64(s, pos);
    if (pos != s.size()) throw std::invalid_argument("trailing text after element literal");
    return ring->from_int(n);
}

MPoly parse_poly(const RingPtr& ring, int nvars, const std::string& text) {
    std::string s = strip(text);
    if (s.empty()) throw std::invalid_argument("empty polynomial");
    MPoly f(ring, nvars);
    size_t pos = 0;
    bool negate = false;
    if (s[pos] == '+' || s[pos] == '-') {
        negate = s[pos] == '-';
        ++pos;
    }
    while (pos < s.size()) {
        RingElement coeff = ring->one();
        MPoly::ExpVec exps(size_t(nvars), 0);
        bool saw_factor = false;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
            if (s[pos] == '*') {
                ++pos;
                continue;
            }
            if (s[pos] == '[') {
                coeff = coeff * ring->element(parse_vector_literal(s, pos));
                saw_factor = true;
            } else if (s[pos] == 't') {
                ++pos;
                i64 var = parse_i64(s, pos);
                if (var < 1 || var > nvars)
                    throw std::invalid_argument("variable t" + std::to_string(var) + " out of range");
                i64 exp = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    exp = parse_i64(s, pos);
                    if (exp < 0) throw std::invalid_argument("negative exponent");
                }
                exps[size_t(var - 1)] += unsigned(exp);
                saw_factor = true;
            } else if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
                coeff = coeff * ring->from_int(parse_i64(s, pos));
                saw_factor = true;
            } else {
                throw std::invalid_argument(std::string("unexpected character '") + s[pos] + "'");
            }
        }
        if (!saw_factor) throw std::invalid_argument("empty term");
        f.add_term(exps, negate ? -coeff : coeff);
        if (pos < s.size()) {
            negate = s[pos] == '-';
            ++pos;
        }
    }
    return f;
}

std::vector<i64> parse_int_list(const std::string& text) {
    std::string s = strip(text);
    std::vector<i64> out;
    size_t pos = 0;
    while (pos < s.size()) {
        out.push_back(parse_i64(s, pos));
        if (pos < s.size()) {
            if (s[pos] != ',') throw std::invalid_argument("expected ','");
            ++pos;
        }
    }
    return out;
}

std::vector<std::pair<int, int>> parse_edge_list(const std::string& text) {
    std::string s = strip(text);
    std::vector<std::pair<int, int>> out;
    size_t pos = 0;
    while (pos < s.size()) {
        i64 u = parse_i64(s, pos);
        if (pos >= s.size() || s[pos] != '-') throw std::invalid_argument("expected '-' in edge");
        ++pos;
        i64 v = parse_i64(s, pos);
        out.emplace_back(int(u), int(v));
        if (pos < s.size()) {
            if (s[pos] != ',') throw std::invalid_argument("expected ',' between edges");
            ++pos;
        }
    }
    return out;
}

std::vector<std::vector<int>> parse_set_family(const std::string& text) {
    std::string s = strip(text);
    std::vector<std::vector<int>> out;
    size_t pos = 0;
    std::vector<int> current;
    while (pos < s.size()) {
        current.push_back(int(parse_i64(s, pos)));
        if (pos < s.size() && s[pos] == ',') {
            ++pos;
        } else if (pos < s.size() && s[pos] == ';') {
            ++pos;
            out.push_back(std::move(current));
            current.clear();
        }
    }
    out.push_back(std::move(current));
    return out;
}

}  // namespace chainwarn
