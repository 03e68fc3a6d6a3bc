#include "fhkit/io.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "fhkit/errors.hpp"

namespace fh {

using nlohmann::json;

namespace {

bool half_slot(int s) { return s == Q || s == T; }

std::string power_text(int s, int stored) {
    std::string out = slot_name(s);
    if (half_slot(s) && stored % 2 != 0) return out + "^(" + std::to_string(stored) + "/2)";
    int p = half_slot(s) ? stored / 2 : stored;
    if (p != 1) out += "^" + std::to_string(p);
    return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
    return out;
}

json exponent_json(int s, int stored) {
    if (half_slot(s)) {
        if (stored % 2 == 0) return stored / 2;
        return std::to_string(stored) + "/2";
    }
    return stored;
}

int exponent_from_json(int s, const json& v) {
    if (v.is_number_integer()) return half_slot(s) ? 2 * v.get<int>() : v.get<int>();
    if (v.is_string() && half_slot(s)) {
        Rational r(v.get<std::string>());
        r.canonicalize();
        Rational d = r * 2;
        if (d.get_den() != 1) fail(ErrorCode::ParseError, "exponent must be a multiple of 1/2");
        return static_cast<int>(d.get_num().get_si());
    }
    fail(ErrorCode::ParseError, "bad exponent in JSON");
}

}  // namespace

std::string render_rational(const Rational& r) { return r.get_str(); }

std::string render_monomial(const Monomial& m) {
    std::vector<std::string> up, down;
    for (int s = 0; s < kSlots; ++s) {
        if (m.e[s] > 0) up.push_back(power_text(s, m.e[s]));
        if (m.e[s] < 0) down.push_back(power_text(s, -m.e[s]));
    }
    std::string out = up.empty() ? "1" : join(up, "*");
    if (down.size() == 1) out += "/" + down[0];
    if (down.size() > 1) out += "/(" + join(down, "*") + ")";
    return out;
}

std::string render(const LaurentPoly& p, const Weights& w) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<Monomial, Rational>> ts(p.terms().begin(), p.terms().end());
    std::stable_sort(ts.begin(), ts.end(), [&](const auto& x, const auto& y) {
        Rational dx = w.degree(x.first), dy = w.degree(y.first);
        if (dx != dy) return dx > dy;
        return x.first > y.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [m, c] : ts) {
        Rational a = abs(c);
        std::string body;
        if (m.is_one())
            body = render_rational(a);
        else if (a == 1)
            body = render_monomial(m);
        else
            body = render_rational(a) + "*" + render_monomial(m);
        if (first)
            out += (c < 0 ? "-" : "") + body;
        else
            out += (c < 0 ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

std::string render(const FactoredRat& x) {
    if (x.is_zero()) return "0";
    if (x.is_laurent()) return render(x.to_laurent());
    struct F {
        Monomial m;
        int k;
        bool den;
    };
    std::vector<F> fs;
    for (const auto& [m, k] : x.num()) fs.push_back({m, k, false});
    for (const auto& [m, k] : x.den()) fs.push_back({m, k, true});
    // Choose a display orientation per factor that keeps the prefactor small.
    auto score = [](const Monomial& m) {
        int s = 0;
        for (int v : m.e) s += v < 0 ? -v : v;
        return s;
    };
    auto neg_part = [](const Monomial& m) {
        int s = 0;
        for (int v : m.e) s += v < 0 ? -v : 0;
        return s;
    };
    std::size_t best_mask = 0;
    int best = -1, best_flips = 0;
    std::size_t nmask = fs.size() <= 14 ? (std::size_t(1) << fs.size()) : 1;
    for (std::size_t mask = 0; mask < nmask; ++mask) {
        Monomial pre = x.mono();
        int flips = 0;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            if (!(mask >> i & 1)) continue;
            ++flips;
            pre = fs[i].den ? pre / fs[i].m.pow(fs[i].k) : pre * fs[i].m.pow(fs[i].k);
        }
        int sc = score(pre);
        for (std::size_t i = 0; i < fs.size(); ++i) sc += neg_part((mask >> i & 1) ? fs[i].m.inv() : fs[i].m);
        if (best < 0 || sc < best || (sc == best && flips < best_flips)) {
            best = sc;
            best_flips = flips;
            best_mask = mask;
        }
    }
    Rational coeff = x.coeff();
    Monomial pre = x.mono();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (!(best_mask >> i & 1)) continue;
        if (fs[i].k % 2) coeff = -coeff;
        pre = fs[i].den ? pre / fs[i].m.pow(fs[i].k) : pre * fs[i].m.pow(fs[i].k);
        fs[i].m = fs[i].m.inv();
    }
    auto piece = [](const F& f) {
        std::string s = "(1-" + render_monomial(f.m) + ")";
        if (f.k != 1) s += "^" + std::to_string(f.k);
        return s;
    };
    std::sort(fs.begin(), fs.end(), [](const F& a, const F& b) { return a.m > b.m; });
    std::vector<std::string> up, down;
    for (const auto& f : fs) (f.den ? down : up).push_back(piece(f));
    if (!(x.rnum() == LaurentPoly(1))) up.push_back("(" + render(x.rnum()) + ")");
    if (!(x.rden() == LaurentPoly(1))) down.push_back("(" + render(x.rden()) + ")");
    std::string lead;
    Rational a = abs(coeff);
    bool has_mono = !pre.is_one();
    std::string ms = render_monomial(pre);
    if (has_mono && !up.empty() && ms.find('/') != std::string::npos) ms = "(" + ms + ")";
    if (a != 1 && has_mono)
        lead = render_rational(a) + "*" + ms;
    else if (a != 1)
        lead = render_rational(a);
    else if (has_mono)
        lead = ms;
    if (!lead.empty()) up.insert(up.begin(), lead);
    std::string out = (coeff < 0 ? "-" : "") + (up.empty() ? std::string("1") : join(up, "*"));
    if (down.size() == 1) out += "/" + down[0];
    if (down.size() > 1) out += "/(" + join(down, "*") + ")";
    return out;
}

std::string render(const GradedSeries& s) { return render(s.poly(), s.weights()) + " + O(deg > " + std::to_string(s.cutoff()) + ")"; }

json to_json(const Monomial& m) {
    json j = json::object();
    j["q"] = exponent_json(Q, m.e[Q]);
    j["t"] = exponent_json(T, m.e[T]);
    j["a"] = m.e[A];
    for (int s = D; s < kSlots; ++s)
        if (m.e[s] != 0) j[slot_name(s)] = m.e[s];
    return j;
}

Monomial monomial_from_json(const json& j) {
    Monomial m;
    for (const auto& [k, v] : j.items()) {
        if (k == "coeff") continue;
        int s = slot_from_name(k);
        if (s < 0) fail(ErrorCode::ParseError, "unknown symbol in JSON: " + k);
        m.e[s] = exponent_from_json(s, v);
    }
    return m;
}

json to_json(const LaurentPoly& p) {
    json arr = json::array();
    for (const auto& [m, c] : p.terms()) {
        json t = to_json(m);
        t["coeff"] = render_rational(c);
        arr.push_back(t);
    }
    return arr;
}

LaurentPoly laurent_from_json(const json& j) {
    LaurentPoly p;
    for (const auto& t : j) {
        Rational c(t.at("coeff").get<std::string>());
        c.canonicalize();
        p.add_term(monomial_from_json(t), c);
    }
    return p;
}

json to_json(const FactoredRat& x) {
    auto factors = [](const FactoredRat::Factors& f) {
        json arr = json::array();
        for (const auto& [m, k] : f) arr.push_back({{"m", to_json(m)}, {"mult", k}});
        return arr;
    };
    json j;
    j["text"] = render(x);
    j["prefactor"] = {{"coeff", render_rational(x.coeff())}, {"monomial", to_json(x.mono())}};
    j["num_factors"] = factors(x.num());
    j["den_factors"] = factors(x.den());
    j["residual"] = {{"num", to_json(x.rnum())}, {"den", to_json(x.rden())}};
    return j;
}

FactoredRat factored_from_json(const json& j) {
    auto factors = [](const json& arr) {
        FactoredRat::Factors f;
        for (const auto& e : arr) f[monomial_from_json(e.at("m"))] += e.at("mult").get<int>();
        return f;
    };
    Rational c(j.at("prefactor").at("coeff").get<std::string>());
    c.canonicalize();
    return FactoredRat::raw(c, monomial_from_json(j.at("prefactor").at("monomial")), factors(j.at("num_factors")),
                            factors(j.at("den_factors")), laurent_from_json(j.at("residual").at("num")),
                            laurent_from_json(j.at("residual").at("den")))
        .normalize();
}

json to_json(const GradedSeries& s) {
    json j;
    j["weights"] = {render_rational(s.weights().wq), render_rational(s.weights().wt), render_rational(s.weights().wa)};
    j["cutoff"] = s.cutoff();
    j["terms"] = to_json(s.poly());
    j["text"] = render(s);
    return j;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    FactoredRat parse() {
        FactoredRat r = expr();
        skip();
        if (i_ != s_.size()) error("unexpected '" + std::string(1, s_[i_]) + "'");
        return r;
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;

    [[noreturn]] void error(const std::string& msg) {
        fail(ErrorCode::ParseError, "parse error at " + std::to_string(i_) + " in \"" + s_ + "\": " + msg);
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    FactoredRat expr() {
        FactoredRat r = term();
        for (;;) {
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                return r;
        }
    }
    FactoredRat term() {
        FactoredRat r = unary();
        for (;;) {
            if (eat('*'))
                r *= unary();
            else if (eat('/'))
                r = r / unary();
            else
                return r;
        }
    }
    FactoredRat unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    // Exponent as a fraction p/den with den in {1, 2}.
    std::pair<int, int> exponent() {
        skip();
        bool paren = eat('(');
        bool neg = eat('-');
        int p = integer();
        int den = 1;
        if (paren && eat('/')) den = integer();
        if (paren && !eat(')')) error("expected ')'");
        if (den != 1 && den != 2) error("only half-integer exponents are supported");
        return {neg ? -p : p, den};
    }
    int integer() {
        skip();
        std::size_t j = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (j == i_) error("expected integer");
        return std::stoi(s_.substr(j, i_ - j));
    }
    FactoredRat power() {
        FactoredRat base = atom();
        if (!eat('^')) return base;
        auto [p, den] = exponent();
        if (den == 1) return base.pow(p);
        if (!base.is_monomial() || base.coeff() != 1) error("fractional power of a non-monomial");
        Monomial m;
        for (int s = 0; s < kSlots; ++s) {
            int x = base.mono().e[s] * p;
            if (x % 2 != 0) error("fractional power not representable");
            m.e[s] = x / 2;
        }
        return FactoredRat(m);
    }
    FactoredRat atom() {
        skip();
        if (eat('(')) {
            FactoredRat r = expr();
            if (!eat(')')) error("expected ')'");
            return r;
        }
        if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            std::size_t j = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return FactoredRat(Rational(mpz_class(s_.substr(j, i_ - j))));
        }
        std::size_t j = i_;
        while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (j == i_) error("expected a number, symbol or '('");
        std::string name = s_.substr(j, i_ - j);
        if (name == "v") return FactoredRat(Monomial::qta(1, 0, 0));
        int slot = slot_from_name(name);
        if (slot < 0) error("unknown symbol '" + name + "'");
        return FactoredRat(Monomial::var(slot));
    }
};

}  // namespace

FactoredRat parse_expr(const std::string& text) { return Parser(text).parse(); }

Subst parse_subst(const std::string& text) {
    Subst sub;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        start = comma == std::string::npos ? text.size() : comma + 1;
        auto eq = item.find('=');
        if (eq == std::string::npos) fail(ErrorCode::ParseError, "substitution needs '=': " + item);
        std::string lhs = item.substr(0, eq);
        lhs.erase(std::remove_if(lhs.begin(), lhs.end(), ::isspace), lhs.end());
        FactoredRat rhs = parse_expr(item.substr(eq + 1));
        if (!rhs.is_monomial()) fail(ErrorCode::NonMonomialSubstitution, "right-hand side must be a signed monomial: " + item);
        if (lhs == "v") {
            sub.map_unit(Q, rhs.coeff(), rhs.mono());
            continue;
        }
        int slot = slot_from_name(lhs);
        if (slot < 0) fail(ErrorCode::ParseError, "unknown symbol '" + lhs + "'");
        sub.map_var(slot, rhs.coeff(), rhs.mono());
    }
    return sub;
}

}  // namespace fh
