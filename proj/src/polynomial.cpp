#include "okbody/polynomial.hpp"

#include "okbody/errors.hpp"

#include <algorithm>
#include <cctype>

namespace okbody {

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
    MultiPoly p(nvars);
    p.set_coefficient(exps(0), c);
    return p;
}

MultiPoly MultiPoly::monomial(int nvars, const Exponent& e, const Rat& c) {
    MultiPoly p(nvars);
    p.set_coefficient(e, c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
    Exponent e = exps(0);
    e[index] = 1;
    return monomial(nvars, e);
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

Rat MultiPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPoly::set_coefficient(const Exponent& e, const Rat& c) {
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = c;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    MultiPoly out(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            const Exponent e = e1 + e2;
            auto it = out.terms_.find(e);
            if (it == out.terms_.end()) {
                out.terms_.emplace(e, c1 * c2);
            } else {
                it->second += c1 * c2;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    terms_.swap(out.terms_);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(*this);
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

Rat MultiPoly::evaluate(const Point& z) const {
    if (static_cast<int>(z.size()) != nvars_) throw ValidationError("dimension mismatch in evaluate");
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= z[i];
        acc += t;
    }
    return acc;
}

MultiPoly operator+(MultiPoly x, const MultiPoly& y) { return x += y; }
MultiPoly operator-(MultiPoly x, const MultiPoly& y) { return x -= y; }
MultiPoly operator*(MultiPoly x, const MultiPoly& y) { return x *= y; }
MultiPoly operator*(MultiPoly x, const Rat& c) { return x *= c; }
MultiPoly operator*(const Rat& c, MultiPoly x) { return x *= c; }

bool operator==(const MultiPoly& x, const MultiPoly& y) {
    return x.nvars() == y.nvars() && x.terms() == y.terms();
}

MultiPoly poly_pow(const MultiPoly& p, int k) {
    MultiPoly acc = MultiPoly::constant(p.nvars(), 1);
    for (int i = 0; i < k; ++i) acc *= p;
    return acc;
}

MultiPoly recenter(const MultiPoly& p, const Point& z) {
    if (static_cast<int>(z.size()) != p.nvars()) throw ValidationError("dimension mismatch in recenter");
    // Binomial expansion of prod_i (z_i + u_i)^{e_i}, term by term.
    MultiPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        MultiPoly term = MultiPoly::constant(p.nvars(), c);
        for (int i = 0; i < p.nvars(); ++i) {
            if (e[i] == 0) continue;
            MultiPoly lin = MultiPoly::variable(p.nvars(), i);
            lin += MultiPoly::constant(p.nvars(), z[i]);
            term *= poly_pow(lin, e[i]);
        }
        out += term;
    }
    return out;
}

namespace {

// Graded lex, largest first; used only inside division.
bool grlex_greater(const Exponent& a, const Exponent& b) {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

Exponent division_leading(const MultiPoly& p) {
    auto it = p.terms().begin();
    Exponent best = it->first;
    for (++it; it != p.terms().end(); ++it)
        if (grlex_greater(it->first, best)) best = it->first;
    return best;
}

bool exponent_divides(const Exponent& a, const Exponent& b) {
    return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}

} // namespace

DivisionResult divide(const MultiPoly& p, const MultiPoly& d) {
    if (d.is_zero()) throw ValidationError("division by the zero polynomial");
    const Exponent lead_d = division_leading(d);
    const Rat lc_d = d.coefficient(lead_d);
    MultiPoly rem = p;
    MultiPoly quot(p.nvars());
    // Leading terms not divisible by lead(d) are final remainder terms and
    // get moved aside; divisible ones are cancelled against d.
    MultiPoly tail(p.nvars());
    while (!rem.is_zero()) {
        const Exponent lead_r = division_leading(rem);
        if (exponent_divides(lead_d, lead_r)) {
            const Exponent q = {lead_r[0] - lead_d[0], lead_r[1] - lead_d[1], lead_r[2] - lead_d[2]};
            const Rat qc = rem.coefficient(lead_r) / lc_d;
            const MultiPoly qterm = MultiPoly::monomial(p.nvars(), q, qc);
            quot += qterm;
            rem -= qterm * d;
        } else {
            tail.set_coefficient(lead_r, rem.coefficient(lead_r));
            rem.set_coefficient(lead_r, 0);
        }
    }
    return {quot, tail};
}

int divisibility_order(const MultiPoly& p, const MultiPoly& d) {
    if (p.is_zero()) throw ValidationError("divisibility order of the zero polynomial");
    if (d.degree() < 1) throw ValidationError("divisor must be non-constant");
    int k = 0;
    MultiPoly cur = p;
    while (true) {
        DivisionResult dr = divide(cur, d);
        if (!dr.remainder.is_zero()) return k;
        ++k;
        cur = dr.quotient;
    }
}

int vanishing_order_at(const MultiPoly& p, const Point& z) {
    if (p.is_zero()) throw ValidationError("vanishing order of the zero polynomial");
    const MultiPoly shifted = recenter(p, z);
    int best = -1;
    for (const auto& [e, c] : shifted.terms()) {
        const int d = total_degree(e);
        if (best < 0 || d < best) best = d;
    }
    return best;
}

namespace {

struct PolyParser {
    const std::string& s;
    size_t i = 0;
    int nvars;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    int var_index(char c) const {
        switch (c) {
            case 'x': return 0;
            case 'y': return 1;
            case 'z': return 2;
            default: return -1;
        }
    }

    long parse_uint() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw ValidationError("expected digits at position " + std::to_string(start) + " in '" + s + "'");
        return std::stol(s.substr(start, i - start));
    }

    Rat parse_number() {
        long num = parse_uint();
        skip_ws();
        if (eat('/')) {
            long den = parse_uint();
            return make_rat(num, den);
        }
        return make_rat(num);
    }

    // factor := number | var ['^' uint]
    // term   := factor ('*'? factor)*
    MultiPoly parse_term() {
        MultiPoly acc = MultiPoly::constant(nvars, 1);
        bool any = false;
        while (true) {
            skip_ws();
            if (i >= s.size()) break;
            char c = s[i];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                acc *= parse_number();
                any = true;
            } else if (var_index(c) >= 0) {
                const int v = var_index(c);
                if (v >= nvars) throw ValidationError(std::string("variable '") + c + "' out of range");
                ++i;
                int e = 1;
                if (eat('^')) e = static_cast<int>(parse_uint());
                Exponent ev = exps(0);
                ev[v] = e;
                acc *= MultiPoly::monomial(nvars, ev);
                any = true;
            } else if (c == '*') {
                ++i;
            } else {
                break;
            }
        }
        if (!any) throw ValidationError("empty term in '" + s + "'");
        return acc;
    }

    MultiPoly parse() {
        MultiPoly acc(nvars);
        bool first = true;
        while (true) {
            skip_ws();
            if (i >= s.size()) break;
            int sign = 1;
            if (eat('+')) {
                sign = 1;
            } else if (eat('-')) {
                sign = -1;
            } else if (!first) {
                throw ValidationError("expected '+' or '-' at position " + std::to_string(i) + " in '" + s + "'");
            }
            MultiPoly t = parse_term();
            if (sign < 0) t *= make_rat(-1);
            acc += t;
            first = false;
        }
        if (first) throw ValidationError("empty polynomial expression");
        return acc;
    }
};

} // namespace

MultiPoly parse_poly(const std::string& text, int nvars) {
    PolyParser p{text, 0, nvars};
    return p.parse();
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    static const char* names[3] = {"x", "y", "z"};
    std::string out;
    // Descending graded-lex reads naturally.
    std::vector<std::pair<Exponent, Rat>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& l, const auto& r) {
        if (total_degree(l.first) != total_degree(r.first))
            return total_degree(l.first) > total_degree(r.first);
        return l.first > r.first;
    });
    for (size_t k = 0; k < ts.size(); ++k) {
        const auto& [e, c] = ts[k];
        const Rat mag = c < 0 ? Rat(-c) : c;
        if (k == 0) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        std::vector<std::string> factors;
        if (mag != 1 || total_degree(e) == 0) factors.push_back(rat_string(mag));
        for (int v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            std::string f = names[v];
            if (e[v] > 1) f += "^" + std::to_string(e[v]);
            factors.push_back(f);
        }
        for (size_t j = 0; j < factors.size(); ++j) {
            if (j > 0) out += "*";
            out += factors[j];
        }
    }
    return out;
}

} // namespace okbody
