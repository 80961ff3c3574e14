#include "fanolines/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fanolines {

namespace {

int total(const Exponents& e, size_t lo, size_t hi) {
    int d = 0;
    for (size_t i = lo; i < hi; ++i) d += e[i];
    return d;
}

// -1 : a < b, 0 : equal, 1 : a > b on the slice [lo,hi)
int grevlex_cmp(const Exponents& a, const Exponents& b, size_t lo, size_t hi) {
    int da = total(a, lo, hi), db = total(b, lo, hi);
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

int lex_cmp(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

}  // namespace

bool MonomialOrder::less(const Exponents& a, const Exponents& b) const {
    switch (kind) {
        case Kind::Lex:
            return lex_cmp(a, b) < 0;
        case Kind::Block: {
            size_t k = static_cast<size_t>(block);
            int c = grevlex_cmp(a, b, 0, std::min(k, a.size()));
            if (c != 0) return c < 0;
            return grevlex_cmp(a, b, std::min(k, a.size()), a.size()) < 0;
        }
        case Kind::Grevlex:
        default:
            return grevlex_cmp(a, b, 0, a.size()) < 0;
    }
}

Ring::Ring(std::vector<std::string> vars, MonomialOrder ord) : vars_(std::move(vars)), order_(ord) {
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].empty()) throw std::invalid_argument("empty variable name");
        for (size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j]) throw std::invalid_argument("duplicate variable: " + vars_[i]);
    }
    if (order_.kind == MonomialOrder::Kind::Block &&
        (order_.block < 0 || order_.block > nvars()))
        throw std::invalid_argument("block size out of range");
}

int Ring::var_index(std::string_view name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr make_ring(std::vector<std::string> vars, MonomialOrder ord) {
    return std::make_shared<Ring>(std::move(vars), ord);
}

RingPtr with_order(const RingPtr& ring, MonomialOrder ord) {
    return make_ring(ring->vars(), ord);
}

Poly::Poly(RingPtr ring) : ring_(std::move(ring)), terms_(MonoGreater{ring_->order()}) {}

Poly Poly::constant(RingPtr ring, Rat value) {
    Poly p(std::move(ring));
    if (value != 0) p.terms_.emplace(Exponents(static_cast<size_t>(p.ring_->nvars()), 0), std::move(value));
    return p;
}

Poly Poly::variable(const RingPtr& ring, int index) {
    if (index < 0 || index >= ring->nvars()) throw std::out_of_range("variable index");
    Exponents e(static_cast<size_t>(ring->nvars()), 0);
    e[static_cast<size_t>(index)] = 1;
    return monomial(ring, std::move(e), Rat(1));
}

Poly Poly::variable(const RingPtr& ring, std::string_view name) {
    int i = ring->var_index(name);
    if (i < 0) throw std::invalid_argument("unknown variable: " + std::string(name));
    return variable(ring, i);
}

Poly Poly::monomial(RingPtr ring, Exponents e, Rat coeff) {
    if (e.size() != static_cast<size_t>(ring->nvars())) throw std::invalid_argument("exponent arity");
    Poly p(std::move(ring));
    if (coeff != 0) p.terms_.emplace(std::move(e), std::move(coeff));
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    return total(terms_.begin()->first, 0, terms_.begin()->first.size()) == 0;
}

const Exponents& Poly::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.begin()->first;
}

const Rat& Poly::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.begin()->second;
}

Rat Poly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat Poly::constant_term() const {
    return coeff(Exponents(static_cast<size_t>(ring_->nvars()), 0));
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total(e, 0, e.size()));
    return d;
}

int Poly::degree_in(int var) const {
    int d = is_zero() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(var)]);
    return d;
}

void Poly::check_compatible(const Poly& o) const {
    if (!ring_ || !o.ring_) throw std::logic_error("operation on uninitialized polynomial");
    if (ring_ != o.ring_ && !ring_->same(*o.ring_))
        throw std::invalid_argument("polynomials from different rings");
}

void Poly::add_term(const Exponents& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(*this);
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r(*this);
    r -= o;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_compatible(o);
    Poly r(ring_);
    Exponents e(static_cast<size_t>(ring_->nvars()));
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator*(const Rat& s) const {
    Poly r(*this);
    r *= s;
    return r;
}

Poly& Poly::operator*=(const Rat& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

Poly Poly::pow(unsigned e) const {
    Poly acc = Poly::constant(ring_, Rat(1));
    Poly b = *this;
    while (e) {
        if (e & 1) acc *= b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

bool Poly::operator==(const Poly& o) const {
    if (!ring_ || !o.ring_) return is_zero() && o.is_zero();
    check_compatible(o);
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || it->second != jt->second) return false;
    return true;
}

Poly Poly::derivative(int var) const {
    Poly r(ring_);
    size_t v = static_cast<size_t>(var);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Exponents d = e;
        d[v] -= 1;
        r.add_term(d, c * e[v]);
    }
    return r;
}

Poly Poly::substitute(const RingPtr& target, const std::vector<Poly>& images) const {
    if (images.size() != static_cast<size_t>(ring_->nvars()))
        throw std::invalid_argument("substitute: one image per variable required");
    // per-variable power cache
    std::vector<std::vector<Poly>> powers(images.size());
    auto power = [&](size_t v, int k) -> const Poly& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(Poly::constant(target, Rat(1)));
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[v]);
        return cache[static_cast<size_t>(k)];
    };
    Poly r(target);
    for (const auto& [e, c] : terms_) {
        Poly t = Poly::constant(target, c);
        for (size_t v = 0; v < e.size(); ++v)
            if (e[v] > 0) t *= power(v, e[v]);
        r += t;
    }
    return r;
}

Rat Poly::evaluate(const std::vector<Rat>& point) const {
    if (point.size() != static_cast<size_t>(ring_->nvars()))
        throw std::invalid_argument("evaluate: one value per variable required");
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (size_t v = 0; v < e.size(); ++v)
            if (e[v] > 0) t *= pow_rat(point[v], static_cast<unsigned>(e[v]));
        acc += t;
    }
    return acc;
}

Poly Poly::converted(MonomialOrder ord) const {
    Poly r(with_order(ring_, ord));
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c);
    return r;
}

Poly Poly::embedded(const RingPtr& target) const {
    // a variable missing from the target is fine as long as it is unused here
    std::vector<int> where(static_cast<size_t>(ring_->nvars()));
    for (int i = 0; i < ring_->nvars(); ++i) {
        where[static_cast<size_t>(i)] = target->var_index(ring_->var_name(i));
        if (where[static_cast<size_t>(i)] < 0 && degree_in(i) > 0)
            throw std::invalid_argument("embedded: target ring lacks variable " + ring_->var_name(i));
    }
    Poly r(target);
    Exponents e(static_cast<size_t>(target->nvars()), 0);
    for (const auto& [src, c] : terms_) {
        std::fill(e.begin(), e.end(), 0);
        for (size_t i = 0; i < src.size(); ++i)
            if (src[i] > 0) e[static_cast<size_t>(where[i])] = src[i];
        r.add_term(e, c);
    }
    return r;
}

Rat Poly::content() const {
    Rat g(0);
    for (const auto& [e, c] : terms_) g = rat_gcd(g, c);
    return g;
}

Poly Poly::primitive_part() const {
    if (is_zero()) return *this;
    Rat c = content();
    Poly r(*this);
    for (auto& [e, v] : r.terms_) v /= c;
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Poly r(*this);
    Rat lc = leading_coeff();
    for (auto& [e, v] : r.terms_) v /= lc;
    return r;
}

// ---------------------------------------------------------------- printing

namespace {

std::string monomial_string(const Ring& ring, const Exponents& e) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += ring.var_name(static_cast<int>(i));
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

std::string terms_string(const Poly& p) {
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rat a = abs(c);
        bool neg = c < 0;
        std::string mono = monomial_string(*p.ring(), e);
        std::string body = mono.empty() ? to_string(a) : (a == 1 ? mono : to_string(a) + "*" + mono);
        if (first) {
            out += neg ? "-" + body : body;
            first = false;
        } else {
            out += neg ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

}  // namespace

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    Rat c = content();
    if (c == 1 || terms_.size() == 1) return terms_string(*this);
    return fanolines::to_string(c) + "*(" + terms_string(primitive_part()) + ")";
}

std::string format_poly(const Poly& p) { return p.to_string(); }

// ----------------------------------------------------------------- parser

namespace {

struct Parser {
    const RingPtr& ring;
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }

    Int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return Int(std::string(s.substr(start, pos - start)), 10);
    }

    unsigned exponent() {
        Int e = integer();
        if (e > 1000000) fail("exponent too large");
        return static_cast<unsigned>(e.get_ui());
    }

    Poly atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = integer();
            Rat r(num);
            if (accept('/')) {
                Int den = integer();
                if (den == 0) fail("zero denominator in rational literal");
                r = Rat(num, den);
                r.canonicalize();
            }
            return Poly::constant(ring, r);
        }
        if (c == '(') {
            ++pos;
            Poly inner = expr();
            skip_ws();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos;
            ++pos;
            while (pos < s.size()) {
                char k = s[pos];
                if (std::isalnum(static_cast<unsigned char>(k)) || k == '_' || k == '\'')
                    ++pos;
                else
                    break;
            }
            std::string name(s.substr(start, pos - start));
            int idx = ring->var_index(name);
            if (idx < 0) {
                pos = start;
                fail("unknown variable: " + name);
            }
            return Poly::variable(ring, idx);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Poly factor() {
        Poly a = atom();
        skip_ws();
        if (accept('^')) return a.pow(exponent());
        if (peek('/')) fail("'/' is only allowed inside rational literals");
        return a;
    }

    Poly term() {
        Poly a = factor();
        while (accept('*')) a *= factor();
        skip_ws();
        if (peek('/')) fail("'/' is only allowed inside rational literals");
        return a;
    }

    Poly expr() {
        bool neg = false;
        skip_ws();
        if (accept('-'))
            neg = true;
        else
            accept('+');
        Poly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return p;
    }
};

}  // namespace

Poly Poly::parse(const RingPtr& ring, std::string_view text) {
    Parser p{ring, text};
    return p.run();
}

Poly parse_poly(const RingPtr& ring, std::string_view text) { return Poly::parse(ring, text); }

// ------------------------------------------------------------ exact division

std::optional<Poly> try_divexact(const Poly& p, const Poly& q) {
    if (q.is_zero()) return std::nullopt;
    Poly r = p;
    Poly quot(p.ring());
    size_t n = static_cast<size_t>(p.ring()->nvars());
    while (!r.is_zero()) {
        const Exponents& er = r.leading_monomial();
        const Exponents& eq = q.leading_monomial();
        Exponents d(n);
        for (size_t i = 0; i < n; ++i) {
            d[i] = er[i] - eq[i];
            if (d[i] < 0) return std::nullopt;
        }
        Poly t = Poly::monomial(p.ring(), d, r.leading_coeff() / q.leading_coeff());
        quot += t;
        r -= t * q;
    }
    return quot;
}

Poly divexact(const Poly& p, const Poly& q) {
    auto r = try_divexact(p, q);
    if (!r) throw std::domain_error("divexact: not divisible");
    return *r;
}

// --------------------------------------------------------------------- gcd

namespace {

// coefficients of p viewed as a univariate polynomial in variable v
std::vector<Poly> coeffs_in(const Poly& p, int v) {
    std::vector<Poly> cs(static_cast<size_t>(p.degree_in(v) + 1), Poly::zero(p.ring()));
    size_t vi = static_cast<size_t>(v);
    for (const auto& [e, c] : p.terms()) {
        Exponents rest = e;
        int k = rest[vi];
        rest[vi] = 0;
        cs[static_cast<size_t>(k)].add_term(rest, c);
    }
    return cs;
}

Poly content_in(const Poly& p, int v) {
    Poly g = Poly::zero(p.ring());
    for (const Poly& c : coeffs_in(p, v)) g = poly_gcd(g, c);
    return g;
}

Poly leading_coeff_in(const Poly& p, int v) {
    auto cs = coeffs_in(p, v);
    return cs.back();
}

Poly times_var_pow(const Poly& p, int v, int k) {
    Exponents e(static_cast<size_t>(p.ring()->nvars()), 0);
    e[static_cast<size_t>(v)] = k;
    return p * Poly::monomial(p.ring(), e, Rat(1));
}

// pseudo-remainder of p by q in variable v
Poly prem(Poly p, const Poly& q, int v) {
    int dq = q.degree_in(v);
    Poly lq = leading_coeff_in(q, v);
    while (!p.is_zero() && p.degree_in(v) >= dq) {
        int dp = p.degree_in(v);
        Poly lp = leading_coeff_in(p, v);
        p = lq * p - times_var_pow(lp, v, dp - dq) * q;
    }
    return p;
}

Poly positive_primitive(const Poly& p) {
    Poly r = p.primitive_part();
    if (!r.is_zero() && r.leading_coeff() < 0) r = -r;
    return r;
}

}  // namespace

Poly poly_gcd(const Poly& p, const Poly& q) {
    if (p.is_zero()) return positive_primitive(q);
    if (q.is_zero()) return positive_primitive(p);
    if (p.is_constant() || q.is_constant()) return Poly::constant(p.ring(), Rat(1));

    int v = -1;
    for (int i = p.ring()->nvars() - 1; i >= 0; --i) {
        if (p.degree_in(i) > 0 || q.degree_in(i) > 0) {
            v = i;
            break;
        }
    }
    if (p.degree_in(v) == 0) return poly_gcd(p, content_in(q, v));
    if (q.degree_in(v) == 0) return poly_gcd(q, content_in(p, v));

    Poly cp = content_in(p, v), cq = content_in(q, v);
    Poly a = divexact(p, cp), b = divexact(q, cq);
    Poly d = poly_gcd(cp, cq);

    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    // primitive remainder sequence
    for (;;) {
        Poly r = prem(a, b, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) return positive_primitive(d);  // coprime in v
        a = b;
        b = positive_primitive(divexact(r, content_in(r, v)));
    }
    return positive_primitive(d * positive_primitive(divexact(b, content_in(b, v))));
}

}  // namespace fanolines
