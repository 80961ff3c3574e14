#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fanolines/rational.hpp"

namespace fanolines {

using Exponents = std::vector<int>;

struct MonomialOrder {
    enum class Kind : std::uint8_t { Grevlex, Lex, Block };
    Kind kind = Kind::Grevlex;
    int block = 0;  // leading block size; Block compares it grevlex first, so it
                    // is an elimination order for the first `block` variables

    bool less(const Exponents& a, const Exponents& b) const;
    bool operator==(const MonomialOrder&) const = default;
};

inline MonomialOrder grevlex_order() { return {}; }
inline MonomialOrder lex_order() { return {MonomialOrder::Kind::Lex, 0}; }
inline MonomialOrder block_order(int k) { return {MonomialOrder::Kind::Block, k}; }

struct MonoGreater {
    MonomialOrder ord;
    bool operator()(const Exponents& a, const Exponents& b) const { return ord.less(b, a); }
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
  public:
    Ring(std::vector<std::string> vars, MonomialOrder ord = {});

    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var_name(int i) const { return vars_[static_cast<size_t>(i)]; }
    int var_index(std::string_view name) const;  // -1 if absent
    const MonomialOrder& order() const { return order_; }

    bool same(const Ring& other) const { return vars_ == other.vars_ && order_ == other.order_; }

  private:
    std::vector<std::string> vars_;
    MonomialOrder order_;
};

RingPtr make_ring(std::vector<std::string> vars, MonomialOrder ord = {});
RingPtr with_order(const RingPtr& ring, MonomialOrder ord);

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& msg, size_t p) : std::runtime_error(msg), pos(p) {}
};

class Poly {
  public:
    using TermMap = std::map<Exponents, Rat, MonoGreater>;

    Poly() = default;
    explicit Poly(RingPtr ring);

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, Rat value);
    static Poly variable(const RingPtr& ring, int index);
    static Poly variable(const RingPtr& ring, std::string_view name);
    static Poly monomial(RingPtr ring, Exponents e, Rat coeff);

    // grammar: identifiers [A-Za-z][A-Za-z0-9_']*, operators + - * ^,
    // nonnegative integer exponents, ratio literals like 35/2, parentheses.
    static Poly parse(const RingPtr& ring, std::string_view text);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    size_t term_count() const { return terms_.size(); }

    // descending monomial order; begin() is the leading term
    const TermMap& terms() const { return terms_; }

    const Exponents& leading_monomial() const;
    const Rat& leading_coeff() const;
    Rat coeff(const Exponents& e) const;
    Rat constant_term() const;

    int total_degree() const;  // -1 for zero
    int degree_in(int var) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly operator*(const Rat& s) const;
    Poly& operator*=(const Rat& s);
    Poly pow(unsigned e) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    void add_term(const Exponents& e, const Rat& c);

    Poly derivative(int var) const;

    // ring homomorphism: variable i of this ring maps to images[i] in `target`
    Poly substitute(const RingPtr& target, const std::vector<Poly>& images) const;
    Rat evaluate(const std::vector<Rat>& point) const;

    // same variables, different monomial order
    Poly converted(MonomialOrder ord) const;
    // variables of this ring must all appear in `target` (matched by name)
    Poly embedded(const RingPtr& target) const;

    // content > 0 with integer-coprime primitive part; sign stays in the part
    Rat content() const;
    Poly primitive_part() const;
    Poly monic() const;

    std::string to_string() const;

  private:
    RingPtr ring_;
    TermMap terms_;
    void check_compatible(const Poly& o) const;
};

std::string format_poly(const Poly& p);
Poly parse_poly(const RingPtr& ring, std::string_view text);

// exact division; throws std::domain_error when q does not divide p
Poly divexact(const Poly& p, const Poly& q);
std::optional<Poly> try_divexact(const Poly& p, const Poly& q);

// content-normalized gcd: primitive, integer coefficients, positive leading coeff
Poly poly_gcd(const Poly& p, const Poly& q);

}  // namespace fanolines
