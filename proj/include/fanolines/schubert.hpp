#pragma once

#include <map>
#include <string>
#include <vector>

#include "fanolines/poly.hpp"

namespace fanolines {

// weakly decreasing nonnegative parts; trailing zeros are trimmed on construction
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p);
    explicit Partition(std::vector<int> p);

    int weight() const;
    int length() const { return static_cast<int>(parts.size()); }
    int part(int i) const {
        return i < static_cast<int>(parts.size()) ? parts[static_cast<size_t>(i)] : 0;
    }
    bool operator==(const Partition&) const = default;
    bool contains(const Partition& mu) const;  // Young-diagram inclusion
};

struct Box {
    int rows = 2, cols = 4;  // G(2,6)

    bool fits(const Partition& p) const;
    Partition full() const;
    Partition complement(const Partition& p) const;  // 180-degree rotation
    bool operator==(const Box&) const = default;
};

// ascending codimension, then lexicographically descending parts: s[2] before s[1,1]
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const;
};

class SchubertClass {
  public:
    using TermMap = std::map<Partition, Rat, PartitionOrder>;

    explicit SchubertClass(Box box = {}) : box_(box) {}
    static SchubertClass sigma(const Partition& p, Box box = {});
    static SchubertClass constant(const Rat& c, Box box = {});

    const Box& box() const { return box_; }
    const TermMap& terms() const { return terms_; }
    Rat coeff(const Partition& p) const;
    bool is_zero() const { return terms_.empty(); }
    // codimension when homogeneous, -1 for zero or mixed
    int codimension() const;

    SchubertClass operator-() const;
    SchubertClass operator+(const SchubertClass& o) const;
    SchubertClass operator-(const SchubertClass& o) const;
    SchubertClass operator*(const SchubertClass& o) const;  // Littlewood-Richardson
    SchubertClass operator*(const Rat& s) const;
    SchubertClass& operator+=(const SchubertClass& o) { return *this = *this + o; }
    SchubertClass& operator-=(const SchubertClass& o) { return *this = *this - o; }
    SchubertClass& operator*=(const SchubertClass& o) { return *this = *this * o; }
    SchubertClass pow(unsigned e) const;
    bool operator==(const SchubertClass& o) const;

    void add_term(const Partition& p, const Rat& c);

    std::string to_string() const;  // "18*s[3,1] + 27*s[2,2]", full box as "pt"

  private:
    Box box_;
    TermMap terms_;
};

// Littlewood-Richardson expansion of sigma_lam * sigma_mu inside the box;
// memoized, thread-safe
const std::map<Partition, long, PartitionOrder>& lr_expand(const Partition& lam,
                                                           const Partition& mu, const Box& box);

// degree of the zero-cycle part: coefficient of the full-box class
Rat integrate_G(const SchubertClass& a);

// polynomials in e1 = c1 and e2 = c2 of the dual tautological rank-2 bundle,
// graded with weights 1 and 2
class TautExpr {
  public:
    TautExpr();
    explicit TautExpr(Poly p);

    static TautExpr e1();
    static TautExpr e2();
    static TautExpr constant(const Rat& c);
    static TautExpr parse(std::string_view text);
    static RingPtr ring();

    const Poly& poly() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }
    TautExpr graded_piece(int d) const;
    int top_weight() const;

    TautExpr operator-() const;
    TautExpr operator+(const TautExpr& o) const { return TautExpr(p_ + o.p_); }
    TautExpr operator-(const TautExpr& o) const { return TautExpr(p_ - o.p_); }
    TautExpr operator*(const TautExpr& o) const { return TautExpr(p_ * o.p_); }
    TautExpr operator*(const Rat& s) const { return TautExpr(p_ * s); }
    TautExpr pow(unsigned e) const { return TautExpr(p_.pow(e)); }
    bool operator==(const TautExpr& o) const { return p_ == o.p_; }

    std::string to_string() const { return p_.to_string(); }

  private:
    Poly p_;
};

// total Chern class of Sym^d of the rank-2 bundle with root sum e1, root product e2
TautExpr sym_power_chern(int d);

// e1 -> sigma_1, e2 -> sigma_{1,1}, expanded in the Schubert basis
SchubertClass taut_to_schubert(const TautExpr& t, Box box = {});

// Chern classes of the rank-4 quotient bundle via Whitney: c(U) c(Q) = 1
TautExpr sigma_taut(int i);
TautExpr whitney_sigma2();

// c4(Sym^3 of the dual tautological bundle): the class of the variety of lines
SchubertClass class_of_F();

}  // namespace fanolines
