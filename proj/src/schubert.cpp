#include "fanolines/schubert.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace fanolines {

namespace {

void trim(std::vector<int>& parts) {
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must decrease");
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (int p : parts)
        if (p < 0) throw std::invalid_argument("negative partition part");
}

}  // namespace

Partition::Partition(std::initializer_list<int> p) : parts(p) { trim(parts); }
Partition::Partition(std::vector<int> p) : parts(std::move(p)) { trim(parts); }

int Partition::weight() const {
    int w = 0;
    for (int p : parts) w += p;
    return w;
}

bool Partition::contains(const Partition& mu) const {
    for (int i = 0; i < mu.length(); ++i)
        if (part(i) < mu.part(i)) return false;
    return true;
}

bool Box::fits(const Partition& p) const {
    return p.length() <= rows && p.part(0) <= cols;
}

Partition Box::full() const { return Partition(std::vector<int>(static_cast<size_t>(rows), cols)); }

Partition Box::complement(const Partition& p) const {
    if (!fits(p)) throw std::invalid_argument("partition outside the box");
    std::vector<int> c(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) c[static_cast<size_t>(i)] = cols - p.part(rows - 1 - i);
    return Partition(std::move(c));
}

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return b.parts < a.parts;  // lexicographically larger parts first
}

SchubertClass SchubertClass::sigma(const Partition& p, Box box) {
    if (!box.fits(p)) throw std::invalid_argument("partition outside the box");
    SchubertClass s(box);
    s.terms_.emplace(p, Rat(1));
    return s;
}

SchubertClass SchubertClass::constant(const Rat& c, Box box) {
    SchubertClass s(box);
    if (c != 0) s.terms_.emplace(Partition{}, c);
    return s;
}

Rat SchubertClass::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rat(0) : it->second;
}

int SchubertClass::codimension() const {
    if (terms_.empty()) return -1;
    int d = terms_.begin()->first.weight();
    for (const auto& [p, c] : terms_)
        if (p.weight() != d) return -1;
    return d;
}

void SchubertClass::add_term(const Partition& p, const Rat& c) {
    if (!box_.fits(p)) throw std::invalid_argument("partition outside the box");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(p, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SchubertClass SchubertClass::operator-() const {
    SchubertClass r(box_);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
    return r;
}

SchubertClass SchubertClass::operator+(const SchubertClass& o) const {
    if (!(box_ == o.box_)) throw std::invalid_argument("ambient mismatch");
    SchubertClass r = *this;
    for (const auto& [p, c] : o.terms_) r.add_term(p, c);
    return r;
}

SchubertClass SchubertClass::operator-(const SchubertClass& o) const { return *this + (-o); }

SchubertClass SchubertClass::operator*(const SchubertClass& o) const {
    if (!(box_ == o.box_)) throw std::invalid_argument("ambient mismatch");
    SchubertClass r(box_);
    for (const auto& [lam, a] : terms_) {
        for (const auto& [mu, b] : o.terms_) {
            for (const auto& [nu, m] : lr_expand(lam, mu, box_)) r.add_term(nu, a * b * m);
        }
    }
    return r;
}

SchubertClass SchubertClass::operator*(const Rat& s) const {
    SchubertClass r(box_);
    if (s == 0) return r;
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, c * s);
    return r;
}

SchubertClass SchubertClass::pow(unsigned e) const {
    SchubertClass r = constant(1, box_);
    SchubertClass b = *this;
    for (; e; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

bool SchubertClass::operator==(const SchubertClass& o) const {
    return box_ == o.box_ && terms_ == o.terms_;
}

std::string SchubertClass::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        Rat a = abs(c);
        std::string base;
        if (p.parts.empty()) {
            base = fanolines::to_string(a);
        } else {
            if (p == box_.full()) {
                base = "pt";
            } else {
                base = "s[";
                for (int i = 0; i < p.length(); ++i)
                    base += (i ? "," : "") + std::to_string(p.part(i));
                base += "]";
            }
            if (a != 1) base = fanolines::to_string(a) + "*" + base;
        }
        if (first) {
            out = (c < 0 ? "-" : "") + base;
            first = false;
        } else {
            out += (c < 0 ? " - " : " + ") + base;
        }
    }
    return out;
}

// ------------------------------------------------------- LR coefficients

namespace {

// count Littlewood-Richardson skew tableaux of shape nu/lam and content mu:
// fill cells in reading order (rows top to bottom, right to left) so that rows
// weakly increase leftward^-1, columns strictly increase, and every prefix of
// the reading word is a lattice word
struct LrCounter {
    const Partition& lam;
    const Partition& mu;
    const Partition& nu;
    std::vector<std::vector<int>> fill;  // value per skew cell, 0 = empty
    std::vector<int> counts;
    long total = 0;

    LrCounter(const Partition& l, const Partition& m, const Partition& n)
        : lam(l), mu(m), nu(n), counts(static_cast<size_t>(m.length()) + 1, 0) {
        fill.resize(static_cast<size_t>(nu.length()));
        for (int r = 0; r < nu.length(); ++r)
            fill[static_cast<size_t>(r)].assign(static_cast<size_t>(nu.part(r)), 0);
    }

    int cell(int r, int c) const { return fill[static_cast<size_t>(r)][static_cast<size_t>(c)]; }

    void place(int r, int c) {
        // advance to the next skew cell in reading order
        int nr = r, nc = c - 1;
        while (nr < nu.length() && nc < lam.part(nr)) {
            ++nr;
            nc = nr < nu.length() ? nu.part(nr) - 1 : -1;
        }
        if (nr == nu.length()) {
            ++total;
            return;
        }
        for (int v = 1; v <= mu.length(); ++v) {
            if (counts[static_cast<size_t>(v)] >= mu.part(v - 1)) continue;
            if (v > 1 && counts[static_cast<size_t>(v)] >= counts[static_cast<size_t>(v - 1)])
                continue;  // lattice condition
            if (nc + 1 < nu.part(nr) && cell(nr, nc + 1) < v) continue;  // row weakly increasing
            if (nr > 0 && nc < nu.part(nr - 1) && nc >= lam.part(nr - 1) && cell(nr - 1, nc) >= v)
                continue;  // column strictly increasing
            fill[static_cast<size_t>(nr)][static_cast<size_t>(nc)] = v;
            ++counts[static_cast<size_t>(v)];
            place(nr, nc);
            --counts[static_cast<size_t>(v)];
            fill[static_cast<size_t>(nr)][static_cast<size_t>(nc)] = 0;
        }
    }

    long count() {
        place(0, nu.part(0));
        return total;
    }
};

long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (!nu.contains(lam)) return 0;
    if (nu.weight() != lam.weight() + mu.weight()) return 0;
    LrCounter counter(lam, mu, nu);
    return counter.count();
}

// all partitions in the box with the given weight
std::vector<Partition> box_partitions(const Box& box, int weight) {
    std::vector<Partition> out;
    std::vector<int> parts(static_cast<size_t>(box.rows), 0);
    auto rec = [&](auto&& self, int row, int maxpart, int remaining) -> void {
        if (row == box.rows) {
            if (remaining == 0) out.push_back(Partition(parts));
            return;
        }
        for (int p = std::min(maxpart, remaining); p >= 0; --p) {
            parts[static_cast<size_t>(row)] = p;
            self(self, row + 1, p, remaining - p);
        }
        parts[static_cast<size_t>(row)] = 0;
    };
    rec(rec, 0, box.cols, weight);
    return out;
}

}  // namespace

const std::map<Partition, long, PartitionOrder>& lr_expand(const Partition& lam,
                                                           const Partition& mu, const Box& box) {
    using Key = std::tuple<std::vector<int>, std::vector<int>, int, int>;
    static std::map<Key, std::map<Partition, long, PartitionOrder>> memo;
    static std::mutex lock;

    Key key{lam.parts, mu.parts, box.rows, box.cols};
    std::lock_guard<std::mutex> guard(lock);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    std::map<Partition, long, PartitionOrder> result;
    for (const Partition& nu : box_partitions(box, lam.weight() + mu.weight())) {
        long c = lr_coefficient(lam, mu, nu);
        if (c != 0) result.emplace(nu, c);
    }
    return memo.emplace(std::move(key), std::move(result)).first->second;
}

Rat integrate_G(const SchubertClass& a) { return a.coeff(a.box().full()); }

// ------------------------------------------------------- tautological side

RingPtr TautExpr::ring() {
    static RingPtr r = make_ring({"e1", "e2"});
    return r;
}

TautExpr::TautExpr() : p_(ring()) {}

TautExpr::TautExpr(Poly p) : p_(std::move(p)) {
    if (!p_.ring()->same(*ring())) throw std::invalid_argument("expected a polynomial in e1, e2");
}

TautExpr TautExpr::e1() { return TautExpr(Poly::variable(ring(), 0)); }
TautExpr TautExpr::e2() { return TautExpr(Poly::variable(ring(), 1)); }
TautExpr TautExpr::constant(const Rat& c) { return TautExpr(Poly::constant(ring(), c)); }
TautExpr TautExpr::parse(std::string_view text) { return TautExpr(Poly::parse(ring(), text)); }

TautExpr TautExpr::operator-() const { return TautExpr(-p_); }

TautExpr TautExpr::graded_piece(int d) const {
    Poly out(ring());
    for (const auto& [e, c] : p_.terms())
        if (e[0] + 2 * e[1] == d) out.add_term(e, c);
    return TautExpr(out);
}

int TautExpr::top_weight() const {
    int w = -1;
    for (const auto& [e, c] : p_.terms()) w = std::max(w, e[0] + 2 * e[1]);
    return w;
}

TautExpr sym_power_chern(int d) {
    if (d < 1) throw std::invalid_argument("sym_power_chern: power must be positive");
    // formal roots a, b of the rank-2 bundle; Sym^d has roots i*a + (d-i)*b
    RingPtr ab = make_ring({"a", "b"});
    Poly a = Poly::variable(ab, 0), b = Poly::variable(ab, 1);
    Poly total = Poly::constant(ab, 1);
    for (int i = 0; i <= d; ++i)
        total *= Poly::constant(ab, 1) + a * Rat(i) + b * Rat(d - i);

    // rewrite the symmetric polynomial in e1 = a + b, e2 = a*b
    Poly e1ab = a + b, e2ab = a * b;
    RingPtr er = TautExpr::ring();
    Poly out(er);
    while (!total.is_zero()) {
        Exponents lead = total.leading_monomial();  // grevlex leader of a symmetric poly has i >= j
        Rat c = total.leading_coeff();
        int i = lead[0], j = lead[1];
        if (i < j) throw std::logic_error("symmetric reduction: unexpected leading monomial");
        total -= e1ab.pow(static_cast<unsigned>(i - j)) * e2ab.pow(static_cast<unsigned>(j)) * c;
        out.add_term({i - j, j}, c);
    }
    return TautExpr(out);
}

SchubertClass taut_to_schubert(const TautExpr& t, Box box) {
    SchubertClass s1 = SchubertClass::sigma({1}, box);
    SchubertClass s11 = SchubertClass::sigma({1, 1}, box);
    SchubertClass out(box);
    for (const auto& [e, c] : t.poly().terms())
        out += s1.pow(static_cast<unsigned>(e[0])) * s11.pow(static_cast<unsigned>(e[1])) * c;
    return out;
}

TautExpr sigma_taut(int i) {
    if (i < 0 || i > 8) throw std::invalid_argument("sigma index out of range");
    // c(U) = 1 - e1 + e2; invert the series up to weight 8 and read the piece
    TautExpr cu_tail = -TautExpr::e1() + TautExpr::e2();
    TautExpr inv = TautExpr::constant(1);
    TautExpr power = TautExpr::constant(1);
    for (int k = 1; k <= 8; ++k) {
        power = power * cu_tail;
        inv = inv + power * Rat((k % 2) ? -1 : 1);
    }
    return inv.graded_piece(i);
}

TautExpr whitney_sigma2() { return sigma_taut(2); }

SchubertClass class_of_F() { return taut_to_schubert(sym_power_chern(3).graded_piece(4)); }

}  // namespace fanolines
