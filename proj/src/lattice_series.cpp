#include "qcf/lattice_series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qcf {

namespace {

Exponent floor_div(Exponent a, Exponent b) {
    Exponent q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Monomial reduce(Monomial m) {
    Exponent g = std::gcd(m.num, m.denom);
    if (g > 1) {
        m.num /= g;
        m.denom /= g;
    }
    return m;
}

void require_same_lattice(const LatticeSeries& a, const LatticeSeries& b, const char* op) {
    if (a.denom() != b.denom()) {
        std::ostringstream msg;
        msg << op << ": lattice mismatch (1/" << a.denom() << " vs 1/" << b.denom() << ")";
        throw LatticeMismatch(msg.str());
    }
}

// Indices of nonzero entries, used to skip work in sparse operands.
std::vector<std::size_t> support(std::span<const Integer> c) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (sgn(c[i]) != 0) idx.push_back(i);
    return idx;
}

}  // namespace

Exponent Monomial::on_lattice(Exponent lattice) const {
    if (denom <= 0 || lattice % denom != 0) {
        std::ostringstream msg;
        msg << "monomial " << to_string() << " does not live on lattice 1/" << lattice;
        throw LatticeMismatch(msg.str());
    }
    return num * (lattice / denom);
}

std::string Monomial::to_string() const {
    std::ostringstream out;
    if (sign < 0) out << '-';
    Monomial r = reduce(*this);
    if (r.num == 0) {
        out << '1';
    } else if (r.denom == 1) {
        if (r.num == 1)
            out << 'q';
        else
            out << "q^" << r.num;
    } else {
        out << "q^(" << r.num << '/' << r.denom << ')';
    }
    return out.str();
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Exponent l = std::lcm(a.denom, b.denom);
    return reduce({a.sign * b.sign, a.num * (l / a.denom) + b.num * (l / b.denom), l});
}

Monomial inverse(const Monomial& m) { return reduce({m.sign, -m.num, m.denom}); }

Monomial pow(const Monomial& m, int k) {
    int s = (m.sign < 0 && (k % 2 != 0)) ? -1 : 1;
    return reduce({s, m.num * k, m.denom});
}

int compare_exponents(const Monomial& a, const Monomial& b) {
    Exponent l = a.num * b.denom, r = b.num * a.denom;
    return (l < r) ? -1 : (l > r ? 1 : 0);
}

LatticeSeries::LatticeSeries(Exponent denom, Exponent floor, Exponent order, std::vector<Integer> coeffs)
    : denom_(denom), floor_(floor), order_(order), coeffs_(std::move(coeffs)) {
    if (denom_ <= 0) throw DomainError("lattice denominator must be positive");
    normalize();
}

void LatticeSeries::normalize() {
    if (floor_ > order_ + 1) floor_ = order_ + 1;
    Exponent width = order_ - floor_ + 1;
    if (static_cast<Exponent>(coeffs_.size()) > width) coeffs_.resize(static_cast<std::size_t>(width));
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) != 0; });
    floor_ += std::distance(coeffs_.begin(), first);
    coeffs_.erase(coeffs_.begin(), first);
    if (coeffs_.empty()) floor_ = order_ + 1;
}

LatticeSeries LatticeSeries::zero(Exponent denom, Exponent order) { return {denom, order + 1, order, {}}; }

LatticeSeries LatticeSeries::one(Exponent denom, Exponent order) { return {denom, 0, order, {Integer(1)}}; }

LatticeSeries LatticeSeries::monomial(const Monomial& m, Exponent denom, Exponent order) {
    return {denom, m.on_lattice(denom), order, {Integer(m.sign)}};
}

LatticeSeries LatticeSeries::polynomial(Exponent denom, Exponent order,
                                        std::span<const std::pair<Exponent, long>> terms) {
    if (terms.empty()) return zero(denom, order);
    Exponent lo = terms.front().first;
    for (const auto& t : terms) lo = std::min(lo, t.first);
    if (lo > order) return zero(denom, order);
    std::vector<Integer> c(static_cast<std::size_t>(order - lo + 1));
    for (const auto& [e, v] : terms)
        if (e <= order) c[static_cast<std::size_t>(e - lo)] += v;
    return {denom, lo, order, std::move(c)};
}

const Integer& LatticeSeries::leading() const {
    if (coeffs_.empty()) throw DomainError("zero series has no leading coefficient");
    return coeffs_.front();
}

Integer LatticeSeries::coefficient(Exponent e_num) const {
    if (e_num > order_) {
        std::ostringstream msg;
        msg << "coefficient of q^(" << e_num << '/' << denom_ << ") requested beyond exact order " << order_;
        throw TruncationError(msg.str());
    }
    if (e_num < floor_) return 0;
    auto i = static_cast<std::size_t>(e_num - floor_);
    return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

LatticeSeries LatticeSeries::truncated(Exponent order) const {
    if (order > order_) throw TruncationError("cannot extend a truncated series");
    return {denom_, floor_, order, coeffs_};
}

LatticeSeries add(const LatticeSeries& a, const LatticeSeries& b) {
    require_same_lattice(a, b, "add");
    Exponent order = std::min(a.order(), b.order());
    Exponent lo = std::min(a.floor(), b.floor());
    if (lo > order) return LatticeSeries::zero(a.denom(), order);
    std::vector<Integer> c(static_cast<std::size_t>(order - lo + 1));
    for (const LatticeSeries* s : {&a, &b}) {
        auto cs = s->coeffs();
        for (std::size_t i = 0; i < cs.size(); ++i) {
            Exponent e = s->floor() + static_cast<Exponent>(i);
            if (e > order) break;
            c[static_cast<std::size_t>(e - lo)] += cs[i];
        }
    }
    return {a.denom(), lo, order, std::move(c)};
}

LatticeSeries negate(const LatticeSeries& a) {
    std::vector<Integer> c(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : c) x = -x;
    return {a.denom(), a.floor(), a.order(), std::move(c)};
}

LatticeSeries sub(const LatticeSeries& a, const LatticeSeries& b) { return add(a, negate(b)); }

LatticeSeries scale(const LatticeSeries& a, const Integer& k) {
    std::vector<Integer> c(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : c) x *= k;
    return {a.denom(), a.floor(), a.order(), std::move(c)};
}

LatticeSeries shift(const LatticeSeries& a, Exponent k) {
    return {a.denom(), a.floor() + k, a.order() + k, {a.coeffs().begin(), a.coeffs().end()}};
}

LatticeSeries mul(const LatticeSeries& a, const LatticeSeries& b) {
    require_same_lattice(a, b, "mul");
    Exponent order = std::min(a.order() + b.floor(), b.order() + a.floor());
    if (a.is_zero() || b.is_zero()) return LatticeSeries::zero(a.denom(), order);
    Exponent lo = a.floor() + b.floor();
    if (lo > order) return LatticeSeries::zero(a.denom(), order);

    auto len = static_cast<std::size_t>(order - lo + 1);
    std::vector<Integer> c(len);
    auto ac = a.coeffs(), bc = b.coeffs();
    auto as = support(ac), bs = support(bc);
    // Outer loop over the sparser operand; the inner one runs densely.
    if (bs.size() < as.size()) {
        std::swap(ac, bc);
        std::swap(as, bs);
    }
    for (std::size_t i : as) {
        if (i >= len) break;
        std::size_t jmax = std::min(bc.size(), len - i);
        mpz_srcptr x = ac[i].get_mpz_t();
        for (std::size_t j = 0; j < jmax; ++j) mpz_addmul(c[i + j].get_mpz_t(), x, bc[j].get_mpz_t());
    }
    return {a.denom(), lo, order, std::move(c)};
}

LatticeSeries reciprocal(const LatticeSeries& s) {
    if (s.is_zero()) throw DomainError("reciprocal of the zero series");
    const Integer& lead = s.leading();
    if (lead != 1 && lead != -1)
        throw DomainError("reciprocal needs a unit leading coefficient, got " + lead.get_str());
    auto len = static_cast<std::size_t>(s.order() - s.floor() + 1);
    auto sc = s.coeffs();
    std::vector<std::size_t> nz;
    for (std::size_t k : support(sc))
        if (k > 0) nz.push_back(k);

    std::vector<Integer> r(len);
    r[0] = lead;
    Integer acc;
    for (std::size_t n = 1; n < len; ++n) {
        acc = 0;
        for (std::size_t k : nz) {
            if (k > n) break;
            mpz_addmul(acc.get_mpz_t(), sc[k].get_mpz_t(), r[n - k].get_mpz_t());
        }
        r[n] = (lead > 0) ? Integer(-acc) : acc;
    }
    return {s.denom(), -s.floor(), s.order() - 2 * s.floor(), std::move(r)};
}

LatticeSeries divide(const LatticeSeries& a, const LatticeSeries& b) { return mul(a, reciprocal(b)); }

LatticeSeries power(const LatticeSeries& a, int n) {
    if (n < 0) return power(reciprocal(a), -n);
    LatticeSeries result = LatticeSeries::one(a.denom(), a.order() - a.floor());
    if (n == 0) return result;
    LatticeSeries base = a;
    bool first = true;
    while (n > 0) {
        if (n & 1) {
            result = first ? base : mul(result, base);
            first = false;
        }
        n >>= 1;
        if (n > 0) base = mul(base, base);
    }
    return result;
}

LatticeSeries substitute(const LatticeSeries& s, Exponent k, bool negate_q) {
    if (k < 1) throw DomainError("substitute: scale factor must be >= 1");
    if (negate_q && s.denom() != 1)
        throw DomainError("substitute: q -> -q is only defined on the integer lattice");
    Exponent order = k * (s.order() + 1) - 1;
    if (s.is_zero()) return LatticeSeries::zero(s.denom(), order);
    auto sc = s.coeffs();
    std::vector<Integer> c((sc.size() - 1) * static_cast<std::size_t>(k) + 1);
    for (std::size_t i = 0; i < sc.size(); ++i) {
        Exponent e = s.floor() + static_cast<Exponent>(i);
        bool odd = (e % 2) != 0;
        c[i * static_cast<std::size_t>(k)] = (negate_q && odd) ? Integer(-sc[i]) : sc[i];
    }
    return {s.denom(), k * s.floor(), order, std::move(c)};
}

LatticeSeries refine(const LatticeSeries& s, Exponent factor) {
    if (factor < 1) throw DomainError("refine: factor must be >= 1");
    Exponent order = (s.order() + 1) * factor - 1;
    if (s.is_zero()) return LatticeSeries::zero(s.denom() * factor, order);
    auto sc = s.coeffs();
    std::vector<Integer> c((sc.size() - 1) * static_cast<std::size_t>(factor) + 1);
    for (std::size_t i = 0; i < sc.size(); ++i) c[i * static_cast<std::size_t>(factor)] = sc[i];
    return {s.denom() * factor, s.floor() * factor, order, std::move(c)};
}

LatticeSeries coarsen(const LatticeSeries& s, Exponent factor) {
    if (factor < 1 || s.denom() % factor != 0) throw LatticeMismatch("coarsen: factor must divide the lattice");
    Exponent order = floor_div(s.order(), factor);
    if (s.is_zero()) return LatticeSeries::zero(s.denom() / factor, order);
    auto sc = s.coeffs();
    if (s.floor() % factor != 0) throw LatticeMismatch("coarsen: series has exponents off the coarse lattice");
    std::vector<Integer> c;
    for (std::size_t i = 0; i < sc.size(); ++i) {
        if (i % static_cast<std::size_t>(factor) == 0)
            c.push_back(sc[i]);
        else if (sgn(sc[i]) != 0)
            throw LatticeMismatch("coarsen: series has exponents off the coarse lattice");
    }
    return {s.denom() / factor, s.floor() / factor, order, std::move(c)};
}

WindowComparison compare(const LatticeSeries& a, const LatticeSeries& b) {
    require_same_lattice(a, b, "compare");
    Exponent window = std::min(a.order(), b.order());
    WindowComparison out{a.denom(), window, std::nullopt};
    Exponent lo = std::min(a.floor(), b.floor());
    for (Exponent e = lo; e <= window; ++e) {
        Integer x = a.coefficient(e), y = b.coefficient(e);
        if (x != y) {
            out.first_mismatch = Mismatch{e, x, y};
            break;
        }
    }
    return out;
}

std::string to_string(const LatticeSeries& s, std::size_t max_terms) {
    std::ostringstream out;
    std::size_t shown = 0;
    auto sc = s.coeffs();
    for (std::size_t i = 0; i < sc.size() && shown < max_terms; ++i) {
        if (sgn(sc[i]) == 0) continue;
        Integer c = sc[i];
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        out << (shown == 0 ? (neg ? "-" : "") : (neg ? " - " : " + "));
        Monomial m{1, s.floor() + static_cast<Exponent>(i), s.denom()};
        if (m.num == 0) {
            out << c.get_str();
        } else {
            if (c != 1) out << c.get_str() << '*';
            out << m.to_string();
        }
        ++shown;
    }
    if (shown == 0) out << '0';
    else if (shown == max_terms) out << " + ...";
    out << " + O(" << Monomial{1, s.order() + 1, s.denom()}.to_string() << ')';
    return out.str();
}

}  // namespace qcf
