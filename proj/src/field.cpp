#include "hopffact/field.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/integer.hpp>

namespace hopffact {

namespace {

constexpr std::size_t kFastPathMaxDegree = 24;

bool to_i64(const BigInt& v, std::int64_t& out) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (v < lo || v > hi) return false;
    out = v.convert_to<std::int64_t>();
    return true;
}

std::uint64_t u64_abs(std::int64_t v) {
    return v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
}

void check_same_field(const FieldElem& a, const FieldElem& b,
                      const Field* fa, const Field* fb) {
    (void)a;
    (void)b;
    if (fa == nullptr || fb == nullptr) throw Error("uninitialized field element");
    if (fa != fb && !(fa->spec() == fb->spec()))
        throw Error("field mismatch: " + fa->spec().str() + " vs " + fb->spec().str());
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldSpec

FieldSpec FieldSpec::parse(std::string_view text) {
    auto parse_u64 = [&](std::string_view body) {
        std::uint64_t v = 0;
        const auto* end = body.data() + body.size();
        auto [ptr, ec] = std::from_chars(body.data(), end, v);
        if (ec != std::errc{} || ptr != end)
            throw ParseError("invalid field spec: " + std::string(text));
        return v;
    };
    if (text.rfind("gf:", 0) == 0) return gf(parse_u64(text.substr(3)));
    if (text.rfind("cyc:", 0) == 0) return cyc(parse_u64(text.substr(4)));
    throw ParseError("invalid field spec (expected gf:<p> or cyc:<M>): " +
                     std::string(text));
}

std::string FieldSpec::str() const {
    return kind == Kind::Prime ? "gf:" + std::to_string(p)
                               : "cyc:" + std::to_string(m);
}

// ---------------------------------------------------------------------------
// Field

Field::Field(const FieldSpec& spec) : spec_(spec) {
    if (spec.kind == FieldSpec::Kind::Prime) {
        if (!is_prime(spec.p))
            throw NotPrimeError("NotPrime: " + std::to_string(spec.p) +
                                " is not a prime modulus");
        return;
    }
    if (spec.m == 0) throw Error("cyclotomic conductor M must be >= 1");
    phi_ = cyclotomic_polynomial(spec.m);
    deg_ = phi_.size() - 1;

    // x^{deg+r} mod Phi for r in [0, deg): row 0 is -phi[0..deg), each later
    // row is the previous one shifted once and folded.
    red_.assign(deg_, std::vector<BigInt>(deg_));
    for (std::size_t j = 0; j < deg_; ++j) red_[0][j] = -phi_[j];
    for (std::size_t r = 1; r < deg_; ++r) {
        const auto& prev = red_[r - 1];
        auto& row = red_[r];
        for (std::size_t j = 1; j < deg_; ++j) row[j] = prev[j - 1];
        for (std::size_t j = 0; j < deg_; ++j) row[j] += prev[deg_ - 1] * red_[0][j];
    }

    red64_ok_ = deg_ <= kFastPathMaxDegree;
    if (red64_ok_) {
        red64_.assign(deg_, std::vector<std::int64_t>(deg_));
        for (std::size_t r = 0; r < deg_ && red64_ok_; ++r)
            for (std::size_t j = 0; j < deg_ && red64_ok_; ++j)
                red64_ok_ = to_i64(red_[r][j], red64_[r][j]);
    }
}

Field make_field(const FieldSpec& spec) { return Field(spec); }

FieldElem Field::zero() const { return from_int(0); }

FieldElem Field::one() const { return from_int(1); }

FieldElem Field::from_int(std::int64_t v) const {
    FieldElem e;
    e.fld_ = this;
    if (is_prime_field()) {
        const std::int64_t p = static_cast<std::int64_t>(spec_.p);
        std::int64_t r = v % p;
        if (r < 0) r += p;
        e.res_ = static_cast<std::uint64_t>(r);
        return e;
    }
    e.num_.assign(deg_, BigInt(0));
    e.num_[0] = v;
    return e;
}

FieldElem Field::from_rational(const BigRat& v) const {
    if (is_prime_field()) {
        const BigInt p(spec_.p);
        const BigInt den = denominator(v) % p;
        if (den == 0) throw Error("rational with denominator divisible by p");
        BigInt num = numerator(v) % p;
        if (num < 0) num += p;
        // den inverse mod p
        const std::uint64_t d = den.convert_to<std::uint64_t>() % spec_.p;
        const std::uint64_t dinv = pow_mod(d, spec_.p - 2, spec_.p);
        FieldElem e;
        e.fld_ = this;
        e.res_ = static_cast<std::uint64_t>(
            (unsigned __int128)num.convert_to<std::uint64_t>() * dinv % spec_.p);
        return e;
    }
    std::vector<BigInt> num(deg_, BigInt(0));
    num[0] = numerator(v);
    BigInt den = denominator(v);
    return make_cyc(std::move(num), std::move(den));
}

FieldElem Field::from_coeffs(const std::vector<BigRat>& coeffs) const {
    if (is_prime_field()) throw Error("from_coeffs requires a cyclotomic field");
    BigInt den = 1;
    for (const auto& c : coeffs) den = lcm(den, BigInt(denominator(c)));
    std::vector<BigInt> num(std::max(coeffs.size(), deg_), BigInt(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        num[i] = numerator(coeffs[i]) * (den / denominator(coeffs[i]));
    return make_cyc(std::move(num), std::move(den));
}

FieldElem Field::zeta() const {
    if (is_prime_field()) throw Error("zeta requires a cyclotomic field");
    FieldElem e;
    e.fld_ = this;
    e.num_.assign(deg_, BigInt(0));
    if (deg_ == 1) {
        // Phi is x - 1 (M = 1) or x + 1 (M = 2): zeta = -phi[0].
        e.num_[0] = -phi_[0];
    } else {
        e.num_[1] = 1;
    }
    return e;
}

FieldElem Field::make_cyc(std::vector<BigInt> num, BigInt den) const {
    FieldElem e;
    e.fld_ = this;
    reduce_and_normalize(num, den);
    e.num_ = std::move(num);
    e.den_ = std::move(den);
    return e;
}

void Field::reduce_and_normalize(std::vector<BigInt>& num, BigInt& den) const {
    // Fold exponents >= deg via x^deg = -phi[0..deg).
    while (num.size() > deg_) {
        BigInt top = std::move(num.back());
        num.pop_back();
        if (top != 0) {
            const std::size_t base = num.size() - deg_;
            for (std::size_t j = 0; j < deg_; ++j) num[base + j] += top * red_[0][j];
        }
    }
    num.resize(deg_, BigInt(0));
    if (den == 0) throw Error("zero denominator");
    if (den < 0) {
        den = -den;
        for (auto& c : num) c = -c;
    }
    BigInt g = den;
    for (const auto& c : num) {
        if (c != 0) g = gcd(g, abs(c));
        if (g == 1) break;
    }
    if (g > 1) {
        den /= g;
        for (auto& c : num) c /= g;
    }
    bool all_zero = true;
    for (const auto& c : num)
        if (c != 0) {
            all_zero = false;
            break;
        }
    if (all_zero) den = 1;
}

// ---------------------------------------------------------------------------
// FieldElem

bool FieldElem::is_zero() const {
    if (fld_ == nullptr) throw Error("uninitialized field element");
    if (fld_->is_prime_field()) return res_ == 0;
    for (const auto& c : num_)
        if (c != 0) return false;
    return true;
}

bool FieldElem::is_one() const {
    if (fld_ == nullptr) throw Error("uninitialized field element");
    if (fld_->is_prime_field()) return res_ == 1 % fld_->spec().p;
    if (den_ != 1 || num_[0] != 1) return false;
    for (std::size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return false;
    return true;
}

bool FieldElem::operator==(const FieldElem& o) const {
    check_same_field(*this, o, fld_, o.fld_);
    if (fld_->is_prime_field()) return res_ == o.res_;
    return den_ == o.den_ && num_ == o.num_;
}

namespace {

// int64 views of a cyclotomic element; valid only while the element lives.
struct SmallView {
    std::array<std::int64_t, kFastPathMaxDegree> num;
    std::int64_t den;
};

bool load_small(const FieldElem& e, const std::vector<BigInt>& num, const BigInt& den,
                std::size_t deg, SmallView& out) {
    (void)e;
    if (!to_i64(den, out.den)) return false;
    for (std::size_t i = 0; i < deg; ++i)
        if (!to_i64(num[i], out.num[i])) return false;
    return true;
}

bool small_normalize(std::int64_t* num, std::size_t deg, std::int64_t& den) {
    std::uint64_t g = u64_abs(den);
    for (std::size_t i = 0; i < deg && g != 1; ++i) g = std::gcd(g, u64_abs(num[i]));
    if (g > 1) {
        den /= static_cast<std::int64_t>(g);
        for (std::size_t i = 0; i < deg; ++i) num[i] /= static_cast<std::int64_t>(g);
    }
    bool all_zero = true;
    for (std::size_t i = 0; i < deg; ++i)
        if (num[i] != 0) {
            all_zero = false;
            break;
        }
    if (all_zero) den = 1;
    return true;
}

}  // namespace

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same_field(*this, o, fld_, o.fld_);
    const Field& f = *fld_;
    FieldElem r;
    r.fld_ = fld_;
    if (f.is_prime_field()) {
        const std::uint64_t p = f.spec().p;
        r.res_ = res_ + o.res_;
        if (r.res_ >= p) r.res_ -= p;
        return r;
    }
    const std::size_t deg = f.deg_;
    if (f.red64_ok_) {
        SmallView a, b;
        if (load_small(*this, num_, den_, deg, a) && load_small(o, o.num_, o.den_, deg, b)) {
            std::array<std::int64_t, kFastPathMaxDegree> c;
            std::int64_t den = 0;
            bool ok = !__builtin_mul_overflow(a.den, b.den, &den);
            for (std::size_t i = 0; ok && i < deg; ++i) {
                std::int64_t t1 = 0, t2 = 0;
                ok = !__builtin_mul_overflow(a.num[i], b.den, &t1) &&
                     !__builtin_mul_overflow(b.num[i], a.den, &t2) &&
                     !__builtin_add_overflow(t1, t2, &c[i]);
            }
            if (ok) {
                small_normalize(c.data(), deg, den);
                r.num_.assign(c.begin(), c.begin() + deg);
                r.den_ = den;
                return r;
            }
        }
    }
    std::vector<BigInt> num(deg);
    for (std::size_t i = 0; i < deg; ++i) num[i] = num_[i] * o.den_ + o.num_[i] * den_;
    BigInt den = den_ * o.den_;
    return f.make_cyc(std::move(num), std::move(den));
}

FieldElem FieldElem::operator-() const {
    if (fld_ == nullptr) throw Error("uninitialized field element");
    FieldElem r = *this;
    if (fld_->is_prime_field()) {
        if (r.res_ != 0) r.res_ = fld_->spec().p - r.res_;
        return r;
    }
    for (auto& c : r.num_) c = -c;
    return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same_field(*this, o, fld_, o.fld_);
    const Field& f = *fld_;
    FieldElem r;
    r.fld_ = fld_;
    if (f.is_prime_field()) {
        r.res_ = static_cast<std::uint64_t>((unsigned __int128)res_ * o.res_ %
                                            f.spec().p);
        return r;
    }
    const std::size_t deg = f.deg_;
    if (f.red64_ok_) {
        SmallView a, b;
        if (load_small(*this, num_, den_, deg, a) && load_small(o, o.num_, o.den_, deg, b)) {
            std::array<std::int64_t, 2 * kFastPathMaxDegree> c{};
            bool ok = true;
            for (std::size_t i = 0; ok && i < deg; ++i) {
                if (a.num[i] == 0) continue;
                for (std::size_t j = 0; ok && j < deg; ++j) {
                    if (b.num[j] == 0) continue;
                    std::int64_t t = 0;
                    ok = !__builtin_mul_overflow(a.num[i], b.num[j], &t) &&
                         !__builtin_add_overflow(c[i + j], t, &c[i + j]);
                }
            }
            for (std::size_t e = deg; ok && e <= 2 * deg - 2; ++e) {
                if (c[e] == 0) continue;
                const auto& row = f.red64_[e - deg];
                for (std::size_t j = 0; ok && j < deg; ++j) {
                    if (row[j] == 0) continue;
                    std::int64_t t = 0;
                    ok = !__builtin_mul_overflow(c[e], row[j], &t) &&
                         !__builtin_add_overflow(c[j], t, &c[j]);
                }
            }
            std::int64_t den = 0;
            ok = ok && !__builtin_mul_overflow(a.den, b.den, &den);
            if (ok) {
                small_normalize(c.data(), deg, den);
                r.num_.assign(c.begin(), c.begin() + deg);
                r.den_ = den;
                return r;
            }
        }
    }
    std::vector<BigInt> conv(2 * deg - 1);
    for (std::size_t i = 0; i < deg; ++i) {
        if (num_[i] == 0) continue;
        for (std::size_t j = 0; j < deg; ++j) {
            if (o.num_[j] == 0) continue;
            conv[i + j] += num_[i] * o.num_[j];
        }
    }
    std::vector<BigInt> num(conv.begin(), conv.begin() + deg);
    for (std::size_t e = deg; e <= 2 * deg - 2; ++e) {
        if (conv[e] == 0) continue;
        const auto& row = f.red_[e - deg];
        for (std::size_t j = 0; j < deg; ++j) num[j] += conv[e] * row[j];
    }
    BigInt den = den_ * o.den_;
    return f.make_cyc(std::move(num), std::move(den));
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

namespace {

using RatPoly = std::vector<BigRat>;

void rp_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder and quotient-update step for the extended Euclid below.
RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    rp_trim(c);
    return c;
}

void rp_sub_inplace(RatPoly& a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    rp_trim(a);
}

RatPoly rp_divmod(RatPoly& r, const RatPoly& d) {
    RatPoly q;
    if (r.size() >= d.size()) q.assign(r.size() - d.size() + 1, BigRat(0));
    while (r.size() >= d.size() && !r.empty()) {
        const BigRat c = r.back() / d.back();
        const std::size_t k = r.size() - d.size();
        q[k] = c;
        for (std::size_t j = 0; j < d.size(); ++j) r[j + k] -= c * d[j];
        rp_trim(r);
    }
    rp_trim(q);
    return q;
}

}  // namespace

FieldElem FieldElem::inverse() const {
    if (fld_ == nullptr) throw Error("uninitialized field element");
    if (is_zero()) throw Error("inverse of zero");
    const Field& f = *fld_;
    if (f.is_prime_field()) {
        FieldElem r;
        r.fld_ = fld_;
        r.res_ = pow_mod(res_, f.spec().p - 2, f.spec().p);
        return r;
    }
    // Extended Euclid in Q[x] modulo Phi_M (irreducible, so the gcd with any
    // nonzero reduced element is a constant).
    RatPoly r0(f.phi_.size()), r1(f.deg_);
    for (std::size_t i = 0; i < f.phi_.size(); ++i) r0[i] = BigRat(f.phi_[i]);
    for (std::size_t i = 0; i < f.deg_; ++i) r1[i] = BigRat(num_[i], den_);
    rp_trim(r1);
    RatPoly s0{}, s1{BigRat(1)};
    while (!r1.empty()) {
        RatPoly rem = r0;
        RatPoly q = rp_divmod(rem, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        RatPoly qs = rp_mul(q, s1);
        RatPoly s2 = s0;
        rp_sub_inplace(s2, qs);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) throw Error("inverse: modulus not coprime to element");
    std::vector<BigRat> coeffs(s0.size());
    for (std::size_t i = 0; i < s0.size(); ++i) coeffs[i] = s0[i] / r0[0];
    return f.from_coeffs(coeffs);
}

FieldElem FieldElem::pow(std::int64_t e) const {
    if (fld_ == nullptr) throw Error("uninitialized field element");
    FieldElem base = *this;
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    FieldElem acc = fld_->one();
    std::uint64_t u = static_cast<std::uint64_t>(e);
    while (u) {
        if (u & 1) acc = acc * base;
        base = base * base;
        u >>= 1;
    }
    return acc;
}

std::uint64_t FieldElem::multiplicative_order() const {
    if (is_zero()) throw Error("multiplicative order of zero");
    const Field& f = *fld_;
    std::uint64_t bound;
    if (f.is_prime_field()) {
        bound = f.spec().p - 1;
    } else {
        // Torsion in Q(zeta_M) is exactly the +-zeta^k, of order lcm(2, M).
        bound = f.spec().m % 2 == 0 ? f.spec().m : 2 * f.spec().m;
        if (!pow(static_cast<std::int64_t>(bound)).is_one())
            throw Error("element has infinite multiplicative order");
    }
    std::uint64_t e = bound;
    for (const auto& [p, _] : factorize(bound).factors) {
        while (e % p == 0 && pow(static_cast<std::int64_t>(e / p)).is_one()) e /= p;
    }
    return e;
}

std::vector<BigRat> FieldElem::rational_coeffs() const {
    if (fld_ == nullptr) throw Error("uninitialized field element");
    if (fld_->is_prime_field())
        return {BigRat(res_)};
    std::vector<BigRat> out(num_.size());
    for (std::size_t i = 0; i < num_.size(); ++i) out[i] = BigRat(num_[i], den_);
    return out;
}

std::string FieldElem::str() const {
    if (fld_ == nullptr) throw Error("uninitialized field element");
    if (fld_->is_prime_field()) return std::to_string(res_);
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (i) os << ",";
        if (num_[i] == 0) {
            os << "0/1";
            continue;
        }
        const BigInt g = gcd(abs(num_[i]), den_);
        os << BigInt(num_[i] / g).str() << "/" << BigInt(den_ / g).str();
    }
    os << "]";
    return os.str();
}

FieldElem Field::parse(std::string_view text) const {
    try {
        if (is_prime_field()) {
            return from_int(std::stoll(std::string(text)));
        }
        std::string body(text);
        if (body.size() < 2 || body.front() != '[' || body.back() != ']')
            throw ParseError("expected [..] coefficient list");
        body = body.substr(1, body.size() - 2);
        std::vector<BigRat> coeffs;
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) coeffs.emplace_back(tok);
        return from_coeffs(coeffs);
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError("invalid field element '" + std::string(text) +
                         "': " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Roots of unity

std::uint64_t nu_of(const Field& field, std::uint64_t n) {
    if (n == 0) throw Error("n must be positive");
    if (field.is_prime_field()) return std::gcd(n, field.spec().p - 1);
    const std::uint64_t m = field.spec().m;
    return std::gcd(n, m % 2 == 0 ? m : 2 * m);
}

FieldElem primitive_root_of_unity(const Field& field, std::uint64_t m) {
    if (m == 0) throw Error("order must be positive");
    if (m == 1) return field.one();
    if (nu_of(field, m) < m)
        throw NoPrimitiveRootError("NoPrimitiveRoot: " + field.spec().str() +
                                   " has no primitive root of unity of order " +
                                   std::to_string(m));
    const auto mf = factorize(m);
    auto has_order_m = [&](const FieldElem& x) {
        if (!x.pow(static_cast<std::int64_t>(m)).is_one()) return false;
        for (const auto& [r, _] : mf.factors)
            if (x.pow(static_cast<std::int64_t>(m / r)).is_one()) return false;
        return true;
    };
    if (field.is_prime_field()) {
        for (std::uint64_t a = 1; a < field.spec().p; ++a) {
            FieldElem x = field.from_int(static_cast<std::int64_t>(a));
            if (has_order_m(x)) return x;
        }
        throw NoPrimitiveRootError("NoPrimitiveRoot: exhausted GF(p)");
    }
    const std::uint64_t cm = field.spec().m;
    FieldElem x = field.zero();
    if (cm % m == 0) {
        x = field.zeta().pow(static_cast<std::int64_t>(cm / m));
    } else {
        // Only reachable for odd M with m | 2M: use -zeta, of order 2M.
        x = (-field.zeta()).pow(static_cast<std::int64_t>(2 * cm / m));
    }
    if (!has_order_m(x)) throw Error("internal: primitive root selection failed");
    return x;
}

RootsOfUnity roots_of_unity(const Field& field, std::uint64_t n) {
    if (n == 0) throw Error("n must be positive");
    RootsOfUnity r;
    r.n = n;
    r.nu = nu_of(field, n);
    r.generator = primitive_root_of_unity(field, r.nu);
    r.elements.reserve(r.nu);
    FieldElem x = field.one();
    for (std::uint64_t k = 0; k < r.nu; ++k) {
        r.elements.push_back(x);
        x = x * r.generator;
    }
    if (!x.is_one()) throw Error("internal: generator order mismatch");

    // Every listed element must satisfy x^n = 1 and the count must equal nu;
    // also check pairwise distinctness so |U_n| is exact.
    for (const auto& e : r.elements)
        if (!e.pow(static_cast<std::int64_t>(n)).is_one())
            throw Error("internal: listed element is not an n-th root of unity");
    for (std::size_t i = 0; i < r.elements.size(); ++i)
        for (std::size_t j = i + 1; j < r.elements.size(); ++j)
            if (r.elements[i] == r.elements[j])
                throw Error("internal: duplicate root of unity");
    if (r.elements.size() != r.nu) throw Error("internal: root count mismatch");

    if (!field.is_prime_field()) {
        // All roots of unity in Q(zeta_M) are +-zeta^k; reconcile the list
        // against that enumeration.
        std::size_t found = 0;
        FieldElem zk = field.one();
        for (std::uint64_t k = 0; k < field.spec().m; ++k) {
            for (const FieldElem& cand : {zk, -zk}) {
                if (!cand.pow(static_cast<std::int64_t>(n)).is_one()) continue;
                bool listed = false;
                for (const auto& e : r.elements)
                    if (e == cand) {
                        listed = true;
                        break;
                    }
                if (!listed) throw Error("internal: missed an n-th root of unity");
                ++found;
            }
            zk = zk * field.zeta();
        }
        // +-zeta^k enumerates each torsion element exactly once or twice
        // (twice iff M is even).
        if (found != r.nu * (field.spec().m % 2 == 0 ? 2 : 1))
            throw Error("internal: enumeration count mismatch");
    }
    return r;
}

}  // namespace hopffact
