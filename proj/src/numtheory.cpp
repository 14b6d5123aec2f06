#include "hopffact/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hopffact {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw Error("factorize: input must be positive");
    Factorization f;
    f.n = n;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.factors.emplace_back(p, e);
    }
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    const auto f = factorize(n);
    std::vector<std::uint64_t> divs{1};
    for (const auto& [p, e] : f.factors) {
        const std::size_t sz = divs.size();
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::uint64_t totient(std::uint64_t n) {
    std::uint64_t t = n;
    for (const auto& [p, e] : factorize(n).factors) t = t / p * (p - 1);
    return t;
}

ExtGcd ext_gcd(std::int64_t a, std::int64_t b) {
    if (b == 0) return {a < 0 ? -a : a, a < 0 ? -1 : 1, 0};
    std::int64_t r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        x0 -= q * x1;
        std::swap(x0, x1);
        y0 -= q * y1;
        std::swap(y0, y1);
    }
    if (r0 < 0) {
        r0 = -r0;
        x0 = -x0;
        y0 = -y0;
    }
    return {r0, x0, y0};
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    unsigned __int128 acc = 1, base = a % p;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

namespace {

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}

IntPoly poly_div_exact(const IntPoly& num, const IntPoly& den) {
    if (den.empty()) throw Error("poly_div_exact: division by zero polynomial");
    IntPoly r = num;
    trim(r);
    if (r.size() < den.size()) {
        if (r.empty()) return {};
        throw Error("poly_div_exact: nonzero remainder");
    }
    IntPoly q(r.size() - den.size() + 1);
    const BigInt& lead = den.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        if (r.size() < den.size() + k || r[den.size() - 1 + k] == 0) continue;
        const BigInt c = r[den.size() - 1 + k] / lead;
        if (c * lead != r[den.size() - 1 + k])
            throw Error("poly_div_exact: nonzero remainder");
        q[k] = c;
        for (std::size_t j = 0; j < den.size(); ++j) r[j + k] -= c * den[j];
    }
    trim(r);
    if (!r.empty()) throw Error("poly_div_exact: nonzero remainder");
    return q;
}

IntPoly poly_xn_minus_1(std::uint64_t n) {
    IntPoly p(n + 1);
    p[0] = -1;
    p[n] = 1;
    return p;
}

IntPoly cyclotomic_polynomial(std::uint64_t m) {
    if (m == 0) throw Error("cyclotomic_polynomial: M must be positive");
    IntPoly num = poly_xn_minus_1(m);
    for (std::uint64_t d : divisors(m)) {
        if (d == m) continue;
        num = poly_div_exact(num, cyclotomic_polynomial(d));
    }
    return num;
}

std::string poly_to_string(const IntPoly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = p.size(); k-- > 0;) {
        if (p[k] == 0) continue;
        BigInt c = p[k];
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (k == 0 || c != 1) os << c.str();
        if (k > 0) {
            os << "x";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

}  // namespace hopffact
