#include "gale/univariate.hpp"

#include <algorithm>
#include <cstdint>

namespace gale {

RatVector uni_trim(RatVector p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int uni_degree(const RatVector& p) {
    for (std::size_t i = p.size(); i > 0; --i)
        if (p[i - 1] != 0) return static_cast<int>(i - 1);
    return -1;
}

RatVector uni_derivative(const RatVector& p) {
    RatVector d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    return uni_trim(std::move(d));
}

Rat uni_eval(const RatVector& p, const Rat& x) {
    Rat acc = 0;
    for (std::size_t i = p.size(); i > 0; --i) acc = acc * x + p[i - 1];
    return acc;
}

BigFloat uni_eval_f(const RatVector& p, const BigFloat& x) {
    BigFloat acc = 0;
    for (std::size_t i = p.size(); i > 0; --i) acc = acc * x + to_bigfloat(p[i - 1]);
    return acc;
}

RatVector uni_primitive(const RatVector& p) {
    RatVector q = uni_trim(p);
    if (q.empty()) return q;
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& c : q) {
        num_gcd = gcd(num_gcd, numerator(c));
        den_lcm = lcm(den_lcm, denominator(c));
    }
    Rat scale(den_lcm, abs(num_gcd));
    for (auto& c : q) c *= scale;
    return q;
}

namespace {

using IntVec = std::vector<Int>;

IntVec to_int_vec(const RatVector& p) {
    IntVec out;
    out.reserve(p.size());
    for (const auto& c : p) out.push_back(numerator(c));  // primitive => integer
    return out;
}

RatVector to_rat_vec(const IntVec& p) {
    RatVector out;
    out.reserve(p.size());
    for (const auto& c : p) out.push_back(Rat(c));
    return out;
}

void int_trim(IntVec& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void int_primitive(IntVec& p) {
    int_trim(p);
    if (p.empty()) return;
    Int g = 0;
    for (const auto& c : p) g = gcd(g, c);
    if (g > 1)
        for (auto& c : p) c /= g;
}

/// Positive-scaled pseudo-remainder: rem(|lc(b)|^k a, b) for some k >= 0, so
/// the result is a positive rational multiple of the true remainder.
IntVec int_prem(IntVec a, const IntVec& b) {
    int_trim(a);
    int db = static_cast<int>(b.size()) - 1;
    Int d = b[db];
    Int ad = abs(d);
    Int s = d < 0 ? -1 : 1;
    while (static_cast<int>(a.size()) - 1 >= db) {
        int da = static_cast<int>(a.size()) - 1;
        Int lead = a[da] * s;
        for (auto& c : a) c *= ad;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= lead * b[i];
        int_trim(a);
    }
    return a;
}

/// True pseudo-remainder rem(lc(b)^{deg a - deg b + 1} a, b), exact exponent
/// even when leading terms cancel early; requires deg a >= deg b.
IntVec int_prem_sub(IntVec a, const IntVec& b) {
    int_trim(a);
    int db = static_cast<int>(b.size()) - 1;
    const Int& d = b[db];
    int e = static_cast<int>(a.size()) - 1 - db + 1;
    while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
        int dc = static_cast<int>(a.size()) - 1;
        Int lead = a[dc];
        for (auto& c : a) c *= d;
        for (int i = 0; i <= db; ++i) a[dc - db + i] -= lead * b[i];
        int_trim(a);
        --e;
    }
    for (int k = 0; k < e; ++k)
        for (auto& c : a) c *= d;
    return a;
}

/// Sign of p(u/v) for a primitive integer p; integer Horner against the
/// denominator's power ladder.
int int_sign_at(const IntVec& p, const Int& u, const Int& v) {
    if (p.empty()) return 0;
    Int acc = 0;
    Int vpow = 1;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * u + p[i] * vpow;
        vpow *= v;
    }
    return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

int int_sign_at(const IntVec& p, const Rat& x) {
    return int_sign_at(p, numerator(x), denominator(x));
}

/// Remainder of a by b (rational long division).
RatVector uni_rem(RatVector a, const RatVector& b) {
    a = uni_trim(std::move(a));
    int db = uni_degree(b);
    while (uni_degree(a) >= db) {
        int da = uni_degree(a);
        Rat q = a[da] / b[db];
        for (int i = 0; i <= db; ++i) a[da - db + i] -= q * b[i];
        a = uni_trim(std::move(a));
    }
    return a;
}

RatVector uni_quot(RatVector a, const RatVector& b) {
    a = uni_trim(std::move(a));
    int db = uni_degree(b);
    RatVector quot(std::max(uni_degree(a) - db + 1, 1));
    while (uni_degree(a) >= db) {
        int da = uni_degree(a);
        Rat q = a[da] / b[db];
        quot[da - db] = q;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= q * b[i];
        a = uni_trim(std::move(a));
    }
    return uni_trim(std::move(quot));
}

int sgn(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

RatVector uni_gcd(const RatVector& a, const RatVector& b) {
    IntVec r0 = to_int_vec(uni_primitive(a)), r1 = to_int_vec(uni_primitive(b));
    if (r0.empty()) std::swap(r0, r1);
    if (r1.empty()) {
        if (!r0.empty() && r0.back() < 0)
            for (auto& c : r0) c = -c;
        return to_rat_vec(r0);
    }
    if (r0.size() < r1.size()) std::swap(r0, r1);
    // subresultant PRS: divisors are known in advance, so no content gcds
    Int g = 1, h = 1;
    for (;;) {
        int delta = static_cast<int>(r0.size()) - static_cast<int>(r1.size());
        IntVec rem = int_prem_sub(r0, r1);
        if (rem.empty()) break;
        Int div = g * boost::multiprecision::pow(h, static_cast<unsigned>(delta));
        for (auto& c : rem) c /= div;  // exact
        r0 = std::move(r1);
        r1 = std::move(rem);
        g = r0.back();
        if (delta > 0) {
            Int gp = boost::multiprecision::pow(g, static_cast<unsigned>(delta));
            h = delta > 1 ? Int(gp / boost::multiprecision::pow(h, static_cast<unsigned>(delta - 1)))
                          : gp;
        }
    }
    int_primitive(r1);
    if (!r1.empty() && r1.back() < 0)
        for (auto& c : r1) c = -c;
    return to_rat_vec(r1);
}

namespace {

using u64 = std::uint64_t;

u64 mulmod_u(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod_u(u64 a, u64 e, u64 m) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod_u(r, a, m);
        a = mulmod_u(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 reduce_mod(const Int& c, u64 m) {
    Int r = c % Int(m);
    if (r < 0) r += Int(m);
    return r.convert_to<u64>();
}

std::vector<u64> trim_mod(std::vector<u64> p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

/// a mod b over Z/m (m prime, b nonempty).
std::vector<u64> rem_mod(std::vector<u64> a, const std::vector<u64>& b, u64 m) {
    u64 inv = powmod_u(b.back(), m - 2, m);
    while (a.size() >= b.size()) {
        u64 f = mulmod_u(a.back(), inv, m);
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            u64 s = mulmod_u(f, b[i], m);
            a[off + i] = a[off + i] >= s ? a[off + i] - s : a[off + i] + m - s;
        }
        a = trim_mod(std::move(a));
    }
    return a;
}

/// True certifies gcd(p, p') is constant, so p is squarefree. A nonconstant
/// gcd reduces mod m to a nonconstant divisor of both images whenever m does
/// not divide the leading coefficient, so the test is one-sided.
bool certify_squarefree_mod(const IntVec& p) {
    for (u64 m : {2305843009213693951ull, 9223372036854775783ull}) {
        std::vector<u64> a;
        a.reserve(p.size());
        for (const auto& c : p) a.push_back(reduce_mod(c, m));
        if (a.empty() || a.back() == 0) continue;  // leading coefficient collapsed
        std::vector<u64> b;
        for (std::size_t i = 1; i < a.size(); ++i) b.push_back(mulmod_u(a[i], i % m, m));
        b = trim_mod(std::move(b));
        while (!b.empty()) {
            std::vector<u64> r = rem_mod(a, b, m);
            a = std::move(b);
            b = std::move(r);
        }
        if (a.size() == 1) return true;
    }
    return false;
}

}  // namespace

RatVector uni_squarefree(const RatVector& p) {
    RatVector q = uni_primitive(p);
    if (uni_degree(q) <= 1) return q;
    if (certify_squarefree_mod(to_int_vec(q))) return q;
    RatVector g = uni_gcd(q, uni_derivative(q));
    if (uni_degree(g) == 0) return q;
    return uni_primitive(uni_quot(q, g));
}

Rat cauchy_bound(const RatVector& p) {
    int d = uni_degree(p);
    if (d < 0) throw ZeroPolynomialError("cauchy_bound of the zero polynomial");
    Rat m = 0;
    for (int i = 0; i < d; ++i) {
        Rat a = abs(p[i] / p[d]);
        if (a > m) m = a;
    }
    return m + 1;
}

namespace {

std::vector<IntVec> int_sturm_chain(const RatVector& p) {
    std::vector<IntVec> chain;
    IntVec p0 = to_int_vec(uni_primitive(p));
    if (p0.empty()) throw ZeroPolynomialError("sturm_chain of the zero polynomial");
    chain.push_back(p0);
    IntVec p1 = to_int_vec(uni_primitive(uni_derivative(to_rat_vec(p0))));
    while (!p1.empty()) {
        chain.push_back(p1);
        // negated positive-scaled pseudo-remainder, kept primitive
        IntVec rem = int_prem(chain[chain.size() - 2], chain.back());
        for (auto& c : rem) c = -c;
        int_primitive(rem);
        p1 = std::move(rem);
    }
    return chain;
}

}  // namespace

std::vector<RatVector> sturm_chain(const RatVector& p) {
    std::vector<RatVector> chain;
    for (const auto& q : int_sturm_chain(p)) chain.push_back(to_rat_vec(q));
    return chain;
}

int sturm_variations(const std::vector<RatVector>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sgn(uni_eval(q, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int sturm_variations_inf(const std::vector<RatVector>& chain, int sign) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        int d = uni_degree(q);
        if (d < 0) continue;
        int s = sgn(q[d]);
        if (sign < 0 && d % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int sturm_count(const std::vector<RatVector>& chain, const Rat& a, const Rat& b) {
    return sturm_variations(chain, a) - sturm_variations(chain, b);
}

namespace {

/// c(x) <- c(x + 1) by repeated synthetic addition.
void taylor_shift1(IntVec& c) {
    if (c.size() < 2) return;
    for (std::size_t k = 0; k + 1 < c.size(); ++k)
        for (std::size_t j = c.size() - 1; j > k; --j) c[j - 1] += c[j];
}

int coeff_variations(const IntVec& c) {
    int var = 0, prev = 0;
    for (const auto& x : c) {
        int s = x > 0 ? 1 : (x < 0 ? -1 : 0);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

/// Descartes bound for the roots of q in the open unit interval: sign
/// variations of (1 + x)^d q(1 / (1 + x)). Conclusive at 0 and 1.
int bound_roots01(IntVec q) {
    std::reverse(q.begin(), q.end());
    taylor_shift1(q);
    return coeff_variations(q);
}

/// q(1) == 0; q <- q / (x - 1), exactly.
void deflate_at_1(IntVec& q) {
    IntVec out(q.size() - 1);
    Int carry = 0;
    for (std::size_t i = q.size(); i-- > 1;) {
        carry += q[i];
        out[i - 1] = carry;
    }
    q = std::move(out);
}

/// Vincent-Collins-Akritas bisection on a squarefree integer polynomial
/// rescaled to the unit interval; no root at either endpoint.
struct Descartes {
    std::vector<RootInterval> out;
    long budget = 0;
    long nodes = 0;

    void run(IntVec q, const Rat& lo, const Rat& hi, int depth) {
        // the depth cap also bounds coefficient growth (about deg bits per
        // level), so a multiple root fails fast instead of exhausting memory
        if (++nodes > budget || depth > 80)
            throw GaleError("root isolation failed to converge");
        int v = bound_roots01(q);
        if (v == 0) return;
        if (v == 1) {
            out.push_back({lo, hi, false});
            return;
        }
        std::size_t d = q.size() - 1;
        IntVec ql(q.size());
        for (std::size_t i = 0; i <= d; ++i) ql[i] = q[i] << (d - i);
        IntVec qr = ql;
        taylor_shift1(qr);
        Rat mid = (lo + hi) / 2;
        bool exact = false;
        while (!qr.empty() && qr[0] == 0) {
            qr.erase(qr.begin());
            deflate_at_1(ql);
            exact = true;
        }
        if (exact) out.push_back({mid, mid, true});
        run(std::move(ql), lo, mid, depth + 1);
        run(std::move(qr), mid, hi, depth + 1);
    }
};

}  // namespace

namespace {

std::vector<RootInterval> descartes_isolate(const IntVec& sf, const Rat& a, const Rat& b) {
    // rescale [a, b] to the unit interval: q(x) = D^d sf((A + C x) / D)
    Int D = lcm(denominator(a), denominator(b));
    Int A = numerator(a) * (D / denominator(a));
    Int C = numerator(b) * (D / denominator(b)) - A;
    std::size_t n = sf.size();
    std::vector<Int> dpow(n);
    dpow[0] = 1;
    for (std::size_t i = 1; i < n; ++i) dpow[i] = dpow[i - 1] * D;
    IntVec q{sf[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        IntVec next(q.size() + 1);
        for (std::size_t j = 0; j < q.size(); ++j) {
            next[j] += q[j] * A;
            next[j + 1] += q[j] * C;
        }
        next[0] += sf[i] * dpow[n - 1 - i];
        q = std::move(next);
    }

    // the interval is open: drop roots sitting at either endpoint
    while (!q.empty() && q[0] == 0) q.erase(q.begin());
    for (;;) {
        Int at1 = 0;
        for (const auto& c : q) at1 += c;
        if (at1 != 0 || q.size() < 2) break;
        deflate_at_1(q);
    }
    if (q.size() < 2) return {};

    Descartes iso;
    iso.budget = 2000 + 100 * static_cast<long>(q.size());
    iso.run(std::move(q), a, b, 0);
    std::sort(iso.out.begin(), iso.out.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return iso.out;
}

}  // namespace

std::vector<RootInterval> isolate_roots(const RatVector& p, const Rat& a, const Rat& b) {
    RatVector sf_r = uni_squarefree(p);
    if (sf_r.empty()) throw ZeroPolynomialError("isolate_roots of the zero polynomial");
    if (uni_degree(sf_r) == 0 || !(a < b)) return {};
    return descartes_isolate(to_int_vec(sf_r), a, b);
}

std::vector<RootInterval> isolate_roots_squarefree(const RatVector& p, const Rat& a,
                                                  const Rat& b) {
    RatVector pr = uni_primitive(p);
    if (pr.empty()) throw ZeroPolynomialError("isolate_roots of the zero polynomial");
    if (uni_degree(pr) == 0 || !(a < b)) return {};
    return descartes_isolate(to_int_vec(pr), a, b);
}

std::vector<RootInterval> isolate_all_roots(const RatVector& p) {
    RatVector sf = uni_squarefree(p);
    if (sf.empty()) throw ZeroPolynomialError("isolate_all_roots of the zero polynomial");
    if (uni_degree(sf) == 0) return {};
    Rat m = cauchy_bound(sf);
    return isolate_roots(sf, -m, m);
}

RootInterval refine_root(const RatVector& squarefree, RootInterval iv, const Rat& width) {
    if (iv.exact) return iv;
    IntVec sf = to_int_vec(uni_primitive(squarefree));
    int slo = int_sign_at(sf, iv.lo);
    while (iv.hi - iv.lo > width) {
        Rat m = (iv.lo + iv.hi) / 2;
        int sm = int_sign_at(sf, m);
        if (sm == 0) return {m, m, true};
        if (sm == slo)
            iv.lo = m;
        else
            iv.hi = m;
    }
    return iv;
}

}  // namespace gale
