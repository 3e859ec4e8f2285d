#include "gale/poly.hpp"

#include <algorithm>
#include <sstream>

namespace gale {

SparsePoly SparsePoly::constant(std::size_t nvars, const Rat& c) {
    SparsePoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

SparsePoly SparsePoly::variable(std::size_t nvars, std::size_t idx) {
    SparsePoly p(nvars);
    Exponents e(nvars, 0);
    e[idx] = 1;
    p.add_term(e, 1);
    return p;
}

SparsePoly SparsePoly::affine(const RatVector& coeffs, const Rat& c) {
    SparsePoly p(coeffs.size());
    p.add_term(Exponents(coeffs.size(), 0), c);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Exponents e(coeffs.size(), 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

int SparsePoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int k : e) s += k;
        d = std::max(d, s);
    }
    return d;
}

int SparsePoly::degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

void SparsePoly::add_term(const Exponents& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    SparsePoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    SparsePoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    SparsePoly out(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(nvars_);
            for (std::size_t k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

SparsePoly SparsePoly::operator*(const Rat& s) const {
    SparsePoly out(nvars_);
    if (s == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
    return out;
}

SparsePoly SparsePoly::pow(unsigned e) const {
    SparsePoly acc = constant(nvars_, 1);
    SparsePoly base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

SparsePoly SparsePoly::derivative(std::size_t var) const {
    SparsePoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        out.add_term(d, c * e[var]);
    }
    return out;
}

Rat SparsePoly::eval(const RatVector& y) const {
    Rat acc = 0;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t k = 0; k < nvars_; ++k)
            for (int r = 0; r < e[k]; ++r) t *= y[k];
        acc += t;
    }
    return acc;
}

BigFloat SparsePoly::eval(const std::vector<BigFloat>& y) const {
    BigFloat acc = 0;
    for (const auto& [e, c] : terms_) {
        BigFloat t = to_bigfloat(c);
        for (std::size_t k = 0; k < nvars_; ++k)
            if (e[k]) t *= boost::multiprecision::pow(y[k], e[k]);
        acc += t;
    }
    return acc;
}

double SparsePoly::eval(const std::vector<double>& y) const {
    double acc = 0;
    for (const auto& [e, c] : terms_) {
        double t = static_cast<double>(c);
        for (std::size_t k = 0; k < nvars_; ++k)
            if (e[k]) t *= std::pow(y[k], e[k]);
        acc += t;
    }
    return acc;
}

SparsePoly SparsePoly::substitute(std::size_t var, const Rat& point) const {
    SparsePoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int r = 0; r < e[var]; ++r) t *= point;
        Exponents d = e;
        d[var] = 0;
        out.add_term(d, t);
    }
    return out;
}

RatVector SparsePoly::restrict_line(const RatVector& base, const RatVector& dir) const {
    int deg = std::max(total_degree(), 0);
    RatVector out(deg + 1);
    for (const auto& [e, c] : terms_) {
        // expand prod_k (base_k + t dir_k)^{e_k} one factor at a time
        RatVector acc{c};
        for (std::size_t k = 0; k < nvars_; ++k) {
            for (int r = 0; r < e[k]; ++r) {
                RatVector next(acc.size() + 1);
                for (std::size_t i = 0; i < acc.size(); ++i) {
                    next[i] += acc[i] * base[k];
                    next[i + 1] += acc[i] * dir[k];
                }
                acc = std::move(next);
            }
        }
        for (std::size_t i = 0; i < acc.size(); ++i) out[i] += acc[i];
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

std::vector<SparsePoly> SparsePoly::coeffs_in(std::size_t var) const {
    int deg = degree_in(var);
    std::vector<SparsePoly> out(std::max(deg, 0) + 1, SparsePoly(nvars_));
    for (const auto& [e, c] : terms_) {
        Exponents d = e;
        int k = d[var];
        d[var] = 0;
        out[k].add_term(d, c);
    }
    return out;
}

SparsePoly SparsePoly::divide_exact(const SparsePoly& divisor) const {
    if (divisor.is_zero()) throw GaleError("divide_exact: division by zero polynomial");
    SparsePoly rem = *this;
    SparsePoly quot(nvars_);
    // lex-leading term of the divisor
    const auto& lead = *divisor.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& rl = *rem.terms_.rbegin();
        Exponents q(nvars_);
        bool divisible = true;
        for (std::size_t k = 0; k < nvars_; ++k) {
            q[k] = rl.first[k] - lead.first[k];
            if (q[k] < 0) divisible = false;
        }
        if (!divisible)
            throw GaleError("divide_exact: division leaves a remainder");
        Rat qc = rl.second / lead.second;
        SparsePoly mono(nvars_);
        mono.add_term(q, qc);
        quot = quot + mono;
        rem = rem - mono * divisor;
    }
    return quot;
}

Rat SparsePoly::max_abs_coeff() const {
    Rat m = 0;
    for (const auto& [e, c] : terms_) {
        Rat a = abs(c);
        if (a > m) m = a;
    }
    return m;
}

Rat SparsePoly::min_abs_coeff() const {
    if (terms_.empty()) return 0;
    Rat m = abs(terms_.begin()->second);
    for (const auto& [e, c] : terms_) {
        Rat a = abs(c);
        if (a < m) m = a;
    }
    return m;
}

SparsePoly SparsePoly::primitive_normalized() const {
    if (terms_.empty()) return *this;
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        num_gcd = gcd(num_gcd, numerator(c));
        den_lcm = lcm(den_lcm, denominator(c));
    }
    Rat scale(den_lcm, abs(num_gcd));
    if (terms_.rbegin()->second < 0) scale = -scale;
    return *this * scale;
}

bool SparsePoly::proportional_to(const SparsePoly& q) const {
    if (is_zero() || q.is_zero()) return is_zero() && q.is_zero();
    if (terms_.size() != q.terms_.size()) return false;
    Rat ratio = 0;
    auto it = terms_.begin();
    auto jt = q.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        Rat r = jt->second / it->second;
        if (ratio == 0)
            ratio = r;
        else if (r != ratio)
            return false;
    }
    return true;
}

std::string SparsePoly::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rat c = it->second;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rat a = abs(c);
        bool has_var = false;
        for (int k : it->first)
            if (k) has_var = true;
        if (a != 1 || !has_var) os << a;
        bool star = (a != 1);
        for (std::size_t k = 0; k < nvars_; ++k) {
            if (it->first[k] == 0) continue;
            if (star) os << "*";
            star = true;
            if (k < var_names.size())
                os << var_names[k];
            else
                os << "y" << (k + 1);
            if (it->first[k] > 1) os << "^" << it->first[k];
        }
    }
    return os.str();
}

SparsePoly determinant(const std::vector<std::vector<SparsePoly>>& m) {
    std::size_t n = m.size();
    if (n == 0) throw GaleError("determinant: empty matrix");
    std::size_t nv = m[0][0].nvars();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    // cofactor expansion along the first row; fine for the small sizes here
    SparsePoly acc(nv);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<SparsePoly>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<SparsePoly> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        SparsePoly term = m[0][j] * determinant(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace gale
