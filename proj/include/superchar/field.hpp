#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "superchar/rational.hpp"

namespace superchar {

// ---------------------------------------------------------------------------
// F_q = F_p[x]/(f), q = p^e with e <= 4.  Elements are stored as the integer
// sum(digits[i] * p^i), which is also their serialized form; arithmetic goes
// through per-field lookup tables built once at construction.
// ---------------------------------------------------------------------------

class FieldParams {
public:
    int p;
    int e;
    long long q;
    std::vector<int> modulus_poly;  // e+1 coefficients, ascending degree, monic

    // Cached accessor. The modulus is the lexicographically smallest monic
    // irreducible of degree e over F_p (coefficient vector compared from the
    // constant term up), so serialized elements are reproducible.
    static const FieldParams& get(int p, int e) {
        static std::map<std::pair<int, int>, std::unique_ptr<FieldParams>> cache;
        static std::mutex mu;
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_pair(p, e);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, std::unique_ptr<FieldParams>(new FieldParams(p, e))).first;
        return *it->second;
    }

    // Parses "p^e" or a plain prime-power integer.
    static const FieldParams& parse(const std::string& s) {
        auto caret = s.find('^');
        if (caret != std::string::npos) {
            int p = std::stoi(s.substr(0, caret));
            int e = std::stoi(s.substr(caret + 1));
            return get(p, e);
        }
        long long q = std::stoll(s);
        for (int p = 2; p <= q; ++p) {
            if (!is_prime(p)) continue;
            if (q % p) continue;
            long long r = q;
            int e = 0;
            while (r % p == 0) { r /= p; ++e; }
            if (r != 1) break;
            return get(p, e);
        }
        throw std::invalid_argument("q = " + s + " is not a prime power");
    }

    int add(int a, int b) const { return add_[a * q + b]; }
    int sub(int a, int b) const { return add_[a * q + neg_[b]]; }
    int mul(int a, int b) const { return mul_[a * q + b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const {
        if (a == 0) throw std::domain_error("division by zero in F_q");
        return inv_[a];
    }
    int div(int a, int b) const { return mul(a, inv(b)); }
    // Tr_{F_q/F_p}: t + t^p + ... + t^(p^(e-1)), landing in [0,p).
    int trace(int a) const { return trace_[a]; }

    std::vector<int> digits(int a) const {
        std::vector<int> d(e);
        for (int i = 0; i < e; ++i) { d[i] = a % p; a /= p; }
        return d;
    }

private:
    FieldParams(int p_, int e_) : p(p_), e(e_) {
        if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
        if (e < 1 || e > 4) throw std::invalid_argument("extension degree must be 1..4");
        q = 1;
        for (int i = 0; i < e; ++i) q *= p;
        modulus_poly = find_modulus();
        build_tables();
    }

    static bool is_prime(long long n) {
        if (n < 2) return false;
        for (long long d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    std::vector<int> find_modulus() const {
        if (e == 1) return {0, 1};  // x; reduction is plain mod p
        long long count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        for (long long c = 0; c < count; ++c) {
            std::vector<int> f(e + 1);
            long long t = c;
            for (int i = 0; i < e; ++i) { f[i] = (int)(t % p); t /= p; }
            f[e] = 1;
            if (poly_irreducible(f)) return f;
        }
        throw std::logic_error("no irreducible polynomial found");
    }

    // Trial division by every monic polynomial of degree 1..e/2 (e <= 4, so
    // this is at most a few hundred candidates).
    bool poly_irreducible(const std::vector<int>& f) const {
        for (int d = 1; 2 * d <= e; ++d) {
            long long count = 1;
            for (int i = 0; i < d; ++i) count *= p;
            for (long long c = 0; c < count; ++c) {
                std::vector<int> g(d + 1);
                long long t = c;
                for (int i = 0; i < d; ++i) { g[i] = (int)(t % p); t /= p; }
                g[d] = 1;
                if (poly_mod_is_zero(f, g)) return false;
            }
        }
        return true;
    }

    bool poly_mod_is_zero(std::vector<int> f, const std::vector<int>& g) const {
        int dg = (int)g.size() - 1;
        for (int k = (int)f.size() - 1; k >= dg; --k) {
            int c = f[k] % p;
            if (c == 0) continue;
            for (int i = 0; i <= dg; ++i) {
                int& t = f[k - dg + i];
                t = (int)(((long long)t - (long long)c * g[i]) % p + p) % p;
            }
        }
        for (int i = 0; i < dg; ++i)
            if (f[i] % p != 0) return false;
        return true;
    }

    void build_tables() {
        add_.resize(q * q);
        mul_.resize(q * q);
        neg_.resize(q);
        inv_.assign(q, 0);
        trace_.resize(q);
        for (long long a = 0; a < q; ++a) {
            auto da = digits((int)a);
            // negation
            std::vector<int> dn(e);
            for (int i = 0; i < e; ++i) dn[i] = (p - da[i]) % p;
            neg_[a] = pack(dn);
            for (long long b = 0; b < q; ++b) {
                auto db = digits((int)b);
                std::vector<int> ds(e);
                for (int i = 0; i < e; ++i) ds[i] = (da[i] + db[i]) % p;
                add_[a * q + b] = pack(ds);
                mul_[a * q + b] = pack(poly_mul_mod(da, db));
            }
        }
        for (long long a = 1; a < q; ++a)
            for (long long b = 1; b < q; ++b)
                if (mul_[a * q + b] == 1) { inv_[a] = (int)b; break; }
        for (long long a = 0; a < q; ++a) {
            int acc = 0, t = (int)a;
            for (int i = 0; i < e; ++i) {
                acc = add(acc, t);
                t = frob(t);
            }
            // the trace lands in the prime subfield; its value is digit 0
            trace_[a] = acc % p;
        }
    }

    int frob(int a) const {
        int r = 1 % (int)q, t = a;
        for (int i = 0; i < p; ++i) r = mul_[(long long)r * q + t];
        return r;
    }

    std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b) const {
        std::vector<int> prod(2 * e - 1, 0);
        for (int i = 0; i < e; ++i)
            for (int j = 0; j < e; ++j)
                prod[i + j] = (int)((prod[i + j] + (long long)a[i] * b[j]) % p);
        for (int k = 2 * e - 2; k >= e; --k) {
            int c = prod[k];
            if (c == 0) continue;
            prod[k] = 0;
            for (int i = 0; i < e; ++i) {
                int& t = prod[k - e + i];
                t = (int)(((long long)t - (long long)c * modulus_poly[i]) % p + p) % p;
            }
        }
        prod.resize(e);
        return prod;
    }

    int pack(const std::vector<int>& d) const {
        int v = 0;
        for (int i = e - 1; i >= 0; --i) v = v * p + d[i];
        return v;
    }

    std::vector<int> add_, mul_, neg_, inv_, trace_;
};

// A field element bound to its FieldParams. Serializes as the decimal of the
// base-p packed integer.
class FieldScalar {
public:
    FieldScalar() : f_(nullptr), v_(0) {}
    FieldScalar(const FieldParams& f, int v) : f_(&f), v_(v) {
        if (v < 0 || v >= f.q) throw std::out_of_range("field element out of range");
    }

    const FieldParams& field() const { return *f_; }
    int value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    std::vector<int> digits() const { return f_->digits(v_); }

    FieldScalar operator+(const FieldScalar& o) const { return FieldScalar(*f_, f_->add(v_, o.v_)); }
    FieldScalar operator-(const FieldScalar& o) const { return FieldScalar(*f_, f_->sub(v_, o.v_)); }
    FieldScalar operator*(const FieldScalar& o) const { return FieldScalar(*f_, f_->mul(v_, o.v_)); }
    FieldScalar operator-() const { return FieldScalar(*f_, f_->neg(v_)); }
    FieldScalar inv() const { return FieldScalar(*f_, f_->inv(v_)); }
    friend bool operator==(const FieldScalar& a, const FieldScalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const FieldScalar& a, const FieldScalar& b) { return a.v_ != b.v_; }

    int trace_to_prime() const { return f_->trace(v_); }

    std::string str() const { return std::to_string(v_); }

private:
    const FieldParams* f_;
    int v_;
};

// ---------------------------------------------------------------------------
// Exact elements of Q(zeta_p): rational coefficients of 1, zeta, ..., zeta^(p-2)
// with the relation 1 + zeta + ... + zeta^(p-1) = 0 eliminating zeta^(p-1).
// ---------------------------------------------------------------------------

class CycNumber {
public:
    CycNumber() : p_(2), c_(1) {}
    explicit CycNumber(int p) : p_(p), c_(p - 1) {}
    CycNumber(int p, const Rational& r) : p_(p), c_(p - 1) { c_[0] = r; }

    static CycNumber zero(int p) { return CycNumber(p); }
    static CycNumber one(int p) { return CycNumber(p, Rational(1)); }

    // zeta_p^k (k taken mod p), reduced into the canonical basis.
    static CycNumber zeta_pow(int p, long long k) {
        CycNumber z(p);
        long long r = ((k % p) + p) % p;
        if (r < p - 1) {
            z.c_[r] = Rational(1);
        } else {
            for (int i = 0; i < p - 1; ++i) z.c_[i] = Rational(-1);
        }
        return z;
    }

    int p() const { return p_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (auto& r : c_)
            if (!r.is_zero()) return false;
        return true;
    }

    bool is_rational() const {
        for (int i = 1; i < p_ - 1; ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    Rational rational_part() const { return c_[0]; }

    CycNumber operator+(const CycNumber& o) const {
        check(o);
        CycNumber r(p_);
        for (int i = 0; i < p_ - 1; ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }
    CycNumber operator-(const CycNumber& o) const {
        check(o);
        CycNumber r(p_);
        for (int i = 0; i < p_ - 1; ++i) r.c_[i] = c_[i] - o.c_[i];
        return r;
    }
    CycNumber operator-() const {
        CycNumber r(p_);
        for (int i = 0; i < p_ - 1; ++i) r.c_[i] = -c_[i];
        return r;
    }
    CycNumber operator*(const CycNumber& o) const {
        check(o);
        // convolve exponents mod p, then eliminate the zeta^(p-1) coordinate
        std::vector<Rational> full(p_);
        for (int i = 0; i < p_ - 1; ++i) {
            if (c_[i].is_zero()) continue;
            for (int j = 0; j < p_ - 1; ++j) {
                if (o.c_[j].is_zero()) continue;
                full[(i + j) % p_] += c_[i] * o.c_[j];
            }
        }
        CycNumber r(p_);
        for (int i = 0; i < p_ - 1; ++i) r.c_[i] = full[i] - full[p_ - 1];
        return r;
    }
    CycNumber operator*(const Rational& s) const {
        CycNumber r(p_);
        for (int i = 0; i < p_ - 1; ++i) r.c_[i] = c_[i] * s;
        return r;
    }
    CycNumber& operator+=(const CycNumber& o) { return *this = *this + o; }
    CycNumber& operator*=(const CycNumber& o) { return *this = *this * o; }

    // complex conjugation: zeta -> zeta^(p-1)
    CycNumber conj() const {
        std::vector<Rational> full(p_);
        for (int i = 0; i < p_ - 1; ++i) full[(p_ - i) % p_] = c_[i];
        CycNumber r(p_);
        for (int i = 0; i < p_ - 1; ++i) r.c_[i] = full[i] - full[p_ - 1];
        return r;
    }

    friend bool operator==(const CycNumber& a, const CycNumber& b) {
        if (a.p_ != b.p_) return false;
        for (int i = 0; i < a.p_ - 1; ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }
    friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

    // Serialization: the p-1 rationals joined by commas.
    std::string str() const {
        std::string s;
        for (int i = 0; i < p_ - 1; ++i) {
            if (i) s += ",";
            s += c_[i].str();
        }
        return s;
    }

    // Human-readable "a + b z + c z^2" form, z = zeta_p.
    std::string pretty() const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = 0; i < p_ - 1; ++i) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            if (i == 0) {
                s += c_[i].str();
            } else {
                if (c_[i] != Rational(1)) s += c_[i].str() + "*";
                s += "z";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }
    friend std::ostream& operator<<(std::ostream& os, const CycNumber& z) { return os << z.pretty(); }

private:
    void check(const CycNumber& o) const {
        if (p_ != o.p_) throw std::invalid_argument("cyclotomic order mismatch");
    }

    int p_;
    std::vector<Rational> c_;
};

// theta(t) = zeta_p^Tr(t): the pinned nontrivial additive character of F_q.
inline CycNumber theta(const FieldScalar& t) {
    return CycNumber::zeta_pow(t.field().p, t.trace_to_prime());
}

}  // namespace superchar
