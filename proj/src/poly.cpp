#include "gspeyer/poly.hpp"

#include <stdexcept>

namespace gspeyer {

namespace {
const Int kZero = 0;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(Int v) {
    Poly p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
}

Poly Poly::monomial(int degree, Int coeff) {
    Poly p;
    if (coeff != 0) {
        p.c_.assign(degree + 1, 0);
        p.c_[degree] = std::move(coeff);
    }
    return p;
}

const Int& Poly::operator[](int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[k];
}

Poly& Poly::operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Int& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    Poly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

Poly Poly::operator*(const Int& s) const {
    Poly r = *this;
    r *= s;
    return r;
}

void Poly::add_scaled(const Poly& o, const Int& s) {
    if (s == 0 || o.is_zero()) return;
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += s * o.c_[i];
    trim();
}

Poly Poly::derivative() const {
    Poly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Int(i);
    r.trim();
    return r;
}

Int Poly::evaluate(const Int& x) const {
    Int r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Poly Poly::divide_by_power(int k) const {
    if (is_zero()) return {};
    if (static_cast<int>(c_.size()) <= k)
        throw std::invalid_argument("divide_by_power: degree too small");
    for (int i = 0; i < k; ++i)
        if (c_[i] != 0) throw std::invalid_argument("divide_by_power: not divisible by t^k");
    Poly r;
    r.c_.assign(c_.begin() + k, c_.end());
    return r;
}

Poly Poly::shift_argument(const Int& shift) const {
    // Synthetic division by (t - shift), repeated.
    std::vector<Int> a = c_;
    int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i)
        for (int j = n - 2; j >= i; --j) a[j] += shift * a[j + 1];
    Poly r;
    r.c_ = std::move(a);
    r.trim();
    return r;
}

Poly Poly::compose(const Poly& p) const {
    Poly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = r * p;
        r += Poly::constant(*it);
    }
    return r;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Int& c = c_[k];
        if (c == 0) continue;
        Int a = c < 0 ? Int(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? "-" : "+";
        bool unit = (a == 1);
        if (k == 0) {
            out += a.str();
        } else {
            if (!unit) out += a.str() + "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

Int binomial(int n, int k) {
    if (k == 0) return 1;
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace gspeyer
