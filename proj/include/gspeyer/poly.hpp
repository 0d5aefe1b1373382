#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace gspeyer {

using Int = boost::multiprecision::cpp_int;

/// Dense univariate polynomial with exact integer coefficients,
/// stored lowest degree first (coeffs[k] is the coefficient of t^k).
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(Int v);
    static Poly monomial(int degree, Int coeff = 1);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Int& operator[](int k) const;                             // 0 outside range
    const std::vector<Int>& coeffs() const { return c_; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Int& s);
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Int& s) const;
    bool operator==(const Poly&) const = default;

    // this += s * o, without temporaries
    void add_scaled(const Poly& o, const Int& s);

    Poly derivative() const;
    Int evaluate(const Int& x) const;
    /// Polynomial division by t^k; throws unless the low coefficients vanish.
    Poly divide_by_power(int k) const;
    /// Substitute t -> t + shift (exact Taylor shift).
    Poly shift_argument(const Int& shift) const;
    /// Substitute t -> p(t).
    Poly compose(const Poly& p) const;

    /// Corpus serialization: descending powers, "c*t^k", "t^k" for c=1,
    /// "t" for degree one, terms joined by "+"/"-"; "0" for the zero polynomial.
    std::string to_string(const std::string& var = "t") const;

  private:
    std::vector<Int> c_;
    void trim();
};

Int binomial(int n, int k);
Int factorial(int n);

}  // namespace gspeyer
