#ifndef GRIDROOTS_FIELD_HPP
#define GRIDROOTS_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gridroots/errors.hpp"

namespace gridroots {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class FieldKind { Prime, Extension, Rational };

class FieldElem;

namespace detail {
struct FieldImpl;
}

// Immutable field description: GF(p), GF(p^e) with an explicit irreducible
// modulus, or the rationals. Copies share one interned implementation, so
// equality of the underlying arithmetic is pointer equality and elements
// may outlive any particular handle.
class Field {
  public:
    static Field prime(std::uint64_t p);
    // Modulus coefficients are given high degree first (c_e, ..., c_0),
    // monic, irreducible over GF(p). e = 1 collapses to the prime field.
    static Field extension(std::uint64_t p, unsigned e, const std::vector<std::uint64_t>& modulus);
    // Picks a fixed built-in modulus for the given prime power.
    static Field extension_default(std::uint64_t q);
    static Field rationals();

    // Accepts "gf(p)", "gf(p^e)", "gf(p^e):c_e,...,c_0", "rational".
    static Field parse(std::string_view text);
    std::string render() const;

    FieldKind kind() const;
    bool is_finite() const;
    std::uint64_t characteristic() const;  // 0 for the rationals
    unsigned extension_degree() const;     // 1 for prime fields
    std::uint64_t order() const;           // q; InfiniteField for the rationals
    // High-to-low modulus coefficients (extension fields only).
    std::vector<std::uint64_t> modulus() const;

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_int(std::int64_t v) const;
    // Finite fields: the element at position `index` in enumeration order.
    FieldElem element_at(std::uint64_t index) const;
    FieldElem parse_element(std::string_view text) const;
    // All q elements; index 0 is zero, index 1 is one, prime subfield first.
    std::vector<FieldElem> enumerate() const;

    bool operator==(const Field& other) const { return impl_ == other.impl_; }
    bool operator!=(const Field& other) const { return impl_ != other.impl_; }

    const detail::FieldImpl* impl() const { return impl_; }

  private:
    friend class FieldElem;
    explicit Field(const detail::FieldImpl* impl) : impl_(impl) {}
    const detail::FieldImpl* impl_ = nullptr;
};

// Element of a specific Field. Finite elements pack the e base-p
// coordinates into one machine word; enumeration order equals packed-value
// order. Rational elements are exact and auto-normalized.
class FieldElem {
  public:
    FieldElem() = default;  // detached zero-like placeholder; only assignable

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;  // DivisionByZero
    FieldElem operator-() const;
    FieldElem inverse() const;  // DivisionByZero
    FieldElem pow(std::int64_t n) const;

    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    // Finite fields: position in enumeration order.
    std::uint64_t index() const;
    const Rational& rational_value() const;

    std::string render() const;

  private:
    friend class Field;
    friend struct detail::FieldImpl;
    FieldElem(const detail::FieldImpl* impl, std::uint64_t packed) : impl_(impl), packed_(packed) {}
    FieldElem(const detail::FieldImpl* impl, Rational v)
        : impl_(impl), rat_(std::move(v)) {}

    const detail::FieldImpl* impl_ = nullptr;
    std::uint64_t packed_ = 0;
    Rational rat_;
};

}  // namespace gridroots

#endif
