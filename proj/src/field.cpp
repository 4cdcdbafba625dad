#include "gridroots/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace gridroots {
namespace detail {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p > 1000000000000ULL) fail("UnsupportedDegree", "characteristic too large to validate");
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

// Dense polynomials over GF(p), coefficients low degree first.
using PPoly = std::vector<std::uint64_t>;

int pdeg(const PPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

// Remainder of f by monic g.
PPoly prem(PPoly f, const PPoly& g, std::uint64_t p) {
    int dg = pdeg(g);
    for (int i = pdeg(f); i >= dg; i = pdeg(f)) {
        std::uint64_t c = f[i];
        for (int j = 0; j <= dg; ++j) {
            std::uint64_t t = mulmod(c, g[j], p);
            std::uint64_t& x = f[i - dg + j];
            x = (x + p - t) % p;
        }
    }
    return f;
}

bool divides_poly(const PPoly& g, const PPoly& f, std::uint64_t p) {
    return pdeg(prem(f, g, p)) < 0;
}

// Exhaustive trial division by all monic factors of degree <= e/2.
bool is_irreducible(const PPoly& mod_low, std::uint64_t p, unsigned e) {
    std::uint64_t budget = 0;
    for (unsigned d = 1; 2 * d <= e; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) {
            count *= p;
            if (count > 4000000ULL)
                fail("UnsupportedDegree", "irreducibility check budget exceeded");
        }
        budget += count;
        if (budget > 4000000ULL)
            fail("UnsupportedDegree", "irreducibility check budget exceeded");
        PPoly g(d + 1, 0);
        g[d] = 1;
        for (std::uint64_t packed = 0; packed < count; ++packed) {
            std::uint64_t v = packed;
            for (unsigned i = 0; i < d; ++i) {
                g[i] = v % p;
                v /= p;
            }
            if (divides_poly(g, mod_low, p)) return false;
        }
    }
    return true;
}

}  // namespace

struct FieldImpl {
    FieldKind kind = FieldKind::Rational;
    std::uint64_t p = 0;
    unsigned e = 1;
    std::uint64_t q = 0;
    std::vector<std::uint64_t> mod_low;  // monic, size e + 1; extensions only

    bool tables = false;
    std::vector<std::uint16_t> add_tab, mul_tab, neg_tab, inv_tab;

    void unpack(std::uint64_t v, std::uint64_t* digits) const {
        for (unsigned i = 0; i < e; ++i) {
            digits[i] = v % p;
            v /= p;
        }
    }

    std::uint64_t pack(const std::uint64_t* digits) const {
        std::uint64_t v = 0;
        for (unsigned i = e; i-- > 0;) v = v * p + digits[i];
        return v;
    }

    std::uint64_t add_slow(std::uint64_t a, std::uint64_t b) const {
        if (e == 1) return (a + b) % p;
        std::uint64_t da[64], db[64];
        unpack(a, da);
        unpack(b, db);
        for (unsigned i = 0; i < e; ++i) da[i] = (da[i] + db[i]) % p;
        return pack(da);
    }

    std::uint64_t neg_slow(std::uint64_t a) const {
        if (e == 1) return a == 0 ? 0 : p - a;
        std::uint64_t da[64];
        unpack(a, da);
        for (unsigned i = 0; i < e; ++i) da[i] = da[i] == 0 ? 0 : p - da[i];
        return pack(da);
    }

    std::uint64_t mul_slow(std::uint64_t a, std::uint64_t b) const {
        if (e == 1) return mulmod(a, b, p);
        std::uint64_t da[64], db[64];
        unpack(a, da);
        unpack(b, db);
        std::vector<std::uint64_t> prod(2 * e - 1, 0);
        for (unsigned i = 0; i < e; ++i) {
            if (da[i] == 0) continue;
            for (unsigned j = 0; j < e; ++j)
                prod[i + j] = (prod[i + j] + mulmod(da[i], db[j], p)) % p;
        }
        for (unsigned i = 2 * e - 2; i >= e; --i) {
            std::uint64_t c = prod[i];
            if (c == 0) continue;
            prod[i] = 0;
            for (unsigned j = 0; j < e; ++j) {
                std::uint64_t t = mulmod(c, mod_low[j], p);
                prod[i - e + j] = (prod[i - e + j] + p - t) % p;
            }
        }
        return pack(prod.data());
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        return tables ? add_tab[a * q + b] : add_slow(a, b);
    }
    std::uint64_t neg(std::uint64_t a) const { return tables ? neg_tab[a] : neg_slow(a); }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return tables ? mul_tab[a * q + b] : mul_slow(a, b);
    }

    std::uint64_t pow(std::uint64_t a, std::uint64_t n) const {
        std::uint64_t r = 1;
        while (n) {
            if (n & 1) r = mul(r, a);
            a = mul(a, a);
            n >>= 1;
        }
        return r;
    }

    std::uint64_t inv(std::uint64_t a) const {
        if (a == 0) fail("DivisionByZero", "inverse of zero");
        if (tables) return inv_tab[a];
        return pow(a, q - 2);
    }

    void build_tables() {
        if (q > 512) return;
        add_tab.resize(q * q);
        mul_tab.resize(q * q);
        neg_tab.resize(q);
        inv_tab.resize(q);
        for (std::uint64_t a = 0; a < q; ++a) {
            neg_tab[a] = static_cast<std::uint16_t>(neg_slow(a));
            for (std::uint64_t b = 0; b < q; ++b) {
                add_tab[a * q + b] = static_cast<std::uint16_t>(add_slow(a, b));
                mul_tab[a * q + b] = static_cast<std::uint16_t>(mul_slow(a, b));
            }
        }
        tables = true;
        for (std::uint64_t a = 1; a < q; ++a) inv_tab[a] = static_cast<std::uint16_t>(pow(a, q - 2));
    }
};

namespace {

std::map<std::string, std::unique_ptr<FieldImpl>>& registry() {
    static std::map<std::string, std::unique_ptr<FieldImpl>> r;
    return r;
}
std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

const FieldImpl* intern(const std::string& key, std::unique_ptr<FieldImpl> fresh) {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto& r = registry();
    auto it = r.find(key);
    if (it == r.end()) it = r.emplace(key, std::move(fresh)).first;
    return it->second.get();
}

const FieldImpl* rational_impl() {
    static FieldImpl impl;  // defaults describe the rationals
    return &impl;
}

}  // namespace
}  // namespace detail

using detail::FieldImpl;

Field Field::prime(std::uint64_t p) {
    if (!detail::is_prime(p)) fail("NonPrimeCharacteristic", std::to_string(p) + " is not prime");
    std::string key = "p:" + std::to_string(p);
    {
        std::lock_guard<std::mutex> lock(detail::registry_mutex());
        auto it = detail::registry().find(key);
        if (it != detail::registry().end()) return Field(it->second.get());
    }
    auto impl = std::make_unique<FieldImpl>();
    impl->kind = FieldKind::Prime;
    impl->p = p;
    impl->e = 1;
    impl->q = p;
    impl->build_tables();
    return Field(detail::intern(key, std::move(impl)));
}

Field Field::extension(std::uint64_t p, unsigned e, const std::vector<std::uint64_t>& modulus) {
    if (!detail::is_prime(p)) fail("NonPrimeCharacteristic", std::to_string(p) + " is not prime");
    if (e < 1) fail("UnsupportedDegree", "extension degree must be at least 1");
    if (e > 8) fail("UnsupportedDegree", "extension degree above 8 is not supported");
    if (modulus.size() != e + 1) fail("ParseError", "modulus must list e+1 coefficients");
    std::vector<std::uint64_t> low(e + 1);
    for (unsigned i = 0; i <= e; ++i) low[i] = modulus[e - i] % p;
    if (low[e] != 1) fail("ReducibleModulus", "modulus must be monic");
    if (e == 1) return prime(p);  // x + c defines the prime field itself
    if (!detail::is_irreducible(low, p, e))
        fail("ReducibleModulus", "modulus factors over gf(" + std::to_string(p) + ")");

    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (q > (1ULL << 62) / p) fail("UnsupportedDegree", "field order too large");
        q *= p;
    }
    std::string key = "x:" + std::to_string(p) + ":" + std::to_string(e);
    for (unsigned i = 0; i <= e; ++i) key += ":" + std::to_string(low[i]);
    {
        std::lock_guard<std::mutex> lock(detail::registry_mutex());
        auto it = detail::registry().find(key);
        if (it != detail::registry().end()) return Field(it->second.get());
    }
    auto impl = std::make_unique<FieldImpl>();
    impl->kind = FieldKind::Extension;
    impl->p = p;
    impl->e = e;
    impl->q = q;
    impl->mod_low = low;
    impl->build_tables();
    return Field(detail::intern(key, std::move(impl)));
}

Field Field::extension_default(std::uint64_t q) {
    std::uint64_t p = 0;
    unsigned e = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            std::uint64_t r = q;
            while (r % d == 0) {
                r /= d;
                ++e;
            }
            if (r != 1) fail("NonPrimeCharacteristic", std::to_string(q) + " is not a prime power");
            break;
        }
    }
    if (p == 0) return prime(q);  // q itself prime
    if (e > 8) fail("UnsupportedDegree", "extension degree above 8 is not supported");
    // Default modulus: the first monic irreducible in enumeration order of
    // the low e coefficients.
    std::uint64_t count = 1;
    for (unsigned i = 0; i < e; ++i) count *= p;
    detail::PPoly mod(e + 1, 0);
    mod[e] = 1;
    for (std::uint64_t packed = 0; packed < count; ++packed) {
        std::uint64_t v = packed;
        for (unsigned i = 0; i < e; ++i) {
            mod[i] = v % p;
            v /= p;
        }
        if (detail::is_irreducible(mod, p, e)) {
            std::vector<std::uint64_t> high(e + 1);
            for (unsigned i = 0; i <= e; ++i) high[i] = mod[e - i];
            return extension(p, e, high);
        }
    }
    fail("InternalCheck", "no irreducible modulus found");  // unreachable
}

Field Field::rationals() { return Field(detail::rational_impl()); }

FieldKind Field::kind() const { return impl_->kind; }
bool Field::is_finite() const { return impl_->kind != FieldKind::Rational; }
std::uint64_t Field::characteristic() const { return impl_->p; }
unsigned Field::extension_degree() const { return impl_->e; }

std::uint64_t Field::order() const {
    if (!is_finite()) fail("InfiniteField", "the rationals have no finite order");
    return impl_->q;
}

std::vector<std::uint64_t> Field::modulus() const {
    if (impl_->kind != FieldKind::Extension) fail("InfiniteField", "field has no extension modulus");
    std::vector<std::uint64_t> high(impl_->e + 1);
    for (unsigned i = 0; i <= impl_->e; ++i) high[i] = impl_->mod_low[impl_->e - i];
    return high;
}

FieldElem Field::zero() const {
    if (!is_finite()) return FieldElem(impl_, Rational(0));
    return FieldElem(impl_, 0);
}

FieldElem Field::one() const {
    if (!is_finite()) return FieldElem(impl_, Rational(1));
    return FieldElem(impl_, 1);
}

FieldElem Field::from_int(std::int64_t v) const {
    if (!is_finite()) return FieldElem(impl_, Rational(v));
    std::int64_t p = static_cast<std::int64_t>(impl_->p);
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return FieldElem(impl_, static_cast<std::uint64_t>(r));
}

FieldElem Field::element_at(std::uint64_t index) const {
    if (!is_finite()) fail("InfiniteField", "cannot index elements of the rationals");
    if (index >= impl_->q) fail("IndexOutOfRange", "element index exceeds field order");
    return FieldElem(impl_, index);
}

std::vector<FieldElem> Field::enumerate() const {
    if (!is_finite()) fail("InfiniteField", "cannot enumerate the rationals");
    std::vector<FieldElem> out;
    out.reserve(impl_->q);
    for (std::uint64_t v = 0; v < impl_->q; ++v) out.push_back(FieldElem(impl_, v));
    return out;
}

namespace {

std::string strip_spaces(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    return s;
}

std::uint64_t parse_u64(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        fail("ParseError", "expected an unsigned integer, got '" + s + "'");
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        fail("ParseError", "integer out of range: '" + s + "'");
    }
}

}  // namespace

Field Field::parse(std::string_view text) {
    std::string s = strip_spaces(text);
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (s == "rational" || s == "rationals" || s == "q") return rationals();
    if (s.rfind("gf(", 0) != 0) fail("ParseError", "unrecognized field spec '" + std::string(text) + "'");
    auto close = s.find(')');
    if (close == std::string::npos) fail("ParseError", "missing ')' in field spec");
    std::string inside = s.substr(3, close - 3);
    std::string rest = s.substr(close + 1);

    std::uint64_t p;
    unsigned e = 1;
    auto caret = inside.find('^');
    if (caret == std::string::npos) {
        p = parse_u64(inside);
    } else {
        p = parse_u64(inside.substr(0, caret));
        std::uint64_t ee = parse_u64(inside.substr(caret + 1));
        if (ee < 1 || ee > 64) fail("UnsupportedDegree", "extension degree out of range");
        e = static_cast<unsigned>(ee);
    }

    if (rest.empty()) {
        if (caret == std::string::npos) {
            // gf(n): prime, or a prime power with the default modulus.
            if (detail::is_prime(p)) return prime(p);
            return extension_default(p);
        }
        if (e == 1) return prime(p);
        std::uint64_t q = 1;
        for (unsigned i = 0; i < e; ++i) {
            if (q > (1ULL << 62) / p) fail("UnsupportedDegree", "field order too large");
            q *= p;
        }
        return extension_default(q);
    }
    if (rest[0] != ':') fail("ParseError", "expected ':' before modulus coefficients");
    std::vector<std::uint64_t> coefs;
    std::stringstream ss(rest.substr(1));
    std::string item;
    while (std::getline(ss, item, ',')) coefs.push_back(parse_u64(item));
    if (caret == std::string::npos) fail("ParseError", "modulus given without an extension degree");
    return extension(p, e, coefs);
}

std::string Field::render() const {
    switch (impl_->kind) {
        case FieldKind::Rational:
            return "rational";
        case FieldKind::Prime:
            return "gf(" + std::to_string(impl_->p) + ")";
        case FieldKind::Extension: {
            std::string s =
                "gf(" + std::to_string(impl_->p) + "^" + std::to_string(impl_->e) + "):";
            for (unsigned i = 0; i <= impl_->e; ++i) {
                if (i) s += ",";
                s += std::to_string(impl_->mod_low[impl_->e - i]);
            }
            return s;
        }
    }
    return "";
}

// ---- elements ----

namespace {

const FieldImpl* require_same(const FieldElem& a, const FieldElem& b,
                              const FieldImpl* ia, const FieldImpl* ib) {
    (void)a;
    (void)b;
    if (ia == nullptr || ib == nullptr) fail("SpecMismatch", "operation on detached element");
    if (ia != ib) fail("SpecMismatch", "elements belong to different fields");
    return ia;
}

}  // namespace

FieldElem Field::parse_element(std::string_view text) const {
    std::string s = strip_spaces(text);
    if (s.empty()) fail("ParseError", "empty element literal");
    if (impl_->kind == FieldKind::Rational) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return FieldElem(impl_, Rational(BigInt(s)));
            BigInt num(s.substr(0, slash));
            BigInt den(s.substr(slash + 1));
            if (den == 0) fail("DivisionByZero", "zero denominator in '" + s + "'");
            return FieldElem(impl_, Rational(num, den));
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            fail("ParseError", "bad rational literal '" + s + "'");
        }
    }
    if (impl_->kind == FieldKind::Prime || s.find('x') == std::string::npos) {
        // Integer literal, reduced into the prime subfield.
        bool neg = s[0] == '-';
        std::string digits = neg ? s.substr(1) : s;
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            fail("ParseError", "bad element literal '" + s + "'");
        std::uint64_t r = 0;
        for (char c : digits) r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % impl_->p;
        if (neg && r != 0) r = impl_->p - r;
        return FieldElem(impl_, r);
    }
    // Polynomial in x over the prime subfield, e.g. "x^2+2*x+1".
    std::vector<std::uint64_t> digits(impl_->e, 0);
    std::size_t i = 0;
    bool any = false;
    while (i < s.size()) {
        std::uint64_t sign = 1;
        if (s[i] == '+') {
            ++i;
        } else if (s[i] == '-') {
            sign = impl_->p - 1;
            ++i;
        }
        if (i >= s.size()) fail("ParseError", "dangling sign in '" + s + "'");
        std::uint64_t coef = 1;
        bool saw_coef = false;
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::uint64_t v = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                v = (v * 10 + static_cast<std::uint64_t>(s[i] - '0')) % impl_->p;
                ++i;
            }
            coef = v;
            saw_coef = true;
        }
        if (i < s.size() && s[i] == '*') ++i;
        unsigned deg = 0;
        if (i < s.size() && s[i] == 'x') {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                    fail("ParseError", "bad exponent in '" + s + "'");
                std::uint64_t d = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    d = d * 10 + static_cast<std::uint64_t>(s[i] - '0');
                    if (d > 64) fail("ParseError", "exponent too large in '" + s + "'");
                    ++i;
                }
                deg = static_cast<unsigned>(d);
            }
        } else if (!saw_coef) {
            fail("ParseError", "bad element literal '" + s + "'");
        }
        if (deg >= impl_->e)
            fail("ParseError", "degree " + std::to_string(deg) + " exceeds field degree");
        digits[deg] = (digits[deg] + detail::mulmod(sign, coef, impl_->p)) % impl_->p;
        any = true;
    }
    if (!any) fail("ParseError", "bad element literal '" + s + "'");
    return FieldElem(impl_, impl_->pack(digits.data()));
}

Field FieldElem::field() const {
    internal_check(impl_ != nullptr, "detached field element");
    return Field(impl_);
}

bool FieldElem::is_zero() const {
    internal_check(impl_ != nullptr, "detached field element");
    return impl_->kind == FieldKind::Rational ? rat_ == 0 : packed_ == 0;
}

bool FieldElem::is_one() const {
    internal_check(impl_ != nullptr, "detached field element");
    return impl_->kind == FieldKind::Rational ? rat_ == 1 : packed_ == 1;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    auto* f = require_same(*this, o, impl_, o.impl_);
    if (f->kind == FieldKind::Rational) return FieldElem(f, rat_ + o.rat_);
    return FieldElem(f, f->add(packed_, o.packed_));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    auto* f = require_same(*this, o, impl_, o.impl_);
    if (f->kind == FieldKind::Rational) return FieldElem(f, rat_ - o.rat_);
    return FieldElem(f, f->add(packed_, f->neg(o.packed_)));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    auto* f = require_same(*this, o, impl_, o.impl_);
    if (f->kind == FieldKind::Rational) return FieldElem(f, rat_ * o.rat_);
    return FieldElem(f, f->mul(packed_, o.packed_));
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    auto* f = require_same(*this, o, impl_, o.impl_);
    if (f->kind == FieldKind::Rational) {
        if (o.rat_ == 0) fail("DivisionByZero", "division by zero");
        return FieldElem(f, rat_ / o.rat_);
    }
    return FieldElem(f, f->mul(packed_, f->inv(o.packed_)));
}

FieldElem FieldElem::operator-() const {
    internal_check(impl_ != nullptr, "detached field element");
    if (impl_->kind == FieldKind::Rational) return FieldElem(impl_, -rat_);
    return FieldElem(impl_, impl_->neg(packed_));
}

FieldElem FieldElem::inverse() const {
    internal_check(impl_ != nullptr, "detached field element");
    if (impl_->kind == FieldKind::Rational) {
        if (rat_ == 0) fail("DivisionByZero", "inverse of zero");
        return FieldElem(impl_, 1 / rat_);
    }
    return FieldElem(impl_, impl_->inv(packed_));
}

FieldElem FieldElem::pow(std::int64_t n) const {
    internal_check(impl_ != nullptr, "detached field element");
    if (n < 0) return inverse().pow(-n);
    if (impl_->kind == FieldKind::Rational) {
        Rational r = 1;
        Rational base = rat_;
        std::uint64_t k = static_cast<std::uint64_t>(n);
        while (k) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return FieldElem(impl_, r);
    }
    return FieldElem(impl_, impl_->pow(packed_, static_cast<std::uint64_t>(n)));
}

bool FieldElem::operator==(const FieldElem& o) const {
    auto* f = require_same(*this, o, impl_, o.impl_);
    return f->kind == FieldKind::Rational ? rat_ == o.rat_ : packed_ == o.packed_;
}

std::uint64_t FieldElem::index() const {
    internal_check(impl_ != nullptr, "detached field element");
    if (impl_->kind == FieldKind::Rational) fail("InfiniteField", "rationals are not indexed");
    return packed_;
}

const Rational& FieldElem::rational_value() const {
    internal_check(impl_ != nullptr, "detached field element");
    if (impl_->kind != FieldKind::Rational) fail("ParseError", "element is not rational");
    return rat_;
}

std::string FieldElem::render() const {
    internal_check(impl_ != nullptr, "detached field element");
    if (impl_->kind == FieldKind::Rational) {
        std::ostringstream os;
        os << rat_;
        return os.str();
    }
    if (impl_->kind == FieldKind::Prime) return std::to_string(packed_);
    std::uint64_t digits[64];
    impl_->unpack(packed_, digits);
    std::string s;
    for (unsigned i = impl_->e; i-- > 0;) {
        if (digits[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(digits[i]);
        } else {
            if (digits[i] != 1) s += std::to_string(digits[i]) + "*";
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

}  // namespace gridroots
