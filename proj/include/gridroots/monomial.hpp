#ifndef GRIDROOTS_MONOMIAL_HPP
#define GRIDROOTS_MONOMIAL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gridroots/errors.hpp"

namespace gridroots {

// Monomial in m variables, stored as its exponent vector. X1 is index 0.
class Monomial {
  public:
    explicit Monomial(std::vector<int> exps);
    static Monomial unit(int m);

    int dim() const { return static_cast<int>(e_.size()); }
    int exp(int i) const { return e_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& exps() const { return e_; }
    long long degree() const;

    bool divides(const Monomial& n) const;
    Monomial operator*(const Monomial& o) const;
    // Exact division; requires o | *this.
    Monomial div(const Monomial& o) const;
    static Monomial gcd(const Monomial& a, const Monomial& b);
    static Monomial lcm(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }
    // Container order only (plain vector comparison), not a monomial order.
    bool operator<(const Monomial& o) const { return e_ < o.e_; }

    // "X1^3*X2"; the unit renders as "1".
    std::string text() const;
    // dim_hint = -1 infers the dimension from the largest variable index.
    static Monomial parse_text(std::string_view text, int dim_hint = -1);

  private:
    std::vector<int> e_;
};

enum class OrderKind { Lex, DegLex, DegRevLex };

// Monomial order: lex, deglex or degrevlex together with an explicit
// variable significance permutation. perm[0] is the least significant
// variable; "deglex:X1<X2" puts X2 in charge of lex tie-breaks.
class MonomialOrder {
  public:
    MonomialOrder(OrderKind kind, std::vector<int> perm_least_first);
    static MonomialOrder lex(int m);
    static MonomialOrder deglex(int m);
    static MonomialOrder degrevlex(int m);
    // "deglex:X1<X2", "lex:X2<X1", ...
    static MonomialOrder parse(std::string_view text);
    std::string render() const;

    OrderKind order_kind() const { return kind_; }
    int dim() const { return static_cast<int>(perm_.size()); }
    const std::vector<int>& significance() const { return perm_; }
    bool graded() const { return kind_ != OrderKind::Lex; }

    // -1, 0, 1 for a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && perm_ == o.perm_;
    }

  private:
    OrderKind kind_;
    std::vector<int> perm_;
};

// Finite box of monomials: exponent i ranges over 0 .. caps[i]-1.
class BoxRegion {
  public:
    explicit BoxRegion(std::vector<int> caps);

    int dim() const { return static_cast<int>(caps_.size()); }
    int cap(int i) const { return caps_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& caps() const { return caps_; }
    long long count() const;
    bool contains(const Monomial& mon) const;
    Monomial apex() const;  // componentwise maximum member

    // Row-major, last variable fastest.
    std::vector<Monomial> members() const;
    std::vector<Monomial> sorted_members(const MonomialOrder& order) const;

    bool operator==(const BoxRegion& o) const { return caps_ == o.caps_; }

  private:
    std::vector<int> caps_;
};

// Number of monomials dividing at least one of the given ones.
// Inclusion-exclusion over subset gcds, cross-checked against direct
// enumeration whenever that is affordable; disagreement is a defect.
long long mu(const std::vector<Monomial>& ns);
long long mu_enumerate(const std::vector<Monomial>& ns);

// Number of box members divisible by at least one of the given monomials.
// Inclusion-exclusion over subset lcms, cross-checked like mu.
long long sigma(const BoxRegion& box, const std::vector<Monomial>& ms);
long long sigma_enumerate(const BoxRegion& box, const std::vector<Monomial>& ms);

// The reflected monomial with exponents caps[i]-1-e[i].
Monomial complement_in(const BoxRegion& box, const Monomial& mon);

// t consecutive monomials starting at `start`: within the sorted box if one
// is given, otherwise in the full order.
std::vector<Monomial> consecutive_chain(const MonomialOrder& order,
                                        const std::optional<BoxRegion>& box,
                                        const Monomial& start, int t);

// Number of box members of total degree at most d.
long long rm_dimension(const BoxRegion& box, long long d);

// All monomials in m variables of total degree exactly d, in no particular
// order.
std::vector<Monomial> degree_slice(int m, long long d);

}  // namespace gridroots

#endif
