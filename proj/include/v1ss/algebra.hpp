#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "v1ss/fp.hpp"

namespace v1ss {

enum class GenKind { Exterior, Polynomial, Truncated, Laurent, DividedPower };

const char* kind_name(GenKind k);
std::optional<GenKind> kind_from_name(const std::string& s);

struct GeneratorSpec {
    std::string name;
    i64 s = 0, t = 0;
    GenKind kind = GenKind::Polynomial;
    int height = 0;           /* truncated only, >= 2 */
    bool annihilated = false; /* module fact: any multiple of this class is zero */

    bool odd() const { return ((s + t) % 2 + 2) % 2 == 1; }
};

/* Exponent tuples constrained to an explicit allowed list, used for module
 * factors like the rank-2p basis of V(1)_* THH(l/p) over V(1)_* THH(l). */
struct SpanConstraint {
    std::vector<int> gens;                    /* indices into Presentation::gens */
    std::vector<std::vector<int>> allowed;    /* allowed exponent tuples */
};

struct Window {
    i64 smin = 0, smax = 0, tmin = 0, tmax = 0;
    bool contains(i64 s, i64 t) const
    {
        return s >= smin && s <= smax && t >= tmin && t <= tmax;
    }
};

using Expo = std::vector<int16_t>;

struct ExpoHash {
    size_t operator()(const Expo& e) const
    {
        size_t h = 1469598103934665603ull;
        for (int16_t v : e) {
            h ^= static_cast<size_t>(static_cast<uint16_t>(v));
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct Monomial {
    Expo e;
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator<(const Monomial& o) const { return e < o.e; }
};

struct Term {
    Monomial m;
    i64 c;
};

/* sorted by monomial, no zero coefficients */
struct Element {
    std::vector<Term> terms;
    bool zero() const { return terms.empty(); }
};

class Presentation {
public:
    Presentation(Prime p, std::vector<GeneratorSpec> gens,
                 std::vector<SpanConstraint> constraints = {});

    const Prime& p() const { return p_; }
    const std::vector<GeneratorSpec>& gens() const { return gens_; }
    const GeneratorSpec& gen(int i) const { return gens_[i]; }
    int ngens() const { return static_cast<int>(gens_.size()); }
    int gen_index(const std::string& name) const; /* -1 if absent */
    int require_gen(const std::string& name) const;
    const std::vector<SpanConstraint>& constraints() const { return constraints_; }

    Monomial unit() const { return Monomial{Expo(gens_.size(), 0)}; }
    Monomial monomial(const std::vector<std::pair<std::string, i64>>& exps) const;

    std::pair<i64, i64> degree(const Monomial& m) const;
    bool mono_odd(const Monomial& m) const;
    bool exponents_valid(const Expo& e) const;       /* kind bounds only */
    bool span_allowed(const Expo& e) const;          /* span constraints */
    bool mono_valid(const Expo& e) const { return exponents_valid(e) && span_allowed(e); }

    /* checks the exponent-direction cone; throws CalcError if some nonzero
     * valid exponent combination has bidegree (0,0) */
    void check_window_finite() const;

    std::string mono_string(const Monomial& m) const;

private:
    Prime p_;
    std::vector<GeneratorSpec> gens_;
    std::vector<SpanConstraint> constraints_;
    std::unordered_map<std::string, int> by_name_;
    std::vector<int> constraint_of_gen_;  /* -1 or constraint index */
};

/* product of normalized monomials: coefficient is +-1 (Koszul sign) or the
 * whole product is zero (exterior square, truncated overflow, span exit) */
Element mono_mul(const Presentation& P, const Monomial& a, const Monomial& b);
Element multiply(const Presentation& P, const Element& a, const Element& b);
Element scale(const Presentation& P, Element e, i64 c);
Element add(const Presentation& P, const Element& a, const Element& b);
Element element_of(const Presentation& P, const Monomial& m, i64 c = 1);

/* binomial(i+j, i) mod p: the gamma_i(x) * gamma_j(x) coefficient */
i64 divided_power_coefficient(i64 i, i64 j, const Prime& p);

/* replace each DividedPower generator x by truncated surrogates
 * g{e}_x = gamma_{p^e}(x) of height p, for p^e * t(x) <= tmax */
std::vector<GeneratorSpec> expand_divided_powers(const Prime& p,
                                                 const std::vector<GeneratorSpec>& gens,
                                                 i64 tmax);

/* all monomials with bidegree inside the window, bucketed by bidegree */
class BasisTable {
public:
    BasisTable(const Presentation& P, const Window& w);

    const Window& window() const { return win_; }
    const Presentation& pres() const { return *pres_; }
    size_t size() const { return monos_.size(); }
    const Monomial& mono(uint32_t i) const { return monos_[i]; }
    std::pair<i64, i64> bidegree_of(uint32_t i) const { return degs_[i]; }

    /* [first, last) indices of the bucket at (s,t); empty pair if none */
    std::pair<uint32_t, uint32_t> bucket(i64 s, i64 t) const;
    int bucket_dim(i64 s, i64 t) const;
    std::optional<uint32_t> index_of(const Monomial& m) const;
    std::vector<std::pair<i64, i64>> bidegrees() const;

private:
    const Presentation* pres_;
    Window win_;
    std::vector<Monomial> monos_;      /* sorted by (s,t), then lex */
    std::vector<std::pair<i64, i64>> degs_;
    std::map<std::pair<i64, i64>, std::pair<uint32_t, uint32_t>> buckets_;
    std::unordered_map<Expo, uint32_t, ExpoHash> index_;
};

/* single-bidegree enumeration, canonical (lex) order */
std::vector<Monomial> enumerate_basis(const Presentation& P, i64 s, i64 t);

}  // namespace v1ss
