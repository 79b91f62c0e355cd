#pragma once

#include <optional>
#include <vector>

#include "hcb/rational.hpp"

namespace hcb {

// Univariate polynomial over Rat, coefficients low degree first, no
// trailing zeros.  Zero polynomial is the empty vector (degree -1).
using UPoly = std::vector<Rat>;

int deg(const UPoly& p);
UPoly up_trim(UPoly p);
UPoly up_add(const UPoly& a, const UPoly& b);
UPoly up_sub(const UPoly& a, const UPoly& b);
UPoly up_mul(const UPoly& a, const UPoly& b);
UPoly up_scale(const UPoly& a, const Rat& c);
// quotient, remainder with deg(r) < deg(b); b nonzero
std::pair<UPoly, UPoly> up_divmod(const UPoly& a, const UPoly& b);
bool up_divides(const UPoly& d, const UPoly& p);
UPoly up_monic(const UPoly& p);
UPoly up_gcd(UPoly a, UPoly b);  // monic gcd
UPoly up_derivative(const UPoly& p);
Rat up_eval(const UPoly& p, const Rat& x);
UPoly up_squarefree_part(const UPoly& p);

// Bounded-degree rational factorization (rational roots plus Kronecker
// interpolation search up to `cap`).  `irreducible` holds monic factors
// proven irreducible; `unresolved` a monic cofactor whose irreducibility
// could not be decided within the cap.
struct FactorResult {
    std::vector<UPoly> irreducible;
    std::optional<UPoly> unresolved;
};

FactorResult up_factor_squarefree(const UPoly& p, int cap);

}  // namespace hcb
