#include "hcb/upoly.hpp"

#include <algorithm>
#include <cstdlib>

namespace hcb {

int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly up_trim(UPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

UPoly up_add(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return up_trim(std::move(r));
}

UPoly up_sub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return up_trim(std::move(r));
}

UPoly up_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return up_trim(std::move(r));
}

UPoly up_scale(const UPoly& a, const Rat& c) {
    if (c == 0) return {};
    UPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

std::pair<UPoly, UPoly> up_divmod(const UPoly& a, const UPoly& b) {
    if (b.empty()) throw Error("up_divmod: division by zero polynomial");
    UPoly r = a, q;
    int db = deg(b);
    if (deg(a) >= db) q.assign(a.size() - b.size() + 1, Rat(0));
    while (deg(r) >= db) {
        Rat f = r.back() / b.back();
        int shift = deg(r) - db;
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
        r = up_trim(std::move(r));
    }
    return {up_trim(std::move(q)), std::move(r)};
}

bool up_divides(const UPoly& d, const UPoly& p) {
    if (d.empty()) return p.empty();
    return up_divmod(p, d).second.empty();
}

UPoly up_monic(const UPoly& p) {
    if (p.empty()) return p;
    return up_scale(p, Rat(1) / p.back());
}

UPoly up_gcd(UPoly a, UPoly b) {
    while (!b.empty()) {
        UPoly r = up_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return up_monic(a);
}

UPoly up_derivative(const UPoly& p) {
    UPoly r;
    for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rat(static_cast<long>(i)));
    return up_trim(std::move(r));
}

Rat up_eval(const UPoly& p, const Rat& x) {
    Rat acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UPoly up_squarefree_part(const UPoly& p) {
    if (deg(p) <= 0) return up_monic(p);
    UPoly g = up_gcd(p, up_derivative(p));
    return up_monic(up_divmod(p, g).first);
}

// --- bounded factor search -------------------------------------------------

// Primitive integer form of a monic rational polynomial (clears the lcm of
// denominators, divides by content).
static std::vector<Int> to_primitive_int(const UPoly& p) {
    Int lcm = 1;
    for (const auto& c : p) {
        Int d = denominator(c);
        lcm = lcm / gcd(lcm, d) * d;
    }
    std::vector<Int> out;
    Int content = 0;
    for (const auto& c : p) {
        Int v = numerator(c) * (lcm / denominator(c));
        out.push_back(v);
        content = gcd(content, abs(v));
    }
    if (content > 1)
        for (auto& v : out) v /= content;
    return out;
}

static Int ipoly_eval(const std::vector<Int>& p, const Int& x) {
    Int acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

static std::vector<Int> divisors_of(const Int& n) {
    // Signed divisors by trial division; give up on huge values.
    Int a = abs(n);
    if (a == 0 || a > Int("1000000000000")) return {};
    std::vector<Int> ds;
    for (Int d = 1; d * d <= a; ++d)
        if (a % d == 0) {
            ds.push_back(d);
            if (d * d != a) ds.push_back(a / d);
        }
    std::vector<Int> out;
    for (const auto& d : ds) {
        out.push_back(d);
        out.push_back(-d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Lagrange interpolation through (xs[i], ys[i]).
static UPoly interpolate(const std::vector<Int>& xs, const std::vector<Int>& ys) {
    UPoly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        UPoly term{Rat(ys[i])};
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            // (t - xj) / (xi - xj)
            UPoly lin{Rat(-xs[j]), Rat(1)};
            term = up_mul(term, up_scale(lin, Rat(1) / Rat(xs[i] - xs[j])));
        }
        acc = up_add(acc, term);
    }
    return acc;
}

// Search for a monic factor of exact degree d via Kronecker interpolation.
// `complete` is cleared when the search had to give up (divisor blowup), in
// which case a nullopt result does not certify irreducibility.
static std::optional<UPoly> kronecker_factor(const UPoly& p, int d, bool& complete) {
    std::vector<Int> ip = to_primitive_int(p);
    std::vector<Int> xs;
    for (int k = 0; static_cast<int>(xs.size()) < d + 1; ++k) {
        Int x = (k % 2 == 0) ? Int(k / 2) : Int(-(k / 2 + 1));
        xs.push_back(x);
    }
    std::vector<std::vector<Int>> divs;
    std::size_t total = 1;
    for (const auto& x : xs) {
        auto ds = divisors_of(ipoly_eval(ip, x));
        if (ds.empty()) {
            complete = false;  // divisor blowup
            return std::nullopt;
        }
        divs.push_back(ds);
        total *= ds.size();
        if (total > 2000000) {
            complete = false;
            return std::nullopt;
        }
    }
    // Fix the sign of the first coordinate; -g finds the same split.
    std::vector<std::size_t> idx(xs.size(), 0);
    while (true) {
        bool skip = divs[0][idx[0]] < 0;
        if (!skip) {
            std::vector<Int> ys;
            for (std::size_t i = 0; i < xs.size(); ++i) ys.push_back(divs[i][idx[i]]);
            UPoly g = interpolate(xs, ys);
            if (deg(g) == d && up_divides(up_monic(g), p)) return up_monic(g);
        }
        std::size_t i = 0;
        for (; i < idx.size(); ++i) {
            if (++idx[i] < divs[i].size()) break;
            idx[i] = 0;
        }
        if (i == idx.size()) return std::nullopt;
    }
}

// Rational roots of a primitive integer polynomial.
static std::vector<Rat> rational_roots(const UPoly& p) {
    std::vector<Int> ip = to_primitive_int(p);
    std::vector<Rat> roots;
    if (ip.empty()) return roots;
    if (ip.front() == 0) roots.push_back(Rat(0));
    Int a0 = ip.front(), an = ip.back();
    if (a0 == 0) {
        std::size_t k = 0;
        while (k < ip.size() && ip[k] == 0) ++k;
        a0 = ip[k];
    }
    for (const auto& num : divisors_of(a0))
        for (const auto& den : divisors_of(an)) {
            if (den <= 0) continue;
            Rat cand(num, den);
            if (up_eval(p, cand) == 0 &&
                std::find(roots.begin(), roots.end(), cand) == roots.end())
                roots.push_back(cand);
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

FactorResult up_factor_squarefree(const UPoly& p, int cap) {
    FactorResult res;
    UPoly rem = up_monic(p);
    if (deg(rem) <= 0) return res;
    // Strip linear factors first.
    for (const auto& r : rational_roots(rem)) {
        UPoly lin{-r, Rat(1)};
        while (up_divides(lin, rem) && deg(rem) >= 1) {
            res.irreducible.push_back(lin);
            rem = up_monic(up_divmod(rem, lin).first);
        }
    }
    // Split off bounded-degree factors until nothing is found.
    int d = 2;
    bool complete = true;
    while (deg(rem) >= 2 && d <= std::min(cap, deg(rem) / 2)) {
        auto g = kronecker_factor(rem, d, complete);
        if (g) {
            // g can be reducible only into degrees already exhausted, so it
            // splits by recursion with a smaller cap.
            auto sub = up_factor_squarefree(*g, d - 1);
            if (sub.unresolved)
                res.irreducible.push_back(*sub.unresolved);
            for (auto& f : sub.irreducible) res.irreducible.push_back(std::move(f));
            rem = up_monic(up_divmod(rem, *g).first);
        } else {
            ++d;
        }
    }
    if (deg(rem) >= 1) {
        if (complete && deg(rem) / 2 <= cap)
            res.irreducible.push_back(rem);  // survived the full search: irreducible
        else
            res.unresolved = rem;
    }
    std::sort(res.irreducible.begin(), res.irreducible.end(),
              [](const UPoly& a, const UPoly& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    return res;
}

}  // namespace hcb
