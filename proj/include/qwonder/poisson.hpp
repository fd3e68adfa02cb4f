#pragma once

#include "qwonder/rees.hpp"

namespace qwonder {

/// Poisson structure on a commutative presented algebra: a bracket table
/// on generator pairs, extended bilinearly and by the Leibniz rule.
/// Antisymmetry is built in; the Jacobi identity on generator triples is
/// checked at construction.
class PoissonPresentation {
public:
    PoissonPresentation(PresentationPtr base,
                        std::map<std::pair<char, char>, AlgebraElement> table);

    const PresentationPtr& base() const { return base_; }

    /// Bracket of two generators by index.
    AlgebraElement generator_bracket(char g, char h) const;

    AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const;

private:
    PresentationPtr base_;
    std::map<std::pair<char, char>, AlgebraElement> table_;  // keys g < h
};

/// The standard Poisson-Lie bracket on the classical coordinate algebra:
/// {a,b} = ab, {a,c} = ac, {b,c} = 0, {b,d} = bd, {c,d} = cd, {a,d} = 2bc.
const PoissonPresentation& classical_sl2_poisson();

/// {f z^lambda, g z^mu} = {f, g} z^{lambda+mu} over the q=1 Rees algebra.
ReesElement rees_bracket(const ReesElement& x, const ReesElement& y);

/// Element of the localization of the q=1 Rees algebra at z^2:
/// numerator * (z^2)^(-inverse_power).
struct LocalizedReesElement {
    ReesElement numerator;
    long inverse_power = 0;

    bool operator==(const LocalizedReesElement& other) const {
        return inverse_power == other.inverse_power && numerator == other.numerator;
    }
};

/// Bracket on the localization, extended by {x, r^-1} = -r^-2 {x, r}:
/// {x r^-j, y r^-k} = {x,y} r^-(j+k) - k y {x,r} r^-(j+k+1)
///                    + j x {y,r} r^-(j+k+1).
LocalizedReesElement localized_bracket(const LocalizedReesElement& x,
                                       const LocalizedReesElement& y);

struct SemiclassicalResult {
    AlgebraElement limit;        // classical element, the (xy - yx)/(q-1) limit
    AlgebraElement table_value;  // bracket from the classical table
    bool matches = false;
};

/// Computes the commutator of two generators of the quantum coordinate
/// algebra, divides by (q - 1), evaluates at q = 1, and compares with the
/// classical bracket table. Throws when some commutator coefficient does
/// not vanish at q = 1.
SemiclassicalResult semiclassical_check(char role_x, char role_y);

struct SemiclassicalReesResult {
    ReesElement limit;
    ReesElement table_value;
    bool matches = false;
};

/// The same check for the Rees generators az, bz, cz, dz.
SemiclassicalReesResult semiclassical_rees_check(char role_x, char role_y);

}  // namespace qwonder
