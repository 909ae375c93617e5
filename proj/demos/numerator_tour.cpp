// Numerator polynomials, reciprocity and the unitary-factor probe for a few
// small compositions.

#include <iostream>

#include "mzeta/mzeta.hpp"

int main() {
    using namespace mzeta;
    for (const composition& c : {composition({1, 1}), composition({2, 1}), composition({2, 2}), composition({1, 2, 1})}) {
        const bipoly w = w_numerator(c);
        const auto rec = reciprocity_check(w, c.size());
        std::cout << "eta = (" << c.to_string() << ")\n  W = " << w.to_string() << "\n  reciprocity: ";
        if (rec.holds)
            std::cout << "sign " << rec.sign << ", x^" << rec.x_exponent << " y^" << rec.y_exponent << "\n";
        else
            std::cout << "none\n";
        std::cout << "  zeta(1/2, 1/3) = " << zeta_eval(c, rational(1, 2), rational(1, 3)) << "\n";
    }

    const auto rep = make_conjecture_report(composition::rectangle(2, 3));
    std::cout << "rectangle 3^2: divisible by 1 + x^3 y: " << (rep.divisible ? "yes" : "no")
              << ", unitary factors of the quotient: " << rep.factors.size() << "\n";
}
