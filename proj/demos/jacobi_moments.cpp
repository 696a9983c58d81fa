// Jacobi ensemble moments by partition sum and by nested residues.
#include "logmax/contour.hpp"
#include "logmax/jacobi.hpp"

#include <iostream>

int main() {
    using logmax::Rational;
    for (int k : {1, 2, 3, -1}) {
        logmax::MomentQuery q{Rational(-1, 3), Rational(3, 2), Rational(2), Rational(4), k};
        auto r = logmax::crosscheck(q);
        std::cout << "k=" << k << "  partition sum " << r.partition_value << "  residues " << r.contour_value
                  << (r.equal ? "  equal" : "  MISMATCH") << "\n";
    }
    std::cout << "Selberg(1/2, 1, 2, 3) = " << logmax::selberg(Rational(1, 2), Rational(1), Rational(2), 3).str() << "\n";
}
