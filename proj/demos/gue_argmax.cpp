// Exact argmax moments of the GUE characteristic polynomial, plus a small sampling run.
#include "logmax/mc/gue.hpp"
#include "logmax/replica.hpp"

#include <iostream>

int main() {
    logmax::ModelSpec m;
    m.model = logmax::Model::gue;
    auto x = logmax::observable_moments(m, 4);
    std::cout << "<x^2> = " << x[2] << "  <x^4> = " << x[4] << "\n";

    logmax::mc::GueConfig c;
    c.N = 200;
    c.realizations = 100;
    auto r = logmax::mc::sample_gue_argmax(c);
    std::cout << "sampled <x^2> at N=200: " << r.x2.mean << " +- " << r.x2.stderr_ << "\n";
}
