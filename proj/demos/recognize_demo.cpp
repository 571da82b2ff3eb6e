// Classifies a few small graphs and prints the witnesses the recognizers
// return. Build and run with no arguments.
#include <iostream>

#include "chibound/blowup.hpp"
#include "chibound/recognize.hpp"

using namespace chibound;

namespace {

void report(const std::string& name, const Graph& g) {
    ClassReport r = is_in_class(g);
    std::cout << name << " (n=" << g.n() << "): "
              << (r.in_class() ? "in class" : "out of class") << "\n";
    if (r.p7_witness) {
        std::cout << "  induced P7:";
        for (int v : r.p7_witness->vertices) std::cout << ' ' << v;
        std::cout << "\n";
    }
    if (r.even_hole_witness) {
        std::cout << "  even hole of length " << r.even_hole_witness->vertices.size()
                  << ":";
        for (int v : r.even_hole_witness->vertices) std::cout << ' ' << v;
        std::cout << "\n";
    }
    if (r.in_class())
        std::cout << "  narrow (also C4-, C6-, C7-free): "
                  << (r.in_narrow_class() ? "yes" : "no") << "\n";
}

} // namespace

int main() {
    report("C5", Graph::cycle(5));
    report("C6", Graph::cycle(6));
    report("C7", Graph::cycle(7));
    report("P7", Graph::path(7));
    report("M", pattern_M());
    report("C5[2,2,2,2,2]", realize({Graph::cycle(5), {2, 2, 2, 2, 2}, {}}).graph);
    return 0;
}
