// Colors generated in-class instances and prints the certificate summary
// together with the reduction trace. Build and run with no arguments.
#include <iostream>

#include "chibound/color.hpp"
#include "chibound/harness.hpp"
#include "chibound/oracle.hpp"

using namespace chibound;

namespace {

void show(const Instance& inst) {
    const Graph& g = inst.graph;
    BoundCertificate cert = color_in_class(g);
    int omega = exact_omega(g).value;
    std::cout << inst.id << ": n=" << g.n() << " omega=" << omega
              << " bound=" << cert.bound << " colors=" << cert.colors_used()
              << " exact_chi=" << exact_chi(g).value << "\n";
    for (const auto& entry : cert.trace)
        std::cout << "  trace: " << to_string(entry) << "\n";
}

} // namespace

int main() {
    GenOptions opt;
    opt.count = 2;
    opt.seed = 42;
    opt.max_n = 14;
    for (Family f : {Family::hyperhole, Family::special_blowup_m,
                     Family::nice_blowup_plus_attachments})
        for (const auto& inst : generate(f, opt)) show(inst);
    return 0;
}
