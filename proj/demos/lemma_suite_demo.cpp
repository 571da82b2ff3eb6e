// Generates a small corpus across every family and runs the structural lemma
// suite over it, printing per-lemma tallies. Build and run with no arguments.
#include <iostream>

#include "chibound/harness.hpp"

using namespace chibound;

int main() {
    std::vector<Instance> corpus;
    GenOptions opt;
    opt.count = 5;
    opt.seed = 7;
    opt.max_n = 12;
    for (Family f : all_families())
        for (auto& inst : generate(f, opt)) corpus.push_back(std::move(inst));

    SuiteSummary s = run_lemma_suite(corpus);
    std::cout << corpus.size() << " instances, " << lemma_registry().size()
              << " lemmas: " << s.verified << " verified, " << s.skipped
              << " skipped, " << s.choice_sensitive << " choice-sensitive, "
              << s.violated << " violated\n";
    for (const auto& [lemma, count] : s.held)
        std::cout << "  " << lemma << ": held on " << count << " instances\n";
    for (const auto& rep : s.violations)
        std::cout << "  VIOLATED " << rep.lemma << " on " << rep.instance << ": "
                  << rep.witness << "\n";
    return s.violated == 0 ? 0 : 1;
}
