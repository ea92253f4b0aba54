// Walks through the library on a single word: derivatives, classification,
// frontiers, the forbidden-factor automaton and a shortest repetition.

#include <algorithm>
#include <iostream>

#include "cinf/cinf.hpp"

using namespace cinf;

int main(int argc, char** argv) {
    std::cout << std::boolalpha;
    const Word w = argc > 1 ? Word::parse(argv[1]) : "21221211221"_w;

    if (const auto level = failing_order(w)) {
        std::cout << w << " is not C-infinity (fails at level " << *level << ")\n";
        return 1;
    }

    const auto chain = derivative_chain(w);
    std::cout << "derivatives:";
    for (const Word& d : chain.levels) std::cout << ' ' << d.display();
    std::cout << "\nheight " << chain.height() << ", root " << chain.root() << '\n';

    const auto p = classify(w);
    std::cout << "left maximal " << p.left_maximal << ", right maximal " << p.right_maximal << ", minimal "
              << p.minimal() << '\n';
    std::cout << "maximal extension " << extend(w, Side::Both) << '\n';
    std::cout << "canonical minimal " << canonical_minimal(w) << '\n';

    const auto repr = vertical_repr(w);
    std::cout << "vertical representation " << repr.str() << ", rebuilt " << reconstruct(repr.left, repr.right)
              << '\n';

    // The automaton for C^k with k = height recognizes every factor of w.
    const std::size_t k = std::max<std::size_t>(1, chain.height());
    const Automaton a = automaton_for(k);
    std::cout << "A_" << k << ": " << a.size() << " states, " << a.edge_count(EdgeKind::Weak)
              << " weak edges, accepts w: " << a.run(w).has_value() << '\n';

    if (w.size() <= 12) {
        const auto g = shortest_gap(w);
        std::cout << "shortest repetition " << g.repetition() << " (gap " << g.gap() << ")\n";
    }
    return 0;
}
