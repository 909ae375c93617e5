// The running example: a word of content 1^3 2^2 3^2 4^3 and an admissible
// permutation for the same composition, with every statistic spelled out.

#include <iostream>

#include "mzeta/mzeta.hpp"

int main() {
    using namespace mzeta;
    const composition eta({3, 2, 2, 3});

    const word w(eta, {4, 2, 3, 2, 3, 1, 4, 1, 4, 1});
    const auto parts = denh_decomposition(w);
    std::cout << "word " << w.to_string() << "\n"
              << "  des = " << des(w) << ", maj = " << maj(w) << ", exc = " << exc(w) << "\n"
              << "  denh = " << parts.excedance_sum << " + " << parts.exceeding_imv << " + "
              << parts.nonexceeding_inv << " = " << denh(w) << "\n";

    const block_context ctx(eta);
    const permutation sigma({6, 8, 10, 2, 4, 3, 5, 1, 7, 9});
    const auto d = den_decomposition(ctx, sigma);
    std::cout << "permutation " << sigma.to_string() << (is_admissible(ctx, sigma) ? " (admissible)" : "") << "\n"
              << "  den = " << d.i_sum << " + " << d.n_plus << " - " << d.n_minus << " - " << d.iexc << " = "
              << d.total() << ", iexc = " << d.iexc << "\n";

    const permutation tau({6, 8, 10, 4, 2, 3, 5, 1, 7, 9});
    std::cout << "permutation " << tau.to_string() << (is_admissible(ctx, tau) ? " (admissible)" : " (not admissible)")
              << "\n";
}
