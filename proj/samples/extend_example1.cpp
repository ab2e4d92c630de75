// Extends the bundled (26, 7, 4; 3) set with q1 = 13 and checks the result.
#include <iostream>

#include "fhs/fhs.hpp"

int main() {
    const fhs::FhsSet base = fhs::example1_base();
    const auto family = fhs::gen_dilation_set(fhs::PrimePower::make(13, 1));
    const fhs::FhsSet s = fhs::extend_once(base, family, fhs::cumulative_labeling(base));

    const auto report = fhs::is_optimal_set(s);
    std::cout << "(" << s.length() << ", " << s.alphabet().size << ", " << report.achieved << "; " << s.size()
              << ") bound " << report.bound << (report.optimal ? " optimal" : " not optimal") << "\n";

    std::cout << "s_0 prefix:";
    for (std::size_t t = 0; t < 10; ++t) {
        const auto c = s.alphabet().coordinates(s[0][t]);
        std::cout << " (" << c[0] << "," << c[1] << ")";
    }
    std::cout << "\n";
    return report.optimal ? 0 : 1;
}
