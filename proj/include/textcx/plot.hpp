#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "textcx/corpus.hpp"

namespace textcx {

// Known figure ids: fig2 (D vs L with Heaps curves), fig3 (h vs d), fig4 (h vs
// d with model curves), fig5 (model e/s/c vs d), fig6 (model e/s/c vs L),
// fig7 (ranked profiles per text), fig8 (merged ranked profiles per class),
// fig9 (merged CDF per class), fig10 (J_1D vs L), fig11 (J_thetaD vs tail length).
const std::vector<std::string>& plot_figures();

// Tab-separated "x<TAB>y<TAB>series" lines after a header line. Throws Error
// for an unknown figure or when the figure needs stored profiles and the
// library has none.
std::string plot_data(const Library& lib, std::string_view figure);

}  // namespace textcx
