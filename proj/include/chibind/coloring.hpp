#pragma once

// Vertex colorings.  A finished coloring assigns every vertex a color in
// 1..colors_used; 0 marks "not yet colored" during construction.

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace chibind {

struct Coloring {
    std::vector<int> color;  // color[v], 1-based once complete
    int colors_used = 0;
};

// Compacts the palette to 1..k, ranking colors by ascending original value,
// and fills in colors_used.  Rejects unfinished colorings.
inline Coloring& normalize(Coloring& c) {
    std::vector<int> vals;
    for (int x : c.color) {
        if (x <= 0) throw std::invalid_argument("normalize: vertex without a color");
        vals.push_back(x);
    }
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    for (int& x : c.color)
        x = 1 + static_cast<int>(std::lower_bound(vals.begin(), vals.end(), x) - vals.begin());
    c.colors_used = static_cast<int>(vals.size());
    return c;
}

}  // namespace chibind
