#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "orbicy/hodge/engine.hpp"

namespace orbicy {

// Row k holds h^{p,q} with p + q = k; h^{p,q} sits in column dim + q - p of a
// (2 dim + 1)-column grid, so the rows form the usual diamond.
inline std::string diamond_text(const HodgeDiamond& hd) {
    int n = hd.dim, cols = 2 * n + 1;
    std::size_t w = 1;
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) w = std::max(w, hd(p, q).to_string().size());
    w |= 1;  // odd widths keep single digits on the centre line
    std::string out;
    for (int k = 0; k <= 2 * n; ++k) {
        std::vector<std::string> cells(cols);
        for (int p = std::min(k, n); p >= 0 && k - p <= n; --p) cells[n + (k - p) - p] = hd(p, k - p).to_string();
        std::string line;
        for (auto& c : cells) {
            std::size_t left = (w - c.size()) / 2;
            line += std::string(left, ' ') + c + std::string(w - c.size() - left, ' ') + " ";
        }
        line.erase(line.find_last_not_of(' ') + 1);
        out += line + "\n";
    }
    return out;
}

inline std::string diamond_latex(const HodgeDiamond& hd) {
    int n = hd.dim, cols = 2 * n + 1;
    std::string out = "\\begin{array}{" + std::string(cols, 'c') + "}\n";
    for (int k = 0; k <= 2 * n; ++k) {
        std::vector<std::string> cells(cols);
        for (int p = std::min(k, n); p >= 0 && k - p <= n; --p) cells[n + (k - p) - p] = hd(p, k - p).to_latex();
        std::string line;
        for (int c = 0; c < cols; ++c) line += (c ? " & " : "") + cells[c];
        out += line + (k < 2 * n ? " \\\\\n" : "\n");
    }
    return out + "\\end{array}";
}

// Minimal standalone document around a display-math body.
inline std::string latex_document(const std::string& body) {
    return "\\documentclass{article}\n\\usepackage{amsmath}\n\\pagestyle{empty}\n\\begin{document}\n\\[\n" + body +
           "\n\\]\n\\end{document}\n";
}

}  // namespace orbicy
