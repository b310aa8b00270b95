#pragma once

#include "crm/pencil.hpp"

namespace crm {

// Built-in 10x10 skew pencil on P^3 of constant rank 8. Only the strict
// upper triangles are stored; entries below the diagonal are completed
// skew-symmetrically (derived, not stored).
inline LinearPencil<QQ> skew_10x10_builtin() {
    // upper[v][i] lists row i's entries in columns i+1..9
    static const char* upper[4][9][9] = {
        {{"108", "594", "54", "36", "876", "108", "18", "0", "0"},
         {"0", "0", "-18", "192", "0", "-36", "0", "0"},
         {"0", "36", "192", "0", "18", "0", "0"},
         {"0", "0", "0", "0", "0", "0"},
         {"18", "18", "0", "0", "0"},
         {"-48", "-36", "0", "0"},
         {"-36", "0", "0"},
         {"0", "0"},
         {"0"}},
        {{"-324", "162", "0", "-64", "-492", "-324", "-193/4", "0", "0"},
         {"0", "0", "-16", "48", "0", "-41/2", "0", "0"},
         {"0", "-16", "264", "0", "-163/4", "0", "0"},
         {"0", "24", "0", "-9/4", "0", "0"},
         {"16", "4", "0", "0", "0"},
         {"-48", "-89/2", "0", "0"},
         {"-17/2", "0", "0"},
         {"27/2", "0"},
         {"0"}},
        {{"-438", "-534", "-108", "-36", "-1590", "-495/2", "-36", "-324", "54"},
         {"300", "0", "18", "0", "-75", "18", "0", "0"},
         {"-54", "-36", "-876", "-705/2", "-36", "0", "0"},
         {"0", "0", "-27/2", "0", "0", "0"},
         {"-18", "-18", "0", "0", "0"},
         {"-219", "18", "0", "0"},
         {"18", "81", "0"},
         {"0", "0"},
         {"0"}},
        {{"-498", "978", "319/4", "64", "1058/3", "-438", "64", "0", "0"},
         {"612", "23/2", "16", "368/3", "-48", "16", "0", "0"},
         {"-35/4", "16", "-2116/3", "-444", "16", "0", "0"},
         {"0", "-23/2", "1/2", "0", "27/2", "0"},
         {"-16", "-4", "0", "0", "0"},
         {"-128/3", "16", "144", "-24"},
         {"4", "0", "0"},
         {"0", "0"},
         {"0"}}};
    QQ f;
    LinearPencil<QQ> p(f, 4, 10, 10);
    for (int v = 0; v < 4; ++v)
        for (int i = 0; i < 9; ++i)
            for (int t = 0; t + i + 1 <= 9; ++t) {
                int j = i + 1 + t;
                mpq_class val = f.parse(upper[v][i][t]);
                p.coeff[static_cast<std::size_t>(v)].at(i, j) = val;
                p.coeff[static_cast<std::size_t>(v)].at(j, i) = -val;
            }
    return p;
}

}  // namespace crm
