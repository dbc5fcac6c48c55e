#include <cmath>
#include <limits>
#include <vector>

#include "hdpot/transport.hpp"

namespace hdpot {

// Dense linear assignment, Jonker-Volgenant (1987): column reduction,
// reduction transfer, two augmenting row reduction sweeps, then shortest
// augmenting paths for the remaining free rows.
double lapjv(int n, std::span<const double> cost, std::vector<int>& rowsol) {
    require(n > 0 && cost.size() == static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
            errc::invalid_parameter, "lapjv: cost must be n x n with n > 0");
    const double BIG = std::numeric_limits<double>::max();
    const double* C = cost.data();

    rowsol.assign(n, -1);
    std::vector<int> colsol(n, -1);
    std::vector<double> v(n, 0.0);
    std::vector<int> freerows(n, 0);
    std::vector<int> matches(n, 0);

    // column reduction
    for (int j = n - 1; j >= 0; --j) {
        double mn = C[j];
        int imin = 0;
        for (int i = 1; i < n; ++i)
            if (C[i * n + j] < mn) {
                mn = C[i * n + j];
                imin = i;
            }
        v[j] = mn;
        if (++matches[imin] == 1) {
            rowsol[imin] = j;
            colsol[j] = imin;
        } else {
            colsol[j] = -1;
        }
    }

    // reduction transfer
    int numfree = 0;
    for (int i = 0; i < n; ++i) {
        if (matches[i] == 0) {
            freerows[numfree++] = i;
        } else if (matches[i] == 1 && n > 1) {
            int j1 = rowsol[i];
            double mn = BIG;
            for (int j = 0; j < n; ++j)
                if (j != j1 && C[i * n + j] - v[j] < mn) mn = C[i * n + j] - v[j];
            v[j1] -= mn;
        }
    }

    // augmenting row reduction, two sweeps
    for (int loop = 0; loop < 2 && numfree > 0; ++loop) {
        int prevnumfree = numfree;
        numfree = 0;
        int k = 0;
        while (k < prevnumfree) {
            int i = freerows[k++];
            double umin = C[i * n] - v[0];
            int j1 = 0, j2 = -1;
            double usubmin = BIG;
            for (int j = 1; j < n; ++j) {
                double h = C[i * n + j] - v[j];
                if (h < usubmin) {
                    if (h >= umin) {
                        usubmin = h;
                        j2 = j;
                    } else {
                        usubmin = umin;
                        umin = h;
                        j2 = j1;
                        j1 = j;
                    }
                }
            }
            int i0 = colsol[j1];
            if (umin < usubmin) {
                v[j1] -= usubmin - umin;
            } else if (i0 >= 0 && j2 >= 0) {
                j1 = j2;
                i0 = colsol[j1];
            }
            rowsol[i] = j1;
            colsol[j1] = i;
            if (i0 >= 0) {
                if (umin < usubmin)
                    freerows[--k] = i0;
                else
                    freerows[numfree++] = i0;
            }
        }
    }

    // shortest augmenting paths for the remaining free rows
    std::vector<double> d(n);
    std::vector<int> pred(n);
    std::vector<int> collist(n);
    for (int f = 0; f < numfree; ++f) {
        int freerow = freerows[f];
        for (int j = 0; j < n; ++j) {
            d[j] = C[freerow * n + j] - v[j];
            pred[j] = freerow;
            collist[j] = j;
        }
        int low = 0, up = 0, last = -1;
        int endofpath = -1;
        double mn = 0.0;
        bool found = false;
        do {
            if (up == low) {
                last = low - 1;
                mn = d[collist[up++]];
                for (int k = up; k < n; ++k) {
                    int j = collist[k];
                    double h = d[j];
                    if (h <= mn) {
                        if (h < mn) {
                            up = low;
                            mn = h;
                        }
                        collist[k] = collist[up];
                        collist[up++] = j;
                    }
                }
                for (int k = low; k < up; ++k) {
                    int j = collist[k];
                    if (colsol[j] < 0) {
                        endofpath = j;
                        found = true;
                        break;
                    }
                }
            }
            if (!found) {
                int j1 = collist[low++];
                int i = colsol[j1];
                double h = C[i * n + j1] - v[j1] - mn;
                for (int k = up; k < n; ++k) {
                    int j = collist[k];
                    double v2 = C[i * n + j] - v[j] - h;
                    if (v2 < d[j]) {
                        pred[j] = i;
                        if (v2 == mn) {
                            if (colsol[j] < 0) {
                                endofpath = j;
                                found = true;
                                break;
                            }
                            collist[k] = collist[up];
                            collist[up++] = j;
                        }
                        d[j] = v2;
                    }
                }
            }
        } while (!found);

        for (int k = 0; k <= last; ++k) {
            int j1 = collist[k];
            v[j1] += d[j1] - mn;
        }
        int i;
        do {
            i = pred[endofpath];
            colsol[endofpath] = i;
            int j1 = endofpath;
            endofpath = rowsol[i];
            rowsol[i] = j1;
        } while (i != freerow);
    }

    double total = 0.0;
    for (int i = 0; i < n; ++i) total += C[i * n + rowsol[i]];
    return total;
}

}  // namespace hdpot
