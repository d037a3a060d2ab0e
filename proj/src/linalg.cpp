#include "selforth/linalg.hpp"

namespace selforth {

std::vector<int> rref(Mat& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    const int rows = (int)a.size(), cols = (int)a[0].size();
    int pr = 0;
    for (int pc = 0; pc < cols && pr < rows; ++pc) {
        int sel = -1;
        for (int i = pr; i < rows; ++i)
            if (!a[i][pc].is_zero()) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(a[pr], a[sel]);
        FElem piv_inv = a[pr][pc].inv();
        for (int j = pc; j < cols; ++j) a[pr][j] = a[pr][j] * piv_inv;
        for (int i = 0; i < rows; ++i) {
            if (i == pr || a[i][pc].is_zero()) continue;
            FElem f = a[i][pc];
            for (int j = pc; j < cols; ++j) a[i][j] = a[i][j] - f * a[pr][j];
        }
        pivots.push_back(pc);
        ++pr;
    }
    return pivots;
}

int rank(Mat a) { return (int)rref(a).size(); }

std::optional<Mat> invert(const Mat& a) {
    const int n = (int)a.size();
    if (n == 0) return Mat{};
    const FieldTower* tw = a[0][0].tower();
    Mat aug(n, Vec(2 * n, FElem(tw, 0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = FElem(tw, 1);
    }
    auto piv = rref(aug);
    if ((int)piv.size() != n || piv[n - 1] != n - 1) return std::nullopt;
    Mat out(n, Vec(n, FElem(tw, 0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
    return out;
}

Mat nullspace(const Mat& a, const FieldTower* tw) {
    if (a.empty()) return Mat{};
    const int cols = (int)a[0].size();
    Mat r = a;
    auto pivots = rref(r);
    std::vector<bool> is_pivot(cols, false);
    for (int pc : pivots) is_pivot[pc] = true;
    Mat out;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        Vec v(cols, FElem(tw, 0));
        v[fc] = FElem(tw, 1);
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            v[pivots[pi]] = -r[pi][fc];
        out.push_back(std::move(v));
    }
    return out;
}

Mat row_basis(Mat a) {
    auto pivots = rref(a);
    a.resize(pivots.size());
    return a;
}

FElem dot(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) fail(errc::length_mismatch, "dot product length mismatch");
    if (x.empty()) fail(errc::length_mismatch, "empty vectors");
    FElem acc = FElem(x[0].tower(), 0);
    for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
}

} // namespace selforth
