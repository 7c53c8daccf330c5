#include "plic/kernel.hpp"

namespace plic {

Count AnswerTable::get_canonical(const PatternCtx& ctx, std::vector<int> r, Mask X, Mask T,
                                 std::vector<int> f) const {
    TableKey key;
    key.r = std::move(r);
    key.X = ctx.canon_xside(T, X);
    key.T = T;
    key.f = std::move(f);
    return get(key);
}

Count ie_sum_product(const std::vector<std::vector<Count>>& T, int h) {
    if (h < 2) throw std::invalid_argument("h must be at least 2");
    std::size_t n = T.size();
    std::vector<Count> cur(n);
    for (std::size_t x = 0; x < n; ++x) {
        Count s = 0;
        for (std::size_t y = 0; y < n; ++y) s += T[y][x];
        cur[x] = s;
    }
    for (int step = 3; step <= h; ++step) {
        std::vector<Count> next(n);
        for (std::size_t x = 0; x < n; ++x) {
            Count s = 0;
            for (std::size_t y = 0; y < n; ++y) s += cur[y] * T[y][x];
            next[x] = s;
        }
        cur = std::move(next);
    }
    Count out = 0;
    for (const Count& c : cur) out += c;
    return out;
}

Count ie_sum_product_wrap2(const std::vector<std::vector<Count>>& T,
                           const std::vector<std::vector<Count>>& W, int h) {
    std::size_t n = T.size();
    if (h == 1) {
        Count out = 0;
        for (std::size_t x = 0; x < n; ++x) out += W[x][x];
        return out;
    }
    Count out = 0;
    for (std::size_t x1 = 0; x1 < n; ++x1) {
        // path sums of length h-1 starting at x1
        std::vector<Count> cur(n, 0);
        cur[x1] = 1;
        for (int step = 2; step <= h; ++step) {
            std::vector<Count> next(n, 0);
            for (std::size_t y = 0; y < n; ++y) {
                if (cur[y] == 0) continue;
                for (std::size_t x = 0; x < n; ++x)
                    if (T[y][x] != 0) next[x] += cur[y] * T[y][x];
            }
            cur = std::move(next);
        }
        for (std::size_t xh = 0; xh < n; ++xh)
            if (cur[xh] != 0 && W[xh][x1] != 0) out += cur[xh] * W[xh][x1];
    }
    return out;
}

Count ie_sum_product_wrap(const std::vector<std::vector<Count>>& T, int h) {
    if (h < 2) throw std::invalid_argument("h must be at least 2");
    return ie_sum_product_wrap2(T, T, h);
}

}  // namespace plic
