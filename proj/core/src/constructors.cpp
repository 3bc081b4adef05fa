#include "latnorm/constructors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace latnorm {

namespace {

void check_order_bound(long long order, const std::string& what) {
    if (order < 1 || order > kMaxGroupOrder)
        throw std::invalid_argument(what + ": order " + std::to_string(order) +
                                    " outside 1.." + std::to_string(kMaxGroupOrder));
}

std::vector<int> flat_table(int n) { return std::vector<int>(static_cast<std::size_t>(n) * n); }

}  // namespace

Group make_cyclic(int n) {
    check_order_bound(n, "Z" + std::to_string(n));
    auto t = flat_table(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
    return Group(std::move(t), n, "Z" + std::to_string(n));
}

Group make_dihedral(int size) {
    if (size < 4 || size % 2 != 0)
        throw std::invalid_argument("D" + std::to_string(size) +
                                    ": dihedral order must be even and >= 4");
    check_order_bound(size, "D" + std::to_string(size));
    const int m = size / 2;
    // element (i, j) = r^i s^j at index j*m + i; r^i s^j * r^k s^l = r^(i +/- k) s^(j+l)
    auto t = flat_table(size);
    auto idx = [m](int i, int j) { return j * m + i; };
    for (int j1 = 0; j1 < 2; ++j1)
        for (int i1 = 0; i1 < m; ++i1)
            for (int j2 = 0; j2 < 2; ++j2)
                for (int i2 = 0; i2 < m; ++i2) {
                    const int i = ((j1 ? i1 - i2 : i1 + i2) % m + m) % m;
                    const int j = (j1 + j2) % 2;
                    t[static_cast<std::size_t>(idx(i1, j1)) * size + idx(i2, j2)] = idx(i, j);
                }
    return Group(std::move(t), size, "D" + std::to_string(size));
}

Group make_quaternion(int size) {
    const std::string name = "Q" + std::to_string(size);
    if (size < 8 || (size & (size - 1)) != 0)
        throw std::invalid_argument(name + ": quaternion order must be a power of two >= 8");
    check_order_bound(size, name);
    const int m = size / 2;  // order of a
    // element (i, j) = a^i b^j at index j*m + i; b a^k = a^-k b, b^2 = a^(m/2)
    auto t = flat_table(size);
    auto idx = [m](int i, int j) { return j * m + i; };
    for (int j1 = 0; j1 < 2; ++j1)
        for (int i1 = 0; i1 < m; ++i1)
            for (int j2 = 0; j2 < 2; ++j2)
                for (int i2 = 0; i2 < m; ++i2) {
                    int i = ((j1 ? i1 - i2 : i1 + i2) % m + m) % m;
                    if (j1 && j2) i = (i + m / 2) % m;
                    const int j = (j1 + j2) % 2;
                    t[static_cast<std::size_t>(idx(i1, j1)) * size + idx(i2, j2)] = idx(i, j);
                }
    Group g(std::move(t), size, name);
    const int a = idx(1, 0), b = idx(0, 1);
    if (g.element_order(a) != m || g.op(b, b) != g.power(a, m / 2) ||
        g.op(g.op(g.inverse(b), a), b) != g.inverse(a))
        throw std::logic_error(name + ": built table violates the defining relations");
    return g;
}

Group make_zm(long long m, long long n, long long r) { return make_zm(validate_zm_triple(m, n, r)); }

Group make_zm(const ZmTriple& t) {
    const long long order = t.order();
    check_order_bound(order, t.text());
    const int m = static_cast<int>(t.m), n = static_cast<int>(t.n);
    const int no = static_cast<int>(order);

    // r^x mod m for x = 0..n-1
    std::vector<long long> rpow(n);
    for (int x = 0; x < n; ++x) rpow[x] = pow_mod(t.r, x, t.m);

    auto tab = flat_table(no);
    auto idx = [m](int x, int y) { return x * m + y; };
    for (int x1 = 0; x1 < n; ++x1)
        for (int y1 = 0; y1 < m; ++y1)
            for (int x2 = 0; x2 < n; ++x2)
                for (int y2 = 0; y2 < m; ++y2) {
                    const int x = (x1 + x2) % n;
                    const int y = static_cast<int>((y1 * rpow[x2] + y2) % m);
                    tab[static_cast<std::size_t>(idx(x1, y1)) * no + idx(x2, y2)] = idx(x, y);
                }
    Group g(std::move(tab), no, t.text());

    // The product rule is derived from b^-1 a b = a^r; check the relations
    // rather than trusting the derivation.
    const int a = idx(0, static_cast<int>(1 % t.m));
    const int b = idx(static_cast<int>(1 % t.n), 0);
    const int a_r = idx(0, static_cast<int>(t.r % t.m));
    if (g.element_order(a) != t.m || g.element_order(b) != t.n ||
        g.op(g.op(g.inverse(b), a), b) != a_r)
        throw std::logic_error(t.text() + ": built table violates the defining relations");
    return g;
}

namespace {

int permutation_parity(const std::vector<int>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2;
}

Group make_permutation_group(int degree, bool even_only, std::string label) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p(degree);
    std::iota(p.begin(), p.end(), 0);
    do {
        if (!even_only || permutation_parity(p) == 0) perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    const int n = static_cast<int>(perms.size());
    check_order_bound(n, label);

    // Identity is lexicographically first, so it lands at index 0.
    auto index_of = [&](const std::vector<int>& q) {
        const auto it = std::lower_bound(perms.begin(), perms.end(), q);
        return static_cast<int>(it - perms.begin());
    };
    auto t = flat_table(n);
    std::vector<int> comp(degree);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            for (int i = 0; i < degree; ++i) comp[i] = perms[g][perms[h][i]];
            t[static_cast<std::size_t>(g) * n + h] = index_of(comp);
        }
    return Group(std::move(t), n, std::move(label));
}

}  // namespace

Group make_alternating(int n) {
    if (n < 3 || n > 5)
        throw std::invalid_argument("A" + std::to_string(n) + ": degree must be in 3..5");
    return make_permutation_group(n, true, "A" + std::to_string(n));
}

Group make_symmetric(int n) {
    if (n < 2 || n > 5)
        throw std::invalid_argument("S" + std::to_string(n) + ": degree must be in 2..5");
    return make_permutation_group(n, false, "S" + std::to_string(n));
}

Group direct_product(const Group& a, const Group& b) {
    const long long order = static_cast<long long>(a.order()) * b.order();
    check_order_bound(order, a.label() + " x " + b.label());
    const int nb = b.order(), n = static_cast<int>(order);
    auto t = flat_table(n);
    for (int a1 = 0; a1 < a.order(); ++a1)
        for (int b1 = 0; b1 < nb; ++b1)
            for (int a2 = 0; a2 < a.order(); ++a2)
                for (int b2 = 0; b2 < nb; ++b2)
                    t[static_cast<std::size_t>(a1 * nb + b1) * n + (a2 * nb + b2)] =
                        a.op(a1, a2) * nb + b.op(b1, b2);
    return Group(std::move(t), n, a.label() + " x " + b.label());
}

}  // namespace latnorm
