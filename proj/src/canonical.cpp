#include "berge/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace berge {

namespace {

constexpr int kHardMaxN = 10;
constexpr int kHardMaxM = 32;

void check_guard(int n, int m, const CanonLimits& limits) {
    int max_n = std::min(limits.max_n, kHardMaxN);
    int max_m = std::min(limits.max_m, kHardMaxM);
    if (n > max_n || m > max_m)
        throw std::runtime_error("too large for exact canonicalization (n=" + std::to_string(n) +
                                 ", m=" + std::to_string(m) + ", guard n<=" +
                                 std::to_string(max_n) + ", m<=" + std::to_string(max_m) + ")");
}

// Minimum over all row relabelings of the sorted column-value vector.
// Column j's value has bit p[r] set iff original row r contains column j.
std::vector<std::uint16_t> minimize_columns(int n, int m,
                                            const std::vector<std::uint16_t>& cols) {
    std::array<int, kHardMaxN> p{};
    std::iota(p.begin(), p.begin() + n, 0);
    std::vector<std::uint16_t> best;
    std::vector<std::uint16_t> cur(static_cast<std::size_t>(m));
    do {
        for (int j = 0; j < m; ++j) {
            std::uint16_t c = cols[std::size_t(j)], mapped = 0;
            for (int r = 0; r < n; ++r)
                if ((c >> r) & 1) mapped |= std::uint16_t(1u << p[std::size_t(r)]);
            cur[std::size_t(j)] = mapped;
        }
        std::sort(cur.begin(), cur.end());
        if (best.empty() || cur < best) best = cur;
    } while (std::next_permutation(p.begin(), p.begin() + n));
    return best;
}

std::string encode(int n, int m, const std::vector<std::uint16_t>& cols) {
    std::string out;
    out.reserve(static_cast<std::size_t>(2 + (n <= 8 ? m : 2 * m)));
    out.push_back(char(n));
    out.push_back(char(m));
    for (auto c : cols) {
        out.push_back(char(c & 0xff));
        if (n > 8) out.push_back(char(c >> 8));
    }
    return out;
}

}  // namespace

std::string canonical_form_rows(int n, int m, const std::uint32_t* rows) {
    std::vector<std::uint16_t> cols(static_cast<std::size_t>(m), 0);
    for (int r = 0; r < n; ++r) {
        std::uint32_t row = rows[r];
        while (row) {
            int j = std::countr_zero(row);
            cols[std::size_t(j)] |= std::uint16_t(1u << r);
            row &= row - 1;
        }
    }
    return encode(n, m, minimize_columns(n, m, cols));
}

std::string canonical_form(const BipartiteGraph& g, const CanonLimits& limits) {
    check_guard(g.n(), g.m(), limits);
    std::vector<std::uint16_t> cols(static_cast<std::size_t>(g.m()), 0);
    for (int x = 0; x < g.n(); ++x)
        g.row(x).for_each([&](int y) { cols[std::size_t(y)] |= std::uint16_t(1u << x); });
    return encode(g.n(), g.m(), minimize_columns(g.n(), g.m(), cols));
}

bool is_isomorphic(const BipartiteGraph& a, const BipartiteGraph& b, const CanonLimits& limits) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    return canonical_form(a, limits) == canonical_form(b, limits);
}

BipartiteGraph graph_from_canonical(const std::string& form) {
    if (form.size() < 2) throw std::invalid_argument("graph_from_canonical: truncated form");
    int n = int(static_cast<unsigned char>(form[0]));
    int m = int(static_cast<unsigned char>(form[1]));
    int bytes_per_col = n <= 8 ? 1 : 2;
    if (int(form.size()) != 2 + bytes_per_col * m)
        throw std::invalid_argument("graph_from_canonical: length mismatch");
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int j = 0; j < m; ++j) {
        std::uint16_t c = static_cast<unsigned char>(form[std::size_t(2 + bytes_per_col * j)]);
        if (bytes_per_col == 2)
            c |= std::uint16_t(static_cast<unsigned char>(form[std::size_t(3 + 2 * j)]) << 8);
        for (int r = 0; r < n; ++r)
            if ((c >> r) & 1) adj[std::size_t(r)].push_back(j);
    }
    return BipartiteGraph(n, m, adj);
}

std::string canonical_hex(const std::string& form) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(form.size() * 2);
    for (unsigned char c : form) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

}  // namespace berge
