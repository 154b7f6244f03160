#include "ygraph/graph_model.hpp"

#include <numeric>
#include <ostream>
#include <string>

#include "ygraph/error.hpp"

namespace ygraph {

namespace {

long reduce_jump(long jump, long n) {
    const long r = ((jump % n) + n) % n;
    return std::min(r, n - r);
}

}  // namespace

std::size_t YGraphParams::vertex(int segment, long position) const {
    const long y = ((position % n_) + n_) % n_;
    return static_cast<std::size_t>(segment) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y);
}

std::ostream& operator<<(std::ostream& os, const YGraphParams& p) {
    return os << "Y(" << p.n() << ';' << p.k() << ',' << p.l() << ',' << p.m() << ')';
}

YGraphParams validate_params(long n, long k, long l, long m) {
    if (n < 2) throw Error(ErrorKind::BadSize, "n must be at least 2, got " + std::to_string(n));
    for (long jump : {k, l, m}) {
        if (jump % n == 0)
            throw Error(ErrorKind::LoopEdge,
                        "jump " + std::to_string(jump) + " is 0 mod n=" + std::to_string(n) + " (loop edge)");
    }
    const long g = std::gcd(std::gcd(k, l), std::gcd(m, n));
    if (g != 1) throw Error(ErrorKind::DisconnectedGraph, "disconnected: gcd(k,l,m,n)=" + std::to_string(g));
    return YGraphParams(n, reduce_jump(k, n), reduce_jump(l, n), reduce_jump(m, n));
}

EdgeMultiset edge_multiset(const YGraphParams& p) {
    EdgeMultiset e;
    e.vertex_count = p.vertex_count();
    e.edges.reserve(6 * static_cast<std::size_t>(p.n()));
    for (int segment = 1; segment <= 3; ++segment)
        for (long y = 0; y < p.n(); ++y) e.edges.push_back({p.vertex(0, y), p.vertex(segment, y)});
    const long jumps[] = {p.k(), p.l(), p.m()};
    for (int segment = 1; segment <= 3; ++segment) {
        const long jump = jumps[segment - 1];
        for (long y = 0; y < p.n(); ++y) e.edges.push_back({p.vertex(segment, y), p.vertex(segment, y + jump)});
    }
    return e;
}

IntMatrix laplacian_from_edges(const EdgeMultiset& e) {
    IntMatrix lap(e.vertex_count, e.vertex_count);
    for (const auto& [u, v] : e.edges) {
        if (u == v) throw std::invalid_argument("loops are not supported");
        lap(u, u) += 1;
        lap(v, v) += 1;
        lap(u, v) -= 1;
        lap(v, u) -= 1;
    }
    return lap;
}

IntMatrix outer_block(long n, long jump) {
    const auto size = static_cast<std::size_t>(n);
    IntMatrix block = IntMatrix::identity(size) * BigInt(3);
    block -= IntMatrix::shift_power(size, jump);
    block -= IntMatrix::shift_power(size, -jump);
    return block;
}

IntMatrix laplacian_full(const YGraphParams& p) {
    const auto n = static_cast<std::size_t>(p.n());
    const IntMatrix eye = IntMatrix::identity(n);
    const IntMatrix minus_eye = -eye;
    IntMatrix lap(4 * n, 4 * n);
    lap.set_block(0, 0, eye * BigInt(3));
    const long jumps[] = {p.k(), p.l(), p.m()};
    for (std::size_t x = 1; x <= 3; ++x) {
        lap.set_block(0, x * n, minus_eye);
        lap.set_block(x * n, 0, minus_eye);
        lap.set_block(x * n, x * n, outer_block(p.n(), jumps[x - 1]));
    }
    return lap;
}

IntMatrix reduced_matrix(const YGraphParams& p) {
    const auto n = static_cast<std::size_t>(p.n());
    const IntMatrix a = outer_block(p.n(), p.k());
    const IntMatrix b = outer_block(p.n(), p.l());
    const IntMatrix c = outer_block(p.n(), p.m());
    IntMatrix m(2 * n, 2 * n);
    m.set_block(0, 0, BigInt(3) * (a * b) - a - b);
    m.set_block(0, n, -a);
    m.set_block(n, 0, -b);
    m.set_block(n, n, c);
    return m;
}

}  // namespace ygraph
