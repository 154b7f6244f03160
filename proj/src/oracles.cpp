#include "ygraph/oracles.hpp"

#include <numeric>

#include "ygraph/error.hpp"
#include "ygraph/jacobian.hpp"
#include "ygraph/spanning_trees.hpp"

namespace ygraph {

namespace {

struct DisjointSets {
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }

    std::vector<std::size_t> parent;
};

BigInt cofactor_determinant(const std::vector<std::vector<BigInt>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    BigInt det = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (sgn(m[0][col]) == 0) continue;
        std::vector<std::vector<BigInt>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<BigInt> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != col) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        const BigInt term = m[0][col] * cofactor_determinant(minor);
        det += (col % 2 == 0) ? term : BigInt(-term);
    }
    return det;
}

// All size-k subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        out.push_back(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

}  // namespace

BigInt enumerate_spanning_trees(const EdgeMultiset& e) {
    const std::size_t nv = e.vertex_count;
    const std::size_t ne = e.edges.size();
    if (nv > kEnumerationMaxVertices || ne > kEnumerationMaxEdges)
        throw Error(ErrorKind::TooLarge, "enumeration is limited to 14 vertices and 24 edges");
    if (nv <= 1) return 1;
    const std::size_t pick = nv - 1;
    if (ne < pick) return 0;

    unsigned long long count = 0;
    std::vector<std::size_t> idx(pick);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        DisjointSets sets(nv);
        bool acyclic = true;
        for (std::size_t i : idx) {
            if (!sets.unite(e.edges[i].u, e.edges[i].v)) {
                acyclic = false;
                break;
            }
        }
        // pick = |V|-1 acyclic edges always span.
        if (acyclic) ++count;

        std::size_t i = pick;
        while (i > 0 && idx[i - 1] == ne - pick + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < pick; ++j) idx[j] = idx[j - 1] + 1;
    }
    return BigInt(static_cast<unsigned long>(count));
}

std::vector<BigInt> snf_minor_gcd(const IntMatrix& m) {
    if (m.rows() > kMinorGcdMaxDimension || m.cols() > kMinorGcdMaxDimension)
        throw Error(ErrorKind::TooLarge, "minor-gcd oracle is limited to 5x5 matrices");
    const std::size_t limit = std::min(m.rows(), m.cols());
    std::vector<BigInt> factors;
    BigInt previous = 1;
    for (std::size_t size = 1; size <= limit; ++size) {
        BigInt divisor = 0;
        for (const auto& rows : subsets(m.rows(), size)) {
            for (const auto& cols : subsets(m.cols(), size)) {
                std::vector<std::vector<BigInt>> minor(size, std::vector<BigInt>(size));
                for (std::size_t i = 0; i < size; ++i)
                    for (std::size_t j = 0; j < size; ++j) minor[i][j] = m(rows[i], cols[j]);
                divisor = big_gcd(divisor, cofactor_determinant(minor));
            }
        }
        if (sgn(divisor) == 0) {
            factors.resize(limit, BigInt(0));
            break;
        }
        factors.push_back(divexact(divisor, previous));
        previous = divisor;
    }
    return factors;
}

std::vector<YGraphParams> normalized_params_up_to(long max_n) {
    std::vector<YGraphParams> out;
    for (long n = 2; n <= max_n; ++n) {
        const long half = n / 2;
        for (long k = 1; k <= half; ++k)
            for (long l = k; l <= half; ++l)
                for (long m = l; m <= half; ++m) {
                    if (std::gcd(std::gcd(k, l), std::gcd(m, n)) != 1) continue;
                    out.push_back(validate_params(n, k, l, m));
                }
    }
    return out;
}

namespace {

void check_equal(ConsistencyEntry& entry, const std::string& what, const std::string& lhs, const std::string& rhs) {
    ++entry.checks_run;
    if (lhs != rhs) {
        entry.all_passed = false;
        entry.failures.push_back(what + ": " + lhs + " != " + rhs);
    }
}

void check_entry(ConsistencyEntry& entry, std::stop_token stop) {
    const YGraphParams& p = entry.params;
    auto& values = entry.route_values;

    const BigInt kirchhoff = tree_count_kirchhoff(p, stop);
    values["tree:kirchhoff"] = to_decimal(kirchhoff);
    values["tree:resultant"] = to_decimal(tree_count_resultant(p));
    values["tree:chebyshev"] = to_decimal(tree_count_chebyshev(p).value);
    const bool y111 = p.k() == 1 && p.l() == 1 && p.m() == 1;
    if (y111) values["tree:closed111"] = to_decimal(tree_count_y111_closed(p.n()));
    if (p.n() <= 3) values["tree:enumeration"] = to_decimal(enumerate_spanning_trees(edge_multiset(p)));
    if (p.k() == 1 && p.l() == 1 && p.m() == 2) values["tree:surd112"] = to_decimal(tree_count_y112_surd(p.n()));
    if (p.k() == 1 && p.l() == 2 && p.m() == 2) values["tree:surd122"] = to_decimal(tree_count_y122_surd(p.n()));
    for (const auto& [route, value] : values)
        if (route.starts_with("tree:")) check_equal(entry, route + " vs tree:kirchhoff", value, values["tree:kirchhoff"]);

    const AbelianGroup full_coker = cokernel_torsion(laplacian_full(p), stop);
    check_equal(entry, "free rank of coker(L)", std::to_string(full_coker.free_rank()), "1");
    const AbelianGroup full = full_coker.torsion();
    values["jac:full"] = to_string(full);
    values["jac:reduced"] = to_string(jacobian_of(p, JacobianRoute::reduced, stop));
    if (y111) {
        values["jac:decomposed"] = to_string(jacobian_y111_decomposed(p.n()));
        if (p.n() >= 4) values["jac:closed"] = to_string(jacobian_y111_closed(p.n()));
    }
    for (const auto& [route, value] : values)
        if (route.starts_with("jac:")) check_equal(entry, route + " vs jac:full", value, values["jac:full"]);
    check_equal(entry, "|Jac| vs tau", to_decimal(full.order()), to_decimal(kirchhoff));
}

}  // namespace

ConsistencyReport consistency_suite(long max_n, std::stop_token stop) {
    if (max_n > kConsistencyMaxN)
        throw Error(ErrorKind::TooLarge, "consistency suite is limited to n <= 14, got " + std::to_string(max_n));
    ConsistencyReport report;
    for (const auto& p : normalized_params_up_to(max_n)) {
        if (stop.stop_requested()) throw Error(ErrorKind::Cancelled, "consistency suite cancelled");
        ConsistencyEntry entry{p, 0, true, {}, {}};
        try {
            check_entry(entry, stop);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Cancelled) throw;
            entry.all_passed = false;
            entry.failures.push_back(std::string(to_string(e.kind())) + ": " + e.what());
        }
        report.checks_run += entry.checks_run;
        report.all_passed = report.all_passed && entry.all_passed;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace ygraph
