#pragma once

#include <boost/rational.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace flagdirac {

using Rational = boost::rational<long long>;

// Cartan type of a simple complex Lie algebra, e.g. {family 'B', rank 3}.
struct CartanSpec {
    char family = 'A';
    int rank = 0;

    bool operator==(const CartanSpec&) const = default;
};

// A root written in the simple-root basis. Positive roots have all
// coefficients >= 0; negatives all <= 0.
struct Root {
    std::vector<int> coeffs;

    bool operator==(const Root&) const = default;
    auto operator<=>(const Root&) const = default;
};

Root operator+(const Root& a, const Root& b);
Root operator-(const Root& a, const Root& b);
Root operator-(const Root& a);

// (alpha, beta, alpha + beta) as indices into RootSystem::positive_roots,
// with alpha before beta in root-system order.
struct SumTriple {
    int alpha = 0;
    int beta = 0;
    int sum = 0;
};

// Positive-root combinatorics of a simple Lie algebra, built once and
// immutable afterwards. Roots are ordered by height, then ascending
// lexicographic coefficient vector; this order is load-bearing (it defines
// the "k lowest roots" used by the constructive existence routine and the
// canonical form of triples).
class RootSystem {
public:
    CartanSpec spec;
    std::vector<Root> positive_roots;
    std::vector<std::vector<int>> cartan_matrix;
    std::vector<int> heights;
    // Squared length over 2 of each simple root, normalized so the first
    // simple root has value 1. Only ratios matter downstream.
    std::vector<Rational> simple_lengths;

    int rank() const { return spec.rank; }
    int size() const { return static_cast<int>(positive_roots.size()); }

    // Index of a positive root, or nullopt if not one.
    std::optional<int> index_of(const Root& r) const;

    int height(int index) const { return heights.at(index); }

    // (beta, beta) as an exact rational, for beta = any integer combination
    // of simple roots.
    Rational length2(const Root& r) const;

    // <r, alpha_j-check> = 2 (r, alpha_j) / (alpha_j, alpha_j).
    int pair_with_coroot(const Root& r, int j) const;

    // All (alpha, beta, alpha+beta) with alpha, beta, alpha+beta positive
    // roots, one entry per unordered pair, alpha before beta in rs order.
    const std::vector<SumTriple>& sum_triples() const { return triples_; }

    // Count of positive roots per height, index 0 = height 1.
    std::vector<int> height_histogram() const;

    // Root name used for I/O, e.g. "[1,2]".
    std::string root_name(int index) const;
    static std::string root_name(const Root& r);
    static std::optional<Root> parse_root_name(const std::string& name, int rank);

private:
    friend RootSystem build_root_system(const CartanSpec& spec);

    std::map<std::vector<int>, int> index_;
    std::vector<SumTriple> triples_;
};

// Throws std::invalid_argument on an inadmissible family/rank pair.
RootSystem build_root_system(const CartanSpec& spec);

// Parses a type string like "A2" or "E8".
CartanSpec parse_cartan_spec(const std::string& text);

// Height of a positive root (sum of simple coefficients). Throws if r is not
// a positive root of rs.
int height(const RootSystem& rs, const Root& r);

}  // namespace flagdirac
