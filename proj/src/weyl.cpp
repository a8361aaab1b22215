#include "flagdirac/weyl.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace flagdirac {

namespace {

// Signed-root id of an integer vector, 0 if it is not a root.
SignedRoot signed_id_of(const RootSystem& rs, const Root& v) {
    if (auto idx = rs.index_of(v)) return positive_id(*idx);
    if (auto idx = rs.index_of(-v)) return negative_id(*idx);
    return 0;
}

Root root_of(const RootSystem& rs, SignedRoot s) {
    Root r = rs.positive_roots[root_index(s)];
    return is_positive(s) ? r : -r;
}

// Builds the positive special-pair table and answers signed queries against
// it. Queries reduce to positive pairs via antisymmetry, the negation rule
// and the length-ratio relation for zero-sum triples; during construction the
// positive pairs hit are always of strictly lower height than the pair being
// fixed, so processing sums by root order terminates.
class Builder {
public:
    Builder(const RootSystem& rs, SignConvention sign) : rs_(rs), sign_(sign) {}

    std::map<std::pair<SignedRoot, SignedRoot>, Rational> build() {
        for (int g = 0; g < rs_.size(); ++g) {
            if (rs_.height(g) < 2) continue;
            fill_pairs_for(g);
        }
        std::map<std::pair<SignedRoot, SignedRoot>, Rational> full;
        for (int ai = 0; ai < rs_.size(); ++ai) {
            for (int bi = 0; bi < rs_.size(); ++bi) {
                for (int asg : {+1, -1}) {
                    for (int bsg : {+1, -1}) {
                        SignedRoot a = asg * positive_id(ai);
                        SignedRoot b = bsg * positive_id(bi);
                        Root sum = root_of(rs_, a) + root_of(rs_, b);
                        if (signed_id_of(rs_, sum) == 0) continue;
                        full[{a, b}] = query(a, b);
                    }
                }
            }
        }
        return full;
    }

    int string_p(SignedRoot a, SignedRoot b) const {
        int p = 0;
        Root down = root_of(rs_, b) - root_of(rs_, a);
        while (signed_id_of(rs_, down) != 0) {
            ++p;
            down = down - root_of(rs_, a);
        }
        return p;
    }

private:
    void fill_pairs_for(int g) {
        const Root& gamma = rs_.positive_roots[g];
        std::vector<std::pair<int, int>> special;
        for (int r = 0; r < rs_.size(); ++r) {
            auto s = rs_.index_of(gamma - rs_.positive_roots[r]);
            if (s && r < *s) special.push_back({r, *s});
        }
        if (special.empty()) {
            throw std::logic_error("non-simple root with no special pair");
        }
        // Root order is the extraspecial order, so the first entry is it.
        const auto [r1, s1] = special.front();
        Rational base(string_p(positive_id(r1), positive_id(s1)) + 1);
        canon_[{r1, s1}] = (sign_ == SignConvention::plus) ? base : -base;
        for (size_t k = 1; k < special.size(); ++k) {
            const auto [r, s] = special[k];
            SignedRoot rr = positive_id(r), ss = positive_id(s);
            SignedRoot nr1 = negative_id(r1);
            Root d1 = root_of(rs_, ss) + root_of(rs_, nr1);
            Root d2 = root_of(rs_, rr) + root_of(rs_, nr1);
            Rational lhs(0);
            if (signed_id_of(rs_, d1) != 0) {
                lhs += query(ss, nr1) * query(signed_id_of(rs_, d1), rr);
            }
            if (signed_id_of(rs_, d2) != 0) {
                lhs += query(nr1, rr) * query(signed_id_of(rs_, d2), ss);
            }
            Rational denom = query(positive_id(g), nr1);
            if (denom == Rational(0)) {
                throw std::logic_error("degenerate extraspecial divisor");
            }
            canon_[{r, s}] = -lhs / denom;
        }
    }

    Rational query(SignedRoot a, SignedRoot b) const {
        Root sum = root_of(rs_, a) + root_of(rs_, b);
        if (signed_id_of(rs_, sum) == 0) return Rational(0);
        if (is_positive(a) && is_positive(b)) {
            int ai = root_index(a), bi = root_index(b);
            auto it = canon_.find({std::min(ai, bi), std::max(ai, bi)});
            if (it == canon_.end()) {
                throw std::logic_error("structure constant requested before it was fixed");
            }
            return ai < bi ? it->second : -it->second;
        }
        if (!is_positive(a) && !is_positive(b)) return -query(-a, -b);
        if (!is_positive(a)) return -query(b, a);
        // a positive, b negative, c = a + b a root.
        SignedRoot c = signed_id_of(rs_, sum);
        Rational la = rs_.length2(root_of(rs_, a));
        Rational lb = rs_.length2(root_of(rs_, b));
        Rational lc = rs_.length2(sum);
        if (is_positive(c)) return -(lc / la) * query(-b, c);
        return (lc / lb) * query(-c, a);
    }

    const RootSystem& rs_;
    SignConvention sign_;
    std::map<std::pair<int, int>, Rational> canon_;
};

Rational table_value(const std::map<std::pair<SignedRoot, SignedRoot>, Rational>& table,
                     SignedRoot a, SignedRoot b) {
    auto it = table.find({a, b});
    return it == table.end() ? Rational(0) : it->second;
}

}  // namespace

Rational StructureConstants::m(int alpha_index, int beta_index) const {
    return signed_m(positive_id(alpha_index), positive_id(beta_index));
}

Rational StructureConstants::signed_m(SignedRoot a, SignedRoot b) const {
    return table_value(table_, a, b);
}

int StructureConstants::string_p(SignedRoot a, SignedRoot b) const {
    int p = 0;
    Root down = root_of(*rs_, b) - root_of(*rs_, a);
    while (signed_id_of(*rs_, down) != 0) {
        ++p;
        down = down - root_of(*rs_, a);
    }
    return p;
}

StructureConstants structure_constants(const RootSystem& rs, SignConvention sign) {
    StructureConstants sc;
    sc.rs_ = &rs;
    sc.table_ = Builder(rs, sign).build();
    return sc;
}

IdentityReport check_structure_identities(const StructureConstants& sc, const RootSystem& rs) {
    return check_structure_identities(sc.table(), rs);
}

IdentityReport check_structure_identities(
    const std::map<std::pair<SignedRoot, SignedRoot>, Rational>& table, const RootSystem& rs) {
    IdentityReport report;
    auto signed_name = [&](SignedRoot s) {
        std::string n = rs.root_name(root_index(s));
        return is_positive(s) ? n : "-" + n;
    };

    for (const auto& [key, value] : table) {
        const auto [a, b] = key;
        if (table_value(table, b, a) != -value) {
            report.violations.push_back("antisymmetry fails at (" + signed_name(a) + ", " +
                                        signed_name(b) + ")");
        }
        if (table_value(table, -a, -b) != -value) {
            report.violations.push_back("negation rule fails at (" + signed_name(a) + ", " +
                                        signed_name(b) + ")");
        }
        if (value == Rational(0)) {
            report.violations.push_back("zero constant stored at (" + signed_name(a) + ", " +
                                        signed_name(b) + ")");
        }
    }

    const int l = rs.size();
    std::vector<SignedRoot> all;
    for (int i = 0; i < l; ++i) {
        all.push_back(positive_id(i));
        all.push_back(negative_id(i));
    }
    auto vec = [&](SignedRoot s) { return root_of(rs, s); };
    auto term = [&](SignedRoot x, SignedRoot y, SignedRoot z) {
        SignedRoot xy = signed_id_of(rs, vec(x) + vec(y));
        if (xy == 0) return Rational(0);
        return table_value(table, x, y) * table_value(table, xy, z);
    };
    for (SignedRoot a : all) {
        for (SignedRoot b : all) {
            if (b == -a) continue;
            for (SignedRoot c : all) {
                if (c == -a || c == -b) continue;
                Root total = vec(a) + vec(b) + vec(c);
                bool zero_total = true;
                for (int t : total.coeffs) zero_total = zero_total && t == 0;
                if (zero_total) continue;
                if (term(a, b, c) + term(b, c, a) + term(c, a, b) != Rational(0)) {
                    std::ostringstream msg;
                    msg << "cocycle fails at (" << signed_name(a) << ", " << signed_name(b)
                        << ", " << signed_name(c) << ")";
                    report.violations.push_back(msg.str());
                }
            }
        }
    }
    return report;
}

}  // namespace flagdirac
