#include "flagdirac/roots.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace flagdirac {

Root operator+(const Root& a, const Root& b) {
    Root r = a;
    for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
}

Root operator-(const Root& a, const Root& b) {
    Root r = a;
    for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
    return r;
}

Root operator-(const Root& a) {
    Root r = a;
    for (auto& c : r.coeffs) c = -c;
    return r;
}

namespace {

void check_admissible(const CartanSpec& spec) {
    const int n = spec.rank;
    bool ok = false;
    switch (spec.family) {
        case 'A': ok = n >= 1; break;
        case 'B': ok = n >= 2; break;
        case 'C': ok = n >= 2; break;
        case 'D': ok = n >= 3; break;
        case 'E': ok = n >= 6 && n <= 8; break;
        case 'F': ok = n == 4; break;
        case 'G': ok = n == 2; break;
        default: ok = false; break;
    }
    if (!ok) {
        std::ostringstream msg;
        msg << "inadmissible Cartan type " << spec.family << spec.rank;
        throw std::invalid_argument(msg.str());
    }
}

// A[i][j] = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j), Bourbaki numbering.
std::vector<std::vector<int>> cartan_matrix_for(const CartanSpec& spec) {
    const int n = spec.rank;
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j, int aij = -1, int aji = -1) {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    switch (spec.family) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'B':
            // Last simple root short: double arrow from n-2 toward n-1.
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
            link(n - 2, n - 1, -2, -1);
            break;
        case 'C':
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
            link(n - 2, n - 1, -1, -2);
            break;
        case 'D':
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
            link(n - 3, n - 1);
            break;
        case 'E':
            // Chain 0-2-3-4-5(-6-7) with node 1 attached to node 3.
            link(0, 2);
            for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
            link(1, 3);
            break;
        case 'F':
            link(0, 1);
            link(1, 2, -2, -1);
            link(2, 3);
            break;
        case 'G':
            link(0, 1, -1, -3);
            break;
        default:
            break;
    }
    return a;
}

}  // namespace

std::optional<int> RootSystem::index_of(const Root& r) const {
    auto it = index_.find(r.coeffs);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Rational RootSystem::length2(const Root& r) const {
    Rational total(0);
    const int n = rank();
    for (int j = 0; j < n; ++j) {
        long long inner = 0;
        for (int i = 0; i < n; ++i) inner += static_cast<long long>(r.coeffs[i]) * cartan_matrix[i][j];
        total += Rational(inner) * simple_lengths[j] * Rational(r.coeffs[j]);
    }
    return total * 2;
}

int RootSystem::pair_with_coroot(const Root& r, int j) const {
    int v = 0;
    for (int i = 0; i < rank(); ++i) v += r.coeffs[i] * cartan_matrix[i][j];
    return v;
}

std::vector<int> RootSystem::height_histogram() const {
    int max_h = 0;
    for (int h : heights) max_h = std::max(max_h, h);
    std::vector<int> hist(max_h, 0);
    for (int h : heights) ++hist[h - 1];
    return hist;
}

std::string RootSystem::root_name(int index) const {
    return root_name(positive_roots.at(index));
}

std::string RootSystem::root_name(const Root& r) {
    std::ostringstream out;
    out << '[';
    for (size_t i = 0; i < r.coeffs.size(); ++i) {
        if (i) out << ',';
        out << r.coeffs[i];
    }
    out << ']';
    return out.str();
}

std::optional<Root> RootSystem::parse_root_name(const std::string& name, int rank) {
    if (name.size() < 2 || name.front() != '[' || name.back() != ']') return std::nullopt;
    Root r;
    std::string body = name.substr(1, name.size() - 2);
    std::istringstream in(body);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(piece, &used);
            if (used != piece.size()) return std::nullopt;
            r.coeffs.push_back(v);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    if (static_cast<int>(r.coeffs.size()) != rank) return std::nullopt;
    return r;
}

RootSystem build_root_system(const CartanSpec& spec) {
    check_admissible(spec);
    RootSystem rs;
    rs.spec = spec;
    rs.cartan_matrix = cartan_matrix_for(spec);
    const int n = spec.rank;

    // Squared-length halves from the Cartan matrix: L_j / L_i = A[j][i] / A[i][j]
    // along graph edges, normalized at node 0. Exact rationals.
    rs.simple_lengths.assign(n, Rational(0));
    rs.simple_lengths[0] = Rational(1);
    {
        std::vector<int> todo = {0};
        while (!todo.empty()) {
            int i = todo.back();
            todo.pop_back();
            for (int j = 0; j < n; ++j) {
                if (i == j || rs.cartan_matrix[i][j] == 0) continue;
                if (rs.simple_lengths[j] != Rational(0)) continue;
                rs.simple_lengths[j] =
                    rs.simple_lengths[i] * Rational(rs.cartan_matrix[j][i], rs.cartan_matrix[i][j]);
                todo.push_back(j);
            }
        }
    }

    // Closure by height: every positive root of height h+1 is a height-h root
    // plus a simple root; the string count q = p - <beta, alpha_i-check>
    // decides extension.
    std::set<std::vector<int>> seen;
    std::vector<Root> current;
    for (int i = 0; i < n; ++i) {
        Root simple;
        simple.coeffs.assign(n, 0);
        simple.coeffs[i] = 1;
        seen.insert(simple.coeffs);
        current.push_back(simple);
    }
    std::vector<Root> all = current;
    while (!current.empty()) {
        std::vector<Root> next;
        for (const Root& beta : current) {
            for (int i = 0; i < n; ++i) {
                Root simple;
                simple.coeffs.assign(n, 0);
                simple.coeffs[i] = 1;
                int p = 0;
                Root down = beta - simple;
                while (seen.count(down.coeffs)) {
                    ++p;
                    down = down - simple;
                }
                int q = p - [&] {
                    int v = 0;
                    for (int k = 0; k < n; ++k) v += beta.coeffs[k] * rs.cartan_matrix[k][i];
                    return v;
                }();
                if (q >= 1) {
                    Root up = beta + simple;
                    if (!seen.count(up.coeffs)) {
                        seen.insert(up.coeffs);
                        next.push_back(up);
                    }
                }
            }
        }
        all.insert(all.end(), next.begin(), next.end());
        current = std::move(next);
    }

    auto height_of = [](const Root& r) {
        return std::accumulate(r.coeffs.begin(), r.coeffs.end(), 0);
    };
    std::sort(all.begin(), all.end(), [&](const Root& a, const Root& b) {
        int ha = height_of(a), hb = height_of(b);
        if (ha != hb) return ha < hb;
        return a.coeffs < b.coeffs;
    });
    rs.positive_roots = std::move(all);
    for (int i = 0; i < rs.size(); ++i) {
        rs.index_[rs.positive_roots[i].coeffs] = i;
        rs.heights.push_back(height_of(rs.positive_roots[i]));
    }
    for (int i = 0; i < rs.size(); ++i) {
        for (int j = i + 1; j < rs.size(); ++j) {
            auto sum = rs.index_of(rs.positive_roots[i] + rs.positive_roots[j]);
            if (sum) rs.triples_.push_back({i, j, *sum});
        }
    }
    return rs;
}

CartanSpec parse_cartan_spec(const std::string& text) {
    if (text.size() < 2 || !std::isalpha(static_cast<unsigned char>(text[0]))) {
        throw std::invalid_argument("expected a type like A2 or B3, got '" + text + "'");
    }
    CartanSpec spec;
    spec.family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    try {
        size_t used = 0;
        spec.rank = std::stoi(text.substr(1), &used);
        if (used + 1 != text.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("expected a type like A2 or B3, got '" + text + "'");
    }
    check_admissible(spec);
    return spec;
}

int height(const RootSystem& rs, const Root& r) {
    auto idx = rs.index_of(r);
    if (!idx) throw std::invalid_argument("not a positive root of this system: " + RootSystem::root_name(r));
    return rs.height(*idx);
}

}  // namespace flagdirac
