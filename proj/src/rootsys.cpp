#include "acm/rootsys.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace acm {

void DynkinType::validate() const {
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("invalid Dynkin type " + str() + ": " + what);
    };
    switch (series) {
        case Series::A:
            if (rank < 1) fail("series A requires rank >= 1");
            break;
        case Series::B:
            if (rank < 2) fail("series B requires rank >= 2");
            break;
        case Series::C:
            if (rank < 2) fail("series C requires rank >= 2");
            break;
        case Series::D:
            if (rank < 3) fail("series D requires rank >= 3");
            break;
        case Series::E:
            if (rank < 6 || rank > 8) fail("series E requires rank in {6,7,8}");
            break;
        case Series::F:
            if (rank != 4) fail("series F requires rank = 4");
            break;
        case Series::G:
            if (rank != 2) fail("series G requires rank = 2");
            break;
        default:
            fail("unknown series");
    }
    if (rank > 128) fail("rank too large (supported up to 128)");
}

std::string DynkinType::str() const {
    return std::string(1, char(series)) + std::to_string(rank);
}

DynkinType DynkinType::parse(std::string_view token) {
    if (token.size() < 2)
        throw std::invalid_argument("cannot parse Dynkin type from '" + std::string(token) + "'");
    char s = token[0];
    if (s < 'A' || s > 'G')
        throw std::invalid_argument("unknown Dynkin series '" + std::string(1, s) + "'");
    long long r = 0;
    for (size_t i = 1; i < token.size(); ++i) {
        if (token[i] < '0' || token[i] > '9')
            throw std::invalid_argument("cannot parse Dynkin type from '" + std::string(token) + "'");
        r = r * 10 + (token[i] - '0');
        if (r > 1000) break;
    }
    DynkinType t{Series(s), int(r)};
    t.validate();
    return t;
}

Rational pairing(const AmbientVector& u, const AmbientVector& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("pairing: ambient dimension mismatch");
    Rational s;
    for (size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

AmbientVector operator+(const AmbientVector& u, const AmbientVector& v) {
    if (u.size() != v.size()) throw std::invalid_argument("vector dimension mismatch");
    AmbientVector r(u.size());
    for (size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
    return r;
}

AmbientVector operator-(const AmbientVector& u, const AmbientVector& v) {
    if (u.size() != v.size()) throw std::invalid_argument("vector dimension mismatch");
    AmbientVector r(u.size());
    for (size_t i = 0; i < u.size(); ++i) r[i] = u[i] - v[i];
    return r;
}

AmbientVector operator*(const Rational& c, const AmbientVector& v) {
    AmbientVector r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

long long positive_root_count(DynkinType type) {
    long long n = type.rank;
    switch (type.series) {
        case Series::A: return n * (n + 1) / 2;
        case Series::B:
        case Series::C: return n * n;
        case Series::D: return n * (n - 1);
        case Series::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
        case Series::F: return 24;
        case Series::G: return 6;
    }
    throw std::invalid_argument("unknown series");
}

namespace {

AmbientVector vec(std::initializer_list<Rational> xs) { return AmbientVector(xs); }

AmbientVector unit(int dim, int i) {
    AmbientVector v(dim, Rational(0));
    v[i] = 1;
    return v;
}

// Lexicographic order on exact coordinates; the canonical listing order.
bool lex_less(const AmbientVector& a, const AmbientVector& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

struct Realization {
    int ambient_dim;
    std::vector<AmbientVector> simple_roots;
    std::vector<AmbientVector> fundamental_weights;
};

Realization realize(DynkinType t) {
    const int n = t.rank;
    Realization r;
    const Rational h(1, 2);
    switch (t.series) {
        case Series::A: {
            r.ambient_dim = n + 1;
            for (int i = 0; i < n; ++i)
                r.simple_roots.push_back(unit(n + 1, i) - unit(n + 1, i + 1));
            for (int i = 1; i <= n; ++i) {
                AmbientVector w(n + 1, Rational(-i, n + 1));
                for (int j = 0; j < i; ++j) w[j] += 1;
                r.fundamental_weights.push_back(w);
            }
            break;
        }
        case Series::B: {
            r.ambient_dim = n;
            for (int i = 0; i + 1 < n; ++i)
                r.simple_roots.push_back(unit(n, i) - unit(n, i + 1));
            r.simple_roots.push_back(unit(n, n - 1));
            for (int i = 1; i < n; ++i) {
                AmbientVector w(n, Rational(0));
                for (int j = 0; j < i; ++j) w[j] = 1;
                r.fundamental_weights.push_back(w);
            }
            r.fundamental_weights.push_back(AmbientVector(n, h));
            break;
        }
        case Series::C: {
            r.ambient_dim = n;
            for (int i = 0; i + 1 < n; ++i)
                r.simple_roots.push_back(unit(n, i) - unit(n, i + 1));
            r.simple_roots.push_back(Rational(2) * unit(n, n - 1));
            for (int i = 1; i <= n; ++i) {
                AmbientVector w(n, Rational(0));
                for (int j = 0; j < i; ++j) w[j] = 1;
                r.fundamental_weights.push_back(w);
            }
            break;
        }
        case Series::D: {
            r.ambient_dim = n;
            for (int i = 0; i + 1 < n; ++i)
                r.simple_roots.push_back(unit(n, i) - unit(n, i + 1));
            r.simple_roots.push_back(unit(n, n - 2) + unit(n, n - 1));
            for (int i = 1; i <= n - 2; ++i) {
                AmbientVector w(n, Rational(0));
                for (int j = 0; j < i; ++j) w[j] = 1;
                r.fundamental_weights.push_back(w);
            }
            AmbientVector wm(n, h);
            wm[n - 1] = -h;
            r.fundamental_weights.push_back(wm);
            r.fundamental_weights.push_back(AmbientVector(n, h));
            break;
        }
        case Series::E: {
            r.ambient_dim = 8;
            r.simple_roots.push_back(vec({h, -h, -h, -h, -h, -h, -h, h}));
            r.simple_roots.push_back(vec({1, 1, 0, 0, 0, 0, 0, 0}));
            for (int i = 3; i <= n; ++i)
                r.simple_roots.push_back(unit(8, i - 2) - unit(8, i - 3));
            if (n == 6) {
                const Rational t3(1, 3), t23(2, 3), f6(5, 6);
                r.fundamental_weights = {
                    vec({0, 0, 0, 0, 0, -t23, -t23, t23}),
                    vec({h, h, h, h, h, -h, -h, h}),
                    vec({-h, h, h, h, h, -f6, -f6, f6}),
                    vec({0, 0, 1, 1, 1, -1, -1, 1}),
                    vec({0, 0, 0, 1, 1, -t23, -t23, t23}),
                    vec({0, 0, 0, 0, 1, -t3, -t3, t3}),
                };
            } else if (n == 7) {
                const Rational t32(3, 2);
                r.fundamental_weights = {
                    vec({0, 0, 0, 0, 0, 0, -1, 1}),
                    vec({h, h, h, h, h, h, -1, 1}),
                    vec({-h, h, h, h, h, h, -t32, t32}),
                    vec({0, 0, 1, 1, 1, 1, -2, 2}),
                    vec({0, 0, 0, 1, 1, 1, -t32, t32}),
                    vec({0, 0, 0, 0, 1, 1, -1, 1}),
                    vec({0, 0, 0, 0, 0, 1, -h, h}),
                };
            } else {
                const Rational f2(5, 2), s2(7, 2);
                r.fundamental_weights = {
                    vec({0, 0, 0, 0, 0, 0, 0, 2}),
                    vec({h, h, h, h, h, h, h, f2}),
                    vec({-h, h, h, h, h, h, h, s2}),
                    vec({0, 0, 1, 1, 1, 1, 1, 5}),
                    vec({0, 0, 0, 1, 1, 1, 1, 4}),
                    vec({0, 0, 0, 0, 1, 1, 1, 3}),
                    vec({0, 0, 0, 0, 0, 1, 1, 2}),
                    vec({0, 0, 0, 0, 0, 0, 1, 1}),
                };
            }
            break;
        }
        case Series::F: {
            r.ambient_dim = 4;
            r.simple_roots = {
                vec({0, 1, -1, 0}),
                vec({0, 0, 1, -1}),
                vec({0, 0, 0, 1}),
                vec({h, -h, -h, -h}),
            };
            const Rational t32(3, 2);
            r.fundamental_weights = {
                vec({1, 1, 0, 0}),
                vec({2, 1, 1, 0}),
                vec({t32, h, h, h}),
                vec({1, 0, 0, 0}),
            };
            break;
        }
        case Series::G: {
            r.ambient_dim = 3;
            r.simple_roots = {
                vec({0, 1, -1}),
                vec({1, -2, 1}),
            };
            r.fundamental_weights = {
                vec({1, 0, -1}),
                vec({2, -1, -1}),
            };
            break;
        }
        default:
            throw std::invalid_argument("unknown series");
    }
    return r;
}

}  // namespace

RootSystem build_root_system(DynkinType type) {
    type.validate();
    Realization real = realize(type);
    const int n = type.rank;

    RootSystem rs;
    rs.dynkin = type;
    rs.ambient_dim = real.ambient_dim;
    rs.simple_roots = std::move(real.simple_roots);
    rs.fundamental_weights = std::move(real.fundamental_weights);

    std::vector<Rational> norms(n);
    for (int i = 0; i < n; ++i) norms[i] = pairing(rs.simple_roots[i], rs.simple_roots[i]);

    // Duality check: 2 (w_i, a_j) / (a_j, a_j) = delta_ij.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Rational p = Rational(2) * pairing(rs.fundamental_weights[i], rs.simple_roots[j]) / norms[j];
            if (p != Rational(i == j ? 1 : 0))
                throw internal_error("fundamental weight table fails duality for " + type.str());
        }
    }

    rs.rho = AmbientVector(rs.ambient_dim, Rational(0));
    for (const auto& w : rs.fundamental_weights) rs.rho = rs.rho + w;
    for (int i = 0; i < n; ++i) {
        if (Rational(2) * pairing(rs.rho, rs.simple_roots[i]) / norms[i] != Rational(1))
            throw internal_error("rho pairing check failed for " + type.str());
    }

    // Generate the whole root system as the closure of the base under
    // simple reflections, tracking simple-root coordinates alongside.
    std::map<AmbientVector, std::vector<long long>, bool (*)(const AmbientVector&, const AmbientVector&)>
        seen(lex_less);
    std::vector<AmbientVector> queue;
    for (int i = 0; i < n; ++i) {
        std::vector<long long> c(n, 0);
        c[i] = 1;
        seen.emplace(rs.simple_roots[i], std::move(c));
        queue.push_back(rs.simple_roots[i]);
    }
    while (!queue.empty()) {
        AmbientVector v = std::move(queue.back());
        queue.pop_back();
        std::vector<long long> coords = seen.at(v);
        for (int i = 0; i < n; ++i) {
            Rational t = Rational(2) * pairing(v, rs.simple_roots[i]) / norms[i];
            long long ti = t.as_integer();  // Cartan integers
            if (ti == 0) continue;
            AmbientVector w = v - Rational(ti) * rs.simple_roots[i];
            if (seen.count(w)) continue;
            std::vector<long long> wc = coords;
            wc[i] -= ti;
            seen.emplace(w, std::move(wc));
            queue.push_back(w);
        }
    }

    for (auto& [root, coords] : seen) {
        bool pos = true, neg = true;
        for (long long c : coords) {
            if (c < 0) pos = false;
            if (c > 0) neg = false;
        }
        if (pos == neg) throw internal_error("mixed-sign root coordinates for " + type.str());
        if (pos) {
            rs.positive_roots.push_back(root);
            rs.positive_root_coords.push_back(coords);
        }
    }
    // std::map iteration is already lexicographic; keep that as the canonical order.

    if ((long long)rs.positive_roots.size() != positive_root_count(type))
        throw internal_error("positive root count mismatch for " + type.str() + ": got " +
                             std::to_string(rs.positive_roots.size()));
    return rs;
}

AmbientVector to_ambient(const RootSystem& rs, const WeightCoeffs& w) {
    if (w.dynkin != rs.dynkin)
        throw std::invalid_argument("weight/root-system type mismatch");
    if ((int)w.a.size() != rs.rank())
        throw std::invalid_argument("weight has wrong number of coefficients");
    AmbientVector v(rs.ambient_dim, Rational(0));
    for (int i = 0; i < rs.rank(); ++i) {
        if (w.a[i] != 0) v = v + Rational(w.a[i]) * rs.fundamental_weights[i];
    }
    return v;
}

WeightCoeffs to_weight_coeffs(const RootSystem& rs, const AmbientVector& v) {
    WeightCoeffs w{rs.dynkin, std::vector<long long>(rs.rank(), 0)};
    for (int i = 0; i < rs.rank(); ++i) {
        Rational norm = pairing(rs.simple_roots[i], rs.simple_roots[i]);
        w.a[i] = (Rational(2) * pairing(v, rs.simple_roots[i]) / norm).as_integer();
    }
    return w;
}

AmbientVector reflect_simple(const RootSystem& rs, int i, const AmbientVector& v) {
    const AmbientVector& a = rs.simple_roots[i];
    Rational t = Rational(2) * pairing(v, a) / pairing(a, a);
    return v - t * a;
}

ChamberIndex chamber_index(const RootSystem& rs, const AmbientVector& v) {
    int neg = 0;
    for (const auto& root : rs.positive_roots) {
        int s = pairing(v, root).sign();
        if (s == 0) return {true, 0};
        if (s < 0) ++neg;
    }
    return {false, neg};
}

ChamberClass classify_chamber(const RootSystem& rs, const AmbientVector& v) {
    ChamberIndex ci = chamber_index(rs, v);
    if (ci.singular) return {true, 0, {}, 0};

    AmbientVector cur = v;
    int steps = 0;
    for (;;) {
        int neg = -1;
        for (int i = 0; i < rs.rank(); ++i) {
            if (pairing(cur, rs.simple_roots[i]).sign() < 0) {
                neg = i;
                break;
            }
        }
        if (neg < 0) break;
        cur = reflect_simple(rs, neg, cur);
        ++steps;
        if (steps > (int)rs.positive_roots.size())
            throw internal_error("dominant-representative loop exceeded |Phi^+|");
    }
    if (steps != ci.index)
        throw internal_error("reflection count " + std::to_string(steps) +
                             " != negative-pairing index " + std::to_string(ci.index));
    return {false, ci.index, std::move(cur), steps};
}

}  // namespace acm
