#include "z2lab/intset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace z2lab {

namespace {

constexpr std::int64_t kBruteForceCap = 10'000'000;

std::int64_t isqrt64(std::int64_t v) {
    if (v < 0) return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

IntegerSet IntegerSet::of(std::vector<std::int64_t> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    IntegerSet v;
    v.elements = std::move(values);
    return v;
}

bool IntegerSet::contains(std::int64_t x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

LatticeSet LatticeSet::of(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    LatticeSet v;
    v.points = std::move(pts);
    return v;
}

Z2Result z2_constant(const IntegerSet& v) {
    Z2Result out;
    const auto& e = v.elements;
    std::unordered_map<std::int64_t, std::int64_t> hist;
    hist.reserve(e.size() * e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = 0; j < e.size(); ++j)
            if (i != j) ++hist[e[j] - e[i]];
    for (const auto& [g, c] : hist) out.histogram.emplace(g, c);
    for (const auto& [g, c] : out.histogram) {
        if (c > out.z2) out.z2 = c;
    }
    if (out.z2 > 0) {
        // counts are symmetric in +-g; report the smallest positive maximizer
        for (const auto& [g, c] : out.histogram) {
            if (c != out.z2 || g <= 0) continue;
            if (!out.argmax_difference || g < *out.argmax_difference) out.argmax_difference = g;
        }
    }
    return out;
}

Z2LatticeResult z2_constant(const LatticeSet& v) {
    Z2LatticeResult out;
    const auto& p = v.points;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            if (i != j) ++out.histogram[LatticePoint{p[j].m - p[i].m, p[j].n - p[i].n}];
    auto smaller = [](const LatticePoint& a, const LatticePoint& b) {
        const auto la = std::abs(a.m) + std::abs(a.n);
        const auto lb = std::abs(b.m) + std::abs(b.n);
        if (la != lb) return la < lb;
        return a < b;
    };
    for (const auto& [g, c] : out.histogram) {
        if (c > out.z2) out.z2 = c;
    }
    if (out.z2 > 0) {
        for (const auto& [g, c] : out.histogram) {
            if (c != out.z2) continue;
            if (!out.argmax_difference || smaller(g, *out.argmax_difference)) out.argmax_difference = g;
        }
    }
    return out;
}

std::int64_t zp_constant(const IntegerSet& v, int p) {
    if (p < 2) throw InputError("zp_constant: p must be >= 2");
    const auto& e = v.elements;
    const auto n = static_cast<std::int64_t>(e.size());
    if (n == 0) return 0;

    double work = 1.0;
    for (int i = 0; i < p; ++i) work *= static_cast<double>(n);

    // sign of position j (1-based) in the alternating sum is (-1)^j
    if (work <= static_cast<double>(kBruteForceCap)) {
        std::unordered_map<std::int64_t, std::int64_t> counts;
        std::vector<std::size_t> idx(static_cast<std::size_t>(p), 0);
        for (;;) {
            std::int64_t s = 0;
            for (int j = 0; j < p; ++j) {
                const std::int64_t x = e[idx[static_cast<std::size_t>(j)]];
                s += (j % 2 == 0) ? -x : x;
            }
            ++counts[s];
            int pos = p - 1;
            while (pos >= 0) {
                if (++idx[static_cast<std::size_t>(pos)] < static_cast<std::size_t>(n)) break;
                idx[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
        std::int64_t best = 0;
        for (const auto& [g, c] : counts)
            if (g != 0) best = std::max(best, c);
        return best;
    }

    if (p % 2 != 0)
        throw Error("zp_constant: odd p beyond the brute-force cap is not supported");

    // Meet in the middle on half-length alternating sums.  Both halves use
    // the pattern -,+,-,+,...; when p/2 is odd the second half enters the
    // full sum negated.
    const int half = p / 2;
    double half_work = 1.0;
    for (int i = 0; i < half; ++i) half_work *= static_cast<double>(n);
    if (half_work > static_cast<double>(kBruteForceCap))
        throw Error("zp_constant: set too large for meet-in-the-middle at this p");

    std::unordered_map<std::int64_t, std::int64_t> h1;
    std::vector<std::size_t> idx(static_cast<std::size_t>(half), 0);
    for (;;) {
        std::int64_t s = 0;
        for (int j = 0; j < half; ++j) {
            const std::int64_t x = e[idx[static_cast<std::size_t>(j)]];
            s += (j % 2 == 0) ? -x : x;
        }
        ++h1[s];
        int pos = half - 1;
        while (pos >= 0) {
            if (++idx[static_cast<std::size_t>(pos)] < static_cast<std::size_t>(n)) break;
            idx[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    const bool negate_second = (half % 2 != 0);
    const double pairs = static_cast<double>(h1.size()) * static_cast<double>(h1.size());
    if (pairs > 2e8) throw Error("zp_constant: too many distinct half sums");

    std::unordered_map<std::int64_t, std::int64_t> totals;
    totals.reserve(h1.size() * 2);
    for (const auto& [s1, c1] : h1)
        for (const auto& [s2, c2] : h1) {
            const std::int64_t g = s1 + (negate_second ? -s2 : s2);
            totals[g] += c1 * c2;
        }
    std::int64_t best = 0;
    for (const auto& [g, c] : totals)
        if (g != 0) best = std::max(best, c);
    return best;
}

namespace {

// Positive differences realized at least `need` times, ascending.
std::vector<std::int64_t> candidate_differences(const IntegerSet& v, std::int64_t need) {
    std::unordered_map<std::int64_t, std::int64_t> hist;
    const auto& e = v.elements;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j) ++hist[e[j] - e[i]];
    std::vector<std::int64_t> out;
    for (const auto& [g, c] : hist)
        if (c >= need) out.push_back(g);
    std::sort(out.begin(), out.end());
    return out;
}

// Greedy matchings below are lexicographically smallest: the conflict
// structure for a fixed difference m is a disjoint union of chains, where
// taking the earliest available block never loses a completion.
std::optional<PatternWitness> find_five_pairs(const IntegerSet& v, std::int64_t m) {
    std::unordered_set<std::int64_t> used;
    std::vector<std::int64_t> elems;
    for (std::int64_t x : v.elements) {
        if (!v.contains(x + m) || used.count(x) || used.count(x + m)) continue;
        used.insert(x);
        used.insert(x + m);
        elems.push_back(x);
        elems.push_back(x + m);
        if (elems.size() == 10) return PatternWitness{PatternKind::FivePairs, elems, m};
    }
    return std::nullopt;
}

std::optional<PatternWitness> find_three_aps(const IntegerSet& v, std::int64_t m) {
    std::unordered_set<std::int64_t> used;
    std::vector<std::int64_t> elems;
    for (std::int64_t x : v.elements) {
        if (!v.contains(x + m) || !v.contains(x + 2 * m)) continue;
        if (used.count(x) || used.count(x + m) || used.count(x + 2 * m)) continue;
        for (int i = 0; i < 3; ++i) {
            used.insert(x + i * m);
            elems.push_back(x + i * m);
        }
        if (elems.size() == 9) return PatternWitness{PatternKind::ThreeAPs, elems, m};
    }
    return std::nullopt;
}

std::optional<PatternWitness> find_ap5(const IntegerSet& v, std::int64_t m) {
    for (std::int64_t x : v.elements) {
        bool ok = true;
        for (int i = 1; i <= 4 && ok; ++i) ok = v.contains(x + i * m);
        if (!ok) continue;
        std::vector<std::int64_t> elems;
        for (int i = 0; i < 5; ++i) elems.push_back(x + i * m);
        return PatternWitness{PatternKind::AP5, elems, m};
    }
    return std::nullopt;
}

}  // namespace

std::optional<PatternWitness> find_pattern(const IntegerSet& v, PatternKind kind) {
    const std::int64_t need = kind == PatternKind::FivePairs ? 5 : kind == PatternKind::ThreeAPs ? 6 : 4;
    for (std::int64_t m : candidate_differences(v, need)) {
        std::optional<PatternWitness> w;
        switch (kind) {
            case PatternKind::FivePairs: w = find_five_pairs(v, m); break;
            case PatternKind::ThreeAPs: w = find_three_aps(v, m); break;
            case PatternKind::AP5: w = find_ap5(v, m); break;
        }
        if (w) return w;
    }
    return std::nullopt;
}

bool pattern_valid(const PatternWitness& w) {
    if (w.common_difference == 0) return false;
    const auto& k = w.elements;
    std::unordered_set<std::int64_t> distinct(k.begin(), k.end());
    if (distinct.size() != k.size()) return false;
    const std::int64_t m = w.common_difference;
    switch (w.kind) {
        case PatternKind::FivePairs:
            if (k.size() != 10) return false;
            for (int i = 0; i < 5; ++i)
                if (k[2 * i + 1] - k[2 * i] != m) return false;
            return true;
        case PatternKind::ThreeAPs:
            if (k.size() != 9) return false;
            for (int i = 0; i < 3; ++i)
                if (k[3 * i + 1] - k[3 * i] != m || k[3 * i + 2] - k[3 * i + 1] != m) return false;
            return true;
        case PatternKind::AP5:
            if (k.size() != 5) return false;
            for (int i = 0; i < 4; ++i)
                if (k[i + 1] - k[i] != m) return false;
            return true;
    }
    return false;
}

IntegerSet generate_powers(std::int64_t base, int count) {
    if (base < 1 || count < 1) throw InputError("generate_powers: parameters must be positive");
    std::vector<std::int64_t> out;
    std::int64_t x = 1;
    for (int i = 0; i < count; ++i) {
        if (x > INT64_MAX / base) throw OverflowError("generate_powers: power exceeds 64-bit range");
        x *= base;
        out.push_back(x);
    }
    return IntegerSet::of(std::move(out));
}

IntegerSet generate_furstenberg(std::int64_t limit) {
    if (limit < 1) throw InputError("generate_furstenberg: limit must be positive");
    std::vector<std::int64_t> out;
    for (std::int64_t two = 1; two <= limit; two *= 2) {
        for (std::int64_t v = two; v <= limit; v *= 3) {
            out.push_back(v);
            if (v > limit / 3) break;
        }
        if (two > limit / 2) break;
    }
    return IntegerSet::of(std::move(out));
}

LatticeSet generate_circle(std::int64_t k) {
    if (k < 1) throw InputError("generate_circle: k must be positive");
    std::vector<LatticePoint> pts;
    const std::int64_t r = isqrt64(k);
    for (std::int64_t m = -r; m <= r; ++m) {
        const std::int64_t rest = k - m * m;
        const std::int64_t n = isqrt64(rest);
        if (n >= 0 && n * n == rest) {
            pts.push_back({m, n});
            pts.push_back({m, -n});
        }
    }
    return LatticeSet::of(std::move(pts));
}

IntegerSet generate_primes(std::int64_t limit) {
    if (limit < 1) throw InputError("generate_primes: limit must be positive");
    if (limit > 100'000'000) throw Error("generate_primes: limit above 1e8 not supported");
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    std::vector<std::int64_t> out;
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
    IntegerSet v;
    v.elements = std::move(out);
    return v;
}

IntegerSet generate_greedy_sidon(int count) {
    if (count < 1) throw InputError("generate_greedy_sidon: count must be positive");
    std::vector<std::int64_t> a{1};
    std::unordered_set<std::int64_t> diffs;
    std::int64_t x = 1;
    while (static_cast<int>(a.size()) < count) {
        ++x;
        bool ok = true;
        for (std::int64_t p : a)
            if (diffs.count(x - p)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (std::int64_t p : a) diffs.insert(x - p);
        a.push_back(x);
    }
    IntegerSet v;
    v.elements = std::move(a);
    return v;
}

namespace {

template <typename OnLine>
void for_data_lines(std::istream& in, OnLine&& fn) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        fn(t, lineno);
    }
}

std::int64_t parse_int(const std::string& s, int lineno) {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw InputError("set file: bad integer at line " + std::to_string(lineno));
    }
    if (pos != s.size()) throw InputError("set file: trailing characters at line " + std::to_string(lineno));
    return v;
}

}  // namespace

IntegerSet read_integer_set(std::istream& in) {
    std::vector<std::int64_t> vals;
    for_data_lines(in, [&](const std::string& t, int lineno) {
        if (t.find(',') != std::string::npos)
            throw InputError("set file: lattice line in an integer set at line " + std::to_string(lineno));
        vals.push_back(parse_int(t, lineno));
    });
    return IntegerSet::of(std::move(vals));
}

LatticeSet read_lattice_set(std::istream& in) {
    std::vector<LatticePoint> pts;
    for_data_lines(in, [&](const std::string& t, int lineno) {
        const auto comma = t.find(',');
        if (comma == std::string::npos)
            throw InputError("set file: expected \"m,n\" at line " + std::to_string(lineno));
        pts.push_back({parse_int(trim(t.substr(0, comma)), lineno),
                       parse_int(trim(t.substr(comma + 1)), lineno)});
    });
    return LatticeSet::of(std::move(pts));
}

namespace {
std::ifstream open_or_throw(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open set file: " + path);
    return f;
}
}  // namespace

IntegerSet load_integer_set(const std::string& path) {
    auto f = open_or_throw(path);
    return read_integer_set(f);
}

LatticeSet load_lattice_set(const std::string& path) {
    auto f = open_or_throw(path);
    return read_lattice_set(f);
}

bool file_looks_lattice(const std::string& path) {
    auto f = open_or_throw(path);
    bool lattice = false;
    for_data_lines(f, [&](const std::string& t, int) {
        if (t.find(',') != std::string::npos) lattice = true;
    });
    return lattice;
}

void write_integer_set(std::ostream& out, const IntegerSet& v) {
    for (std::int64_t x : v.elements) out << x << '\n';
}

void write_lattice_set(std::ostream& out, const LatticeSet& v) {
    for (const auto& p : v.points) out << p.m << ',' << p.n << '\n';
}

}  // namespace z2lab
