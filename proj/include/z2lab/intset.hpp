#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "z2lab/errors.hpp"

namespace z2lab {

// Finite frequency set W in Z, kept sorted and duplicate-free.
struct IntegerSet {
    std::vector<std::int64_t> elements;

    IntegerSet() = default;
    static IntegerSet of(std::vector<std::int64_t> values);  // sorts, dedups
    int size() const { return static_cast<int>(elements.size()); }
    bool contains(std::int64_t x) const;
};

struct LatticePoint {
    std::int64_t m = 0;
    std::int64_t n = 0;
    auto operator<=>(const LatticePoint&) const = default;
};

// Finite subset of Z^2, e.g. lattice points on a circle m^2 + n^2 = k.
struct LatticeSet {
    std::vector<LatticePoint> points;  // sorted, distinct

    LatticeSet() = default;
    static LatticeSet of(std::vector<LatticePoint> pts);
    int size() const { return static_cast<int>(points.size()); }
};

// Z2(V) = sup_{g != 0} #{(x,y) in VxV : y - x = g}, plus the full
// difference histogram and a canonical argmax (smallest |g|, positive
// preferred, among maximizers).
struct Z2Result {
    std::int64_t z2 = 0;
    std::optional<std::int64_t> argmax_difference;
    std::map<std::int64_t, std::int64_t> histogram;
};

struct Z2LatticeResult {
    std::int64_t z2 = 0;
    std::optional<LatticePoint> argmax_difference;
    std::map<LatticePoint, std::int64_t> histogram;
};

Z2Result z2_constant(const IntegerSet& v);
Z2LatticeResult z2_constant(const LatticeSet& v);

// Z_p(V) = sup_{g != 0} #{(g_1..g_p) : -g_1 + g_2 - g_3 + ... = g}.
// Brute force while |V|^p <= 10^7; meet-in-the-middle on half sums for
// even p beyond that.  p < 2 is rejected.
std::int64_t zp_constant(const IntegerSet& v, int p);

enum class PatternKind { FivePairs, ThreeAPs, AP5 };

// A concrete forbidden configuration inside a set:
//   FivePairs: 10 distinct elements, k2-k1 = k4-k3 = ... = k10-k9 = m
//   ThreeAPs : 9 distinct elements forming three 3-term APs, same m
//   AP5      : 5 distinct elements in arithmetic progression, difference m
struct PatternWitness {
    PatternKind kind = PatternKind::AP5;
    std::vector<std::int64_t> elements;
    std::int64_t common_difference = 0;
};

// Deterministic: scans m = 1, 2, ... and returns the lexicographically
// smallest witness for the smallest m admitting one; nullopt if none.
std::optional<PatternWitness> find_pattern(const IntegerSet& v, PatternKind kind);

// Checks the PatternWitness invariants against the claimed kind.
bool pattern_valid(const PatternWitness& w);

// Generators for the example sets.
IntegerSet generate_powers(std::int64_t base, int count);  // {base^1..base^count}
IntegerSet generate_furstenberg(std::int64_t limit);       // {2^a 3^b <= limit}
LatticeSet generate_circle(std::int64_t k);                // {(m,n): m^2+n^2 = k}
IntegerSet generate_primes(std::int64_t limit);            // primes <= limit
IntegerSet generate_greedy_sidon(int count);               // Mian-Chowla greedy B2 set

// Set files: one integer per line, or "m,n" per line for lattice sets.
// '#' starts a comment, blank lines are skipped.
IntegerSet read_integer_set(std::istream& in);
LatticeSet read_lattice_set(std::istream& in);
IntegerSet load_integer_set(const std::string& path);
LatticeSet load_lattice_set(const std::string& path);
bool file_looks_lattice(const std::string& path);  // any data line with a comma
void write_integer_set(std::ostream& out, const IntegerSet& v);
void write_lattice_set(std::ostream& out, const LatticeSet& v);

}  // namespace z2lab
