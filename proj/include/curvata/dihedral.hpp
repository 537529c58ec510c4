#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "curvata/complex.hpp"

namespace curvata {

// One generator or its inverse.
struct GenLetter {
    char gen;     // 's' or 't'
    bool inverse;
    auto operator<=>(const GenLetter&) const = default;
};

std::vector<GenLetter> parse_word(const std::string& text);
std::string word_str(const std::vector<GenLetter>& w);

// A simple element of the dihedral Artin monoid: a nonempty alternating
// positive word of length < m, identified by its first letter and length.
struct Simple {
    char start;
    int len;
    auto operator<=>(const Simple&) const = default;
};

// Element of the dihedral Artin group with Coxeter label m, in left-greedy
// Garside normal form: Delta^inf times a left-weighted sequence of proper
// simple factors. m == 0 encodes the infinite label (free product case),
// where the element is just a freely reduced word.
struct DihedralElement {
    int m = 2;
    long long inf = 0;
    std::vector<Simple> factors;
    std::vector<GenLetter> free_word; // used only when m == 0
    auto operator<=>(const DihedralElement&) const = default;
};

// The label may be 0 for infinity.
DihedralElement dihedral_identity(int m);
DihedralElement normal_form(int m, const std::vector<GenLetter>& word);
DihedralElement mul_letter(const DihedralElement& a, GenLetter g);
DihedralElement mul(const DihedralElement& a, const DihedralElement& b);
DihedralElement inverse(const DihedralElement& a);
std::vector<GenLetter> to_word(const DihedralElement& a);

bool elements_equal(const DihedralElement& a, const DihedralElement& b);

// True iff h^-1 g is a power x^k of the generator with |k| <= max_power.
bool coset_equal(const DihedralElement& g, const DihedralElement& h, char generator,
                 int max_power);

// Ball of the rank-2 Artin complex: vertices are cosets g<s> and g<t>,
// edges are the group elements joining them.
struct CosetGraphBall {
    int m = 2; // 0 = infinity
    int radius = 0;
    struct Node {
        char type; // 's' or 't'
        DihedralElement rep;
        int rep_length; // generator length of the first-discovered element
        std::string name;
    };
    std::vector<Node> nodes;
    std::vector<std::pair<int, int>> edges;

    // Export as a complex file body with the given uniform edge length.
    std::string to_complex_file(const Rational& default_length) const;
    SimplicialComplex to_complex() const;
};

CosetGraphBall build_ball(int m, int radius,
                          std::size_t vertex_limit = 200000);

struct GirthReport {
    bool acyclic = false;
    int shortest_cycle = 0; // meaningful when !acyclic
    int bound = 0;          // 2m
    bool pass = false;      // acyclic, or shortest_cycle >= bound
    bool bound_attained = false;
};

GirthReport girth_check(const CosetGraphBall& ball, int m);

} // namespace curvata
