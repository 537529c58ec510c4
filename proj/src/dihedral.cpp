#include "curvata/dihedral.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace curvata {

namespace {

char other(char c) { return c == 's' ? 't' : 's'; }

char last_letter(const Simple& x) {
    return x.len % 2 == 1 ? x.start : other(x.start);
}

// Conjugation by Delta swaps the generators when m is odd and fixes them
// when m is even; it is an involution either way.
void delta_conjugate(DihedralElement& a) {
    if (a.m % 2 == 0) return;
    for (auto& f : a.factors) f.start = other(f.start);
}

void append_positive(DihedralElement& a, char c) {
    if (!a.factors.empty() && last_letter(a.factors.back()) != c) {
        a.factors.back().len += 1;
        if (a.factors.back().len == a.m) { // grew into Delta; push it left
            a.factors.pop_back();
            delta_conjugate(a);
            a.inf += 1;
        }
    } else {
        a.factors.push_back({c, 1});
    }
}

void append_free(DihedralElement& a, GenLetter g) {
    if (!a.free_word.empty() && a.free_word.back().gen == g.gen &&
        a.free_word.back().inverse != g.inverse)
        a.free_word.pop_back();
    else
        a.free_word.push_back(g);
}

} // namespace

std::vector<GenLetter> parse_word(const std::string& text) {
    std::vector<GenLetter> out;
    for (char c : text) {
        switch (c) {
            case 's': out.push_back({'s', false}); break;
            case 't': out.push_back({'t', false}); break;
            case 'S': out.push_back({'s', true}); break;
            case 'T': out.push_back({'t', true}); break;
            case ' ': case '\t': case '*': case '.': break;
            default:
                throw Error("ParseError",
                            std::string("unexpected character '") + c + "' in word");
        }
    }
    return out;
}

std::string word_str(const std::vector<GenLetter>& w) {
    std::string out;
    for (const auto& g : w)
        out += g.inverse ? static_cast<char>(g.gen - 'a' + 'A') : g.gen;
    return out.empty() ? "1" : out;
}

DihedralElement dihedral_identity(int m) {
    if (m != 0 && m < 2)
        throw Error("BadLabel", "dihedral label must be >= 2 or 0 for infinity");
    DihedralElement e;
    e.m = m;
    return e;
}

DihedralElement mul_letter(const DihedralElement& a, GenLetter g) {
    DihedralElement r = a;
    if (r.m == 0) {
        append_free(r, g);
        return r;
    }
    if (!g.inverse) {
        append_positive(r, g.gen);
    } else {
        // x * h^-1 = x * Delta^-1 * w, where w * h = Delta.
        r.inf -= 1;
        delta_conjugate(r);
        char c = (r.m - 1) % 2 == 1 ? other(g.gen) : g.gen;
        for (int i = 0; i < r.m - 1; ++i) {
            append_positive(r, c);
            c = other(c);
        }
    }
    return r;
}

DihedralElement normal_form(int m, const std::vector<GenLetter>& word) {
    DihedralElement e = dihedral_identity(m);
    for (const auto& g : word) e = mul_letter(e, g);
    return e;
}

std::vector<GenLetter> to_word(const DihedralElement& a) {
    if (a.m == 0) return a.free_word;
    std::vector<GenLetter> out;
    if (a.inf > 0) {
        for (long long i = 0; i < a.inf; ++i) {
            char c = 's';
            for (int j = 0; j < a.m; ++j) {
                out.push_back({c, false});
                c = other(c);
            }
        }
    } else if (a.inf < 0) {
        for (long long i = 0; i < -a.inf; ++i) {
            // Delta read backwards, inverted
            char c = a.m % 2 == 1 ? 's' : 't';
            for (int j = 0; j < a.m; ++j) {
                out.push_back({c, true});
                c = other(c);
            }
        }
    }
    for (const auto& f : a.factors) {
        char c = f.start;
        for (int i = 0; i < f.len; ++i) {
            out.push_back({c, false});
            c = other(c);
        }
    }
    return out;
}

DihedralElement mul(const DihedralElement& a, const DihedralElement& b) {
    if (a.m != b.m)
        throw Error("MixedPresentation", "elements belong to different presentations");
    DihedralElement r = a;
    for (const auto& g : to_word(b)) r = mul_letter(r, g);
    return r;
}

DihedralElement inverse(const DihedralElement& a) {
    DihedralElement r = dihedral_identity(a.m);
    auto w = to_word(a);
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        r = mul_letter(r, {it->gen, !it->inverse});
    return r;
}

bool elements_equal(const DihedralElement& a, const DihedralElement& b) {
    if (a.m != b.m)
        throw Error("MixedPresentation", "elements belong to different presentations");
    return a == b;
}

bool coset_equal(const DihedralElement& g, const DihedralElement& h, char generator,
                 int max_power) {
    DihedralElement q = mul(inverse(h), g);
    DihedralElement up = dihedral_identity(g.m), down = up;
    if (q == up) return true;
    for (int k = 1; k <= max_power; ++k) {
        up = mul_letter(up, {generator, false});
        down = mul_letter(down, {generator, true});
        if (q == up || q == down) return true;
    }
    return false;
}

namespace {

std::string node_name(char type, std::size_t idx) {
    return std::string(1, type) + std::to_string(idx);
}

} // namespace

CosetGraphBall build_ball(int m, int radius, std::size_t vertex_limit) {
    if (m != 0 && m < 2)
        throw Error("BadLabel", "dihedral label must be >= 2 or 0 for infinity");
    if (radius < 1)
        throw Error("BadRadius", "radius must be >= 1");

    CosetGraphBall ball;
    ball.m = m;
    ball.radius = radius;

    const int max_power = 2 * radius + 2;
    // Powers of each generator, for O(log) coset membership.
    std::map<char, std::set<DihedralElement>> powers;
    for (char x : {'s', 't'}) {
        DihedralElement up = dihedral_identity(m), down = up;
        powers[x].insert(up);
        for (int k = 1; k <= max_power; ++k) {
            up = mul_letter(up, {x, false});
            down = mul_letter(down, {x, true});
            powers[x].insert(up);
            powers[x].insert(down);
        }
    }

    std::map<char, std::vector<int>> nodes_of_type;
    std::vector<DihedralElement> node_rep_inverse;
    auto coset_vertex = [&](const DihedralElement& g, char type, int glen) {
        for (int idx : nodes_of_type[type]) {
            DihedralElement q = mul(node_rep_inverse[idx], g);
            if (powers[type].count(q)) return idx;
        }
        int idx = static_cast<int>(ball.nodes.size());
        ball.nodes.push_back({type, g, glen, node_name(type, ball.nodes.size())});
        node_rep_inverse.push_back(inverse(g));
        nodes_of_type[type].push_back(idx);
        return idx;
    };

    const GenLetter letter_order[4] = {
        {'s', false}, {'s', true}, {'t', false}, {'t', true}};

    std::set<DihedralElement> visited;
    std::deque<std::pair<DihedralElement, int>> queue;
    DihedralElement id = dihedral_identity(m);
    visited.insert(id);
    queue.push_back({id, 0});
    while (!queue.empty()) {
        auto [g, len] = queue.front();
        queue.pop_front();
        int vs = coset_vertex(g, 's', len);
        int vt = coset_vertex(g, 't', len);
        ball.edges.push_back({vs, vt});
        if (ball.nodes.size() > vertex_limit)
            throw Error("ResourceLimit", "ball exceeds the vertex limit");
        if (len == radius) continue;
        for (const auto& l : letter_order) {
            DihedralElement next = mul_letter(g, l);
            if (visited.insert(next).second) queue.push_back({next, len + 1});
        }
    }
    return ball;
}

SimplicialComplex CosetGraphBall::to_complex() const {
    std::vector<Simplex> maximal;
    for (const auto& [a, b] : edges)
        maximal.push_back(make_simplex({nodes[a].name, nodes[b].name}));
    return SimplicialComplex::from_maximal(maximal);
}

std::string CosetGraphBall::to_complex_file(const Rational& default_length) const {
    std::ostringstream os;
    os << "default_length " << default_length.str() << "\n";
    for (const auto& [a, b] : edges)
        os << "simplex " << nodes[a].name << " " << nodes[b].name << "\n";
    return os.str();
}

GirthReport girth_check(const CosetGraphBall& ball, int m) {
    if (m != 0 && ball.radius < m)
        throw Error("RadiusTooSmall",
                    "radius " + std::to_string(ball.radius) + " cannot contain a " +
                        std::to_string(2 * m) + "-cycle");
    const int n = static_cast<int>(ball.nodes.size());
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : ball.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> q{root};
        dist[root] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push_back(w);
                } else if (w != parent[v] && parent[w] != v) {
                    int cand = dist[v] + dist[w] + 1;
                    if (best < 0 || cand < best) best = cand;
                }
            }
        }
    }

    GirthReport rep;
    rep.acyclic = best < 0;
    rep.shortest_cycle = rep.acyclic ? 0 : best;
    rep.bound = m == 0 ? 0 : 2 * m;
    rep.pass = rep.acyclic || rep.shortest_cycle >= rep.bound;
    rep.bound_attained = !rep.acyclic && rep.shortest_cycle == rep.bound;
    return rep;
}

} // namespace curvata
