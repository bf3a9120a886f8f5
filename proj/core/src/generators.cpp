#include "specclique/generators.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

#include "specclique/graph6.hpp"

namespace specclique {

namespace {

constexpr int kMaxVertices = 10000;

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument("invalid-parameters: " + msg); }

void require(bool ok, const std::string& msg) {
    if (!ok) bad(msg);
}

// All k-subsets of {0..p-1} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int p, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == p - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    int cnt = 0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else ++cnt, ++i, ++j;
    }
    return cnt;
}

long long choose_capped(int p, int k) {
    long long r = 1;
    if (k > p - k) k = p - k;
    for (int i = 1; i <= k; ++i) {
        r = r * (p - k + i) / i;
        if (r > kMaxVertices) return kMaxVertices + 1;
    }
    return r;
}

Graph make_subset_graph(int p, int k, bool kneser) {
    require(k >= 1 && p >= 2 * k, "need p >= 2k >= 2");
    require(choose_capped(p, k) <= kMaxVertices, "C(p,k) exceeds vertex limit");
    auto sets = k_subsets(p, k);
    Graph g(static_cast<int>(sets.size()));
    for (size_t a = 0; a < sets.size(); ++a)
        for (size_t b = a + 1; b < sets.size(); ++b) {
            int is = intersection_size(sets[a], sets[b]);
            if (kneser ? is == 0 : is == k - 1) g.add_edge(static_cast<int>(a), static_cast<int>(b));
        }
    return g;
}

// Embedded graph6 literals for the named graphs. Sources:
//   petersen — Kneser graph on the 2-subsets of a 5-set (disjointness adjacency).
//   coxeter  — three heptagons with steps 1, 2, 3 plus a central 7-star
//              (Coxeter's construction); validated by its spectrum in tests.
//   schlafli — complement of the intersection graph of the 27 lines on a cubic
//              surface in double-six labelling; validated by spectrum
//              (16^1, 4^6, (-2)^20) in tests.
const std::map<std::string, std::string>& named_table() {
    static const std::map<std::string, std::string> table = {
        {"petersen", "I?LRCecq?"},
        {"coxeter", "[hCKG???O@?A?Q?H??????????_?@_??o??K_OGA@?_CA@?CA@?A@?_?_OG?CA@?"},
        {"schlafli", "Z~~{ACbCwV_~NNVVllzjn]]}]^D\\\\LlkmyyNrrXemiizZHfxxKuyyIl}]BLw"},
    };
    return table;
}

std::vector<int> parse_int_list(std::string_view s) {
    std::vector<int> out;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        std::string_view tok = s.substr(start, comma == std::string_view::npos ? comma : comma - start);
        if (tok.empty()) bad("empty numeric field");
        int value = 0;
        for (char c : tok) {
            if (!std::isdigit(static_cast<unsigned char>(c))) bad("expected integer, got '" + std::string(tok) + "'");
            value = value * 10 + (c - '0');
            if (value > 100000000) bad("parameter out of range");
        }
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

std::string FamilySpec::to_string() const {
    auto head_plus_list = [&](const char* head) {
        std::string s = head;
        s += ':' + std::to_string(params[0]) + ':';
        for (size_t i = 1; i < params.size(); ++i) {
            if (i > 1) s += ',';
            s += std::to_string(params[i]);
        }
        return s;
    };
    switch (family) {
        case Family::Complete: return "complete:" + std::to_string(params[0]);
        case Family::Cycle: return "cycle:" + std::to_string(params[0]);
        case Family::Wheel: return "wheel:" + std::to_string(params[0]);
        case Family::Barbell: return "barbell:" + std::to_string(params[0]);
        case Family::FoldedCube: return "foldedcube:" + std::to_string(params[0]);
        case Family::Kneser: return "kneser:" + std::to_string(params[0]) + ':' + std::to_string(params[1]);
        case Family::Johnson: return "johnson:" + std::to_string(params[0]) + ':' + std::to_string(params[1]);
        case Family::Circulant: return head_plus_list("circulant");
        case Family::GcdGraph: return head_plus_list("gcd");
        case Family::ComplementOf: return "complement:" + inner->to_string();
        case Family::Named: return "named:" + name;
    }
    return {};
}

FamilySpec parse_family_spec(std::string_view text) {
    size_t colon = text.find(':');
    std::string head(text.substr(0, colon));
    std::transform(head.begin(), head.end(), head.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

    FamilySpec spec;
    if (named_table().count(head)) {
        spec.family = Family::Named;
        spec.name = head;
        require(rest.empty(), "named graph takes no parameters");
        return spec;
    }
    if (head == "named") {
        spec.family = Family::Named;
        spec.name = std::string(rest);
        std::transform(spec.name.begin(), spec.name.end(), spec.name.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        require(named_table().count(spec.name) > 0, "unknown-named-graph: " + spec.name);
        return spec;
    }
    if (head == "complement") {
        require(!rest.empty(), "complement needs an inner spec");
        spec.family = Family::ComplementOf;
        spec.inner = std::make_shared<FamilySpec>(parse_family_spec(rest));
        return spec;
    }

    static const std::map<std::string, Family> families = {
        {"complete", Family::Complete}, {"cycle", Family::Cycle},
        {"wheel", Family::Wheel},       {"barbell", Family::Barbell},
        {"circulant", Family::Circulant}, {"kneser", Family::Kneser},
        {"johnson", Family::Johnson},   {"gcd", Family::GcdGraph},
        {"foldedcube", Family::FoldedCube},
    };
    auto it = families.find(head);
    if (it == families.end()) bad("unknown family '" + head + "'");
    spec.family = it->second;

    // Remaining ':'-separated fields, each possibly a comma list.
    while (!rest.empty()) {
        size_t c = rest.find(':');
        std::string_view field = rest.substr(0, c);
        auto vals = parse_int_list(field);
        spec.params.insert(spec.params.end(), vals.begin(), vals.end());
        rest = c == std::string_view::npos ? std::string_view{} : rest.substr(c + 1);
    }

    // Arity and range checks.
    switch (spec.family) {
        case Family::Complete:
            require(spec.params.size() == 1 && spec.params[0] >= 1, "complete:n needs n >= 1");
            require(spec.params[0] <= kMaxVertices, "n exceeds vertex limit");
            break;
        case Family::Cycle:
            require(spec.params.size() == 1 && spec.params[0] >= 3, "cycle:n needs n >= 3");
            require(spec.params[0] <= kMaxVertices, "n exceeds vertex limit");
            break;
        case Family::Wheel:
            require(spec.params.size() == 1 && spec.params[0] >= 4, "wheel:q needs q >= 4");
            require(spec.params[0] <= kMaxVertices, "q exceeds vertex limit");
            break;
        case Family::Barbell:
            require(spec.params.size() == 1 && spec.params[0] >= 3, "barbell:k needs k >= 3");
            require(2 * spec.params[0] <= kMaxVertices, "k exceeds vertex limit");
            break;
        case Family::Circulant: {
            require(spec.params.size() >= 2, "circulant:n:s1,... needs a connection set");
            int n = spec.params[0];
            require(n >= 3 && n <= kMaxVertices, "circulant needs 3 <= n <= limit");
            std::vector<int> steps(spec.params.begin() + 1, spec.params.end());
            for (int s : steps) require(s >= 1 && s <= n / 2, "connection set must lie in 1..n/2");
            std::sort(steps.begin(), steps.end());
            require(std::adjacent_find(steps.begin(), steps.end()) == steps.end(),
                    "connection set entries must be distinct");
            break;
        }
        case Family::Kneser:
        case Family::Johnson:
            require(spec.params.size() == 2, "needs exactly (p, k)");
            require(spec.params[1] >= 1 && spec.params[0] >= 2 * spec.params[1], "need p >= 2k >= 2");
            break;
        case Family::GcdGraph: {
            require(spec.params.size() >= 2, "gcd:n:d1,... needs a divisor set");
            int n = spec.params[0];
            require(n >= 2 && n <= kMaxVertices, "gcd graph needs 2 <= n <= limit");
            std::vector<int> divs(spec.params.begin() + 1, spec.params.end());
            for (int d : divs)
                require(d >= 1 && d < n && n % d == 0, std::to_string(d) + " is not a proper divisor of " + std::to_string(n));
            std::sort(divs.begin(), divs.end());
            require(std::adjacent_find(divs.begin(), divs.end()) == divs.end(), "divisors must be distinct");
            break;
        }
        case Family::FoldedCube:
            require(spec.params.size() == 1 && spec.params[0] >= 2, "foldedcube:d needs d >= 2");
            require(spec.params[0] <= 14, "folded cube dimension exceeds vertex limit");
            break;
        default:
            break;
    }
    return spec;
}

Graph generate(const FamilySpec& spec) {
    Graph g(1);
    switch (spec.family) {
        case Family::Complete: {
            int n = spec.params[0];
            g = Graph(n);
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
            break;
        }
        case Family::Cycle: {
            int n = spec.params[0];
            g = Graph(n);
            for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
            break;
        }
        case Family::Wheel: {
            // q vertices total: hub q-1 joined to the cycle 0..q-2.
            int q = spec.params[0];
            g = Graph(q);
            for (int v = 0; v < q - 1; ++v) {
                g.add_edge(v, (v + 1) % (q - 1));
                g.add_edge(v, q - 1);
            }
            break;
        }
        case Family::Barbell: {
            // Two K_k joined by a single bridge edge.
            int k = spec.params[0];
            g = Graph(2 * k);
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b) {
                    g.add_edge(a, b);
                    g.add_edge(k + a, k + b);
                }
            g.add_edge(k - 1, k);
            break;
        }
        case Family::Circulant: {
            int n = spec.params[0];
            g = Graph(n);
            for (size_t i = 1; i < spec.params.size(); ++i) {
                int s = spec.params[i];
                for (int v = 0; v < n; ++v) g.add_edge(v, (v + s) % n);
            }
            break;
        }
        case Family::Kneser:
            g = make_subset_graph(spec.params[0], spec.params[1], /*kneser=*/true);
            break;
        case Family::Johnson:
            g = make_subset_graph(spec.params[0], spec.params[1], /*kneser=*/false);
            break;
        case Family::GcdGraph: {
            int n = spec.params[0];
            std::vector<int> divs(spec.params.begin() + 1, spec.params.end());
            g = Graph(n);
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    int d = std::gcd(b - a, n);
                    if (std::find(divs.begin(), divs.end(), d) != divs.end()) g.add_edge(a, b);
                }
            break;
        }
        case Family::FoldedCube: {
            // Hypercube Q_{d-1} plus edges between antipodal vertex pairs.
            int d = spec.params[0];
            int n = 1 << (d - 1);
            int all = n - 1;
            g = Graph(n);
            for (int v = 0; v < n; ++v) {
                for (int bit = 0; bit < d - 1; ++bit) {
                    int u = v ^ (1 << bit);
                    if (u > v) g.add_edge(v, u);
                }
                int u = v ^ all;
                if (u > v) g.add_edge(v, u);
            }
            break;
        }
        case Family::ComplementOf:
            g = complement(generate(*spec.inner));
            break;
        case Family::Named: {
            auto it = named_table().find(spec.name);
            if (it == named_table().end()) bad("unknown-named-graph: " + spec.name);
            g = parse_graph6(it->second);
            break;
        }
    }
    g.set_label(spec.to_string());
    return g;
}

const std::vector<std::string>& named_graph_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, g6] : named_table()) v.push_back(name);
        return v;
    }();
    return names;
}

}  // namespace specclique
