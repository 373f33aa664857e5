#include "powops/group.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace powops {

int FiniteGroup::power(int a, long k) const {
    if (k < 0) {
        a = inverse[a];
        k = -k;
    }
    int acc = identity, base = a;
    unsigned long e = static_cast<unsigned long>(k);
    while (e) {
        if (e & 1) acc = mul[acc][base];
        base = mul[base][base];
        e >>= 1;
    }
    return acc;
}

int FiniteGroup::element_order(int a) const {
    int ord = 1, x = a;
    while (x != identity) {
        x = mul[x][a];
        ++ord;
        if (ord > n) throw internal_error("element_order: runaway (not a group table)");
    }
    return ord;
}

void validate_group(const FiniteGroup& g) {
    if (g.n <= 0 || static_cast<int>(g.mul.size()) != g.n)
        throw domain_error("group table: bad dimensions");
    for (const auto& row : g.mul) {
        if (static_cast<int>(row.size()) != g.n) throw domain_error("group table: ragged row");
        for (int x : row)
            if (x < 0 || x >= g.n) throw domain_error("group table: entry out of range");
    }
    int e = g.identity;
    for (int x = 0; x < g.n; ++x)
        if (g.mul[e][x] != x || g.mul[x][e] != x) throw domain_error("group table: identity fails");
    if (static_cast<int>(g.inverse.size()) != g.n) throw domain_error("group table: inverse list size");
    for (int x = 0; x < g.n; ++x)
        if (g.mul[x][g.inverse[x]] != e || g.mul[g.inverse[x]][x] != e)
            throw domain_error("group table: inverse fails");
    if (g.n <= 24) {
        for (int a = 0; a < g.n; ++a)
            for (int b = 0; b < g.n; ++b)
                for (int c = 0; c < g.n; ++c)
                    if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]])
                        throw domain_error("group table: associativity fails");
    } else {
        unsigned long long seed = 0x9e3779b97f4a7c15ULL;
        auto next = [&seed]() {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            return seed;
        };
        for (int t = 0; t < 4096; ++t) {
            int a = static_cast<int>(next() % g.n);
            int b = static_cast<int>(next() % g.n);
            int c = static_cast<int>(next() % g.n);
            if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]])
                throw domain_error("group table: associativity fails (sampled)");
        }
    }
}

namespace {

void finish_group(FiniteGroup& g) {
    g.identity = -1;
    for (int e = 0; e < g.n && g.identity < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < g.n && ok; ++x) ok = g.mul[e][x] == x && g.mul[x][e] == x;
        if (ok) g.identity = e;
    }
    if (g.identity < 0) throw domain_error("group table: no identity");
    g.inverse.assign(g.n, -1);
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y)
            if (g.mul[x][y] == g.identity && g.mul[y][x] == g.identity) {
                g.inverse[x] = y;
                break;
            }
    for (int x = 0; x < g.n; ++x)
        if (g.inverse[x] < 0) throw domain_error("group table: missing inverse");
    if (static_cast<int>(g.labels.size()) != g.n) {
        g.labels.resize(g.n);
        for (int x = 0; x < g.n; ++x)
            if (g.labels[x].empty()) g.labels[x] = "g" + std::to_string(x);
    }
    validate_group(g);
}

}  // namespace

FiniteGroup make_cyclic(int n) {
    if (n < 1) throw domain_error("make_cyclic: n must be >= 1");
    FiniteGroup g;
    g.n = n;
    g.name = "C" + std::to_string(n);
    g.mul.assign(n, std::vector<int>(n));
    g.labels.resize(n);
    for (int i = 0; i < n; ++i) {
        g.labels[i] = i == 0 ? "e" : "g^" + std::to_string(i);
        for (int j = 0; j < n; ++j) g.mul[i][j] = (i + j) % n;
    }
    finish_group(g);
    return g;
}

FiniteGroup make_dihedral(int n) {
    if (n < 1) throw domain_error("make_dihedral: n must be >= 1");
    FiniteGroup g;
    g.n = 2 * n;
    g.name = "D" + std::to_string(n);
    g.mul.assign(g.n, std::vector<int>(g.n));
    g.labels.resize(g.n);
    auto id = [n](int i, int j) { return ((i % n + n) % n) + n * j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < 2; ++j) {
            int a = id(i, j);
            g.labels[a] = (i || j) ? ("r^" + std::to_string(i) + (j ? "*s" : "")) : "e";
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < 2; ++l) {
                    // (r^i s^j)(r^k s^l) = r^{i + (-1)^j k} s^{j+l}
                    int rot = j == 0 ? i + k : i - k;
                    g.mul[a][id(k, l)] = id(rot, (j + l) % 2);
                }
        }
    finish_group(g);
    return g;
}

FiniteGroup make_quaternion8() {
    // Elements 0..7 = 1, -1, i, -i, j, -j, k, -k.
    FiniteGroup g;
    g.n = 8;
    g.name = "Q8";
    g.labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    auto enc = [](int axis, int sign) { return 2 * axis + (sign < 0 ? 1 : 0); };
    auto axis_of = [](int x) { return x / 2; };
    auto sign_of = [](int x) { return x % 2 ? -1 : 1; };
    // Axis products: table[a][b] = (axis, sign) for axes 0=1, 1=i, 2=j, 3=k.
    static const int amul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int smul[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    g.mul.assign(8, std::vector<int>(8));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            int ax = axis_of(x), ay = axis_of(y);
            int s = sign_of(x) * sign_of(y) * smul[ax][ay];
            g.mul[x][y] = enc(amul[ax][ay], s);
        }
    finish_group(g);
    return g;
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::string perm_label(const std::vector<int>& p) {
    std::string s = "[";
    for (size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p[i]);
    return s + "]";
}

bool perm_even(const std::vector<int>& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0;
}

FiniteGroup group_from_perms(const std::vector<std::vector<int>>& perms, const std::string& name) {
    int n = static_cast<int>(perms.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < n; ++i) index[perms[i]] = i;
    FiniteGroup g;
    g.n = n;
    g.name = name;
    g.mul.assign(n, std::vector<int>(n));
    g.labels.resize(n);
    for (int a = 0; a < n; ++a) {
        g.labels[a] = perm_label(perms[a]);
        for (int b = 0; b < n; ++b) {
            std::vector<int> comp(perms[a].size());
            for (size_t x = 0; x < comp.size(); ++x) comp[x] = perms[a][perms[b][x]];
            auto it = index.find(comp);
            if (it == index.end()) throw internal_error("group_from_perms: not closed");
            g.mul[a][b] = it->second;
        }
    }
    finish_group(g);
    return g;
}

}  // namespace

FiniteGroup make_symmetric(int n) {
    if (n < 1 || n > 5) throw domain_error("make_symmetric: n must be in 1..5");
    return group_from_perms(all_permutations(n), "S" + std::to_string(n));
}

FiniteGroup make_alternating4() {
    std::vector<std::vector<int>> evens;
    for (const auto& p : all_permutations(4))
        if (perm_even(p)) evens.push_back(p);
    return group_from_perms(evens, "A4");
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    FiniteGroup g;
    g.n = a.n * b.n;
    g.name = "prod(" + a.name + "," + b.name + ")";
    g.mul.assign(g.n, std::vector<int>(g.n));
    g.labels.resize(g.n);
    auto id = [&a](int x, int y) { return x + a.n * y; };
    for (int x1 = 0; x1 < a.n; ++x1)
        for (int y1 = 0; y1 < b.n; ++y1) {
            int p = id(x1, y1);
            g.labels[p] = "(" + a.labels[x1] + "," + b.labels[y1] + ")";
            for (int x2 = 0; x2 < a.n; ++x2)
                for (int y2 = 0; y2 < b.n; ++y2)
                    g.mul[p][id(x2, y2)] = id(a.mul[x1][x2], b.mul[y1][y2]);
        }
    finish_group(g);
    return g;
}

FiniteGroup group_from_table_text(const std::string& text, const std::string& name) {
    std::istringstream is(text);
    int n;
    if (!(is >> n) || n < 1) throw domain_error("group table text: bad order line");
    FiniteGroup g;
    g.n = n;
    g.name = name;
    g.mul.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(is >> g.mul[i][j])) throw domain_error("group table text: truncated table");
    std::vector<std::string> tail;
    std::string tok;
    while (is >> tok) tail.push_back(tok);
    if (static_cast<int>(tail.size()) == n) g.labels = tail;
    else if (!tail.empty()) throw domain_error("group table text: label section must have n entries");
    finish_group(g);
    return g;
}

FiniteGroup group_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open group file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string base = path;
    size_t slash = base.find_last_of('/');
    if (slash != std::string::npos) base = base.substr(slash + 1);
    return group_from_table_text(buf.str(), base);
}

FiniteGroup parse_group_spec(const std::string& spec) {
    if (spec.empty()) throw domain_error("empty group spec");
    if (spec.rfind("table:", 0) == 0) return group_from_file(spec.substr(6));
    if (spec.rfind("prod(", 0) == 0 && spec.back() == ')') {
        std::string body = spec.substr(5, spec.size() - 6);
        int depth = 0;
        for (size_t i = 0; i < body.size(); ++i) {
            if (body[i] == '(') ++depth;
            if (body[i] == ')') --depth;
            if (body[i] == ',' && depth == 0)
                return direct_product(parse_group_spec(body.substr(0, i)),
                                      parse_group_spec(body.substr(i + 1)));
        }
        throw domain_error("prod spec needs two comma-separated factors: " + spec);
    }
    auto num = [&spec](size_t from) {
        if (from >= spec.size()) throw domain_error("group spec missing parameter: " + spec);
        for (size_t i = from; i < spec.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(spec[i])))
                throw domain_error("bad group spec: " + spec);
        return std::stoi(spec.substr(from));
    };
    switch (spec[0]) {
        case 'C': return make_cyclic(num(1));
        case 'D': return make_dihedral(num(1));
        case 'Q':
            if (spec == "Q8") return make_quaternion8();
            break;
        case 'S': return make_symmetric(num(1));
        case 'A':
            if (spec == "A4") return make_alternating4();
            break;
        default: break;
    }
    throw domain_error("unknown group spec: " + spec);
}

int group_exponent(const FiniteGroup& g) {
    long e = 1;
    for (int x = 0; x < g.n; ++x) e = lcm_long(e, g.element_order(x));
    return static_cast<int>(e);
}

ConjugacyData conjugacy_classes(const FiniteGroup& g) {
    ConjugacyData c;
    c.group_order = g.n;
    c.exponent = group_exponent(g);
    c.class_of.assign(g.n, -1);
    for (int x = 0; x < g.n; ++x) {
        if (c.class_of[x] >= 0) continue;
        int idx = static_cast<int>(c.reps.size());
        c.reps.push_back(x);
        int size = 0;
        for (int t = 0; t < g.n; ++t) {
            int y = g.mul[g.mul[t][x]][g.inverse[t]];
            if (c.class_of[y] < 0) {
                c.class_of[y] = idx;
                ++size;
            }
        }
        c.sizes.push_back(size);
    }
    c.identity_class = c.class_of[g.identity];
    int s = c.class_count();
    c.inverse_class.resize(s);
    for (int i = 0; i < s; ++i) c.inverse_class[i] = c.class_of[g.inverse[c.reps[i]]];
    c.power_class.assign(c.exponent, std::vector<int>(s));
    for (int k = 0; k < c.exponent; ++k)
        for (int i = 0; i < s; ++i) c.power_class[k][i] = c.class_of[g.power(c.reps[i], k)];
    return c;
}

int ConjugacyData::power_class_of(int c, long k) const {
    long e = exponent;
    long r = ((k % e) + e) % e;
    return power_class[static_cast<size_t>(r)][c];
}

GroupRef make_group_ctx(FiniteGroup g) {
    auto ctx = std::make_shared<GroupCtx>();
    ctx->G = std::move(g);
    ctx->C = conjugacy_classes(ctx->G);
    return ctx;
}

GroupRef group_ctx_from_spec(const std::string& spec) {
    return make_group_ctx(parse_group_spec(spec));
}

std::vector<long> kth_root_counts(const GroupCtx& ctx, long k, int c) {
    if (k < 1) throw domain_error("kth_root_counts: k must be >= 1");
    if (c < 0 || c >= ctx.C.class_count()) throw domain_error("kth_root_counts: bad class");
    int target = ctx.C.reps[c];
    std::vector<long> counts(ctx.C.class_count(), 0);
    for (int t = 0; t < ctx.G.n; ++t)
        if (ctx.G.power(t, k) == target) ++counts[ctx.C.class_of[t]];
    return counts;
}

}  // namespace powops
