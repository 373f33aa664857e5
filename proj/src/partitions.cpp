#include "powops/partitions.hpp"

#include <algorithm>
#include <sstream>

namespace powops {

bool is_valid_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i && p[i] > p[i - 1]) return false;
    }
    return true;
}

int partition_weight(const Partition& p) {
    int w = 0;
    for (int x : p) w += x;
    return w;
}

Partition conjugate_partition(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    c.resize(p[0], 0);
    for (int j = 0; j < p[0]; ++j)
        for (int x : p)
            if (x >= j + 1) ++c[j];
    return c;
}

bool partition_lex_less(const Partition& a, const Partition& b) {
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        int ai = i < a.size() ? a[i] : 0;
        int bi = i < b.size() ? b[i] : 0;
        if (ai != bi) return ai < bi;
    }
    return false;
}

namespace {

void gen_partitions(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int first = std::min(n, max_part); first >= 1; --first) {
        cur.push_back(first);
        gen_partitions(n - first, first, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw domain_error("partitions_of: negative weight");
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(n, n, cur, out);
    std::sort(out.begin(), out.end(), partition_lex_less);
    return out;
}

Int partition_count(int n) {
    // Euler's pentagonal-number recurrence.
    std::vector<Int> p(n + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Int acc = 0;
        for (int k = 1;; ++k) {
            long g1 = static_cast<long>(k) * (3 * k - 1) / 2;
            long g2 = static_cast<long>(k) * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            Int sgn = (k % 2) ? 1 : -1;
            if (g1 <= m) acc += sgn * p[m - g1];
            if (g2 <= m) acc += sgn * p[m - g2];
        }
        p[m] = acc;
    }
    return p[n];
}

std::vector<Partition> pieri_index_set(const Partition& mu, int p) {
    if (!is_valid_partition(mu)) throw domain_error("pieri_index_set: invalid partition");
    if (p < 1) throw domain_error("pieri_index_set: p must be >= 1");
    int rows = static_cast<int>(mu.size()) + p;
    std::vector<Partition> out;
    // Choose a 0/1 increment per row (rows beyond mu have base 0); the
    // result must stay weakly decreasing.
    Partition nu;
    auto rec = [&](auto&& self, int row, int remaining, int prev_value) -> void {
        if (remaining == 0) {
            // Remaining rows keep their mu values (zero increment).
            Partition v = nu;
            for (int i = row; i < static_cast<int>(mu.size()); ++i) v.push_back(mu[i]);
            out.push_back(std::move(v));
            return;
        }
        if (row >= rows || rows - row < remaining) return;
        int base = row < static_cast<int>(mu.size()) ? mu[row] : 0;
        for (int inc = 1; inc >= 0; --inc) {
            int val = base + inc;
            if (val > prev_value) continue;
            nu.push_back(val);
            self(self, row + 1, remaining - inc, val);
            nu.pop_back();
        }
    };
    rec(rec, 0, p, 1 << 30);
    std::sort(out.begin(), out.end(), partition_lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Int tableau_count(const Partition& lambda, int n) {
    if (!is_valid_partition(lambda)) throw domain_error("tableau_count: invalid partition");
    if (n < 0) throw domain_error("tableau_count: negative dimension");
    if (lambda.empty()) return 1;
    if (static_cast<int>(lambda.size()) > n) return 0;
    Partition conj = conjugate_partition(lambda);
    Rat prod = 1;
    for (size_t i = 0; i < lambda.size(); ++i)
        for (int j = 0; j < lambda[i]; ++j) {
            long content = static_cast<long>(j) - static_cast<long>(i);
            long hook = (lambda[i] - j) + (conj[j] - static_cast<long>(i)) - 1;
            prod *= Rat(n + content, hook);
        }
    prod.canonicalize();
    if (prod.get_den() != 1) throw internal_error("tableau_count: non-integral product");
    return prod.get_num();
}

std::string partition_str(const Partition& p) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ")";
    return os.str();
}

Partition parse_partition(const std::string& text) {
    Partition p;
    std::string body;
    for (char c : text)
        if (c != '[' && c != ']' && c != '(' && c != ')' && c != ' ') body += c;
    if (body.empty() || body == "0") return p;
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw domain_error("parse_partition: empty part in '" + text + "'");
        p.push_back(std::stoi(tok));
    }
    if (!is_valid_partition(p)) throw domain_error("parse_partition: not weakly decreasing positive: '" + text + "'");
    return p;
}

}  // namespace powops
