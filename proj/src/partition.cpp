#include "sfq/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sfq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

namespace {

int parse_int(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("bad integer in partition: '" + std::string(s) + "'");
    return v;
}

} // namespace

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    if (text.find_first_not_of(" ") == std::string_view::npos) return Partition{};
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view tok = text.substr(pos, comma - pos);
        size_t caret = tok.find('^');
        if (caret == std::string_view::npos) {
            parts.push_back(parse_int(tok));
        } else {
            int v = parse_int(tok.substr(0, caret));
            int e = parse_int(tok.substr(caret + 1));
            if (e < 0) throw std::invalid_argument("negative exponent in partition");
            parts.insert(parts.end(), static_cast<size_t>(e), v);
        }
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::max_label() const {
    if (parts_.empty()) return 0;
    return parts_.front() + length() - 1;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

Partition transpose(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> t(static_cast<size_t>(p[0]), 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j) ++t[static_cast<size_t>(j)];
    return Partition(std::move(t));
}

ShapeClass classify(const Partition& p) {
    ShapeClass c;
    if (p.empty()) return c;
    auto set = [&](Shape s) { c.flags |= static_cast<unsigned>(s); };
    const auto parts = p.parts();
    const int l = p.length();

    if (std::all_of(parts.begin() + 1, parts.end(), [](int x) { return x == 1; }))
        set(Shape::Hook);
    if (std::all_of(parts.begin(), parts.end(), [&](int x) { return x == parts[0]; }))
        set(Shape::Rectangle);
    bool stair = parts[0] == l;
    for (int i = 0; i < l && stair; ++i) stair = parts[static_cast<size_t>(i)] == l - i;
    if (stair) set(Shape::Staircase);

    // exactly two distinct part values a > b
    int distinct = 1;
    for (int i = 1; i < l; ++i)
        if (parts[static_cast<size_t>(i)] != parts[static_cast<size_t>(i - 1)]) ++distinct;
    if (distinct == 2) set(Shape::FattenedHook);
    return c;
}

std::string ShapeClass::to_string() const {
    std::string out;
    auto add = [&](bool b, const char* n) {
        if (!b) return;
        if (!out.empty()) out += ',';
        out += n;
    };
    add(hook(), "hook");
    add(rectangle(), "rectangle");
    add(staircase(), "staircase");
    add(fattened_hook(), "fattened-hook");
    return out.empty() ? "none" : out;
}

namespace {

void compositions_rec(int n, Composition& cur, std::vector<Composition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int first = 1; first <= n; ++first) {
        cur.push_back(first);
        compositions_rec(n - first, cur, out);
        cur.pop_back();
    }
}

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Composition> compositions(int n) {
    if (n < 0) throw std::invalid_argument("compositions: negative n");
    std::vector<Composition> out;
    Composition cur;
    compositions_rec(n, cur, out);
    return out;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    if (n < 0) return out;
    partitions_rec(n, n, cur, out);
    return out;
}

std::vector<Partition> partitions_up_to_max_label(int max_label) {
    std::vector<Partition> out;
    // λ1 + ℓ − 1 ≤ L bounds the size by roughly L²/4, well within reach here.
    for (int lambda1 = 1; lambda1 <= max_label; ++lambda1) {
        for (int len = 1; lambda1 + len - 1 <= max_label; ++len) {
            // first part fixed at lambda1, len parts total
            std::vector<int> cur{lambda1};
            auto rec = [&](auto&& self, int left, int maxp) -> void {
                if (left == 0) {
                    out.emplace_back(cur);
                    return;
                }
                for (int part = maxp; part >= 1; --part) {
                    cur.push_back(part);
                    self(self, left - 1, part);
                    cur.pop_back();
                }
            };
            rec(rec, len - 1, lambda1);
        }
    }
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.max_label() != b.max_label()) return a.max_label() < b.max_label();
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

Partition staircase(int k) {
    std::vector<int> parts;
    for (int i = k; i >= 1; --i) parts.push_back(i);
    return Partition(std::move(parts));
}

Partition rectangle(int a, int n) {
    return Partition(std::vector<int>(static_cast<size_t>(n), a));
}

} // namespace sfq
