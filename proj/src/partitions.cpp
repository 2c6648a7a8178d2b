#include "qsch/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace qsch {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw PartitionError("parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw PartitionError("parts not weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int i) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

Partition Partition::conjugate() const {
    std::vector<int> c(part(0), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
}

bool Partition::fits_box(int rows, int cols) const { return length() <= rows && part(0) <= cols; }

std::string Partition::to_string() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

namespace {

std::vector<int> parse_parts(std::string_view text) {
    std::vector<int> parts;
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) return parts;
    size_t pos = 0;
    while (true) {
        size_t next = text.find(',', pos);
        std::string_view tok = trim(text.substr(pos, next == std::string_view::npos ? text.size() - pos : next - pos));
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw PartitionError("malformed part '" + std::string(tok) + "'");
        parts.push_back(v);
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return parts;
}

}  // namespace

Partition Partition::parse(std::string_view text) { return Partition(parse_parts(text)); }

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
    return a.parts_ <=> b.parts_;
}

StrictPartition::StrictPartition(std::vector<int> parts, int ambient) : ambient_(ambient) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw PartitionError("parts must be positive");
        if (i > 0 && parts[i] >= parts[i - 1]) throw PartitionError("not strictly decreasing");
    }
    if (!parts.empty() && parts[0] > ambient)
        throw PartitionError("part " + std::to_string(parts[0]) + " exceeds n = " + std::to_string(ambient));
    p_ = Partition(std::move(parts));
}

bool StrictPartition::contains(int part) const {
    return std::find(parts().begin(), parts().end(), part) != parts().end();
}

StrictPartition StrictPartition::parse(std::string_view text, int ambient) {
    return StrictPartition(parse_parts(text), ambient);
}

std::strong_ordering operator<=>(const StrictPartition& a, const StrictPartition& b) {
    if (auto c = a.p_ <=> b.p_; c != 0) return c;
    return a.ambient_ <=> b.ambient_;
}

const std::vector<StrictPartition>& enumerate_D(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_D: negative rank");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<std::vector<StrictPartition>>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[n];
    if (!slot) {
        auto out = std::make_unique<std::vector<StrictPartition>>();
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> parts;
            for (int p = n; p >= 1; --p)
                if (mask & (1u << (p - 1))) parts.push_back(p);
            out->emplace_back(std::move(parts), n);
        }
        std::sort(out->begin(), out->end());
        slot = std::move(out);
    }
    return *slot;
}

namespace {

void gen_box(int rows, int cols, int weight, std::vector<int>& cur, std::vector<Partition>& out) {
    int remaining_rows = rows - static_cast<int>(cur.size());
    if (weight == 0) {
        out.emplace_back(cur);
        return;
    }
    if (remaining_rows == 0) return;
    int top = std::min(cols, cur.empty() ? cols : cur.back());
    for (int p = std::min(top, weight); p >= 1; --p) {
        if (p * remaining_rows < weight) break;
        cur.push_back(p);
        gen_box(rows, cols, weight - p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_R(int rows, int cols, int weight) {
    std::vector<Partition> out;
    if (weight < 0 || weight > rows * cols) return out;
    std::vector<int> cur;
    gen_box(rows, cols, weight, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> enumerate_R(int rows, int cols) {
    std::vector<Partition> out;
    for (int w = 0; w <= rows * cols; ++w) {
        auto part = enumerate_R(rows, cols, w);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<Partition> partitions_of(int weight, int max_part) {
    return enumerate_R(std::max(weight, 0), max_part, weight);
}

StrictPartition complement(const StrictPartition& lambda, int n) {
    if (!lambda.empty() && lambda.parts()[0] > n)
        throw PartitionError("part " + std::to_string(lambda.parts()[0]) + " exceeds n = " + std::to_string(n));
    std::vector<int> parts;
    for (int p = n; p >= 1; --p)
        if (!lambda.contains(p)) parts.push_back(p);
    return StrictPartition(std::move(parts), n);
}

StrictPartition rho(int n) {
    std::vector<int> parts;
    for (int p = n; p >= 1; --p) parts.push_back(p);
    return StrictPartition(std::move(parts), n);
}

int bound_a(const StrictPartition& nu, int n) { return (n - nu.length()) / 2; }

Partition pad_og(const StrictPartition& nu, int m, int n) {
    if (m < 0 || m > bound_a(nu, n))
        throw std::out_of_range("pad_og: m = " + std::to_string(m) + " outside [0, a(nu)]");
    std::vector<int> parts(2 * m, n);
    parts.insert(parts.end(), nu.parts().begin(), nu.parts().end());
    return Partition(std::move(parts));
}

int bound_b(const StrictPartition& nu, bool odd_degree, int n) {
    return odd_degree ? (n - nu.length()) / 2 : (n + 1 - nu.length()) / 2;
}

Partition pad_lg(const StrictPartition& nu, int m, bool odd_degree, int n) {
    if (m < 0 || m > bound_b(nu, odd_degree, n))
        throw std::out_of_range("pad_lg: m = " + std::to_string(m) + " outside [0, b(nu)]");
    std::vector<int> parts(2 * m + (odd_degree ? 1 : 0), n + 1);
    parts.insert(parts.end(), nu.parts().begin(), nu.parts().end());
    return Partition(std::move(parts));
}

}  // namespace qsch
