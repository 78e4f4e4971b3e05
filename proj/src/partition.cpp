#include "chern/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "chern/errors.hpp"

namespace chern {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 0)
            throw PreconditionError("partition parts must be nonnegative");
    parts_.erase(std::remove(parts_.begin(), parts_.end(), 0), parts_.end());
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(int value) const {
    return std::find(parts_.begin(), parts_.end(), value) != parts_.end();
}

Partition Partition::conjugate() const {
    std::vector<int> result;
    for (int column = 1; !parts_.empty() && column <= parts_[0]; ++column) {
        int height = 0;
        for (int p : parts_)
            if (p >= column)
                ++height;
        result.push_back(height);
    }
    return Partition(std::move(result));
}

Partition Partition::merged(const Partition& other) const {
    std::vector<int> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(all));
}

std::string Partition::str() const {
    if (parts_.empty())
        return "-";
    std::ostringstream out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out << ",";
        out << parts_[i];
    }
    return out.str();
}

std::string Partition::monomial_str(const std::string& letter) const {
    if (parts_.empty())
        return "1";
    std::ostringstream out;
    // ascending index order: (3,1,1) -> "c1^2*c3"
    std::vector<int> asc(parts_.rbegin(), parts_.rend());
    size_t i = 0;
    bool first = true;
    while (i < asc.size()) {
        size_t j = i;
        while (j < asc.size() && asc[j] == asc[i])
            ++j;
        if (!first)
            out << "*";
        out << letter << asc[i];
        if (j - i > 1)
            out << "^" << (j - i);
        first = false;
        i = j;
    }
    return out.str();
}

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const {
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

namespace {

void emit_partitions(int n, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    for (int first = std::min(max_part, n); first >= 1; --first) {
        prefix.push_back(first);
        emit_partitions(n - first, first, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_part) {
    if (n < 0)
        throw PreconditionError("partitions_of: negative n");
    if (max_part < 0)
        max_part = n;
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit_partitions(n, max_part, prefix, out);
    return out;
}

long partition_count(int n) {
    if (n < 0)
        return 0;
    // p(k) via the recurrence over partial sums, small n only
    std::vector<long> p(static_cast<size_t>(n) + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int m = k; m <= n; ++m)
            p[static_cast<size_t>(m)] += p[static_cast<size_t>(m - k)];
    return p[static_cast<size_t>(n)];
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            size_t used = 0;
            int value = std::stoi(token, &used);
            while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used])))
                ++used;
            if (used != token.size())
                throw std::invalid_argument(token);
            parts.push_back(value);
        } catch (const std::exception&) {
            throw ParseError("bad partition '" + text + "'");
        }
    }
    if (parts.empty())
        throw ParseError("bad partition '" + text + "'");
    for (int p : parts)
        if (p <= 0)
            throw ParseError("partition parts must be positive in '" + text + "'");
    return Partition(std::move(parts));
}

}  // namespace chern
