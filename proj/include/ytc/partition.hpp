#ifndef YTC_PARTITION_HPP
#define YTC_PARTITION_HPP

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "ytc/common.hpp"

namespace ytc {

// Integer partition λ = (λ1 ≥ λ2 ≥ ... ≥ λr ≥ 1). Zero parts are trimmed at
// construction; the all-zero (or empty) input is the distinguished empty
// shape, whose associated complex is {∅}.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 0)
                throw DomainError("partition parts must be non-negative (part " +
                                  std::to_string(i + 1) + " is " + std::to_string(parts[i]) + ")");
            if (i > 0 && parts[i] > parts[i - 1])
                throw DomainError("partition parts must be weakly decreasing (part " +
                                  std::to_string(i + 1) + " exceeds part " + std::to_string(i) + ")");
        }
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        parts_ = std::move(parts);
    }

    // Comma-separated decreasing positive integers, e.g. "5,4,2".
    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        std::stringstream ss(text);
        std::string tok;
        std::size_t idx = 0;
        while (std::getline(ss, tok, ',')) {
            ++idx;
            try {
                std::size_t pos = 0;
                int v = std::stoi(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
                parts.push_back(v);
            } catch (const std::exception&) {
                throw DomainError("partition: part " + std::to_string(idx) +
                                  " ('" + tok + "') is not an integer");
            }
        }
        if (parts.empty()) throw DomainError("partition: no parts given");
        for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
            if (parts[i + 1] > parts[i])
                throw DomainError("partition: part " + std::to_string(i + 2) +
                                  " breaks the weakly decreasing order");
        }
        return Partition(std::move(parts));
    }

    bool empty_shape() const { return parts_.empty(); }
    int rows() const { return static_cast<int>(parts_.size()); }
    // 1-based row access; rows beyond r count as 0.
    int part(int j) const {
        return (j >= 1 && j <= rows()) ? parts_[static_cast<std::size_t>(j - 1)] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }
    int cells() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    Partition drop_first_row() const {
        if (empty_shape()) return {};
        return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
    }

    // (min(cap, λ_i)) over the given 1-based row range, zero parts trimmed.
    Partition clipped(int cap, int from_row, int to_row) const {
        std::vector<int> out;
        for (int j = from_row; j <= to_row; ++j) out.push_back(std::min(cap, part(j)));
        return Partition(std::move(out));
    }

    std::string to_string() const {
        if (empty_shape()) return "()";
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
};

inline Partition rectangle_partition(int width, int rows) {
    if (width < 0 || rows < 0) throw DomainError("rectangle partition needs non-negative sizes");
    return Partition(std::vector<int>(static_cast<std::size_t>(rows), width));
}

}  // namespace ytc

#endif
