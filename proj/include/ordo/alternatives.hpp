#ifndef ordo_alternatives_hpp
#define ordo_alternatives_hpp

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ordo {

// The shared alternative set. Labels are unique non-empty strings; their
// position in the header fixes the deterministic iteration order used by
// every enumeration in the library.
class AlternativeSet {
public:
    AlternativeSet() = default;

    explicit AlternativeSet(std::vector<std::string> labels)
        : labels_(std::move(labels)) {
        if (labels_.size() < 3)
            throw std::invalid_argument("at least 3 alternatives required");
        for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
            if (labels_[i].empty())
                throw std::invalid_argument("empty alternative label");
            if (!index_.emplace(labels_[i], i).second)
                throw std::invalid_argument("duplicate alternative label: " + labels_[i]);
        }
    }

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }

    std::optional<int> find(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    int index_of(const std::string& label) const {
        auto i = find(label);
        if (!i) throw std::invalid_argument("unknown alternative label: " + label);
        return *i;
    }

    friend bool operator==(const AlternativeSet& a, const AlternativeSet& b) {
        return a.labels_ == b.labels_;
    }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

} // namespace ordo

#endif
