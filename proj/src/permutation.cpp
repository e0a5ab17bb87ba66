#include "quadrant/permutation.hpp"

#include "quadrant/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace quadrant {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty()) throw InputError("permutation must have positive degree");
    std::vector<char> seen(images_.size(), 0);
    for (int image : images_) {
        if (image < 0 || image >= degree() || seen[static_cast<std::size_t>(image)])
            throw InputError("permutation images are not a bijection");
        seen[static_cast<std::size_t>(image)] = 1;
    }
}

Permutation Permutation::identity(int degree) {
    if (degree < 1) throw InputError("permutation must have positive degree");
    std::vector<int> images(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i;
    return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < degree(); ++i) inv[static_cast<std::size_t>((*this)(i))] = i;
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
    if (lhs.degree() != rhs.degree()) throw InputError("cannot compose permutations of different degree");
    std::vector<int> images(static_cast<std::size_t>(lhs.degree()));
    for (int i = 0; i < lhs.degree(); ++i) images[static_cast<std::size_t>(i)] = lhs(rhs(i));
    return Permutation(std::move(images));
}

std::string Permutation::to_cycle_string() const {
    std::ostringstream out;
    std::vector<char> visited(images_.size(), 0);
    for (int start = 0; start < degree(); ++start) {
        if (visited[static_cast<std::size_t>(start)] || (*this)(start) == start) continue;
        out << '(';
        int point = start;
        bool first = true;
        while (!visited[static_cast<std::size_t>(point)]) {
            visited[static_cast<std::size_t>(point)] = 1;
            if (!first) out << ' ';
            out << point + 1;
            first = false;
            point = (*this)(point);
        }
        out << ')';
    }
    std::string text = out.str();
    return text.empty() ? "()" : text;
}

namespace {

void skip_space(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

}  // namespace

Permutation parse_permutation(std::string_view text, int degree) {
    if (degree < 1) throw InputError("degree must be positive");
    Permutation result = Permutation::identity(degree);
    std::vector<std::vector<int>> cycles;
    std::size_t pos = 0;
    skip_space(text, pos);
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw InputError("malformed cycle notation '" + std::string(text) + "': expected '('");
        ++pos;
        std::vector<int> cycle;
        while (true) {
            skip_space(text, pos);
            if (pos >= text.size())
                throw InputError("malformed cycle notation '" + std::string(text) + "': missing ')'");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            int value = 0;
            auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
            if (ec != std::errc() || end == text.data() + pos)
                throw InputError("malformed cycle notation '" + std::string(text) + "': expected a point");
            pos = static_cast<std::size_t>(end - text.data());
            if (value < 1 || value > degree)
                throw InputError("point " + std::to_string(value) + " out of range 1.." + std::to_string(degree));
            if (std::find(cycle.begin(), cycle.end(), value - 1) != cycle.end())
                throw InputError("point " + std::to_string(value) + " repeated within one cycle");
            cycle.push_back(value - 1);
        }
        cycles.push_back(std::move(cycle));
        skip_space(text, pos);
    }
    // rightmost cycle acts first
    for (const auto& cycle : cycles) {
        if (cycle.size() < 2) continue;
        std::vector<int> images(static_cast<std::size_t>(degree));
        for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i;
        for (std::size_t i = 0; i < cycle.size(); ++i)
            images[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
        result = result * Permutation(std::move(images));
    }
    return result;
}

std::vector<std::string> split_generator_list(std::string_view text) {
    std::vector<std::string> parts;
    std::string current;
    auto flush = [&] {
        auto first = current.find_first_not_of(" \t\n");
        if (first != std::string::npos) {
            auto last = current.find_last_not_of(" \t\n");
            parts.push_back(current.substr(first, last - first + 1));
        }
        current.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ';')
            flush();
        else
            current.push_back(c);
    }
    flush();
    return parts;
}

int max_point(std::string_view text) {
    int best = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
            int value = 0;
            auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
            if (ec == std::errc()) best = std::max(best, value);
            pos = static_cast<std::size_t>(end - text.data());
        } else {
            ++pos;
        }
    }
    return best;
}

}  // namespace quadrant
