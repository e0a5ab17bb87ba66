#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace quadrant {

/// A bijection of {0, ..., degree-1}. Products compose right to left:
/// (a * b)(x) = a(b(x)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;

    /// Cycle notation over 1-based points, "()" for the identity.
    std::string to_cycle_string() const;

    friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// Parses cycle notation such as "(1 2)(3 4)" over 1-based points <= degree.
/// Cycles are applied right to left, so "(1 2)(2 3)" == "(1 2 3)".
/// The empty string and "()" both denote the identity.
Permutation parse_permutation(std::string_view text, int degree);

/// Splits a generator list such as "(1 2), (1 2 3)" on ',' or ';'.
std::vector<std::string> split_generator_list(std::string_view text);

/// Largest 1-based point mentioned in a generator list, 0 if none.
int max_point(std::string_view text);

}  // namespace quadrant
