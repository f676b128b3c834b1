#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace trackgrid {

/**
 * A small arithmetic expression in the variables x and y: numbers, + - * /,
 * ^ (power, right associative), parentheses, unary minus, the constants pi
 * and e, and the functions sin cos tan sqrt abs exp log (radians).
 * Parse errors throw DatasetParseError with a character position.
 */
class Expression {
public:
    struct Node;

    static Expression parse(std::string_view text);

    double eval(double x, double y) const;
    const std::string& text() const { return text_; }

private:
    Expression() = default;

    std::string text_;
    std::shared_ptr<const Node> root_;
};

}  // namespace trackgrid
