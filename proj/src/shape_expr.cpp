#include "battery/shape_expr.hpp"

#include <cctype>
#include <vector>

namespace battery {

ParseError::ParseError(std::size_t position, std::string reason)
    : std::invalid_argument("at offset " + std::to_string(position) + ": " + reason),
      position_(position),
      reason_(std::move(reason)) {}

namespace {

constexpr unsigned kMaxNumber = 1'000'000;

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    std::size_t pos() const { return pos_; }
    bool done() const { return pos_ == text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }

    bool accept(std::string_view token) {
        if (text_.substr(pos_, token.size()) != token)
            return false;
        pos_ += token.size();
        return true;
    }

    void expect(std::string_view token) {
        if (!accept(token))
            fail("expected '" + std::string(token) + "'");
    }

    unsigned number() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a non-negative integer");
        unsigned long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
            if (v > kMaxNumber)
                fail("number exceeds " + std::to_string(kMaxNumber));
            ++pos_;
        }
        return static_cast<unsigned>(v);
    }

    // Comma-separated numbers; stops before a comma followed by a non-digit.
    std::vector<unsigned> numbers() {
        std::vector<unsigned> out;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            return out;
        out.push_back(number());
        while (peek() == ',' && pos_ + 1 < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            out.push_back(number());
        }
        return out;
    }

    void finish() {
        if (!done())
            fail("unexpected trailing input");
    }

    [[noreturn]] void fail(std::string reason) const { throw ParseError(pos_, std::move(reason)); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

Partition partition_at(Cursor& in) {
    const std::size_t start = in.pos();
    auto parts = in.numbers();
    try {
        return Partition::from_parts(std::move(parts));
    } catch (const ShapeError& e) {
        throw ParseError(start, e.what());
    }
}

Partition rect_at(Cursor& in) {
    unsigned m = in.number();
    in.expect("x");
    unsigned n = in.number();
    return rectangle(m, n);
}

BatteryShape battery_at(Cursor& in) {
    const std::size_t start = in.pos();
    BatteryShape b;
    if (in.accept("rect:"))
        b.lambda = rect_at(in);
    else if (in.accept("part:"))
        b.lambda = partition_at(in);
    else
        in.fail("expected 'rect:' or 'part:' after 'battery:'");
    in.expect(",a=");
    b.a = in.number();
    in.expect(",k=");
    b.k = in.number();
    in.finish();
    try {
        validate_battery(b);
    } catch (const ShapeError& e) {
        throw ParseError(start, e.what());
    }
    return b;
}

}  // namespace

ShapeExpr parse_shape(std::string_view text) {
    Cursor in(text);
    ShapeExpr out{std::string(text), Partition{}};
    if (in.accept("partition:")) {
        out.shape = partition_at(in);
        in.finish();
    } else if (in.accept("rect:")) {
        out.shape = rect_at(in);
        in.finish();
    } else if (in.accept("battery:")) {
        out.shape = battery_at(in);
    } else if (in.accept("skew:")) {
        const std::size_t start = in.pos();
        Partition outer = partition_at(in);
        in.expect("/");
        Partition inner = partition_at(in);
        in.finish();
        try {
            out.shape = SkewShape(std::move(outer), std::move(inner));
        } catch (const ShapeError& e) {
            throw ParseError(start, e.what());
        }
    } else if (in.accept("truncated:")) {
        const std::size_t start = in.pos();
        Partition outer = partition_at(in);
        in.expect("\\");
        Partition trunc = partition_at(in);
        Partition inner;
        if (in.accept("/"))
            inner = partition_at(in);
        in.finish();
        try {
            out.shape = TruncatedShape(SkewShape(std::move(outer), std::move(inner)), std::move(trunc));
        } catch (const ShapeError& e) {
            throw ParseError(start, e.what());
        }
    } else {
        in.fail("unknown shape kind; expected partition:, rect:, battery:, skew: or truncated:");
    }
    return out;
}

}  // namespace battery
