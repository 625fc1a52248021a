#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "roborun/dsl.h"

namespace roborun {
namespace {

enum class TokenKind { kWord, kInt, kLBrace, kRBrace, kEnd, kInvalid };

struct Token {
  TokenKind kind;
  std::string_view text;
  Span span;
  int value = 0;  // kInt only; saturates at 1000
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token Next() {
    SkipTrivia();
    const std::size_t begin = pos_;
    if (pos_ >= src_.size()) return {TokenKind::kEnd, {}, {begin, begin}};
    const char c = src_[pos_];
    if (c == '{' || c == '}') {
      ++pos_;
      return {c == '{' ? TokenKind::kLBrace : TokenKind::kRBrace,
              src_.substr(begin, 1), {begin, pos_}};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int value = 0;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        value = std::min(1000, value * 10 + (src_[pos_] - '0'));
        ++pos_;
      }
      return {TokenKind::kInt, src_.substr(begin, pos_ - begin), {begin, pos_},
              value};
    }
    if (IsWordStart(c)) {
      while (pos_ < src_.size() && IsWordChar(src_[pos_])) ++pos_;
      return {TokenKind::kWord, src_.substr(begin, pos_ - begin),
              {begin, pos_}};
    }
    // One UTF-8 sequence as a single invalid token.
    ++pos_;
    while (pos_ < src_.size() &&
           (static_cast<unsigned char>(src_[pos_]) & 0xC0) == 0x80) {
      ++pos_;
    }
    return {TokenKind::kInvalid, src_.substr(begin, pos_ - begin),
            {begin, pos_}};
  }

 private:
  static bool IsWordStart(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool IsWordChar(char c) {
    return IsWordStart(c) || std::isdigit(static_cast<unsigned char>(c));
  }

  void SkipTrivia() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

// Thrown internally to unwind on a syntax error; never escapes ParseProgram.
struct SyntaxError {};

// Nesting beyond this aborts outright instead of recursing further. Any
// program that deep already exceeds the statement limit.
constexpr int kHardNestingCap = kMaxStatements + 1;
// Parsing stops once this many statements have been seen.
constexpr int kHardStatementCap = 4 * kMaxStatements;

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { Advance(); }

  Result<Program> Run() {
    Block body;
    try {
      body = ParseStatements(/*depth=*/1, /*in_block=*/false);
    } catch (const SyntaxError&) {
      return std::move(diags_);
    }
    if (next_id_ > kMaxStatements) {
      diags_.push_back(SizeDiagnostic(std::to_string(next_id_)));
    }
    if (!diags_.empty()) return std::move(diags_);
    return Program{std::move(body), std::nullopt};
  }

 private:
  void Advance() { tok_ = lexer_.Next(); }

  Diagnostic SizeDiagnostic(const std::string& count) const {
    Diagnostic d = MakeDiag(DiagCode::kSize,
                            "program has " + count +
                                " statements; the limit is " +
                                std::to_string(kMaxStatements));
    d.span = size_span_;
    return d;
  }

  [[noreturn]] void Fail(std::string message) {
    Diagnostic d = MakeDiag(DiagCode::kParse, std::move(message));
    d.span = tok_.span;
    diags_.push_back(std::move(d));
    throw SyntaxError{};
  }

  std::string Describe(const Token& t) const {
    switch (t.kind) {
      case TokenKind::kEnd:
        return "end of program";
      default:
        return "'" + std::string(t.text) + "'";
    }
  }

  Block ParseStatements(int depth, bool in_block) {
    Block out;
    while (true) {
      if (tok_.kind == TokenKind::kEnd) {
        if (in_block) Fail("missing '}' to close a block");
        return out;
      }
      if (tok_.kind == TokenKind::kRBrace) {
        if (!in_block) Fail("unexpected '}' with no open block");
        return out;
      }
      out.push_back(ParseStatement(depth));
    }
  }

  Block ParseBlock(int depth) {
    if (tok_.kind != TokenKind::kLBrace) {
      Fail("expected '{' but found " + Describe(tok_));
    }
    Advance();
    Block body = ParseStatements(depth, /*in_block=*/true);
    Advance();  // '}'
    return body;
  }

  int ParseCount(DiagCode range_code, std::string_view what, int id) {
    if (tok_.kind != TokenKind::kInt) {
      Fail("expected a number after '" + std::string(what) + "' but found " +
           Describe(tok_));
    }
    const int value = tok_.value;
    if (value < kMinCount || value > kMaxCount) {
      Diagnostic d = MakeDiag(range_code, std::string(what) +
                                              " needs a number from 1 to 99, not " +
                                              std::string(tok_.text));
      d.statement_id = id;
      d.span = tok_.span;
      diags_.push_back(std::move(d));
    }
    Advance();
    return value;
  }

  Condition ParseCondition(int id) {
    Condition cond;
    const Span begin = tok_.span;
    while (tok_.kind == TokenKind::kWord && tok_.text == "not") {
      ++cond.negations;
      Advance();
    }
    if (tok_.kind != TokenKind::kWord) {
      Fail("expected a condition but found " + Describe(tok_));
    }
    if (tok_.text == "ahead_clear") {
      cond.sensor = Sensor::kAheadClear;
    } else if (tok_.text == "left_clear") {
      cond.sensor = Sensor::kLeftClear;
    } else if (tok_.text == "right_clear") {
      cond.sensor = Sensor::kRightClear;
    } else if (tok_.text == "at_goal") {
      cond.sensor = Sensor::kAtGoal;
    } else {
      Fail("unknown condition '" + std::string(tok_.text) + "'");
    }
    if (cond.negations > kMaxNegations) {
      Diagnostic d = MakeDiag(DiagCode::kNotDepth,
                              "too many 'not's in one condition (limit " +
                                  std::to_string(kMaxNegations) + ")");
      d.statement_id = id;
      d.span = Span{begin.begin, tok_.span.end};
      diags_.push_back(std::move(d));
    }
    Advance();
    return cond;
  }

  Statement ParseStatement(int depth) {
    if (tok_.kind != TokenKind::kWord) {
      Fail("expected a command but found " + Describe(tok_));
    }
    const Token head = tok_;
    const int id = next_id_++;
    if (id == kMaxStatements) size_span_ = head.span;
    if (id == kHardStatementCap) {
      diags_.push_back(
          SizeDiagnostic("more than " + std::to_string(kHardStatementCap)));
      throw SyntaxError{};
    }
    if (depth > kMaxNesting && !depth_reported_) {
      depth_reported_ = true;
      Diagnostic d = MakeDiag(DiagCode::kDepth,
                              "blocks are nested more than " +
                                  std::to_string(kMaxNesting) + " deep");
      d.statement_id = id;
      d.span = head.span;
      diags_.push_back(std::move(d));
    }
    if (depth > kHardNestingCap) Fail("nesting is far too deep");

    Statement s;
    s.id = id;
    const std::string_view word = head.text;
    Advance();
    if (word == "move") {
      s.node = Move{ParseCount(DiagCode::kMoveRange, "move", id)};
    } else if (word == "left") {
      s.node = TurnLeft{};
    } else if (word == "right") {
      s.node = TurnRight{};
    } else if (word == "repeat") {
      const int times = ParseCount(DiagCode::kLoopRange, "repeat", id);
      s.node = Repeat{times, ParseBlock(depth + 1)};
    } else if (word == "while") {
      const Condition cond = ParseCondition(id);
      s.node = While{cond, ParseBlock(depth + 1)};
    } else if (word == "if") {
      const Condition cond = ParseCondition(id);
      Block then_body = ParseBlock(depth + 1);
      Block else_body;
      if (tok_.kind == TokenKind::kWord && tok_.text == "else") {
        Advance();
        else_body = ParseBlock(depth + 1);
      }
      s.node = IfElse{cond, std::move(then_body), std::move(else_body)};
    } else {
      tok_ = head;
      Fail("unknown command '" + std::string(word) + "'");
    }
    return s;
  }

  Lexer lexer_;
  Token tok_{};
  Diagnostics diags_;
  int next_id_ = 0;
  bool depth_reported_ = false;
  Span size_span_{};
};

}  // namespace

Result<Program> ParseProgram(std::string_view text) {
  auto result = Parser(text).Run();
  if (!result) return result;
  Program program = std::move(result).value();
  program.source_text = std::string(text);
  return program;
}

}  // namespace roborun
