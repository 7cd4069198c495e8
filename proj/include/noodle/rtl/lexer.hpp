#pragma once

#include <cctype>
#include <cstring>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "noodle/errors.hpp"

namespace noodle::rtl {

enum class TokenKind { keyword, identifier, number, op, punct };

struct Token {
	TokenKind kind;
	std::string text;
	int line = 1;
	int column = 1;
};

inline const std::unordered_set<std::string> &verilog_keywords()
{
	static const std::unordered_set<std::string> kw = {
	    "module", "endmodule", "input",  "output",     "inout",    "wire",     "reg",      "integer",
	    "assign", "always",    "begin",  "end",        "if",       "else",     "case",     "casex",
	    "casez",  "endcase",   "default", "for",       "posedge",  "negedge",  "or",       "initial",
	    "parameter", "localparam", "function", "endfunction", "task", "endtask", "generate", "endgenerate",
	    "genvar", "wait",      "while",  "repeat",     "forever",  "and",      "not",      "nand",
	    "nor",    "xor",       "xnor",   "buf",        "signed"};
	return kw;
}

namespace detail {

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }
inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }
inline bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }
inline bool based_digit(char c)
{
	return std::isxdigit(static_cast<unsigned char>(c)) || c == '_' || c == 'x' || c == 'X' || c == 'z' || c == 'Z' ||
	       c == '?';
}

// Directives that own the rest of their line; other `NAME uses are macro
// references and only the tick + name is dropped.
inline bool line_directive(std::string_view name)
{
	return name == "define" || name == "include" || name == "timescale" || name == "ifdef" || name == "ifndef" ||
	       name == "else" || name == "elsif" || name == "endif" || name == "undef" || name == "default_nettype" ||
	       name == "celldefine" || name == "endcelldefine" || name == "resetall";
}

} // namespace detail

/// Splits Verilog source text into tokens. Comments are dropped; preprocessor
/// directives are stripped with a warning instead of being expanded.
///
/// In strict mode an illegal character raises LexError. In tolerant mode the
/// character is skipped with a warning, so lexing is total on printable input.
inline std::vector<Token> tokenize(std::string_view source, bool tolerant = false,
                                   std::vector<std::string> *warnings = nullptr)
{
	std::vector<Token> out;
	std::size_t i = 0;
	int line = 1, col = 1;

	auto advance = [&](std::size_t n) {
		for (std::size_t k = 0; k < n; ++k) {
			if (i < source.size() && source[i] == '\n') {
				++line;
				col = 1;
			} else {
				++col;
			}
			++i;
		}
	};
	auto warn = [&](const std::string &msg) {
		if (warnings)
			warnings->push_back(msg);
	};
	auto fail = [&](const std::string &msg, int l, int c) {
		if (!tolerant)
			throw LexError(msg, l, c);
		warn(msg + " at " + std::to_string(l) + ":" + std::to_string(c) + " (skipped)");
	};

	static const char *two_char_ops[] = {"&&", "||", "==", "!=", "<=", ">=", "<<", ">>", "~^", "^~", "**"};

	while (i < source.size()) {
		char c = source[i];
		if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
			advance(1);
			continue;
		}
		// comments
		if (c == '/' && i + 1 < source.size() && source[i + 1] == '/') {
			while (i < source.size() && source[i] != '\n')
				advance(1);
			continue;
		}
		if (c == '/' && i + 1 < source.size() && source[i + 1] == '*') {
			int l0 = line, c0 = col;
			advance(2);
			bool closed = false;
			while (i < source.size()) {
				if (source[i] == '*' && i + 1 < source.size() && source[i + 1] == '/') {
					advance(2);
					closed = true;
					break;
				}
				advance(1);
			}
			if (!closed)
				fail("unterminated block comment", l0, c0);
			continue;
		}
		// preprocessor tick
		if (c == '`') {
			int l0 = line, c0 = col;
			advance(1);
			std::string name;
			while (i < source.size() && detail::ident_char(source[i])) {
				name += source[i];
				advance(1);
			}
			if (detail::line_directive(name)) {
				while (i < source.size() && source[i] != '\n')
					advance(1);
				warn("preprocessor directive `" + name + " stripped at " + std::to_string(l0) + ":" +
				     std::to_string(c0));
			} else {
				warn("macro reference `" + name + " stripped at " + std::to_string(l0) + ":" +
				     std::to_string(c0));
			}
			continue;
		}
		int l0 = line, c0 = col;
		// identifiers / keywords
		if (detail::ident_start(c)) {
			std::string text;
			while (i < source.size() && detail::ident_char(source[i])) {
				text += source[i];
				advance(1);
			}
			TokenKind k = verilog_keywords().count(text) ? TokenKind::keyword : TokenKind::identifier;
			out.push_back({k, text, l0, c0});
			continue;
		}
		// numbers: 42, 8'hA5, 'b01, 12'd7
		if (detail::digit(c) || (c == '\'' && i + 1 < source.size())) {
			std::string text;
			while (i < source.size() && (detail::digit(source[i]) || source[i] == '_')) {
				text += source[i];
				advance(1);
			}
			if (i < source.size() && source[i] == '\'') {
				std::size_t save = i;
				std::string based = "'";
				advance(1);
				if (i < source.size() && (source[i] == 's' || source[i] == 'S')) {
					based += source[i];
					advance(1);
				}
				if (i < source.size() && std::strchr("bdohBDOH", source[i])) {
					based += source[i];
					advance(1);
					std::string digits;
					while (i < source.size() && detail::based_digit(source[i])) {
						digits += source[i];
						advance(1);
					}
					if (digits.empty()) {
						fail("based literal without digits", l0, c0);
						continue;
					}
					text += based + digits;
				} else {
					// lone tick that is not a based literal
					i = save;
					if (text.empty()) {
						fail(std::string("illegal character '") + c + "'", l0, c0);
						advance(1);
						continue;
					}
				}
			}
			if (!text.empty()) {
				out.push_back({TokenKind::number, text, l0, c0});
				continue;
			}
		}
		// string literal, kept as a literal token (only reachable inside
		// constructs the parser skips)
		if (c == '"') {
			std::string text = "\"";
			advance(1);
			bool closed = false;
			while (i < source.size()) {
				char ch = source[i];
				text += ch;
				advance(1);
				if (ch == '"') {
					closed = true;
					break;
				}
			}
			if (!closed)
				fail("unterminated string literal", l0, c0);
			out.push_back({TokenKind::number, text, l0, c0});
			continue;
		}
		// stray repeated '@' is never valid event-control syntax
		if (c == '@' && i + 1 < source.size() && source[i + 1] == '@') {
			fail("stray '@@'", l0, c0);
			advance(2);
			continue;
		}
		// multi-char operators
		{
			bool matched = false;
			if (i + 2 < source.size()) {
				std::string three = std::string(source.substr(i, 3));
				if (three == "===" || three == "!==") {
					out.push_back({TokenKind::op, three, l0, c0});
					advance(3);
					matched = true;
				}
			}
			if (!matched && i + 1 < source.size()) {
				std::string two = std::string(source.substr(i, 2));
				for (const char *op : two_char_ops) {
					if (two == op) {
						out.push_back({TokenKind::op, two, l0, c0});
						advance(2);
						matched = true;
						break;
					}
				}
			}
			if (matched)
				continue;
		}
		if (std::strchr("+-*/%&|^~!<>=?", c)) {
			out.push_back({TokenKind::op, std::string(1, c), l0, c0});
			advance(1);
			continue;
		}
		if (std::strchr("()[]{};,.:@#", c)) {
			out.push_back({TokenKind::punct, std::string(1, c), l0, c0});
			advance(1);
			continue;
		}
		fail(std::string("illegal character '") + c + "'", l0, c0);
		advance(1);
	}
	return out;
}

} // namespace noodle::rtl
