#pragma once

#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "noodle/rtl/ast.hpp"
#include "noodle/rtl/lexer.hpp"

namespace noodle::rtl {

enum class ParseMode { strict, tolerant };

namespace detail {

class Parser {
      public:
	Parser(const std::vector<Token> &tokens, ParseMode mode) : toks_(tokens), mode_(mode) {}

	DesignAst run()
	{
		DesignAst ast;
		while (!at_end()) {
			if (is_keyword("module")) {
				std::optional<ModuleDecl> m;
				if (mode_ == ParseMode::strict) {
					m = parse_module();
				} else {
					try {
						m = parse_module();
					} catch (const ParseError &e) {
						warnings_.push_back(std::string("module abandoned: ") + e.what());
						while (!at_end() && !is_keyword("endmodule") && !is_keyword("module"))
							advance();
						accept_keyword("endmodule");
					}
				}
				if (!m)
					continue;
				bool dup = false;
				for (const ModuleDecl &prev : ast.modules)
					if (prev.name == m->name)
						dup = true;
				if (dup) {
					report("duplicate module '" + m->name + "'", peek_prev());
					continue;
				}
				ast.modules.push_back(std::move(*m));
			} else {
				report("expected 'module', got '" + peek().text + "'", peek());
				advance();
			}
		}
		resolve_signals(ast);
		ast.warnings.insert(ast.warnings.end(), warnings_.begin(), warnings_.end());
		return ast;
	}

      private:
	const std::vector<Token> &toks_;
	ParseMode mode_;
	std::size_t pos_ = 0;
	std::vector<std::string> warnings_;

	// ---- token plumbing ----

	bool at_end() const { return pos_ >= toks_.size(); }
	const Token &peek() const
	{
		static const Token eof{TokenKind::punct, "<eof>", 0, 0};
		return at_end() ? eof : toks_[pos_];
	}
	const Token &peek_prev() const { return pos_ > 0 ? toks_[pos_ - 1] : peek(); }
	const Token &peek_ahead(std::size_t n) const
	{
		static const Token eof{TokenKind::punct, "<eof>", 0, 0};
		return pos_ + n < toks_.size() ? toks_[pos_ + n] : eof;
	}
	Token advance()
	{
		Token t = peek();
		if (!at_end())
			++pos_;
		return t;
	}
	bool is_keyword(const char *kw) const { return peek().kind == TokenKind::keyword && peek().text == kw; }
	bool is_punct(const char *p) const { return peek().kind == TokenKind::punct && peek().text == p; }
	bool is_op(const char *o) const { return peek().kind == TokenKind::op && peek().text == o; }
	bool accept_keyword(const char *kw)
	{
		if (is_keyword(kw)) {
			advance();
			return true;
		}
		return false;
	}
	bool accept_punct(const char *p)
	{
		if (is_punct(p)) {
			advance();
			return true;
		}
		return false;
	}
	bool accept_op(const char *o)
	{
		if (is_op(o)) {
			advance();
			return true;
		}
		return false;
	}
	[[noreturn]] void fail(const std::string &expected) const
	{
		const Token &t = peek();
		throw ParseError("expected " + expected + ", got '" + t.text + "'", t.line, t.column);
	}
	void expect_punct(const char *p)
	{
		if (!accept_punct(p))
			fail(std::string("'") + p + "'");
	}
	void expect_keyword(const char *kw)
	{
		if (!accept_keyword(kw))
			fail(std::string("'") + kw + "'");
	}
	Token expect_identifier(const char *what)
	{
		if (peek().kind != TokenKind::identifier)
			fail(what);
		return advance();
	}

	/// In strict mode raise ParseError; in tolerant mode record a warning.
	void report(const std::string &msg, const Token &t)
	{
		if (mode_ == ParseMode::strict)
			throw ParseError(msg, t.line, t.column);
		warnings_.push_back(msg + " at " + std::to_string(t.line) + ":" + std::to_string(t.column) +
		                    " (skipped)");
	}

	bool opens_block(const Token &t) const
	{
		return t.kind == TokenKind::keyword &&
		       (t.text == "begin" || t.text == "case" || t.text == "casex" || t.text == "casez" ||
		        t.text == "function" || t.text == "task" || t.text == "generate");
	}
	bool closes_block(const Token &t) const
	{
		return t.kind == TokenKind::keyword &&
		       (t.text == "end" || t.text == "endcase" || t.text == "endfunction" || t.text == "endtask" ||
		        t.text == "endgenerate");
	}

	/// Skip one construct: to the ';' at depth zero, or past the first fully
	/// balanced begin/end-style region. Never consumes 'endmodule' or an
	/// enclosing block closer.
	void skip_construct()
	{
		if (at_end())
			return;
		if (closes_block(peek())) { // stray closer, drop it to make progress
			advance();
			return;
		}
		int depth = 0;
		while (!at_end()) {
			const Token &t = peek();
			if (t.kind == TokenKind::keyword && t.text == "endmodule" && depth == 0)
				return;
			if (opens_block(t)) {
				++depth;
				advance();
				continue;
			}
			if (closes_block(t)) {
				if (depth == 0)
					return;
				--depth;
				advance();
				if (depth == 0)
					return;
				continue;
			}
			if (t.kind == TokenKind::punct && t.text == ";" && depth == 0) {
				advance();
				return;
			}
			advance();
		}
	}

	// ---- module structure ----

	ModuleDecl parse_module()
	{
		expect_keyword("module");
		ModuleDecl m;
		m.name = expect_identifier("module name").text;
		if (accept_punct("(")) {
			parse_port_list(m);
		}
		expect_punct(";");
		while (!at_end() && !is_keyword("endmodule")) {
			if (mode_ == ParseMode::strict) {
				parse_module_item(m);
			} else {
				std::size_t before = pos_;
				try {
					parse_module_item(m);
				} catch (const ParseError &e) {
					warnings_.push_back(std::string("construct skipped: ") + e.what());
					if (pos_ == before)
						advance();
					skip_construct();
				}
			}
		}
		expect_keyword("endmodule");
		return m;
	}

	std::optional<PortDir> dir_keyword()
	{
		if (is_keyword("input"))
			return PortDir::input;
		if (is_keyword("output"))
			return PortDir::output;
		if (is_keyword("inout"))
			return PortDir::inout;
		return std::nullopt;
	}

	void parse_port_list(ModuleDecl &m)
	{
		if (accept_punct(")"))
			return; // empty list
		PortDir sticky = PortDir::input;
		bool sticky_reg = false;
		int sticky_width = 1;
		bool ansi = false;
		while (true) {
			if (auto d = dir_keyword()) {
				ansi = true;
				sticky = *d;
				advance();
				sticky_reg = false;
				if (accept_keyword("wire"))
					sticky_reg = false;
				else if (accept_keyword("reg"))
					sticky_reg = true;
				accept_keyword("signed");
				sticky_width = is_punct("[") ? parse_range_width() : 1;
			} else if (ansi) {
				// direction carries over to subsequent names
			}
			if (peek().kind != TokenKind::identifier) {
				report("expected port name or direction in port list, got '" + peek().text + "'",
				       peek());
				// tolerant recovery: drop to ')' or ';'
				while (!at_end() && !is_punct(")") && !is_punct(";"))
					advance();
				accept_punct(")");
				return;
			}
			Token name = advance();
			if (ansi)
				m.ports.push_back({name.text, sticky, sticky_width, sticky_reg});
			else
				m.ports.push_back({name.text, PortDir::input, 1, false}); // direction set later
			if (accept_punct(","))
				continue;
			expect_punct(")");
			return;
		}
	}

	/// Parses "[msb:lsb]" with constant bounds; returns |msb-lsb|+1.
	int parse_range_width()
	{
		expect_punct("[");
		long msb = parse_const_bound();
		expect_punct(":");
		long lsb = parse_const_bound();
		expect_punct("]");
		long w = msb >= lsb ? msb - lsb + 1 : lsb - msb + 1;
		return static_cast<int>(w);
	}

	long parse_const_bound()
	{
		if (peek().kind != TokenKind::number)
			fail("constant range bound");
		Token t = advance();
		return std::strtol(t.text.c_str(), nullptr, 10);
	}

	void parse_module_item(ModuleDecl &m)
	{
		if (auto d = dir_keyword()) {
			// non-ANSI direction declaration for listed ports
			advance();
			bool as_reg = false;
			if (accept_keyword("reg"))
				as_reg = true;
			else
				accept_keyword("wire");
			accept_keyword("signed");
			int width = is_punct("[") ? parse_range_width() : 1;
			do {
				Token name = expect_identifier("port name");
				bool found = false;
				for (PortDecl &p : m.ports) {
					if (p.name == name.text) {
						p.dir = *d;
						p.width = width;
						p.is_reg = p.is_reg || as_reg;
						found = true;
					}
				}
				if (!found) {
					warnings_.push_back("direction declared for unlisted port '" + name.text +
					                    "' in module '" + m.name + "'");
					m.ports.push_back({name.text, *d, width, as_reg});
				}
			} while (accept_punct(","));
			expect_punct(";");
			return;
		}
		if (is_keyword("wire") || is_keyword("reg") || is_keyword("integer")) {
			parse_net_decl(m);
			return;
		}
		if (is_keyword("assign")) {
			m.items.push_back(parse_continuous_assign());
			return;
		}
		if (is_keyword("always")) {
			m.items.push_back(parse_always());
			return;
		}
		if (peek().kind == TokenKind::identifier) {
			// module instantiation: modname [#(...)] instname ( ... ) ;
			m.items.push_back(parse_instance());
			return;
		}
		report("unsupported construct '" + peek().text + "' in module body", peek());
		skip_construct();
	}

	void parse_net_decl(ModuleDecl &m)
	{
		NetKind kind = NetKind::wire;
		int width = 1;
		if (accept_keyword("integer")) {
			kind = NetKind::reg;
			width = 32;
		} else {
			kind = accept_keyword("reg") ? NetKind::reg : (accept_keyword("wire"), NetKind::wire);
			accept_keyword("signed");
			if (is_punct("["))
				width = parse_range_width();
		}
		do {
			Token name = expect_identifier("signal name");
			bool is_port = false;
			for (PortDecl &p : m.ports) {
				if (p.name == name.text) {
					// output reg declared in the body
					p.is_reg = p.is_reg || kind == NetKind::reg;
					if (width != 1)
						p.width = width;
					is_port = true;
				}
			}
			if (!is_port)
				m.declarations.push_back({name.text, kind, width});
			if (is_op("=")) {
				// net initializer is treated as a continuous assign
				advance();
				AstNode n{NodeKind::assign, {{"target", name.text}}, {}};
				n.children.push_back(parse_expr());
				m.items.push_back(std::move(n));
			}
		} while (accept_punct(","));
		expect_punct(";");
	}

	AstNode parse_continuous_assign()
	{
		expect_keyword("assign");
		AstNode n = parse_assignment_core(NodeKind::assign, "=");
		expect_punct(";");
		return n;
	}

	/// lvalue ('='|'<=') expr, without the trailing ';'
	AstNode parse_assignment_core(NodeKind kind, const char *expected_op)
	{
		Token target = expect_identifier("assignment target");
		AstNode n{kind, {}, {}};
		n.attrs["target"] = target.text;
		std::optional<AstNode> index_expr;
		if (is_punct("[")) {
			advance();
			AstNode first = parse_expr();
			if (accept_punct(":")) {
				AstNode second = parse_expr();
				if (first.kind == NodeKind::literal && second.kind == NodeKind::literal) {
					n.attrs["lhs_range"] = first.attrs.at("value") + ":" + second.attrs.at("value");
				} else {
					fail("constant part-select bounds on assignment target");
				}
			} else if (first.kind == NodeKind::literal) {
				n.attrs["lhs_range"] = first.attrs.at("value");
			} else {
				n.attrs["lhs_indexed"] = "1";
				index_expr = std::move(first);
			}
			expect_punct("]");
		}
		if (expected_op[0] == '=' ? !accept_op("=") : !accept_op("<="))
			fail(std::string("'") + expected_op + "'");
		AstNode rhs = parse_expr();
		if (index_expr)
			n.children.push_back(std::move(*index_expr));
		n.children.push_back(std::move(rhs));
		return n;
	}

	AstNode parse_always()
	{
		expect_keyword("always");
		AstNode n{NodeKind::always_block, {}, {}};
		expect_punct("@");
		std::string sens;
		if (accept_op("*")) {
			sens = "*";
		} else {
			expect_punct("(");
			if (accept_op("*")) {
				sens = "*";
			} else {
				while (true) {
					std::string item;
					if (accept_keyword("posedge"))
						item = "posedge ";
					else if (accept_keyword("negedge"))
						item = "negedge ";
					item += expect_identifier("sensitivity signal").text;
					sens += sens.empty() ? item : ", " + item;
					if (accept_keyword("or") || accept_punct(","))
						continue;
					break;
				}
			}
			expect_punct(")");
		}
		n.attrs["sensitivity"] = sens;
		n.children.push_back(parse_statement());
		return n;
	}

	AstNode parse_statement()
	{
		// optional delay / event control prefixes are consumed and ignored
		while (true) {
			if (is_punct("#")) {
				advance();
				if (peek().kind == TokenKind::number)
					advance();
				warnings_.push_back("delay control ignored at " + std::to_string(peek_prev().line) +
				                    ":" + std::to_string(peek_prev().column));
				continue;
			}
			break;
		}
		if (is_keyword("begin")) {
			advance();
			AstNode blk{NodeKind::block, {}, {}};
			while (!at_end() && !is_keyword("end")) {
				if (is_keyword("endmodule"))
					fail("'end'");
				blk.children.push_back(parse_statement());
			}
			expect_keyword("end");
			return blk;
		}
		if (is_keyword("if")) {
			advance();
			expect_punct("(");
			AstNode cond = parse_expr();
			expect_punct(")");
			AstNode n{NodeKind::if_stmt, {}, {}};
			n.children.push_back(std::move(cond));
			n.children.push_back(parse_statement());
			if (accept_keyword("else"))
				n.children.push_back(parse_statement());
			return n;
		}
		if (is_keyword("case") || is_keyword("casex") || is_keyword("casez")) {
			return parse_case();
		}
		if (is_keyword("for")) {
			return parse_for();
		}
		if (accept_punct(";")) {
			return AstNode{NodeKind::block, {}, {}}; // null statement
		}
		if (peek().kind == TokenKind::identifier) {
			// blocking or nonblocking assignment
			std::size_t save = pos_;
			Token target = advance();
			// scan past an optional select to find the assignment operator
			if (is_punct("[")) {
				int d = 0;
				while (!at_end()) {
					if (is_punct("["))
						++d;
					if (is_punct("]")) {
						--d;
						advance();
						if (d == 0)
							break;
						continue;
					}
					advance();
				}
			}
			bool nonblocking = is_op("<=");
			bool blocking = is_op("=");
			pos_ = save;
			if (!nonblocking && !blocking) {
				report("unsupported statement starting at '" + target.text + "'", peek());
				skip_construct();
				return AstNode{NodeKind::block, {}, {}};
			}
			AstNode n = parse_assignment_core(
			    nonblocking ? NodeKind::nonblocking_assign : NodeKind::blocking_assign,
			    nonblocking ? "<=" : "=");
			expect_punct(";");
			return n;
		}
		report("unsupported statement '" + peek().text + "'", peek());
		skip_construct();
		return AstNode{NodeKind::block, {}, {}};
	}

	AstNode parse_case()
	{
		std::string variant = advance().text; // case / casex / casez
		AstNode n{NodeKind::case_stmt, {}, {}};
		n.attrs["variant"] = variant;
		expect_punct("(");
		n.children.push_back(parse_expr());
		expect_punct(")");
		int items = 0;
		while (!at_end() && !is_keyword("endcase")) {
			AstNode item{NodeKind::case_item, {}, {}};
			std::string labels;
			if (accept_keyword("default")) {
				labels = "default";
				accept_punct(":");
			} else {
				while (true) {
					AstNode label = parse_expr();
					std::string text = expr_text(label);
					labels += labels.empty() ? text : "," + text;
					if (accept_punct(","))
						continue;
					expect_punct(":");
					break;
				}
			}
			item.attrs["labels"] = labels;
			item.children.push_back(parse_statement());
			n.children.push_back(std::move(item));
			++items;
		}
		expect_keyword("endcase");
		if (items == 0)
			report("case statement without items", peek_prev());
		return n;
	}

	AstNode parse_for()
	{
		expect_keyword("for");
		AstNode n{NodeKind::loop, {}, {}};
		expect_punct("(");
		AstNode init = parse_assignment_core(NodeKind::blocking_assign, "=");
		n.attrs["var"] = init.attrs.at("target");
		expect_punct(";");
		AstNode cond = parse_expr();
		expect_punct(";");
		AstNode step = parse_assignment_core(NodeKind::blocking_assign, "=");
		expect_punct(")");
		n.children.push_back(std::move(init));
		n.children.push_back(std::move(cond));
		n.children.push_back(std::move(step));
		n.children.push_back(parse_statement());
		return n;
	}

	AstNode parse_instance()
	{
		Token module_name = expect_identifier("module name");
		AstNode n{NodeKind::instance, {}, {}};
		n.attrs["module"] = module_name.text;
		if (is_punct("#")) {
			if (mode_ == ParseMode::strict)
				fail("instance without parameter override");
			advance();
			if (accept_punct("(")) {
				int d = 1;
				while (!at_end() && d > 0) {
					if (is_punct("("))
						++d;
					if (is_punct(")"))
						--d;
					advance();
				}
			}
			warnings_.push_back("parameter override on instance of '" + module_name.text + "' ignored");
		}
		Token inst_name = expect_identifier("instance name");
		n.attrs["name"] = inst_name.text;
		expect_punct("(");
		if (accept_punct(")")) {
			expect_punct(";");
			return n;
		}
		std::string ports;
		bool named = is_punct(".");
		while (true) {
			if (named) {
				expect_punct(".");
				Token port = expect_identifier("port name");
				ports += ports.empty() ? port.text : "," + port.text;
				expect_punct("(");
				if (!is_punct(")"))
					n.children.push_back(parse_expr());
				else
					n.children.push_back(AstNode{NodeKind::literal, {{"value", "0"}}, {}});
				expect_punct(")");
			} else {
				n.children.push_back(parse_expr());
			}
			if (accept_punct(","))
				continue;
			expect_punct(")");
			break;
		}
		if (named)
			n.attrs["ports"] = ports;
		expect_punct(";");
		return n;
	}

	// ---- expressions (precedence climbing) ----

	int binary_precedence(const Token &t) const
	{
		if (t.kind != TokenKind::op)
			return -1;
		const std::string &o = t.text;
		if (o == "||")
			return 1;
		if (o == "&&")
			return 2;
		if (o == "|")
			return 3;
		if (o == "^" || o == "~^" || o == "^~")
			return 4;
		if (o == "&")
			return 5;
		if (o == "==" || o == "!=" || o == "===" || o == "!==")
			return 6;
		if (o == "<" || o == "<=" || o == ">" || o == ">=")
			return 7;
		if (o == "<<" || o == ">>")
			return 8;
		if (o == "+" || o == "-")
			return 9;
		if (o == "*" || o == "/" || o == "%")
			return 10;
		if (o == "**")
			return 11;
		return -1;
	}

	AstNode parse_expr() { return parse_ternary(); }

	AstNode parse_ternary()
	{
		AstNode cond = parse_binary(1);
		if (accept_op("?")) {
			AstNode n{NodeKind::ternary, {}, {}};
			AstNode then = parse_expr();
			expect_punct(":");
			AstNode otherwise = parse_expr();
			n.children.push_back(std::move(cond));
			n.children.push_back(std::move(then));
			n.children.push_back(std::move(otherwise));
			return n;
		}
		return cond;
	}

	AstNode parse_binary(int min_prec)
	{
		AstNode lhs = parse_unary();
		while (true) {
			int prec = binary_precedence(peek());
			if (prec < min_prec)
				return lhs;
			Token op = advance();
			AstNode rhs = parse_binary(prec + 1);
			AstNode n{NodeKind::binary_op, {}, {}};
			n.attrs["op"] = op.text;
			n.children.push_back(std::move(lhs));
			n.children.push_back(std::move(rhs));
			lhs = std::move(n);
		}
	}

	AstNode parse_unary()
	{
		if (peek().kind == TokenKind::op &&
		    (peek().text == "~" || peek().text == "!" || peek().text == "-" || peek().text == "+" ||
		     peek().text == "&" || peek().text == "|" || peek().text == "^")) {
			Token op = advance();
			AstNode n{NodeKind::unary_op, {}, {}};
			n.attrs["op"] = op.text;
			n.children.push_back(parse_unary());
			return n;
		}
		return parse_primary();
	}

	AstNode parse_primary()
	{
		if (peek().kind == TokenKind::number) {
			Token t = advance();
			return AstNode{NodeKind::literal, {{"value", t.text}}, {}};
		}
		if (accept_punct("(")) {
			AstNode inner = parse_expr();
			expect_punct(")");
			return inner;
		}
		if (is_punct("{")) {
			return parse_concat();
		}
		if (peek().kind == TokenKind::identifier) {
			Token t = advance();
			AstNode ref{NodeKind::signal_ref, {{"name", t.text}}, {}};
			if (is_punct("[")) {
				advance();
				AstNode first = parse_expr();
				if (accept_punct(":")) {
					AstNode second = parse_expr();
					expect_punct("]");
					if (first.kind != NodeKind::literal || second.kind != NodeKind::literal)
						fail("constant part-select bounds");
					AstNode range{NodeKind::literal,
					              {{"value", first.attrs.at("value") + ":" + second.attrs.at("value")}},
					              {}};
					AstNode n{NodeKind::binary_op, {{"op", "[:]"}}, {}};
					n.children.push_back(std::move(ref));
					n.children.push_back(std::move(range));
					return n;
				}
				expect_punct("]");
				AstNode n{NodeKind::binary_op, {{"op", "[]"}}, {}};
				n.children.push_back(std::move(ref));
				n.children.push_back(std::move(first));
				return n;
			}
			return ref;
		}
		fail("expression");
	}

	AstNode parse_concat()
	{
		expect_punct("{");
		AstNode first = parse_expr();
		if (is_punct("{")) {
			// replication {N{expr}}
			AstNode inner = parse_concat();
			expect_punct("}");
			AstNode n{NodeKind::binary_op, {{"op", "repl"}}, {}};
			n.children.push_back(std::move(first));
			n.children.push_back(std::move(inner));
			return n;
		}
		std::vector<AstNode> parts;
		parts.push_back(std::move(first));
		while (accept_punct(","))
			parts.push_back(parse_expr());
		expect_punct("}");
		// {a,b,c} nests as concat(a, concat(b, c))
		AstNode result = std::move(parts.back());
		for (std::size_t i = parts.size() - 1; i-- > 0;) {
			AstNode n{NodeKind::binary_op, {{"op", "concat"}}, {}};
			n.children.push_back(std::move(parts[i]));
			n.children.push_back(std::move(result));
			result = std::move(n);
		}
		return result;
	}

	// minimal expression rendering for case labels
	std::string expr_text(const AstNode &e) const
	{
		switch (e.kind) {
		case NodeKind::literal: return e.attrs.at("value");
		case NodeKind::signal_ref: return e.attrs.at("name");
		case NodeKind::unary_op: return e.attrs.at("op") + expr_text(e.children[0]);
		case NodeKind::binary_op:
			if (e.attrs.at("op") == "concat")
				return "{" + expr_text(e.children[0]) + ", " + expr_text(e.children[1]) + "}";
			return "(" + expr_text(e.children[0]) + " " + e.attrs.at("op") + " " + expr_text(e.children[1]) +
			       ")";
		default: return "(?)";
		}
	}

	// ---- post-pass: signal resolution ----

	void collect_refs(const AstNode &n, std::set<std::string> &refs) const
	{
		if (n.kind == NodeKind::signal_ref)
			refs.insert(n.attrs.at("name"));
		if (auto it = n.attrs.find("target"); it != n.attrs.end())
			refs.insert(it->second);
		for (const AstNode &c : n.children)
			collect_refs(c, refs);
	}

	void resolve_signals(DesignAst &ast)
	{
		for (const ModuleDecl &m : ast.modules) {
			std::set<std::string> known;
			for (const PortDecl &p : m.ports)
				known.insert(p.name);
			for (const NetDecl &d : m.declarations)
				known.insert(d.name);
			std::set<std::string> refs;
			for (const AstNode &item : m.items)
				collect_refs(item, refs);
			for (const std::string &r : refs)
				if (!known.count(r))
					warnings_.push_back("unresolved signal '" + r + "' in module '" + m.name + "'");
		}
	}
};

} // namespace detail

/// Parses a token stream into a design AST. Strict mode raises ParseError on
/// anything outside the supported subset; tolerant mode skips the construct
/// and records a warning.
inline DesignAst parse_source(const std::vector<Token> &tokens, ParseMode mode = ParseMode::strict)
{
	return detail::Parser(tokens, mode).run();
}

/// Tokenize-and-parse convenience for whole files.
inline DesignAst parse_text(std::string_view source, ParseMode mode = ParseMode::strict)
{
	std::vector<std::string> lex_warnings;
	std::vector<Token> toks = tokenize(source, mode == ParseMode::tolerant, &lex_warnings);
	DesignAst ast = parse_source(toks, mode);
	ast.warnings.insert(ast.warnings.begin(), lex_warnings.begin(), lex_warnings.end());
	return ast;
}

} // namespace noodle::rtl
