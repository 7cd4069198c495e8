#pragma once

#include <string>

#include <json.hpp>

#include "noodle/rtl/ast.hpp"

namespace noodle::rtl {

namespace detail {

inline std::string expr_to_string(const AstNode &e)
{
	switch (e.kind) {
	case NodeKind::literal:
		return e.attrs.at("value");
	case NodeKind::signal_ref:
		return e.attrs.at("name");
	case NodeKind::unary_op:
		return e.attrs.at("op") + expr_to_string(e.children[0]);
	case NodeKind::ternary:
		return "(" + expr_to_string(e.children[0]) + " ? " + expr_to_string(e.children[1]) + " : " +
		       expr_to_string(e.children[2]) + ")";
	case NodeKind::binary_op: {
		const std::string &op = e.attrs.at("op");
		if (op == "[]")
			return expr_to_string(e.children[0]) + "[" + expr_to_string(e.children[1]) + "]";
		if (op == "[:]")
			return expr_to_string(e.children[0]) + "[" + e.children[1].attrs.at("value") + "]";
		if (op == "concat")
			return "{" + expr_to_string(e.children[0]) + ", " + expr_to_string(e.children[1]) + "}";
		if (op == "repl")
			return "{" + expr_to_string(e.children[0]) + "{" + expr_to_string(e.children[1]) + "}}";
		return "(" + expr_to_string(e.children[0]) + " " + op + " " + expr_to_string(e.children[1]) + ")";
	}
	default:
		return "/*?*/0";
	}
}

inline std::string lhs_to_string(const AstNode &stmt)
{
	std::string out = stmt.attrs.at("target");
	if (auto it = stmt.attrs.find("lhs_range"); it != stmt.attrs.end())
		out += "[" + it->second + "]";
	if (stmt.attrs.count("lhs_indexed"))
		out += "[" + expr_to_string(stmt.children[0]) + "]";
	return out;
}

inline const AstNode &rhs_of(const AstNode &stmt) { return stmt.children.back(); }

inline void print_stmt(const AstNode &s, std::string &out, int indent)
{
	std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
	switch (s.kind) {
	case NodeKind::block:
		out += pad + "begin\n";
		for (const AstNode &c : s.children)
			print_stmt(c, out, indent + 1);
		out += pad + "end\n";
		break;
	case NodeKind::if_stmt:
		out += pad + "if (" + expr_to_string(s.children[0]) + ")\n";
		print_stmt(s.children[1], out, indent + 1);
		if (s.children.size() == 3) {
			out += pad + "else\n";
			print_stmt(s.children[2], out, indent + 1);
		}
		break;
	case NodeKind::case_stmt: {
		out += pad + s.attrs.at("variant") + " (" + expr_to_string(s.children[0]) + ")\n";
		for (std::size_t i = 1; i < s.children.size(); ++i) {
			const AstNode &item = s.children[i];
			out += pad + "  " + item.attrs.at("labels") + (item.attrs.at("labels") == "default" ? "" : ":") +
			       "\n";
			if (!item.children.empty())
				print_stmt(item.children[0], out, indent + 2);
		}
		out += pad + "endcase\n";
		break;
	}
	case NodeKind::loop: {
		const AstNode &init = s.children[0];
		const AstNode &step = s.children[2];
		out += pad + "for (" + lhs_to_string(init) + " = " + expr_to_string(rhs_of(init)) + "; " +
		       expr_to_string(s.children[1]) + "; " + lhs_to_string(step) + " = " + expr_to_string(rhs_of(step)) +
		       ")\n";
		print_stmt(s.children[3], out, indent + 1);
		break;
	}
	case NodeKind::blocking_assign:
		out += pad + lhs_to_string(s) + " = " + expr_to_string(rhs_of(s)) + ";\n";
		break;
	case NodeKind::nonblocking_assign:
		out += pad + lhs_to_string(s) + " <= " + expr_to_string(rhs_of(s)) + ";\n";
		break;
	default:
		out += pad + ";\n";
		break;
	}
}

} // namespace detail

/// Renders the AST back to canonical Verilog inside the supported subset.
/// Parsing the output reproduces the AST structurally.
inline std::string pretty_print(const DesignAst &ast)
{
	std::string out;
	for (const ModuleDecl &m : ast.modules) {
		out += "module " + m.name + "(";
		for (std::size_t i = 0; i < m.ports.size(); ++i) {
			const PortDecl &p = m.ports[i];
			if (i)
				out += ", ";
			out += std::string(to_string(p.dir));
			if (p.is_reg)
				out += " reg";
			if (p.width != 1)
				out += " [" + std::to_string(p.width - 1) + ":0]";
			out += " " + p.name;
		}
		out += ");\n";
		for (const NetDecl &d : m.declarations) {
			out += d.kind == NetKind::reg ? "  reg" : "  wire";
			if (d.width != 1)
				out += " [" + std::to_string(d.width - 1) + ":0]";
			out += " " + d.name + ";\n";
		}
		for (const AstNode &item : m.items) {
			switch (item.kind) {
			case NodeKind::assign:
				out += "  assign " + detail::lhs_to_string(item) + " = " +
				       detail::expr_to_string(detail::rhs_of(item)) + ";\n";
				break;
			case NodeKind::always_block: {
				const std::string &sens = item.attrs.at("sensitivity");
				out += "  always @(" + sens + ")\n";
				detail::print_stmt(item.children[0], out, 2);
				break;
			}
			case NodeKind::instance: {
				out += "  " + item.attrs.at("module") + " " + item.attrs.at("name") + "(";
				if (auto it = item.attrs.find("ports"); it != item.attrs.end()) {
					std::string names = it->second;
					std::size_t start = 0;
					for (std::size_t i = 0; i < item.children.size(); ++i) {
						std::size_t comma = names.find(',', start);
						std::string port = names.substr(start, comma - start);
						start = comma == std::string::npos ? names.size() : comma + 1;
						if (i)
							out += ", ";
						out += "." + port + "(" + detail::expr_to_string(item.children[i]) + ")";
					}
				} else {
					for (std::size_t i = 0; i < item.children.size(); ++i) {
						if (i)
							out += ", ";
						out += detail::expr_to_string(item.children[i]);
					}
				}
				out += ");\n";
				break;
			}
			default:
				break;
			}
		}
		out += "endmodule\n";
	}
	return out;
}

namespace detail {

inline nlohmann::ordered_json node_to_json(const AstNode &n)
{
	nlohmann::ordered_json j;
	j["kind"] = to_string(n.kind);
	j["attrs"] = nlohmann::ordered_json::object();
	for (const auto &[k, v] : n.attrs)
		j["attrs"][k] = v;
	j["children"] = nlohmann::ordered_json::array();
	for (const AstNode &c : n.children)
		j["children"].push_back(node_to_json(c));
	return j;
}

} // namespace detail

/// JSON dump of the AST: one {kind, attrs, children} object per node, stable
/// key order.
inline nlohmann::ordered_json ast_to_json(const DesignAst &ast)
{
	nlohmann::ordered_json j;
	j["modules"] = nlohmann::ordered_json::array();
	for (const ModuleDecl &m : ast.modules) {
		nlohmann::ordered_json jm;
		jm["name"] = m.name;
		jm["ports"] = nlohmann::ordered_json::array();
		for (const PortDecl &p : m.ports) {
			jm["ports"].push_back({{"name", p.name},
			                       {"dir", to_string(p.dir)},
			                       {"width", p.width},
			                       {"reg", p.is_reg}});
		}
		jm["declarations"] = nlohmann::ordered_json::array();
		for (const NetDecl &d : m.declarations) {
			jm["declarations"].push_back({{"name", d.name},
			                              {"kind", d.kind == NetKind::reg ? "reg" : "wire"},
			                              {"width", d.width}});
		}
		jm["items"] = nlohmann::ordered_json::array();
		for (const AstNode &item : m.items)
			jm["items"].push_back(detail::node_to_json(item));
		j["modules"].push_back(std::move(jm));
	}
	j["warnings"] = ast.warnings;
	return j;
}

} // namespace noodle::rtl
