#pragma once

#include <map>
#include <string>
#include <vector>

namespace noodle::rtl {

/// Statement and expression nodes of the supported Verilog subset.
/// `block` is the begin/end statement sequence; it exists so that if/else
/// branches are always a single child node.
enum class NodeKind {
	assign,
	always_block,
	if_stmt,
	case_stmt,
	case_item,
	loop,
	ternary,
	binary_op,
	unary_op,
	instance,
	nonblocking_assign,
	blocking_assign,
	signal_ref,
	literal,
	block
};

inline const char *to_string(NodeKind k)
{
	switch (k) {
	case NodeKind::assign: return "assign";
	case NodeKind::always_block: return "always_block";
	case NodeKind::if_stmt: return "if_stmt";
	case NodeKind::case_stmt: return "case_stmt";
	case NodeKind::case_item: return "case_item";
	case NodeKind::loop: return "loop";
	case NodeKind::ternary: return "ternary";
	case NodeKind::binary_op: return "binary_op";
	case NodeKind::unary_op: return "unary_op";
	case NodeKind::instance: return "instance";
	case NodeKind::nonblocking_assign: return "nonblocking_assign";
	case NodeKind::blocking_assign: return "blocking_assign";
	case NodeKind::signal_ref: return "signal_ref";
	case NodeKind::literal: return "literal";
	case NodeKind::block: return "block";
	}
	return "?";
}

struct AstNode {
	NodeKind kind;
	std::map<std::string, std::string> attrs;
	std::vector<AstNode> children;

	bool operator==(const AstNode &) const = default;
};

enum class PortDir { input, output, inout };

inline const char *to_string(PortDir d)
{
	switch (d) {
	case PortDir::input: return "input";
	case PortDir::output: return "output";
	case PortDir::inout: return "inout";
	}
	return "?";
}

struct PortDecl {
	std::string name;
	PortDir dir = PortDir::input;
	int width = 1;
	bool is_reg = false;

	bool operator==(const PortDecl &) const = default;
};

enum class NetKind { wire, reg };

struct NetDecl {
	std::string name;
	NetKind kind = NetKind::wire;
	int width = 1;

	bool operator==(const NetDecl &) const = default;
};

struct ModuleDecl {
	std::string name;
	std::vector<PortDecl> ports;
	std::vector<NetDecl> declarations;
	std::vector<AstNode> items;

	bool operator==(const ModuleDecl &) const = default;
};

struct DesignAst {
	std::vector<ModuleDecl> modules;
	std::vector<std::string> warnings; // skipped constructs, unresolved signals

	/// Structural equality ignores warnings.
	bool same_structure(const DesignAst &other) const { return modules == other.modules; }
};

namespace detail {
inline void count_nodes(const AstNode &n, std::map<std::string, int> &counts)
{
	++counts[to_string(n.kind)];
	for (const AstNode &c : n.children)
		count_nodes(c, counts);
}
} // namespace detail

/// Exact node count per kind over all modules.
inline std::map<std::string, int> ast_stats(const DesignAst &ast)
{
	std::map<std::string, int> counts;
	for (const ModuleDecl &m : ast.modules)
		for (const AstNode &item : m.items)
			detail::count_nodes(item, counts);
	return counts;
}

inline int ast_node_total(const DesignAst &ast)
{
	int total = 0;
	for (const auto &[kind, n] : ast_stats(ast))
		total += n;
	return total;
}

} // namespace noodle::rtl
