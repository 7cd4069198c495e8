#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "noodle/errors.hpp"
#include "noodle/rtl/ast.hpp"

namespace noodle {

// ---------------------------------------------------------------------------
// Tabular modality: code-branching feature vector
// ---------------------------------------------------------------------------

inline constexpr std::size_t kTabularDim = 12;

inline const std::array<std::string, kTabularDim> &tabular_feature_names()
{
	static const std::array<std::string, kTabularDim> names = {
	    "if_count",     "else_count",   "case_count",    "case_item_count",
	    "loop_count",   "ternary_count", "always_count", "assign_count",
	    "instance_count", "signal_count", "max_if_nesting_depth", "branch_density"};
	return names;
}

struct TabularFeatures {
	std::array<double, kTabularDim> values{};

	std::vector<double> to_vector() const { return {values.begin(), values.end()}; }
	double operator[](std::size_t i) const { return values[i]; }
};

namespace detail {

struct BranchCounts {
	int if_n = 0, else_n = 0, case_n = 0, case_item_n = 0, loop_n = 0, ternary_n = 0;
	int always_n = 0, assign_n = 0, instance_n = 0;
	int max_if_depth = 0;
};

inline void count_branching(const rtl::AstNode &n, int if_depth, BranchCounts &c)
{
	int depth = if_depth;
	switch (n.kind) {
	case rtl::NodeKind::if_stmt:
		++c.if_n;
		if (n.children.size() == 3)
			++c.else_n;
		depth = if_depth + 1;
		c.max_if_depth = std::max(c.max_if_depth, depth);
		break;
	case rtl::NodeKind::case_stmt: ++c.case_n; break;
	case rtl::NodeKind::case_item: ++c.case_item_n; break;
	case rtl::NodeKind::loop: ++c.loop_n; break;
	case rtl::NodeKind::ternary: ++c.ternary_n; break;
	case rtl::NodeKind::always_block: ++c.always_n; break;
	case rtl::NodeKind::assign: ++c.assign_n; break;
	case rtl::NodeKind::instance: ++c.instance_n; break;
	default: break;
	}
	for (const rtl::AstNode &child : n.children)
		count_branching(child, depth, c);
}

} // namespace detail

/// Code-branching counts over all modules of the unit. Deterministic; an empty
/// AST yields the all-zero vector.
inline TabularFeatures extract_branching_features(const rtl::DesignAst &ast)
{
	detail::BranchCounts c;
	int signals = 0;
	for (const rtl::ModuleDecl &m : ast.modules) {
		signals += static_cast<int>(m.ports.size() + m.declarations.size());
		for (const rtl::AstNode &item : m.items)
			detail::count_branching(item, 0, c);
	}
	TabularFeatures f;
	f.values[0] = c.if_n;
	f.values[1] = c.else_n;
	f.values[2] = c.case_n;
	f.values[3] = c.case_item_n;
	f.values[4] = c.loop_n;
	f.values[5] = c.ternary_n;
	f.values[6] = c.always_n;
	f.values[7] = c.assign_n;
	f.values[8] = c.instance_n;
	f.values[9] = signals;
	f.values[10] = c.max_if_depth;
	f.values[11] = static_cast<double>(c.if_n + c.case_n + c.ternary_n) /
	               std::max(1, c.assign_n + c.always_n);
	return f;
}

// ---------------------------------------------------------------------------
// Graph modality: data-flow graph and structural feature vector
// ---------------------------------------------------------------------------

enum class DfgNodeKind { signal, op, constant, mux };

inline const char *to_string(DfgNodeKind k)
{
	switch (k) {
	case DfgNodeKind::signal: return "signal";
	case DfgNodeKind::op: return "operator";
	case DfgNodeKind::constant: return "constant";
	case DfgNodeKind::mux: return "mux";
	}
	return "?";
}

struct DfgNode {
	std::string id;
	DfgNodeKind kind;
};

struct DataFlowGraph {
	std::vector<DfgNode> nodes;
	std::vector<std::pair<int, int>> edges; // indices into nodes, deduplicated, no self-loops
};

namespace detail {

class DfgBuilder {
      public:
	explicit DfgBuilder(std::vector<std::string> *warnings) : warnings_(warnings) {}

	DataFlowGraph build(const rtl::DesignAst &ast)
	{
		for (const rtl::ModuleDecl &m : ast.modules) {
			prefix_ = m.name + ".";
			declared_.clear();
			for (const rtl::PortDecl &p : m.ports) {
				declared_.insert(p.name);
				signal_node(p.name);
			}
			for (const rtl::NetDecl &d : m.declarations) {
				declared_.insert(d.name);
				signal_node(d.name);
			}
			for (const rtl::AstNode &item : m.items)
				build_item(item);
		}
		return std::move(g_);
	}

      private:
	DataFlowGraph g_;
	std::unordered_map<std::string, int> index_;
	std::set<std::pair<int, int>> seen_edges_;
	std::vector<std::string> *warnings_;
	std::string prefix_;
	std::set<std::string> declared_;
	int counter_ = 0;

	int add_node(const std::string &id, DfgNodeKind kind)
	{
		auto [it, inserted] = index_.emplace(id, static_cast<int>(g_.nodes.size()));
		if (inserted)
			g_.nodes.push_back({id, kind});
		return it->second;
	}

	int fresh(DfgNodeKind kind, const std::string &tag)
	{
		return add_node(prefix_ + tag + "#" + std::to_string(counter_++), kind);
	}

	int signal_node(const std::string &name)
	{
		if (declared_.count(name))
			return add_node(prefix_ + name, DfgNodeKind::signal);
		// unresolved references are flagged by the '?' id prefix
		if (warnings_ && !index_.count(prefix_ + "?" + name))
			warnings_->push_back("data-flow node for unresolved signal '" + name + "'");
		return add_node(prefix_ + "?" + name, DfgNodeKind::signal);
	}

	void edge(int src, int dst)
	{
		if (src == dst)
			return;
		if (seen_edges_.insert({src, dst}).second)
			g_.edges.push_back({src, dst});
	}

	int build_expr(const rtl::AstNode &e)
	{
		switch (e.kind) {
		case rtl::NodeKind::literal:
			return fresh(DfgNodeKind::constant, "k");
		case rtl::NodeKind::signal_ref:
			return signal_node(e.attrs.at("name"));
		case rtl::NodeKind::unary_op: {
			int op = fresh(DfgNodeKind::op, "op:" + e.attrs.at("op"));
			edge(build_expr(e.children[0]), op);
			return op;
		}
		case rtl::NodeKind::binary_op: {
			int op = fresh(DfgNodeKind::op, "op:" + e.attrs.at("op"));
			for (const rtl::AstNode &c : e.children)
				edge(build_expr(c), op);
			return op;
		}
		case rtl::NodeKind::ternary: {
			int mux = fresh(DfgNodeKind::mux, "mux");
			for (const rtl::AstNode &c : e.children)
				edge(build_expr(c), mux);
			return mux;
		}
		default:
			return fresh(DfgNodeKind::op, "op:?");
		}
	}

	int assignment_source(const rtl::AstNode &s)
	{
		int rhs = build_expr(s.children.back());
		if (s.attrs.count("lhs_indexed")) {
			// address-dependent write: value and index both feed the store
			int store = fresh(DfgNodeKind::op, "op:write");
			edge(rhs, store);
			edge(build_expr(s.children[0]), store);
			return store;
		}
		return rhs;
	}

	// Value source per assigned target within a statement subtree. Conditional
	// assignments route through one mux per (conditional, target).
	std::map<std::string, int> build_stmt(const rtl::AstNode &s)
	{
		std::map<std::string, int> sources;
		switch (s.kind) {
		case rtl::NodeKind::blocking_assign:
		case rtl::NodeKind::nonblocking_assign:
			sources[s.attrs.at("target")] = assignment_source(s);
			break;
		case rtl::NodeKind::block:
			for (const rtl::AstNode &c : s.children)
				for (auto &[t, src] : build_stmt(c))
					sources[t] = src; // last assignment wins
			break;
		case rtl::NodeKind::if_stmt: {
			int cond = build_expr(s.children[0]);
			std::map<std::string, int> then_src = build_stmt(s.children[1]);
			std::map<std::string, int> else_src =
			    s.children.size() == 3 ? build_stmt(s.children[2]) : std::map<std::string, int>{};
			std::set<std::string> targets;
			for (auto &[t, _] : then_src)
				targets.insert(t);
			for (auto &[t, _] : else_src)
				targets.insert(t);
			for (const std::string &t : targets) {
				int mux = fresh(DfgNodeKind::mux, "mux");
				edge(cond, mux);
				if (auto it = then_src.find(t); it != then_src.end())
					edge(it->second, mux);
				if (auto it = else_src.find(t); it != else_src.end())
					edge(it->second, mux);
				sources[t] = mux;
			}
			break;
		}
		case rtl::NodeKind::case_stmt: {
			int selector = build_expr(s.children[0]);
			std::vector<std::map<std::string, int>> item_sources;
			std::set<std::string> targets;
			for (std::size_t i = 1; i < s.children.size(); ++i) {
				const rtl::AstNode &item = s.children[i];
				std::map<std::string, int> m =
				    item.children.empty() ? std::map<std::string, int>{} : build_stmt(item.children[0]);
				for (auto &[t, _] : m)
					targets.insert(t);
				item_sources.push_back(std::move(m));
			}
			for (const std::string &t : targets) {
				int mux = fresh(DfgNodeKind::mux, "mux");
				edge(selector, mux);
				for (auto &m : item_sources)
					if (auto it = m.find(t); it != m.end())
						edge(it->second, mux);
				sources[t] = mux;
			}
			break;
		}
		case rtl::NodeKind::loop: {
			for (auto &[t, src] : build_stmt(s.children[0]))
				sources[t] = src;
			build_expr(s.children[1]); // iteration bound participates as a read
			for (auto &[t, src] : build_stmt(s.children[3]))
				sources[t] = src;
			for (auto &[t, src] : build_stmt(s.children[2]))
				sources[t] = src;
			break;
		}
		default:
			break;
		}
		return sources;
	}

	void build_item(const rtl::AstNode &item)
	{
		switch (item.kind) {
		case rtl::NodeKind::assign:
			edge(assignment_source(item), signal_node(item.attrs.at("target")));
			break;
		case rtl::NodeKind::always_block:
			for (auto &[target, src] : build_stmt(item.children[0]))
				edge(src, signal_node(target));
			break;
		case rtl::NodeKind::instance: {
			int inst = fresh(DfgNodeKind::op, "inst:" + item.attrs.at("module"));
			for (const rtl::AstNode &conn : item.children) {
				edge(build_expr(conn), inst);
				if (conn.kind == rtl::NodeKind::signal_ref)
					edge(inst, signal_node(conn.attrs.at("name")));
			}
			break;
		}
		default:
			break;
		}
	}
};

} // namespace detail

/// Builds the data-flow graph: one node per declared signal, one node per
/// operator / constant occurrence, mux nodes for ternaries and conditional
/// assignments. Edges follow data dependency and are deduplicated; self-loops
/// are dropped.
inline DataFlowGraph build_dataflow_graph(const rtl::DesignAst &ast, std::vector<std::string> *warnings = nullptr)
{
	return detail::DfgBuilder(warnings).build(ast);
}

inline constexpr std::size_t kGraphDim = 10;

inline const std::array<std::string, kGraphDim> &graph_feature_names()
{
	static const std::array<std::string, kGraphDim> names = {
	    "node_count",     "edge_count",     "density",   "mean_in_degree", "max_in_degree",
	    "mean_out_degree", "max_out_degree", "mux_count", "operator_count", "longest_path_len"};
	return names;
}

struct GraphFeatures {
	std::array<double, kGraphDim> values{};

	std::vector<double> to_vector() const { return {values.begin(), values.end()}; }
	double operator[](std::size_t i) const { return values[i]; }
};

namespace detail {

// Iterative Tarjan; returns component id per node, components emitted in
// reverse topological order.
inline std::vector<int> tarjan_scc(int n, const std::vector<std::vector<int>> &adj, int &n_comps)
{
	std::vector<int> comp(n, -1), low(n, 0), disc(n, -1), stack;
	std::vector<bool> on_stack(n, false);
	int time = 0;
	n_comps = 0;

	struct Frame {
		int v;
		std::size_t child;
	};
	for (int root = 0; root < n; ++root) {
		if (disc[root] != -1)
			continue;
		std::vector<Frame> call{{root, 0}};
		disc[root] = low[root] = time++;
		stack.push_back(root);
		on_stack[root] = true;
		while (!call.empty()) {
			Frame &f = call.back();
			if (f.child < adj[f.v].size()) {
				int w = adj[f.v][f.child++];
				if (disc[w] == -1) {
					disc[w] = low[w] = time++;
					stack.push_back(w);
					on_stack[w] = true;
					call.push_back({w, 0});
				} else if (on_stack[w]) {
					low[f.v] = std::min(low[f.v], disc[w]);
				}
			} else {
				if (low[f.v] == disc[f.v]) {
					while (true) {
						int w = stack.back();
						stack.pop_back();
						on_stack[w] = false;
						comp[w] = n_comps;
						if (w == f.v)
							break;
					}
					++n_comps;
				}
				int v = f.v;
				call.pop_back();
				if (!call.empty())
					low[call.back().v] = std::min(low[call.back().v], low[v]);
			}
		}
	}
	return comp;
}

} // namespace detail

/// Structural feature vector; longest_path_len counts edges on the acyclic
/// condensation (cycles from sequential feedback collapse first).
inline GraphFeatures extract_graph_features(const DataFlowGraph &g)
{
	GraphFeatures f;
	const int n = static_cast<int>(g.nodes.size());
	const int e = static_cast<int>(g.edges.size());
	if (n == 0)
		return f;

	std::vector<int> in_deg(n, 0), out_deg(n, 0);
	std::vector<std::vector<int>> adj(n);
	for (auto [src, dst] : g.edges) {
		++out_deg[src];
		++in_deg[dst];
		adj[src].push_back(dst);
	}
	int mux = 0, ops = 0;
	for (const DfgNode &node : g.nodes) {
		if (node.kind == DfgNodeKind::mux)
			++mux;
		if (node.kind == DfgNodeKind::op)
			++ops;
	}

	f.values[0] = n;
	f.values[1] = e;
	f.values[2] = std::min(1.0, static_cast<double>(e) / std::max(1, n * (n - 1)));
	f.values[3] = static_cast<double>(e) / n;
	f.values[4] = *std::max_element(in_deg.begin(), in_deg.end());
	f.values[5] = static_cast<double>(e) / n;
	f.values[6] = *std::max_element(out_deg.begin(), out_deg.end());
	f.values[7] = mux;
	f.values[8] = ops;

	int n_comps = 0;
	std::vector<int> comp = detail::tarjan_scc(n, adj, n_comps);
	// components are numbered in reverse topological order: successors first
	std::vector<int> longest(n_comps, 0);
	int best = 0;
	for (int c = 0; c < n_comps; ++c) {
		for (int v = 0; v < n; ++v) {
			if (comp[v] != c)
				continue;
			for (int w : adj[v])
				if (comp[w] != c)
					longest[c] = std::max(longest[c], longest[comp[w]] + 1);
		}
		best = std::max(best, longest[c]);
	}
	f.values[9] = best;
	return f;
}

// ---------------------------------------------------------------------------
// Z-score normalization fitted on the training split
// ---------------------------------------------------------------------------

struct Normalizer {
	std::vector<double> mean;
	std::vector<double> stddev; // population std; zero-variance slots keep 0

	std::size_t dim() const { return mean.size(); }

	std::vector<double> apply(const std::vector<double> &x) const
	{
		if (x.size() != mean.size())
			throw SchemaMismatch("normalize: vector has " + std::to_string(x.size()) +
			                     " slots, expected " + std::to_string(mean.size()));
		std::vector<double> out(x.size());
		for (std::size_t i = 0; i < x.size(); ++i)
			out[i] = stddev[i] > 0.0 ? (x[i] - mean[i]) / stddev[i] : 0.0;
		return out;
	}

	std::vector<double> invert(const std::vector<double> &z) const
	{
		if (z.size() != mean.size())
			throw SchemaMismatch("denormalize: vector has " + std::to_string(z.size()) +
			                     " slots, expected " + std::to_string(mean.size()));
		std::vector<double> out(z.size());
		for (std::size_t i = 0; i < z.size(); ++i)
			out[i] = stddev[i] > 0.0 ? z[i] * stddev[i] + mean[i] : mean[i];
		return out;
	}
};

inline Normalizer fit_normalizer(const std::vector<std::vector<double>> &train)
{
	if (train.empty())
		throw EmptyInput("normalizer requires a non-empty training set");
	const std::size_t dim = train[0].size();
	Normalizer nz;
	nz.mean.assign(dim, 0.0);
	nz.stddev.assign(dim, 0.0);
	for (const auto &row : train) {
		if (row.size() != dim)
			throw SchemaMismatch("training vectors disagree on slot count");
		for (std::size_t i = 0; i < dim; ++i)
			nz.mean[i] += row[i];
	}
	for (double &m : nz.mean)
		m /= static_cast<double>(train.size());
	for (const auto &row : train)
		for (std::size_t i = 0; i < dim; ++i)
			nz.stddev[i] += (row[i] - nz.mean[i]) * (row[i] - nz.mean[i]);
	for (double &s : nz.stddev)
		s = std::sqrt(s / static_cast<double>(train.size()));
	return nz;
}

/// Z-scores `apply_to` using statistics of `train` only; returns the
/// normalized vectors and the fitted statistics for persistence.
inline std::pair<std::vector<std::vector<double>>, Normalizer>
normalize_features(const std::vector<std::vector<double>> &train, const std::vector<std::vector<double>> &apply_to)
{
	Normalizer nz = fit_normalizer(train);
	std::vector<std::vector<double>> out;
	out.reserve(apply_to.size());
	for (const auto &row : apply_to)
		out.push_back(nz.apply(row));
	return {std::move(out), std::move(nz)};
}

/// Shortest text that round-trips a double exactly (17 significant digits).
inline std::string format_double(double x)
{
	char buf[64];
	std::snprintf(buf, sizeof(buf), "%.17g", x);
	return buf;
}

} // namespace noodle
