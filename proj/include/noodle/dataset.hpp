#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "noodle/errors.hpp"
#include "noodle/features.hpp"
#include "noodle/rng.hpp"

namespace noodle {

enum class ClassLabel { TF, TI };

inline const char *to_string(ClassLabel l) { return l == ClassLabel::TF ? "TF" : "TI"; }

inline std::optional<ClassLabel> parse_label(std::string_view s)
{
	if (s == "TF")
		return ClassLabel::TF;
	if (s == "TI")
		return ClassLabel::TI;
	return std::nullopt;
}

enum class Provenance { real, generated, imputed_partial };

inline const char *to_string(Provenance p)
{
	switch (p) {
	case Provenance::real: return "real";
	case Provenance::generated: return "generated";
	case Provenance::imputed_partial: return "imputed-partial";
	}
	return "?";
}

inline std::optional<Provenance> parse_provenance(std::string_view s)
{
	if (s == "real")
		return Provenance::real;
	if (s == "generated")
		return Provenance::generated;
	if (s == "imputed-partial")
		return Provenance::imputed_partial;
	return std::nullopt;
}

struct LabeledSample {
	std::string design_id;
	ClassLabel label = ClassLabel::TF;
	std::map<std::string, std::vector<double>> modalities;
	std::set<std::string> missing;
	Provenance provenance = Provenance::real;

	bool has(const std::string &modality) const { return modalities.count(modality) > 0; }
};

struct Dataset {
	std::vector<LabeledSample> samples;
	std::map<std::string, std::size_t> schemas; // modality id -> slot count

	std::size_t size() const { return samples.size(); }

	std::size_t class_count(ClassLabel l) const
	{
		std::size_t n = 0;
		for (const LabeledSample &s : samples)
			n += s.label == l;
		return n;
	}

	/// Feature matrix and labels for one modality; throws if any sample lacks it.
	std::pair<std::vector<std::vector<double>>, std::vector<ClassLabel>> modality_matrix(const std::string &m) const
	{
		std::vector<std::vector<double>> x;
		std::vector<ClassLabel> y;
		for (const LabeledSample &s : samples) {
			auto it = s.modalities.find(m);
			if (it == s.modalities.end())
				throw MissingModality("design '" + s.design_id + "' is missing modality '" + m + "'");
			x.push_back(it->second);
			y.push_back(s.label);
		}
		return {std::move(x), std::move(y)};
	}

	void check_invariants() const
	{
		for (const LabeledSample &s : samples) {
			for (const auto &[m, v] : s.modalities) {
				auto it = schemas.find(m);
				if (it == schemas.end() || v.size() != it->second)
					throw SchemaMismatch("design '" + s.design_id + "' has a bad vector for '" + m +
					                     "'");
				if (s.missing.count(m))
					throw SchemaMismatch("design '" + s.design_id + "' lists '" + m +
					                     "' as present and missing");
			}
		}
	}
};

struct SplitSpec {
	double train = 0.6;
	double calibration = 0.2;
	double test = 0.2;
	bool stratified = true;
	std::uint64_t seed = 0;

	void validate() const
	{
		for (double f : {train, calibration, test})
			if (!(f > 0.0 && f < 1.0))
				throw ConfigError("split fractions must lie in (0,1)");
		if (std::abs(train + calibration + test - 1.0) > 1e-9)
			throw ConfigError("split fractions must sum to 1");
	}
};

struct Split {
	Dataset train;
	Dataset calibration;
	Dataset test;
};

// ---------------------------------------------------------------------------
// CSV (tabular modality)
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string &line)
{
	std::vector<std::string> out;
	std::string cur;
	for (char c : line) {
		if (c == ',') {
			out.push_back(cur);
			cur.clear();
		} else if (c != '\r') {
			cur += c;
		}
	}
	out.push_back(cur);
	return out;
}

inline double parse_cell(const std::string &cell, int line_no)
{
	const char *begin = cell.c_str();
	char *end = nullptr;
	double v = std::strtod(begin, &end);
	if (end == begin || *end != '\0')
		throw FormatError("non-numeric cell '" + cell + "'", line_no);
	return v;
}

} // namespace detail

/// Loads a single-modality dataset from CSV. Requires a `label` column with
/// TF/TI values; `design_id` is optional; every other column must be numeric.
/// Rows labeled "?" (unlabeled designs) are skipped.
inline Dataset load_tabular_csv(const std::filesystem::path &path, const std::string &modality = "tabular")
{
	std::ifstream in(path);
	if (!in)
		throw FormatError("cannot open CSV file: " + path.string());
	std::string line;
	if (!std::getline(in, line) || line.empty())
		throw FormatError("empty CSV file (no header): " + path.string());

	std::vector<std::string> header = detail::split_csv_line(line);
	int label_col = -1, id_col = -1;
	std::vector<int> feature_cols;
	for (std::size_t i = 0; i < header.size(); ++i) {
		if (header[i] == "label")
			label_col = static_cast<int>(i);
		else if (header[i] == "design_id")
			id_col = static_cast<int>(i);
		else
			feature_cols.push_back(static_cast<int>(i));
	}
	if (label_col < 0)
		throw FormatError("CSV header has no 'label' column: " + path.string());

	Dataset d;
	d.schemas[modality] = feature_cols.size();
	int line_no = 1;
	int row = 0;
	while (std::getline(in, line)) {
		++line_no;
		if (line.empty())
			continue;
		std::vector<std::string> cells = detail::split_csv_line(line);
		if (cells.size() != header.size())
			throw FormatError("row has " + std::to_string(cells.size()) + " cells, header has " +
			                      std::to_string(header.size()),
			                  line_no);
		const std::string &label_text = cells[label_col];
		if (label_text == "?") {
			++row;
			continue; // unlabeled designs are excluded from training data
		}
		auto label = parse_label(label_text);
		if (!label)
			throw FormatError("unknown label '" + label_text + "'", line_no);
		LabeledSample s;
		s.design_id = id_col >= 0 ? cells[id_col] : "row" + std::to_string(row);
		s.label = *label;
		std::vector<double> v;
		v.reserve(feature_cols.size());
		for (int c : feature_cols)
			v.push_back(detail::parse_cell(cells[c], line_no));
		s.modalities[modality] = std::move(v);
		d.samples.push_back(std::move(s));
		++row;
	}
	return d;
}

/// Writes one modality of a dataset as CSV with a header row.
inline void write_tabular_csv(const std::filesystem::path &path, const Dataset &d, const std::string &modality = "tabular")
{
	std::ofstream out(path);
	if (!out)
		throw FormatError("cannot write CSV file: " + path.string());
	std::size_t dim = d.schemas.at(modality);
	out << "design_id,label";
	if (modality == "tabular" && dim == kTabularDim) {
		for (const std::string &n : tabular_feature_names())
			out << ',' << n;
	} else {
		for (std::size_t i = 0; i < dim; ++i)
			out << ",f" << i;
	}
	out << '\n';
	for (const LabeledSample &s : d.samples) {
		out << s.design_id << ',' << to_string(s.label);
		const std::vector<double> &v = s.modalities.at(modality);
		for (double x : v)
			out << ',' << format_double(x);
		out << '\n';
	}
}

// ---------------------------------------------------------------------------
// Graph JSON-lines
// ---------------------------------------------------------------------------

/// One JSON-lines record for a design's data-flow graph.
inline nlohmann::ordered_json graph_to_json(const std::string &design_id, const DataFlowGraph &g,
                                            const std::string &label)
{
	nlohmann::ordered_json j;
	j["design_id"] = design_id;
	j["nodes"] = nlohmann::ordered_json::array();
	for (const DfgNode &n : g.nodes)
		j["nodes"].push_back({{"id", n.id}, {"kind", to_string(n.kind)}});
	j["edges"] = nlohmann::ordered_json::array();
	for (auto [src, dst] : g.edges)
		j["edges"].push_back({g.nodes[src].id, g.nodes[dst].id});
	j["label"] = label;
	return j;
}

inline DataFlowGraph graph_from_json(const nlohmann::json &j, int line_no)
{
	DataFlowGraph g;
	std::map<std::string, int> index;
	if (!j.contains("nodes") || !j.contains("edges"))
		throw FormatError("graph record needs 'nodes' and 'edges'", line_no);
	for (const auto &jn : j.at("nodes")) {
		std::string id = jn.at("id").get<std::string>();
		std::string kind = jn.at("kind").get<std::string>();
		DfgNodeKind k;
		if (kind == "signal")
			k = DfgNodeKind::signal;
		else if (kind == "operator")
			k = DfgNodeKind::op;
		else if (kind == "constant")
			k = DfgNodeKind::constant;
		else if (kind == "mux")
			k = DfgNodeKind::mux;
		else
			throw FormatError("unknown node kind '" + kind + "'", line_no);
		if (!index.emplace(id, static_cast<int>(g.nodes.size())).second)
			throw FormatError("duplicate node id '" + id + "'", line_no);
		g.nodes.push_back({std::move(id), k});
	}
	for (const auto &je : j.at("edges")) {
		std::string src = je.at(0).get<std::string>();
		std::string dst = je.at(1).get<std::string>();
		auto is = index.find(src), id = index.find(dst);
		if (is == index.end() || id == index.end())
			throw FormatError("edge endpoint not in node list", line_no);
		if (is->second == id->second)
			throw FormatError("self-loop on node '" + src + "'", line_no);
		g.edges.push_back({is->second, id->second});
	}
	return g;
}

/// Loads the graph modality from JSON-lines, converting each graph to its
/// structural feature vector. Rows labeled "?" are skipped.
inline Dataset load_graph_jsonl(const std::filesystem::path &path, const std::string &modality = "graph")
{
	std::ifstream in(path);
	if (!in)
		throw FormatError("cannot open graph file: " + path.string());
	Dataset d;
	d.schemas[modality] = kGraphDim;
	std::string line;
	int line_no = 0;
	while (std::getline(in, line)) {
		++line_no;
		if (line.empty())
			continue;
		nlohmann::json j;
		try {
			j = nlohmann::json::parse(line);
		} catch (const nlohmann::json::exception &e) {
			throw FormatError(std::string("bad JSON: ") + e.what(), line_no);
		}
		std::string label_text = j.value("label", "?");
		if (label_text == "?")
			continue;
		auto label = parse_label(label_text);
		if (!label)
			throw FormatError("unknown label '" + label_text + "'", line_no);
		LabeledSample s;
		s.design_id = j.value("design_id", "line" + std::to_string(line_no));
		s.label = *label;
		s.modalities[modality] = extract_graph_features(graph_from_json(j, line_no)).to_vector();
		d.samples.push_back(std::move(s));
	}
	return d;
}

// ---------------------------------------------------------------------------
// Multimodal JSON-lines
// ---------------------------------------------------------------------------

inline void save_multimodal_jsonl(const std::filesystem::path &path, const Dataset &d)
{
	std::ofstream out(path);
	if (!out)
		throw FormatError("cannot write dataset file: " + path.string());
	for (const LabeledSample &s : d.samples) {
		nlohmann::ordered_json j;
		j["design_id"] = s.design_id;
		j["label"] = to_string(s.label);
		for (const char *m : {"tabular", "graph"}) {
			if (auto it = s.modalities.find(m); it != s.modalities.end())
				j[m] = it->second;
			else
				j[m] = nullptr;
		}
		j["provenance"] = to_string(s.provenance);
		out << j.dump() << '\n';
	}
}

inline Dataset load_multimodal_jsonl(const std::filesystem::path &path)
{
	std::ifstream in(path);
	if (!in)
		throw FormatError("cannot open dataset file: " + path.string());
	Dataset d;
	std::string line;
	int line_no = 0;
	std::vector<LabeledSample> samples;
	while (std::getline(in, line)) {
		++line_no;
		if (line.empty())
			continue;
		nlohmann::json j;
		try {
			j = nlohmann::json::parse(line);
		} catch (const nlohmann::json::exception &e) {
			throw FormatError(std::string("bad JSON: ") + e.what(), line_no);
		}
		LabeledSample s;
		s.design_id = j.value("design_id", "line" + std::to_string(line_no));
		auto label = parse_label(j.value("label", ""));
		if (!label)
			throw FormatError("unknown label in dataset", line_no);
		s.label = *label;
		auto prov = parse_provenance(j.value("provenance", "real"));
		if (!prov)
			throw FormatError("unknown provenance in dataset", line_no);
		s.provenance = *prov;
		for (const char *m : {"tabular", "graph"}) {
			if (j.contains(m) && !j.at(m).is_null()) {
				std::vector<double> v = j.at(m).get<std::vector<double>>();
				auto it = d.schemas.find(m);
				if (it == d.schemas.end())
					d.schemas[m] = v.size();
				else if (it->second != v.size())
					throw FormatError("inconsistent '" + std::string(m) + "' width", line_no);
				s.modalities[m] = std::move(v);
			}
		}
		samples.push_back(std::move(s));
	}
	// a null entry counts as missing only for modalities the file actually carries
	for (LabeledSample &s : samples)
		for (const auto &[m, dim] : d.schemas)
			if (!s.modalities.count(m))
				s.missing.insert(m);
	d.samples = std::move(samples);
	return d;
}

/// Label manifest: CSV with design_id,label columns. "?" entries are kept.
inline std::map<std::string, std::string> load_labels_csv(const std::filesystem::path &path)
{
	std::ifstream in(path);
	if (!in)
		throw FormatError("cannot open labels file: " + path.string());
	std::string line;
	if (!std::getline(in, line))
		throw FormatError("empty labels file: " + path.string());
	std::vector<std::string> header = detail::split_csv_line(line);
	int id_col = -1, label_col = -1;
	for (std::size_t i = 0; i < header.size(); ++i) {
		if (header[i] == "design_id")
			id_col = static_cast<int>(i);
		if (header[i] == "label")
			label_col = static_cast<int>(i);
	}
	if (id_col < 0 || label_col < 0)
		throw FormatError("labels file needs design_id and label columns");
	std::map<std::string, std::string> out;
	int line_no = 1;
	while (std::getline(in, line)) {
		++line_no;
		if (line.empty())
			continue;
		std::vector<std::string> cells = detail::split_csv_line(line);
		if (cells.size() != header.size())
			throw FormatError("bad labels row", line_no);
		const std::string &text = cells[label_col];
		if (text != "?" && !parse_label(text))
			throw FormatError("unknown label '" + text + "'", line_no);
		out[cells[id_col]] = text;
	}
	return out;
}

// ---------------------------------------------------------------------------
// Merge and split
// ---------------------------------------------------------------------------

/// Outer join of two single-modality datasets on design_id. A sample present
/// in only one input lists the other modality as missing.
inline Dataset merge_modalities(const Dataset &a, const Dataset &b)
{
	if (a.schemas.size() != 1 || b.schemas.size() != 1)
		throw ArgumentError("merge_modalities expects single-modality inputs");
	const std::string ma = a.schemas.begin()->first;
	const std::string mb = b.schemas.begin()->first;
	if (ma == mb)
		throw ArgumentError("cannot merge two datasets of modality '" + ma + "'");

	Dataset out;
	out.schemas[ma] = a.schemas.at(ma);
	out.schemas[mb] = b.schemas.at(mb);

	std::map<std::string, const LabeledSample *> b_index;
	for (const LabeledSample &s : b.samples)
		b_index[s.design_id] = &s;

	std::set<std::string> joined;
	for (const LabeledSample &s : a.samples) {
		LabeledSample m;
		m.design_id = s.design_id;
		m.label = s.label;
		m.modalities[ma] = s.modalities.at(ma);
		if (auto it = b_index.find(s.design_id); it != b_index.end()) {
			if (it->second->label != s.label)
				throw LabelConflict(s.design_id);
			m.modalities[mb] = it->second->modalities.at(mb);
			joined.insert(s.design_id);
		} else {
			m.missing.insert(mb);
		}
		out.samples.push_back(std::move(m));
	}
	for (const LabeledSample &s : b.samples) {
		if (joined.count(s.design_id))
			continue;
		LabeledSample m;
		m.design_id = s.design_id;
		m.label = s.label;
		m.modalities[mb] = s.modalities.at(mb);
		m.missing.insert(ma);
		out.samples.push_back(std::move(m));
	}
	return out;
}

/// Deterministic stratified partition into train / calibration / test.
inline Split stratified_split(const Dataset &d, const SplitSpec &spec)
{
	spec.validate();
	std::vector<std::vector<std::size_t>> groups;
	if (spec.stratified) {
		std::vector<std::size_t> tf, ti;
		for (std::size_t i = 0; i < d.samples.size(); ++i)
			(d.samples[i].label == ClassLabel::TF ? tf : ti).push_back(i);
		if (tf.size() < 3 || ti.size() < 3)
			throw InsufficientData("stratified split needs at least 3 samples per class (have " +
			                       std::to_string(tf.size()) + " TF, " + std::to_string(ti.size()) +
			                       " TI)");
		groups = {std::move(tf), std::move(ti)};
	} else {
		std::vector<std::size_t> all(d.samples.size());
		std::iota(all.begin(), all.end(), 0);
		if (all.size() < 3)
			throw InsufficientData("split needs at least 3 samples");
		groups = {std::move(all)};
	}

	Rng rng(spec.seed);
	std::vector<std::size_t> train_idx, cal_idx, test_idx;
	for (auto &g : groups) {
		rng.shuffle(g);
		std::size_t n = g.size();
		std::size_t n_train = static_cast<std::size_t>(std::floor(spec.train * static_cast<double>(n)));
		std::size_t n_cal = static_cast<std::size_t>(std::floor(spec.calibration * static_cast<double>(n)));
		for (std::size_t i = 0; i < n; ++i) {
			if (i < n_train)
				train_idx.push_back(g[i]);
			else if (i < n_train + n_cal)
				cal_idx.push_back(g[i]);
			else
				test_idx.push_back(g[i]);
		}
	}
	std::sort(train_idx.begin(), train_idx.end());
	std::sort(cal_idx.begin(), cal_idx.end());
	std::sort(test_idx.begin(), test_idx.end());

	auto take = [&](const std::vector<std::size_t> &idx) {
		Dataset out;
		out.schemas = d.schemas;
		for (std::size_t i : idx)
			out.samples.push_back(d.samples[i]);
		return out;
	};
	return {take(train_idx), take(cal_idx), take(test_idx)};
}

} // namespace noodle
